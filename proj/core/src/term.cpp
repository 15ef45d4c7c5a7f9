#include "cylkit/term.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace cylkit {

namespace {
const UnaryOp kNoOp{OpFamily::Cylindrifier, 0, 0};
}

Term Term::var(uint32_t k) {
    Term t;
    t.kind_ = Kind::Var;
    t.i_ = k;
    return t;
}
Term Term::zero() { return Term{}; }
Term Term::one() {
    Term t;
    t.kind_ = Kind::One;
    return t;
}
Term Term::diag(uint32_t i, uint32_t j) {
    Term t;
    t.kind_ = Kind::Diag;
    t.i_ = i;
    t.j_ = j;
    return t;
}
Term Term::id_const() {
    Term t;
    t.kind_ = Kind::IdConst;
    return t;
}
Term Term::negf(Term c) {
    Term t;
    t.kind_ = Kind::Not;
    t.kids_.push_back(std::make_shared<Term>(std::move(c)));
    return t;
}
Term Term::conj(Term a, Term b) {
    Term t;
    t.kind_ = Kind::And;
    t.kids_.push_back(std::make_shared<Term>(std::move(a)));
    t.kids_.push_back(std::make_shared<Term>(std::move(b)));
    return t;
}
Term Term::disj(Term a, Term b) {
    Term t;
    t.kind_ = Kind::Or;
    t.kids_.push_back(std::make_shared<Term>(std::move(a)));
    t.kids_.push_back(std::make_shared<Term>(std::move(b)));
    return t;
}
Term Term::unary(UnaryOp op, Term c) {
    Term t;
    t.kind_ = Kind::Unary;
    t.op_ = op;
    t.kids_.push_back(std::make_shared<Term>(std::move(c)));
    return t;
}
Term Term::subst(std::vector<uint32_t> tau, Term c) {
    Term t;
    t.kind_ = Kind::Subst;
    t.tau_ = std::move(tau);
    t.kids_.push_back(std::make_shared<Term>(std::move(c)));
    return t;
}
Term Term::compose(Term a, Term b) {
    Term t;
    t.kind_ = Kind::Compose;
    t.kids_.push_back(std::make_shared<Term>(std::move(a)));
    t.kids_.push_back(std::make_shared<Term>(std::move(b)));
    return t;
}
Term Term::converse(Term c) {
    Term t;
    t.kind_ = Kind::Converse;
    t.kids_.push_back(std::make_shared<Term>(std::move(c)));
    return t;
}

uint32_t Term::max_var() const {
    uint32_t m = 0;
    if (kind_ == Kind::Var) m = i_ + 1;
    for (const auto& k : kids_) m = std::max(m, k->max_var());
    return m;
}

bool Term::uses_complement_above_var() const {
    std::function<bool(const Term&, bool)> walk = [&](const Term& t, bool under_not) -> bool {
        if (t.kind() == Kind::Var) return under_not;
        bool un = under_not || t.kind() == Kind::Not;
        for (const auto& k : t.kids_)
            if (walk(*k, un)) return true;
        return false;
    };
    return walk(*this, false);
}

bool Term::linear_in_vars() const {
    std::map<uint32_t, int> count;
    std::function<void(const Term&)> walk = [&](const Term& t) {
        if (t.kind() == Kind::Var) count[t.i_]++;
        for (const auto& k : t.kids_) walk(*k);
    };
    walk(*this);
    for (auto& [_, c] : count)
        if (c > 1) return false;
    return true;
}

bool Term::compatible_with(const Signature& sig) const {
    switch (kind_) {
        case Kind::Diag:
            if (!sig.diagonals || i_ >= sig.dimension || j_ >= sig.dimension) return false;
            break;
        case Kind::Unary:
            if (op_.i >= sig.dimension || op_.j >= sig.dimension) return false;
            if (op_.family == OpFamily::Cylindrifier && !sig.cylindrifiers) return false;
            if (op_.family == OpFamily::Replacement && !(sig.replacements || sig.full_substitutions) &&
                !(sig.diagonals && sig.cylindrifiers))
                return false;
            if (op_.family == OpFamily::Transposition && !(sig.transpositions || sig.full_substitutions))
                return false;
            break;
        case Kind::Subst:
            if (!sig.full_substitutions && !(sig.replacements && sig.transpositions)) return false;
            if (tau_.size() != sig.dimension) return false;
            break;
        default: break;
    }
    for (const auto& k : kids_)
        if (!k->compatible_with(sig)) return false;
    return true;
}

std::string Term::to_string() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Var: os << "x" << i_; break;
        case Kind::Zero: os << "0"; break;
        case Kind::One: os << "1"; break;
        case Kind::Diag: os << "d_" << i_ << j_; break;
        case Kind::IdConst: os << "Id"; break;
        case Kind::Not: os << "-" << child().to_string(); break;
        case Kind::And: os << "(" << child(0).to_string() << " . " << child(1).to_string() << ")"; break;
        case Kind::Or: os << "(" << child(0).to_string() << " + " << child(1).to_string() << ")"; break;
        case Kind::Unary: os << op_.name() << " " << child().to_string(); break;
        case Kind::Subst: {
            os << "s_[";
            for (size_t k = 0; k < tau_.size(); ++k) os << (k ? "," : "") << tau_[k];
            os << "] " << child().to_string();
            break;
        }
        case Kind::Compose: os << "(" << child(0).to_string() << " ; " << child(1).to_string() << ")"; break;
        case Kind::Converse: os << child().to_string() << "~"; break;
    }
    return os.str();
}

FiniteBAO::Element eval_term(const FiniteBAO& b, const Term& t, const Assignment& h) {
    switch (t.kind()) {
        case Term::Kind::Var:
            if (t.var_index() >= h.size())
                throw InputError("unassigned variable x" + std::to_string(t.var_index()));
            return h[t.var_index()];
        case Term::Kind::Zero: return b.bot();
        case Term::Kind::One: return b.top();
        case Term::Kind::Diag: return b.diagonal(t.i(), t.j());
        case Term::Kind::IdConst: return b.identity();
        case Term::Kind::Not: return b.complement(eval_term(b, t.child(), h));
        case Term::Kind::And: return b.meet(eval_term(b, t.child(0), h), eval_term(b, t.child(1), h));
        case Term::Kind::Or: return b.join(eval_term(b, t.child(0), h), eval_term(b, t.child(1), h));
        case Term::Kind::Unary: return b.apply(t.op(), eval_term(b, t.child(), h));
        case Term::Kind::Subst: return b.substitution(t.tau(), eval_term(b, t.child(), h));
        case Term::Kind::Compose: return b.compose(eval_term(b, t.child(0), h), eval_term(b, t.child(1), h));
        case Term::Kind::Converse: return b.converse(eval_term(b, t.child(), h));
    }
    throw InputError("bad term");
}

EquationVerdict check_equation(const FiniteBAO& b, const Equation& e, CheckMode mode,
                               uint64_t max_assignments) {
    uint32_t vars = std::max(e.lhs.max_var(), e.rhs.max_var());
    uint32_t n = b.atom_count();
    EquationVerdict v;
    if (vars == 0) {
        v.holds = eval_term(b, e.lhs, {}) == eval_term(b, e.rhs, {});
        return v;
    }
    if (n > 62) throw BudgetError("check_equation: carrier 2^" + std::to_string(n) + " too large");
    long double total = std::pow(2.0L, (long double)(n * vars));
    if (total > (long double)max_assignments)
        throw BudgetError("check_equation: assignment sweep over budget");

    Assignment h(vars, b.bot());
    std::function<bool(uint32_t)> rec = [&](uint32_t k) -> bool {
        if (k == vars) {
            if (eval_term(b, e.lhs, h) != eval_term(b, e.rhs, h)) {
                v.holds = false;
                v.witness = h;
                return mode == CheckMode::Witness;
            }
            return false;
        }
        uint64_t lim = uint64_t{1} << n;
        for (uint64_t bits = 0; bits < lim; ++bits) {
            AtomSet x(n);
            for (uint32_t a = 0; a < n; ++a)
                if ((bits >> a) & 1) x.insert(a);
            h[k] = x;
            if (rec(k + 1)) return true;
        }
        return false;
    };
    rec(0);
    return v;
}

bool term_is_additive_normal(const Term& t) {
    return !t.uses_complement_above_var() && t.linear_in_vars();
}

bool check_equation_additive(const FiniteBAO& b, const Equation& e) {
    if (!term_is_additive_normal(e.lhs) || !term_is_additive_normal(e.rhs))
        throw InputError("check_equation_additive: sides not additive-normal");
    uint32_t vars = std::max(e.lhs.max_var(), e.rhs.max_var());
    uint32_t n = b.atom_count();
    Assignment h(vars, b.bot());
    std::function<bool(uint32_t)> rec = [&](uint32_t k) -> bool {
        if (k == vars) return eval_term(b, e.lhs, h) == eval_term(b, e.rhs, h);
        for (AtomId a = 0; a < n; ++a) {
            h[k] = b.atom(a);
            if (!rec(k + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

}  // namespace cylkit
