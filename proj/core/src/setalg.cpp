#include "cylkit/setalg.hpp"

#include <numeric>

namespace cylkit {

namespace {

AtomStructure build_structure(const std::vector<uint32_t>& block_sizes, uint32_t dim,
                              AlgebraClass cls, uint64_t max_atoms,
                              std::vector<uint32_t>& block_of, uint32_t& base) {
    base = std::accumulate(block_sizes.begin(), block_sizes.end(), 0u);
    if (base == 0) throw InputError("full_set_algebra: empty base");
    block_of.clear();
    for (uint32_t b = 0; b < block_sizes.size(); ++b)
        for (uint32_t k = 0; k < block_sizes[b]; ++k) block_of.push_back(b);

    uint64_t count = 1;
    for (uint32_t i = 0; i < dim; ++i) {
        count *= base;
        check_budget(count, max_atoms, "full_set_algebra atom count");
    }
    uint32_t n = static_cast<uint32_t>(count);

    auto tuple_of = [&](AtomId a) {
        std::vector<uint32_t> t(dim);
        for (uint32_t i = 0; i < dim; ++i) {
            t[dim - 1 - i] = a % base;
            a /= base;
        }
        return t;
    };
    auto id_of = [&](const std::vector<uint32_t>& t) {
        AtomId a = 0;
        for (uint32_t i = 0; i < dim; ++i) a = a * base + t[i];
        return a;
    };

    std::vector<std::string> names(n);
    for (AtomId a = 0; a < n; ++a) {
        auto t = tuple_of(a);
        std::string s = "(";
        for (uint32_t i = 0; i < dim; ++i) s += (i ? "," : "") + std::to_string(t[i]);
        names[a] = s + ")";
    }

    Signature sig = Signature::of(cls, dim);
    AtomStructure s = AtomStructure::cylindric(sig, names);

    if (sig.diagonals)
        for (uint32_t i = 0; i < dim; ++i)
            for (uint32_t j = i + 1; j < dim; ++j) {
                AtomSet d(n);
                for (AtomId a = 0; a < n; ++a) {
                    auto t = tuple_of(a);
                    if (t[i] == t[j]) d.insert(a);
                }
                s.set_diagonal(i, j, d);
            }

    for (uint32_t i = 0; i < dim; ++i) {
        std::vector<AtomSet> rows(n, AtomSet(n));
        for (AtomId a = 0; a < n; ++a) {
            auto t = tuple_of(a);
            for (uint32_t v = 0; v < base; ++v) {
                auto u = t;
                u[i] = v;
                rows[a].insert(id_of(u));  // c_i({a}) = all tuples agreeing off i
            }
        }
        s.set_unary_rows({OpFamily::Cylindrifier, i, 0}, std::move(rows));
    }

    if (sig.replacements || sig.full_substitutions)
        for (uint32_t i = 0; i < dim; ++i)
            for (uint32_t j = 0; j < dim; ++j) {
                if (i == j) continue;
                // s_i^j({b}) = {a : a o [i|j] = b}
                std::vector<AtomSet> rows(n, AtomSet(n));
                for (AtomId a = 0; a < n; ++a) {
                    auto t = tuple_of(a);
                    auto u = t;
                    u[i] = t[j];
                    rows[id_of(u)].insert(a);
                }
                s.set_unary_rows({OpFamily::Replacement, i, j}, std::move(rows));
            }
    if (sig.transpositions || sig.full_substitutions)
        for (uint32_t i = 0; i < dim; ++i)
            for (uint32_t j = i + 1; j < dim; ++j) {
                std::vector<AtomSet> rows(n, AtomSet(n));
                for (AtomId a = 0; a < n; ++a) {
                    auto t = tuple_of(a);
                    std::swap(t[i], t[j]);
                    rows[id_of(t)].insert(a);
                }
                s.set_unary_rows({OpFamily::Transposition, i, j}, std::move(rows));
            }
    return s;
}

}  // namespace

SetAlgebra::SetAlgebra(std::vector<uint32_t> block_sizes, uint32_t dim, AlgebraClass cls,
                       uint64_t max_atoms)
    : dim_(dim),
      base_(0),
      block_count_(static_cast<uint32_t>(block_sizes.size())),
      bao_(build_structure(block_sizes, dim, cls, max_atoms, block_of_, base_)) {}

AtomId SetAlgebra::tuple_id(const std::vector<uint32_t>& t) const {
    if (t.size() != dim_) throw InputError("tuple arity mismatch");
    AtomId a = 0;
    for (uint32_t i = 0; i < dim_; ++i) {
        if (t[i] >= base_) throw InputError("tuple entry out of base");
        a = a * base_ + t[i];
    }
    return a;
}

std::vector<uint32_t> SetAlgebra::tuple_of(AtomId a) const {
    std::vector<uint32_t> t(dim_);
    for (uint32_t i = 0; i < dim_; ++i) {
        t[dim_ - 1 - i] = a % base_;
        a /= base_;
    }
    return t;
}

AtomSet SetAlgebra::product_relation() const {
    if (block_count_ < dim_) throw InputError("product_relation: fewer blocks than dimensions");
    AtomSet r(bao_.atom_count());
    for (AtomId a = 0; a < bao_.atom_count(); ++a) {
        auto t = tuple_of(a);
        bool in = true;
        for (uint32_t i = 0; i < dim_ && in; ++i) in = block_of_[t[i]] == i;
        if (in) r.insert(a);
    }
    return r;
}

TauResult tau_eval(const SetAlgebra& a, const AtomSet& x, uint32_t m) {
    uint32_t d = a.dimension();
    if (m > d) throw InputError("tau_eval: m exceeds dimension");
    uint32_t M = std::min(m, d - 1);
    Term inner = Term::var(0);
    for (uint32_t i = M; i >= 1; --i) inner = Term::cyl(i, inner);
    Term acc = Term::one();
    for (uint32_t i = 0; i < m; ++i)
        acc = Term::conj(acc, i == 0 ? inner : Term::repl(0, i, inner));
    for (uint32_t i = 0; i < m; ++i)
        for (uint32_t j = i + 1; j < m; ++j)
            acc = Term::conj(acc, Term::negf(Term::diag(i, j)));
    AtomSet v = eval_term(a.algebra(), acc, {x});
    return TauResult{v, v.empty(), acc};
}

}  // namespace cylkit
