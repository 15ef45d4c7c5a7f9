#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cylkit/bao.hpp"

namespace cylkit {

// Syntax tree over a class/operator signature plus variables x_0..x_{k-1}.
class Term {
  public:
    enum class Kind {
        Var, Zero, One, Diag, IdConst,
        Not, And, Or,
        Unary,       // c_i / s_i^j / s_[i,j]
        Subst,       // s_tau
        Compose, Converse,  // relation algebra
    };

    static Term var(uint32_t k);
    static Term zero();
    static Term one();
    static Term diag(uint32_t i, uint32_t j);
    static Term id_const();
    static Term negf(Term t);
    static Term conj(Term a, Term b);
    static Term disj(Term a, Term b);
    static Term unary(UnaryOp op, Term t);
    static Term cyl(uint32_t i, Term t) { return unary({OpFamily::Cylindrifier, i, 0}, std::move(t)); }
    static Term repl(uint32_t i, uint32_t j, Term t) { return unary({OpFamily::Replacement, i, j}, std::move(t)); }
    static Term transp(uint32_t i, uint32_t j, Term t) { return unary({OpFamily::Transposition, i, j}, std::move(t)); }
    static Term subst(std::vector<uint32_t> tau, Term t);
    static Term compose(Term a, Term b);
    static Term converse(Term t);

    Kind kind() const { return kind_; }
    uint32_t var_index() const { return i_; }
    uint32_t i() const { return i_; }
    uint32_t j() const { return j_; }
    const UnaryOp& op() const { return op_; }
    const std::vector<uint32_t>& tau() const { return tau_; }
    const Term& child(size_t k = 0) const { return *kids_[k]; }
    size_t arity() const { return kids_.size(); }

    uint32_t max_var() const;  // 0 when no variables; else max index + 1
    bool uses_complement_above_var() const;
    // every variable occurs at most once (sufficient for complete additivity)
    bool linear_in_vars() const;
    // all operator indices legal for the signature
    bool compatible_with(const Signature& sig) const;

    std::string to_string() const;

  private:
    Kind kind_ = Kind::Zero;
    uint32_t i_ = 0, j_ = 0;
    UnaryOp op_{OpFamily::Cylindrifier, 0, 0};
    std::vector<uint32_t> tau_;
    std::vector<std::shared_ptr<const Term>> kids_;
};

struct Equation {
    Term lhs, rhs;
    std::string to_string() const { return lhs.to_string() + " = " + rhs.to_string(); }
};

using Assignment = std::vector<FiniteBAO::Element>;

FiniteBAO::Element eval_term(const FiniteBAO& b, const Term& t, const Assignment& h);

struct EquationVerdict {
    bool holds = true;
    bool complete = true;          // false when the assignment sweep was bounded
    std::optional<Assignment> witness;
    std::string note;
};

enum class CheckMode { All, Witness };

// Exhaustive equation check over all assignments; requires the carrier
// enumeration (2^atoms per variable) to stay within `max_assignments`.
EquationVerdict check_equation(const FiniteBAO& b, const Equation& e, CheckMode mode,
                               uint64_t max_assignments = 50'000'000);

// Exact check for equations whose two sides are completely additive and normal
// in each variable (syntactically: no complement above a variable, each
// variable occurring at most once per side): equality on all atom tuples.
bool check_equation_additive(const FiniteBAO& b, const Equation& e);
bool term_is_additive_normal(const Term& t);

}  // namespace cylkit
