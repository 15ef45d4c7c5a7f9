#pragma once

#include <vector>

#include "cylkit/atom_structure.hpp"

namespace cylkit {

// Full complex algebra Cm(S) over a finite atom structure.  Elements are
// atom sets; all operators are lifted from the accessibility relations.
class FiniteBAO {
  public:
    using Element = AtomSet;

    explicit FiniteBAO(AtomStructure s);

    const AtomStructure& structure() const { return s_; }
    uint32_t atom_count() const { return s_.atom_count(); }

    Element bot() const { return Element(s_.atom_count()); }
    Element top() const { return Element::full(s_.atom_count()); }
    Element atom(AtomId a) const { return Element::single(s_.atom_count(), a); }
    std::vector<Element> atoms() const;
    bool is_atom(const Element& x) const { return x.count() == 1; }

    Element join(const Element& x, const Element& y) const { return x | y; }
    Element meet(const Element& x, const Element& y) const { return x & y; }
    Element complement(const Element& x) const { return ~x; }

    Element diagonal(uint32_t i, uint32_t j) const;
    Element apply(UnaryOp op, const Element& x) const;

    // s_tau for arbitrary tau : n -> n, factored through the signature's
    // replacement/transposition generators.
    Element substitution(const std::vector<uint32_t>& tau, const Element& x) const;

    // relation algebra mode
    Element identity() const { return s_.identity(); }
    Element compose(const Element& x, const Element& y) const { return s_.compose(x, y); }
    Element converse(const Element& x) const { return s_.converse_set(x); }

    bool contains_op(UnaryOp op) const { return s_.has_unary(op); }

  private:
    AtomStructure s_;
};

// The relational structure on At(B); inverse of taking complex algebras.
AtomStructure atom_structure_of(const FiniteBAO& b);

// Factor tau into transposition/replacement generators g1,...,gk with
// tau = g1 o g2 o ... o gk (so s_tau = s_g1 s_g2 ... s_gk).
std::vector<UnaryOp> factor_substitution(const std::vector<uint32_t>& tau);

}  // namespace cylkit
