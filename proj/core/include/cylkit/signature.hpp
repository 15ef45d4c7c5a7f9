#pragma once

#include <array>
#include <string>

#include "cylkit/common.hpp"

namespace cylkit {

enum class OpFamily : uint8_t {
    Cylindrifier,      // c_i
    Diagonal,          // d_ij
    Replacement,       // s_i^j
    Transposition,     // s_[i,j]
    FullSubstitution,  // s_tau, tau : n -> n
};

enum class AlgebraClass : uint8_t { Df, Sc, CA, PA, PEA, QA, QEA };

std::string to_string(AlgebraClass c);
AlgebraClass algebra_class_from_string(const std::string& s);

// One row of the class/operator table, or a sub-signature of a row.
// dimension n >= 2; operator families carry index ranges i,j < n.
struct Signature {
    uint32_t dimension = 0;
    bool cylindrifiers = false;
    bool diagonals = false;
    bool replacements = false;
    bool transpositions = false;
    bool full_substitutions = false;

    static Signature of(AlgebraClass c, uint32_t n) {
        Signature s;
        s.dimension = n;
        s.cylindrifiers = true;
        switch (c) {
            case AlgebraClass::Df: break;
            case AlgebraClass::Sc: s.replacements = true; break;
            case AlgebraClass::CA: s.diagonals = true; break;
            case AlgebraClass::PA: s.full_substitutions = true; break;
            case AlgebraClass::PEA:
                s.diagonals = true;
                s.full_substitutions = true;
                break;
            case AlgebraClass::QA:
                s.replacements = true;
                s.transpositions = true;
                break;
            case AlgebraClass::QEA:
                s.diagonals = true;
                s.replacements = true;
                s.transpositions = true;
                break;
        }
        return s;
    }

    bool sub_signature_of(const Signature& o) const {
        return dimension == o.dimension &&
               (!cylindrifiers || o.cylindrifiers) &&
               (!diagonals || o.diagonals) &&
               (!replacements || o.replacements || o.full_substitutions) &&
               (!transpositions || o.transpositions || o.full_substitutions) &&
               (!full_substitutions || o.full_substitutions);
    }

    bool operator==(const Signature&) const = default;
};

}  // namespace cylkit
