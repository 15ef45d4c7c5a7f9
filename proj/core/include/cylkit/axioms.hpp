#pragma once

#include "cylkit/term.hpp"

namespace cylkit {

struct AxiomResult {
    std::string name;
    bool pass = true;
    std::string witness;  // falsifying atoms / elements when pass is false
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool ok() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    std::vector<AxiomResult> failures() const {
        std::vector<AxiomResult> v;
        for (const auto& r : results)
            if (!r.pass) v.push_back(r);
        return v;
    }
    std::string summary() const;
};

// Decides the documented equational axiom list of the class on B.
//
// Every axiom is decided exactly:
//   - equations/inequalities whose sides are completely additive and normal
//     in each variable are checked on all atom tuples (sound and complete
//     for complex algebras, where every operator distributes over joins);
//   - variable-free equations are evaluated directly;
//   - the two complement-involving axiom shapes (substitutions being Boolean
//     endomorphisms, and c_i(d_ij.x) . c_i(d_ij.-x) = 0) are decided through
//     their atom-structure correspondents (the accessibility relation is the
//     graph of a total function; no atom sees two d_ij-atoms along c_i).
//
// The axiom lists themselves are recorded in docs/axioms.md.
AxiomReport check_axioms(const FiniteBAO& b, AlgebraClass cls);

// Relation-algebra axioms on atoms: associativity, identity, converse and
// the triangle (Peircean) law, all exact at atom level.
AxiomReport check_ra_axioms(const FiniteBAO& b);

}  // namespace cylkit
