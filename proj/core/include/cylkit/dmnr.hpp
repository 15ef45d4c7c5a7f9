#pragma once

#include "cylkit/bases.hpp"

namespace cylkit {

struct DmnrSpec {
    uint32_t m = 3, n = 3, r = 1;  // 3 <= m <= n, r >= 0
};

// Bin(n,r): Id plus a^k(i,j) for i < n-1, j < r, k < psi(n,r), with the two
// displayed forbidden-triple families.
AtomStructure bin_structure(uint32_t n, uint32_t r, uint64_t max_atoms = 200'000);

// F(m,n,r) = Mat_m over Bin(n,r)
MatrixSet dmnr_matrices(const DmnrSpec& spec, uint64_t max_matrices = 2'000'000);

struct Dmnr {
    AtomStructure bin;       // the underlying relation algebra structure
    MatrixSet matrices;      // F(m,n,r)
    FiniteBAO algebra;       // D(m,n,r) = Cm Mat_m(At Bin)
};

Dmnr dmnr(const DmnrSpec& spec, uint64_t max_atoms = 20'000);

struct NrIsoReport {
    bool fibers_nonempty = true;       // restriction is onto F(m,n,r)
    bool fibers_are_orbits = true;     // Nr_m atoms are exactly the fibers
    bool diagonals_ok = true;
    bool cylindrifiers_ok = true;
    bool transpositions_ok = true;
    bool subset_checks_ok = true;      // random fiber-union elements, seeded
    uint64_t big_matrix_count = 0;
    std::string witness;
    bool ok() const {
        return fibers_nonempty && fibers_are_orbits && diagonals_ok && cylindrifiers_ok &&
               transpositions_ok && subset_checks_ok;
    }
};

// Verifies X -> {f in F(m',n,r) : f restricted to m x m in X} is an
// isomorphism from D(m,n,r) onto Nr_m D(m',n,r), working at matrix level.
NrIsoReport check_nr_restriction_iso(uint32_t m, uint32_t m_prime, uint32_t n, uint32_t r,
                                     uint64_t max_matrices = 2'000'000, uint64_t seed = 1,
                                     bool deliberately_wrong_restriction = false);

}  // namespace cylkit
