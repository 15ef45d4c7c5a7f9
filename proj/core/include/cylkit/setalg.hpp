#pragma once

#include "cylkit/ops.hpp"

namespace cylkit {

// Full set algebra over ^d U where U is a disjoint union of labelled blocks
// U_0, U_1, ...  Elements are subsets of tuples; the algebra is realised as
// the complex algebra over the tuple atoms with concrete coordinate actions.
class SetAlgebra {
  public:
    SetAlgebra(std::vector<uint32_t> block_sizes, uint32_t dim, AlgebraClass cls,
               uint64_t max_atoms = 2'000'000);

    const FiniteBAO& algebra() const { return bao_; }
    uint32_t dimension() const { return dim_; }
    uint32_t base_size() const { return base_; }
    uint32_t block_of(uint32_t u) const { return block_of_[u]; }
    uint32_t block_count() const { return block_count_; }

    AtomId tuple_id(const std::vector<uint32_t>& t) const;
    std::vector<uint32_t> tuple_of(AtomId a) const;

    // R = U_0 x U_1 x ... x U_{d-1} as a concrete element (needs >= d blocks)
    AtomSet product_relation() const;

  private:
    uint32_t dim_, base_, block_count_;
    std::vector<uint32_t> block_of_;
    FiniteBAO bao_;
};

struct TauResult {
    AtomSet value;
    bool zero;
    Term term;
};

// tau(x) = /\_{i<m} s_i^0 c_1...c_M x . /\_{i<j<m} -d_ij with M = min(m, d-1),
// evaluated at x; the finite-dimensional shadow of the splitting obstruction.
TauResult tau_eval(const SetAlgebra& a, const AtomSet& x, uint32_t m);

}  // namespace cylkit
