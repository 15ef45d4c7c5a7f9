#pragma once

#include "cylkit/bao.hpp"

namespace cylkit {

// Symmetric m x m basic matrix over a relation-algebra atom structure with a
// single identity atom: upper-triangle entries, diagonal implicitly Id.
using BasicMatrix = std::vector<AtomId>;

inline uint32_t matrix_entry_index(uint32_t x, uint32_t y) {
    if (x > y) std::swap(x, y);
    return y * (y - 1) / 2 + x;
}

struct MatrixSet {
    uint32_t m = 0;
    std::vector<BasicMatrix> mats;  // sorted

    bool contains(const BasicMatrix& f) const;
    size_t index_of(const BasicMatrix& f) const;  // throws if absent
};

AtomId matrix_entry(const AtomStructure& ra, const BasicMatrix& f, uint32_t x, uint32_t y);

// Mat_m(At R): exhaustive backtracking enumeration with triangle pruning.
MatrixSet enumerate_basic_matrices(const AtomStructure& ra, uint32_t m,
                                   uint64_t max_matrices = 2'000'000);

struct BasisReport {
    bool triangle_condition = true;    // every a <= b;c realized at (0,1),(0,2),(2,1)
    bool amalgamation = true;          // f =_xy g admits h with f =_x h =_y g
    std::string witness;
    bool ok() const { return triangle_condition && amalgamation; }
};

// Literal reading of the two basis clauses; `all_triangles` strengthens (i)
// to every position triple (x,y,z).
BasisReport is_cylindric_basis(const AtomStructure& ra, const MatrixSet& m,
                               bool all_triangles = false);

// QEA_m atom structure on a matrix set: c_x via =_x, d_xy via f(x,y) = Id,
// transpositions via f tau, replacements via the diagonal route.
AtomStructure algebra_from_basis(const AtomStructure& ra, const MatrixSet& m,
                                 uint64_t max_atoms = 20'000);

BasicMatrix matrix_apply_transposition(const AtomStructure& ra, const BasicMatrix& f, uint32_t m,
                                       uint32_t i, uint32_t j);

}  // namespace cylkit
