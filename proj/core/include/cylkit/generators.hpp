#pragma once

#include "cylkit/atom_structure.hpp"

namespace cylkit {

// kappa(x,0) = 0,  kappa(x,y+1) = 1 + x*kappa(x,y); overflow-checked.
uint64_t kappa(uint64_t x, uint64_t y);
// psi(n,r) = kappa((n-1)r, (n-1)r) + 1
uint64_t psi(uint64_t n, uint64_t r);

// Maddux algebra E_k(2,3): k self-converse non-identity atoms; a triple of
// non-identity atoms is consistent iff it is not monochromatic.
AtomStructure maddux(uint32_t k);

// Symmetric algebra with atoms Id, r(i), y(i), b(i) for i < trunc and
// forbidden monochromatic triples (x(i),x(i),x(j)) for i <= j.  When
// `symmetric_indices` is set the side condition i <= j is dropped; both
// readings of the table are selectable, the literal one is the default.
AtomStructure example_ra(uint32_t trunc, bool symmetric_indices = false);

}  // namespace cylkit
