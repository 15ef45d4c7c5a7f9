#pragma once

#include <optional>

#include "cylkit/term.hpp"

namespace cylkit {

// A subalgebra of a finite BAO is determined by its atom partition: the
// universe is exactly the set of unions of blocks.  The partition is the
// coarsest one refined by the generators, the constants and every operator
// image of a block; the universe itself (2^blocks elements) stays implicit.
struct Subalgebra {
    std::vector<AtomSet> blocks;    // atom partition, sorted
    bool contains(const AtomSet& x) const;  // x is a union of blocks
    const std::vector<AtomSet>& atoms() const { return blocks; }
    uint32_t log2_size() const { return static_cast<uint32_t>(blocks.size()); }
};

// Least subuniverse of B containing `gens`, closed under all operations.
Subalgebra generate_subalgebra(const FiniteBAO& b, const std::vector<AtomSet>& gens,
                               uint64_t max_blocks = 100'000);

struct NeatReduct {
    FiniteBAO algebra;                  // dimension n algebra on the orbit atoms
    std::vector<AtomSet> orbit_of;      // orbit atom -> atom set of the original
};

// Universe {x : c_i x = x for all n <= i < m}, operations with indices < n.
NeatReduct neat_reduct(const FiniteBAO& b, uint32_t n);

FiniteBAO signature_reduct(const FiniteBAO& b, const Signature& target);

struct RelativizeResult {
    FiniteBAO algebra;
    bool rectangular;                   // c_i x . c_j x = x for all i < j
    std::vector<AtomId> atom_of;        // relativized atom -> original atom
};

bool is_rectangular(const FiniteBAO& b, const AtomSet& x);
RelativizeResult relativize(const FiniteBAO& b, const AtomSet& x);

struct Embedding {
    std::vector<AtomSet> image;  // per atom of A, an element of B
    std::string transcript;
};

// Backtracking search for an injective complete homomorphism A -> B given by
// an atom-to-element map extended additively (images partition the top of B).
std::optional<Embedding> find_embedding(const FiniteBAO& a, const FiniteBAO& b,
                                        uint64_t max_nodes = 5'000'000);

// explicit isomorphism check At(Cm(S)) = S with witness
bool atom_structure_roundtrip_ok(const AtomStructure& s);

}  // namespace cylkit
