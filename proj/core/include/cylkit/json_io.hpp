#pragma once

#include <string>

#include "cylkit/atom_structure.hpp"
#include "cylkit/atom_set.hpp"

namespace cylkit {

// Canonical JSON atom-structure format: atoms sorted by name, tuple lists
// lexicographic.  Relation keys are "c_i", "s_i^j", "s_[i,j]", "d_ij".
std::string atom_structure_to_json(const AtomStructure& s);
AtomStructure atom_structure_from_json(const std::string& text);

void save_atom_structure(const AtomStructure& s, const std::string& path);
AtomStructure load_atom_structure(const std::string& path);

std::string element_to_json(const AtomStructure& s, const AtomSet& x);

// plain structures render atoms as nodes with c_i edges; coloured graphs
// have their own DOT export in the rainbow module
std::string atom_structure_to_dot(const AtomStructure& s);

}  // namespace cylkit
