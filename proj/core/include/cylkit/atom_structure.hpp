#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cylkit/atom_set.hpp"
#include "cylkit/signature.hpp"

namespace cylkit {

// Key for a unary accessibility relation: c_i, s_i^j, or s_[i,j].
struct UnaryOp {
    OpFamily family;
    uint32_t i = 0;
    uint32_t j = 0;

    auto operator<=>(const UnaryOp&) const = default;
    std::string name() const;
};

struct ValidationIssue {
    std::string code;
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

// Relational structure on the atoms of a finite BAO.  Cylindric-style
// signatures carry diagonal sets and unary accessibility rows; relation
// algebra structures carry identity, converse and the consistent triples.
class AtomStructure {
  public:
    enum class Kind { Cylindric, RelationAlgebra };

    // -- construction ------------------------------------------------------
    static AtomStructure cylindric(Signature sig, std::vector<std::string> atom_names);
    static AtomStructure relation_algebra(std::vector<std::string> atom_names);

    Kind kind() const { return kind_; }
    const Signature& signature() const { return sig_; }
    void set_signature(const Signature& s) { sig_ = s; }

    uint32_t atom_count() const { return static_cast<uint32_t>(names_.size()); }
    const std::string& atom_name(AtomId a) const { return names_[a]; }
    const std::vector<std::string>& atom_names() const { return names_; }
    std::optional<AtomId> atom_id(const std::string& name) const;

    // -- cylindric mode ----------------------------------------------------
    void set_diagonal(uint32_t i, uint32_t j, AtomSet s);
    const AtomSet& diagonal(uint32_t i, uint32_t j) const;

    // row[b] = Op({b}); the accessibility pair (a, b) reads a <= Op(b).
    void set_unary_rows(UnaryOp op, std::vector<AtomSet> rows);
    void add_unary_pair(UnaryOp op, AtomId a, AtomId b);
    bool has_unary(UnaryOp op) const;
    const std::vector<AtomSet>& unary_rows(UnaryOp op) const;
    std::vector<UnaryOp> unary_ops() const;

    AtomSet apply_unary(UnaryOp op, const AtomSet& x) const;

    // -- relation algebra mode ---------------------------------------------
    void set_identity(AtomSet ids) { identity_ = std::move(ids); }
    const AtomSet& identity() const { return identity_; }
    void set_converse(std::vector<AtomId> conv) { converse_ = std::move(conv); }
    AtomId converse(AtomId a) const { return converse_[a]; }

    void clear_triples();
    void set_consistent(AtomId a, AtomId b, AtomId c, bool v = true);
    // true iff c <= a;b
    bool consistent(AtomId a, AtomId b, AtomId c) const;
    AtomSet compose(const AtomSet& x, const AtomSet& y) const;
    AtomSet converse_set(const AtomSet& x) const;
    uint64_t consistent_triple_count() const;

    // Builds the consistent-triple table as the complement of `forbidden`
    // closed under the Peircean transforms; entries of `forbidden` are
    // closed likewise before complementing.
    void set_consistent_from_forbidden(const std::vector<std::array<AtomId, 3>>& forbidden);
    bool triples_peircean_closed() const;

    ValidationReport validate() const;

    bool operator==(const AtomStructure& o) const;

  private:
    AtomStructure() = default;
    size_t triple_index(AtomId a, AtomId b, AtomId c) const {
        size_t n = names_.size();
        return (static_cast<size_t>(a) * n + b) * n + c;
    }

    Kind kind_ = Kind::Cylindric;
    Signature sig_;
    std::vector<std::string> names_;

    std::map<std::pair<uint32_t, uint32_t>, AtomSet> diagonals_;
    std::map<UnaryOp, std::vector<AtomSet>> unary_;

    AtomSet identity_;
    std::vector<AtomId> converse_;
    std::vector<uint64_t> triples_;  // bit per (a,b,c)
};

// Isomorphism search between small atom structures (same kind/signature);
// returns the atom bijection when found.
std::optional<std::vector<AtomId>> find_atom_structure_isomorphism(const AtomStructure& s,
                                                                   const AtomStructure& t);

// Structure with atom a renamed to position perm[a]; relations carried along.
AtomStructure permute_atoms(const AtomStructure& s, const std::vector<AtomId>& perm);
// Same structure with atoms reindexed into name-sorted order.
AtomStructure sorted_by_name(const AtomStructure& s);

}  // namespace cylkit
