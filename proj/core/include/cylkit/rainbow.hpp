#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cylkit/atom_structure.hpp"

namespace cylkit {

// Edge colours of a rainbow signature.  Pair-type reds are anchored to the
// node order of the edge they label: the label of an edge {u,v} with u < v
// carries (index at u, index at v).  This keeps the composable-triple rule
// and the order-preserving rule well defined on undirected edges.
struct RainbowColour {
    enum class Kind : uint8_t { GreenTint, GreenChain, White, RedClique, RedPair };
    Kind kind;
    int32_t a = 0;  // tint / chain index / white index / clique index / value at lower node
    int32_t b = 0;  // value at upper node (RedPair)
    int32_t sup = 0;  // copy superscript for split reds

    bool green() const { return kind == Kind::GreenTint || kind == Kind::GreenChain; }
    bool red() const { return kind == Kind::RedClique || kind == Kind::RedPair; }
    std::string name() const;
    auto operator<=>(const RainbowColour&) const = default;
};

enum class RedRegime : uint8_t { Clique, Pair, ZN };

struct RainbowSpec {
    uint32_t dimension = 3;              // n >= 3
    std::vector<int32_t> green_tints;    // tints of g_0^i
    RedRegime regime = RedRegime::Clique;
    uint32_t clique_reds = 0;            // r_i, i < clique_reds
    std::vector<int32_t> red_values;     // pair/ZN index universe (sorted)
    uint32_t red_copies = 1;             // superscripts t < red_copies
    std::vector<int32_t> yellow_universe;  // defaults to green_tints when empty

    static RainbowSpec clique(uint32_t n, std::vector<int32_t> tints, uint32_t reds) {
        RainbowSpec s;
        s.dimension = n;
        s.green_tints = std::move(tints);
        s.regime = RedRegime::Clique;
        s.clique_reds = reds;
        return s;
    }
    // Theorem-style palette A_{n+1,n}: tints 0..n, pair reds over 0..n-1
    static RainbowSpec theorem_can(uint32_t n);
    static RainbowSpec zn(uint32_t n, int32_t z_lo, int32_t z_hi, int32_t n_lo, int32_t n_hi);
};

// Complete coloured graph on up to kMaxNodes nodes: edge colours plus yellow
// shades on (n-1)-element node subsets whose internal edges are non-green.
class ColouredGraph {
  public:
    static constexpr uint32_t kMaxNodes = 8;

    ColouredGraph() = default;
    explicit ColouredGraph(uint32_t nodes);

    uint32_t node_count() const { return nodes_; }

    static uint32_t edge_index(uint32_t u, uint32_t v);
    bool has_edge(uint32_t u, uint32_t v) const;
    const RainbowColour& edge(uint32_t u, uint32_t v) const;
    // label anchored at (min(u,v), max(u,v)); pair reds given as (at_u, at_v)
    void set_edge(uint32_t u, uint32_t v, RainbowColour c);
    void clear_edge(uint32_t u, uint32_t v);

    // yellow labels: base given as a node bitmask of size n-1
    std::optional<uint32_t> yellow(uint8_t base_mask) const;
    void set_yellow(uint8_t base_mask, uint32_t tint_mask);
    void clear_yellow(uint8_t base_mask);
    const std::vector<std::pair<uint8_t, uint32_t>>& yellows() const { return yellow_; }

    bool operator==(const ColouredGraph&) const = default;
    bool operator<(const ColouredGraph& o) const;
    size_t hash() const;

    std::string to_string() const;

  private:
    uint32_t nodes_ = 0;
    std::vector<std::optional<RainbowColour>> edge_;
    std::vector<std::pair<uint8_t, uint32_t>> yellow_;  // sorted by mask
};

// An atom of the rainbow QEA_n structure: a surjection n -> graph nodes with
// nodes numbered in first-occurrence order, plus the coloured graph.
struct RainbowAtom {
    std::vector<uint8_t> kernel;  // coordinate -> node
    ColouredGraph graph;

    bool operator==(const RainbowAtom&) const = default;
    bool operator<(const RainbowAtom& o) const;
    size_t hash() const;
    std::string name() const;
};

class RainbowStructure {
  public:
    explicit RainbowStructure(RainbowSpec spec);

    const RainbowSpec& spec() const { return spec_; }
    uint32_t dimension() const { return spec_.dimension; }
    uint32_t chain_green_count() const { return spec_.dimension >= 3 ? spec_.dimension - 2 : 0; }
    uint32_t white_count() const { return spec_.dimension - 1; }
    const std::vector<int32_t>& yellow_universe() const { return yellow_universe_; }
    uint32_t yellow_tint_index(int32_t tint) const;
    uint32_t full_yellow_mask() const { return (uint32_t{1} << yellow_universe_.size()) - 1; }

    // all edge colours of the palette (pair reds in both anchorings)
    std::vector<RainbowColour> edge_colours() const;

    // triangle consistency for edges {u,v},{u,w},{v,w} anchored to u<v<w
    bool triangle_consistent(const RainbowColour& uv, const RainbowColour& uw,
                             const RainbowColour& vw) const;
    // every triangle of the graph consistent, every qualifying (n-1)-subset
    // labelled with a shade containing all its cone tints
    bool graph_consistent(const ColouredGraph& g, bool require_total_yellow = true) const;
    // tints of cones with the given base present in g (as a yellow mask)
    uint32_t cone_tints(const ColouredGraph& g, uint8_t base_mask) const;
    // z is the apex of an i-cone over base_mask
    std::optional<int32_t> cone_tint(const ColouredGraph& g, uint8_t base_mask, uint32_t z) const;

    bool atom_consistent(const RainbowAtom& a) const;
    // all atoms, within budget (throws BudgetError otherwise)
    std::vector<RainbowAtom> enumerate_atoms(uint64_t max_atoms = 2'000'000) const;
    uint64_t count_atoms(uint64_t max_atoms = 2'000'000) const;
    std::vector<RainbowAtom> red_atoms(uint64_t max_atoms = 2'000'000) const;

    // explicit QEA_n atom structure; feasible for small specs only
    AtomStructure to_atom_structure(uint64_t max_atoms = 20'000) const;

    std::string to_dot(const ColouredGraph& g) const;

  private:
    RainbowSpec spec_;
    std::vector<int32_t> yellow_universe_;
};

// the paper-parameter pair A_{lambda+2,beta}, A_{lambda+2,lambda} and the
// desk-scale override path
struct RainbowPair {
    RainbowStructure a, b;
    uint64_t paper_lambda;   // (n*2^m)^3
    uint64_t paper_beta;     // (lambda+1)(lambda+2)/2
    bool overridden;
};
RainbowPair rainbow_pair(uint32_t n, uint32_t m,
                         std::optional<uint32_t> mu_override = std::nullopt,
                         std::optional<uint32_t> ka_override = std::nullopt,
                         std::optional<uint32_t> kb_override = std::nullopt);

}  // namespace cylkit

template <>
struct std::hash<cylkit::ColouredGraph> {
    size_t operator()(const cylkit::ColouredGraph& g) const { return g.hash(); }
};
template <>
struct std::hash<cylkit::RainbowAtom> {
    size_t operator()(const cylkit::RainbowAtom& a) const { return a.hash(); }
};
