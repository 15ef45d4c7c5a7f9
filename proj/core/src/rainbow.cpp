#include "cylkit/rainbow.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cylkit {

std::string RainbowColour::name() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::GreenTint: os << "g0^" << a; break;
        case Kind::GreenChain: os << "g" << a; break;
        case Kind::White: os << "w" << a; break;
        case Kind::RedClique:
            os << "r" << a;
            if (sup) os << "'" << sup;
            break;
        case Kind::RedPair:
            os << "r(" << a << "," << b << ")";
            if (sup) os << "'" << sup;
            break;
    }
    return os.str();
}

RainbowSpec RainbowSpec::theorem_can(uint32_t n) {
    RainbowSpec s;
    s.dimension = n;
    for (int32_t t = 0; t <= (int32_t)n; ++t) s.green_tints.push_back(t);
    s.regime = RedRegime::Pair;
    for (int32_t v = 0; v < (int32_t)n; ++v) s.red_values.push_back(v);
    return s;
}

RainbowSpec RainbowSpec::zn(uint32_t n, int32_t z_lo, int32_t z_hi, int32_t n_lo, int32_t n_hi) {
    RainbowSpec s;
    s.dimension = n;
    for (int32_t t = z_lo; t <= z_hi; ++t) s.green_tints.push_back(t);
    s.regime = RedRegime::ZN;
    for (int32_t v = n_lo; v <= n_hi; ++v) s.red_values.push_back(v);
    return s;
}

ColouredGraph::ColouredGraph(uint32_t nodes) : nodes_(nodes) {
    edge_.resize(nodes * (nodes - 1) / 2);
}

uint32_t ColouredGraph::edge_index(uint32_t u, uint32_t v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

bool ColouredGraph::has_edge(uint32_t u, uint32_t v) const {
    return edge_[edge_index(u, v)].has_value();
}

const RainbowColour& ColouredGraph::edge(uint32_t u, uint32_t v) const {
    const auto& c = edge_[edge_index(u, v)];
    if (!c) throw InputError("edge not labelled");
    return *c;
}

void ColouredGraph::set_edge(uint32_t u, uint32_t v, RainbowColour c) {
    if (u == v) throw InputError("self edge");
    if (u > v && c.kind == RainbowColour::Kind::RedPair) std::swap(c.a, c.b);
    edge_[edge_index(u, v)] = c;
}

void ColouredGraph::clear_edge(uint32_t u, uint32_t v) { edge_[edge_index(u, v)].reset(); }

std::optional<uint32_t> ColouredGraph::yellow(uint8_t base_mask) const {
    for (const auto& [m, s] : yellow_)
        if (m == base_mask) return s;
    return std::nullopt;
}

void ColouredGraph::set_yellow(uint8_t base_mask, uint32_t tint_mask) {
    for (auto& [m, s] : yellow_)
        if (m == base_mask) {
            s = tint_mask;
            return;
        }
    yellow_.push_back({base_mask, tint_mask});
    std::sort(yellow_.begin(), yellow_.end());
}

void ColouredGraph::clear_yellow(uint8_t base_mask) {
    std::erase_if(yellow_, [&](const auto& p) { return p.first == base_mask; });
}

bool ColouredGraph::operator<(const ColouredGraph& o) const {
    if (nodes_ != o.nodes_) return nodes_ < o.nodes_;
    if (edge_ != o.edge_) return edge_ < o.edge_;
    return yellow_ < o.yellow_;
}

size_t ColouredGraph::hash() const {
    size_t h = nodes_ * 0x9e3779b97f4a7c15ull;
    auto mix = [&](size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    for (const auto& c : edge_) {
        if (!c)
            mix(0);
        else
            mix(((size_t)(uint8_t)c->kind << 48) ^ ((size_t)(uint32_t)c->a << 24) ^
                ((size_t)(uint32_t)c->b << 8) ^ (uint32_t)c->sup);
    }
    for (const auto& [m, s] : yellow_) mix(((size_t)m << 32) ^ s);
    return h;
}

std::string ColouredGraph::to_string() const {
    std::ostringstream os;
    os << "G" << nodes_ << "[";
    for (uint32_t v = 0; v < nodes_; ++v)
        for (uint32_t u = 0; u < v; ++u) {
            const auto& c = edge_[edge_index(u, v)];
            os << u << v << ":" << (c ? c->name() : "?") << " ";
        }
    for (const auto& [m, s] : yellow_) os << "y" << (int)m << "=" << s << " ";
    os << "]";
    return os.str();
}

bool RainbowAtom::operator<(const RainbowAtom& o) const {
    if (kernel != o.kernel) return kernel < o.kernel;
    return graph < o.graph;
}

size_t RainbowAtom::hash() const {
    size_t h = graph.hash();
    for (auto k : kernel) h = h * 31 + k;
    return h;
}

std::string RainbowAtom::name() const {
    std::ostringstream os;
    os << "k";
    for (auto k : kernel) os << (int)k;
    os << ":" << graph.to_string();
    return os.str();
}

RainbowStructure::RainbowStructure(RainbowSpec spec) : spec_(std::move(spec)) {
    if (spec_.dimension < 3) throw InputError("rainbow: dimension >= 3 required");
    yellow_universe_ = spec_.yellow_universe.empty() ? spec_.green_tints : spec_.yellow_universe;
    if (yellow_universe_.size() > 31) throw BudgetError("rainbow: yellow universe too large");
    if (!std::is_sorted(spec_.red_values.begin(), spec_.red_values.end()))
        std::sort(spec_.red_values.begin(), spec_.red_values.end());
}

uint32_t RainbowStructure::yellow_tint_index(int32_t tint) const {
    auto it = std::find(yellow_universe_.begin(), yellow_universe_.end(), tint);
    if (it == yellow_universe_.end()) throw InputError("tint outside yellow universe");
    return static_cast<uint32_t>(it - yellow_universe_.begin());
}

std::vector<RainbowColour> RainbowStructure::edge_colours() const {
    std::vector<RainbowColour> out;
    for (int32_t t : spec_.green_tints) out.push_back({RainbowColour::Kind::GreenTint, t, 0, 0});
    for (uint32_t i = 1; i <= chain_green_count(); ++i)
        out.push_back({RainbowColour::Kind::GreenChain, (int32_t)i, 0, 0});
    for (uint32_t i = 0; i < white_count(); ++i)
        out.push_back({RainbowColour::Kind::White, (int32_t)i, 0, 0});
    for (uint32_t t = 0; t < spec_.red_copies; ++t) {
        if (spec_.regime == RedRegime::Clique) {
            for (uint32_t i = 0; i < spec_.clique_reds; ++i)
                out.push_back({RainbowColour::Kind::RedClique, (int32_t)i, 0, (int32_t)t});
        } else {
            for (int32_t k : spec_.red_values)
                for (int32_t l : spec_.red_values)
                    if (k != l) out.push_back({RainbowColour::Kind::RedPair, k, l, (int32_t)t});
        }
    }
    return out;
}

bool RainbowStructure::triangle_consistent(const RainbowColour& uv, const RainbowColour& uw,
                                           const RainbowColour& vw) const {
    using K = RainbowColour::Kind;
    // all-green triangles are forbidden
    if (uv.green() && uw.green() && vw.green()) return false;

    // (g_i, g_i, w_i) and (g_0^j, g_0^k, w_0)
    auto chain_white = [](const RainbowColour& x, const RainbowColour& y, const RainbowColour& z) {
        if (x.kind == K::GreenChain && y.kind == K::GreenChain && x.a == y.a &&
            z.kind == K::White && z.a == x.a)
            return true;
        if (x.kind == K::GreenTint && y.kind == K::GreenTint && z.kind == K::White && z.a == 0)
            return true;
        return false;
    };
    if (chain_white(uv, uw, vw) || chain_white(uv, vw, uw) || chain_white(uw, vw, uv)) return false;

    // red triangles
    if (uv.red() && uw.red() && vw.red()) {
        if (spec_.regime == RedRegime::Clique) {
            // (r_i, r_i, r_j) forbidden for all i, j: equal pair kills it
            if (uv.a == uw.a || uv.a == vw.a || uw.a == vw.a) return false;
        } else {
            // node-anchored composability: values agree at shared nodes
            if (uv.a != uw.a) return false;   // at u
            if (uv.b != vw.a) return false;   // at v
            if (uw.b != vw.b) return false;   // at w
        }
    }

    if (spec_.regime == RedRegime::ZN) {
        // (g_0^i, g_0^j, r_kl) against the order-preserving rule; the two
        // green tints attach to the red edge's endpoints opposite the apex
        auto zn_ok = [](int32_t tint_p, int32_t val_p, int32_t tint_q, int32_t val_q) {
            if (tint_p == tint_q) return false;  // values are always distinct
            return (tint_p < tint_q) == (val_p < val_q);
        };
        if (uv.kind == K::GreenTint && uw.kind == K::GreenTint && vw.kind == K::RedPair)
            if (!zn_ok(uv.a, vw.a, uw.a, vw.b)) return false;  // apex u; v,w endpoints
        if (uv.kind == K::GreenTint && vw.kind == K::GreenTint && uw.kind == K::RedPair)
            if (!zn_ok(uv.a, uw.a, vw.a, uw.b)) return false;  // apex v; u,w endpoints
        if (uw.kind == K::GreenTint && vw.kind == K::GreenTint && uv.kind == K::RedPair)
            if (!zn_ok(uw.a, uv.a, vw.a, uv.b)) return false;  // apex w; u,v endpoints
    }
    return true;
}

std::optional<int32_t> RainbowStructure::cone_tint(const ColouredGraph& g, uint8_t base_mask,
                                                   uint32_t z) const {
    uint32_t n = spec_.dimension;
    std::vector<uint32_t> base;
    for (uint32_t u = 0; u < g.node_count(); ++u)
        if ((base_mask >> u) & 1) base.push_back(u);
    if (base.size() != n - 1 || ((base_mask >> z) & 1)) return std::nullopt;
    // one base node carries g_0^t to z, the others carry the chain g_1..g_{n-2}
    std::optional<int32_t> tint;
    std::vector<bool> chain_seen(n, false);
    for (uint32_t u : base) {
        if (!g.has_edge(u, z)) return std::nullopt;
        const auto& c = g.edge(u, z);
        if (c.kind == RainbowColour::Kind::GreenTint) {
            if (tint) return std::nullopt;
            tint = c.a;
        } else if (c.kind == RainbowColour::Kind::GreenChain) {
            if (c.a < 1 || c.a > (int32_t)(n - 2) || chain_seen[c.a]) return std::nullopt;
            chain_seen[c.a] = true;
        } else {
            return std::nullopt;
        }
    }
    if (!tint) return std::nullopt;
    for (uint32_t j = 1; j <= n - 2; ++j)
        if (!chain_seen[j]) return std::nullopt;
    return tint;
}

uint32_t RainbowStructure::cone_tints(const ColouredGraph& g, uint8_t base_mask) const {
    uint32_t mask = 0;
    for (uint32_t z = 0; z < g.node_count(); ++z) {
        if ((base_mask >> z) & 1) continue;
        if (auto t = cone_tint(g, base_mask, z)) {
            auto it = std::find(yellow_universe_.begin(), yellow_universe_.end(), *t);
            if (it != yellow_universe_.end())
                mask |= uint32_t{1} << (it - yellow_universe_.begin());
            else
                mask |= uint32_t{1} << 31;  // tint outside the universe: unlabellable
        }
    }
    return mask;
}

bool RainbowStructure::graph_consistent(const ColouredGraph& g, bool require_total_yellow) const {
    uint32_t nc = g.node_count();
    for (uint32_t w = 0; w < nc; ++w)
        for (uint32_t v = 0; v < w; ++v)
            for (uint32_t u = 0; u < v; ++u) {
                if (!g.has_edge(u, v) || !g.has_edge(u, w) || !g.has_edge(v, w)) continue;
                if (!triangle_consistent(g.edge(u, v), g.edge(u, w), g.edge(v, w))) return false;
            }
    uint32_t base_size = spec_.dimension - 1;
    if (nc >= base_size) {
        for (uint8_t mask = 1; mask < (1u << nc); ++mask) {
            if (__builtin_popcount(mask) != (int)base_size) continue;
            bool complete = true, has_green = false;
            for (uint32_t v = 0; v < nc && complete; ++v)
                for (uint32_t u = 0; u < v && complete; ++u) {
                    if (!((mask >> u) & 1) || !((mask >> v) & 1)) continue;
                    if (!g.has_edge(u, v))
                        complete = false;
                    else if (g.edge(u, v).green())
                        has_green = true;
                }
            auto label = g.yellow(mask);
            if (!complete) {
                if (label) return false;
                continue;
            }
            if (has_green) {
                if (label) return false;  // green bases carry no shade
                continue;
            }
            if (!label) {
                if (require_total_yellow) return false;
                continue;
            }
            uint32_t forced = cone_tints(g, mask);
            if (forced & (uint32_t{1} << 31)) return false;
            if ((forced & *label) != forced) return false;  // every cone tint lies in S
            if ((*label & full_yellow_mask()) != *label) return false;
        }
    }
    // stray labels on wrong-size masks
    for (const auto& [m, s] : g.yellows()) {
        (void)s;
        if (__builtin_popcount(m) != (int)base_size) return false;
        if (m >= (1u << nc)) return false;
    }
    return true;
}

bool RainbowStructure::atom_consistent(const RainbowAtom& a) const {
    uint32_t n = spec_.dimension;
    if (a.kernel.size() != n) return false;
    // first-occurrence numbering
    uint8_t next = 0;
    for (uint32_t i = 0; i < n; ++i) {
        if (a.kernel[i] > next) return false;
        if (a.kernel[i] == next) next++;
    }
    if (a.graph.node_count() != next) return false;
    for (uint32_t v = 0; v < a.graph.node_count(); ++v)
        for (uint32_t u = 0; u < v; ++u)
            if (!a.graph.has_edge(u, v)) return false;
    return graph_consistent(a.graph, true);
}

namespace {

void enumerate_kernels(uint32_t n, std::vector<std::vector<uint8_t>>& out) {
    std::vector<uint8_t> k(n, 0);
    std::function<void(uint32_t, uint8_t)> rec = [&](uint32_t i, uint8_t blocks) {
        if (i == n) {
            out.push_back(k);
            return;
        }
        for (uint8_t b = 0; b <= blocks; ++b) {
            k[i] = b;
            rec(i + 1, std::max<uint8_t>(blocks, b + 1));
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<RainbowAtom> RainbowStructure::enumerate_atoms(uint64_t max_atoms) const {
    std::vector<RainbowAtom> out;
    uint32_t n = spec_.dimension;
    auto palette = edge_colours();
    std::vector<std::vector<uint8_t>> kernels;
    enumerate_kernels(n, kernels);

    for (const auto& kernel : kernels) {
        uint32_t nc = *std::max_element(kernel.begin(), kernel.end()) + 1;
        ColouredGraph g(nc);
        // assign edges (u,v), v-major, with triangle pruning
        std::function<void(uint32_t, uint32_t)> edges = [&](uint32_t u, uint32_t v) {
            if (v == nc) {
                // yellow labels on qualifying bases
                uint32_t base_size = n - 1;
                std::vector<uint8_t> bases;
                if (nc >= base_size)
                    for (uint8_t mask = 1; mask < (1u << nc); ++mask) {
                        if (__builtin_popcount(mask) != (int)base_size) continue;
                        bool has_green = false;
                        for (uint32_t y = 0; y < nc; ++y)
                            for (uint32_t x = 0; x < y; ++x)
                                if (((mask >> x) & 1) && ((mask >> y) & 1) && g.edge(x, y).green())
                                    has_green = true;
                        if (!has_green) bases.push_back(mask);
                    }
                std::function<void(size_t)> label = [&](size_t bi) {
                    if (bi == bases.size()) {
                        RainbowAtom a{kernel, g};
                        out.push_back(a);
                        if (out.size() > max_atoms)
                            throw BudgetError("rainbow atom enumeration exceeds " +
                                              std::to_string(max_atoms));
                        return;
                    }
                    uint8_t mask = bases[bi];
                    uint32_t forced = cone_tints(g, mask);
                    if (forced & (uint32_t{1} << 31)) return;  // unlabellable
                    uint32_t full = full_yellow_mask();
                    uint32_t free = full & ~forced;
                    // iterate supersets of forced within the universe
                    uint32_t sub = free;
                    for (;;) {
                        g.set_yellow(mask, forced | sub);
                        label(bi + 1);
                        g.clear_yellow(mask);
                        if (sub == 0) break;
                        sub = (sub - 1) & free;
                    }
                };
                label(0);
                return;
            }
            uint32_t nu = u + 1 == v ? 0 : u + 1;
            uint32_t nv = u + 1 == v ? v + 1 : v;
            for (const auto& c : palette) {
                g.set_edge(u, v, c);
                bool ok = true;
                for (uint32_t w = 0; w < u && ok; ++w)
                    ok = triangle_consistent(g.edge(w, u), g.edge(w, v), g.edge(u, v));
                if (ok) edges(nu, nv);
            }
            g.clear_edge(u, v);
        };
        if (nc == 1) {
            RainbowAtom a{kernel, g};
            out.push_back(a);
        } else {
            edges(0, 1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

uint64_t RainbowStructure::count_atoms(uint64_t max_atoms) const {
    return enumerate_atoms(max_atoms).size();
}

std::vector<RainbowAtom> RainbowStructure::red_atoms(uint64_t max_atoms) const {
    auto all = enumerate_atoms(max_atoms);
    std::vector<RainbowAtom> out;
    for (auto& a : all) {
        bool red = false;
        for (uint32_t v = 0; v < a.graph.node_count(); ++v)
            for (uint32_t u = 0; u < v; ++u)
                if (a.graph.edge(u, v).red()) red = true;
        if (red) out.push_back(a);
    }
    return out;
}

std::string RainbowStructure::to_dot(const ColouredGraph& g) const {
    std::ostringstream os;
    os << "graph coloured {\n";
    for (uint32_t u = 0; u < g.node_count(); ++u) os << "  n" << u << ";\n";
    for (uint32_t v = 0; v < g.node_count(); ++v)
        for (uint32_t u = 0; u < v; ++u)
            if (g.has_edge(u, v)) {
                const auto& c = g.edge(u, v);
                const char* colour = c.green() ? "green" : c.red() ? "red" : "gray";
                os << "  n" << u << " -- n" << v << " [label=\"" << c.name() << "\",color="
                   << colour << "];\n";
            }
    os << "}\n";
    return os.str();
}


namespace {

// the labelled structure induced on coordinates != i, normalized; equality of
// keys is exactly the accessibility a T_i b
std::string restrict_key(const RainbowAtom& a, uint32_t drop) {
    uint32_t n = static_cast<uint32_t>(a.kernel.size());
    std::vector<int> node_map(ColouredGraph::kMaxNodes, -1);
    std::vector<uint8_t> kept_nodes;
    std::vector<uint8_t> kernel2;
    for (uint32_t c = 0; c < n; ++c) {
        if (c == drop) continue;
        uint8_t node = a.kernel[c];
        if (node_map[node] < 0) {
            node_map[node] = static_cast<int>(kept_nodes.size());
            kept_nodes.push_back(node);
        }
        kernel2.push_back(static_cast<uint8_t>(node_map[node]));
    }
    ColouredGraph g2(static_cast<uint32_t>(kept_nodes.size()));
    for (uint32_t v2 = 0; v2 < kept_nodes.size(); ++v2)
        for (uint32_t u2 = 0; u2 < v2; ++u2) {
            uint32_t uo = kept_nodes[u2], vo = kept_nodes[v2];
            RainbowColour c = a.graph.edge(std::min(uo, vo), std::max(uo, vo));
            if (c.kind == RainbowColour::Kind::RedPair && uo > vo) std::swap(c.a, c.b);
            g2.set_edge(u2, v2, c);  // c now anchored (at u2, at v2)
        }
    for (const auto& [mask, shade] : a.graph.yellows()) {
        uint8_t mapped = 0;
        bool keep = true;
        for (uint32_t node = 0; node < ColouredGraph::kMaxNodes && keep; ++node)
            if ((mask >> node) & 1) {
                if (node_map[node] < 0)
                    keep = false;
                else
                    mapped |= uint8_t{1} << node_map[node];
            }
        if (keep) g2.set_yellow(mapped, shade);
    }
    std::string key;
    for (auto k : kernel2) key += char('0' + k);
    return key + "|" + g2.to_string();
}

RainbowAtom transpose_atom(const RainbowAtom& a, uint32_t i, uint32_t j) {
    uint32_t n = static_cast<uint32_t>(a.kernel.size());
    std::vector<uint8_t> kernel2(n);
    for (uint32_t c = 0; c < n; ++c) {
        uint32_t src = c == i ? j : c == j ? i : c;
        kernel2[c] = a.kernel[src];
    }
    // renumber nodes to first occurrence and carry the graph along
    std::vector<int> node_map(ColouredGraph::kMaxNodes, -1);
    uint8_t next = 0;
    for (uint32_t c = 0; c < n; ++c) {
        if (node_map[kernel2[c]] < 0) node_map[kernel2[c]] = next++;
        kernel2[c] = static_cast<uint8_t>(node_map[kernel2[c]]);
    }
    ColouredGraph g2(a.graph.node_count());
    for (uint32_t v = 0; v < a.graph.node_count(); ++v)
        for (uint32_t u = 0; u < v; ++u) {
            RainbowColour c = a.graph.edge(u, v);  // anchored (at u, at v)
            g2.set_edge(static_cast<uint32_t>(node_map[u]), static_cast<uint32_t>(node_map[v]), c);
        }
    for (const auto& [mask, shade] : a.graph.yellows()) {
        uint8_t mapped = 0;
        for (uint32_t node = 0; node < ColouredGraph::kMaxNodes; ++node)
            if ((mask >> node) & 1) mapped |= uint8_t{1} << node_map[node];
        g2.set_yellow(mapped, shade);
    }
    return RainbowAtom{kernel2, g2};
}

}  // namespace

AtomStructure RainbowStructure::to_atom_structure(uint64_t max_atoms) const {
    auto atoms = enumerate_atoms(max_atoms);
    uint32_t n = spec_.dimension;
    uint32_t na = static_cast<uint32_t>(atoms.size());
    std::vector<std::string> names;
    names.reserve(na);
    for (const auto& a : atoms) names.push_back(a.name());
    Signature sig = Signature::of(AlgebraClass::QEA, n);
    AtomStructure s = AtomStructure::cylindric(sig, names);

    auto index_of = [&](const RainbowAtom& a) -> AtomId {
        auto it = std::lower_bound(atoms.begin(), atoms.end(), a);
        if (it == atoms.end() || !(*it == a)) throw InputError("atom not enumerated: " + a.name());
        return static_cast<AtomId>(it - atoms.begin());
    };

    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            AtomSet d(na);
            for (AtomId x = 0; x < na; ++x)
                if (atoms[x].kernel[i] == atoms[x].kernel[j]) d.insert(x);
            s.set_diagonal(i, j, d);
        }

    // c_i rows via grouping by the restriction to coordinates != i
    for (uint32_t i = 0; i < n; ++i) {
        std::map<std::string, std::vector<AtomId>> groups;
        for (AtomId x = 0; x < na; ++x)
            groups[restrict_key(atoms[x], i)].push_back(x);
        std::vector<AtomSet> rows(na, AtomSet(na));
        for (const auto& [key, members] : groups) {
            AtomSet set(na);
            for (AtomId m : members) set.insert(m);
            for (AtomId m : members) rows[m] = set;
        }
        s.set_unary_rows({OpFamily::Cylindrifier, i, 0}, std::move(rows));
    }

    // transpositions: singleton rows b -> { b o [i,j] }
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            std::vector<AtomSet> rows(na, AtomSet(na));
            for (AtomId x = 0; x < na; ++x) {
                RainbowAtom moved = transpose_atom(atoms[x], i, j);
                rows[x].insert(index_of(moved));
            }
            s.set_unary_rows({OpFamily::Transposition, i, j}, std::move(rows));
        }

    // replacements: s_i^j({b}) = b in d_ij ? c_i-group(b) : empty
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& crows = s.unary_rows({OpFamily::Cylindrifier, i, 0});
            std::vector<AtomSet> rows(na, AtomSet(na));
            for (AtomId x = 0; x < na; ++x)
                if (atoms[x].kernel[i] == atoms[x].kernel[j]) rows[x] = crows[x];
            s.set_unary_rows({OpFamily::Replacement, i, j}, std::move(rows));
        }
    return s;
}

RainbowPair rainbow_pair(uint32_t n, uint32_t m, std::optional<uint32_t> mu_override,
                         std::optional<uint32_t> ka_override, std::optional<uint32_t> kb_override) {
    uint64_t lambda = 1;
    uint64_t base = (uint64_t)n << m;  // n * 2^m
    lambda = base * base * base;
    uint64_t beta = (lambda + 1) * (lambda + 2) / 2;
    if (!mu_override || !ka_override || !kb_override)
        throw BudgetError("rainbow_pair: paper parameters lambda=" + std::to_string(lambda) +
                          ", beta=" + std::to_string(beta) +
                          " are infeasible at desk scale; pass (mu, kappaA, kappaB) overrides");
    bool overridden = true;
    uint32_t mu = *mu_override, ka = *ka_override, kb = *kb_override;
    std::vector<int32_t> tints;
    for (uint32_t t = 0; t < mu; ++t) tints.push_back((int32_t)t);
    RainbowSpec sa = RainbowSpec::clique(n, tints, ka);
    RainbowSpec sb = RainbowSpec::clique(n, tints, kb);
    return RainbowPair{RainbowStructure(sa), RainbowStructure(sb), lambda, beta, overridden};
}

}  // namespace cylkit
