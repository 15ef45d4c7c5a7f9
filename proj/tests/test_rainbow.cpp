#include <doctest.h>

#include <functional>

#include "cylkit/axioms.hpp"
#include "cylkit/ops.hpp"
#include "cylkit/rainbow.hpp"

using namespace cylkit;

namespace {

// generate-and-filter oracle for the smallest clique rainbow: restates the
// forbidden-triple and cone rules directly over the raw product space
uint64_t oracle_count_atoms_n3(const RainbowStructure& r) {
    auto palette = r.edge_colours();
    uint64_t count = 0;
    std::vector<std::vector<uint8_t>> kernels = {
        {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}};
    for (const auto& kernel : kernels) {
        uint32_t nc = *std::max_element(kernel.begin(), kernel.end()) + 1;
        uint32_t edges = nc * (nc - 1) / 2;
        std::vector<uint32_t> pick(edges, 0);
        std::function<void(uint32_t)> rec = [&](uint32_t e) {
            if (e == edges) {
                ColouredGraph g(nc);
                uint32_t idx = 0;
                for (uint32_t v = 0; v < nc; ++v)
                    for (uint32_t u = 0; u < v; ++u) g.set_edge(u, v, palette[pick[idx++]]);
                // enumerate yellow labellings over qualifying bases
                std::vector<uint8_t> bases;
                for (uint8_t mask = 1; mask < (1u << nc); ++mask) {
                    if (__builtin_popcount(mask) != 2) continue;
                    bool green = false;
                    for (uint32_t v = 0; v < nc; ++v)
                        for (uint32_t u = 0; u < v; ++u)
                            if (((mask >> u) & 1) && ((mask >> v) & 1) && g.edge(u, v).green())
                                green = true;
                    if (!green) bases.push_back(mask);
                }
                uint32_t full = r.full_yellow_mask();
                std::function<void(size_t)> lab = [&](size_t bi) {
                    if (bi == bases.size()) {
                        RainbowAtom a{kernel, g};
                        if (r.atom_consistent(a)) count++;
                        return;
                    }
                    for (uint32_t m = 0; m <= full; ++m) {
                        g.set_yellow(bases[bi], m);
                        lab(bi + 1);
                        g.clear_yellow(bases[bi]);
                    }
                };
                lab(0);
            } else {
                for (uint32_t c = 0; c < palette.size(); ++c) {
                    pick[e] = c;
                    rec(e + 1);
                }
            }
        };
        rec(0);
    }
    return count;
}

}  // namespace

TEST_CASE("smallest clique rainbow: enumeration matches generate-and-filter") {
    RainbowStructure r(RainbowSpec::clique(3, {0}, 1));
    auto atoms = r.enumerate_atoms();
    for (const auto& a : atoms) CHECK(r.atom_consistent(a));
    CHECK(atoms.size() == oracle_count_atoms_n3(r));
}

TEST_CASE("forbidden triples") {
    RainbowStructure r(RainbowSpec::clique(3, {0, 1}, 2));
    using K = RainbowColour::Kind;
    RainbowColour g00{K::GreenTint, 0, 0, 0}, g01{K::GreenTint, 1, 0, 0};
    RainbowColour g1{K::GreenChain, 1, 0, 0};
    RainbowColour w0{K::White, 0, 0, 0}, w1{K::White, 1, 0, 0};
    RainbowColour r0{K::RedClique, 0, 0, 0}, r1{K::RedClique, 1, 0, 0};

    CHECK_FALSE(r.triangle_consistent(g00, g01, g1));   // all green
    CHECK_FALSE(r.triangle_consistent(g00, g01, w0));   // two tints and w0
    CHECK_FALSE(r.triangle_consistent(g00, g00, w0));
    CHECK(r.triangle_consistent(g00, g01, w1));
    CHECK_FALSE(r.triangle_consistent(g1, g1, w1));     // (g_i, g_i, w_i)
    CHECK(r.triangle_consistent(g1, g1, w0));
    CHECK_FALSE(r.triangle_consistent(r0, r0, r1));     // clique reds repeat
    CHECK_FALSE(r.triangle_consistent(r0, r0, r0));
    CHECK(r.triangle_consistent(r0, r1, w0));
    CHECK(r.triangle_consistent(g00, g01, r0));         // greens meet a red freely
}

TEST_CASE("pair red composability is node anchored") {
    RainbowStructure r(RainbowSpec::theorem_can(3));
    using K = RainbowColour::Kind;
    // triangle on u<v<w: values (u,v)=(0,1), (u,w)=(0,2), (v,w)=(1,2) compose
    RainbowColour uv{K::RedPair, 0, 1, 0}, uw{K::RedPair, 0, 2, 0}, vw{K::RedPair, 1, 2, 0};
    CHECK(r.triangle_consistent(uv, uw, vw));
    // mismatched shared endpoint
    RainbowColour uw_bad{K::RedPair, 1, 2, 0};
    CHECK_FALSE(r.triangle_consistent(uv, uw_bad, vw));
    // a repeated pair cannot close a triangle
    CHECK_FALSE(r.triangle_consistent(uv, uv, vw));
}

TEST_CASE("zn order-preserving rule") {
    RainbowStructure r(RainbowSpec::zn(3, -3, 0, 0, 30));
    using K = RainbowColour::Kind;
    // common apex u: edges (u,v) = g_0^{-1}, (u,w) = g_0^{0}; red (v,w)
    RainbowColour gm1{K::GreenTint, -1, 0, 0}, g0{K::GreenTint, 0, 0, 0};
    RainbowColour red_21{K::RedPair, 2, 1, 0};  // 2 at v (tint -1), 1 at w (tint 0)
    RainbowColour red_12{K::RedPair, 1, 2, 0};
    CHECK_FALSE(r.triangle_consistent(gm1, g0, red_21));  // {(-1,2),(0,1)} not order preserving
    CHECK(r.triangle_consistent(gm1, g0, red_12));
    // equal tints never sit over a red
    CHECK_FALSE(r.triangle_consistent(g0, g0, red_12));
}

TEST_CASE("transpositions act as involutions on atoms") {
    RainbowStructure r(RainbowSpec::clique(3, {0}, 1));
    AtomStructure s = r.to_atom_structure();
    CHECK(s.validate().ok());
    FiniteBAO b(s);
    for (uint32_t i = 0; i < 3; ++i)
        for (uint32_t j = i + 1; j < 3; ++j)
            for (AtomId a = 0; a < b.atom_count(); ++a) {
                AtomSet once = b.apply({OpFamily::Transposition, i, j}, b.atom(a));
                CHECK(once.count() == 1);
                CHECK(b.apply({OpFamily::Transposition, i, j}, once) == b.atom(a));
            }
}

TEST_CASE("small rainbow complex algebra is a QEA_3 and round trips") {
    RainbowStructure r(RainbowSpec::clique(3, {0, 1}, 2));
    AtomStructure s = r.to_atom_structure();
    CHECK(s.validate().ok());
    FiniteBAO b(s);
    auto rep = check_axioms(b, AlgebraClass::QEA);
    INFO(rep.summary());
    CHECK(rep.ok());
    CHECK(atom_structure_roundtrip_ok(s));
}

TEST_CASE("rainbow pair: paper parameters refuse, overrides build") {
    CHECK_THROWS_AS(rainbow_pair(3, 1), BudgetError);
    auto pair = rainbow_pair(3, 1, 2, 7, 6);
    CHECK(pair.paper_lambda == 216);  // (3*2)^3
    CHECK(pair.paper_beta == 217 * 218 / 2);
    CHECK(pair.a.spec().clique_reds == 7);
    CHECK(pair.b.spec().clique_reds == 6);
    // non-red atoms agree via the canonical bijection (same palette otherwise)
    auto atoms_a = pair.a.enumerate_atoms();
    auto atoms_b = pair.b.enumerate_atoms();
    uint64_t nonred_a = 0, nonred_b = 0;
    auto count_nonred = [](const std::vector<RainbowAtom>& v, uint64_t& acc) {
        for (const auto& at : v) {
            bool red = false;
            for (uint32_t y = 0; y < at.graph.node_count(); ++y)
                for (uint32_t x = 0; x < y; ++x)
                    if (at.graph.edge(x, y).red()) red = true;
            if (!red) acc++;
        }
    };
    count_nonred(atoms_a, nonred_a);
    count_nonred(atoms_b, nonred_b);
    CHECK(nonred_a == nonred_b);
    CHECK(atoms_a.size() > atoms_b.size());
}

TEST_CASE("zn rainbow with a singleton tint matches plain pair reds on red rules") {
    RainbowStructure zn(RainbowSpec::zn(3, 0, 0, 0, 3));
    RainbowSpec plain;
    plain.dimension = 3;
    plain.green_tints = {0};
    plain.regime = RedRegime::Pair;
    plain.red_values = {0, 1, 2, 3};
    RainbowStructure pr(plain);
    // all-red triangles agree between the two regimes
    auto reds = [](const RainbowStructure& r) {
        std::vector<RainbowColour> v;
        for (const auto& c : r.edge_colours())
            if (c.red()) v.push_back(c);
        return v;
    };
    auto rz = reds(zn), rp = reds(pr);
    REQUIRE(rz.size() == rp.size());
    for (size_t x = 0; x < rz.size(); ++x)
        for (size_t y = 0; y < rz.size(); ++y)
            for (size_t z = 0; z < rz.size(); ++z)
                CHECK(zn.triangle_consistent(rz[x], rz[y], rz[z]) ==
                      pr.triangle_consistent(rp[x], rp[y], rp[z]));
}
