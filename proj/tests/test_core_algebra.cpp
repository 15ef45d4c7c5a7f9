#include <doctest.h>

#include <algorithm>
#include <random>

#include "cylkit/axioms.hpp"
#include "cylkit/generators.hpp"
#include "cylkit/json_io.hpp"
#include "cylkit/ops.hpp"
#include "cylkit/sc_word.hpp"
#include "cylkit/setalg.hpp"

using namespace cylkit;

namespace {

AtomSet named(const AtomStructure& s, std::initializer_list<const char*> names) {
    AtomSet x(s.atom_count());
    for (auto n : names) x.insert(*s.atom_id(n));
    return x;
}

}  // namespace

TEST_CASE("one-atom relation algebra validates") {
    AtomStructure s = AtomStructure::relation_algebra({"a"});
    AtomSet id(1);
    id.insert(0);
    s.set_identity(id);
    s.set_consistent(0, 0, 0, true);
    CHECK(s.validate().ok());
}

TEST_CASE("json loader rejects undeclared atoms") {
    std::string text = R"({"atoms":["a"],"ra":{"identity":["a"],"forbidden":[["a","a","b"]]}})";
    CHECK_THROWS_WITH_AS(atom_structure_from_json(text), "undeclared atom b", InputError);
}

TEST_CASE("json round trip is canonical") {
    AtomStructure s = sorted_by_name(maddux(2));
    std::string j = atom_structure_to_json(s);
    AtomStructure back = atom_structure_from_json(j);
    CHECK(back == s);
    CHECK(atom_structure_to_json(back) == j);
}

TEST_CASE("complex algebra operators act as displayed") {
    // single reflexive point
    Signature sig = Signature::of(AlgebraClass::Df, 2);
    AtomStructure s = AtomStructure::cylindric(sig, {"p"});
    s.add_unary_pair({OpFamily::Cylindrifier, 0, 0}, 0, 0);
    s.add_unary_pair({OpFamily::Cylindrifier, 1, 0}, 0, 0);
    FiniteBAO b(s);
    CHECK(b.apply({OpFamily::Cylindrifier, 0, 0}, b.atom(0)) == b.atom(0));
    CHECK(b.apply({OpFamily::Cylindrifier, 0, 0}, b.bot()) == b.bot());
    CHECK(atom_structure_roundtrip_ok(s));
}

TEST_CASE("set algebra cylindrification matches concrete semantics") {
    SetAlgebra a({2}, 2, AlgebraClass::QEA);
    AtomSet x(a.algebra().atom_count());
    x.insert(a.tuple_id({0, 1}));
    AtomSet cx = eval_term(a.algebra(), Term::cyl(0, Term::var(0)), {x});
    AtomSet expect(a.algebra().atom_count());
    expect.insert(a.tuple_id({0, 1}));
    expect.insert(a.tuple_id({1, 1}));
    CHECK(cx == expect);
    CHECK(a.algebra().atom_count() == 4);  // 16 elements

    AtomSet d01 = a.algebra().diagonal(0, 1);
    AtomSet dexpect(a.algebra().atom_count());
    dexpect.insert(a.tuple_id({0, 0}));
    dexpect.insert(a.tuple_id({1, 1}));
    CHECK(d01 == dexpect);

    // transposition is an involution on every element (8 of 16 sampled)
    for (uint32_t bits = 0; bits < 16; ++bits) {
        AtomSet y(4);
        for (uint32_t t = 0; t < 4; ++t)
            if ((bits >> t) & 1) y.insert(t);
        AtomSet z = a.algebra().apply({OpFamily::Transposition, 0, 1}, y);
        CHECK(a.algebra().apply({OpFamily::Transposition, 0, 1}, z) == y);
    }
}

TEST_CASE("documented axiom lists hold in concrete set algebras") {
    SetAlgebra q({1, 2}, 3, AlgebraClass::QEA);
    auto rep = check_axioms(q.algebra(), AlgebraClass::QEA);
    INFO(rep.summary());
    CHECK(rep.ok());

    SetAlgebra p({3}, 3, AlgebraClass::PEA);
    auto rep2 = check_axioms(p.algebra(), AlgebraClass::PEA);
    INFO(rep2.summary());
    CHECK(rep2.ok());

    SetAlgebra c({2}, 2, AlgebraClass::CA);
    auto rep3 = check_axioms(c.algebra(), AlgebraClass::CA);
    INFO(rep3.summary());
    CHECK(rep3.ok());
}

TEST_CASE("axiom checker agrees with exhaustive equation sweep on a small carrier") {
    SetAlgebra c({2}, 2, AlgebraClass::CA);
    // commutativity, exhaustively over all 2^4 x .. assignments
    Equation comm{Term::cyl(0, Term::cyl(1, Term::var(0))), Term::cyl(1, Term::cyl(0, Term::var(0)))};
    auto v = check_equation(c.algebra(), comm, CheckMode::All);
    CHECK(v.holds);
    CHECK(check_equation_additive(c.algebra(), comm));
}

TEST_CASE("check_equation finds witnesses") {
    // two atoms merged by c_0: c_0 x = x fails at {a}
    Signature sig = Signature::of(AlgebraClass::Df, 2);
    AtomStructure s = AtomStructure::cylindric(sig, {"a", "b"});
    for (AtomId p = 0; p < 2; ++p)
        for (AtomId q = 0; q < 2; ++q) {
            s.add_unary_pair({OpFamily::Cylindrifier, 0, 0}, p, q);
            if (p == q) s.add_unary_pair({OpFamily::Cylindrifier, 1, 0}, p, q);
        }
    FiniteBAO b(s);
    Equation e{Term::cyl(0, Term::var(0)), Term::var(0)};
    auto v = check_equation(b, e, CheckMode::Witness);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK((*v.witness)[0].count() == 1);

    Equation triv{Term::var(0), Term::var(0)};
    CHECK(check_equation(b, triv, CheckMode::All).holds);
}

TEST_CASE("eval_term monotone in positive variable occurrences") {
    SetAlgebra a({2}, 2, AlgebraClass::QEA);
    std::mt19937_64 rng(20260809);
    auto random_set = [&](uint32_t n) {
        AtomSet x(n);
        for (uint32_t t = 0; t < n; ++t)
            if (rng() & 1) x.insert(t);
        return x;
    };
    std::vector<Term> pool;
    Term x = Term::var(0);
    pool.push_back(Term::cyl(0, x));
    pool.push_back(Term::cyl(1, Term::cyl(0, x)));
    pool.push_back(Term::repl(0, 1, x));
    pool.push_back(Term::transp(0, 1, Term::cyl(0, x)));
    pool.push_back(Term::conj(Term::cyl(0, x), Term::diag(0, 1)));
    for (int trial = 0; trial < 200; ++trial) {
        const Term& t = pool[rng() % pool.size()];
        AtomSet lo = random_set(4);
        AtomSet hi = lo | random_set(4);
        CHECK(eval_term(a.algebra(), t, {lo}).subset_of(eval_term(a.algebra(), t, {hi})));
    }
}

TEST_CASE("complete additivity of lifted operators on random subsets") {
    AtomStructure s = sorted_by_name(example_ra(2));
    FiniteBAO b(s);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        AtomSet x(b.atom_count()), y(b.atom_count());
        for (uint32_t t = 0; t < b.atom_count(); ++t) {
            if (rng() & 1) x.insert(t);
            if (rng() & 1) y.insert(t);
        }
        AtomSet z(b.atom_count());
        for (uint32_t t = 0; t < b.atom_count(); ++t)
            if (rng() & 1) z.insert(t);
        CHECK(b.compose(x | y, z) == (b.compose(x, z) | b.compose(y, z)));
        CHECK(b.converse(x | y) == (b.converse(x) | b.converse(y)));
    }
}

TEST_CASE("subalgebra generation") {
    SetAlgebra a({1, 2, 2}, 3, AlgebraClass::QEA);
    AtomSet r = a.product_relation();
    CHECK(r.count() == 4);  // 1*2*2

    auto sub = generate_subalgebra(a.algebra(), {r});
    CHECK(sub.contains(r));
    bool r_atom = false;
    for (const auto& at : sub.atoms())
        if (at == r) r_atom = true;
    CHECK(r_atom);  // R is an atom of Sg{R}

    // empty generators: constants only (diagonal cuts and their closure)
    auto constants = generate_subalgebra(a.algebra(), {});
    CHECK(constants.contains(a.algebra().bot()));
    CHECK(constants.contains(a.algebra().top()));
    CHECK(constants.contains(a.algebra().diagonal(0, 1)));
    CHECK_FALSE(constants.contains(r));

    // all atoms as generators give back the full algebra
    SetAlgebra tiny({2}, 2, AlgebraClass::CA);
    auto all = generate_subalgebra(tiny.algebra(), tiny.algebra().atoms());
    CHECK(all.blocks.size() == tiny.algebra().atom_count());
}

TEST_CASE("S_[0,1]R disjoint from R over distinct blocks") {
    SetAlgebra a({1, 2, 2}, 3, AlgebraClass::QEA);
    AtomSet r = a.product_relation();
    AtomSet sw = a.algebra().apply({OpFamily::Transposition, 0, 1}, r);
    CHECK((sw & r).empty());
}

TEST_CASE("neat reduct") {
    SetAlgebra a({2}, 3, AlgebraClass::CA);
    // Nr_2 of the full 3-dim set algebra: elements independent of the last coordinate
    auto nr = neat_reduct(a.algebra(), 2);
    CHECK(nr.algebra.atom_count() == 4);  // pairs over a 2-element base
    for (const auto& orb : nr.orbit_of) {
        AtomSet c2 = a.algebra().apply({OpFamily::Cylindrifier, 2, 0}, orb);
        CHECK(c2 == orb);
    }
    // neat_reduct(B, dim) = B
    auto full = neat_reduct(a.algebra(), 3);
    CHECK(full.algebra.atom_count() == a.algebra().atom_count());
    // nesting collapses
    auto nr1_direct = neat_reduct(a.algebra(), 1);
    auto nr1_nested = neat_reduct(nr.algebra, 1);
    CHECK(nr1_direct.algebra.atom_count() == nr1_nested.algebra.atom_count());
}

TEST_CASE("signature reduct") {
    SetAlgebra a({2}, 3, AlgebraClass::QEA);
    FiniteBAO df = signature_reduct(a.algebra(), Signature::of(AlgebraClass::Df, 3));
    CHECK(df.structure().unary_ops().size() == 3);  // three cylindrifiers only
    FiniteBAO ca = signature_reduct(a.algebra(), Signature::of(AlgebraClass::CA, 3));
    auto rep = check_axioms(ca, AlgebraClass::CA);
    INFO(rep.summary());
    CHECK(rep.ok());
    CHECK_THROWS_AS(signature_reduct(df, Signature::of(AlgebraClass::QEA, 3)), InputError);
}

TEST_CASE("relativization") {
    SetAlgebra a({2}, 2, AlgebraClass::CA);
    auto whole = relativize(a.algebra(), a.algebra().top());
    CHECK(whole.rectangular);
    CHECK(whole.algebra.atom_count() == a.algebra().atom_count());

    AtomSet d01 = a.algebra().diagonal(0, 1);
    CHECK_FALSE(is_rectangular(a.algebra(), d01));
    auto rel = relativize(a.algebra(), d01);
    CHECK_FALSE(rel.rectangular);
    CHECK_THROWS_AS(relativize(a.algebra(), a.algebra().bot()), InputError);

    // a staircase unit in dimension 3 loses commutativity after relativizing
    SetAlgebra a3({2}, 3, AlgebraClass::CA);
    AtomSet stairs(a3.algebra().atom_count());
    stairs.insert(a3.tuple_id({0, 0, 0}));
    stairs.insert(a3.tuple_id({1, 0, 0}));
    stairs.insert(a3.tuple_id({1, 1, 0}));
    CHECK_FALSE(is_rectangular(a3.algebra(), stairs));
    auto rel3 = relativize(a3.algebra(), stairs);
    auto rep = check_axioms(rel3.algebra, AlgebraClass::CA);
    bool comm_failed = false;
    for (const auto& res : rep.failures())
        if (res.name.find("c0c1x") != std::string::npos) comm_failed = true;
    CHECK(comm_failed);
}

TEST_CASE("find_embedding basics") {
    AtomStructure m2 = maddux(2);
    FiniteBAO b(m2);
    auto self = find_embedding(b, b);
    REQUIRE(self.has_value());
    for (AtomId a = 0; a < b.atom_count(); ++a) CHECK(self->image[a].count() == 1);

    FiniteBAO small(maddux(1));
    FiniteBAO big(maddux(2));
    CHECK_FALSE(find_embedding(big, small).has_value());
}

TEST_CASE("sc words") {
    auto hat = sc_word_map({}, 3);
    for (uint32_t i = 0; i < 3; ++i) CHECK(hat[i] == i);

    auto c1 = sc_word_map({{ScToken::Kind::Cyl, 1, 0}}, 3);
    CHECK(c1[0] == 0);
    CHECK_FALSE(c1[1].has_value());
    CHECK(c1[2] == 2);

    // oracle: word action on rectangles in a 3-dimensional set algebra.
    // The induced partial map describes the action exactly for words whose
    // cylindrifier tokens all apply before the substitution tokens (string
    // shape [s-tokens][c-tokens]); for arbitrary words a substitution can
    // collapse two constraints into an empty intersection before a later
    // c_i discards them, so only the inclusion acted <= predicted survives.
    SetAlgebra a({3}, 3, AlgebraClass::QEA);
    std::mt19937_64 rng(99);
    auto transport = [&](const ScWord& w, const std::vector<AtomSet>& comp) {
        auto pm = sc_word_map(w, 3);
        AtomSet predicted(a.algebra().atom_count());
        for (AtomId t = 0; t < a.algebra().atom_count(); ++t) {
            auto tup = a.tuple_of(t);
            bool in = true;
            for (uint32_t j = 0; j < 3 && in; ++j)
                if (pm[j].has_value()) in = comp[j].contains(tup[*pm[j]]);
            if (in) predicted.insert(t);
        }
        return predicted;
    };
    auto act = [&](const ScWord& w, const AtomSet& rect) {
        AtomSet acted = rect;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            if (it->kind == ScToken::Kind::Subst)
                acted = a.algebra().apply({OpFamily::Replacement, it->i, it->j}, acted);
            else
                acted = a.algebra().apply({OpFamily::Cylindrifier, it->i, 0}, acted);
        }
        return acted;
    };
    for (int trial = 0; trial < 400; ++trial) {
        bool canonical = trial % 2 == 0;
        ScWord w;
        uint32_t subs = rng() % 3, cyls = rng() % 3;
        for (uint32_t t = 0; t < subs; ++t) {
            uint32_t i = rng() % 3, j = rng() % 3;
            w.push_back({ScToken::Kind::Subst, i, j});
        }
        for (uint32_t t = 0; t < cyls; ++t) w.push_back({ScToken::Kind::Cyl, (uint32_t)(rng() % 3), 0});
        if (!canonical) {
            std::shuffle(w.begin(), w.end(), rng);
        }
        std::vector<AtomSet> comp(3, AtomSet(3));
        for (uint32_t c = 0; c < 3; ++c) {
            comp[c].insert(rng() % 3);
            for (uint32_t v = 0; v < 3; ++v)
                if (rng() & 1) comp[c].insert(v);
        }
        AtomSet rect(a.algebra().atom_count());
        for (AtomId t = 0; t < a.algebra().atom_count(); ++t) {
            auto tup = a.tuple_of(t);
            bool in = true;
            for (uint32_t c = 0; c < 3; ++c) in = in && comp[c].contains(tup[c]);
            if (in) rect.insert(t);
        }
        AtomSet acted = act(w, rect);
        AtomSet predicted = transport(w, comp);
        if (canonical)
            CHECK(acted == predicted);
        else
            CHECK(acted.subset_of(predicted));
    }
}

TEST_CASE("substitution factorization covers the full transformation monoid") {
    SetAlgebra a({3}, 3, AlgebraClass::QEA);
    for (uint32_t code = 0; code < 27; ++code) {
        std::vector<uint32_t> tau{code % 3, (code / 3) % 3, (code / 9) % 3};
        // oracle: s_tau X = { s : s o tau in X }
        std::mt19937_64 rng(code);
        AtomSet x(a.algebra().atom_count());
        for (AtomId t = 0; t < a.algebra().atom_count(); ++t)
            if (rng() & 1) x.insert(t);
        AtomSet expect(a.algebra().atom_count());
        for (AtomId t = 0; t < a.algebra().atom_count(); ++t) {
            auto tup = a.tuple_of(t);
            std::vector<uint32_t> moved(3);
            for (uint32_t i = 0; i < 3; ++i) moved[i] = tup[tau[i]];
            if (x.contains(a.tuple_id(moved))) expect.insert(t);
        }
        CHECK(a.algebra().substitution(tau, x) == expect);
    }
}

TEST_CASE("kappa and psi recursions") {
    CHECK(kappa(5, 0) == 0);
    CHECK(kappa(0, 0) == 0);
    CHECK(kappa(2, 1) == 1);
    CHECK(kappa(2, 2) == 3);
    CHECK(psi(3, 1) == 4);
    for (uint64_t n = 2; n < 6; ++n) CHECK(psi(n, 0) == 1);
    CHECK_THROWS_AS(kappa(1000000, 1000), BudgetError);
}
