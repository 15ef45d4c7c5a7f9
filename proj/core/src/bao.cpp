#include "cylkit/bao.hpp"

#include <algorithm>

namespace cylkit {

FiniteBAO::FiniteBAO(AtomStructure s) : s_(std::move(s)) {}

std::vector<FiniteBAO::Element> FiniteBAO::atoms() const {
    std::vector<Element> v;
    v.reserve(s_.atom_count());
    for (AtomId a = 0; a < s_.atom_count(); ++a) v.push_back(atom(a));
    return v;
}

FiniteBAO::Element FiniteBAO::diagonal(uint32_t i, uint32_t j) const {
    if (i == j) return top();
    return s_.diagonal(i, j);
}

FiniteBAO::Element FiniteBAO::apply(UnaryOp op, const Element& x) const {
    if (op.family == OpFamily::Replacement && op.i == op.j) return x;
    if (op.family == OpFamily::Transposition && op.i == op.j) return x;
    if (op.family == OpFamily::Transposition && op.i > op.j)
        return s_.apply_unary({op.family, op.j, op.i}, x);
    if (!s_.has_unary(op) && op.family == OpFamily::Replacement &&
        s_.signature().diagonals && s_.has_unary({OpFamily::Cylindrifier, op.i, 0})) {
        // CA-definable replacement: s_i^j x = c_i(d_ij . x)
        return apply({OpFamily::Cylindrifier, op.i, 0}, meet(diagonal(op.i, op.j), x));
    }
    return s_.apply_unary(op, x);
}

std::vector<UnaryOp> factor_substitution(const std::vector<uint32_t>& tau) {
    uint32_t n = static_cast<uint32_t>(tau.size());
    std::vector<uint32_t> t = tau;
    std::vector<UnaryOp> reps;  // peeled replacements, first peeled first

    // peel replacements while t is non-injective: t = t' o [i/j], t'(i) := unused
    for (;;) {
        std::vector<int> preimage_count(n, 0);
        for (uint32_t x = 0; x < n; ++x) preimage_count[t[x]]++;
        uint32_t i = n, j = n, unused = n;
        for (uint32_t v = 0; v < n; ++v)
            if (preimage_count[v] == 0) unused = v;
        for (uint32_t x = 0; x < n && i == n; ++x)
            for (uint32_t y = x + 1; y < n && i == n; ++y)
                if (t[x] == t[y]) {
                    i = x;
                    j = y;
                }
        if (i == n) break;  // injective now
        reps.push_back({OpFamily::Replacement, i, j});
        t[i] = unused;
    }
    // t is now a permutation p with tau = p o reps_m o ... o reps_1.
    // cycle (a1 a2 ... ak) = (a1 ak) o (a1 ak-1) o ... o (a1 a2)
    std::vector<UnaryOp> trans;
    std::vector<bool> seen(n, false);
    for (uint32_t x = 0; x < n; ++x) {
        if (seen[x] || t[x] == x) {
            seen[x] = true;
            continue;
        }
        std::vector<uint32_t> cycle{x};
        seen[x] = true;
        for (uint32_t y = t[x]; y != x; y = t[y]) {
            cycle.push_back(y);
            seen[y] = true;
        }
        for (size_t k = cycle.size() - 1; k >= 1; --k)
            trans.push_back({OpFamily::Transposition, std::min(cycle[0], cycle[k]),
                             std::max(cycle[0], cycle[k])});
    }
    // result list g1..gK with tau = g1 o g2 o ... o gK
    std::vector<UnaryOp> out = trans;
    for (auto it = reps.rbegin(); it != reps.rend(); ++it) out.push_back(*it);
    return out;
}

FiniteBAO::Element FiniteBAO::substitution(const std::vector<uint32_t>& tau, const Element& x) const {
    Element r = x;
    auto gens = factor_substitution(tau);
    // s_tau = s_{g1} s_{g2} ... s_{gk} applied right to left on x
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) r = apply(*it, r);
    return r;
}

AtomStructure atom_structure_of(const FiniteBAO& b) {
    const AtomStructure& s = b.structure();
    if (s.kind() == AtomStructure::Kind::RelationAlgebra) {
        AtomStructure out = AtomStructure::relation_algebra(s.atom_names());
        out.set_identity(s.identity());
        std::vector<AtomId> conv(s.atom_count());
        for (AtomId a = 0; a < s.atom_count(); ++a) {
            AtomSet c = b.converse(b.atom(a));
            conv[a] = c.members().at(0);
        }
        out.set_converse(conv);
        for (AtomId a = 0; a < s.atom_count(); ++a)
            for (AtomId x = 0; x < s.atom_count(); ++x) {
                AtomSet comp = b.compose(b.atom(a), b.atom(x));
                comp.for_each([&](AtomId c) { out.set_consistent(a, x, c); });
            }
        return out;
    }
    AtomStructure out = AtomStructure::cylindric(s.signature(), s.atom_names());
    const auto& sig = s.signature();
    if (sig.diagonals)
        for (uint32_t i = 0; i < sig.dimension; ++i)
            for (uint32_t j = i + 1; j < sig.dimension; ++j) {
                AtomSet d(s.atom_count());
                for (AtomId a = 0; a < s.atom_count(); ++a)
                    if (b.diagonal(i, j).contains(a)) d.insert(a);
                out.set_diagonal(i, j, d);
            }
    for (const auto& op : s.unary_ops()) {
        std::vector<AtomSet> rows;
        rows.reserve(s.atom_count());
        for (AtomId x = 0; x < s.atom_count(); ++x) rows.push_back(b.apply(op, b.atom(x)));
        out.set_unary_rows(op, std::move(rows));
    }
    return out;
}

}  // namespace cylkit
