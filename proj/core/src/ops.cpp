#include "cylkit/ops.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cylkit {

bool Subalgebra::contains(const AtomSet& x) const {
    for (const auto& blk : blocks)
        if (blk.intersects(x) && !blk.subset_of(x)) return false;
    return true;
}

Subalgebra generate_subalgebra(const FiniteBAO& b, const std::vector<AtomSet>& gens,
                               uint64_t max_blocks) {
    std::vector<AtomSet> blocks{b.top()};
    auto refine = [&](const AtomSet& y) {
        bool changed = false;
        std::vector<AtomSet> next;
        for (const auto& blk : blocks) {
            AtomSet in = blk & y, out = blk - y;
            if (!in.empty() && !out.empty()) {
                next.push_back(in);
                next.push_back(out);
                changed = true;
            } else {
                next.push_back(blk);
            }
        }
        blocks = std::move(next);
        if (blocks.size() > max_blocks)
            throw BudgetError("generate_subalgebra: partition exceeds " + std::to_string(max_blocks));
        return changed;
    };

    const auto& s = b.structure();
    if (s.kind() == AtomStructure::Kind::RelationAlgebra) {
        refine(b.identity());
    } else if (s.signature().diagonals) {
        for (uint32_t i = 0; i < s.signature().dimension; ++i)
            for (uint32_t j = i + 1; j < s.signature().dimension; ++j) refine(b.diagonal(i, j));
    }
    for (const auto& g : gens) refine(g);

    auto ops = s.kind() == AtomStructure::Kind::Cylindric ? s.unary_ops() : std::vector<UnaryOp>{};
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<AtomSet> snapshot = blocks;
        for (const auto& blk : snapshot) {
            for (const auto& op : ops) changed |= refine(b.apply(op, blk));
            if (s.kind() == AtomStructure::Kind::RelationAlgebra) {
                changed |= refine(b.converse(blk));
                for (const auto& blk2 : snapshot) changed |= refine(b.compose(blk, blk2));
            }
        }
    }
    Subalgebra out;
    out.blocks = std::move(blocks);
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

NeatReduct neat_reduct(const FiniteBAO& b, uint32_t n) {
    const AtomStructure& s = b.structure();
    if (s.kind() != AtomStructure::Kind::Cylindric || !s.signature().cylindrifiers)
        throw InputError("neat_reduct: needs a cylindric-style algebra");
    uint32_t m = s.signature().dimension;
    if (n > m) throw InputError("neat_reduct: n > dimension");
    uint32_t na = s.atom_count();

    // orbits of the symmetric closure of all c_i, n <= i < m
    std::vector<uint32_t> comp(na);
    for (uint32_t a = 0; a < na; ++a) comp[a] = a;
    std::function<uint32_t(uint32_t)> find = [&](uint32_t a) -> uint32_t {
        while (comp[a] != a) a = comp[a] = comp[comp[a]];
        return a;
    };
    auto unite = [&](uint32_t a, uint32_t c) { comp[find(a)] = find(c); };
    for (uint32_t i = n; i < m; ++i) {
        const auto& rows = s.unary_rows({OpFamily::Cylindrifier, i, 0});
        for (AtomId bb = 0; bb < na; ++bb) rows[bb].for_each([&](AtomId a) { unite(a, bb); });
    }
    std::vector<uint32_t> root_to_orbit(na, na);
    std::vector<AtomSet> orbit_sets;
    std::vector<std::string> names;
    for (AtomId a = 0; a < na; ++a) {
        uint32_t r = find(a);
        if (root_to_orbit[r] == na) {
            root_to_orbit[r] = static_cast<uint32_t>(orbit_sets.size());
            orbit_sets.push_back(AtomSet(na));
            names.push_back("o" + std::to_string(orbit_sets.size() - 1) + "{" + s.atom_name(a) + "}");
        }
        orbit_sets[root_to_orbit[r]].insert(a);
    }
    uint32_t no = static_cast<uint32_t>(orbit_sets.size());

    // closure verification: every retained operation maps orbit unions to orbit unions
    auto orbit_union_ok = [&](const AtomSet& x) {
        for (uint32_t o = 0; o < no; ++o)
            if (x.intersects(orbit_sets[o]) && !orbit_sets[o].subset_of(x)) return false;
        return true;
    };

    Signature sub = s.signature();
    sub.dimension = n;
    AtomStructure out = AtomStructure::cylindric(sub, names);
    if (sub.diagonals)
        for (uint32_t i = 0; i < n; ++i)
            for (uint32_t j = i + 1; j < n; ++j) {
                const AtomSet& d = s.diagonal(i, j);
                if (!orbit_union_ok(d))
                    throw InputError("neat_reduct: d_" + std::to_string(i) + std::to_string(j) +
                                     " is not a union of orbits");
                AtomSet nd(no);
                for (uint32_t o = 0; o < no; ++o)
                    if (orbit_sets[o].subset_of(d)) nd.insert(o);
                out.set_diagonal(i, j, nd);
            }
    for (const auto& op : s.unary_ops()) {
        if (op.i >= n || (op.family != OpFamily::Cylindrifier && op.j >= n)) continue;
        // rows[o] = op({o}) in the orbit structure
        std::vector<AtomSet> rows(no, AtomSet(no));
        for (uint32_t o = 0; o < no; ++o) {
            AtomSet img = b.apply(op, orbit_sets[o]);
            if (!orbit_union_ok(img))
                throw InputError("neat_reduct: " + op.name() + " image not closed on orbit " + names[o]);
            for (uint32_t p = 0; p < no; ++p)
                if (orbit_sets[p].subset_of(img)) rows[o].insert(p);
        }
        out.set_unary_rows(op, std::move(rows));
    }
    return NeatReduct{FiniteBAO(std::move(out)), std::move(orbit_sets)};
}

FiniteBAO signature_reduct(const FiniteBAO& b, const Signature& target) {
    const AtomStructure& s = b.structure();
    if (!target.sub_signature_of(s.signature()))
        throw InputError("signature_reduct: target is not a sub-signature");
    AtomStructure out = AtomStructure::cylindric(target, s.atom_names());
    if (target.diagonals)
        for (uint32_t i = 0; i < target.dimension; ++i)
            for (uint32_t j = i + 1; j < target.dimension; ++j) out.set_diagonal(i, j, s.diagonal(i, j));
    for (const auto& op : s.unary_ops()) {
        bool keep = false;
        switch (op.family) {
            case OpFamily::Cylindrifier: keep = target.cylindrifiers; break;
            case OpFamily::Replacement: keep = target.replacements || target.full_substitutions; break;
            case OpFamily::Transposition: keep = target.transpositions || target.full_substitutions; break;
            default: break;
        }
        if (keep) out.set_unary_rows(op, s.unary_rows(op));
    }
    return FiniteBAO(std::move(out));
}

bool is_rectangular(const FiniteBAO& b, const AtomSet& x) {
    uint32_t n = b.structure().signature().dimension;
    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            AtomSet ci = b.apply({OpFamily::Cylindrifier, i, 0}, x);
            AtomSet cj = b.apply({OpFamily::Cylindrifier, j, 0}, x);
            if ((ci & cj) != x) return false;
        }
    return true;
}

RelativizeResult relativize(const FiniteBAO& b, const AtomSet& x) {
    if (x.empty()) throw InputError("relativize: x = 0");
    const AtomStructure& s = b.structure();
    std::vector<AtomId> atom_of = x.members();
    std::vector<std::string> names;
    std::vector<uint32_t> old_to_new(s.atom_count(), s.atom_count());
    for (size_t k = 0; k < atom_of.size(); ++k) {
        names.push_back(s.atom_name(atom_of[k]));
        old_to_new[atom_of[k]] = static_cast<uint32_t>(k);
    }
    uint32_t nn = static_cast<uint32_t>(atom_of.size());
    auto restrict_set = [&](const AtomSet& y) {
        AtomSet r(nn);
        y.for_each([&](AtomId a) {
            if (old_to_new[a] != s.atom_count()) r.insert(old_to_new[a]);
        });
        return r;
    };
    AtomStructure out = AtomStructure::cylindric(s.signature(), names);
    if (s.signature().diagonals)
        for (uint32_t i = 0; i < s.signature().dimension; ++i)
            for (uint32_t j = i + 1; j < s.signature().dimension; ++j)
                out.set_diagonal(i, j, restrict_set(s.diagonal(i, j) & x));
    for (const auto& op : s.unary_ops()) {
        const auto& rows = s.unary_rows(op);
        std::vector<AtomSet> nrows(nn, AtomSet(nn));
        for (uint32_t k = 0; k < nn; ++k) nrows[k] = restrict_set(rows[atom_of[k]] & x);
        out.set_unary_rows(op, std::move(nrows));
    }
    return RelativizeResult{FiniteBAO(std::move(out)), is_rectangular(b, x), std::move(atom_of)};
}

namespace {

struct EmbedSearch {
    const FiniteBAO& a;
    const FiniteBAO& b;
    uint32_t na, nb;
    std::vector<AtomSet> image;
    AtomSet used;
    uint64_t nodes = 0, max_nodes;

    EmbedSearch(const FiniteBAO& a_, const FiniteBAO& b_, uint64_t mn)
        : a(a_), b(b_), na(a_.atom_count()), nb(b_.atom_count()), used(b_.atom_count()), max_nodes(mn) {}

    bool type_compatible(AtomId aa, AtomId bb) const {
        const auto& sa = a.structure();
        const auto& sb = b.structure();
        if (sa.kind() == AtomStructure::Kind::RelationAlgebra)
            return sa.identity().contains(aa) == sb.identity().contains(bb);
        if (sa.signature().diagonals)
            for (uint32_t i = 0; i < sa.signature().dimension; ++i)
                for (uint32_t j = i + 1; j < sa.signature().dimension; ++j)
                    if (sa.diagonal(i, j).contains(aa) != sb.diagonal(i, j).contains(bb)) return false;
        return true;
    }

    bool partial_consistent(AtomId upto) {
        const auto& sa = a.structure();
        if (sa.kind() == AtomStructure::Kind::RelationAlgebra) {
            for (AtomId p = 0; p <= upto; ++p) {
                AtomId pc = sa.converse(p);
                if (pc <= upto && b.converse(image[p]) != image[pc]) return false;
                for (AtomId q = 0; q <= upto; ++q) {
                    AtomSet comp_a(na);
                    for (AtomId c = 0; c < na; ++c)
                        if (sa.consistent(p, q, c)) comp_a.insert(c);
                    bool all_assigned = true;
                    comp_a.for_each([&](AtomId c) { all_assigned = all_assigned && c <= upto; });
                    if (!all_assigned) continue;
                    AtomSet lhs = b.compose(image[p], image[q]);
                    AtomSet rhs(nb);
                    comp_a.for_each([&](AtomId c) { rhs |= image[c]; });
                    // all atoms assigned so far must reproduce composition exactly on
                    // the assigned part; full check happens at the end
                    if (!rhs.subset_of(lhs)) return false;
                }
            }
            return true;
        }
        for (const auto& op : sa.unary_ops()) {
            const auto& rows = sa.unary_rows(op);
            for (AtomId p = 0; p <= upto; ++p) {
                AtomSet img_a = rows[p];  // op({p}) in A
                AtomSet got(nb);
                bool complete = true;
                img_a.for_each([&](AtomId c) {
                    if (c <= upto)
                        got |= image[c];
                    else
                        complete = false;
                });
                AtomSet want = b.apply(op, image[p]);
                if (complete) {
                    if (got != want) return false;
                } else if (!got.subset_of(want)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool full_check(std::string& transcript) {
        std::ostringstream os;
        const auto& sa = a.structure();
        AtomSet all(nb);
        for (AtomId p = 0; p < na; ++p) {
            if (image[p].empty()) return false;
            if (image[p].intersects(all)) return false;
            all |= image[p];
        }
        if (all != b.top()) return false;
        os << "images partition the top element\n";
        if (sa.kind() == AtomStructure::Kind::RelationAlgebra) {
            AtomSet ida(nb);
            sa.identity().for_each([&](AtomId p) { ida |= image[p]; });
            if (ida != b.identity()) return false;
            for (AtomId p = 0; p < na; ++p)
                if (b.converse(image[p]) != image[sa.converse(p)]) return false;
            for (AtomId p = 0; p < na; ++p)
                for (AtomId q = 0; q < na; ++q) {
                    AtomSet rhs(nb);
                    for (AtomId c = 0; c < na; ++c)
                        if (sa.consistent(p, q, c)) rhs |= image[c];
                    if (b.compose(image[p], image[q]) != rhs) return false;
                }
            os << "identity, converse and composition verified on all atom pairs\n";
        } else {
            if (sa.signature().diagonals)
                for (uint32_t i = 0; i < sa.signature().dimension; ++i)
                    for (uint32_t j = i + 1; j < sa.signature().dimension; ++j) {
                        AtomSet da(nb);
                        sa.diagonal(i, j).for_each([&](AtomId p) { da |= image[p]; });
                        if (da != b.diagonal(i, j)) return false;
                    }
            for (const auto& op : sa.unary_ops()) {
                const auto& rows = sa.unary_rows(op);
                for (AtomId p = 0; p < na; ++p) {
                    AtomSet rhs(nb);
                    rows[p].for_each([&](AtomId c) { rhs |= image[c]; });
                    if (b.apply(op, image[p]) != rhs) return false;
                }
            }
            os << "diagonals and unary operators verified on all atoms\n";
        }
        transcript = os.str();
        return true;
    }

    bool assign(AtomId p, std::optional<Embedding>& out) {
        if (++nodes > max_nodes) throw BudgetError("find_embedding: search budget exceeded");
        if (p == na) {
            AtomSet all(nb);
            for (const auto& im : image) all |= im;
            if (all != b.top()) return false;
            std::string transcript;
            if (!full_check(transcript)) return false;
            out = Embedding{image, transcript};
            return true;
        }
        // candidate blocks: nonempty subsets of unused type-compatible atoms
        std::vector<AtomId> cands;
        for (AtomId bb = 0; bb < nb; ++bb)
            if (!used.contains(bb) && type_compatible(p, bb)) cands.push_back(bb);
        uint32_t slack = nb - na;  // blocks may exceed singletons only by the global slack
        uint32_t remaining_used = used.count();
        uint32_t max_block = std::min<uint32_t>(static_cast<uint32_t>(cands.size()),
                                                1 + slack - (remaining_used - p));
        for (uint32_t size = 1; size <= max_block; ++size) {
            std::vector<uint32_t> idx(size);
            std::function<bool(uint32_t, uint32_t)> choose = [&](uint32_t k, uint32_t start) -> bool {
                if (k == size) {
                    AtomSet block(nb);
                    for (uint32_t t = 0; t < size; ++t) block.insert(cands[idx[t]]);
                    image[p] = block;
                    for (uint32_t t = 0; t < size; ++t) used.insert(cands[idx[t]]);
                    bool ok = partial_consistent(p) && assign(p + 1, out);
                    if (!ok)
                        for (uint32_t t = 0; t < size; ++t) used.erase(cands[idx[t]]);
                    return ok;
                }
                for (uint32_t c = start; c < cands.size(); ++c) {
                    idx[k] = c;
                    if (choose(k + 1, c + 1)) return true;
                }
                return false;
            };
            if (choose(0, 0)) return true;
        }
        image[p] = AtomSet(nb);
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_embedding(const FiniteBAO& a, const FiniteBAO& b, uint64_t max_nodes) {
    if (a.structure().kind() != b.structure().kind()) return std::nullopt;
    if (a.atom_count() > b.atom_count()) return std::nullopt;
    EmbedSearch search(a, b, max_nodes);
    search.image.assign(a.atom_count(), AtomSet(b.atom_count()));
    std::optional<Embedding> out;
    search.assign(0, out);
    return out;
}

bool atom_structure_roundtrip_ok(const AtomStructure& s) {
    FiniteBAO cm{s};
    AtomStructure back = atom_structure_of(cm);
    return back == s;
}

}  // namespace cylkit
