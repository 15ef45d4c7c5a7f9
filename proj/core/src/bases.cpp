#include "cylkit/bases.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace cylkit {

bool MatrixSet::contains(const BasicMatrix& f) const {
    return std::binary_search(mats.begin(), mats.end(), f);
}

size_t MatrixSet::index_of(const BasicMatrix& f) const {
    auto it = std::lower_bound(mats.begin(), mats.end(), f);
    if (it == mats.end() || *it != f) throw InputError("matrix not in set");
    return static_cast<size_t>(it - mats.begin());
}

AtomId matrix_entry(const AtomStructure& ra, const BasicMatrix& f, uint32_t x, uint32_t y) {
    if (x == y) throw InputError("diagonal entry is implicit");
    AtomId stored = f[matrix_entry_index(x, y)];
    return x < y ? stored : ra.converse(stored);
}

namespace {

AtomId single_identity(const AtomStructure& ra) {
    if (ra.kind() != AtomStructure::Kind::RelationAlgebra)
        throw InputError("basic matrices need a relation-algebra structure");
    auto ids = ra.identity().members();
    if (ids.size() != 1)
        throw InputError("basic matrices are implemented for a single identity atom");
    return ids[0];
}

// triangle condition for the unordered triple {x,y,z}: f(x,y) <= f(x,z);f(z,y)
bool triangle_ok(const AtomStructure& ra, const BasicMatrix& f, uint32_t x, uint32_t y,
                 uint32_t z) {
    return ra.consistent(matrix_entry(ra, f, x, z), matrix_entry(ra, f, z, y),
                         matrix_entry(ra, f, x, y));
}

}  // namespace

MatrixSet enumerate_basic_matrices(const AtomStructure& ra, uint32_t m, uint64_t max_matrices) {
    AtomId id_atom = single_identity(ra);
    (void)id_atom;
    uint32_t entries = m * (m - 1) / 2;
    long double estimate = 1;
    for (uint32_t e = 0; e < entries; ++e) estimate *= ra.atom_count();
    if (estimate > 1e15)
        throw BudgetError("enumerate_basic_matrices: search space too large");

    MatrixSet out;
    out.m = m;
    BasicMatrix f(entries, 0);
    // assign entries (x,y) in y-major order; check triangles with both ends set
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t x, uint32_t y) {
        if (y == m) {
            out.mats.push_back(f);
            if (out.mats.size() > max_matrices)
                throw BudgetError("enumerate_basic_matrices: more than " +
                                  std::to_string(max_matrices) + " matrices");
            return;
        }
        uint32_t nx = x + 1 == y ? 0 : x + 1;
        uint32_t ny = x + 1 == y ? y + 1 : y;
        for (AtomId a = 0; a < ra.atom_count(); ++a) {
            f[matrix_entry_index(x, y)] = a;
            bool ok = true;
            for (uint32_t z = 0; z < y && ok; ++z)
                if (z != x) ok = triangle_ok(ra, f, x, y, z);
            if (ok) rec(nx, ny);
        }
    };
    if (m >= 2)
        rec(0, 1);
    else
        out.mats.push_back(f);
    std::sort(out.mats.begin(), out.mats.end());
    return out;
}

BasisReport is_cylindric_basis(const AtomStructure& ra, const MatrixSet& m, bool all_triangles) {
    BasisReport rep;
    uint32_t n = m.m;
    if (n < 3) throw InputError("cylindric basis check needs dimension >= 3");

    // (i): every consistent a <= b;c realized by some f with
    // f(0,1)=a, f(0,2)=b, f(2,1)=c
    std::vector<std::array<uint32_t, 3>> position_triples{{0, 1, 2}};
    if (all_triangles) {
        position_triples.clear();
        for (uint32_t x = 0; x < n; ++x)
            for (uint32_t y = 0; y < n; ++y)
                for (uint32_t z = 0; z < n; ++z)
                    if (x != y && y != z && x != z) position_triples.push_back({x, y, z});
    }
    for (const auto& pos : position_triples) {
        uint32_t x = pos[0], y = pos[1], z = pos[2];
        std::unordered_set<uint64_t> seen;
        for (const auto& f : m.mats) {
            uint64_t key = matrix_entry(ra, f, x, y);
            key = key * ra.atom_count() + matrix_entry(ra, f, x, z);
            key = key * ra.atom_count() + matrix_entry(ra, f, z, y);
            seen.insert(key);
        }
        for (AtomId b = 0; b < ra.atom_count(); ++b)
            for (AtomId c = 0; c < ra.atom_count(); ++c)
                for (AtomId a = 0; a < ra.atom_count(); ++a) {
                    if (!ra.consistent(b, c, a)) continue;  // a <= b;c
                    uint64_t key = (uint64_t)a * ra.atom_count() + b;
                    key = key * ra.atom_count() + c;
                    if (!seen.count(key)) {
                        rep.triangle_condition = false;
                        rep.witness = "unrealized triangle a=" + ra.atom_name(a) + " b=" +
                                      ra.atom_name(b) + " c=" + ra.atom_name(c);
                        return rep;
                    }
                }
    }

    // (ii): for f =_xy g there is h with f =_x h =_y g.  h is forced to agree
    // with f off x and with g off y, so everything except h(x,y) is pinned.
    auto key_avoiding = [&](const BasicMatrix& f, uint32_t x) {
        std::vector<AtomId> key;
        for (uint32_t v = 1; v < n; ++v)
            for (uint32_t u = 0; u < v; ++u)
                if (u != x && v != x) key.push_back(f[matrix_entry_index(u, v)]);
        return key;
    };
    auto key_avoiding2 = [&](const BasicMatrix& f, uint32_t x, uint32_t y) {
        std::vector<AtomId> key;
        for (uint32_t v = 1; v < n; ++v)
            for (uint32_t u = 0; u < v; ++u)
                if (u != x && v != x && u != y && v != y) key.push_back(f[matrix_entry_index(u, v)]);
        return key;
    };
    // wildcard the (x,y) slot
    auto key_wild = [&](const BasicMatrix& f, uint32_t x, uint32_t y) {
        BasicMatrix k = f;
        k[matrix_entry_index(x, y)] = ra.atom_count();
        return k;
    };
    for (uint32_t x = 0; x < n; ++x)
        for (uint32_t y = 0; y < n; ++y) {
            if (x == y) continue;
            std::map<BasicMatrix, bool> wild;
            for (const auto& h : m.mats) wild[key_wild(h, x, y)] = true;
            std::map<std::vector<AtomId>, std::vector<size_t>> groups;
            for (size_t idx = 0; idx < m.mats.size(); ++idx)
                groups[key_avoiding2(m.mats[idx], x, y)].push_back(idx);
            for (const auto& [_, members] : groups) {
                // distinct (f off-x pattern, g off-y pattern) combinations
                std::unordered_set<uint64_t> done;
                for (size_t fi : members)
                    for (size_t gi : members) {
                        const auto& f = m.mats[fi];
                        const auto& g = m.mats[gi];
                        BasicMatrix h = f;
                        for (uint32_t v = 0; v < n; ++v) {
                            if (v == x || v == y) continue;
                            h[matrix_entry_index(x, v)] = g[matrix_entry_index(x, v)];
                        }
                        h[matrix_entry_index(x, y)] = ra.atom_count();
                        size_t hh = std::hash<std::string_view>{}(std::string_view(
                            reinterpret_cast<const char*>(h.data()), h.size() * sizeof(AtomId)));
                        if (!done.insert(hh).second) continue;
                        if (!wild.count(h)) {
                            rep.amalgamation = false;
                            rep.witness = "no amalgam for a pair with x=" + std::to_string(x) +
                                          " y=" + std::to_string(y);
                            return rep;
                        }
                    }
            }
        }
    return rep;
}

BasicMatrix matrix_apply_transposition(const AtomStructure& ra, const BasicMatrix& f, uint32_t m,
                                       uint32_t i, uint32_t j) {
    BasicMatrix g(f.size());
    auto tr = [&](uint32_t v) { return v == i ? j : v == j ? i : v; };
    for (uint32_t v = 1; v < m; ++v)
        for (uint32_t u = 0; u < v; ++u) {
            uint32_t tu = tr(u), tv = tr(v);
            // (f tau)(u,v) = f(tau u, tau v), re-anchored to u < v
            AtomId val = matrix_entry(ra, f, tu, tv);
            g[matrix_entry_index(u, v)] = val;
        }
    return g;
}

AtomStructure algebra_from_basis(const AtomStructure& ra, const MatrixSet& m, uint64_t max_atoms) {
    uint32_t n = m.m;
    uint32_t na = static_cast<uint32_t>(m.mats.size());
    check_budget(na, max_atoms, "algebra_from_basis atom count");
    std::vector<std::string> names;
    names.reserve(na);
    for (const auto& f : m.mats) {
        std::string s = "M";
        for (auto e : f) s += "_" + ra.atom_name(e);
        names.push_back(s);
    }
    AtomStructure s = AtomStructure::cylindric(Signature::of(AlgebraClass::QEA, n), names);

    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            AtomSet d(na);
            for (AtomId idx = 0; idx < na; ++idx)
                if (ra.identity().contains(m.mats[idx][matrix_entry_index(i, j)])) d.insert(idx);
            s.set_diagonal(i, j, d);
        }

    std::vector<std::vector<AtomSet>> cyl_rows(n);
    for (uint32_t i = 0; i < n; ++i) {
        std::map<std::vector<AtomId>, std::vector<AtomId>> groups;
        for (AtomId idx = 0; idx < na; ++idx) {
            std::vector<AtomId> key;
            for (uint32_t v = 1; v < n; ++v)
                for (uint32_t u = 0; u < v; ++u)
                    if (u != i && v != i) key.push_back(m.mats[idx][matrix_entry_index(u, v)]);
            groups[key].push_back(idx);
        }
        std::vector<AtomSet> rows(na, AtomSet(na));
        for (const auto& [_, members] : groups) {
            AtomSet set(na);
            for (AtomId mm : members) set.insert(mm);
            for (AtomId mm : members) rows[mm] = set;
        }
        cyl_rows[i] = rows;
        s.set_unary_rows({OpFamily::Cylindrifier, i, 0}, std::move(rows));
    }

    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = i + 1; j < n; ++j) {
            std::vector<AtomSet> rows(na, AtomSet(na));
            for (AtomId idx = 0; idx < na; ++idx) {
                BasicMatrix g = matrix_apply_transposition(ra, m.mats[idx], n, i, j);
                rows[idx].insert(static_cast<AtomId>(m.index_of(g)));
            }
            s.set_unary_rows({OpFamily::Transposition, i, j}, std::move(rows));
        }

    for (uint32_t i = 0; i < n; ++i)
        for (uint32_t j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<AtomSet> rows(na, AtomSet(na));
            for (AtomId idx = 0; idx < na; ++idx)
                if (ra.identity().contains(m.mats[idx][matrix_entry_index(i, j)]))
                    rows[idx] = cyl_rows[i][idx];
            s.set_unary_rows({OpFamily::Replacement, i, j}, std::move(rows));
        }
    return s;
}

}  // namespace cylkit
