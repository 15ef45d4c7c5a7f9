#include "cylkit/atom_structure.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace cylkit {

std::string to_string(AlgebraClass c) {
    switch (c) {
        case AlgebraClass::Df: return "Df";
        case AlgebraClass::Sc: return "Sc";
        case AlgebraClass::CA: return "CA";
        case AlgebraClass::PA: return "PA";
        case AlgebraClass::PEA: return "PEA";
        case AlgebraClass::QA: return "QA";
        case AlgebraClass::QEA: return "QEA";
    }
    return "?";
}

AlgebraClass algebra_class_from_string(const std::string& s) {
    if (s == "Df" || s == "df") return AlgebraClass::Df;
    if (s == "Sc" || s == "sc") return AlgebraClass::Sc;
    if (s == "CA" || s == "ca") return AlgebraClass::CA;
    if (s == "PA" || s == "pa") return AlgebraClass::PA;
    if (s == "PEA" || s == "pea") return AlgebraClass::PEA;
    if (s == "QA" || s == "qa") return AlgebraClass::QA;
    if (s == "QEA" || s == "qea") return AlgebraClass::QEA;
    throw InputError("unknown algebra class: " + s);
}

std::string UnaryOp::name() const {
    std::ostringstream os;
    switch (family) {
        case OpFamily::Cylindrifier: os << "c_" << i; break;
        case OpFamily::Replacement: os << "s_" << i << "^" << j; break;
        case OpFamily::Transposition: os << "s_[" << i << "," << j << "]"; break;
        default: os << "op?"; break;
    }
    return os.str();
}

std::string ValidationReport::to_string() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& e : issues) os << e.code << ": " << e.witness << "\n";
    return os.str();
}

AtomStructure AtomStructure::cylindric(Signature sig, std::vector<std::string> atom_names) {
    AtomStructure s;
    s.kind_ = Kind::Cylindric;
    s.sig_ = sig;
    s.names_ = std::move(atom_names);
    return s;
}

AtomStructure AtomStructure::relation_algebra(std::vector<std::string> atom_names) {
    AtomStructure s;
    s.kind_ = Kind::RelationAlgebra;
    s.names_ = std::move(atom_names);
    s.identity_ = AtomSet(static_cast<uint32_t>(s.names_.size()));
    s.converse_.resize(s.names_.size());
    for (AtomId a = 0; a < s.names_.size(); ++a) s.converse_[a] = a;
    s.triples_.assign((s.names_.size() * s.names_.size() * s.names_.size() + 63) / 64, 0);
    return s;
}

std::optional<AtomId> AtomStructure::atom_id(const std::string& name) const {
    for (AtomId a = 0; a < names_.size(); ++a)
        if (names_[a] == name) return a;
    return std::nullopt;
}

void AtomStructure::set_diagonal(uint32_t i, uint32_t j, AtomSet s) {
    if (i > j) std::swap(i, j);
    diagonals_[{i, j}] = std::move(s);
}

const AtomSet& AtomStructure::diagonal(uint32_t i, uint32_t j) const {
    if (i > j) std::swap(i, j);
    static const AtomSet empty;
    auto it = diagonals_.find({i, j});
    if (it == diagonals_.end()) throw InputError("diagonal d_" + std::to_string(i) + std::to_string(j) + " not present");
    return it->second;
}

void AtomStructure::set_unary_rows(UnaryOp op, std::vector<AtomSet> rows) {
    unary_[op] = std::move(rows);
}

void AtomStructure::add_unary_pair(UnaryOp op, AtomId a, AtomId b) {
    auto it = unary_.find(op);
    if (it == unary_.end()) {
        std::vector<AtomSet> rows(atom_count(), AtomSet(atom_count()));
        it = unary_.emplace(op, std::move(rows)).first;
    }
    it->second[b].insert(a);
}

bool AtomStructure::has_unary(UnaryOp op) const { return unary_.count(op) > 0; }

const std::vector<AtomSet>& AtomStructure::unary_rows(UnaryOp op) const {
    auto it = unary_.find(op);
    if (it == unary_.end()) throw InputError("unary relation " + op.name() + " not present");
    return it->second;
}

std::vector<UnaryOp> AtomStructure::unary_ops() const {
    std::vector<UnaryOp> v;
    for (const auto& [op, _] : unary_) v.push_back(op);
    return v;
}

AtomSet AtomStructure::apply_unary(UnaryOp op, const AtomSet& x) const {
    const auto& rows = unary_rows(op);
    AtomSet r(atom_count());
    x.for_each([&](AtomId b) { r |= rows[b]; });
    return r;
}

void AtomStructure::clear_triples() {
    triples_.assign((names_.size() * names_.size() * names_.size() + 63) / 64, 0);
}

void AtomStructure::set_consistent(AtomId a, AtomId b, AtomId c, bool v) {
    size_t idx = triple_index(a, b, c);
    if (v)
        triples_[idx >> 6] |= uint64_t{1} << (idx & 63);
    else
        triples_[idx >> 6] &= ~(uint64_t{1} << (idx & 63));
}

bool AtomStructure::consistent(AtomId a, AtomId b, AtomId c) const {
    size_t idx = triple_index(a, b, c);
    return (triples_[idx >> 6] >> (idx & 63)) & 1;
}

AtomSet AtomStructure::compose(const AtomSet& x, const AtomSet& y) const {
    AtomSet r(atom_count());
    x.for_each([&](AtomId a) {
        y.for_each([&](AtomId b) {
            for (AtomId c = 0; c < atom_count(); ++c)
                if (consistent(a, b, c)) r.insert(c);
        });
    });
    return r;
}

AtomSet AtomStructure::converse_set(const AtomSet& x) const {
    AtomSet r(atom_count());
    x.for_each([&](AtomId a) { r.insert(converse_[a]); });
    return r;
}

uint64_t AtomStructure::consistent_triple_count() const {
    uint64_t c = 0;
    for (auto w : triples_) c += __builtin_popcountll(w);
    return c;
}

namespace {
// The six Peircean transforms of (a,b,c), read as c <= a;b.
std::array<std::array<AtomId, 3>, 6> peircean_orbit(const std::vector<AtomId>& conv, AtomId a,
                                                    AtomId b, AtomId c) {
    return {{{a, b, c},
             {conv[a], c, b},
             {c, conv[b], a},
             {conv[b], conv[a], conv[c]},
             {conv[c], a, conv[b]},
             {b, conv[c], conv[a]}}};
}
}  // namespace

void AtomStructure::set_consistent_from_forbidden(
    const std::vector<std::array<AtomId, 3>>& forbidden) {
    size_t n = names_.size();
    std::vector<uint64_t> bad((n * n * n + 63) / 64, 0);
    auto mark = [&](AtomId a, AtomId b, AtomId c) {
        size_t idx = triple_index(a, b, c);
        bad[idx >> 6] |= uint64_t{1} << (idx & 63);
    };
    for (const auto& t : forbidden)
        for (const auto& u : peircean_orbit(converse_, t[0], t[1], t[2])) mark(u[0], u[1], u[2]);

    // identity discipline: (Id, b, c) consistent iff b = c, and transforms
    for (AtomId e = 0; e < n; ++e) {
        if (!identity_.contains(e)) continue;
        for (AtomId b = 0; b < n; ++b)
            for (AtomId c = 0; c < n; ++c)
                if (b != c)
                    for (const auto& u : peircean_orbit(converse_, e, b, c)) mark(u[0], u[1], u[2]);
    }

    clear_triples();
    for (size_t i = 0; i < triples_.size(); ++i) triples_[i] = ~bad[i];
    size_t total = n * n * n;
    if (total % 64) triples_.back() &= (uint64_t{1} << (total % 64)) - 1;
}

bool AtomStructure::triples_peircean_closed() const {
    uint32_t n = atom_count();
    for (AtomId a = 0; a < n; ++a)
        for (AtomId b = 0; b < n; ++b)
            for (AtomId c = 0; c < n; ++c) {
                bool v = consistent(a, b, c);
                for (const auto& u : peircean_orbit(converse_, a, b, c))
                    if (consistent(u[0], u[1], u[2]) != v) return false;
            }
    return true;
}

ValidationReport AtomStructure::validate() const {
    ValidationReport rep;
    uint32_t n = atom_count();
    if (kind_ == Kind::RelationAlgebra) {
        for (AtomId a = 0; a < n; ++a) {
            if (converse_[a] >= n) {
                rep.issues.push_back({"converse-range", names_[a]});
                continue;
            }
            if (converse_[converse_[a]] != a)
                rep.issues.push_back({"converse-not-involution", names_[a]});
        }
        if (!triples_peircean_closed())
            rep.issues.push_back({"triples-not-peircean-closed", "some (a,b,c)"});
        // (Id, b, c) with b != c must be excluded
        identity_.for_each([&](AtomId e) {
            for (AtomId b = 0; b < n; ++b)
                for (AtomId c = 0; c < n; ++c)
                    if (b != c && consistent(e, b, c))
                        rep.issues.push_back({"identity-triple",
                                              "(" + names_[e] + "," + names_[b] + "," + names_[c] + ")"});
        });
        if (identity_.empty()) rep.issues.push_back({"identity-empty", ""});
    } else {
        if (sig_.dimension < 2) rep.issues.push_back({"dimension", std::to_string(sig_.dimension)});
        for (const auto& [op, rows] : unary_) {
            if (rows.size() != n) {
                rep.issues.push_back({"relation-size", op.name()});
                continue;
            }
            if (op.family == OpFamily::Cylindrifier) {
                // complex algebra must satisfy c_i x >= x and c_i c_i x = c_i x
                for (AtomId b = 0; b < n; ++b)
                    if (!rows[b].contains(b)) {
                        rep.issues.push_back({"cylindrifier-not-reflexive",
                                              op.name() + " at " + names_[b]});
                        break;
                    }
                bool trans = true;
                for (AtomId b = 0; b < n && trans; ++b)
                    rows[b].for_each([&](AtomId a) {
                        if (trans && !rows[a].subset_of(rows[b])) trans = false;
                    });
                if (!trans)
                    rep.issues.push_back({"cylindrifier-not-transitive", op.name()});
            }
        }
    }
    return rep;
}

bool AtomStructure::operator==(const AtomStructure& o) const {
    return kind_ == o.kind_ && sig_ == o.sig_ && names_ == o.names_ &&
           diagonals_ == o.diagonals_ && unary_ == o.unary_ &&
           identity_ == o.identity_ && converse_ == o.converse_ && triples_ == o.triples_;
}

namespace {

bool extend_iso(const AtomStructure& s, const AtomStructure& t, std::vector<AtomId>& map,
                std::vector<bool>& used, AtomId next) {
    uint32_t n = s.atom_count();
    if (next == n) return true;
    for (AtomId cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        map[next] = cand;
        used[cand] = true;
        bool ok = true;
        if (s.kind() == AtomStructure::Kind::RelationAlgebra) {
            ok = s.identity().contains(next) == t.identity().contains(cand);
            if (ok && s.converse(next) <= next)
                ok = map[s.converse(next)] == t.converse(cand);
            for (AtomId a = 0; a <= next && ok; ++a)
                for (AtomId b = 0; b <= next && ok; ++b)
                    for (AtomId c = 0; c <= next && ok; ++c)
                        if (s.consistent(a, b, c) != t.consistent(map[a], map[b], map[c])) ok = false;
        } else {
            const auto& sig = s.signature();
            for (uint32_t i = 0; i < sig.dimension && ok && sig.diagonals; ++i)
                for (uint32_t j = i + 1; j < sig.dimension && ok; ++j)
                    if (s.diagonal(i, j).contains(next) != t.diagonal(i, j).contains(cand)) ok = false;
            for (const auto& op : s.unary_ops()) {
                if (!ok) break;
                const auto& rs = s.unary_rows(op);
                const auto& rt = t.unary_rows(op);
                for (AtomId a = 0; a <= next && ok; ++a)
                    for (AtomId b = 0; b <= next && ok; ++b)
                        if (rs[b].contains(a) != rt[map[b]].contains(map[a])) ok = false;
            }
        }
        if (ok && extend_iso(s, t, map, used, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

AtomStructure permute_atoms(const AtomStructure& s, const std::vector<AtomId>& perm) {
    uint32_t n = s.atom_count();
    std::vector<std::string> names(n);
    for (AtomId a = 0; a < n; ++a) names[perm[a]] = s.atom_name(a);
    auto map_set = [&](const AtomSet& x) {
        AtomSet r(n);
        x.for_each([&](AtomId a) { r.insert(perm[a]); });
        return r;
    };
    if (s.kind() == AtomStructure::Kind::RelationAlgebra) {
        AtomStructure out = AtomStructure::relation_algebra(names);
        out.set_identity(map_set(s.identity()));
        std::vector<AtomId> conv(n);
        for (AtomId a = 0; a < n; ++a) conv[perm[a]] = perm[s.converse(a)];
        out.set_converse(conv);
        for (AtomId a = 0; a < n; ++a)
            for (AtomId b = 0; b < n; ++b)
                for (AtomId c = 0; c < n; ++c)
                    if (s.consistent(a, b, c)) out.set_consistent(perm[a], perm[b], perm[c]);
        return out;
    }
    AtomStructure out = AtomStructure::cylindric(s.signature(), names);
    const auto& sig = s.signature();
    if (sig.diagonals)
        for (uint32_t i = 0; i < sig.dimension; ++i)
            for (uint32_t j = i + 1; j < sig.dimension; ++j) out.set_diagonal(i, j, map_set(s.diagonal(i, j)));
    for (const auto& op : s.unary_ops()) {
        const auto& rows = s.unary_rows(op);
        std::vector<AtomSet> nrows(n, AtomSet(n));
        for (AtomId b = 0; b < n; ++b) nrows[perm[b]] = map_set(rows[b]);
        out.set_unary_rows(op, std::move(nrows));
    }
    return out;
}

AtomStructure sorted_by_name(const AtomStructure& s) {
    uint32_t n = s.atom_count();
    std::vector<AtomId> order(n);
    for (AtomId a = 0; a < n; ++a) order[a] = a;
    std::sort(order.begin(), order.end(),
              [&](AtomId x, AtomId y) { return s.atom_name(x) < s.atom_name(y); });
    std::vector<AtomId> perm(n);
    for (uint32_t pos = 0; pos < n; ++pos) perm[order[pos]] = pos;
    bool already = true;
    for (AtomId a = 0; a < n; ++a) already = already && perm[a] == a;
    return already ? s : permute_atoms(s, perm);
}

std::optional<std::vector<AtomId>> find_atom_structure_isomorphism(const AtomStructure& s,
                                                                   const AtomStructure& t) {
    if (s.kind() != t.kind() || s.atom_count() != t.atom_count()) return std::nullopt;
    if (s.kind() == AtomStructure::Kind::Cylindric) {
        if (!(s.signature() == t.signature())) return std::nullopt;
        auto so = s.unary_ops(), to = t.unary_ops();
        if (so != to) return std::nullopt;
    }
    std::vector<AtomId> map(s.atom_count(), 0);
    std::vector<bool> used(s.atom_count(), false);
    if (extend_iso(s, t, map, used, 0)) return map;
    return std::nullopt;
}

}  // namespace cylkit
