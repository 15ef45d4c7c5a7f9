#include "cylkit/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cylkit {

using nlohmann::json;

namespace {

std::string op_key(const UnaryOp& op) { return op.name(); }

std::optional<UnaryOp> parse_op_key(const std::string& k) {
    if (k.rfind("c_", 0) == 0) return UnaryOp{OpFamily::Cylindrifier, (uint32_t)std::stoul(k.substr(2)), 0};
    if (k.rfind("s_[", 0) == 0) {
        auto comma = k.find(',');
        uint32_t i = std::stoul(k.substr(3, comma - 3));
        uint32_t j = std::stoul(k.substr(comma + 1, k.size() - comma - 2));
        return UnaryOp{OpFamily::Transposition, i, j};
    }
    if (k.rfind("s_", 0) == 0) {
        auto caret = k.find('^');
        uint32_t i = std::stoul(k.substr(2, caret - 2));
        uint32_t j = std::stoul(k.substr(caret + 1));
        return UnaryOp{OpFamily::Replacement, i, j};
    }
    return std::nullopt;
}

std::string signature_string(const Signature& s) {
    if (s.cylindrifiers && s.diagonals && s.replacements && s.transpositions) return "QEA";
    if (s.cylindrifiers && s.replacements && s.transpositions) return "QA";
    if (s.cylindrifiers && s.diagonals && s.full_substitutions) return "PEA";
    if (s.cylindrifiers && s.full_substitutions) return "PA";
    if (s.cylindrifiers && s.diagonals) return "CA";
    if (s.cylindrifiers && s.replacements) return "Sc";
    return "Df";
}

}  // namespace

std::string atom_structure_to_json(const AtomStructure& s_in) {
    AtomStructure s = sorted_by_name(s_in);
    json out;
    out["atoms"] = s.atom_names();
    if (s.kind() == AtomStructure::Kind::RelationAlgebra) {
        out["signature"] = "RA";
        json ra;
        std::vector<std::string> ids;
        s.identity().for_each([&](AtomId a) { ids.push_back(s.atom_name(a)); });
        ra["identity"] = ids;
        json conv = json::object();
        for (AtomId a = 0; a < s.atom_count(); ++a) conv[s.atom_name(a)] = s.atom_name(s.converse(a));
        ra["converse"] = conv;
        json forb = json::array();
        uint32_t n = s.atom_count();
        for (AtomId a = 0; a < n; ++a)
            for (AtomId b = 0; b < n; ++b)
                for (AtomId c = 0; c < n; ++c)
                    if (!s.consistent(a, b, c))
                        forb.push_back({s.atom_name(a), s.atom_name(b), s.atom_name(c)});
        ra["forbidden"] = forb;
        out["ra"] = ra;
        return out.dump(2);
    }
    out["dimension"] = s.signature().dimension;
    out["signature"] = signature_string(s.signature());
    json rels = json::object();
    if (s.signature().diagonals)
        for (uint32_t i = 0; i < s.signature().dimension; ++i)
            for (uint32_t j = i + 1; j < s.signature().dimension; ++j) {
                std::vector<std::string> names;
                s.diagonal(i, j).for_each([&](AtomId a) { names.push_back(s.atom_name(a)); });
                rels["d_" + std::to_string(i) + std::to_string(j)] = names;
            }
    for (const auto& op : s.unary_ops()) {
        json pairs = json::array();
        const auto& rows = s.unary_rows(op);
        for (AtomId b = 0; b < s.atom_count(); ++b)
            rows[b].for_each([&](AtomId a) { pairs.push_back({s.atom_name(a), s.atom_name(b)}); });
        rels[op_key(op)] = pairs;
    }
    out["relations"] = rels;
    return out.dump(2);
}

AtomStructure atom_structure_from_json(const std::string& text) {
    json in;
    try {
        in = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    if (!in.contains("atoms")) throw InputError("missing \"atoms\"");
    std::vector<std::string> names = in["atoms"].get<std::vector<std::string>>();
    std::vector<std::string> sorted = names;
    std::sort(sorted.begin(), sorted.end());
    auto id_of = [&](const std::string& n) -> AtomId {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), n);
        if (it == sorted.end() || *it != n) throw InputError("undeclared atom " + n);
        return static_cast<AtomId>(it - sorted.begin());
    };

    if (in.contains("ra")) {
        AtomStructure s = AtomStructure::relation_algebra(sorted);
        const auto& ra = in["ra"];
        AtomSet ids(s.atom_count());
        for (const auto& n : ra["identity"]) ids.insert(id_of(n.get<std::string>()));
        s.set_identity(ids);
        std::vector<AtomId> conv(s.atom_count());
        for (AtomId a = 0; a < s.atom_count(); ++a) conv[a] = a;
        if (ra.contains("converse"))
            for (auto& [k, v] : ra["converse"].items()) conv[id_of(k)] = id_of(v.get<std::string>());
        s.set_converse(conv);
        // mark everything consistent, then knock out the forbidden triples literally
        for (AtomId a = 0; a < s.atom_count(); ++a)
            for (AtomId b = 0; b < s.atom_count(); ++b)
                for (AtomId c = 0; c < s.atom_count(); ++c) s.set_consistent(a, b, c, true);
        for (const auto& t : ra["forbidden"])
            s.set_consistent(id_of(t[0].get<std::string>()), id_of(t[1].get<std::string>()),
                             id_of(t[2].get<std::string>()), false);
        return s;
    }

    if (!in.contains("dimension")) throw InputError("missing \"dimension\"");
    uint32_t dim = in["dimension"].get<uint32_t>();
    Signature sig = Signature::of(algebra_class_from_string(in.value("signature", "CA")), dim);
    AtomStructure s = AtomStructure::cylindric(sig, sorted);
    if (in.contains("relations"))
        for (auto& [key, val] : in["relations"].items()) {
            if (key.rfind("d_", 0) == 0) {
                uint32_t i = key[2] - '0', j = key[3] - '0';
                AtomSet d(s.atom_count());
                for (const auto& n : val) d.insert(id_of(n.get<std::string>()));
                s.set_diagonal(i, j, d);
                continue;
            }
            auto op = parse_op_key(key);
            if (!op) throw InputError("unknown relation key " + key);
            std::vector<AtomSet> rows(s.atom_count(), AtomSet(s.atom_count()));
            for (const auto& pair : val)
                rows[id_of(pair[1].get<std::string>())].insert(id_of(pair[0].get<std::string>()));
            s.set_unary_rows(*op, std::move(rows));
        }
    return s;
}

void save_atom_structure(const AtomStructure& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    out << atom_structure_to_json(s) << "\n";
}

AtomStructure load_atom_structure(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return atom_structure_from_json(ss.str());
}

std::string element_to_json(const AtomStructure& s, const AtomSet& x) {
    json names = json::array();
    x.for_each([&](AtomId a) { names.push_back(s.atom_name(a)); });
    return names.dump();
}

std::string atom_structure_to_dot(const AtomStructure& s) {
    std::ostringstream os;
    os << "graph atoms {\n";
    for (AtomId a = 0; a < s.atom_count(); ++a)
        os << "  n" << a << " [label=\"" << s.atom_name(a) << "\"];\n";
    if (s.kind() == AtomStructure::Kind::Cylindric)
        for (const auto& op : s.unary_ops()) {
            if (op.family != OpFamily::Cylindrifier) continue;
            const auto& rows = s.unary_rows(op);
            for (AtomId b = 0; b < s.atom_count(); ++b)
                rows[b].for_each([&](AtomId a) {
                    if (a < b) os << "  n" << a << " -- n" << b << " [label=\"" << op.name() << "\"];\n";
                });
        }
    os << "}\n";
    return os.str();
}

}  // namespace cylkit
