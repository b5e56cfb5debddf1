#include "lincolor/json_io.hpp"

#include <cstdio>

namespace lincolor {

using nlohmann::json;

namespace {

std::vector<int> int_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("missing array ") + key);
    std::vector<int> out;
    for (const auto& x : j[key]) {
        if (!x.is_number_integer()) throw ParseError(std::string("non-integer entry in ") + key);
        out.push_back(x.get<int>());
    }
    return out;
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing integer ") + key);
    return j[key].get<int>();
}

}  // namespace

json coloring_to_json(const Coloring& c) {
    return json{{"n", c.vertex_count()}, {"colors", c.colors()}};
}

Coloring coloring_from_json(const json& j) {
    auto colors = int_array(j, "colors");
    if (int_field(j, "n") != static_cast<int>(colors.size()))
        throw ParseError("coloring: n does not match colors length");
    try {
        return Coloring(std::move(colors));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("coloring: ") + e.what());
    }
}

json witness_to_json(const CenteredWitness& w) {
    return json{{"kind", "subgraph"}, {"vertices", w.subgraph.to_vector()}};
}

json witness_to_json(const NonCenteredPath& w) {
    return json{{"kind", "path"}, {"vertices", w.path}};
}

json decomposition_to_json(const TreedepthDecomposition& t) {
    return json{{"n", t.vertex_count()}, {"parent", t.parents()}};
}

TreedepthDecomposition decomposition_from_json(const json& j) {
    auto parent = int_array(j, "parent");
    if (int_field(j, "n") != static_cast<int>(parent.size()))
        throw ParseError("decomposition: n does not match parent length");
    try {
        return TreedepthDecomposition(std::move(parent));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("decomposition: ") + e.what());
    }
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    int n = int_field(j, "n");
    if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("graph: missing edges");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw ParseError("graph: edge is not a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("graph: ") + e.what());
    }
}

json gadget_roles_to_json(const GadgetInstance& gi) {
    json roles = json::array();
    for (const auto& r : gi.roles) {
        const char* kind = nullptr;
        switch (r.role) {
            case GadgetRole::U: kind = "u"; break;
            case GadgetRole::UPrime: kind = "u_prime"; break;
            case GadgetRole::WPrime: kind = "w_prime"; break;
            case GadgetRole::WTrue: kind = "w_true"; break;
            case GadgetRole::WFalse: kind = "w_false"; break;
        }
        roles.push_back(json{{"kind", kind}, {"i", r.i}, {"j", r.j}});
    }
    return json{{"n_vars", gi.n_vars},
                {"n_clauses", gi.n_clauses},
                {"color_offset", gi.color_offset},
                {"vertices", roles}};
}

json preprocess_to_json(const PreprocessResult& pre) {
    json forced = json::array();
    for (const auto& fa : pre.forced)
        forced.push_back(json{{"variable", fa.variable}, {"value", fa.value}, {"reason", fa.reason}});
    return json{{"forced", forced},
                {"removed_clauses", pre.removed_clauses},
                {"var_to_original", pre.var_to_original},
                {"contains_empty_clause", pre.contains_empty_clause}};
}

std::string digest_hex(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace lincolor
