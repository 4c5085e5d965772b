#include "wmha/io.hpp"

#include <fstream>

namespace wmha {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t count(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw InputError(std::string("field '") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

std::vector<std::string> strings(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string()) throw InputError(std::string("field '") + key + "' must hold strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

std::map<std::string, std::string> string_map(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_object()) throw InputError(std::string("field '") + key + "' must be an object");
    std::map<std::string, std::string> out;
    for (const auto& [k, s] : v.items()) {
        if (!s.is_string()) throw InputError(std::string("field '") + key + "' must map to strings");
        out[k] = s.get<std::string>();
    }
    return out;
}

std::vector<std::vector<std::size_t>> index_table(const json& v, const char* what) {
    if (!v.is_array()) throw InputError(std::string(what) + " must be an array of arrays");
    std::vector<std::vector<std::size_t>> out;
    for (const auto& row : v) {
        if (!row.is_array()) throw InputError(std::string(what) + " must be an array of arrays");
        std::vector<std::size_t> r;
        for (const auto& x : row) {
            if (!x.is_number_unsigned()) throw InputError(std::string(what) + " entries must be non-negative integers");
            r.push_back(x.get<std::size_t>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

GroupTable group_from_json(const json& j) {
    if (j.contains("cyclic")) return cyclic_group(count(j, "cyclic"));
    if (j.contains("symmetric")) return symmetric_group(count(j, "symmetric"));
    GroupTable g{strings(j, "names"), index_table(field(j, "table"), "group table")};
    const std::size_t n = g.names.size();
    if (g.table.size() != n) throw InputError("group table has the wrong number of rows");
    for (const auto& row : g.table) {
        if (row.size() != n) throw InputError("group table has the wrong number of columns");
        for (std::size_t x : row)
            if (x >= n) throw InputError("group table entry out of range");
    }
    try {
        check_group(g);
    } catch (const GroupoidError& e) {
        throw InputError(std::string("group table: ") + e.what());
    }
    return g;
}

Groupoid generated(const json& gen) {
    const std::string kind = field(gen, "kind").get<std::string>();
    if (kind == "pair") return pair_groupoid(count(gen, "n"));
    if (kind == "group") return one_object_group(group_from_json(field(gen, "group")));
    if (kind == "bundle") {
        std::vector<GroupTable> groups;
        for (const auto& g : field(gen, "groups")) groups.push_back(group_from_json(g));
        return group_bundle(groups);
    }
    if (kind == "union") {
        std::vector<Groupoid> parts;
        for (const auto& p : field(gen, "parts")) parts.push_back(groupoid_from_json(p));
        return disjoint_union(parts);
    }
    if (kind == "action") {
        const GroupTable g = group_from_json(field(gen, "group"));
        const auto points = strings(gen, "points");
        const auto action = index_table(field(gen, "action"), "action");
        if (action.size() != g.names.size()) throw InputError("action needs one row per group element");
        for (const auto& row : action) {
            if (row.size() != points.size()) throw InputError("action row has the wrong length");
            for (std::size_t x : row)
                if (x >= points.size()) throw InputError("action entry out of range");
        }
        return action_groupoid(g, points, action);
    }
    throw InputError("unknown generator kind '" + kind + "'");
}

FiniteAlgebra algebra_from_json(const json& j) {
    if (j.contains("functions")) return function_algebra(count(j, "functions"));
    if (j.contains("matrices")) return matrix_algebra(count(j, "matrices"));
    if (j.contains("matrices_op")) return opposite(matrix_algebra(count(j, "matrices_op")));
    const auto labels = strings(j, "labels");
    std::map<std::string, Index> idx;
    for (Index k = 0; k < labels.size(); ++k)
        if (!idx.emplace(labels[k], k).second) throw InputError("duplicate algebra label '" + labels[k] + "'");
    auto at = [&](const json& s) {
        auto it = idx.find(s.get<std::string>());
        if (it == idx.end()) throw InputError("unknown algebra label '" + s.get<std::string>() + "'");
        return it->second;
    };
    const std::size_t n = labels.size();
    std::vector<Element> mult(n * n);
    for (const auto& e : field(j, "mult")) {
        if (!e.is_array() || e.size() != 4) throw InputError("mult entries are [x, y, z, coef]");
        mult[at(e[0]) * n + at(e[1])].add(at(e[2]), scalar_from_json(e[3]));
    }
    const std::string name = j.contains("name") ? j.at("name").get<std::string>() : "algebra";
    try {
        return make_algebra(name, labels, mult);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Index label_index(const FiniteAlgebra& a, const json& s) {
    if (!s.is_string()) throw InputError("expected a basis label of " + a.name);
    for (Index k = 0; k < a.n; ++k)
        if (a.labels[k] == s.get<std::string>()) return k;
    throw InputError("unknown basis label '" + s.get<std::string>() + "' of " + a.name);
}

AlgMap map_from_json(const json& v, const FiniteAlgebra& from, const FiniteAlgebra& to) {
    AlgMap m;
    std::vector<Element> cols(from.n);
    for (const auto& e : v) {
        if (!e.is_array() || e.size() != 3) throw InputError("map entries are [argument, image, coef]");
        cols[label_index(from, e[0])].add(label_index(to, e[1]), scalar_from_json(e[2]));
    }
    for (Index k = 0; k < from.n; ++k) m.set_column(k, cols[k]);
    return m;
}

json algebra_to_json(const FiniteAlgebra& a) {
    json mult = json::array();
    for (Index x = 0; x < a.n; ++x)
        for (Index y = 0; y < a.n; ++y)
            for (const auto& [z, c] : a.prod(x, y)) mult.push_back({a.labels[x], a.labels[y], a.labels[z], scalar_to_json(c)});
    return {{"name", a.name}, {"labels", a.labels}, {"mult", mult}};
}

json map_to_json(const AlgMap& m, const FiniteAlgebra& from, const FiniteAlgebra& to) {
    json out = json::array();
    for (Index k = 0; k < from.n; ++k)
        for (const auto& [l, c] : m.column(k)) out.push_back({from.labels[k], to.labels[l], scalar_to_json(c)});
    return out;
}

json element_to_json(const WmhaTables& t, const Element& x) {
    json out = json::object();
    for (const auto& [k, c] : x) out[t.labels[k]] = scalar_to_json(c);
    return out;
}

json tensor_to_json(const WmhaTables& t, const Tensor2& x) {
    json out = json::array();
    for (const auto& [k, c] : x) out.push_back({t.labels[k.first], t.labels[k.second], scalar_to_json(c)});
    return out;
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_string()) {
        try {
            return Scalar::parse(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError("bad coefficient '" + j.get<std::string>() + "'");
        }
    }
    throw InputError("coefficients are integers or strings");
}

std::string scalar_to_json(const Scalar& s) { return s.str(); }

Groupoid groupoid_from_json(const json& j) {
    try {
        if (j.contains("generator")) return generated(j.at("generator"));
        std::vector<std::array<std::string, 3>> compose;
        for (const auto& c : field(j, "compose")) {
            if (!c.is_array() || c.size() != 3 || !c[0].is_string() || !c[1].is_string() || !c[2].is_string())
                throw InputError("compose entries are [p, q, pq]");
            compose.push_back({c[0].get<std::string>(), c[1].get<std::string>(), c[2].get<std::string>()});
        }
        return Groupoid::from_tables(strings(j, "arrows"), strings(j, "units"), string_map(j, "source"),
                                     string_map(j, "target"), string_map(j, "inverse"), compose);
    } catch (const GroupoidError& e) {
        throw InputError(e.what());
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed groupoid: ") + e.what());
    }
}

json groupoid_to_json(const Groupoid& g) {
    json src = json::object(), tgt = json::object(), inv = json::object(), compose = json::array();
    std::vector<std::string> units;
    for (Index u : g.units()) units.push_back(g.name(u));
    for (Index p = 0; p < g.size(); ++p) {
        src[g.name(p)] = g.name(g.source(p));
        tgt[g.name(p)] = g.name(g.target(p));
        inv[g.name(p)] = g.name(g.inverse(p));
    }
    for (const auto& [pq, r] : g.compose_table()) compose.push_back({g.name(pq.first), g.name(pq.second), g.name(r)});
    return {{"arrows", g.names()}, {"units", units}, {"source", src}, {"target", tgt}, {"inverse", inv}, {"compose", compose}};
}

SepData sep_from_json(const json& j) {
    try {
        if (j.contains("generator")) {
            const json& gen = j.at("generator");
            const std::string kind = field(gen, "kind").get<std::string>();
            if (kind == "functions") {
                const std::size_t n = count(gen, "n");
                std::vector<Index> tau;
                for (const auto& x : field(gen, "tau")) {
                    const std::size_t v = x.get<std::size_t>();
                    if (v < 1 || v > n) throw InputError("tau entries are points 1..n");
                    tau.push_back(v - 1);
                }
                if (tau.size() != n) throw InputError("tau needs one entry per point");
                return sep_function_example(n, tau);
            }
            if (kind == "matrices") {
                std::vector<Scalar> y;
                for (const auto& x : field(gen, "y")) y.push_back(scalar_from_json(x));
                return sep_matrix_example(y);
            }
            throw InputError("unknown separability generator '" + kind + "'");
        }
        SepData d;
        d.name = j.contains("name") ? j.at("name").get<std::string>() : "sep";
        d.B = algebra_from_json(field(j, "B"));
        d.C = algebra_from_json(field(j, "C"));
        for (const auto& e : field(j, "E")) {
            if (!e.is_array() || e.size() != 3) throw InputError("E entries are [b, c, coef]");
            d.E.add({label_index(d.B, e[0]), label_index(d.C, e[1])}, scalar_from_json(e[2]));
        }
        if (j.contains("S_B")) d.S_B = map_from_json(j.at("S_B"), d.B, d.C);
        else if (auto s = solve_S_B(d.B, d.C, d.E)) d.S_B = *s;
        else throw InputError("S_B is not determined by E(b (x) 1) = E(1 (x) S_B(b))");
        if (j.contains("S_C")) d.S_C = map_from_json(j.at("S_C"), d.C, d.B);
        else if (auto s = solve_S_C(d.B, d.C, d.E)) d.S_C = *s;
        else throw InputError("S_C is not determined by (1 (x) c)E = (S_C(c) (x) 1)E");
        return d;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed separability data: ") + e.what());
    }
}

json sep_to_json(const SepData& d) {
    json e = json::array();
    for (const auto& [k, c] : d.E) e.push_back({d.B.labels[k.first], d.C.labels[k.second], scalar_to_json(c)});
    return {{"name", d.name},
            {"B", algebra_to_json(d.B)},
            {"C", algebra_to_json(d.C)},
            {"E", e},
            {"S_B", map_to_json(d.S_B, d.B, d.C)},
            {"S_C", map_to_json(d.S_C, d.C, d.B)}};
}

json tables_to_json(const WmhaTables& t) {
    json mult = json::array(), delta = json::object(), S = json::object(), eps = json::object();
    for (Index a = 0; a < t.n; ++a) {
        for (Index b = 0; b < t.n; ++b)
            for (const auto& [k, c] : t.prod(a, b)) mult.push_back({t.labels[a], t.labels[b], t.labels[k], scalar_to_json(c)});
        delta[t.labels[a]] = tensor_to_json(t, t.delta[a]);
        S[t.labels[a]] = element_to_json(t, t.S[a]);
        eps[t.labels[a]] = scalar_to_json(t.eps[a]);
    }
    return {{"name", t.name},    {"basis", t.labels}, {"product", mult}, {"unit", element_to_json(t, t.unit)},
            {"coproduct", delta}, {"counit", eps},     {"antipode", S},   {"E", tensor_to_json(t, t.E)}};
}

}  // namespace wmha
