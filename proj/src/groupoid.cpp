#include "wmha/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace wmha {

namespace {

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

// Collects named tables from an indexed description, then hands them to from_tables.
struct NamedTables {
    std::vector<std::string> arrows, units;
    std::map<std::string, std::string> source, target, inverse;
    std::vector<std::array<std::string, 3>> compose;

    Groupoid build() const { return Groupoid::from_tables(arrows, units, source, target, inverse, compose); }
};

NamedTables named_tables(const Groupoid& g, const std::string& prefix) {
    NamedTables t;
    for (Index p = 0; p < g.size(); ++p) {
        const std::string n = prefix + g.name(p);
        t.arrows.push_back(n);
        if (g.is_unit(p)) t.units.push_back(n);
        t.source[n] = prefix + g.name(g.source(p));
        t.target[n] = prefix + g.name(g.target(p));
        t.inverse[n] = prefix + g.name(g.inverse(p));
    }
    for (const auto& [pq, r] : g.compose_table())
        t.compose.push_back({prefix + g.name(pq.first), prefix + g.name(pq.second), prefix + g.name(r)});
    return t;
}

}  // namespace

Groupoid Groupoid::from_tables(const std::vector<std::string>& arrows,
                               const std::vector<std::string>& units,
                               const std::map<std::string, std::string>& source,
                               const std::map<std::string, std::string>& target,
                               const std::map<std::string, std::string>& inverse,
                               const std::vector<std::array<std::string, 3>>& compose) {
    Groupoid g;
    g.names_ = arrows;
    std::sort(g.names_.begin(), g.names_.end());
    for (Index p = 0; p < g.names_.size(); ++p) {
        if (!g.by_name_.emplace(g.names_[p], p).second)
            throw GroupoidError("duplicate arrow id '" + g.names_[p] + "'");
    }
    auto lookup = [&](const std::string& n, const std::string& where) {
        auto it = g.by_name_.find(n);
        if (it == g.by_name_.end()) throw GroupoidError("dangling reference '" + n + "' in " + where);
        return it->second;
    };
    const std::size_t n = g.names_.size();
    g.is_unit_.assign(n, false);
    for (const auto& u : units) {
        Index p = lookup(u, "units");
        if (g.is_unit_[p]) throw GroupoidError("duplicate unit '" + u + "'");
        g.is_unit_[p] = true;
    }
    for (Index p = 0; p < n; ++p)
        if (g.is_unit_[p]) g.units_.push_back(p);

    auto fill = [&](const std::map<std::string, std::string>& m, std::vector<Index>& out, const std::string& what) {
        out.assign(n, 0);
        for (Index p = 0; p < n; ++p) {
            auto it = m.find(g.names_[p]);
            if (it == m.end()) throw GroupoidError("arrow '" + g.names_[p] + "' has no " + what);
            out[p] = lookup(it->second, what);
        }
        for (const auto& [k, v] : m) lookup(k, what);
    };
    fill(source, g.source_, "source");
    fill(target, g.target_, "target");
    fill(inverse, g.inverse_, "inverse");

    for (const auto& [p, q, r] : compose) {
        auto key = std::make_pair(lookup(p, "compose"), lookup(q, "compose"));
        Index v = lookup(r, "compose");
        auto [it, fresh] = g.compose_.emplace(key, v);
        if (!fresh && it->second != v)
            throw GroupoidError("conflicting compose entries for (" + p + "," + q + ")");
    }
    return g;
}

std::optional<Index> Groupoid::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

Index Groupoid::index(const std::string& name) const {
    auto p = find(name);
    if (!p) throw GroupoidError("unknown arrow '" + name + "'");
    return *p;
}

std::optional<Index> Groupoid::compose(Index p, Index q) const {
    auto it = compose_.find({p, q});
    if (it == compose_.end()) return std::nullopt;
    return it->second;
}

GroupoidReport validate(const Groupoid& g) {
    GroupoidReport rep;
    auto fail = [&](const std::string& axiom, std::vector<Index> w) {
        Violation v{axiom, {}};
        for (Index p : w) v.witness.push_back(g.name(p));
        rep.violations.push_back(std::move(v));
    };
    const std::size_t n = g.size();
    if (g.units().empty() && n > 0) fail("units", {});
    for (Index p = 0; p < n; ++p) {
        if (!g.is_unit(g.source(p)) || !g.is_unit(g.target(p))) fail("unit-membership", {p});
        if (g.is_unit(p) && (g.source(p) != p || g.target(p) != p)) fail("unit-closure", {p});
    }
    for (Index p = 0; p < n; ++p) {
        for (Index q = 0; q < n; ++q) {
            const bool composable = g.source(p) == g.target(q);
            auto r = g.compose(p, q);
            if (r.has_value() != composable) {
                fail("composability", {p, q});
                continue;
            }
            if (r && (g.source(*r) != g.source(q) || g.target(*r) != g.target(p)))
                fail("compose-endpoints", {p, q});
        }
    }
    if (!rep.ok()) return rep;  // later checks assume a well-formed table

    for (Index p = 0; p < n; ++p) {
        if (g.compose(p, g.source(p)) != p) fail("right-unit", {p});
        if (g.compose(g.target(p), p) != p) fail("left-unit", {p});
        const Index q = g.inverse(p);
        if (g.inverse(q) != p) fail("inverse-involution", {p});
        if (g.source(q) != g.target(p)) fail("inverse-endpoints", {p});
        else {
            if (g.compose(p, q) != g.target(p)) fail("inverse", {p, q});
            if (g.compose(q, p) != g.source(p)) fail("inverse", {q, p});
        }
    }
    for (const auto& [pq, r1] : g.compose_table()) {
        const auto [p, q] = pq;
        for (Index r = 0; r < n; ++r) {
            auto qr = g.compose(q, r);
            if (!qr) continue;
            if (g.compose(r1, r) != g.compose(p, *qr)) fail("associativity", {p, q, r});
        }
    }
    return rep;
}

std::size_t GroupTable::identity() const {
    for (std::size_t e = 0; e < names.size(); ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < names.size() && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
        if (ok) return e;
    }
    throw GroupoidError("group table has no identity");
}

std::size_t GroupTable::inverse(std::size_t g) const {
    const std::size_t e = identity();
    for (std::size_t h = 0; h < names.size(); ++h)
        if (table[g][h] == e && table[h][g] == e) return h;
    throw GroupoidError("element '" + names[g] + "' has no inverse");
}

void check_group(const GroupTable& grp) {
    const std::size_t n = grp.names.size();
    if (n == 0) throw GroupoidError("empty group");
    if (grp.table.size() != n) throw GroupoidError("group table has wrong number of rows");
    for (const auto& row : grp.table) {
        if (row.size() != n) throw GroupoidError("group table has a row of wrong length");
        for (std::size_t v : row)
            if (v >= n) throw GroupoidError("group table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (grp.table[grp.table[a][b]][c] != grp.table[a][grp.table[b][c]])
                    throw GroupoidError("group table is not associative at (" + grp.names[a] + "," + grp.names[b] +
                                        "," + grp.names[c] + ")");
    grp.identity();
    for (std::size_t a = 0; a < n; ++a) grp.inverse(a);
}

GroupTable cyclic_group(std::size_t n) {
    GroupTable grp;
    for (std::size_t k = 0; k < n; ++k) grp.names.push_back("g" + std::to_string(k));
    grp.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) grp.table[a][b] = (a + b) % n;
    return grp;
}

GroupTable symmetric_group(std::size_t n) {
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    GroupTable grp;
    for (const auto& q : perms) {
        std::string s = "[";
        for (std::size_t k = 0; k < n; ++k) s += (k ? " " : "") + std::to_string(q[k] + 1);
        grp.names.push_back(s + "]");
    }
    std::map<std::vector<std::size_t>, std::size_t> pos;
    for (std::size_t k = 0; k < perms.size(); ++k) pos[perms[k]] = k;
    grp.table.assign(perms.size(), std::vector<std::size_t>(perms.size()));
    for (std::size_t a = 0; a < perms.size(); ++a)
        for (std::size_t b = 0; b < perms.size(); ++b) {
            // (a b)(x) = a(b(x))
            std::vector<std::size_t> c(n);
            for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
            grp.table[a][b] = pos.at(c);
        }
    return grp;
}

Groupoid pair_groupoid(std::size_t n) {
    NamedTables t;
    auto pt = [](std::size_t i) { return std::to_string(i + 1); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const std::string a = pair_name(pt(i), pt(j));
            t.arrows.push_back(a);
            if (i == j) t.units.push_back(a);
            t.target[a] = pair_name(pt(i), pt(i));
            t.source[a] = pair_name(pt(j), pt(j));
            t.inverse[a] = pair_name(pt(j), pt(i));
            for (std::size_t k = 0; k < n; ++k) t.compose.push_back({a, pair_name(pt(j), pt(k)), pair_name(pt(i), pt(k))});
        }
    return t.build();
}

Groupoid one_object_group(const GroupTable& grp) {
    check_group(grp);
    NamedTables t;
    const std::size_t e = grp.identity();
    t.arrows = grp.names;
    t.units = {grp.names[e]};
    for (std::size_t a = 0; a < grp.names.size(); ++a) {
        t.source[grp.names[a]] = grp.names[e];
        t.target[grp.names[a]] = grp.names[e];
        t.inverse[grp.names[a]] = grp.names[grp.inverse(a)];
        for (std::size_t b = 0; b < grp.names.size(); ++b)
            t.compose.push_back({grp.names[a], grp.names[b], grp.names[grp.table[a][b]]});
    }
    return t.build();
}

Groupoid disjoint_union(const std::vector<Groupoid>& parts) {
    NamedTables all;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        NamedTables t = named_tables(parts[k], std::to_string(k) + ":");
        all.arrows.insert(all.arrows.end(), t.arrows.begin(), t.arrows.end());
        all.units.insert(all.units.end(), t.units.begin(), t.units.end());
        all.source.merge(t.source);
        all.target.merge(t.target);
        all.inverse.merge(t.inverse);
        all.compose.insert(all.compose.end(), t.compose.begin(), t.compose.end());
    }
    return all.build();
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) { return disjoint_union(std::vector<Groupoid>{a, b}); }

Groupoid group_bundle(const std::vector<GroupTable>& groups) {
    std::vector<Groupoid> parts;
    for (const auto& grp : groups) parts.push_back(one_object_group(grp));
    return disjoint_union(parts);
}

Groupoid action_groupoid(const GroupTable& grp, const std::vector<std::string>& points,
                         const std::vector<std::vector<std::size_t>>& action) {
    check_group(grp);
    const std::size_t ng = grp.names.size(), nx = points.size();
    if (action.size() != ng) throw GroupoidError("action table has wrong number of rows");
    for (const auto& row : action) {
        if (row.size() != nx) throw GroupoidError("action table has a row of wrong length");
        for (std::size_t y : row)
            if (y >= nx) throw GroupoidError("action table entry out of range");
    }
    const std::size_t e = grp.identity();
    for (std::size_t x = 0; x < nx; ++x) {
        if (action[e][x] != x) throw GroupoidError("identity does not act trivially on '" + points[x] + "'");
        for (std::size_t g = 0; g < ng; ++g)
            for (std::size_t h = 0; h < ng; ++h)
                if (action[grp.table[h][g]][x] != action[h][action[g][x]])
                    throw GroupoidError("action is not compatible with the group law");
    }
    // Arrow (g,x) goes from x to g.x; (h, g.x)(g, x) = (hg, x).
    NamedTables t;
    auto arrow = [&](std::size_t g, std::size_t x) { return pair_name(grp.names[g], points[x]); };
    for (std::size_t g = 0; g < ng; ++g)
        for (std::size_t x = 0; x < nx; ++x) {
            const std::string a = arrow(g, x);
            t.arrows.push_back(a);
            if (g == e) t.units.push_back(a);
            t.source[a] = arrow(e, x);
            t.target[a] = arrow(e, action[g][x]);
            t.inverse[a] = arrow(grp.inverse(g), action[g][x]);
            for (std::size_t h = 0; h < ng; ++h) t.compose.push_back({arrow(h, action[g][x]), a, arrow(grp.table[h][g], x)});
        }
    return t.build();
}

}  // namespace wmha
