#include <doctest.h>

#include "wmha/groupoid.hpp"

using namespace wmha;

namespace {

// Exhaustive checks of the structural properties, independent of validate().
void check_structure(const Groupoid& g) {
    for (Index p = 0; p < g.size(); ++p) {
        CHECK(g.inverse(g.inverse(p)) == p);
        CHECK(g.source(g.inverse(p)) == g.target(p));
        for (Index q = 0; q < g.size(); ++q)
            for (Index r = 0; r < g.size(); ++r) {
                auto pq = g.compose(p, q), qr = g.compose(q, r);
                if (pq && qr) CHECK(g.compose(*pq, r) == g.compose(p, *qr));
            }
    }
}

}  // namespace

TEST_CASE("pair groupoid on two points") {
    Groupoid g = pair_groupoid(2);
    CHECK(validate(g).ok());
    CHECK(g.size() == 4);
    CHECK(g.units().size() == 2);
    CHECK(g.names() == std::vector<std::string>{"(1,1)", "(1,2)", "(2,1)", "(2,2)"});
    CHECK(g.compose(g.index("(1,2)"), g.index("(2,1)")) == g.index("(1,1)"));
    CHECK_FALSE(g.compose(g.index("(1,2)"), g.index("(1,2)")));
    CHECK(g.source(g.index("(1,2)")) == g.index("(2,2)"));
    CHECK(g.target(g.index("(1,2)")) == g.index("(1,1)"));
    check_structure(g);
    CHECK(pair_groupoid(3).size() == 9);
}

TEST_CASE("groups as one-unit groupoids") {
    Groupoid z2 = one_object_group(cyclic_group(2));
    CHECK(validate(z2).ok());
    CHECK(z2.units().size() == 1);
    Groupoid s3 = one_object_group(symmetric_group(3));
    CHECK(validate(s3).ok());
    CHECK(s3.size() == 6);
    check_structure(s3);
}

TEST_CASE("disjoint unions and bundles") {
    Groupoid u = disjoint_union(one_object_group(cyclic_group(2)), one_object_group(cyclic_group(1)));
    CHECK(validate(u).ok());
    CHECK(u.size() == 3);
    CHECK(u.units().size() == 2);
    Groupoid b = group_bundle({cyclic_group(2), cyclic_group(3)});
    CHECK(validate(b).ok());
    CHECK(b.size() == 5);
    check_structure(b);
}

TEST_CASE("action groupoid of Z2 swapping two points") {
    Groupoid g = action_groupoid(cyclic_group(2), {"1", "2"}, {{0, 1}, {1, 0}});
    CHECK(validate(g).ok());
    CHECK(g.size() == 4);
    CHECK(g.units().size() == 2);
    check_structure(g);
    // (g1,1) goes from 1 to 2.
    const Index a = g.index("(g1,1)");
    CHECK(g.source(a) == g.index("(g0,1)"));
    CHECK(g.target(a) == g.index("(g0,2)"));
    CHECK(g.inverse(a) == g.index("(g1,2)"));
}

TEST_CASE("malformed group and action tables are rejected") {
    GroupTable bad{{"a", "b"}, {{0, 0}, {0, 1}}};
    CHECK_THROWS_AS(check_group(bad), GroupoidError);
    CHECK_THROWS_AS(action_groupoid(cyclic_group(2), {"1", "2"}, {{1, 0}, {1, 0}}), GroupoidError);
}

TEST_CASE("composability violation carries a witness") {
    Groupoid g = pair_groupoid(2);
    std::vector<std::string> arrows = g.names(), units;
    std::map<std::string, std::string> s, t, inv;
    std::vector<std::array<std::string, 3>> comp;
    for (Index p = 0; p < g.size(); ++p) {
        if (g.is_unit(p)) units.push_back(g.name(p));
        s[g.name(p)] = g.name(g.source(p));
        t[g.name(p)] = g.name(g.target(p));
        inv[g.name(p)] = g.name(g.inverse(p));
    }
    for (const auto& [pq, r] : g.compose_table()) comp.push_back({g.name(pq.first), g.name(pq.second), g.name(r)});
    comp.push_back({"(1,2)", "(1,2)", "(1,2)"});
    auto rep = validate(Groupoid::from_tables(arrows, units, s, t, inv, comp));
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().axiom == "composability");
    CHECK(rep.violations.front().witness == std::vector<std::string>{"(1,2)", "(1,2)"});
}

TEST_CASE("duplicate and dangling ids are errors") {
    CHECK_THROWS_AS(Groupoid::from_tables({"e", "e"}, {"e"}, {{"e", "e"}}, {{"e", "e"}}, {{"e", "e"}}, {}), GroupoidError);
    CHECK_THROWS_AS(Groupoid::from_tables({"e"}, {"e"}, {{"e", "e"}}, {{"e", "e"}}, {{"e", "e"}}, {{"e", "e", "x"}}),
                    GroupoidError);
}
