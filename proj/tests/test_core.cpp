#include <doctest.h>

#include "wmha/cg.hpp"
#include "wmha/kg.hpp"

using namespace wmha;

namespace {

void require_all_laws(const Wmha& w) {
    auto rep = check_axioms(w);
    for (const auto& l : rep.laws) {
        INFO(w.name() << " law " << l.name << " " << l.detail);
        CHECK(l.ok);
    }
}

Element d(const Groupoid& g, const char* name) { return Element::basis(g.index(name)); }

}  // namespace

TEST_CASE("K(G) and CG pass the axiom suite on small groupoids") {
    for (const Groupoid& g : {pair_groupoid(2), pair_groupoid(3), one_object_group(cyclic_group(2)),
                              group_bundle({cyclic_group(2), cyclic_group(3)}),
                              action_groupoid(cyclic_group(2), {"1", "2"}, {{0, 1}, {1, 0}}),
                              one_object_group(symmetric_group(3))}) {
        require_all_laws(KgAlgebra(g));
        require_all_laws(CgAlgebra(g));
    }
}

TEST_CASE("K(pair groupoid): T1 and E") {
    Groupoid g = pair_groupoid(2);
    KgAlgebra kg(g);
    WmhaTables t = tabulate(kg);
    CHECK(t.T1(tensor2(d(g, "(1,2)"), d(g, "(2,2)"))) == tensor2(d(g, "(1,2)"), d(g, "(2,2)")));
    CHECK(t.T1(tensor2(Element{}, d(g, "(2,2)"))).is_zero());
    CHECK(t.E.support_size() == 8);
    for (const auto& [k, c] : t.E) {
        CHECK(c == Scalar(1));
        CHECK(g.source(k.first) == g.target(k.second));
    }
    // Delta(delta_(1,2)) sits on the two factorizations of (1,2).
    Tensor2 expected = tensor2(d(g, "(1,1)"), d(g, "(1,2)")) + tensor2(d(g, "(1,2)"), d(g, "(2,2)"));
    CHECK(t.delta[g.index("(1,2)")] == expected);
    CHECK(t.R1(Tensor2{}).is_zero());
}

TEST_CASE("source map on K(pair groupoid) is the pull-back along the source") {
    Groupoid g = pair_groupoid(2);
    WmhaTables t = tabulate(KgAlgebra(g));
    // Only units contribute: eps_s(delta_e) is the indicator of {p : s(p) = e}.
    CHECK(t.eps_s(d(g, "(1,2)")).is_zero());
    CHECK(t.eps_s(d(g, "(2,2)")) == d(g, "(1,2)") + d(g, "(2,2)"));
    CHECK(t.eps_t(d(g, "(2,2)")) == d(g, "(2,1)") + d(g, "(2,2)"));
    Multiplier m = eps_s(t, d(g, "(2,2)"));
    CHECK(m.left(d(g, "(1,2)")) == d(g, "(1,2)"));
    CHECK(m.left(d(g, "(2,1)")).is_zero());
}

TEST_CASE("one-unit groupoid is the Hopf case") {
    Groupoid g = one_object_group(cyclic_group(2));
    WmhaTables t = tabulate(KgAlgebra(g));
    CHECK(t.E == t.unit2());
    CHECK(t.F1() == t.unit2());
    CHECK(t.F2() == t.unit2());
    CHECK(t.F3() == t.unit2());
    CHECK(t.F4() == t.unit2());
    // T1 is invertible with inverse R1.
    for (Index a = 0; a < 2; ++a)
        for (Index b = 0; b < 2; ++b) {
            Tensor2 x = tensor2(Element::basis(a), Element::basis(b));
            CHECK(t.R1(t.T1(x)) == x);
            CHECK(t.T1(t.R1(x)) == x);
        }
    for (Index a = 0; a < 2; ++a) CHECK(t.eps_s(Element::basis(a)) == t.eps[a] * t.unit);
}

TEST_CASE("abelian K(G): F1 = F3 and F2 = F4") {
    WmhaTables t = tabulate(KgAlgebra(group_bundle({cyclic_group(2), cyclic_group(3)})));
    CHECK(t.F1() == t.F3());
    CHECK(t.F2() == t.F4());
}

TEST_CASE("CG structure") {
    Groupoid g = pair_groupoid(2);
    CgAlgebra cg(g);
    WmhaTables t = tabulate(cg);
    CHECK(t.prod(g.index("(1,2)"), g.index("(2,1)")) == d(g, "(1,1)"));
    CHECK(t.prod(g.index("(1,2)"), g.index("(1,2)")).is_zero());
    for (Index p = 0; p < g.size(); ++p) {
        CHECK(t.eps[p] == Scalar(1));
        CHECK(t.eps_s(Element::basis(p)) == Element::basis(g.source(p)));
        CHECK(t.eps_t(Element::basis(p)) == Element::basis(g.target(p)));
        CHECK(t.delta[p] == flip(t.delta[p]));
    }
    Tensor2 e;
    for (Index u : g.units()) e += tensor2(Element::basis(u), Element::basis(u));
    CHECK(t.E == e);
    // CG(Z2): F1 = E.
    WmhaTables z2 = tabulate(CgAlgebra(one_object_group(cyclic_group(2))));
    CHECK(z2.F1() == z2.E);
}

TEST_CASE("local units of CG cover their elements") {
    Groupoid g = pair_groupoid(3);
    CgAlgebra cg(g);
    WmhaTables t = tabulate(cg);
    Element x = d(g, "(1,2)") + Scalar(3) * d(g, "(3,3)");
    Element u = cg.local_unit({x});
    CHECK(t.mul(u, x) == x);
    CHECK(t.mul(x, u) == x);
    CHECK(u.support_size() == 3);
}

TEST_CASE("negative control: corrupted antipode") {
    WmhaTables t = tabulate(KgAlgebra(pair_groupoid(2)));
    std::swap(t.S[0], t.S[1]);
    std::swap(t.Sinv[0], t.Sinv[1]);
    TableWmha bad(t);
    auto rep = check_axioms(bad);
    const LawResult* l = rep.find("antipode identity");
    REQUIRE(l);
    CHECK_FALSE(l->ok);
    CHECK_FALSE(l->witness.empty());
}

TEST_CASE("negative control: non-full E") {
    Groupoid g = pair_groupoid(2);
    WmhaTables t = tabulate(CgAlgebra(g));
    const Index u = g.units().front();
    t.E = tensor2(Element::basis(u), Element::basis(u));
    auto rep = check_axioms(TableWmha(t));
    const LawResult* l = rep.find("E full");
    REQUIRE(l);
    CHECK_FALSE(l->ok);
    CHECK_FALSE(l->witness.empty());
}

TEST_CASE("sampled checking is reproducible") {
    KgAlgebra kg(pair_groupoid(3));
    CheckOptions opt;
    opt.max_exhaustive_dim = 4;
    opt.samples = 50;
    opt.seed = 99;
    auto a = check_axioms(kg, opt), b = check_axioms(kg, opt);
    CHECK_FALSE(a.exhaustive);
    CHECK(a.ok());
    REQUIRE(a.laws.size() == b.laws.size());
    opt.jobs = 3;
    auto c = check_axioms(kg, opt);
    for (std::size_t k = 0; k < a.laws.size(); ++k) CHECK(a.laws[k].name == c.laws[k].name);
}
