#include <doctest.h>

#include "wmha/cg.hpp"
#include "wmha/integrals.hpp"
#include "wmha/kg.hpp"

using namespace wmha;

namespace {

// A functional on K(G) or CG given by a weight per arrow.
template <class F>
Functional weights(const Groupoid& g, F&& w) {
    Functional f(g.size());
    for (Index u = 0; u < g.size(); ++u) f[u] = w(u);
    return f;
}

std::vector<Groupoid> corpus() {
    return {pair_groupoid(2),
            pair_groupoid(3),
            one_object_group(cyclic_group(2)),
            group_bundle({cyclic_group(2), cyclic_group(3)}),
            action_groupoid(cyclic_group(2), {"1", "2"}, {{0, 1}, {1, 0}}),
            disjoint_union(pair_groupoid(2), one_object_group(cyclic_group(2)))};
}

bool spans_equal(const std::vector<Functional>& a, const std::vector<Functional>& b) {
    std::vector<FinVec<Index>> va, vb;
    for (const auto& f : a) va.push_back(as_vector(f));
    for (const auto& f : b) vb.push_back(as_vector(f));
    return same_span(va, vb);
}

}  // namespace

TEST_CASE("K(G): left integrals are weights constant on source fibers") {
    for (const Groupoid& g : corpus()) {
        WmhaTables t = tabulate(KgAlgebra(g));
        IntegralTheory it(t);
        std::vector<Functional> family, rfamily;
        for (Index e : g.units()) {
            family.push_back(weights(g, [&](Index u) { return Scalar(g.source(u) == e ? 1 : 0); }));
            rfamily.push_back(weights(g, [&](Index u) { return Scalar(g.target(u) == e ? 1 : 0); }));
        }
        const auto left = it.left_integrals(), right = it.right_integrals();
        CHECK(left.size() == g.units().size());
        CHECK(right.size() == g.units().size());
        CHECK(spans_equal(left, family));
        CHECK(spans_equal(right, rfamily));
        for (const auto& f : family) {
            CHECK(it.is_left_integral(f));
            CHECK(it.left_invariant_sweedler(f));
            CHECK(it.left_invariant_F(f));
        }
        for (const auto& f : rfamily) {
            CHECK(it.is_right_integral(f));
            CHECK(it.right_invariant_sweedler(f));
            CHECK(it.right_invariant_F(f));
        }
    }
}

TEST_CASE("K(Z2) has a one-dimensional space of integrals") {
    WmhaTables t = tabulate(KgAlgebra(one_object_group(cyclic_group(2))));
    IntegralTheory it(t);
    CHECK(it.left_integrals().size() == 1);
    CHECK(it.right_integrals().size() == 1);
}

TEST_CASE("CG: integrals are supported on the units") {
    for (const Groupoid& g : corpus()) {
        WmhaTables t = tabulate(CgAlgebra(g));
        IntegralTheory it(t);
        std::vector<Functional> family;
        for (Index e : g.units()) family.push_back(weights(g, [&](Index u) { return Scalar(u == e ? 1 : 0); }));
        CHECK(spans_equal(it.left_integrals(), family));
        CHECK(spans_equal(it.right_integrals(), family));
    }
}

TEST_CASE("three formulations of invariance agree on every 0/1 functional") {
    for (const Groupoid& g : corpus()) {
        if (g.size() > 6) continue;
        for (int kind = 0; kind < 2; ++kind) {
            WmhaTables t = kind == 0 ? tabulate(KgAlgebra(g)) : tabulate(CgAlgebra(g));
            IntegralTheory it(t);
            for (unsigned mask = 0; mask < (1u << t.n); ++mask) {
                Functional f(t.n);
                for (Index k = 0; k < t.n; ++k) f[k] = Scalar((mask >> k) & 1u ? 1 : 0);
                INFO(t.name << " mask " << mask);
                const bool l = it.left_invariant_def(f);
                CHECK(l == it.left_invariant_sweedler(f));
                CHECK(l == it.left_invariant_F(f));
                const bool r = it.right_invariant_def(f);
                CHECK(r == it.right_invariant_sweedler(f));
                CHECK(r == it.right_invariant_F(f));
                // Direct description of the invariant weights.
                bool src_const = true, tgt_const = true;
                for (Index u = 0; u < t.n; ++u)
                    for (Index v = 0; v < t.n; ++v) {
                        if (kind == 0 && g.source(u) == g.source(v) && f[u] != f[v]) src_const = false;
                        if (kind == 0 && g.target(u) == g.target(v) && f[u] != f[v]) tgt_const = false;
                    }
                if (kind == 1) {
                    for (Index u = 0; u < t.n; ++u)
                        if (!g.is_unit(u) && !f[u].is_zero()) src_const = tgt_const = false;
                }
                CHECK(l == src_const);
                CHECK(r == tgt_const);
            }
        }
    }
}

TEST_CASE("transfer relations between left and right integrals") {
    std::vector<WmhaTables> cases{tabulate(KgAlgebra(pair_groupoid(2))), tabulate(KgAlgebra(pair_groupoid(3))),
                                  tabulate(CgAlgebra(group_bundle({cyclic_group(2), cyclic_group(3)}))),
                                  tabulate(CgAlgebra(pair_groupoid(2)))};
    for (const auto& t : cases) {
        IntegralTheory it(t);
        for (const auto& phi : it.left_integrals())
            for (const auto& psi : it.right_integrals())
                for (const auto& item : it.transfer_relations(phi, psi)) {
                    INFO(t.name << " item " << item.item);
                    CHECK(item.ok);
                }
    }
}

TEST_CASE("faithfulness: kernel test and E-span test") {
    Groupoid g = pair_groupoid(2);
    WmhaTables t = tabulate(KgAlgebra(g));
    IntegralTheory it(t);
    const Index e1 = g.index("(1,1)");

    Functional uniform = weights(g, [](Index) { return Scalar(1); });
    auto r = it.faithful_set({uniform});
    CHECK(r.faithful);
    CHECK(r.kernel_test);
    CHECK(r.span_test);

    Functional fiber = weights(g, [&](Index u) { return Scalar(g.source(u) == e1 ? 1 : 0); });
    auto bad = it.faithful_set({fiber});
    CHECK_FALSE(bad.faithful);
    REQUIRE(bad.witness);
    CHECK(!bad.witness->is_zero());
    for (Index a = 0; a < t.n; ++a) {
        CHECK(evaluate(fiber, t.mul(*bad.witness, Element::basis(a))).is_zero());
    }

    std::vector<Functional> family;
    for (Index e : g.units()) family.push_back(weights(g, [&](Index u) { return Scalar(g.source(u) == e ? 1 : 0); }));
    CHECK(it.faithful_set(family).faithful);
    CHECK(it.faithful_left_integral());
    CHECK(std::holds_alternative<RequiresFaithful>(it.modular_automorphism(fiber)));
    CHECK_THROWS_AS(value(it.modular_automorphism(fiber)), std::logic_error);
}

TEST_CASE("K(G): modular element is h/g") {
    Groupoid g = pair_groupoid(2);
    WmhaTables t = tabulate(KgAlgebra(g));
    IntegralTheory it(t);
    const Index e1 = g.index("(1,1)");
    Functional phi = weights(g, [](Index) { return Scalar(1); });
    Functional psi = weights(g, [&](Index u) { return Scalar(g.target(u) == e1 ? 2 : 1); });
    REQUIRE(it.is_left_integral(phi));
    REQUIRE(it.is_right_integral(psi));
    const auto d = value(it.modular_element(phi, psi));
    for (Index u = 0; u < t.n; ++u) CHECK(d.y[u] == psi[u]);
    CHECK(d.invertible);
}

TEST_CASE("K(G): Radon-Nikodym derivative and antipode square") {
    Groupoid g = pair_groupoid(3);
    WmhaTables t = tabulate(KgAlgebra(g));
    IntegralTheory it(t);
    const Index e1 = g.index("(1,1)");
    Functional g1 = weights(g, [](Index) { return Scalar(1); });
    Functional g2 = weights(g, [&](Index u) { return Scalar(g.source(u) == e1 ? 2 : 1); });
    REQUIRE(it.is_left_integral(g2));
    const auto rn = value(it.radon_nikodym(g1, g2));
    for (Index u = 0; u < t.n; ++u) CHECK(rn.y[u] == g2[u] / g1[u]);
    CHECK(rn.in_source_algebra);
    CHECK(rn.coproduct_identity);
    CHECK(rn.invertible);

    const auto s2 = value(it.antipode_square_density(g1));
    CHECK(s2.y == t.unit);
    CHECK(s2.in_source_algebra);

    const auto m = value(it.modular_automorphism(g2));
    CHECK(m.sigma == AlgMap::identity([&] {
              std::vector<Index> ks(t.n);
              for (Index k = 0; k < t.n; ++k) ks[k] = k;
              return ks;
          }()));
    CHECK(m.automorphism);
    CHECK(m.preserves_phi);
    CHECK(m.preserves_source);
    CHECK(it.spanning_forms(it.left_integrals(), it.right_integrals()) == t.n);
}

TEST_CASE("CG: weighted trace has a scaling modular automorphism") {
    Groupoid g = pair_groupoid(2);
    WmhaTables t = tabulate(CgAlgebra(g));
    IntegralTheory it(t);
    auto c = [&](Index e) { return Scalar(e == g.index("(1,1)") ? 1 : 3); };
    Functional phi = weights(g, [&](Index u) { return g.is_unit(u) ? c(u) : Scalar(); });
    REQUIRE(it.is_left_integral(phi));
    const auto m = value(it.modular_automorphism(phi));
    for (Index p = 0; p < t.n; ++p) CHECK(m.sigma.column(p) == (c(g.target(p)) / c(g.source(p))) * Element::basis(p));
    CHECK(m.automorphism);
    CHECK(m.preserves_phi);
    CHECK(m.preserves_source);
    CHECK(it.spanning_forms(it.left_integrals(), it.right_integrals()) == t.n);
}
