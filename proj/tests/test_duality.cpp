#include <doctest.h>

#include "wmha/cg.hpp"
#include "wmha/duality.hpp"
#include "wmha/kg.hpp"

using namespace wmha;

namespace {

Element b(Index k) { return Element::basis(k); }

Functional uniform(std::size_t n) { return Functional(n, Scalar(1)); }

Functional unit_indicator(const Groupoid& g) {
    Functional f(g.size());
    for (Index e : g.units()) f[e] = Scalar(1);
    return f;
}

std::vector<Groupoid> corpus() {
    return {pair_groupoid(2),
            pair_groupoid(3),
            one_object_group(cyclic_group(2)),
            group_bundle({cyclic_group(2), cyclic_group(3)}),
            action_groupoid(cyclic_group(2), {"1", "2"}, {{0, 1}, {1, 0}}),
            one_object_group(symmetric_group(3))};
}

void require_laws(const std::vector<LawResult>& laws, const std::string& where) {
    for (const auto& l : laws) {
        INFO(where << ": " << l.name << " " << l.detail);
        CHECK(l.ok);
    }
}

AlgMap index_map(std::size_t n) {
    AlgMap f;
    for (Index k = 0; k < n; ++k) f.set_column(k, b(k));
    return f;
}

}  // namespace

TEST_CASE("dual of K(G) is CG") {
    for (const Groupoid& g : corpus()) {
        const WmhaTables kt = tabulate(KgAlgebra(g));
        DualWmha dual(kt, {uniform(kt.n)});
        const WmhaTables dt = tabulate(dual);
        require_laws(check_axioms(dual, dt, {}).laws, dt.name);
        require_laws(check_duality(kt, dual, dt), dt.name);
        // The dual basis element at delta_p is evaluation at p, i.e. lambda_p.
        const WmhaTables ct = tabulate(CgAlgebra(g));
        require_laws(check_isomorphism(dt, ct, index_map(kt.n)), "dual to CG");

        Tensor2 e_hat;
        for (Index e : g.units()) e_hat.add({e, e}, Scalar(1));
        CHECK(dt.E == e_hat);
        for (Index p = 0; p < kt.n; ++p) {
            CHECK(dt.eps[p] == Scalar(1));
            CHECK(dt.delta[p] == tensor2(b(p), b(p)));
        }
    }
}

TEST_CASE("dual of K(pair groupoid): products and T1hat") {
    const Groupoid g = pair_groupoid(2);
    const WmhaTables kt = tabulate(KgAlgebra(g));
    DualWmha dual(kt, {uniform(kt.n)});
    for (Index p = 0; p < kt.n; ++p)
        for (Index q = 0; q < kt.n; ++q) {
            const auto pq = g.compose(p, q);
            CHECK(dual.product(p, q) == (pq ? b(*pq) : Element{}));
            CHECK(dual.T1(tensor2(b(p), b(q))) == (pq ? tensor2(b(p), b(*pq)) : Tensor2{}));
        }
}

TEST_CASE("dual of CG and of a faithful set without a designated integral") {
    for (const Groupoid& g : corpus()) {
        const WmhaTables ct = tabulate(CgAlgebra(g));
        DualWmha dual(ct, {unit_indicator(g)});
        const WmhaTables dt = tabulate(dual);
        require_laws(check_axioms(dual, dt, {}).laws, dt.name);
        require_laws(check_duality(ct, dual, dt, {false}), dt.name);
    }
    const WmhaTables kt = tabulate(KgAlgebra(pair_groupoid(2)));
    DualWmha dual(kt, IntegralTheory(kt).left_integrals());
    const WmhaTables dt = tabulate(dual);
    require_laws(check_axioms(dual, dt, {}).laws, "set");
    require_laws(check_duality(kt, dual, dt), "set");
}

TEST_CASE("biduality") {
    for (const Groupoid& g : corpus()) {
        for (int kind = 0; kind < 2; ++kind) {
            const WmhaTables t = kind == 0 ? tabulate(KgAlgebra(g)) : tabulate(CgAlgebra(g));
            DualWmha dual(t, default_faithful_set(t));
            const WmhaTables dt = tabulate(dual);
            DualWmha bidual(dt, default_faithful_set(dt));
            const WmhaTables bt = tabulate(bidual);
            require_laws(check_axioms(bidual, bt, {}).laws, bt.name);
            require_laws(check_isomorphism(t, bt, evaluation_map(t)), "bidual of " + t.name);
        }
    }
}

TEST_CASE("dual integrals on the dual of K(G)") {
    const Groupoid g = pair_groupoid(3);
    const WmhaTables kt = tabulate(KgAlgebra(g));
    DualWmha dual(kt, {uniform(kt.n)});
    for (Index a = 0; a < kt.n; ++a) {
        const Functional psi = dual.dual_integral(b(a));
        for (Index p = 0; p < kt.n; ++p) {
            // psi_a(lambda_p) = sum of a(u) over s(u) = p
            Scalar expect;
            for (Index u = 0; u < kt.n; ++u)
                if (g.source(u) == p) expect += b(a)[u];
            CHECK(psi[p] == expect);
        }
    }
    auto p = distinguished_source_functional(kt);
    REQUIRE(p);
    const Functional hat = value(dual.single_dual_integral(*p));
    CHECK(hat == unit_indicator(g));
}

TEST_CASE("gamma_s on K(G)") {
    const Groupoid g = pair_groupoid(3);
    const WmhaTables kt = tabulate(KgAlgebra(g));
    DualWmha dual(kt, {uniform(kt.n)});
    const WmhaTables dt = tabulate(dual);
    const Gamma gs = gamma_s(kt, dt);
    REQUIRE(gs.ok());
    CHECK(gs.domain.size() == 3);
    for (std::size_t i = 0; i < gs.domain.size(); ++i) {
        Element expect;
        for (Index e : g.units()) expect.add(e, gs.domain[i][e]);
        CHECK(gs.images[i] == expect);
    }
    CHECK(gamma_t(kt, dt).ok());
}

TEST_CASE("Hopf case: R1hat inverts T1hat") {
    const WmhaTables kt = tabulate(KgAlgebra(one_object_group(cyclic_group(3))));
    DualWmha dual(kt, {uniform(kt.n)});
    for (Index j = 0; j < kt.n; ++j)
        for (Index k = 0; k < kt.n; ++k) {
            const Tensor2 t = tensor2(b(j), b(k));
            CHECK(dual.R1(dual.T1(t)) == t);
            CHECK(dual.T1(dual.R1(t)) == t);
        }
}

TEST_CASE("extended pairing and dual multipliers") {
    const WmhaTables kt = tabulate(KgAlgebra(pair_groupoid(2)));
    const Functional phi = uniform(kt.n);
    for (Index a = 0; a < kt.n; ++a) {
        const Element w = as_vector(right_translate(kt, phi, b(a)));
        CHECK(extend_pairing(kt, multiplier_of(kt, kt.unit), w) == evaluate(phi, b(a)));
        CHECK(extend_pairing(kt, multiplier_of(kt, kt.unit), Element{}) == Scalar());
    }
    const WmhaTables dt = transpose_dual(kt);
    CHECK(dual_multiplier(dt, dt.unit));
}

TEST_CASE("a non-faithful integral cannot build a dual") {
    const Groupoid g = pair_groupoid(2);
    const WmhaTables kt = tabulate(KgAlgebra(g));
    Functional fiber(kt.n);
    for (Index u = 0; u < kt.n; ++u) fiber[u] = Scalar(g.source(u) == g.index("(1,1)") ? 1 : 0);
    CHECK_THROWS_AS(DualWmha(kt, {fiber}), std::invalid_argument);
}
