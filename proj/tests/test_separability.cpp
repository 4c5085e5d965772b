#include <doctest.h>

#include "wmha/duality.hpp"
#include "wmha/separability.hpp"

using namespace wmha;

namespace {

Element b(Index k) { return Element::basis(k); }

std::vector<SepData> examples() {
    return {sep_function_example(2, {1, 0}), sep_function_example(3, {1, 2, 0}),
            sep_matrix_example({Scalar(1, 3), Scalar(2, 3)})};
}

void require_laws(const std::vector<LawResult>& laws, const std::string& where) {
    for (const auto& l : laws) {
        INFO(where << ": " << l.name << " " << l.detail);
        CHECK(l.ok);
    }
}

const LawResult& find_law(const std::vector<LawResult>& laws, const std::string& name) {
    for (const auto& l : laws)
        if (l.name == name) return l;
    FAIL("missing law " << name);
    return laws.front();
}

}  // namespace

TEST_CASE("algebras") {
    const FiniteAlgebra m = matrix_algebra(2);
    CHECK(m.unit == Element{{0, Scalar(1)}, {3, Scalar(1)}});
    CHECK(m.prod(1, 2) == b(0));  // e12 e21 = e11
    const FiniteAlgebra op = opposite(m);
    CHECK(op.prod(2, 1) == b(0));
    CHECK(function_algebra(3).unit == Element{{0, Scalar(1)}, {1, Scalar(1)}, {2, Scalar(1)}});
    CHECK_THROWS_AS(make_algebra("bad", {"x"}, {Element{}}), std::invalid_argument);
}

TEST_CASE("separability data validate") {
    for (const auto& d : examples()) require_laws(validate_sep(d), d.name);

    const SepData f = sep_function_example(3, {1, 2, 0});
    const SepDerived x = derive_functionals(f);
    // S_B(d_y) = d_tau(y), phi_B is the sum of values, sigma trivial
    CHECK(f.S_B.column(0) == b(1));
    CHECK(f.S_C.column(1) == b(0));
    CHECK(x.phi_B == Functional(3, Scalar(1)));
    CHECK(x.sigma_B == AlgMap::identity({0, 1, 2}));
}

TEST_CASE("weighted matrix example") {
    const SepData d = sep_matrix_example({Scalar(1, 3), Scalar(2, 3)});
    const SepDerived x = derive_functionals(d);
    // S_B(e_pq) = (y_p / y_q) e_pq, phi_B(e_ii) = 1 / (x_i y_i) with x = (1, 1)
    CHECK(d.S_B.column(1) == Scalar(1, 2) * b(1));
    CHECK(d.S_B.column(2) == Scalar(2) * b(2));
    CHECK(x.phi_B == Functional{Scalar(3), Scalar(0), Scalar(0), Scalar(3, 2)});
    // sigma_B(e_pq) = (phi_B(e_pp) / phi_B(e_qq)) e_pq
    CHECK(x.sigma_B.column(1) == Scalar(2) * b(1));
    CHECK(x.sigma_B.column(2) == Scalar(1, 2) * b(2));
    CHECK(x.sigma_B.column(0) == b(0));
}

TEST_CASE("dropping a term breaks E") {
    SepData d = sep_function_example(3, {1, 2, 0});
    d.E.set({2, 0}, Scalar(0));
    const auto laws = validate_sep(d);
    const auto& full = find_law(laws, "E full");
    CHECK_FALSE(full.ok);
    CHECK(full.detail.find("2 of 3") != std::string::npos);
    CHECK_THROWS_AS(SepWmha{d}, std::invalid_argument);
    CHECK_FALSE(solve_S_B(d.B, d.C, d.E).has_value());
}

TEST_CASE("C(x)B is a weak multiplier Hopf algebra") {
    for (const auto& d : examples()) {
        const SepWmha w(d);
        const WmhaTables t = tabulate(w);
        CHECK(check_axioms(w, t, {}).ok());
        require_laws(check_sep_algebra(w, t), t.name);

        IntegralTheory it(t);
        for (const auto& phi : it.left_integrals())
            for (const auto& psi : it.right_integrals())
                for (const auto& item : it.transfer_relations(phi, psi)) {
                    INFO(t.name << " item " << item.item);
                    CHECK(item.ok);
                }
    }
}

TEST_CASE("B<>C is a weak multiplier Hopf algebra") {
    for (const auto& d : examples()) {
        const DiamondWmha w(d);
        const WmhaTables t = tabulate(w);
        const auto report = check_axioms(w, t, {});
        for (const auto& l : report.laws) {
            INFO(t.name << ": " << l.name << " " << l.detail);
            CHECK(l.ok);
        }
        require_laws(check_diamond(w, t), t.name);
    }
}

TEST_CASE("B<>C is the dual of C(x)B") {
    for (const auto& d : examples()) {
        const SepWmha a(d);
        const WmhaTables at = tabulate(a);
        const WmhaTables dt = tabulate(DiamondWmha(d));
        const AlgMap f = diamond_to_dual(d);
        CHECK(f == diamond_to_dual_via_integral(d));
        require_laws(check_isomorphism(dt, transpose_dual(at), f), d.name + " transpose");

        DualWmha dual(at, {a.two_sided_integral()});
        require_laws(check_isomorphism(dt, tabulate(dual), f), d.name + " integral dual");
    }
}

TEST_CASE("modular data of the diamond") {
    const SepData d = sep_matrix_example({Scalar(1, 3), Scalar(2, 3)});
    const DiamondWmha w(d);
    const WmhaTables t = tabulate(w);
    const Element delta = w.modular_element();
    // Not central: sigma_B is nontrivial on the off-diagonal units.
    CHECK(t.mul(delta, w.diamond(b(1), b(0))) != t.mul(w.diamond(b(1), b(0)), delta));
    CHECK(t.mul(delta, w.modular_element_inverse()) == t.unit);
}
