#include <doctest.h>

#include "wmha/linalg.hpp"

#include <random>

using namespace wmha;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("scalar parsing and printing round trip") {
    CHECK(Scalar::parse("3") == Scalar(3));
    CHECK(Scalar::parse("-1/2") == Scalar(-1, 2));
    CHECK(Scalar::parse("2i") == Scalar(Rational(0), Rational(2)));
    CHECK(Scalar::parse("1/2-3/4i") == Scalar(Rational(1, 2), Rational(-3, 4)));
    CHECK(Scalar::parse("i") == Scalar::i());
    CHECK(Scalar::parse("-i") == -Scalar::i());
    CHECK(Scalar::parse("2/4").str() == "1/2");
    for (const char* s : {"0", "7", "-5/3", "i", "-i", "1/2-3/4i", "3+i", "-2/3i"})
        CHECK(Scalar::parse(Scalar::parse(s).str()) == Scalar::parse(s));
    CHECK_THROWS(Scalar::parse("1/0"));
    CHECK_THROWS(Scalar::parse("x"));
}

TEST_CASE("scalar field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        const Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Scalar() == a);
        CHECK(a * Scalar(1) == a);
        CHECK(a - a == Scalar());
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    }
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
}

TEST_CASE("solve_linear: one-equation kernel and free variable") {
    std::vector<LinearConstraint<std::string>> cons{{FinVec<std::string>{{"x", 1}, {"y", 1}}, Scalar()}};
    auto res = solve_linear(cons, std::vector<std::string>{"x", "y"});
    REQUIRE(res.consistent);
    REQUIRE(res.basis.size() == 1);
    // Any basis of the line is a multiple of (1,-1).
    const auto& v = res.basis[0];
    CHECK(v["x"] == -v["y"]);
    CHECK(!v.is_zero());

    auto free = solve_linear(std::vector<LinearConstraint<std::string>>{}, std::vector<std::string>{"x"});
    REQUIRE(free.basis.size() == 1);
    CHECK(free.basis[0] == FinVec<std::string>{{"x", 1}});
}

TEST_CASE("solve_linear distinguishes no solution from zero space") {
    using C = LinearConstraint<int>;
    std::vector<C> bad{{FinVec<int>{{0, 1}}, Scalar(1)}, {FinVec<int>{{0, 2}}, Scalar(3)}};
    CHECK_FALSE(solve_linear(bad, std::vector<int>{0}).consistent);

    std::vector<C> unique{{FinVec<int>{{0, 1}}, Scalar()}};
    auto r = solve_linear(unique, std::vector<int>{0});
    CHECK(r.consistent);
    CHECK(r.zero_space());
}

TEST_CASE("solve_linear solutions satisfy every constraint and are independent") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        const int nvar = 6, ncons = 4;
        std::vector<int> unknowns(nvar);
        for (int k = 0; k < nvar; ++k) unknowns[k] = k;
        std::vector<LinearConstraint<int>> cons;
        for (int j = 0; j < ncons; ++j) {
            LinearConstraint<int> c;
            for (int k = 0; k < nvar; ++k)
                if (coin(rng) == 0) c.lhs.add(k, random_scalar(rng));
            cons.push_back(c);
        }
        auto res = solve_linear(cons, unknowns);
        REQUIRE(res.consistent);
        for (const auto& v : res.basis)
            for (const auto& c : cons) {
                Scalar s;
                for (const auto& [k, a] : c.lhs) s += a * v[k];
                CHECK(s.is_zero());
            }
        CHECK(rank_of(res.basis) == res.basis.size());
        CHECK(res.basis.size() + rank_of([&] {
                  std::vector<FinVec<int>> rows;
                  for (const auto& c : cons) rows.push_back(c.lhs);
                  return rows;
              }()) == static_cast<std::size_t>(nvar));
    }
}

TEST_CASE("affine solve returns a particular solution") {
    std::vector<LinearConstraint<int>> cons{{FinVec<int>{{0, 1}, {1, 1}}, Scalar(3)},
                                            {FinVec<int>{{0, 1}, {1, -1}}, Scalar::i()}};
    auto r = solve_linear(cons, std::vector<int>{0, 1});
    REQUIRE(r.particular);
    const auto& p = *r.particular;
    CHECK(p[0] + p[1] == Scalar(3));
    CHECK(p[0] - p[1] == Scalar::i());
    CHECK(r.zero_space());
}

TEST_CASE("matrix inverse is exact") {
    Matrix m{{Scalar(2), Scalar(1)}, {Scalar(1), Scalar::i()}};
    auto inv = invert(m);
    REQUIRE(inv);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            Scalar s;
            for (int k = 0; k < 2; ++k) s += m[i][k] * (*inv)[k][j];
            CHECK(s == Scalar(i == j ? 1 : 0));
        }
    CHECK_FALSE(invert(Matrix{{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(4)}}));
}

TEST_CASE("rank across many blocks") {
    // 40 rows in a 5-dimensional space spanned by the first three unit vectors.
    Matrix rows;
    for (int k = 0; k < 40; ++k) rows.push_back(Row{Scalar(k % 3 == 0 ? 1 : 0), Scalar(k % 3 == 1 ? 1 : 0), Scalar(k % 3 == 2 ? k : 0), Scalar(), Scalar()});
    CHECK(reduce_rows(rows, 5).rank() == 3);
}

TEST_CASE("tensor products are bilinear") {
    Element e1 = Element::basis(1), e2 = Element::basis(2);
    Tensor2 t = tensor2(e1, e2);
    CHECK(t == Tensor2{{{1, 2}, Scalar(1)}});
    CHECK(tensor2(Scalar(2) * e1, Scalar(3) * e2) == Tensor2{{{1, 2}, Scalar(6)}});
    CHECK(tensor2(Element{}, e2).is_zero());
    Element u{{0, 1}, {1, 2}}, v{{3, 1}, {4, -1}, {5, Scalar::i()}};
    CHECK(tensor2(u, v).support_size() == 6);
}

TEST_CASE("linear maps compose associatively") {
    AlgMap f, g, h;
    f.set_column(0, Element{{1, 2}});
    f.set_column(1, Element{{0, 1}, {1, 1}});
    g.set_column(0, Element{{0, 3}});
    g.set_column(1, Element{{1, -1}});
    h.set_column(0, Element{{1, 1}});
    h.set_column(1, Element{{0, 1}});
    CHECK(f.after(g).after(h) == f.after(g.after(h)));
    CHECK(AlgMap::identity({0, 1}).after(f) == f);
}
