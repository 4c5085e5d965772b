#include "wmha/separability.hpp"

#include <stdexcept>

namespace wmha {

namespace {

Element e(Index k) { return Element::basis(k); }

LawResult pass(std::string name) { return {std::move(name), true, {}, {}}; }
LawResult fail(std::string name, std::vector<std::string> witness, std::string detail = {}) {
    return {std::move(name), false, std::move(witness), std::move(detail)};
}

std::vector<Index> iota(std::size_t n) {
    std::vector<Index> v(n);
    for (Index k = 0; k < n; ++k) v[k] = k;
    return v;
}

// Product in B (x) C, keys (b, c).
Tensor2 mul_bc(const FiniteAlgebra& B, const FiniteAlgebra& C, const Tensor2& x, const Tensor2& y) {
    Tensor2 out;
    for (const auto& [k, a] : x)
        for (const auto& [l, b] : y) out.axpy(a * b, tensor2(B.prod(k.first, l.first), C.prod(k.second, l.second)));
    return out;
}

std::optional<AlgMap> invert_map(const AlgMap& f, std::size_t n) {
    Matrix m(n, Row(n));
    for (Index j = 0; j < n; ++j)
        for (const auto& [i, c] : f.column(j)) {
            if (i >= n) return std::nullopt;
            m[i][j] = c;
        }
    auto inv = invert(m);
    if (!inv) return std::nullopt;
    AlgMap out;
    for (Index j = 0; j < n; ++j) {
        Element col;
        for (Index i = 0; i < n; ++i) col.add(i, (*inv)[i][j]);
        out.set_column(j, col);
    }
    return out;
}

std::optional<Element> unique_solution(const std::vector<LinearConstraint<Index>>& cons, std::size_t n) {
    auto sol = solve_linear(cons, iota(n));
    if (!sol.consistent || !sol.zero_space()) return std::nullopt;
    return *sol.particular;
}

// Constraints sum_l s_l lhs[l] = rhs on the coefficients of Tensor2s.
std::optional<Element> solve_tensor(const std::vector<Tensor2>& lhs, const Tensor2& rhs) {
    std::map<Key2, LinearConstraint<Index>> rows;
    for (Index l = 0; l < lhs.size(); ++l)
        for (const auto& [k, c] : lhs[l]) rows[k].lhs.add(l, c);
    for (const auto& [k, c] : rhs) rows[k].rhs = c;
    std::vector<LinearConstraint<Index>> cons;
    for (auto& [k, c] : rows) cons.push_back(std::move(c));
    return unique_solution(cons, lhs.size());
}

struct Partial {
    std::optional<Functional> phi_B, phi_C;
    std::optional<AlgMap> S_B_inv, S_C_inv, sigma_B, sigma_C;
};

Partial derive_partial(const SepData& d) {
    Partial p;
    const auto& B = d.B;
    const auto& C = d.C;
    std::vector<LinearConstraint<Index>> cb(C.n), cc(B.n);
    for (Index j = 0; j < C.n; ++j) cb[j].rhs = C.unit[j];
    for (Index i = 0; i < B.n; ++i) cc[i].rhs = B.unit[i];
    for (const auto& [k, c] : d.E) {
        cb[k.second].lhs.add(k.first, c);
        cc[k.first].lhs.add(k.second, c);
    }
    if (auto s = unique_solution(cb, B.n)) p.phi_B = as_functional(*s, B.n);
    if (auto s = unique_solution(cc, C.n)) p.phi_C = as_functional(*s, C.n);
    if (B.n == C.n) {
        p.S_B_inv = invert_map(d.S_B, B.n);
        p.S_C_inv = invert_map(d.S_C, C.n);
        if (auto sig = invert_map(d.S_C.after(d.S_B), B.n)) p.sigma_B = *sig;
        p.sigma_C = d.S_B.after(d.S_C);
    }
    return p;
}

}  // namespace

Element FiniteAlgebra::mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) out.axpy(a * b, prod(i, j));
    return out;
}

FiniteAlgebra make_algebra(std::string name, std::vector<std::string> labels, std::vector<Element> mult) {
    FiniteAlgebra a;
    a.name = std::move(name);
    a.n = labels.size();
    a.labels = std::move(labels);
    a.mult = std::move(mult);
    if (a.mult.size() != a.n * a.n) throw std::invalid_argument(a.name + ": product table has the wrong size");
    for (Index i = 0; i < a.n; ++i)
        for (Index j = 0; j < a.n; ++j)
            for (Index k = 0; k < a.n; ++k)
                if (a.mul(a.prod(i, j), e(k)) != a.mul(e(i), a.prod(j, k)))
                    throw std::invalid_argument(a.name + ": not associative at (" + a.labels[i] + ", " + a.labels[j] + ", " + a.labels[k] + ")");
    std::vector<LinearConstraint<Index>> cons;
    for (Index k = 0; k < a.n; ++k)
        for (int side = 0; side < 2; ++side)
            for (Index r = 0; r < a.n; ++r) {
                LinearConstraint<Index> c;
                for (Index u = 0; u < a.n; ++u) c.lhs.add(u, (side == 0 ? a.prod(u, k) : a.prod(k, u))[r]);
                c.rhs = Scalar(r == k ? 1 : 0);
                cons.push_back(std::move(c));
            }
    auto sol = solve_linear(cons, iota(a.n));
    if (!sol.consistent) throw std::invalid_argument(a.name + ": no unit");
    a.unit = *sol.particular;
    return a;
}

FiniteAlgebra function_algebra(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<Element> mult(n * n);
    for (Index i = 0; i < n; ++i) {
        labels.push_back("d" + std::to_string(i + 1));
        mult[i * n + i] = e(i);
    }
    return make_algebra("K(" + std::to_string(n) + ")", labels, mult);
}

FiniteAlgebra matrix_algebra(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<Element> mult(n * n * n * n);
    const std::size_t m = n * n;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k)
                for (Index l = 0; l < n; ++l)
                    if (j == k) mult[(i * n + j) * m + (k * n + l)] = e(i * n + l);
    return make_algebra("M" + std::to_string(n), labels, mult);
}

FiniteAlgebra opposite(const FiniteAlgebra& a) {
    std::vector<Element> mult(a.n * a.n);
    for (Index i = 0; i < a.n; ++i)
        for (Index j = 0; j < a.n; ++j) mult[i * a.n + j] = a.prod(j, i);
    return make_algebra(a.name + "^op", a.labels, mult);
}

std::optional<AlgMap> solve_S_B(const FiniteAlgebra& B, const FiniteAlgebra& C, const Tensor2& E) {
    std::vector<Tensor2> lhs;
    for (Index l = 0; l < C.n; ++l) lhs.push_back(mul_bc(B, C, E, tensor2(B.unit, e(l))));
    AlgMap s;
    for (Index i = 0; i < B.n; ++i) {
        auto x = solve_tensor(lhs, mul_bc(B, C, E, tensor2(e(i), C.unit)));
        if (!x) return std::nullopt;
        s.set_column(i, *x);
    }
    return s;
}

std::optional<AlgMap> solve_S_C(const FiniteAlgebra& B, const FiniteAlgebra& C, const Tensor2& E) {
    std::vector<Tensor2> lhs;
    for (Index k = 0; k < B.n; ++k) lhs.push_back(mul_bc(B, C, tensor2(e(k), C.unit), E));
    AlgMap s;
    for (Index j = 0; j < C.n; ++j) {
        auto x = solve_tensor(lhs, mul_bc(B, C, tensor2(B.unit, e(j)), E));
        if (!x) return std::nullopt;
        s.set_column(j, *x);
    }
    return s;
}

std::vector<LawResult> validate_sep(const SepData& d) {
    const auto& B = d.B;
    const auto& C = d.C;
    std::vector<LawResult> out;

    out.push_back(mul_bc(B, C, d.E, d.E) == d.E ? pass("E idempotent") : fail("E idempotent", {}, "E^2 != E"));

    {
        const auto l = left_legs(d.E), r = right_legs(d.E);
        const std::size_t rl = rank_of(l), rr = rank_of(r);
        auto missing = [](const std::vector<Element>& legs, const FiniteAlgebra& a) {
            for (Index k = 0; k < a.n; ++k)
                if (!in_span(e(k), legs)) return std::vector<std::string>{a.labels[k]};
            return std::vector<std::string>{};
        };
        if (rl != B.n) out.push_back(fail("E full", missing(l, B), "left leg spans " + std::to_string(rl) + " of " + std::to_string(B.n) + " dimensions"));
        else if (rr != C.n) out.push_back(fail("E full", missing(r, C), "right leg spans " + std::to_string(rr) + " of " + std::to_string(C.n) + " dimensions"));
        else out.push_back(pass("E full"));
    }

    LawResult sb = pass("S_B compatibility"), sc = pass("S_C compatibility");
    for (Index i = 0; i < B.n && sb.ok; ++i)
        if (mul_bc(B, C, d.E, tensor2(e(i), C.unit)) != mul_bc(B, C, d.E, tensor2(B.unit, d.S_B.column(i))))
            sb = fail("S_B compatibility", {B.labels[i]}, "E(b(x)1) != E(1(x)S_B(b))");
    for (Index j = 0; j < C.n && sc.ok; ++j)
        if (mul_bc(B, C, tensor2(B.unit, e(j)), d.E) != mul_bc(B, C, tensor2(d.S_C.column(j), C.unit), d.E))
            sc = fail("S_C compatibility", {C.labels[j]}, "(1(x)c)E != (S_C(c)(x)1)E");
    out.push_back(sb);
    out.push_back(sc);

    LawResult ab = pass("S_B anti-homomorphism"), ac = pass("S_C anti-homomorphism");
    for (Index i = 0; i < B.n && ab.ok; ++i)
        for (Index j = 0; j < B.n; ++j)
            if (d.S_B.apply(B.prod(i, j)) != C.mul(d.S_B.column(j), d.S_B.column(i))) {
                ab = fail("S_B anti-homomorphism", {B.labels[i], B.labels[j]});
                break;
            }
    for (Index i = 0; i < C.n && ac.ok; ++i)
        for (Index j = 0; j < C.n; ++j)
            if (d.S_C.apply(C.prod(i, j)) != B.mul(d.S_C.column(j), d.S_C.column(i))) {
                ac = fail("S_C anti-homomorphism", {C.labels[i], C.labels[j]});
                break;
            }
    out.push_back(ab);
    out.push_back(ac);

    const Partial p = derive_partial(d);
    if (!p.S_B_inv || !p.S_C_inv) out.push_back(fail("regular", {}, "S_B or S_C is not bijective"));
    else out.push_back(pass("regular"));

    if (!p.phi_B || !p.phi_C) {
        out.push_back(fail("distinguished functionals", {}, "(phi_B(x)iota)E = 1 or (iota(x)phi_C)E = 1 has no unique solution"));
        return out;
    }
    out.push_back(pass("distinguished functionals"));

    auto gram_ok = [](const FiniteAlgebra& a, const Functional& f) {
        Matrix m(a.n, Row(a.n));
        for (Index i = 0; i < a.n; ++i)
            for (Index j = 0; j < a.n; ++j) m[i][j] = evaluate(f, a.prod(i, j));
        return invert(m).has_value();
    };
    out.push_back(gram_ok(B, *p.phi_B) && gram_ok(C, *p.phi_C) ? pass("faithful functionals")
                                                               : fail("faithful functionals", {}, "degenerate trace form"));

    if (!p.sigma_B || !p.sigma_C) {
        out.push_back(fail("KMS", {}, "sigma_B is undefined"));
        return out;
    }
    LawResult kms = pass("KMS");
    for (Index i = 0; i < B.n && kms.ok; ++i)
        for (Index j = 0; j < B.n; ++j)
            if (evaluate(*p.phi_B, B.prod(i, j)) != evaluate(*p.phi_B, B.mul(e(j), p.sigma_B->column(i)))) {
                kms = fail("KMS", {B.labels[i], B.labels[j]}, "phi_B(b b') != phi_B(b' sigma_B(b))");
                break;
            }
    for (Index i = 0; i < C.n && kms.ok; ++i)
        for (Index j = 0; j < C.n; ++j)
            if (evaluate(*p.phi_C, C.prod(i, j)) != evaluate(*p.phi_C, C.mul(e(j), p.sigma_C->column(i)))) {
                kms = fail("KMS", {C.labels[i], C.labels[j]}, "phi_C(c c') != phi_C(c' sigma_C(c))");
                break;
            }
    out.push_back(kms);
    return out;
}

SepDerived derive_functionals(const SepData& d) {
    for (const auto& l : validate_sep(d))
        if (!l.ok) throw std::invalid_argument("invalid separability data (" + l.name + "): " + l.detail);
    const Partial p = derive_partial(d);
    return {*p.phi_B, *p.phi_C, *p.sigma_B, *p.sigma_C, *p.S_B_inv, *p.S_C_inv};
}

SepData sep_function_example(std::size_t n, const std::vector<Index>& tau) {
    SepData d;
    d.name = "K(X" + std::to_string(n) + ")";
    d.B = function_algebra(n);
    d.C = function_algebra(n);
    for (Index x = 0; x < n; ++x) d.E.add({x, tau.at(x)}, Scalar(1));
    auto sb = solve_S_B(d.B, d.C, d.E);
    auto sc = solve_S_C(d.B, d.C, d.E);
    if (!sb || !sc) throw std::invalid_argument("no antipode maps for this E");
    d.S_B = *sb;
    d.S_C = *sc;
    return d;
}

SepData sep_matrix_example(const std::vector<Scalar>& y) {
    const std::size_t n = y.size();
    SepData d;
    d.name = "M" + std::to_string(n) + "-weighted";
    d.B = matrix_algebra(n);
    d.C = opposite(d.B);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) d.E.add({i * n + j, j * n + i}, y[j]);
    auto sb = solve_S_B(d.B, d.C, d.E);
    auto sc = solve_S_C(d.B, d.C, d.E);
    if (!sb || !sc) throw std::invalid_argument("no antipode maps for this E");
    d.S_B = *sb;
    d.S_C = *sc;
    return d;
}

// A = C (x) B

SepWmha::SepWmha(SepData d) : d_(std::move(d)), x_(derive_functionals(d_)) {}

std::string SepWmha::label(Index a) const { return d_.C.labels[a / d_.B.n] + "*" + d_.B.labels[a % d_.B.n]; }

Element SepWmha::embed(const Element& c, const Element& b) const {
    Element out;
    for (const auto& [k, x] : c)
        for (const auto& [l, y] : b) out.add(sep_index(d_, k, l), x * y);
    return out;
}

Element SepWmha::product(Index a, Index b) const {
    const std::size_t nb = d_.B.n;
    return embed(d_.C.prod(a / nb, b / nb), d_.B.prod(a % nb, b % nb));
}

Element SepWmha::mulA(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) out.axpy(a * b, product(i, j));
    return out;
}

Tensor2 SepWmha::mulA2(const Tensor2& x, const Tensor2& y) const {
    Tensor2 out;
    for (const auto& [k, a] : x)
        for (const auto& [l, b] : y) out.axpy(a * b, tensor2(product(k.first, l.first), product(k.second, l.second)));
    return out;
}

Tensor2 SepWmha::coproduct(Index a) const {
    // Delta(c b) = (c (x) 1)E(1 (x) b)
    const std::size_t nb = d_.B.n;
    const Index k = a / nb, l = a % nb;
    Tensor2 out;
    for (const auto& [ij, c] : d_.E) out.add({sep_index(d_, k, ij.first), sep_index(d_, ij.second, l)}, c);
    return out;
}

Tensor2 SepWmha::delta_right(Index a, const Element& b) const {
    return mulA2(coproduct(a), tensor2(local_unit({}), b));
}

Tensor2 SepWmha::delta_left(const Element& c, Index a) const {
    return mulA2(tensor2(c, local_unit({})), coproduct(a));
}

Scalar SepWmha::counit(Index a) const {
    const std::size_t nb = d_.B.n;
    return evaluate(x_.phi_B, d_.B.mul(d_.S_C.column(a / nb), e(a % nb)));
}

Element SepWmha::antipode(Index a) const {
    const std::size_t nb = d_.B.n;
    return embed(d_.S_B.column(a % nb), d_.S_C.column(a / nb));
}

Element SepWmha::antipode_inverse(Index a) const {
    const std::size_t nb = d_.B.n;
    return embed(x_.S_C_inv.column(a % nb), x_.S_B_inv.column(a / nb));
}

Multiplier2 SepWmha::canonical_idempotent() const {
    // E sits in M(A (x) A) as sum (1 (x) E1) (x) (E2 (x) 1).
    const SepWmha* self = this;
    auto act = [self](const Tensor2& t, bool left) {
        const auto& d = self->d_;
        const std::size_t nb = d.B.n;
        Tensor2 out;
        for (const auto& [xy, g] : t) {
            const Index k = xy.first / nb, l = xy.first % nb, k2 = xy.second / nb, l2 = xy.second % nb;
            for (const auto& [ij, c] : d.E) {
                const Element x = left ? self->embed(e(k), d.B.prod(ij.first, l)) : self->embed(e(k), d.B.prod(l, ij.first));
                const Element y = left ? self->embed(d.C.prod(ij.second, k2), e(l2)) : self->embed(d.C.prod(k2, ij.second), e(l2));
                out.axpy(g * c, tensor2(x, y));
            }
        }
        return out;
    };
    return {[act](const Tensor2& t) { return act(t, true); }, [act](const Tensor2& t) { return act(t, false); }};
}

Element SepWmha::local_unit(const std::vector<Element>&) const { return embed(d_.C.unit, d_.B.unit); }

Functional SepWmha::two_sided_integral() const {
    Functional f(dim());
    for (Index k = 0; k < d_.C.n; ++k)
        for (Index l = 0; l < d_.B.n; ++l) f[sep_index(d_, k, l)] = x_.phi_C[k] * x_.phi_B[l];
    return f;
}

// B <> C

DiamondWmha::DiamondWmha(SepData d) : d_(std::move(d)), x_(derive_functionals(d_)) {
    const std::size_t nb = d_.B.n, nc = d_.C.n;
    gram_.assign(nc, Row(nb));
    for (Index l = 0; l < nc; ++l)
        for (Index k = 0; k < nb; ++k) gram_[l][k] = pairing(e(l), e(k));
    auto inv = invert(gram_);
    if (!inv) throw std::invalid_argument("degenerate pairing between B and C");
    for (Index k = 0; k < nb; ++k)
        for (Index l = 0; l < nc; ++l) unit_.add(diamond_index(d_, k, l), (*inv)[k][l]);
}

std::string DiamondWmha::label(Index a) const { return d_.B.labels[a / d_.C.n] + "<>" + d_.C.labels[a % d_.C.n]; }

Element DiamondWmha::diamond(const Element& u, const Element& v) const {
    Element out;
    for (const auto& [k, x] : u)
        for (const auto& [l, y] : v) out.add(diamond_index(d_, k, l), x * y);
    return out;
}

Scalar DiamondWmha::pairing(const Element& v, const Element& u) const {
    return evaluate(x_.phi_B, d_.B.mul(d_.S_C.apply(v), u));
}

Element DiamondWmha::product(Index a, Index b) const {
    // (u<>v)(u'<>v') = eps(v u') u<>v'
    const std::size_t nc = d_.C.n;
    return gram_[a % nc][b / nc] * Element::basis(diamond_index(d_, a / nc, b % nc));
}

Element DiamondWmha::dmul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) out.axpy(a * b, product(i, j));
    return out;
}

Tensor2 DiamondWmha::delta_B(const Element& u) const {
    Tensor2 out;
    for (const auto& [ij, c] : d_.E) out.axpy(c, tensor2(e(ij.first), d_.B.mul(d_.S_C.column(ij.second), u)));
    return out;
}

Tensor2 DiamondWmha::delta_C(const Element& v) const {
    Tensor2 out;
    for (const auto& [ij, c] : d_.E) out.axpy(c, tensor2(d_.C.mul(v, d_.S_B.column(ij.first)), e(ij.second)));
    return out;
}

Tensor2 DiamondWmha::gamma_B(const Tensor2& uu) const {
    Tensor2 out;
    for (const auto& [pq, a] : uu) {
        const Element w = d_.B.prod(pq.first, pq.second);
        for (const auto& [ij, c] : d_.E) out.axpy(a * c, tensor2(d_.B.mul(w, e(ij.first)), d_.S_C.column(ij.second)));
    }
    return out;
}

Tensor2 DiamondWmha::gamma_C(const Tensor2& vv) const {
    Tensor2 out;
    for (const auto& [pq, a] : vv) {
        const Element w = d_.C.prod(pq.first, pq.second);
        for (const auto& [ij, c] : d_.E) out.axpy(a * c, tensor2(d_.S_B.column(ij.first), d_.C.mul(e(ij.second), w)));
    }
    return out;
}

Tensor2 DiamondWmha::coproduct(Index a) const {
    const std::size_t nc = d_.C.n;
    const Tensor2 db = delta_B(e(a / nc)), dc = delta_C(e(a % nc));
    Tensor2 out;
    for (const auto& [pq, x] : db)
        for (const auto& [rs, y] : dc) out.add({diamond_index(d_, pq.first, rs.first), diamond_index(d_, pq.second, rs.second)}, x * y);
    return out;
}

Tensor2 DiamondWmha::delta_right(Index a, const Element& b) const {
    Tensor2 out;
    for (const auto& [k, c] : coproduct(a)) out.axpy(c, tensor2(e(k.first), dmul(e(k.second), b)));
    return out;
}

Tensor2 DiamondWmha::delta_left(const Element& c, Index a) const {
    Tensor2 out;
    for (const auto& [k, x] : coproduct(a)) out.axpy(x, tensor2(dmul(c, e(k.first)), e(k.second)));
    return out;
}

Scalar DiamondWmha::counit(Index a) const { return x_.phi_B[a / d_.C.n] * x_.phi_C[a % d_.C.n]; }

Element DiamondWmha::antipode(Index a) const {
    const std::size_t nc = d_.C.n;
    return diamond(x_.S_B_inv.column(a % nc), x_.S_C_inv.column(a / nc));
}

Element DiamondWmha::antipode_inverse(Index a) const {
    const std::size_t nc = d_.C.n;
    return diamond(d_.S_C.column(a % nc), d_.S_B.column(a / nc));
}

Multiplier2 DiamondWmha::canonical_idempotent() const {
    // Multipliers act on the B legs from the left and on the C legs from the right.
    const DiamondWmha* self = this;
    auto left = [self](const Tensor2& t) {
        const std::size_t nc = self->d_.C.n;
        Tensor2 out;
        for (const auto& [xy, g] : t) {
            const Tensor2 p = self->gamma_B(tensor2(e(xy.first / nc), e(xy.second / nc)));
            for (const auto& [uu, c] : p)
                out.add({diamond_index(self->d_, uu.first, xy.first % nc), diamond_index(self->d_, uu.second, xy.second % nc)}, g * c);
        }
        return out;
    };
    auto right = [self](const Tensor2& t) {
        const std::size_t nc = self->d_.C.n;
        Tensor2 out;
        for (const auto& [xy, g] : t) {
            const Tensor2 p = self->gamma_C(tensor2(e(xy.first % nc), e(xy.second % nc)));
            for (const auto& [vv, c] : p)
                out.add({diamond_index(self->d_, xy.first / nc, vv.first), diamond_index(self->d_, xy.second / nc, vv.second)}, g * c);
        }
        return out;
    };
    return {left, right};
}

Functional DiamondWmha::right_integral(const Element& x) const {
    Functional f(dim());
    for (Index k = 0; k < d_.B.n; ++k)
        for (Index l = 0; l < d_.C.n; ++l)
            f[diamond_index(d_, k, l)] = evaluate(x_.phi_C, d_.C.mul(d_.C.mul(d_.S_B.column(k), x), e(l)));
    return f;
}

Functional DiamondWmha::left_integral(const Element& y) const {
    Functional f(dim());
    for (Index k = 0; k < d_.B.n; ++k)
        for (Index l = 0; l < d_.C.n; ++l)
            f[diamond_index(d_, k, l)] = evaluate(x_.phi_B, d_.B.mul(d_.B.mul(e(k), y), d_.S_C.column(l)));
    return f;
}

Element DiamondWmha::modular_element() const {
    // delta . 1 with delta(u<>v) = sigma_B^-2(u)<>v, and sigma_B^-1 = S_C S_B.
    const AlgMap s = d_.S_C.after(d_.S_B);
    const AlgMap s2 = s.after(s);
    Element out;
    for (const auto& [kl, c] : unit_) out.axpy(c, diamond(s2.column(kl / d_.C.n), e(kl % d_.C.n)));
    return out;
}

Element DiamondWmha::modular_element_inverse() const {
    const AlgMap s2 = x_.sigma_B.after(x_.sigma_B);
    Element out;
    for (const auto& [kl, c] : unit_) out.axpy(c, diamond(s2.column(kl / d_.C.n), e(kl % d_.C.n)));
    return out;
}

AlgMap diamond_to_dual(const SepData& d) {
    const SepDerived x = derive_functionals(d);
    AlgMap f;
    for (Index k = 0; k < d.B.n; ++k)
        for (Index l = 0; l < d.C.n; ++l) {
            Element w;
            for (Index i = 0; i < d.C.n; ++i)
                for (Index j = 0; j < d.B.n; ++j)
                    w.add(sep_index(d, i, j), evaluate(x.phi_B, d.B.mul(e(j), d.S_C.column(l))) *
                                                  evaluate(x.phi_C, d.C.mul(d.S_B.column(k), e(i))));
            f.set_column(diamond_index(d, k, l), w);
        }
    return f;
}

AlgMap diamond_to_dual_via_integral(const SepData& d) {
    const SepWmha a(d);
    const Functional phi = a.two_sided_integral();
    const auto& x = a.derived();
    AlgMap f;
    for (Index k = 0; k < d.B.n; ++k)
        for (Index l = 0; l < d.C.n; ++l) {
            // S_C(v) in B, sigma_C(S_B(u)) in C
            const Element m = a.embed(x.sigma_C.apply(d.S_B.column(k)), d.S_C.column(l));
            Element w;
            for (Index i = 0; i < a.dim(); ++i) {
                Element prod;
                for (const auto& [j, c] : m) prod.axpy(c, a.product(i, j));
                w.add(i, evaluate(phi, prod));
            }
            f.set_column(diamond_index(d, k, l), w);
        }
    return f;
}

std::vector<LawResult> check_sep_algebra(const SepWmha& w, const WmhaTables& t) {
    const SepData& d = w.data();
    const SepDerived& x = w.derived();
    std::vector<LawResult> out;

    LawResult src = pass("source map formula"), tgt = pass("target map formula");
    for (Index k = 0; k < d.C.n; ++k)
        for (Index l = 0; l < d.B.n; ++l) {
            const Index a = sep_index(d, k, l);
            if (src.ok && t.eps_s(e(a)) != w.embed(d.C.unit, d.B.mul(d.S_C.column(k), e(l))))
                src = fail("source map formula", {t.labels[a]});
            if (tgt.ok && t.eps_t(e(a)) != w.embed(d.C.mul(e(k), d.S_B.column(l)), d.B.unit))
                tgt = fail("target map formula", {t.labels[a]});
        }
    out.push_back(src);
    out.push_back(tgt);

    std::vector<Element> src_alg, tgt_alg, one_b, c_one;
    for (Index a = 0; a < t.n; ++a) {
        src_alg.push_back(t.eps_s(e(a)));
        tgt_alg.push_back(t.eps_t(e(a)));
    }
    for (Index l = 0; l < d.B.n; ++l) one_b.push_back(w.embed(d.C.unit, e(l)));
    for (Index k = 0; k < d.C.n; ++k) c_one.push_back(w.embed(e(k), d.B.unit));
    out.push_back(same_span(src_alg, one_b) && same_span(tgt_alg, c_one) ? pass("source and target algebras")
                                                                        : fail("source and target algebras", {}, "not 1(x)B and C(x)1"));

    IntegralTheory it(t);
    auto as_vectors = [](const std::vector<Functional>& fs) {
        std::vector<FinVec<Index>> v;
        for (const auto& f : fs) v.push_back(as_vector(f));
        return v;
    };
    std::vector<Functional> lfam, rfam;
    for (Index l = 0; l < d.B.n; ++l) {
        Functional f(t.n);
        for (Index k = 0; k < d.C.n; ++k) f[sep_index(d, k, l)] = x.phi_C[k];
        lfam.push_back(f);
    }
    for (Index k = 0; k < d.C.n; ++k) {
        Functional f(t.n);
        for (Index l = 0; l < d.B.n; ++l) f[sep_index(d, k, l)] = x.phi_B[l];
        rfam.push_back(f);
    }
    out.push_back(same_span(as_vectors(it.left_integrals()), as_vectors(lfam)) ? pass("left integrals phi_C(c)g(b)")
                                                                               : fail("left integrals phi_C(c)g(b)", {}));
    out.push_back(same_span(as_vectors(it.right_integrals()), as_vectors(rfam)) ? pass("right integrals f(c)phi_B(b)")
                                                                                : fail("right integrals f(c)phi_B(b)", {}));

    const Functional phi = w.two_sided_integral();
    const bool two = it.is_left_integral(phi) && it.is_right_integral(phi) && it.faithful_set({phi}).faithful;
    out.push_back(two ? pass("faithful two-sided integral") : fail("faithful two-sided integral", {}));

    LawResult mod = pass("modular automorphism");
    const auto m = it.modular_automorphism(phi);
    if (auto* ma = std::get_if<ModularAutomorphism>(&m)) {
        if (!ma->automorphism || !ma->preserves_phi) mod = fail("modular automorphism", {}, "not a phi-preserving automorphism");
        for (Index k = 0; k < d.C.n && mod.ok; ++k)
            for (Index l = 0; l < d.B.n; ++l) {
                const Index a = sep_index(d, k, l);
                if (ma->sigma.column(a) != w.embed(x.sigma_C.column(k), x.sigma_B.column(l))) {
                    mod = fail("modular automorphism", {t.labels[a]}, "differs from sigma_C (x) sigma_B");
                    break;
                }
            }
    } else {
        mod = fail("modular automorphism", {}, std::get<RequiresFaithful>(m).reason);
    }
    out.push_back(mod);
    return out;
}

std::vector<LawResult> check_diamond(const DiamondWmha& w, const WmhaTables& t) {
    const SepData& d = w.data();
    const SepDerived& x = w.derived();
    const auto& B = d.B;
    const auto& C = d.C;
    std::vector<LawResult> out;

    // <c c', u>_1 = <c (x) c', Delta_B(u)>_1 with <c, u>_1 = phi_C(S_B(u) c)
    auto p1 = [&](const Element& c, const Element& u) { return evaluate(x.phi_C, C.mul(d.S_B.apply(u), c)); };
    auto p2 = [&](const Element& b, const Element& v) { return evaluate(x.phi_B, B.mul(b, d.S_C.apply(v))); };
    LawResult l1 = pass("Delta_B pairing"), l2 = pass("Delta_C pairing");
    for (Index u = 0; u < B.n && l1.ok; ++u) {
        const Tensor2 du = w.delta_B(e(u));
        for (Index c = 0; c < C.n && l1.ok; ++c)
            for (Index c2 = 0; c2 < C.n; ++c2) {
                Scalar rhs;
                for (const auto& [pq, a] : du) rhs += a * p1(e(c), e(pq.first)) * p1(e(c2), e(pq.second));
                if (p1(C.prod(c, c2), e(u)) != rhs) {
                    l1 = fail("Delta_B pairing", {C.labels[c], C.labels[c2], B.labels[u]});
                    break;
                }
            }
    }
    for (Index v = 0; v < C.n && l2.ok; ++v) {
        const Tensor2 dv = w.delta_C(e(v));
        for (Index b = 0; b < B.n && l2.ok; ++b)
            for (Index b2 = 0; b2 < B.n; ++b2) {
                Scalar rhs;
                for (const auto& [pq, a] : dv) rhs += a * p2(e(b), e(pq.first)) * p2(e(b2), e(pq.second));
                if (p2(B.prod(b, b2), e(v)) != rhs) {
                    l2 = fail("Delta_C pairing", {B.labels[b], B.labels[b2], C.labels[v]});
                    break;
                }
            }
    }
    out.push_back(l1);
    out.push_back(l2);

    // gamma and gamma' are idempotent, adjoint for the pairing eps(v u), and m_B F1 = 1, m_C F2 = 1.
    LawResult proj = pass("E hat projections");
    for (Index u = 0; u < B.n && proj.ok; ++u)
        for (Index u2 = 0; u2 < B.n && proj.ok; ++u2) {
            const Tensor2 g = w.gamma_B(tensor2(e(u), e(u2)));
            if (w.gamma_B(g) != g) proj = fail("E hat projections", {B.labels[u], B.labels[u2]}, "gamma not idempotent");
            for (Index v = 0; v < C.n && proj.ok; ++v)
                for (Index v2 = 0; v2 < C.n; ++v2) {
                    Scalar lhs, rhs;
                    for (const auto& [k, a] : g) lhs += a * w.pairing(e(v), e(k.first)) * w.pairing(e(v2), e(k.second));
                    for (const auto& [k, a] : w.gamma_C(tensor2(e(v), e(v2))))
                        rhs += a * w.pairing(e(k.first), e(u)) * w.pairing(e(k.second), e(u2));
                    if (lhs != rhs) {
                        proj = fail("E hat projections", {B.labels[u], B.labels[u2], C.labels[v], C.labels[v2]}, "not adjoint");
                        break;
                    }
                }
        }
    for (Index v = 0; v < C.n && proj.ok; ++v)
        for (Index v2 = 0; v2 < C.n; ++v2) {
            const Tensor2 g = w.gamma_C(tensor2(e(v), e(v2)));
            if (w.gamma_C(g) != g) {
                proj = fail("E hat projections", {C.labels[v], C.labels[v2]}, "gamma' not idempotent");
                break;
            }
        }
    if (proj.ok) {
        Element mb, mc;
        for (const auto& [ij, c] : d.E) {
            mb.axpy(c, B.mul(e(ij.first), d.S_C.column(ij.second)));
            mc.axpy(c, C.mul(d.S_B.column(ij.first), e(ij.second)));
        }
        if (mb != B.unit || mc != C.unit) proj = fail("E hat projections", {}, "m_B F1 or m_C F2 is not 1");
    }
    out.push_back(proj);

    // eps_s(u<>v) = phi_B(u) E1<>E2 v and eps_t(u<>v) = phi_C(v) u E1<>E2.
    auto src_iso = [&](const Element& v) {
        Element r;
        for (const auto& [ij, c] : d.E) r.axpy(c, w.diamond(e(ij.first), C.mul(e(ij.second), v)));
        return r;
    };
    auto tgt_iso = [&](const Element& u) {
        Element r;
        for (const auto& [ij, c] : d.E) r.axpy(c, w.diamond(B.mul(u, e(ij.first)), e(ij.second)));
        return r;
    };
    LawResult st = pass("source and target maps");
    for (Index k = 0; k < B.n && st.ok; ++k)
        for (Index l = 0; l < C.n; ++l) {
            const Index a = diamond_index(d, k, l);
            if (t.eps_s(e(a)) != x.phi_B[k] * src_iso(e(l)) || t.eps_t(e(a)) != x.phi_C[l] * tgt_iso(e(k))) {
                st = fail("source and target maps", {t.labels[a]});
                break;
            }
        }
    out.push_back(st);

    LawResult iso = pass("source and target isomorphisms");
    {
        std::vector<Element> src_alg, tgt_alg, src_img, tgt_img;
        for (Index a = 0; a < t.n; ++a) {
            src_alg.push_back(t.eps_s(e(a)));
            tgt_alg.push_back(t.eps_t(e(a)));
        }
        for (Index l = 0; l < C.n; ++l) src_img.push_back(src_iso(e(l)));
        for (Index k = 0; k < B.n; ++k) tgt_img.push_back(tgt_iso(e(k)));
        if (rank_of(src_img) != C.n || !same_span(src_img, src_alg)) iso = fail("source and target isomorphisms", {}, "C -> eps_s not onto");
        else if (rank_of(tgt_img) != B.n || !same_span(tgt_img, tgt_alg)) iso = fail("source and target isomorphisms", {}, "B -> eps_t not onto");
        for (Index i = 0; i < C.n && iso.ok; ++i)
            for (Index j = 0; j < C.n; ++j)
                if (src_iso(C.prod(i, j)) != t.mul(src_img[i], src_img[j])) {
                    iso = fail("source and target isomorphisms", {C.labels[i], C.labels[j]}, "not multiplicative");
                    break;
                }
        for (Index i = 0; i < B.n && iso.ok; ++i)
            for (Index j = 0; j < B.n; ++j)
                if (tgt_iso(B.prod(i, j)) != t.mul(tgt_img[i], tgt_img[j])) {
                    iso = fail("source and target isomorphisms", {B.labels[i], B.labels[j]}, "not multiplicative");
                    break;
                }
    }
    out.push_back(iso);

    IntegralTheory it(t);
    auto as_vectors = [](const std::vector<Functional>& fs) {
        std::vector<FinVec<Index>> v;
        for (const auto& f : fs) v.push_back(as_vector(f));
        return v;
    };
    std::vector<Functional> rights, lefts;
    LawResult ri = pass("right integrals psi_x"), li = pass("left integrals phi_y");
    for (Index c = 0; c < C.n; ++c) {
        rights.push_back(w.right_integral(e(c)));
        if (ri.ok && !it.is_right_integral(rights.back())) ri = fail("right integrals psi_x", {C.labels[c]}, "not right invariant");
    }
    for (Index b = 0; b < B.n; ++b) {
        lefts.push_back(w.left_integral(e(b)));
        if (li.ok && !it.is_left_integral(lefts.back())) li = fail("left integrals phi_y", {B.labels[b]}, "not left invariant");
    }
    if (ri.ok && !same_span(as_vectors(rights), as_vectors(it.right_integrals())))
        ri = fail("right integrals psi_x", {}, "do not exhaust the right integrals");
    if (li.ok && !same_span(as_vectors(lefts), as_vectors(it.left_integrals())))
        li = fail("left integrals phi_y", {}, "do not exhaust the left integrals");
    out.push_back(ri);
    out.push_back(li);

    const AlgMap sb_inv = d.S_C.after(d.S_B);  // sigma_B^-1
    const AlgMap sc_inv = x.S_C_inv.after(x.S_B_inv);  // sigma_C^-1
    const Element delta = w.modular_element(), delta_inv = w.modular_element_inverse();
    LawResult md = pass("modular element");
    if (t.mul(delta, delta_inv) != t.unit || t.mul(delta_inv, delta) != t.unit) md = fail("modular element", {}, "delta^-1 is not an inverse");
    const Functional phi_hat = w.left_integral(B.unit);
    for (Index k = 0; k < B.n && md.ok; ++k)
        for (Index l = 0; l < C.n; ++l) {
            const Index a = diamond_index(d, k, l);
            const Element left = w.diamond(sb_inv.apply(sb_inv.column(k)), e(l));
            const Element right = w.diamond(e(k), sc_inv.apply(sc_inv.column(l)));
            if (t.mul(delta, e(a)) != left || t.mul(e(a), delta) != right) {
                md = fail("modular element", {t.labels[a]}, "action differs from sigma_B^-2 / sigma_C^-2");
                break;
            }
            if (evaluate(phi_hat, t.S[a]) != evaluate(phi_hat, t.mul(e(a), delta))) {
                md = fail("modular element", {t.labels[a]}, "phi(S(w)) != phi(w delta)");
                break;
            }
        }
    out.push_back(md);

    LawResult s2 = pass("S^2 formula"), s4 = pass("Radford S^4");
    for (Index k = 0; k < B.n; ++k)
        for (Index l = 0; l < C.n; ++l) {
            const Index a = diamond_index(d, k, l);
            const Element sq = t.antipode(t.S[a]);
            if (s2.ok && sq != w.diamond(x.sigma_B.column(k), sc_inv.column(l))) s2 = fail("S^2 formula", {t.labels[a]});
            if (s4.ok && t.antipode(t.antipode(sq)) != t.mul(t.mul(delta_inv, e(a)), delta)) s4 = fail("Radford S^4", {t.labels[a]});
        }
    out.push_back(s2);
    out.push_back(s4);

    // Multipliers are adjointable maps: left multiplication only moves the B leg,
    // right multiplication only the C leg, and the two are adjoint.
    LawResult adj = pass("adjointable multipliers");
    std::vector<std::pair<std::string, Element>> family{{"1", t.unit}, {"delta", delta}, {"delta^-1", delta_inv}};
    for (Index a = 0; a < t.n; ++a) family.emplace_back(t.labels[a], e(a));
    for (std::size_t f = 0; f < family.size() && adj.ok; ++f) {
        const Element& m = family[f].second;
        // gamma(u) from m (u <> v0) and gamma^t(v) from (u0 <> v) m
        for (Index k = 0; k < B.n && adj.ok; ++k)
            for (Index l = 0; l < C.n && adj.ok; ++l) {
                const Element lm = t.mul(m, e(diamond_index(d, k, l))), rm = t.mul(e(diamond_index(d, k, l)), m);
                Element gu, gv;
                for (const auto& [i, c] : lm)
                    if (i % C.n == l) gu.add(i / C.n, c);
                for (const auto& [i, c] : rm)
                    if (i / C.n == k) gv.add(i % C.n, c);
                if (lm != w.diamond(gu, e(l)) || rm != w.diamond(e(k), gv)) {
                    adj = fail("adjointable multipliers", {family[f].first, t.labels[diamond_index(d, k, l)]},
                               "does not act on one leg");
                }
            }
        for (Index u = 0; u < B.n && adj.ok; ++u)
            for (Index v = 0; v < C.n; ++v) {
                // eps(v gamma(u)) = eps(gamma^t(v) u)
                Element gu, gv;
                for (const auto& [i, c] : t.mul(m, e(diamond_index(d, u, 0))))
                    if (i % C.n == 0) gu.add(i / C.n, c);
                for (const auto& [i, c] : t.mul(e(diamond_index(d, 0, v)), m))
                    if (i / C.n == 0) gv.add(i % C.n, c);
                if (w.pairing(e(v), gu) != w.pairing(gv, e(u))) {
                    adj = fail("adjointable multipliers", {B.labels[u], C.labels[v]}, "gamma and gamma^t are not adjoint");
                    break;
                }
            }
    }
    out.push_back(adj);
    return out;
}

}  // namespace wmha
