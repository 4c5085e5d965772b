#include "wmha/integrals.hpp"

#include <random>

namespace wmha {

namespace {

Row dense(const Element& x, std::size_t n) {
    Row r(n);
    for (const auto& [k, c] : x) r[k] = c;
    return r;
}

bool is_zero_row(const Row& r) {
    for (const auto& c : r)
        if (!c.is_zero()) return false;
    return true;
}

Echelon echelon_of(const std::vector<Element>& xs, std::size_t n) {
    Matrix m;
    for (const auto& x : xs) m.push_back(dense(x, n));
    return reduce_rows(m, n);
}

bool in_echelon(const Echelon& ech, const Element& x, std::size_t n) {
    return is_zero_row(reduce_against(ech, dense(x, n)));
}

std::vector<FinVec<Index>> as_vectors(const std::vector<Functional>& fs) {
    std::vector<FinVec<Index>> out;
    for (const auto& f : fs) out.push_back(as_vector(f));
    return out;
}

}  // namespace

Scalar evaluate(const Functional& f, const Element& x) {
    Scalar s;
    for (const auto& [k, c] : x) s += c * f[k];
    return s;
}

Element slice_second(const Tensor2& t, const Functional& f) {
    Element out;
    for (const auto& [k, c] : t) out.add(k.first, c * f[k.second]);
    return out;
}

Element slice_first(const Functional& f, const Tensor2& t) {
    Element out;
    for (const auto& [k, c] : t) out.add(k.second, c * f[k.first]);
    return out;
}

Functional as_functional(const FinVec<Index>& v, std::size_t n) {
    Functional f(n);
    for (const auto& [k, c] : v) f[k] = c;
    return f;
}

FinVec<Index> as_vector(const Functional& f) {
    FinVec<Index> v;
    for (Index k = 0; k < f.size(); ++k) v.add(k, f[k]);
    return v;
}

Functional right_translate(const WmhaTables& t, const Functional& f, const Element& a) {
    Functional out(t.n);
    for (Index x = 0; x < t.n; ++x) out[x] = evaluate(f, t.mul(Element::basis(x), a));
    return out;
}

Functional left_translate(const WmhaTables& t, const Functional& f, const Element& a) {
    Functional out(t.n);
    for (Index x = 0; x < t.n; ++x) out[x] = evaluate(f, t.mul(a, Element::basis(x)));
    return out;
}

Functional compose_antipode(const WmhaTables& t, const Functional& f) {
    Functional out(t.n);
    for (Index x = 0; x < t.n; ++x) out[x] = evaluate(f, t.S[x]);
    return out;
}

Functional compose_antipode_inv(const WmhaTables& t, const Functional& f) {
    Functional out(t.n);
    for (Index x = 0; x < t.n; ++x) out[x] = evaluate(f, t.Sinv[x]);
    return out;
}

IntegralTheory::IntegralTheory(const WmhaTables& t) : t_(t) {
    for (Index a = 0; a < t.n; ++a) {
        source_.push_back(t.eps_s(Element::basis(a)));
        target_.push_back(t.eps_t(Element::basis(a)));
    }
    source_ech_ = echelon_of(source_, t.n);
    target_ech_ = echelon_of(target_, t.n);
    F1_ = t.F1();
    F2_ = t.F2();
    F3_ = t.F3();
    F4_ = t.F4();
}

bool IntegralTheory::left_invariant_def(const Functional& f) const {
    for (Index a = 0; a < t_.n; ++a)
        if (!in_echelon(target_ech_, slice_second(t_.delta[a], f), t_.n)) return false;
    return true;
}

bool IntegralTheory::left_invariant_sweedler(const Functional& f) const {
    for (Index a = 0; a < t_.n; ++a) {
        Element rhs;
        for (const auto& [k, c] : t_.coproduct3(Element::basis(a)))
            rhs.axpy(c * f[k[2]], t_.mul(Element::basis(k[0]), t_.S[k[1]]));
        if (slice_second(t_.delta[a], f) != rhs) return false;
    }
    return true;
}

bool IntegralTheory::left_invariant_F(const Functional& f) const {
    for (Index a = 0; a < t_.n; ++a) {
        const Element lhs = slice_second(t_.delta[a], f);
        const Tensor2 one_a = tensor2(t_.unit, Element::basis(a));
        if (lhs != slice_second(t_.mul(F2_, one_a), f)) return false;
        if (lhs != slice_second(t_.mul(one_a, F4_), f)) return false;
    }
    return true;
}

bool IntegralTheory::right_invariant_def(const Functional& f) const {
    for (Index a = 0; a < t_.n; ++a)
        if (!in_echelon(source_ech_, slice_first(f, t_.delta[a]), t_.n)) return false;
    return true;
}

bool IntegralTheory::right_invariant_sweedler(const Functional& f) const {
    for (Index a = 0; a < t_.n; ++a) {
        Element rhs;
        for (const auto& [k, c] : t_.coproduct3(Element::basis(a)))
            rhs.axpy(c * f[k[0]], t_.mul(t_.S[k[1]], Element::basis(k[2])));
        if (slice_first(f, t_.delta[a]) != rhs) return false;
    }
    return true;
}

bool IntegralTheory::right_invariant_F(const Functional& f) const {
    for (Index a = 0; a < t_.n; ++a) {
        const Element lhs = slice_first(f, t_.delta[a]);
        const Tensor2 a_one = tensor2(Element::basis(a), t_.unit);
        if (lhs != slice_first(f, t_.mul(a_one, F1_))) return false;
        if (lhs != slice_first(f, t_.mul(F3_, a_one))) return false;
    }
    return true;
}

bool IntegralTheory::is_left_integral(const Functional& f) const {
    return !as_vector(f).is_zero() && left_invariant_def(f);
}

bool IntegralTheory::is_right_integral(const Functional& f) const {
    return !as_vector(f).is_zero() && right_invariant_def(f);
}

std::vector<Functional> IntegralTheory::left_integrals() const {
    // (iota (x) f)Delta(a) must be killed by every functional annihilating A_t.
    const Matrix ann = kernel_basis(target_ech_);
    std::vector<LinearConstraint<Index>> cons;
    for (Index a = 0; a < t_.n; ++a)
        for (const Row& w : ann) {
            LinearConstraint<Index> c;
            for (const auto& [k, v] : t_.delta[a]) c.lhs.add(k.second, v * w[k.first]);
            if (!c.lhs.is_zero()) cons.push_back(std::move(c));
        }
    std::vector<Index> unknowns(t_.n);
    for (Index k = 0; k < t_.n; ++k) unknowns[k] = k;
    std::vector<Functional> out;
    for (const auto& v : solve_linear(cons, unknowns).basis) out.push_back(as_functional(v, t_.n));
    return out;
}

std::vector<Functional> IntegralTheory::right_integrals() const {
    const Matrix ann = kernel_basis(source_ech_);
    std::vector<LinearConstraint<Index>> cons;
    for (Index a = 0; a < t_.n; ++a)
        for (const Row& w : ann) {
            LinearConstraint<Index> c;
            for (const auto& [k, v] : t_.delta[a]) c.lhs.add(k.first, v * w[k.second]);
            if (!c.lhs.is_zero()) cons.push_back(std::move(c));
        }
    std::vector<Index> unknowns(t_.n);
    for (Index k = 0; k < t_.n; ++k) unknowns[k] = k;
    std::vector<Functional> out;
    for (const auto& v : solve_linear(cons, unknowns).basis) out.push_back(as_functional(v, t_.n));
    return out;
}

bool IntegralTheory::kernel_faithful(const std::vector<Functional>& set, Element* witness) const {
    for (int side = 0; side < 2; ++side) {
        Matrix m;
        for (const auto& f : set)
            for (Index a = 0; a < t_.n; ++a) {
                Row r(t_.n);
                for (Index x = 0; x < t_.n; ++x) r[x] = evaluate(f, side == 0 ? t_.prod(x, a) : t_.prod(a, x));
                m.push_back(std::move(r));
            }
        Echelon ech = reduce_rows(m, t_.n);
        if (ech.rank() < t_.n) {
            if (witness) {
                Row k = kernel_basis(ech).front();
                Element w;
                for (Index x = 0; x < t_.n; ++x) w.add(x, k[x]);
                *witness = w;
            }
            return false;
        }
    }
    return true;
}

bool IntegralTheory::span_faithful(const std::vector<Functional>& set) const {
    std::vector<Element> left, right;
    for (const auto& f : set)
        for (Index a = 0; a < t_.n; ++a) {
            const Tensor2 a1 = tensor2(Element::basis(a), t_.unit);
            left.push_back(slice_first(f, t_.mul(a1, t_.E)));
            right.push_back(slice_first(f, t_.mul(t_.E, a1)));
        }
    return same_span(left, target_) && same_span(right, target_);
}

FaithfulnessResult IntegralTheory::faithful_set(const std::vector<Functional>& set) const {
    FaithfulnessResult r;
    Element w;
    r.kernel_test = kernel_faithful(set, &w);
    r.span_test = span_faithful(set);
    if (r.kernel_test != r.span_test)
        throw std::logic_error("faithfulness criteria disagree: kernel test " + std::string(r.kernel_test ? "passes" : "fails") +
                               ", E-span test " + (r.span_test ? "passes" : "fails"));
    r.faithful = r.kernel_test;
    if (!r.faithful) r.witness = w;
    return r;
}

bool IntegralTheory::faithful_single(const Functional& phi) const { return kernel_faithful({phi}, nullptr); }

std::optional<Functional> IntegralTheory::faithful_left_integral(std::uint64_t seed) const {
    const auto basis = left_integrals();
    if (basis.empty()) return std::nullopt;
    auto combine = [&](const std::vector<long>& coeffs) {
        Functional f(t_.n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (Index k = 0; k < t_.n; ++k) f[k] += Scalar(coeffs[i]) * basis[i][k];
        return f;
    };
    std::vector<std::vector<long>> tries{std::vector<long>(basis.size(), 1)};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(-5, 5);
    for (int k = 0; k < 64; ++k) {
        std::vector<long> c(basis.size());
        for (auto& x : c) x = pick(rng);
        tries.push_back(c);
    }
    for (const auto& c : tries) {
        Functional f = combine(c);
        if (!as_vector(f).is_zero() && faithful_single(f)) return f;
    }
    return std::nullopt;
}

std::vector<TransferItem> IntegralTheory::transfer_relations(const Functional& phi, const Functional& psi) const {
    using Side = bool;  // true: x sits on the left of a, i.e. f(x a)
    struct Item {
        const char* name;
        Side psi_x_left, phi_x_left;
    };
    auto b = [](Index k) { return Element::basis(k); };
    std::vector<TransferItem> out;
    const Item items[4] = {{"i", true, true}, {"ii", false, false}, {"iii", true, false}, {"iv", false, true}};
    for (int it = 0; it < 4; ++it) {
        TransferItem res{items[it].name, true, {}};
        for (Index p = 0; p < t_.n && res.ok; ++p)
            for (Index q = 0; q < t_.n && res.ok; ++q) {
                Element a, bb;
                for (const auto& [ij, c] : t_.delta[p]) {
                    const Element& l = b(ij.first);
                    switch (it) {
                        case 0: a.axpy(c * evaluate(phi, t_.mul(t_.S[ij.second], b(q))), l); break;
                        case 1: a.axpy(c * evaluate(phi, t_.mul(b(q), t_.Sinv[ij.second])), l); break;
                        case 2: a.axpy(c * evaluate(phi, t_.mul(b(q), t_.S[ij.second])), l); break;
                        case 3: a.axpy(c * evaluate(phi, t_.mul(t_.Sinv[ij.second], b(q))), l); break;
                    }
                }
                for (const auto& [ij, c] : t_.delta[q]) {
                    const Element& r = b(ij.second);
                    switch (it) {
                        case 0: bb.axpy(c * evaluate(psi, t_.mul(t_.Sinv[ij.first], b(p))), r); break;
                        case 1: bb.axpy(c * evaluate(psi, t_.mul(b(p), t_.S[ij.first])), r); break;
                        case 2: bb.axpy(c * evaluate(psi, t_.mul(t_.S[ij.first], b(p))), r); break;
                        case 3: bb.axpy(c * evaluate(psi, t_.mul(b(p), t_.Sinv[ij.first])), r); break;
                    }
                }
                for (Index x = 0; x < t_.n; ++x) {
                    const Scalar lhs = evaluate(psi, items[it].psi_x_left ? t_.mul(b(x), a) : t_.mul(a, b(x)));
                    const Scalar rhs = evaluate(phi, items[it].phi_x_left ? t_.mul(b(x), bb) : t_.mul(bb, b(x)));
                    if (lhs != rhs) {
                        res.ok = false;
                        res.witness = {t_.labels[p], t_.labels[q], t_.labels[x]};
                        break;
                    }
                }
            }
        out.push_back(std::move(res));
    }
    return out;
}

Outcome<ModularAutomorphism> IntegralTheory::modular_automorphism(const Functional& phi) const {
    if (!faithful_single(phi)) return RequiresFaithful{"modular automorphism needs a faithful integral"};
    ModularAutomorphism m;
    std::vector<Index> unknowns(t_.n);
    for (Index k = 0; k < t_.n; ++k) unknowns[k] = k;
    for (Index a = 0; a < t_.n; ++a) {
        // phi(a x) = phi(x sigma(a)) for all x.
        std::vector<LinearConstraint<Index>> cons;
        for (Index x = 0; x < t_.n; ++x) {
            LinearConstraint<Index> c;
            for (Index k = 0; k < t_.n; ++k) c.lhs.add(k, evaluate(phi, t_.prod(x, k)));
            c.rhs = evaluate(phi, t_.prod(a, x));
            cons.push_back(std::move(c));
        }
        auto sol = solve_linear(cons, unknowns);
        if (!sol.consistent || !sol.zero_space()) return RequiresFaithful{"modular automorphism system is not uniquely solvable"};
        m.sigma.set_column(a, *sol.particular);
    }
    m.automorphism = true;
    for (Index a = 0; a < t_.n && m.automorphism; ++a)
        for (Index b = 0; b < t_.n && m.automorphism; ++b)
            if (m.sigma.apply(t_.prod(a, b)) != t_.mul(m.sigma.column(a), m.sigma.column(b))) m.automorphism = false;
    std::vector<Element> images;
    for (Index a = 0; a < t_.n; ++a) images.push_back(m.sigma.column(a));
    if (rank_of(images) != t_.n) m.automorphism = false;
    m.preserves_phi = true;
    for (Index a = 0; a < t_.n; ++a)
        if (evaluate(phi, m.sigma.column(a)) != phi[a]) m.preserves_phi = false;
    std::vector<Element> moved;
    for (const auto& y : source_) moved.push_back(m.sigma.apply(y));
    m.preserves_source = same_span(moved, source_);
    return m;
}

std::optional<Element> IntegralTheory::solve_density(const Functional& phi, const Functional& target) const {
    std::vector<Index> unknowns(t_.n);
    for (Index k = 0; k < t_.n; ++k) unknowns[k] = k;
    std::vector<LinearConstraint<Index>> cons;
    for (Index x = 0; x < t_.n; ++x) {
        LinearConstraint<Index> c;
        for (Index k = 0; k < t_.n; ++k) c.lhs.add(k, evaluate(phi, t_.prod(x, k)));
        c.rhs = target[x];
        cons.push_back(std::move(c));
    }
    auto sol = solve_linear(cons, unknowns);
    if (!sol.consistent || !sol.zero_space()) return std::nullopt;
    return *sol.particular;
}

DensityResult IntegralTheory::finish_density(Element y) const {
    DensityResult r;
    r.in_source_algebra = in_echelon(source_ech_, y, t_.n);
    r.coproduct_identity = true;
    for (Index b = 0; b < t_.n; ++b)
        if (t_.coproduct(t_.mul(Element::basis(b), y)) != t_.mul(t_.delta[b], tensor2(t_.unit, y))) {
            r.coproduct_identity = false;
            break;
        }
    std::vector<Index> unknowns(t_.n);
    for (Index k = 0; k < t_.n; ++k) unknowns[k] = k;
    std::vector<LinearConstraint<Index>> cons;
    for (Index row = 0; row < t_.n; ++row) {
        LinearConstraint<Index> c;
        for (Index k = 0; k < t_.n; ++k) c.lhs.add(k, t_.mul(y, Element::basis(k))[row]);
        c.rhs = t_.unit[row];
        cons.push_back(std::move(c));
    }
    auto inv = solve_linear(cons, unknowns);
    r.invertible = inv.consistent && t_.mul(*inv.particular, y) == t_.unit;
    r.y = std::move(y);
    return r;
}

Outcome<DensityResult> IntegralTheory::radon_nikodym(const Functional& phi, const Functional& phi1) const {
    if (!faithful_single(phi)) return RequiresFaithful{"Radon-Nikodym derivative needs a faithful integral"};
    auto y = solve_density(phi, phi1);
    if (!y) return RequiresFaithful{"density system is not uniquely solvable"};
    return finish_density(*y);
}

Outcome<DensityResult> IntegralTheory::modular_element(const Functional& phi, const Functional& psi) const {
    if (!faithful_single(phi)) return RequiresFaithful{"modular element needs a faithful left integral"};
    auto d = solve_density(phi, psi);
    if (!d) return RequiresFaithful{"modular element system is not uniquely solvable"};
    return finish_density(*d);
}

Outcome<DensityResult> IntegralTheory::antipode_square_density(const Functional& phi) const {
    return radon_nikodym(phi, compose_antipode(t_, compose_antipode(t_, phi)));
}

std::optional<std::size_t> IntegralTheory::spanning_forms(const std::vector<Functional>& left,
                                                          const std::vector<Functional>& right) const {
    std::vector<Functional> forms[4];
    for (Index a = 0; a < t_.n; ++a) {
        const Element x = Element::basis(a);
        for (const auto& f : left) {
            forms[0].push_back(right_translate(t_, f, x));
            forms[1].push_back(left_translate(t_, f, x));
        }
        for (const auto& f : right) {
            forms[2].push_back(right_translate(t_, f, x));
            forms[3].push_back(left_translate(t_, f, x));
        }
    }
    const auto v0 = as_vectors(forms[0]);
    for (int k = 1; k < 4; ++k)
        if (!same_span(v0, as_vectors(forms[k]))) return std::nullopt;
    return rank_of(v0);
}

}  // namespace wmha
