#include "wmha/duality.hpp"

#include <stdexcept>

namespace wmha {

namespace {

Element e(Index k) { return Element::basis(k); }

template <class F>
Element tabulate_functional(std::size_t n, F&& f) {
    Element out;
    for (Index x = 0; x < n; ++x) out.add(x, f(x));
    return out;
}

Functional to_functional(const Element& w, std::size_t n) {
    Functional f(n);
    for (const auto& [k, c] : w) f[k] = c;
    return f;
}

LawResult pass(std::string name) { return {std::move(name), true, {}, {}}; }
LawResult fail(std::string name, std::vector<std::string> witness, std::string detail = {}) {
    return {std::move(name), false, std::move(witness), std::move(detail)};
}

}  // namespace

namespace detail {

Representer::Representer(const std::vector<Functional>& columns, std::size_t n) : m_(columns.size()) {
    Matrix g(n, Row(m_));
    for (std::size_t j = 0; j < m_; ++j)
        for (Index x = 0; x < n; ++x) g[x][j] = columns[j][x];
    Echelon ech = reduce_rows(g, m_);
    relations_ = kernel_basis(ech);
    spans_ = ech.rank() == n;
    if (!spans_) return;
    pivots_ = ech.pivots;
    Matrix sub(n, Row(n));
    for (Index x = 0; x < n; ++x)
        for (std::size_t r = 0; r < n; ++r) sub[x][r] = g[x][pivots_[r]];
    inverse_ = *invert(sub);
}

std::vector<Scalar> Representer::coefficients(const Functional& w) const {
    if (!spans_) throw std::logic_error("functionals do not span the dual");
    std::vector<Scalar> out(m_);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        Scalar s;
        for (std::size_t x = 0; x < w.size(); ++x) s += inverse_[r][x] * w[x];
        out[pivots_[r]] = s;
    }
    return out;
}

}  // namespace detail

DualWmha::DualWmha(const WmhaTables& primal, std::vector<Functional> integrals) : p_(primal), phi_(std::move(integrals)) {
    const std::size_t n = p_.n;
    IntegralTheory it(p_);
    for (const auto& f : phi_)
        if (!it.is_left_integral(f)) throw std::invalid_argument("not a left integral");
    if (phi_.empty() || !it.faithful_set(phi_).faithful) throw std::invalid_argument("faithful set of integrals required");
    for (const auto& f : phi_) psi_.push_back(compose_antipode(p_, f));

    std::vector<Functional> rc, lc, pc;
    for (std::size_t i = 0; i < phi_.size(); ++i)
        for (Index k = 0; k < n; ++k) {
            rc.push_back(right_translate(p_, phi_[i], e(k)));
            lc.push_back(left_translate(p_, phi_[i], e(k)));
            pc.push_back(right_translate(p_, psi_[i], e(k)));
        }
    right_ = detail::Representer(rc, n);
    left_ = detail::Representer(lc, n);
    right_psi_ = detail::Representer(pc, n);
    for (Index k = 0; k < n; ++k) {
        rf_.push_back(right_form(e(k)));
        lf_.push_back(left_form(e(k)));
        rpsi_.push_back(right_form_psi(e(k)));
    }
    // The unit of the dual is the counit of A.
    for (Index k = 0; k < n; ++k) unit_.add(k, p_.eps[k]);

    for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) mult_.push_back(multiply(e(j), e(k)));
    for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
            T1_.push_back(T1_basis(j, k));
            T2_.push_back(T2_basis(j, k));
        }
    for (Index a = 0; a < n; ++a) {
        delta_.push_back(T1(tensor2(e(a), unit_)));
        S_.push_back(dual_antipode(e(a)));
        Element inv;
        for (std::size_t i = 0; i < phi_.size(); ++i) {
            const Element sc = p_.antipode(rf_[a][i]);
            inv += tabulate_functional(n, [&](Index x) { return evaluate(phi_[i], p_.antipode_inv(p_.mul(sc, e(x)))); });
        }
        Sinv_.push_back(inv);
    }
    for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
            const Tensor2 b = tensor2(e(j), e(k));
            E_left_.push_back(T1(R1(b)));
            E_right_.push_back(T2(R2(b)));
        }
}

std::vector<Element> DualWmha::right_form(const Element& w) const {
    const auto c = right_.coefficients(to_functional(w, p_.n));
    std::vector<Element> out(phi_.size());
    for (std::size_t j = 0; j < c.size(); ++j) out[j / p_.n].add(j % p_.n, c[j]);
    return out;
}

std::vector<Element> DualWmha::left_form(const Element& w) const {
    const auto c = left_.coefficients(to_functional(w, p_.n));
    std::vector<Element> out(phi_.size());
    for (std::size_t j = 0; j < c.size(); ++j) out[j / p_.n].add(j % p_.n, c[j]);
    return out;
}

std::vector<Element> DualWmha::right_form_psi(const Element& w) const {
    const auto c = right_psi_.coefficients(to_functional(w, p_.n));
    std::vector<Element> out(phi_.size());
    for (std::size_t j = 0; j < c.size(); ++j) out[j / p_.n].add(j % p_.n, c[j]);
    return out;
}

Element DualWmha::multiply(const Element& w, const Element& w2) const {
    // w2 = phi(c .) gives w w2 = phi(b .) with b = ((w o S) (x) iota)Delta(c).
    const auto cs = left_form(w2);
    Element out;
    for (std::size_t i = 0; i < phi_.size(); ++i) {
        Element b;
        for (const auto& [pq, c] : p_.coproduct(cs[i])) b.add(pq.second, c * pair(p_.S[pq.first], w));
        if (b.is_zero()) continue;
        out += tabulate_functional(p_.n, [&](Index x) { return evaluate(phi_[i], p_.mul(b, e(x))); });
    }
    return out;
}

Tensor2 DualWmha::T1_basis(Index j, Index k) const {
    Tensor2 out;
    for (std::size_t i = 0; i < phi_.size(); ++i)
        for (const auto& [pq, c] : p_.coproduct(lf_[k][i])) {
            const Element l = tabulate_functional(p_.n, [&](Index x) { return p_.mul(e(x), p_.S[pq.first])[j]; });
            const Element r = tabulate_functional(p_.n, [&](Index y) { return evaluate(phi_[i], p_.prod(pq.second, y)); });
            out.axpy(c, tensor2(l, r));
        }
    return out;
}

Tensor2 DualWmha::T2_basis(Index j, Index k) const {
    Tensor2 out;
    for (std::size_t i = 0; i < psi_.size(); ++i)
        for (const auto& [pq, c] : p_.coproduct(rpsi_[j][i])) {
            const Element l = tabulate_functional(p_.n, [&](Index x) { return evaluate(psi_[i], p_.prod(x, pq.first)); });
            const Element r = tabulate_functional(p_.n, [&](Index y) { return p_.mul(p_.S[pq.second], e(y))[k]; });
            out.axpy(c, tensor2(l, r));
        }
    return out;
}

Element DualWmha::dmul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [a, c] : x)
        for (const auto& [b, d] : y) out.axpy(c * d, mult_[a * p_.n + b]);
    return out;
}

Tensor2 DualWmha::linear2(const std::vector<Tensor2>& on_basis, const Tensor2& t) const {
    Tensor2 out;
    for (const auto& [k, c] : t) out.axpy(c, on_basis[k.first * p_.n + k.second]);
    return out;
}

Tensor2 DualWmha::T1(const Tensor2& t) const { return linear2(T1_, t); }
Tensor2 DualWmha::T2(const Tensor2& t) const { return linear2(T2_, t); }

Tensor2 DualWmha::R1(const Tensor2& t) const {
    Tensor2 out;
    for (const auto& [jk, c] : t)
        for (const auto& [uv, d] : delta_[jk.first]) out.axpy(c * d, tensor2(e(uv.first), dmul(S_[uv.second], e(jk.second))));
    return out;
}

Tensor2 DualWmha::R2(const Tensor2& t) const {
    Tensor2 out;
    for (const auto& [jk, c] : t)
        for (const auto& [uv, d] : delta_[jk.second]) out.axpy(c * d, tensor2(dmul(e(jk.first), S_[uv.first]), e(uv.second)));
    return out;
}

Element DualWmha::dual_antipode(const Element& w) const {
    // phi(. c) -> (phi o S)(S^-1(c) .)
    const auto cs = right_form(w);
    Element out;
    for (std::size_t i = 0; i < phi_.size(); ++i) {
        if (cs[i].is_zero()) continue;
        const Element sc = p_.antipode_inv(cs[i]);
        out += tabulate_functional(p_.n, [&](Index x) { return evaluate(psi_[i], p_.mul(sc, e(x))); });
    }
    return out;
}

Element DualWmha::product(Index a, Index b) const { return mult_[a * p_.n + b]; }

Tensor2 DualWmha::delta_right(Index a, const Element& b) const { return T1(tensor2(e(a), b)); }

Tensor2 DualWmha::delta_left(const Element& c, Index a) const { return T2(tensor2(c, e(a))); }

Scalar DualWmha::counit(Index a) const {
    // phi(. c) -> phi(c)
    Scalar s;
    for (std::size_t i = 0; i < phi_.size(); ++i) s += evaluate(phi_[i], rf_[a][i]);
    return s;
}

Element DualWmha::antipode(Index a) const { return S_[a]; }
Element DualWmha::antipode_inverse(Index a) const { return Sinv_[a]; }

Multiplier2 DualWmha::canonical_idempotent() const {
    const DualWmha* self = this;
    return {[self](const Tensor2& t) { return self->linear2(self->E_left_, t); },
            [self](const Tensor2& t) { return self->linear2(self->E_right_, t); }};
}

std::optional<Tensor2> DualWmha::coproduct_oracle(Index a) const {
    Tensor2 out;
    for (Index x = 0; x < p_.n; ++x)
        for (Index y = 0; y < p_.n; ++y) out.add({x, y}, p_.prod(x, y)[a]);
    return out;
}

Functional DualWmha::dual_integral(const Element& a) const {
    Functional out(p_.n);
    for (Index k = 0; k < p_.n; ++k)
        for (std::size_t i = 0; i < phi_.size(); ++i) out[k] += evaluate(phi_[i], p_.mul(a, p_.eps_s(rf_[k][i])));
    return out;
}

bool DualWmha::dual_integral_well_defined(const Element& a) const {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < phi_.size(); ++i)
        for (Index k = 0; k < p_.n; ++k) v.push_back(evaluate(phi_[i], p_.mul(a, p_.eps_s(e(k)))));
    for (const Row& z : right_.relations()) {
        Scalar s;
        for (std::size_t j = 0; j < v.size(); ++j) s += z[j] * v[j];
        if (!s.is_zero()) return false;
    }
    return true;
}

Outcome<Functional> DualWmha::single_dual_integral(const Functional& p) const {
    if (phi_.size() != 1) return RequiresFaithful{"the dual was built from a set of integrals, not a single faithful one"};
    Functional out(p_.n);
    for (Index k = 0; k < p_.n; ++k) out[k] = evaluate(p, p_.eps_s(rf_[k][0]));
    return out;
}

WmhaTables transpose_dual(const WmhaTables& t) {
    const std::size_t n = t.n;
    WmhaTables d;
    d.name = "dual of " + t.name;
    d.n = n;
    for (const auto& l : t.labels) d.labels.push_back("<" + l + ">");
    d.mult.resize(n * n);
    for (Index x = 0; x < n; ++x)
        for (const auto& [ab, c] : t.delta[x]) d.mult[ab.first * n + ab.second].add(x, c);
    d.delta.resize(n);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y)
            for (const auto& [a, c] : t.prod(x, y)) d.delta[a].add({x, y}, c);
    d.S.resize(n);
    d.Sinv.resize(n);
    for (Index x = 0; x < n; ++x) {
        for (const auto& [a, c] : t.S[x]) d.S[a].add(x, c);
        for (const auto& [a, c] : t.Sinv[x]) d.Sinv[a].add(x, c);
    }
    for (Index a = 0; a < n; ++a) d.eps.push_back(t.unit[a]);
    for (Index x = 0; x < n; ++x) d.unit.add(x, t.eps[x]);
    for (Index x = 0; x < n; ++x)
        for (Index y = 0; y < n; ++y) d.E.add({x, y}, t.counit(t.prod(x, y)));
    return d;
}

std::optional<Functional> distinguished_source_functional(const WmhaTables& t) {
    std::vector<LinearConstraint<Index>> cons;
    for (Index k = 0; k < t.n; ++k) cons.push_back({t.eps_s(e(k)), t.eps[k]});
    std::vector<Index> unknowns(t.n);
    for (Index k = 0; k < t.n; ++k) unknowns[k] = k;
    auto sol = solve_linear(cons, unknowns);
    if (!sol.consistent) return std::nullopt;
    return as_functional(*sol.particular, t.n);
}

std::vector<Functional> default_faithful_set(const WmhaTables& t) {
    IntegralTheory it(t);
    if (auto f = it.faithful_left_integral()) return {*f};
    return it.left_integrals();
}

Scalar pair(const Element& x, const Element& w) {
    Scalar s;
    for (const auto& [k, c] : x) s += c * w[k];
    return s;
}

Scalar pair(const Tensor2& x, const Tensor2& w) {
    Scalar s;
    for (const auto& [k, c] : x) s += c * w[k];
    return s;
}

Element act_right_translate(const WmhaTables& t, const Element& a, const Element& w) {
    return tabulate_functional(t.n, [&](Index x) { return pair(t.mul(e(x), a), w); });
}

Element act_left_translate(const WmhaTables& t, const Element& w, const Element& a) {
    return tabulate_functional(t.n, [&](Index x) { return pair(t.mul(a, e(x)), w); });
}

Element act_slice_first(const WmhaTables& t, const Element& a, const Element& w) {
    Element out;
    for (const auto& [pq, c] : t.coproduct(a)) out.add(pq.second, c * w[pq.first]);
    return out;
}

Element act_slice_second(const WmhaTables& t, const Element& w, const Element& a) {
    Element out;
    for (const auto& [pq, c] : t.coproduct(a)) out.add(pq.first, c * w[pq.second]);
    return out;
}

std::optional<Scalar> extend_pairing(const WmhaTables& t, const Multiplier& m, const Element& w) {
    const Scalar left = pair(m.left(t.unit), w), right = pair(m.right(t.unit), w);
    if (left != right) return std::nullopt;
    return left;
}

std::optional<Multiplier> dual_multiplier(const WmhaTables& d, const Element& w) {
    for (Index b = 0; b < d.n; ++b)
        for (Index b2 = 0; b2 < d.n; ++b2)
            if (d.mul(e(b), d.mul(w, e(b2))) != d.mul(d.mul(e(b), w), e(b2))) return std::nullopt;
    return multiplier_of(d, w);
}

std::vector<LawResult> check_isomorphism(const WmhaTables& a, const WmhaTables& b, const AlgMap& f) {
    std::vector<LawResult> out;
    auto ff = [&](const Tensor2& t) {
        Tensor2 r;
        for (const auto& [k, c] : t) r.axpy(c, tensor2(f.column(k.first), f.column(k.second)));
        return r;
    };
    std::vector<Element> images;
    for (Index x = 0; x < a.n; ++x) images.push_back(f.column(x));
    out.push_back(a.n == b.n && rank_of(images) == b.n ? pass("iso bijective") : fail("iso bijective", {}, "not a bijection"));

    LawResult prod = pass("iso product");
    for (Index x = 0; x < a.n && prod.ok; ++x)
        for (Index y = 0; y < a.n; ++y)
            if (f.apply(a.prod(x, y)) != b.mul(f.column(x), f.column(y))) {
                prod = fail("iso product", {a.labels[x], a.labels[y]});
                break;
            }
    out.push_back(prod);
    out.push_back(f.apply(a.unit) == b.unit ? pass("iso unit") : fail("iso unit", {}));

    LawResult cop = pass("iso coproduct"), cou = pass("iso counit"), ant = pass("iso antipode");
    for (Index x = 0; x < a.n; ++x) {
        if (cop.ok && ff(a.delta[x]) != b.coproduct(f.column(x))) cop = fail("iso coproduct", {a.labels[x]});
        if (cou.ok && b.counit(f.column(x)) != a.eps[x]) cou = fail("iso counit", {a.labels[x]});
        if (ant.ok && f.apply(a.S[x]) != b.antipode(f.column(x))) ant = fail("iso antipode", {a.labels[x]});
    }
    out.push_back(cop);
    out.push_back(cou);
    out.push_back(ant);
    out.push_back(ff(a.E) == b.E ? pass("iso E") : fail("iso E", {}));
    return out;
}

namespace {

// Solves <y a, b> = <a, b z> (right = true) or <a y, b> = <a, z b> for z.
std::optional<Element> solve_gamma(const WmhaTables& p, const WmhaTables& d, const Element& y, bool source) {
    std::vector<LinearConstraint<Index>> cons;
    for (Index a = 0; a < p.n; ++a)
        for (Index b = 0; b < d.n; ++b) {
            LinearConstraint<Index> c;
            for (Index k = 0; k < d.n; ++k) c.lhs.add(k, (source ? d.prod(b, k) : d.prod(k, b))[a]);
            c.rhs = (source ? p.mul(y, e(a)) : p.mul(e(a), y))[b];
            cons.push_back(std::move(c));
        }
    std::vector<Index> unknowns(d.n);
    for (Index k = 0; k < d.n; ++k) unknowns[k] = k;
    auto sol = solve_linear(cons, unknowns);
    if (!sol.consistent || !sol.zero_space()) return std::nullopt;
    return *sol.particular;
}

Gamma gamma(const WmhaTables& p, const WmhaTables& d, bool source) {
    Gamma g;
    std::vector<Element> dom, tgt;
    for (Index k = 0; k < p.n; ++k) dom.push_back(source ? p.eps_s(e(k)) : p.eps_t(e(k)));
    for (Index k = 0; k < d.n; ++k) tgt.push_back(source ? d.eps_t(e(k)) : d.eps_s(e(k)));
    g.domain = span_basis(dom);
    g.solvable = true;
    for (const auto& y : g.domain) {
        auto z = solve_gamma(p, d, y, source);
        if (!z) {
            g.solvable = false;
            return g;
        }
        g.images.push_back(*z);
    }
    g.lands = true;
    for (const auto& z : g.images)
        if (!in_span(z, tgt)) g.lands = false;
    g.homomorphism = true;
    for (std::size_t i = 0; i < g.domain.size() && g.homomorphism; ++i)
        for (std::size_t j = 0; j < g.domain.size(); ++j) {
            auto z = solve_gamma(p, d, p.mul(g.domain[i], g.domain[j]), source);
            if (!z || *z != d.mul(g.images[i], g.images[j])) {
                g.homomorphism = false;
                break;
            }
        }
    g.bijective = rank_of(g.images) == g.domain.size() && rank_of(tgt) == g.domain.size();
    return g;
}

}  // namespace

Gamma gamma_s(const WmhaTables& primal, const WmhaTables& dual) { return gamma(primal, dual, true); }
Gamma gamma_t(const WmhaTables& primal, const WmhaTables& dual) { return gamma(primal, dual, false); }

AlgMap evaluation_map(const WmhaTables& primal) {
    AlgMap f;
    for (Index a = 0; a < primal.n; ++a)
        f.set_column(a, tabulate_functional(primal.n, [&](Index k) { return pair(e(a), e(k)); }));
    return f;
}

std::vector<LawResult> check_duality(const WmhaTables& p, const DualWmha& dual, const WmhaTables& d, const DualityOptions& opt) {
    const std::size_t n = p.n;
    std::vector<LawResult> out;
    const auto& L = p.labels;
    const auto& DL = d.labels;

    {
        const WmhaTables o = transpose_dual(p);
        std::string diff;
        if (o.mult != d.mult) diff = "product";
        else if (o.delta != d.delta) diff = "coproduct";
        else if (o.S != d.S) diff = "antipode";
        else if (o.Sinv != d.Sinv) diff = "inverse antipode";
        else if (o.eps != d.eps) diff = "counit";
        else if (o.unit != d.unit) diff = "unit";
        else if (o.E != d.E) diff = "E";
        out.push_back(diff.empty() ? pass("transpose oracle") : fail("transpose oracle", {}, diff + " differs"));
    }

    LawResult cop = pass("pairing of products");
    for (Index a = 0; a < n && cop.ok; ++a)
        for (Index a2 = 0; a2 < n && cop.ok; ++a2)
            for (Index w = 0; w < n; ++w) {
                if (pair(p.prod(a, a2), e(w)) != pair(tensor2(e(a), e(a2)), d.delta[w]) ||
                    pair(e(w), d.prod(a, a2)) != pair(p.delta[w], tensor2(e(a), e(a2)))) {
                    cop = fail("pairing of products", {L[a], L[a2], DL[w]});
                    break;
                }
            }
    out.push_back(cop);

    LawResult cou = pass("counit pairing"), ant = pass("antipode pairing"), es = pass("eps_s self-dual"),
              et = pass("eps_t self-dual");
    for (Index a = 0; a < n; ++a) {
        if (cou.ok && (d.eps[a] != pair(p.unit, e(a)) || pair(e(a), d.unit) != p.eps[a])) cou = fail("counit pairing", {L[a]});
        for (Index w = 0; w < n; ++w) {
            if (ant.ok && pair(e(a), d.S[w]) != pair(p.S[a], e(w))) ant = fail("antipode pairing", {L[a], DL[w]});
            if (es.ok && pair(e(a), d.eps_s(e(w))) != pair(p.eps_s(e(a)), e(w))) es = fail("eps_s self-dual", {L[a], DL[w]});
            if (et.ok && pair(e(a), d.eps_t(e(w))) != pair(p.eps_t(e(a)), e(w))) et = fail("eps_t self-dual", {L[a], DL[w]});
        }
    }
    out.push_back(cou);
    out.push_back(ant);
    out.push_back(es);
    out.push_back(et);

    // Adjointness of the canonical maps, on precomputed basis images.
    {
        std::vector<Tensor2> t1, t2, r1, r2, pt1, pt2, pr1, pr2;
        for (Index j = 0; j < n; ++j)
            for (Index k = 0; k < n; ++k) {
                const Tensor2 b = tensor2(e(j), e(k));
                t1.push_back(dual.T1(b));
                t2.push_back(dual.T2(b));
                r1.push_back(dual.R1(b));
                r2.push_back(dual.R2(b));
                pt1.push_back(p.T1(b));
                pt2.push_back(p.T2(b));
                pr1.push_back(p.R1(b));
                pr2.push_back(p.R2(b));
            }
        struct Adj {
            const char* name;
            const std::vector<Tensor2>& hat;
            const std::vector<Tensor2>& primal;
        };
        for (const Adj& adj : {Adj{"T1hat adjoint to T2", t1, pt2}, Adj{"T2hat adjoint to T1", t2, pt1},
                               Adj{"R1hat adjoint to R2", r1, pr2}, Adj{"R2hat adjoint to R1", r2, pr1}}) {
            LawResult r = pass(adj.name);
            for (Index xy = 0; xy < n * n && r.ok; ++xy)
                for (Index ww = 0; ww < n * n; ++ww)
                    if (adj.hat[ww][{xy / n, xy % n}] != adj.primal[xy][{ww / n, ww % n}]) {
                        r = fail(adj.name, {L[xy / n], L[xy % n], DL[ww / n], DL[ww % n]});
                        break;
                    }
            out.push_back(r);
        }
    }

    LawResult ep = pass("E hat pairing");
    for (Index a = 0; a < n && ep.ok; ++a)
        for (Index a2 = 0; a2 < n; ++a2)
            if (pair(tensor2(e(a), e(a2)), d.E) != p.counit(p.prod(a, a2))) {
                ep = fail("E hat pairing", {L[a], L[a2]});
                break;
            }
    out.push_back(ep);

    LawResult act = pass("actions");
    for (Index a = 0; a < n && act.ok; ++a)
        for (Index a2 = 0; a2 < n && act.ok; ++a2)
            for (Index w = 0; w < n; ++w) {
                const bool ok = pair(e(a2), act_right_translate(p, e(a), e(w))) == pair(p.prod(a2, a), e(w)) &&
                                pair(e(a2), act_left_translate(p, e(w), e(a))) == pair(p.prod(a, a2), e(w)) &&
                                pair(act_slice_first(p, e(a), e(w)), e(a2)) == pair(e(a), d.prod(w, a2)) &&
                                pair(act_slice_second(p, e(w), e(a)), e(a2)) == pair(e(a), d.prod(a2, w));
                if (!ok) {
                    act = fail("actions", {L[a], L[a2], DL[w]});
                    break;
                }
            }
    for (Index w = 0; w < n && act.ok; ++w) {
        // The actions are unital: the unit of A acts trivially.
        if (act_right_translate(p, p.unit, e(w)) != e(w) || act_left_translate(p, e(w), p.unit) != e(w))
            act = fail("actions", {DL[w]}, "not unital");
    }
    out.push_back(act);

    LawResult ext = pass("extended pairing");
    for (Index w = 0; w < n; ++w) {
        auto v = extend_pairing(p, multiplier_of(p, p.unit), e(w));
        if (!v || *v != d.eps[w]) {
            ext = fail("extended pairing", {DL[w]});
            break;
        }
    }
    if (ext.ok)
        for (Index w = 0; w < n; ++w)
            if (!dual_multiplier(d, e(w))) {
                ext = fail("extended pairing", {DL[w]}, "not a dual multiplier");
                break;
            }
    out.push_back(ext);

    // Integrals on the dual.
    {
        IntegralTheory dit(d);
        LawResult di = pass("dual integrals");
        std::vector<Functional> lefts;
        for (Index a = 0; a < n && di.ok; ++a) {
            const Functional psi = dual.dual_integral(e(a));
            if (!dual.dual_integral_well_defined(e(a))) di = fail("dual integrals", {L[a]}, "depends on the representation");
            else if (!dit.right_invariant_def(psi)) di = fail("dual integrals", {L[a]}, "not right invariant");
            if (!as_vector(psi).is_zero()) lefts.push_back(compose_antipode_inv(d, psi));
        }
        if (di.ok && !dit.faithful_set(lefts).faithful) di = fail("dual integrals", {}, "not a faithful set");
        out.push_back(di);

        if (dual.integrals().size() == 1) {
            LawResult sd = pass("single dual integral");
            auto p0 = distinguished_source_functional(p);
            if (!p0) {
                sd = fail("single dual integral", {}, "eps_s(c) -> eps(c) is not well defined");
            } else {
                const Functional psi = value(dual.single_dual_integral(*p0));
                if (!dit.is_right_integral(psi)) sd = fail("single dual integral", {}, "not a right integral");
                else if (!dit.faithful_set({compose_antipode_inv(d, psi)}).faithful) sd = fail("single dual integral", {}, "not faithful");
                // psi(w' phi(. c)) = w'(S^-1(c))
                for (Index w = 0; w < n && sd.ok; ++w) {
                    const Element c = dual.right_form(e(w))[0];
                    for (Index w2 = 0; w2 < n; ++w2)
                        if (evaluate(psi, d.prod(w2, w)) != pair(p.antipode_inv(c), e(w2))) {
                            sd = fail("single dual integral", {DL[w2], DL[w]}, "psi(w' w) != w'(S^-1(c))");
                            break;
                        }
                }
            }
            out.push_back(sd);
        }
    }

    const Gamma gs = gamma_s(p, d), gt = gamma_t(p, d);
    out.push_back(gs.ok() ? pass("gamma_s") : fail("gamma_s", {}, gs.solvable ? "not an isomorphism onto the target algebra" : "no solution"));
    out.push_back(gt.ok() ? pass("gamma_t") : fail("gamma_t", {}, gt.solvable ? "not an isomorphism onto the source algebra" : "no solution"));

    // w(x eps_s(c)) = <(w (x) 1)F1hat, x (x) c>
    {
        LawResult f1 = pass("F1hat identity");
        const Tensor2 F1 = d.F1();
        for (Index w = 0; w < n && f1.ok; ++w) {
            const Tensor2 wf = d.mul(tensor2(e(w), d.unit), F1);
            for (Index x = 0; x < n && f1.ok; ++x)
                for (Index c = 0; c < n; ++c)
                    if (pair(p.mul(e(x), p.eps_s(e(c))), e(w)) != pair(tensor2(e(x), e(c)), wf)) {
                        f1 = fail("F1hat identity", {DL[w], L[x], L[c]});
                        break;
                    }
        }
        out.push_back(f1);
    }

    if (opt.commutation) {
        auto leg12 = [&](auto&& f, const Tensor3& t) {
            Tensor3 r;
            for (const auto& [k, c] : t)
                for (const auto& [uv, d2] : f(tensor2(e(k[0]), e(k[1])))) r.add({uv.first, uv.second, k[2]}, c * d2);
            return r;
        };
        auto leg23 = [&](auto&& f, const Tensor3& t) {
            Tensor3 r;
            for (const auto& [k, c] : t)
                for (const auto& [uv, d2] : f(tensor2(e(k[1]), e(k[2])))) r.add({k[0], uv.first, uv.second}, c * d2);
            return r;
        };
        auto pT1 = [&](const Tensor2& t) { return p.T1(t); };
        auto pT2 = [&](const Tensor2& t) { return p.T2(t); };
        auto dT1 = [&](const Tensor2& t) { return dual.T1(t); };
        auto dT2 = [&](const Tensor2& t) { return dual.T2(t); };
        LawResult pc = pass("primal commutation"), dc = pass("dual commutation");
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                for (Index k = 0; k < n; ++k) {
                    const Tensor3 b{{{i, j, k}, Scalar(1)}};
                    if (pc.ok && leg23(pT2, leg12(pT1, b)) != leg12(pT1, leg23(pT2, b)))
                        pc = fail("primal commutation", {L[i], L[j], L[k]}, "iota(x)T2 and T1(x)iota");
                    if (dc.ok && leg23(dT1, leg12(dT2, b)) != leg12(dT2, leg23(dT1, b)))
                        dc = fail("dual commutation", {DL[i], DL[j], DL[k]}, "iota(x)T1hat and T2hat(x)iota");
                }
        out.push_back(pc);
        out.push_back(dc);
    }
    return out;
}

}  // namespace wmha
