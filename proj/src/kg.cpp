#include "wmha/kg.hpp"

#include <set>

namespace wmha {

namespace {

void require_valid(const Groupoid& g) {
    auto rep = validate(g);
    if (!rep.ok()) {
        const auto& v = rep.violations.front();
        std::string w;
        for (const auto& s : v.witness) w += (w.empty() ? "" : ",") + s;
        throw GroupoidError("invalid groupoid: " + v.axiom + " (" + w + ")");
    }
}

}  // namespace

KgAlgebra::KgAlgebra(Groupoid g) : g_(std::move(g)) { require_valid(g_); }

Element KgAlgebra::product(Index a, Index b) const { return a == b ? Element::basis(a) : Element{}; }

// pq = a with q given forces s(q) = s(a) and p = a q^-1.
Tensor2 KgAlgebra::delta_right(Index a, const Element& b) const {
    Tensor2 out;
    for (const auto& [q, c] : b) {
        if (g_.source(q) != g_.source(a)) continue;
        out.add({*g_.compose(a, g_.inverse(q)), q}, c);
    }
    return out;
}

// pq = a with p given forces t(p) = t(a) and q = p^-1 a.
Tensor2 KgAlgebra::delta_left(const Element& c, Index a) const {
    Tensor2 out;
    for (const auto& [p, v] : c) {
        if (g_.target(p) != g_.target(a)) continue;
        out.add({p, *g_.compose(g_.inverse(p), a)}, v);
    }
    return out;
}

Scalar KgAlgebra::counit(Index a) const { return g_.is_unit(a) ? Scalar(1) : Scalar(0); }

Element KgAlgebra::antipode(Index a) const { return Element::basis(g_.inverse(a)); }

Element KgAlgebra::antipode_inverse(Index a) const { return Element::basis(g_.inverse(a)); }

Multiplier2 KgAlgebra::canonical_idempotent() const {
    // Multiplication by the indicator of composable pairs.
    const Groupoid* g = &g_;
    auto act = [g](const Tensor2& x) {
        Tensor2 out;
        for (const auto& [k, c] : x)
            if (g->source(k.first) == g->target(k.second)) out.add(k, c);
        return out;
    };
    return {act, act};
}

Element KgAlgebra::local_unit(const std::vector<Element>& xs) const {
    Element e;
    for (const auto& x : xs)
        for (const auto& [p, c] : x) e.set(p, Scalar(1));
    return e;
}

std::optional<Tensor2> KgAlgebra::coproduct_oracle(Index a) const {
    Tensor2 out;
    for (const auto& [pq, r] : g_.compose_table())
        if (r == a) out.add(pq, Scalar(1));
    return out;
}

}  // namespace wmha
