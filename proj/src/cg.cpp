#include "wmha/cg.hpp"

namespace wmha {

CgAlgebra::CgAlgebra(Groupoid g) : g_(std::move(g)) {
    auto rep = validate(g_);
    if (!rep.ok()) throw GroupoidError("invalid groupoid: " + rep.violations.front().axiom);
}

Element CgAlgebra::product(Index a, Index b) const {
    auto r = g_.compose(a, b);
    return r ? Element::basis(*r) : Element{};
}

Element CgAlgebra::mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [a, c] : x)
        for (const auto& [b, d] : y)
            if (auto r = g_.compose(a, b)) out.add(*r, c * d);
    return out;
}

Tensor2 CgAlgebra::delta_right(Index a, const Element& b) const {
    return tensor2(Element::basis(a), mul(Element::basis(a), b));
}

Tensor2 CgAlgebra::delta_left(const Element& c, Index a) const {
    return tensor2(mul(c, Element::basis(a)), Element::basis(a));
}

Element CgAlgebra::antipode(Index a) const { return Element::basis(g_.inverse(a)); }

Element CgAlgebra::antipode_inverse(Index a) const { return Element::basis(g_.inverse(a)); }

Multiplier2 CgAlgebra::canonical_idempotent() const {
    // E = sum over units e of lambda_e (x) lambda_e.
    const Groupoid* g = &g_;
    Multiplier2 m;
    m.left = [g](const Tensor2& x) {
        Tensor2 out;
        for (const auto& [k, c] : x)
            if (g->target(k.first) == g->target(k.second)) out.add(k, c);
        return out;
    };
    m.right = [g](const Tensor2& x) {
        Tensor2 out;
        for (const auto& [k, c] : x)
            if (g->source(k.first) == g->source(k.second)) out.add(k, c);
        return out;
    };
    return m;
}

Element CgAlgebra::local_unit(const std::vector<Element>& xs) const {
    Element e;
    for (const auto& x : xs)
        for (const auto& [p, c] : x) {
            e.set(g_.source(p), Scalar(1));
            e.set(g_.target(p), Scalar(1));
        }
    return e;
}

std::optional<Tensor2> CgAlgebra::coproduct_oracle(Index a) const {
    Tensor2 out;
    out.add({a, a}, Scalar(1));
    return out;
}

}  // namespace wmha
