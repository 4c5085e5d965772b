#pragma once

// K(G): functions on a finite groupoid with pointwise product and
// Delta(f)(p,q) = f(pq) when pq is defined.

#include "wmha/groupoid.hpp"
#include "wmha/wmha.hpp"

namespace wmha {

class KgAlgebra : public Wmha {
public:
    /// Throws GroupoidError when g does not validate.
    explicit KgAlgebra(Groupoid g);

    const Groupoid& groupoid() const { return g_; }

    std::string name() const override { return "K(G)"; }
    std::size_t dim() const override { return g_.size(); }
    std::string label(Index a) const override { return g_.name(a); }
    Element product(Index a, Index b) const override;
    Tensor2 delta_right(Index a, const Element& b) const override;
    Tensor2 delta_left(const Element& c, Index a) const override;
    Scalar counit(Index a) const override;
    Element antipode(Index a) const override;
    Element antipode_inverse(Index a) const override;
    Multiplier2 canonical_idempotent() const override;
    Element local_unit(const std::vector<Element>& xs) const override;
    std::optional<Tensor2> coproduct_oracle(Index a) const override;

private:
    Groupoid g_;
};

}  // namespace wmha
