#pragma once

// CG: the groupoid algebra with basis lambda_p, lambda_p lambda_q = lambda_pq
// (or 0), and group-like coproduct.

#include "wmha/groupoid.hpp"
#include "wmha/wmha.hpp"

namespace wmha {

class CgAlgebra : public Wmha {
public:
    /// Throws GroupoidError when g does not validate.
    explicit CgAlgebra(Groupoid g);

    const Groupoid& groupoid() const { return g_; }

    std::string name() const override { return "CG"; }
    std::size_t dim() const override { return g_.size(); }
    std::string label(Index a) const override { return "lambda" + g_.name(a); }
    Element product(Index a, Index b) const override;
    Tensor2 delta_right(Index a, const Element& b) const override;
    Tensor2 delta_left(const Element& c, Index a) const override;
    Scalar counit(Index) const override { return Scalar(1); }
    Element antipode(Index a) const override;
    Element antipode_inverse(Index a) const override;
    Multiplier2 canonical_idempotent() const override;
    Element local_unit(const std::vector<Element>& xs) const override;
    std::optional<Tensor2> coproduct_oracle(Index a) const override;

private:
    Element mul(const Element& x, const Element& y) const;

    Groupoid g_;
};

}  // namespace wmha
