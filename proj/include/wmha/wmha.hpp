#pragma once

// The weak multiplier Hopf algebra interface, its tabulated form, and the axiom suite.

#include "wmha/finvec.hpp"
#include "wmha/linalg.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wmha {

/// Multiplier of A as a pair of operators: left(x) = m x, right(x) = x m.
struct Multiplier {
    std::function<Element(const Element&)> left;
    std::function<Element(const Element&)> right;
};

/// Multiplier of A (x) A.
struct Multiplier2 {
    std::function<Tensor2(const Tensor2&)> left;
    std::function<Tensor2(const Tensor2&)> right;
};

/// A regular weak multiplier Hopf algebra with a finite basis 0..dim()-1.
///
/// The coproduct is only reachable through its two slices; an instance that can
/// write Delta(a) down independently may expose it as coproduct_oracle for cross-checks.
class Wmha {
public:
    virtual ~Wmha() = default;

    virtual std::string name() const = 0;
    virtual std::size_t dim() const = 0;
    virtual std::string label(Index a) const = 0;

    virtual Element product(Index a, Index b) const = 0;
    /// Delta(a)(1 (x) b)
    virtual Tensor2 delta_right(Index a, const Element& b) const = 0;
    /// (c (x) 1)Delta(a)
    virtual Tensor2 delta_left(const Element& c, Index a) const = 0;
    virtual Scalar counit(Index a) const = 0;
    virtual Element antipode(Index a) const = 0;
    virtual Element antipode_inverse(Index a) const = 0;
    virtual Multiplier2 canonical_idempotent() const = 0;
    /// An element e with e x = x = x e for every x in xs.
    virtual Element local_unit(const std::vector<Element>& xs) const = 0;

    virtual std::optional<Tensor2> coproduct_oracle(Index) const { return std::nullopt; }
};

/// Dense structure tables of a finite instance. Every multiplier is an element
/// here because a finite-dimensional instance is unital; the unit is found via local_unit.
struct WmhaTables {
    std::string name;
    std::vector<std::string> labels;
    std::size_t n = 0;
    std::vector<Element> mult;  // mult[a * n + b] = b_a b_b
    std::vector<Tensor2> delta;
    std::vector<Element> S, Sinv;
    std::vector<Scalar> eps;
    Element unit;
    Tensor2 E;

    const Element& prod(Index a, Index b) const { return mult[a * n + b]; }

    Element mul(const Element& x, const Element& y) const;
    Tensor2 mul(const Tensor2& x, const Tensor2& y) const;
    Tensor3 mul(const Tensor3& x, const Tensor3& y) const;

    Element antipode(const Element& x) const;
    Element antipode_inv(const Element& x) const;
    Scalar counit(const Element& x) const;
    Tensor2 coproduct(const Element& x) const;
    /// (Delta (x) iota)Delta(x), the three-leg Sweedler expansion.
    Tensor3 coproduct3(const Element& x) const;

    Tensor2 T1(const Tensor2& x) const;  // a(x)b -> Delta(a)(1(x)b)
    Tensor2 T2(const Tensor2& x) const;  // c(x)a -> (c(x)1)Delta(a)
    Tensor2 R1(const Tensor2& x) const;  // a(x)b -> sum a1 (x) S(a2) b
    Tensor2 R2(const Tensor2& x) const;  // a(x)b -> sum a S(b1) (x) b2

    Element eps_s(const Element& x) const;  // sum S(a1) a2
    Element eps_t(const Element& x) const;  // sum a1 S(a2)

    Tensor2 F1() const;  // (iota (x) S)E
    Tensor2 F2() const;  // (S (x) iota)E
    Tensor2 F3() const;  // (iota (x) S^-1)E
    Tensor2 F4() const;  // (S^-1 (x) iota)E

    std::vector<Element> basis() const;
    Tensor2 unit2() const { return tensor2(unit, unit); }
};

/// Apply maps leg-wise.
Tensor2 apply_legs(const Tensor2& t, const std::function<Element(Index)>& f, const std::function<Element(Index)>& g);
/// Left legs (iota (x) e^j)(t) and right legs (e^i (x) iota)(t).
std::vector<Element> left_legs(const Tensor2& t);
std::vector<Element> right_legs(const Tensor2& t);

WmhaTables tabulate(const Wmha& w);

/// An instance given directly by its tables.
class TableWmha : public Wmha {
public:
    explicit TableWmha(WmhaTables t) : t_(std::move(t)) {}

    const WmhaTables& tables() const { return t_; }

    std::string name() const override { return t_.name; }
    std::size_t dim() const override { return t_.n; }
    std::string label(Index a) const override { return t_.labels[a]; }
    Element product(Index a, Index b) const override { return t_.prod(a, b); }
    Tensor2 delta_right(Index a, const Element& b) const override;
    Tensor2 delta_left(const Element& c, Index a) const override;
    Scalar counit(Index a) const override { return t_.eps[a]; }
    Element antipode(Index a) const override { return t_.S[a]; }
    Element antipode_inverse(Index a) const override { return t_.Sinv[a]; }
    Multiplier2 canonical_idempotent() const override;
    Element local_unit(const std::vector<Element>&) const override { return t_.unit; }

private:
    WmhaTables t_;
};

/// Multipliers realizing eps_s(a), eps_t(a) by left/right multiplication.
Multiplier eps_s(const WmhaTables& t, const Element& a);
Multiplier eps_t(const WmhaTables& t, const Element& a);
Multiplier multiplier_of(const WmhaTables& t, const Element& m);

struct LawResult {
    std::string name;
    bool ok = true;
    std::vector<std::string> witness;  // labels of the failing basis tuple
    std::string detail;
};

struct CheckOptions {
    std::size_t max_exhaustive_dim = 64;
    std::uint64_t seed = 1;
    std::size_t samples = 512;  // tuples per law when dim exceeds the threshold
    unsigned jobs = 1;
};

struct AxiomReport {
    std::string instance;
    std::size_t dim = 0;
    bool exhaustive = true;
    std::vector<LawResult> laws;

    bool ok() const;
    const LawResult* find(const std::string& name) const;
};

AxiomReport check_axioms(const Wmha& w, const CheckOptions& opt = {});
/// Same, on precomputed tables (the lazy-slice laws are then checked against `w`).
AxiomReport check_axioms(const Wmha& w, const WmhaTables& t, const CheckOptions& opt);

}  // namespace wmha
