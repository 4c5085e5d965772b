#pragma once

// Weak multiplier Hopf algebras from a regular separability idempotent E in B (x) C:
// the algebra A = C (x) B with Delta(c b) = (c (x) 1)E(1 (x) b), and its dual B<>C.

#include "wmha/integrals.hpp"
#include "wmha/wmha.hpp"

#include <string>
#include <vector>

namespace wmha {

/// A finite-dimensional unital algebra by structure constants.
struct FiniteAlgebra {
    std::string name;
    std::vector<std::string> labels;
    std::size_t n = 0;
    std::vector<Element> mult;  // mult[i * n + j] = x_i x_j
    Element unit;

    const Element& prod(Index i, Index j) const { return mult[i * n + j]; }
    Element mul(const Element& x, const Element& y) const;
};

/// Finds the unit; throws std::invalid_argument if the constants are not those of a
/// unital associative algebra.
FiniteAlgebra make_algebra(std::string name, std::vector<std::string> labels, std::vector<Element> mult);
FiniteAlgebra function_algebra(std::size_t n);  // pointwise functions on {1..n}, basis d1..dn
FiniteAlgebra matrix_algebra(std::size_t n);    // matrix units e11..enn, e_ij at index (i-1)n+(j-1)
FiniteAlgebra opposite(const FiniteAlgebra& a);

/// A separability idempotent E in B (x) C (keys (b, c)) with S_B: B -> C and S_C: C -> B.
struct SepData {
    std::string name;
    FiniteAlgebra B, C;
    Tensor2 E;
    AlgMap S_B, S_C;
};

/// The anti-homomorphisms determined by E(b (x) 1) = E(1 (x) S_B(b)) and
/// (1 (x) c)E = (S_C(c) (x) 1)E; nullopt when some basis element has no unique solution.
std::optional<AlgMap> solve_S_B(const FiniteAlgebra& B, const FiniteAlgebra& C, const Tensor2& E);
std::optional<AlgMap> solve_S_C(const FiniteAlgebra& B, const FiniteAlgebra& C, const Tensor2& E);

struct SepDerived {
    Functional phi_B, phi_C;  // (phi_B (x) iota)E = 1, (iota (x) phi_C)E = 1
    AlgMap sigma_B, sigma_C;  // (S_C S_B)^-1 and S_B S_C
    AlgMap S_B_inv, S_C_inv;
};

/// Every defining condition, each a named law with a witness on failure.
std::vector<LawResult> validate_sep(const SepData& d);
/// Throws std::invalid_argument if validate_sep fails.
SepDerived derive_functionals(const SepData& d);

/// B = C = functions on {1..n}, E = sum_x d_x (x) d_tau(x); tau is 0-based.
SepData sep_function_example(std::size_t n, const std::vector<Index>& tau);
/// B = M_n, C = M_n^op, E = sum_ij y_j e_ij (x) e_ji; needs sum_j y_j = 1.
SepData sep_matrix_example(const std::vector<Scalar>& y);

/// Basis index of c_k (x) b_l in A = C (x) B.
inline Index sep_index(const SepData& d, Index k, Index l) { return k * d.B.n + l; }
/// Basis index of u_k <> v_l in B<>C.
inline Index diamond_index(const SepData& d, Index k, Index l) { return k * d.C.n + l; }

class SepWmha : public Wmha {
public:
    explicit SepWmha(SepData d);

    const SepData& data() const { return d_; }
    const SepDerived& derived() const { return x_; }

    std::string name() const override { return "C(x)B[" + d_.name + "]"; }
    std::size_t dim() const override { return d_.C.n * d_.B.n; }
    std::string label(Index a) const override;
    Element product(Index a, Index b) const override;
    Tensor2 delta_right(Index a, const Element& b) const override;
    Tensor2 delta_left(const Element& c, Index a) const override;
    Scalar counit(Index a) const override;
    Element antipode(Index a) const override;
    Element antipode_inverse(Index a) const override;
    Multiplier2 canonical_idempotent() const override;
    Element local_unit(const std::vector<Element>&) const override;

    /// c (x) b as an element of A.
    Element embed(const Element& c, const Element& b) const;
    /// phi(c b) = phi_C(c) phi_B(b).
    Functional two_sided_integral() const;

private:
    Element mulA(const Element& x, const Element& y) const;
    Tensor2 mulA2(const Tensor2& x, const Tensor2& y) const;
    Tensor2 coproduct(Index a) const;

    SepData d_;
    SepDerived x_;
};

class DiamondWmha : public Wmha {
public:
    explicit DiamondWmha(SepData d);

    const SepData& data() const { return d_; }
    const SepDerived& derived() const { return x_; }

    std::string name() const override { return "B<>C[" + d_.name + "]"; }
    std::size_t dim() const override { return d_.B.n * d_.C.n; }
    std::string label(Index a) const override;
    Element product(Index a, Index b) const override;
    Tensor2 delta_right(Index a, const Element& b) const override;
    Tensor2 delta_left(const Element& c, Index a) const override;
    Scalar counit(Index a) const override;
    Element antipode(Index a) const override;
    Element antipode_inverse(Index a) const override;
    Multiplier2 canonical_idempotent() const override;
    Element local_unit(const std::vector<Element>&) const override { return unit_; }

    /// u <> v for u in B, v in C.
    Element diamond(const Element& u, const Element& v) const;
    /// eps(v u) = phi_B(S_C(v) u)
    Scalar pairing(const Element& v, const Element& u) const;
    /// Delta_B(u) = F1(1 (x) u) and Delta_C(v) = (v (x) 1)F2.
    Tensor2 delta_B(const Element& u) const;
    Tensor2 delta_C(const Element& v) const;
    /// gamma(u (x) u') = (u u' (x) 1)F1 and gamma'(v (x) v') = F2(1 (x) v v').
    Tensor2 gamma_B(const Tensor2& uu) const;
    Tensor2 gamma_C(const Tensor2& vv) const;

    /// psi_x(u<>v) = phi_C(S_B(u) x v) and phi_y(u<>v) = phi_B(u y S_C(v)).
    Functional right_integral(const Element& x) const;
    Functional left_integral(const Element& y) const;
    /// The modular element, as the element acting by sigma_B^-2 on the B leg.
    Element modular_element() const;
    Element modular_element_inverse() const;

private:
    Tensor2 coproduct(Index a) const;
    Element dmul(const Element& x, const Element& y) const;

    SepData d_;
    SepDerived x_;
    Matrix gram_;  // gram_[l][k] = eps(v_l u_k)
    Element unit_;
};

/// u<>v -> the functional c b -> phi_B(b S_C(v)) phi_C(S_B(u) c) on A.
AlgMap diamond_to_dual(const SepData& d);
/// u<>v -> phi(. S_C(v) sigma_C(S_B(u))) with phi the two-sided integral of A.
AlgMap diamond_to_dual_via_integral(const SepData& d);

/// The statements about A = C (x) B: source/target maps, integral spaces, faithfulness,
/// modular automorphism against sigma_B.
std::vector<LawResult> check_sep_algebra(const SepWmha& w, const WmhaTables& t);
/// The statements about B<>C: coproduct pairings, projections, integrals, modular
/// element, S^2 and Radford's S^4 formula, adjointable multipliers.
std::vector<LawResult> check_diamond(const DiamondWmha& w, const WmhaTables& t);

}  // namespace wmha
