#pragma once

// The dual of a finite instance with a faithful set of left integrals.
//
// Elements of the dual are functionals on A, stored in the coordinate dual basis:
// the dual element with index k is the functional e^k(b_j) = [j = k]. The structure
// maps are computed from representations w = sum_i phi_i(. c_i) and never from a
// transposed coproduct; transpose_dual() builds the same tables the direct way.

#include "wmha/integrals.hpp"
#include "wmha/wmha.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wmha {

namespace detail {

/// Writes a functional as a combination of fixed spanning functionals.
class Representer {
public:
    Representer() = default;
    Representer(const std::vector<Functional>& columns, std::size_t n);

    bool spans() const { return spans_; }
    std::vector<Scalar> coefficients(const Functional& w) const;
    /// Combinations of the columns that vanish.
    const Matrix& relations() const { return relations_; }

private:
    std::size_t m_ = 0;
    bool spans_ = false;
    std::vector<std::size_t> pivots_;
    Matrix inverse_;
    Matrix relations_;
};

}  // namespace detail

class DualWmha : public Wmha {
public:
    /// Throws std::invalid_argument unless `integrals` is a faithful set of left integrals.
    DualWmha(const WmhaTables& primal, std::vector<Functional> integrals);

    std::string name() const override { return "dual of " + p_.name; }
    std::size_t dim() const override { return p_.n; }
    std::string label(Index a) const override { return "<" + p_.labels[a] + ">"; }
    Element product(Index a, Index b) const override;
    Tensor2 delta_right(Index a, const Element& b) const override;
    Tensor2 delta_left(const Element& c, Index a) const override;
    Scalar counit(Index a) const override;
    Element antipode(Index a) const override;
    Element antipode_inverse(Index a) const override;
    Multiplier2 canonical_idempotent() const override;
    Element local_unit(const std::vector<Element>&) const override { return unit_; }
    std::optional<Tensor2> coproduct_oracle(Index a) const override;

    const WmhaTables& primal() const { return p_; }
    const std::vector<Functional>& integrals() const { return phi_; }

    /// w = sum_i phi_i(. c_i) and w = sum_i phi_i(c_i .).
    std::vector<Element> right_form(const Element& w) const;
    std::vector<Element> left_form(const Element& w) const;
    /// w = sum_i psi_i(. c_i) with psi_i = phi_i o S.
    std::vector<Element> right_form_psi(const Element& w) const;

    Element multiply(const Element& w, const Element& w2) const;
    Tensor2 T1(const Tensor2& t) const;  // sum w(. S(a1)) (x) phi(a2 .) for t = w (x) phi(a .)
    Tensor2 T2(const Tensor2& t) const;  // sum psi(. a1) (x) w(S(a2) .) for t = psi(. a) (x) w
    Tensor2 R1(const Tensor2& t) const;  // sum b1 (x) S(b2) b'
    Tensor2 R2(const Tensor2& t) const;  // sum b S(b'1) (x) b'2
    Element dual_antipode(const Element& w) const;

    /// psi_a(phi_i(. c)) = phi_i(a eps_s(c)), a right integral on the dual.
    Functional dual_integral(const Element& a) const;
    /// Whether the value of psi_a is independent of the chosen representation.
    bool dual_integral_well_defined(const Element& a) const;
    /// psi(phi(. c)) = p(eps_s(c)); needs a single faithful integral.
    Outcome<Functional> single_dual_integral(const Functional& p) const;

private:
    Element dmul(const Element& x, const Element& y) const;
    Tensor2 linear2(const std::vector<Tensor2>& on_basis, const Tensor2& t) const;
    Tensor2 T1_basis(Index j, Index k) const;
    Tensor2 T2_basis(Index j, Index k) const;

    WmhaTables p_;
    std::vector<Functional> phi_, psi_;
    detail::Representer right_, left_, right_psi_;
    // Representations of the dual basis elements, one list of c_i per index.
    std::vector<std::vector<Element>> rf_, lf_, rpsi_;
    Element unit_;
    // Structure maps on basis elements, all computed from the representations.
    std::vector<Element> mult_, S_, Sinv_;
    std::vector<Tensor2> T1_, T2_, delta_, E_left_, E_right_;
};

/// The dual tables read off by transposing the structure constants of A.
WmhaTables transpose_dual(const WmhaTables& primal);

/// A functional p on A whose restriction to eps_s(A) is eps_s(c) -> eps(c);
/// nullopt if that assignment is not well defined.
std::optional<Functional> distinguished_source_functional(const WmhaTables& t);

/// A single faithful left integral if one exists, otherwise the whole space.
std::vector<Functional> default_faithful_set(const WmhaTables& t);

/// <x, w> for x in A and w in the dual, and its two-leg version.
Scalar pair(const Element& x, const Element& w);
Scalar pair(const Tensor2& x, const Tensor2& w);

/// The actions of A on its dual: a|>w = w(. a), w<|a = w(a .), a<|w = sum w(a1) a2, w|>a = sum a1 w(a2).
Element act_right_translate(const WmhaTables& t, const Element& a, const Element& w);
Element act_left_translate(const WmhaTables& t, const Element& w, const Element& a);
Element act_slice_first(const WmhaTables& t, const Element& a, const Element& w);
Element act_slice_second(const WmhaTables& t, const Element& w, const Element& a);

/// <m, w> for a multiplier m of A, through w = w <| e with e a local unit; both
/// decompositions m e and e m are evaluated and must agree.
std::optional<Scalar> extend_pairing(const WmhaTables& t, const Multiplier& m, const Element& w);

/// The multiplier of the dual given by w, with its left and right actions
/// checked for compatibility b(w b') = (b w) b'.
std::optional<Multiplier> dual_multiplier(const WmhaTables& dual, const Element& w);

/// Laws comparing structure maps across an isomorphism f: A -> B.
std::vector<LawResult> check_isomorphism(const WmhaTables& a, const WmhaTables& b, const AlgMap& f);

struct Gamma {
    std::vector<Element> domain;  // a basis of the source (resp. target) algebra of A
    std::vector<Element> images;
    bool solvable = false;
    bool lands = false;  // images in the target (resp. source) algebra of the dual
    bool homomorphism = false;
    bool bijective = false;

    bool ok() const { return solvable && lands && homomorphism && bijective; }
};

/// <y a, b> = <a, b gamma_s(y)> for y in eps_s(A), into eps_t of the dual.
Gamma gamma_s(const WmhaTables& primal, const WmhaTables& dual);
/// <a x, b> = <a, gamma_t(x) b> for x in eps_t(A), into eps_s of the dual.
Gamma gamma_t(const WmhaTables& primal, const WmhaTables& dual);

struct DualityOptions {
    bool commutation = true;  // the three-leg commutation laws, cubic in dim
};

/// Every pairing-level statement about the dual pair (A, dual).
std::vector<LawResult> check_duality(const WmhaTables& primal, const DualWmha& dual, const WmhaTables& dual_tables,
                                     const DualityOptions& opt = {});

/// The evaluation map A -> dual of the dual, in coordinates.
AlgMap evaluation_map(const WmhaTables& primal);

}  // namespace wmha
