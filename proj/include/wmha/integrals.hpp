#pragma once

// Left and right integrals on a finite instance: invariance tests, enumeration,
// faithfulness, transfer relations and the modular data of a faithful integral.

#include "wmha/wmha.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wmha {

/// A linear functional given by its values on the basis.
using Functional = std::vector<Scalar>;

Scalar evaluate(const Functional& f, const Element& x);
/// (iota (x) f)(t)
Element slice_second(const Tensor2& t, const Functional& f);
/// (f (x) iota)(t)
Element slice_first(const Functional& f, const Tensor2& t);
Functional as_functional(const FinVec<Index>& v, std::size_t n);
FinVec<Index> as_vector(const Functional& f);

/// x -> f(x a) and x -> f(a x).
Functional right_translate(const WmhaTables& t, const Functional& f, const Element& a);
Functional left_translate(const WmhaTables& t, const Functional& f, const Element& a);
/// f o S and f o S^-1.
Functional compose_antipode(const WmhaTables& t, const Functional& f);
Functional compose_antipode_inv(const WmhaTables& t, const Functional& f);

/// Raised when a computation that needs a faithful integral is handed one that is not.
struct RequiresFaithful {
    std::string reason;
};

template <class T>
using Outcome = std::variant<T, RequiresFaithful>;

template <class T>
const T& value(const Outcome<T>& o) {
    if (auto* v = std::get_if<T>(&o)) return *v;
    throw std::logic_error("requires faithful integral: " + std::get<RequiresFaithful>(o).reason);
}

struct FaithfulnessResult {
    bool faithful = false;
    bool kernel_test = false;  // no nonzero x with f(x a) = 0 (resp. f(a x) = 0) for all f, a
    bool span_test = false;    // the E-span criterion
    std::optional<Element> witness;  // an annihilated element when not faithful
};

struct TransferItem {
    std::string item;  // "i".."iv"
    bool ok = true;
    std::vector<std::string> witness;  // p, q, x
};

struct ModularAutomorphism {
    AlgMap sigma;
    bool automorphism = false;   // multiplicative and bijective
    bool preserves_phi = false;  // phi o sigma = phi
    bool preserves_source = false;
};

struct DensityResult {
    Element y;
    bool in_source_algebra = false;
    bool coproduct_identity = false;  // Delta(b y) = Delta(b)(1 (x) y)
    bool invertible = false;
};

class IntegralTheory {
public:
    explicit IntegralTheory(const WmhaTables& t);

    const WmhaTables& tables() const { return t_; }
    /// Spanning sets of eps_s(A) and eps_t(A).
    const std::vector<Element>& source_algebra() const { return source_; }
    const std::vector<Element>& target_algebra() const { return target_; }

    // Left invariance through three independent formulations.
    bool left_invariant_def(const Functional& f) const;       // (iota(x)f)Delta(a) in A_t
    bool left_invariant_sweedler(const Functional& f) const;  // = sum a1 S(a2) f(a3)
    bool left_invariant_F(const Functional& f) const;         // = (iota(x)f)(F2(1(x)a)) = (iota(x)f)((1(x)a)F4)
    bool right_invariant_def(const Functional& f) const;      // (f(x)iota)Delta(a) in A_s
    bool right_invariant_sweedler(const Functional& f) const; // = sum f(a1) S(a2) a3
    bool right_invariant_F(const Functional& f) const;        // = (f(x)iota)((a(x)1)F1) = (f(x)iota)(F3(a(x)1))

    /// Invariant and nonzero.
    bool is_left_integral(const Functional& f) const;
    bool is_right_integral(const Functional& f) const;

    /// Bases of the spaces of left and right invariant functionals.
    std::vector<Functional> left_integrals() const;
    std::vector<Functional> right_integrals() const;

    /// Checks a set of left integrals by the kernel test and the E-span test.
    /// Throws std::logic_error if the two disagree.
    FaithfulnessResult faithful_set(const std::vector<Functional>& set) const;
    /// A single faithful left integral, searched among combinations of the basis.
    std::optional<Functional> faithful_left_integral(std::uint64_t seed = 1) const;

    std::vector<TransferItem> transfer_relations(const Functional& phi, const Functional& psi) const;

    Outcome<ModularAutomorphism> modular_automorphism(const Functional& phi) const;
    /// phi1 = phi(. y) with y in A_s.
    Outcome<DensityResult> radon_nikodym(const Functional& phi, const Functional& phi1) const;
    /// psi = phi(. delta).
    Outcome<DensityResult> modular_element(const Functional& phi, const Functional& psi) const;
    /// phi o S^2 = phi(. y) with y invertible in A_s.
    Outcome<DensityResult> antipode_square_density(const Functional& phi) const;

    /// The spans of phi(. a), phi(a .), psi(. a), psi(a .) over left integrals phi,
    /// right integrals psi and a in A; returns their common dimension or nullopt.
    std::optional<std::size_t> spanning_forms(const std::vector<Functional>& left,
                                              const std::vector<Functional>& right) const;

private:
    bool kernel_faithful(const std::vector<Functional>& set, Element* witness) const;
    bool span_faithful(const std::vector<Functional>& set) const;
    std::optional<Element> solve_density(const Functional& phi, const Functional& target) const;
    bool faithful_single(const Functional& phi) const;
    DensityResult finish_density(Element y) const;

    const WmhaTables& t_;
    std::vector<Element> source_, target_;
    Echelon source_ech_, target_ech_;
    Tensor2 F1_, F2_, F3_, F4_;
};

}  // namespace wmha
