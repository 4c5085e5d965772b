#include "wmha/wmha.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

namespace wmha {

// ---- tables -------------------------------------------------------------

Element WmhaTables::mul(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) out.axpy(a * b, prod(i, j));
    return out;
}

Tensor2 WmhaTables::mul(const Tensor2& x, const Tensor2& y) const {
    Tensor2 out;
    for (const auto& [ki, a] : x)
        for (const auto& [kj, b] : y) {
            const Element& l = prod(ki.first, kj.first);
            if (l.is_zero()) continue;
            const Element& r = prod(ki.second, kj.second);
            if (r.is_zero()) continue;
            out.axpy(a * b, tensor2(l, r));
        }
    return out;
}

Tensor3 WmhaTables::mul(const Tensor3& x, const Tensor3& y) const {
    Tensor3 out;
    for (const auto& [ki, a] : x)
        for (const auto& [kj, b] : y) {
            const Element& l = prod(ki[0], kj[0]);
            if (l.is_zero()) continue;
            const Element& m = prod(ki[1], kj[1]);
            if (m.is_zero()) continue;
            const Element& r = prod(ki[2], kj[2]);
            if (r.is_zero()) continue;
            out.axpy(a * b, tensor3(l, m, r));
        }
    return out;
}

Element WmhaTables::antipode(const Element& x) const {
    return x.map_linear<Index>([&](Index k) { return S[k]; });
}

Element WmhaTables::antipode_inv(const Element& x) const {
    return x.map_linear<Index>([&](Index k) { return Sinv[k]; });
}

Scalar WmhaTables::counit(const Element& x) const {
    Scalar s;
    for (const auto& [k, c] : x) s += c * eps[k];
    return s;
}

Tensor2 WmhaTables::coproduct(const Element& x) const {
    return x.map_linear<Key2>([&](Index k) { return delta[k]; });
}

Tensor3 WmhaTables::coproduct3(const Element& x) const {
    Tensor3 out;
    for (const auto& [k, c] : x)
        for (const auto& [ij, d] : delta[k])
            for (const auto& [kl, e] : delta[ij.first]) out.add({kl.first, kl.second, ij.second}, c * d * e);
    return out;
}

Tensor2 WmhaTables::T1(const Tensor2& x) const {
    Tensor2 out;
    for (const auto& [ab, c] : x)
        for (const auto& [ij, d] : delta[ab.first]) out.axpy(c * d, tensor2(Element::basis(ij.first), prod(ij.second, ab.second)));
    return out;
}

Tensor2 WmhaTables::T2(const Tensor2& x) const {
    Tensor2 out;
    for (const auto& [ca, c] : x)
        for (const auto& [ij, d] : delta[ca.second]) out.axpy(c * d, tensor2(prod(ca.first, ij.first), Element::basis(ij.second)));
    return out;
}

Tensor2 WmhaTables::R1(const Tensor2& x) const {
    Tensor2 out;
    for (const auto& [ab, c] : x)
        for (const auto& [ij, d] : delta[ab.first])
            out.axpy(c * d, tensor2(Element::basis(ij.first), mul(S[ij.second], Element::basis(ab.second))));
    return out;
}

Tensor2 WmhaTables::R2(const Tensor2& x) const {
    Tensor2 out;
    for (const auto& [ab, c] : x)
        for (const auto& [ij, d] : delta[ab.second])
            out.axpy(c * d, tensor2(mul(Element::basis(ab.first), S[ij.first]), Element::basis(ij.second)));
    return out;
}

Element WmhaTables::eps_s(const Element& x) const {
    Element out;
    for (const auto& [k, c] : x)
        for (const auto& [ij, d] : delta[k]) out.axpy(c * d, mul(S[ij.first], Element::basis(ij.second)));
    return out;
}

Element WmhaTables::eps_t(const Element& x) const {
    Element out;
    for (const auto& [k, c] : x)
        for (const auto& [ij, d] : delta[k]) out.axpy(c * d, mul(Element::basis(ij.first), S[ij.second]));
    return out;
}

Tensor2 apply_legs(const Tensor2& t, const std::function<Element(Index)>& f, const std::function<Element(Index)>& g) {
    Tensor2 out;
    for (const auto& [k, c] : t) out.axpy(c, tensor2(f(k.first), g(k.second)));
    return out;
}

namespace {
Element basis_el(Index k) { return Element::basis(k); }
}  // namespace

Tensor2 WmhaTables::F1() const {
    return apply_legs(E, basis_el, [&](Index k) { return S[k]; });
}
Tensor2 WmhaTables::F2() const {
    return apply_legs(E, [&](Index k) { return S[k]; }, basis_el);
}
Tensor2 WmhaTables::F3() const {
    return apply_legs(E, basis_el, [&](Index k) { return Sinv[k]; });
}
Tensor2 WmhaTables::F4() const {
    return apply_legs(E, [&](Index k) { return Sinv[k]; }, basis_el);
}

std::vector<Element> WmhaTables::basis() const {
    std::vector<Element> out;
    out.reserve(n);
    for (Index k = 0; k < n; ++k) out.push_back(Element::basis(k));
    return out;
}

std::vector<Element> left_legs(const Tensor2& t) {
    std::map<Index, Element> legs;
    for (const auto& [k, c] : t) legs[k.second].add(k.first, c);
    std::vector<Element> out;
    for (auto& [j, e] : legs) out.push_back(std::move(e));
    return out;
}

std::vector<Element> right_legs(const Tensor2& t) {
    std::map<Index, Element> legs;
    for (const auto& [k, c] : t) legs[k.first].add(k.second, c);
    std::vector<Element> out;
    for (auto& [i, e] : legs) out.push_back(std::move(e));
    return out;
}

WmhaTables tabulate(const Wmha& w) {
    WmhaTables t;
    t.name = w.name();
    t.n = w.dim();
    for (Index a = 0; a < t.n; ++a) t.labels.push_back(w.label(a));
    t.mult.resize(t.n * t.n);
    for (Index a = 0; a < t.n; ++a)
        for (Index b = 0; b < t.n; ++b) t.mult[a * t.n + b] = w.product(a, b);
    t.unit = w.local_unit(t.basis());
    for (Index a = 0; a < t.n; ++a) {
        // The unit covers every right leg.
        t.delta.push_back(w.delta_right(a, t.unit));
        t.S.push_back(w.antipode(a));
        t.Sinv.push_back(w.antipode_inverse(a));
        t.eps.push_back(w.counit(a));
    }
    t.E = w.canonical_idempotent().left(t.unit2());
    return t;
}

Tensor2 TableWmha::delta_right(Index a, const Element& b) const {
    return t_.mul(t_.delta[a], tensor2(t_.unit, b));
}

Tensor2 TableWmha::delta_left(const Element& c, Index a) const {
    return t_.mul(tensor2(c, t_.unit), t_.delta[a]);
}

Multiplier2 TableWmha::canonical_idempotent() const {
    const WmhaTables* t = &t_;
    return {[t](const Tensor2& x) { return t->mul(t->E, x); }, [t](const Tensor2& x) { return t->mul(x, t->E); }};
}

Multiplier multiplier_of(const WmhaTables& t, const Element& m) {
    const WmhaTables* tp = &t;
    return {[tp, m](const Element& x) { return tp->mul(m, x); }, [tp, m](const Element& x) { return tp->mul(x, m); }};
}

Multiplier eps_s(const WmhaTables& t, const Element& a) {
    // x -> sum S(a1) a2 x, read off T1(a (x) x) = sum a1 (x) a2 x.
    const WmhaTables* tp = &t;
    Multiplier m;
    m.left = [tp, a](const Element& x) {
        Element out;
        for (const auto& [ij, c] : tp->T1(tensor2(a, x))) out.axpy(c, tp->mul(tp->S[ij.first], Element::basis(ij.second)));
        return out;
    };
    m.right = [tp, a](const Element& x) { return tp->mul(x, tp->eps_s(a)); };
    return m;
}

Multiplier eps_t(const WmhaTables& t, const Element& a) {
    // x -> x sum a1 S(a2), read off T2(x (x) a) = sum x a1 (x) a2.
    const WmhaTables* tp = &t;
    Multiplier m;
    m.right = [tp, a](const Element& x) {
        Element out;
        for (const auto& [ij, c] : tp->T2(tensor2(x, a))) out.axpy(c, tp->mul(Element::basis(ij.first), tp->S[ij.second]));
        return out;
    };
    m.left = [tp, a](const Element& x) { return tp->mul(tp->eps_t(a), x); };
    return m;
}

// ---- axiom suite --------------------------------------------------------

bool AxiomReport::ok() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.ok; });
}

const LawResult* AxiomReport::find(const std::string& name) const {
    for (const auto& l : laws)
        if (l.name == name) return &l;
    return nullptr;
}

namespace {

using Tuple = std::vector<Index>;

class Tuples {
public:
    Tuples(std::size_t n, bool exhaustive, std::uint64_t seed, std::size_t samples)
        : n_(n), exhaustive_(exhaustive), seed_(seed), samples_(samples) {}

    /// First tuple of the given arity on which ok() is false.
    template <class F>
    std::optional<Tuple> first_failure(std::size_t arity, const std::string& law, F&& ok) const {
        Tuple t(arity, 0);
        if (n_ == 0) return std::nullopt;
        if (exhaustive_) {
            for (;;) {
                if (!ok(t)) return t;
                std::size_t k = arity;
                while (k > 0 && ++t[k - 1] == n_) t[--k] = 0;
                if (k == 0) return std::nullopt;
            }
        }
        std::mt19937_64 rng(seed_ ^ std::hash<std::string>{}(law));
        std::uniform_int_distribution<std::size_t> pick(0, n_ - 1);
        for (std::size_t s = 0; s < samples_; ++s) {
            for (auto& x : t) x = pick(rng);
            if (!ok(t)) return t;
        }
        return std::nullopt;
    }

private:
    std::size_t n_;
    bool exhaustive_;
    std::uint64_t seed_;
    std::size_t samples_;
};

struct Ctx {
    const Wmha& w;
    const WmhaTables& t;
    Tuples tuples;

    Element b(Index k) const { return Element::basis(k); }
    std::vector<std::string> labels(const Tuple& tu) const {
        std::vector<std::string> out;
        for (Index k : tu) out.push_back(t.labels[k]);
        return out;
    }
    LawResult tuple_law(const std::string& name, std::size_t arity,
                        const std::function<bool(const Tuple&)>& ok) const {
        LawResult r{name, true, {}, {}};
        if (auto bad = tuples.first_failure(arity, name, ok)) {
            r.ok = false;
            r.witness = labels(*bad);
        }
        return r;
    }
};

std::vector<std::string> key2_labels(const WmhaTables& t, const Tensor2& x) {
    std::vector<std::string> out;
    if (x.is_zero()) return out;
    const Key2 k = x.begin()->first;
    return {t.labels[k.first], t.labels[k.second]};
}

std::vector<std::pair<std::string, std::function<LawResult(const Ctx&)>>> law_registry() {
    std::vector<std::pair<std::string, std::function<LawResult(const Ctx&)>>> laws;
    auto add = [&](std::string name, std::function<LawResult(const Ctx&)> f) { laws.emplace_back(std::move(name), std::move(f)); };

    add("coproduct slices", [](const Ctx& c) {
        const auto& t = c.t;
        LawResult r = c.tuple_law("coproduct slices", 2, [&](const Tuple& x) {
            const Index a = x[0], b = x[1];
            if (c.w.delta_right(a, c.b(b)) != t.mul(t.delta[a], tensor2(t.unit, c.b(b)))) return false;
            return c.w.delta_left(c.b(b), a) == t.mul(tensor2(c.b(b), t.unit), t.delta[a]);
        });
        if (!r.ok) return r;
        for (Index a = 0; a < t.n; ++a) {
            auto oracle = c.w.coproduct_oracle(a);
            if (oracle && *oracle != t.delta[a]) return LawResult{"coproduct slices", false, {t.labels[a]}, "differs from the full-tensor coproduct"};
        }
        return r;
    });

    add("E multiplier", [](const Ctx& c) {
        const auto& t = c.t;
        const Multiplier2 e = c.w.canonical_idempotent();
        LawResult r = c.tuple_law("E multiplier", 2, [&](const Tuple& x) {
            const Tensor2 k = tensor2(c.b(x[0]), c.b(x[1]));
            return e.left(k) == t.mul(t.E, k) && e.right(k) == t.mul(k, t.E);
        });
        if (!r.ok) {
            r.detail = "lazy action differs from the action of E(1(x)1)";
            return r;
        }
        r = c.tuple_law("E multiplier", 4, [&](const Tuple& x) {
            const Tensor2 u = tensor2(c.b(x[0]), c.b(x[1])), v = tensor2(c.b(x[2]), c.b(x[3]));
            return t.mul(e.right(u), v) == t.mul(u, e.left(v));
        });
        if (!r.ok) r.detail = "(xE)y != x(Ey)";
        return r;
    });

    add("associativity", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("associativity", 3, [&](const Tuple& x) {
            return t.mul(t.prod(x[0], x[1]), c.b(x[2])) == t.mul(c.b(x[0]), t.prod(x[1], x[2]));
        });
    });

    add("non-degeneracy", [](const Ctx& c) {
        const auto& t = c.t;
        // a -> (a b)_b and a -> (b a)_b must be injective.
        for (int side = 0; side < 2; ++side) {
            Matrix m(t.n, Row(t.n * t.n));
            for (Index a = 0; a < t.n; ++a)
                for (Index b = 0; b < t.n; ++b)
                    for (const auto& [k, v] : side == 0 ? t.prod(a, b) : t.prod(b, a)) m[a][b * t.n + k] = v;
            Matrix cols(t.n * t.n, Row(t.n));
            for (Index a = 0; a < t.n; ++a)
                for (std::size_t j = 0; j < t.n * t.n; ++j) cols[j][a] = m[a][j];
            Echelon ech = reduce_rows(cols, t.n);
            if (ech.rank() < t.n) {
                Row kv = kernel_basis(ech).front();
                std::vector<std::string> w;
                for (Index a = 0; a < t.n; ++a)
                    if (!kv[a].is_zero()) w.push_back(t.labels[a]);
                return LawResult{"non-degeneracy", false, w, side == 0 ? "left annihilator" : "right annihilator"};
            }
        }
        return LawResult{"non-degeneracy", true, {}, {}};
    });

    add("A^2=A", [](const Ctx& c) {
        const auto& t = c.t;
        std::vector<Element> prods(t.mult.begin(), t.mult.end());
        if (rank_of(prods) == t.n) return LawResult{"A^2=A", true, {}, {}};
        return LawResult{"A^2=A", false, {}, "products do not span A"};
    });

    add("local unit", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("local unit", 1, [&](const Tuple& x) {
            return t.mul(t.unit, c.b(x[0])) == c.b(x[0]) && t.mul(c.b(x[0]), t.unit) == c.b(x[0]);
        });
    });

    add("coproduct homomorphism", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("coproduct homomorphism", 2, [&](const Tuple& x) {
            return t.coproduct(t.prod(x[0], x[1])) == t.mul(t.delta[x[0]], t.delta[x[1]]);
        });
    });

    add("coassociativity", [](const Ctx& c) {
        const auto& t = c.t;
        // (iota (x) T1) and (T2 (x) iota) commute.
        auto id_T1 = [&](const Tensor3& x) {
            Tensor3 out;
            for (const auto& [k, v] : x)
                for (const auto& [ij, d] : t.T1(tensor2(c.b(k[1]), c.b(k[2])))) out.add({k[0], ij.first, ij.second}, v * d);
            return out;
        };
        auto T2_id = [&](const Tensor3& x) {
            Tensor3 out;
            for (const auto& [k, v] : x)
                for (const auto& [ij, d] : t.T2(tensor2(c.b(k[0]), c.b(k[1])))) out.add({ij.first, ij.second, k[2]}, v * d);
            return out;
        };
        return c.tuple_law("coassociativity", 3, [&](const Tuple& x) {
            const Tensor3 k = tensor3(c.b(x[0]), c.b(x[1]), c.b(x[2]));
            return id_T1(T2_id(k)) == T2_id(id_T1(k));
        });
    });

    add("associativity-dual", [](const Ctx& c) {
        const auto& t = c.t;
        // (iota (x) T2) and (T1 (x) iota) commute.
        auto id_T2 = [&](const Tensor3& x) {
            Tensor3 out;
            for (const auto& [k, v] : x)
                for (const auto& [ij, d] : t.T2(tensor2(c.b(k[1]), c.b(k[2])))) out.add({k[0], ij.first, ij.second}, v * d);
            return out;
        };
        auto T1_id = [&](const Tensor3& x) {
            Tensor3 out;
            for (const auto& [k, v] : x)
                for (const auto& [ij, d] : t.T1(tensor2(c.b(k[0]), c.b(k[1])))) out.add({ij.first, ij.second, k[2]}, v * d);
            return out;
        };
        return c.tuple_law("associativity-dual", 3, [&](const Tuple& x) {
            const Tensor3 k = tensor3(c.b(x[0]), c.b(x[1]), c.b(x[2]));
            return id_T2(T1_id(k)) == T1_id(id_T2(k));
        });
    });

    add("counit", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("counit", 2, [&](const Tuple& x) {
            const Index a = x[0], b = x[1];
            Element l, r;
            for (const auto& [ij, v] : t.T1(tensor2(c.b(a), c.b(b)))) l.add(ij.second, v * t.eps[ij.first]);
            for (const auto& [ij, v] : t.T2(tensor2(c.b(a), c.b(b)))) r.add(ij.first, v * t.eps[ij.second]);
            return l == t.prod(a, b) && r == t.prod(a, b);
        });
    });

    add("antipode identity", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("antipode identity", 1, [&](const Tuple& x) {
            const Tensor3 d = t.coproduct3(c.b(x[0]));
            Element lhs1, lhs2;
            for (const auto& [k, v] : d) {
                lhs1.axpy(v, t.mul(t.mul(c.b(k[0]), t.S[k[1]]), c.b(k[2])));
                lhs2.axpy(v, t.mul(t.mul(t.S[k[0]], c.b(k[1])), t.S[k[2]]));
            }
            return lhs1 == c.b(x[0]) && lhs2 == t.S[x[0]];
        });
    });

    add("antipode anti-homomorphism", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("antipode anti-homomorphism", 2, [&](const Tuple& x) {
            return t.antipode(t.prod(x[0], x[1])) == t.mul(t.S[x[1]], t.S[x[0]]);
        });
    });

    add("antipode anti-coalgebra", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("antipode anti-coalgebra", 1, [&](const Tuple& x) {
            const Tensor2 lhs = t.coproduct(t.S[x[0]]);
            const Tensor2 rhs = flip(apply_legs(t.delta[x[0]], [&](Index k) { return t.S[k]; }, [&](Index k) { return t.S[k]; }));
            return lhs == rhs;
        });
    });

    add("antipode bijective", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("antipode bijective", 1, [&](const Tuple& x) {
            return t.antipode(t.Sinv[x[0]]) == c.b(x[0]) && t.antipode_inv(t.S[x[0]]) == c.b(x[0]);
        });
    });

    add("E idempotent", [](const Ctx& c) {
        const auto& t = c.t;
        if (t.mul(t.E, t.E) == t.E) return LawResult{"E idempotent", true, {}, {}};
        return LawResult{"E idempotent", false, key2_labels(t, t.mul(t.E, t.E) - t.E), "E^2 != E"};
    });

    add("E full", [](const Ctx& c) {
        const auto& t = c.t;
        std::vector<Element> src, tgt;
        for (Index a = 0; a < t.n; ++a) {
            src.push_back(t.eps_s(c.b(a)));
            tgt.push_back(t.eps_t(c.b(a)));
        }
        const auto ll = left_legs(t.E), rl = right_legs(t.E);
        if (!same_span(ll, src)) {
            std::vector<std::string> w;
            for (Index a = 0; a < t.n; ++a)
                if (!in_span(src[a], ll)) {
                    w.push_back(t.labels[a]);
                    break;
                }
            return LawResult{"E full", false, w, "left legs of E do not span the source algebra"};
        }
        if (!same_span(rl, tgt)) {
            std::vector<std::string> w;
            for (Index a = 0; a < t.n; ++a)
                if (!in_span(tgt[a], rl)) {
                    w.push_back(t.labels[a]);
                    break;
                }
            return LawResult{"E full", false, w, "right legs of E do not span the target algebra"};
        }
        return LawResult{"E full", true, {}, {}};
    });

    add("E Delta = Delta = Delta E", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("E Delta = Delta = Delta E", 1, [&](const Tuple& x) {
            const Tensor2& d = t.delta[x[0]];
            return t.mul(t.E, d) == d && t.mul(d, t.E) == d;
        });
    });

    add("E ranges", [](const Ctx& c) {
        const auto& t = c.t;
        std::vector<Tensor2> r1, r2, e1, e2;
        for (Index a = 0; a < t.n; ++a)
            for (Index b = 0; b < t.n; ++b) {
                const Tensor2 k = tensor2(c.b(a), c.b(b));
                r1.push_back(t.T1(k));
                r2.push_back(t.T2(k));
                e1.push_back(t.mul(t.E, k));
                e2.push_back(t.mul(k, t.E));
            }
        if (!same_span(r1, e1)) return LawResult{"E ranges", false, {}, "E(A(x)A) != range of T1"};
        if (!same_span(r2, e2)) return LawResult{"E ranges", false, {}, "(A(x)A)E != range of T2"};
        return LawResult{"E ranges", true, {}, {}};
    });

    add("E coproduct", [](const Ctx& c) {
        const auto& t = c.t;
        Tensor3 lhs;
        for (const auto& [k, v] : t.E)
            for (const auto& [ij, d] : t.delta[k.first]) lhs.add({ij.first, ij.second, k.second}, v * d);
        Tensor3 e_1, one_e;
        for (const auto& [k, v] : t.E) {
            e_1.axpy(v, tensor3(c.b(k.first), c.b(k.second), t.unit));
            one_e.axpy(v, tensor3(t.unit, c.b(k.first), c.b(k.second)));
        }
        if (lhs != t.mul(e_1, one_e)) return LawResult{"E coproduct", false, {}, "(Delta(x)iota)E != (E(x)1)(1(x)E)"};
        if (lhs != t.mul(one_e, e_1)) return LawResult{"E coproduct", false, {}, "(Delta(x)iota)E != (1(x)E)(E(x)1)"};
        return LawResult{"E coproduct", true, {}, {}};
    });

    add("(S(x)S)E = flip E", [](const Ctx& c) {
        const auto& t = c.t;
        const Tensor2 sse = apply_legs(t.E, [&](Index k) { return t.S[k]; }, [&](Index k) { return t.S[k]; });
        if (sse == flip(t.E)) return LawResult{"(S(x)S)E = flip E", true, {}, {}};
        return LawResult{"(S(x)S)E = flip E", false, key2_labels(t, sse - flip(t.E)), {}};
    });

    add("T1 R1 generalized inverse", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("T1 R1 generalized inverse", 2, [&](const Tuple& x) {
            const Tensor2 k = tensor2(c.b(x[0]), c.b(x[1]));
            return t.T1(t.R1(t.T1(k))) == t.T1(k) && t.R1(t.T1(t.R1(k))) == t.R1(k);
        });
    });

    add("T2 R2 generalized inverse", [](const Ctx& c) {
        const auto& t = c.t;
        return c.tuple_law("T2 R2 generalized inverse", 2, [&](const Tuple& x) {
            const Tensor2 k = tensor2(c.b(x[0]), c.b(x[1]));
            return t.T2(t.R2(t.T2(k))) == t.T2(k) && t.R2(t.T2(t.R2(k))) == t.R2(k);
        });
    });

    add("R T and F", [](const Ctx& c) {
        const auto& t = c.t;
        const Tensor2 f1 = t.F1(), f2 = t.F2();
        return c.tuple_law("R T and F", 2, [&](const Tuple& x) {
            const Tensor2 k = tensor2(c.b(x[0]), c.b(x[1]));
            const Tensor2 a1 = tensor2(c.b(x[0]), t.unit), one_a = tensor2(t.unit, c.b(x[1]));
            return t.R1(t.T1(k)) == t.mul(t.mul(a1, f1), one_a) && t.R2(t.T2(k)) == t.mul(t.mul(a1, f2), one_a);
        });
    });

    add("source and target commute", [](const Ctx& c) {
        const auto& t = c.t;
        std::vector<Element> src, tgt;
        for (Index a = 0; a < t.n; ++a) {
            src.push_back(t.eps_s(c.b(a)));
            tgt.push_back(t.eps_t(c.b(a)));
        }
        return c.tuple_law("source and target commute", 2, [&](const Tuple& x) {
            return t.mul(src[x[0]], tgt[x[1]]) == t.mul(tgt[x[1]], src[x[0]]);
        });
    });

    add("coproduct full", [](const Ctx& c) {
        const auto& t = c.t;
        std::vector<Element> l, r;
        for (Index a = 0; a < t.n; ++a) {
            auto ll = left_legs(t.delta[a]), rl = right_legs(t.delta[a]);
            l.insert(l.end(), ll.begin(), ll.end());
            r.insert(r.end(), rl.begin(), rl.end());
        }
        if (rank_of(l) == t.n && rank_of(r) == t.n) return LawResult{"coproduct full", true, {}, {}};
        return LawResult{"coproduct full", false, {}, "legs of Delta do not span A"};
    });

    return laws;
}

}  // namespace

AxiomReport check_axioms(const Wmha& w, const CheckOptions& opt) { return check_axioms(w, tabulate(w), opt); }

AxiomReport check_axioms(const Wmha& w, const WmhaTables& t, const CheckOptions& opt) {
    AxiomReport rep;
    rep.instance = t.name;
    rep.dim = t.n;
    rep.exhaustive = t.n <= opt.max_exhaustive_dim;
    Ctx ctx{w, t, Tuples(t.n, rep.exhaustive, opt.seed, opt.samples)};

    const auto laws = law_registry();
    rep.laws.resize(laws.size());
    auto run = [&](std::size_t k) {
        try {
            rep.laws[k] = laws[k].second(ctx);
        } catch (const std::exception& e) {
            rep.laws[k] = LawResult{laws[k].first, false, {}, std::string("exception: ") + e.what()};
        }
    };
    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        for (std::size_t k = 0; k < laws.size(); ++k) run(k);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < laws.size(); k = next++) run(k);
            });
        for (auto& th : pool) th.join();
    }
    return rep;
}

}  // namespace wmha
