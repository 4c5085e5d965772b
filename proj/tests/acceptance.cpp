// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "wmha/cg.hpp"
#include "wmha/duality.hpp"
#include "wmha/integrals.hpp"
#include "wmha/io.hpp"
#include "wmha/kg.hpp"
#include "wmha/separability.hpp"

#include <iostream>
#include <memory>

using namespace wmha;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool ok = true;
    std::string note;
    std::size_t checked = 0;

    void require(bool cond, const std::string& what) {
        ++checked;
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
    void laws(const std::vector<LawResult>& ls, const std::string& where) {
        for (const auto& l : ls) {
            std::string w;
            for (const auto& x : l.witness) w += (w.empty() ? "" : ", ") + x;
            require(l.ok, where + ": " + l.name + (w.empty() ? "" : " at " + w));
        }
    }
};

Element b(Index k) { return Element::basis(k); }

std::vector<Index> keys(std::size_t n) {
    std::vector<Index> v(n);
    for (Index k = 0; k < n; ++k) v[k] = k;
    return v;
}

AlgMap index_map(std::size_t n) { return AlgMap::identity(keys(n)); }

std::vector<FinVec<Index>> vectors(const std::vector<Functional>& fs) {
    std::vector<FinVec<Index>> v;
    for (const auto& f : fs) v.push_back(as_vector(f));
    return v;
}

struct NamedGroupoid {
    std::string file;
    Groupoid g;
};

std::vector<NamedGroupoid> groupoid_corpus() {
    std::vector<NamedGroupoid> out;
    for (const char* f : {"trivial", "z2", "z3", "pair2", "pair3", "z2_union_z3", "z2_union_z2", "z2_union_trivial",
                          "z2_swap", "s3", "pair2_union_z2", "z3_rotation", "z4_on_two_points"})
        out.push_back({f, groupoid_from_json(load_json_file(std::string(WMHA_DATA_DIR) + "/" + f + ".json"))});
    return out;
}

std::vector<SepData> sep_corpus() {
    std::vector<SepData> out;
    for (const char* f : {"sep_swap", "sep_cycle3", "sep_m2_weighted"})
        out.push_back(sep_from_json(load_json_file(std::string(WMHA_DATA_DIR) + "/" + f + ".json")));
    return out;
}

struct Inst {
    std::string name;
    std::unique_ptr<Wmha> w;
    WmhaTables t;
};

Inst make(std::string name, std::unique_ptr<Wmha> w) {
    WmhaTables t = tabulate(*w);
    return {std::move(name), std::move(w), std::move(t)};
}

bool commutative(const WmhaTables& t) {
    for (Index a = 0; a < t.n; ++a)
        for (Index c = 0; c < a; ++c)
            if (t.prod(a, c) != t.prod(c, a)) return false;
    return true;
}

}  // namespace

int main() {
    const auto groupoids = groupoid_corpus();
    const auto seps = sep_corpus();

    std::vector<Inst> insts;
    for (const auto& [f, g] : groupoids) {
        insts.push_back(make("K(" + f + ")", std::make_unique<KgAlgebra>(g)));
        insts.push_back(make("C(" + f + ")", std::make_unique<CgAlgebra>(g)));
    }
    for (const auto& d : seps) {
        insts.push_back(make("A[" + d.name + "]", std::make_unique<SepWmha>(d)));
        insts.push_back(make("B<>C[" + d.name + "]", std::make_unique<DiamondWmha>(d)));
    }

    std::vector<Criterion> cs;
    auto add = [&](int n, std::string title) -> Criterion& {
        cs.push_back({n, std::move(title)});
        return cs.back();
    };

    {
        Criterion& c = add(1, "axiom suite on K(G) and CG for the groupoid corpus");
        for (const auto& i : insts) {
            if (i.name[0] != 'K' && i.name[0] != 'C') continue;
            const auto rep = check_axioms(*i.w, i.t, {});
            c.require(rep.exhaustive, i.name + ": not exhaustive");
            c.laws(rep.laws, i.name);
        }
    }

    {
        Criterion& c = add(2, "left/right integrals of K(G) are the source/target fiber weights");
        for (const auto& [f, g] : groupoids) {
            const WmhaTables kt = tabulate(KgAlgebra(g));
            IntegralTheory it(kt);
            std::vector<Functional> lf, rf;
            for (Index e : g.units()) {
                Functional l(g.size()), r(g.size());
                for (Index u = 0; u < g.size(); ++u) {
                    l[u] = Scalar(g.source(u) == e ? 1 : 0);
                    r[u] = Scalar(g.target(u) == e ? 1 : 0);
                }
                lf.push_back(l);
                rf.push_back(r);
            }
            const auto left = it.left_integrals(), right = it.right_integrals();
            c.require(left.size() == g.units().size() && right.size() == g.units().size(), f + ": dimension");
            c.require(same_span(vectors(left), vectors(lf)), f + ": left span");
            c.require(same_span(vectors(right), vectors(rf)), f + ": right span");
        }
    }

    {
        Criterion& c = add(3, "definition, Sweedler and F formulations of invariance agree");
        for (const auto& i : insts) {
            IntegralTheory it(i.t);
            if (i.t.n <= 6)
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << i.t.n); ++mask) {
                    Functional f(i.t.n);
                    for (Index k = 0; k < i.t.n; ++k) f[k] = Scalar((mask >> k) & 1 ? 1 : 0);
                    const bool l = it.left_invariant_def(f), r = it.right_invariant_def(f);
                    c.require(l == it.left_invariant_sweedler(f) && l == it.left_invariant_F(f), i.name + ": left, mask " + std::to_string(mask));
                    c.require(r == it.right_invariant_sweedler(f) && r == it.right_invariant_F(f), i.name + ": right, mask " + std::to_string(mask));
                }
            for (const auto& f : it.left_integrals())
                c.require(it.left_invariant_def(f) && it.left_invariant_sweedler(f) && it.left_invariant_F(f), i.name + ": left basis");
            for (const auto& f : it.right_integrals())
                c.require(it.right_invariant_def(f) && it.right_invariant_sweedler(f) && it.right_invariant_F(f), i.name + ": right basis");
        }
    }

    {
        Criterion& c = add(4, "transfer relations i-iv");
        for (const auto& i : insts) {
            if (i.name != "K(pair2)" && i.name != "K(pair3)" && i.name != "C(z2_union_z3)" && i.name.rfind("A[", 0) != 0) continue;
            IntegralTheory it(i.t);
            for (const auto& phi : it.left_integrals())
                for (const auto& psi : it.right_integrals())
                    for (const auto& item : it.transfer_relations(phi, psi)) c.require(item.ok, i.name + ": item " + item.item);
        }
    }

    {
        Criterion& c = add(5, "dual of K(G) is CG under <p> -> lambda_p");
        for (const auto& [f, g] : groupoids) {
            const WmhaTables kt = tabulate(KgAlgebra(g));
            DualWmha dual(kt, default_faithful_set(kt));
            const WmhaTables dt = tabulate(dual);
            c.laws(check_isomorphism(dt, tabulate(CgAlgebra(g)), index_map(kt.n)), f);
            Tensor2 e_hat;
            for (Index e : g.units()) e_hat.add({e, e}, Scalar(1));
            c.require(dt.E == e_hat, f + ": E hat");
            for (Index p = 0; p < g.size(); ++p) {
                c.require(dt.delta[p] == tensor2(b(p), b(p)), f + ": coproduct of " + g.name(p));
                c.require(dt.eps[p] == Scalar(1), f + ": counit of " + g.name(p));
                for (Index q = 0; q < g.size(); ++q) {
                    const auto pq = g.compose(p, q);
                    c.require(dt.prod(p, q) == (pq ? b(*pq) : Element{}), f + ": product " + g.name(p) + " " + g.name(q));
                }
            }
        }
    }

    std::vector<std::unique_ptr<DualWmha>> duals;
    std::vector<WmhaTables> dual_tables;
    {
        Criterion& c = add(6, "evaluation map into the bidual is an isomorphism");
        for (const auto& i : insts) {
            duals.push_back(std::make_unique<DualWmha>(i.t, default_faithful_set(i.t)));
            dual_tables.push_back(tabulate(*duals.back()));
            DualWmha bidual(dual_tables.back(), default_faithful_set(dual_tables.back()));
            c.laws(check_isomorphism(i.t, tabulate(bidual), evaluation_map(i.t)), i.name);
        }
    }

    {
        Criterion& c = add(7, "dual integrals form a faithful set; single dual integral");
        for (std::size_t k = 0; k < insts.size(); ++k) {
            for (const auto& l : check_duality(insts[k].t, *duals[k], dual_tables[k], {false}))
                if (l.name == "dual integrals" || l.name == "single dual integral") c.laws({l}, insts[k].name);
        }
        for (const auto& [f, g] : groupoids) {
            const WmhaTables kt = tabulate(KgAlgebra(g));
            DualWmha dual(kt, {Functional(kt.n, Scalar(1))});
            const auto p = distinguished_source_functional(kt);
            c.require(p.has_value(), f + ": distinguished functional");
            if (!p) continue;
            Functional unit_indicator(kt.n);
            for (Index e : g.units()) unit_indicator[e] = Scalar(1);
            c.require(value(dual.single_dual_integral(*p)) == unit_indicator, f + ": unit indicator");
        }
    }

    {
        Criterion& c = add(8, "modular data");
        for (const auto& i : insts) {
            if (!commutative(i.t)) continue;
            IntegralTheory it(i.t);
            const auto phi = it.faithful_left_integral();
            c.require(phi.has_value(), i.name + ": faithful integral");
            if (!phi) continue;
            c.require(value(it.modular_automorphism(*phi)).sigma == index_map(i.t.n), i.name + ": sigma is not the identity");
        }

        const SepData& m2 = seps.back();
        const SepWmha a(m2);
        const WmhaTables at = tabulate(a);
        IntegralTheory it(at);
        const AlgMap sigma = value(it.modular_automorphism(a.two_sided_integral())).sigma;
        const std::size_t n = m2.B.n;
        Matrix scsb(n, Row(n));
        const AlgMap comp = m2.S_C.after(m2.S_B);
        for (Index j = 0; j < n; ++j)
            for (const auto& [i, x] : comp.column(j)) scsb[i][j] = x;
        const auto inv = invert(scsb);
        c.require(inv.has_value(), "S_C S_B not invertible");
        bool nontrivial = false;
        for (Index l = 0; inv && l < n; ++l) {
            Element expect;
            for (Index i = 0; i < n; ++i) expect.add(i, (*inv)[i][l]);
            nontrivial = nontrivial || expect != b(l);
            c.require(sigma.apply(a.embed(m2.C.unit, b(l))) == a.embed(m2.C.unit, expect), "sigma on the B leg at " + m2.B.labels[l]);
        }
        c.require(nontrivial, "weighted example has trivial sigma_B");

        for (const auto& [f, g] : groupoids) {
            const WmhaTables kt = tabulate(KgAlgebra(g));
            IntegralTheory kit(kt);
            std::map<Index, long> pos;
            for (std::size_t k = 0; k < g.units().size(); ++k) pos[g.units()[k]] = static_cast<long>(k);
            Functional phi(kt.n), psi(kt.n);
            Element expect;
            for (Index p = 0; p < kt.n; ++p) {
                const Scalar gw(1 + pos[g.source(p)]), hw(2 + 3 * pos[g.target(p)]);
                phi[p] = gw;
                psi[p] = hw;
                expect.add(p, hw / gw);
            }
            const auto d = kit.modular_element(phi, psi);
            c.require(std::holds_alternative<DensityResult>(d) && std::get<DensityResult>(d).y == expect, f + ": delta = h/g");
        }
    }

    {
        Criterion& c = add(9, "S^2 and Radford S^4 on B<>C");
        for (const auto& i : insts) {
            const auto* d = dynamic_cast<const DiamondWmha*>(i.w.get());
            if (!d) continue;
            for (const auto& l : check_diamond(*d, i.t))
                if (l.name == "S^2 formula" || l.name == "Radford S^4" || l.name == "modular element") c.laws({l}, i.name);
        }
    }

    {
        Criterion& c = add(10, "gamma_s, gamma_t and self-duality of eps_s, eps_t");
        for (std::size_t k = 0; k < insts.size(); ++k) {
            const WmhaTables& t = insts[k].t;
            const WmhaTables& d = dual_tables[k];
            const Gamma gs = gamma_s(t, d), gt = gamma_t(t, d);
            c.require(gs.ok(), insts[k].name + ": gamma_s");
            c.require(gt.ok(), insts[k].name + ": gamma_t");
            for (Index a = 0; a < t.n; ++a)
                for (Index w = 0; w < t.n; ++w) {
                    // coordinate dual basis: <x, w> is the w-th coefficient of x
                    c.require(d.eps_s(b(w))[a] == t.eps_s(b(a))[w], insts[k].name + ": eps_s pairing");
                    c.require(d.eps_t(b(w))[a] == t.eps_t(b(a))[w], insts[k].name + ": eps_t pairing");
                }
        }
    }

    {
        Criterion& c = add(11, "negative controls");
        WmhaTables bad = tabulate(KgAlgebra(pair_groupoid(2)));
        std::swap(bad.S[1], bad.S[3]);
        std::swap(bad.Sinv[1], bad.Sinv[3]);
        const auto rep = check_axioms(TableWmha(bad), {});
        bool found = false;
        for (const auto& l : rep.laws)
            if (l.name == "antipode identity") found = !l.ok && !l.witness.empty();
        c.require(found, "corrupted antipode not reported as 'antipode identity' with a witness");

        SepData dropped = seps[1];
        dropped.E.set({2, 0}, Scalar(0));
        bool not_full = false;
        for (const auto& l : validate_sep(dropped))
            if (l.name == "E full") not_full = !l.ok && !l.witness.empty();
        c.require(not_full, "dropped E term not reported as 'E full' with a witness");

        const Groupoid g = disjoint_union(pair_groupoid(2), one_object_group(cyclic_group(2)));
        const WmhaTables kt = tabulate(KgAlgebra(g));
        IntegralTheory it(kt);
        Functional fiber(kt.n);
        for (Index u = 0; u < kt.n; ++u) fiber[u] = Scalar(g.source(u) == g.units().front() ? 1 : 0);
        c.require(it.is_left_integral(fiber), "fiber functional is not a left integral");
        const auto fr = it.faithful_set({fiber});
        bool annihilated = fr.witness.has_value() && !fr.witness->is_zero();
        for (Index a = 0; annihilated && a < kt.n; ++a) annihilated = evaluate(fiber, kt.mul(*fr.witness, b(a))).is_zero();
        c.require(!fr.faithful && annihilated, "non-faithful set accepted or witness not annihilated");
    }

    bool all = true;
    for (const auto& c : cs) {
        std::cout << (c.ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title << " (" << c.checked
                  << " checks)";
        if (!c.ok) std::cout << "  first failure: " << c.note;
        std::cout << "\n";
        all = all && c.ok;
    }
    return all ? 0 : 1;
}
