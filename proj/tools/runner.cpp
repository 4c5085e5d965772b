#include "runner.hpp"

#include "wmha/cg.hpp"
#include "wmha/duality.hpp"
#include "wmha/integrals.hpp"
#include "wmha/kg.hpp"

#include <chrono>
#include <sstream>

namespace wmha::cli {

using nlohmann::json;

const std::vector<std::string> kSuites{"axioms", "integrals", "transfer", "duality", "radford"};

namespace {

const char* base_name(Base b) {
    switch (b) {
        case Base::kg: return "kg";
        case Base::cg: return "cg";
        case Base::sep: return "sep";
        case Base::diamond: return "diamond";
    }
    return "?";
}

Section make_section(std::string suite, std::string module) {
    Section s;
    s.suite = std::move(suite);
    s.module = std::move(module);
    return s;
}

LawResult law(std::string name, bool ok, std::vector<std::string> witness = {}, std::string detail = {}) {
    return {std::move(name), ok, ok ? std::vector<std::string>{} : std::move(witness), ok ? std::string{} : std::move(detail)};
}

void append(std::vector<LawResult>& out, const std::vector<LawResult>& laws, const std::string& prefix) {
    for (auto l : laws) {
        l.name = prefix + l.name;
        out.push_back(std::move(l));
    }
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

std::vector<FinVec<Index>> vectors(const std::vector<Functional>& fs) {
    std::vector<FinVec<Index>> v;
    for (const auto& f : fs) v.push_back(as_vector(f));
    return v;
}

json functional_json(const WmhaTables& t, const Functional& f) {
    json o = json::object();
    for (Index k = 0; k < f.size(); ++k)
        if (!f[k].is_zero()) o[t.labels[k]] = scalar_to_json(f[k]);
    return o;
}

std::string element_text(const WmhaTables& t, const Element& x) {
    std::vector<std::string> parts;
    for (const auto& [k, c] : x) parts.push_back((c.is_one() ? std::string{} : "(" + c.str() + ")") + t.labels[k]);
    return parts.empty() ? "0" : join(parts, " + ");
}

AlgMap index_map(std::size_t n) {
    AlgMap f;
    for (Index k = 0; k < n; ++k) f.set_column(k, Element::basis(k));
    return f;
}

CheckOptions check_options(const RunConfig& cfg) {
    CheckOptions o;
    o.max_exhaustive_dim = cfg.max_exhaustive_dim;
    o.seed = cfg.seed;
    o.jobs = cfg.jobs;
    return o;
}

// Candidate functionals with 0/1 values; the three formulations must agree on each.
bool structured_agreement(const IntegralTheory& it, std::size_t n, std::vector<std::string>& witness) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Functional f(n);
        for (Index k = 0; k < n; ++k) f[k] = Scalar((mask >> k) & 1 ? 1 : 0);
        const bool l = it.left_invariant_def(f);
        const bool r = it.right_invariant_def(f);
        if (l != it.left_invariant_sweedler(f) || l != it.left_invariant_F(f) || r != it.right_invariant_sweedler(f) ||
            r != it.right_invariant_F(f)) {
            for (Index k = 0; k < n; ++k)
                if ((mask >> k) & 1) witness.push_back(it.tables().labels[k]);
            return false;
        }
    }
    return true;
}

Section integrals_suite(const Instance& inst, const RunConfig& cfg) {
    Section s = make_section("integrals", "integrals");
    const WmhaTables& t = inst.t();
    IntegralTheory it(t);
    const auto left = it.left_integrals(), right = it.right_integrals();
    s.laws.push_back(law("left integrals exist", !left.empty()));
    s.laws.push_back(law("right integrals exist", !right.empty()));

    bool agree = true;
    std::vector<std::string> witness;
    for (std::size_t i = 0; i < left.size() && agree; ++i)
        if (!it.left_invariant_sweedler(left[i]) || !it.left_invariant_F(left[i])) agree = false, witness = {"left basis " + std::to_string(i)};
    for (std::size_t i = 0; i < right.size() && agree; ++i)
        if (!it.right_invariant_sweedler(right[i]) || !it.right_invariant_F(right[i])) agree = false, witness = {"right basis " + std::to_string(i)};
    if (agree && t.n <= 6) agree = structured_agreement(it, t.n, witness);
    s.laws.push_back(law("three-way agreement", agree, witness, "invariance formulations disagree"));

    const auto set = default_faithful_set(t);
    if (!set.empty()) {
        const auto fr = it.faithful_set(set);
        std::vector<std::string> w;
        if (fr.witness) w.push_back(element_text(t, *fr.witness));
        s.laws.push_back(law("faithful set", fr.faithful, w, "annihilated element"));
        s.info["faithful_set_size"] = set.size();
    }

    if (inst.kind.depth == 0 && inst.groupoid) {
        const Groupoid& g = *inst.groupoid;
        std::vector<Functional> lf, rf;
        for (Index e : g.units()) {
            Functional l(g.size()), r(g.size());
            for (Index u = 0; u < g.size(); ++u) {
                if (inst.kind.base == Base::kg) {
                    l[u] = Scalar(g.source(u) == e ? 1 : 0);
                    r[u] = Scalar(g.target(u) == e ? 1 : 0);
                } else {
                    l[u] = r[u] = Scalar(u == e ? 1 : 0);
                }
            }
            lf.push_back(l);
            rf.push_back(r);
        }
        const bool kg = inst.kind.base == Base::kg;
        s.laws.push_back(law(kg ? "left integrals constant on source fibers" : "left integrals supported on units",
                             same_span(vectors(left), vectors(lf)), {}, "spans differ"));
        s.laws.push_back(law(kg ? "right integrals constant on target fibers" : "right integrals supported on units",
                             same_span(vectors(right), vectors(rf)), {}, "spans differ"));
    }
    if (inst.kind.depth == 0 && inst.kind.base == Base::sep) {
        append(s.laws, check_sep_algebra(dynamic_cast<const SepWmha&>(inst.w()), t), "");
        s.module = "separability";
    }
    if (inst.kind.depth == 0 && inst.kind.base == Base::diamond) {
        for (const auto& l : check_diamond(dynamic_cast<const DiamondWmha&>(inst.w()), t))
            if (l.name == "right integrals psi_x" || l.name == "left integrals phi_y") s.laws.push_back(l);
        s.module = "separability";
    }

    if (cfg.command == "integrals") {
        json lj = json::array(), rj = json::array();
        for (const auto& f : left) lj.push_back(functional_json(t, f));
        for (const auto& f : right) rj.push_back(functional_json(t, f));
        s.info["left_integrals"] = lj;
        s.info["right_integrals"] = rj;
        if (auto phi = it.faithful_left_integral(cfg.seed)) s.info["faithful_left_integral"] = functional_json(t, *phi);
    }
    return s;
}

Section transfer_suite(const Instance& inst) {
    Section s = make_section("transfer", "integrals");
    IntegralTheory it(inst.t());
    std::map<std::string, LawResult> items;
    for (const char* i : {"i", "ii", "iii", "iv"}) items[i] = law(std::string("transfer ") + i, true);
    for (const auto& phi : it.left_integrals())
        for (const auto& psi : it.right_integrals())
            for (const auto& item : it.transfer_relations(phi, psi)) {
                auto& l = items[item.item];
                if (l.ok && !item.ok) l = law("transfer " + item.item, false, item.witness, "identity fails at (p, q, x)");
            }
    for (const char* i : {"i", "ii", "iii", "iv"}) s.laws.push_back(items[i]);
    return s;
}

struct DualBuild {
    std::unique_ptr<DualWmha> dual;
    WmhaTables tables;
};

std::optional<DualBuild> build_dual(const WmhaTables& t, Section& s) {
    IntegralTheory it(t);
    const auto set = default_faithful_set(t);
    const auto fr = set.empty() ? FaithfulnessResult{} : it.faithful_set(set);
    std::vector<std::string> w;
    if (fr.witness) w.push_back(element_text(t, *fr.witness));
    s.laws.push_back(law("faithful set", fr.faithful, w, set.empty() ? "no left integrals" : "annihilated element"));
    if (!fr.faithful) return std::nullopt;
    DualBuild b;
    b.dual = std::make_unique<DualWmha>(t, set);
    b.tables = tabulate(*b.dual);
    return b;
}

Section duality_suite(const Instance& inst, const RunConfig& cfg, json* output) {
    Section s = make_section("duality", "duality");
    const WmhaTables& t = inst.t();
    auto b = build_dual(t, s);
    if (!b) return s;
    const auto ax = check_axioms(*b->dual, b->tables, check_options(cfg));
    s.exhaustive = ax.exhaustive;
    append(s.laws, ax.laws, "dual: ");
    append(s.laws, check_duality(t, *b->dual, b->tables, {t.n <= cfg.max_exhaustive_dim}), "");

    if (inst.kind.depth == 0 && inst.groupoid) {
        const Groupoid& g = *inst.groupoid;
        const bool kg = inst.kind.base == Base::kg;
        const WmhaTables other = kg ? tabulate(CgAlgebra(g)) : tabulate(KgAlgebra(g));
        append(s.laws, check_isomorphism(b->tables, other, index_map(t.n)), kg ? "dual = CG: " : "dual = K(G): ");
        json witness = json::object();
        for (Index p = 0; p < t.n; ++p) witness[b->tables.labels[p]] = (kg ? "lambda_" : "delta_") + g.name(p);
        s.info["witness"] = witness;
    }
    if (inst.kind.depth == 0 && inst.kind.base == Base::sep) {
        const WmhaTables dt = tabulate(DiamondWmha(*inst.sep));
        append(s.laws, check_isomorphism(dt, b->tables, diamond_to_dual(*inst.sep)), "B<>C = dual: ");
        append(s.laws, {law("isomorphism formulas agree", diamond_to_dual(*inst.sep) == diamond_to_dual_via_integral(*inst.sep))}, "");
    }
    if (output) *output = tables_to_json(b->tables);
    return s;
}

Section bidual_section(const Instance& inst, json* output) {
    Section s = make_section("bidual", "duality");
    const WmhaTables& t = inst.t();
    auto d1 = build_dual(t, s);
    if (!d1) return s;
    auto d2 = build_dual(d1->tables, s);
    if (!d2) return s;
    append(s.laws, check_isomorphism(t, d2->tables, evaluation_map(t)), "evaluation map: ");
    if (output) *output = tables_to_json(d2->tables);
    return s;
}

Section radford_suite(const Instance& inst, const RunConfig& cfg) {
    Section s = make_section("radford", "integrals");
    if (inst.kind.depth == 0 && (inst.kind.base == Base::sep || inst.kind.base == Base::diamond)) {
        s.module = "separability";
        const DiamondWmha d(*inst.sep);
        const WmhaTables dt = inst.kind.base == Base::diamond ? inst.t() : tabulate(d);
        for (const auto& l : check_diamond(d, dt))
            if (l.name == "modular element" || l.name == "S^2 formula" || l.name == "Radford S^4" || l.name == "adjointable multipliers")
                s.laws.push_back(l);
        s.info["on"] = dt.name;
        s.info["modular_element"] = element_text(dt, d.modular_element());
        return s;
    }
    const WmhaTables& t = inst.t();
    IntegralTheory it(t);
    const auto phi = it.faithful_left_integral(cfg.seed);
    s.laws.push_back(law("faithful left integral", phi.has_value(), {}, "none among the sampled combinations"));
    if (!phi) return s;
    const Functional psi = compose_antipode(t, *phi);
    const auto delta = it.modular_element(*phi, psi);
    if (auto* d = std::get_if<DensityResult>(&delta)) {
        s.laws.push_back(law("modular element", d->invertible, {element_text(t, d->y)}, "not invertible"));
        s.info["modular_element"] = element_text(t, d->y);
    } else {
        s.laws.push_back(law("modular element", false, {}, std::get<RequiresFaithful>(delta).reason));
    }
    const auto sigma = it.modular_automorphism(*phi);
    if (auto* m = std::get_if<ModularAutomorphism>(&sigma)) {
        s.laws.push_back(law("modular automorphism", m->automorphism && m->preserves_phi));
        s.info["sigma_is_identity"] = m->sigma == AlgMap::identity([&] {
            std::vector<Index> keys(t.n);
            for (Index k = 0; k < t.n; ++k) keys[k] = k;
            return keys;
        }());
    } else {
        s.laws.push_back(law("modular automorphism", false, {}, std::get<RequiresFaithful>(sigma).reason));
    }
    const auto s2 = it.antipode_square_density(*phi);
    if (auto* d = std::get_if<DensityResult>(&s2)) {
        s.laws.push_back(law("S^2 density", d->invertible && d->in_source_algebra, {element_text(t, d->y)}));
    } else {
        s.laws.push_back(law("S^2 density", false, {}, std::get<RequiresFaithful>(s2).reason));
    }
    return s;
}

json dims_of(const WmhaTables& t) {
    IntegralTheory it(t);
    return {{"algebra", t.n},
            {"left_integrals", it.left_integrals().size()},
            {"right_integrals", it.right_integrals().size()},
            {"source_algebra", rank_of(it.source_algebra())},
            {"target_algebra", rank_of(it.target_algebra())}};
}

void print_laws(std::ostringstream& os, const std::vector<LawResult>& laws) {
    for (const auto& l : laws) {
        os << "  " << (l.ok ? "ok  " : "FAIL") << "  " << l.name;
        if (!l.ok) {
            if (!l.witness.empty()) os << "  witness: " << join(l.witness, ", ");
            if (!l.detail.empty()) os << "  (" << l.detail << ")";
        }
        os << "\n";
    }
}

}  // namespace

Kind Kind::parse(const std::string& text) {
    Kind k;
    std::string rest = text;
    if (rest.rfind("bidual-of-", 0) == 0) k.depth = 2, rest = rest.substr(10);
    else if (rest.rfind("dual-of-", 0) == 0) k.depth = 1, rest = rest.substr(8);
    if (rest == "kg") k.base = Base::kg;
    else if (rest == "cg") k.base = Base::cg;
    else if (rest == "sep") k.base = Base::sep;
    else if (rest == "diamond") k.base = Base::diamond;
    else throw InputError("unknown kind '" + text + "' (expected kg, cg, sep, diamond, dual-of-<kind> or bidual-of-<kind>)");
    return k;
}

std::string Kind::str() const {
    return std::string(depth == 2 ? "bidual-of-" : depth == 1 ? "dual-of-" : "") + base_name(base);
}

std::vector<LawResult> validate_input(const Kind& kind, const json& input) {
    std::vector<LawResult> out;
    if (kind.groupoid_input()) {
        const Groupoid g = groupoid_from_json(input);
        const auto rep = validate(g);
        for (const auto& v : rep.violations) out.push_back(law(v.axiom, false, v.witness, "groupoid axiom fails"));
        if (rep.ok()) out.push_back(law("groupoid axioms", true));
    } else {
        append(out, validate_sep(sep_from_json(input)), "");
    }
    return out;
}

Instance build_instance(const Kind& kind, const json& input) {
    for (const auto& l : validate_input(kind, input))
        if (!l.ok)
            throw InputError(std::string(kind.groupoid_input() ? "groupoid: " : "separability: ") + l.name +
                             (l.witness.empty() ? "" : " at " + join(l.witness, ", ")) +
                             (kind.groupoid_input() || l.detail.empty() ? "" : " (" + l.detail + ")"));
    Instance inst;
    inst.kind = kind;
    switch (kind.base) {
        case Base::kg:
            inst.groupoid = groupoid_from_json(input);
            inst.chain.push_back(std::make_unique<KgAlgebra>(*inst.groupoid));
            break;
        case Base::cg:
            inst.groupoid = groupoid_from_json(input);
            inst.chain.push_back(std::make_unique<CgAlgebra>(*inst.groupoid));
            break;
        case Base::sep:
            inst.sep = sep_from_json(input);
            inst.chain.push_back(std::make_unique<SepWmha>(*inst.sep));
            break;
        case Base::diamond:
            inst.sep = sep_from_json(input);
            inst.chain.push_back(std::make_unique<DiamondWmha>(*inst.sep));
            break;
    }
    inst.tables.push_back(tabulate(*inst.chain.back()));
    for (int i = 0; i < kind.depth; ++i) {
        const WmhaTables& t = inst.tables.back();
        inst.chain.push_back(std::make_unique<DualWmha>(t, default_faithful_set(t)));
        inst.tables.push_back(tabulate(*inst.chain.back()));
    }
    return inst;
}

bool Section::ok() const {
    for (const auto& l : laws)
        if (!l.ok) return false;
    return true;
}

bool Report::ok() const {
    for (const auto& s : sections)
        if (!s.ok()) return false;
    return true;
}

Section run_suite(const std::string& suite, const Instance& inst, const RunConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    Section s;
    if (suite == "axioms") {
        const auto rep = check_axioms(inst.w(), inst.t(), check_options(cfg));
        s = make_section("axioms", "wmha_core");
        s.exhaustive = rep.exhaustive;
        s.laws = rep.laws;
        if (!rep.exhaustive) s.info["sampled_tuples_per_law"] = CheckOptions{}.samples;
    } else if (suite == "integrals") {
        s = integrals_suite(inst, cfg);
    } else if (suite == "transfer") {
        s = transfer_suite(inst);
    } else if (suite == "duality") {
        s = duality_suite(inst, cfg, nullptr);
    } else if (suite == "radford") {
        s = radford_suite(inst, cfg);
    } else {
        throw InputError("unknown suite '" + suite + "'");
    }
    s.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return s;
}

json Report::to_json() const {
    json sections_j = json::array();
    for (const auto& s : sections) {
        json laws = json::array();
        for (const auto& l : s.laws) {
            json lj = {{"name", l.name}, {"status", l.ok ? "ok" : "fail"}};
            if (!l.ok) {
                lj["witness"] = l.witness;
                lj["detail"] = l.detail;
            }
            laws.push_back(lj);
        }
        json sj = {{"suite", s.suite}, {"module", s.module}, {"exhaustive", s.exhaustive}, {"laws", laws}, {"info", s.info}};
        if (config.timing) sj["millis"] = s.millis;
        sections_j.push_back(sj);
    }
    json j = {{"schema", "wmha-report/1"},
              {"command", config.command},
              {"kind", config.kind.str()},
              {"input", config.input},
              {"seed", config.seed},
              {"max_exhaustive_dim", config.max_exhaustive_dim},
              {"instance", instance},
              {"dims", dims},
              {"sections", sections_j},
              {"result", ok() ? "ok" : "fail"}};
    if (!output.is_null()) j["output"] = output;
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "wmha-report/1 " << config.command << " kind=" << config.kind.str() << " input=" << config.input
       << " seed=" << config.seed << "\n";
    os << "instance " << instance;
    for (const auto& [k, v] : dims.items()) os << " " << k << "=" << v.dump();
    os << "\n";
    std::size_t total = 0, failed = 0;
    for (const auto& s : sections) {
        os << "\n[" << s.suite << "] " << s.module << (s.exhaustive ? " exhaustive" : " sampled");
        if (config.timing) os << " " << static_cast<long long>(s.millis) << "ms";
        os << "\n";
        print_laws(os, s.laws);
        for (const auto& [k, v] : s.info.items()) os << "  " << k << ": " << v.dump() << "\n";
        total += s.laws.size();
        for (const auto& l : s.laws) failed += l.ok ? 0 : 1;
    }
    if (!output.is_null()) os << "\noutput\n" << output.dump(2) << "\n";
    os << "\nresult: " << (failed ? "fail" : "ok") << ", " << total << " laws, " << failed << " failed\n";
    return os.str();
}

int run(const RunConfig& cfg, std::string& out, std::string& err) {
    Report rep;
    rep.config = cfg;
    try {
        for (const auto& s : cfg.suites)
            if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end()) throw InputError("unknown suite '" + s + "'");
        const json input = load_json_file(cfg.input);

        if (cfg.command == "validate") {
            Section s = make_section("validate", cfg.kind.groupoid_input() ? "groupoid" : "separability");
            s.laws = validate_input(cfg.kind, input);
            if (!s.ok()) {
                for (const auto& l : s.laws)
                    if (!l.ok) err += "wmha: " + s.module + ": " + l.name + (l.witness.empty() ? "" : " at " + join(l.witness, ", ")) + "\n";
                return 2;
            }
            const Instance inst = build_instance(cfg.kind, input);
            rep.instance = inst.t().name;
            rep.dims = dims_of(inst.t());
            rep.sections.push_back(std::move(s));
        } else {
            const Instance inst = build_instance(cfg.kind, input);
            rep.instance = inst.t().name;
            rep.dims = dims_of(inst.t());
            if (cfg.command == "check") {
                for (const auto& s : cfg.suites) rep.sections.push_back(run_suite(s, inst, cfg));
            } else if (cfg.command == "integrals") {
                rep.sections.push_back(run_suite("integrals", inst, cfg));
            } else if (cfg.command == "radford") {
                rep.sections.push_back(run_suite("radford", inst, cfg));
            } else if (cfg.command == "dual") {
                const auto start = std::chrono::steady_clock::now();
                rep.sections.push_back(duality_suite(inst, cfg, &rep.output));
                rep.sections.back().millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            } else if (cfg.command == "bidual") {
                const auto start = std::chrono::steady_clock::now();
                rep.sections.push_back(bidual_section(inst, &rep.output));
                rep.sections.back().millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            } else {
                throw InputError("unknown command '" + cfg.command + "'");
            }
        }
    } catch (const InputError& e) {
        err += std::string("wmha: input: ") + e.what() + "\n";
        return 2;
    } catch (const GroupoidError& e) {
        err += std::string("wmha: groupoid: ") + e.what() + "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err += std::string("wmha: duality: ") + e.what() + "\n";
        return 1;
    }
    out = cfg.format == "json" ? rep.to_json().dump(2) + "\n" : rep.to_text();
    return rep.ok() ? 0 : 1;
}

}  // namespace wmha::cli
