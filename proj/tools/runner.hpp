#pragma once

// Batch driver behind the wmha command line: builds an instance from an input file
// and runs verification suites into a deterministic report.

#include "wmha/io.hpp"
#include "wmha/separability.hpp"
#include "wmha/wmha.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wmha::cli {

enum class Base { kg, cg, sep, diamond };

/// kg | cg | sep | diamond, optionally prefixed by dual-of- or bidual-of-.
struct Kind {
    Base base = Base::kg;
    int depth = 0;  // number of duals taken

    static Kind parse(const std::string& text);  // throws InputError
    std::string str() const;
    bool groupoid_input() const { return base == Base::kg || base == Base::cg; }
};

struct Instance {
    Kind kind;
    std::optional<Groupoid> groupoid;
    std::optional<SepData> sep;
    std::vector<std::unique_ptr<Wmha>> chain;  // base first, then its duals
    std::vector<WmhaTables> tables;

    const Wmha& w() const { return *chain.back(); }
    const WmhaTables& t() const { return tables.back(); }
};

/// The input problems found before any instance is built, as named laws.
std::vector<LawResult> validate_input(const Kind& kind, const nlohmann::json& input);

/// Throws InputError on malformed or invalid input, and std::invalid_argument when
/// a dual is requested for an instance without a faithful set of integrals.
Instance build_instance(const Kind& kind, const nlohmann::json& input);

extern const std::vector<std::string> kSuites;  // axioms, integrals, transfer, duality, radford

struct RunConfig {
    std::string command = "check";
    std::string input;
    Kind kind;
    std::vector<std::string> suites{"axioms"};
    std::string format = "text";
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::size_t max_exhaustive_dim = 64;
    bool timing = false;
};

struct Section {
    std::string suite;
    std::string module;  // library module the laws belong to
    bool exhaustive = true;
    std::vector<LawResult> laws;
    nlohmann::json info = nlohmann::json::object();
    double millis = 0;

    bool ok() const;
};

struct Report {
    RunConfig config;
    std::string instance;
    nlohmann::json dims = nlohmann::json::object();
    std::vector<Section> sections;
    nlohmann::json output;  // structure constants emitted by dual / bidual

    bool ok() const;
    nlohmann::json to_json() const;
    std::string to_text() const;
};

Section run_suite(const std::string& suite, const Instance& inst, const RunConfig& cfg);

/// Runs one subcommand end to end. Returns the exit status: 0 when every law
/// holds, 1 on a law failure, 2 on malformed input. `out` receives the report,
/// `err` the input diagnostics.
int run(const RunConfig& cfg, std::string& out, std::string& err);

}  // namespace wmha::cli
