#include <doctest.h>

#include "runner.hpp"

#include <json.hpp>

using namespace wmha::cli;

namespace {

std::string data(const std::string& name) { return std::string(WMHA_DATA_DIR) + "/" + name; }

RunConfig config(const std::string& command, const std::string& kind, const std::string& file) {
    RunConfig c;
    c.command = command;
    c.kind = Kind::parse(kind);
    c.input = data(file);
    return c;
}

}  // namespace

TEST_CASE("kinds") {
    CHECK(Kind::parse("bidual-of-cg").depth == 2);
    CHECK(Kind::parse("dual-of-sep").base == Base::sep);
    CHECK(Kind::parse("diamond").str() == "diamond");
    CHECK_THROWS_AS(Kind::parse("dual-of-"), wmha::InputError);
}

TEST_CASE("check on pair groupoid emits the CG witness") {
    RunConfig c = config("check", "kg", "pair2.json");
    c.suites = {"axioms", "integrals", "duality"};
    c.format = "json";
    std::string out, err;
    CHECK(run(c, out, err) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["schema"] == "wmha-report/1");
    CHECK(j["result"] == "ok");
    CHECK(j["dims"]["left_integrals"] == 2);
    CHECK(j["sections"][2]["info"]["witness"]["<(1,2)>"] == "lambda_(1,2)");
    CHECK_FALSE(j["sections"][0].contains("millis"));
}

TEST_CASE("reports are byte-identical for the same config") {
    RunConfig c = config("check", "sep", "sep_m2_weighted.json");
    c.suites = {"axioms", "integrals", "radford"};
    std::string a, b, err;
    CHECK(run(c, a, err) == 0);
    CHECK(run(c, b, err) == 0);
    CHECK(a == b);
    c.format = "json";
    CHECK(run(c, a, err) == 0);
    CHECK(run(c, b, err) == 0);
    CHECK(a == b);
}

TEST_CASE("malformed input exits with 2 and names the law") {
    std::string out, err;
    CHECK(run(config("check", "kg", "bad_compose.json"), out, err) == 2);
    CHECK(err.find("groupoid: composability") != std::string::npos);

    err.clear();
    CHECK(run(config("validate", "sep", "sep_not_full.json"), out, err) == 2);
    CHECK(err.find("E full") != std::string::npos);

    err.clear();
    CHECK(run(config("check", "kg", "missing.json"), out, err) == 2);
    RunConfig c = config("check", "kg", "z2.json");
    c.suites = {"nonsense"};
    CHECK(run(c, out, err) == 2);
}

TEST_CASE("dual of K(Z2) is the group algebra") {
    RunConfig c = config("dual", "kg", "z2.json");
    c.format = "json";
    std::string out, err;
    CHECK(run(c, out, err) == 0);
    const auto t = nlohmann::json::parse(out)["output"];
    CHECK(t["product"].size() == 4);
    CHECK(t["coproduct"]["<g1>"] == nlohmann::json::array({{"<g1>", "<g1>", "1"}}));
    CHECK(t["unit"] == nlohmann::json{{"<g0>", "1"}});
}

TEST_CASE("bidual and radford commands") {
    std::string out, err;
    CHECK(run(config("bidual", "cg", "z2_union_z3.json"), out, err) == 0);
    CHECK(out.find("evaluation map: iso coproduct") != std::string::npos);
    CHECK(run(config("radford", "diamond", "sep_cycle3.json"), out, err) == 0);
    CHECK(run(config("radford", "kg", "pair2.json"), out, err) == 0);
    CHECK(out.find("sigma_is_identity: true") != std::string::npos);
}
