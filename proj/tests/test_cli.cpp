#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli.hpp"

using namespace ect::cli;

namespace {

RunResult run_cmd(const std::string& cmd, const json& in, long prec = 50, int threads = 1) {
    JobConfig c;
    c.command = cmd;
    c.prec = prec;
    c.threads = threads;
    RunResult r = run(c, in);
    // every document matches its schema
    const json& s = schema(r.doc.contains("error") ? "error" : cmd + ".output");
    auto issues = validate(r.doc, s);
    for (const auto& i : issues) MESSAGE(cmd, " ", i.path, ": ", i.message);
    CHECK(issues.empty());
    return r;
}

std::vector<std::string> values(const json& arr) {
    std::vector<std::string> out;
    for (const auto& x : arr) out.push_back(x["a"]["value"].get<std::string>());
    return out;
}

}  // namespace

TEST_CASE("cmscan example") {
    auto r = run_cmd("cmscan", {{"nmax", 3}});
    REQUIRE(r.exit_code == 0);
    const json& orders = r.doc["result"]["orders"];
    REQUIRE(orders.size() == 2);
    CHECK(orders[0]["N"] == 2);
    CHECK(values(orders[0]["instances"]) == std::vector<std::string>{"-1"});
    CHECK(orders[1]["N"] == 3);
    CHECK(values(orders[1]["instances"]) == std::vector<std::string>{"3 + 2*sqrt(3)", "3 - 2*sqrt(3)"});
    CHECK(r.doc["version"].get<std::string>().rfind("ect ", 0) == 0);
}

TEST_CASE("tate-units example") {
    auto r = run_cmd("tate-units", {{"pair", {1, 2}}});
    REQUIRE(r.exit_code == 0);
    const json& p = r.doc["result"]["pair"];
    CHECK(p["roots"][0]["value"] == "7 + 4*sqrt(3)");
    CHECK(p["roots"][1]["value"] == "7 - 4*sqrt(3)");
    CHECK(p["norm"] == "1");
    CHECK(p["norm_check"] == true);
    CHECK(p["reduction_check"] == true);
    auto t = run_cmd("tate-units", {{"triple", {1, 2, 3}}});
    CHECK(t.doc["result"]["triple"]["independent"] == true);
}

TEST_CASE("search example with the inconsistency witness") {
    auto r = run_cmd("search", {{"spec", {"1", "2", "3"}}, {"orders", {2, 2, 2}}});
    REQUIRE(r.exit_code == 0);
    const json& res = r.doc["result"]["results"][0];
    CHECK(res["tower"].empty());
    CHECK(res["algebraic"].empty());
    CHECK(res["witness"]["a"] == "-7");
    CHECK(res["witness"]["b"] == "6");
    CHECK(res["witness"]["residual"] == "12");
}

TEST_CASE("instance records re-verify") {
    auto s = run_cmd("search", {{"orders", {4, 2, 4}}});
    REQUIRE(s.exit_code == 0);
    REQUIRE(!s.doc["result"]["results"][0]["tower"].empty());
    auto v = run_cmd("verify", s.doc);
    CHECK(v.exit_code == 0);
    CHECK(v.doc["result"]["all_ok"] == true);
    CHECK(v.doc["result"]["checked"] == 1);

    json bad = s.doc["result"];
    bad["results"][0]["tower"][0]["certificates"][0]["witness"][0]["value"]["coords"][0] = "12345";
    auto f = run_cmd("verify", bad);
    CHECK(f.exit_code == 2);
    CHECK(f.doc["result"]["all_ok"] == false);
}

TEST_CASE("determinism across runs and thread counts") {
    json in = {{"nmax", 3}};
    auto a = run_cmd("search", in, 50, 1), b = run_cmd("search", in, 50, 3), c = run_cmd("search", in, 50, 1);
    CHECK(dump(a.doc) == dump(b.doc));
    CHECK(dump(a.doc) == dump(c.doc));
    auto x = run_cmd("cmscan", {{"nmax", 5}}, 50, 1), y = run_cmd("cmscan", {{"nmax", 5}}, 50, 2);
    CHECK(dump(x.doc) == dump(y.doc));
}

TEST_CASE("periods and theta") {
    auto p = run_cmd("periods", {{"lambda", "1/2"}}, 30);
    REQUIRE(p.exit_code == 0);
    CHECK(p.doc["result"]["basis"]["tau"]["re"] == "0");
    auto s = run_cmd("periods", {{"samples", 4}}, 40);
    CHECK(s.doc["result"]["samples"].size() == 4);
    CHECK(std::stod(s.doc["result"]["max_error"].get<std::string>()) < 1e-25);

    json a = {{"tower", {"3"}}, {"coords", {"3", "2"}}};
    auto t = run_cmd("theta", {{"a", a}, {"b", "0"}, {"xs", {"0", "1", "-1"}}, {"N", 6}}, 40);
    REQUIRE(t.exit_code == 0);
    CHECK(t.doc["result"]["embedding_count"] == 2);
    for (const auto& h : t.doc["result"]["rational"]) CHECK(!h.is_null());
    auto bad = run_cmd("theta", {{"a", a}, {"b", "0"}, {"xs", {"0", "1", "-1"}}, {"embedding", 5}}, 40);
    CHECK(bad.exit_code == 2);
    CHECK(bad.doc["error"]["issues"][0]["path"] == "/embedding");
}

TEST_CASE("tate-a4a6 coefficients") {
    auto r = run_cmd("tate-a4a6", {{"K", 5}});
    REQUIRE(r.exit_code == 0);
    CHECK(r.doc["result"]["a6"] == json({"0", "-1", "-23", "-154", "-647"}));
    CHECK(r.doc["result"]["a4"] == json({"0", "-5", "-45", "-140", "-365"}));
}

TEST_CASE("ffheights on the Legendre family") {
    auto r = run_cmd("ffheights", {{"legendre", "t"}, {"points", "auto123"}});
    REQUIRE(r.exit_code == 0);
    const json& res = r.doc["result"];
    CHECK(res["bad_places"].size() == 3);
    for (const auto& b : res["bad_places"]) {
        CHECK(b["type"] == "Multiplicative");
        CHECK(b["v_j"] == -2);
    }
    CHECK(res["s_sets"].contains("error"));
    CHECK(res["gram"]["psd"] == true);
    auto g = run_cmd("ffheights", {{"curve", {"1", "1"}}});
    CHECK(g.doc["result"]["bad_places"].empty());
    for (const auto& s : g.doc["result"]["s_sets"]["S"]) CHECK(s.empty());
    auto e = run_cmd("ffheights", {{"curve", {"t^2", "("}}});
    CHECK(e.exit_code == 2);
}

TEST_CASE("siegel and count") {
    auto r = run_cmd("siegel", {{"N", "2"}, {"R", "2"}, {"coords", {{"1", "0", "1"}, {"0", "1", "1"}}}});
    REQUIRE(r.exit_code == 0);
    CHECK(r.doc["result"]["norm"] == "1");
    CHECK(r.doc["result"]["proven_minimal"] == true);
    auto c = run_cmd("count", {{"T", "3"}, {"points", json::array({json::array({"1/2", "3"}), json::array({"4", "5"}), json::array({"1", "1"})})}});
    CHECK(c.doc["result"]["count"] == 2);
}

TEST_CASE("validation and budget failures") {
    auto r = run_cmd("cmscan", {{"nmax", "three"}});
    CHECK(r.exit_code == 2);
    CHECK(r.doc["error"]["issues"][0]["path"] == "/nmax");
    auto u = run_cmd("search", {{"orders", {2, 2}}});
    CHECK(u.exit_code == 2);
    CHECK(u.doc["error"]["issues"][0]["path"] == "/orders");
    auto x = run_cmd("siegel", {{"N", "2"}, {"R", "2"}, {"coords", {{"1", "0", "1"}}}, {"extra", 1}});
    CHECK(x.exit_code == 2);
    JobConfig c;
    c.command = "search";
    c.budget = 1;
    auto b = run(c, {{"orders", {5, 5, 5}}});
    CHECK(b.exit_code == 3);
    CHECK(b.doc["error"]["code"] == "BudgetExceeded");
    c.prec = 10;
    CHECK(run(c, {{"orders", {2, 2, 2}}}).exit_code == 2);
}
