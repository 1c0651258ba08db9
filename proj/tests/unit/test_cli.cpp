#include "support.hpp"

#include "cli.hpp"

using namespace qordkit;
using json::Json;

namespace {

Json run(const char* text)
{
    return cli::execute_request(Json::parse(text));
}

} // namespace

TEST_CASE("membership")
{
    auto r = run(R"j({"cmd": "lang.member", "alphabet": {"symbols": ["a", "b"]},
                     "congruence": {"orders": [2], "map": [[1], [0]], "target": [[0]]},
                     "word": "abab"})j");
    CHECK(r.at("status") == "ok");
    CHECK(r.at("result") == true);
}

TEST_CASE("witness search")
{
    auto r = run(R"j({"cmd": "poset.leq", "lambda": [2], "x": "a/1", "y": "aa/(0,1)"})j");
    REQUIRE(r.at("status") == "ok");
    CHECK(r.at("result").at("leq") == true);
    CHECK(r.at("result").at("witness").at("map") == Json::array({1, 1}));
}

TEST_CASE("symmetric group tables")
{
    auto r = run(R"j({"cmd": "group.table", "sn": 4})j");
    REQUIRE(r.at("status") == "ok");
    CHECK(r.at("result").at("characters").size() == 5);
}

TEST_CASE("errors are reported, not thrown")
{
    auto unknown = run(R"j({"cmd": "nosuch"})j");
    CHECK(unknown.at("status") == "error");
    CHECK_FALSE(unknown.at("diagnostics").empty());

    auto bad = run(R"j({"cmd": "poset.leq", "lambda": [2], "x": "a/7", "y": "a/1"})j");
    CHECK(bad.at("status") == "error");

    CHECK(cli::execute_request(Json::array({1, 2})).at("status") == "error");
    CHECK(Json::parse(cli::execute_text("{not json")).at("status") == "error");
}

TEST_CASE("output is deterministic")
{
    const char* req = R"j({"cmd": "segre.homology", "complex": {"vertices": ["1", "2"], "facets": [["1", "2"]]},
                          "power": 3, "i_max": 1})j";
    const std::string a = cli::execute_text(req);
    const std::string b = cli::execute_text(req);
    CHECK(a == b);
    auto r = Json::parse(a);
    REQUIRE(r.at("status") == "ok");
    CHECK(r.at("result").at("ranks").at(0) == 4);
}
