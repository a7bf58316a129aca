#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "dbclosure/edge_list_io.hpp"
#include "dbclosure/trees.hpp"

using namespace dbclosure;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string &name, const std::string &content) {
    const auto path = std::filesystem::temp_directory_path() / ("dbtool_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::string graph_file(const std::string &name, const Graph &g) {
    std::ostringstream s;
    write_edge_list(s, g);
    return temp_file(name, s.str());
}

void check_schema(const json &j) {
    for (const char *key : {"command", "input", "result", "version"})
        CHECK(j.contains(key));
}

} // namespace

TEST_CASE("cli check") {
    const auto c4 = graph_file("c4", cycle_graph(4));
    auto r = run({"check", c4});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("distance-balanced: true") != std::string::npos);

    const auto k13 = graph_file("k13", star(3));
    r = run({"check", k13, "--report"});
    CHECK(r.code == cli::kNotBalanced);
    CHECK(r.out.find("distance-balanced: false") != std::string::npos);
    CHECK(r.out.find("0\t1\t3\t1") != std::string::npos);

    r = run({"check", k13, "--json", "--report"});
    CHECK(r.code == cli::kNotBalanced);
    const json j = json::parse(r.out);
    check_schema(j);
    CHECK(j["result"]["distance_balanced"] == false);
    CHECK(j["result"]["records"].size() == 3);
    CHECK(j["input"]["n"] == 4);
    CHECK(j["input"]["diameter"] == 2);

    const auto bad = temp_file("bad", "3\n0 1\n1 q\n");
    r = run({"check", bad});
    CHECK(r.code == cli::kError);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"check", "/nonexistent/file"}).code == cli::kError);
    CHECK(run({"check"}).code == cli::kError);
}

TEST_CASE("cli szeged") {
    CHECK(run({"szeged", graph_file("k4", complete_graph(4))}).out == "6\n");
    CHECK(run({"szeged", graph_file("p4", path_graph(4))}).out == "10\n");
    const auto r = run({"szeged", graph_file("c4", cycle_graph(4)), "--json"});
    const json j = json::parse(r.out);
    check_schema(j);
    CHECK(j["result"]["szeged_index"] == 16);
}

TEST_CASE("cli gen round-trips through the parser") {
    auto r = run({"gen", "starlike", "3,1^2"});
    CHECK(r.code == cli::kOk);
    std::istringstream in(r.out);
    CHECK(read_edge_list(in) == starlike(parse_starlike_spec("3,1^2")));

    const auto path = (std::filesystem::temp_directory_path() / "dbtool_test_broom").string();
    r = run({"gen", "broom", "3", "--out", path});
    CHECK(r.code == cli::kOk);
    CHECK(read_edge_list_file(path) == broom(3));

    for (auto [kind, arg] : std::vector<std::pair<std::string, std::string>>{
             {"star", "4"}, {"path", "6"}, {"cycle", "5"}, {"complete", "5"}}) {
        r = run({"gen", kind, arg});
        CHECK(r.code == cli::kOk);
    }
    CHECK(run({"gen", "star", "0"}).code == cli::kError);
    CHECK(run({"gen", "star", "x"}).code == cli::kError);
    CHECK(run({"gen", "tree", "4"}).code == cli::kError);
}

TEST_CASE("cli closure") {
    auto r = run({"closure", graph_file("k13", star(3))});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("b = 3") != std::string::npos);

    r = run({"closure", graph_file("k13", star(3)), "--json"});
    json j = json::parse(r.out);
    check_schema(j);
    CHECK(j["result"]["b"] == 3);
    CHECK(j["result"]["family"] == "star");
    CHECK(j["result"]["certificate"]["distance_balanced"] == true);
    CHECK(j["result"]["added_edges"] == json::parse("[[1,2],[1,3],[2,3]]"));

    const auto p5 = graph_file("p5", path_graph(5));
    r = run({"closure", p5, "--mode", "search", "--prune", "naive"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("b = 1") != std::string::npos);
    CHECK(r.out.find("witness: 0-4") != std::string::npos);

    r = run({"closure", p5, "--mode", "search", "--all-witnesses", "--threads", "4", "--json"});
    j = json::parse(r.out);
    CHECK(j["result"]["witnesses"].size() == 1);

    const auto p7 = graph_file("p7", path_graph(7));
    r = run({"closure", p7});
    CHECK(r.code == cli::kUnsupportedFamily);
    CHECK(r.out.find("classification: other") != std::string::npos);

    r = run({"closure", p7, "--mode", "search", "--max-k", "0"});
    CHECK(r.code == cli::kBudgetExceeded);
    CHECK(r.out.find("b >= 1") != std::string::npos);

    r = run({"closure", p7, "--mode", "search", "--max-k", "0", "--json"});
    CHECK(r.code == cli::kBudgetExceeded);
    j = json::parse(r.out);
    CHECK(j["result"]["status"] == "budget_exceeded");
    CHECK(j["result"]["lower_bound"] == 1);

    CHECK(run({"closure", p7, "--mode", "search", "--prune", "regular"}).code == cli::kError);
    CHECK(run({"closure", p7, "--mode", "guess"}).code == cli::kError);
    CHECK(run({"closure", graph_file("p70", path_graph(70)), "--mode", "search"}).code == cli::kError);
}

TEST_CASE("cli verify") {
    auto r = run({"verify", "--family", "s22", "--m", "3..6", "--json"});
    CHECK(r.code == cli::kOk);
    json j = json::parse(r.out);
    check_schema(j);
    const auto &rows = j["result"]["rows"];
    REQUIRE(rows.size() == 4);
    std::vector<int> bs;
    for (const auto &row : rows) {
        CHECK(row["pass"] == true);
        bs.push_back(row["b_formula"]);
    }
    CHECK(bs == std::vector<int>{4, 8, 13, 19});

    r = run({"verify", "--family", "s2", "--m", "4..4", "--oracle", "--json"});
    CHECK(r.code == cli::kOk);
    j = json::parse(r.out);
    CHECK(j["result"]["rows"][0]["b_formula"] == 7);
    CHECK(j["result"]["rows"][0]["oracle_b"] == 7);

    r = run({"verify", "--family", "s3", "--m", "3"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("fallback search") != std::string::npos);
    CHECK(r.out.find("\t4\t4\t") != std::string::npos);

    r = run({"verify", "--m", "2..5"});
    CHECK(r.code == cli::kOk);

    CHECK(run({"verify", "--family", "broom", "--m", "2..4"}).code == cli::kError);
    CHECK(run({"verify", "--family", "s22", "--m", "6..3"}).code == cli::kError);
    CHECK(run({"verify", "--family", "tree", "--m", "3"}).code == cli::kError);
}
