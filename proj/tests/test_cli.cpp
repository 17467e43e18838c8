#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "bfo/cli.hpp"
#include "reference.hpp"

using bfo::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

} // namespace

TEST_CASE("evolve prints the diagram until convergence") {
    const auto r = call({"evolve", "--config", "0001110101001"});
    CHECK(r.code == bfo::cli::exit_ok);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 14);
    for (std::size_t t = 0; t < rows.size(); ++t) CHECK(rows[t] == bfo::reference::faulty_corrected[t]);
    CHECK(r.err.find("13") != std::string::npos);

    const auto orig = call({"evolve", "--rule", "original", "--config", "0001110101001", "--steps", "13"});
    CHECK(orig.code == bfo::cli::exit_ok);
    const auto orig_rows = lines(orig.out);
    REQUIRE(orig_rows.size() == 14);
    CHECK(orig_rows.back() == bfo::reference::faulty_original.back());
}

TEST_CASE("evolve json and pbm") {
    const auto r = call({"evolve", "--config", "0001110101001", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("rows").size() == 14);
    CHECK(doc.at("outcome").at("kind") == "converged");

    const auto pbm = call({"evolve", "--config", "001", "--steps", "0", "--format", "pbm"});
    CHECK(pbm.out == "P1\n3 1\n0 0 1\n");
}

TEST_CASE("annotate") {
    const auto r = call({"annotate", "--config", std::string(bfo::reference::switch_sample), "--format", "json"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("s") == 8);

    const auto text = call({"annotate", "--config", "111010101000111"});
    REQUIRE(text.code == 0);
    CHECK(lines(text.out).front() == "111(1)0(2)1(3)0(4)1(5)[01]000(6)111");
}

TEST_CASE("rule subcommand") {
    const auto diff = call({"rule", "--emit", "diff"});
    CHECK(diff.code == 0);
    CHECK(lines(diff.out).size() == 24);
    CHECK(lines(diff.out).front().find("corrected=") != std::string::npos);

    const auto table = call({"rule"});
    CHECK(lines(table.out).front().size() == 512);

    const auto number = call({"rule", "--emit", "number"});
    CHECK(lines(number.out).front().size() == 155);
}

TEST_CASE("verify and search exit codes") {
    const auto good = call({"verify", "--sizes", "1..11", "--workers", "2"});
    CHECK(good.code == bfo::cli::exit_ok);
    const auto reports = lines(good.out);
    REQUIRE(reports.size() == 6);
    for (const auto& line : reports) CHECK(nlohmann::json::parse(line).at("passed") == true);

    const auto bad = call({"verify", "--rule", "original", "--sizes", "13"});
    CHECK(bad.code == bfo::cli::exit_failure);

    const auto found = call({"search", "--rule", "original", "--max-size", "13"});
    CHECK(found.code == bfo::cli::exit_failure);
    CHECK_FALSE(found.out.empty());

    const auto none = call({"search", "--max-size", "11"});
    CHECK(none.code == bfo::cli::exit_ok);
    CHECK(none.out.empty());
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == bfo::cli::exit_usage);
    CHECK(call({"evolve"}).code == bfo::cli::exit_usage);
    CHECK(call({"evolve", "--config", "0101"}).code == bfo::cli::exit_usage);
    CHECK(call({"evolve", "--config", "01x"}).code == bfo::cli::exit_usage);
    CHECK(call({"evolve", "--config", "011", "--rule", "bfom"}).code == bfo::cli::exit_usage);
    CHECK(call({"verify", "--sizes", "4"}).code == bfo::cli::exit_usage);
    CHECK(call({"verify", "--sizes", "a..b"}).code == bfo::cli::exit_usage);
    CHECK(call({"frobnicate"}).code == bfo::cli::exit_usage);
    CHECK(call({"--help"}).code == bfo::cli::exit_ok);
}

TEST_CASE("size lists") {
    using bfo::cli::parse_sizes;
    CHECK(parse_sizes("1..7") == std::vector<std::size_t>{1, 3, 5, 7});
    CHECK(parse_sizes("2..6") == std::vector<std::size_t>{3, 5});
    CHECK(parse_sizes("13,15") == std::vector<std::size_t>{13, 15});
    CHECK(parse_sizes("21") == std::vector<std::size_t>{21});
    CHECK_THROWS(parse_sizes("4"));
    CHECK_THROWS(parse_sizes("9..3"));
    CHECK_THROWS(parse_sizes(""));
}
