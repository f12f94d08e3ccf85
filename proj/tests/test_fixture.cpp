#include <doctest.h>

#include "crossalg/fixture.hpp"

using namespace crossalg;

namespace {

const char* kMinimal = R"({
  "version": "1",
  "algebras": {"tn3": {"preset": "trunc_node", "arg": 3}},
  "tasks": [{"task": "radical", "algebra": "tn3", "expect": {"dim": 4}}]
})";

}  // namespace

TEST_CASE("minimal document parses and runs") {
    const FixtureDocument doc = parse_fixture(kMinimal);
    CHECK(doc.version == "1");
    CHECK(doc.algebras.at("tn3").dim() == 5);
    const RunResult res = run_document(doc, RunOptions{});
    CHECK(res.exit_code == 0);
    CHECK(res.document["reports"][0]["dim"] == 4);
    CHECK(res.document["reports"][0]["matches_expectation"] == true);
}

TEST_CASE("dangling references are named") {
    const char* text = R"({
      "version": "1",
      "groups": {"C2": {"preset": "cyclic", "arg": 2}},
      "actions": {"bad": {"algebra": "missing", "group": "C2",
                          "phi": "trivial", "omega": "trivial"}}
    })";
    CHECK_THROWS_WITH_AS(parse_fixture(text),
                         doctest::Contains("unresolved reference 'missing'"), FixtureError);
}

TEST_CASE("zero denominators are rejected") {
    const char* text = R"({
      "version": "1",
      "algebras": {"bad": {"dim": 1, "unit": ["1/0"], "structure": [[["1"]]]}}
    })";
    CHECK_THROWS_AS(parse_fixture(text), FixtureError);
}

TEST_CASE("unknown keys are rejected") {
    CHECK_THROWS_WITH_AS(parse_fixture(R"({"version": "1", "extra": 1})"),
                         doctest::Contains("unknown key 'extra'"), FixtureError);
    CHECK_THROWS_AS(parse_fixture(R"({
      "version": "1",
      "algebras": {"a": {"preset": "split", "arg": 1, "typo": true}}
    })"),
                    FixtureError);
}

TEST_CASE("syntax errors and bad versions are reported") {
    CHECK_THROWS_AS(parse_fixture("{"), FixtureError);
    CHECK_THROWS_AS(parse_fixture(R"({"version": "2"})"), FixtureError);
    CHECK_THROWS_AS(parse_fixture(R"([1, 2])"), FixtureError);
}

TEST_CASE("expectation mismatches give exit code 1") {
    const char* text = R"({
      "version": "1",
      "pairs": {"triple": {"preset": "triple_pair"}},
      "tasks": [{"task": "pair-report", "pair": "triple", "expect": {"nodal": true}}]
    })";
    const RunResult res = run_document(parse_fixture(text), RunOptions{});
    CHECK(res.exit_code == 1);
    CHECK(res.document["reports"][0]["nodal"] == false);
    CHECK(res.document["reports"][0]["matches_expectation"] == false);
}

TEST_CASE("task errors give exit code 2") {
    const char* text = R"({
      "version": "1",
      "tasks": [{"task": "no-such-task"}]
    })";
    const RunResult res = run_document(parse_fixture(text), RunOptions{});
    CHECK(res.exit_code == 2);
    CHECK(res.document["reports"][0].contains("error"));
}

TEST_CASE("max-dim guard") {
    const char* text = R"({
      "version": "1",
      "algebras": {"big": {"preset": "mat", "arg": 4}},
      "tasks": [{"task": "radical", "algebra": "big"}]
    })";
    RunOptions opts;
    opts.max_dim = 10;
    const RunResult res = run_document(parse_fixture(text), opts);
    CHECK(res.exit_code == 2);
}

TEST_CASE("reports are deterministic and round-trip stable") {
    const char* text = R"({
      "version": "1",
      "algebras": {"tn3": {"preset": "trunc_node", "arg": 3}},
      "pairs": {"np3": {"preset": "node_pair", "arg": 3}},
      "tasks": [
        {"task": "radical", "algebra": "tn3"},
        {"task": "pair-report", "pair": "np3"},
        {"task": "lemma34-classify", "b": [[1, 1], [1, 1]], "a": [1, 1]}
      ]
    })";
    const FixtureDocument doc = parse_fixture(text);
    const std::string once = run_document(doc, RunOptions{}).document.dump(2);
    const std::string twice = run_document(doc, RunOptions{}).document.dump(2);
    CHECK(once == twice);

    const std::string canon = doc.canonical.dump(2);
    CHECK(parse_fixture(canon).canonical.dump(2) == canon);
}

TEST_CASE("explicit structure constants and omega entries parse") {
    const char* text = R"({
      "version": "1",
      "algebras": {
        "dual": {"dim": 2, "unit": ["1", "0"],
                 "structure": [[["1", "0"], ["0", "1"]],
                               [["0", "1"], ["0", "0"]]],
                 "labels": ["one", "eps"]}
      },
      "groups": {"C2": {"preset": "cyclic", "arg": 2}},
      "actions": {
        "neg": {"algebra": "dual", "group": "C2", "phi": "trivial",
                "omega": {"entries": [{"f": 1, "g": 1, "value": ["-1", "0"]}]}}
      },
      "tasks": [
        {"task": "validate", "algebra": "dual", "expect": {"valid": true}},
        {"task": "check-action", "action": "neg", "expect": {"valid": true}},
        {"task": "crossed-product", "action": "neg", "expect": {"dim": 4, "valid": true}}
      ]
    })";
    const RunResult res = run_document(parse_fixture(text), RunOptions{});
    CHECK(res.exit_code == 0);
}
