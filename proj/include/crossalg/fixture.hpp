#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "crossalg/algebra.hpp"
#include "crossalg/endo.hpp"
#include "crossalg/group.hpp"
#include "crossalg/nodal.hpp"

namespace crossalg {

using Json = nlohmann::ordered_json;

// Thrown on malformed documents; the message names the offending key path
// (and carries the byte position for raw JSON syntax errors).
class FixtureError : public std::runtime_error {
public:
    explicit FixtureError(const std::string& what) : std::runtime_error(what) {}
};

struct FixtureDocument {
    std::string version;
    std::map<std::string, Algebra> algebras;
    std::map<std::string, GroupTable> groups;
    std::map<std::string, ActionDatum> actions;  // keyed name; algebra name alongside
    std::map<std::string, std::string> action_algebra;  // action name -> algebra name
    std::map<std::string, SubalgebraPair> pairs;
    std::vector<Json> tasks;  // in document order
    Json canonical;           // the document in canonical form, for round-trips
};

struct RunOptions {
    std::uint64_t seed = 0;
    std::size_t max_dim = 512;
};

// Strict parse: unknown keys and dangling references are rejected with a
// FixtureError naming the key.
FixtureDocument parse_fixture(const std::string& text);

// One task -> one report object. Never throws for task-level failures;
// those are carried in the report under "error". The "matches_expectation"
// field is present iff the task has an "expect" clause.
Json run_task(const FixtureDocument& doc, const Json& task, const RunOptions& opts);

struct RunResult {
    Json document;  // {"version", "reports": [...]}
    int exit_code;  // 0 ok, 1 expectation mismatch, 2 task or input error
};

RunResult run_document(const FixtureDocument& doc, const RunOptions& opts);

}  // namespace crossalg
