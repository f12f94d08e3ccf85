#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "crossalg/fixture.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw crossalg::FixtureError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Single-task mode: resolve definitions from the fixture file, run one task
// built from the command line, print its report.
int run_single(const std::string& fixtures, crossalg::Json task,
               const crossalg::RunOptions& opts) {
    const crossalg::FixtureDocument doc = crossalg::parse_fixture(slurp(fixtures));
    const crossalg::Json report = crossalg::run_task(doc, task, opts);
    std::cout << report.dump(2) << "\n";
    if (report.contains("error")) return 2;
    if (report.contains("matches_expectation") && !report["matches_expectation"].get<bool>())
        return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of crossed products and nodal pairs"};
    app.require_subcommand(1);

    crossalg::RunOptions opts;
    app.add_option("--seed", opts.seed, "seed for the idempotent search");
    app.add_option("--max-dim", opts.max_dim, "largest total dimension accepted")
        ->default_val(512);

    std::string fixture_path;
    std::string name_algebra, name_group, name_pair, name_action;
    std::string arg_b, arg_a, arg_prog = "regular", arg_expect;

    auto add_fixtures = [&](CLI::App* sub) {
        sub->add_option("--fixtures", fixture_path, "fixture file with the definitions")
            ->required();
        sub->add_option("--expect", arg_expect, "JSON object of expected report fields");
    };

    CLI::App* run = app.add_subcommand("run", "run every task in a fixture file");
    run->add_option("file", fixture_path, "fixture file")->required();

    CLI::App* validate = app.add_subcommand("validate", "axiom checks for a named object");
    add_fixtures(validate);
    validate->add_option("--algebra", name_algebra);
    validate->add_option("--group", name_group);
    validate->add_option("--pair", name_pair);
    validate->add_option("--action", name_action);

    CLI::App* radical = app.add_subcommand("radical", "Jacobson radical of an algebra");
    add_fixtures(radical);
    radical->add_option("--algebra", name_algebra)->required();

    CLI::App* wedder = app.add_subcommand("wedderburn", "block decomposition of the top");
    add_fixtures(wedder);
    wedder->add_option("--algebra", name_algebra)->required();

    CLI::App* crossed = app.add_subcommand("crossed-product", "build and validate a crossed product");
    add_fixtures(crossed);
    crossed->add_option("--action", name_action)->required();

    CLI::App* check_action = app.add_subcommand("check-action", "action-axiom report");
    add_fixtures(check_action);
    check_action->add_option("--action", name_action)->required();

    CLI::App* separ = app.add_subcommand("check-separability", "separability witness report");
    add_fixtures(separ);
    separ->add_option("--action", name_action)->required();

    CLI::App* pair_report = app.add_subcommand("pair-report", "full report on a semilocal pair");
    add_fixtures(pair_report);
    pair_report->add_option("--pair", name_pair)->required();

    CLI::App* lemma = app.add_subcommand("lemma34-classify", "matrix-condition classifier");
    lemma->add_option("--b", arg_b, "matrix as a JSON array of rows")->required();
    lemma->add_option("--a", arg_a, "vector as a JSON array")->required();
    lemma->add_option("--expect", arg_expect, "JSON object of expected report fields");

    CLI::App* closure = app.add_subcommand("verify-closure", "closure check for a crossed pair");
    add_fixtures(closure);
    closure->add_option("--pair", name_pair)->required();
    closure->add_option("--action", name_action)->required();

    CLI::App* phi = app.add_subcommand("phi-check", "induced-action and isomorphism report");
    add_fixtures(phi);
    phi->add_option("--action", name_action)->required();

    CLI::App* morita = app.add_subcommand("morita-check", "invariant transport along a progenerator");
    add_fixtures(morita);
    morita->add_option("--pair", name_pair)->required();
    morita->add_option("--prog", arg_prog,
                       "\"regular\", \"copies:K\", or \"idems:I,J,...\"");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const crossalg::FixtureDocument doc = crossalg::parse_fixture(slurp(fixture_path));
            const crossalg::RunResult res = crossalg::run_document(doc, opts);
            std::cout << res.document.dump(2) << "\n";
            return res.exit_code;
        }

        crossalg::Json task = crossalg::Json::object();
        if (validate->parsed()) {
            task["task"] = "validate";
            if (!name_algebra.empty()) task["algebra"] = name_algebra;
            if (!name_group.empty()) task["group"] = name_group;
            if (!name_pair.empty()) task["pair"] = name_pair;
            if (!name_action.empty()) task["action"] = name_action;
        } else if (radical->parsed()) {
            task["task"] = "radical";
            task["algebra"] = name_algebra;
        } else if (wedder->parsed()) {
            task["task"] = "wedderburn";
            task["algebra"] = name_algebra;
        } else if (crossed->parsed()) {
            task["task"] = "crossed-product";
            task["action"] = name_action;
        } else if (check_action->parsed()) {
            task["task"] = "check-action";
            task["action"] = name_action;
        } else if (separ->parsed()) {
            task["task"] = "check-separability";
            task["action"] = name_action;
        } else if (pair_report->parsed()) {
            task["task"] = "pair-report";
            task["pair"] = name_pair;
        } else if (lemma->parsed()) {
            task["task"] = "lemma34-classify";
            task["b"] = crossalg::Json::parse(arg_b);
            task["a"] = crossalg::Json::parse(arg_a);
        } else if (closure->parsed()) {
            task["task"] = "verify-closure";
            task["pair"] = name_pair;
            task["action"] = name_action;
        } else if (phi->parsed()) {
            task["task"] = "phi-check";
            task["action"] = name_action;
            task["module"] = "regular";
        } else if (morita->parsed()) {
            task["task"] = "morita-check";
            task["pair"] = name_pair;
            if (arg_prog == "regular") {
                task["prog"] = "regular";
            } else if (arg_prog.rfind("copies:", 0) == 0) {
                task["prog"] = {{"copies", std::stoul(arg_prog.substr(7))}};
            } else if (arg_prog.rfind("idems:", 0) == 0) {
                crossalg::Json idems = crossalg::Json::array();
                std::stringstream ss(arg_prog.substr(6));
                std::string piece;
                while (std::getline(ss, piece, ',')) idems.push_back(std::stoul(piece));
                task["prog"] = {{"idem_summands", idems}};
            } else {
                std::cerr << "bad --prog value '" << arg_prog << "'\n";
                return 2;
            }
        }
        if (!arg_expect.empty()) task["expect"] = crossalg::Json::parse(arg_expect);

        if (lemma->parsed()) {
            // No definitions needed; run against an empty document.
            const crossalg::FixtureDocument doc = crossalg::parse_fixture("{\"version\":\"1\"}");
            const crossalg::Json report = crossalg::run_task(doc, task, opts);
            std::cout << report.dump(2) << "\n";
            if (report.contains("error")) return 2;
            if (report.contains("matches_expectation") &&
                !report["matches_expectation"].get<bool>())
                return 1;
            return 0;
        }
        return run_single(fixture_path, task, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
