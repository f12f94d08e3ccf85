#include "crossalg/fixture.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossalg {

namespace {

void check_keys(const Json& j, const std::vector<std::string>& allowed,
                const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
            throw FixtureError("unknown key '" + it.key() + "' at " + path);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
    auto it = j.find(key);
    if (it == j.end()) throw FixtureError("missing key '" + key + "' at " + path);
    return *it;
}

std::size_t parse_count(const Json& j, const std::string& path) {
    if (!j.is_number_unsigned()) throw FixtureError("expected a nonnegative integer at " + path);
    return j.get<std::size_t>();
}

Rat parse_rat_json(const Json& j, const std::string& path) {
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const std::exception& e) {
            throw FixtureError(std::string(e.what()) + " at " + path);
        }
    }
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    throw FixtureError("expected an integer or a \"p/q\" string at " + path);
}

Vec parse_vec(const Json& j, std::size_t len, const std::string& path) {
    if (!j.is_array() || j.size() != len)
        throw FixtureError("expected an array of length " + std::to_string(len) + " at " + path);
    Vec v(len);
    for (std::size_t i = 0; i < len; ++i)
        v[i] = parse_rat_json(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols,
                    const std::string& path) {
    if (!j.is_array() || j.size() != rows)
        throw FixtureError("expected " + std::to_string(rows) + " rows at " + path);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vec row = parse_vec(j[r], cols, path + "[" + std::to_string(r) + "]");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = row[c];
    }
    return m;
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_to_string(x));
    return out;
}

Json counts_to_json(const std::vector<std::size_t>& v) {
    Json out = Json::array();
    for (std::size_t x : v) out.push_back(x);
    return out;
}

Algebra parse_algebra(const Json& j, const std::string& path) {
    if (!j.is_object()) throw FixtureError("expected an object at " + path);
    if (j.contains("preset")) {
        check_keys(j, {"preset", "arg"}, path);
        const std::string name = field(j, "preset", path).get<std::string>();
        const std::size_t arg =
            j.contains("arg") ? parse_count(j["arg"], path + ".arg") : 0;
        if (name == "trunc_poly") return preset_trunc_poly(arg);
        if (name == "trunc_node") return preset_trunc_node(arg);
        if (name == "trunc_hered") return preset_trunc_hered(arg);
        if (name == "mat") return preset_mat(arg);
        if (name == "upper_tri") return preset_upper_tri(arg);
        if (name == "split") return preset_split(arg);
        throw FixtureError("unknown algebra preset '" + name + "' at " + path);
    }
    check_keys(j, {"dim", "unit", "structure", "labels"}, path);
    const std::size_t dim = parse_count(field(j, "dim", path), path + ".dim");
    Algebra a(dim, parse_vec(field(j, "unit", path), dim, path + ".unit"));
    const Json& st = field(j, "structure", path);
    if (!st.is_array() || st.size() != dim)
        throw FixtureError("expected " + std::to_string(dim) + " structure rows at " + path);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::string rp = path + ".structure[" + std::to_string(i) + "]";
        if (!st[i].is_array() || st[i].size() != dim)
            throw FixtureError("expected " + std::to_string(dim) + " entries at " + rp);
        for (std::size_t k = 0; k < dim; ++k)
            a.set_product(i, k, parse_vec(st[i][k], dim, rp + "[" + std::to_string(k) + "]"));
    }
    if (j.contains("labels")) {
        std::vector<std::string> labels;
        for (const auto& l : j["labels"]) labels.push_back(l.get<std::string>());
        if (labels.size() != dim) throw FixtureError("wrong label count at " + path);
        a.set_labels(std::move(labels));
    }
    return a;
}

GroupTable parse_group(const Json& j, const std::string& path) {
    if (!j.is_object()) throw FixtureError("expected an object at " + path);
    if (j.contains("preset")) {
        check_keys(j, {"preset", "arg"}, path);
        const std::string name = field(j, "preset", path).get<std::string>();
        if (name == "cyclic")
            return GroupTable::cyclic(parse_count(field(j, "arg", path), path + ".arg"));
        if (name == "sym3") return GroupTable::sym3();
        if (name == "trivial") return GroupTable::trivial();
        throw FixtureError("unknown group preset '" + name + "' at " + path);
    }
    check_keys(j, {"table", "names"}, path);
    const Json& t = field(j, "table", path);
    std::vector<std::vector<std::size_t>> rows;
    for (std::size_t r = 0; r < t.size(); ++r) {
        std::vector<std::size_t> row;
        for (std::size_t c = 0; c < t[r].size(); ++c)
            row.push_back(parse_count(t[r][c], path + ".table"));
        rows.push_back(std::move(row));
    }
    std::vector<std::string> names;
    if (j.contains("names"))
        for (const auto& n : j["names"]) names.push_back(n.get<std::string>());
    try {
        return GroupTable::from_table(rows, std::move(names));
    } catch (const std::exception& e) {
        throw FixtureError(std::string(e.what()) + " at " + path);
    }
}

ActionDatum parse_action(const Json& j, const FixtureDocument& doc, std::string* algebra_name,
                         const std::string& path) {
    if (!j.is_object()) throw FixtureError("expected an object at " + path);
    check_keys(j, {"algebra", "group", "phi", "omega"}, path);
    const std::string aname = field(j, "algebra", path).get<std::string>();
    const std::string gname = field(j, "group", path).get<std::string>();
    auto ait = doc.algebras.find(aname);
    if (ait == doc.algebras.end())
        throw FixtureError("unresolved reference '" + aname + "' at " + path + ".algebra");
    auto git = doc.groups.find(gname);
    if (git == doc.groups.end())
        throw FixtureError("unresolved reference '" + gname + "' at " + path + ".group");
    const Algebra& a = ait->second;
    const GroupTable& g = git->second;
    *algebra_name = aname;

    ActionDatum d;
    d.group = g;
    const Json& phi = field(j, "phi", path);
    if (phi.is_string() && phi.get<std::string>() == "trivial") {
        for (std::size_t i = 0; i < g.order; ++i) d.phi.push_back(Matrix::identity(a.dim()));
    } else if (phi.is_array() && phi.size() == g.order) {
        for (std::size_t i = 0; i < g.order; ++i)
            d.phi.push_back(
                parse_matrix(phi[i], a.dim(), a.dim(), path + ".phi[" + std::to_string(i) + "]"));
    } else {
        throw FixtureError("expected \"trivial\" or one matrix per group element at " + path +
                           ".phi");
    }

    const Json& om = field(j, "omega", path);
    d.omega.assign(g.order * g.order, a.unit());
    if (om.is_string() && om.get<std::string>() == "trivial") {
        // keep the all-ones table
    } else if (om.is_object()) {
        check_keys(om, {"entries"}, path + ".omega");
        for (const Json& e : field(om, "entries", path + ".omega")) {
            const std::string ep = path + ".omega.entries";
            check_keys(e, {"f", "g", "value"}, ep);
            const std::size_t f = parse_count(field(e, "f", ep), ep + ".f");
            const std::size_t gg = parse_count(field(e, "g", ep), ep + ".g");
            if (f >= g.order || gg >= g.order)
                throw FixtureError("group index out of range at " + ep);
            d.omega[f * g.order + gg] =
                parse_vec(field(e, "value", ep), a.dim(), ep + ".value");
        }
    } else if (om.is_array() && om.size() == g.order * g.order) {
        for (std::size_t i = 0; i < om.size(); ++i)
            d.omega[i] =
                parse_vec(om[i], a.dim(), path + ".omega[" + std::to_string(i) + "]");
    } else {
        throw FixtureError(
            "expected \"trivial\", an entries object, or a full omega table at " + path +
            ".omega");
    }
    return d;
}

SubalgebraPair parse_pair(const Json& j, const FixtureDocument& doc, const std::string& path) {
    if (!j.is_object()) throw FixtureError("expected an object at " + path);
    if (j.contains("preset")) {
        check_keys(j, {"preset", "arg"}, path);
        const std::string name = field(j, "preset", path).get<std::string>();
        if (name == "node_pair")
            return preset_node_pair(parse_count(field(j, "arg", path), path + ".arg"));
        if (name == "diag_pair") return preset_diag_pair();
        if (name == "triple_pair") return preset_triple_pair();
        throw FixtureError("unknown pair preset '" + name + "' at " + path);
    }
    check_keys(j, {"ambient", "span"}, path);
    const std::string hname = field(j, "ambient", path).get<std::string>();
    auto hit = doc.algebras.find(hname);
    if (hit == doc.algebras.end())
        throw FixtureError("unresolved reference '" + hname + "' at " + path + ".ambient");
    const Algebra& h = hit->second;
    std::vector<Vec> span;
    const Json& sp = field(j, "span", path);
    for (std::size_t i = 0; i < sp.size(); ++i)
        span.push_back(parse_vec(sp[i], h.dim(), path + ".span[" + std::to_string(i) + "]"));
    try {
        return make_subalgebra_pair(h, span);
    } catch (const std::exception& e) {
        throw FixtureError(std::string(e.what()) + " at " + path);
    }
}

// --- task runners ---------------------------------------------------------

const Algebra& resolve_algebra(const FixtureDocument& doc, const Json& task,
                               const RunOptions& opts) {
    const std::string name = field(task, "algebra", "task").get<std::string>();
    auto it = doc.algebras.find(name);
    if (it == doc.algebras.end()) throw FixtureError("unresolved reference '" + name + "'");
    if (it->second.dim() > opts.max_dim)
        throw FixtureError("algebra '" + name + "' exceeds --max-dim");
    return it->second;
}

const SubalgebraPair& resolve_pair(const FixtureDocument& doc, const Json& task,
                                   const RunOptions& opts) {
    const std::string name = field(task, "pair", "task").get<std::string>();
    auto it = doc.pairs.find(name);
    if (it == doc.pairs.end()) throw FixtureError("unresolved reference '" + name + "'");
    if (it->second.ambient.dim() > opts.max_dim)
        throw FixtureError("pair '" + name + "' exceeds --max-dim");
    return it->second;
}

struct ResolvedAction {
    const Algebra* algebra;
    const ActionDatum* datum;
};

ResolvedAction resolve_action(const FixtureDocument& doc, const Json& task,
                              const RunOptions& opts) {
    const std::string name = field(task, "action", "task").get<std::string>();
    auto it = doc.actions.find(name);
    if (it == doc.actions.end()) throw FixtureError("unresolved reference '" + name + "'");
    const Algebra& a = doc.algebras.at(doc.action_algebra.at(name));
    if (a.dim() * it->second.group.order > opts.max_dim)
        throw FixtureError("crossed product for action '" + name + "' exceeds --max-dim");
    return {&a, &it->second};
}

Json report_of(const Report& r) {
    Json out = Json::array();
    for (const auto& f : r.failures) out.push_back(f);
    return out;
}

void fill_pair_report(Json& out, const SemilocalPair& p, const RunOptions& opts) {
    out["backstrom"] = is_backstrom(p);
    if (!out["backstrom"].get<bool>()) {
        out["nodal"] = false;
        return;
    }
    const TwoGeneratorReport rep = theorem_2gen_report(p, opts.seed);
    out["a"] = counts_to_json(rep.data.a);
    Json b = Json::array();
    for (const auto& row : rep.data.b) b.push_back(counts_to_json(row));
    out["b"] = b;
    out["basic"] = rep.data.basic;
    out["mu"] = rep.mu;
    out["ell"] = rep.ell;
    out["cond1"] = rep.cond1;
    out["cond2"] = rep.cond2;
    out["cond3"] = rep.cond3;
    out["pattern_ok"] = rep.pattern_ok;
    out["nodal"] = rep.ell <= 2;
}

Json run_task_inner(const FixtureDocument& doc, const Json& task, const RunOptions& opts,
                    Json& out) {
    const std::string kind = field(task, "task", "task").get<std::string>();
    out["task"] = kind;
    for (const char* ref : {"algebra", "group", "action", "pair"})
        if (task.contains(ref)) out[ref] = task[ref];

    if (kind == "validate") {
        check_keys(task, {"task", "algebra", "group", "pair", "action", "expect"}, "task");
        Report r;
        if (task.contains("algebra")) {
            r = validate_algebra(resolve_algebra(doc, task, opts));
        } else if (task.contains("group")) {
            const std::string name = task["group"].get<std::string>();
            auto it = doc.groups.find(name);
            if (it == doc.groups.end())
                throw FixtureError("unresolved reference '" + name + "'");
            r = validate_group(it->second);
        } else if (task.contains("pair")) {
            r = validate_pair(resolve_pair(doc, task, opts));
        } else if (task.contains("action")) {
            const ResolvedAction ra = resolve_action(doc, task, opts);
            r = validate_action(*ra.algebra, *ra.datum);
        } else {
            throw FixtureError("validate task needs an algebra, group, pair, or action");
        }
        out["valid"] = r.ok();
        out["failures"] = report_of(r);
    } else if (kind == "radical") {
        check_keys(task, {"task", "algebra", "expect"}, "task");
        const Subspace rad = jacobson_radical(resolve_algebra(doc, task, opts));
        out["dim"] = rad.dim();
        Json basis = Json::array();
        for (const Vec& v : rad.basis()) basis.push_back(vec_to_json(v));
        out["basis"] = basis;
    } else if (kind == "wedderburn") {
        check_keys(task, {"task", "algebra", "expect"}, "task");
        const Algebra& a = resolve_algebra(doc, task, opts);
        const QuotientAlgebra q = semisimple_quotient(a);
        const WedderburnData wd = wedderburn(q.algebra, opts.seed);
        out["radical_dim"] = a.dim() - q.algebra.dim();
        Json blocks = Json::array();
        for (const auto& blk : wd.blocks)
            blocks.push_back(Json{{"block_dim", blk.block_dim}, {"n", blk.n}});
        out["blocks"] = blocks;
    } else if (kind == "crossed-product") {
        check_keys(task, {"task", "action", "expect"}, "task");
        const ResolvedAction ra = resolve_action(doc, task, opts);
        const CrossedProduct cp = crossed_product(*ra.algebra, *ra.datum);
        out["dim"] = cp.total.dim();
        out["valid"] = validate_algebra(cp.total).ok();
    } else if (kind == "check-action") {
        check_keys(task, {"task", "action", "expect"}, "task");
        const ResolvedAction ra = resolve_action(doc, task, opts);
        const Report r = validate_action(*ra.algebra, *ra.datum);
        out["valid"] = r.ok();
        out["failures"] = report_of(r);
        out["table_associative"] =
            validate_algebra(crossed_product_table(*ra.algebra, *ra.datum)).ok();
    } else if (kind == "check-separability") {
        check_keys(task, {"task", "action", "expect"}, "task");
        const ResolvedAction ra = resolve_action(doc, task, opts);
        const CrossedProduct cp = crossed_product(*ra.algebra, *ra.datum);
        std::vector<Vec> base_span;
        for (std::size_t i = 0; i < ra.algebra->dim(); ++i) base_span.push_back(cp.embed.col(i));
        const SubalgebraPair ext = make_subalgebra_pair(cp.total, base_span);
        const SeparabilityWitness wit = separability_witness(cp);
        const Report r = check_strict_separability(ext, wit.square, wit.w, wit.pi);
        out["ok"] = r.ok();
        out["failures"] = report_of(r);
        out["rank_over_base"] = ra.datum->group.order;
    } else if (kind == "pair-report") {
        check_keys(task, {"task", "pair", "expect"}, "task");
        fill_pair_report(out, resolve_pair(doc, task, opts), opts);
    } else if (kind == "lemma34-classify") {
        check_keys(task, {"task", "b", "a", "expect"}, "task");
        std::vector<std::vector<std::size_t>> b;
        for (const Json& row : field(task, "b", "task")) {
            std::vector<std::size_t> r;
            for (const Json& e : row) r.push_back(parse_count(e, "task.b"));
            b.push_back(std::move(r));
        }
        std::vector<std::size_t> a;
        for (const Json& e : field(task, "a", "task")) a.push_back(parse_count(e, "task.a"));
        const MatrixConditionVerdict v = classify_matrix_condition(b, a);
        out["holds1"] = v.holds1;
        out["holds2"] = v.holds2;
        out["holds3"] = v.holds3;
    } else if (kind == "verify-closure") {
        check_keys(task, {"task", "pair", "action", "expect"}, "task");
        const SemilocalPair& p = resolve_pair(doc, task, opts);
        const ResolvedAction ra = resolve_action(doc, task, opts);
        if (p.ambient.dim() * ra.datum->group.order > opts.max_dim)
            throw FixtureError("crossed pair exceeds --max-dim");
        const ClosureReport rep = verify_closure_theorem(p, *ra.datum, opts.seed);
        out["preconditions_ok"] = rep.preconditions_ok;
        Json fails = Json::array();
        for (const auto& f : rep.precondition_failures) fails.push_back(f);
        out["precondition_failures"] = fails;
        if (rep.preconditions_ok) {
            out["backstrom"] = rep.backstrom;
            out["radical_formula_ok"] = rep.radical_formula_ok;
            out["a"] = counts_to_json(rep.data.a);
            Json b = Json::array();
            for (const auto& row : rep.data.b) b.push_back(counts_to_json(row));
            out["b"] = b;
            out["ell"] = rep.ell;
            out["pattern_ok"] = rep.pattern_ok;
            out["nodal"] = rep.nodal;
        }
    } else if (kind == "phi-check") {
        check_keys(task, {"task", "action", "module", "expect"}, "task");
        const ResolvedAction ra = resolve_action(doc, task, opts);
        const std::string mod =
            task.contains("module") ? task["module"].get<std::string>() : "regular";
        if (mod != "regular")
            throw FixtureError("phi-check supports the regular module only");
        InvariantModule im{LeftModule::regular(*ra.algebra), ra.datum->phi};
        const PhiReport rep = phi_isomorphism(*ra.algebra, *ra.datum, im);
        out["left_dim"] = rep.left_dim;
        out["right_dim"] = rep.right_dim;
        out["action_valid"] = rep.action_valid;
        out["well_defined"] = rep.well_defined;
        out["multiplicative"] = rep.multiplicative;
        out["unital"] = rep.unital;
        out["bijective"] = rep.bijective;
        out["ok"] = rep.ok();
        out["failures"] = report_of(rep.details);
    } else if (kind == "morita-check") {
        check_keys(task, {"task", "pair", "prog", "expect"}, "task");
        const SemilocalPair& p = resolve_pair(doc, task, opts);
        const Json& prog_spec = field(task, "prog", "task");
        LeftModule prog;
        if (prog_spec.is_string() && prog_spec.get<std::string>() == "regular") {
            prog = LeftModule::regular(p.sub_algebra);
        } else if (prog_spec.is_object() && prog_spec.contains("copies")) {
            check_keys(prog_spec, {"copies"}, "task.prog");
            const std::size_t k = parse_count(prog_spec["copies"], "task.prog.copies");
            if (k == 0) throw FixtureError("task.prog.copies must be positive");
            prog = LeftModule::regular(p.sub_algebra);
            const LeftModule one = prog;
            for (std::size_t i = 1; i < k; ++i) prog = LeftModule::direct_sum(prog, one);
        } else if (prog_spec.is_object() && prog_spec.contains("idem_summands")) {
            check_keys(prog_spec, {"idem_summands"}, "task.prog");
            const AlgebraAnalysis an = analyze_algebra(p.sub_algebra, opts.seed);
            bool first = true;
            for (const Json& e : prog_spec["idem_summands"]) {
                const std::size_t i = parse_count(e, "task.prog.idem_summands");
                if (i >= an.lifted_idems.size())
                    throw FixtureError("idempotent index out of range at task.prog");
                const LeftModule piece =
                    LeftModule::left_ideal(p.sub_algebra, an.lifted_idems[i]);
                prog = first ? piece : LeftModule::direct_sum(prog, piece);
                first = false;
            }
            if (first) throw FixtureError("task.prog.idem_summands is empty");
        } else {
            throw FixtureError("task.prog must be \"regular\", {copies}, or {idem_summands}");
        }
        const MoritaReport rep = morita_transport_check(p, prog, opts.seed);
        out["end_sub_dim"] = rep.end_sub_dim;
        out["end_ambient_dim"] = rep.end_ambient_dim;
        out["backstrom"] = rep.backstrom;
        out["ell_original"] = rep.ell_original;
        out["ell_transported"] = rep.ell_transported;
        out["ell_preserved"] = rep.ell_preserved;
        out["ok"] = rep.ok();
    } else {
        throw FixtureError("unknown task '" + kind + "'");
    }
    return out;
}

}  // namespace

FixtureDocument parse_fixture(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FixtureError(e.what());
    }
    if (!j.is_object()) throw FixtureError("document root must be an object");
    check_keys(j, {"version", "algebras", "groups", "actions", "pairs", "tasks"}, "document");

    FixtureDocument doc;
    doc.version = field(j, "version", "document").get<std::string>();
    if (doc.version != "1") throw FixtureError("unsupported version '" + doc.version + "'");

    if (j.contains("algebras"))
        for (auto it = j["algebras"].begin(); it != j["algebras"].end(); ++it)
            doc.algebras.emplace(it.key(), parse_algebra(*it, "algebras." + it.key()));
    if (j.contains("groups"))
        for (auto it = j["groups"].begin(); it != j["groups"].end(); ++it)
            doc.groups.emplace(it.key(), parse_group(*it, "groups." + it.key()));
    if (j.contains("actions"))
        for (auto it = j["actions"].begin(); it != j["actions"].end(); ++it) {
            std::string aname;
            doc.actions.emplace(it.key(),
                                parse_action(*it, doc, &aname, "actions." + it.key()));
            doc.action_algebra.emplace(it.key(), aname);
        }
    if (j.contains("pairs"))
        for (auto it = j["pairs"].begin(); it != j["pairs"].end(); ++it)
            doc.pairs.emplace(it.key(), parse_pair(*it, doc, "pairs." + it.key()));
    if (j.contains("tasks")) {
        if (!j["tasks"].is_array()) throw FixtureError("'tasks' must be an array");
        for (const Json& t : j["tasks"]) {
            if (!t.is_object() || !t.contains("task"))
                throw FixtureError("each task must be an object with a 'task' key");
            doc.tasks.push_back(t);
        }
    }
    doc.canonical = j;
    return doc;
}

Json run_task(const FixtureDocument& doc, const Json& task, const RunOptions& opts) {
    Json out = Json::object();
    try {
        run_task_inner(doc, task, opts, out);
    } catch (const std::exception& e) {
        out["error"] = e.what();
    }
    if (task.contains("expect")) {
        bool match = !out.contains("error");
        for (auto it = task["expect"].begin(); match && it != task["expect"].end(); ++it)
            match = out.contains(it.key()) && out[it.key()] == it.value();
        out["expect"] = task["expect"];
        out["matches_expectation"] = match;
    }
    return out;
}

RunResult run_document(const FixtureDocument& doc, const RunOptions& opts) {
    RunResult res;
    res.document = Json::object();
    res.document["version"] = doc.version;
    Json reports = Json::array();
    bool had_error = false;
    bool had_mismatch = false;
    for (const Json& task : doc.tasks) {
        Json rep = run_task(doc, task, opts);
        if (rep.contains("error")) had_error = true;
        if (rep.contains("matches_expectation") && !rep["matches_expectation"].get<bool>())
            had_mismatch = true;
        reports.push_back(std::move(rep));
    }
    res.document["reports"] = reports;
    res.exit_code = had_error ? 2 : (had_mismatch ? 1 : 0);
    return res;
}

}  // namespace crossalg
