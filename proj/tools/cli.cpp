#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dbclosure/balance.hpp"
#include "dbclosure/closure.hpp"
#include "dbclosure/distance.hpp"
#include "dbclosure/edge_list_io.hpp"
#include "dbclosure/errors.hpp"
#include "dbclosure/search.hpp"
#include "dbclosure/trees.hpp"

namespace dbclosure::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

// Raised for a construct request on a graph outside the supported families.
struct Unsupported {
    std::string message;
    std::string classification;
};

json edges_json(const std::vector<Edge> &edges) {
    json arr = json::array();
    for (const Edge &e : edges)
        arr.push_back({e.u, e.v});
    return arr;
}

std::string edges_text(const std::vector<Edge> &edges) {
    if (edges.empty())
        return "(none)";
    std::string out;
    for (const Edge &e : edges) {
        if (!out.empty())
            out += ' ';
        out += std::to_string(e.u) + '-' + std::to_string(e.v);
    }
    return out;
}

json input_summary(const std::string &path, const Graph &g) {
    json in;
    in["path"] = path;
    in["n"] = g.order();
    in["edge_count"] = g.edge_count();
    in["max_degree"] = g.max_degree();
    in["diameter"] = diameter(g);
    return in;
}

json certificate_json(const Certificate &c) {
    json j;
    j["contains_input"] = c.contains_input;
    j["distance_balanced"] = c.distance_balanced;
    j["diameter"] = c.diameter;
    j["regular_degree"] = c.regular_degree ? json(*c.regular_degree) : json(nullptr);
    j["matches_formula"] = c.matches_formula ? json(*c.matches_formula) : json(nullptr);
    return j;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

struct Report {
    std::string command;
    std::vector<std::string> argv;
    json input;
    json result;
    Clock::time_point start = Clock::now();

    void print(std::ostream &out) const {
        json j;
        j["command"] = command;
        j["argv"] = argv;
        j["input"] = input;
        j["result"] = result;
        j["timing"] = {{"seconds", std::chrono::duration<double>(Clock::now() - start).count()}};
        j["version"] = kVersion;
        out << j.dump(2) << '\n';
    }
};

// ---------------------------------------------------------------- check

struct CheckOpts {
    std::string path;
    bool json = false;
    bool report = false;
};

int cmd_check(const CheckOpts &o, Report &rep, std::ostream &out) {
    const Graph g = read_edge_list_file(o.path);
    rep.input = input_summary(o.path, g);
    const ImbalanceReport r = imbalance_report(g);
    rep.result["distance_balanced"] = r.balanced;
    if (r.worst_edge) {
        const auto &w = *r.worst_edge;
        rep.result["worst_edge"] = {{"x", w.x}, {"y", w.y}, {"closer_to_x", w.closer_to_x}, {"closer_to_y", w.closer_to_y}};
    } else {
        rep.result["worst_edge"] = nullptr;
    }
    if (o.report) {
        json recs = json::array();
        for (const auto &rec : r.records)
            recs.push_back({{"x", rec.x}, {"y", rec.y}, {"closer_to_x", rec.closer_to_x}, {"closer_to_y", rec.closer_to_y}});
        rep.result["records"] = recs;
    }

    if (o.json) {
        rep.print(out);
    } else {
        out << "distance-balanced: " << bool_text(r.balanced) << '\n';
        if (r.worst_edge)
            out << "worst edge: " << r.worst_edge->x << '-' << r.worst_edge->y << " (" << r.worst_edge->closer_to_x
                << " vs " << r.worst_edge->closer_to_y << ")\n";
        if (o.report) {
            out << "x\ty\t|W_xy|\t|W_yx|\n";
            for (const auto &rec : r.records)
                out << rec.x << '\t' << rec.y << '\t' << rec.closer_to_x << '\t' << rec.closer_to_y << '\n';
        }
    }
    return r.balanced ? kOk : kNotBalanced;
}

// ---------------------------------------------------------------- szeged

int cmd_szeged(const std::string &path, bool as_json, Report &rep, std::ostream &out) {
    const Graph g = read_edge_list_file(path);
    rep.input = input_summary(path, g);
    const auto sz = szeged_index(g);
    rep.result["szeged_index"] = sz;
    if (as_json)
        rep.print(out);
    else
        out << sz << '\n';
    return kOk;
}

// ---------------------------------------------------------------- gen

int parse_count(const std::string &text) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != text.size() || text.empty())
        throw ParseError("expected an integer, got '" + text + "'");
    return value;
}

Graph generate(const std::string &kind, const std::string &arg) {
    if (kind == "starlike")
        return starlike(parse_starlike_spec(arg));
    const int k = parse_count(arg);
    if (kind == "star")
        return star(k);
    if (kind == "broom")
        return broom(k);
    if (kind == "path") {
        if (k < 1)
            throw InvalidArgument("path needs n >= 1");
        return path_graph(k);
    }
    if (kind == "cycle")
        return cycle_graph(k);
    if (kind == "complete") {
        if (k < 1)
            throw InvalidArgument("complete needs n >= 1");
        return complete_graph(k);
    }
    throw InvalidArgument("unknown generator '" + kind + "' (star|starlike|broom|path|cycle|complete)");
}

int cmd_gen(const std::string &kind, const std::string &arg, const std::string &out_path, std::ostream &out) {
    const Graph g = generate(kind, arg);
    std::ostringstream text;
    text << "# " << kind << ' ' << arg << '\n';
    write_edge_list(text, g);
    if (out_path.empty()) {
        out << text.str();
    } else {
        std::ofstream f(out_path);
        if (!f)
            throw Error("cannot write '" + out_path + "'");
        f << text.str();
    }
    return kOk;
}

// ---------------------------------------------------------------- closure

struct ClosureOpts {
    std::string path;
    std::string mode = "construct";
    std::string prune = "naive";
    std::optional<int> max_k;
    bool all_witnesses = false;
    std::optional<double> budget;
    int threads = 1;
    bool json = false;
};

int cmd_closure(const ClosureOpts &o, Report &rep, std::ostream &out) {
    const Graph g = read_edge_list_file(o.path);
    rep.input = input_summary(o.path, g);
    rep.result["mode"] = o.mode;

    if (o.mode == "construct") {
        ClosureResult res;
        try {
            res = construct_closure(g);
        } catch (const UnsupportedFamily &e) {
            std::string cls = "other";
            if (is_tree(g))
                cls = std::string(to_string(classify_tree(g).tag));
            throw Unsupported{e.what(), cls};
        }
        rep.result["family"] = to_string(res.family.tag);
        rep.result["m"] = res.family.m;
        rep.result["method"] = res.method == ClosureMethod::ClosedForm ? "closed-form" : "search";
        rep.result["b"] = res.b;
        rep.result["added_edges"] = edges_json(res.added_edges);
        rep.result["certificate"] = certificate_json(res.certificate);
        if (o.json) {
            rep.print(out);
        } else {
            out << "family: " << to_string(res.family.tag) << " (m=" << res.family.m << ")\n";
            out << "method: " << rep.result["method"].get<std::string>() << '\n';
            out << "b = " << res.b << '\n';
            out << "added edges: " << edges_text(res.added_edges) << '\n';
            const auto &c = res.certificate;
            out << "certificate: contains_input=" << bool_text(c.contains_input)
                << " distance_balanced=" << bool_text(c.distance_balanced) << " diameter=" << c.diameter
                << " regular_degree=" << (c.regular_degree ? std::to_string(*c.regular_degree) : "none")
                << " matches_formula=" << (c.matches_formula ? bool_text(*c.matches_formula) : "n/a") << '\n';
        }
        return kOk;
    }
    if (o.mode != "search")
        throw InvalidArgument("--mode must be construct or search");

    SearchConfig cfg;
    if (o.prune == "naive")
        cfg.prune_mode = PruneMode::Naive;
    else if (o.prune == "regular")
        cfg.prune_mode = PruneMode::Regular;
    else
        throw InvalidArgument("--prune must be naive or regular");
    cfg.max_k = o.max_k;
    cfg.all_witnesses = o.all_witnesses;
    cfg.time_budget_seconds = o.budget;
    cfg.threads = o.threads;
    rep.result["prune"] = o.prune;

    try {
        const SearchResult res = exact_b(g, cfg);
        rep.result["status"] = "ok";
        rep.result["b"] = res.b;
        json ws = json::array();
        for (const auto &w : res.witnesses)
            ws.push_back(edges_json(w));
        rep.result["witnesses"] = ws;
        rep.result["explored"] = res.explored;
        if (o.json) {
            rep.print(out);
        } else {
            out << "b = " << res.b << '\n';
            for (const auto &w : res.witnesses)
                out << "witness: " << edges_text(w) << '\n';
            out << "explored: " << res.explored << " (" << to_string(res.mode_used) << ")\n";
        }
        return kOk;
    } catch (const BudgetExceeded &e) {
        rep.result["status"] = "budget_exceeded";
        rep.result["lower_bound"] = e.lower_bound;
        rep.result["explored"] = e.explored;
        if (o.json)
            rep.print(out);
        else
            out << "budget exceeded: " << e.what() << "\nb >= " << e.lower_bound << '\n';
        return kBudgetExceeded;
    }
}

// ---------------------------------------------------------------- verify

struct VerifyOpts {
    std::string family = "all";
    std::string range;
    bool oracle = false;
    bool json = false;
};

constexpr int kOracleMaxOrder = 8;
constexpr int kVerifyMaxM = 200;

std::pair<int, int> parse_range(const std::string &text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int m = parse_count(text);
        return {m, m};
    }
    return {parse_count(text.substr(0, dots)), parse_count(text.substr(dots + 2))};
}

std::optional<FamilyTag> parse_family(const std::string &name) {
    for (FamilyTag t : {FamilyTag::Star, FamilyTag::S2, FamilyTag::S22, FamilyTag::S3, FamilyTag::Broom})
        if (name == to_string(t))
            return t;
    return std::nullopt;
}

bool degree_in_bounds(FamilyTag tag, int m, int r) {
    if (tag == FamilyTag::S2)
        return m <= r && r <= m + 1;
    return r == m;
}

int cmd_verify(const VerifyOpts &o, Report &rep, std::ostream &out) {
    std::vector<FamilyTag> families;
    if (o.family == "all") {
        families = {FamilyTag::Star, FamilyTag::S2, FamilyTag::S22, FamilyTag::S3, FamilyTag::Broom};
    } else if (auto t = parse_family(o.family)) {
        families = {*t};
    } else {
        throw InvalidArgument("unknown family '" + o.family + "' (star|s2|s22|s3|broom|all)");
    }
    const auto [lo, hi] = parse_range(o.range);
    if (lo > hi)
        throw InvalidArgument("empty m range " + o.range);
    if (hi > kVerifyMaxM)
        throw InvalidArgument("m range limited to <= " + std::to_string(kVerifyMaxM));
    if (families.size() == 1 && lo < family_min_m(families[0]))
        throw InvalidArgument(std::string(to_string(families[0])) + " needs m >= " +
                              std::to_string(family_min_m(families[0])));

    rep.input = {{"family", o.family}, {"m_from", lo}, {"m_to", hi}, {"oracle", o.oracle}};
    json rows = json::array();
    bool all_ok = true;
    if (!o.json)
        out << "family\tm\tn\tb_formula\tadded\tedges_ok\tdb\tregular\tdiameter\tmethod\toracle_b\tstatus\n";

    for (FamilyTag tag : families) {
        for (int m = std::max(lo, family_min_m(tag)); m <= hi; ++m) {
            const ClosureResult res = construct_family_closure(tag, m);
            const auto &c = res.certificate;
            const long long formula = b_formula(tag, m);
            const int n = res.closure.order();
            bool ok = c.all_pass() && c.diameter <= 2 && c.regular_degree &&
                      degree_in_bounds(tag, m, *c.regular_degree);
            std::optional<int> oracle_b;
            if (o.oracle && n <= kOracleMaxOrder) {
                SearchConfig cfg;
                cfg.prune_mode = n <= 7 ? PruneMode::Naive : PruneMode::Regular;
                oracle_b = exact_b(family_tree(tag, m), cfg).b;
                ok = ok && *oracle_b == formula;
            }
            all_ok = all_ok && ok;
            const std::string method = res.method == ClosureMethod::ClosedForm ? "closed-form" : "fallback search";

            json row;
            row["family"] = to_string(tag);
            row["m"] = m;
            row["n"] = n;
            row["b_formula"] = formula;
            row["added"] = res.b;
            row["edges_ok"] = c.matches_formula.value_or(false);
            row["distance_balanced"] = c.distance_balanced;
            row["regular_degree"] = c.regular_degree ? json(*c.regular_degree) : json(nullptr);
            row["diameter"] = c.diameter;
            row["method"] = method;
            row["oracle_b"] = oracle_b ? json(*oracle_b) : json(nullptr);
            row["pass"] = ok;
            rows.push_back(row);

            if (!o.json)
                out << to_string(tag) << '\t' << m << '\t' << n << '\t' << formula << '\t' << res.b << '\t'
                    << bool_text(c.matches_formula.value_or(false)) << '\t' << bool_text(c.distance_balanced) << '\t'
                    << (c.regular_degree ? std::to_string(*c.regular_degree) : "no") << '\t' << c.diameter << '\t'
                    << method << '\t' << (oracle_b ? std::to_string(*oracle_b) : "-") << '\t'
                    << (ok ? "pass" : "FAIL") << '\n';
        }
    }
    rep.result["rows"] = rows;
    rep.result["all_pass"] = all_ok;
    if (o.json)
        rep.print(out);
    return all_ok ? kOk : kNotBalanced;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Distance-balanced graph analysis and closure tool", "dbtool"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    CheckOpts check;
    auto *check_cmd = app.add_subcommand("check", "Decide whether a graph is distance-balanced");
    check_cmd->add_option("path", check.path, "Edge-list file")->required();
    check_cmd->add_flag("--json", check.json, "Emit a JSON report");
    check_cmd->add_flag("--report", check.report, "Include the per-edge |W_xy| / |W_yx| table");

    std::string sz_path;
    bool sz_json = false;
    auto *sz_cmd = app.add_subcommand("szeged", "Print the Szeged index");
    sz_cmd->add_option("path", sz_path, "Edge-list file")->required();
    sz_cmd->add_flag("--json", sz_json, "Emit a JSON report");

    std::string gen_kind, gen_arg, gen_out;
    auto *gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
    gen_cmd->add_option("kind", gen_kind, "star | starlike | broom | path | cycle | complete")->required();
    gen_cmd->add_option("param", gen_arg, "Size, or a branch list such as 3,1^4 for starlike")->required();
    gen_cmd->add_option("--out", gen_out, "Output file (default: stdout)");

    ClosureOpts closure;
    auto *closure_cmd = app.add_subcommand("closure", "Distance-balanced closure of a graph");
    closure_cmd->add_option("path", closure.path, "Edge-list file")->required();
    closure_cmd->add_option("--mode", closure.mode, "construct | search")->capture_default_str();
    closure_cmd->add_option("--prune", closure.prune, "naive | regular (search mode)")->capture_default_str();
    closure_cmd->add_option("--max-k", closure.max_k, "Largest number of added edges to try");
    closure_cmd->add_flag("--all-witnesses", closure.all_witnesses, "Report every minimal witness");
    closure_cmd->add_option("--budget", closure.budget, "Wall-clock budget in seconds");
    closure_cmd->add_option("--threads", closure.threads, "Search threads")->capture_default_str()->check(CLI::Range(1, 256));
    closure_cmd->add_flag("--json", closure.json, "Emit a JSON report");

    VerifyOpts verify;
    auto *verify_cmd = app.add_subcommand("verify", "Check the closed-form closures over a family and range of m");
    verify_cmd->add_option("--family", verify.family, "star | s2 | s22 | s3 | broom | all")->capture_default_str();
    verify_cmd->add_option("--m", verify.range, "Range A..B or a single value")->required();
    verify_cmd->add_flag("--oracle", verify.oracle, "Cross-check b with exact search when n <= 8");
    verify_cmd->add_flag("--json", verify.json, "Emit a JSON report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kError;
    }

    Report rep;
    rep.argv = args;
    try {
        if (*check_cmd) {
            rep.command = "check";
            return cmd_check(check, rep, out);
        }
        if (*sz_cmd) {
            rep.command = "szeged";
            return cmd_szeged(sz_path, sz_json, rep, out);
        }
        if (*gen_cmd)
            return cmd_gen(gen_kind, gen_arg, gen_out, out);
        if (*closure_cmd) {
            rep.command = "closure";
            return cmd_closure(closure, rep, out);
        }
        if (*verify_cmd) {
            rep.command = "verify";
            return cmd_verify(verify, rep, out);
        }
    } catch (const Unsupported &u) {
        err << "error: " << u.message << '\n';
        out << "classification: " << u.classification << '\n';
        return kUnsupportedFamily;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}

} // namespace dbclosure::cli
