#include "omp/cli/run.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "omp/compiler/compile.hpp"
#include "omp/compiler/emit.hpp"
#include "omp/dl/parser.hpp"
#include "omp/dl/reasoner.hpp"
#include "omp/error.hpp"
#include "omp/iface/interface.hpp"
#include "omp/oracle/oracle.hpp"
#include "omp/pddl/parser.hpp"
#include "omp/planner/planner.hpp"

namespace omp::cli {

namespace {

struct RunConfig {
    std::string domain, problem, ontology, fluents, queries;
    std::string plan_file, out_domain, out_problem, report;
    std::string target;  // explain subject
    bool block_inconsistent = false;
    bool variable_rules = false;
    bool simplify = false;
    bool una = false;
    bool direct = false;
    int jobs = 1;
    std::uint64_t node_limit = dl::ReasonerLimits{}.node_budget;
    std::uint64_t hst_limit = just::JustifyLimits{}.hst_node_budget;
    std::size_t max_nodes = planner::SolveLimits{}.max_nodes;
    double time_limit = 0.0;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("InputError", "cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw Error("InputError", "cannot write file: " + path);
    out << text;
}

iface::OMPlanningSpec load_spec(const RunConfig& cfg) {
    iface::OMPlanningSpec om;
    om.planning.domain = pddl::parse_domain(read_file(cfg.domain));
    om.planning.problem = pddl::parse_problem(read_file(cfg.problem));
    om.ontology = dl::parse_ontology(read_file(cfg.ontology));
    om.fluents = iface::parse_fluent_interface(read_file(cfg.fluents));
    om.queries = iface::parse_query_interface(read_file(cfg.queries));
    if (cfg.una)
        om.ontology = iface::ontology_with_una(om.ontology, om.fluents);
    return om;
}

compiler::CompileOptions compile_options(const RunConfig& cfg) {
    compiler::CompileOptions opts;
    opts.block_inconsistent = cfg.block_inconsistent;
    opts.variable_rules = cfg.variable_rules;
    opts.simplify = cfg.simplify;
    opts.jobs = cfg.jobs;
    opts.limits.reasoner.node_budget = cfg.node_limit;
    opts.limits.hst_node_budget = cfg.hst_limit;
    return opts;
}

void write_report(const RunConfig& cfg, const compiler::CompileReport& report) {
    if (cfg.report.empty())
        return;
    nlohmann::ordered_json j;
    j["fluents"] = report.fluent_count;
    j["bottom_justifications"] = report.bottom_justifications;
    j["assignments"] = report.assignments;
    j["justification_sets"] = report.justification_sets;
    j["rules"] = report.rules_emitted;
    j["diagnostics"] = report.diagnostics;
    write_file(cfg.report, j.dump(2) + "\n");
}

void warn_diagnostics(const compiler::CompileReport& report, std::ostream& err) {
    for (const auto& d : report.diagnostics)
        err << "warning: " << d << "\n";
}

int run_compile(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto result = compiler::compile(load_spec(cfg), compile_options(cfg));
    warn_diagnostics(result.report, err);
    std::string dtext = compiler::emit_domain(result.spec.domain);
    std::string ptext = compiler::emit_problem(result.spec.problem);
    if (cfg.out_domain.empty())
        out << dtext;
    else
        write_file(cfg.out_domain, dtext);
    if (cfg.out_problem.empty())
        out << ptext;
    else
        write_file(cfg.out_problem, ptext);
    write_report(cfg, result.report);
    return 0;
}

int run_plan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto om = load_spec(cfg);
    auto result = compiler::compile(om, compile_options(cfg));
    warn_diagnostics(result.report, err);
    write_report(cfg, result.report);

    planner::SolveLimits limits;
    limits.max_nodes = cfg.max_nodes;
    limits.time_limit_s = cfg.time_limit;
    auto solved = planner::solve(result.spec, limits);
    if (solved.status == planner::SolveStatus::ResourceLimit) {
        err << "resource limit exceeded after " << solved.stats.expanded
            << " expansions\n";
        return 3;
    }
    if (solved.status == planner::SolveStatus::Unsolvable) {
        err << "unsolvable\n";
        return 1;
    }

    dl::ReasonerLimits rl{cfg.node_limit};
    if (auto failure = oracle::om_validate_plan(om, solved.plan, rl))
        throw Error("InternalError",
                    "planner output failed direct validation: " + *failure);
    for (const auto& step : solved.plan)
        out << step.str() << "\n";
    return 0;
}

int run_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto om = load_spec(cfg);
    auto plan = pddl::parse_plan(read_file(cfg.plan_file));
    std::optional<std::string> failure;
    if (cfg.direct) {
        dl::ReasonerLimits rl{cfg.node_limit};
        failure = oracle::om_validate_plan(om, plan, rl);
    } else {
        auto result = compiler::compile(om, compile_options(cfg));
        warn_diagnostics(result.report, err);
        failure = pddl::validate_plan(result.spec, plan);
    }
    if (failure) {
        out << "invalid: " << *failure << "\n";
        return 1;
    }
    out << "valid\n";
    return 0;
}

int run_check(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    auto om = load_spec(cfg);
    auto diagnostics = iface::validate_om_spec(om);
    for (const auto& d : diagnostics)
        out << "note: " << d << "\n";
    dl::ReasonerLimits rl{cfg.node_limit};
    bool consistent = dl::is_consistent(om.ontology, rl);
    out << (consistent ? "consistent\n" : "inconsistent\n");
    return consistent ? 0 : 1;
}

// accepts "(fullHands stackBot)", "fullHands(stackBot)" and "inconsistent"
pddl::Atom parse_target(const std::string& text) {
    auto fail = [&] {
        throw Error("InputError", "cannot parse query atom '" + text + "'");
    };
    std::string s = text;
    auto trim = [](std::string& t) {
        t.erase(0, t.find_first_not_of(" \t"));
        t.erase(t.find_last_not_of(" \t") + 1);
    };
    trim(s);
    if (s.empty())
        fail();
    pddl::Atom atom;
    if (s.front() == '(') {
        if (s.back() != ')')
            fail();
        std::istringstream in(s.substr(1, s.size() - 2));
        in >> atom.pred;
        std::string arg;
        while (in >> arg)
            atom.args.push_back(arg);
    } else if (s.find('(') != std::string::npos) {
        auto open = s.find('(');
        if (s.back() != ')')
            fail();
        atom.pred = s.substr(0, open);
        std::string inside = s.substr(open + 1, s.size() - open - 2);
        std::istringstream in(inside);
        std::string arg;
        while (std::getline(in, arg, ',')) {
            trim(arg);
            if (!arg.empty())
                atom.args.push_back(arg);
        }
    } else {
        atom.pred = s;
    }
    if (atom.pred.empty())
        fail();
    return atom;
}

int run_explain(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    pddl::Atom target = parse_target(cfg.target);
    auto opts = compile_options(cfg);
    opts.variable_rules = false;  // explanations read the ground rules
    auto result = compiler::compile(load_spec(cfg), opts);
    warn_diagnostics(result.report, err);

    for (const auto& rule : result.spec.domain.rules) {
        if (!(rule.head == target))
            continue;
        std::vector<std::string> sets;
        for (const auto& d : rule.body.children)
            if (d.str() != "(inconsistent)")
                sets.push_back(d.str());
        out << sets.size() << " justification"
            << (sets.size() == 1 ? "" : "s") << " for " << target.str()
            << "\n";
        for (const auto& s : sets)
            out << "  " << s << "\n";
        return 0;
    }
    throw Error("InputError", "no rule derives " + target.str());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"compile, solve and audit ontology-mediated planning specs",
                 "omplan"};
    app.require_subcommand(1);

    auto add_inputs = [&](CLI::App* sub) {
        sub->add_option("--domain", cfg.domain, "planning domain file")
            ->required();
        sub->add_option("--problem", cfg.problem, "planning problem file")
            ->required();
        sub->add_option("--ontology", cfg.ontology, "static ontology file")
            ->required();
        sub->add_option("--fluents", cfg.fluents, "fluent interface file")
            ->required();
        sub->add_option("--queries", cfg.queries, "query interface file")
            ->required();
        sub->add_option("--node-limit", cfg.node_limit,
                        "tableau work units per reasoner call");
        sub->add_flag("--una", cfg.una,
                      "treat all named individuals as pairwise distinct");
    };
    auto add_compile_opts = [&](CLI::App* sub) {
        sub->add_flag("--block-inconsistent", cfg.block_inconsistent,
                      "forbid actions from entering inconsistent states");
        sub->add_flag("--variable-rules", cfg.variable_rules,
                      "emit one variable-headed rule per query predicate");
        sub->add_flag("--simplify", cfg.simplify,
                      "prune subsumed disjuncts and trivial connectives");
        sub->add_option("--jobs", cfg.jobs, "justification worker threads");
        sub->add_option("--hst-limit", cfg.hst_limit,
                        "hitting-set tree nodes per query");
        sub->add_option("--report", cfg.report, "write a JSON report here");
    };

    CLI::App* compile = app.add_subcommand(
        "compile", "translate the spec into classical PDDL with rules");
    add_inputs(compile);
    add_compile_opts(compile);
    compile->add_option("--out-domain", cfg.out_domain,
                        "write the compiled domain here (default stdout)");
    compile->add_option("--out-problem", cfg.out_problem,
                        "write the compiled problem here (default stdout)");

    CLI::App* plan =
        app.add_subcommand("plan", "compile and search for a shortest plan");
    add_inputs(plan);
    add_compile_opts(plan);
    plan->add_option("--max-nodes", cfg.max_nodes, "search node budget");
    plan->add_option("--time-limit", cfg.time_limit,
                     "search wall-clock budget in seconds");

    CLI::App* validate =
        app.add_subcommand("validate", "replay a plan file against the spec");
    add_inputs(validate);
    add_compile_opts(validate);
    validate->add_option("plan", cfg.plan_file, "plan file, one action per line")
        ->required();
    validate->add_flag("--direct", cfg.direct,
                       "validate under direct semantics instead of the "
                       "compiled rules");

    CLI::App* check = app.add_subcommand(
        "check", "report ontology consistency and interface diagnostics");
    add_inputs(check);

    CLI::App* explain = app.add_subcommand(
        "explain", "print the justifications behind a derivation rule");
    add_inputs(explain);
    explain->add_option("--hst-limit", cfg.hst_limit,
                        "hitting-set tree nodes per query");
    explain->add_option("--jobs", cfg.jobs, "justification worker threads");
    explain
        ->add_option("atom", cfg.target,
                     "query atom, e.g. '(fullHands stackBot)', or "
                     "'inconsistent'")
        ->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (compile->parsed())
            return run_compile(cfg, out, err);
        if (plan->parsed())
            return run_plan(cfg, out, err);
        if (validate->parsed())
            return run_validate(cfg, out, err);
        if (check->parsed())
            return run_check(cfg, out, err);
        return run_explain(cfg, out, err);
    } catch (const Error& e) {
        err << "error [" << e.code() << "]: " << e.what() << "\n";
        if (e.code() == "ResourceLimit")
            return 3;
        if (e.code() == "InternalError")
            return 4;
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace omp::cli
