// gta-check: reachability, safety and oracle runs on GTA model files.
//
// exit codes: 0 verdict, 1 usage or parse error, 2 safety rejection,
// 3 node budget exhausted

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gta/analysis.hh"
#include "gta/explicit.hh"
#include "gta/parser.hh"
#include "gta/reach.hh"

namespace {

enum exit_t { EXIT_VERDICT = 0, EXIT_USAGE = 1, EXIT_UNSAFE = 2, EXIT_BUDGET = 3 };

struct config_t {
    std::string path;
    bool json{false};
    bool unsafe_allow{false};
    bool assert_dagger{false};
    bool no_timing{false};
    std::size_t max_nodes{1000000};
    double time_step{0.5};
    std::string order{"bfs"};
    std::string subsumption{"simulation"};
};

std::optional<gta::model_t> load(std::string const & path)
{
    auto r = gta::parse_model_file(path);
    if (!r.ok()) {
        for (auto const & e : r.errors)
            std::cerr << path << ":" << gta::to_string(e) << "\n";
        return std::nullopt;
    }
    return std::move(*r.model);
}

std::string trace_text(std::vector<gta::trace_step_t> const & trace)
{
    if (trace.empty())
        return "(initial)";
    std::string s = trace.front().from;
    for (auto const & t : trace)
        s += " -" + t.event + "-> " + t.to;
    return s;
}

void print_violations(gta::model_t const & m, gta::safety_report_t const & rep, std::ostream & os)
{
    for (auto const & v : rep.violations) {
        os << "violation";
        if (v.transition)
            os << " (line " << m.transitions()[*v.transition].line << ", "
               << m.states()[m.transitions()[*v.transition].src].name << " -> "
               << m.states()[m.transitions()[*v.transition].dst].name << ")";
        os << ": " << v.message << "\n";
    }
}

std::string xd_text(gta::model_t const & m, gta::safety_report_t const & rep)
{
    std::string s = "{";
    bool first = true;
    for (auto x : rep.xd) {
        s += (first ? "" : ", ") + m.clocks().name(x);
        first = false;
    }
    return s + "}";
}

int cmd_safety(config_t const & cfg)
{
    auto m = load(cfg.path);
    if (!m)
        return EXIT_USAGE;
    auto rep = gta::check_safety(*m);
    if (cfg.json) {
        nlohmann::ordered_json j;
        j["safe"] = rep.safe();
        j["xd"] = nlohmann::ordered_json::array();
        for (auto x : rep.xd)
            j["xd"].push_back(m->clocks().name(x));
        j["violations"] = nlohmann::ordered_json::array();
        for (auto const & v : rep.violations)
            j["violations"].push_back(
                {{"line", v.transition ? m->transitions()[*v.transition].line : 0},
                 {"clock", m->clocks().name(v.clock)},
                 {"message", v.message}});
        std::cout << j.dump() << "\n";
    }
    else {
        std::cout << (rep.safe() ? "safe" : "unsafe") << "\n";
        std::cout << "X_D = " << xd_text(*m, rep) << "\n";
        print_violations(*m, rep, std::cout);
    }
    return rep.safe() ? EXIT_VERDICT : EXIT_UNSAFE;
}

int cmd_reach(config_t const & cfg)
{
    auto m = load(cfg.path);
    if (!m)
        return EXIT_USAGE;
    auto safety = gta::check_safety(*m);
    if (!safety.safe()) {
        if (!cfg.unsafe_allow) {
            std::cerr << "model rejected by the safety check; use --unsafe-allow to explore anyway\n";
            print_violations(*m, safety, std::cerr);
            return EXIT_UNSAFE;
        }
        std::cerr << "warning: the model is not safe, termination is not guaranteed; "
                     "verdicts that are produced remain sound\n";
    }
    gta::reach_options_t opts;
    opts.order = cfg.order == "dfs" ? gta::search_order_t::DFS : gta::search_order_t::BFS;
    if (cfg.subsumption == "inclusion")
        opts.subsumption = gta::subsumption_t::INCLUSION;
    else if (cfg.subsumption == "equality")
        opts.subsumption = gta::subsumption_t::EQUALITY;
    opts.max_nodes = cfg.max_nodes;
    opts.check_invariants = cfg.assert_dagger;
    auto rep = gta::reach(*m, opts);
    if (cfg.json) {
        std::cout << gta::to_json(rep, !cfg.no_timing) << "\n";
    }
    else {
        std::cout << gta::to_string(rep.verdict) << "\n";
        std::cout << "visited: " << rep.visited << "\n";
        std::cout << "stored: " << rep.stored << "\n";
        if (!cfg.no_timing)
            std::cout << "elapsed_ms: " << rep.elapsed_ms << "\n";
        if (rep.reachable())
            std::cout << "trace: " << trace_text(rep.trace) << "\n";
    }
    for (auto const & v : rep.invariant_violations)
        std::cerr << "invariant violation: " << v << "\n";
    if (cfg.assert_dagger && !rep.invariant_violations.empty())
        return EXIT_UNSAFE;
    return rep.verdict == gta::verdict_t::BUDGET_EXCEEDED ? EXIT_BUDGET : EXIT_VERDICT;
}

int cmd_oracle(config_t const & cfg)
{
    auto m = load(cfg.path);
    if (!m)
        return EXIT_USAGE;
    gta::explicit_options_t opts;
    opts.time_step = cfg.time_step;
    opts.max_configs = cfg.max_nodes;
    auto rep = gta::explicit_reach(*m, opts);
    if (cfg.json) {
        nlohmann::ordered_json j;
        j["found"] = rep.found;
        j["configs"] = rep.configs;
        j["trace"] = nlohmann::ordered_json::array();
        for (auto const & s : rep.trace)
            j["trace"].push_back({{"from", s.from}, {"event", s.event}, {"to", s.to}});
        std::cout << j.dump() << "\n";
    }
    else {
        std::cout << (rep.found ? "reachable" : "not found within budget") << "\n";
        std::cout << "configurations: " << rep.configs << "\n";
        if (rep.found)
            std::cout << "trace: " << trace_text(rep.trace) << "\n";
    }
    return EXIT_VERDICT;
}

int cmd_dump_gmap(config_t const & cfg)
{
    auto m = load(cfg.path);
    if (!m)
        return EXIT_USAGE;
    std::cout << gta::dump_gmap(*m, gta::compute_gmap(*m));
    return EXIT_VERDICT;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Reachability checker for generalized timed automata"};
    app.require_subcommand(1);
    config_t cfg;

    auto model_arg = [&](CLI::App * sub) { sub->add_option("model", cfg.path, "model file")->required(); };
    auto json_flag = [&](CLI::App * sub) { sub->add_flag("--json", cfg.json, "JSON output"); };

    auto reach = app.add_subcommand("reach", "decide reachability of an accepting state");
    model_arg(reach);
    json_flag(reach);
    reach->add_flag("--unsafe-allow", cfg.unsafe_allow, "explore models that fail the safety check");
    reach->add_option("--max-nodes", cfg.max_nodes, "stored node budget")->check(CLI::PositiveNumber);
    reach->add_option("--order", cfg.order, "search order")->check(CLI::IsMember({"bfs", "dfs"}));
    reach->add_option("--subsumption", cfg.subsumption, "node subsumption test")
        ->check(CLI::IsMember({"simulation", "inclusion", "equality"}));
    reach->add_flag("--assert-dagger", cfg.assert_dagger, "check zone invariants on every stored node");
    reach->add_flag("--no-timing", cfg.no_timing, "report elapsed time as 0");

    auto safety = app.add_subcommand("safety", "list safety violations and the inferred X_D");
    model_arg(safety);
    json_flag(safety);

    auto oracle = app.add_subcommand("oracle", "explicit-state search on a grid");
    model_arg(oracle);
    json_flag(oracle);
    oracle->add_option("--time-step", cfg.time_step, "delay granularity")->check(CLI::PositiveNumber);
    oracle->add_option("--max-nodes", cfg.max_nodes, "configuration budget")->check(CLI::PositiveNumber);

    auto gmap = app.add_subcommand("dump-gmap", "print the constraint set of every state");
    model_arg(gmap);

    try {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const & e) {
        return app.exit(e);
    }
    catch (CLI::ParseError const & e) {
        app.exit(e);
        return EXIT_USAGE;
    }

    try {
        if (reach->parsed())
            return cmd_reach(cfg);
        if (safety->parsed())
            return cmd_safety(cfg);
        if (oracle->parsed())
            return cmd_oracle(cfg);
        return cmd_dump_gmap(cfg);
    }
    catch (std::exception const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
}
