// Acceptance suite: one PASS or FAIL line per criterion, exit status 1 if
// any criterion fails. Every randomized part uses a fixed seed.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hh"
#include "gta/dbm.hh"
#include "gta/explicit.hh"
#include "gta/model.hh"
#include "gta/reach.hh"
#include "gta/simulation.hh"
#include "oracle.hh"

using namespace gta;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct outcome_t {
    bool ok{true};
    std::ostringstream detail;

    void fail(std::string const & why)
    {
        detail << why << "; ";
        ok = false;
    }
};

int failures = 0;

void report(int n, std::string const & title, std::function<void(outcome_t &)> const & body)
{
    outcome_t o;
    auto t0 = clock_type::now();
    try {
        body(o);
    }
    catch (std::exception const & e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double s = seconds_since(t0);
    std::printf("%s criterion %d: %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", n, title.c_str(), s,
                o.detail.str().empty() ? "" : " -- ", o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.ok)
        ++failures;
}

// ---------------------------------------------------------------- weights

// rank of the five classes and the precedence of absorbing sums
enum class wclass_t { LT_NEG_INF, LE_NEG_INF, FINITE, LT_INF, LE_INF };

wclass_t class_of(weight_t w)
{
    if (w.is_finite())
        return wclass_t::FINITE;
    if (w.is_neg_inf())
        return w.is_strict() ? wclass_t::LT_NEG_INF : wclass_t::LE_NEG_INF;
    return w.is_strict() ? wclass_t::LT_INF : wclass_t::LE_INF;
}

int order_rank(wclass_t c) { return static_cast<int>(c); }

int sum_precedence(wclass_t c)
{
    switch (c) {
    case wclass_t::LT_NEG_INF:
        return 4;
    case wclass_t::LE_INF:
        return 3;
    case wclass_t::LE_NEG_INF:
        return 2;
    case wclass_t::LT_INF:
        return 1;
    case wclass_t::FINITE:
        break;
    }
    return 0;
}

bool expected_less(weight_t a, weight_t b)
{
    auto ca = class_of(a), cb = class_of(b);
    if (ca != cb)
        return order_rank(ca) < order_rank(cb);
    if (ca != wclass_t::FINITE)
        return false;
    if (a.value() != b.value())
        return a.value() < b.value();
    return a.is_strict() && !b.is_strict();
}

weight_t expected_sum(weight_t a, weight_t b)
{
    auto ca = class_of(a), cb = class_of(b);
    if (ca == wclass_t::FINITE && cb == wclass_t::FINITE) {
        bound_t c = a.value() + b.value();
        return (a.is_strict() || b.is_strict()) ? weight_t::lt(c) : weight_t::le(c);
    }
    return sum_precedence(ca) >= sum_precedence(cb) ? a : b;
}

void criterion_1(outcome_t & o)
{
    std::vector<weight_t> all{weight_t::lt_neg_inf(), weight_t::le_neg_inf(), weight_t::lt_inf(), weight_t::le_inf()};
    for (bound_t c = -5; c <= 5; ++c) {
        all.push_back(weight_t::lt(c));
        all.push_back(weight_t::le(c));
    }
    // the chain itself
    std::vector<weight_t> chain{weight_t::lt_neg_inf(), weight_t::le_neg_inf(), weight_t::lt(-7), weight_t::le(-7),
                                weight_t::lt(0),        weight_t::le(0),        weight_t::lt(9),  weight_t::le(9),
                                weight_t::lt_inf(),     weight_t::le_inf()};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (weight_cmp(chain[i], chain[i + 1]) != ordering_t::LESS)
            o.fail("chain broken at " + to_string(chain[i]));
    std::size_t pairs = 0;
    for (auto a : all)
        for (auto b : all) {
            ++pairs;
            ordering_t want = expected_less(a, b) ? ordering_t::LESS
                              : expected_less(b, a) ? ordering_t::GREATER
                                                    : ordering_t::EQUAL;
            if (weight_cmp(a, b) != want)
                o.fail("order " + to_string(a) + " vs " + to_string(b));
            if (weight_add(a, b) != expected_sum(a, b))
                o.fail("sum " + to_string(a) + " + " + to_string(b) + " = " + to_string(weight_add(a, b)));
        }
    o.detail << pairs << " pairs over the five classes";
}

// ------------------------------------------------------- zones vs semantics

clock_table_ptr_t random_table(std::mt19937 & rng, std::size_t max_clocks)
{
    std::uniform_int_distribution<std::size_t> count(1, max_clocks);
    std::string sorts;
    std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i)
        sorts += (rng() % 2) ? 'h' : 'f';
    return make_clock_table(sorts);
}

distance_graph_t random_zone(std::mt19937 & rng, clock_table_ptr_t const & t, int k)
{
    std::uniform_int_distribution<int> atoms(0, 4);
    guard_t g;
    int n = atoms(rng);
    for (int i = 0; i < n; ++i)
        g.push_back(oracle::random_constraint(rng, *t, k));
    return canonical(t, g);
}

change_t random_change(std::mt19937 & rng, clock_table_t const & t)
{
    change_t r;
    for (clock_id_t x = 1; x < t.size(); ++x)
        if (rng() % 3 == 0)
            r.clocks.push_back(x);
    return r;
}

std::vector<std::vector<oracle::qval_t>> half_grid(clock_table_t const & t)
{
    return oracle::valuation_grid(t, oracle::sort_values(true, 0, 16, 2), oracle::sort_values(false, -16, 0, 2));
}

bool in_change(change_t const & r, clock_id_t x)
{
    return std::find(r.clocks.begin(), r.clocks.end(), x) != r.clocks.end();
}

void criterion_2_and_4(outcome_t & o2, outcome_t & o4)
{
    std::mt19937 rng(20240501);
    constexpr int CASES = 12000;
    std::size_t points = 0, nonempty = 0, changes = 0;
    for (int i = 0; i < CASES; ++i) {
        auto t = random_table(rng, 3);
        auto z = random_zone(rng, t, 3);
        auto ez = oracle::edges_of(z);
        auto grid = half_grid(*t);
        if (!z.is_empty())
            ++nonempty;

        // the closed form of changes against surgery, on every case
        auto rr = random_change(rng, *t);
        if (!z.is_empty()) {
            ++changes;
            if (apply_change_zone(z, rr) != apply_change_surgery(z, rr))
                o4.fail("closed form differs from surgery on case " + std::to_string(i));
        }

        int op = i % 3;
        distance_graph_t result = z;
        guard_t g;
        std::vector<oracle::oc_t> og;
        if (op == 0) {
            int n = 1 + static_cast<int>(rng() % 3);
            for (int k = 0; k < n; ++k)
                g.push_back(oracle::random_constraint(rng, *t, 3));
            for (auto const & c : g)
                og.push_back(oracle::from_constraint(c));
            result = guard_intersect(z, g);
        }
        else if (op == 1) {
            result = apply_change_zone(z, rr);
        }
        else {
            result = time_elapse(z);
        }

        for (auto const & q : grid) {
            ++points;
            bool expected;
            if (op == 0) {
                expected = oracle::sat(q, ez) && oracle::sat(q, og);
            }
            else if (op == 1) {
                expected = true;
                std::vector<std::optional<oracle::qval_t>> known(t->size());
                known[0] = oracle::fin(0);
                for (clock_id_t x = 1; x < t->size(); ++x) {
                    if (!in_change(rr, x))
                        known[x] = q[x];
                    else if (t->is_history(x) && !(q[x] == oracle::fin(0)))
                        expected = false;
                }
                expected = expected && oracle::exists_completion(*t, known, ez);
            }
            else {
                expected = oracle::exists_past(*t, q, ez);
            }
            if (membership(result, oracle::to_valuation(q)) != expected) {
                static char const * names[] = {"guard_intersect", "apply_change_zone", "time_elapse"};
                o2.fail(std::string(names[op]) + " disagrees on case " + std::to_string(i));
            }
        }
    }
    o2.detail << CASES << " cases, " << nonempty << " non-empty zones, " << points << " grid points";
    o4.detail << changes << " non-empty cases";
}

// ------------------------------------------------- emptiness and cycles

void criterion_3(outcome_t & o)
{
    // the raw graph hides the contradiction until standardized
    auto ff = make_clock_table("ff");
    guard_t hidden{diagonal(2, 1, weight_t::le(1)), upper(1, weight_t::le_neg_inf())};
    auto raw = from_constraints(ff, hidden);
    if (has_negative_cycle(raw))
        o.fail("raw example graph already has a negative cycle");
    if (!has_negative_cycle(standardize(raw)))
        o.fail("standardized example graph has no negative cycle");
    if (oracle::exists_completion(*ff, {oracle::fin(0), std::nullopt, std::nullopt},
                                  {oracle::from_constraint(hidden[0]), oracle::from_constraint(hidden[1])}))
        o.fail("oracle finds the example satisfiable");

    std::mt19937 rng(31337);
    int cases = 0, empties = 0;
    for (int i = 0; i < 20000; ++i) {
        auto t = random_table(rng, 3);
        guard_t g;
        int n = 1 + static_cast<int>(rng() % 5);
        for (int k = 0; k < n; ++k) {
            auto c = oracle::random_constraint(rng, *t, 3);
            if (!c.w.is_false())
                g.push_back(c);
        }
        auto s = standardize(from_constraints(t, g));
        std::vector<std::optional<oracle::qval_t>> known(t->size());
        known[0] = oracle::fin(0);
        std::vector<oracle::oc_t> og;
        for (auto const & c : g)
            og.push_back(oracle::from_constraint(c));
        bool empty = !oracle::exists_completion(*t, known, og);
        ++cases;
        empties += empty ? 1 : 0;
        if (has_negative_cycle(s) != empty)
            o.fail("negative cycle test wrong on case " + std::to_string(i));
        if (normalize(s).is_empty() != empty)
            o.fail("normalization wrong on case " + std::to_string(i));
    }
    o.detail << cases << " standard graphs, " << empties << " empty";
}

// -------------------------------------------------------------- simulation

constraint_set_t random_g(std::mt19937 & rng, clock_table_t const & t, int diagonals)
{
    constraint_set_t g;
    int others = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < diagonals; ++i) {
        constraint_t c;
        do
            c = oracle::random_constraint(rng, t, 3);
        while (!c.is_diagonal());
        g.insert(c);
    }
    for (int i = 0; i < others; ++i)
        g.insert(oracle::random_constraint(rng, t, 3, false));
    return g;
}

distance_graph_t nonempty_zone(std::mt19937 & rng, clock_table_ptr_t const & t)
{
    for (;;) {
        auto z = random_zone(rng, t, 3);
        if (!z.is_empty())
            return z;
    }
}

void criterion_5(outcome_t & o)
{
    std::mt19937 rng(555);
    constexpr int TRIPLES = 1200;
    int positives = 0, diag_cases = 0;
    for (int i = 0; i < TRIPLES; ++i) {
        std::string sorts;
        std::size_t n = 1 + static_cast<std::size_t>(i % 3);
        for (std::size_t k = 0; k < n; ++k)
            sorts += (rng() % 2) ? 'h' : 'f';
        auto t = make_clock_table(sorts);
        int max_diag = n >= 2 ? 2 : 0;
        int diagonals = max_diag ? static_cast<int>(rng() % (max_diag + 1)) : 0;
        diag_cases += diagonals > 0 ? 1 : 0;
        auto z = nonempty_zone(rng, t);
        // half of the time Z' is a small perturbation of Z, so that both
        // answers occur often
        distance_graph_t zp = nonempty_zone(rng, t);
        if (i % 2 == 0) {
            guard_t extra{oracle::random_constraint(rng, *t, 3)};
            auto tighter = guard_intersect(z, extra);
            if (!tighter.is_empty())
                zp = tighter;
        }
        auto g = random_g(rng, *t, diagonals);

        bool lib = zone_simulated(z, g, zp);

        // quarter grid over [-(M+3), M+3]; future clocks pinned by the base set
        auto gg = g;
        for (clock_id_t f : t->future()) {
            gg.insert(upper(f, weight_t::zero()));
            gg.insert(lower(f, weight_t::zero()));
        }
        std::vector<oracle::oc_t> og;
        for (auto const & c : gg)
            og.push_back(oracle::from_constraint(c));
        auto grid = oracle::valuation_grid(*t, oracle::sort_values(true, 0, 24, 1), oracle::sort_values(false, -24, 0, 1));
        bool ref = oracle::zone_simulated(*t, grid, oracle::edges_of(z), og, oracle::edges_of(zp));
        positives += lib ? 1 : 0;
        if (lib != ref) {
            std::ostringstream os;
            os << "triple " << i << " (" << sorts << "): library " << lib << ", oracle " << ref;
            o.fail(os.str());
        }
    }
    o.detail << TRIPLES << " triples, " << positives << " simulated, " << diag_cases << " with diagonals in G";
}

// ---------------------------------------------------------------- corpus

struct corpus_entry_t {
    std::string name;
    model_t model;
};

std::vector<corpus_entry_t> safe_corpus()
{
    std::vector<corpus_entry_t> out;
    for (char const * f : {"toyeca_10_2.gta", "timer_loop.gta", "clock_loop.gta", "abp_sender.gta",
                           "fire_alarm_eca.gta", "fire_alarm_k4.gta", "fire_alarm_k5.gta"})
        out.push_back({f, corpus::load(f)});
    out.push_back({"toyeca(100,4)", toy_eca(100, 4)});
    out.push_back({"toyeca(1000,4)", toy_eca(1000, 4)});
    out.push_back({"fischer(1,2)", corpus::load_text(corpus::fischer_text(1, 2))});
    out.push_back({"fischer(2,1)", corpus::load_text(corpus::fischer_text(2, 1))});
    out.push_back({"csma(<3)", corpus::load_text(corpus::csma_text(3, true))});
    out.push_back({"csma(<=3)", corpus::load_text(corpus::csma_text(3, false))});
    return out;
}

void criterion_6(outcome_t & o)
{
    std::size_t nodes = 0;
    for (auto const & e : safe_corpus()) {
        auto safety = check_safety(e.model);
        if (!safety.safe()) {
            o.fail(e.name + " is not safe");
            continue;
        }
        bound_t n = std::max<bound_t>(1, static_cast<bound_t>(safety.xd.size()));
        bound_t m = max_constant(e.model);
        std::size_t bad = 0;
        reach_options_t opts;
        opts.on_store = [&](node_t const & nd) {
            ++nodes;
            bad += check_dagger(nd.zone, n, m).size();
            bad += check_reachable_props(nd.zone).size();
        };
        auto r = reach(e.model, opts);
        if (r.verdict == verdict_t::BUDGET_EXCEEDED)
            o.fail(e.name + " exceeded the node budget");
        if (bad)
            o.fail(e.name + ": " + std::to_string(bad) + " violations");
    }
    o.detail << nodes << " stored nodes checked";
}

void criterion_7(outcome_t & o)
{
    auto timer = corpus::load("timer_loop.gta");
    auto r = reach(timer);
    if (r.verdict != verdict_t::UNREACHABLE)
        o.fail("timer automaton: " + to_string(r.verdict));
    if (r.stored > 5)
        o.fail("timer automaton stored " + std::to_string(r.stored) + " nodes");

    reach_options_t plain;
    plain.subsumption = subsumption_t::EQUALITY;
    plain.max_nodes = 10000;
    auto ta = reach(corpus::load("clock_loop.gta"), plain);
    if (ta.verdict != verdict_t::BUDGET_EXCEEDED)
        o.fail("clock analogue without subsumption: " + to_string(ta.verdict));
    o.detail << "timer: " << to_string(r.verdict) << " with " << r.stored << " stored; clock analogue: "
             << to_string(ta.verdict) << " after " << ta.stored << " stored";
}

bool explicit_agrees(model_t const & m, reach_report_t const & r, std::size_t budget, std::string & why)
{
    explicit_options_t eo;
    eo.max_configs = budget;
    auto e = explicit_reach(m, eo);
    if (r.reachable() && !e.found) {
        why = "explicit search found no run";
        return false;
    }
    if (!r.reachable() && e.found) {
        why = "explicit search found a run";
        return false;
    }
    return true;
}

void criterion_8(outcome_t & o)
{
    struct toy_t {
        bound_t k;
        std::size_t n;
    };
    for (auto [k, n] : {toy_t{10, 2}, toy_t{100, 4}, toy_t{1000, 4}}) {
        auto m = toy_eca(k, n);
        auto t0 = clock_type::now();
        auto r = reach(m);
        double s = seconds_since(t0);
        std::string name = "toyeca(" + std::to_string(k) + "," + std::to_string(n) + ")";
        if (!r.reachable() || r.visited != 3 || r.stored != 3)
            o.fail(name + ": visited " + std::to_string(r.visited) + " stored " + std::to_string(r.stored));
        if (s >= 1.0)
            o.fail(name + " took " + std::to_string(s) + "s");
    }
    // the file version of the first row
    auto file = reach(corpus::load("toyeca_10_2.gta"));
    if (file.visited != 3 || file.stored != 3)
        o.fail("toyeca_10_2.gta counts differ");

    struct net_t {
        std::string name;
        std::string text;
        bool expected;
    };
    std::vector<net_t> nets{{"fischer(1,2)", corpus::fischer_text(1, 2), false},
                            {"fischer(2,1)", corpus::fischer_text(2, 1), true},
                            {"csma(<3)", corpus::csma_text(3, true), false},
                            {"csma(<=3)", corpus::csma_text(3, false), true}};
    for (auto const & net : nets) {
        auto m = corpus::load_text(net.text);
        auto r = reach(m);
        if (r.verdict == verdict_t::BUDGET_EXCEEDED || r.reachable() != net.expected)
            o.fail(net.name + ": " + to_string(r.verdict));
        std::string why;
        if (!explicit_agrees(m, r, 30000, why))
            o.fail(net.name + ": " + why);
        o.detail << net.name << " " << to_string(r.verdict) << " (" << r.stored << " stored); ";
    }
}

void criterion_9(outcome_t & o)
{
    auto cm = corpus::load("counter_machine.gta");
    auto rep = check_safety(cm);
    if (rep.safe())
        o.fail("counter machine accepted");
    std::set<std::string> programs;
    for (auto const & v : rep.violations)
        if (v.transition && v.reason == safety_violation_t::reason_t::UNGUARDED_RELEASE)
            programs.insert(cm.events()[cm.transitions()[*v.transition].event]);
    if (programs != std::set<std::string>{"inc", "dec"})
        o.fail("violations do not cover both inc and dec");

    auto pattern = corpus::load("fire_alarm_eca.gta");
    if (!check_safety(pattern).safe())
        o.fail("event-clock pattern rejected");
    for (auto [file, expected] : {std::pair<char const *, bool>{"fire_alarm_k4.gta", false}, {"fire_alarm_k5.gta", true}}) {
        auto m = corpus::load(file);
        if (!check_safety(m).safe())
            o.fail(std::string(file) + " rejected");
        auto r = reach(m);
        if (r.verdict == verdict_t::BUDGET_EXCEEDED || r.reachable() != expected)
            o.fail(std::string(file) + ": " + to_string(r.verdict));
        std::string why;
        if (!explicit_agrees(m, r, 100000, why))
            o.fail(std::string(file) + ": " + why);
        o.detail << file << " " << to_string(r.verdict) << "; ";
    }
    o.detail << rep.violations.size() << " counter machine violations";
}

bool anbn_shape(std::vector<trace_step_t> const & trace)
{
    std::size_t i = 0, a = 0, b = 0;
    while (i < trace.size() && trace[i].event == "a")
        ++i, ++a;
    while (i < trace.size() && trace[i].event == "b")
        ++i, ++b;
    return i == trace.size() && b >= 1 && b <= a;
}

void criterion_10(outcome_t & o)
{
    auto m = corpus::load("anbn.gta");
    if (check_safety(m).safe())
        o.fail("a^n b^m model is expected to be unsafe");
    auto r = reach(m);
    if (!r.reachable())
        o.fail("reach: " + to_string(r.verdict));
    if (!anbn_shape(r.trace))
        o.fail("trace is not of the form a^n b^m with m <= n");
    auto e = explicit_reach(m);
    if (!e.found)
        o.fail("explicit search found no run");
    else if (!anbn_shape(e.trace))
        o.fail("explicit trace is not of the form a^n b^m");
    std::string word;
    for (auto const & s : r.trace)
        word += s.event;
    o.detail << "witness " << word;
}

template <class F>
void timed(outcome_t & o, double limit, F && f)
{
    auto t0 = clock_type::now();
    f(o);
    double s = seconds_since(t0);
    if (s >= limit)
        o.fail("took " + std::to_string(s) + "s, limit " + std::to_string(limit) + "s");
}

} // namespace

int main()
{
    report(1, "weight order and sums", [](outcome_t & o) { timed(o, 1.0, criterion_1); });

    outcome_t o4;
    report(2, "zone operations against set semantics on the half grid",
           [&](outcome_t & o) { timed(o, 60.0, [&](outcome_t & oo) { criterion_2_and_4(oo, o4); }); });
    report(3, "emptiness iff negative cycle on standard graphs", criterion_3);
    report(4, "closed-form changes equal surgery and normalization", [&](outcome_t & o) {
        if (!o4.ok)
            o.fail(o4.detail.str());
        else
            o.detail << o4.detail.str();
    });
    report(5, "zone simulation against the grid oracle", [](outcome_t & o) { timed(o, 120.0, criterion_5); });
    report(6, "dagger conditions on stored nodes of safe models", criterion_6);
    report(7, "timer fixed point against the diverging clock analogue",
           [](outcome_t & o) { timed(o, 5.0, criterion_7); });
    report(8, "toy ECA counts and network verdicts", criterion_8);
    report(9, "safety gate and the fire alarm pattern", criterion_9);
    report(10, "a^n b^m witness under the unsafe override", [](outcome_t & o) { timed(o, 5.0, criterion_10); });
    return failures ? 1 : 0;
}
