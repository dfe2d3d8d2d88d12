#include <algorithm>
#include <cstdlib>

#include "gta/dbm.hh"
#include "gta/model.hh"

namespace gta {

std::string to_string(model_kind_t k)
{
    switch (k) {
    case model_kind_t::TA:
        return "ta";
    case model_kind_t::ECA:
        return "eca";
    case model_kind_t::TIMER:
        return "timer";
    case model_kind_t::GTA:
        break;
    }
    return "gta";
}

model_t::model_t() : clocks_(std::make_shared<clock_table_t>()) {}

std::size_t model_t::add_state(std::string const & name, bool initial, bool accepting)
{
    if (find_state(name))
        throw std::invalid_argument("duplicate state " + name);
    states_.push_back({name, initial, accepting});
    return states_.size() - 1;
}

std::size_t model_t::add_event(std::string const & name)
{
    if (find_event(name))
        throw std::invalid_argument("duplicate event " + name);
    events_.push_back(name);
    return events_.size() - 1;
}

std::size_t model_t::add_transition(std::size_t src, std::size_t dst, std::size_t event, program_t prog)
{
    if (src >= states_.size() || dst >= states_.size() || event >= events_.size())
        throw std::out_of_range("transition refers to an unknown state or event");
    transition_t t;
    t.src = src;
    t.dst = dst;
    t.event = event;
    t.prog = std::move(prog);
    transitions_.push_back(std::move(t));
    return transitions_.size() - 1;
}

std::optional<std::size_t> model_t::find_state(std::string const & name) const
{
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i].name == name)
            return i;
    return std::nullopt;
}

std::optional<std::size_t> model_t::find_event(std::string const & name) const
{
    for (std::size_t i = 0; i < events_.size(); ++i)
        if (events_[i] == name)
            return i;
    return std::nullopt;
}

std::size_t model_t::initial_state() const
{
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i].initial)
            return i;
    throw std::logic_error("model has no initial state");
}

std::vector<constraint_t> all_constraints(model_t const & m)
{
    std::vector<constraint_t> out(m.init.begin(), m.init.end());
    out.insert(out.end(), m.final.begin(), m.final.end());
    for (auto const & t : m.transitions())
        for (auto const & item : t.prog)
            if (auto g = std::get_if<guard_t>(&item))
                out.insert(out.end(), g->begin(), g->end());
    return out;
}

bound_t max_constant(model_t const & m)
{
    bound_t k = 0;
    for (auto const & c : all_constraints(m))
        if (c.w.is_finite())
            k = std::max(k, std::abs(c.w.value()));
    return k;
}

clock_is_timer_error::clock_is_timer_error(clock_id_t x, std::string const & name)
    : std::invalid_argument("timer " + name + " occurs in a diagonal between future clocks"), clock(x)
{
}

std::set<clock_id_t> infer_xd(model_t const & m)
{
    auto const & clocks = m.clocks();
    std::set<clock_id_t> xd;
    for (auto const & c : all_constraints(m)) {
        if (!c.is_diagonal() || c.is_trivial() || !clocks.is_future(c.x) || !clocks.is_future(c.y))
            continue;
        for (clock_id_t z : {c.x, c.y}) {
            if (clocks.is_timer(z))
                throw clock_is_timer_error(z, clocks.name(z));
            xd.insert(z);
        }
    }
    return xd;
}

namespace {

bool pinned_to(distance_graph_t const & g, clock_id_t x, bool zero)
{
    if (zero)
        return !(weight_t::zero() < g(0, x)) && !(weight_t::zero() < g(x, 0));
    return g(0, x) == weight_t::le_neg_inf();
}

} // namespace

safety_report_t check_safety(model_t const & m)
{
    safety_report_t rep;
    auto const & clocks = m.clocks();
    auto ptr = m.clocks_ptr();

    for (auto const & c : all_constraints(m)) {
        if (!c.is_diagonal() || c.is_trivial() || !clocks.is_future(c.x) || !clocks.is_future(c.y))
            continue;
        for (clock_id_t z : {c.x, c.y}) {
            if (clocks.is_timer(z)) {
                rep.violations.push_back({safety_violation_t::reason_t::TIMER_DIAGONAL, std::nullopt, z,
                                          "timer " + clocks.name(z) + " occurs in a future-future diagonal"});
                continue;
            }
            rep.xd.insert(z);
        }
    }

    auto init = canonical(ptr, m.init);
    if (!init.is_empty()) {
        for (clock_id_t h : clocks.history())
            if (!pinned_to(init, h, true) && init(h, 0) != weight_t::le_neg_inf())
                rep.violations.push_back({safety_violation_t::reason_t::UNPINNED_HISTORY, std::nullopt, h,
                                          "initial guard does not set " + clocks.name(h) + " to 0 or inf"});
    }

    for (std::size_t ti = 0; ti < m.transitions().size(); ++ti) {
        auto const & t = m.transitions()[ti];
        guard_t acc;
        for (std::size_t i = 0; i < t.prog.size(); ++i) {
            if (auto g = std::get_if<guard_t>(&t.prog[i])) {
                acc.insert(acc.end(), g->begin(), g->end());
                continue;
            }
            auto const & r = std::get<change_t>(t.prog[i]);
            std::vector<clock_id_t> risky;
            for (clock_id_t x : r.clocks)
                if (rep.xd.count(x))
                    risky.push_back(x);
            if (!risky.empty()) {
                auto z = canonical(ptr, acc);
                for (clock_id_t x : risky) {
                    if (z.is_empty() || pinned_to(z, x, true) || pinned_to(z, x, false))
                        continue;
                    rep.violations.push_back({safety_violation_t::reason_t::UNGUARDED_RELEASE, ti, x,
                                              "clock " + clocks.name(x) + " released at item " +
                                                  std::to_string(i + 1) +
                                                  " without being checked to be 0 or -inf"});
                }
            }
            acc.clear();
        }
    }
    return rep;
}

program_t ta_program(guard_t g, std::vector<clock_id_t> const & resets)
{
    program_t p{std::move(g)};
    if (!resets.empty())
        p.push_back(change_t{resets});
    return p;
}

program_t eca_program(clock_id_t history, clock_id_t future, guard_t g)
{
    return {equals(future, weight_t::zero()), change_t{{future}}, std::move(g), change_t{{history}}};
}

program_t timer_set(clock_id_t t, bound_t c)
{
    return {equals(t, weight_t::le_neg_inf()), change_t{{t}}, equals(t, weight_t::le(-c))};
}

program_t timer_timeout(clock_id_t t)
{
    return {equals(t, weight_t::zero()), change_t{{t}}, equals(t, weight_t::le_neg_inf())};
}

program_t timer_stop(clock_id_t t) { return {change_t{{t}}, equals(t, weight_t::le_neg_inf())}; }

std::optional<guard_t> default_init(model_kind_t k, clock_table_t const & clocks)
{
    guard_t g;
    switch (k) {
    case model_kind_t::TA:
        for (clock_id_t h : clocks.history()) {
            auto e = equals(h, weight_t::zero());
            g.insert(g.end(), e.begin(), e.end());
        }
        return g;
    case model_kind_t::ECA:
        for (clock_id_t h : clocks.history()) {
            auto e = equals(h, weight_t::le_inf());
            g.insert(g.end(), e.begin(), e.end());
        }
        return g;
    case model_kind_t::TIMER:
        for (clock_id_t f : clocks.future()) {
            auto e = equals(f, weight_t::le_neg_inf());
            g.insert(g.end(), e.begin(), e.end());
        }
        return g;
    case model_kind_t::GTA:
        break;
    }
    return std::nullopt;
}

guard_t default_final(model_kind_t k, clock_table_t const & clocks)
{
    guard_t g;
    if (k == model_kind_t::ECA)
        for (clock_id_t f : clocks.future()) {
            auto e = equals(f, weight_t::le_neg_inf());
            g.insert(g.end(), e.begin(), e.end());
        }
    return g;
}

std::string history_clock_name(std::string const & event) { return "H_" + event; }

std::string future_clock_name(std::string const & event) { return "P_" + event; }

model_t toy_eca(bound_t k, std::size_t n, bool loops_first)
{
    model_t m;
    m.name = "toyeca_" + std::to_string(k) + "_" + std::to_string(n);
    m.kind = model_kind_t::ECA;
    std::vector<std::string> evs{"a", "b"};
    for (std::size_t i = 1; i <= n; ++i)
        evs.push_back("c" + std::to_string(i));
    std::vector<std::pair<clock_id_t, clock_id_t>> cl;
    for (auto const & e : evs) {
        m.add_event(e);
        clock_id_t h = m.clocks().add(history_clock_name(e), clock_sort_t::HISTORY);
        clock_id_t f = m.clocks().add(future_clock_name(e), clock_sort_t::FUTURE);
        cl.push_back({h, f});
    }
    std::size_t q0 = m.add_state("q0", true);
    std::size_t q1 = m.add_state("q1");
    std::size_t q2 = m.add_state("q2", false, true);
    auto ev = [&](std::size_t i) { return cl[i]; };
    m.add_transition(q0, q1, 0, eca_program(ev(0).first, ev(0).second, {}));
    auto loop = [&](std::size_t e, clock_id_t target) {
        guard_t g = equals(ev(0).first, weight_t::le(1));
        g.push_back(upper(target, weight_t::le(-k)));
        m.add_transition(q1, q1, e, eca_program(ev(e).first, ev(e).second, g));
    };
    if (!loops_first)
        m.add_transition(q1, q2, 1, eca_program(ev(1).first, ev(1).second, {}));
    loop(0, ev(1).second);
    for (std::size_t i = 0; i < n; ++i)
        loop(2 + i, ev(2 + i).second);
    if (loops_first)
        m.add_transition(q1, q2, 1, eca_program(ev(1).first, ev(1).second, {}));
    m.init = *default_init(m.kind, m.clocks());
    m.final = default_final(m.kind, m.clocks());
    return m;
}

} // namespace gta
