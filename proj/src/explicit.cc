#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>

#include "gta/explicit.hh"

namespace gta {

std::vector<ext_real_t> future_grid(double bound, double step)
{
    std::vector<ext_real_t> g{ext_real_t::neg_inf()};
    long n = std::lround(bound / step);
    for (long i = n; i >= 0; --i)
        g.push_back(ext_real_t(-static_cast<double>(i) * step));
    return g;
}

namespace {

struct config_t {
    std::size_t state;
    valuation_t val;
    auto operator<=>(config_t const &) const = default;
};

void initial_values(model_t const & m, std::vector<ext_real_t> const & hist, std::vector<ext_real_t> const & fut,
                    valuation_t & cur, clock_id_t x, std::vector<valuation_t> & out)
{
    auto const & clocks = m.clocks();
    if (x == clocks.size()) {
        if (satisfies(cur, m.init))
            out.push_back(cur);
        return;
    }
    for (ext_real_t a : clocks.is_history(x) ? hist : fut) {
        cur[x] = a;
        // prune on constraints over the clocks fixed so far
        bool ok = true;
        for (auto const & c : m.init)
            if (c.x <= x && c.y <= x && !satisfies(cur, c)) {
                ok = false;
                break;
            }
        if (ok)
            initial_values(m, hist, fut, cur, x + 1, out);
    }
}

} // namespace

explicit_report_t explicit_reach(model_t const & m, explicit_options_t const & opts)
{
    auto const & clocks = m.clocks();
    double mc = static_cast<double>(max_constant(m));
    double step = opts.time_step;
    double max_delay = opts.max_delay < 0 ? mc + 1 : opts.max_delay;
    auto grid = opts.release_grid.empty() ? future_grid(mc + 1, step) : opts.release_grid;

    std::vector<ext_real_t> hist;
    for (double d = 0; d <= mc + 1 + 1e-9; d += step)
        hist.push_back(ext_real_t(d));
    hist.push_back(ext_real_t::pos_inf());

    explicit_report_t rep;
    std::vector<config_t> configs;
    std::vector<std::pair<std::size_t, std::size_t>> links;
    std::map<config_t, std::size_t> index;
    std::deque<std::size_t> queue;

    auto accepting = [&](config_t const & c) {
        if (!m.is_accepting(c.state))
            return false;
        for (double d = 0; d <= max_delay + 1e-9; d += step) {
            if (!can_delay(c.val, clocks, d))
                break;
            if (satisfies(shift(c.val, d), m.final))
                return true;
        }
        return false;
    };
    auto finish = [&](std::size_t i) {
        rep.found = true;
        std::vector<trace_step_t> steps;
        while (links[i].first != i) {
            auto const & t = m.transitions()[links[i].second];
            steps.push_back({m.states()[t.src].name, m.events()[t.event], m.states()[t.dst].name});
            i = links[i].first;
        }
        rep.trace.assign(steps.rbegin(), steps.rend());
        rep.configs = configs.size();
        return rep;
    };
    auto add = [&](config_t c, std::size_t from, std::size_t t) -> std::optional<std::size_t> {
        if (index.count(c))
            return std::nullopt;
        std::size_t i = configs.size();
        index.emplace(c, i);
        configs.push_back(c);
        links.push_back({from == SIZE_MAX ? i : from, t});
        return i;
    };

    std::vector<valuation_t> init;
    valuation_t cur(clocks.size());
    initial_values(m, hist, grid, cur, 1, init);
    std::size_t q0 = m.initial_state();
    for (auto const & v : init) {
        auto i = add({q0, v}, SIZE_MAX, 0);
        if (!i)
            continue;
        if (accepting(configs[*i]))
            return finish(*i);
        queue.push_back(*i);
    }

    while (!queue.empty()) {
        std::size_t ci = queue.front();
        queue.pop_front();
        config_t c = configs[ci];
        for (double d = 0; d <= max_delay + 1e-9; d += step) {
            if (!can_delay(c.val, clocks, d))
                break;
            valuation_t vd = shift(c.val, d);
            for (std::size_t ti = 0; ti < m.transitions().size(); ++ti) {
                auto const & t = m.transitions()[ti];
                if (t.src != c.state)
                    continue;
                for (auto & w : run_program(vd, clocks, t.prog, grid)) {
                    auto i = add({t.dst, std::move(w)}, ci, ti);
                    if (!i)
                        continue;
                    if (accepting(configs[*i]))
                        return finish(*i);
                    if (configs.size() >= opts.max_configs) {
                        rep.configs = configs.size();
                        return rep;
                    }
                    queue.push_back(*i);
                }
            }
        }
    }
    rep.configs = configs.size();
    return rep;
}

} // namespace gta
