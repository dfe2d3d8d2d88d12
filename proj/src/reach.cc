#include <chrono>
#include <deque>

#include "json.hpp"

#include "gta/reach.hh"
#include "gta/simulation.hh"

namespace gta {

node_t initial_node(model_t const & m)
{
    guard_t g = m.init;
    for (clock_id_t f : m.clocks().future())
        g.push_back(upper(f, weight_t::zero()));
    for (clock_id_t h : m.clocks().history())
        g.push_back(lower(h, weight_t::zero()));
    auto z = canonical(m.clocks_ptr(), g);
    if (z.is_empty())
        throw empty_initial_error();
    return {m.initial_state(), time_elapse(z), std::nullopt, 0};
}

distance_graph_t successor(distance_graph_t const & z, transition_t const & t)
{
    distance_graph_t cur = z;
    for (auto const & item : t.prog) {
        if (auto g = std::get_if<guard_t>(&item))
            cur = guard_intersect(cur, *g);
        else
            cur = apply_change_zone(cur, std::get<change_t>(item));
        if (cur.is_empty())
            return cur;
    }
    return time_elapse(cur);
}

std::string to_string(verdict_t v)
{
    switch (v) {
    case verdict_t::REACHABLE:
        return "reachable";
    case verdict_t::UNREACHABLE:
        return "unreachable";
    case verdict_t::BUDGET_EXCEEDED:
        break;
    }
    return "budget-exceeded";
}

namespace {

class explorer_t {
public:
    explorer_t(model_t const & m, reach_options_t const & opts)
        : m_(m), opts_(opts), gmap_(compute_gmap(m)), by_state_(m.states().size()), out_(m.states().size())
    {
        for (std::size_t i = 0; i < m.transitions().size(); ++i)
            out_[m.transitions()[i].src].push_back(i);
        if (opts.check_invariants) {
            auto rep = check_safety(m);
            n_ = std::max<bound_t>(1, static_cast<bound_t>(rep.xd.size()));
            mc_ = max_constant(m);
        }
    }

    reach_report_t run()
    {
        auto start = std::chrono::steady_clock::now();
        reach_report_t rep;
        rep.verdict = explore(rep);
        rep.stored = nodes_.size();
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }

private:
    bool accepting(std::size_t q, distance_graph_t const & z) const
    {
        return m_.is_accepting(q) && !guard_intersect(z, m_.final).is_empty();
    }

    bool subsumed(std::size_t q, distance_graph_t const & z) const
    {
        for (std::size_t i : by_state_[q]) {
            auto const & zp = nodes_[i].zone;
            switch (opts_.subsumption) {
            case subsumption_t::SIMULATION:
                if (zone_simulated(z, gmap_[q], zp))
                    return true;
                break;
            case subsumption_t::INCLUSION:
                if (entrywise_leq(z, zp))
                    return true;
                break;
            case subsumption_t::EQUALITY:
                if (z == zp)
                    return true;
                break;
            }
        }
        return false;
    }

    std::size_t store(node_t nd, reach_report_t & rep)
    {
        if (opts_.check_invariants) {
            for (auto const & v : check_dagger(nd.zone, n_, mc_))
                rep.invariant_violations.push_back(m_.states()[nd.state].name + ": " + v.message);
            for (auto const & s : check_reachable_props(nd.zone))
                rep.invariant_violations.push_back(m_.states()[nd.state].name + ": " + s);
        }
        if (opts_.on_store)
            opts_.on_store(nd);
        by_state_[nd.state].push_back(nodes_.size());
        nodes_.push_back(std::move(nd));
        return nodes_.size() - 1;
    }

    void build_trace(std::size_t i, reach_report_t & rep) const
    {
        std::vector<trace_step_t> steps;
        while (nodes_[i].parent) {
            auto const & t = m_.transitions()[nodes_[i].transition];
            steps.push_back({m_.states()[t.src].name, m_.events()[t.event], m_.states()[t.dst].name});
            i = *nodes_[i].parent;
        }
        rep.trace.assign(steps.rbegin(), steps.rend());
    }

    verdict_t explore(reach_report_t & rep)
    {
        node_t init{0, empty_graph(m_.clocks_ptr()), std::nullopt, 0};
        try {
            init = initial_node(m_);
        }
        catch (empty_initial_error const &) {
            return verdict_t::UNREACHABLE;
        }
        bool acc = accepting(init.state, init.zone);
        std::size_t i0 = store(std::move(init), rep);
        if (acc) {
            rep.visited = 1;
            return verdict_t::REACHABLE;
        }
        std::deque<std::size_t> waiting{i0};
        while (!waiting.empty()) {
            std::size_t cur;
            if (opts_.order == search_order_t::BFS) {
                cur = waiting.front();
                waiting.pop_front();
            }
            else {
                cur = waiting.back();
                waiting.pop_back();
            }
            ++rep.visited;
            for (std::size_t ti : out_[nodes_[cur].state]) {
                auto const & t = m_.transitions()[ti];
                auto z = successor(nodes_[cur].zone, t);
                if (z.is_empty())
                    continue;
                if (accepting(t.dst, z)) {
                    std::size_t i = store({t.dst, std::move(z), cur, ti}, rep);
                    ++rep.visited;
                    build_trace(i, rep);
                    return verdict_t::REACHABLE;
                }
                if (subsumed(t.dst, z))
                    continue;
                if (nodes_.size() >= opts_.max_nodes)
                    return verdict_t::BUDGET_EXCEEDED;
                waiting.push_back(store({t.dst, std::move(z), cur, ti}, rep));
            }
        }
        return verdict_t::UNREACHABLE;
    }

    model_t const & m_;
    reach_options_t const & opts_;
    gmap_t gmap_;
    std::vector<node_t> nodes_;
    std::vector<std::vector<std::size_t>> by_state_;
    std::vector<std::vector<std::size_t>> out_;
    bound_t n_{1};
    bound_t mc_{0};
};

} // namespace

reach_report_t reach(model_t const & m, reach_options_t const & opts) { return explorer_t(m, opts).run(); }

std::string to_json(reach_report_t const & r, bool timing)
{
    nlohmann::ordered_json j;
    j["reachable"] = r.reachable();
    j["visited"] = r.visited;
    j["stored"] = r.stored;
    j["elapsed_ms"] = timing ? r.elapsed_ms : 0.0;
    j["trace"] = nlohmann::ordered_json::array();
    for (auto const & s : r.trace)
        j["trace"].push_back({{"from", s.from}, {"event", s.event}, {"to", s.to}});
    j["verdict"] = to_string(r.verdict);
    return j.dump();
}

} // namespace gta
