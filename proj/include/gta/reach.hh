#ifndef GTA_REACH_HH
#define GTA_REACH_HH

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gta/analysis.hh"
#include "gta/dbm.hh"
#include "gta/model.hh"

namespace gta {

struct node_t {
    std::size_t state{0};
    distance_graph_t zone;
    std::optional<std::size_t> parent;
    std::size_t transition{0};
};

class empty_initial_error : public std::runtime_error {
public:
    empty_initial_error() : std::runtime_error("initial zone is empty") {}
};

// canonical(g0 && X_F <= 0 && X_H >= 0), then time elapse
node_t initial_node(model_t const & m);

// program items folded over the zone, then time elapse; EMPTY when blocked
distance_graph_t successor(distance_graph_t const & z, transition_t const & t);

enum class search_order_t { BFS, DFS };
enum class subsumption_t { SIMULATION, INCLUSION, EQUALITY };
enum class verdict_t { REACHABLE, UNREACHABLE, BUDGET_EXCEEDED };

std::string to_string(verdict_t v);

struct reach_options_t {
    search_order_t order{search_order_t::BFS};
    subsumption_t subsumption{subsumption_t::SIMULATION};
    std::size_t max_nodes{1000000};
    // run the dagger and reachable-zone checks on every stored node
    bool check_invariants{false};
    // called on every stored node
    std::function<void(node_t const &)> on_store;
};

struct trace_step_t {
    std::string from;
    std::string event;
    std::string to;
};

struct reach_report_t {
    verdict_t verdict{verdict_t::UNREACHABLE};
    std::size_t visited{0};
    std::size_t stored{0};
    double elapsed_ms{0.0};
    std::vector<trace_step_t> trace;
    std::vector<std::string> invariant_violations;

    bool reachable() const { return verdict == verdict_t::REACHABLE; }
};

/*!
 \brief Zone graph exploration with a passed and a waiting list.
 A successor is first tested for acceptance (accepting state and non-empty
 intersection with the final guard), then discarded if some stored node of
 the same state simulates it. visited counts popped nodes plus the accepting
 node when one is found; stored counts retained nodes, the initial and the
 accepting one included.
 */
reach_report_t reach(model_t const & m, reach_options_t const & opts = {});

// {"reachable":..,"visited":..,"stored":..,"elapsed_ms":..,"trace":[..],"verdict":..}
std::string to_json(reach_report_t const & r, bool timing = true);

} // namespace gta

#endif // GTA_REACH_HH
