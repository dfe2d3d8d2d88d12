#ifndef GTA_EXPLICIT_HH
#define GTA_EXPLICIT_HH

#include <cstddef>
#include <vector>

#include "gta/model.hh"
#include "gta/reach.hh"
#include "gta/valuation.hh"

namespace gta {

struct explicit_options_t {
    // delays are multiples of time_step
    double time_step{0.5};
    // largest single delay; negative means max_constant + 1
    double max_delay{-1.0};
    // values offered to released future clocks; empty means
    // {-inf, -(M+1), ..., -time_step, 0}
    std::vector<ext_real_t> release_grid;
    std::size_t max_configs{200000};
};

struct explicit_report_t {
    bool found{false};
    std::size_t configs{0};
    // the discrete steps of a shortest accepting run
    std::vector<trace_step_t> trace;
};

// {-inf, -bound, -bound + step, ..., 0}
std::vector<ext_real_t> future_grid(double bound, double step);

/*!
 \brief Breadth-first search over concrete configurations. Delays and
 releases range over finite grids, so a negative answer only means that no
 accepting run was found within the budget.
 */
explicit_report_t explicit_reach(model_t const & m, explicit_options_t const & opts = {});

} // namespace gta

#endif // GTA_EXPLICIT_HH
