#ifndef GTA_ANALYSIS_HH
#define GTA_ANALYSIS_HH

#include <set>
#include <string>
#include <vector>

#include "gta/constraint.hh"
#include "gta/model.hh"

namespace gta {

// non-trivial atomic constraints, ordered for deterministic dumps
using constraint_set_t = std::set<constraint_t>;

// atoms of g without the trivial ones
constraint_set_t split(guard_t const & g);

constraint_set_t pre_change(change_t const & r, constraint_set_t const & g);

// right to left over the items of prog
constraint_set_t pre_program(program_t const & prog, constraint_set_t const & g);

// one constraint set per state
using gmap_t = std::vector<constraint_set_t>;

/*!
 \brief Least fixpoint of G(q) = {x <= 0 | x future} U pre(prog){G(q')} over
 all transitions q -prog-> q'. FIFO worklist seeded in declaration order.
 */
gmap_t compute_gmap(model_t const & m);

// "q: {c1, c2}" lines, constraints sorted by their printed form
std::string dump_gmap(model_t const & m, gmap_t const & gm);

} // namespace gta

#endif // GTA_ANALYSIS_HH
