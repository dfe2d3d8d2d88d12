#ifndef GTA_SIMULATION_HH
#define GTA_SIMULATION_HH

#include <vector>

#include "gta/analysis.hh"
#include "gta/dbm.hh"

namespace gta {

/*!
 \brief Valuations violating the diagonal phi, as a union of guards.
 Next to the negation of phi, two clocks of the same sort that are both
 infinite satisfy neither phi nor its negation, so they form an extra piece.
 */
std::vector<guard_t> complement_pieces(constraint_t const & phi, clock_table_t const & clocks);

/*!
 \brief True iff some v in z has no simulating valuation in zp.
 g holds no diagonal between two clocks and contains x <= 0 and 0 <= x for
 every future clock x. Each short negative cycle shape gives a guard on v;
 a witness exists iff z meets one of them.
 */
bool base_not_simulated(distance_graph_t const & z, constraint_set_t const & g, distance_graph_t const & zp);

/*!
 \brief Zone simulation: every v in z is simulated by some v' in zp.
 Diagonals of g are split off one at a time, then the base test decides.
 */
bool zone_simulated(distance_graph_t const & z, constraint_set_t const & g, distance_graph_t const & zp);

} // namespace gta

#endif // GTA_SIMULATION_HH
