#ifndef GTA_DBM_HH
#define GTA_DBM_HH

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gta/clocks.hh"
#include "gta/constraint.hh"
#include "gta/valuation.hh"
#include "gta/weight.hh"

namespace gta {

enum class dbm_status_t { RAW, STANDARD, NORMAL, EMPTY };

/*!
 \class distance_graph_t
 \brief Square weight matrix over clocks and 0. Entry (x,y) is the weight of
 the edge x -> y, i.e. the constraint y - x <| c. Missing edges are (<=,inf)
 and the diagonal stays (<=,0).
 */
class distance_graph_t {
public:
    explicit distance_graph_t(clock_table_ptr_t clocks);

    std::size_t dim() const noexcept { return dim_; }
    clock_table_t const & clocks() const noexcept { return *clocks_; }
    clock_table_ptr_t const & clocks_ptr() const noexcept { return clocks_; }

    weight_t operator()(clock_id_t x, clock_id_t y) const { return m_[x * dim_ + y]; }
    void set(clock_id_t x, clock_id_t y, weight_t w) { m_[x * dim_ + y] = w; }

    dbm_status_t status() const noexcept { return status_; }
    void set_status(dbm_status_t s) noexcept { status_ = s; }
    bool is_empty() const noexcept { return status_ == dbm_status_t::EMPTY; }

    std::vector<weight_t> const & entries() const noexcept { return m_; }

    // entry-wise equality; all empty graphs are equal
    bool operator==(distance_graph_t const & o) const;

    std::size_t hash() const;

private:
    clock_table_ptr_t clocks_;
    std::size_t dim_;
    std::vector<weight_t> m_;
    dbm_status_t status_{dbm_status_t::RAW};
};

class contradiction_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

distance_graph_t empty_graph(clock_table_ptr_t clocks);

// throws contradiction_error on a (<,-inf) constraint
distance_graph_t from_constraints(clock_table_ptr_t clocks, std::vector<constraint_t> const & cs);

distance_graph_t standardize(distance_graph_t const & g);

bool is_standard(distance_graph_t const & g);

bool has_negative_cycle(distance_graph_t const & g);

// all-pairs shortest paths; EMPTY on a negative cycle
distance_graph_t normalize(distance_graph_t const & g);

// from_constraints, standardize, normalize; EMPTY on contradiction
distance_graph_t canonical(clock_table_ptr_t clocks, std::vector<constraint_t> const & cs);

bool membership(distance_graph_t const & g, valuation_t const & v);

distance_graph_t guard_intersect(distance_graph_t const & g, guard_t const & guard);

// closed form on a normal graph, no recomputation of all pairs
distance_graph_t apply_change_zone(distance_graph_t const & g, change_t const & r);

// edge removal and insertion followed by normalization
distance_graph_t apply_change_surgery(distance_graph_t const & g, change_t const & r);

// row 0 update followed by a single relaxation pass
distance_graph_t time_elapse(distance_graph_t const & g);

// row 0 update followed by full normalization
distance_graph_t time_elapse_full(distance_graph_t const & g);

// entry-wise g <= h, which implies inclusion of semantics
bool entrywise_leq(distance_graph_t const & g, distance_graph_t const & h);

struct dagger_violation_t {
    int condition;
    clock_id_t x;
    clock_id_t y;
    std::string message;
};

std::vector<dagger_violation_t> check_dagger(distance_graph_t const & g, bound_t n, bound_t m);

std::vector<std::string> check_reachable_props(distance_graph_t const & g);

// "x -> y : <=3" per ordered pair of distinct vertices, 0 then history then future
std::string dump(distance_graph_t const & g);

} // namespace gta

#endif // GTA_DBM_HH
