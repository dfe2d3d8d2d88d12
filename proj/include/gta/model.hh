#ifndef GTA_MODEL_HH
#define GTA_MODEL_HH

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gta/clocks.hh"
#include "gta/constraint.hh"

namespace gta {

enum class model_kind_t { GTA, TA, ECA, TIMER };

std::string to_string(model_kind_t k);

struct state_t {
    std::string name;
    bool initial{false};
    bool accepting{false};
};

enum class cmp_t { LT, LE, EQ, GE, GT };

// atom as written: lhs [- rhs] cmp constant
struct surface_atom_t {
    std::string lhs;
    std::string rhs;
    cmp_t cmp{cmp_t::LE};
    std::string constant;
};

struct surface_item_t {
    enum class kind_t { GUARD, RESET, RELEASE, SET, TIMEOUT, STOP };
    kind_t kind{kind_t::GUARD};
    std::vector<surface_atom_t> atoms; // GUARD; empty means true
    std::vector<std::string> ids;      // RESET, RELEASE, SET, TIMEOUT, STOP
    bound_t value{0};                  // SET
};

struct transition_t {
    std::size_t src{0};
    std::size_t dst{0};
    std::size_t event{0};
    program_t prog;
    // surface form, kept for printing
    bool eca{false};
    std::vector<surface_item_t> surface;
    int line{0};
};

/*!
 \class model_t
 \brief Generalized timed automaton: states, events, history and future clocks,
 transitions labelled by programs, initial and final guards.
 */
class model_t {
public:
    model_t();

    std::string name{"model"};
    model_kind_t kind{model_kind_t::GTA};

    clock_table_t & clocks() { return *clocks_; }
    clock_table_t const & clocks() const { return *clocks_; }
    clock_table_ptr_t clocks_ptr() const { return clocks_; }

    std::size_t add_state(std::string const & name, bool initial = false, bool accepting = false);
    std::size_t add_event(std::string const & name);
    std::size_t add_transition(std::size_t src, std::size_t dst, std::size_t event, program_t prog);

    std::optional<std::size_t> find_state(std::string const & name) const;
    std::optional<std::size_t> find_event(std::string const & name) const;

    std::vector<state_t> const & states() const { return states_; }
    std::vector<std::string> const & events() const { return events_; }
    std::vector<transition_t> const & transitions() const { return transitions_; }
    std::vector<transition_t> & transitions() { return transitions_; }

    std::size_t initial_state() const;
    bool is_accepting(std::size_t q) const { return states_.at(q).accepting; }

    guard_t init;
    guard_t final;

    // surface forms of init and final when written explicitly
    std::optional<std::vector<surface_atom_t>> init_surface;
    std::optional<std::vector<surface_atom_t>> final_surface;

    // declarations produced by sugar, not printed back
    std::set<clock_id_t> implicit_clocks;
    std::set<std::size_t> implicit_events;

private:
    std::shared_ptr<clock_table_t> clocks_;
    std::vector<state_t> states_;
    std::vector<std::string> events_;
    std::vector<transition_t> transitions_;
};

// every atomic constraint of programs, init and final
std::vector<constraint_t> all_constraints(model_t const & m);

bound_t max_constant(model_t const & m);

class clock_is_timer_error : public std::invalid_argument {
public:
    clock_is_timer_error(clock_id_t x, std::string const & name);
    clock_id_t clock;
};

// future clocks occurring in a diagonal between two future clocks
std::set<clock_id_t> infer_xd(model_t const & m);

struct safety_violation_t {
    enum class reason_t { TIMER_DIAGONAL, UNGUARDED_RELEASE, UNPINNED_HISTORY };
    reason_t reason;
    std::optional<std::size_t> transition;
    clock_id_t clock{ZERO_CLOCK};
    std::string message;
};

struct safety_report_t {
    std::set<clock_id_t> xd;
    std::vector<safety_violation_t> violations;
    bool safe() const { return violations.empty(); }
};

safety_report_t check_safety(model_t const & m);

// encodings as library constructors

// <g; [R]>
program_t ta_program(guard_t g, std::vector<clock_id_t> const & resets);
// <P_a = 0; [P_a]; g; [H_a]>
program_t eca_program(clock_id_t history, clock_id_t future, guard_t g);
// <t = -inf; [t]; t = -c>
program_t timer_set(clock_id_t t, bound_t c);
// <t = 0; [t]; t = -inf>
program_t timer_timeout(clock_id_t t);
// <[t]; t = -inf>
program_t timer_stop(clock_id_t t);

// X_H = 0 for TA, X_H = inf for ECA, X_F = -inf for timers; none for GTA
std::optional<guard_t> default_init(model_kind_t k, clock_table_t const & clocks);
// X_F = -inf for ECA, true otherwise
guard_t default_final(model_kind_t k, clock_table_t const & clocks);

// event-clock names
std::string history_clock_name(std::string const & event);
std::string future_clock_name(std::string const & event);

// ToyECA(K,N): q0 -a-> q1 -b-> q2 with an a-loop and N c-loops on q1
model_t toy_eca(bound_t k, std::size_t n, bool loops_first = true);

} // namespace gta

#endif // GTA_MODEL_HH
