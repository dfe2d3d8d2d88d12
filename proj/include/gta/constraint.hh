#ifndef GTA_CONSTRAINT_HH
#define GTA_CONSTRAINT_HH

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "gta/clocks.hh"
#include "gta/weight.hh"

namespace gta {

/*!
 \struct constraint_t
 \brief Atomic constraint y - x <| c, i.e. the distance graph edge x -> y
 */
struct constraint_t {
    clock_id_t x{ZERO_CLOCK};
    clock_id_t y{ZERO_CLOCK};
    weight_t w{weight_t::le_inf()};

    bool is_trivial() const noexcept { return w.is_trivial(); }
    bool is_diagonal() const noexcept { return x != ZERO_CLOCK && y != ZERO_CLOCK; }

    auto operator<=>(constraint_t const &) const = default;
};

// y <| c
inline constraint_t upper(clock_id_t y, weight_t w) { return {ZERO_CLOCK, y, w}; }
// -x <| c
inline constraint_t lower(clock_id_t x, weight_t w) { return {x, ZERO_CLOCK, w}; }
inline constraint_t diagonal(clock_id_t y, clock_id_t x, weight_t w) { return {x, y, w}; }

// not(y - x <| c) is x - y <|~ -c; throws std::invalid_argument on trivial input
constraint_t negate_atomic(constraint_t const & c);

using guard_t = std::vector<constraint_t>;

// x == v as the two-sided pair, for v finite or infinite
guard_t equals(clock_id_t x, weight_t upper_bound);

struct change_t {
    std::vector<clock_id_t> clocks;
    bool operator==(change_t const &) const = default;
};

using program_item_t = std::variant<guard_t, change_t>;
using program_t = std::vector<program_item_t>;

std::string to_string(constraint_t const & c, clock_table_t const & clocks);
std::string to_string(guard_t const & g, clock_table_t const & clocks);

} // namespace gta

#endif // GTA_CONSTRAINT_HH
