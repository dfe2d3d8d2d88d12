#ifndef GTA_VALUATION_HH
#define GTA_VALUATION_HH

#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "gta/clocks.hh"
#include "gta/constraint.hh"

namespace gta {

/*!
 \class ext_real_t
 \brief A real number, or -inf, or +inf
 */
class ext_real_t {
public:
    constexpr ext_real_t() noexcept = default;
    constexpr ext_real_t(double v) noexcept : value_(v) {}

    static constexpr ext_real_t pos_inf() noexcept { return ext_real_t(bound_kind_t::POS_INF); }
    static constexpr ext_real_t neg_inf() noexcept { return ext_real_t(bound_kind_t::NEG_INF); }

    constexpr bound_kind_t kind() const noexcept { return kind_; }
    constexpr bool is_finite() const noexcept { return kind_ == bound_kind_t::FINITE; }
    constexpr bool is_pos_inf() const noexcept { return kind_ == bound_kind_t::POS_INF; }
    constexpr bool is_neg_inf() const noexcept { return kind_ == bound_kind_t::NEG_INF; }
    constexpr double value() const noexcept { return value_; }

    constexpr ext_real_t operator-() const noexcept
    {
        if (is_pos_inf())
            return neg_inf();
        if (is_neg_inf())
            return pos_inf();
        return ext_real_t(-value_);
    }

    constexpr bool operator==(ext_real_t const &) const noexcept = default;
    constexpr std::partial_ordering operator<=>(ext_real_t const & o) const noexcept
    {
        if (auto c = kind_ <=> o.kind_; c != 0)
            return c;
        return value_ <=> o.value_;
    }

private:
    constexpr explicit ext_real_t(bound_kind_t k) noexcept : kind_(k) {}

    bound_kind_t kind_{bound_kind_t::FINITE};
    double value_{0.0};
};

// +inf absorbs everything; -inf absorbs everything but +inf
ext_real_t ext_add(ext_real_t a, ext_real_t b) noexcept;

std::string to_string(ext_real_t a);

/*!
 \struct valuation_t
 \brief Values of the clocks indexed by clock id; entry 0 is the clock 0
 */
struct valuation_t {
    std::vector<ext_real_t> values;

    valuation_t() = default;
    explicit valuation_t(std::size_t size) : values(size, ext_real_t(0.0)) {}

    ext_real_t & operator[](clock_id_t x) { return values[x]; }
    ext_real_t const & operator[](clock_id_t x) const { return values[x]; }
    std::size_t size() const noexcept { return values.size(); }

    bool operator==(valuation_t const &) const = default;
    auto operator<=>(valuation_t const & o) const
    {
        return std::lexicographical_compare_three_way(values.begin(), values.end(), o.values.begin(),
                                                      o.values.end());
    }
};

// sorts respected and v(0) = 0
bool is_valuation(valuation_t const & v, clock_table_t const & clocks);

std::string to_string(valuation_t const & v, clock_table_t const & clocks);

bool satisfies(valuation_t const & v, constraint_t const & c);
bool satisfies(valuation_t const & v, guard_t const & g);

class delay_blocked_t : public std::runtime_error {
public:
    explicit delay_blocked_t(clock_id_t x);
    clock_id_t clock;
};

class invalid_choice_t : public std::invalid_argument {
public:
    explicit invalid_choice_t(clock_id_t x);
    clock_id_t clock;
};

// v + d with every clock advanced, without checking future clocks
valuation_t shift(valuation_t const & v, double d);

// true iff v + d keeps every future clock <= 0
bool can_delay(valuation_t const & v, clock_table_t const & clocks, double d);

// throws delay_blocked_t when a future clock would become positive
valuation_t delay(valuation_t const & v, clock_table_t const & clocks, double d);

// history clocks of R go to 0, future clocks of R take their chosen value (default 0)
valuation_t apply_change(valuation_t const & v, clock_table_t const & clocks, change_t const & r,
                         std::map<clock_id_t, ext_real_t> const & choice);

// all results of prog from v, releases ranging over grid
std::vector<valuation_t> run_program(valuation_t const & v, clock_table_t const & clocks, program_t const & prog,
                                     std::vector<ext_real_t> const & grid);

/*!
 \brief Decides whether v is simulated by w for the constraints in g:
 for all phi in g and all d >= 0, v + d |= phi implies w + d |= phi.
 Delays are not clipped at 0 for future clocks. d ranges over multiples of
 step up to 2m + 2, plus 2m + 3.
 */
bool val_simulated(valuation_t const & v, valuation_t const & w, std::vector<constraint_t> const & g, bound_t m,
                   double step = 0.5);

} // namespace gta

#endif // GTA_VALUATION_HH
