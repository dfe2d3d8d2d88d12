#ifndef GTA_WEIGHT_HH
#define GTA_WEIGHT_HH

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace gta {

using bound_t = std::int64_t;

enum class strictness_t : std::uint8_t { LT = 0, LE = 1 };

enum class bound_kind_t : std::uint8_t { NEG_INF = 0, FINITE = 1, POS_INF = 2 };

/*!
 \class weight_t
 \brief Pair (strictness, bound) with bound in Z extended with -inf and +inf.
 Infinite bounds are separate cases, never sentinel integers.
 */
class weight_t {
public:
    constexpr weight_t() noexcept = default;

    static constexpr weight_t le(bound_t c) noexcept { return {bound_kind_t::FINITE, strictness_t::LE, c}; }
    static constexpr weight_t lt(bound_t c) noexcept { return {bound_kind_t::FINITE, strictness_t::LT, c}; }
    static constexpr weight_t le_inf() noexcept { return {bound_kind_t::POS_INF, strictness_t::LE, 0}; }
    static constexpr weight_t lt_inf() noexcept { return {bound_kind_t::POS_INF, strictness_t::LT, 0}; }
    static constexpr weight_t le_neg_inf() noexcept { return {bound_kind_t::NEG_INF, strictness_t::LE, 0}; }
    static constexpr weight_t lt_neg_inf() noexcept { return {bound_kind_t::NEG_INF, strictness_t::LT, 0}; }
    static constexpr weight_t zero() noexcept { return le(0); }
    static constexpr weight_t make(strictness_t s, bound_kind_t k, bound_t c = 0) noexcept
    {
        return {k, s, k == bound_kind_t::FINITE ? c : 0};
    }

    constexpr bound_kind_t kind() const noexcept { return kind_; }
    constexpr strictness_t strictness() const noexcept { return strict_; }
    constexpr bool is_strict() const noexcept { return strict_ == strictness_t::LT; }
    constexpr bool is_finite() const noexcept { return kind_ == bound_kind_t::FINITE; }
    constexpr bool is_pos_inf() const noexcept { return kind_ == bound_kind_t::POS_INF; }
    constexpr bool is_neg_inf() const noexcept { return kind_ == bound_kind_t::NEG_INF; }

    // only meaningful when is_finite()
    constexpr bound_t value() const noexcept { return value_; }

    // (<=,inf): the constraint is always true
    constexpr bool is_true() const noexcept { return *this == le_inf(); }
    // (<,-inf): the constraint is always false
    constexpr bool is_false() const noexcept { return *this == lt_neg_inf(); }
    constexpr bool is_trivial() const noexcept { return is_true() || is_false(); }

    constexpr bool operator==(weight_t const & o) const noexcept = default;

    constexpr std::strong_ordering operator<=>(weight_t const & o) const noexcept
    {
        if (auto c = kind_ <=> o.kind_; c != 0)
            return c;
        if (auto c = value_ <=> o.value_; c != 0)
            return c;
        return strict_ <=> o.strict_;
    }

private:
    constexpr weight_t(bound_kind_t k, strictness_t s, bound_t c) noexcept : kind_(k), strict_(s), value_(c) {}

    bound_kind_t kind_{bound_kind_t::FINITE};
    strictness_t strict_{strictness_t::LE};
    bound_t value_{0};
};

enum class ordering_t { LESS, EQUAL, GREATER };

ordering_t weight_cmp(weight_t a, weight_t b) noexcept;

weight_t weight_add(weight_t a, weight_t b) noexcept;

inline weight_t weight_min(weight_t a, weight_t b) noexcept { return (b < a) ? b : a; }

inline weight_t operator+(weight_t a, weight_t b) noexcept { return weight_add(a, b); }

// the weight of the negated constraint: not(d <| c) is -d <|~ -c
weight_t weight_negate(weight_t w);

std::string to_string(weight_t w);

std::ostream & operator<<(std::ostream & os, weight_t w);

} // namespace gta

#endif // GTA_WEIGHT_HH
