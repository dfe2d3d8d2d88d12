#include <ostream>
#include <stdexcept>

#include "gta/weight.hh"

namespace gta {

ordering_t weight_cmp(weight_t a, weight_t b) noexcept
{
    auto c = a <=> b;
    if (c < 0)
        return ordering_t::LESS;
    if (c > 0)
        return ordering_t::GREATER;
    return ordering_t::EQUAL;
}

weight_t weight_add(weight_t a, weight_t b) noexcept
{
    if (a.is_false() || b.is_false())
        return weight_t::lt_neg_inf();
    if (a.is_true() || b.is_true())
        return weight_t::le_inf();
    if (a == weight_t::le_neg_inf() || b == weight_t::le_neg_inf())
        return weight_t::le_neg_inf();
    if (a == weight_t::lt_inf() || b == weight_t::lt_inf())
        return weight_t::lt_inf();
    bound_t c = a.value() + b.value();
    if (a.is_strict() || b.is_strict())
        return weight_t::lt(c);
    return weight_t::le(c);
}

weight_t weight_negate(weight_t w)
{
    if (w.is_trivial())
        throw std::invalid_argument("trivial constraint cannot be negated");
    strictness_t s = w.is_strict() ? strictness_t::LE : strictness_t::LT;
    switch (w.kind()) {
    case bound_kind_t::FINITE:
        return weight_t::make(s, bound_kind_t::FINITE, -w.value());
    case bound_kind_t::POS_INF:
        return weight_t::make(s, bound_kind_t::NEG_INF);
    case bound_kind_t::NEG_INF:
        return weight_t::make(s, bound_kind_t::POS_INF);
    }
    return w;
}

std::string to_string(weight_t w)
{
    std::string s = w.is_strict() ? "<" : "<=";
    switch (w.kind()) {
    case bound_kind_t::NEG_INF:
        return s + "-inf";
    case bound_kind_t::POS_INF:
        return s + "inf";
    case bound_kind_t::FINITE:
        break;
    }
    return s + std::to_string(w.value());
}

std::ostream & operator<<(std::ostream & os, weight_t w) { return os << to_string(w); }

} // namespace gta
