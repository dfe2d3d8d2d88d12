#include <stdexcept>

#include "gta/constraint.hh"

namespace gta {

constraint_t negate_atomic(constraint_t const & c)
{
    if (c.is_trivial())
        throw std::invalid_argument("trivial constraint cannot be negated");
    return {c.y, c.x, weight_negate(c.w)};
}

guard_t equals(clock_id_t x, weight_t value)
{
    if (value.is_strict())
        throw std::invalid_argument("equals expects a weak weight as value");
    weight_t neg = value;
    if (value.is_finite())
        neg = weight_t::le(-value.value());
    else if (value.is_pos_inf())
        neg = weight_t::le_neg_inf();
    else
        neg = weight_t::le_inf();
    return {upper(x, value), lower(x, neg)};
}

static std::string bound_string(weight_t w)
{
    std::string s = to_string(w);
    return s.substr(w.is_strict() ? 1 : 2);
}

std::string to_string(constraint_t const & c, clock_table_t const & clocks)
{
    std::string op = c.w.is_strict() ? " < " : " <= ";
    std::string lhs;
    if (c.x == ZERO_CLOCK)
        lhs = clocks.name(c.y);
    else
        lhs = clocks.name(c.y) + " - " + clocks.name(c.x);
    return lhs + op + bound_string(c.w);
}

std::string to_string(guard_t const & g, clock_table_t const & clocks)
{
    if (g.empty())
        return "true";
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i > 0)
            s += " && ";
        s += to_string(g[i], clocks);
    }
    return s;
}

} // namespace gta
