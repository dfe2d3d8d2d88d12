#include "gta/simulation.hh"

namespace gta {

std::vector<guard_t> complement_pieces(constraint_t const & phi, clock_table_t const & clocks)
{
    std::vector<guard_t> out{{negate_atomic(phi)}};
    if (!phi.is_diagonal() || clocks.sort(phi.x) != clocks.sort(phi.y))
        return out;
    if (clocks.is_future(phi.x))
        out.push_back({upper(phi.x, weight_t::le_neg_inf()), upper(phi.y, weight_t::le_neg_inf())});
    else
        out.push_back({lower(phi.x, weight_t::le_neg_inf()), lower(phi.y, weight_t::le_neg_inf())});
    return out;
}

namespace {

// one way of getting the edge 0 -> x or x -> 0 into the graph of
// valuations simulating v: either (<=, +-v(x)) or a fixed weight, present
// when v satisfies the guard
struct option_t {
    bool symbolic;
    weight_t w;
    guard_t when;
};

std::vector<option_t> into_options(clock_id_t x, constraint_set_t const & g, clock_table_t const & clocks)
{
    std::vector<option_t> out;
    if (clocks.is_future(x)) {
        out.push_back({true, weight_t::zero(), {lower(x, weight_t::lt_inf())}});
        out.push_back({false, weight_t::le_neg_inf(), {upper(x, weight_t::le_neg_inf())}});
        return out;
    }
    for (auto const & c : g) {
        if (c.x != ZERO_CLOCK || c.y != x)
            continue;
        if (c.w.is_finite())
            out.push_back({true, weight_t::zero(), {c}});
        out.push_back({false, c.w, {c}});
    }
    return out;
}

std::vector<option_t> out_options(clock_id_t y, constraint_set_t const & g, clock_table_t const & clocks)
{
    std::vector<option_t> out;
    if (clocks.is_future(y)) {
        // with v(y) = -inf the edge weighs (<=,inf) and never helps
        out.push_back({true, weight_t::zero(), {lower(y, weight_t::lt_inf())}});
        return out;
    }
    for (auto const & c : g) {
        if (c.x != y || c.y != ZERO_CLOCK)
            continue;
        if (c.w.is_finite())
            out.push_back({true, weight_t::zero(), {negate_atomic(c)}});
        out.push_back({false, c.w, {c}});
    }
    return out;
}

// z meets the guards and the cycle closed by these options is negative
bool witness(distance_graph_t const & z, option_t const * in, clock_id_t x, weight_t mid, clock_id_t y,
             option_t const * out)
{
    weight_t s = mid;
    if (in && !in->symbolic)
        s = s + in->w;
    if (out && !out->symbolic)
        s = s + out->w;
    if (s.is_true())
        return false;
    guard_t g;
    if (in)
        g.insert(g.end(), in->when.begin(), in->when.end());
    if (out)
        g.insert(g.end(), out->when.begin(), out->when.end());
    bool sx = in && in->symbolic;
    bool sy = out && out->symbolic;
    if (sx && sy)
        g.push_back(negate_atomic({x, y, s}));
    else if (sx)
        g.push_back(negate_atomic({x, ZERO_CLOCK, s}));
    else if (sy)
        g.push_back(negate_atomic({ZERO_CLOCK, y, s}));
    else if (!(s < weight_t::zero()))
        return false;
    return !guard_intersect(z, g).is_empty();
}

} // namespace

bool base_not_simulated(distance_graph_t const & z, constraint_set_t const & g, distance_graph_t const & zp)
{
    if (z.is_empty())
        return false;
    if (zp.is_empty())
        return true;
    auto const & clocks = z.clocks();
    clock_id_t n = static_cast<clock_id_t>(z.dim());
    std::vector<std::vector<option_t>> ins(n), outs(n);
    for (clock_id_t x = 1; x < n; ++x) {
        ins[x] = into_options(x, g, clocks);
        outs[x] = out_options(x, g, clocks);
    }
    for (clock_id_t x = 1; x < n; ++x) {
        for (auto const & o : ins[x])
            if (witness(z, &o, x, zp(x, 0), ZERO_CLOCK, nullptr))
                return true;
        for (auto const & o : outs[x])
            if (witness(z, nullptr, ZERO_CLOCK, zp(0, x), x, &o))
                return true;
    }
    for (clock_id_t x = 1; x < n; ++x) {
        for (clock_id_t y = 1; y < n; ++y) {
            if (x == y || zp(x, y).is_true())
                continue;
            for (auto const & a : ins[x])
                for (auto const & b : outs[y])
                    if (witness(z, &a, x, zp(x, y), y, &b))
                        return true;
        }
    }
    return false;
}

namespace {

bool simulated_rec(distance_graph_t const & z, constraint_set_t g, distance_graph_t const & zp)
{
    if (z.is_empty())
        return true;
    auto it = g.begin();
    while (it != g.end() && !it->is_diagonal())
        ++it;
    if (it == g.end())
        return !base_not_simulated(z, g, zp);
    constraint_t phi = *it;
    g.erase(it);
    if (!simulated_rec(guard_intersect(z, {phi}), g, guard_intersect(zp, {phi})))
        return false;
    for (auto const & piece : complement_pieces(phi, z.clocks()))
        if (!simulated_rec(guard_intersect(z, piece), g, zp))
            return false;
    return true;
}

} // namespace

bool zone_simulated(distance_graph_t const & z, constraint_set_t const & g, distance_graph_t const & zp)
{
    constraint_set_t full = g;
    for (clock_id_t f : z.clocks().future()) {
        full.insert(upper(f, weight_t::zero()));
        full.insert(lower(f, weight_t::zero()));
    }
    return simulated_rec(z, std::move(full), zp);
}

} // namespace gta
