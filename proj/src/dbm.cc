#include <functional>

#include "gta/dbm.hh"

namespace gta {

distance_graph_t::distance_graph_t(clock_table_ptr_t clocks)
    : clocks_(std::move(clocks)), dim_(clocks_->size()), m_(dim_ * dim_, weight_t::le_inf())
{
    for (std::size_t i = 0; i < dim_; ++i)
        m_[i * dim_ + i] = weight_t::zero();
}

bool distance_graph_t::operator==(distance_graph_t const & o) const
{
    if (is_empty() || o.is_empty())
        return is_empty() && o.is_empty();
    return m_ == o.m_;
}

std::size_t distance_graph_t::hash() const
{
    if (is_empty())
        return 0;
    std::size_t h = dim_;
    for (auto const & w : m_) {
        std::size_t k = (static_cast<std::size_t>(w.kind()) << 1) | static_cast<std::size_t>(w.strictness());
        k ^= std::hash<bound_t>{}(w.value()) << 3;
        h ^= k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

distance_graph_t empty_graph(clock_table_ptr_t clocks)
{
    distance_graph_t g(std::move(clocks));
    g.set_status(dbm_status_t::EMPTY);
    return g;
}

distance_graph_t from_constraints(clock_table_ptr_t clocks, std::vector<constraint_t> const & cs)
{
    distance_graph_t g(std::move(clocks));
    for (auto const & c : cs) {
        if (c.x >= g.dim() || c.y >= g.dim())
            throw std::out_of_range("constraint on unknown clock");
        if (c.w.is_false())
            throw contradiction_error("constraint (<,-inf) is false");
        if (c.x == c.y)
            throw std::invalid_argument("constraint between a clock and itself");
        g.set(c.x, c.y, weight_min(g(c.x, c.y), c.w));
    }
    return g;
}

distance_graph_t standardize(distance_graph_t const & g)
{
    if (g.is_empty())
        return g;
    distance_graph_t r = g;
    auto const & clocks = g.clocks();
    clock_id_t n = static_cast<clock_id_t>(g.dim());
    for (clock_id_t x = 1; x < n; ++x) {
        if (clocks.is_future(x)) {
            r.set(0, x, weight_min(g(0, x), weight_t::zero()));
            bool bounded = false;
            for (clock_id_t y = 1; y < n && !bounded; ++y)
                bounded = (y != x && !g(x, y).is_true());
            if (bounded)
                r.set(x, 0, weight_min(g(x, 0), weight_t::lt_inf()));
        }
        else {
            r.set(x, 0, weight_min(g(x, 0), weight_t::zero()));
            bool bounded = false;
            for (clock_id_t y = 1; y < n && !bounded; ++y)
                bounded = (y != x && !g(y, x).is_true());
            if (bounded)
                r.set(0, x, weight_min(g(0, x), weight_t::lt_inf()));
        }
    }
    if (r.status() == dbm_status_t::RAW)
        r.set_status(dbm_status_t::STANDARD);
    return r;
}

bool is_standard(distance_graph_t const & g)
{
    if (g.is_empty())
        return true;
    auto const & clocks = g.clocks();
    clock_id_t n = static_cast<clock_id_t>(g.dim());
    for (clock_id_t x = 1; x < n; ++x) {
        if (clocks.is_future(x) && g(0, x) > weight_t::zero())
            return false;
        if (clocks.is_history(x) && g(x, 0) > weight_t::zero())
            return false;
    }
    for (clock_id_t x = 1; x < n; ++x)
        for (clock_id_t y = 1; y < n; ++y)
            if (x != y && !g(x, y).is_true() && (g(x, 0).is_true() || g(0, y).is_true()))
                return false;
    return true;
}

namespace {

// Floyd-Warshall in place; returns false on a negative cycle
bool close(std::vector<weight_t> & m, std::size_t n)
{
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            weight_t ik = m[i * n + k];
            if (ik.is_true())
                continue;
            for (std::size_t j = 0; j < n; ++j) {
                weight_t kj = m[k * n + j];
                if (kj.is_true())
                    continue;
                weight_t s = ik + kj;
                if (s < m[i * n + j])
                    m[i * n + j] = s;
            }
        }
        for (std::size_t i = 0; i < n; ++i)
            if (m[i * n + i] < weight_t::zero())
                return false;
    }
    return true;
}

} // namespace

bool has_negative_cycle(distance_graph_t const & g)
{
    if (g.is_empty())
        return true;
    std::vector<weight_t> m = g.entries();
    return !close(m, g.dim());
}

distance_graph_t normalize(distance_graph_t const & g)
{
    if (g.is_empty())
        return g;
    std::vector<weight_t> m = g.entries();
    if (!close(m, g.dim()))
        return empty_graph(g.clocks_ptr());
    distance_graph_t r(g.clocks_ptr());
    for (clock_id_t x = 0; x < g.dim(); ++x)
        for (clock_id_t y = 0; y < g.dim(); ++y)
            if (x != y)
                r.set(x, y, m[x * g.dim() + y]);
    r.set_status(dbm_status_t::NORMAL);
    return r;
}

distance_graph_t canonical(clock_table_ptr_t clocks, std::vector<constraint_t> const & cs)
{
    try {
        return normalize(standardize(from_constraints(clocks, cs)));
    }
    catch (contradiction_error const &) {
        return empty_graph(clocks);
    }
}

bool membership(distance_graph_t const & g, valuation_t const & v)
{
    if (g.is_empty())
        return false;
    for (clock_id_t x = 0; x < g.dim(); ++x)
        for (clock_id_t y = 0; y < g.dim(); ++y)
            if (x != y && !satisfies(v, constraint_t{x, y, g(x, y)}))
                return false;
    return true;
}

distance_graph_t guard_intersect(distance_graph_t const & g, guard_t const & guard)
{
    if (g.is_empty())
        return g;
    distance_graph_t r = g;
    bool changed = false;
    for (auto const & c : guard) {
        if (c.w.is_false())
            return empty_graph(g.clocks_ptr());
        if (c.x == c.y)
            throw std::invalid_argument("constraint between a clock and itself");
        if (c.w < r(c.x, c.y)) {
            r.set(c.x, c.y, c.w);
            changed = true;
        }
    }
    if (!changed)
        return r;
    r.set_status(dbm_status_t::RAW);
    return normalize(standardize(r));
}

distance_graph_t apply_change_zone(distance_graph_t const & g, change_t const & r)
{
    if (g.is_empty() || r.clocks.empty())
        return g;
    auto const & clocks = g.clocks();
    clock_id_t n = static_cast<clock_id_t>(g.dim());
    std::vector<bool> in(n, false);
    for (clock_id_t x : r.clocks)
        in.at(x) = true;
    distance_graph_t res(g.clocks_ptr());
    for (clock_id_t x = 0; x < n; ++x) {
        for (clock_id_t y = 0; y < n; ++y) {
            if (x == y)
                continue;
            weight_t w;
            if (in[x] && clocks.is_future(x))
                w = weight_t::le_inf();
            else if (in[x])
                w = in[y] ? weight_t::zero() : g(0, y);
            else
                w = in[y] ? g(x, 0) : g(x, y);
            res.set(x, y, w);
        }
    }
    res.set_status(g.status());
    return res;
}

distance_graph_t apply_change_surgery(distance_graph_t const & g, change_t const & r)
{
    if (g.is_empty())
        return g;
    auto const & clocks = g.clocks();
    clock_id_t n = static_cast<clock_id_t>(g.dim());
    distance_graph_t res = g;
    for (clock_id_t x : r.clocks) {
        for (clock_id_t y = 0; y < n; ++y) {
            if (y == x)
                continue;
            res.set(x, y, weight_t::le_inf());
            res.set(y, x, weight_t::le_inf());
        }
    }
    for (clock_id_t x : r.clocks) {
        res.set(0, x, weight_t::zero());
        res.set(x, 0, clocks.is_future(x) ? weight_t::le_inf() : weight_t::zero());
    }
    res.set_status(dbm_status_t::RAW);
    return normalize(standardize(res));
}

namespace {

distance_graph_t elapse_row(distance_graph_t const & g)
{
    auto const & clocks = g.clocks();
    distance_graph_t r = g;
    for (clock_id_t x = 1; x < g.dim(); ++x) {
        weight_t w = g(0, x);
        if (clocks.is_history(x) && !w.is_true())
            r.set(0, x, weight_t::lt_inf());
        else if (clocks.is_future(x) && w != weight_t::le_neg_inf())
            r.set(0, x, weight_t::zero());
    }
    return r;
}

} // namespace

distance_graph_t time_elapse(distance_graph_t const & g)
{
    if (g.is_empty())
        return g;
    distance_graph_t h = elapse_row(g);
    distance_graph_t r = h;
    clock_id_t n = static_cast<clock_id_t>(g.dim());
    for (clock_id_t y = 1; y < n; ++y) {
        weight_t best = h(0, y);
        for (clock_id_t x = 1; x < n; ++x) {
            if (x == y)
                continue;
            weight_t s = h(0, x) + g(x, y);
            if (s < best)
                best = s;
        }
        r.set(0, y, best);
    }
    r.set_status(dbm_status_t::NORMAL);
    return r;
}

distance_graph_t time_elapse_full(distance_graph_t const & g)
{
    if (g.is_empty())
        return g;
    return normalize(elapse_row(g));
}

bool entrywise_leq(distance_graph_t const & g, distance_graph_t const & h)
{
    if (g.is_empty())
        return true;
    if (h.is_empty())
        return false;
    auto const & a = g.entries();
    auto const & b = h.entries();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (b[i] < a[i])
            return false;
    return true;
}

std::vector<dagger_violation_t> check_dagger(distance_graph_t const & g, bound_t n, bound_t m)
{
    std::vector<dagger_violation_t> out;
    if (g.is_empty())
        return out;
    auto const & clocks = g.clocks();
    bound_t nm = n * m;
    weight_t hi = weight_t::le(nm);
    weight_t lo = weight_t::lt(-nm);
    auto name = [&](clock_id_t x) { return clocks.name(x); };
    clock_id_t dim = static_cast<clock_id_t>(g.dim());

    for (clock_id_t x : clocks.future()) {
        for (clock_id_t y = 0; y < dim; ++y) {
            if (y == x || clocks.is_future(y) || !g(x, y).is_finite())
                continue;
            weight_t w = g(x, 0);
            if (w < weight_t::zero() || hi < w) {
                out.push_back({1, x, y, "entry " + name(x) + " -> 0 is " + to_string(w) + " outside [<=0, <=" +
                                            std::to_string(nm) + "]"});
                break;
            }
        }
        weight_t w = g(0, x);
        if (w.is_finite() && (w < lo || weight_t::zero() < w))
            out.push_back({2, 0, x, "entry 0 -> " + name(x) + " is " + to_string(w) + " outside [<-" +
                                        std::to_string(nm) + ", <=0]"});
    }
    for (clock_id_t x : clocks.history()) {
        for (clock_id_t y : clocks.future()) {
            if (!g(0, y).is_finite())
                continue;
            if (g(x, y) < g(x, 0) + lo)
                out.push_back({3, x, y, "entry " + name(x) + " -> " + name(y) + " is " + to_string(g(x, y)) +
                                            " below " + to_string(g(x, 0) + lo)});
        }
    }
    for (clock_id_t x : clocks.future()) {
        for (clock_id_t y : clocks.future()) {
            if (x == y || !g(x, y).is_finite())
                continue;
            weight_t w = g(x, y);
            if (w < lo || hi < w)
                out.push_back({4, x, y, "entry " + name(x) + " -> " + name(y) + " is " + to_string(w) +
                                            " outside [<-" + std::to_string(nm) + ", <=" + std::to_string(nm) +
                                            "]"});
        }
    }
    return out;
}

std::vector<std::string> check_reachable_props(distance_graph_t const & g)
{
    std::vector<std::string> out;
    if (g.is_empty())
        return out;
    auto const & clocks = g.clocks();
    clock_id_t dim = static_cast<clock_id_t>(g.dim());
    for (clock_id_t x : clocks.history())
        if (g(x, 0) != weight_t::le_neg_inf() && weight_t::lt_inf() < g(0, x))
            out.push_back("history clock " + clocks.name(x) + " is neither undefined nor bounded");
    for (clock_id_t x = 0; x < dim; ++x)
        for (clock_id_t y = 0; y < dim; ++y)
            if (x != y && g(x, y) == weight_t::le_neg_inf() && g(x, 0) != weight_t::le_neg_inf() &&
                g(0, y) != weight_t::le_neg_inf())
                out.push_back("edge " + clocks.name(x) + " -> " + clocks.name(y) +
                              " is <=-inf without an undefined endpoint");
    return out;
}

std::string dump(distance_graph_t const & g)
{
    if (g.is_empty())
        return "empty\n";
    auto order = g.clocks().display_order();
    std::string s;
    for (clock_id_t x : order)
        for (clock_id_t y : order)
            if (x != y)
                s += g.clocks().name(x) + " -> " + g.clocks().name(y) + " : " + to_string(g(x, y)) + "\n";
    return s;
}

} // namespace gta
