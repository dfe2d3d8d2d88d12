#include <algorithm>
#include <sstream>

#include "gta/valuation.hh"

namespace gta {

ext_real_t ext_add(ext_real_t a, ext_real_t b) noexcept
{
    if (a.is_pos_inf() || b.is_pos_inf())
        return ext_real_t::pos_inf();
    if (a.is_neg_inf() || b.is_neg_inf())
        return ext_real_t::neg_inf();
    return ext_real_t(a.value() + b.value());
}

std::string to_string(ext_real_t a)
{
    if (a.is_pos_inf())
        return "inf";
    if (a.is_neg_inf())
        return "-inf";
    std::ostringstream os;
    os << a.value();
    return os.str();
}

bool is_valuation(valuation_t const & v, clock_table_t const & clocks)
{
    if (v.size() != clocks.size() || v[ZERO_CLOCK] != ext_real_t(0.0))
        return false;
    for (clock_id_t x = 1; x < v.size(); ++x) {
        if (clocks.is_history(x) && (v[x].is_neg_inf() || (v[x].is_finite() && v[x].value() < 0)))
            return false;
        if (clocks.is_future(x) && (v[x].is_pos_inf() || (v[x].is_finite() && v[x].value() > 0)))
            return false;
    }
    return true;
}

std::string to_string(valuation_t const & v, clock_table_t const & clocks)
{
    std::string s = "{";
    for (clock_id_t x = 1; x < v.size(); ++x) {
        if (x > 1)
            s += ", ";
        s += clocks.name(x) + "=" + to_string(v[x]);
    }
    return s + "}";
}

bool satisfies(valuation_t const & v, constraint_t const & c)
{
    if (c.w.is_true())
        return true;
    if (c.w.is_false())
        return false;
    ext_real_t a = v[c.x];
    ext_real_t b = v[c.y];
    if (a.is_neg_inf())
        return false;
    if (a.is_pos_inf())
        return !b.is_pos_inf();
    // a finite: b <| a + c
    switch (c.w.kind()) {
    case bound_kind_t::POS_INF: // (<, inf)
        return !b.is_pos_inf();
    case bound_kind_t::NEG_INF: // (<=, -inf)
        return b.is_neg_inf();
    case bound_kind_t::FINITE:
        break;
    }
    if (b.is_neg_inf())
        return true;
    if (b.is_pos_inf())
        return false;
    double d = b.value() - a.value();
    double k = static_cast<double>(c.w.value());
    return c.w.is_strict() ? d < k : d <= k;
}

bool satisfies(valuation_t const & v, guard_t const & g)
{
    return std::all_of(g.begin(), g.end(), [&](constraint_t const & c) { return satisfies(v, c); });
}

delay_blocked_t::delay_blocked_t(clock_id_t x) : std::runtime_error("delay blocked by future clock"), clock(x) {}

invalid_choice_t::invalid_choice_t(clock_id_t x) : std::invalid_argument("released value must be in [-inf,0]"), clock(x)
{
}

valuation_t shift(valuation_t const & v, double d)
{
    valuation_t r = v;
    for (clock_id_t x = 1; x < r.size(); ++x)
        r[x] = ext_add(r[x], ext_real_t(d));
    return r;
}

bool can_delay(valuation_t const & v, clock_table_t const & clocks, double d)
{
    for (clock_id_t x : clocks.future()) {
        ext_real_t r = ext_add(v[x], ext_real_t(d));
        if (r.is_finite() && r.value() > 0)
            return false;
    }
    return true;
}

valuation_t delay(valuation_t const & v, clock_table_t const & clocks, double d)
{
    if (d < 0)
        throw std::invalid_argument("negative delay");
    for (clock_id_t x : clocks.future()) {
        ext_real_t r = ext_add(v[x], ext_real_t(d));
        if (r.is_finite() && r.value() > 0)
            throw delay_blocked_t(x);
    }
    return shift(v, d);
}

valuation_t apply_change(valuation_t const & v, clock_table_t const & clocks, change_t const & r,
                         std::map<clock_id_t, ext_real_t> const & choice)
{
    valuation_t res = v;
    for (clock_id_t x : r.clocks) {
        if (clocks.is_history(x)) {
            res[x] = ext_real_t(0.0);
            continue;
        }
        auto it = choice.find(x);
        ext_real_t val = (it == choice.end()) ? ext_real_t(0.0) : it->second;
        if (val.is_pos_inf() || (val.is_finite() && val.value() > 0))
            throw invalid_choice_t(x);
        res[x] = val;
    }
    return res;
}

namespace {

void release_all(valuation_t & cur, std::vector<clock_id_t> const & fut, std::size_t i,
                 std::vector<ext_real_t> const & grid, std::vector<valuation_t> & out)
{
    if (i == fut.size()) {
        out.push_back(cur);
        return;
    }
    for (ext_real_t g : grid) {
        cur[fut[i]] = g;
        release_all(cur, fut, i + 1, grid, out);
    }
}

} // namespace

std::vector<valuation_t> run_program(valuation_t const & v, clock_table_t const & clocks, program_t const & prog,
                                     std::vector<ext_real_t> const & grid)
{
    std::vector<valuation_t> cur{v};
    for (auto const & item : prog) {
        std::vector<valuation_t> next;
        if (auto g = std::get_if<guard_t>(&item)) {
            for (auto const & u : cur)
                if (satisfies(u, *g))
                    next.push_back(u);
        }
        else {
            auto const & r = std::get<change_t>(item);
            std::vector<clock_id_t> fut;
            for (clock_id_t x : r.clocks)
                if (clocks.is_future(x))
                    fut.push_back(x);
            for (auto const & u : cur) {
                valuation_t w = apply_change(u, clocks, r, {});
                release_all(w, fut, 0, grid, next);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        cur = std::move(next);
        if (cur.empty())
            break;
    }
    return cur;
}

bool val_simulated(valuation_t const & v, valuation_t const & w, std::vector<constraint_t> const & g, bound_t m,
                   double step)
{
    double last = 2.0 * static_cast<double>(m) + 2.0;
    auto check = [&](double d) {
        valuation_t vd = shift(v, d);
        valuation_t wd = shift(w, d);
        for (auto const & c : g)
            if (satisfies(vd, c) && !satisfies(wd, c))
                return false;
        return true;
    };
    for (double d = 0.0; d <= last; d += step)
        if (!check(d))
            return false;
    return check(last + 1.0);
}

} // namespace gta
