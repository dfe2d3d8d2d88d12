#include <algorithm>
#include <deque>

#include "gta/analysis.hh"

namespace gta {

constraint_set_t split(guard_t const & g)
{
    constraint_set_t out;
    for (auto const & c : g)
        if (!c.is_trivial())
            out.insert(c);
    return out;
}

constraint_set_t pre_change(change_t const & r, constraint_set_t const & g)
{
    auto in_r = [&](clock_id_t z) {
        return z != ZERO_CLOCK && std::find(r.clocks.begin(), r.clocks.end(), z) != r.clocks.end();
    };
    constraint_set_t out;
    for (auto c : g) {
        bool rx = in_r(c.x), ry = in_r(c.y);
        if (rx && ry)
            continue;
        if (rx)
            c.x = ZERO_CLOCK;
        if (ry)
            c.y = ZERO_CLOCK;
        // projections landing on 0 - 0 say nothing about the clocks
        if (c.x == c.y || c.is_trivial())
            continue;
        out.insert(c);
    }
    return out;
}

constraint_set_t pre_program(program_t const & prog, constraint_set_t const & g)
{
    constraint_set_t cur = g;
    for (auto it = prog.rbegin(); it != prog.rend(); ++it) {
        if (auto gd = std::get_if<guard_t>(&*it)) {
            auto s = split(*gd);
            cur.insert(s.begin(), s.end());
        }
        else {
            cur = pre_change(std::get<change_t>(*it), cur);
        }
    }
    return cur;
}

gmap_t compute_gmap(model_t const & m)
{
    std::size_t n = m.states().size();
    constraint_set_t base;
    for (clock_id_t f : m.clocks().future())
        base.insert(upper(f, weight_t::zero()));
    gmap_t gm(n, base);

    std::vector<std::vector<std::size_t>> incoming(n);
    for (std::size_t i = 0; i < m.transitions().size(); ++i)
        incoming[m.transitions()[i].dst].push_back(i);

    std::deque<std::size_t> work;
    std::vector<bool> queued(n, true);
    for (std::size_t q = 0; q < n; ++q)
        work.push_back(q);
    while (!work.empty()) {
        std::size_t q = work.front();
        work.pop_front();
        queued[q] = false;
        for (std::size_t ti : incoming[q]) {
            auto const & t = m.transitions()[ti];
            auto add = pre_program(t.prog, gm[q]);
            std::size_t before = gm[t.src].size();
            gm[t.src].insert(add.begin(), add.end());
            if (gm[t.src].size() != before && !queued[t.src]) {
                queued[t.src] = true;
                work.push_back(t.src);
            }
        }
    }
    return gm;
}

std::string dump_gmap(model_t const & m, gmap_t const & gm)
{
    std::string out;
    for (std::size_t q = 0; q < gm.size(); ++q) {
        std::vector<std::string> items;
        for (auto const & c : gm[q])
            items.push_back(to_string(c, m.clocks()));
        std::sort(items.begin(), items.end());
        out += m.states()[q].name + ": {";
        for (std::size_t i = 0; i < items.size(); ++i)
            out += (i ? ", " : "") + items[i];
        out += "}\n";
    }
    return out;
}

} // namespace gta
