#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "corpus.hh"
#include "gta/analysis.hh"
#include "gta/parser.hh"

using namespace gta;

TEST_CASE("split")
{
    // clocks x = 1, y = 2
    guard_t g{diagonal(1, 2, weight_t::lt(3)), upper(2, weight_t::le(0))};
    CHECK(split(g) == constraint_set_t(g.begin(), g.end()));
    CHECK(split({diagonal(2, 1, weight_t::le_inf())}).empty());
    auto eq = split(equals(1, weight_t::le(1)));
    CHECK(eq == constraint_set_t{upper(1, weight_t::le(1)), lower(1, weight_t::le(-1))});
}

TEST_CASE("pre of a change")
{
    constraint_set_t g{diagonal(2, 1, weight_t::le(3))};
    CHECK(pre_change(change_t{{1}}, g) == constraint_set_t{upper(2, weight_t::le(3))});
    CHECK(pre_change(change_t{{2}}, g) == constraint_set_t{lower(1, weight_t::le(3))});
    CHECK(pre_change(change_t{{1, 2}}, g).empty());
    CHECK(pre_change(change_t{}, g) == g);
    // x <= 5 with x reset projects to 0 <= 5, which is dropped
    CHECK(pre_change(change_t{{1}}, {upper(1, weight_t::le(5))}).empty());
}

TEST_CASE("pre of a program")
{
    constraint_set_t g{upper(2, weight_t::le(4))};
    guard_t a{upper(1, weight_t::le(1))};
    CHECK(pre_program({a}, g) == constraint_set_t{upper(1, weight_t::le(1)), upper(2, weight_t::le(4))});
    CHECK(pre_program({a, change_t{{2}}}, g) == constraint_set_t{upper(1, weight_t::le(1))});
    CHECK(pre_program({guard_t{}}, g) == g);
    // items are processed from right to left
    program_t p{change_t{{1}}, guard_t{diagonal(2, 1, weight_t::le(2))}};
    CHECK(pre_program(p, {}) == constraint_set_t{upper(2, weight_t::le(2))});
}

TEST_CASE("map of a single loop")
{
    auto m = corpus::load_text("system s kind ta\nclock history x\nevent a\nstate q initial\n"
                               "trans q -> q @ a : x <= 5; reset{x}\n");
    auto gm = compute_gmap(m);
    CHECK(gm[0] == constraint_set_t{upper(1, weight_t::le(5))});
    CHECK(dump_gmap(m, gm) == "q: {x <= 5}\n");
}

TEST_CASE("map of a state without outgoing transitions")
{
    auto m = corpus::load_text("system s kind gta\nclock future f\nevent a\nstate q initial\nstate r\n"
                               "init: f == 0\ntrans q -> r @ a : true\n");
    auto gm = compute_gmap(m);
    CHECK(gm[1] == constraint_set_t{upper(1, weight_t::zero())});
    CHECK(gm[0] == gm[1]);
}

TEST_CASE("map of the a^n b^m model")
{
    auto m = corpus::load("anbn.gta");
    clock_id_t x = *m.clocks().find("x"), y = *m.clocks().find("y"), z = *m.clocks().find("z");
    auto gm = compute_gmap(m);
    // hand expansion: base {y <= 0, z <= 0}; prog2 adds x == 1 and its reset
    // kills the x atoms of q1; prog1 contributes x == 0 and the y-z pair
    constraint_set_t q1{upper(y, weight_t::zero()), upper(z, weight_t::zero()), upper(x, weight_t::le(1)),
                        lower(x, weight_t::le(-1))};
    CHECK(gm[1] == q1);
    // prog1 read backwards: the y-z atoms project onto z after [y], and
    // every diagonal is gone once both clocks have been released
    constraint_set_t q0 = q1;
    for (auto c : {upper(x, weight_t::zero()), lower(x, weight_t::zero()), upper(z, weight_t::le(1)),
                   lower(z, weight_t::le(-1))})
        q0.insert(c);
    CHECK(gm[0] == q0);
}

TEST_CASE("map is a fixpoint")
{
    for (char const * f : {"anbn.gta", "toyeca_10_2.gta", "timer_loop.gta", "counter_machine.gta", "fire_alarm_k5.gta"}) {
        auto m = corpus::load(f);
        auto gm = compute_gmap(m);
        for (auto const & t : m.transitions()) {
            auto pre = pre_program(t.prog, gm[t.dst]);
            for (auto const & c : pre)
                CHECK(gm[t.src].count(c));
        }
        for (std::size_t q = 0; q < gm.size(); ++q)
            for (clock_id_t f : m.clocks().future())
                CHECK(gm[q].count(upper(f, weight_t::zero())));
    }
}

TEST_CASE("dump is sorted and deterministic")
{
    auto m = corpus::load("timer_loop.gta");
    auto gm = compute_gmap(m);
    auto d = dump_gmap(m, gm);
    CHECK(d == dump_gmap(m, compute_gmap(m)));
    CHECK(d.find("q2: {t_x <= 0, t_y <= 0}") != std::string::npos);
}
