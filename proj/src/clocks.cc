#include <stdexcept>

#include "gta/clocks.hh"

namespace gta {

clock_table_t::clock_table_t() : names_{"0"}, sorts_{clock_sort_t::ZERO}, timers_{false} {}

clock_id_t clock_table_t::add(std::string const & name, clock_sort_t sort, bool timer)
{
    if (sort == clock_sort_t::ZERO)
        throw std::invalid_argument("only the constant clock has sort ZERO");
    if (name == "0" || find(name).has_value())
        throw std::invalid_argument("duplicate clock " + name);
    if (timer && sort != clock_sort_t::FUTURE)
        throw std::invalid_argument("timer " + name + " must be a future clock");
    auto id = static_cast<clock_id_t>(names_.size());
    names_.push_back(name);
    sorts_.push_back(sort);
    timers_.push_back(timer);
    (sort == clock_sort_t::HISTORY ? history_ : future_).push_back(id);
    return id;
}

std::optional<clock_id_t> clock_table_t::find(std::string const & name) const
{
    for (clock_id_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

std::vector<clock_id_t> clock_table_t::display_order() const
{
    std::vector<clock_id_t> order{ZERO_CLOCK};
    order.insert(order.end(), history_.begin(), history_.end());
    order.insert(order.end(), future_.begin(), future_.end());
    return order;
}

clock_table_ptr_t make_clock_table(std::string const & sorts)
{
    auto t = std::make_shared<clock_table_t>();
    int h = 0, f = 0;
    for (char c : sorts) {
        if (c == 'h')
            t->add("h" + std::to_string(h++), clock_sort_t::HISTORY);
        else if (c == 'f')
            t->add("f" + std::to_string(f++), clock_sort_t::FUTURE);
        else
            throw std::invalid_argument("clock sort letters are h or f");
    }
    return t;
}

} // namespace gta
