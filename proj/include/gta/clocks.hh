#ifndef GTA_CLOCKS_HH
#define GTA_CLOCKS_HH

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gta {

using clock_id_t = std::uint32_t;

constexpr clock_id_t ZERO_CLOCK = 0;

enum class clock_sort_t : std::uint8_t { ZERO, HISTORY, FUTURE };

/*!
 \class clock_table_t
 \brief Clock declarations. Index 0 is the constant clock 0.
 */
class clock_table_t {
public:
    clock_table_t();

    clock_id_t add(std::string const & name, clock_sort_t sort, bool timer = false);

    std::size_t size() const noexcept { return names_.size(); }
    std::size_t clock_count() const noexcept { return names_.size() - 1; }

    std::string const & name(clock_id_t id) const { return names_.at(id); }
    clock_sort_t sort(clock_id_t id) const { return sorts_.at(id); }
    bool is_timer(clock_id_t id) const { return timers_.at(id); }
    bool is_history(clock_id_t id) const { return sorts_.at(id) == clock_sort_t::HISTORY; }
    bool is_future(clock_id_t id) const { return sorts_.at(id) == clock_sort_t::FUTURE; }

    std::optional<clock_id_t> find(std::string const & name) const;

    std::vector<clock_id_t> const & history() const noexcept { return history_; }
    std::vector<clock_id_t> const & future() const noexcept { return future_; }

    // 0 first, then history clocks, then future clocks, each in declaration order
    std::vector<clock_id_t> display_order() const;

private:
    std::vector<std::string> names_;
    std::vector<clock_sort_t> sorts_;
    std::vector<bool> timers_;
    std::vector<clock_id_t> history_;
    std::vector<clock_id_t> future_;
};

using clock_table_ptr_t = std::shared_ptr<clock_table_t const>;

// convenience for tests and generators: clocks named by sort letters, e.g. "hff"
clock_table_ptr_t make_clock_table(std::string const & sorts);

} // namespace gta

#endif // GTA_CLOCKS_HH
