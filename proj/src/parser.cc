#include <cctype>
#include <fstream>
#include <sstream>

#include "gta/parser.hh"

namespace gta {

std::string to_string(parse_error_t const & e)
{
    return std::to_string(e.line) + ":" + std::to_string(e.column) + ": " + e.message;
}

namespace {

enum class tok_t { IDENT, INT, SYM, END };

struct token_t {
    tok_t kind{tok_t::END};
    std::string text;
    int col{0};
};

struct line_error_t {
    int col;
    std::string message;
};

std::vector<token_t> tokenize(std::string const & line)
{
    static const char * two[] = {"->", ":=", "&&", "<=", ">=", "=="};
    std::vector<token_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        int col = static_cast<int>(i) + 1;
        if (c == '#')
            break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_'))
                ++j;
            out.push_back({tok_t::IDENT, line.substr(i, j - i), col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j])))
                ++j;
            out.push_back({tok_t::INT, line.substr(i, j - i), col});
            i = j;
            continue;
        }
        bool matched = false;
        for (auto t : two) {
            if (line.compare(i, 2, t) == 0) {
                out.push_back({tok_t::SYM, t, col});
                i += 2;
                matched = true;
                break;
            }
        }
        if (matched)
            continue;
        if (std::string("<>-@:;{},").find(c) != std::string::npos) {
            out.push_back({tok_t::SYM, std::string(1, c), col});
            ++i;
            continue;
        }
        throw line_error_t{col, std::string("unexpected character '") + c + "'"};
    }
    out.push_back({tok_t::END, "", static_cast<int>(line.size()) + 1});
    return out;
}

bool is_reserved(std::string const & s)
{
    static const char * words[] = {"system",  "kind", "clock", "history", "future", "timer",   "event", "state",
                                   "initial", "accepting", "init", "final", "trans", "reset", "release", "set",
                                   "timeout", "stop", "true", "inf"};
    for (auto w : words)
        if (s == w)
            return true;
    return false;
}

class cursor_t {
public:
    explicit cursor_t(std::vector<token_t> toks) : toks_(std::move(toks)) {}

    token_t const & peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
    token_t const & next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    bool at_end() const { return peek().kind == tok_t::END; }

    bool is_sym(std::string const & s, std::size_t k = 0) const
    {
        return peek(k).kind == tok_t::SYM && peek(k).text == s;
    }
    bool is_word(std::string const & s, std::size_t k = 0) const
    {
        return peek(k).kind == tok_t::IDENT && peek(k).text == s;
    }

    [[noreturn]] void fail(std::string const & msg) const { throw line_error_t{peek().col, msg}; }

    void expect_sym(std::string const & s)
    {
        if (!is_sym(s))
            fail("expected '" + s + "'" + found());
        next();
    }
    void expect_word(std::string const & s)
    {
        if (!is_word(s))
            fail("expected '" + s + "'" + found());
        next();
    }
    std::string ident(std::string const & what)
    {
        if (peek().kind != tok_t::IDENT)
            fail("expected " + what + found());
        return next().text;
    }
    void expect_end()
    {
        if (!at_end())
            fail("unexpected '" + peek().text + "'");
    }
    std::string found() const { return at_end() ? ", found end of line" : ", found '" + peek().text + "'"; }

private:
    std::vector<token_t> toks_;
    std::size_t pos_{0};
};

struct line_t {
    int number;
    std::string keyword;
    std::vector<token_t> toks;
};

class parser_t {
public:
    parse_result_t run(std::string const & text)
    {
        split(text);
        for (auto & l : lines_)
            guarded(l, [&](cursor_t & c) {
                if (l.keyword == "system")
                    system_line(c);
            });
        for (auto & l : lines_)
            guarded(l, [&](cursor_t & c) {
                if (l.keyword == "clock")
                    clock_line(c);
                else if (l.keyword == "event")
                    event_line(c);
                else if (l.keyword == "state")
                    state_line(c);
                else if (l.keyword == "eca-trans")
                    eca_event(c);
            });
        for (auto & l : lines_)
            guarded(l, [&](cursor_t & c) {
                if (l.keyword == "init")
                    cond_line(c, true);
                else if (l.keyword == "final")
                    cond_line(c, false);
                else if (l.keyword == "trans")
                    trans_line(c, l.number);
                else if (l.keyword == "eca-trans")
                    eca_trans_line(c, l.number);
                else if (l.keyword != "system" && l.keyword != "clock" && l.keyword != "event" &&
                         l.keyword != "state")
                    c.fail("unknown declaration '" + l.keyword + "'");
            });
        finish();
        parse_result_t r;
        r.errors = errors_;
        if (errors_.empty())
            r.model = std::move(m_);
        return r;
    }

private:
    void split(std::string const & text)
    {
        std::istringstream is(text);
        std::string raw;
        int n = 0;
        while (std::getline(is, raw)) {
            ++n;
            if (!raw.empty() && raw.back() == '\r')
                raw.pop_back();
            try {
                auto toks = tokenize(raw);
                if (toks.front().kind == tok_t::END)
                    continue;
                std::string kw = toks.front().text;
                std::size_t skip = 1;
                if (kw == "eca" && toks.size() > 2 && toks[1].text == "-" && toks[2].text == "trans" &&
                    toks[1].col == toks[0].col + 3 && toks[2].col == toks[1].col + 1) {
                    kw = "eca-trans";
                    skip = 3;
                }
                toks.erase(toks.begin(), toks.begin() + static_cast<long>(skip));
                lines_.push_back({n, kw, std::move(toks)});
            }
            catch (line_error_t const & e) {
                errors_.push_back({n, e.col, e.message});
            }
        }
    }

    template <class F> void guarded(line_t & l, F && f)
    {
        cursor_t c(l.toks);
        try {
            f(c);
        }
        catch (line_error_t const & e) {
            errors_.push_back({l.number, e.col, e.message});
        }
    }

    void system_line(cursor_t & c)
    {
        if (seen_system_)
            c.fail("duplicate system declaration");
        seen_system_ = true;
        m_.name = c.ident("system name");
        if (c.is_word("kind")) {
            c.next();
            std::string k = c.ident("kind");
            if (k == "ta")
                m_.kind = model_kind_t::TA;
            else if (k == "eca")
                m_.kind = model_kind_t::ECA;
            else if (k == "timer")
                m_.kind = model_kind_t::TIMER;
            else if (k == "gta")
                m_.kind = model_kind_t::GTA;
            else
                c.fail("unknown kind '" + k + "'");
        }
        c.expect_end();
    }

    void declare_clock(cursor_t & c, std::string const & name, clock_sort_t s, bool timer)
    {
        if (is_reserved(name))
            c.fail("'" + name + "' is a reserved word");
        if (m_.clocks().find(name))
            c.fail("duplicate clock " + name);
        m_.clocks().add(name, s, timer);
    }

    void clock_line(cursor_t & c)
    {
        std::string sort = c.ident("clock sort");
        int col = c.peek().col;
        std::string name = c.ident("clock name");
        c.expect_end();
        try {
            if (sort == "history")
                declare_clock(c, name, clock_sort_t::HISTORY, false);
            else if (sort == "future")
                declare_clock(c, name, clock_sort_t::FUTURE, false);
            else if (sort == "timer")
                declare_clock(c, name, clock_sort_t::FUTURE, true);
            else
                throw line_error_t{col - static_cast<int>(sort.size()) - 1, "unknown clock sort '" + sort + "'"};
        }
        catch (line_error_t const & e) {
            throw line_error_t{col, e.message};
        }
    }

    void event_clocks(std::string const & ev)
    {
        for (auto [name, s] : {std::pair{history_clock_name(ev), clock_sort_t::HISTORY},
                               std::pair{future_clock_name(ev), clock_sort_t::FUTURE}}) {
            if (m_.clocks().find(name))
                continue;
            m_.implicit_clocks.insert(m_.clocks().add(name, s));
        }
    }

    void event_line(cursor_t & c)
    {
        int col = c.peek().col;
        std::string name = c.ident("event name");
        c.expect_end();
        if (m_.find_event(name))
            throw line_error_t{col, "duplicate event " + name};
        m_.add_event(name);
        if (m_.kind == model_kind_t::ECA)
            event_clocks(name);
    }

    void state_line(cursor_t & c)
    {
        int col = c.peek().col;
        std::string name = c.ident("state name");
        bool initial = false, accepting = false;
        while (!c.at_end()) {
            std::string f = c.ident("'initial' or 'accepting'");
            if (f == "initial")
                initial = true;
            else if (f == "accepting")
                accepting = true;
            else
                c.fail("unknown state flag '" + f + "'");
        }
        if (m_.find_state(name))
            throw line_error_t{col, "duplicate state " + name};
        m_.add_state(name, initial, accepting);
    }

    void eca_event(cursor_t & c)
    {
        c.ident("state name");
        c.expect_sym("->");
        c.ident("state name");
        c.expect_sym("@");
        std::string ev = c.ident("event name");
        if (!m_.find_event(ev))
            m_.implicit_events.insert(m_.add_event(ev));
        event_clocks(ev);
    }

    clock_id_t resolve_term(cursor_t & c, std::string & text)
    {
        if (c.peek().kind == tok_t::INT) {
            if (c.peek().text != "0")
                c.fail("expected a clock or 0, found '" + c.peek().text + "'");
            c.next();
            text = "0";
            return ZERO_CLOCK;
        }
        if (c.peek().kind != tok_t::IDENT || is_reserved(c.peek().text))
            c.fail("expected a clock" + c.found());
        text = c.peek().text;
        auto id = m_.clocks().find(text);
        if (!id)
            c.fail("unknown clock " + text);
        c.next();
        return *id;
    }

    static weight_t weight_of(strictness_t s, bool neg, std::string const & digits, bool inf)
    {
        if (inf)
            return weight_t::make(s, neg ? bound_kind_t::NEG_INF : bound_kind_t::POS_INF);
        bound_t v = std::stoll(digits);
        return weight_t::make(s, bound_kind_t::FINITE, neg ? -v : v);
    }

    void atom(cursor_t & c, guard_t & out, std::vector<surface_atom_t> & surf)
    {
        int col = c.peek().col;
        surface_atom_t sa;
        clock_id_t a = resolve_term(c, sa.lhs);
        clock_id_t b = ZERO_CLOCK;
        if (c.is_sym("-") && (c.peek(1).kind == tok_t::IDENT || c.peek(1).kind == tok_t::INT)) {
            c.next();
            b = resolve_term(c, sa.rhs);
        }
        if (a == b)
            throw line_error_t{col, "constraint needs two distinct operands"};
        auto const & clocks = m_.clocks();
        if (a != ZERO_CLOCK && b != ZERO_CLOCK && clocks.is_future(a) && clocks.is_future(b))
            for (clock_id_t z : {a, b})
                if (clocks.is_timer(z))
                    throw line_error_t{col, "timer " + clocks.name(z) + " occurs in a diagonal between future clocks"};

        static const std::pair<const char *, cmp_t> cmps[] = {
            {"<=", cmp_t::LE}, {"<", cmp_t::LT}, {"==", cmp_t::EQ}, {">=", cmp_t::GE}, {">", cmp_t::GT}};
        bool found = false;
        for (auto [s, k] : cmps)
            if (c.is_sym(s)) {
                sa.cmp = k;
                found = true;
            }
        if (!found)
            c.fail("expected a comparison" + c.found());
        c.next();

        bool neg = false;
        if (c.is_sym("-")) {
            neg = true;
            c.next();
        }
        bool inf = false;
        std::string digits;
        if (c.is_word("inf"))
            inf = true;
        else if (c.peek().kind == tok_t::INT)
            digits = c.peek().text;
        else
            c.fail("expected an integer or inf" + c.found());
        c.next();
        sa.constant = (neg ? "-" : "") + (inf ? std::string("inf") : digits);

        auto le = [&](strictness_t s) { out.push_back({b, a, weight_of(s, neg, digits, inf)}); };
        auto ge = [&](strictness_t s) { out.push_back({a, b, weight_of(s, !neg, digits, inf)}); };
        switch (sa.cmp) {
        case cmp_t::LE:
            le(strictness_t::LE);
            break;
        case cmp_t::LT:
            le(strictness_t::LT);
            break;
        case cmp_t::GE:
            ge(strictness_t::LE);
            break;
        case cmp_t::GT:
            ge(strictness_t::LT);
            break;
        case cmp_t::EQ:
            le(strictness_t::LE);
            ge(strictness_t::LE);
            break;
        }
        surf.push_back(sa);
    }

    void guard(cursor_t & c, guard_t & out, std::vector<surface_atom_t> & surf)
    {
        if (c.is_word("true")) {
            c.next();
            return;
        }
        atom(c, out, surf);
        while (c.is_sym("&&")) {
            c.next();
            atom(c, out, surf);
        }
    }

    void cond_line(cursor_t & c, bool init)
    {
        c.expect_sym(":");
        auto & target = init ? m_.init_surface : m_.final_surface;
        if (target)
            c.fail(std::string("duplicate ") + (init ? "init" : "final") + " declaration");
        guard_t g;
        std::vector<surface_atom_t> surf;
        guard(c, g, surf);
        c.expect_end();
        (init ? m_.init : m_.final) = g;
        target = surf;
    }

    clock_id_t future_clock(cursor_t & c)
    {
        std::string name;
        int col = c.peek().col;
        clock_id_t x = resolve_term(c, name);
        if (x == ZERO_CLOCK || !m_.clocks().is_future(x))
            throw line_error_t{col, "'" + name + "' is not a future clock"};
        return x;
    }

    std::vector<clock_id_t> id_set(cursor_t & c, bool history, surface_item_t & si)
    {
        c.expect_sym("{");
        std::vector<clock_id_t> ids;
        while (!c.is_sym("}")) {
            std::string name;
            int col = c.peek().col;
            clock_id_t x = resolve_term(c, name);
            if (x == ZERO_CLOCK)
                throw line_error_t{col, "the clock 0 cannot be changed"};
            if (history != m_.clocks().is_history(x))
                throw line_error_t{col, "'" + name + "' is not a " + (history ? "history" : "future") + " clock"};
            ids.push_back(x);
            si.ids.push_back(name);
            if (!c.is_sym("}"))
                c.expect_sym(",");
        }
        c.next();
        return ids;
    }

    void item(cursor_t & c, program_t & prog, std::vector<surface_item_t> & surf)
    {
        surface_item_t si;
        using k = surface_item_t::kind_t;
        if ((c.is_word("reset") || c.is_word("release")) && c.is_sym("{", 1)) {
            bool history = c.is_word("reset");
            c.next();
            si.kind = history ? k::RESET : k::RELEASE;
            prog.push_back(change_t{id_set(c, history, si)});
        }
        else if (c.is_word("set")) {
            c.next();
            si.kind = k::SET;
            clock_id_t t = future_clock(c);
            si.ids.push_back(m_.clocks().name(t));
            c.expect_sym(":=");
            if (c.peek().kind != tok_t::INT)
                c.fail("expected a natural number" + c.found());
            si.value = std::stoll(c.next().text);
            auto p = timer_set(t, si.value);
            prog.insert(prog.end(), p.begin(), p.end());
        }
        else if (c.is_word("timeout") || c.is_word("stop")) {
            bool timeout = c.is_word("timeout");
            c.next();
            si.kind = timeout ? k::TIMEOUT : k::STOP;
            clock_id_t t = future_clock(c);
            si.ids.push_back(m_.clocks().name(t));
            auto p = timeout ? timer_timeout(t) : timer_stop(t);
            prog.insert(prog.end(), p.begin(), p.end());
        }
        else {
            si.kind = k::GUARD;
            guard_t g;
            guard(c, g, si.atoms);
            prog.push_back(g);
        }
        surf.push_back(si);
    }

    void header(cursor_t & c, transition_t & t)
    {
        auto state = [&]() {
            int col = c.peek().col;
            std::string s = c.ident("state name");
            auto q = m_.find_state(s);
            if (!q)
                throw line_error_t{col, "unknown state " + s};
            return *q;
        };
        t.src = state();
        c.expect_sym("->");
        t.dst = state();
        c.expect_sym("@");
        int col = c.peek().col;
        std::string ev = c.ident("event name");
        auto e = m_.find_event(ev);
        if (!e)
            throw line_error_t{col, "unknown event " + ev};
        t.event = *e;
        c.expect_sym(":");
    }

    void trans_line(cursor_t & c, int line)
    {
        transition_t t;
        t.line = line;
        header(c, t);
        item(c, t.prog, t.surface);
        while (c.is_sym(";")) {
            c.next();
            item(c, t.prog, t.surface);
        }
        c.expect_end();
        m_.transitions().push_back(std::move(t));
    }

    void eca_trans_line(cursor_t & c, int line)
    {
        transition_t t;
        t.line = line;
        t.eca = true;
        header(c, t);
        surface_item_t si;
        guard_t g;
        guard(c, g, si.atoms);
        c.expect_end();
        std::string const & ev = m_.events()[t.event];
        auto h = m_.clocks().find(history_clock_name(ev));
        auto f = m_.clocks().find(future_clock_name(ev));
        t.prog = eca_program(*h, *f, g);
        t.surface.push_back(si);
        m_.transitions().push_back(std::move(t));
    }

    void finish()
    {
        int initials = 0;
        for (auto const & s : m_.states())
            initials += s.initial ? 1 : 0;
        if (initials != 1)
            errors_.push_back({0, 0, initials == 0 ? "no initial state" : "more than one initial state"});
        if (!m_.init_surface) {
            auto d = default_init(m_.kind, m_.clocks());
            if (!d)
                errors_.push_back({0, 0, "missing init guard"});
            else
                m_.init = *d;
        }
        if (!m_.final_surface)
            m_.final = default_final(m_.kind, m_.clocks());
    }

    std::vector<line_t> lines_;
    std::vector<parse_error_t> errors_;
    model_t m_;
    bool seen_system_{false};
};

std::string cmp_text(cmp_t k)
{
    switch (k) {
    case cmp_t::LT:
        return "<";
    case cmp_t::LE:
        return "<=";
    case cmp_t::EQ:
        return "==";
    case cmp_t::GE:
        return ">=";
    case cmp_t::GT:
        return ">";
    }
    return "<=";
}

std::string atoms_text(std::vector<surface_atom_t> const & atoms)
{
    if (atoms.empty())
        return "true";
    std::string s;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        auto const & a = atoms[i];
        if (i > 0)
            s += " && ";
        s += a.lhs;
        if (!a.rhs.empty())
            s += " - " + a.rhs;
        s += " " + cmp_text(a.cmp) + " " + a.constant;
    }
    return s;
}

std::vector<surface_atom_t> surface_of(guard_t const & g, clock_table_t const & clocks)
{
    std::vector<surface_atom_t> out;
    for (auto const & c : g) {
        surface_atom_t a;
        a.lhs = clocks.name(c.y);
        if (c.x != ZERO_CLOCK)
            a.rhs = clocks.name(c.x);
        a.cmp = c.w.is_strict() ? cmp_t::LT : cmp_t::LE;
        std::string w = to_string(c.w);
        a.constant = w.substr(c.w.is_strict() ? 1 : 2);
        out.push_back(a);
    }
    return out;
}

std::string ids_text(std::vector<std::string> const & ids)
{
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i)
        s += (i ? ", " : "") + ids[i];
    return s + "}";
}

std::string items_text(transition_t const & t, clock_table_t const & clocks)
{
    using k = surface_item_t::kind_t;
    std::vector<std::string> parts;
    if (!t.surface.empty()) {
        for (auto const & si : t.surface) {
            switch (si.kind) {
            case k::GUARD:
                parts.push_back(atoms_text(si.atoms));
                break;
            case k::RESET:
                parts.push_back("reset" + ids_text(si.ids));
                break;
            case k::RELEASE:
                parts.push_back("release" + ids_text(si.ids));
                break;
            case k::SET:
                parts.push_back("set " + si.ids.at(0) + " := " + std::to_string(si.value));
                break;
            case k::TIMEOUT:
                parts.push_back("timeout " + si.ids.at(0));
                break;
            case k::STOP:
                parts.push_back("stop " + si.ids.at(0));
                break;
            }
        }
    }
    else {
        for (auto const & item : t.prog) {
            if (auto g = std::get_if<guard_t>(&item)) {
                parts.push_back(atoms_text(surface_of(*g, clocks)));
                continue;
            }
            std::vector<std::string> hs, fs;
            for (clock_id_t x : std::get<change_t>(item).clocks)
                (clocks.is_history(x) ? hs : fs).push_back(clocks.name(x));
            if (!hs.empty() || fs.empty())
                parts.push_back("reset" + ids_text(hs));
            if (!fs.empty())
                parts.push_back("release" + ids_text(fs));
        }
    }
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? "; " : "") + parts[i];
    return s;
}

} // namespace

parse_result_t parse_model(std::string const & text) { return parser_t{}.run(text); }

parse_result_t parse_model_file(std::string const & path)
{
    std::ifstream in(path);
    if (!in) {
        parse_result_t r;
        r.errors.push_back({0, 0, "cannot open " + path});
        return r;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model(ss.str());
}

std::string print_model(model_t const & m)
{
    auto const & clocks = m.clocks();
    std::ostringstream os;
    os << "system " << m.name << " kind " << to_string(m.kind) << "\n";
    for (clock_id_t x = 1; x < clocks.size(); ++x) {
        if (m.implicit_clocks.count(x))
            continue;
        os << "clock " << (clocks.is_history(x) ? "history" : (clocks.is_timer(x) ? "timer" : "future")) << " "
           << clocks.name(x) << "\n";
    }
    for (std::size_t e = 0; e < m.events().size(); ++e)
        if (!m.implicit_events.count(e))
            os << "event " << m.events()[e] << "\n";
    for (auto const & s : m.states()) {
        os << "state " << s.name;
        if (s.initial)
            os << " initial";
        if (s.accepting)
            os << " accepting";
        os << "\n";
    }
    auto init_default = default_init(m.kind, clocks);
    if (m.init_surface)
        os << "init: " << atoms_text(*m.init_surface) << "\n";
    else if (!init_default || *init_default != m.init)
        os << "init: " << atoms_text(surface_of(m.init, clocks)) << "\n";
    if (m.final_surface)
        os << "final: " << atoms_text(*m.final_surface) << "\n";
    else if (default_final(m.kind, clocks) != m.final)
        os << "final: " << atoms_text(surface_of(m.final, clocks)) << "\n";
    for (auto const & t : m.transitions()) {
        os << (t.eca ? "eca-trans " : "trans ") << m.states()[t.src].name << " -> " << m.states()[t.dst].name
           << " @ " << m.events()[t.event] << " : " << items_text(t, clocks) << "\n";
    }
    return os.str();
}

} // namespace gta
