#include "plurilab/textio.hpp"

#include <cctype>
#include <sstream>

namespace plurilab::textio {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw parse_error(std::string("expected '") + c + "'", i);
    }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    long integer() {
        skip_ws();
        std::size_t start = i;
        if (peek() == '+' || peek() == '-') ++i;
        std::size_t from = i;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == from) throw parse_error("expected an integer", start);
        return std::stol(s.substr(start, i - start));
    }
};

long inverse_mod(long a, long r) {
    long aa = ((a % r) + r) % r;
    for (long b = 1; b < r; ++b)
        if (aa * b % r == 1) return b;
    throw parse_error("weight not invertible mod r", 0);
}

// entry := [mult '*'] b '/' r [ '(' a ',' -a ',' 1 ')' ]
void parse_entry(Cursor& c, reid::Basket& basket) {
    c.skip_ws();
    long first = c.integer();
    long mult = 1;
    c.skip_ws();
    if (c.eat('*')) {
        mult = first;
        if (mult < 1) throw parse_error("multiplicity must be >= 1", c.i);
        first = c.integer();
        c.skip_ws();
    }
    c.expect('/');
    long r = c.integer();
    c.skip_ws();
    if (c.peek() == '(') {
        // 1/r(a,-a,1) with b the inverse of a mod r
        if (first != 1) throw parse_error("quotient-type form must start with 1/r", c.i);
        c.expect('(');
        long a = c.integer();
        c.skip_ws();
        c.expect(',');
        long minus_a = c.integer();
        c.skip_ws();
        c.expect(',');
        long one = c.integer();
        c.skip_ws();
        c.expect(')');
        if (one != 1 || ((a + minus_a) % r + r) % r != 0)
            throw parse_error("quotient-type form must be 1/r(a,-a,1)", c.i);
        basket.add(inverse_mod(a, r), r, mult);
        return;
    }
    basket.add(first, r, mult);
}

}  // namespace

reid::Basket parse_basket(const std::string& text) {
    reid::Basket basket;
    Cursor c{text};
    c.skip_ws();
    if (c.done()) return basket;
    parse_entry(c, basket);
    c.skip_ws();
    while (c.eat(',')) {
        parse_entry(c, basket);
        c.skip_ws();
    }
    if (!c.done()) throw parse_error("trailing characters in basket", c.i);
    return basket;
}

std::string format_basket(const reid::Basket& basket) {
    std::ostringstream os;
    bool first = true;
    for (const auto& e : basket.entries()) {
        if (!first) os << ",";
        first = false;
        if (e.mult > 1) os << e.mult << "*";
        os << e.b << "/" << e.r;
    }
    return os.str();
}

wps::WeightedHypersurface parse_hypersurface(const std::string& text) {
    Cursor c{text};
    wps::WeightedHypersurface x;
    x.degree = c.integer();
    c.skip_ws();
    c.expect(':');
    for (int i = 0; i < 5; ++i) {
        x.weights[i] = c.integer();
        c.skip_ws();
        if (i < 4) c.expect(',');
    }
    c.skip_ws();
    if (!c.done()) throw parse_error("trailing characters in hypersurface", c.i);
    wps::validate(x);
    return x;
}

std::string format_hypersurface(const wps::WeightedHypersurface& x) {
    std::ostringstream os;
    os << x.degree << ":";
    for (int i = 0; i < 5; ++i) os << (i ? "," : "") << x.weights[i];
    return os.str();
}

bounds::Scenario parse_scenario(const std::string& text) {
    bounds::Scenario sc;
    bool saw_m0 = false, saw_p = false, saw_beta = false, saw_sep = false;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) {
            if (tok == "even")
                sc.even_curve = true;
            else if (tok == "nonhyp")
                sc.nonhyperelliptic = true;
            else
                throw parse_error("unknown scenario flag '" + tok + "'", 0);
            continue;
        }
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "m0") {
            sc.m0 = std::stol(val);
            saw_m0 = true;
        } else if (key == "p") {
            sc.p = std::stol(val);
            saw_p = true;
        } else if (key == "beta") {
            sc.beta = parse_rational(val);
            saw_beta = true;
        } else if (key == "g") {
            sc.g_min = std::stol(val);
        } else if (key == "sep") {
            sc.sep_m_min = std::stol(val);
            saw_sep = true;
        } else if (key == "xi0") {
            sc.xi0 = parse_rational(val);
        } else {
            throw parse_error("unknown scenario key '" + key + "'", 0);
        }
    }
    if (!saw_m0 || !saw_p || !saw_beta)
        throw parse_error("scenario needs at least m0=, p=, beta=", 0);
    if (!saw_sep) sc.sep_m_min = sc.m0 + 2;
    sc.label = "scenario";
    bounds::validate(sc);
    return sc;
}

std::string format_scenario(const bounds::Scenario& sc) {
    std::ostringstream os;
    os << "m0=" << sc.m0 << " p=" << sc.p << " beta=" << to_string(sc.beta) << " g=" << sc.g_min
       << " sep=" << sc.sep_m_min;
    if (sc.xi0) os << " xi0=" << to_string(*sc.xi0);
    if (sc.even_curve) os << " even";
    if (sc.nonhyperelliptic) os << " nonhyp";
    return os.str();
}

std::map<long, Int> parse_pm_list(const std::string& text) {
    std::map<long, Int> out;
    Cursor c{text};
    c.skip_ws();
    if (c.done()) throw parse_error("empty plurigenus list", 0);
    while (true) {
        long m = c.integer();
        c.skip_ws();
        c.expect('=');
        long v = c.integer();
        if (out.count(m)) throw parse_error("duplicate m in plurigenus list", c.i);
        out[m] = v;
        c.skip_ws();
        if (!c.eat(',')) break;
    }
    c.skip_ws();
    if (!c.done()) throw parse_error("trailing characters in plurigenus list", c.i);
    return out;
}

std::pair<long, long> parse_m_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        Cursor c{text};
        long m = c.integer();
        c.skip_ws();
        if (!c.done()) throw parse_error("trailing characters in m range", c.i);
        return {m, m};
    }
    Cursor a{text};
    long lo = a.integer();
    if (a.i != dots) throw parse_error("bad m range", a.i);
    std::string rest = text.substr(dots + 2);
    Cursor b{rest};
    long hi = b.integer();
    b.skip_ws();
    if (!b.done()) throw parse_error("trailing characters in m range", dots + 2 + b.i);
    if (hi < lo) throw parse_error("empty m range", 0);
    return {lo, hi};
}

std::vector<long> parse_schedule(const std::string& text) {
    std::vector<long> out;
    Cursor c{text};
    c.skip_ws();
    if (c.done()) return out;
    out.push_back(c.integer());
    c.skip_ws();
    while (c.eat(',')) {
        out.push_back(c.integer());
        c.skip_ws();
    }
    if (!c.done()) throw parse_error("trailing characters in schedule", c.i);
    return out;
}

}  // namespace plurilab::textio
