#include "plurilab/rational.hpp"

#include <cctype>

namespace plurilab {

Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Int strict_above(const Rat& x) { return floor_rat(x) + 1; }

Rat parse_rational(const std::string& text) {
    std::size_t i = 0, n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t digits_from = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == digits_from) throw parse_error("expected a number", start);
    Int num(text.substr(start, i - start));
    Int den(1);
    if (i < n && text[i] == '/') {
        ++i;
        std::size_t dfrom = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == dfrom) throw parse_error("expected a denominator", dfrom);
        den = Int(text.substr(dfrom, i - dfrom));
        if (den == 0) throw parse_error("zero denominator", dfrom);
    }
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i != n) throw parse_error("trailing characters after rational", i);
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace plurilab
