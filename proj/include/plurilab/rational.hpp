#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace plurilab {

using Int = mpz_class;
using Rat = mpq_class;

struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Exact ceiling of a rational.
Int ceil_rat(const Rat& x);

/// Exact floor of a rational.
Int floor_rat(const Rat& x);

/// Least integer strictly greater than x.
Int strict_above(const Rat& x);

inline bool is_integer(const Rat& x) { return x.get_den() == 1; }

/// Parses "p/q" or an integer literal. Denominator must be nonzero.
Rat parse_rational(const std::string& text);

/// Canonical text form: "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& x);

inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace plurilab
