#include "plurilab/reid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace plurilab::reid {

void validate(const QuotientType& q) {
    if (q.r < 2) throw std::invalid_argument("quotient type: local index r must be >= 2");
    if (q.b <= 0 || q.b >= q.r)
        throw std::invalid_argument("quotient type: b must satisfy 0 < b < r");
    if (std::gcd(q.b, q.r) != 1)
        throw std::invalid_argument("quotient type: b and r must be coprime");
}

long weight_of(const QuotientType& q) {
    validate(q);
    for (long a = 1; a < q.r; ++a)
        if ((a * q.b) % q.r == 1) return a;
    throw std::logic_error("no inverse mod r");  // unreachable for valid input
}

QuotientType conjugate_normalized(const QuotientType& q) {
    validate(q);
    return {std::min(q.b, q.r - q.b), q.r};
}

Basket::Basket(std::vector<BasketEntry> entries) {
    for (const auto& e : entries) add(e.b, e.r, e.mult);
}

void Basket::add(long b, long r, long mult) {
    validate({b, r});
    if (mult < 1) throw std::invalid_argument("basket: multiplicity must be >= 1");
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, b},
                               [](const BasketEntry& e, const std::pair<long, long>& key) {
                                   return std::pair{e.r, e.b} < key;
                               });
    if (it != entries_.end() && it->r == r && it->b == b)
        it->mult += mult;
    else
        entries_.insert(it, {b, r, mult});
}

long Basket::size() const {
    long n = 0;
    for (const auto& e : entries_) n += e.mult;
    return n;
}

Int Basket::index_lcm() const {
    Int l = 1;
    for (const auto& e : entries_) mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), e.r);
    return l;
}

Basket Basket::normalized() const {
    Basket out;
    for (const auto& e : entries_) out.add(std::min(e.b, e.r - e.b), e.r, e.mult);
    return out;
}

Rat correction(const QuotientType& q, long m) {
    validate(q);
    if (m < 2) throw std::domain_error("correction term: m must be >= 2");
    const long r = q.r, b = q.b;
    const long mbar = m % r;
    Rat total(Int(r) * r - 1, Int(12) * r);
    total *= (m - mbar);
    for (long j = 1; j < mbar; ++j) {
        long t = b % r * (j % r) % r;
        total += Rat(Int(t) * (r - t), Int(2) * r);
    }
    total.canonicalize();
    return total;
}

Rat plurigenus(const PluriData& d, long m) {
    if (m < 2) throw std::domain_error("plurigenus formula: m must be >= 2");
    if (d.k3 <= 0) throw std::invalid_argument("plurigenus formula: K^3 must be positive");
    Rat poly(Int(m) * (m - 1) * (2 * m - 1), 12);
    poly.canonicalize();
    Rat total = poly * d.k3 - Rat(2 * m - 1) * Rat(d.chi);
    for (const auto& e : d.basket.entries())
        total += Rat(e.mult) * correction({e.b, e.r}, m);
    total.canonicalize();
    return total;
}

std::vector<QuotientType> enumerate_quotient_types(long r_max) {
    if (r_max < 2) throw std::invalid_argument("enumerate_quotient_types: r_max must be >= 2");
    std::vector<QuotientType> out;
    for (long r = 2; r <= r_max; ++r)
        for (long b = 1; b < r; ++b)
            if (std::gcd(b, r) == 1) out.push_back({b, r});
    return out;
}

std::vector<MonotonicityViolation> check_monotonicity(long r_max) {
    std::vector<MonotonicityViolation> out;
    for (const auto& q : enumerate_quotient_types(r_max)) {
        Rat prev = correction(q, 2);
        for (long m = 3; m <= 5; ++m) {
            Rat cur = correction(q, m);
            if (cur < prev) out.push_back({q.b, q.r, m});
            prev = cur;
        }
    }
    return out;
}

}  // namespace plurilab::reid
