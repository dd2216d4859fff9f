#pragma once

#include <string>
#include <vector>

#include "plurilab/rational.hpp"

namespace plurilab::reid {

/// A terminal cyclic quotient singularity of local index r, written with the
/// parameter b (0 < b < r, gcd(b, r) = 1). The weight a of the type
/// 1/r(a,-a,1) is the inverse of b mod r and is not stored.
struct QuotientType {
    long b = 1;
    long r = 2;

    bool operator==(const QuotientType&) const = default;
    auto operator<=>(const QuotientType&) const = default;
};

/// Throws std::invalid_argument unless 0 < b < r, r >= 2, gcd(b, r) = 1.
void validate(const QuotientType& q);

/// The weight a with a*b = 1 mod r.
long weight_of(const QuotientType& q);

/// Conjugate parameter: b -> min(b, r-b). The correction terms cannot tell
/// the two apart.
QuotientType conjugate_normalized(const QuotientType& q);

struct BasketEntry {
    long b = 1;
    long r = 2;
    long mult = 1;

    bool operator==(const BasketEntry&) const = default;
};

/// A multiset of quotient types, stored merged and sorted by (r, b).
class Basket {
  public:
    Basket() = default;
    explicit Basket(std::vector<BasketEntry> entries);

    void add(long b, long r, long mult = 1);

    const std::vector<BasketEntry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    /// Number of singularity points counted with multiplicity.
    long size() const;
    /// lcm of the local indices r (diagnostic only).
    Int index_lcm() const;

    /// Same multiset with every b replaced by min(b, r-b).
    Basket normalized() const;

    bool operator==(const Basket&) const = default;

  private:
    std::vector<BasketEntry> entries_;
};

/// Numerical shadow of a minimal 3-fold: chi(O), K^3 and the basket.
struct PluriData {
    Int chi = 0;
    Rat k3 = 1;
    Basket basket;
};

/// Correction term R_m(Q) of the plurigenus formula:
///   R_m(Q) = (r^2-1)/(12r) (m - m~) + sum_{j=0}^{m~-1} bj~(r - bj~)/(2r),
/// m~ the smallest residue of m mod r. Requires m >= 2.
Rat correction(const QuotientType& q, long m);

/// P_m = (1/12) m(m-1)(2m-1) K^3 - (2m-1) chi(O) + sum_Q R_m(Q), for m >= 2.
/// The value is an exact rational; integrality is the caller's concern.
Rat plurigenus(const PluriData& d, long m);

/// All types (b, r) with 2 <= r <= r_max in ascending (r, b) order.
std::vector<QuotientType> enumerate_quotient_types(long r_max);

struct MonotonicityViolation {
    long b, r, m;
};

/// Checks R_5 >= R_4 >= R_3 >= R_2 for every enumerated type. The returned
/// list is expected to be empty.
std::vector<MonotonicityViolation> check_monotonicity(long r_max);

}  // namespace plurilab::reid
