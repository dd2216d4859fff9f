#include "plurilab/wps.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace plurilab::wps {

bool well_formed(const WeightedHypersurface& x) {
    for (int skip = 0; skip < 5; ++skip) {
        long g = 0;
        for (int i = 0; i < 5; ++i)
            if (i != skip) g = std::gcd(g, x.weights[i]);
        if (g != 1) return false;
    }
    return true;
}

void validate(const WeightedHypersurface& x) {
    for (long a : x.weights)
        if (a <= 0) throw std::invalid_argument("hypersurface: weights must be positive");
    if (x.degree <= 0) throw std::invalid_argument("hypersurface: degree must be positive");
    if (!well_formed(x))
        throw std::invalid_argument("hypersurface: some 4 of the weights share a factor");
}

long canonical_weight(const WeightedHypersurface& x) {
    long s = 0;
    for (long a : x.weights) s += a;
    return x.degree - s;
}

namespace {

// Number of monomials of weighted degree exactly n.
Int raw_count(const std::array<long, 5>& weights, long n) {
    if (n < 0) return 0;
    std::vector<Int> dp(static_cast<std::size_t>(n) + 1);
    dp[0] = 1;
    for (long a : weights)
        for (long i = a; i <= n; ++i) dp[i] += dp[i - a];
    return dp[n];
}

}  // namespace

Int hilbert_coefficient(const WeightedHypersurface& x, long n) {
    validate(x);
    if (n < 0) throw std::invalid_argument("hilbert_coefficient: n must be >= 0");
    return raw_count(x.weights, n) - raw_count(x.weights, n - x.degree);
}

Int plurigenus(const WeightedHypersurface& x, long m) {
    validate(x);
    if (m < 1) throw std::invalid_argument("plurigenus: m must be >= 1");
    long k = canonical_weight(x);
    if (k < 1)
        throw std::domain_error("plurigenus: canonical weight k = d - sum(a_i) must be >= 1");
    return hilbert_coefficient(x, m * k);
}

Rat k3(const WeightedHypersurface& x) {
    validate(x);
    Int k(canonical_weight(x));
    Int prod = 1;
    for (long a : x.weights) prod *= a;
    Rat v(k * k * k * x.degree, prod);
    v.canonicalize();
    return v;
}

}  // namespace plurilab::wps
