#include <random>

#include "doctest.h"
#include "plurilab/reid.hpp"
#include "plurilab/textio.hpp"

using namespace plurilab;
using reid::correction;
using reid::QuotientType;

namespace {

// Independent evaluation of the correction term: plain sum over the defining
// expression, no shortcuts shared with the library path.
Rat correction_oracle(long b, long r, long m) {
    long mbar = m % r;
    Rat total = Rat(Int(r) * r - 1, Int(12) * r) * Rat(m - mbar);
    for (long j = 0; j <= mbar - 1; ++j) {
        long res = (b * j) % r;
        total += Rat(Int(res) * (r - res), Int(2) * r);
    }
    total.canonicalize();
    return total;
}

}  // namespace

TEST_CASE("correction term: values fixed by the derivation") {
    CHECK(correction({1, 2}, 3) == make_rat(1, 4));
    CHECK(correction({1, 3}, 3) == make_rat(2, 3));
    CHECK(correction({1, 3}, 2) == make_rat(1, 3));
    CHECK(correction({1, 2}, 2) == make_rat(1, 4));  // empty sum, pure linear term
    CHECK(correction({1, 5}, 3) == Rat(1));          // 0 + 4/10 + 6/10
}

TEST_CASE("correction term: matches the independent summation") {
    for (long r = 2; r <= 20; ++r)
        for (long b = 1; b < r; ++b) {
            if (std::gcd(b, r) != 1) continue;
            for (long m = 2; m <= 3 * r; ++m)
                CHECK(correction({b, r}, m) == correction_oracle(b, r, m));
        }
}

TEST_CASE("correction term: domain errors") {
    CHECK_THROWS_AS(correction({1, 2}, 1), std::domain_error);
    CHECK_THROWS_AS(correction({1, 2}, 0), std::domain_error);
    CHECK_THROWS_AS(correction({0, 2}, 2), std::invalid_argument);
    CHECK_THROWS_AS(correction({2, 4}, 2), std::invalid_argument);
    CHECK_THROWS_AS(correction({1, 1}, 2), std::invalid_argument);
}

TEST_CASE("correction term: conjugation symmetry and periodicity step") {
    for (long r = 2; r <= 25; ++r)
        for (long b = 1; b < r; ++b) {
            if (std::gcd(b, r) != 1) continue;
            for (long m = 2; m <= 30; ++m) {
                CHECK(correction({b, r}, m) == correction({r - b, r}, m));
                CHECK(correction({b, r}, m + r) - correction({b, r}, m) ==
                      Rat(Int(r) * r - 1, 12));
                CHECK(correction({b, r}, m) >= 0);
            }
        }
}

TEST_CASE("plurigenus formula: fixed values") {
    reid::PluriData x28{0, make_rat(1, 30), textio::parse_basket("1/2,1/3,1/5")};
    CHECK(reid::plurigenus(x28, 2) == Rat(1));
    CHECK(reid::plurigenus(x28, 3) == Rat(2));
    CHECK(reid::plurigenus(x28, 5) == Rat(4));
    reid::PluriData gorenstein{0, Rat(12), {}};
    CHECK(reid::plurigenus(gorenstein, 2) == Rat(6));
    CHECK_THROWS_AS(reid::plurigenus(x28, 1), std::domain_error);
}

TEST_CASE("plurigenus formula: strict chain when chi vanishes") {
    std::mt19937_64 rng(7);
    auto types = reid::enumerate_quotient_types(12);
    for (int t = 0; t < 200; ++t) {
        reid::PluriData pd;
        pd.chi = 0;
        pd.k3 = make_rat(1 + static_cast<long>(rng() % 600), 1 + static_cast<long>(rng() % 600));
        long n = static_cast<long>(rng() % 6);
        for (long i = 0; i < n; ++i) {
            auto q = types[rng() % types.size()];
            pd.basket.add(q.b, q.r, 1);
        }
        Rat p2 = reid::plurigenus(pd, 2);
        Rat p3 = reid::plurigenus(pd, 3);
        Rat p4 = reid::plurigenus(pd, 4);
        Rat p5 = reid::plurigenus(pd, 5);
        CHECK(p2 > 0);
        CHECK(p3 > p2);
        CHECK(p4 > p3);
        CHECK(p5 > p4);
    }
}

TEST_CASE("plurigenus formula: P_2 > 3 whenever chi <= -1") {
    std::mt19937_64 rng(11);
    auto types = reid::enumerate_quotient_types(12);
    for (int t = 0; t < 300; ++t) {
        reid::PluriData pd;
        pd.chi = -1 - static_cast<long>(rng() % 3);
        pd.k3 = make_rat(1 + static_cast<long>(rng() % 2000), 1 + static_cast<long>(rng() % 500));
        long n = static_cast<long>(rng() % 6);
        for (long i = 0; i < n; ++i) {
            auto q = types[rng() % types.size()];
            pd.basket.add(q.b, q.r, 1);
        }
        CHECK(reid::plurigenus(pd, 2) > 3);
    }
}

TEST_CASE("enumerate_quotient_types") {
    auto two = reid::enumerate_quotient_types(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0] == QuotientType{1, 2});
    auto three = reid::enumerate_quotient_types(3);
    REQUIRE(three.size() == 3);
    CHECK(three[1] == QuotientType{1, 3});
    CHECK(three[2] == QuotientType{2, 3});
    CHECK(reid::enumerate_quotient_types(5).size() == 9);  // phi(2)+phi(3)+phi(4)+phi(5)
    CHECK_THROWS_AS(reid::enumerate_quotient_types(1), std::invalid_argument);
}

TEST_CASE("monotonicity sweep") {
    CHECK(reid::check_monotonicity(100).empty());
    CHECK(correction({1, 2}, 5) == make_rat(1, 2));
    CHECK(correction({1, 2}, 4) == make_rat(1, 2));
}

TEST_CASE("basket storage") {
    auto b = textio::parse_basket("1/3,5*1/2,1/4");
    // canonical order ascending (r, b), multiplicities merged
    REQUIRE(b.entries().size() == 3);
    CHECK(b.entries()[0].r == 2);
    CHECK(b.entries()[0].mult == 5);
    CHECK(b.size() == 7);
    CHECK(b.index_lcm() == 12);

    reid::Basket c;
    c.add(4, 5);
    c.add(1, 5);
    auto n = c.normalized();
    REQUIRE(n.entries().size() == 1);
    CHECK(n.entries()[0].b == 1);
    CHECK(n.entries()[0].mult == 2);

    CHECK_THROWS_AS(c.add(1, 2, 0), std::invalid_argument);
    CHECK(reid::weight_of({3, 5}) == 2);  // 2*3 = 6 = 1 mod 5
}
