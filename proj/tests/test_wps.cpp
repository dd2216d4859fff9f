#include "doctest.h"
#include "plurilab/infer.hpp"
#include "plurilab/reid.hpp"
#include "plurilab/textio.hpp"
#include "plurilab/wps.hpp"

using namespace plurilab;
using wps::WeightedHypersurface;

namespace {

const WeightedHypersurface X28{{1, 3, 4, 5, 14}, 28};
const WeightedHypersurface X16{{1, 1, 2, 3, 8}, 16};
const WeightedHypersurface X22{{1, 2, 3, 4, 11}, 22};

// Direct bounded enumeration of weight-n monomials, independent of the
// convolution path in the library.
Int monomial_count_oracle(const WeightedHypersurface& x, long n) {
    if (n < 0) return 0;
    Int count = 0;
    const auto& w = x.weights;
    for (long e0 = 0; e0 * w[0] <= n; ++e0)
        for (long e1 = 0; e0 * w[0] + e1 * w[1] <= n; ++e1)
            for (long e2 = 0; e0 * w[0] + e1 * w[1] + e2 * w[2] <= n; ++e2)
                for (long e3 = 0; e0 * w[0] + e1 * w[1] + e2 * w[2] + e3 * w[3] <= n; ++e3) {
                    long rest = n - e0 * w[0] - e1 * w[1] - e2 * w[2] - e3 * w[3];
                    if (rest % w[4] == 0) ++count;
                }
    return count;
}

}  // namespace

TEST_CASE("well-formedness") {
    CHECK(wps::well_formed(X28));
    CHECK(wps::well_formed(X22));
    CHECK_FALSE(wps::well_formed({{2, 4, 6, 8, 10}, 30}));
    CHECK_THROWS_AS(wps::validate({{2, 4, 6, 8, 10}, 30}), std::invalid_argument);
    CHECK_THROWS_AS(wps::validate({{0, 1, 1, 1, 1}, 5}), std::invalid_argument);
}

TEST_CASE("hilbert coefficients: fixed values") {
    CHECK(wps::hilbert_coefficient(X28, 1) == 1);
    CHECK(wps::hilbert_coefficient(X28, 0) == 1);
    CHECK(wps::hilbert_coefficient(X16, 2) == 4);  // x0^2, x0 x1, x1^2, x2
    CHECK(wps::hilbert_coefficient(X22, 2) == 2);
    CHECK_THROWS_AS(wps::hilbert_coefficient(X28, -1), std::invalid_argument);
}

TEST_CASE("hilbert coefficients: agree with direct enumeration up to 200") {
    for (const auto& x : {X28, X16, X22}) {
        for (long n = 0; n <= 200; ++n) {
            Int expected = monomial_count_oracle(x, n) - monomial_count_oracle(x, n - x.degree);
            CHECK(wps::hilbert_coefficient(x, n) == expected);
        }
    }
}

TEST_CASE("plurigenera and canonical data") {
    CHECK(wps::canonical_weight(X28) == 1);
    CHECK(wps::plurigenus(X28, 1) == 1);
    CHECK(wps::plurigenus(X28, 5) == 4);
    CHECK(wps::plurigenus(X16, 1) == 2);
    CHECK(wps::k3(X28) == make_rat(1, 30));
    CHECK(wps::k3(X16) == make_rat(1, 3));
    CHECK(wps::k3(X22) == make_rat(1, 12));
    // canonical weight <= 0 is out of scope
    CHECK_THROWS_AS(wps::plurigenus({{1, 1, 1, 1, 1}, 4}, 2), std::domain_error);
}

TEST_CASE("chi bookkeeping") {
    CHECK(wps::chi_structure_sheaf(1) == 0);
    CHECK(wps::chi_canonical_sheaf(1) == 0);
    CHECK(wps::chi_canonical_sheaf(2) == 1);
    CHECK(wps::chi_canonical_sheaf(1, 1, 0) == 1);
}

TEST_CASE("cross-validation against the singular Riemann-Roch formula") {
    struct Row {
        WeightedHypersurface x;
        long chi;
        const char* basket;
    };
    for (const Row& row : {Row{X28, 0, "1/2,1/3,1/5"}, Row{X16, -1, "2*1/2,1/3"},
                           Row{X22, 0, "5*1/2,1/3,1/4"}}) {
        reid::PluriData pd{row.chi, wps::k3(row.x), textio::parse_basket(row.basket)};
        for (long m = 2; m <= 100; ++m) {
            Rat lhs = reid::plurigenus(pd, m);
            REQUIRE(is_integer(lhs));
            CHECK(lhs.get_num() == wps::plurigenus(row.x, m));
        }
    }
}

TEST_CASE("sixfold plurigenus growth approaches K^3") {
    for (const auto& x : {X28, X16, X22}) {
        Rat k3 = wps::k3(x);
        Rat approx(6 * wps::plurigenus(x, 1000), Int(1000) * 1000 * 1000);
        approx.canonicalize();
        Rat err = approx - k3;
        if (err < 0) err = -err;
        CHECK(err < k3 / 10);
    }
}
