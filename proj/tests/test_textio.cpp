#include "doctest.h"
#include "plurilab/textio.hpp"

using namespace plurilab;

TEST_CASE("basket grammar") {
    auto b = textio::parse_basket("1/2,1/3,1/5");
    CHECK(b.size() == 3);
    CHECK(textio::format_basket(b) == "1/2,1/3,1/5");

    auto c = textio::parse_basket("5*1/2,1/3,1/4");
    CHECK(c.size() == 7);
    CHECK(textio::format_basket(c) == "5*1/2,1/3,1/4");

    CHECK(textio::parse_basket("").empty());
    CHECK(textio::parse_basket(" 1/2 , 1/2 ").entries()[0].mult == 2);

    CHECK_THROWS_AS(textio::parse_basket("1/2,,1/3"), parse_error);
    CHECK_THROWS_AS(textio::parse_basket("3/2"), std::invalid_argument);  // b >= r
    CHECK_THROWS_AS(textio::parse_basket("2/4"), std::invalid_argument);  // not coprime
    CHECK_THROWS_AS(textio::parse_basket("0*1/2"), parse_error);
}

TEST_CASE("quotient-type form of a basket entry") {
    // 1/5(2,-2,1): the inverse of 2 mod 5 is 3
    auto b = textio::parse_basket("1/5(2,-2,1)");
    REQUIRE(b.entries().size() == 1);
    CHECK(b.entries()[0].b == 3);
    CHECK(b.entries()[0].r == 5);

    auto c = textio::parse_basket("2*1/7(3,-3,1),1/2(1,-1,1)");
    CHECK(c.size() == 3);
    CHECK(c.entries()[1].b == 5);  // 3*5 = 15 = 1 mod 7

    CHECK_THROWS_AS(textio::parse_basket("1/5(2,-1,1)"), parse_error);
    CHECK_THROWS_AS(textio::parse_basket("1/5(2,-2,2)"), parse_error);
    CHECK_THROWS_AS(textio::parse_basket("2/5(2,-2,1)"), parse_error);
}

TEST_CASE("rational literals") {
    CHECK(parse_rational("3/4") == make_rat(3, 4));
    CHECK(parse_rational("-7") == Rat(-7));
    CHECK(parse_rational(" 6/8 ") == make_rat(3, 4));
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("x"), parse_error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), parse_error);
    CHECK(to_string(make_rat(6, 8)) == "3/4");
    CHECK(to_string(Rat(5)) == "5");
}

TEST_CASE("hypersurface form") {
    auto x = textio::parse_hypersurface("28:1,3,4,5,14");
    CHECK(x.degree == 28);
    CHECK(x.weights[4] == 14);
    CHECK(textio::format_hypersurface(x) == "28:1,3,4,5,14");
    CHECK_THROWS_AS(textio::parse_hypersurface("28:1,3,4,5"), parse_error);
    CHECK_THROWS_AS(textio::parse_hypersurface("30:2,4,6,8,10"), std::invalid_argument);
}

TEST_CASE("scenario form") {
    auto sc = textio::parse_scenario("m0=3 p=1 beta=1/3 g=2 sep=8 xi0=2/7 even nonhyp");
    CHECK(sc.m0 == 3);
    CHECK(sc.beta == make_rat(1, 3));
    CHECK(sc.xi0 == make_rat(2, 7));
    CHECK(sc.even_curve);
    CHECK(sc.nonhyperelliptic);
    CHECK(textio::format_scenario(sc) == "m0=3 p=1 beta=1/3 g=2 sep=8 xi0=2/7 even nonhyp");

    auto plain = textio::parse_scenario("m0=4 p=2 beta=2/7");
    CHECK(plain.sep_m_min == 6);  // defaults to m0 + 2
    CHECK_THROWS_AS(textio::parse_scenario("m0=3 p=1"), parse_error);
    CHECK_THROWS_AS(textio::parse_scenario("m0=3 p=1 beta=1/3 bogus=1"), parse_error);
}

TEST_CASE("plurigenus lists and ranges") {
    auto pm = textio::parse_pm_list("2=1,3=2,4=3");
    CHECK(pm.size() == 3);
    CHECK(pm[4] == 3);
    CHECK_THROWS_AS(textio::parse_pm_list("2=1,2=2"), parse_error);

    CHECK(textio::parse_m_range("2..5") == std::pair{2L, 5L});
    CHECK(textio::parse_m_range("7") == std::pair{7L, 7L});
    CHECK_THROWS_AS(textio::parse_m_range("5..2"), parse_error);

    CHECK(textio::parse_schedule("12,14") == std::vector<long>{12, 14});
}
