#include <random>

#include "doctest.h"
#include "plurilab/bounds.hpp"
#include "plurilab/textio.hpp"

using namespace plurilab;
using bounds::PresetId;
using bounds::Scenario;

namespace {

Scenario plain(long m0, long p, Rat beta, long g = 2) {
    Scenario sc;
    sc.m0 = m0;
    sc.p = p;
    sc.beta = std::move(beta);
    sc.g_min = g;
    sc.sep_m_min = m0 + 2;
    return sc;
}

}  // namespace

TEST_CASE("alpha") {
    CHECK(bounds::alpha_of(plain(5, 1, make_rat(3, 5)), 14, make_rat(1, 3)) == make_rat(19, 9));
    CHECK(bounds::alpha_of(plain(5, 2, make_rat(2, 7)), 14, make_rat(4, 7)) == Rat(4));
    // coefficient m - 1 - m0 - 1 vanishes at m = m0 + 2 when p = 1, beta = 1
    CHECK(bounds::alpha_of(plain(4, 1, Rat(1)), 6, make_rat(7, 13)) == Rat(0));
    CHECK_THROWS_AS(bounds::alpha_of(plain(2, 1, Rat(1)), 4, Rat(0)), std::invalid_argument);
}

TEST_CASE("conditions") {
    Scenario off = plain(3, 1, make_rat(1, 3));
    CHECK(bounds::condition_iv(off, make_rat(8, 7), false));
    CHECK_FALSE(bounds::condition_iv(off, Rat(1), false));
    Scenario evc = off;
    evc.even_curve = evc.nonhyperelliptic = true;
    CHECK(bounds::condition_iv(evc, make_rat(1, 2), true));
    CHECK_FALSE(bounds::condition_iv(evc, make_rat(1, 2), false));

    CHECK(bounds::condition_v(off, make_rat(19, 9), false));
    CHECK_FALSE(bounds::condition_v(off, Rat(2), false));
    Scenario nh = off;
    nh.nonhyperelliptic = true;
    CHECK(bounds::condition_v(nh, make_rat(3, 2), false));  // ceil(3/2) = 2
    CHECK_FALSE(bounds::condition_v(off, make_rat(3, 2), false));
}

TEST_CASE("condition ordering and monotonicity in alpha") {
    for (int flags = 0; flags < 4; ++flags) {
        Scenario sc = plain(3, 1, make_rat(1, 3));
        sc.even_curve = flags & 1;
        sc.nonhyperelliptic = flags & 2;
        Rat prev_v = Rat(-1);
        for (long num = 1; num <= 40; ++num) {
            Rat a = make_rat(num, 10);
            if (a > 2) CHECK(bounds::condition_v(sc, a, false));
            if (bounds::condition_v(sc, a, false) && a > 2)
                CHECK(bounds::condition_iv(sc, a, false));
            // monotone: once v holds it keeps holding as alpha grows
            if (prev_v >= 0 && bounds::condition_v(sc, prev_v, false))
                CHECK(bounds::condition_v(sc, a, false));
            prev_v = a;
        }
    }
}

TEST_CASE("asymptotic seed") {
    for (long m0 = 2; m0 <= 6; ++m0) {
        CHECK(bounds::xi_seed_asymptotic(plain(m0, 1, make_rat(1, m0))) ==
              make_rat(2, 2 * m0 + 1));
        CHECK(bounds::xi_seed_asymptotic(plain(m0, 1, make_rat(1, m0 + 1))) ==
              make_rat(1, m0 + 1));
    }
    CHECK(bounds::xi_seed_asymptotic(plain(2, 1, Rat(1))) == make_rat(1, 2));
}

TEST_CASE("one refinement step") {
    auto case2 = bounds::preset(PresetId::case2, 3);
    CHECK(bounds::refine_xi(case2, 11, make_rat(2, 7)) == make_rat(4, 11));
    auto typeI = bounds::preset(PresetId::typeI, 3);
    CHECK(bounds::refine_xi(typeI, 17, make_rat(1, 4)) == make_rat(5, 17));
    // condition (iv) fails: nothing happens
    auto idle = plain(3, 1, Rat(1));
    CHECK(bounds::refine_xi(idle, 5, make_rat(1, 10)) == make_rat(1, 10));
}

TEST_CASE("refinement never decreases xi and is idempotent at the fixpoint") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        Scenario sc = plain(2 + static_cast<long>(rng() % 5), 1 + static_cast<long>(rng() % 3),
                            make_rat(1 + static_cast<long>(rng() % 6),
                                     1 + static_cast<long>(rng() % 9)),
                            2 + static_cast<long>(rng() % 3));
        Rat xi = make_rat(1 + static_cast<long>(rng() % 20), 1 + static_cast<long>(rng() % 30));
        for (long m = sc.m0 + 2; m < sc.m0 + 20; ++m) {
            Rat next = bounds::refine_xi(sc, m, xi);
            CHECK(next >= xi);
            xi = next;
        }
        auto res = bounds::min_birational_m(sc, 12 * sc.m0);
        for (long m = sc.m0 + 2; m <= 12 * sc.m0; ++m)
            CHECK(bounds::refine_xi(sc, m, res.xi_final) == res.xi_final);
    }
}

TEST_CASE("schedule replay records a replayable trace") {
    auto sc = bounds::preset(PresetId::d5_2, 3);
    auto res = bounds::run_schedule(sc, {12, 14});
    CHECK(res.trace[0].alpha == make_rat(52, 51));
    CHECK(res.trace[0].alpha0 == 2);
    CHECK(res.trace[0].xi_after == make_rat(1, 3));
    CHECK(res.trace[1].xi_before == make_rat(1, 3));
    CHECK(res.trace[1].alpha == make_rat(19, 9));
    CHECK(res.m_birational == 14);
    for (const auto& st : res.trace) {
        CHECK(st.alpha == bounds::alpha_of(sc, st.m, st.xi_before));
        CHECK(st.alpha0 == ceil_rat(st.alpha));
        CHECK(st.xi_after == bounds::refine_xi(sc, st.m, st.xi_before));
    }
}

TEST_CASE("schedule replay: pencil case at auxiliary degree five") {
    auto res = bounds::run_schedule(bounds::preset(PresetId::a_I, 3), {12, 14});
    CHECK(res.trace[0].alpha == make_rat(10, 7));
    CHECK(res.trace[0].xi_after == make_rat(1, 3));
    CHECK(res.trace[1].alpha == make_rat(7, 3));
    CHECK(res.m_birational == 14);
}

TEST_CASE("schedule replay: no refinement when the coefficient vanishes") {
    Scenario sc = plain(4, 1, Rat(1));
    auto res = bounds::run_schedule(sc, {sc.m0 + 2});
    CHECK(res.xi_final == bounds::xi_seed_asymptotic(sc));
    CHECK_FALSE(res.m_birational.has_value());
}

TEST_CASE("exact ceiling: integral alpha stays put") {
    // alpha = 2 exactly must not fire the strict test and ceils to 2
    Scenario sc = plain(3, 1, make_rat(1, 3));
    Rat a = bounds::alpha_of(sc, 13, make_rat(1, 3));
    CHECK(a == Rat(2));
    CHECK(ceil_rat(a) == 2);
    CHECK_FALSE(bounds::condition_v(sc, a, true));
}

TEST_CASE("minimal birational m") {
    CHECK(bounds::min_birational_m(bounds::preset(PresetId::case1, 3)).m_birational == 10);
    CHECK(bounds::min_birational_m(bounds::preset(PresetId::case2, 3)).m_birational == 13);
    CHECK(bounds::min_birational_m(bounds::preset(PresetId::typeI, 4)).m_birational == 18);
    // absence is explicit, never silent truncation
    auto res = bounds::min_birational_m(plain(3, 1, Rat(1, 20)), 6);
    CHECK_FALSE(res.m_birational.has_value());
}

TEST_CASE("beta sequences") {
    auto seq = bounds::beta_sequence(5, 3, 1, 4);
    CHECK(seq.terms[0] == make_rat(3, 13));
    CHECK(seq.limit() == make_rat(3, 8));
    auto seq2 = bounds::beta_sequence(2, 1, 1, 4);
    CHECK(seq2.terms[0] == make_rat(1, 5));
    CHECK(seq2.limit() == make_rat(1, 3));
    for (long m0 = 2; m0 <= 5; ++m0)
        for (long p = 1; p <= 3; ++p)
            for (long t0 = 1; t0 <= 3; ++t0)
                CHECK(bounds::beta_sequence(m0, p, t0, 0).terms[0] == make_rat(p, p + 2 * m0));
    for (std::size_t i = 0; i + 1 < seq.terms.size(); ++i) {
        CHECK(seq.terms[i] < seq.terms[i + 1]);
        CHECK(seq.terms[i + 1] < seq.limit());
    }
}

TEST_CASE("presets") {
    auto c2 = bounds::preset(PresetId::case2, 3);
    CHECK(c2.m0 == 3);
    CHECK(c2.p == 1);
    CHECK(c2.beta == make_rat(1, 3));
    CHECK(c2.g_min == 2);
    CHECK(c2.sep_m_min == 8);

    auto t1 = bounds::preset(PresetId::typeI, 3);
    CHECK(t1.beta == make_rat(1, 4));
    CHECK(t1.sep_m_min == 14);

    auto d51 = bounds::preset(PresetId::d5_1, 3);
    CHECK(d51.beta == make_rat(3, 8));
    CHECK(d51.xi0 == make_rat(1, 3));
    CHECK(d51.sep_m_min == 14);

    CHECK_THROWS_AS(bounds::preset(PresetId::d5_1, 4), std::invalid_argument);
    CHECK_THROWS_AS(bounds::preset_id_from_string("nope"), std::invalid_argument);
}

TEST_CASE("statement about xi above one third") {
    Scenario sc = bounds::preset(PresetId::case2, 3);
    CHECK(bounds::coefficient(sc, 14) == Rat(7));
    for (long num = 34; num <= 60; ++num) {
        Rat xi = make_rat(num, 100);
        if (xi > make_rat(1, 3)) CHECK(bounds::alpha_of(sc, 14, xi) > 2);
    }
}

TEST_CASE("prop_b check") {
    CHECK(bounds::prop_b_check(make_rat(1, 3)));
    CHECK_FALSE(bounds::prop_b_check(make_rat(1, 4)));  // exactly 2, strict
    CHECK(bounds::prop_b_check(make_rat(2, 5)));
}

TEST_CASE("assembled thresholds") {
    CHECK(bounds::theorem_44(2, false) == 11);
    CHECK(bounds::theorem_44(3, false) == 15);
    CHECK(bounds::theorem_44(3, true) == 14);
    CHECK(bounds::theorem_44(4, false) == 18);
    CHECK(bounds::theorem_44(5, false) == 22);
    CHECK(bounds::theorem_44(6, false) == 26);
    CHECK(bounds::corollary_threshold() == 8);
    CHECK(bounds::main_theorem_threshold() == 14);
}

TEST_CASE("scenario validation") {
    Scenario sc = plain(3, 1, make_rat(1, 3));
    sc.sep_m_min = 3;  // below m0 + 2
    CHECK_THROWS_AS(bounds::validate(sc), std::invalid_argument);
    sc = plain(3, 1, Rat(0));
    CHECK_THROWS_AS(bounds::validate(sc), std::invalid_argument);
}
