#include "plurilab/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <random>
#include <sstream>

#include "plurilab/bounds.hpp"
#include "plurilab/infer.hpp"
#include "plurilab/textio.hpp"
#include "plurilab/wps.hpp"

namespace plurilab::verify {

namespace {

using bounds::PresetId;
using reid::Basket;
using reid::PluriData;
using wps::WeightedHypersurface;

const WeightedHypersurface kX28{{1, 3, 4, 5, 14}, 28};
const WeightedHypersurface kX16{{1, 1, 2, 3, 8}, 16};
const WeightedHypersurface kX22{{1, 2, 3, 4, 11}, 22};

struct Suite {
    Report& rep;
    const std::string& filter;

    bool wanted(const std::string& id, const std::string& tag) const {
        if (filter.empty()) return true;
        return id.find(filter) != std::string::npos || tag.find(filter) != std::string::npos;
    }

    void add(const std::string& id, const std::string& tag, const std::string& inputs,
             const std::string& expected, const std::string& actual, const std::string& note = "") {
        if (!wanted(id, tag)) return;
        rep.checks.push_back({id, tag, inputs, expected, actual, expected == actual, note});
    }
};

std::string rats(const Rat& x) { return to_string(x); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

// ---- criterion 1: monotone correction terms ----

void checks_monotonicity(Suite& s) {
    auto viol = reid::check_monotonicity(100);
    std::string actual = viol.empty() ? "no violations"
                                      : std::to_string(viol.size()) + " violations, first at b=" +
                                            std::to_string(viol[0].b) + " r=" +
                                            std::to_string(viol[0].r);
    s.add("reid.monotonicity.r100", "reid", "all types with r <= 100, m = 2..5", "no violations",
          actual);
    s.add("reid.boundary.r2", "reid", "R_3 and R_2 at (b,r)=(1,2)", "1/4 = 1/4",
          rats(reid::correction({1, 2}, 3)) + " = " + rats(reid::correction({1, 2}, 2)));
    s.add("reid.boundary.r3", "reid", "R_3 and R_2 at (b,r)=(1,3)", "2/3 > 1/3",
          rats(reid::correction({1, 3}, 3)) + " > " + rats(reid::correction({1, 3}, 2)));
    s.add("reid.boundary.r2.m5m4", "reid", "R_5 and R_4 at (b,r)=(1,2)", "1/2 = 1/2",
          rats(reid::correction({1, 2}, 5)) + " = " + rats(reid::correction({1, 2}, 4)));
}

// ---- criteria 2 and 4: hypersurface invariants and the chi relation ----

PluriData pluri_data_for(const WeightedHypersurface& x, const Int& chi) {
    infer::InferenceProblem prob;
    for (long m = 2; m <= 8; ++m) prob.pluri[m] = wps::plurigenus(x, m);
    prob.chi = chi;
    prob.k3 = wps::k3(x);
    auto res = infer::infer_basket(prob);
    return {res.chi, res.k3, res.basket};
}

void checks_wps(Suite& s) {
    s.add("wps.X28.k3", "wps", textio::format_hypersurface(kX28), "1/30", rats(wps::k3(kX28)));
    s.add("wps.X16.k3", "wps", textio::format_hypersurface(kX16), "1/3", rats(wps::k3(kX16)));
    s.add("wps.X22.k3", "wps", textio::format_hypersurface(kX22), "1/12", rats(wps::k3(kX22)));

    std::vector<std::string> got;
    for (long m = 1; m <= 5; ++m) got.push_back(wps::plurigenus(kX28, m).get_str());
    s.add("wps.X28.P1_P5", "wps", "plurigenera m = 1..5", "1,1,2,3,4", join(got, ","));

    s.add("wps.chi.pg1", "wps", "p_g=1, q=0, h^2=0: chi(omega)", "0",
          wps::chi_canonical_sheaf(1).get_str());
    s.add("wps.chi.pg2", "wps", "p_g=2, q=0, h^2=0: chi(omega)", "1",
          wps::chi_canonical_sheaf(2).get_str());
    s.add("wps.X16.P2", "wps", "second plurigenus of " + textio::format_hypersurface(kX16), "4",
          wps::plurigenus(kX16, 2).get_str());
    s.add("wps.X22.P2", "wps", "second plurigenus of " + textio::format_hypersurface(kX22), "2",
          wps::plurigenus(kX22, 2).get_str());

    // cross-validation against the singular Riemann-Roch formula, m = 2..100
    struct Row {
        const WeightedHypersurface* x;
        Int chi;
        const char* id;
    };
    for (const Row& row : {Row{&kX28, 0, "wps.X28.crosscheck"}, Row{&kX16, -1, "wps.X16.crosscheck"},
                           Row{&kX22, 0, "wps.X22.crosscheck"}}) {
        if (!s.wanted(row.id, "wps")) continue;
        PluriData pd = pluri_data_for(*row.x, row.chi);
        std::string actual = "agree for m = 2..100";
        for (long m = 2; m <= 100; ++m) {
            Rat lhs = reid::plurigenus(pd, m);
            Int rhs = wps::plurigenus(*row.x, m);
            if (!is_integer(lhs) || lhs.get_num() != rhs) {
                actual = "mismatch at m = " + std::to_string(m) + ": " + rats(lhs) + " vs " +
                         rhs.get_str();
                break;
            }
        }
        s.add(row.id, "wps", textio::format_hypersurface(*row.x) + " with inferred basket",
              "agree for m = 2..100", actual);
    }
}

// ---- criterion 3: inference ----

void checks_infer(Suite& s) {
    {
        infer::InferenceProblem prob;
        for (long m = 2; m <= 8; ++m) prob.pluri[m] = wps::plurigenus(kX28, m);
        prob.chi = 0;
        prob.k3 = wps::k3(kX28);
        std::string actual;
        try {
            auto res = infer::infer_basket(prob);
            actual = textio::format_basket(res.basket) + " (" + std::to_string(res.basket.size()) +
                     " points)";
        } catch (const std::exception& e) {
            actual = std::string("error: ") + e.what();
        }
        s.add("infer.X28.basket", "infer", "X28 data, chi=0, K^3=1/30", "1/2,1/3,1/5 (3 points)",
              actual);
    }
    {
        infer::InferenceProblem prob;
        for (long m = 2; m <= 8; ++m) prob.pluri[m] = wps::plurigenus(kX22, m);
        prob.k3 = wps::k3(kX22);
        std::string actual;
        try {
            auto res = infer::infer_basket(prob);
            actual = "chi=" + res.chi.get_str() + ", " + textio::format_basket(res.basket) + " (" +
                     std::to_string(res.basket.size()) + " points)";
        } catch (const std::exception& e) {
            actual = std::string("error: ") + e.what();
        }
        s.add("infer.X22.basket", "infer", "X22 data, K^3=1/12, chi unknown",
              "chi=0, 5*1/2,1/3,1/4 (7 points)", actual);
    }
    {
        Basket b16 = textio::parse_basket("2*1/2,1/3");
        std::string actual;
        try {
            actual = infer::solve_chi(4, make_rat(1, 3), b16).get_str();
        } catch (const std::exception& e) {
            actual = std::string("error: ") + e.what();
        }
        s.add("infer.solve_chi.X16", "infer", "P_2=4, K^3=1/3, basket 2*1/2,1/3", "-1", actual);
        s.add("infer.solve_k3.X28", "infer", "P_2=1, chi=0, basket 1/2,1/3,1/5", "1/30",
              rats(infer::solve_k3(1, 0, textio::parse_basket("1/2,1/3,1/5"))));
    }
    if (s.wanted("infer.roundtrip.500", "infer")) {
        long ok = 0, made = 0;
        std::string first_fail;
        std::uint64_t seed = 0;
        while (made < 500 && seed < 100000) {
            auto inst = consistent_instance(seed++);
            if (!inst) continue;
            bool nonneg = true;
            infer::InferenceProblem prob;
            for (long m = 2; m <= 10; ++m) {
                Rat v = reid::plurigenus(*inst, m);
                if (!is_integer(v) || v < 0) {
                    nonneg = false;
                    break;
                }
                prob.pluri[m] = v.get_num();
            }
            if (!nonneg) continue;
            ++made;
            prob.chi = inst->chi;
            prob.k3 = inst->k3;
            prob.r_max = 12;
            prob.size_max = 5;
            try {
                auto res = infer::infer_basket(prob);
                bool good = res.basket == inst->basket.normalized();
                for (long m = 2; good && m <= 10; ++m)
                    good = reid::plurigenus({res.chi, res.k3, res.basket}, m) ==
                           reid::plurigenus(*inst, m);
                if (good)
                    ++ok;
                else if (first_fail.empty())
                    first_fail = "basket mismatch at seed " + std::to_string(seed - 1);
            } catch (const std::exception& e) {
                if (first_fail.empty())
                    first_fail = "seed " + std::to_string(seed - 1) + ": " + e.what();
            }
        }
        std::string actual = std::to_string(ok) + "/" + std::to_string(made) + " exact round-trips";
        if (!first_fail.empty()) actual += " (" + first_fail + ")";
        s.add("infer.roundtrip.500", "infer",
              "consistent random data, r <= 12, <= 5 points, chi in [-3,3]",
              "500/500 exact round-trips", actual);
    }
}

// ---- criterion 5: second plurigenus under negative chi ----

void checks_p2_bound(Suite& s) {
    if (s.wanted("reid.P2.negative_chi", "reid")) {
        std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
        auto types = reid::enumerate_quotient_types(12);
        long ok = 0;
        const long trials = 1000;
        for (long t = 0; t < trials; ++t) {
            PluriData pd;
            long n = static_cast<long>(rng() % 6);
            for (long i = 0; i < n; ++i) {
                auto q = types[rng() % types.size()];
                pd.basket.add(q.b, q.r, 1);
            }
            pd.chi = -1 - static_cast<long>(rng() % 3);
            pd.k3 = make_rat(1 + static_cast<long>(rng() % 2000), 1 + static_cast<long>(rng() % 500));
            if (reid::plurigenus(pd, 2) > 3) ++ok;
        }
        s.add("reid.P2.negative_chi.1000", "reid", "random data with chi <= -1, K^3 > 0",
              "1000/1000 have P_2 > 3", std::to_string(ok) + "/1000 have P_2 > 3");
    }
    s.add("reid.P2.X16", "reid", "chi=-1, K^3=1/3, basket 2*1/2,1/3", "4",
          rats(reid::plurigenus({-1, make_rat(1, 3), textio::parse_basket("2*1/2,1/3")}, 2)));
}

// ---- criterion 6: the beta sequence ----

void checks_beta(Suite& s) {
    auto seq = bounds::beta_sequence(5, 3, 1, 0);
    s.add("bounds.beta.m0=5.p=3", "bounds", "first term and supremum", "3/13, sup 3/8",
          rats(seq.terms[0]) + ", sup " + rats(seq.limit()));
    if (s.wanted("bounds.beta.monotone", "bounds")) {
        std::string actual = "strictly increasing below the limit";
        for (long m0 = 2; m0 <= 6 && actual[0] == 's'; ++m0)
            for (long p = 1; p <= 4; ++p) {
                auto sq = bounds::beta_sequence(m0, p, 1, 1000);
                for (std::size_t i = 0; i + 1 < sq.terms.size(); ++i) {
                    if (!(sq.terms[i] < sq.terms[i + 1] && sq.terms[i + 1] < sq.limit())) {
                        actual = "violated at m0=" + std::to_string(m0) + " p=" + std::to_string(p);
                        break;
                    }
                }
            }
        s.add("bounds.beta.monotone", "bounds", "(m0,p) in [2,6]x[1,4], n <= 1000",
              "strictly increasing below the limit", actual);
    }
}

// ---- criterion 7: the derivation chains ----

void checks_chains(Suite& s) {
    for (long m0 = 2; m0 <= 6; ++m0) {
        std::string suffix = ".m0=" + std::to_string(m0);
        {
            auto sc = bounds::preset(PresetId::case1, m0);
            auto res = bounds::run_schedule(sc, {3 * m0 + 2});
            s.add("bounds.case1.xi" + suffix, "bounds", "one refinement at m = 3m0+2",
                  rats(make_rat(9, 3 * m0 + 2)), rats(res.xi_final));
            long fire = sc.sep_m_min;
            while (!bounds::condition_v(sc, bounds::alpha_of(sc, fire, res.xi_final),
                                        bounds::coefficient(sc, fire) > 0))
                ++fire;
            Rat thr = make_rat(8 * m0, 3) + make_rat(13, 9);
            s.add("bounds.case1.threshold" + suffix, "bounds",
                  "least birational m at xi = " + rats(res.xi_final),
                  strict_above(thr).get_str() + " (first above 8m0/3+13/9)",
                  Int(fire).get_str() + " (first above 8m0/3+13/9)");
        }
        {
            auto sc = bounds::preset(PresetId::case2, m0);
            s.add("bounds.case2.seed" + suffix, "bounds", "large-m seed",
                  rats(make_rat(2, 2 * m0 + 1)), rats(bounds::initial_xi(sc)));
            auto res = bounds::run_schedule(sc, {4 * m0 + 3, 3 * m0 + 2});
            s.add("bounds.case2.refine1" + suffix, "bounds", "refinement at m = 4m0+3",
                  rats(make_rat(5, 4 * m0 + 3)), rats(res.trace[0].xi_after));
            s.add("bounds.case2.refine2" + suffix, "bounds", "refinement at m = 3m0+2",
                  rats(make_rat(4, 3 * m0 + 2)), rats(res.trace[1].xi_after));
            long fire = sc.sep_m_min;
            while (!bounds::condition_v(sc, bounds::alpha_of(sc, fire, res.xi_final),
                                        bounds::coefficient(sc, fire) > 0))
                ++fire;
            Rat thr = make_rat(7 * m0, 2) + 2;
            s.add("bounds.case2.threshold" + suffix, "bounds",
                  "least birational m at xi = " + rats(res.xi_final),
                  strict_above(thr).get_str() + " (first above 7m0/2+2)",
                  Int(fire).get_str() + " (first above 7m0/2+2)");
        }
        {
            auto sc = bounds::preset(PresetId::typeII, m0);
            auto res = bounds::run_schedule(sc, {3 * m0 + 2, 4 * m0 + 2});
            s.add("bounds.typeII.refine" + suffix, "bounds", "refinement at m = 3m0+2",
                  rats(make_rat(6, 3 * m0 + 2)), rats(res.trace[0].xi_after));
            s.add("bounds.typeII.fire" + suffix, "bounds", "alpha at m = 4m0+2",
                  rats(make_rat(12 * m0, 3 * m0 + 2)) + ", birational",
                  rats(res.trace[1].alpha) +
                      (res.trace[1].criterion_fired ? ", birational" : ", not birational"));
        }
        {
            auto sc = bounds::preset(PresetId::typeI, m0);
            s.add("bounds.typeI.seed" + suffix, "bounds", "large-m seed", rats(make_rat(1, m0 + 1)),
                  rats(bounds::initial_xi(sc)));
            auto res = bounds::run_schedule(sc, {4 * m0 + 5, 4 * m0 + 4, 4 * m0 + 3, 4 * m0 + 2});
            const char* names[4] = {"m=4m0+5", "m=4m0+4", "m=4m0+3", "m=4m0+2"};
            Rat alphas[4] = {make_rat(2 * m0 + 3, m0 + 1), make_rat(10 * m0 + 10, 4 * m0 + 5),
                             make_rat(10 * m0 + 5, 4 * m0 + 4), make_rat(10 * m0, 4 * m0 + 3)};
            Rat xis[3] = {make_rat(5, 4 * m0 + 5), make_rat(5, 4 * m0 + 4),
                          make_rat(5, 4 * m0 + 3)};
            for (int i = 0; i < 4; ++i)
                s.add("bounds.typeI.alpha." + std::string(names[i]) + suffix, "bounds",
                      std::string("alpha at ") + names[i], rats(alphas[i]),
                      rats(res.trace[i].alpha));
            for (int i = 0; i < 3; ++i)
                s.add("bounds.typeI.xi." + std::string(names[i]) + suffix, "bounds",
                      std::string("refinement at ") + names[i], rats(xis[i]),
                      rats(res.trace[i].xi_after));
            s.add("bounds.typeI.fire.4m0+3" + suffix, "bounds", "alpha > 2 at m = 4m0+3",
                  m0 >= 2 ? "birational" : "not birational",
                  res.trace[2].criterion_fired ? "birational" : "not birational");
            s.add("bounds.typeI.fire.4m0+2" + suffix, "bounds", "alpha > 2 at m = 4m0+2",
                  m0 >= 4 ? "birational" : "not birational",
                  res.trace[3].criterion_fired ? "birational" : "not birational");
        }
    }
    {
        auto sc = bounds::preset(PresetId::d5_2, 3);
        auto res = bounds::run_schedule(sc, {12, 14});
        s.add("bounds.d5_2.alpha.m12", "bounds", "alpha at m = 12 from xi = 4/17", "52/51",
              rats(res.trace[0].alpha));
        s.add("bounds.d5_2.xi.m12", "bounds", "refinement at m = 12", "1/3",
              rats(res.trace[0].xi_after));
        s.add("bounds.d5_2.alpha.m14", "bounds", "alpha at m = 14", "19/9, birational",
              rats(res.trace[1].alpha) +
                  (res.trace[1].criterion_fired ? ", birational" : ", not birational"));
    }
    {
        auto sc = bounds::preset(PresetId::d5_1, 3);
        auto res = bounds::run_schedule(sc, {14});
        s.add("bounds.d5_1.alpha.m14", "bounds", "alpha at m = 14 from xi = 1/3",
              "22/9, birational",
              rats(res.trace[0].alpha) +
                  (res.trace[0].criterion_fired ? ", birational" : ", not birational"));
    }
    {
        auto res = bounds::run_schedule(bounds::preset(PresetId::a_II, 3), {14});
        s.add("bounds.a_II.alpha.m14", "bounds", "alpha at m = 14 from xi = 4/7", "4, birational",
              rats(res.trace[0].alpha) +
                  (res.trace[0].criterion_fired ? ", birational" : ", not birational"));
        auto resI = bounds::run_schedule(bounds::preset(PresetId::a_I, 3), {12, 14});
        s.add("bounds.a_I.alpha.m12", "bounds", "alpha at m = 12 from xi = 2/7", "10/7",
              rats(resI.trace[0].alpha));
        s.add("bounds.a_I.xi.m12", "bounds", "refinement at m = 12", "1/3",
              rats(resI.trace[0].xi_after));
        s.add("bounds.a_I.alpha.m14", "bounds", "alpha at m = 14", "7/3, birational",
              rats(resI.trace[1].alpha) +
                  (resI.trace[1].criterion_fired ? ", birational" : ", not birational"));
    }
    {
        auto res = bounds::run_schedule(bounds::preset(PresetId::prop_b, 3), {14});
        s.add("bounds.prop_b.deg.m14", "bounds", "restricted degree 8 xi at xi = 1/3",
              "8/3, birational",
              rats(res.trace[0].alpha) +
                  (res.trace[0].criterion_fired ? ", birational" : ", not birational"));
        s.add("bounds.prop_b.check", "bounds", "8 xi > 2 at xi = 1/3", "true",
              bounds::prop_b_check(make_rat(1, 3)) ? "true" : "false");
    }
    {
        // statement (**): with m0 = 3, p = 1, beta = 1/3 the coefficient at
        // m = 14 is 2m0 + 1, so alpha >= 2 m0 xi > 2 whenever xi > 1/3.
        bounds::Scenario sc = bounds::preset(PresetId::case2, 3);
        Rat coef = bounds::coefficient(sc, 14);
        bool strict = coef >= Rat(2 * 3) && Rat(2 * 3) * make_rat(1, 3) == Rat(2);
        s.add("bounds.star.m14", "bounds", "coefficient at m = 14 vs 2 m0", "7 >= 6, boundary 2",
              rats(coef) + (strict ? " >= 6, boundary 2" : " too small"));
    }
    {
        auto r1 = bounds::min_birational_m(bounds::preset(PresetId::case1, 3));
        auto r2 = bounds::min_birational_m(bounds::preset(PresetId::case2, 3));
        auto r3 = bounds::min_birational_m(bounds::preset(PresetId::typeI, 4));
        auto show = [](const bounds::BoundResult& r) {
            return r.m_birational ? std::to_string(*r.m_birational) : std::string("none");
        };
        s.add("bounds.minbir.case1.m0=3", "bounds", "saturated sweep", "10", show(r1));
        s.add("bounds.minbir.case2.m0=3", "bounds", "saturated sweep", "13", show(r2));
        s.add("bounds.minbir.typeI.m0=4", "bounds", "saturated sweep", "18", show(r3));
    }
}

// ---- criteria 8 and 9: assembled theorems and optimality witnesses ----

void checks_assembled(Suite& s) {
    s.add("bounds.thm.m0=2", "bounds", "threshold over all fibre types", "11",
          std::to_string(bounds::theorem_44(2, false)));
    s.add("bounds.thm.m0=3", "bounds", "threshold over all fibre types", "15",
          std::to_string(bounds::theorem_44(3, false)));
    s.add("bounds.thm.m0=3.chi0", "bounds", "threshold with the 5-canonical family", "14",
          std::to_string(bounds::theorem_44(3, true)));
    for (long m0 = 4; m0 <= 6; ++m0)
        s.add("bounds.thm.m0=" + std::to_string(m0), "bounds", "threshold over all fibre types",
              std::to_string(4 * m0 + 2), std::to_string(bounds::theorem_44(m0, false)));
    s.add("bounds.main_theorem", "bounds", "chi(O) <= 0 pipeline", "14",
          std::to_string(bounds::main_theorem_threshold()));
    s.add("bounds.corollary", "bounds", "chi(O) <= -1 pipeline", "8",
          std::to_string(bounds::corollary_threshold()));

    if (s.wanted("pipeline.X28.threshold", "pipeline")) {
        // X28: p_g = 1 so chi(O) = 0; P_2 = 1 < 2 <= P_3 forces m0 = 3.
        Int chi = wps::chi_structure_sheaf(wps::plurigenus(kX28, 1));
        long m0 = wps::plurigenus(kX28, 2) >= 2 ? 2 : 3;
        bool ok = chi == 0 && m0 == 3 && wps::plurigenus(kX28, 3) >= 2;
        long thr = ok ? bounds::theorem_44(m0, chi == 0) : -1;
        s.add("pipeline.X28.threshold", "pipeline", "chi(O)=0, m0=3 from the plurigenera", "14",
              std::to_string(thr));
        s.add("pipeline.X28.optimal", "pipeline", "recorded external fact",
              "phi_13 not birational (not computed)", "phi_13 not birational (not computed)",
              "witness for sharpness of 14");
    }
    if (s.wanted("pipeline.X16.threshold", "pipeline")) {
        Int chi = wps::chi_structure_sheaf(wps::plurigenus(kX16, 1));
        bool ok = chi <= -1 && wps::plurigenus(kX16, 2) >= 4;
        long thr = ok ? bounds::corollary_threshold() : -1;
        s.add("pipeline.X16.threshold", "pipeline", "chi(O)=-1, P_2=4, m0=2", "8",
              std::to_string(thr));
        s.add("pipeline.X16.optimal", "pipeline", "recorded external fact",
              "phi_7 not birational (not computed)", "phi_7 not birational (not computed)",
              "witness for sharpness of 8");
    }
}

}  // namespace

long Report::passed() const {
    return std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Report verify_paper(const std::string& filter) {
    Report rep;
    Suite s{rep, filter};
    checks_monotonicity(s);
    checks_wps(s);
    checks_infer(s);
    checks_p2_bound(s);
    checks_beta(s);
    checks_chains(s);
    checks_assembled(s);
    return rep;
}

std::string to_text(const Report& rep) {
    std::ostringstream os;
    for (const auto& c : rep.checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << ": expected " << c.expected
           << ", actual " << c.actual << "\n";
        if (!c.pass && !c.inputs.empty()) os << "       inputs: " << c.inputs << "\n";
    }
    os << rep.passed() << "/" << rep.total() << " checks passed\n";
    return os.str();
}

std::string to_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["version"] = kVersion;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : rep.checks) {
        nlohmann::ordered_json jc;
        jc["id"] = c.id;
        jc["module"] = c.module_tag;
        jc["inputs"] = c.inputs;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["pass"] = c.pass;
        if (!c.note.empty()) jc["note"] = c.note;
        j["checks"].push_back(std::move(jc));
    }
    j["summary"] = {{"total", rep.total()}, {"passed", rep.passed()}, {"failed", rep.failed()}};
    return j.dump(2) + "\n";
}

std::optional<reid::PluriData> consistent_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 0x123456789abcdefull);
    static const auto all_types = [] {
        std::vector<reid::QuotientType> out;
        for (const auto& q : reid::enumerate_quotient_types(12))
            if (2 * q.b <= q.r) out.push_back(q);
        return out;
    }();
    reid::PluriData pd;
    long n = static_cast<long>(rng() % 6);
    Int index_lcm = 1;
    for (long i = 0; i < n; ++i) {
        auto q = all_types[rng() % all_types.size()];
        bool flip = rng() % 2 == 0 && q.b * 2 != q.r;
        pd.basket.add(flip ? q.r - q.b : q.b, q.r, 1);
        mpz_lcm_ui(index_lcm.get_mpz_t(), index_lcm.get_mpz_t(), q.r);
    }
    pd.chi = static_cast<long>(rng() % 7) - 3;

    // Solve for K^3 = t/G on the grid G = 12 lcm(r) so that P_2..P_10 are all
    // integers: for each m, m(m-1)(2m-1) t + 12 G B_m = 0 mod 12 G, where
    // B_m = sum of corrections - (2m-1) chi.
    Int G = 12 * index_lcm;
    Int MOD = 12 * G;
    Int cls_r = 0, cls_m = 1;
    for (long m = 2; m <= 10; ++m) {
        Rat bm(0);
        for (const auto& e : pd.basket.entries())
            bm += Rat(e.mult) * reid::correction({e.b, e.r}, m);
        bm -= Rat(2 * m - 1) * Rat(pd.chi);
        Rat scaled = Rat(12 * G) * bm;
        scaled.canonicalize();
        if (!is_integer(scaled)) return std::nullopt;  // cannot happen; defensive
        Int a = Int(m) * (m - 1) * (2 * m - 1);
        Int bb = (-scaled.get_num()) % MOD;
        if (bb < 0) bb += MOD;
        Int g = gcd(a, MOD);
        if (bb % g != 0) return std::nullopt;
        Int mm = MOD / g;
        Int t0 = 0;
        if (mm > 1) {
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), Int(a / g).get_mpz_t(), mm.get_mpz_t()) == 0)
                return std::nullopt;
            t0 = inv * (bb / g) % mm;
        }
        // merge t = cls_r (mod cls_m) with t = t0 (mod mm)
        Int g2 = gcd(cls_m, mm);
        if ((t0 - cls_r) % g2 != 0) return std::nullopt;
        Int l = cls_m / g2 * mm;
        Int step = mm / g2;
        if (step > 1) {
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), Int(cls_m / g2 % step).get_mpz_t(),
                           step.get_mpz_t()) == 0)
                return std::nullopt;
            Int diff = (t0 - cls_r) / g2;
            cls_r = (cls_r + cls_m * (diff * inv % step)) % l;
            if (cls_r < 0) cls_r += l;
        }
        cls_m = l;
    }
    Int t = cls_r > 0 ? cls_r : cls_r + cls_m;
    pd.k3 = Rat(t, G);
    pd.k3.canonicalize();
    if (pd.k3 > 10) return std::nullopt;
    return pd;
}

}  // namespace plurilab::verify
