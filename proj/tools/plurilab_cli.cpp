#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "plurilab/bounds.hpp"
#include "plurilab/infer.hpp"
#include "plurilab/report.hpp"
#include "plurilab/textio.hpp"
#include "plurilab/wps.hpp"

namespace {

using nlohmann::ordered_json;
using namespace plurilab;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

long default_rmax() {
    if (const char* env = std::getenv("PLURILAB_RMAX")) {
        try {
            long v = std::stol(env);
            if (v >= 2) return v;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid PLURILAB_RMAX\n";
    }
    return 30;
}

int run_pluri(const Options& opt, const std::string& chi_s, const std::string& k3_s,
              const std::string& basket_s, const std::string& m_s) {
    Int chi(parse_rational(chi_s).get_num() * (is_integer(parse_rational(chi_s)) ? 1 : 0));
    if (!is_integer(parse_rational(chi_s))) throw parse_error("chi must be an integer", 0);
    Rat k3 = parse_rational(k3_s);
    reid::Basket basket = textio::parse_basket(basket_s);
    auto [lo, hi] = textio::parse_m_range(m_s);
    if (lo < 2) throw parse_error("m must be >= 2", 0);
    reid::PluriData pd{chi, k3, basket};
    ordered_json rows = ordered_json::array();
    for (long m = lo; m <= hi; ++m) {
        Rat pm = reid::plurigenus(pd, m);
        if (opt.json()) {
            rows.push_back({{"m", m}, {"P_m", to_string(pm)}, {"integral", is_integer(pm)}});
        } else {
            std::cout << "P_" << m << " = " << to_string(pm)
                      << (is_integer(pm) ? "" : "   [warning: not an integer]") << "\n";
        }
    }
    if (opt.json()) std::cout << rows.dump(2) << "\n";
    return kExitOk;
}

int run_wps(const Options& opt, const std::string& surface_s, const std::string& m_s) {
    auto x = textio::parse_hypersurface(surface_s);
    auto [lo, hi] = textio::parse_m_range(m_s);
    if (lo < 1) throw parse_error("m must be >= 1", 0);
    ordered_json j;
    j["surface"] = textio::format_hypersurface(x);
    j["well_formed"] = wps::well_formed(x);
    j["canonical_weight"] = wps::canonical_weight(x);
    j["K3"] = to_string(wps::k3(x));
    ordered_json rows = ordered_json::array();
    for (long m = lo; m <= hi; ++m)
        rows.push_back({{"m", m}, {"P_m", wps::plurigenus(x, m).get_str()}});
    j["plurigenera"] = rows;
    if (opt.json()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "surface " << textio::format_hypersurface(x) << "\n"
                  << "canonical weight k = " << wps::canonical_weight(x) << "\n"
                  << "K^3 = " << to_string(wps::k3(x)) << "\n";
        for (long m = lo; m <= hi; ++m)
            std::cout << "P_" << m << " = " << wps::plurigenus(x, m).get_str() << "\n";
    }
    return kExitOk;
}

int run_infer(const Options& opt, const std::string& pm_s, const std::string& surface_s,
              long m_max, const std::string& chi_s, const std::string& k3_s, long r_max,
              long size_max) {
    infer::InferenceProblem prob;
    prob.r_max = r_max;
    prob.size_max = size_max;
    if (!pm_s.empty()) {
        prob.pluri = textio::parse_pm_list(pm_s);
    } else if (!surface_s.empty()) {
        auto x = textio::parse_hypersurface(surface_s);
        for (long m = 2; m <= m_max; ++m) prob.pluri[m] = wps::plurigenus(x, m);
        if (k3_s.empty()) prob.k3 = wps::k3(x);
    } else {
        throw parse_error("infer needs --pm or --surface", 0);
    }
    if (!chi_s.empty()) {
        Rat c = parse_rational(chi_s);
        if (!is_integer(c)) throw parse_error("chi must be an integer", 0);
        prob.chi = c.get_num();
    }
    if (!k3_s.empty()) prob.k3 = parse_rational(k3_s);
    auto res = infer::infer_basket(prob);
    if (opt.json()) {
        ordered_json j;
        j["basket"] = textio::format_basket(res.basket);
        j["points"] = res.basket.size();
        j["chi"] = res.chi.get_str();
        j["K3"] = to_string(res.k3);
        j["exact_match"] = res.exact_match;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "basket  {" << textio::format_basket(res.basket) << "}  ("
                  << res.basket.size() << " points)\n"
                  << "chi     " << res.chi.get_str() << "\n"
                  << "K^3     " << to_string(res.k3) << "\n"
                  << "exact   " << (res.exact_match ? "yes" : "no") << "\n";
    }
    return kExitOk;
}

ordered_json trace_json(const bounds::BoundResult& res) {
    ordered_json steps = ordered_json::array();
    for (const auto& st : res.trace)
        steps.push_back({{"m", st.m},
                         {"alpha", to_string(st.alpha)},
                         {"alpha0", st.alpha0.get_str()},
                         {"xi_before", to_string(st.xi_before)},
                         {"xi_after", to_string(st.xi_after)},
                         {"birational", st.criterion_fired}});
    ordered_json j;
    j["scenario"] = res.scenario_label;
    j["xi_final"] = to_string(res.xi_final);
    if (res.m_birational)
        j["m_birational"] = *res.m_birational;
    else
        j["m_birational"] = nullptr;
    j["trace"] = steps;
    return j;
}

void print_trace(const bounds::BoundResult& res) {
    std::cout << "scenario " << res.scenario_label << "\n";
    for (const auto& st : res.trace)
        std::cout << "  m=" << st.m << "  alpha=" << to_string(st.alpha) << "  alpha0="
                  << st.alpha0.get_str() << "  xi: " << to_string(st.xi_before) << " -> "
                  << to_string(st.xi_after) << (st.criterion_fired ? "  [birational]" : "") << "\n";
    std::cout << "xi_final = " << to_string(res.xi_final) << "\n";
    if (res.m_birational)
        std::cout << "m_birational = " << *res.m_birational << "\n";
    else
        std::cout << "m_birational = none within range\n";
}

int run_bounds(const Options& opt, const std::string& preset_s, long m0,
               const std::string& scenario_s, const std::string& schedule_s, long m_hi,
               const std::string& beta_s, bool thm44, bool chi_zero, bool corollary,
               bool main_thm, const std::string& prop_b_xi) {
    if (!beta_s.empty()) {
        auto parts = textio::parse_schedule(beta_s);
        if (parts.size() < 2 || parts.size() > 4)
            throw parse_error("--beta-sequence needs m0,p[,t0[,n]]", 0);
        long t0 = parts.size() > 2 ? parts[2] : 1;
        long n = parts.size() > 3 ? parts[3] : 10;
        auto seq = bounds::beta_sequence(parts[0], parts[1], t0, n);
        if (opt.json()) {
            ordered_json j;
            j["limit"] = to_string(seq.limit());
            ordered_json terms = ordered_json::array();
            for (const auto& t : seq.terms) terms.push_back(to_string(t));
            j["terms"] = terms;
            std::cout << j.dump(2) << "\n";
        } else {
            for (std::size_t i = 0; i < seq.terms.size(); ++i)
                std::cout << "beta_" << i << " = " << to_string(seq.terms[i]) << "\n";
            std::cout << "limit = " << to_string(seq.limit()) << "\n";
        }
        return kExitOk;
    }
    if (!prop_b_xi.empty()) {
        Rat xi = parse_rational(prop_b_xi);
        bool pass = bounds::prop_b_check(xi);
        if (opt.json())
            std::cout << ordered_json{{"xi", to_string(xi)}, {"deg", to_string(8 * xi)},
                                      {"birational", pass}}
                             .dump(2)
                      << "\n";
        else
            std::cout << "deg(D) >= " << to_string(8 * xi) << (pass ? " > 2: birational" : " <= 2")
                      << "\n";
        return kExitOk;
    }
    if (thm44) {
        std::cout << bounds::theorem_44(m0, chi_zero) << "\n";
        return kExitOk;
    }
    if (corollary) {
        std::cout << bounds::corollary_threshold() << "\n";
        return kExitOk;
    }
    if (main_thm) {
        std::cout << bounds::main_theorem_threshold() << "\n";
        return kExitOk;
    }
    bounds::Scenario sc;
    if (!preset_s.empty())
        sc = bounds::preset(bounds::preset_id_from_string(preset_s), m0);
    else if (!scenario_s.empty())
        sc = textio::parse_scenario(scenario_s);
    else
        throw parse_error("bounds needs --preset, --scenario, --beta-sequence, --prop-b, "
                          "--theorem44, --corollary or --main-theorem",
                          0);
    bounds::BoundResult res;
    if (!schedule_s.empty())
        res = bounds::run_schedule(sc, textio::parse_schedule(schedule_s));
    else
        res = bounds::min_birational_m(sc, m_hi > 0 ? std::optional<long>(m_hi) : std::nullopt);
    if (opt.json())
        std::cout << trace_json(res).dump(2) << "\n";
    else
        print_trace(res);
    return kExitOk;
}

int run_verify(const Options& opt, const std::string& filter) {
    auto rep = verify::verify_paper(filter);
    std::cout << (opt.json() ? verify::to_json(rep) : verify::to_text(rep));
    return rep.all_pass() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact plurigenus and pluricanonical-bound calculator"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    std::string seed_unused;
    app.add_option("--seed", seed_unused, "accepted for interface stability; all computation is deterministic");

    auto* pluri = app.add_subcommand("pluri", "plurigenera from chi, K^3 and a basket");
    std::string chi_s = "0", k3_s = "1", basket_s, m_s = "2..10";
    pluri->add_option("--chi", chi_s, "chi(O)")->required();
    pluri->add_option("--k3", k3_s, "K^3 as p/q")->required();
    pluri->add_option("--basket", basket_s, "basket, e.g. 5*1/2,1/3,1/4");
    pluri->add_option("--m", m_s, "m or lo..hi");

    auto* wpsc = app.add_subcommand("wps", "invariants of a weighted hypersurface");
    std::string surface_s, wps_m = "1..10";
    wpsc->add_option("--surface", surface_s, "d:a0,a1,a2,a3,a4")->required();
    wpsc->add_option("--m", wps_m, "m or lo..hi");

    auto* inferc = app.add_subcommand("infer", "recover the basket from plurigenera");
    std::string pm_s, infer_surface, infer_chi, infer_k3;
    long m_max = 8, r_max = default_rmax(), size_max = 12;
    inferc->add_option("--pm", pm_s, "plurigenus list, e.g. 2=1,3=2,4=3");
    inferc->add_option("--surface", infer_surface, "take plurigenera from this hypersurface");
    inferc->add_option("--m-max", m_max, "largest m drawn from --surface");
    inferc->add_option("--chi", infer_chi, "chi(O) if known");
    inferc->add_option("--k3", infer_k3, "K^3 if known");
    inferc->add_option("--rmax", r_max, "largest local index searched");
    inferc->add_option("--size-max", size_max, "largest basket size searched");

    auto* boundsc = app.add_subcommand("bounds", "derivation chains and thresholds");
    std::string preset_s, scenario_s, schedule_s, beta_s, prop_b_xi;
    long m0 = 3, m_hi = 0;
    bool thm44 = false, chi_zero = false, corollary = false, main_thm = false;
    boundsc->add_option("--preset", preset_s, "case1 case2 sub31 typeI typeII typeIII d5_1 d5_2 "
                                              "a_I a_II a_III prop_b cor_d2_3 cor_d2_2 cor_I "
                                              "cor_II cor_III");
    boundsc->add_option("--m0", m0, "input pluricanonical degree");
    boundsc->add_option("--scenario", scenario_s, "explicit scenario, e.g. \"m0=3 p=1 beta=1/3\"");
    boundsc->add_option("--schedule", schedule_s, "replay these m values, e.g. 12,14");
    boundsc->add_option("--m-hi", m_hi, "sweep cap for the minimal-m search");
    boundsc->add_option("--beta-sequence", beta_s, "m0,p[,t0[,n]]");
    boundsc->add_option("--prop-b", prop_b_xi, "check deg(D) = 8 xi > 2 at this xi");
    boundsc->add_flag("--theorem44", thm44, "assembled threshold for this m0");
    boundsc->add_flag("--chi-zero", chi_zero, "use the chi(O) = 0 refinement at m0 = 3");
    boundsc->add_flag("--corollary", corollary, "assembled threshold for chi(O) <= -1");
    boundsc->add_flag("--main-theorem", main_thm, "assembled threshold for chi(O) <= 0");

    auto* verifyc = app.add_subcommand("verify-paper", "run the golden checkpoint suite");
    std::string filter;
    verifyc->add_option("--filter", filter, "only run checks whose id or module contains this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*pluri) return run_pluri(opt, chi_s, k3_s, basket_s, m_s);
        if (*wpsc) return run_wps(opt, surface_s, wps_m);
        if (*inferc)
            return run_infer(opt, pm_s, infer_surface, m_max, infer_chi, infer_k3, r_max, size_max);
        if (*boundsc)
            return run_bounds(opt, preset_s, m0, scenario_s, schedule_s, m_hi, beta_s, thm44,
                              chi_zero, corollary, main_thm, prop_b_xi);
        if (*verifyc) return run_verify(opt, filter);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const infer::ambiguity_error& e) {
        std::cerr << "ambiguous: " << e.what() << "\n";
        for (const auto& cand : e.candidates)
            std::cerr << "  candidate: {" << textio::format_basket(cand.basket)
                      << "} chi=" << cand.chi.get_str() << " K^3=" << to_string(cand.k3) << "\n";
        return kExitVerifyFailed;
    } catch (const infer::not_found_error& e) {
        std::cerr << "not found: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
