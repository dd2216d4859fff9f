#include "plurilab/bounds.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace plurilab::bounds {

void validate(const Scenario& sc) {
    if (sc.m0 < 2) throw std::invalid_argument("scenario: m0 must be >= 2");
    if (sc.p < 1) throw std::invalid_argument("scenario: p must be >= 1");
    if (sc.beta <= 0) throw std::invalid_argument("scenario: beta must be positive");
    if (sc.g_min < 2) throw std::invalid_argument("scenario: genus floor must be >= 2");
    if (sc.xi0 && *sc.xi0 <= 0) throw std::invalid_argument("scenario: xi0 must be positive");
    if (sc.sep_m_min < sc.m0 + 2)
        throw std::invalid_argument("scenario: sep_m_min must be >= m0 + 2");
}

Rat coefficient(const Scenario& sc, long m) {
    Rat c = Rat(m - 1) - make_rat(sc.m0, sc.p) - 1 / sc.beta;
    c.canonicalize();
    return c;
}

Rat alpha_of(const Scenario& sc, long m, const Rat& xi) {
    if (xi <= 0) throw std::invalid_argument("alpha: xi must be positive");
    if (m < 2) throw std::invalid_argument("alpha: m must be >= 2");
    Rat a = coefficient(sc, m) * xi;
    a.canonicalize();
    return a;
}

bool condition_iv(const Scenario& sc, const Rat& alpha, bool positive_coeff) {
    if (alpha > 1) return true;
    return sc.nonhyperelliptic && sc.even_curve && positive_coeff;
}

bool condition_v(const Scenario& sc, const Rat& alpha, bool positive_coeff) {
    if (alpha > 2) return true;
    if (sc.nonhyperelliptic && ceil_rat(alpha) >= 2) return true;
    return sc.nonhyperelliptic && sc.even_curve && positive_coeff;
}

Rat xi_seed_asymptotic(const Scenario& sc) {
    Rat denom = Rat(1) + make_rat(sc.m0, sc.p) + 1 / sc.beta;
    Rat v = Rat(2 * sc.g_min - 2) / denom;
    v.canonicalize();
    return v;
}

Rat initial_xi(const Scenario& sc) { return sc.xi0 ? *sc.xi0 : xi_seed_asymptotic(sc); }

Rat refine_xi(const Scenario& sc, long m, const Rat& xi) {
    Rat a = alpha_of(sc, m, xi);
    if (!condition_iv(sc, a, coefficient(sc, m) > 0)) return xi;
    Rat cand(Int(2 * sc.g_min - 2) + ceil_rat(a), Int(m));
    cand.canonicalize();
    return std::max(xi, cand);
}

namespace {

Step make_step(const Scenario& sc, long m, const Rat& xi) {
    Step st;
    st.m = m;
    st.xi_before = xi;
    st.alpha = alpha_of(sc, m, xi);
    st.alpha0 = ceil_rat(st.alpha);
    st.criterion_fired = m >= sc.sep_m_min && condition_v(sc, st.alpha, coefficient(sc, m) > 0);
    st.xi_after = refine_xi(sc, m, xi);
    return st;
}

}  // namespace

BoundResult run_schedule(const Scenario& sc, const std::vector<long>& schedule) {
    validate(sc);
    if (schedule.empty()) throw std::invalid_argument("run_schedule: schedule must be nonempty");
    BoundResult res;
    res.scenario_label = sc.label;
    Rat xi = initial_xi(sc);
    for (long m : schedule) {
        Step st = make_step(sc, m, xi);
        if (st.criterion_fired && !res.m_birational) res.m_birational = m;
        xi = st.xi_after;
        res.trace.push_back(std::move(st));
    }
    res.xi_final = xi;
    return res;
}

BoundResult min_birational_m(const Scenario& sc, std::optional<long> m_hi_opt) {
    validate(sc);
    BoundResult res;
    res.scenario_label = sc.label;
    if (sc.fixed_m_birational) {
        res.m_birational = *sc.fixed_m_birational;
        res.xi_final = initial_xi(sc);
        return res;
    }
    long m_hi = m_hi_opt.value_or(12 * sc.m0);
    if (m_hi < sc.sep_m_min)
        throw std::invalid_argument("min_birational_m: m_hi below sep_m_min");
    Rat xi = initial_xi(sc);
    bool changed = true;
    while (changed) {
        changed = false;
        for (long m = sc.m0 + 2; m <= m_hi; ++m) {
            Rat next = refine_xi(sc, m, xi);
            if (next > xi) {
                res.trace.push_back(make_step(sc, m, xi));
                xi = next;
                changed = true;
            }
        }
    }
    res.xi_final = xi;
    for (long m = sc.sep_m_min; m <= m_hi; ++m) {
        if (condition_v(sc, alpha_of(sc, m, xi), coefficient(sc, m) > 0)) {
            res.m_birational = m;
            break;
        }
    }
    return res;
}

BetaSequence beta_sequence(long m0, long p, long t0, long n) {
    if (m0 < 1 || p < 1 || t0 < 1 || n < 0)
        throw std::invalid_argument("beta_sequence: m0, p, t0 must be positive and n >= 0");
    BetaSequence seq{m0, p, t0, {}};
    Int a = Int(t0) * p + Int(2) * t0 * m0;
    Int b = Int(t0) * p;
    seq.terms.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        Rat term(b, a);
        term.canonicalize();
        seq.terms.push_back(term);
        a += p + m0;
        b += p;
    }
    return seq;
}

PresetId preset_id_from_string(const std::string& name) {
    static const std::map<std::string, PresetId> table = {
        {"case1", PresetId::case1},       {"case2", PresetId::case2},
        {"sub31", PresetId::sub31},       {"typeI", PresetId::typeI},
        {"typeII", PresetId::typeII},     {"typeIII", PresetId::typeIII},
        {"d5_1", PresetId::d5_1},         {"d5_2", PresetId::d5_2},
        {"a_I", PresetId::a_I},           {"a_II", PresetId::a_II},
        {"a_III", PresetId::a_III},       {"prop_b", PresetId::prop_b},
        {"cor_d2_3", PresetId::cor_d2_3}, {"cor_d2_2", PresetId::cor_d2_2},
        {"cor_I", PresetId::cor_I},       {"cor_II", PresetId::cor_II},
        {"cor_III", PresetId::cor_III},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown preset id: " + name);
    return it->second;
}

std::string to_string(PresetId id) {
    switch (id) {
        case PresetId::case1: return "case1";
        case PresetId::case2: return "case2";
        case PresetId::sub31: return "sub31";
        case PresetId::typeI: return "typeI";
        case PresetId::typeII: return "typeII";
        case PresetId::typeIII: return "typeIII";
        case PresetId::d5_1: return "d5_1";
        case PresetId::d5_2: return "d5_2";
        case PresetId::a_I: return "a_I";
        case PresetId::a_II: return "a_II";
        case PresetId::a_III: return "a_III";
        case PresetId::prop_b: return "prop_b";
        case PresetId::cor_d2_3: return "cor_d2_3";
        case PresetId::cor_d2_2: return "cor_d2_2";
        case PresetId::cor_I: return "cor_I";
        case PresetId::cor_II: return "cor_II";
        case PresetId::cor_III: return "cor_III";
    }
    throw std::logic_error("unreachable");
}

Scenario preset(PresetId id, long m0) {
    auto require_m0 = [&](long want) {
        if (m0 != want)
            throw std::invalid_argument("preset " + to_string(id) + " requires m0 = " +
                                        std::to_string(want));
    };
    Scenario sc;
    sc.m0 = m0;
    sc.label = to_string(id) + "(m0=" + std::to_string(m0) + ")";
    switch (id) {
        case PresetId::case1:
            // image of dimension 3: free non-pencil G = S|_S, genus > 3 curve
            sc.p = 1;
            sc.beta = make_rat(1, m0);
            sc.g_min = 4;
            sc.xi0 = make_rat(2, m0);
            sc.sep_m_min = m0 + 2;
            break;
        case PresetId::case2:
            // image of dimension 2: G composed of a pencil
            sc.p = 1;
            sc.beta = make_rat(1, m0);
            sc.g_min = 2;
            sc.sep_m_min = 2 * m0 + 2;
            break;
        case PresetId::sub31:
            // fibration over a positive-genus base: certified constant m0 + 5
            sc.p = 1;
            sc.beta = make_rat(1, m0);
            sc.g_min = 2;
            sc.sep_m_min = m0 + 2;
            sc.xi0 = Rat(1);
            sc.fixed_m_birational = m0 + 5;
            break;
        case PresetId::typeI:
            // fibre (K^2, p_g) = (1, 2): genus-2 pencil inside |K_F|
            sc.p = 1;
            sc.beta = make_rat(1, m0 + 1);
            sc.g_min = 2;
            sc.sep_m_min = 4 * m0 + 2;
            break;
        case PresetId::typeII:
            // fibre (K^2, p_g) = (2, 3): genus-3 canonical curve, xi >= beta C^2
            sc.p = 1;
            sc.beta = make_rat(1, m0 + 1);
            sc.g_min = 3;
            sc.xi0 = make_rat(2, m0 + 1);
            sc.sep_m_min = 4 * m0 + 2;
            break;
        case PresetId::typeIII:
            // remaining fibres: even non-hyperelliptic C in |2 sigma* K|
            sc.p = 1;
            sc.beta = make_rat(1, 2 * m0 + 2);
            sc.g_min = 2;
            sc.even_curve = sc.nonhyperelliptic = true;
            sc.sep_m_min = 4 * m0 + 2;
            break;
        case PresetId::d5_1:
            require_m0(3);
            sc.p = 1;
            sc.beta = make_rat(3, 8);
            sc.g_min = 2;
            sc.xi0 = make_rat(1, 3);
            sc.sep_m_min = 14;
            sc.note = "genus floor 2 assumed for the refinement step";
            break;
        case PresetId::d5_2:
            require_m0(3);
            sc.m0 = 5;  // runs the pencil argument at input degree 5
            sc.p = 1;
            sc.beta = make_rat(3, 5);
            sc.g_min = 2;
            sc.xi0 = make_rat(4, 17);
            sc.sep_m_min = 12;
            sc.note = "genus floor 2 assumed for the refinement step";
            break;
        case PresetId::a_I:
            require_m0(3);
            sc.m0 = 5;
            sc.p = 2;
            sc.beta = make_rat(2, 7);
            sc.g_min = 2;
            sc.xi0 = make_rat(2, 7);
            sc.sep_m_min = 12;
            break;
        case PresetId::a_II:
            require_m0(3);
            sc.m0 = 5;
            sc.p = 2;
            sc.beta = make_rat(2, 7);
            sc.g_min = 3;
            sc.xi0 = make_rat(4, 7);
            sc.sep_m_min = 12;
            break;
        case PresetId::a_III:
            require_m0(3);
            sc.m0 = 5;
            sc.p = 2;
            sc.beta = make_rat(1, 7);
            sc.g_min = 2;
            sc.even_curve = sc.nonhyperelliptic = true;
            sc.sep_m_min = 12;
            break;
        case PresetId::prop_b:
            // quadric image: deg(D) >= 8 xi encoded as the alpha coefficient
            require_m0(3);
            sc.p = 1;
            sc.beta = make_rat(1, 2);
            sc.g_min = 2;
            sc.xi0 = make_rat(1, 3);
            sc.sep_m_min = 14;
            break;
        case PresetId::cor_d2_3:
            require_m0(2);
            sc = preset(PresetId::case1, 2);
            sc.sep_m_min = 7;
            break;
        case PresetId::cor_d2_2:
            require_m0(2);
            sc = preset(PresetId::case2, 2);
            sc.p = 2;
            break;
        case PresetId::cor_I:
            require_m0(2);
            sc.p = 3;
            sc.beta = make_rat(3, 5);
            sc.g_min = 2;
            sc.sep_m_min = 6;
            break;
        case PresetId::cor_II:
            require_m0(2);
            sc.p = 3;
            sc.beta = make_rat(3, 5);
            sc.g_min = 3;
            sc.xi0 = make_rat(6, 5);
            sc.sep_m_min = 6;
            break;
        case PresetId::cor_III:
            require_m0(2);
            sc.p = 3;
            sc.beta = make_rat(3, 10);
            sc.g_min = 2;
            sc.even_curve = sc.nonhyperelliptic = true;
            sc.sep_m_min = 6;
            break;
    }
    sc.label = to_string(id) + "(m0=" + std::to_string(m0) + ")";
    validate(sc);
    return sc;
}

bool prop_b_check(const Rat& xi) {
    if (xi <= 0) throw std::invalid_argument("prop_b_check: xi must be positive");
    return 8 * xi > 2;
}

namespace {

long certified_or_throw(const Scenario& sc) {
    auto res = min_birational_m(sc);
    if (!res.m_birational)
        throw std::logic_error("preset " + sc.label + " failed to certify a threshold");
    return *res.m_birational;
}

}  // namespace

long theorem_44(long m0, bool chi_zero) {
    if (m0 < 2) throw std::invalid_argument("theorem_44: m0 must be >= 2");
    std::vector<Scenario> family = {
        preset(PresetId::case1, m0),
        preset(PresetId::case2, m0),
        preset(PresetId::sub31, m0),
        preset(PresetId::typeII, m0),
        preset(PresetId::typeIII, m0),
    };
    if (chi_zero && m0 == 3) {
        for (auto id : {PresetId::d5_1, PresetId::d5_2, PresetId::a_I, PresetId::a_II,
                        PresetId::a_III, PresetId::prop_b})
            family.push_back(preset(id, m0));
    } else {
        family.push_back(preset(PresetId::typeI, m0));
    }
    long best = 0;
    for (const auto& sc : family) best = std::max(best, certified_or_throw(sc));
    return best;
}

long corollary_threshold() {
    long best = 0;
    for (auto id : {PresetId::cor_d2_3, PresetId::cor_d2_2, PresetId::cor_I, PresetId::cor_II,
                    PresetId::cor_III})
        best = std::max(best, certified_or_throw(preset(id, 2)));
    best = std::max(best, certified_or_throw(preset(PresetId::sub31, 2)));
    // fibres with p_g = 0 reduce to p_g(X) >= 2, where the 8-canonical map is
    // birational by the cited earlier result; recorded, not derived.
    best = std::max(best, 8L);
    return best;
}

long main_theorem_threshold() {
    return std::max(theorem_44(3, /*chi_zero=*/true), corollary_threshold());
}

}  // namespace plurilab::bounds
