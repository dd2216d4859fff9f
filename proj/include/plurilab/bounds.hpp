#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plurilab/rational.hpp"

namespace plurilab::bounds {

/// Numeric hypotheses for one run of the key inequality: the input degree
/// m0 with P_{m0} >= 2, the multiplicity parameter p, the effectivity
/// coefficient beta (taken at its limit value), a genus floor for the
/// auxiliary curve, optional geometric seed for xi, curve flags, and the
/// least m for which the separation hypotheses are certified.
struct Scenario {
    long m0 = 2;
    long p = 1;
    Rat beta = 1;
    long g_min = 2;
    std::optional<Rat> xi0;
    bool even_curve = false;
    bool nonhyperelliptic = false;
    long sep_m_min = 4;
    /// Threshold certified outside the alpha machinery (rational-pencil base
    /// of positive genus); when set, min_birational_m returns it directly.
    std::optional<long> fixed_m_birational;
    std::string label;
    std::string note;
};

void validate(const Scenario& sc);

struct Step {
    long m = 0;
    Rat alpha;
    Int alpha0;
    Rat xi_before;
    Rat xi_after;
    bool criterion_fired = false;
};

struct BoundResult {
    Rat xi_final;
    std::optional<long> m_birational;
    std::vector<Step> trace;
    std::string scenario_label;
};

/// m - 1 - m0/p - 1/beta.
Rat coefficient(const Scenario& sc, long m);

/// alpha = (m - 1 - m0/p - 1/beta) xi.
Rat alpha_of(const Scenario& sc, long m, const Rat& xi);

/// Non-vanishing test: alpha > 1, or the even non-hyperelliptic branch with
/// positive coefficient.
bool condition_iv(const Scenario& sc, const Rat& alpha, bool positive_coeff);

/// Birationality test: alpha > 2, or ceil(alpha) >= 2 with C
/// non-hyperelliptic, or the even non-hyperelliptic branch.
bool condition_v(const Scenario& sc, const Rat& alpha, bool positive_coeff);

/// Seed from the large-m limit of  m xi >= 2g - 2 + alpha:
/// xi >= (2 g_min - 2) / (1 + m0/p + 1/beta).
Rat xi_seed_asymptotic(const Scenario& sc);

/// xi0 when the scenario supplies a geometric bound, else the asymptotic seed.
Rat initial_xi(const Scenario& sc);

/// One application of  m xi >= 2g - 2 + ceil(alpha)  when condition (iv)
/// holds at (m, xi); otherwise xi is returned unchanged. Never decreases xi.
Rat refine_xi(const Scenario& sc, long m, const Rat& xi);

/// Replays an explicit "take m = ..." chain. m_birational is the first
/// scheduled m >= sep_m_min where condition (v) holds at the entering xi.
BoundResult run_schedule(const Scenario& sc, const std::vector<long>& schedule);

/// Saturates refine_xi over sweeps m = m0+2..m_hi, then returns the least
/// m >= sep_m_min with condition (v) at the final xi. m_hi defaults to 12 m0.
BoundResult min_birational_m(const Scenario& sc, std::optional<long> m_hi = std::nullopt);

/// Lemma-style sequence beta_n = b_n/a_n with a_0 = t0 p + 2 t0 m0,
/// b_0 = t0 p, a_{n+1} = a_n + p + m0, b_{n+1} = b_n + p. Strictly
/// increasing with supremum p/(m0+p).
struct BetaSequence {
    long m0 = 2, p = 1, t0 = 1;
    std::vector<Rat> terms;
    Rat limit() const { return make_rat(p, m0 + p); }
};

BetaSequence beta_sequence(long m0, long p, long t0, long n);

enum class PresetId {
    case1,
    case2,
    sub31,
    typeI,
    typeII,
    typeIII,
    d5_1,
    d5_2,
    a_I,
    a_II,
    a_III,
    prop_b,
    cor_d2_3,
    cor_d2_2,
    cor_I,
    cor_II,
    cor_III,
};

PresetId preset_id_from_string(const std::string& name);
std::string to_string(PresetId id);

/// Fully populated scenario for a named case; throws when the case does not
/// apply to the given m0.
Scenario preset(PresetId id, long m0);

/// deg(D) >= 8 xi > 2, the quadric-image check.
bool prop_b_check(const Rat& xi);

/// Largest certified-birational threshold over every fibre type at this m0.
/// With chi_zero and m0 = 3 the type (I) branch is replaced by the
/// 5-canonical case family, which brings the answer down to 14.
long theorem_44(long m0, bool chi_zero);

/// Threshold for chi(O) <= -1 (P_2 >= 4 forces m0 = 2); equals 8.
long corollary_threshold();

/// Threshold for the full class chi(O) <= 0; equals 14.
long main_theorem_threshold();

}  // namespace plurilab::bounds
