#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plurilab/rational.hpp"
#include "plurilab/reid.hpp"

namespace plurilab::infer {

/// Inverse problem: recover the basket (and one optional scalar) from a
/// plurigenus sequence. The map must cover m = 2..M contiguously, M >= 3.
/// At most one of {chi, k3} may be absent.
struct InferenceProblem {
    std::map<long, Int> pluri;
    std::optional<Int> chi;
    std::optional<Rat> k3;
    long r_max = 30;
    long size_max = 12;
};

struct InferenceResult {
    reid::Basket basket;  // conjugation-normalized, b <= r - b
    Int chi;
    Rat k3;
    bool exact_match = true;
};

struct not_found_error : std::runtime_error {
    explicit not_found_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ambiguity_error : std::runtime_error {
    ambiguity_error(const std::string& msg, std::vector<InferenceResult> all)
        : std::runtime_error(msg), candidates(std::move(all)) {}
    std::vector<InferenceResult> candidates;
};

/// The unique basket (up to conjugation) within the bounds matching every
/// supplied P_m exactly. Throws not_found_error / ambiguity_error otherwise.
InferenceResult infer_basket(const InferenceProblem& p);

/// Solves K^3 from the m = 2 instance of the plurigenus formula.
Rat solve_k3(const Int& p2, const Int& chi, const reid::Basket& basket);

/// Solves chi(O) from the m = 2 instance; throws std::domain_error when the
/// solution is not an integer.
Int solve_chi(const Int& p2, const Rat& k3, const reid::Basket& basket);

}  // namespace plurilab::infer
