#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plurilab/bounds.hpp"
#include "plurilab/rational.hpp"
#include "plurilab/reid.hpp"
#include "plurilab/wps.hpp"

namespace plurilab::textio {

/// Basket grammar: entries separated by ','; entry := [mult '*'] b '/' r.
/// The alternate form [mult '*'] 1 '/' r '(' a ',' -a ',' 1 ')' is accepted,
/// with b recovered as the inverse of a mod r. The empty string is the empty
/// basket.
reid::Basket parse_basket(const std::string& text);
std::string format_basket(const reid::Basket& basket);

/// Hypersurface form: "d:a0,a1,a2,a3,a4".
wps::WeightedHypersurface parse_hypersurface(const std::string& text);
std::string format_hypersurface(const wps::WeightedHypersurface& x);

/// Scenario form: "m0=3 p=1 beta=1/3 g=2 sep=8 [xi0=2/7] [even] [nonhyp]".
bounds::Scenario parse_scenario(const std::string& text);
std::string format_scenario(const bounds::Scenario& sc);

/// Inline plurigenus list: "2=1,3=2,4=3".
std::map<long, Int> parse_pm_list(const std::string& text);

/// "a..b" or a single integer.
std::pair<long, long> parse_m_range(const std::string& text);

/// Comma-separated integers.
std::vector<long> parse_schedule(const std::string& text);

}  // namespace plurilab::textio
