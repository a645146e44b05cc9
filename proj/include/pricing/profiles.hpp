#pragma once

#include "pricing/contingent.hpp"

namespace pricing {

/// Retailer prices at the highest valuation among consumers who have not yet
/// bought; each consumer buys one unit at the earliest period where the
/// price is at most her valuation, provided a demand period of hers is still
/// ahead. Defined for multi-buyer instances.
StrategyProfile make_pacman_profile();

/// The worked-example threat equilibrium: p1 = 10, p2 = 4 if buyer 1 stored
/// a unit and 15 otherwise; buyer 1 buys two units in period 1 whenever
/// p1 <= 14; buyer 2 buys at any price up to her per-period value. Only
/// valid on the Table-1 instance.
StrategyProfile make_table1_threat_profile();

/// The same retailer prices as the threat profile but unconditionally
/// (10, 4), with identical buyer behavior. Not an equilibrium: buyer 1
/// gains by skipping storage. Kept as a certifier fixture.
StrategyProfile make_table1_unconditional_profile();

/// Resolves "builtin:pacman" / "builtin:table1-threat" /
/// "builtin:table1-unconditional". Throws ParameterOutOfRange for unknown
/// names; profile preconditions on the instance are checked at play time.
StrategyProfile profile_by_name(const std::string& name);

}  // namespace pricing
