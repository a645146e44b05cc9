#include "pricing/profiles.hpp"

#include <algorithm>

#include "pricing/generators.hpp"

namespace pricing {

namespace {

bool has_bought(const GameState& state, int buyer) {
  if (state.inventory[static_cast<size_t>(buyer)] > 0) return true;
  const auto& mask = state.consumed[static_cast<size_t>(buyer)];
  return std::find(mask.begin(), mask.end(), true) != mask.end();
}

// Highest value the buyer can still realize at or after period t.
Rat live_value(const MarketInstance& inst, const GameState& state, int buyer) {
  Rat best = 0;
  const auto& row = inst.demand.rows[static_cast<size_t>(buyer)];
  for (int s = state.t; s <= inst.periods; ++s) {
    if (!state.consumed[static_cast<size_t>(buyer)][static_cast<size_t>(s - 1)])
      best = std::max(best, row[static_cast<size_t>(s - 1)]);
  }
  return best;
}

void require_table1(const MarketInstance& inst) {
  if (!(inst == gen_table1()))
    throw Error(Errc::parameter_out_of_range, "this profile is defined for the Table-1 instance only");
}

}  // namespace

StrategyProfile make_pacman_profile() {
  StrategyProfile p;
  p.name = "builtin:pacman";
  p.retailer = [](const MarketInstance& inst, const GameState& state) -> Price {
    Rat best = -1;
    for (int i = 0; i < inst.demand.buyer_count(); ++i) {
      if (has_bought(state, i)) continue;
      for (const Rat& v : inst.demand.rows[static_cast<size_t>(i)]) best = std::max(best, v);
    }
    if (best < 0) return Price::skip();
    return Price::finite(best);
  };
  p.buyer = [](const MarketInstance& inst, const GameState& state, int buyer, const Price& price) -> int {
    if (price.is_skip() || has_bought(state, buyer)) return 0;
    Rat value = live_value(inst, state, buyer);
    return (value > 0 && price.value() <= value) ? 1 : 0;
  };
  return p;
}

namespace {

StrategyProfile table1_buyers(StrategyProfile p) {
  p.buyer = [](const MarketInstance& inst, const GameState& state, int buyer, const Price& price) -> int {
    require_table1(inst);
    if (price.is_skip()) return 0;
    const Rat& v = inst.demand.rows[static_cast<size_t>(buyer)][static_cast<size_t>(state.t - 1)];
    if (buyer == 0) {
      if (state.t == 1) {
        if (price.value() <= 14) return 2;
        return price.value() <= 17 ? 1 : 0;
      }
      return (state.inventory[0] == 0 && price.value() <= 15) ? 1 : 0;
    }
    // Buyer 2 buys for immediate consumption whenever the price is at most
    // her value; a held unit covers the period instead.
    return (state.inventory[static_cast<size_t>(buyer)] == 0 && v > 0 && price.value() <= v) ? 1 : 0;
  };
  return p;
}

}  // namespace

StrategyProfile make_table1_threat_profile() {
  StrategyProfile p;
  p.name = "builtin:table1-threat";
  p.retailer = [](const MarketInstance& inst, const GameState& state) -> Price {
    require_table1(inst);
    if (state.t == 1) return Price::finite(Rat(10));
    return Price::finite(state.inventory[0] >= 1 ? Rat(4) : Rat(15));
  };
  return table1_buyers(std::move(p));
}

StrategyProfile make_table1_unconditional_profile() {
  StrategyProfile p;
  p.name = "builtin:table1-unconditional";
  p.retailer = [](const MarketInstance& inst, const GameState& state) -> Price {
    require_table1(inst);
    return Price::finite(state.t == 1 ? Rat(10) : Rat(4));
  };
  return table1_buyers(std::move(p));
}

StrategyProfile profile_by_name(const std::string& name) {
  if (name == "builtin:pacman") return make_pacman_profile();
  if (name == "builtin:table1-threat") return make_table1_threat_profile();
  if (name == "builtin:table1-unconditional") return make_table1_unconditional_profile();
  throw Error(Errc::parameter_out_of_range, "unknown profile '" + name + "'");
}

}  // namespace pricing
