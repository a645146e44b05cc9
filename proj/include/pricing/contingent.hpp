#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pricing/instance.hpp"
#include "pricing/preannounced.hpp"
#include "pricing/price.hpp"
#include "pricing/response.hpp"

namespace pricing {

/// Position of the contingent game after some prefix of play. Strategies
/// read the structured fields; the price history is kept for reporting only
/// and does not take part in state identity.
struct GameState {
  int t = 1;                               // 1..T+1
  std::vector<int> inventory;              // per buyer
  std::vector<std::vector<bool>> consumed;  // per buyer, [t-1] = demand period satisfied
  std::vector<Price> history;

  static GameState initial(const MarketInstance& inst);
};

/// Finite per-period candidate price sets; every period contains Skip.
struct PriceGrid {
  std::vector<std::vector<Price>> per_period;  // sorted ascending, Skip last

  const std::vector<Price>& at(int t) const { return per_period[static_cast<size_t>(t - 1)]; }
};

/// Candidate prices anchored at demand values and shifted by storage both
/// ways: {v_{j,s} + (t-s)*c : all s, all j, result >= 0} plus Skip, plus an
/// optional delta-spaced refinement between 0 and the maximum value. For
/// concave storage the shifts run over sums of storage marginals instead of
/// multiples of c.
PriceGrid build_price_grid(const MarketInstance& inst, const std::optional<Rat>& refine = std::nullopt);

/// Pure strategies: the retailer maps a state to a price; each buyer maps
/// (state, announced price) to a purchase count.
struct StrategyProfile {
  std::string name;
  std::function<Price(const MarketInstance&, const GameState&)> retailer;
  std::function<int(const MarketInstance&, const GameState&, int buyer, const Price& price)> buyer;
};

/// One stage of play: price announced, purchases made, consumption and
/// storage resolved. A buyer holding a unit consumes in her positive-value
/// periods; unit demand per buyer per period.
struct StageOutcome {
  GameState next;
  Rat revenue;                  // this stage's retailer revenue
  std::vector<Rat> utilities;   // this stage's per-buyer utility
  std::vector<int> consumed_units;
  int sales = 0;
};
StageOutcome apply_stage(const MarketInstance& inst, const GameState& state, const Price& price,
                         const std::vector<int>& purchases);

/// Purchase counts available to one buyer: bounded by her remaining demand
/// and the certification inventory cap; empty price (Skip) forces 0.
std::vector<int> feasible_purchases(const MarketInstance& inst, const GameState& state, int buyer,
                                    const Price& price, int inventory_cap);

struct SimulationResult {
  PriceSchedule prices;        // realized price path
  std::vector<int> sales;      // per period
  Rat revenue;
  MarketOutcome outcome;       // plans reconstructed from the realized path
};

/// Plays the profile forward from the initial state. Throws InfeasibleAction
/// if a strategy returns an inventory-infeasible purchase.
SimulationResult simulate_profile(const MarketInstance& inst, const StrategyProfile& profile);

struct CertifyOptions {
  int inventory_cap = 2;
  long max_states = 200000;
  ExecMode mode = ExecMode::auto_mode;
};

struct DeviationReport {
  bool examined = false;
  Rat gain;            // best strict improvement found (may be <= 0)
  int period = 0;
  std::string state;   // human-readable state description
  Price price;         // retailer deviations: the alternative price
  int buyer = -1;      // buyer deviations: who deviates
  int purchase = 0;    // buyer deviations: the alternative purchase count
};

struct CertificationReport {
  bool certified = false;
  long states_examined = 0;
  DeviationReport worst_retailer;
  DeviationReport worst_buyer;
  Rat on_path_revenue;
  Rat on_path_surplus;
  PriceGrid grid;
};

/// Checks the one-shot-deviation conditions of the profile at every state
/// reachable under any grid price sequence and any feasible buyer actions.
/// Certified iff no retailer grid deviation and no unilateral buyer
/// deviation strictly gains (zero-gain deviations do not refute).
CertificationReport certify_spne(const MarketInstance& inst, const StrategyProfile& profile,
                                 const PriceGrid& grid, const CertifyOptions& options = {});

std::string certification_to_json(const CertificationReport& report);

struct SpneSolution {
  Rat revenue;
  PriceSchedule prices;  // equilibrium path
  ConsumerPlan plan;
  Rat buyer_surplus;
};

/// Exact backward induction of the single-buyer game over the price grid:
/// at each (period, inventory) node the retailer picks the revenue-maximal
/// grid price against the buyer's exact best reply, with buyer ties broken
/// toward buying. Works for linear and concave storage costs.
SpneSolution solve_spne_single_buyer(const MarketInstance& inst, const PriceGrid& grid,
                                     long max_nodes = 50000000);

struct BoundReport {
  Rat sum_values;     // sum of all positive demand values (perfect discrimination)
  Rat harmonic;       // H_l for l = demand_size
  Rat fixed_revenue;  // Pi^F
  Rat bound;          // H_l * Pi^F
  int items = 0;
  bool holds = false;
};

/// The harmonic upper bound: sum of values <= H_l * Pi^F.
BoundReport discrimination_upper_bound(const MarketInstance& inst);

}  // namespace pricing
