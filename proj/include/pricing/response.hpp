#pragma once

#include <string>
#include <vector>

#include "pricing/instance.hpp"
#include "pricing/price.hpp"

namespace pricing {

/// One buyer's purchases q_t, consumption x_t and end-of-period storage S_t,
/// satisfying S_t = S_{t-1} + q_t - x_t with S_0 = 0 and S_t >= 0.
struct ConsumerPlan {
  std::vector<int> q;
  std::vector<int> x;
  std::vector<int> S;

  static ConsumerPlan zero(int periods) {
    ConsumerPlan p;
    p.q.assign(static_cast<size_t>(periods), 0);
    p.x.assign(static_cast<size_t>(periods), 0);
    p.S.assign(static_cast<size_t>(periods), 0);
    return p;
  }

  bool operator==(const ConsumerPlan&) const = default;
};

/// Joint result of all buyers' best responses to a schedule.
struct MarketOutcome {
  std::vector<ConsumerPlan> plans;  // one per buyer (single-buyer: one)
  Rat revenue;
  Rat consumer_surplus;
  Rat storage_cost_paid;
  long total_storage = 0;  // unit-periods across all buyers
};

struct AuditReport {
  std::vector<Rat> utilities;  // per buyer
  Rat revenue;
  bool feasible = true;
  std::string violation;
};

/// Cheapest way to obtain one unit for consumption at period t under linear
/// storage: min over s <= t of p_s + (t-s)*c. The source is the LARGEST s
/// attaining the minimum (the least-storage acquisition). Skip if no finite
/// price exists at or before t.
struct EffectivePrice {
  Price price;
  int source = 0;
};
EffectivePrice effective_price(const PriceSchedule& schedule, const Rat& c, int t);

struct ResponseOptions {
  /// A buyer indifferent between buying and not buying buys. The flag exists
  /// for sensitivity experiments only.
  bool buy_on_tie = true;
};

/// Exact utility-maximizing response under linear storage costs. Each demand
/// item decouples: item (i,t) is bought iff v_{i,t} >= e_t, acquired at the
/// least-storage source period. Among utility-maximal plans the result
/// minimizes total storage and acquires as late as possible.
MarketOutcome best_response_linear(const MarketInstance& inst, const PriceSchedule& schedule,
                                   const ResponseOptions& opts = {});

/// Exact per-buyer optimum for concave (or linear) storage costs, computed
/// by dynamic programming over (period, inventory) states. Storage cost is
/// assessed per buyer on her own inventory. Ties: utility, then buying, then
/// least total storage, then latest acquisition.
MarketOutcome best_response_concave(const MarketInstance& inst, const PriceSchedule& schedule,
                                    const ResponseOptions& opts = {});

/// Recomputes each buyer's objective and the retailer revenue from scratch;
/// flags infeasible plans (negative storage, purchases at Skip prices,
/// consumption beyond the demand cap).
AuditReport audit_plan(const MarketInstance& inst, const PriceSchedule& schedule,
                       const std::vector<ConsumerPlan>& plans);

/// Assembles a MarketOutcome (revenue, surplus, storage totals) from audited
/// plans. The plans must be feasible.
MarketOutcome outcome_from_plans(const MarketInstance& inst, const PriceSchedule& schedule,
                                 std::vector<ConsumerPlan> plans);

std::string outcome_to_json(const MarketOutcome& outcome);

}  // namespace pricing
