#pragma once

#include <vector>

#include "pricing/errors.hpp"
#include "pricing/rational.hpp"

namespace pricing {

/// Per-period cost of holding inventory. Linear charges c per unit per
/// period; Concave carries the cumulative table cum[q] = C(q) with
/// nonincreasing marginals.
struct StorageCost {
  enum class Kind { linear, concave };

  Kind kind = Kind::linear;
  Rat c;                 // linear rate, >= 0
  std::vector<Rat> cum;  // concave: cum[0] = 0, cum[q] = C(q)

  static StorageCost linear(Rat rate) {
    StorageCost s;
    s.kind = Kind::linear;
    s.c = std::move(rate);
    return s;
  }
  static StorageCost concave(std::vector<Rat> cumulative) {
    StorageCost s;
    s.kind = Kind::concave;
    s.cum = std::move(cumulative);
    return s;
  }

  bool is_linear() const { return kind == Kind::linear; }

  /// C(units) for one period. The concave table extends past its last entry
  /// with the final marginal, which preserves concavity.
  Rat cost(int units) const;

  /// Marginal cost of the (q+1)-th stored unit, i.e. C(q+1) - C(q).
  Rat marginal(int q) const;

  bool operator==(const StorageCost&) const = default;
};

/// Demand data. Multi-buyer: values[i][t-1] = u_{i,t}, one unit of demand
/// per buyer per period. Single-buyer: rows are marginal utilities,
/// rows[j][t-1] = V(j+1, t), nonincreasing in j for each t; marginals are
/// implicitly zero beyond the supplied rows (the satiation level is the row
/// count).
struct DemandSide {
  enum class Kind { multi, single };

  Kind kind = Kind::multi;
  std::vector<std::vector<Rat>> rows;

  static DemandSide multi(std::vector<std::vector<Rat>> values) {
    return DemandSide{Kind::multi, std::move(values)};
  }
  static DemandSide single(std::vector<std::vector<Rat>> marginals) {
    return DemandSide{Kind::single, std::move(marginals)};
  }

  bool is_multi() const { return kind == Kind::multi; }
  int row_count() const { return static_cast<int>(rows.size()); }
  /// Number of independent decision makers (1 in the single-buyer case).
  int buyer_count() const { return is_multi() ? row_count() : 1; }

  bool operator==(const DemandSide&) const = default;
};

/// A validated market: horizon, storage-cost model and demand side.
/// Immutable after construction; safe for concurrent reads.
struct MarketInstance {
  int periods = 0;
  StorageCost storage;
  DemandSide demand;

  /// v_{j,t} with 1-based rank and period; single-buyer reads the marginal
  /// table directly, multi-buyer wants ranked_values() for sorted access.
  const Rat& raw_value(int row, int t) const {
    return demand.rows[static_cast<size_t>(row - 1)][static_cast<size_t>(t - 1)];
  }

  bool operator==(const MarketInstance&) const = default;
};

/// One period's demand column sorted nonincreasing. For multi-buyer demand,
/// order[r] is the buyer holding rank r (stable: equal values keep buyer
/// index order); for single-buyer it is the identity.
struct RankedColumn {
  std::vector<Rat> values;
  std::vector<int> order;  // 0-based buyer/row index per rank
};

/// Checks every model invariant and returns the instance. Throws Error with
/// codes NegativeValue, NonMonotoneMarginals, NonConcaveStorage or
/// DimensionMismatch.
MarketInstance validate_instance(int periods, StorageCost storage, DemandSide demand);

/// Sorted demand column for period t (1-based). Throws PeriodOutOfRange.
RankedColumn ranked_values(const MarketInstance& inst, int t);

/// D = number of demand items with positive value, over all periods.
int demand_size(const MarketInstance& inst);

/// Largest demand value anywhere in the instance (0 for empty demand).
Rat max_value(const MarketInstance& inst);

/// Number of positive-value items the given buyer/row could still consume in
/// periods >= t. Used as the storage bound: stocking more than remaining
/// demand is always wasteful.
int remaining_demand(const MarketInstance& inst, int buyer, int t);

}  // namespace pricing
