#include "pricing/instance.hpp"

#include <algorithm>
#include <numeric>

namespace pricing {

Rat StorageCost::cost(int units) const {
  if (units <= 0) return Rat(0);
  if (kind == Kind::linear) return c * units;
  const int qmax = static_cast<int>(cum.size()) - 1;
  if (units <= qmax) return cum[static_cast<size_t>(units)];
  // Flat extension with the last marginal.
  Rat last_marginal = qmax >= 1 ? cum[static_cast<size_t>(qmax)] - cum[static_cast<size_t>(qmax - 1)] : Rat(0);
  return cum[static_cast<size_t>(qmax)] + last_marginal * (units - qmax);
}

Rat StorageCost::marginal(int q) const {
  if (kind == Kind::linear) return c;
  return cost(q + 1) - cost(q);
}

MarketInstance validate_instance(int periods, StorageCost storage, DemandSide demand) {
  if (periods < 1) throw Error(Errc::parameter_out_of_range, "periods must be >= 1");

  if (storage.kind == StorageCost::Kind::linear) {
    if (storage.c < 0) throw Error(Errc::negative_value, "linear storage cost c < 0");
  } else {
    if (storage.cum.empty() || storage.cum.front() != 0)
      throw Error(Errc::non_concave_storage, "concave table must start at C(0) = 0");
    Rat prev_marginal;
    bool have_prev = false;
    for (size_t q = 0; q + 1 < storage.cum.size(); ++q) {
      Rat m = storage.cum[q + 1] - storage.cum[q];
      if (m < 0) throw Error(Errc::non_concave_storage, "storage marginal negative");
      if (have_prev && m > prev_marginal)
        throw Error(Errc::non_concave_storage,
                    "storage marginals increase (" + rat_str(prev_marginal) + " -> " + rat_str(m) + ")");
      prev_marginal = m;
      have_prev = true;
    }
  }

  if (demand.rows.empty()) throw Error(Errc::dimension_mismatch, "demand has no rows");
  for (const auto& row : demand.rows) {
    if (static_cast<int>(row.size()) != periods)
      throw Error(Errc::dimension_mismatch, "demand row width differs from periods");
    for (const Rat& v : row) {
      if (v < 0) throw Error(Errc::negative_value, "demand value < 0");
    }
  }
  if (!demand.is_multi()) {
    // Marginal utilities must be nonincreasing in the unit index for every
    // period; satiation beyond the last row is implicit.
    for (size_t j = 0; j + 1 < demand.rows.size(); ++j) {
      for (int t = 0; t < periods; ++t) {
        if (demand.rows[j][static_cast<size_t>(t)] < demand.rows[j + 1][static_cast<size_t>(t)])
          throw Error(Errc::non_monotone_marginals,
                      "marginal utility increases in unit index at period " + std::to_string(t + 1));
      }
    }
  }

  return MarketInstance{periods, std::move(storage), std::move(demand)};
}

RankedColumn ranked_values(const MarketInstance& inst, int t) {
  if (t < 1 || t > inst.periods) throw Error(Errc::period_out_of_range, "period " + std::to_string(t));
  const int n = inst.demand.row_count();
  RankedColumn col;
  col.order.resize(static_cast<size_t>(n));
  std::iota(col.order.begin(), col.order.end(), 0);
  if (inst.demand.is_multi()) {
    std::stable_sort(col.order.begin(), col.order.end(), [&](int a, int b) {
      return inst.demand.rows[static_cast<size_t>(a)][static_cast<size_t>(t - 1)] >
             inst.demand.rows[static_cast<size_t>(b)][static_cast<size_t>(t - 1)];
    });
  }
  col.values.reserve(static_cast<size_t>(n));
  for (int r : col.order) col.values.push_back(inst.demand.rows[static_cast<size_t>(r)][static_cast<size_t>(t - 1)]);
  return col;
}

int demand_size(const MarketInstance& inst) {
  int d = 0;
  for (const auto& row : inst.demand.rows) {
    for (const Rat& v : row) {
      if (v > 0) ++d;
    }
  }
  return d;
}

Rat max_value(const MarketInstance& inst) {
  Rat best = 0;
  for (const auto& row : inst.demand.rows) {
    for (const Rat& v : row) best = std::max(best, v);
  }
  return best;
}

int remaining_demand(const MarketInstance& inst, int buyer, int t) {
  int count = 0;
  if (inst.demand.is_multi()) {
    const auto& row = inst.demand.rows[static_cast<size_t>(buyer)];
    for (int s = t; s <= inst.periods; ++s) {
      if (row[static_cast<size_t>(s - 1)] > 0) ++count;
    }
  } else {
    for (int s = t; s <= inst.periods; ++s) {
      for (const auto& row : inst.demand.rows) {
        if (row[static_cast<size_t>(s - 1)] > 0) ++count;
      }
    }
  }
  return count;
}

}  // namespace pricing
