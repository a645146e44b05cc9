#include "pricing/preannounced.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>

#include "pricing/response.hpp"

namespace pricing {

namespace {

// Count of values >= price in a nonincreasing column.
int count_at_least(const std::vector<Rat>& sorted_desc, const Rat& price) {
  int lo = 0, hi = static_cast<int>(sorted_desc.size());
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (sorted_desc[static_cast<size_t>(mid)] >= price)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

Rat linear_rate(const MarketInstance& inst) {
  if (!inst.storage.is_linear())
    throw Error(Errc::concave_not_supported, "preannounced solver requires linear storage");
  return inst.storage.c;
}

}  // namespace

ContourSet build_contours(const MarketInstance& inst) {
  ContourSet set;
  set.contours.push_back(Contour::dummy());
  set.keys.emplace_back(0);  // placeholder; the dummy key is +infinity by convention
  set.by_period.assign(static_cast<size_t>(inst.periods + 1), {});
  const Rat c = linear_rate(inst);
  for (int t = 1; t <= inst.periods; ++t) {
    RankedColumn col = ranked_values(inst, t);
    for (size_t r = 0; r < col.values.size(); ++r) {
      if (col.values[r] <= 0) break;  // column sorted; zero-value items carry no demand
      int id = set.size();
      set.contours.push_back(Contour::item(col.values[r], t, static_cast<int>(r + 1)));
      set.keys.push_back(col.values[r] - c * t);
      set.by_period[static_cast<size_t>(t)].push_back(id);
    }
  }
  return set;
}

Price contour_price(const Contour& gamma, int t, const Rat& c) {
  if (gamma.is_dummy) return Price::skip();
  if (t < gamma.period) throw Error(Errc::period_before_contour, "period precedes contour");
  return Price::finite(gamma.value + c * (t - gamma.period));
}

bool contour_leq(const Contour& g1, const Contour& g2, const Rat& c) {
  if (g2.is_dummy) return true;
  if (g1.is_dummy) return false;
  return g1.value - c * g1.period <= g2.value - c * g2.period;
}

std::vector<Contour> feasible_set(const MarketInstance& inst, int t, const Contour& incumbent) {
  const Rat c = linear_rate(inst);
  if (t < 1 || t > inst.periods) throw Error(Errc::period_out_of_range, "period " + std::to_string(t));
  std::vector<Contour> out;
  out.push_back(incumbent);
  RankedColumn col = ranked_values(inst, t);
  for (size_t r = 0; r < col.values.size(); ++r) {
    if (col.values[r] <= 0) break;
    Contour g = Contour::item(col.values[r], t, static_cast<int>(r + 1));
    if (contour_leq(g, incumbent, c)) out.push_back(g);
  }
  return out;
}

int quantity_at(const MarketInstance& inst, const Contour& gamma, int t) {
  if (gamma.is_dummy) return 0;
  const Rat c = linear_rate(inst);
  Price p = contour_price(gamma, t, c);
  RankedColumn col = ranked_values(inst, t);
  return count_at_least(col.values, p.value());
}

PreannouncedSolution solve_preannounced_dp(const MarketInstance& inst) {
  const Rat c = linear_rate(inst);
  const int T = inst.periods;

  PreannouncedSolution sol;
  sol.contours = build_contours(inst);
  const ContourSet& set = sol.contours;
  const int n = set.size();

  std::vector<std::vector<Rat>> columns;  // ranked values per period
  columns.reserve(static_cast<size_t>(T));
  for (int t = 1; t <= T; ++t) columns.push_back(ranked_values(inst, t).values);

  // Dummy key compares above everything; real keys via set.keys.
  auto key_less = [&](int a, int b) {
    if (set.contours[static_cast<size_t>(b)].is_dummy) return !set.contours[static_cast<size_t>(a)].is_dummy;
    if (set.contours[static_cast<size_t>(a)].is_dummy) return false;
    return set.keys[static_cast<size_t>(a)] < set.keys[static_cast<size_t>(b)];
  };
  auto key_leq = [&](int a, int b) { return !key_less(b, a); };

  sol.tables.revenue_to_go.assign(static_cast<size_t>(T + 2), std::vector<Rat>(static_cast<size_t>(n)));
  sol.tables.successor.assign(static_cast<size_t>(T + 2), std::vector<int>(static_cast<size_t>(n), -1));

  auto price_at = [&](int id, int t) -> Price {
    return contour_price(set.contours[static_cast<size_t>(id)], t, c);
  };
  auto quantity = [&](int id, int t) -> int {
    Price p = price_at(id, t);
    if (p.is_skip()) return 0;
    return count_at_least(columns[static_cast<size_t>(t - 1)], p.value());
  };

  for (int t = T; t >= 1; --t) {
    // Period-t candidates sorted by key; prefix_best[k] is the best choice
    // among the first k (ties prefer the larger key, then the later period,
    // which the ascending scan realizes by replacing on equality).
    std::vector<int> cands = set.by_period[static_cast<size_t>(t)];
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
      if (set.keys[static_cast<size_t>(a)] != set.keys[static_cast<size_t>(b)])
        return set.keys[static_cast<size_t>(a)] < set.keys[static_cast<size_t>(b)];
      // Duplicate values in one period are interchangeable; fix the lowest
      // rank deterministically (the >= prefix scan keeps the last entry).
      return set.contours[static_cast<size_t>(a)].item_rank > set.contours[static_cast<size_t>(b)].item_rank;
    });
    std::vector<Rat> cand_value(cands.size());
    std::vector<int> prefix_best(cands.size());
    std::vector<Rat> prefix_value(cands.size());
    for (size_t k = 0; k < cands.size(); ++k) {
      const int id = cands[k];
      cand_value[k] = sol.tables.revenue_to_go[static_cast<size_t>(t + 1)][static_cast<size_t>(id)];
      cand_value[k] += set.contours[static_cast<size_t>(id)].value * quantity(id, t);
      if (k == 0 || cand_value[k] >= prefix_value[k - 1]) {
        prefix_best[k] = id;
        prefix_value[k] = cand_value[k];
      } else {
        prefix_best[k] = prefix_best[k - 1];
        prefix_value[k] = prefix_value[k - 1];
      }
    }
    // Largest index with key <= the incumbent key.
    auto prefix_below = [&](int inc) -> int {
      int lo = 0, hi = static_cast<int>(cands.size());
      while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (key_leq(cands[static_cast<size_t>(mid)], inc))
          lo = mid + 1;
        else
          hi = mid;
      }
      return lo - 1;
    };

    for (int inc = 0; inc < n; ++inc) {
      const Contour& g = set.contours[static_cast<size_t>(inc)];
      if (!g.is_dummy && g.period >= t) continue;  // incumbents come from earlier periods

      // Rolling the incumbent forward is always available.
      int best_id = inc;
      Rat best_rev = sol.tables.revenue_to_go[static_cast<size_t>(t + 1)][static_cast<size_t>(inc)];
      if (!g.is_dummy) {
        Price p = price_at(inc, t);
        best_rev += p.value() * quantity(inc, t);
      }

      const int k = prefix_below(inc);
      if (k >= 0) {
        const int cand = prefix_best[static_cast<size_t>(k)];
        const Rat& value = prefix_value[static_cast<size_t>(k)];
        if (value > best_rev ||
            (value == best_rev &&
             (key_less(best_id, cand) ||
              (!key_less(cand, best_id) &&
               set.contours[static_cast<size_t>(cand)].period > set.contours[static_cast<size_t>(best_id)].period)))) {
          best_id = cand;
          best_rev = value;
        }
      }

      sol.tables.revenue_to_go[static_cast<size_t>(t)][static_cast<size_t>(inc)] = best_rev;
      sol.tables.successor[static_cast<size_t>(t)][static_cast<size_t>(inc)] = best_id;
    }
  }

  sol.revenue = sol.tables.revenue_to_go[1][0];
  sol.schedule = PriceSchedule::all_skip(T);
  sol.chosen.assign(static_cast<size_t>(T), 0);
  int inc = 0;  // trace from (1, dummy)
  for (int t = 1; t <= T; ++t) {
    int sel = sol.tables.successor[static_cast<size_t>(t)][static_cast<size_t>(inc)];
    sol.chosen[static_cast<size_t>(t - 1)] = sel;
    Price p = price_at(sel, t);
    // Zero-sale periods are emitted as Skip (p_t = L).
    if (p.is_finite() && quantity(sel, t) > 0) sol.schedule.at(t) = p;
    inc = sel;
  }
  return sol;
}

namespace {

struct CandidateGrid {
  std::vector<std::vector<Price>> per_period;
  unsigned long total = 1;
};

CandidateGrid bruteforce_candidates(const MarketInstance& inst, const Rat& c) {
  CandidateGrid grid;
  grid.per_period.resize(static_cast<size_t>(inst.periods));
  for (int t = 1; t <= inst.periods; ++t) {
    std::vector<Rat> cands;
    for (int s = 1; s <= t; ++s) {
      RankedColumn col = ranked_values(inst, s);
      for (const Rat& v : col.values) {
        if (v > 0) cands.push_back(v + c * (t - s));
      }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    auto& slot = grid.per_period[static_cast<size_t>(t - 1)];
    for (Rat& v : cands) slot.push_back(Price::finite(std::move(v)));
    slot.push_back(Price::skip());
    grid.total *= static_cast<unsigned long>(slot.size());
  }
  return grid;
}

PriceSchedule schedule_from_index(const CandidateGrid& grid, unsigned long index) {
  PriceSchedule s;
  s.prices.reserve(grid.per_period.size());
  for (const auto& slot : grid.per_period) {
    s.prices.push_back(slot[static_cast<size_t>(index % slot.size())]);
    index /= slot.size();
  }
  return s;
}

}  // namespace

BruteForceResult solve_preannounced_bruteforce(const MarketInstance& inst, ExecMode mode) {
  const Rat c = linear_rate(inst);
  const int d = demand_size(inst);
  if (inst.periods > 5 || d > 12)
    throw Error(Errc::instance_too_large,
                "brute force guarded to T <= 5 and D <= 12 (got T=" + std::to_string(inst.periods) +
                    ", D=" + std::to_string(d) + ")");

  CandidateGrid grid = bruteforce_candidates(inst, c);
  const unsigned long total = grid.total;

  // Winner: highest revenue; ties resolve to the smallest enumeration index
  // so the serial and parallel paths agree exactly.
  Rat best_rev = -1;
  unsigned long best_index = 0;

  bool parallel = mode == ExecMode::parallel || (mode == ExecMode::auto_mode && effective_threads() > 1);
  if (parallel) {
#pragma omp parallel num_threads(effective_threads())
    {
      Rat local_rev = -1;
      unsigned long local_index = 0;
#pragma omp for schedule(static)
      for (long i = 0; i < static_cast<long>(total); ++i) {
        PriceSchedule s = schedule_from_index(grid, static_cast<unsigned long>(i));
        Rat rev = best_response_linear(inst, s).revenue;
        if (local_rev < 0 || rev > local_rev ||
            (rev == local_rev && static_cast<unsigned long>(i) < local_index)) {
          local_rev = rev;
          local_index = static_cast<unsigned long>(i);
        }
      }
#pragma omp critical
      {
        if (best_rev < 0 || local_rev > best_rev || (local_rev == best_rev && local_index < best_index)) {
          best_rev = local_rev;
          best_index = local_index;
        }
      }
    }
  } else {
    for (unsigned long i = 0; i < total; ++i) {
      PriceSchedule s = schedule_from_index(grid, i);
      Rat rev = best_response_linear(inst, s).revenue;
      if (best_rev < 0 || rev > best_rev) {
        best_rev = rev;
        best_index = i;
      }
    }
  }

  BruteForceResult out;
  out.schedule = schedule_from_index(grid, best_index);
  out.revenue = best_rev;
  out.schedules_tried = total;
  return out;
}

FixedPriceResult best_fixed_price(const MarketInstance& inst) {
  // Works for any storage model: under a constant price, buying early only
  // adds storage cost, so no storage occurs and revenue is p * #{v >= p}.
  std::vector<Rat> values;
  for (const auto& row : inst.demand.rows) {
    for (const Rat& v : row) {
      if (v > 0) values.push_back(v);
    }
  }
  FixedPriceResult out{Rat(0), Rat(0)};
  if (values.empty()) return out;
  std::sort(values.begin(), values.end());
  size_t first_of_run = 0;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0 && values[i] != values[i - 1]) first_of_run = i;
    if (i + 1 < values.size() && values[i] == values[i + 1]) continue;
    const Rat& p = values[i];
    Rat revenue = p * static_cast<long>(values.size() - first_of_run);
    // >= : ties break toward the highest price.
    if (revenue >= out.revenue) {
      out.revenue = revenue;
      out.price = p;
    }
  }
  return out;
}

int effective_threads() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("PRICING_LAB_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

}  // namespace pricing
