#pragma once

#include <vector>

#include "pricing/instance.hpp"
#include "pricing/price.hpp"

namespace pricing {

/// A contour ties a demand item (rank j, period s, value v_{j,s}) to the
/// candidate prices it induces at later periods: p_t = v_{j,s} + (t-s)*c.
/// The dummy contour stands for the symbolic price L (Skip) and is the
/// maximal element of the contour ordering.
struct Contour {
  Rat value;
  int period = 0;     // s; the dummy sits at period 0
  int item_rank = 0;  // 1-based rank within the period's sorted column
  bool is_dummy = false;

  static Contour dummy() {
    Contour g;
    g.is_dummy = true;
    return g;
  }
  static Contour item(Rat v, int period, int rank) { return Contour{std::move(v), period, rank, false}; }
};

/// All contours of an instance: id 0 is the dummy, ids 1.. are the
/// positive-value demand items. keys[id] = v - c*s is the storage-adjusted
/// total-order key (the dummy's key is treated as +infinity).
struct ContourSet {
  std::vector<Contour> contours;
  std::vector<Rat> keys;
  std::vector<std::vector<int>> by_period;  // [t] -> contour ids of period t

  int size() const { return static_cast<int>(contours.size()); }
};

ContourSet build_contours(const MarketInstance& inst);

/// p_t(gamma) = v + (t - s)*c; Skip for the dummy. Throws
/// PeriodBeforeContour when t < gamma.period.
Price contour_price(const Contour& gamma, int t, const Rat& c);

/// Total order: key(g1) <= key(g2) with key(g) = value - c*period and the
/// dummy maximal.
bool contour_leq(const Contour& g1, const Contour& g2, const Rat& c);

/// F_t(incumbent) = { g in C_t union {incumbent} : g <= incumbent }.
std::vector<Contour> feasible_set(const MarketInstance& inst, int t, const Contour& incumbent);

/// Number of period-t items with value at least p_t(gamma); 0 for the dummy.
int quantity_at(const MarketInstance& inst, const Contour& gamma, int t);

/// Backward-induction tables: entry [t][id] is populated for contours from
/// periods before t (and the dummy). successor[t][id] is the contour chosen
/// at period t when id is the incumbent.
struct DpTables {
  std::vector<std::vector<Rat>> revenue_to_go;
  std::vector<std::vector<int>> successor;
};

struct PreannouncedSolution {
  PriceSchedule schedule;
  Rat revenue;
  ContourSet contours;
  DpTables tables;
  std::vector<int> chosen;  // contour id selected at each period (trace)
};

/// Optimal preannounced schedule for linear storage costs via the contour
/// dynamic program; O(T * D^2). Zero-sale periods are emitted as Skip.
PreannouncedSolution solve_preannounced_dp(const MarketInstance& inst);

enum class ExecMode { serial, parallel, auto_mode };

struct BruteForceResult {
  PriceSchedule schedule;
  Rat revenue;
  unsigned long schedules_tried = 0;
};

/// Independent oracle: enumerates every schedule built from the candidate
/// prices {v_{j,s} + (t-s)*c : s <= t} plus Skip and evaluates each with
/// best_response_linear. Guarded to T <= 5 and D <= 12. The serial and
/// OpenMP paths return identical results.
BruteForceResult solve_preannounced_bruteforce(const MarketInstance& inst,
                                               ExecMode mode = ExecMode::auto_mode);

struct FixedPriceResult {
  Rat price;
  Rat revenue;
};

/// Best single fixed price over the pooled distinct value set; ties resolve
/// to the highest price. With a constant price and c >= 0 no storage occurs,
/// so revenue is p * #{(i,t) : v_{i,t} >= p}.
FixedPriceResult best_fixed_price(const MarketInstance& inst);

/// Number of threads the parallel kernels use: OpenMP's default, capped by
/// the PRICING_LAB_THREADS environment variable when set.
int effective_threads();

}  // namespace pricing
