#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pricing/rational.hpp"

namespace pricing {

/// One experiment row comparing the three mechanisms on a family instance.
struct SweepRow {
  std::string family;
  long param = 0;  // loggap n / harmonic N
  int buyers = 0;
  int periods = 0;
  Rat pa;       // optimal preannounced revenue (DP)
  Rat cp;       // contingent revenue (simulated pacman / grid-SPNE)
  Rat fixed;    // best fixed price revenue
  Rat ratio;    // cp / pa (0 when pa = 0)
  Rat bound;    // H_l * Pi^F
  long ms = 0;  // wall time for the row
};

struct SweepConfig {
  std::string family;            // "loggap" | "harmonic"
  std::vector<long> params;
  std::optional<Rat> eps;        // harmonic only; default 0
  std::optional<Rat> grid_delta; // harmonic only; default 1/N^2
};

/// Solves every parameter in the config, in parallel across instances, and
/// returns rows in parameter order.
std::vector<SweepRow> ratio_sweep(const SweepConfig& config);

/// Fixed header: family,param,N,T,pa,cp,fixed,ratio,bound,ms plus the two
/// decimal convenience columns ratio_dec,bound_dec.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Parses "2..6" ranges and "4,8,16" lists.
std::vector<long> parse_param_range(const std::string& text);

}  // namespace pricing
