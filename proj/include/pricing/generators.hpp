#pragma once

#include <cstdint>

#include "pricing/instance.hpp"

namespace pricing {

struct RandomSpec {
  std::uint64_t seed = 1;
  int periods = 3;
  int buyers = 2;
  int value_max = 8;
  std::vector<Rat> c_choices = {Rat(0), Rat(1), Rat(2)};
};

/// The two-period, two-buyer worked example: values [[17,15],[10,4]], c = 1.
MarketInstance gen_table1();

/// Single-buyer, two periods, c = 0. Period-1 marginals are all zero;
/// period-2 marginals are (1 + eps, 1/2, ..., 1/N).
MarketInstance gen_harmonic(int n, const Rat& eps);

/// Multi-buyer block construction: T = 2^n - 1 periods, one consumer per
/// period, block k spans 2^(n-k) consecutive periods with value 2^(k-1),
/// c = 0.
MarketInstance gen_loggap(int n);

/// Concave-storage counterexample: T = 3, cumulative storage table
/// (0, 3/2, 3/2 + eps), n1 buyers valued (1,0,0), n2 buyers valued (0,0,4)
/// and one buyer valued (0, 11/4, 3). Requires 0 < eps < 1/4.
MarketInstance gen_concave_cx(int n1, int n2, const Rat& eps);

/// Deterministic multi-buyer instance with uniform integer values in
/// [0, value_max] and c drawn from c_choices. Identical seeds produce
/// identical instances.
MarketInstance gen_random(const RandomSpec& spec);

}  // namespace pricing
