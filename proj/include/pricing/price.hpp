#pragma once

#include <compare>
#include <string>
#include <vector>

#include "pricing/rational.hpp"

namespace pricing {

/// A per-period price: either a finite rational or the Skip sentinel. Skip
/// stands for the symbolic "huge number" L at which nothing is ever bought;
/// keeping it symbolic keeps revenue arithmetic free of magic constants.
/// Skip compares greater than every finite price.
class Price {
 public:
  Price() : skip_(true) {}
  static Price skip() { return Price(); }
  static Price finite(Rat v) {
    Price p;
    p.skip_ = false;
    p.value_ = std::move(v);
    return p;
  }

  bool is_skip() const { return skip_; }
  bool is_finite() const { return !skip_; }
  const Rat& value() const { return value_; }

  friend bool operator==(const Price& a, const Price& b) {
    if (a.skip_ != b.skip_) return false;
    return a.skip_ || a.value_ == b.value_;
  }
  friend bool operator<(const Price& a, const Price& b) {
    if (a.skip_) return false;
    if (b.skip_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Price& a, const Price& b) { return a == b || a < b; }

  std::string str() const { return skip_ ? "skip" : rat_str(value_); }

 private:
  bool skip_;
  Rat value_;
};

/// The retailer's committed prices, one per period (1-based access).
struct PriceSchedule {
  std::vector<Price> prices;

  int periods() const { return static_cast<int>(prices.size()); }
  const Price& at(int t) const { return prices[static_cast<size_t>(t - 1)]; }
  Price& at(int t) { return prices[static_cast<size_t>(t - 1)]; }

  static PriceSchedule all_skip(int periods) {
    PriceSchedule s;
    s.prices.assign(static_cast<size_t>(periods), Price::skip());
    return s;
  }

  bool operator==(const PriceSchedule&) const = default;
};

}  // namespace pricing
