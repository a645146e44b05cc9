#include "pricing/rational.hpp"

#include <cctype>

#include "pricing/errors.hpp"

namespace pricing {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat rat_parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error(Errc::parse_error, "empty rational literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw Error(Errc::parse_error, std::string("bad rational literal '") + std::string(text) + "'");

  auto fail = [&]() -> Rat {
    throw Error(Errc::parse_error, std::string("bad rational literal '") + std::string(text) + "'");
  };

  Rat out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error(Errc::parse_error, "zero denominator");
    out = Rat(n, d);
    out.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if (!whole.empty() && !all_digits(whole)) return fail();
    if (!frac.empty() && !all_digits(frac)) return fail();
    mpz_class n(whole.empty() ? std::string("0") : std::string(whole), 10);
    mpz_class scale = 1;
    for (char c : frac) {
      n = n * 10 + (c - '0');
      scale *= 10;
    }
    out = Rat(n, scale);
    out.canonicalize();
  } else {
    if (!all_digits(s)) return fail();
    out = Rat(mpz_class(std::string(s), 10));
  }
  if (negative) out = -out;
  return out;
}

std::string rat_str(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double rat_approx(const Rat& value) { return value.get_d(); }

Rat harmonic_number(int n) {
  Rat h = 0;
  for (int i = 1; i <= n; ++i) h += Rat(1, i);
  return h;
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::negative_value: return "NegativeValue";
    case Errc::non_monotone_marginals: return "NonMonotoneMarginals";
    case Errc::non_concave_storage: return "NonConcaveStorage";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::period_out_of_range: return "PeriodOutOfRange";
    case Errc::period_before_contour: return "PeriodBeforeContour";
    case Errc::concave_not_supported: return "ConcaveNotSupported";
    case Errc::instance_too_large: return "InstanceTooLarge";
    case Errc::state_space_too_large: return "StateSpaceTooLarge";
    case Errc::multi_buyer_not_supported: return "MultiBuyerNotSupported";
    case Errc::infeasible_action: return "InfeasibleAction";
    case Errc::inventory_bound_exceeded: return "InventoryBoundExceeded";
    case Errc::parameter_out_of_range: return "ParameterOutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace pricing
