#pragma once

// Growth-rate analysis of a computed series.  Everything is exact: series
// terms are arbitrary-precision integers, roots are extracted by integer
// Newton iteration with floor semantics, and decimals are fixed-point values
// that render without any binary-float round trip.  A reported root d of
// f(n) at precision p is certified by the integer comparisons
// d^n <= f(n) * 10^(n*p) < (d+1)^n.
//
// For a submultiplicative series, f(n)^(1/n) is nonincreasing, so each term
// is a rigorous upper bound on the growth rate; the lower-bound constant
// (3+sqrt(5))/2 is computed to the same precision for comparison.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "series.hpp"

namespace thompsonf {

inline constexpr unsigned kPrecisionCap = 200;  // decimal digits

struct Decimal {
  Int scaled;       // value * 10^digits, truncated toward zero
  unsigned digits;  // fractional digits carried

  std::string str() const;
};

namespace detail {

inline Int pow10(unsigned k) {
  Int ten = 10;
  return boost::multiprecision::pow(ten, k);
}

}  // namespace detail

inline std::string Decimal::str() const {
  Int mag = scaled;
  bool negative = mag < 0;
  if (negative) mag = -mag;
  Int base = detail::pow10(digits);
  Int whole = mag / base;
  Int frac = mag % base;
  std::string out;
  if (negative) out += '-';
  out += whole.str();
  if (digits > 0) {
    std::string fs = frac.str();
    out += '.';
    out += std::string(digits - fs.size(), '0');
    out += fs;
  }
  return out;
}

// round-half-up rendering at a coarser precision, for matching printed tables
inline std::string rounded(const Decimal& d, unsigned digits) {
  if (digits > d.digits)
    throw std::invalid_argument("rounded: cannot add precision that was never computed");
  if (d.scaled < 0) throw std::invalid_argument("rounded: negative value");
  Int div = detail::pow10(d.digits - digits);
  Int q = d.scaled / div;
  Int r = d.scaled % div;
  if (2 * r >= div) ++q;
  return Decimal{std::move(q), digits}.str();
}

inline int compare(const Decimal& a, const Decimal& b) {
  unsigned p = std::max(a.digits, b.digits);
  Int as = a.scaled * detail::pow10(p - a.digits);
  Int bs = b.scaled * detail::pow10(p - b.digits);
  if (as < bs) return -1;
  if (as > bs) return 1;
  return 0;
}

inline Decimal abs_difference(const Decimal& a, const Decimal& b) {
  unsigned p = std::max(a.digits, b.digits);
  Int as = a.scaled * detail::pow10(p - a.digits);
  Int bs = b.scaled * detail::pow10(p - b.digits);
  Int d = as - bs;
  if (d < 0) d = -d;
  return {std::move(d), p};
}

// floor(x^(1/n)) by Newton iteration, with the result pinned by exact
// integer comparisons r^n <= x < (r+1)^n
inline Int integer_nth_root(const Int& x, unsigned n) {
  if (n == 0) throw std::invalid_argument("integer_nth_root: zeroth root");
  if (x < 0) throw std::invalid_argument("integer_nth_root: negative radicand");
  if (x == 0 || x == 1 || n == 1) return x;
  unsigned bits = boost::multiprecision::msb(x) + 1;
  Int r = Int(1) << ((bits + n - 1) / n);
  while (true) {
    Int rp = boost::multiprecision::pow(r, n - 1);
    Int next = ((n - 1) * r + x / rp) / n;
    if (next >= r) break;
    r = next;
  }
  while (boost::multiprecision::pow(r, n) > x) --r;
  while (boost::multiprecision::pow(r + 1, n) <= x) ++r;
  return r;
}

inline Decimal nth_root_decimal(const Int& value, unsigned n, unsigned precision) {
  if (precision == 0 || precision > kPrecisionCap)
    throw std::invalid_argument("nth_root_decimal: precision out of range");
  Int scaled_radicand = value * detail::pow10(n * precision);
  return {integer_nth_root(scaled_radicand, n), precision};
}

// (3 + sqrt(5)) / 2, truncated to the requested precision
inline Decimal lower_bound_constant(unsigned precision) {
  if (precision == 0 || precision > kPrecisionCap)
    throw std::invalid_argument("lower_bound_constant: precision out of range");
  Int root5 = integer_nth_root(5 * detail::pow10(2 * precision), 2);
  Int scaled = (3 * detail::pow10(precision) + root5) / 2;
  return {std::move(scaled), precision};
}

struct SubmultiplicativityViolation {
  std::size_t m;
  std::size_t n;
};

struct SubmultiplicativityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<SubmultiplicativityViolation> check_submultiplicative(
    const GrowthSeries& f) {
  std::vector<SubmultiplicativityViolation> out;
  if (f.values.empty()) return out;
  std::size_t N = f.values.size() - 1;
  for (std::size_t m = 1; 2 * m <= N; ++m)
    for (std::size_t n = m; m + n <= N; ++n)
      if (f.values[m + n] > f.values[m] * f.values[n]) out.push_back({m, n});
  return out;
}

namespace detail {

inline void require_submultiplicative(const GrowthSeries& f, const char* who) {
  auto violations = check_submultiplicative(f);
  if (!violations.empty())
    throw SubmultiplicativityError(std::string(who) + ": series is not submultiplicative, " +
                                   "first violation at (" +
                                   std::to_string(violations.front().m) + ", " +
                                   std::to_string(violations.front().n) + ")");
}

inline Decimal doubling_value(const GrowthSeries& f, std::size_t m, unsigned precision) {
  Int q = f.values[2 * m] * pow10(m * precision) / f.values[m];
  return {integer_nth_root(q, static_cast<unsigned>(m)), precision};
}

}  // namespace detail

struct BoundsReport {
  std::size_t n;
  Decimal upper;                    // f(n)^(1/n): rigorous growth-rate upper bound
  Decimal lower;                    // (3+sqrt(5))/2 at the same precision
  Decimal ratio;                    // f(n)/f(n-1)
  std::optional<Decimal> doubling;  // (f(n)/f(n/2))^(2/n) when n is even
};

inline std::vector<BoundsReport> fekete_bounds(const GrowthSeries& f, unsigned precision) {
  detail::require_submultiplicative(f, "fekete_bounds");
  std::vector<BoundsReport> out;
  if (f.values.size() < 2) return out;
  Decimal lower = lower_bound_constant(precision);
  std::size_t N = f.values.size() - 1;
  for (std::size_t n = 1; n <= N; ++n) {
    BoundsReport row;
    row.n = n;
    row.upper = nth_root_decimal(f.values[n], static_cast<unsigned>(n), precision);
    row.lower = lower;
    Int scaled_ratio = f.values[n] * detail::pow10(precision) / f.values[n - 1];
    row.ratio = {std::move(scaled_ratio), precision};
    if (n % 2 == 0) row.doubling = detail::doubling_value(f, n / 2, precision);
    out.push_back(std::move(row));
  }
  return out;
}

struct RatioEstimate {
  std::size_t n;
  Decimal ratio;  // f(n)/f(n-1), truncated
  Decimal gap;    // |ratio - (3+sqrt(5))/2|
};

inline std::vector<RatioEstimate> successive_ratios(const GrowthSeries& f,
                                                    unsigned precision) {
  if (f.values.size() < 2)
    throw std::invalid_argument("successive_ratios: need at least two terms");
  Decimal limit = lower_bound_constant(precision);
  std::vector<RatioEstimate> out;
  for (std::size_t n = 1; n < f.values.size(); ++n) {
    Decimal ratio{f.values[n] * detail::pow10(precision) / f.values[n - 1], precision};
    Decimal gap = abs_difference(ratio, limit);
    out.push_back({n, std::move(ratio), std::move(gap)});
  }
  return out;
}

struct DoublingEstimate {
  std::size_t m;
  Decimal value;  // (f(2m)/f(m))^(1/m)
};

inline std::vector<DoublingEstimate> doubling_estimates(const GrowthSeries& f,
                                                        unsigned precision) {
  std::vector<DoublingEstimate> out;
  if (f.values.size() < 3) return out;
  std::size_t N = f.values.size() - 1;
  for (std::size_t m = 1; 2 * m <= N; ++m)
    out.push_back({m, detail::doubling_value(f, m, precision)});
  return out;
}

struct AmplitudeFit {
  Decimal amplitude;           // f(N) / rate^N at the largest N available
  std::vector<Decimal> trend;  // the same quantity over the last ten indices
};

inline AmplitudeFit amplitude_fit(const GrowthSeries& f, const Decimal& rate) {
  if (f.values.size() < 50)
    throw std::invalid_argument("amplitude_fit: need at least 50 terms");
  if (rate.scaled <= detail::pow10(rate.digits))
    throw std::invalid_argument("amplitude_fit: rate must exceed 1");
  unsigned p = rate.digits;
  std::size_t N = f.values.size() - 1;
  auto at = [&](std::size_t k) -> Decimal {
    Int scaled = f.values[k] * detail::pow10(p * (static_cast<unsigned>(k) + 1)) /
                 boost::multiprecision::pow(rate.scaled, static_cast<unsigned>(k));
    return {std::move(scaled), p};
  };
  AmplitudeFit out;
  out.amplitude = at(N);
  std::size_t first = N >= 9 ? N - 9 : 0;
  for (std::size_t k = first; k <= N; ++k) out.trend.push_back(at(k));
  return out;
}

// coefficients of (1 - 3z + z^2) * F(z): the residue left after removing the
// dominant pole pair, useful as a ratio-trend diagnostic for the subleading
// growth
inline std::vector<Int> correction_coefficients(const GrowthSeries& f) {
  std::vector<Int> out;
  out.reserve(f.values.size());
  for (std::size_t n = 0; n < f.values.size(); ++n) {
    Int c = f.values[n];
    if (n >= 1) c -= 3 * f.values[n - 1];
    if (n >= 2) c += f.values[n - 2];
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace thompsonf
