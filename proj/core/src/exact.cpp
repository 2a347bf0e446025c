#include "hmr/exact.hpp"

#include <cmath>
#include <cstdio>

#include "hmr/error.hpp"

namespace hmr {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw ArgumentError("factorial of a negative number");
  BigInt r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt pow_int(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

std::string to_fraction_string(const BigRational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

namespace {

// log of a positive integer: keep the top 60 bits, add the shift back.
double log_of_int(const BigInt& x) {
  const auto bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 60) return std::log(x.convert_to<double>());
  const auto shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

}  // namespace

double log_of(const BigRational& q) {
  if (q <= 0) throw ArgumentError("log of a non-positive rational");
  return log_of_int(boost::multiprecision::numerator(q)) -
         log_of_int(boost::multiprecision::denominator(q));
}

std::string format_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

RationalProb::RationalProb(BigRational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) {
    throw ArgumentError("probability outside [0,1]: " + to_fraction_string(value_));
  }
}

RationalProb::RationalProb(const BigInt& num, const BigInt& den)
    : RationalProb([&] {
        if (den == 0) throw ArgumentError("zero denominator");
        return BigRational(num, den);
      }()) {}

double RationalProb::to_double() const {
  if (value_ == 0) return 0.0;
  const auto& num = boost::multiprecision::numerator(value_);
  const auto& den = boost::multiprecision::denominator(value_);
  if (boost::multiprecision::msb(den) < 1000) {
    return num.convert_to<double>() / den.convert_to<double>();
  }
  return std::exp(log_of(value_));
}

}  // namespace hmr
