#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hmr {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt factorial(std::int64_t n);
BigInt pow_int(const BigInt& base, std::uint64_t exponent);

/// "num/den" in lowest terms; integers render as "num/1".
std::string to_fraction_string(const BigRational& q);

/// Natural log of a positive rational, accurate even when the value
/// underflows a double.
double log_of(const BigRational& q);

/// Decimal rendering with 10 significant digits.
std::string format_decimal(double x);

/// An exact probability: a rational in [0, 1], always in lowest terms.
class RationalProb {
 public:
  RationalProb() : value_(0) {}
  explicit RationalProb(BigRational value);
  RationalProb(const BigInt& num, const BigInt& den);

  const BigRational& value() const { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  double to_double() const;
  double log() const { return log_of(value_); }
  std::string str() const { return to_fraction_string(value_); }

  friend bool operator==(const RationalProb& a, const RationalProb& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const RationalProb& a, const RationalProb& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const RationalProb& a, const RationalProb& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const RationalProb& a, const RationalProb& b) { return b < a; }
  friend bool operator>=(const RationalProb& a, const RationalProb& b) { return b <= a; }

 private:
  BigRational value_;
};

}  // namespace hmr
