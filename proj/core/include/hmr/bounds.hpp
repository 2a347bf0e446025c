#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hmr/exact.hpp"

namespace hmr {

// ---------------------------------------------------------------------------
// Random-graph exponent

/// Leading natural-log exponent of the G(M, p) upper bound on P(s, t):
///   t (4 s ln(1-p) - t ln p) ln p / (8 ln(1-p)).
/// s and t are real so normalised forms (t = 1) can be evaluated.
double random_exponent(double p, double s, double t);

/// Left-hand side of the optimality condition for random_exponent in p:
///   -4s/(1-p) - t/p + (4s ln(1-p) - t ln p)(1/(p ln p) + 1/((1-p) ln(1-p))).
/// Equals A * f'(p) / f(p) with A = 4s ln(1-p) - t ln p.
double stationarity_residual(double p, double s, double t);

struct OptimizeResult {
  double p_star = 0.0;
  double value = 0.0;            // random_exponent(p_star, s, t)
  double value_per_t2 = 0.0;     // value / t^2
  double residual = 0.0;         // stationarity_residual(p_star, s, t)
};

/// Minimises random_exponent over p in (0, 1): 1000-point grid bracket,
/// golden-section to `tol`, then bisection on the stationarity residual.
OptimizeResult optimize_p(double s, double t, double tol);

// ---------------------------------------------------------------------------
// Neighbourhood recursion

/// N(s, t) = 1 if s = 1 or t = 2; otherwise the common value at the crossing
/// of x^s N(s, t-1) (increasing) and (1-x)^{s-1} N(s-1, t) (decreasing).
/// Memoised; one instance is not safe for concurrent use.
class NeighborhoodRecursion {
 public:
  explicit NeighborhoodRecursion(double tol = 1e-12);

  double operator()(int s, int t);

  struct Crossing {
    double x = 0.0;
    double rising = 0.0;   // x^s N(s, t-1)
    double falling = 0.0;  // (1-x)^{s-1} N(s-1, t)
  };
  /// Crossing point used for N(s, t), s > 1 and t > 2.
  Crossing crossing(int s, int t);

  double tol() const { return tol_; }

 private:
  double tol_;
  std::map<std::pair<int, int>, double> memo_;
};

double n_recursion(int s, int t, double tol = 1e-12);

/// Closed-form lower bound on N(s, t):
///   ((a+b)^{a+b} / (a^a b^b))^{-s},  a = (s-1)/2,  b = t-2,  0^0 = 1.
double n_binomial_lower(int s, int t);
/// Natural log of n_binomial_lower.
double n_binomial_lower_log(int s, int t);
/// Exact value when (s-1)/2 is an integer (s odd), otherwise nullopt.
std::optional<BigRational> n_binomial_lower_exact(int s, int t);

// ---------------------------------------------------------------------------
// Two-colour Ramsey numbers

struct RamseyEntry {
  std::int64_t value = 0;
  std::string source;
};

/// R(s, t) values with provenance. Always answers the axioms R(1,t) = 1 and
/// R(2,t) = t; ships R(3,3) = 6 (checked exhaustively by verify_r33); other
/// values come from a TSV file "s<TAB>t<TAB>R<TAB>source".
class KnownRamseyTable {
 public:
  KnownRamseyTable();

  static KnownRamseyTable load_tsv(const std::filesystem::path& path);
  void merge_tsv(const std::filesystem::path& path);
  void merge_tsv_text(const std::string& text, const std::string& origin = "<text>");

  void set(int s, int t, std::int64_t value, std::string source);
  std::optional<RamseyEntry> lookup(int s, int t) const;
  /// Like lookup but throws LookupError naming the pair.
  RamseyEntry at(int s, int t) const;

 private:
  std::map<std::pair<int, int>, RamseyEntry> entries_;
};

/// 1 / C(R(s,t), s).
RationalProb ramsey_lower_half(int s, int t, const KnownRamseyTable& table);

/// C(R(a,t)-1, a-1) ((a-1)/(R(a,t)-1))^s, exact; requires 2 <= a <= s.
BigRational ramsey_upper_half(int s, int t, int a, const KnownRamseyTable& table);

// ---------------------------------------------------------------------------
// Symplectic-graph bound and multicolour sizing

/// log2 exponent of the symplectic-graph bound (constants dropped):
/// -s(s-1)/2 when s <= t/2 - 1, otherwise -(4s-t)(t-2)/8. t must be even.
double cf_upper(int s, int t);

/// log2 of the guaranteed clique-free K_N: -(ell-2)/t log2(P) + (t-1)/2.
double multicolor_lower(int t, int ell, double p_value);
double multicolor_lower(int t, int ell, const RationalProb& p_value);
/// Same, given ln P directly (for probabilities below double range).
double multicolor_lower_from_log(int t, int ell, double ln_p_value);

// ---------------------------------------------------------------------------
// Reports

enum class Units {
  Probability,      // "probability"
  LnExponentPerT2,  // "natural-log exponent per t^2"
  Log2Exponent,     // "log2 exponent"
  Log2VertexCount,  // "log2 of vertex count"
};

std::string units_name(Units u);

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::variant<double, BigRational> value;
  Units units = Units::Probability;
  std::string provenance;

  double as_double() const;
  /// "num/den" for exact values, empty otherwise.
  std::string exact_string() const;
};

struct BoundsRequest {
  int s = 0;
  int t = 0;
  std::optional<int> ell;
  double tol = 1e-7;
};

/// Every bound that applies to (s, t[, ell]), in a fixed order.
std::vector<BoundReport> collect_bounds(const BoundsRequest& request,
                                        const KnownRamseyTable& table);

}  // namespace hmr
