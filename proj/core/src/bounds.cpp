#include "hmr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hmr/error.hpp"

namespace hmr {

namespace {

void check_open_unit(double p) {
  if (!(p > 0.0 && p < 1.0)) throw ArgumentError("p must lie strictly between 0 and 1");
}

}  // namespace

double random_exponent(double p, double s, double t) {
  check_open_unit(p);
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  return t * (4.0 * s * lq - t * lp) * lp / (8.0 * lq);
}

double stationarity_residual(double p, double s, double t) {
  check_open_unit(p);
  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  return -4.0 * s / (1.0 - p) - t / p +
         (4.0 * s * lq - t * lp) * (1.0 / (p * lp) + 1.0 / ((1.0 - p) * lq));
}

OptimizeResult optimize_p(double s, double t, double tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
  auto f = [&](double p) { return random_exponent(p, s, t); };

  constexpr int kGrid = 1000;
  int best = 1;
  double best_value = f(1.0 / kGrid);
  for (int i = 2; i < kGrid; ++i) {
    const double v = f(static_cast<double>(i) / kGrid);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  constexpr double kEdge = 1e-12;
  double lo = std::max(kEdge, static_cast<double>(best - 1) / kGrid);
  double hi = std::min(1.0 - kEdge, static_cast<double>(best + 1) / kGrid);

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  double p_star = 0.5 * (lo + hi);

  // Polish on the residual when it changes sign across the final bracket.
  double a = std::max(kEdge, lo - tol);
  double b = std::min(1.0 - kEdge, hi + tol);
  double ra = stationarity_residual(a, s, t);
  const double rb = stationarity_residual(b, s, t);
  if (std::signbit(ra) != std::signbit(rb)) {
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      const double rm = stationarity_residual(mid, s, t);
      if (rm == 0.0) {
        a = b = mid;
        break;
      }
      if (std::signbit(rm) == std::signbit(ra)) {
        a = mid;
        ra = rm;
      } else {
        b = mid;
      }
    }
    const double polished = 0.5 * (a + b);
    if (f(polished) <= f(p_star) + 1e-15 * std::abs(f(p_star))) p_star = polished;
  }

  OptimizeResult out;
  out.p_star = p_star;
  out.value = f(p_star);
  out.value_per_t2 = out.value / (t * t);
  out.residual = stationarity_residual(p_star, s, t);
  return out;
}

// ---------------------------------------------------------------------------

NeighborhoodRecursion::NeighborhoodRecursion(double tol) : tol_(tol) {
  if (!(tol > 0.0)) throw ArgumentError("tolerance must be positive");
}

NeighborhoodRecursion::Crossing NeighborhoodRecursion::crossing(int s, int t) {
  if (s < 2 || t < 3) throw ArgumentError("crossing is defined for s > 1 and t > 2");
  const double log_rise = std::log((*this)(s, t - 1));
  const double log_fall = std::log((*this)(s - 1, t));
  // log of x^s A minus log of (1-x)^{s-1} B; strictly increasing in x.
  auto gap = [&](double x) {
    return s * std::log(x) + log_rise - (s - 1) * std::log1p(-x) - log_fall;
  };
  double lo = 0.0;
  double hi = 1.0;
  double mid = 0.5;
  for (int iter = 0; iter < 2000; ++iter) {
    mid = 0.5 * (lo + hi);
    const double g = gap(mid);
    if (hi - lo <= tol_ && std::abs(g) <= tol_) break;
    if (mid <= lo || mid >= hi) break;
    if (g < 0.0) {
      lo = mid;
    } else if (g > 0.0) {
      hi = mid;
    } else {
      break;
    }
  }
  Crossing c;
  c.x = mid;
  c.rising = std::exp(s * std::log(mid) + log_rise);
  c.falling = std::exp((s - 1) * std::log1p(-mid) + log_fall);
  return c;
}

double NeighborhoodRecursion::operator()(int s, int t) {
  if (s < 1 || t < 2) throw ArgumentError("N(s,t) needs s >= 1 and t >= 2");
  if (s == 1 || t == 2) return 1.0;
  const auto key = std::make_pair(s, t);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const double value = crossing(s, t).rising;
  memo_.emplace(key, value);
  return value;
}

double n_recursion(int s, int t, double tol) { return NeighborhoodRecursion(tol)(s, t); }

namespace {
double xlogx(double x) { return x == 0.0 ? 0.0 : x * std::log(x); }
}  // namespace

double n_binomial_lower_log(int s, int t) {
  if (s < 1 || t < 2) throw ArgumentError("binomial bound needs s >= 1 and t >= 2");
  const double a = (s - 1) / 2.0;
  const double b = t - 2.0;
  return -s * (xlogx(a + b) - xlogx(a) - xlogx(b));
}

double n_binomial_lower(int s, int t) { return std::exp(n_binomial_lower_log(s, t)); }

std::optional<BigRational> n_binomial_lower_exact(int s, int t) {
  if (s < 1 || t < 2) throw ArgumentError("binomial bound needs s >= 1 and t >= 2");
  if (s % 2 == 0) return std::nullopt;
  const std::int64_t a = (s - 1) / 2;
  const std::int64_t b = t - 2;
  const BigInt top = pow_int(BigInt(a + b), static_cast<std::uint64_t>(a + b));
  const BigInt bottom = pow_int(BigInt(a), static_cast<std::uint64_t>(a)) *
                        pow_int(BigInt(b), static_cast<std::uint64_t>(b));
  return BigRational(pow_int(bottom, static_cast<std::uint64_t>(s)),
                     pow_int(top, static_cast<std::uint64_t>(s)));
}

// ---------------------------------------------------------------------------

KnownRamseyTable::KnownRamseyTable() {
  set(3, 3, 6, "verified: exhaustive scan of all 2^15 two-colourings of K6 plus the C5 colouring of K5");
}

void KnownRamseyTable::set(int s, int t, std::int64_t value, std::string source) {
  if (s < 1 || t < 1 || value < 1) throw ArgumentError("Ramsey entries need positive s, t, R");
  const auto key = std::minmax(s, t);
  if (key.first <= 2) {
    const std::int64_t axiom = key.first == 1 ? 1 : key.second;
    if (value != axiom) {
      throw ArgumentError("R(" + std::to_string(s) + "," + std::to_string(t) + ")=" +
                          std::to_string(value) + " contradicts the axiom value " +
                          std::to_string(axiom));
    }
    return;
  }
  entries_[{key.first, key.second}] = RamseyEntry{value, std::move(source)};
}

std::optional<RamseyEntry> KnownRamseyTable::lookup(int s, int t) const {
  if (s < 1 || t < 1) return std::nullopt;
  const auto [lo, hi] = std::minmax(s, t);
  if (lo == 1) return RamseyEntry{1, "axiom: R(1,t) = 1"};
  if (lo == 2) return RamseyEntry{hi, "axiom: R(2,t) = t"};
  if (auto it = entries_.find({lo, hi}); it != entries_.end()) return it->second;
  return std::nullopt;
}

RamseyEntry KnownRamseyTable::at(int s, int t) const {
  if (auto e = lookup(s, t)) return *e;
  throw LookupError("no Ramsey number R(" + std::to_string(s) + "," + std::to_string(t) +
                    ") in the table; supply it with --ramsey-table");
}

void KnownRamseyTable::merge_tsv_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
      const auto tab = line.find('\t', start);
      if (tab == std::string::npos) break;
      fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    fields.push_back(line.substr(start));
    const std::string where = origin + ":" + std::to_string(line_no);
    if (fields.size() != 4) throw FormatError(where + ": expected s<TAB>t<TAB>R<TAB>source");
    try {
      std::size_t used = 0;
      const int s = std::stoi(fields[0], &used);
      if (used != fields[0].size()) throw std::invalid_argument("s");
      const int t = std::stoi(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument("t");
      const long long r = std::stoll(fields[2], &used);
      if (used != fields[2].size()) throw std::invalid_argument("R");
      set(s, t, r, fields[3]);
    } catch (const ArgumentError& e) {
      throw FormatError(where + ": " + e.what());
    } catch (const std::exception&) {
      throw FormatError(where + ": s, t and R must be integers");
    }
  }
}

void KnownRamseyTable::merge_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open Ramsey table " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  merge_tsv_text(buf.str(), path.string());
}

KnownRamseyTable KnownRamseyTable::load_tsv(const std::filesystem::path& path) {
  KnownRamseyTable table;
  table.merge_tsv(path);
  return table;
}

RationalProb ramsey_lower_half(int s, int t, const KnownRamseyTable& table) {
  if (s < 1 || t < 1) throw ArgumentError("s and t must be positive");
  const auto entry = table.at(s, t);
  const BigInt subsets = binomial(entry.value, s);
  if (subsets == 0) throw ArgumentError("C(R(s,t), s) is zero; bound undefined");
  return {BigInt(1), subsets};
}

BigRational ramsey_upper_half(int s, int t, int a, const KnownRamseyTable& table) {
  if (a < 2 || a > s) {
    throw ArgumentError("ramsey_upper_half needs 2 <= a <= s (got a=" + std::to_string(a) +
                        ", s=" + std::to_string(s) + ")");
  }
  const auto entry = table.at(a, t);
  const std::int64_t m = entry.value - 1;
  if (m < a - 1) throw ArgumentError("R(a,t) - 1 < a - 1; no extremal graph");
  const BigRational share(BigInt(a - 1), BigInt(m));
  BigRational power = 1;
  for (int i = 0; i < s; ++i) power *= share;
  return BigRational(binomial(m, a - 1)) * power;
}

// ---------------------------------------------------------------------------

double cf_upper(int s, int t) {
  if (t % 2 != 0) throw ArgumentError("cf_upper needs even t");
  if (t < 2 || s < 1) throw ArgumentError("cf_upper needs s >= 1 and t >= 2");
  if (2 * s <= t - 2) return -static_cast<double>(s) * (s - 1) / 2.0;
  return -static_cast<double>(4 * s - t) * (t - 2) / 8.0;
}

double multicolor_lower_from_log(int t, int ell, double ln_p_value) {
  if (ell < 2) throw ArgumentError("multicolor_lower needs ell >= 2");
  if (t <= 2) throw ArgumentError("multicolor_lower needs t > 2");
  if (!(ln_p_value <= 0.0)) throw ArgumentError("probability must lie in (0,1]");
  return -static_cast<double>(ell - 2) / t * (ln_p_value / std::log(2.0)) + (t - 1) / 2.0;
}

double multicolor_lower(int t, int ell, double p_value) {
  if (!(p_value > 0.0 && p_value <= 1.0)) throw ArgumentError("probability must lie in (0,1]");
  return multicolor_lower_from_log(t, ell, std::log(p_value));
}

double multicolor_lower(int t, int ell, const RationalProb& p_value) {
  if (p_value.value() == 0) throw ArgumentError("probability must lie in (0,1]");
  return multicolor_lower_from_log(t, ell, p_value.log());
}

// ---------------------------------------------------------------------------

std::string units_name(Units u) {
  switch (u) {
    case Units::Probability:
      return "probability";
    case Units::LnExponentPerT2:
      return "natural-log exponent per t^2";
    case Units::Log2Exponent:
      return "log2 exponent";
    case Units::Log2VertexCount:
      return "log2 of vertex count";
  }
  return "unknown";
}

double BoundReport::as_double() const {
  if (const auto* d = std::get_if<double>(&value)) return *d;
  const auto& q = std::get<BigRational>(value);
  if (q == 0) return 0.0;
  if (q > 0) return std::exp(log_of(q));
  return -std::exp(log_of(-q));
}

std::string BoundReport::exact_string() const {
  if (const auto* q = std::get_if<BigRational>(&value)) return to_fraction_string(*q);
  return {};
}

std::vector<BoundReport> collect_bounds(const BoundsRequest& request,
                                        const KnownRamseyTable& table) {
  const int s = request.s;
  const int t = request.t;
  if (s < 1 || t < 2) throw ArgumentError("bounds need s >= 1 and t >= 2");
  auto params = [&](std::vector<std::pair<std::string, std::string>> extra = {}) {
    std::vector<std::pair<std::string, std::string>> p{{"s", std::to_string(s)},
                                                       {"t", std::to_string(t)}};
    p.insert(p.end(), extra.begin(), extra.end());
    return p;
  };
  std::vector<BoundReport> out;

  const auto opt = optimize_p(s, t, request.tol);
  out.push_back({"optimal_p", params({{"tol", format_decimal(request.tol)}}), opt.p_star,
                 Units::Probability, "minimiser of the random-graph exponent"});
  out.push_back({"random_exponent_optimal", params({{"p", format_decimal(opt.p_star)}}),
                 opt.value_per_t2, Units::LnExponentPerT2,
                 "random graph G(M,p) upper bound on P(s,t), leading term"});
  out.push_back({"random_exponent_half", params({{"p", "0.5"}}),
                 random_exponent(0.5, s, t) / (static_cast<double>(t) * t),
                 Units::LnExponentPerT2, "random graph G(M,1/2) upper bound on P(s,t)"});

  NeighborhoodRecursion nrec;
  out.push_back({"n_recursion", params({{"tol", format_decimal(nrec.tol())}}), nrec(s, t),
                 Units::Probability, "neighbourhood recursion N(s,t), lower bound on P(s,t)"});
  if (auto exact = n_binomial_lower_exact(s, t)) {
    out.push_back({"n_binomial_lower", params(), *exact, Units::Probability,
                   "closed-form lower bound on N(s,t)"});
  } else {
    out.push_back({"n_binomial_lower", params(), n_binomial_lower(s, t), Units::Probability,
                   "closed-form lower bound on N(s,t)"});
  }

  if (auto entry = table.lookup(s, t)) {
    out.push_back({"ramsey_lower_half",
                   params({{"R(s,t)", std::to_string(entry->value)}}),
                   ramsey_lower_half(s, t, table).value(), Units::Probability,
                   "1/C(R(s,t),s); R from " + entry->source});
  }
  for (int a = 2; a <= s; ++a) {
    auto entry = table.lookup(a, t);
    if (!entry) continue;
    out.push_back({"ramsey_upper_half",
                   params({{"a", std::to_string(a)}, {"R(a,t)", std::to_string(entry->value)}}),
                   ramsey_upper_half(s, t, a, table), Units::Probability,
                   "C(R(a,t)-1,a-1)((a-1)/(R(a,t)-1))^s; R from " + entry->source});
  }

  if (t % 2 == 0) {
    out.push_back({"cf_upper", params(), cf_upper(s, t), Units::Log2Exponent,
                   "symplectic graph over F2^(t-2), constants dropped"});
  }

  if (request.ell && t > 2) {
    const int ell = *request.ell;
    const auto diag = optimize_p(t, t, request.tol);
    out.push_back({"multicolor_lower_random",
                   {{"t", std::to_string(t)}, {"ell", std::to_string(*request.ell)},
                    {"p", format_decimal(diag.p_star)}},
                   multicolor_lower_from_log(t, ell, diag.value), Units::Log2VertexCount,
                   "random-homomorphism colouring with P(t,t) <= exp(random exponent), leading term"});
    out.push_back({"multicolor_lower_half",
                   {{"t", std::to_string(t)}, {"ell", std::to_string(*request.ell)}, {"p", "0.5"}},
                   multicolor_lower_from_log(t, ell, random_exponent(0.5, t, t)),
                   Units::Log2VertexCount,
                   "same construction with the p = 1/2 exponent, leading term"});
  }
  return out;
}

}  // namespace hmr
