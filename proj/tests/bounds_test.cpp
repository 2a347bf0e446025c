#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hmr/bounds.hpp"
#include "hmr/error.hpp"

using namespace hmr;

TEST_CASE("random exponent values") {
  const double ln2 = std::log(2.0);
  for (double t : {1.0, 4.0, 10.0}) {
    CHECK(random_exponent(0.5, t, t) / (t * t) == doctest::Approx(-0.375 * ln2).epsilon(1e-12));
  }
  CHECK(random_exponent(0.5, 1, 1) == doctest::Approx(-0.2599302).epsilon(1e-6));
  CHECK(random_exponent(0.454997, 1, 1) == doctest::Approx(-0.266027).epsilon(1e-5));
  CHECK(random_exponent(0.5, 6, 8) == doctest::Approx(-16 * ln2).epsilon(1e-12));
  for (int t = 1; t <= 30; ++t)
    for (int s = 1; s <= 30; s += 3)
      CHECK(std::abs(random_exponent(0.5, s, t) + t * (4.0 * s - t) * ln2 / 8) <= 1e-12 * t * t * s);
  CHECK_THROWS_AS(random_exponent(0.0, 1, 1), ArgumentError);
  CHECK_THROWS_AS(random_exponent(1.0, 1, 1), ArgumentError);
}

TEST_CASE("stationarity residual") {
  for (double t : {4.0, 8.0, 16.0, 100.0, 7.0}) {
    CHECK(std::abs(stationarity_residual(0.5, 0.75 * t, t)) <= 1e-12 * t);
  }
  CHECK(std::abs(stationarity_residual(0.454997, 1, 1)) <= 1e-4);

  // At s = t the residual at 1/2 is nonzero and the minimum sits below 1/2.
  const double r = stationarity_residual(0.5, 1, 1);
  CHECK(std::abs(r) > 1e-3);
  double grid_best = 0.5;
  for (int i = 1; i < 1000; ++i) {
    const double p = i / 1000.0;
    if (random_exponent(p, 1, 1) < random_exponent(grid_best, 1, 1)) grid_best = p;
  }
  CHECK(grid_best < 0.5);
  // residual = A f'/f with A < 0 and f < 0 here, so sign(residual) = sign(f')
  const double h = 1e-6;
  const double slope = (random_exponent(0.5 + h, 1, 1) - random_exponent(0.5 - h, 1, 1)) / (2 * h);
  CHECK(slope > 0);
  CHECK(r > 0);
}

TEST_CASE("optimize_p reproduces the optimal constants") {
  const auto diag = optimize_p(1, 1, 1e-7);
  CHECK(std::abs(diag.p_star - 0.454997) <= 1e-5);
  CHECK(std::abs(diag.value_per_t2 + 0.266027) <= 1e-5);
  CHECK(std::abs(diag.residual) <= 1e-6);

  for (double t : {4.0, 8.0, 16.0, 100.0}) {
    const auto o = optimize_p(t, t, 1e-7);
    CHECK(std::abs(o.p_star - 0.454997) <= 1e-5);
    CHECK(std::abs(o.value_per_t2 + 0.266027) <= 1e-5);
    CHECK(std::abs(o.residual) / t <= 1e-6);
    const auto q = optimize_p(0.75 * t, t, 1e-7);
    CHECK(std::abs(q.p_star - 0.5) <= 1e-6);
  }
  CHECK_THROWS_AS(optimize_p(1, 1, 0.0), ArgumentError);
}

TEST_CASE("optimize_p agrees with a fine grid") {
  for (double ratio : {0.5, 0.75, 1.0, 1.5, 3.0}) {
    const double t = 10;
    const double s = ratio * t;
    const auto o = optimize_p(s, t, 1e-9);
    double best = 1e300;
    for (int i = 1; i < 100000; ++i) best = std::min(best, random_exponent(i / 100000.0, s, t));
    CHECK(o.value <= best + 1e-9 * std::abs(best));
  }
}

TEST_CASE("neighbourhood recursion") {
  NeighborhoodRecursion nrec;
  for (int t = 2; t <= 12; ++t) CHECK(nrec(1, t) == 1.0);
  for (int s = 1; s <= 12; ++s) CHECK(nrec(s, 2) == 1.0);
  CHECK(std::abs(nrec(2, 3) - (3 - std::sqrt(5.0)) / 2) <= 1e-12);
  // reference values from a 40-digit bisection
  CHECK(nrec(3, 3) == doctest::Approx(0.10598589335060393).epsilon(1e-10));
  CHECK(nrec(2, 4) == doctest::Approx(0.22777710423438124).epsilon(1e-10));
  CHECK(nrec(4, 4) == doctest::Approx(0.0023848849748146269).epsilon(1e-10));
  CHECK(nrec(10, 10) == doctest::Approx(2.2295172347712708e-27).epsilon(1e-9));
  CHECK(nrec(3, 3) >= 1.0 / 64);
  CHECK(nrec(3, 3) <= 0.25);
  CHECK_THROWS_AS(NeighborhoodRecursion(0.0), ArgumentError);
  CHECK_THROWS_AS(nrec(0, 3), ArgumentError);
}

TEST_CASE("neighbourhood recursion crossing and monotonicity") {
  NeighborhoodRecursion nrec(1e-12);
  for (int s = 2; s <= 20; ++s) {
    for (int t = 3; t <= 20; ++t) {
      const auto c = nrec.crossing(s, t);
      const double value = nrec(s, t);
      CHECK(std::abs(c.rising - c.falling) <= 1e-12 * value);
      CHECK(value <= nrec(s - 1, t));
      CHECK(value <= nrec(s, t - 1));
      CHECK(n_binomial_lower(s, t) <= value * (1 + 1e-12));
    }
  }
}

TEST_CASE("binomial lower bound") {
  CHECK(n_binomial_lower(3, 3) == doctest::Approx(1.0 / 64).epsilon(1e-14));
  CHECK(*n_binomial_lower_exact(3, 3) == BigRational(1, 64));
  CHECK_FALSE(n_binomial_lower_exact(4, 3).has_value());
  for (int t = 2; t <= 10; ++t) CHECK(n_binomial_lower(1, t) == 1.0);
  for (int s = 1; s <= 10; ++s) CHECK(n_binomial_lower(s, 2) == 1.0);
  // At s = t the bound dominates (3 sqrt 3 / 2)^{-t^2} and its per-t^2
  // exponent tends to ln(3 sqrt 3 / 2) = 0.95477...
  const double base = std::log(3 * std::sqrt(3.0) / 2);
  CHECK(base == doctest::Approx(0.954771252).epsilon(1e-9));
  for (int t = 2; t <= 40; ++t) CHECK(n_binomial_lower_log(t, t) >= -base * t * t);
  const double big = 1e6;
  CHECK(-n_binomial_lower_log(static_cast<int>(big), static_cast<int>(big)) / (big * big) ==
        doctest::Approx(base).epsilon(1e-5));
}

TEST_CASE("Ramsey table") {
  KnownRamseyTable table;
  CHECK(table.at(1, 7).value == 1);
  CHECK(table.at(7, 1).value == 1);
  CHECK(table.at(2, 9).value == 9);
  CHECK(table.at(9, 2).value == 9);
  CHECK(table.at(3, 3).value == 6);
  CHECK_FALSE(table.lookup(3, 4).has_value());
  CHECK_THROWS_AS(table.at(4, 5), LookupError);

  table.merge_tsv_text("# literature values\n3\t4\t9\tGreenwood-Gleason 1955\n4\t4\t18\tGG55\n");
  CHECK(table.at(4, 3).value == 9);
  CHECK(table.at(4, 4).source == "GG55");
  CHECK_THROWS_AS(table.merge_tsv_text("3 4 9 spaces\n"), FormatError);
  CHECK_THROWS_AS(table.merge_tsv_text("3\t4\tx\tsrc\n"), FormatError);
  CHECK_THROWS_AS(table.merge_tsv_text("2\t5\t6\tbad axiom\n"), FormatError);

  const auto path = std::filesystem::temp_directory_path() / "hmr_ramsey.tsv";
  std::ofstream(path) << "3\t5\t14\tGG55\n";
  CHECK(KnownRamseyTable::load_tsv(path).at(5, 3).value == 14);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(KnownRamseyTable::load_tsv("/nonexistent.tsv"), FormatError);
}

TEST_CASE("Ramsey sandwich bounds") {
  const KnownRamseyTable table;
  CHECK(ramsey_lower_half(3, 3, table) == RationalProb(BigInt(1), BigInt(20)));
  CHECK(ramsey_lower_half(1, 5, table) == RationalProb(BigInt(1), BigInt(1)));
  CHECK(ramsey_lower_half(2, 3, table) == RationalProb(BigInt(1), BigInt(3)));
  CHECK(ramsey_upper_half(3, 3, 2, table) == BigRational(1, 4));
  CHECK(ramsey_upper_half(4, 3, 2, table) == BigRational(1, 8));
  // a = s is admitted: K_{t-1} gives exactly 1/(t-1)
  CHECK(ramsey_upper_half(2, 3, 2, table) == BigRational(1, 2));
  CHECK(ramsey_upper_half(2, 4, 2, table) == BigRational(1, 3));
  CHECK_THROWS_AS(ramsey_upper_half(2, 3, 3, table), ArgumentError);
  CHECK_THROWS_AS(ramsey_upper_half(3, 3, 1, table), ArgumentError);
  CHECK_THROWS_AS(ramsey_upper_half(5, 4, 4, table), LookupError);
  CHECK_THROWS_AS(ramsey_lower_half(4, 4, table), LookupError);
}

TEST_CASE("symplectic bound exponent") {
  for (int t = 6; t <= 40; t += 2) {
    const int s = t / 2 - 1;
    CHECK(cf_upper(s, t) == doctest::Approx(-(t - 2.0) * (t - 4.0) / 8));
    CHECK(-static_cast<double>(4 * s - t) * (t - 2) / 8 == doctest::Approx(cf_upper(s, t)));
    CHECK(cf_upper(t, t) == doctest::Approx(-3.0 * t * (t - 2) / 8));
  }
  CHECK(cf_upper(6, 8) == doctest::Approx(-8 * 6 / 4.0));
  // at s = 3t/4 the leading t^2 term matches the p = 1/2 random exponent
  const double t = 1000;
  CHECK(cf_upper(750, 1000) / (t * t) ==
        doctest::Approx(random_exponent(0.5, 750, 1000) / std::log(2.0) / (t * t)).epsilon(1e-2));
  CHECK_THROWS_AS(cf_upper(3, 7), ArgumentError);
}

TEST_CASE("multicolour lower bound") {
  for (int t = 3; t <= 20; ++t) CHECK(multicolor_lower(t, 2, 0.3) == doctest::Approx((t - 1) / 2.0));
  const double improved = multicolor_lower_from_log(100, 3, -0.266027e4);
  CHECK(improved == doctest::Approx(0.266027 * 100 / std::log(2.0) + 49.5).epsilon(1e-12));
  CHECK(improved == doctest::Approx(87.88).epsilon(1e-4));
  const double wigderson = multicolor_lower_from_log(100, 3, -0.2599302e4);
  CHECK(wigderson == doctest::Approx(87.00).epsilon(1e-3));
  CHECK(wigderson < improved);
  CHECK(multicolor_lower(4, 3, RationalProb(BigInt(1), BigInt(16))) == doctest::Approx(2.5));
  CHECK_THROWS_AS(multicolor_lower(4, 3, 0.0), ArgumentError);
  CHECK_THROWS_AS(multicolor_lower(2, 3, 0.5), ArgumentError);
  CHECK_THROWS_AS(multicolor_lower(4, 1, 0.5), ArgumentError);
}

TEST_CASE("collected bound report") {
  const KnownRamseyTable table;
  const auto reports = collect_bounds({3, 3, 3, 1e-7}, table);
  auto find = [&](const std::string& name) -> const BoundReport& {
    for (const auto& r : reports)
      if (r.name == name) return r;
    FAIL("missing " << name);
    return reports.front();
  };
  CHECK(find("n_binomial_lower").exact_string() == "1/64");
  CHECK(find("ramsey_lower_half").exact_string() == "1/20");
  CHECK(find("ramsey_upper_half").exact_string() == "1/4");
  CHECK(find("n_recursion").as_double() == doctest::Approx(0.10598589335060393));
  CHECK(find("multicolor_lower_random").units == Units::Log2VertexCount);
  for (const auto& r : reports) CHECK_FALSE(units_name(r.units).empty());
}
