#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "sumrules/errors.hpp"
#include "sumrules/torus.hpp"

using namespace sumrules;

namespace {

// Exhaustive reference enumeration over a window guaranteed to contain every
// vector of squared norm <= nu_max: |n| <= sqrt(nu_max) and
// |m| <= |n a| + b sqrt(nu_max) <= nu_max + b^2 nu_max generously padded.
std::map<Rational, long> brute_force_counts(const TorusModuli& mod, const Rational& nu_max) {
  std::map<Rational, long> counts;
  const long n_lim = static_cast<long>(floor_sqrt(nu_max).get_si()) + 1;
  const long m_pad =
      static_cast<long>(floor_sqrt(nu_max * mod.b_sq).get_si()) + n_lim + 2;
  for (long n = -n_lim; n <= n_lim; ++n) {
    for (long m = -m_pad; m <= m_pad; ++m) {
      const Rational nu = norm_sq(mod, DualVector{n, m});
      if (nu <= nu_max) ++counts[nu];
    }
  }
  return counts;
}

}  // namespace

TEST_CASE("make_torus validates the moduli") {
  CHECK_NOTHROW(make_torus(Rational(0), Rational(1)));
  CHECK_NOTHROW(make_torus(Rational(1, 2), Rational(3, 4)));
  CHECK_THROWS_AS(make_torus(Rational(-1, 10), Rational(1)), UnsupportedParameter);
  CHECK_THROWS_AS(make_torus(Rational(3, 5), Rational(1)), UnsupportedParameter);
  CHECK_THROWS_AS(make_torus(Rational(0), Rational(0)), UnsupportedParameter);
  CHECK_THROWS_AS(make_torus(Rational(0), Rational(-2)), UnsupportedParameter);
}

TEST_CASE("fundamental region membership") {
  CHECK(in_tau(make_torus(Rational(0), Rational(1))));
  CHECK(in_tau(make_torus(Rational(1, 2), Rational(3, 4))));
  CHECK(in_tau(make_torus(Rational(0), Rational(4))));
  CHECK_FALSE(in_tau(make_torus(Rational(1, 2), Rational(1, 2))));
  CHECK_FALSE(in_tau(make_torus(Rational(0), Rational(99, 100))));
}

TEST_CASE("dual vector geometry") {
  const TorusModuli sq = make_torus(Rational(0), Rational(1));
  CHECK(norm_sq(sq, DualVector{1, 0}) == Rational(1));
  CHECK(norm_sq(sq, DualVector{0, 1}) == Rational(1));
  CHECK(norm_sq(sq, DualVector{1, 2}) == Rational(5));
  CHECK(dot(sq, DualVector{1, 0}, DualVector{0, 1}) == Rational(0));
  CHECK(dot(sq, DualVector{1, 2}, DualVector{1, 2}) == norm_sq(sq, DualVector{1, 2}));

  const TorusModuli hex = make_torus(Rational(1, 2), Rational(3, 4));
  CHECK(norm_sq(hex, DualVector{0, 1}) == Rational(4, 3));
  CHECK(norm_sq(hex, DualVector{1, 0}) == Rational(4, 3));
  CHECK(norm_sq(hex, DualVector{1, 1}) == Rational(4, 3));
  CHECK(add(DualVector{1, 2}, DualVector{-3, 1}) == DualVector{-2, 3});

  // Bilinearity: <u+v, w> = <u, w> + <v, w> on a skew torus.
  const TorusModuli skew = make_torus(Rational(1, 3), Rational(5, 7));
  const DualVector u{2, -1}, v{-1, 3}, w{1, 1};
  CHECK(dot(skew, add(u, v), w) == dot(skew, u, w) + dot(skew, v, w));
}

TEST_CASE("enumeration is complete against brute force") {
  std::mt19937 rng(314159);
  std::uniform_int_distribution<long> a_num(0, 4);      // a = a_num/8 in [0, 1/2]
  std::uniform_int_distribution<long> b_num(2, 40);     // b^2 = b_num/8
  for (int trial = 0; trial < 12; ++trial) {
    const TorusModuli mod = make_torus(Rational(a_num(rng), 8), Rational(b_num(rng), 8));
    const Rational nu_max(trial % 3 + 4);
    const TorusSpectrum ts = torus_spectrum(mod, nu_max);
    const auto reference = brute_force_counts(mod, nu_max);
    REQUIRE(ts.spectrum.levels.size() == reference.size());
    std::size_t i = 0;
    for (const auto& [nu, count] : reference) {
      CHECK(ts.spectrum.levels[i].value == nu);
      CHECK(ts.spectrum.levels[i].mult == Integer(count));
      CHECK(ts.shells[i].size() == static_cast<std::size_t>(count));
      ++i;
    }
  }
}

TEST_CASE("shells carry the vectors of their level") {
  const TorusModuli sq = make_torus(Rational(0), Rational(1));
  const TorusSpectrum ts = torus_spectrum(sq, Rational(5));
  REQUIRE(ts.shells.size() == ts.spectrum.levels.size());
  for (std::size_t i = 0; i < ts.shells.size(); ++i) {
    CHECK(Integer(static_cast<long>(ts.shells[i].size())) == ts.spectrum.levels[i].mult);
    for (const DualVector& v : ts.shells[i]) {
      CHECK(norm_sq(sq, v) == ts.spectrum.levels[i].value);
    }
  }
  // Nonzero levels pair v with -v, so multiplicities are even.
  for (std::size_t i = 1; i < ts.spectrum.levels.size(); ++i) {
    CHECK(ts.spectrum.levels[i].mult % 2 == 0);
  }
  CHECK(ts.spectrum.levels[0].mult == Integer(1));
}

TEST_CASE("square torus level counts follow sums of two squares") {
  const TorusSpectrum ts = torus_spectrum(make_torus(Rational(0), Rational(1)), Rational(10));
  // nu: 0 1 2 4 5 8 9 10, multiplicities 1 4 4 4 8 4 4 8.
  const std::vector<std::pair<long, long>> expected = {
      {0, 1}, {1, 4}, {2, 4}, {4, 4}, {5, 8}, {8, 4}, {9, 4}, {10, 8}};
  REQUIRE(ts.spectrum.levels.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(ts.spectrum.levels[i].value == Rational(expected[i].first));
    CHECK(ts.spectrum.levels[i].mult == Integer(expected[i].second));
  }
}

TEST_CASE("eigenspace_vectors extracts one shell") {
  const TorusModuli sq = make_torus(Rational(0), Rational(1));
  const auto shell = eigenspace_vectors(sq, Rational(5));
  CHECK(shell.size() == 8);
  for (const DualVector& v : shell) CHECK(norm_sq(sq, v) == Rational(5));
  CHECK_THROWS_AS(eigenspace_vectors(sq, Rational(3)), EmptyEigenspace);
}

TEST_CASE("scan_moduli reports in input order with region flags") {
  const std::vector<ScanPoint> grid = {
      {Rational(0), Rational(1)},        // square, in region
      {Rational(0), Rational(9)},        // rectangular, violates at N = 3
      {Rational(1, 2), Rational(1, 2)},  // below the arc
  };
  const auto records = scan_moduli(grid, Rational(12), Integer(3));
  REQUIRE(records.size() == 3);
  CHECK(records[0].point.a == Rational(0));
  CHECK(records[0].in_region);
  CHECK(records[0].violations.empty());
  CHECK_FALSE(records[0].truncated);
  CHECK(records[1].in_region);
  REQUIRE(!records[1].violations.empty());
  CHECK(records[1].violations.front() == Integer(3));
  CHECK_FALSE(records[2].in_region);
  // The gap list is every gap index <= 3.
  for (const auto& rec : records) {
    for (const Integer& g : rec.gaps_checked) CHECK(g <= Integer(3));
  }
}

TEST_CASE("scan_moduli flags truncation when the cutoff is too small") {
  const auto records =
      scan_moduli({{Rational(0), Rational(1)}}, Rational(1), Integer(50));
  REQUIRE(records.size() == 1);
  CHECK(records[0].truncated);
  // With nu <= 1 only five modes exist, so gaps up to N = 4 are checkable.
  for (const Integer& g : records[0].gaps_checked) CHECK(g <= Integer(4));
}
