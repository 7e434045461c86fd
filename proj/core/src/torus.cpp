#include "sumrules/torus.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <thread>
#include <utility>

#include "sumrules/sumrule.hpp"

namespace sumrules {

TorusModuli make_torus(const Rational& a, const Rational& b_sq) {
  if (a.sign() < 0 || a > Rational(1, 2)) {
    throw UnsupportedParameter("torus modulus a must lie in [0, 1/2], got " + a.str());
  }
  if (b_sq.sign() <= 0) {
    throw UnsupportedParameter("torus modulus b^2 must be positive, got " + b_sq.str());
  }
  return TorusModuli{a, b_sq};
}

bool in_tau(const TorusModuli& mod) { return mod.a * mod.a + mod.b_sq >= Rational(1); }

Rational norm_sq(const TorusModuli& mod, const DualVector& v) {
  const Rational n(v.n), m(v.m);
  const Rational t = m - n * mod.a;
  return n * n + t * t / mod.b_sq;
}

Rational dot(const TorusModuli& mod, const DualVector& u, const DualVector& v) {
  const Rational tu = Rational(u.m) - Rational(u.n) * mod.a;
  const Rational tv = Rational(v.m) - Rational(v.n) * mod.a;
  return Rational(u.n) * Rational(v.n) + tu * tv / mod.b_sq;
}

DualVector add(const DualVector& u, const DualVector& v) {
  return DualVector{u.n + v.n, u.m + v.m};
}

namespace {

long to_long(const Integer& x, const char* what) {
  if (!x.fits_slong_p()) throw Error(std::string("enumeration bound overflow in ") + what);
  return x.get_si();
}

// Visits every dual vector with norm_sq <= nu_max exactly once. For each n
// with n^2 <= nu_max the second coordinate must satisfy
// (m - n a)^2 <= (nu_max - n^2) b^2, so m is scanned over an integer window
// one unit wider than that interval on each side and filtered exactly.
template <typename Fn>
void enumerate(const TorusModuli& mod, const Rational& nu_max, Fn&& visit) {
  if (nu_max.sign() < 0) return;
  const long n_bound = to_long(floor_sqrt(nu_max), "n");
  for (long n = -n_bound; n <= n_bound; ++n) {
    const Rational rn(n);
    const Rational rem = (nu_max - rn * rn) * mod.b_sq;
    const Integer spread = floor_sqrt(rem);
    const Rational na = rn * mod.a;
    const long m_lo = to_long(na.floor() - spread - 1, "m");
    const long m_hi = to_long(na.ceil() + spread + 1, "m");
    for (long m = m_lo; m <= m_hi; ++m) {
      DualVector v{n, m};
      Rational nu = norm_sq(mod, v);
      if (nu <= nu_max) visit(std::move(nu), v);
    }
  }
}

}  // namespace

TorusSpectrum torus_spectrum(const TorusModuli& mod, const Rational& nu_max) {
  if (nu_max.sign() < 0) throw Error("torus cutoff nu_max must be nonnegative");
  std::map<Rational, std::vector<DualVector>> by_value;
  enumerate(mod, nu_max,
            [&](Rational nu, const DualVector& v) { by_value[std::move(nu)].push_back(v); });
  TorusSpectrum ts;
  std::vector<Level> levels;
  levels.reserve(by_value.size());
  ts.shells.reserve(by_value.size());
  for (auto& [value, shell] : by_value) {
    levels.push_back({value, Integer(static_cast<unsigned long>(shell.size()))});
    ts.shells.push_back(std::move(shell));
  }
  ts.spectrum = make_spectrum(
      Unit::four_pi_squared, std::move(levels),
      "torus a=" + mod.a.str() + " b^2=" + mod.b_sq.str() + " nu<=" + nu_max.str());
  return ts;
}

std::vector<DualVector> eigenspace_vectors(const TorusModuli& mod, const Rational& nu) {
  std::vector<DualVector> shell;
  if (nu.sign() >= 0) {
    enumerate(mod, nu, [&](const Rational& value, const DualVector& v) {
      if (value == nu) shell.push_back(v);
    });
  }
  if (shell.empty()) {
    throw EmptyEigenspace("no dual lattice vector has squared norm " + nu.str());
  }
  return shell;
}

namespace {

ScanRecord evaluate_point(const ScanPoint& pt, const Rational& nu_max, const Integer& n_max) {
  const TorusModuli mod = make_torus(pt.a, pt.b_sq);
  ScanRecord rec;
  rec.point = pt;
  rec.in_region = in_tau(mod);
  const TorusSpectrum ts = torus_spectrum(mod, nu_max);
  const Integer total = total_count(ts.spectrum);
  Integer effective = n_max;
  if (total < n_max + 1) {
    effective = total - 1;
    rec.truncated = true;
  }
  if (effective >= 1) {
    for (const Integer& gap : gap_indices(ts.spectrum, effective)) {
      rec.gaps_checked.push_back(gap);
      CheckReport report = check_inequality(ts.spectrum, 2, gap);
      if (!report.holds) rec.violations.push_back(gap);
    }
  }
  return rec;
}

}  // namespace

std::vector<ScanRecord> scan_moduli(const std::vector<ScanPoint>& grid,
                                    const Rational& nu_max, const Integer& n_max) {
  if (sgn(n_max) <= 0) throw Error("scan needs n_max >= 1");
  std::vector<ScanRecord> out(grid.size());
  const std::size_t stride = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < grid.size(); start += stride) {
    const std::size_t stop = std::min(grid.size(), start + stride);
    std::vector<std::future<ScanRecord>> batch;
    batch.reserve(stop - start);
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, evaluate_point, grid[i], nu_max, n_max));
    }
    // Futures are collected in input order, so the result list (and every
    // report derived from it) is deterministic regardless of scheduling.
    for (std::size_t i = start; i < stop; ++i) out[i] = batch[i - start].get();
  }
  return out;
}

}  // namespace sumrules
