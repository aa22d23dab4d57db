#include "orbires/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "orbires/errors.hpp"
#include "orbires/poly_matrix.hpp"

namespace orbires {
namespace {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

struct CompiledPoly {
  std::vector<std::pair<Complex, std::vector<std::uint32_t>>> terms;

  explicit CompiledPoly(const Polynomial& p) {
    for (const auto& [m, c] : p.terms()) terms.emplace_back(Complex(c.get_d(), 0.0), m.exponents());
  }

  Complex operator()(const CVec& z) const {
    Complex v = 0;
    for (const auto& [c, e] : terms) {
      Complex t = c;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) t *= z[i];
      v += t;
    }
    return v;
  }
};

// Perturbed system f_i + eps * sum_j a_ij (z_j - p_j), with its Jacobian.
struct NumericSystem {
  std::size_t n = 0;
  std::vector<CompiledPoly> f;
  std::vector<std::vector<CompiledPoly>> jac;
  std::vector<CVec> forms;
  CVec p;
  double eps = 0;

  CVec value(const CVec& z) const {
    CVec v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = f[i](z);
      for (std::size_t j = 0; j < n; ++j) v[i] += eps * forms[i][j] * (z[j] - p[j]);
    }
    return v;
  }

  std::vector<CVec> jacobian(const CVec& z) const {
    std::vector<CVec> m(n, CVec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = jac[i][j](z) + eps * forms[i][j];
    return m;
  }
};

// Gaussian elimination with partial pivoting; returns det and overwrites b
// with the solution (b untouched when singular).
Complex solve_in_place(std::vector<CVec> a, CVec& b) {
  const std::size_t n = a.size();
  Complex det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (a[piv][c] == Complex(0)) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      std::swap(b[piv], b[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
      b[r] -= f * b[c];
    }
  }
  for (std::size_t c = n; c-- > 0;) {
    for (std::size_t k = c + 1; k < n; ++k) b[c] -= a[c][k] * b[k];
    b[c] /= a[c][c];
  }
  return det;
}

Complex determinant(std::vector<CVec> a) {
  CVec dummy(a.size());
  return solve_in_place(std::move(a), dummy);
}

double norm(const CVec& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

double distance(const CVec& a, const CVec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

// splitmix64 finalizer: independent streams from (seed, index)
std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::optional<CVec> newton(const NumericSystem& sys, CVec z, double tol) {
  constexpr int kMaxIterations = 80;
  for (int it = 0; it < kMaxIterations; ++it) {
    CVec step = sys.value(z);
    if (!std::isfinite(norm(step))) return std::nullopt;
    if (solve_in_place(sys.jacobian(z), step) == Complex(0)) return std::nullopt;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= step[i];
    const double s = norm(step);
    if (!std::isfinite(s)) return std::nullopt;
    if (s <= tol * (1 + norm(z))) return z;
  }
  return std::nullopt;
}

CVec random_start(const CVec& center, double radius, std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(mix(seed ^ mix(index)));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  CVec z(center.size());
  for (;;) {
    double r2 = 0;
    for (auto& x : z) {
      x = Complex(unit(rng), unit(rng));
      r2 += std::norm(x);
    }
    if (r2 <= 1.0) break;
  }
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = center[i] + radius * z[i];
  return z;
}

OracleLevel run_level(const NumericSystem& sys, const CompiledPoly& h, const OracleSettings& s, std::size_t starts) {
  std::vector<std::optional<CVec>> found(starts);
  const auto body = [&](std::size_t i) {
    auto z = newton(sys, random_start(sys.p, s.radius, s.seed, i), s.newton_tolerance);
    if (z && distance(*z, sys.p) <= s.radius) found[i] = std::move(z);
  };
  if (s.exec == Exec::kParallel) {
    const auto total = static_cast<std::int64_t>(starts);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < total; ++i) body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < starts; ++i) body(i);
  }

  OracleLevel level;
  level.epsilon = sys.eps;
  for (auto& z : found) {
    if (!z) continue;
    bool dup = false;
    for (const auto& q : level.zeros)
      if (distance(q, *z) <= s.dedup_radius) {
        dup = true;
        break;
      }
    if (!dup) level.zeros.push_back(std::move(*z));
  }
  const auto lex = [](const CVec& a, const CVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
      if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
  };
  std::sort(level.zeros.begin(), level.zeros.end(), lex);
  for (const auto& z : level.zeros) level.sum += h(z) / determinant(sys.jacobian(z));
  return level;
}

}  // namespace

NumericResidue numeric_local_residue(std::span<const Polynomial> fields, const Polynomial& h,
                                     std::span<const Rational> p, const OracleSettings& settings) {
  if (fields.empty()) throw InputError("empty system");
  const auto& vars = fields.front().shared_vars();
  const std::size_t n = vars->size();
  if (fields.size() != n) throw InputError("oracle needs n functions in n variables");
  if (p.size() != n) throw InputError("point dimension differs from the number of variables");
  if (!(settings.epsilon > 0) || !(settings.radius > 0) || !(settings.newton_tolerance > 0))
    throw InputError("oracle epsilon, radius and tolerance must be positive");

  NumericSystem sys;
  sys.n = n;
  std::int64_t bezout = 1;
  for (const auto& f : fields) {
    const Polynomial g = f.rebase(vars);
    sys.f.emplace_back(g);
    std::vector<CompiledPoly> row;
    for (std::size_t j = 0; j < n; ++j) row.emplace_back(g.differentiate(j));
    sys.jac.push_back(std::move(row));
    bezout *= std::max<std::int64_t>(1, g.total_degree());
  }
  for (const auto& c : p) sys.p.emplace_back(c.get_d(), 0.0);

  std::mt19937_64 rng(mix(settings.seed));
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> size(0.5, 1.0);
  sys.forms.assign(n, CVec(n));
  for (auto& row : sys.forms)
    for (auto& a : row) a = std::polar(size(rng), angle(rng));

  const CompiledPoly hc(h.rebase(vars));
  const std::size_t starts = settings.starts ? settings.starts : static_cast<std::size_t>(200 * bezout);

  NumericResidue out;
  for (double scale : {1.0, 0.5, 0.25}) {
    sys.eps = settings.epsilon * scale;
    out.levels.push_back(run_level(sys, hc, settings, starts));
  }
  if (out.levels.front().zeros.empty()) throw ComputationError("oracle found no zeros near the point");
  for (const auto& l : out.levels)
    if (l.zeros.size() != out.levels.front().zeros.size()) out.reliable = false;

  const Complex v1 = out.levels[0].sum, v2 = out.levels[1].sum, v4 = out.levels[2].sum;
  const Complex first = 2.0 * v4 - v2;
  out.value = (8.0 * v4 - 6.0 * v2 + v1) / 3.0;
  out.error_estimate = std::abs(out.value - first);
  return out;
}

}  // namespace orbires
