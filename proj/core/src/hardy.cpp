// Copyright 2026 The nsrlab authors
// SPDX-License-Identifier: Apache-2.0
#include "nsrlab/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "nsrlab/errors.hpp"
#include "nsrlab/fft.hpp"
#include "nsrlab/norms.hpp"
#include "nsrlab/spectral.hpp"

namespace nsrlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

double window(double r2) {
  if (r2 >= 1.0) return 0.0;
  const double w = 1.0 - r2;
  return w * w * w * w;
}

double lift_coord(double x) {
  double y = x - std::floor(x);
  if (y > 0.5) y -= 1.0;
  return y;
}

// (mean of m^p)^{1/p} over the grid, for the full quasinorm range of p.
double power_mean(const ScalarField2& m, double p) {
  if (std::isinf(p)) {
    double mx = 0.0;
    for (size_t i = 0; i < m.size(); ++i) mx = std::max(mx, m.data()[i]);
    return mx;
  }
  double acc = 0.0;
  for (size_t i = 0; i < m.size(); ++i) acc += std::pow(m.data()[i], p);
  return std::pow(acc / static_cast<double>(m.size()), 1.0 / p);
}

double euclid(const Field& f, size_t i) {
  double s = 0.0;
  for (int c = 0; c < f.comps(); ++c) {
    const double v = f.comp(c)[i];
    s += v * v;
  }
  return std::sqrt(s);
}

std::vector<size_t> ball_nodes(const GridSpec& g,
                               const std::array<double, 2>& center,
                               double radius) {
  std::vector<size_t> nodes;
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const double x1 = static_cast<double>(i1) / g.n1 - 0.5;
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double x2 = static_cast<double>(i2) / g.n2 - 0.5;
      if (torus_dist({x1, x2}, center) <= radius)
        nodes.push_back(static_cast<size_t>(i1) * g.n2 + i2);
    }
  }
  return nodes;
}

// Planar coordinate of a node on the representative ball: lifted center
// plus the wrapped displacement from the center.
std::array<double, 2> lifted_node(const GridSpec& g, size_t node,
                                  const std::array<double, 2>& center) {
  const int i1 = static_cast<int>(node / g.n2);
  const int i2 = static_cast<int>(node % g.n2);
  const double x1 = static_cast<double>(i1) / g.n1 - 0.5;
  const double x2 = static_cast<double>(i2) / g.n2 - 0.5;
  const std::array<double, 2> c = torus_lift(center);
  return {c[0] + lift_coord(x1 - center[0]), c[1] + lift_coord(x2 - center[1])};
}

// Solves the dense system M x = b in place by Gaussian elimination with
// partial pivoting; M is tiny (moment count squared).
std::vector<double> solve_dense(std::vector<double> M, std::vector<double> b) {
  const size_t k = b.size();
  double scale = 0.0;
  for (double v : M) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) throw SingularGram("moment system is all zero");
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    for (size_t r = col + 1; r < k; ++r)
      if (std::abs(M[r * k + col]) > std::abs(M[piv * k + col])) piv = r;
    if (std::abs(M[piv * k + col]) < 1e-13 * scale)
      throw SingularGram("moment system is numerically singular");
    if (piv != col) {
      for (size_t j = 0; j < k; ++j) std::swap(M[col * k + j], M[piv * k + j]);
      std::swap(b[col], b[piv]);
    }
    for (size_t r = col + 1; r < k; ++r) {
      const double f = M[r * k + col] / M[col * k + col];
      for (size_t j = col; j < k; ++j) M[r * k + j] -= f * M[col * k + j];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(k, 0.0);
  for (size_t r = k; r-- > 0;) {
    double s = b[r];
    for (size_t j = r + 1; j < k; ++j) s -= M[r * k + j] * x[j];
    x[r] = s / M[r * k + r];
  }
  return x;
}

// Window-times-monomial basis evaluated on the ball nodes, and its grid
// moment matrix in the lifted planar coordinates.
struct MomentBasis {
  std::vector<size_t> nodes;
  std::vector<std::array<int, 2>> idx;
  std::vector<double> values;  // basis-major: values[a * nodes + i]
  std::vector<double> gram;    // gram[beta * k + alpha] = moment of basis alpha
};

MomentBasis moment_basis(const GridSpec& g, const std::array<double, 2>& center,
                         double radius, int order) {
  MomentBasis mb;
  mb.nodes = ball_nodes(g, center, radius);
  mb.idx = moment_multi_indices(order);
  const size_t k = mb.idx.size();
  const size_t nn = mb.nodes.size();
  mb.values.assign(k * nn, 0.0);
  for (size_t i = 0; i < nn; ++i) {
    const auto x = lifted_node(g, mb.nodes[i], center);
    const auto c = torus_lift(center);
    const double y1 = (x[0] - c[0]) / radius;
    const double y2 = (x[1] - c[1]) / radius;
    const double w = window(y1 * y1 + y2 * y2);
    for (size_t a = 0; a < k; ++a)
      mb.values[a * nn + i] =
          w * std::pow(y1, mb.idx[a][0]) * std::pow(y2, mb.idx[a][1]);
  }
  const double cell = 1.0 / (static_cast<double>(g.n1) * g.n2);
  mb.gram.assign(k * k, 0.0);
  for (size_t b = 0; b < k; ++b) {
    for (size_t i = 0; i < nn; ++i) {
      const auto x = lifted_node(g, mb.nodes[i], center);
      const double mono =
          std::pow(x[0], mb.idx[b][0]) * std::pow(x[1], mb.idx[b][1]);
      for (size_t a = 0; a < k; ++a)
        mb.gram[b * k + a] += cell * mono * mb.values[a * nn + i];
    }
  }
  return mb;
}

}  // namespace

std::vector<double> MaximalConfig::scales(const GridSpec& g) const {
  const double lo = zeta_min > 0.0 ? zeta_min : 0.5 / g.n1;
  if (!(lo > 0.0) || !(zeta_max > lo))
    throw ConfigError("dilation range must satisfy 0 < zeta_min < zeta_max");
  if (!(ratio > 1.0)) throw ConfigError("dilation ratio must exceed one");
  std::vector<double> zs;
  for (double z = lo; z <= zeta_max * (1.0 + 1e-12); z *= ratio)
    zs.push_back(z);
  return zs;
}

ScalarField2 smooth_maximal(const Field& f, const MaximalConfig& cfg) {
  const GridSpec& g = f.grid();
  const std::vector<double> zs = cfg.scales(g);
  ScalarField2 out(g, 1);
  const size_t nn = out.size();
  if (cfg.include_zero_scale)
    for (size_t i = 0; i < nn; ++i) out.data()[i] = euclid(f, i);
  double mean2 = 0.0;
  for (int c = 0; c < f.comps(); ++c) {
    const double m = mean_of(f, c);
    mean2 += m * m;
  }
  const double mean_mag = std::sqrt(mean2);
  for (size_t i = 0; i < nn; ++i)
    out.data()[i] = std::max(out.data()[i], mean_mag);

  const Spectrum s = fft(f);
  for (double z : zs) {
    Spectrum sz = s;
    for (int c = 0; c < sz.comps(); ++c) {
      for (int k1i = 0; k1i < g.n1; ++k1i) {
        const double k1 = sz.k1(k1i);
        for (int k2i = 0; k2i < sz.n2h(); ++k2i) {
          const double k2 = k2i;
          sz.at(c, k1i, k2i) *=
              std::exp(-kPi * z * z * (k1 * k1 + k2 * k2));
        }
      }
    }
    const Field conv = ifft(sz);
    for (size_t i = 0; i < nn; ++i)
      out.data()[i] = std::max(out.data()[i], euclid(conv, i));
  }
  return out;
}

double hp_quasinorm(const Field& f, double p, const MaximalConfig& cfg) {
  if (!(p > 0.0)) throw BadExponent("quasinorm exponent must be positive");
  return power_mean(smooth_maximal(f, cfg), p);
}

std::array<double, 2> torus_lift(const std::array<double, 2>& x) {
  return {lift_coord(x[0]), lift_coord(x[1])};
}

double torus_dist(const std::array<double, 2>& a,
                  const std::array<double, 2>& b) {
  const double d1 = lift_coord(a[0] - b[0]);
  const double d2 = lift_coord(a[1] - b[1]);
  return std::sqrt(d1 * d1 + d2 * d2);
}

std::vector<std::array<int, 2>> moment_multi_indices(int order) {
  std::vector<std::array<int, 2>> idx;
  for (int d = 0; d <= order; ++d)
    for (int a2 = 0; a2 <= d; ++a2) idx.push_back({d - a2, a2});
  return idx;
}

int AtomDescriptor::moment_order() const {
  if (!(p > 0.0)) throw BadExponent("atom exponent must be positive");
  if (p > 1.0) return -1;
  return static_cast<int>(std::floor(2.0 * (1.0 / p - 1.0)));
}

double AtomDescriptor::ball_volume() const { return kPi * radius * radius; }

bool AtomDescriptor::small_ball() const { return ball_volume() < 0.1; }

std::array<double, 2> AtomDescriptor::lifted_center() const {
  return torus_lift(center);
}

std::vector<MomentVector> ball_moments(const Field& f,
                                       const std::array<double, 2>& center,
                                       double radius, int order) {
  const GridSpec& g = f.grid();
  const auto idx = moment_multi_indices(order);
  const auto nodes = ball_nodes(g, center, radius);
  const double cell = 1.0 / (static_cast<double>(g.n1) * g.n2);
  std::vector<MomentVector> out(f.comps());
  for (int c = 0; c < f.comps(); ++c) {
    out[c].order = order;
    out[c].m.assign(idx.size(), 0.0);
  }
  for (size_t node : nodes) {
    const auto x = lifted_node(g, node, center);
    for (size_t a = 0; a < idx.size(); ++a) {
      const double mono = std::pow(x[0], idx[a][0]) * std::pow(x[1], idx[a][1]);
      for (int c = 0; c < f.comps(); ++c)
        out[c].m[a] += cell * mono * f.comp(c)[node];
    }
  }
  return out;
}

AtomReport atom_validate(const Field& f, const AtomDescriptor& desc) {
  const GridSpec& g = f.grid();
  double peak = 0.0;
  for (size_t i = 0; i < static_cast<size_t>(g.nodes()); ++i)
    peak = std::max(peak, euclid(f, i));
  const double tol = 1e-12 * peak;
  for (int i1 = 0; i1 < g.n1; ++i1) {
    const double x1 = static_cast<double>(i1) / g.n1 - 0.5;
    for (int i2 = 0; i2 < g.n2; ++i2) {
      const double x2 = static_cast<double>(i2) / g.n2 - 0.5;
      if (torus_dist({x1, x2}, desc.center) > desc.radius + 1e-12) {
        const size_t node = static_cast<size_t>(i1) * g.n2 + i2;
        if (euclid(f, node) > tol)
          throw SupportViolation(
              "field escapes the described ball at (" + std::to_string(x1) +
              ", " + std::to_string(x2) + ")");
      }
    }
  }
  AtomReport rep;
  rep.small_ball = desc.small_ball();
  rep.linf_ratio = peak * std::pow(desc.ball_volume(), 1.0 / desc.p);
  rep.linf_ok = rep.linf_ratio <= 1.0 + 1e-9;
  rep.moments = ball_moments(f, desc.center, desc.radius,
                             std::max(desc.moment_order(), 0));
  return rep;
}

ScalarField2 moment_corrector(double radius,
                              const std::array<double, 2>& center,
                              const MomentVector& m, const GridSpec& g) {
  if (!(radius > 0.0) || radius > 1.0)
    throw OutOfRange("corrector radius must lie in (0, 1], got " +
                     std::to_string(radius));
  if (radius < 4.0 / g.n1)
    throw SingularGram("corrector ball spans fewer than four cells");
  const auto idx = moment_multi_indices(m.order);
  if (m.m.size() != idx.size())
    throw ConfigError("moment vector length does not match its order");
  ScalarField2 out(g, 1);
  double scale = 0.0;
  for (double v : m.m) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return out;
  const MomentBasis mb = moment_basis(g, center, radius, m.order);
  const std::vector<double> coef = solve_dense(mb.gram, m.m);
  const size_t nn = mb.nodes.size();
  for (size_t a = 0; a < coef.size(); ++a)
    for (size_t i = 0; i < nn; ++i)
      out.data()[mb.nodes[i]] += coef[a] * mb.values[a * nn + i];
  return out;
}

double hp_upper_bound_nonvanishing(const Field& f, double p) {
  if (!(p > 0.0) || p > 1.0)
    throw BadExponent("concentration bound needs 0 < p <= 1");
  const GridSpec& g = f.grid();
  const size_t nn = static_cast<size_t>(g.nodes());
  double peak = 0.0;
  size_t anchor = 0;
  for (size_t i = 0; i < nn; ++i) {
    const double v = euclid(f, i);
    if (v > peak) {
      peak = v;
      anchor = i;
    }
  }
  if (peak == 0.0) return 0.0;
  const double a1 =
      static_cast<double>(anchor / g.n2) / g.n1 - 0.5;
  const double a2 =
      static_cast<double>(anchor % g.n2) / g.n2 - 0.5;
  double lo1 = 0.0, hi1 = 0.0, lo2 = 0.0, hi2 = 0.0;
  const double tol = 1e-12 * peak;
  for (size_t i = 0; i < nn; ++i) {
    if (euclid(f, i) <= tol) continue;
    const double x1 = static_cast<double>(i / g.n2) / g.n1 - 0.5;
    const double x2 = static_cast<double>(i % g.n2) / g.n2 - 0.5;
    const double d1 = lift_coord(x1 - a1);
    const double d2 = lift_coord(x2 - a2);
    lo1 = std::min(lo1, d1);
    hi1 = std::max(hi1, d1);
    lo2 = std::min(lo2, d2);
    hi2 = std::max(hi2, d2);
  }
  const std::array<double, 2> center = {
      lift_coord(a1 + 0.5 * (lo1 + hi1)), lift_coord(a2 + 0.5 * (lo2 + hi2))};
  double radius = 0.0;
  for (size_t i = 0; i < nn; ++i) {
    if (euclid(f, i) <= tol) continue;
    const double x1 = static_cast<double>(i / g.n2) / g.n1 - 0.5;
    const double x2 = static_cast<double>(i % g.n2) / g.n2 - 0.5;
    radius = std::max(radius, torus_dist({x1, x2}, center));
  }
  radius += 0.5 / g.n1;
  if (radius >= 0.5)
    throw SupportViolation("support ball radius " + std::to_string(radius) +
                           " is not below one half");
  const int order =
      static_cast<int>(std::floor(2.0 * (1.0 / p - 1.0)));
  const auto moments = ball_moments(f, center, radius, order);
  double worst = 0.0;
  for (const auto& mv : moments)
    for (double v : mv.m) worst = std::max(worst, std::abs(v));
  return kSmallBallBoundCalibration *
         (radius * radius * std::pow(peak, p) +
          std::abs(std::log(radius)) * std::pow(worst, p));
}

double curl_h1_l2_ratio(const VectorField2& f, const MaximalConfig& cfg) {
  const double scale = lebesgue_norm(f, kInfExponent);
  if (scale == 0.0) return 0.0;
  if (spectral_divergence_max(f) > 1e-10 * scale)
    throw NotDivergenceFree("curl comparison needs a solenoidal field");
  for (int c = 0; c < f.comps(); ++c)
    if (std::abs(mean_of(f, c)) > 1e-12 * scale)
      throw NonZeroMean("curl comparison needs a mean-free field");
  const double num = lebesgue_norm(f, 2.0);
  const double den = hp_quasinorm(curl2(f), 1.0, cfg);
  return num / den;
}

double leray_hp_ratio(const VectorField2& a, double p,
                      const MaximalConfig& cfg) {
  const double na = hp_quasinorm(a, p, cfg);
  if (na == 0.0) return 0.0;
  return hp_quasinorm(leray_project(a), p, cfg) / na;
}

namespace {

ScalarField2 random_window_poly(const GridSpec& g, const AtomDescriptor& desc,
                                std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto idx = moment_multi_indices(3);
  std::vector<double> coef(idx.size());
  for (double& c : coef) c = u(rng);
  ScalarField2 out(g, 1);
  const auto nodes = ball_nodes(g, desc.center, desc.radius);
  for (size_t node : nodes) {
    const auto x = lifted_node(g, node, desc.center);
    const auto c = desc.lifted_center();
    const double y1 = (x[0] - c[0]) / desc.radius;
    const double y2 = (x[1] - c[1]) / desc.radius;
    const double w = window(y1 * y1 + y2 * y2);
    double poly = 0.0;
    for (size_t a = 0; a < idx.size(); ++a)
      poly += coef[a] * std::pow(y1, idx[a][0]) * std::pow(y2, idx[a][1]);
    out.data()[node] = w * poly;
  }
  return out;
}

void cancel_moments(ScalarField2& f, const AtomDescriptor& desc) {
  const int order = desc.moment_order();
  if (!desc.small_ball() || order < 0) return;
  const auto mv = ball_moments(f, desc.center, desc.radius, order);
  ScalarField2 corr =
      moment_corrector(desc.radius, desc.center, mv[0], f.grid());
  f -= corr;
}

}  // namespace

ScalarField2 random_atom(const GridSpec& g, const AtomDescriptor& desc,
                         uint64_t seed) {
  std::mt19937_64 rng(seed);
  ScalarField2 f = random_window_poly(g, desc, rng);
  cancel_moments(f, desc);
  const double peak = lebesgue_norm(f, kInfExponent);
  if (peak == 0.0) throw SingularGram("seeded bump degenerated to zero");
  f *= std::pow(desc.ball_volume(), -1.0 / desc.p) / peak;
  return f;
}

VectorField2 random_vector_atom(const GridSpec& g, const AtomDescriptor& desc,
                                uint64_t seed) {
  std::mt19937_64 rng(seed);
  VectorField2 f(g, 2);
  for (int c = 0; c < 2; ++c) {
    ScalarField2 comp = random_window_poly(g, desc, rng);
    cancel_moments(comp, desc);
    for (size_t i = 0; i < comp.size(); ++i)
      f.comp(c)[i] = comp.data()[i];
  }
  double peak = 0.0;
  for (size_t i = 0; i < static_cast<size_t>(g.nodes()); ++i)
    peak = std::max(peak, euclid(f, i));
  if (peak == 0.0) throw SingularGram("seeded bump degenerated to zero");
  f *= std::pow(desc.ball_volume(), -1.0 / desc.p) / peak;
  return f;
}

}  // namespace nsrlab
