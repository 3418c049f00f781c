// Quadrature rules: symmetric triangle rules up to degree 10, Gauss-Legendre
// on segments, and tensor-product rules on rectangles.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace miscflow {

struct QuadPoint {
  double xi, eta;  // reference-triangle coordinates
  double w;        // weight, normalized so that sum(w) = 1/2 (reference area)
};

using TriangleRule = std::vector<QuadPoint>;

namespace detail {

inline void push_perm3(TriangleRule& r, double a, double b, double c, double w) {
  // barycentric (a,b,c) on vertices (0,0),(1,0),(0,1): xi = b, eta = c
  r.push_back({b, c, w});
}

inline void add_center(TriangleRule& r, double w) {
  push_perm3(r, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, w);
}

// three points (1-2a, a, a) and cyclic permutations
inline void add_sym3(TriangleRule& r, double a, double w) {
  const double b = 1.0 - 2.0 * a;
  push_perm3(r, b, a, a, w);
  push_perm3(r, a, b, a, w);
  push_perm3(r, a, a, b, w);
}

// six points, all permutations of (1-a-b, a, b)
inline void add_sym6(TriangleRule& r, double a, double b, double w) {
  const double c = 1.0 - a - b;
  push_perm3(r, c, a, b, w);
  push_perm3(r, c, b, a, w);
  push_perm3(r, a, c, b, w);
  push_perm3(r, b, c, a, w);
  push_perm3(r, a, b, c, w);
  push_perm3(r, b, a, c, w);
}

}  // namespace detail

// Dunavant rules; weights stored in sum = 1 convention, rescaled to 1/2 below.
inline const TriangleRule& triangle_rule(int degree) {
  static const TriangleRule rules[] = {
      [] {  // degree <= 2, 3 points
        TriangleRule r;
        detail::add_sym3(r, 1.0 / 6.0, 1.0 / 3.0);
        return r;
      }(),
      [] {  // degree <= 4, 6 points
        TriangleRule r;
        detail::add_sym3(r, 0.445948490915965, 0.223381589678011);
        detail::add_sym3(r, 0.091576213509771, 0.109951743655322);
        return r;
      }(),
      [] {  // degree <= 6, 12 points
        TriangleRule r;
        detail::add_sym3(r, 0.063089014491502, 0.050844906370207);
        detail::add_sym3(r, 0.249286745170910, 0.116786275726379);
        detail::add_sym6(r, 0.310352451033785, 0.053145049844816, 0.082851075618374);
        return r;
      }(),
      [] {  // degree <= 8, 16 points
        TriangleRule r;
        detail::add_center(r, 0.144315607677787);
        detail::add_sym3(r, 0.459292588292723, 0.095091634413245);
        detail::add_sym3(r, 0.170569307751760, 0.103217370534718);
        detail::add_sym3(r, 0.050547228317031, 0.032458497623198);
        detail::add_sym6(r, 0.263112829634638, 0.008394777409958, 0.027230314174435);
        return r;
      }(),
      [] {  // degree <= 10, 25 points
        TriangleRule r;
        detail::add_center(r, 0.090817990382754);
        detail::add_sym3(r, 0.485577633383657, 0.036725957756467);
        detail::add_sym3(r, 0.109481575485037, 0.045321059435528);
        detail::add_sym6(r, 0.307939838764121, 0.141707219414880, 0.072757916845420);
        detail::add_sym6(r, 0.246672560639903, 0.025003534762686, 0.028327242531057);
        detail::add_sym6(r, 0.066803251012200, 0.009540815400299, 0.009421666963733);
        return r;
      }(),
  };
  static const std::vector<TriangleRule> scaled = [] {
    std::vector<TriangleRule> s;
    for (const auto& raw : rules) {
      TriangleRule r = raw;
      for (auto& p : r) p.w *= 0.5;  // reference triangle area
      s.push_back(std::move(r));
    }
    return s;
  }();
  if (degree <= 2) return scaled[0];
  if (degree <= 4) return scaled[1];
  if (degree <= 6) return scaled[2];
  if (degree <= 8) return scaled[3];
  if (degree <= 10) return scaled[4];
  throw std::invalid_argument("triangle_rule: degree > 10 not available");
}

struct GaussPoint {
  double x;  // on [-1, 1]
  double w;
};

// Nodes via Newton iteration on Legendre polynomials.
inline std::vector<GaussPoint> gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  std::vector<GaussPoint> pts(n);
  for (int i = 0; i < n / 2 + n % 2; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    pts[i] = {-x, w};          // cos ordering gives descending |x|; store ascending
    pts[n - 1 - i] = {x, w};
  }
  return pts;
}

inline const std::vector<GaussPoint>& gauss_legendre_cached(int n) {
  static std::vector<std::vector<GaussPoint>> cache(65);
  if (n < 1 || n > 64) throw std::invalid_argument("gauss_legendre_cached: n in [1,64]");
  if (cache[n].empty()) cache[n] = gauss_legendre(n);
  return cache[n];
}

// integrate f over [a, b] with an n-point Gauss rule
template <class F>
double integrate_segment(F&& f, double a, double b, int n) {
  const auto& gl = gauss_legendre_cached(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (const auto& p : gl) s += p.w * f(mid + half * p.x);
  return s * half;
}

// tensor-product rule on [0,Lx] x [0,Ly], n points per direction
template <class F>
double integrate_rectangle(F&& f, double Lx, double Ly, int n) {
  const auto& gl = gauss_legendre_cached(n);
  double s = 0.0;
  for (const auto& px : gl)
    for (const auto& py : gl) {
      const double x = 0.5 * Lx * (1.0 + px.x);
      const double y = 0.5 * Ly * (1.0 + py.x);
      s += px.w * py.w * f(x, y);
    }
  return s * 0.25 * Lx * Ly;
}

}  // namespace miscflow
