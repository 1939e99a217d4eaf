#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's special-function code.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "sixjvol/sixj.hpp"

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

// -int_0^x ln|2 sin s| ds by tanh-sinh quadrature, x in [0, pi].
inline double lobachevsky_quad(double x) {
  if (x == 0.0) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [](double s) { return std::log(std::abs(2.0 * std::sin(s))); };
  return -integrator.integrate(f, 0.0, x);
}

// Any real x, reduced to [0, pi) by periodicity.
inline double lobachevsky_any(double x) {
  double r = std::fmod(x, kPi);
  if (r < 0) r += kPi;
  return lobachevsky_quad(r);
}

// Li2(z) = -int_0^1 ln(1 - z t) / t dt for |z| <= 1, z != 1.
inline std::complex<double> dilog_quad(std::complex<double> z) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto re = [&](double t) { return -std::log(1.0 - z * t).real() / t; };
  auto im = [&](double t) { return -std::log(1.0 - z * t).imag() / t; };
  return {integrator.integrate(re, 0.0, 1.0), integrator.integrate(im, 0.0, 1.0)};
}

// Direct sum of ln|2 sin(pi j / n)| over non-singular j <= m.
inline double naive_log_qfact(int m, int n) {
  double s = 0.0;
  for (int j = 1; j <= m; ++j) {
    if (j % n != 0) s += std::log(std::abs(2.0 * std::sin(kPi * j / n)));
  }
  return s;
}

// Number of j <= m divisible by n: the zero order of {m}! at q_n.
inline int zero_order(int m, int n) { return m < 0 ? 0 : m / n; }

struct OrderPrediction {
  int delta_sq_order = 0;  // order of the product of the four Delta^2
  int min_term_order = 0;  // minimal order over z-sum terms
};

// Orders obtained by counting zeros of every quantum factorial.
inline OrderPrediction predict_orders(const std::array<int, 6>& twice, int n) {
  constexpr std::array<std::array<int, 3>, 4> faces{{{0, 1, 2}, {0, 4, 5}, {3, 1, 5}, {3, 4, 2}}};
  constexpr std::array<std::array<int, 4>, 3> squares{{{0, 3, 1, 4}, {0, 3, 2, 5}, {1, 4, 2, 5}}};
  OrderPrediction p;
  std::array<int, 4> U{};
  for (std::size_t f = 0; f < 4; ++f) {
    const int a = twice[faces[f][0]], b = twice[faces[f][1]], c = twice[faces[f][2]];
    U[f] = (a + b + c) / 2;
    p.delta_sq_order += zero_order((a + b - c) / 2, n) + zero_order((a + c - b) / 2, n) +
                        zero_order((b + c - a) / 2, n) - zero_order(U[f] + 1, n);
  }
  std::array<int, 3> R{};
  for (std::size_t s = 0; s < 3; ++s) {
    R[s] = 0;
    for (int k : squares[s]) R[s] += twice[k];
    R[s] /= 2;
  }
  int zmin = 0, zmax = std::numeric_limits<int>::max();
  for (int u : U) zmin = std::max(zmin, u);
  for (int r : R) zmax = std::min(zmax, r);
  p.min_term_order = std::numeric_limits<int>::max();
  for (int z = zmin; z <= zmax; ++z) {
    int o = zero_order(z + 1, n);
    for (int u : U) o -= zero_order(z - u, n);
    for (int r : R) o -= zero_order(r - z, n);
    p.min_term_order = std::min(p.min_term_order, o);
  }
  return p;
}

// v(t0, t1, t2) through the quadrature Lambda.
inline double v_triangle_quad(double t0, double t1, double t2) {
  return lobachevsky_any(kPi * (t0 + t1 + t2)) - lobachevsky_any(kPi * (t0 + t1 - t2)) -
         lobachevsky_any(kPi * (t0 + t2 - t1)) - lobachevsky_any(kPi * (t1 + t2 - t0));
}

// All admissible 6-tuples (as doubled colors) with entries in [0, max_twice].
inline std::vector<std::array<int, 6>> admissible_tuples(int max_twice) {
  std::vector<std::array<int, 6>> out;
  std::array<int, 6> t{};
  const auto triple_ok = [](int a, int b, int c) {
    return (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b;
  };
  for (t[0] = 0; t[0] <= max_twice; ++t[0])
    for (t[1] = 0; t[1] <= max_twice; ++t[1])
      for (t[2] = 0; t[2] <= max_twice; ++t[2])
        for (t[3] = 0; t[3] <= max_twice; ++t[3])
          for (t[4] = 0; t[4] <= max_twice; ++t[4])
            for (t[5] = 0; t[5] <= max_twice; ++t[5])
              if (triple_ok(t[0], t[1], t[2]) && triple_ok(t[0], t[4], t[5]) &&
                  triple_ok(t[3], t[1], t[5]) && triple_ok(t[3], t[4], t[2]))
                out.push_back(t);
  return out;
}

inline sixjvol::SixColors to_colors(const std::array<int, 6>& twice) {
  sixjvol::SixColors c{};
  for (std::size_t i = 0; i < 6; ++i) c[i] = sixjvol::HalfInteger::from_twice(twice[i]);
  return c;
}

}  // namespace oracle
