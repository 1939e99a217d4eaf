#include "sixjvol/hypgeom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bernoulli.hpp>

#include "sixjvol/errors.hpp"

namespace sixjvol {

namespace {

constexpr double kPi = std::numbers::pi;

// |B_2k| / (2k (2k+1) (2k)!), the Taylor coefficients of the Clausen
// function beyond its logarithmic part.
struct ClausenCoefficients {
  static constexpr int kTerms = 32;
  std::array<double, kTerms> c{};
  ClausenCoefficients() {
    double fact = 1.0;  // (2k)!
    for (int k = 1; k <= kTerms; ++k) {
      fact *= (2.0 * k - 1.0) * (2.0 * k);
      const double b = std::abs(boost::math::bernoulli_b2n<double>(k));
      c[static_cast<std::size_t>(k - 1)] = b / (2.0 * k * (2.0 * k + 1.0) * fact);
    }
  }
};

// B_2k / (2k+1)!, for Li2(z) = sum_k B_k u^{k+1} / (k+1)! with u = -log(1-z).
struct DilogCoefficients {
  static constexpr int kTerms = 24;
  std::array<double, kTerms> c{};
  DilogCoefficients() {
    double fact = 1.0;  // (2k+1)!
    for (int k = 1; k <= kTerms; ++k) {
      fact *= (2.0 * k) * (2.0 * k + 1.0);
      c[static_cast<std::size_t>(k - 1)] = boost::math::bernoulli_b2n<double>(k) / fact;
    }
  }
};

// Cl2(theta) for |theta| <= pi.
double clausen_reduced(double theta) {
  static const ClausenCoefficients coeffs;
  if (theta == 0.0) return 0.0;
  const double t2 = theta * theta;
  double power = theta * t2;
  double tail = 0.0;
  for (double c : coeffs.c) {
    const double term = c * power;
    tail += term;
    if (std::abs(term) < 1e-18 * std::abs(theta)) break;
    power *= t2;
  }
  return theta - theta * std::log(std::abs(theta)) + tail;
}

cplx bernoulli_series(cplx u) {
  static const DilogCoefficients coeffs;
  const cplx u2 = u * u;
  cplx power = u * u2;
  cplx sum = u - 0.25 * u2;
  for (double c : coeffs.c) {
    const cplx term = c * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    power *= u2;
  }
  return sum;
}

}  // namespace

double lobachevsky(double x) {
  // Reduce to (-pi/2, pi/2]; Lambda(x) = Cl2(2x) / 2.
  double r = std::fmod(x, kPi);
  if (r > 0.5 * kPi) r -= kPi;
  if (r <= -0.5 * kPi) r += kPi;
  return 0.5 * clausen_reduced(2.0 * r);
}

cplx dilog(cplx z) {
  constexpr double kPi2Over6 = kPi * kPi / 6.0;
  const double nz = std::norm(z);
  if (!(nz <= (1.0 + 1e-12) * (1.0 + 1e-12))) {
    throw Error(ErrorCode::domain, "dilog argument outside the closed unit disk");
  }
  if (nz == 0.0) return 0.0;
  if (z == cplx(1.0, 0.0)) return kPi2Over6;
  const double rz = z.real();
  if (rz <= 0.5 || nz > 2.0 * rz) {
    return bernoulli_series(-std::log(1.0 - z));
  }
  // Reflection: Li2(z) = pi^2/6 - log(z) log(1-z) - Li2(1-z).
  const cplx u = -std::log(z);
  return -bernoulli_series(u) + kPi2Over6 + u * std::log(1.0 - z);
}

double vol_oct() { return 8.0 * lobachevsky(0.25 * kPi); }

double v_triangle(double t0, double t1, double t2) {
  return lobachevsky(kPi * (t0 + t1 + t2)) - lobachevsky(kPi * (t0 + t1 - t2)) -
         lobachevsky(kPi * (t0 + t2 - t1)) - lobachevsky(kPi * (t1 + t2 - t0));
}

double saddle_log_g(const ThetaSix& theta, double x) {
  double num = std::log(std::sin(2.0 * kPi - x));
  for (double q : theta.Q) num += std::log(std::sin(q - x));
  double den = 0.0;
  for (double t : theta.T) den += std::log(std::sin(x - t));
  return num - den;
}

double saddle_F(const ThetaSix& theta, double x) {
  double s = lobachevsky(2.0 * kPi - x);
  for (double q : theta.Q) s += lobachevsky(q - x);
  for (double t : theta.T) s += lobachevsky(x - t);
  return 2.0 * s;
}

SaddleData solve_z0(const ThetaSix& theta) {
  if (!theta.hyperbolic()) {
    throw Error(ErrorCode::not_hyperbolic,
                "saddle point requires hyperbolic-type theta, got " + to_string(theta.cls));
  }
  SaddleData out;
  out.theta = theta;
  constexpr double kShrink = 1e-9;
  double lo = theta.T_max + kShrink;
  double hi = std::min(2.0 * kPi, theta.Q_min) - kShrink;
  out.lo = lo;
  out.hi = hi;
  if (!(saddle_log_g(theta, lo) > 0.0 && saddle_log_g(theta, hi) < 0.0)) {
    throw Error(ErrorCode::solver, "ln g does not change sign on the saddle interval");
  }
  int it = 0;
  for (; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (saddle_log_g(theta, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.iterations = it;
  out.z0 = 0.5 * (lo + hi);
  out.F_at_z0 = saddle_F(theta, out.z0);
  const auto& t = theta.theta;
  for (const auto& f : kFaces) out.v_sum += v_triangle(t[f[0]], t[f[1]], t[f[2]]);
  return out;
}

double volume_lob(const ThetaSix& theta) {
  const SaddleData s = solve_z0(theta);
  return s.F_at_z0 + s.v_sum;
}

std::array<double, 6> angles_from_theta(const std::array<double, 6>& theta) {
  std::array<double, 6> alpha{};
  for (std::size_t i = 0; i < 6; ++i) alpha[i] = std::abs(2.0 * kPi * (theta[i] - 0.5));
  return alpha;
}

bool tetra_exists(const std::array<double, 6>& alpha) {
  for (std::size_t i = 0; i < 6; ++i) {
    if (!(alpha[i] >= 0.0 && alpha[i] < kPi)) {
      throw Error(ErrorCode::invalid_argument,
                  "dihedral angle alpha[" + std::to_string(i) + "] = " +
                      std::to_string(alpha[i]) + " outside [0, pi)");
    }
  }
  return std::all_of(kFaces.begin(), kFaces.end(), [&](const auto& f) {
    return alpha[f[0]] + alpha[f[1]] + alpha[f[2]] < kPi;
  });
}

TruncTetra::TruncTetra(const std::array<double, 6>& alpha) : alpha_(alpha) {
  if (!tetra_exists(alpha)) {
    throw Error(ErrorCode::domain,
                "no truncated tetrahedron: some face has angle sum >= pi");
  }
  for (std::size_t i = 0; i < 6; ++i) A_[i] = std::polar(1.0, alpha[i]);
}

cplx U_of_z(cplx z, const TruncTetra& T) {
  const auto& A = T.A();
  const cplx pos = dilog(z) + dilog(z * A[0] * A[1] * A[3] * A[4]) +
                   dilog(z * A[0] * A[2] * A[3] * A[5]) + dilog(z * A[2] * A[1] * A[5] * A[4]);
  const cplx neg = dilog(-z * A[0] * A[1] * A[2]) + dilog(-z * A[0] * A[4] * A[5]) +
                   dilog(-z * A[3] * A[1] * A[5]) + dilog(-z * A[3] * A[4] * A[2]);
  return 0.5 * (pos - neg);
}

namespace {

cplx delta_hat_face(cplx a, cplx b, cplx c) {
  const cplx la = std::log(a);
  const cplx lb = std::log(b);
  const cplx lc = std::log(c);
  return -0.25 * (dilog(-a * b / c) + dilog(-b * c / a) + dilog(-a * c / b) +
                  dilog(-1.0 / (a * b * c)) + la * la + lb * lb + lc * lc);
}

}  // namespace

cplx delta_hat(const TruncTetra& T) {
  const auto& A = T.A();
  cplx s = 0.0;
  for (const auto& f : kFaces) s += delta_hat_face(A[f[0]], A[f[1]], A[f[2]]);
  s += 0.5 * (std::log(A[0]) * std::log(A[3]) + std::log(A[1]) * std::log(A[4]) +
              std::log(A[2]) * std::log(A[5]));
  return s;
}

CriticalPoints solve_z_pm(const TruncTetra& T) {
  const auto& A = T.A();
  const std::array<cplx, 4> e{A[0] * A[1] * A[3] * A[4], A[0] * A[2] * A[3] * A[5],
                              A[2] * A[1] * A[5] * A[4], cplx(1.0, 0.0)};
  const std::array<cplx, 4> f{A[0] * A[1] * A[2], A[0] * A[4] * A[5], A[3] * A[1] * A[5],
                              A[3] * A[4] * A[2]};
  // Elementary symmetric polynomials of degree 1..3.
  auto elementary = [](const std::array<cplx, 4>& x) {
    std::array<cplx, 4> s{cplx(1.0, 0.0), 0.0, 0.0, 0.0};
    for (const cplx& v : x) {
      for (int k = 3; k >= 1; --k) s[static_cast<std::size_t>(k)] += s[static_cast<std::size_t>(k - 1)] * v;
    }
    return s;
  };
  const auto E = elementary(e);
  const auto F = elementary(f);
  // prod(1 - z e) - prod(1 + z f) = z (c + b z + a z^2); the constant and
  // quartic coefficients cancel identically.
  const cplx a = -E[3] - F[3];
  const cplx b = E[2] - F[2];
  const cplx c = -E[1] - F[1];
  if (std::abs(a) < 1e-12) throw Error(ErrorCode::degenerate, "critical-point quadratic has vanishing leading coefficient");
  const cplx disc = b * b - 4.0 * a * c;
  if (std::abs(disc) < 1e-12 * (std::norm(b) + std::abs(4.0 * a * c))) {
    throw Error(ErrorCode::degenerate, "critical-point quadratic has a double root");
  }
  cplx s = std::sqrt(disc);
  if (std::real(std::conj(b) * s) < 0.0) s = -s;
  const cplx r1 = -(b + s) / (2.0 * a);
  const cplx r2 = c / (a * r1);
  // For truncated tetrahedra both roots often lie in the upper half-plane,
  // so the roots are told apart by the sign of Im(U(z) + delta_hat).
  const cplx dh = delta_hat(T);
  const double v1 = (U_of_z(r1, T) + dh).imag();
  const double v2 = (U_of_z(r2, T) + dh).imag();
  if (v1 == v2) throw Error(ErrorCode::degenerate, "critical points give equal volume forms");
  return v1 > v2 ? CriticalPoints{r1, r2} : CriticalPoints{r2, r1};
}

MyVolume volume_my_detail(const TruncTetra& T) {
  MyVolume out;
  out.z = solve_z_pm(T);
  const cplx dh = delta_hat(T);
  out.from_plus = (U_of_z(out.z.z_plus, T) + dh).imag();
  out.from_minus = -(U_of_z(out.z.z_minus, T) + dh).imag();
  return out;
}

double volume_my(const TruncTetra& T) {
  const MyVolume v = volume_my_detail(T);
  if (std::abs(v.from_plus - v.from_minus) > 1e-9) {
    throw Error(ErrorCode::solver, "Murakami-Yano forms disagree: " +
                                       std::to_string(v.from_plus) + " vs " +
                                       std::to_string(v.from_minus));
  }
  return v.from_plus;
}

double dblock_volume(const std::array<double, 6>& u) {
  std::array<double, 6> half{};
  for (std::size_t i = 0; i < 6; ++i) {
    if (!(u[i] >= 0.0)) {
      throw Error(ErrorCode::invalid_argument, "D-block angle u[" + std::to_string(i) + "] must be >= 0");
    }
    half[i] = 0.5 * u[i];
  }
  if (!tetra_exists(half)) {
    throw Error(ErrorCode::domain, "D-block angles do not define a truncated tetrahedron");
  }
  return 2.0 * volume_my(TruncTetra(half));
}

}  // namespace sixjvol
