#pragma once

// Special functions and hyperbolic volumes of truncated tetrahedra.
//
// Two independent routes to the same volume:
//  * volume_lob: the saddle-point value F(z0) plus the four face terms,
//    expressed with the Lobachevsky function only;
//  * volume_my: the Murakami-Yano dilogarithm formula evaluated at the
//    non-trivial critical points z+ and z-.
// For hyperbolic-type theta, volume_lob(theta) = 2 * volume_my(alpha) with
// alpha_i = |2 pi (theta_i - 1/2)|.

#include <array>
#include <complex>
#include <utility>

#include "sixjvol/sixj.hpp"

namespace sixjvol {

using cplx = std::complex<double>;

// Lambda(x) = -int_0^x ln|2 sin s| ds. Pi-periodic and odd.
double lobachevsky(double x);

// Principal-branch Li2 on the closed unit disk; ErrorCode::domain outside
// |z| <= 1 + 1e-12.
cplx dilog(cplx z);

// Volume of the regular ideal octahedron, 8 Lambda(pi/4).
double vol_oct();

// Lambda(pi(a+b+c)) - Lambda(pi(a+b-c)) - Lambda(pi(a+c-b)) - Lambda(pi(b+c-a)).
double v_triangle(double t0, double t1, double t2);

struct SaddleData {
  ThetaSix theta;
  double z0 = 0.0;
  double F_at_z0 = 0.0;
  double v_sum = 0.0;
  // Search interval (T_max, min(2 pi, Q_min)) after endpoint shrinking.
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
};

// ln g(x); g is the ratio of the four "square" sines (including 2 pi - x)
// to the four "triangle" sines.
double saddle_log_g(const ThetaSix& theta, double x);
// F(x) = 2 (Lambda(2pi - x) + sum_j Lambda(Q_j - x) + sum_i Lambda(x - T_i)).
double saddle_F(const ThetaSix& theta, double x);

// Unique root of ln g = 0 by bisection. Throws ErrorCode::not_hyperbolic.
SaddleData solve_z0(const ThetaSix& theta);

double volume_lob(const ThetaSix& theta);

// alpha_i = |2 pi (theta_i - 1/2)|.
std::array<double, 6> angles_from_theta(const std::array<double, 6>& theta);

// True iff every face triple (0,1,2), (0,4,5), (3,1,5), (3,4,2) has angle
// sum < pi. Throws ErrorCode::invalid_argument for angles outside [0, pi).
bool tetra_exists(const std::array<double, 6>& alpha);

class TruncTetra {
 public:
  // Throws ErrorCode::invalid_argument for angles outside [0, pi) and
  // ErrorCode::domain if no truncated tetrahedron has these angles.
  explicit TruncTetra(const std::array<double, 6>& alpha);

  const std::array<double, 6>& alpha() const { return alpha_; }
  // A_i = exp(i alpha_i).
  const std::array<cplx, 6>& A() const { return A_; }

 private:
  std::array<double, 6> alpha_;
  std::array<cplx, 6> A_;
};

cplx U_of_z(cplx z, const TruncTetra& T);
cplx delta_hat(const TruncTetra& T);

struct CriticalPoints {
  cplx z_plus;
  cplx z_minus;
};

// Non-trivial roots of prod(1 - z e_i) = prod(1 + z f_j). z_plus is the root
// with Im(U(z) + delta_hat) > 0, z_minus the other. Throws
// ErrorCode::degenerate on a vanishing leading coefficient or discriminant.
CriticalPoints solve_z_pm(const TruncTetra& T);

struct MyVolume {
  double from_plus = 0.0;   // Im(U(z+) + delta_hat)
  double from_minus = 0.0;  // -Im(U(z-) + delta_hat)
  CriticalPoints z;
};

MyVolume volume_my_detail(const TruncTetra& T);

// Im(U(z+) + delta_hat). Throws ErrorCode::solver if the z- form disagrees
// by more than 1e-9.
double volume_my(const TruncTetra& T);

// Volume of the double of T(u/2). Throws ErrorCode::domain if it does not exist.
double dblock_volume(const std::array<double, 6>& u);

}  // namespace sixjvol
