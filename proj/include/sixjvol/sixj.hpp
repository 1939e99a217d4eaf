#pragma once

// Admissible 6-tuples, their real limits, and U_q(sl2) 6j-symbols evaluated
// either as Laurent leads at q_n or directly at a generic point of the
// unit circle.
//
// Entry layout: (b0, b1, b2 / b3, b4, b5) with opposite pairs (b0,b3),
// (b1,b4), (b2,b5). Faces (triples): (0,1,2), (0,4,5), (3,1,5), (3,4,2).

#include <array>
#include <complex>
#include <string>

#include "sixjvol/rootval.hpp"

namespace sixjvol {

// Non-negative half-integer stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }
  static constexpr HalfInteger from_int(int value) { return HalfInteger(2 * value); }
  // Accepts values within 1e-9 of a multiple of 1/2.
  static HalfInteger from_double(double value);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

using SixColors = std::array<HalfInteger, 6>;

inline constexpr std::array<std::array<int, 3>, 4> kFaces{{{0, 1, 2}, {0, 4, 5}, {3, 1, 5}, {3, 4, 2}}};
inline constexpr std::array<std::array<int, 4>, 3> kSquares{{{0, 3, 1, 4}, {0, 3, 2, 5}, {1, 4, 2, 5}}};

bool admissible_triple(HalfInteger b0, HalfInteger b1, HalfInteger b2);

class AdmissibleSix {
 public:
  // Throws ErrorCode::not_admissible naming the first failing triple.
  explicit AdmissibleSix(const SixColors& b);

  static bool is_admissible(const SixColors& b);

  const SixColors& colors() const { return b_; }
  HalfInteger operator[](int i) const { return b_[static_cast<std::size_t>(i)]; }
  // Face sums U0..U3.
  int triangle(int i) const { return u_[static_cast<std::size_t>(i)]; }
  // Square sums R1..R3, indexed 0..2.
  int square(int j) const { return r_[static_cast<std::size_t>(j)]; }
  int max_triangle() const;
  int min_square() const;
  // 2 * (b0 + ... + b5).
  int twice_total() const;

 private:
  SixColors b_;
  std::array<int, 4> u_{};
  std::array<int, 3> r_{};
};

enum class ThetaClass { not_r_admissible, rt_type, hyperbolic_type, r_admissible_other };

std::string to_string(ThetaClass c);

struct ThetaSix {
  std::array<double, 6> theta{};
  ThetaClass cls = ThetaClass::not_r_admissible;
  // pi * face sums and pi * square sums.
  std::array<double, 4> T{};
  std::array<double, 3> Q{};
  double T_max = 0.0;
  double Q_min = 0.0;

  bool hyperbolic() const { return cls == ThetaClass::hyperbolic_type; }
};

// Hyperbolic-type inequalities must hold by at least this margin.
inline constexpr double kHyperbolicMargin = 1e-9;

// Throws ErrorCode::invalid_argument for entries outside [0, 1].
ThetaSix classify_theta(const std::array<double, 6>& theta);

// Delta^2(b0,b1,b2) = {1} {b0+b1-b2}! {b0+b2-b1}! {b1+b2-b0}! / {b0+b1+b2+1}!
LaurentLead delta_sq_lead(HalfInteger b0, HalfInteger b1, HalfInteger b2, const SineTable& table);

struct SixjDetail {
  LaurentLead value;
  // Product of the four Delta^2 leads, before the square root.
  LaurentLead delta_sq_product;
  // The bare z-sum, without the 1/{1} and power-of-i prefactor.
  LeadSum sum;
  int z_min = 0;
  int z_max = 0;
};

SixjDetail sixj_lead_detail(const AdmissibleSix& b, const SineTable& table);
LaurentLead sixj_lead(const AdmissibleSix& b, const SineTable& table);

enum class SumOrder { ascending, descending };

// Direct complex evaluation at |q| = 1, using q^{1/2} = principal sqrt(q).
// Throws ErrorCode::domain if a denominator factorial vanishes.
std::complex<double> sixj_generic_eval(const AdmissibleSix& b, std::complex<double> q,
                                       SumOrder order = SumOrder::ascending);

}  // namespace sixjvol
