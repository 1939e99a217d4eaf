#include "sixjvol/sixj.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "sixjvol/errors.hpp"

namespace sixjvol {

namespace {

std::string colors_to_string(const SixColors& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ", ";
    s += b[i].is_integer() ? std::to_string(b[i].twice() / 2)
                           : std::to_string(b[i].twice()) + "/2";
  }
  return s + ")";
}

// Integer value of b0 + b1 - b2 for an admissible triple.
int face_arg(HalfInteger b0, HalfInteger b1, HalfInteger b2) {
  return (b0.twice() + b1.twice() - b2.twice()) / 2;
}

}  // namespace

HalfInteger HalfInteger::from_double(double value) {
  const double twice = std::round(2.0 * value);
  if (!std::isfinite(value) || std::abs(2.0 * value - twice) > 2e-9 || twice < 0) {
    throw Error(ErrorCode::invalid_argument,
                "color " + std::to_string(value) + " is not a non-negative half-integer");
  }
  return HalfInteger(static_cast<int>(twice));
}

bool admissible_triple(HalfInteger b0, HalfInteger b1, HalfInteger b2) {
  const int x = b0.twice();
  const int y = b1.twice();
  const int z = b2.twice();
  if (x < 0 || y < 0 || z < 0) return false;
  if (x + y < z || x + z < y || y + z < x) return false;
  return (x + y + z) % 2 == 0;
}

bool AdmissibleSix::is_admissible(const SixColors& b) {
  return std::all_of(kFaces.begin(), kFaces.end(), [&](const auto& f) {
    return admissible_triple(b[f[0]], b[f[1]], b[f[2]]);
  });
}

AdmissibleSix::AdmissibleSix(const SixColors& b) : b_(b) {
  for (std::size_t i = 0; i < kFaces.size(); ++i) {
    const auto& f = kFaces[i];
    if (!admissible_triple(b[f[0]], b[f[1]], b[f[2]])) {
      throw Error(ErrorCode::not_admissible,
                  "6-tuple " + colors_to_string(b) + " fails admissibility on triple (b" +
                      std::to_string(f[0]) + ", b" + std::to_string(f[1]) + ", b" +
                      std::to_string(f[2]) + ")");
    }
    u_[i] = (b[f[0]].twice() + b[f[1]].twice() + b[f[2]].twice()) / 2;
  }
  for (std::size_t j = 0; j < kSquares.size(); ++j) {
    int twice = 0;
    for (int k : kSquares[j]) twice += b[static_cast<std::size_t>(k)].twice();
    r_[j] = twice / 2;
  }
}

int AdmissibleSix::max_triangle() const { return *std::max_element(u_.begin(), u_.end()); }

int AdmissibleSix::min_square() const { return *std::min_element(r_.begin(), r_.end()); }

int AdmissibleSix::twice_total() const {
  int t = 0;
  for (auto v : b_) t += v.twice();
  return t;
}

std::string to_string(ThetaClass c) {
  switch (c) {
    case ThetaClass::not_r_admissible: return "not-R-admissible";
    case ThetaClass::rt_type: return "RT-type";
    case ThetaClass::hyperbolic_type: return "hyperbolic-type";
    case ThetaClass::r_admissible_other: return "R-admissible-other";
  }
  return "unknown";
}

ThetaSix classify_theta(const std::array<double, 6>& theta) {
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!(theta[i] >= 0.0 && theta[i] <= 1.0)) {
      throw Error(ErrorCode::invalid_argument,
                  "theta[" + std::to_string(i) + "] = " + std::to_string(theta[i]) +
                      " outside [0, 1]");
    }
  }
  ThetaSix out;
  out.theta = theta;
  for (std::size_t i = 0; i < kFaces.size(); ++i) {
    const auto& f = kFaces[i];
    out.T[i] = std::numbers::pi * (theta[f[0]] + theta[f[1]] + theta[f[2]]);
  }
  for (std::size_t j = 0; j < kSquares.size(); ++j) {
    double s = 0.0;
    for (int k : kSquares[j]) s += theta[static_cast<std::size_t>(k)];
    out.Q[j] = std::numbers::pi * s;
  }
  out.T_max = *std::max_element(out.T.begin(), out.T.end());
  out.Q_min = *std::min_element(out.Q.begin(), out.Q.end());

  bool r_admissible = true;
  bool rt = true;
  bool hyperbolic = true;
  constexpr double eps = kHyperbolicMargin;
  for (const auto& f : kFaces) {
    const double a = theta[f[0]];
    const double b = theta[f[1]];
    const double c = theta[f[2]];
    const std::array<double, 3> diffs{a + b - c, a + c - b, b + c - a};
    const double sum = a + b + c;
    for (double d : diffs) {
      if (!(d > 0.0)) r_admissible = false;
      if (!(d > eps && d < 1.0 - eps)) hyperbolic = false;
    }
    if (!(sum > 1.0 + eps && sum < 2.0 - eps)) hyperbolic = false;
    if (!(a < 0.5 && b < 0.5 && c < 0.5 && sum < 1.0)) rt = false;
  }
  if (!r_admissible) {
    out.cls = ThetaClass::not_r_admissible;
  } else if (hyperbolic) {
    out.cls = ThetaClass::hyperbolic_type;
  } else if (rt) {
    out.cls = ThetaClass::rt_type;
  } else {
    out.cls = ThetaClass::r_admissible_other;
  }
  return out;
}

LaurentLead delta_sq_lead(HalfInteger b0, HalfInteger b1, HalfInteger b2, const SineTable& table) {
  if (!admissible_triple(b0, b1, b2)) {
    throw Error(ErrorCode::not_admissible, "triple (" + std::to_string(b0.value()) + ", " +
                                               std::to_string(b1.value()) + ", " +
                                               std::to_string(b2.value()) + ") is not admissible");
  }
  const int total = (b0.twice() + b1.twice() + b2.twice()) / 2;
  LaurentLead num = qint_lead(1, table.n());
  num = lead_mul(num, qfact_lead(face_arg(b0, b1, b2), table));
  num = lead_mul(num, qfact_lead(face_arg(b0, b2, b1), table));
  num = lead_mul(num, qfact_lead(face_arg(b1, b2, b0), table));
  return lead_div(num, qfact_lead(total + 1, table));
}

SixjDetail sixj_lead_detail(const AdmissibleSix& b, const SineTable& table) {
  SixjDetail out;
  LaurentLead deltas = LaurentLead::one();
  for (const auto& f : kFaces) {
    deltas = lead_mul(deltas, delta_sq_lead(b[f[0]], b[f[1]], b[f[2]], table));
  }
  out.delta_sq_product = deltas;
  const LaurentLead delta_part = lead_sqrt_mag(deltas);

  out.z_min = b.max_triangle();
  out.z_max = b.min_square();
  LeadAccumulator acc;
  for (int z = out.z_min; z <= out.z_max; ++z) {
    LaurentLead term = qfact_lead(z + 1, table);
    for (int i = 0; i < 4; ++i) term = lead_div(term, qfact_lead(z - b.triangle(i), table));
    for (int j = 0; j < 3; ++j) term = lead_div(term, qfact_lead(b.square(j) - z, table));
    if (z & 1) term.sign = term.sign * Sign::negative;
    acc.add(term);
  }
  out.sum = acc.result();

  // (sqrt(-1))^{-2 sum b} / {1}; an odd power of i leaves a purely imaginary
  // unit, so only the magnitude survives.
  LaurentLead value = lead_div(lead_mul(delta_part, out.sum.value), qint_lead(1, table.n()));
  if (!value.is_zero()) {
    switch (((b.twice_total() % 4) + 4) % 4) {
      case 0: break;
      case 2: value.sign = value.sign * Sign::negative; break;
      default: value.sign = Sign::indeterminate; break;
    }
  }
  out.value = value;
  return out;
}

LaurentLead sixj_lead(const AdmissibleSix& b, const SineTable& table) {
  return sixj_lead_detail(b, table).value;
}

std::complex<double> sixj_generic_eval(const AdmissibleSix& b, std::complex<double> q,
                                       SumOrder order) {
  using cd = std::complex<double>;
  if (std::abs(std::abs(q) - 1.0) > 1e-12) {
    throw Error(ErrorCode::domain, "generic evaluation requires |q| = 1");
  }
  const cd h = std::sqrt(q);
  const double h_mod = std::abs(h);
  const double h_arg = std::arg(h);
  const cd minus_i(0.0, -1.0);
  auto qint = [&](int m) {
    return minus_i * (std::polar(std::pow(h_mod, m), m * h_arg) -
                      std::polar(std::pow(h_mod, -m), -m * h_arg));
  };
  const cd one = qint(1);
  if (std::abs(one) < 1e-300) throw Error(ErrorCode::domain, "{1} vanishes at q");

  const int top = b.min_square() + 1;
  std::vector<cd> fact(static_cast<std::size_t>(top) + 1);
  std::vector<bool> fact_zero(fact.size(), false);
  constexpr double kVanish = 1e-13;
  fact[0] = 1.0;
  for (int m = 1; m <= top; ++m) {
    const cd bracket = qint(m) / one;
    const auto i = static_cast<std::size_t>(m);
    fact[i] = fact[i - 1] * bracket;
    fact_zero[i] = fact_zero[i - 1] || std::abs(qint(m)) < kVanish;
  }
  auto denom = [&](int m) {
    if (fact_zero[static_cast<std::size_t>(m)]) {
      throw Error(ErrorCode::domain,
                  "quantum factorial [" + std::to_string(m) + "]! vanishes at q");
    }
    return fact[static_cast<std::size_t>(m)];
  };

  cd delta_product = 1.0;
  for (const auto& f : kFaces) {
    const HalfInteger x = b[f[0]];
    const HalfInteger y = b[f[1]];
    const HalfInteger z = b[f[2]];
    const int total = (x.twice() + y.twice() + z.twice()) / 2;
    const cd sq = fact[static_cast<std::size_t>(face_arg(x, y, z))] *
                  fact[static_cast<std::size_t>(face_arg(x, z, y))] *
                  fact[static_cast<std::size_t>(face_arg(y, z, x))] / denom(total + 1);
    delta_product *= std::sqrt(sq);
  }

  const int lo = b.max_triangle();
  const int hi = b.min_square();
  cd sum = 0.0;
  auto add_term = [&](int z) {
    cd den = 1.0;
    for (int i = 0; i < 4; ++i) den *= denom(z - b.triangle(i));
    for (int j = 0; j < 3; ++j) den *= denom(b.square(j) - z);
    const cd term = fact[static_cast<std::size_t>(z + 1)] / den;
    sum += (z & 1) ? -term : term;
  };
  if (order == SumOrder::ascending) {
    for (int z = lo; z <= hi; ++z) add_term(z);
  } else {
    for (int z = hi; z >= lo; --z) add_term(z);
  }

  // (sqrt(-1))^{-2 sum b} = i^{-m}.
  static const std::array<cd, 4> kInversePowersOfI{cd(1, 0), cd(0, -1), cd(-1, 0), cd(0, 1)};
  const cd prefactor = kInversePowersOfI[static_cast<std::size_t>(b.twice_total() % 4)];
  return prefactor * delta_product * sum;
}

}  // namespace sixjvol
