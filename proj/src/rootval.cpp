#include "sixjvol/rootval.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "sixjvol/errors.hpp"

namespace sixjvol {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Sign parity_sign(int parity) { return (parity & 1) ? Sign::negative : Sign::positive; }

// |2 sin(pi j / n)| and whether sin(pi j / n) < 0, for j not divisible by n.
// Reduction to the first half-period keeps full relative accuracy near zeros.
struct SineValue {
  double log_abs;
  bool negative;
};

SineValue sine_value(long j, int n) {
  const long two_n = 2L * n;
  long r = j % two_n;
  if (r < 0) r += two_n;
  const bool negative = r > n;
  long s = r % n;
  if (2 * s > n) s = n - s;
  const double v = 2.0 * std::sin(std::numbers::pi * static_cast<double>(s) / n);
  return {std::log(v), negative};
}

}  // namespace

Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b));
}

LaurentLead LaurentLead::zero() {
  return {kZeroOrder, kNegInf, Sign::positive, 0};
}

LaurentLead LaurentLead::make(int order, double log_mag, Sign sign, int phase_units) {
  if (std::isinf(log_mag) && log_mag < 0) return zero();
  return {order, log_mag, sign, phase_units};
}

bool LaurentLead::is_zero() const { return order == kZeroOrder; }

double LaurentLead::real_coefficient() const {
  if (is_zero()) return 0.0;
  if (sign == Sign::indeterminate) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<int>(sign) * std::exp(log_mag);
}

SineTable::SineTable(int n, int max_arg) : n_(n), max_arg_(max_arg) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "root order n must be >= 3");
  if (max_arg < 0) throw Error(ErrorCode::invalid_argument, "max_arg must be >= 0");
  const auto size = static_cast<std::size_t>(max_arg) + 1;
  prefix_log_.resize(size);
  zero_count_.resize(size);
  neg_parity_.resize(size);
  sing_mag_.resize(size);
  sing_sign_parity_.resize(size);

  prefix_log_[0] = 0.0;
  zero_count_[0] = 0;
  neg_parity_[0] = 0;
  sing_mag_[0] = 0.0;
  sing_sign_parity_[0] = 0;

  // Neumaier-compensated running sum; tables reach ~10^4 entries.
  double sum = 0.0;
  double comp = 0.0;
  for (int m = 1; m <= max_arg; ++m) {
    const auto i = static_cast<std::size_t>(m);
    zero_count_[i] = zero_count_[i - 1];
    neg_parity_[i] = neg_parity_[i - 1];
    sing_mag_[i] = sing_mag_[i - 1];
    sing_sign_parity_[i] = sing_sign_parity_[i - 1];
    if (m % n == 0) {
      const int k = m / n;
      zero_count_[i] += 1;
      sing_mag_[i] += std::log(static_cast<double>(m));
      if (k & 1) sing_sign_parity_[i] ^= 1;
    } else {
      const SineValue s = sine_value(m, n);
      const double t = sum + s.log_abs;
      if (std::abs(sum) >= std::abs(s.log_abs)) {
        comp += (sum - t) + s.log_abs;
      } else {
        comp += (s.log_abs - t) + sum;
      }
      sum = t;
      if (s.negative) neg_parity_[i] ^= 1;
    }
    prefix_log_[i] = sum + comp;
  }
}

SineTable SineTable::for_root(int n) {
  return SineTable(n, static_cast<int>(std::ceil(2.6 * n)));
}

std::size_t SineTable::check(int m) const {
  if (m < 0 || m > max_arg_) {
    throw Error(ErrorCode::range, "factorial argument " + std::to_string(m) +
                                      " outside sine table range [0, " +
                                      std::to_string(max_arg_) + "]");
  }
  return static_cast<std::size_t>(m);
}

LaurentLead qint_lead(long m, int n) {
  if (n < 3) throw Error(ErrorCode::invalid_argument, "root order n must be >= 3");
  if (m < 0) throw Error(ErrorCode::invalid_argument, "quantum integer argument must be >= 0");
  if (m == 0) return LaurentLead::zero();
  if (m % n != 0) {
    const SineValue s = sine_value(m, n);
    return {0, s.log_abs, s.negative ? Sign::negative : Sign::positive, 0};
  }
  const long k = m / n;
  return {1, std::log(static_cast<double>(m)), (k & 1) ? Sign::negative : Sign::positive, 1};
}

LaurentLead qfact_lead(int m, const SineTable& table) {
  const int zeros = table.zero_count(m);
  return {zeros, table.prefix_log(m) + table.sing_mag(m),
          parity_sign(table.neg_parity(m) + table.sing_sign_parity(m)), zeros};
}

LaurentLead lead_mul(const LaurentLead& a, const LaurentLead& b) {
  if (a.is_zero() || b.is_zero()) return LaurentLead::zero();
  return {a.order + b.order, a.log_mag + b.log_mag, a.sign * b.sign,
          a.phase_units + b.phase_units};
}

LaurentLead lead_div(const LaurentLead& a, const LaurentLead& b) {
  if (b.is_zero()) throw Error(ErrorCode::division_by_zero, "division by the zero function");
  if (a.is_zero()) return LaurentLead::zero();
  return {a.order - b.order, a.log_mag - b.log_mag, a.sign * b.sign,
          a.phase_units - b.phase_units};
}

LaurentLead lead_sqrt_mag(const LaurentLead& a) {
  if (a.is_zero()) return a;
  if (a.order % 2 != 0 || a.phase_units % 2 != 0) {
    throw Error(ErrorCode::parity, "square root of a Laurent lead with odd order (" +
                                       std::to_string(a.order) + ") or odd phase (" +
                                       std::to_string(a.phase_units) + ")");
  }
  return {a.order / 2, 0.5 * a.log_mag,
          a.sign == Sign::positive ? Sign::positive : Sign::indeterminate, a.phase_units / 2};
}

void LeadAccumulator::add(const LaurentLead& term) {
  if (term.is_zero() || term.order > order_) return;
  if (term.order < order_) {
    *this = LeadAccumulator{};
    order_ = term.order;
    phase_units_ = term.phase_units;
  } else if (term.phase_units != phase_units_) {
    throw Error(ErrorCode::phase_mismatch,
                "minimal-order terms carry phase units " + std::to_string(phase_units_) +
                    " and " + std::to_string(term.phase_units));
  }
  if (term.sign == Sign::indeterminate) {
    throw Error(ErrorCode::indeterminate_sign, "cannot sum a term of indeterminate sign");
  }
  if (term.log_mag > max_log_) {
    const double rescale = std::exp(max_log_ - term.log_mag);
    pos_ *= rescale;
    neg_ *= rescale;
    max_log_ = term.log_mag;
  }
  const double w = std::exp(term.log_mag - max_log_);
  if (term.sign == Sign::positive) {
    pos_ += w;
    seen_pos_ = true;
  } else {
    neg_ += w;
    seen_neg_ = true;
  }
  ++kept_;
}

LeadSum LeadAccumulator::result() const {
  LeadSum out;
  out.terms_kept = kept_;
  if (order_ == LaurentLead::kZeroOrder) {
    out.value = LaurentLead::zero();
    return out;
  }
  out.mixed_signs = seen_pos_ && seen_neg_;
  // Scaled units: the largest term has weight 1.
  const double s = pos_ - neg_;
  out.near_cancellation = std::abs(s) < kCancelEpsilon;
  if (s == 0.0) {
    out.value = LaurentLead::zero();
    return out;
  }
  out.value = {order_, max_log_ + std::log(std::abs(s)),
               s > 0 ? Sign::positive : Sign::negative, phase_units_};
  return out;
}

LeadSum lead_add(std::span<const LaurentLead> terms) {
  LeadAccumulator acc;
  for (const auto& t : terms) acc.add(t);
  return acc.result();
}

}  // namespace sixjvol
