#pragma once

// Leading Laurent coefficients of quantum integers and quantum factorials
// at the root of unity q_n = exp(2*pi*i/n), kept in log-magnitude form.
//
// Every singular factor {kn} has leading coefficient (-1)^k * kn * u with
// the fixed unit u = -i * q_n^{-1}; such units are counted in phase_units
// instead of being multiplied out, so the remaining coefficient is real.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace sixjvol {

enum class Sign : std::int8_t { negative = -1, indeterminate = 0, positive = 1 };

Sign operator*(Sign a, Sign b);

// Leading coefficient = sign * exp(log_mag) * u^phase_units, attached to
// (q - q_n)^order.
struct LaurentLead {
  static constexpr int kZeroOrder = std::numeric_limits<int>::max();

  int order = 0;
  double log_mag = 0.0;
  Sign sign = Sign::positive;
  int phase_units = 0;

  static LaurentLead one() { return {}; }
  // The identically zero function.
  static LaurentLead zero();
  static LaurentLead make(int order, double log_mag, Sign sign, int phase_units);

  bool is_zero() const;
  // sign * exp(log_mag); zero for the zero function, NaN if sign is indeterminate.
  double real_coefficient() const;

  friend bool operator==(const LaurentLead&, const LaurentLead&) = default;
};

// Prefix data for {m}! at a fixed root order n, answering qfact_lead in O(1).
class SineTable {
 public:
  SineTable(int n, int max_arg);

  // Table sized for the 6j sums of hyperbolic-type inputs: max_arg = ceil(2.6 n).
  static SineTable for_root(int n);

  int n() const { return n_; }
  int max_arg() const { return max_arg_; }

  // Sum over 1 <= j <= m with n not dividing j of ln|2 sin(pi j / n)|.
  double prefix_log(int m) const { return prefix_log_[check(m)]; }
  int zero_count(int m) const { return zero_count_[check(m)]; }
  // Parity of the number of non-singular j <= m with sin(pi j / n) < 0.
  int neg_parity(int m) const { return neg_parity_[check(m)]; }
  // Sum over singular j = kn <= m of ln(kn).
  double sing_mag(int m) const { return sing_mag_[check(m)]; }
  // Parity of the number of singular j = kn <= m with k odd.
  int sing_sign_parity(int m) const { return sing_sign_parity_[check(m)]; }

 private:
  std::size_t check(int m) const;

  int n_;
  int max_arg_;
  std::vector<double> prefix_log_;
  std::vector<int> zero_count_;
  std::vector<std::uint8_t> neg_parity_;
  std::vector<double> sing_mag_;
  std::vector<std::uint8_t> sing_sign_parity_;
};

// {m} = -i (q^{m/2} - q^{-m/2}) at q_n. Requires m >= 0 and n >= 3.
LaurentLead qint_lead(long m, int n);

// {m}! at q_n; throws ErrorCode::range when m exceeds the table.
LaurentLead qfact_lead(int m, const SineTable& table);

LaurentLead lead_mul(const LaurentLead& a, const LaurentLead& b);
LaurentLead lead_div(const LaurentLead& a, const LaurentLead& b);

// Order halves, magnitude square-roots. A negative radicand keeps its
// magnitude but loses its sign.
LaurentLead lead_sqrt_mag(const LaurentLead& a);

inline constexpr double kCancelEpsilon = 1e-9;

struct LeadSum {
  LaurentLead value;
  // Minimal-order terms cancelled below kCancelEpsilon of the largest term;
  // the true leading order may be higher than value.order.
  bool near_cancellation = false;
  // Minimal-order terms did not all share one sign.
  bool mixed_signs = false;
  std::size_t terms_kept = 0;
};

// Streaming signed log-sum-exp over the minimal-order terms.
class LeadAccumulator {
 public:
  void add(const LaurentLead& term);
  LeadSum result() const;

 private:
  int order_ = LaurentLead::kZeroOrder;
  int phase_units_ = 0;
  double max_log_ = -std::numeric_limits<double>::infinity();
  // Sums of exp(log_mag - max_log_) for positive and negative terms.
  double pos_ = 0.0;
  double neg_ = 0.0;
  bool seen_pos_ = false;
  bool seen_neg_ = false;
  std::size_t kept_ = 0;
};

LeadSum lead_add(std::span<const LaurentLead> terms);

}  // namespace sixjvol
