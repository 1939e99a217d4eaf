#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sixjvol/errors.hpp"
#include "sixjvol/rootval.hpp"

using namespace sixjvol;
using cd = std::complex<double>;

namespace {

// {m} at q = exp(i t), with q^{1/2} = exp(i t / 2).
cd qint_at(long m, double t) {
  const cd half = std::polar(1.0, 0.5 * t * static_cast<double>(m));
  return cd(0, -1) * (half - 1.0 / half);
}

cd lead_value(const LaurentLead& v, int n) {
  const cd qn = std::polar(1.0, 2 * std::numbers::pi / n);
  const cd u = cd(0, -1) / qn;
  return static_cast<double>(static_cast<int>(v.sign)) * std::exp(v.log_mag) *
         std::pow(u, v.phase_units);
}

}  // namespace

TEST_CASE("qint_lead matches 2 sin(pi m / n) off the singular set") {
  for (int n : {3, 5, 12, 97}) {
    for (long m = 1; m <= 3L * n; ++m) {
      if (m % n == 0) continue;
      const double s = 2.0 * std::sin(std::numbers::pi * static_cast<double>(m) / n);
      const LaurentLead v = qint_lead(m, n);
      CHECK(v.order == 0);
      CHECK(v.phase_units == 0);
      CHECK(v.log_mag == doctest::Approx(std::log(std::abs(s))).epsilon(1e-12));
      CHECK(v.sign == (s < 0 ? Sign::negative : Sign::positive));
    }
  }
}

TEST_CASE("qint_lead at singular arguments agrees with a finite-difference quotient") {
  // Leading coefficient = lim {m}(q) / (q - q_n) along q = q_n exp(i eps).
  for (auto [m, n] : {std::pair{5L, 5}, std::pair{10L, 5}, std::pair{21L, 7}, std::pair{12L, 3}}) {
    const LaurentLead v = qint_lead(m, n);
    CHECK(v.order == 1);
    const double t0 = 2 * std::numbers::pi / n;
    const double eps = 1e-6;
    const cd q = std::polar(1.0, t0 + eps);
    const cd qn = std::polar(1.0, t0);
    const cd fd = qint_at(m, t0 + eps) / (q - qn);
    const cd lead = lead_value(v, n);
    CHECK(std::abs(fd - lead) < 1e-4 * std::abs(lead));
  }
}

TEST_CASE("qint_lead of zero is the zero function") {
  CHECK(qint_lead(0, 7).is_zero());
  CHECK_THROWS_AS(qint_lead(-1, 7), Error);
  CHECK_THROWS_AS(qint_lead(3, 2), Error);
}

TEST_CASE("product of 2 sin(pi j / n) over a period equals n") {
  for (int n : {3, 10, 101, 1000, 4001}) {
    const SineTable table(n, n);
    const LaurentLead f = qfact_lead(n - 1, table);
    CHECK(f.order == 0);
    CHECK(f.sign == Sign::positive);
    CHECK(f.log_mag == doctest::Approx(std::log(static_cast<double>(n))).epsilon(1e-12));
  }
}

TEST_CASE("SineTable agrees with a naive product and with repeated lead_mul") {
  std::mt19937 rng(7);
  for (int n : {3, 8, 31, 200}) {
    const SineTable table = SineTable::for_root(n);
    std::uniform_int_distribution<int> pick(0, table.max_arg());
    for (int trial = 0; trial < 20; ++trial) {
      const int m = pick(rng);
      const LaurentLead f = qfact_lead(m, table);
      LaurentLead prod = LaurentLead::one();
      for (int j = 1; j <= m; ++j) prod = lead_mul(prod, qint_lead(j, n));
      CHECK(f.order == oracle::zero_order(m, n));
      CHECK(f.order == prod.order);
      CHECK(f.phase_units == prod.phase_units);
      CHECK(f.sign == prod.sign);
      double naive = oracle::naive_log_qfact(m, n);
      for (int k = 1; k * n <= m; ++k) naive += std::log(static_cast<double>(k * n));
      CHECK(f.log_mag == doctest::Approx(naive).epsilon(1e-10));
      CHECK(f.log_mag == doctest::Approx(prod.log_mag).epsilon(1e-10));
    }
  }
}

TEST_CASE("SineTable rejects arguments outside its range") {
  const SineTable table(10, 25);
  CHECK_NOTHROW(qfact_lead(25, table));
  try {
    (void)qfact_lead(26, table);
    FAIL("expected a range error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::range);
  }
  CHECK_THROWS_AS(SineTable(2, 10), Error);
}

TEST_CASE("factorial limit: -(pi/n) log|ev {floor(alpha n)}!| -> Lambda(pi alpha)") {
  const int n = 4000;
  const SineTable table(n, 2 * n + 1);
  for (double alpha : {0.1, 0.3, 0.5, 0.8}) {
    const int b = static_cast<int>(std::floor(alpha * n));
    const double target = oracle::lobachevsky_quad(std::numbers::pi * alpha);
    const double plain = -std::numbers::pi / n * qfact_lead(b, table).log_mag;
    const double shifted = -std::numbers::pi / n * qfact_lead(n + b, table).log_mag;
    CHECK(std::abs(plain - target) < 0.02);
    CHECK(std::abs(shifted - target) < 0.02);
  }
}

TEST_CASE("lead arithmetic") {
  const LaurentLead a = LaurentLead::make(1, 2.0, Sign::negative, 1);
  const LaurentLead b = LaurentLead::make(-2, 0.5, Sign::negative, -2);
  const LaurentLead p = lead_mul(a, b);
  CHECK(p == LaurentLead::make(-1, 2.5, Sign::positive, -1));
  CHECK(lead_div(p, b) == a);
  CHECK(lead_mul(a, LaurentLead::zero()).is_zero());
  CHECK(lead_div(LaurentLead::zero(), a).is_zero());
  CHECK_THROWS_AS(lead_div(a, LaurentLead::zero()), Error);
  CHECK(LaurentLead::make(0, -INFINITY, Sign::positive, 0).is_zero());
  CHECK(LaurentLead::zero().real_coefficient() == 0.0);
  CHECK(a.real_coefficient() == doctest::Approx(-std::exp(2.0)));
}

TEST_CASE("lead_sqrt_mag halves order and magnitude") {
  const LaurentLead s = lead_sqrt_mag(LaurentLead::make(-2, 3.0, Sign::positive, -2));
  CHECK(s == LaurentLead::make(-1, 1.5, Sign::positive, -1));
  CHECK(lead_sqrt_mag(LaurentLead::make(2, 3.0, Sign::negative, 2)).sign == Sign::indeterminate);
  try {
    (void)lead_sqrt_mag(LaurentLead::make(-1, 0.0, Sign::positive, -1));
    FAIL("expected a parity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::parity);
  }
}

TEST_CASE("lead_add keeps only the minimal order and sums stably") {
  std::vector<LaurentLead> terms{
      LaurentLead::make(0, 1000.0, Sign::positive, 0),
      LaurentLead::make(-1, 1.0, Sign::positive, -1),
      LaurentLead::make(-1, 1.0 + std::log(2.0), Sign::positive, -1),
      LaurentLead::zero(),
  };
  const LeadSum s = lead_add(terms);
  CHECK(s.value.order == -1);
  CHECK(s.value.log_mag == doctest::Approx(1.0 + std::log(3.0)));
  CHECK(s.terms_kept == 2);
  CHECK_FALSE(s.mixed_signs);
  CHECK_FALSE(s.near_cancellation);

  // Magnitudes far beyond double range.
  std::vector<LaurentLead> huge{LaurentLead::make(0, 5000.0, Sign::positive, 0),
                                LaurentLead::make(0, 5000.0 - std::log(4.0), Sign::negative, 0)};
  const LeadSum h = lead_add(huge);
  CHECK(h.mixed_signs);
  CHECK(h.value.log_mag == doctest::Approx(5000.0 + std::log(0.75)));
  CHECK(h.value.sign == Sign::positive);
}

TEST_CASE("lead_add flags cancellation and rejects inconsistent terms") {
  std::vector<LaurentLead> cancel{LaurentLead::make(0, 10.0, Sign::positive, 0),
                                  LaurentLead::make(0, 10.0, Sign::negative, 0)};
  const LeadSum c = lead_add(cancel);
  CHECK(c.near_cancellation);
  CHECK(c.value.is_zero());

  CHECK(lead_add(std::vector<LaurentLead>{}).value.is_zero());

  std::vector<LaurentLead> phases{LaurentLead::make(1, 0.0, Sign::positive, 1),
                                  LaurentLead::make(1, 0.0, Sign::positive, 3)};
  CHECK_THROWS_AS(lead_add(phases), Error);
  std::vector<LaurentLead> indeterminate{LaurentLead::make(0, 0.0, Sign::indeterminate, 0)};
  CHECK_THROWS_AS(lead_add(indeterminate), Error);
}

TEST_CASE("documented quantum integer and factorial values") {
  const LaurentLead a = qint_lead(1, 4);
  CHECK(std::exp(a.log_mag) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(a.sign == Sign::positive);
  const LaurentLead b = qint_lead(7, 5);
  CHECK(b.sign == Sign::negative);
  CHECK(std::exp(b.log_mag) == doctest::Approx(2 * std::abs(std::sin(7 * std::numbers::pi / 5))));
  CHECK(qint_lead(5, 5) == LaurentLead::make(1, std::log(5.0), Sign::negative, 1));

  for (int n : {5, 7, 12}) {
    const SineTable table(n, 2 * n);
    CHECK(qfact_lead(0, table) == LaurentLead::one());
    const LaurentLead f = qfact_lead(n, table);
    CHECK(f.order == 1);
    CHECK(f.phase_units == 1);
    CHECK(std::exp(f.log_mag) == doctest::Approx(static_cast<double>(n * n)).epsilon(1e-12));
  }
}

TEST_CASE("exp(log_mag) * sign reproduces 2 sin(pi m / n) to 1e-13") {
  for (int n : {3, 4, 7, 50, 333}) {
    for (long m = 1; m < 4L * n; ++m) {
      if (m % n == 0) continue;
      const double s = 2.0 * std::sin(std::numbers::pi * static_cast<double>(m) / n);
      CHECK(std::abs(qint_lead(m, n).real_coefficient() - s) < 1e-13);
    }
  }
}

TEST_CASE("documented lead_add examples and permutation invariance") {
  const double l2 = std::log(2.0), l3 = std::log(3.0);
  std::vector<LaurentLead> a{LaurentLead::make(0, l2, Sign::positive, 0),
                             LaurentLead::make(0, l2, Sign::positive, 0)};
  CHECK(lead_add(a).value.log_mag == doctest::Approx(std::log(4.0)));
  std::vector<LaurentLead> b{LaurentLead::make(0, 0, Sign::positive, 0),
                             LaurentLead::make(1, 99, Sign::positive, 0)};
  CHECK(lead_add(b).value == LaurentLead::make(0, 0, Sign::positive, 0));
  std::vector<LaurentLead> c{LaurentLead::make(0, l3, Sign::positive, 0),
                             LaurentLead::make(0, l2, Sign::negative, 0)};
  const LeadSum cs = lead_add(c);
  CHECK(cs.value.sign == Sign::positive);
  CHECK(std::abs(cs.value.log_mag) < 1e-15);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> mag(-50.0, 50.0);
  std::vector<LaurentLead> terms;
  for (int i = 0; i < 200; ++i) {
    terms.push_back(LaurentLead::make(i % 3 == 0 ? 1 : 0, mag(rng),
                                      i % 5 == 0 ? Sign::negative : Sign::positive, i % 3 == 0 ? 1 : 0));
  }
  const double ref = lead_add(terms).value.log_mag;
  for (int k = 0; k < 10; ++k) {
    std::shuffle(terms.begin(), terms.end(), rng);
    CHECK(std::abs(lead_add(terms).value.log_mag - ref) < 1e-12);
  }
}
