#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>

#include "sixjvol/errors.hpp"
#include "sixjvol/experiments.hpp"
#include "sixjvol/hypgeom.hpp"

using namespace sixjvol;

namespace {

const std::array<double, 6> kHalf{0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
const std::array<double, 6> kGeneric{0.55, 0.6, 0.65, 0.6, 0.55, 0.6};

ShadowLink g1() { return {1, 6, {{0, 1, 2, 3, 4, 5}}}; }

void check_sequence(const std::array<double, 6>& theta, int n) {
  const AdmissibleSix b = color_sequence(theta, n);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(std::abs(b.colors()[i].value() / n - theta[i]) <= 1.5 / n);
  }
}

}  // namespace

TEST_CASE("color_sequence examples") {
  for (int n : {7, 11, 101, 1601}) {
    const AdmissibleSix b = color_sequence(kHalf, n);
    for (auto c : b.colors()) {
      CHECK((c.twice() == n || c.twice() == n + 1));
    }
    for (const auto& f : kFaces) {
      CHECK((b.colors()[f[0]].twice() + b.colors()[f[1]].twice() + b.colors()[f[2]].twice()) % 2 == 0);
    }
    check_sequence(kHalf, n);
  }
  const AdmissibleSix b = color_sequence({0.6, 0.6, 0.6, 0.6, 0.6, 0.6}, 100);
  for (auto c : b.colors()) CHECK(c == HalfInteger::from_int(60));
  check_sequence(kGeneric, 101);
}

TEST_CASE("color_sequence repairs parity for every n on random theta") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(0.4, 0.7);
  int done = 0;
  while (done < 30) {
    std::array<double, 6> t{};
    for (auto& x : t) x = u(rng);
    if (!classify_theta(t).hyperbolic()) continue;
    ++done;
    for (int n = 40; n < 80; ++n) {
      try {
        check_sequence(t, n);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::n_too_small);
      }
    }
  }
}

TEST_CASE("color_sequence errors") {
  try {
    color_sequence({0.1, 0.1, 0.1, 0.1, 0.1, 0.1}, 100);
    FAIL("expected not_hyperbolic");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_hyperbolic);
  }
  try {
    color_sequence(kHalf, 3);
    FAIL("expected n_too_small");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::n_too_small);
  }
}

TEST_CASE("gcv_colors") {
  const auto b = gcv_colors({{0.0, 0.04, -0.04}}, 1600);
  CHECK(b[0] == HalfInteger::from_int(800));
  CHECK(b[1] == HalfInteger::from_int(832));
  CHECK(b[2] == HalfInteger::from_int(768));
  for (auto c : b) CHECK(c.is_integer());
}

TEST_CASE("converge_sixj rows") {
  const auto rows = converge_sixj(kHalf, {401, 101, 201}, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].n == 101);
  CHECK(rows[2].n == 401);
  for (const auto& r : rows) {
    CHECK(r.order_observed == -1);
    CHECK(r.error == r.value - r.target);
    CHECK(r.target == doctest::Approx(2 * vol_oct()));
    CHECK_FALSE(r.mixed_signs);
    CHECK_FALSE(r.near_cancellation);
  }
  CHECK(std::abs(rows[2].error) < std::abs(rows[1].error));
  CHECK(std::abs(rows[1].error) < std::abs(rows[0].error));
}

TEST_CASE("converge_sixj threads do not change results") {
  const auto a = converge_sixj(kGeneric, {101, 201, 301, 401}, 1);
  const auto b = converge_sixj(kGeneric, {101, 201, 301, 401}, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].n == b[i].n);
    CHECK(a[i].value == b[i].value);
  }
}

TEST_CASE("converge_gcv rows") {
  const auto rows = converge_gcv(g1(), {std::vector<double>(6, 0.04)}, {200, 400});
  for (const auto& r : rows) {
    CHECK(r.order_observed == -1);
    CHECK(r.target == doctest::Approx(dblock_volume(std::array<double, 6>{
                          0.08 * std::numbers::pi, 0.08 * std::numbers::pi, 0.08 * std::numbers::pi,
                          0.08 * std::numbers::pi, 0.08 * std::numbers::pi, 0.08 * std::numbers::pi})));
  }
  CHECK_THROWS_AS(converge_gcv(g1(), {std::vector<double>(6, 0.0)}, {201}), Error);
  CHECK_THROWS_AS(converge_gcv(g1(), {std::vector<double>(6, 0.45)}, {200}), Error);
  CHECK_THROWS_AS(converge_sixj(kHalf, {}), Error);
}

TEST_CASE("CSV output") {
  std::vector<ConvergenceRow> rows(2);
  rows[0] = {100, 1.0, 2.0, -1.0, -1, 3.5, false, false};
  rows[1] = {200, 1.5, 2.0, -0.5, -1, 4.25, false, false};
  std::ostringstream a;
  write_csv(a, rows);
  CHECK(a.str() ==
        "n,value,target,error,order,runtime_ms\n100,1,2,-1,-1,3.5\n200,1.5,2,-0.5,-1,4.25\n");
  std::ostringstream b;
  write_csv(b, rows, {false, true});
  CHECK(b.str() ==
        "n,value,target,error,order,runtime_ms,richardson\n100,1,2,-1,-1,0,\n200,1.5,2,-0.5,-1,0,2\n");
  const auto r = richardson_column(rows);
  CHECK(std::isnan(r[0]));
  CHECK(r[1] == doctest::Approx(2.0));
}

TEST_CASE("thread count from the environment") {
  setenv("SIXJVOL_THREADS", "3", 1);
  CHECK(thread_count_from_env() == 3);
  setenv("SIXJVOL_THREADS", "0", 1);
  CHECK(thread_count_from_env() >= 1);
  unsetenv("SIXJVOL_THREADS");
  CHECK(thread_count_from_env() >= 1);
}

TEST_CASE("runtime per row grows at most linearly in n") {
  // Median of repeated single-row timings; the z-sum has O(n) terms.
  auto median_ms = [](int n) {
    std::vector<double> t;
    for (int rep = 0; rep < 7; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      converge_sixj(kGeneric, {n}, 1);
      t.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
    }
    std::sort(t.begin(), t.end());
    return t[t.size() / 2];
  };
  const double small = median_ms(20000);
  const double large = median_ms(80000);
  CHECK(large / small < 4.0 * 3.0);
}
