#include "sixjvol/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "sixjvol/errors.hpp"
#include "sixjvol/hypgeom.hpp"

namespace sixjvol {

namespace {

// Runs body(i) for i in [0, count) on up to `threads` workers; rethrows the
// first exception.
template <class Body>
void parallel_for(std::size_t count, int threads, Body body) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::vector<int> sorted_ns(std::vector<int> ns) {
  if (ns.empty()) throw Error(ErrorCode::invalid_argument, "no n values given");
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  return ns;
}

int resolve_threads(int threads) { return threads > 0 ? threads : thread_count_from_env(); }

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int thread_count_from_env() {
  if (const char* env = std::getenv("SIXJVOL_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

AdmissibleSix color_sequence(const std::array<double, 6>& theta, int n) {
  const ThetaSix cls = classify_theta(theta);
  if (!cls.hyperbolic()) {
    throw Error(ErrorCode::not_hyperbolic,
                "color sequence requires hyperbolic-type theta, got " + to_string(cls.cls));
  }
  if (n < 6) throw Error(ErrorCode::n_too_small, "n must be at least 6");
  std::array<int, 6> twice{};
  for (std::size_t i = 0; i < 6; ++i) {
    twice[i] = static_cast<int>(std::lround(2.0 * n * theta[i]));
  }
  // Violated faces always come in pairs, and any two faces share exactly one
  // entry, so each step fixes two faces.
  int steps = 0;
  for (;; ++steps) {
    std::vector<std::size_t> bad;
    for (std::size_t f = 0; f < kFaces.size(); ++f) {
      int s = 0;
      for (int k : kFaces[f]) s += twice[static_cast<std::size_t>(k)];
      if (s % 2 != 0) bad.push_back(f);
    }
    if (bad.empty()) break;
    if (steps >= 12) throw Error(ErrorCode::n_too_small, "parity repair did not terminate");
    const auto& a = kFaces[bad[0]];
    const auto& b = kFaces[bad[1]];
    for (int x : a) {
      if (std::find(b.begin(), b.end(), x) != b.end()) twice[static_cast<std::size_t>(x)] += 1;
    }
  }
  SixColors colors{};
  for (std::size_t i = 0; i < 6; ++i) colors[i] = HalfInteger::from_twice(twice[i]);
  if (!AdmissibleSix::is_admissible(colors)) {
    throw Error(ErrorCode::n_too_small,
                "n = " + std::to_string(n) + " too small: rounded colors violate triangle inequalities");
  }
  return AdmissibleSix(colors);
}

std::vector<HalfInteger> gcv_colors(const HolonomyParams& a, int n) {
  std::vector<HalfInteger> b;
  b.reserve(a.a.size());
  for (double ai : a.a) {
    const long c = std::lround(n * (1.0 + ai) / 2.0);
    if (c < 0) throw Error(ErrorCode::invalid_argument, "deformation gives a negative color");
    b.push_back(HalfInteger::from_int(static_cast<int>(c)));
  }
  return b;
}

std::vector<ConvergenceRow> converge_sixj(const std::array<double, 6>& theta,
                                          const std::vector<int>& ns_in, int threads) {
  const std::vector<int> ns = sorted_ns(ns_in);
  const double target = volume_lob(classify_theta(theta));
  std::vector<ConvergenceRow> rows(ns.size());
  parallel_for(ns.size(), resolve_threads(threads), [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const int n = ns[i];
    const AdmissibleSix b = color_sequence(theta, n);
    const SineTable table(n, std::max(static_cast<int>(std::ceil(2.6 * n)), b.min_square() + 1));
    const SixjDetail d = sixj_lead_detail(b, table);
    const LaurentLead bracket_n = lead_div(qint_lead(n, n), qint_lead(1, n));
    const LaurentLead v = lead_mul(bracket_n, d.value);
    ConvergenceRow& row = rows[i];
    row.n = n;
    row.value = 2.0 * std::numbers::pi / n * v.log_mag;
    row.target = target;
    row.error = row.value - target;
    row.order_observed = d.value.order;
    row.mixed_signs = d.sum.mixed_signs;
    row.near_cancellation = d.sum.near_cancellation;
    row.runtime_ms = elapsed_ms(start);
  });
  return rows;
}

std::vector<ConvergenceRow> converge_gcv(const ShadowLink& link, const HolonomyParams& a,
                                         const std::vector<int>& ns_in, int threads) {
  const std::vector<int> ns = sorted_ns(ns_in);
  for (int n : ns) {
    if (n < 4 || n % 2 != 0) {
      throw Error(ErrorCode::invalid_argument, "converge-gcv needs even n >= 4, got " + std::to_string(n));
    }
  }
  const double target = complement_volume(link, a);
  std::vector<ConvergenceRow> rows(ns.size());
  parallel_for(ns.size(), resolve_threads(threads), [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    const int n = ns[i];
    const auto b = gcv_colors(a, n);
    const SineTable table(n, std::max(static_cast<int>(std::ceil(2.6 * n)),
                                      jones_max_factorial_arg(link, b)));
    const JonesDetail j = colored_jones_detail(link, b, table);
    if (j.value.is_zero()) {
      throw Error(ErrorCode::n_too_small, "colors at n = " + std::to_string(n) +
                                              " are not admissible at some vertex");
    }
    ConvergenceRow& row = rows[i];
    row.n = n;
    row.value = 2.0 * std::numbers::pi / n * j.value.log_mag;
    row.target = target;
    row.error = row.value - target;
    row.order_observed = j.value.order;
    for (const auto& v : j.vertices) {
      row.mixed_signs = row.mixed_signs || v.sum.mixed_signs;
      row.near_cancellation = row.near_cancellation || v.sum.near_cancellation;
    }
    row.runtime_ms = elapsed_ms(start);
  });
  return rows;
}

std::vector<double> richardson_column(const std::vector<ConvergenceRow>& rows) {
  std::vector<double> out(rows.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double n1 = rows[i - 1].n;
    const double n2 = rows[i].n;
    out[i] = (n2 * rows[i].value - n1 * rows[i - 1].value) / (n2 - n1);
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows,
               const CsvOptions& options) {
  out << "n,value,target,error,order,runtime_ms";
  if (options.richardson) out << ",richardson";
  out << '\n';
  const auto extra = options.richardson ? richardson_column(rows) : std::vector<double>{};
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::string(buf);
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out << r.n << ',' << num(r.value) << ',' << num(r.target) << ',' << num(r.error) << ','
        << r.order_observed << ',' << num(options.timing ? r.runtime_ms : 0.0);
    if (options.richardson) out << ',' << (std::isnan(extra[i]) ? std::string() : num(extra[i]));
    out << '\n';
  }
}

}  // namespace sixjvol
