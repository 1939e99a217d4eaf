#pragma once

// Finite-n convergence runs: (2 pi / n) log|ev_n(...)| against the
// hyperbolic volume it should approach.

#include <array>
#include <iosfwd>
#include <vector>

#include "sixjvol/shadow.hpp"
#include "sixjvol/sixj.hpp"

namespace sixjvol {

struct ConvergenceRow {
  int n = 0;
  double value = 0.0;
  double target = 0.0;
  double error = 0.0;  // value - target
  int order_observed = 0;
  double runtime_ms = 0.0;
  // Diagnostics from the z-sums (any vertex).
  bool mixed_signs = false;
  bool near_cancellation = false;
};

// b_i = round(2 n theta_i) / 2, then parity repair: while some face sum is
// not an integer, the entry shared by the first two such faces is raised by
// 1/2. Throws ErrorCode::not_hyperbolic or ErrorCode::n_too_small.
AdmissibleSix color_sequence(const std::array<double, 6>& theta, int n);

// Integer colors round(n (1 + a_i) / 2).
std::vector<HalfInteger> gcv_colors(const HolonomyParams& a, int n);

// Worker count: SIXJVOL_THREADS if set and positive, else hardware concurrency.
int thread_count_from_env();

// Rows sorted by n. value = (2 pi / n) log|ev_n([n] 6j)|, target = volume_lob.
std::vector<ConvergenceRow> converge_sixj(const std::array<double, 6>& theta,
                                          const std::vector<int>& ns, int threads = 0);

// value = (2 pi / n) log|ev_n(J)|, target = complement_volume(link, a).
// ns must be even.
std::vector<ConvergenceRow> converge_gcv(const ShadowLink& link, const HolonomyParams& a,
                                         const std::vector<int>& ns, int threads = 0);

// Extrapolation assuming error ~ c / n between consecutive rows; the first
// entry is NaN.
std::vector<double> richardson_column(const std::vector<ConvergenceRow>& rows);

struct CsvOptions {
  bool timing = true;       // runtime_ms column is written as 0 when false
  bool richardson = false;  // append a "richardson" column
};

// Header "n,value,target,error,order,runtime_ms", 12 significant digits, LF.
void write_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows,
               const CsvOptions& options = {});

}  // namespace sixjvol
