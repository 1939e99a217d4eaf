#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sixjvol/errors.hpp"
#include "sixjvol/experiments.hpp"
#include "sixjvol/hypgeom.hpp"
#include "sixjvol/rootval.hpp"
#include "sixjvol/shadow.hpp"
#include "sixjvol/sixj.hpp"

namespace sixjvol::cli {

namespace {

using nlohmann::json;

[[noreturn]] void bad_input(const std::string& what) {
  throw Error(ErrorCode::invalid_argument, what);
}

std::vector<std::string> split_commas(const std::string& text, const std::string& flag) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (!text.empty() && text.back() == ',') parts.emplace_back();
  for (const auto& p : parts) {
    if (p.empty()) bad_input(flag + ": empty list entry");
  }
  if (parts.empty()) bad_input(flag + ": empty list");
  return parts;
}

double parse_double(const std::string& text, const std::string& flag) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    bad_input(flag + ": '" + text + "' is not a finite real number");
  }
  return v;
}

long parse_long(const std::string& text, const std::string& flag) {
  long v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) bad_input(flag + ": '" + text + "' is not an integer");
  return v;
}

std::vector<double> parse_reals(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  for (const auto& p : split_commas(text, flag)) out.push_back(parse_double(p, flag));
  return out;
}

template <std::size_t N>
std::array<double, N> parse_fixed_reals(const std::string& text, const std::string& flag) {
  const auto v = parse_reals(text, flag);
  if (v.size() != N) {
    bad_input(flag + ": expected " + std::to_string(N) + " values, got " + std::to_string(v.size()));
  }
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

std::vector<HalfInteger> parse_colors(const std::string& b, const std::string& b2) {
  std::vector<HalfInteger> out;
  if (!b2.empty()) {
    for (const auto& p : split_commas(b2, "--b2")) {
      const long v = parse_long(p, "--b2");
      if (v < 0 || v > 1'000'000'000) bad_input("--b2: entries must lie in [0, 1e9]");
      out.push_back(HalfInteger::from_twice(static_cast<int>(v)));
    }
  } else {
    for (const auto& p : split_commas(b, "--b")) {
      const double v = parse_double(p, "--b");
      if (v < 0 || v > 5e8) bad_input("--b: entries must lie in [0, 5e8]");
      out.push_back(HalfInteger::from_double(v));
    }
  }
  return out;
}

SixColors six_colors(const std::vector<HalfInteger>& v) {
  if (v.size() != 6) bad_input("expected 6 colors, got " + std::to_string(v.size()));
  SixColors out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

std::vector<int> parse_ns(const std::string& text) {
  std::vector<int> out;
  for (const auto& p : split_commas(text, "--ns")) {
    const long v = parse_long(p, "--ns");
    if (v < 3 || v > 100'000'000) bad_input("--ns: entries must lie in [3, 1e8]");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

int checked_n(long n) {
  if (n < 3 || n > 100'000'000) bad_input("--n must lie in [3, 1e8]");
  return static_cast<int>(n);
}

std::string sign_name(Sign s) {
  switch (s) {
    case Sign::positive:
      return "+";
    case Sign::negative:
      return "-";
    case Sign::indeterminate:
      break;
  }
  return "indeterminate";
}

json lead_json(const LaurentLead& v) {
  json j;
  if (v.is_zero()) {
    j["zero"] = true;
    j["order"] = nullptr;
    j["log_mag"] = nullptr;
    j["sign"] = "0";
    j["phase_units"] = 0;
    return j;
  }
  j["zero"] = false;
  j["order"] = v.order;
  j["log_mag"] = v.log_mag;
  j["sign"] = sign_name(v.sign);
  j["phase_units"] = v.phase_units;
  return j;
}

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

json rows_json(const std::vector<ConvergenceRow>& rows, const CsvOptions& opt) {
  const auto rich = richardson_column(rows);
  json arr = json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    json j{{"n", r.n},
           {"value", r.value},
           {"target", r.target},
           {"error", r.error},
           {"order", r.order_observed},
           {"runtime_ms", opt.timing ? r.runtime_ms : 0.0},
           {"mixed_signs", r.mixed_signs},
           {"near_cancellation", r.near_cancellation}};
    if (opt.richardson) j["richardson"] = std::isnan(rich[i]) ? json(nullptr) : json(rich[i]);
    arr.push_back(j);
  }
  return arr;
}

struct Flags {
  double x = 0.0;
  double re = 0.0;
  double im = 0.0;
  long n = 0;
  std::string b;
  std::string b2;
  std::string theta;
  std::string alpha;
  std::string u;
  std::string link;
  std::string a;
  std::string ns;
  std::string out;
  std::string format = "csv";
  bool timing = false;
  bool richardson = false;
};

void add_colors(CLI::App* sub, Flags& f) {
  auto* b = sub->add_option("--b", f.b, "Colors as comma-separated half-integers, e.g. 1,0.5,1.5");
  auto* b2 = sub->add_option("--b2", f.b2, "Colors as comma-separated doubled integers, e.g. 2,1,3");
  b->excludes(b2);
  b2->excludes(b);
}

void add_experiment_flags(CLI::App* sub, Flags& f) {
  sub->add_option("--ns", f.ns, "Root orders n, comma-separated")->required();
  sub->add_option("--out", f.out, "Write the table to this file instead of stdout");
  sub->add_option("--format", f.format, "Table format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_flag("--timing", f.timing, "Report measured runtimes (otherwise runtime_ms is 0)");
  sub->add_flag("--richardson", f.richardson, "Append a 1/n Richardson extrapolation column");
}

void emit_table(const Flags& f, const std::vector<ConvergenceRow>& rows, std::ostream& out) {
  const CsvOptions opt{f.timing, f.richardson};
  std::ostringstream text;
  if (f.format == "json") {
    text << rows_json(rows, opt).dump() << '\n';
  } else {
    write_csv(text, rows, opt);
  }
  if (f.out.empty()) {
    out << text.str();
    return;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (!file) bad_input("--out: cannot open " + f.out + " for writing");
  file << text.str();
  if (!file) throw Error(ErrorCode::invalid_argument, "--out: write to " + f.out + " failed");
}

void print_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void report(std::ostream& err, std::string_view code, const std::string& message) {
  json j{{"error", std::string(code)}, {"message", message}};
  err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum 6j-symbols at roots of unity and hyperbolic volumes", "sixjvol"};
  app.require_subcommand(1);
  app.fallthrough(false);
  Flags f;
  std::function<void()> action;

  auto* lob = app.add_subcommand("lob", "Lobachevsky function Lambda(x)");
  lob->add_option("--x", f.x, "Argument in radians")->required();
  lob->callback([&] { action = [&] { print_json(out, {{"lambda", lobachevsky(f.x)}}); }; });

  auto* dl = app.add_subcommand("dilog", "Principal dilogarithm Li2(z) for |z| <= 1");
  dl->add_option("--re", f.re, "Real part of z")->required();
  dl->add_option("--im", f.im, "Imaginary part of z");
  dl->callback([&] {
    action = [&] {
      const cplx v = dilog({f.re, f.im});
      print_json(out, {{"re", v.real()}, {"im", v.imag()}});
    };
  });

  auto* cls = app.add_subcommand("classify", "Classify a real 6-tuple theta");
  cls->add_option("--theta", f.theta, "theta_0,...,theta_5 in [0,1]")->required();
  cls->callback([&] {
    action = [&] {
      const ThetaSix t = classify_theta(parse_fixed_reals<6>(f.theta, "--theta"));
      json j{{"class", to_string(t.cls)}, {"T", t.T}, {"Q", t.Q}, {"T_max", t.T_max},
             {"Q_min", t.Q_min}};
      if (t.hyperbolic()) j["z0"] = solve_z0(t).z0;
      print_json(out, j);
    };
  });

  auto* sj = app.add_subcommand("sixj", "Leading Laurent coefficient of a 6j-symbol at q_n");
  add_colors(sj, f);
  sj->add_option("--n", f.n, "Root order n >= 3")->required();
  sj->callback([&] {
    action = [&] {
      const int n = checked_n(f.n);
      const AdmissibleSix b(six_colors(parse_colors(f.b, f.b2)));
      const SineTable table(n, std::max(static_cast<int>(std::ceil(2.6 * n)), b.min_square() + 1));
      const SixjDetail d = sixj_lead_detail(b, table);
      json j = lead_json(d.value);
      j["n"] = n;
      j["mixed_signs"] = d.sum.mixed_signs;
      j["near_cancellation"] = d.sum.near_cancellation;
      print_json(out, j);
    };
  });

  auto* tv = app.add_subcommand("tetra-vol", "Volume of a truncated hyperbolic tetrahedron");
  auto* opt_alpha = tv->add_option("--alpha", f.alpha, "Dihedral angles alpha_0,...,alpha_5 in [0,pi)");
  auto* opt_theta = tv->add_option("--theta", f.theta, "Hyperbolic-type theta; alpha = |2 pi (theta - 1/2)|");
  opt_alpha->excludes(opt_theta);
  opt_theta->excludes(opt_alpha);
  tv->callback([&] {
    action = [&] {
      json j;
      std::array<double, 6> alpha{};
      if (!f.theta.empty()) {
        const ThetaSix t = classify_theta(parse_fixed_reals<6>(f.theta, "--theta"));
        const SaddleData s = solve_z0(t);
        j["z0"] = s.z0;
        j["volume_lob"] = s.F_at_z0 + s.v_sum;
        alpha = angles_from_theta(t.theta);
      } else if (!f.alpha.empty()) {
        alpha = parse_fixed_reals<6>(f.alpha, "--alpha");
      } else {
        bad_input("one of --alpha or --theta is required");
      }
      const TruncTetra tetra(alpha);
      const MyVolume v = volume_my_detail(tetra);
      j["alpha"] = alpha;
      j["volume"] = volume_my(tetra);
      j["z_plus"] = cplx_json(v.z.z_plus);
      j["z_minus"] = cplx_json(v.z.z_minus);
      print_json(out, j);
    };
  });

  auto* dv = app.add_subcommand("dblock-vol", "Volume of the D-block with angles u");
  dv->add_option("--u", f.u, "u_0,...,u_5 with u/2 in [0,pi)")->required();
  dv->callback([&] {
    action = [&] { print_json(out, {{"volume", dblock_volume(parse_fixed_reals<6>(f.u, "--u"))}}); };
  });

  auto* jo = app.add_subcommand("jones", "Leading coefficient of a shadow link's colored Jones invariant");
  jo->add_option("--link", f.link, "Link JSON file")->required();
  add_colors(jo, f);
  jo->add_option("--n", f.n, "Root order n >= 3")->required();
  jo->callback([&] {
    action = [&] {
      const int n = checked_n(f.n);
      const ShadowLink link = load_link_file(f.link);
      const auto b = parse_colors(f.b, f.b2);
      const SineTable table(n, std::max(static_cast<int>(std::ceil(2.6 * n)),
                                        jones_max_factorial_arg(link, b)));
      const JonesDetail d = colored_jones_detail(link, b, table);
      json j = lead_json(d.value);
      j["n"] = n;
      j["g"] = link.g;
      print_json(out, j);
    };
  });

  auto* lv = app.add_subcommand("link-vol", "Volume of a deformed shadow link complement");
  lv->add_option("--link", f.link, "Link JSON file")->required();
  lv->add_option("--a", f.a, "Deformation parameters a_1,...,a_r");
  lv->callback([&] {
    action = [&] {
      const ShadowLink link = load_link_file(f.link);
      HolonomyParams a{std::vector<double>(static_cast<std::size_t>(link.r), 0.0)};
      if (!f.a.empty()) a.a = parse_reals(f.a, "--a");
      print_json(out, {{"volume", complement_volume(link, a)},
                       {"complete_volume", complete_volume(link)}});
    };
  });

  auto* cs = app.add_subcommand("converge-sixj", "Convergence of (2pi/n) log|ev_n([n] 6j)|");
  cs->add_option("--theta", f.theta, "Hyperbolic-type theta_0,...,theta_5")->required();
  add_experiment_flags(cs, f);
  cs->callback([&] {
    action = [&] {
      const auto theta = parse_fixed_reals<6>(f.theta, "--theta");
      emit_table(f, converge_sixj(theta, parse_ns(f.ns)), out);
    };
  });

  auto* cg = app.add_subcommand("converge-gcv", "Convergence of (2pi/n) log|ev_n(J)| for a shadow link");
  cg->add_option("--link", f.link, "Link JSON file")->required();
  cg->add_option("--a", f.a, "Deformation parameters a_1,...,a_r")->required();
  add_experiment_flags(cg, f);
  cg->callback([&] {
    action = [&] {
      const ShadowLink link = load_link_file(f.link);
      const HolonomyParams a{parse_reals(f.a, "--a")};
      emit_table(f, converge_gcv(link, a, parse_ns(f.ns)), out);
    };
  });

  std::vector<const char*> argv{"sixjvol"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report(err, error_code_name(ErrorCode::invalid_argument), e.what());
    return kExitValidation;
  }

  try {
    if (!action) bad_input("no subcommand given");
    action();
  } catch (const Error& e) {
    report(err, error_code_name(e.code()), e.what());
    return is_validation_error(e.code()) ? kExitValidation : kExitNumeric;
  } catch (const std::exception& e) {
    report(err, "internal", e.what());
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace sixjvol::cli
