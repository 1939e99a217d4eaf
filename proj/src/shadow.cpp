#include "sixjvol/shadow.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "sixjvol/errors.hpp"
#include "sixjvol/hypgeom.hpp"

namespace sixjvol {

using nlohmann::json;

std::vector<LinkViolation> validate_link(const ShadowLink& link) {
  std::vector<LinkViolation> out;
  if (link.g < 1) out.push_back({-1, -1, -1, "g must be a positive integer"});
  if (link.r < 1) out.push_back({-1, -1, -1, "r must be a positive integer"});
  if (static_cast<int>(link.slots.size()) != link.g) {
    out.push_back({-1, -1, -1,
                   "slots has " + std::to_string(link.slots.size()) + " vertices, expected g = " +
                       std::to_string(link.g)});
  }
  std::vector<bool> used(static_cast<std::size_t>(std::max(link.r, 0)), false);
  for (std::size_t i = 0; i < link.slots.size(); ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      const int c = link.slots[i][j];
      if (c < 0 || c >= link.r) {
        out.push_back({static_cast<int>(i), static_cast<int>(j), c,
                       "vertex " + std::to_string(i) + " slot " + std::to_string(j) +
                           ": component " + std::to_string(c) + " outside [0, " +
                           std::to_string(link.r) + ")"});
      } else {
        used[static_cast<std::size_t>(c)] = true;
      }
    }
  }
  for (std::size_t c = 0; c < used.size(); ++c) {
    if (!used[c]) {
      out.push_back({-1, -1, static_cast<int>(c),
                     "component " + std::to_string(c) + " occupies no slot"});
    }
  }
  return out;
}

namespace {

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw Error(ErrorCode::parse_error, "link field " + pointer + ": " + what);
}

int read_int(const json& j, const std::string& pointer) {
  if (!j.is_number_integer()) schema_error(pointer, "expected an integer, got " + std::string(j.type_name()));
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    schema_error(pointer, "integer out of range");
  }
  return static_cast<int>(v);
}

}  // namespace

ShadowLink parse_link_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line and column.
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size() + 1);
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::parse_error, "link JSON syntax error at line " + std::to_string(line) +
                                            ", column " + std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) schema_error("/", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "g" && key != "r" && key != "slots") schema_error("/" + key, "unknown field");
  }
  for (const char* key : {"g", "r", "slots"}) {
    if (!doc.contains(key)) schema_error(std::string("/") + key, "missing required field");
  }
  ShadowLink link;
  link.g = read_int(doc["g"], "/g");
  link.r = read_int(doc["r"], "/r");
  const json& slots = doc["slots"];
  if (!slots.is_array()) schema_error("/slots", "expected an array");
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const std::string vp = "/slots/" + std::to_string(i);
    const json& row = slots[i];
    if (!row.is_array() || row.size() != 6) schema_error(vp, "expected an array of 6 integers");
    std::array<int, 6> v{};
    for (std::size_t j = 0; j < 6; ++j) v[j] = read_int(row[j], vp + "/" + std::to_string(j));
    link.slots.push_back(v);
  }
  const auto violations = validate_link(link);
  if (!violations.empty()) {
    std::string msg = "invalid link:";
    for (const auto& v : violations) msg += " " + v.message + ";";
    throw Error(ErrorCode::invalid_link, msg);
  }
  return link;
}

ShadowLink load_link_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open link file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_link_json(ss.str());
}

std::string link_to_json(const ShadowLink& link) {
  json doc;
  doc["g"] = link.g;
  doc["r"] = link.r;
  doc["slots"] = link.slots;
  return doc.dump();
}

SixColors vertex_colors(const ShadowLink& link, int vertex, const std::vector<HalfInteger>& b) {
  if (static_cast<int>(b.size()) != link.r) {
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(link.r) +
                                                 " component colors, got " +
                                                 std::to_string(b.size()));
  }
  SixColors out{};
  const auto& row = link.slots.at(static_cast<std::size_t>(vertex));
  for (std::size_t j = 0; j < 6; ++j) out[j] = b.at(static_cast<std::size_t>(row[j]));
  return out;
}

int jones_max_factorial_arg(const ShadowLink& link, const std::vector<HalfInteger>& b) {
  int top = 1;
  for (int i = 0; i < link.g; ++i) {
    const SixColors c = vertex_colors(link, i, b);
    int min_square = std::numeric_limits<int>::max();
    for (const auto& sq : kSquares) {
      int twice = 0;
      for (int k : sq) twice += c[static_cast<std::size_t>(k)].twice();
      min_square = std::min(min_square, twice / 2);
    }
    top = std::max(top, min_square + 1);
  }
  return top;
}

JonesDetail colored_jones_detail(const ShadowLink& link, const std::vector<HalfInteger>& b,
                                 const SineTable& table) {
  JonesDetail out;
  std::vector<SixColors> colors;
  for (int i = 0; i < link.g; ++i) {
    colors.push_back(vertex_colors(link, i, b));
    if (!AdmissibleSix::is_admissible(colors.back())) {
      out.value = LaurentLead::zero();
      return out;
    }
  }
  LaurentLead product = LaurentLead::one();
  for (const auto& c : colors) {
    out.vertices.push_back(sixj_lead_detail(AdmissibleSix(c), table));
    product = lead_mul(product, out.vertices.back().value);
  }
  out.value = product;
  return out;
}

LaurentLead colored_jones_lead(const ShadowLink& link, const std::vector<HalfInteger>& b,
                               const SineTable& table) {
  return colored_jones_detail(link, b, table).value;
}

std::array<double, 6> vertex_block_angles(const ShadowLink& link, int vertex,
                                          const HolonomyParams& a) {
  if (static_cast<int>(a.a.size()) != link.r) {
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(link.r) +
                                                 " deformation parameters, got " +
                                                 std::to_string(a.a.size()));
  }
  std::array<double, 6> u{};
  const auto& row = link.slots.at(static_cast<std::size_t>(vertex));
  for (std::size_t j = 0; j < 6; ++j) {
    u[j] = 2.0 * std::numbers::pi * std::abs(a.a[static_cast<std::size_t>(row[j])]);
  }
  return u;
}

double complement_volume(const ShadowLink& link, const HolonomyParams& a) {
  double total = 0.0;
  for (int i = 0; i < link.g; ++i) {
    const auto u = vertex_block_angles(link, i, a);
    std::array<double, 6> half{};
    bool in_range = true;
    for (std::size_t j = 0; j < 6; ++j) {
      half[j] = 0.5 * u[j];
      if (!(half[j] < std::numbers::pi)) in_range = false;
    }
    if (!in_range || !tetra_exists(half)) {
      throw Error(ErrorCode::deformation_out_of_range,
                  "deformation outside the existence region at vertex " + std::to_string(i));
    }
    total += dblock_volume(u);
  }
  return total;
}

double complete_volume(const ShadowLink& link) { return 2.0 * link.g * vol_oct(); }

}  // namespace sixjvol
