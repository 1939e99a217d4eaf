#pragma once

// Fundamental shadow links, modelled by vertex/slot incidence: vertex i of
// the 4-valent graph sees six strands, slot j carrying component
// slots[i][j]. Opposite slots are (0,3), (1,4), (2,5).

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "sixjvol/rootval.hpp"
#include "sixjvol/sixj.hpp"

namespace sixjvol {

struct ShadowLink {
  int g = 0;
  int r = 0;
  std::vector<std::array<int, 6>> slots;

  // Number of S^2 x S^1 summands of the ambient manifold.
  int k() const { return g + 1; }
};

struct LinkViolation {
  int vertex = -1;
  int slot = -1;
  int component = -1;
  std::string message;
};

std::vector<LinkViolation> validate_link(const ShadowLink& link);

// Parses {"g": int, "r": int, "slots": [[int x 6] x g]}. Throws
// ErrorCode::parse_error (with line and column) on malformed JSON or
// schema errors (with the JSON pointer of the field) and
// ErrorCode::invalid_link when validate_link reports violations.
ShadowLink parse_link_json(std::string_view text);
ShadowLink load_link_file(const std::string& path);
std::string link_to_json(const ShadowLink& link);

// Meridian deformation parameters, one per component; a = 0 is complete.
struct HolonomyParams {
  std::vector<double> a;
};

// Colors of the six strands at a vertex.
SixColors vertex_colors(const ShadowLink& link, int vertex, const std::vector<HalfInteger>& b);

// Largest quantum factorial argument needed to evaluate the link's 6j-symbols.
int jones_max_factorial_arg(const ShadowLink& link, const std::vector<HalfInteger>& b);

struct JonesDetail {
  LaurentLead value;
  // Empty when some vertex is not admissible (value is then zero).
  std::vector<SixjDetail> vertices;
};

JonesDetail colored_jones_detail(const ShadowLink& link, const std::vector<HalfInteger>& b,
                                 const SineTable& table);
LaurentLead colored_jones_lead(const ShadowLink& link, const std::vector<HalfInteger>& b,
                               const SineTable& table);

// Angles u(i)_j = 2 pi |a[slots[i][j]]| of the D-block at a vertex.
std::array<double, 6> vertex_block_angles(const ShadowLink& link, int vertex,
                                          const HolonomyParams& a);

// Sum of per-vertex D-block volumes. Throws
// ErrorCode::deformation_out_of_range naming the first vertex whose block
// does not exist.
double complement_volume(const ShadowLink& link, const HolonomyParams& a);

// 2 g Vol_Oct.
double complete_volume(const ShadowLink& link);

}  // namespace sixjvol
