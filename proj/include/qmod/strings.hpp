#pragma once

// String and band modules given by walks in the quiver.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmod/module.hpp"

namespace qmod {

struct Letter {
  std::size_t arrow;
  bool inverse = false;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Letters are read left to right; a direct letter a moves from t(a) to h(a),
// an inverse letter from h(a) to t(a). Length-zero walks sit at `start`.
struct Walk {
  std::size_t start = 0;
  std::vector<Letter> letters;

  std::size_t length() const noexcept { return letters.size(); }
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

std::vector<std::size_t> walk_vertices(const Algebra& algebra, const Walk& w);
// Connected, reduced and avoiding every relation in either direction.
bool is_string(const Algebra& algebra, const Walk& w);
// A closed string whose powers and rotations are strings too.
bool is_band(const Algebra& algebra, const Walk& w);

Module string_module(AlgebraPtr algebra, Field field, const Walk& w);
// One-dimensional band module: the last letter acts by lambda.
Module band_module(AlgebraPtr algebra, Field field, const Walk& w, Elem lambda);

// All strings of length at most `max_length`, one representative per
// inverse pair.
std::vector<Walk> enumerate_strings(const Algebra& algebra, std::size_t max_length);

// "a b^-1 c" or "a,b-,c"; "@x" denotes the trivial walk at vertex x.
Walk parse_walk(const Algebra& algebra, std::string_view text);
std::string format_walk(const Algebra& algebra, const Walk& w);

}  // namespace qmod
