#pragma once

// Small random ideals over QQ: n <= 3 indeterminates, total degree <= 4,
// at most 3 generators, small integer or fractional coefficients.

#include <random>
#include <string>

#include "mgb/io/parser.hpp"

namespace mgb::test {

inline std::string random_ideal_text(std::mt19937_64& rng, bool fractions = true, std::size_t min_vars = 2) {
  static const char* names[] = {"x", "y", "z"};
  std::uniform_int_distribution<std::size_t> nv(min_vars, 3);
  std::uniform_int_distribution<int> ng(1, 3), nt(1, 3), c(-9, 9), e(0, 4), coin(0, 3);
  std::uniform_int_distribution<std::size_t> den_pick(0, 6);
  const int dens[] = {1, 1, 1, 2, 3, 5, 7};
  std::size_t n = nv(rng);
  std::string ring = "ring QQ[";
  for (std::size_t i = 0; i < n; ++i) ring += (i > 0 ? "," : "") + std::string(names[i]);
  ring += "] degrevlex;";
  auto coefficient = [&] {
    int v = 0;
    while (v == 0) v = c(rng);
    int d = fractions ? dens[den_pick(rng)] : 1;
    return "(" + std::to_string(v) + (d > 1 ? "/" + std::to_string(d) : "") + ")";
  };
  std::string ideal = " ideal(";
  int gens = ng(rng);
  for (int g = 0; g < gens; ++g) {
    if (g > 0) ideal += ", ";
    int terms = nt(rng);
    for (int t = 0; t < terms; ++t) {
      if (t > 0) ideal += " + ";
      ideal += coefficient();
      int left = 1 + e(rng) % 4;  // total degree 1..4
      for (std::size_t i = 0; i < n && left > 0; ++i) {
        std::uniform_int_distribution<int> take(i + 1 == n ? left : 0, left);
        int k = take(rng);
        if (k > 0) ideal += "*" + std::string(names[i]) + "^" + std::to_string(k);
        left -= k;
      }
    }
    if (coin(rng) != 0) ideal += " + " + coefficient();
  }
  return ring + ideal + ");";
}

inline Ideal random_ideal(std::mt19937_64& rng, bool fractions = true, std::size_t min_vars = 2) {
  return parse_input(random_ideal_text(rng, fractions, min_vars)).ideals.at(0);
}

}  // namespace mgb::test
