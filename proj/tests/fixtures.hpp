#pragma once

// Groups of order 2..12 with theory counts and part-count profiles frozen
// from tests/oracles/brute_force.py (tests/oracles/theory_counts.txt).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "superdet/group.hpp"

namespace fixtures {

struct Fixture {
  std::string name;
  std::vector<std::string> generators;
  std::size_t degree;
  std::size_t order;
  std::size_t theories;
  std::vector<std::size_t> parts;  // sorted part counts, one per theory
};

inline const std::vector<Fixture>& all() {
  static const std::vector<Fixture> list = {
      {"C2", {"(0 1)"}, 2, 2, 1,
       {2}},
      {"C3", {"(0 1 2)"}, 3, 3, 2,
       {2, 3}},
      {"C4", {"(0 1 2 3)"}, 4, 4, 3,
       {2, 3, 4}},
      {"C2xC2", {"(0 1)", "(2 3)"}, 4, 4, 5,
       {2, 3, 3, 3, 4}},
      {"C5", {"(0 1 2 3 4)"}, 5, 5, 3,
       {2, 3, 5}},
      {"C6", {"(0 1 2 3 4 5)"}, 6, 6, 7,
       {2, 3, 3, 4, 4, 4, 6}},
      {"S3", {"(0 1)", "(0 1 2)"}, 3, 6, 2,
       {2, 3}},
      {"C7", {"(0 1 2 3 4 5 6)"}, 7, 7, 4,
       {2, 3, 4, 7}},
      {"C8", {"(0 1 2 3 4 5 6 7)"}, 8, 8, 10,
       {2, 3, 3, 4, 5, 5, 5, 5, 6, 8}},
      {"C2xC4", {"(0 1)", "(2 3 4 5)"}, 6, 8, 28,
       {2, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 8}},
      {"C2xC2xC2", {"(0 1)", "(2 3)", "(4 5)"}, 6, 8, 100,
       {2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 8}},
      {"D4", {"(0 1 2 3)", "(1 3)"}, 4, 8, 9,
       {2, 3, 3, 3, 3, 4, 4, 4, 5}},
      {"Q8", {"(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"}, 8, 8, 9,
       {2, 3, 3, 3, 3, 4, 4, 4, 5}},
      {"C9", {"(0 1 2 3 4 5 6 7 8)"}, 9, 9, 7,
       {2, 3, 4, 4, 5, 5, 9}},
      {"C3xC3", {"(0 1 2)", "(3 4 5)"}, 6, 9, 40,
       {2, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 9}},
      {"C10", {"(0 1 2 3 4 5 6 7 8 9)"}, 10, 10, 10,
       {2, 3, 3, 4, 4, 4, 6, 6, 6, 10}},
      {"D5", {"(0 1 2 3 4)", "(1 4)(2 3)"}, 5, 10, 3,
       {2, 3, 4}},
      {"C11", {"(0 1 2 3 4 5 6 7 8 9 10)"}, 11, 11, 4,
       {2, 3, 6, 11}},
      {"C12", {"(0 1 2 3 4 5 6 7 8 9 10 11)"}, 12, 12, 32,
       {2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 7, 7, 7, 8, 8, 8, 9, 12}},
      {"C2xC6", {"(0 1)", "(2 3 4 5 6 7)"}, 8, 12, 76,
       {2, 3, 3, 3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 8, 8, 8, 8, 8, 8, 8, 9, 9, 9, 12}},
      {"D6", {"(0 1 2 3 4 5)", "(1 5)(2 4)"}, 6, 12, 15,
       {2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 6}},
      {"A4", {"(0 1 2)", "(1 2 3)"}, 4, 12, 3,
       {2, 3, 4}},
      {"Dic3", {"(0 1 2)", "(1 2)(3 4 5 6)"}, 7, 12, 9,
       {2, 3, 3, 3, 4, 4, 5, 5, 6}},
  };
  return list;
}

inline const Fixture& get(const std::string& name) {
  for (const auto& f : all())
    if (f.name == name) return f;
  throw std::out_of_range(name);
}

inline superdet::FiniteGroup group(const Fixture& f) {
  auto g = superdet::FiniteGroup::from_permutations(f.generators, f.degree);
  g.set_name(f.name);
  return g;
}

inline superdet::FiniteGroup group(const std::string& name) { return group(get(name)); }

}  // namespace fixtures
