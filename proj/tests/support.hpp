#pragma once

// Test-only helpers shared by the unit and acceptance suites.

#include <fstream>
#include <string>

#include "covarray/covarray.hpp"

#ifndef COVARRAY_TEST_DATA
#define COVARRAY_TEST_DATA "tests/data"
#endif

namespace covarray::support {

inline std::string data_path(const std::string& name) { return std::string(COVARRAY_TEST_DATA) + "/" + name; }

/// A CA(2q^3 - q; 3, (q^2+1)/2, q) obtained from the projective pair: take
/// the first nonzero rows r1 of A(G^1) and r2 of A(G^{-1}) (in span order)
/// that agree on at least (q^2+1)/2 columns, keep the first (q^2+1)/2 such
/// columns, and drop the q-1 rows s·r2 (s != 0) of the second block, which
/// duplicate s·r1. Exists for q = 3 and q = 5; throws otherwise.
inline CoveringArray merged_ingredient(std::uint32_t q) {
  auto tower = FieldTower::for_order(q, 3);
  const std::uint32_t k = q * q + q + 1;
  const std::uint32_t h = (q * q + 1) / 2;
  const auto A = span_array(generator_matrix(tower, 1, k));
  const auto B = span_array(generator_matrix(tower, -1, k));
  const auto& F = tower.base();
  for (std::size_t a = 1; a < A.rows(); ++a)
    for (std::size_t b = 1; b < B.rows(); ++b) {
      std::vector<std::uint32_t> agree;
      for (std::uint32_t c = 0; c < k; ++c)
        if (A.at(a, c) == B.at(b, c)) agree.push_back(c);
      if (agree.size() < h) continue;
      agree.resize(h);
      // rows of B equal to a nonzero multiple of row b on the kept columns
      std::vector<bool> drop(B.rows(), false);
      drop[0] = true;
      for (std::size_t r = 1; r < B.rows(); ++r)
        for (std::uint32_t s = 1; s < q && !drop[r]; ++s) {
          bool same = true;
          for (std::uint32_t c = 0; c < k && same; ++c) same = B.at(r, c) == F.mul(s, B.at(b, c));
          drop[r] = same;
        }
      CoveringArray R;
      R.t = 3;
      R.v = q;
      R.array = SymbolMatrix(0, h);
      std::vector<Symbol> row(h);
      for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::uint32_t i = 0; i < h; ++i) row[i] = A.at(r, agree[i]);
        R.array.append_row(row);
      }
      for (std::size_t r = 0; r < B.rows(); ++r) {
        if (drop[r]) continue;
        for (std::uint32_t i = 0; i < h; ++i) row[i] = B.at(r, agree[i]);
        R.array.append_row(row);
      }
      R.provenance = {"ca3-merged", q, tower.tower_poly(), "none"};
      return R;
    }
  throw InvalidArgument("no row pair agrees on enough columns for q = " + std::to_string(q));
}

inline CoveringArray load(const std::string& name) {
  std::ifstream in(data_path(name));
  if (!in) throw ParseError("missing test data " + name);
  return read_ca(in);
}

}  // namespace covarray::support
