#pragma once

// Generator matrices G^l_c, their span arrays A(G), and the covering arrays
// built from them.

#include <memory>
#include <string>
#include <vector>

#include "covarray/array.hpp"
#include "covarray/common.hpp"
#include "covarray/coverage.hpp"
#include "covarray/gf.hpp"

namespace covarray {

/// m × c matrix over GF(q) whose column i is L(α^{step·i}).
struct GeneratorMatrix {
  std::shared_ptr<const BaseField> field;
  std::uint32_t m = 0;
  std::uint32_t cols = 0;
  std::int64_t step = 0;
  std::vector<std::uint32_t> entries;  // row-major

  std::uint32_t q() const { return field->order(); }
  std::uint32_t at(std::uint32_t row, std::uint32_t col) const { return entries[std::size_t{row} * cols + col]; }

  /// The same generator restricted to its first `count` columns.
  GeneratorMatrix first_columns(std::uint32_t count) const {
    if (count == 0 || count > cols) throw InvalidArgument("column count out of range");
    GeneratorMatrix g{field, m, count, step, {}};
    g.entries.reserve(std::size_t{m} * count);
    for (std::uint32_t r = 0; r < m; ++r)
      for (std::uint32_t c = 0; c < count; ++c) g.entries.push_back(at(r, c));
    return g;
  }
};

/// G^step_cols: column i holds the coordinates of α^{step·i mod (q^m-1)}.
inline GeneratorMatrix generator_matrix(const FieldTower& tower, std::int64_t step, std::uint32_t cols) {
  const std::uint64_t points = tower.group_order() / (tower.q() - 1);
  if (cols == 0 || cols > points)
    throw InvalidArgument("column count must be in 1.." + std::to_string(points));
  GeneratorMatrix g{std::make_shared<BaseField>(tower.base()), tower.m(), cols, step, {}};
  g.entries.assign(std::size_t{tower.m()} * cols, 0);
  const auto n = static_cast<std::int64_t>(tower.group_order());
  for (std::uint32_t i = 0; i < cols; ++i) {
    // step * i reduced without overflow
    std::int64_t s = step % n;
    std::int64_t j = static_cast<std::int64_t>((static_cast<__int128>(s) * i) % n);
    auto v = tower.decompose(j);
    for (std::uint32_t r = 0; r < tower.m(); ++r) g.entries[std::size_t{r} * cols + i] = v[r];
  }
  return g;
}

/// All u·G for u ∈ GF(q)^m, rows in lexicographic order of u (u_0 most
/// significant). Row 0 is the zero row.
inline SymbolMatrix span_array(const GeneratorMatrix& g) {
  const auto& F = *g.field;
  const std::uint32_t q = F.order();
  if (q > 256) throw InvalidArgument("alphabet exceeds 256 symbols");
  const std::uint64_t rows = detail::ipow(q, g.m);
  SymbolMatrix a(static_cast<std::size_t>(rows), g.cols);
  std::vector<std::uint32_t> u(g.m, 0);
  for (std::uint64_t r = 0; r < rows; ++r) {
    std::uint64_t t = r;
    for (std::uint32_t k = g.m; k-- > 0;) {
      u[k] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    auto row = a.row(static_cast<std::size_t>(r));
    for (std::uint32_t i = 0; i < g.cols; ++i) {
      std::uint32_t s = 0;
      for (std::uint32_t k = 0; k < g.m; ++k)
        if (u[k]) s = F.add(s, F.mul(u[k], g.at(k, i)));
      row[i] = static_cast<Symbol>(s);
    }
  }
  return a;
}

namespace detail {
inline void require_odd_m4(const FieldTower& tower) {
  if (tower.m() != 4) throw InvalidArgument("strength-4 constructions need a degree-4 tower");
  if (tower.q() % 2 == 0) throw InvalidArgument("q must be an odd prime power");
}
}  // namespace detail

/// Row counts of the constructions, without building them.
inline std::uint64_t ca3_projective_size(std::uint64_t q) { return 2 * q * q * q - 1; }
inline std::uint64_t ca4_half_size(std::uint64_t q) { return 3 * q * q * q * q - 2; }
inline std::uint64_t ca4_full_size(std::uint64_t q, std::uint64_t ingredient_rows) {
  return 3 * q * q * q * q + ingredient_rows * (q - 2);
}

/// CA(2q^3 - 1; 3, q^2+q+1, q): A(G^1) over A(G^{-1}), second zero row dropped.
inline CoveringArray build_ca3_projective(const FieldTower& tower) {
  if (tower.m() != 3) throw InvalidArgument("projective construction needs a degree-3 tower");
  const std::uint32_t q = tower.q();
  const std::uint32_t k = q * q + q + 1;
  CoveringArray ca;
  ca.t = 3;
  ca.v = q;
  ca.array = span_array(generator_matrix(tower, 1, k));
  ca.array.append_rows(span_array(generator_matrix(tower, -1, k)), 1);
  ca.provenance = {"ca3-projective", q, tower.tower_poly(), "none"};
  return ca;
}

/// The three half-ovoid generators G^{n(q+1)}_{(q^2+1)/2}, n = 1, 2, 4.
inline std::vector<GeneratorMatrix> half_ovoid_generators(const FieldTower& tower) {
  detail::require_odd_m4(tower);
  const std::uint32_t q = tower.q();
  const std::uint32_t h = (q * q + 1) / 2;
  return {generator_matrix(tower, q + 1, h), generator_matrix(tower, 2 * (q + 1), h),
          generator_matrix(tower, 4 * (q + 1), h)};
}

/// CA(3q^4 - 2; 4, (q^2+1)/2, q): the three half-ovoid span arrays stacked,
/// keeping the first block's zero row only.
inline CoveringArray build_ca4_half(const FieldTower& tower) {
  detail::require_odd_m4(tower);
  auto gens = half_ovoid_generators(tower);
  CoveringArray ca;
  ca.t = 4;
  ca.v = tower.q();
  ca.array = span_array(gens[0]);
  ca.array.reserve_rows(static_cast<std::size_t>(ca4_half_size(tower.q())));
  ca.array.append_rows(span_array(gens[1]), 1);
  ca.array.append_rows(span_array(gens[2]), 1);
  ca.provenance = {"ca4-half", tower.q(), tower.tower_poly(), "none"};
  return ca;
}

/// Keeps the first `count` columns.
inline CoveringArray restrict_columns(const CoveringArray& ca, std::size_t count) {
  if (count == 0) throw InvalidArgument("cannot restrict to zero columns");
  if (count > ca.k()) throw InvalidArgument("cannot restrict to more columns than the array has");
  if (count == ca.k()) return ca;
  CoveringArray out;
  out.t = ca.t;
  out.v = ca.v;
  out.array = SymbolMatrix(0, count);
  for (std::size_t r = 0; r < ca.N(); ++r) out.array.append_row(ca.array.row(r).first(count));
  out.provenance = ca.provenance;
  out.provenance.construction += ":" + std::to_string(count);
  return out;
}

/// CA(2q^3 - 1; 3, (q^2+1)/2, q), the ingredient used when none is supplied.
inline CoveringArray default_ingredient(std::uint32_t q) {
  auto t3 = FieldTower::for_order(q, 3);
  return restrict_columns(build_ca3_projective(t3), (q * q + 1) / 2);
}

/// Checks an ingredient for the recursive construction: shape
/// (·, (q^2+1)/2, q) and strength 3 by brute force.
inline CoverageReport check_ingredient(const CoveringArray& R, std::uint32_t q, std::optional<unsigned> threads = {}) {
  const std::uint32_t h = (q * q + 1) / 2;
  if (R.k() != h || R.v != q)
    throw InvalidArgument("ingredient must have " + std::to_string(h) + " columns over " + std::to_string(q) +
                          " symbols, got " + std::to_string(R.k()) + " over " + std::to_string(R.v));
  CoverageOptions opt;
  opt.threads = threads;
  opt.witness_cap = 1;
  auto rep = verify_coverage(R.array, R.v, 3, opt);
  if (!rep.passed) throw InvalidArgument("ingredient is not a strength-3 covering array");
  return rep;
}

/// Adds the constant s ∈ GF(q) to every entry of a row.
inline void add_constant(const BaseField& F, std::span<Symbol> row, std::uint32_t s) {
  for (auto& x : row) x = static_cast<Symbol>(F.add(x, s));
}

/// CA(3q^4 + N_R(q-2); 4, q^2+1, q), blocks top to bottom:
///   A(G^{q+1}_{q^2+1})
///   A_2 | A_2
///   A_4 | A_4 + e^0
///   R   | R + e^r      for r = 1, ..., q-2
/// with e = α^{(q^4-1)/(q-1)} and `+` entrywise in GF(q).
inline CoveringArray build_ca4_full(const FieldTower& tower, const CoveringArray& R,
                                    const std::string& ingredient_name = "import",
                                    std::optional<unsigned> threads = {}) {
  detail::require_odd_m4(tower);
  const std::uint32_t q = tower.q();
  const std::uint32_t h = (q * q + 1) / 2;
  check_ingredient(R, q, threads);
  const auto& F = tower.base();
  const std::uint32_t e = tower.subfield_primitive();

  CoveringArray ca;
  ca.t = 4;
  ca.v = q;
  ca.array = span_array(generator_matrix(tower, q + 1, q * q + 1));
  ca.array.reserve_rows(static_cast<std::size_t>(ca4_full_size(q, R.N())));
  std::vector<Symbol> row(2 * h);
  auto append_doubled = [&](const SymbolMatrix& half, std::uint32_t offset) {
    for (std::size_t r = 0; r < half.rows(); ++r) {
      auto src = half.row(r);
      std::copy(src.begin(), src.end(), row.begin());
      std::copy(src.begin(), src.end(), row.begin() + h);
      add_constant(F, std::span<Symbol>(row).subspan(h), offset);
      ca.array.append_row(row);
    }
  };
  append_doubled(span_array(generator_matrix(tower, 2 * (q + 1), h)), 0);
  append_doubled(span_array(generator_matrix(tower, 4 * (q + 1), h)), 1);
  std::uint32_t power = 1;
  for (std::uint32_t r = 1; r + 2 <= q; ++r) {
    power = F.mul(power, e);
    append_doubled(R.array, power);
  }
  ca.provenance = {"ca4-full", q, tower.tower_poly(), ingredient_name};
  return ca;
}

/// Default recursion ingredient: the projective strength-3 array cut to
/// (q^2+1)/2 columns.
inline CoveringArray build_ca4_full(const FieldTower& tower, std::optional<unsigned> threads = {}) {
  detail::require_odd_m4(tower);
  const std::uint32_t q = tower.q();
  auto R = default_ingredient(q);
  return build_ca4_full(tower, R, R.provenance.construction, threads);
}

}  // namespace covarray
