#pragma once

// Certification engines that work on generator matrices instead of rows:
// a span array A(G) covers a column set T iff the columns of G indexed by T
// are linearly independent over GF(q).

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covarray/array.hpp"
#include "covarray/common.hpp"
#include "covarray/construct.hpp"
#include "covarray/coverage.hpp"
#include "covarray/gf.hpp"

namespace covarray {

inline constexpr std::uint32_t kMaxGeneratorRows = 8;

namespace detail {

/// Incremental row echelon form of up to kMaxGeneratorRows column vectors.
class Echelon {
 public:
  using Vec = std::array<std::uint32_t, kMaxGeneratorRows>;

  Echelon(const BaseField& f, std::uint32_t m) : f_(&f), m_(m) {}

  std::size_t size() const { return n_; }
  void truncate(std::size_t n) { n_ = n; }

  /// Reduces v against the basis; appends it and returns true if independent.
  bool push(Vec v) {
    for (std::size_t b = 0; b < n_; ++b) {
      std::uint32_t c = v[pivot_[b]];
      if (c == 0) continue;
      for (std::uint32_t r = 0; r < m_; ++r) v[r] = f_->sub(v[r], f_->mul(c, basis_[b][r]));
    }
    for (std::uint32_t r = 0; r < m_; ++r) {
      if (v[r] == 0) continue;
      std::uint32_t inv = f_->inv(v[r]);
      for (std::uint32_t s = 0; s < m_; ++s) v[s] = f_->mul(v[s], inv);
      basis_[n_] = v;
      pivot_[n_] = r;
      ++n_;
      return true;
    }
    return false;
  }

 private:
  const BaseField* f_;
  std::uint32_t m_;
  std::size_t n_ = 0;
  std::array<Vec, kMaxGeneratorRows> basis_{};
  std::array<std::uint32_t, kMaxGeneratorRows> pivot_{};
};

inline Echelon::Vec column_of(const GeneratorMatrix& g, std::uint32_t c) {
  Echelon::Vec v{};
  for (std::uint32_t r = 0; r < g.m; ++r) v[r] = g.at(r, c);
  return v;
}

}  // namespace detail

/// Rank over GF(q) of the columns `cols` of g.
inline std::size_t column_rank(const GeneratorMatrix& g, std::span<const std::uint32_t> cols) {
  if (g.m > kMaxGeneratorRows) throw InvalidArgument("generator has too many rows");
  detail::Echelon e(*g.field, g.m);
  for (auto c : cols) {
    if (c >= g.cols) throw InvalidArgument("column index out of range");
    e.push(detail::column_of(g, c));
  }
  return e.size();
}

/// Result of the rank engine: t-sets of columns on which every generator is
/// rank deficient, i.e. sets the stacked span arrays fail to cover.
struct RankCertificate {
  std::uint32_t t = 0;
  std::uint32_t k = 0;
  std::size_t generators = 0;
  std::uint64_t sets_checked = 0;
  std::uint64_t uncovered_count = 0;
  /// Sorted labels of uncovered sets, sorted lexicographically, capped at
  /// RankOptions::max_recorded.
  std::vector<std::vector<std::uint32_t>> uncovered_sets;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return uncovered_count == 0; }
};

struct RankOptions {
  std::optional<unsigned> threads;
  std::size_t max_recorded = 1'000'000;
};

/// For every t-set of columns, tests whether some generator has rank t on it.
/// Column i is reported under column_labels[i] (identity when empty).
inline RankCertificate verify_rank_cphf(const std::vector<GeneratorMatrix>& generators, std::uint32_t t,
                                        std::vector<std::uint32_t> column_labels = {},
                                        const RankOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (generators.empty()) throw InvalidArgument("no generators");
  const auto& g0 = generators.front();
  for (const auto& g : generators) {
    if (g.m != g0.m || g.cols != g0.cols || g.q() != g0.q())
      throw InvalidArgument("generators must share shape and field");
    if (g.m > kMaxGeneratorRows) throw InvalidArgument("generator has too many rows");
  }
  if (generators.size() > 32) throw InvalidArgument("at most 32 generators");
  if (t < 1 || t > g0.m) throw InvalidArgument("strength must satisfy 1 <= t <= m");
  const std::uint32_t k = g0.cols;
  if (t > k) throw InvalidArgument("strength exceeds column count");
  if (column_labels.empty()) {
    column_labels.resize(k);
    for (std::uint32_t i = 0; i < k; ++i) column_labels[i] = i;
  }
  if (column_labels.size() != k) throw InvalidArgument("one label per column required");

  // columns pre-extracted per generator
  const std::size_t G = generators.size();
  std::vector<std::vector<detail::Echelon::Vec>> columns(G);
  for (std::size_t g = 0; g < G; ++g)
    for (std::uint32_t c = 0; c < k; ++c) columns[g].push_back(detail::column_of(generators[g], c));

  struct Partial {
    std::uint64_t checked = 0, uncovered = 0;
    std::vector<std::vector<std::uint32_t>> sets;
  };
  const unsigned workers = resolve_threads(opt.threads);
  const std::uint32_t first_range = k - t + 1;
  std::vector<Partial> parts(chunk_count(first_range, workers));
  parallel_chunks(first_range, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    Partial& part = parts[chunk];
    std::vector<detail::Echelon> ech;
    for (std::size_t g = 0; g < G; ++g) ech.emplace_back(*generators[g].field, g0.m);
    std::vector<std::uint32_t> chosen(t);
    // alive bit g: generator g independent on the current prefix
    auto dfs = [&](auto&& self, std::uint32_t depth, std::uint32_t from, std::uint32_t to, std::uint32_t alive) -> void {
      for (std::uint32_t c = from; c < to; ++c) {
        chosen[depth] = c;
        if (depth + 1 == t) {
          ++part.checked;
          bool covered = false;
          for (std::size_t g = 0; g < G && !covered; ++g) {
            if (!(alive >> g & 1u)) continue;
            covered = ech[g].push(columns[g][c]);
            ech[g].truncate(depth);
          }
          if (!covered) {
            ++part.uncovered;
            if (part.sets.size() < opt.max_recorded) {
              std::vector<std::uint32_t> labels(t);
              for (std::uint32_t i = 0; i < t; ++i) labels[i] = column_labels[chosen[i]];
              std::sort(labels.begin(), labels.end());
              part.sets.push_back(std::move(labels));
            }
          }
          continue;
        }
        std::uint32_t next = 0;
        for (std::size_t g = 0; g < G; ++g) {
          if (!(alive >> g & 1u)) continue;
          if (ech[g].push(columns[g][c])) next |= 1u << g;
        }
        self(self, depth + 1, c + 1, k - t + depth + 2, next);
        for (std::size_t g = 0; g < G; ++g) ech[g].truncate(depth);
      }
    };
    const std::uint32_t all = G == 32 ? 0xffffffffu : ((1u << G) - 1);
    dfs(dfs, 0, static_cast<std::uint32_t>(begin), static_cast<std::uint32_t>(end), all);
  });

  RankCertificate cert;
  cert.t = t;
  cert.k = k;
  cert.generators = G;
  for (auto& p : parts) {
    cert.sets_checked += p.checked;
    cert.uncovered_count += p.uncovered;
    for (auto& s : p.sets) cert.uncovered_sets.push_back(std::move(s));
  }
  std::sort(cert.uncovered_sets.begin(), cert.uncovered_sets.end());
  if (cert.uncovered_sets.size() > opt.max_recorded) cert.uncovered_sets.resize(opt.max_recorded);
  cert.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

/// Outcome of one case of the recursive-construction argument.
struct CaseResult {
  std::string name;
  bool passed = false;
  std::uint64_t checked = 0;
  std::string detail;
};

struct StructuralReport {
  std::uint32_t q = 0;
  std::vector<CaseResult> cases;
  std::int64_t elapsed_ms = 0;

  bool passed() const {
    return !cases.empty() &&
           std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.passed; });
  }
};

/// Certifies the recursive full-ovoid array without enumerating its tuples.
/// Columns are x + p·h with base index x < h = (q^2+1)/2 and side p ∈ {0,1};
/// four distinct columns have four distinct base indices (case 1), exactly
/// three (case 2), or two mirrored pairs (case 3).
inline StructuralReport verify_recursive_structure(const FieldTower& tower, const CoveringArray& R,
                                                   std::optional<unsigned> threads = {}) {
  const auto start = std::chrono::steady_clock::now();
  detail::require_odd_m4(tower);
  const std::uint32_t q = tower.q();
  const std::uint32_t n = q * q + 1;
  const std::uint32_t h = n / 2;
  const auto& F = tower.base();
  StructuralReport rep;
  rep.q = q;

  const auto full = generator_matrix(tower, q + 1, n);
  const auto g2 = generator_matrix(tower, 2 * (q + 1), h);
  const auto g4 = generator_matrix(tower, 4 * (q + 1), h);
  RankOptions ropt;
  ropt.threads = threads;

  {  // case 1: rank 4 in g2 or g4 on the base indices, else in `full` for every side pattern
    CaseResult c{"four distinct base indices", true, 0, ""};
    auto cert = verify_rank_cphf({g2, g4}, 4, {}, ropt);
    c.checked = cert.sets_checked;
    std::uint64_t patterns = 0;
    for (const auto& s : cert.uncovered_sets) {
      for (std::uint32_t mask = 0; mask < 16 && c.passed; ++mask) {
        std::array<std::uint32_t, 4> cols{};
        for (std::uint32_t b = 0; b < 4; ++b) cols[b] = s[b] + ((mask >> b & 1u) ? h : 0);
        ++patterns;
        if (column_rank(full, cols) < 4) {
          c.passed = false;
          c.detail = "columns {" + std::to_string(cols[0]) + " " + std::to_string(cols[1]) + " " +
                     std::to_string(cols[2]) + " " + std::to_string(cols[3]) + "} rank deficient in all generators";
        }
      }
      if (!c.passed) break;
    }
    if (cert.uncovered_count > cert.uncovered_sets.size()) {
      c.passed = false;
      c.detail = "too many sets deficient in both half generators to certify";
    }
    if (c.passed)
      c.detail = std::to_string(cert.uncovered_count) + " base sets deferred to the full generator, " +
                 std::to_string(patterns) + " side patterns rank 4";
    rep.cases.push_back(std::move(c));
  }
  {  // case 2: R and both half span arrays have strength 3; offsets exhaust GF(q)
    CaseResult c{"three distinct base indices", true, 0, ""};
    try {
      auto cov = check_ingredient(R, q, threads);
      c.checked += cov.subsets;
    } catch (const InvalidArgument& e) {
      c.passed = false;
      c.detail = std::string("ingredient: ") + e.what();
    }
    for (const auto* g : {&g2, &g4}) {
      if (!c.passed) break;
      auto cert = verify_rank_cphf({*g}, 3, {}, ropt);
      c.checked += cert.sets_checked;
      if (!cert.passed()) {
        c.passed = false;
        const auto& s = cert.uncovered_sets.front();
        c.detail = "generator step " + std::to_string(g->step) + " dependent on {" + std::to_string(s[0]) + " " +
                   std::to_string(s[1]) + " " + std::to_string(s[2]) + "}";
      }
    }
    if (c.passed) {
      std::vector<bool> seen(q, false);
      std::vector<std::uint32_t> offsets{0, 1};
      const std::uint32_t e = tower.subfield_primitive();
      std::uint32_t power = 1;
      for (std::uint32_t r = 1; r + 2 <= q; ++r) offsets.push_back(power = F.mul(power, e));
      for (auto o : offsets) {
        if (seen[o]) {
          c.passed = false;
          c.detail = "offset " + std::to_string(o) + " repeated";
          break;
        }
        seen[o] = true;
      }
      if (c.passed) c.detail = "ingredient strength 3, half generators rank 3 on every triple, " + std::to_string(offsets.size()) + " distinct offsets";
    }
    rep.cases.push_back(std::move(c));
  }
  {  // case 3: {i, j, i+h, j+h} has rank 4 in the full generator
    CaseResult c{"two mirrored pairs", true, 0, ""};
    for (std::uint32_t i = 0; i < h && c.passed; ++i)
      for (std::uint32_t j = i + 1; j < h; ++j) {
        ++c.checked;
        std::array<std::uint32_t, 4> cols{i, j, i + h, j + h};
        if (column_rank(full, cols) < 4) {
          c.passed = false;
          c.detail = "columns {" + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(i + h) + " " +
                     std::to_string(j + h) + "} coplanar";
          break;
        }
      }
    if (c.passed) c.detail = std::to_string(c.checked) + " mirrored sets rank 4";
    rep.cases.push_back(std::move(c));
  }
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

/// The pieces of a constructed array that can be rebuilt from its provenance.
struct ConstructionInfo {
  std::string base;      // ca3-projective, ca4-half, ca4-full
  std::size_t columns;   // kept columns
  std::uint32_t claimed_t;
};

inline ConstructionInfo parse_construction(const std::string& name) {
  ConstructionInfo info{name, 0, 0};
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    info.base = name.substr(0, colon);
    try {
      info.columns = std::stoul(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad column count in construction '" + name + "'");
    }
  }
  if (info.base == "ca3-projective") info.claimed_t = 3;
  else if (info.base == "ca4-half" || info.base == "ca4-full") info.claimed_t = 4;
  else throw InvalidArgument("no structural engine for construction '" + name + "'");
  return info;
}

/// Tower named by a provenance record.
inline FieldTower tower_from_provenance(const Provenance& p, std::uint32_t m) {
  if (p.poly.size() != m + 1)
    throw InvalidArgument("provenance polynomial has the wrong degree for this construction");
  return FieldTower::for_order(p.q, m, p.poly);
}

/// Verdict of the generator-based engine appropriate for a constructed array.
struct EngineResult {
  std::string engine;
  bool passed = false;
  /// The file's rows equal the rows rebuilt from its provenance.
  bool rows_match = false;
  std::uint64_t deficient = 0;
  std::string detail;
  std::int64_t elapsed_ms = 0;
};

/// Rebuilds `ca` from its provenance and certifies the construction at
/// strength t with the rank or structural engine. The certificate speaks for
/// the file only when rows_match is true.
inline EngineResult certify_construction(const CoveringArray& ca, std::uint32_t t,
                                         std::optional<unsigned> threads = {}) {
  const auto start = std::chrono::steady_clock::now();
  auto info = parse_construction(ca.provenance.construction);
  if (t > info.claimed_t)
    throw InvalidArgument("no structural engine certifies strength " + std::to_string(t) + " for " + info.base);
  const std::uint32_t q = ca.provenance.q;
  EngineResult res;
  RankOptions ropt;
  ropt.threads = threads;
  auto finish = [&](const CoveringArray& rebuilt) {
    res.rows_match = rebuilt.array == ca.array && rebuilt.v == ca.v;
  };
  if (info.base == "ca3-projective") {
    auto tower = tower_from_provenance(ca.provenance, 3);
    const std::uint32_t k = info.columns ? static_cast<std::uint32_t>(info.columns) : q * q + q + 1;
    auto rebuilt = build_ca3_projective(tower);
    if (info.columns) rebuilt = restrict_columns(rebuilt, info.columns);
    finish(rebuilt);
    auto cert = verify_rank_cphf({generator_matrix(tower, 1, k), generator_matrix(tower, -1, k)}, t, {}, ropt);
    res.engine = "rank";
    res.passed = cert.passed();
    res.deficient = cert.uncovered_count;
    res.detail = std::to_string(cert.sets_checked) + " column sets, " + std::to_string(cert.uncovered_count) +
                 " uncovered";
  } else if (info.base == "ca4-half") {
    auto tower = tower_from_provenance(ca.provenance, 4);
    auto gens = half_ovoid_generators(tower);
    auto rebuilt = build_ca4_half(tower);
    if (info.columns) {
      rebuilt = restrict_columns(rebuilt, info.columns);
      for (auto& g : gens) g = g.first_columns(static_cast<std::uint32_t>(info.columns));
    }
    finish(rebuilt);
    std::vector<std::uint32_t> labels(gens[0].cols);
    for (std::uint32_t i = 0; i < labels.size(); ++i) labels[i] = 2 * i;
    auto cert = verify_rank_cphf(gens, t, labels, ropt);
    res.engine = "rank";
    res.passed = cert.passed();
    res.deficient = cert.uncovered_count;
    res.detail = std::to_string(cert.sets_checked) + " column sets, " + std::to_string(cert.uncovered_count) +
                 " uncovered";
  } else {  // ca4-full
    if (info.columns) throw InvalidArgument("restricted recursive arrays have no structural engine");
    if (t != 4) throw InvalidArgument("the structural engine certifies strength 4 only");
    auto tower = tower_from_provenance(ca.provenance, 4);
    const std::uint64_t q4 = detail::ipow(q, 4);
    const std::uint32_t h = (q * q + 1) / 2;
    if (ca.k() != 2 * std::size_t{h} || ca.N() < 3 * q4 || (q > 2 && (ca.N() - 3 * q4) % (q - 2) != 0))
      throw InvalidArgument("array shape does not match the recursive construction");
    // the first ingredient block's left half is R
    const std::size_t nr = (ca.N() - 3 * q4) / (q - 2);
    CoveringArray R;
    R.t = 3;
    R.v = q;
    R.array = SymbolMatrix(0, h);
    for (std::size_t r = 0; r < nr; ++r) R.array.append_row(ca.array.row(3 * q4 + r).first(h));
    auto rep = verify_recursive_structure(tower, R, threads);
    res.engine = "structural";
    res.passed = rep.passed();
    for (const auto& c : rep.cases) {
      res.detail += c.name + ": " + (c.passed ? "pass" : "FAIL") + " (" + c.detail + "); ";
      if (!c.passed) ++res.deficient;
    }
    if (rep.passed()) finish(build_ca4_full(tower, R, ca.provenance.ingredient, threads));
  }
  res.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return res;
}

/// Brute force and the construction engine side by side.
struct CrossCheckReport {
  CoverageReport coverage;
  EngineResult engine;
  bool agree = false;
  std::string explanation;
};

/// Runs both engines. When the file's rows are the construction's rows the
/// verdicts must agree, otherwise InternalConsistencyError is thrown. When
/// they differ, the engine certifies the construction and not the file, so a
/// disagreement is reported but not fatal.
inline CrossCheckReport cross_check(const CoveringArray& ca, std::uint32_t t, std::optional<unsigned> threads = {}) {
  CrossCheckReport rep;
  CoverageOptions copt;
  copt.threads = threads;
  rep.coverage = verify_coverage(ca, t, copt);
  rep.engine = certify_construction(ca, t, threads);
  rep.agree = rep.coverage.passed == rep.engine.passed;
  if (rep.engine.rows_match) {
    if (!rep.agree)
      throw InternalConsistencyError("brute force says " + std::string(rep.coverage.passed ? "pass" : "fail") +
                                     " but the " + rep.engine.engine + " engine says " +
                                     (rep.engine.passed ? "pass" : "fail"));
    rep.explanation = "engines agree on the constructed array";
  } else if (rep.agree) {
    rep.explanation = "engines agree; rows differ from the declared construction";
  } else {
    rep.explanation = "the " + rep.engine.engine +
                      " engine certifies the declared construction, not this file, whose rows differ from it";
  }
  return rep;
}

/// Brute force is chosen while C(k,t)·N·t stays at or below this.
inline constexpr double kBruteForceBudget = 1e10;

inline bool brute_force_feasible(const CoveringArray& ca, std::uint32_t t) {
  double cost = static_cast<double>(detail::binomial(ca.k(), t)) * static_cast<double>(ca.N()) * t;
  std::uint64_t space = 1;
  for (std::uint32_t i = 0; i < t && space <= kMaxTupleSpace; ++i) space *= ca.v;
  return cost <= kBruteForceBudget && space <= kMaxTupleSpace;
}

}  // namespace covarray
