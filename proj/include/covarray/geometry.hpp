#pragma once

// Singer difference set, elliptic-quadric ovoid and Möbius planes in PG(3, q),
// plus executable checks of their combinatorial properties.
//
// Ovoid point i is L(α^{i(q+1)}), 0 <= i < q^2 + 1. Circles are sorted index
// sets over Z_{q^2+1}.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "covarray/common.hpp"
#include "covarray/gf.hpp"

namespace covarray {

using Circle = std::vector<std::uint32_t>;

/// {j in Z_v : Tr(α^j) = 0}, v = (q^4-1)/(q-1).
struct DifferenceSet {
  std::uint32_t q = 0;
  std::uint64_t modulus = 0;
  std::vector<std::uint32_t> members;  // sorted
  std::vector<bool> indicator;         // indicator[r] iff r in members

  std::uint64_t k() const { return (detail::ipow(q, 3) - 1) / (q - 1); }
  std::uint64_t lambda() const { return q + 1; }
  bool contains(std::uint64_t r) const { return indicator[r % modulus]; }
};

namespace detail {
inline void require_m4(const FieldTower& tower) {
  if (tower.m() != 4) throw InvalidArgument("geometry requires a degree-4 tower");
}
inline void require_odd(std::uint32_t q) {
  if (q % 2 == 0) throw InvalidArgument("q must be an odd prime power");
}
}  // namespace detail

/// Trace-zero exponents evaluated directly, one trace per residue.
inline std::vector<std::uint32_t> trace_zero_exponents(const FieldTower& tower) {
  detail::require_m4(tower);
  const std::uint64_t v = tower.group_order() / (tower.q() - 1);
  std::vector<std::uint32_t> out;
  for (std::uint64_t j = 0; j < v; ++j)
    if (tower.trace_of_power(static_cast<std::int64_t>(j)) == 0) out.push_back(static_cast<std::uint32_t>(j));
  return out;
}

/// Runs the trace LFSR of the tower polynomial and collects its zeros.
/// Throws std::logic_error if the sequence disagrees with direct evaluation.
inline DifferenceSet build_difference_set(const FieldTower& tower) {
  detail::require_m4(tower);
  const auto& F = tower.base();
  const auto& f = tower.tower_poly();  // x^4 + b_1 x^3 + b_2 x^2 + b_3 x + b_4, b_j = f[4-j]
  DifferenceSet D;
  D.q = tower.q();
  D.modulus = tower.group_order() / (tower.q() - 1);
  std::vector<std::uint32_t> gamma(D.modulus);
  for (std::uint32_t j = 0; j < 4 && j < D.modulus; ++j) gamma[j] = tower.trace_of_power(j);
  for (std::uint64_t n = 4; n < D.modulus; ++n) {
    std::uint32_t s = 0;
    for (std::uint32_t j = 1; j <= 4; ++j) s = F.add(s, F.mul(f[4 - j], gamma[n - j]));
    gamma[n] = F.neg(s);
  }
  D.indicator.assign(D.modulus, false);
  for (std::uint64_t n = 0; n < D.modulus; ++n) {
    if (gamma[n] != 0) continue;
    D.members.push_back(static_cast<std::uint32_t>(n));
    D.indicator[n] = true;
  }
  if (D.members != trace_zero_exponents(tower))
    throw std::logic_error("trace LFSR disagrees with direct trace evaluation");
  return D;
}

/// Number of ordered pairs (a, b) in D with a - b ≡ d, for every residue d.
inline std::vector<std::uint64_t> difference_counts(const DifferenceSet& D) {
  std::vector<std::uint64_t> counts(D.modulus, 0);
  for (auto a : D.members)
    for (auto b : D.members) ++counts[(a + D.modulus - b) % D.modulus];
  return counts;
}

struct Ovoid {
  std::uint32_t q = 0;
  std::vector<CoordinateVector> points;
};

inline Ovoid build_ovoid(const FieldTower& tower) {
  detail::require_m4(tower);
  const std::uint32_t q = tower.q();
  Ovoid o{q, {}};
  o.points.reserve(q * q + 1);
  for (std::uint64_t i = 0; i < std::uint64_t{q} * q + 1; ++i)
    o.points.push_back(tower.decompose(static_cast<std::int64_t>(i * (q + 1))));
  return o;
}

/// C_x = {i : x + (q+1)i ∈ D, 0 <= i < q^2+1} for every x ∈ D.
inline std::map<std::uint32_t, Circle> circles_through_zero(const DifferenceSet& D) {
  const std::uint32_t q = D.q;
  const std::uint32_t n = q * q + 1;
  std::map<std::uint32_t, Circle> out;
  for (auto x : D.members) {
    Circle c;
    for (std::uint32_t i = 0; i < n; ++i)
      if (D.contains(x + std::uint64_t{q + 1} * i)) c.push_back(i);
    out.emplace(x, std::move(c));
  }
  return out;
}

enum class PlaneVariant { full, M1, M2, Mhalf };

inline std::string to_string(PlaneVariant v) {
  switch (v) {
    case PlaneVariant::full: return "full";
    case PlaneVariant::M1: return "M1";
    case PlaneVariant::M2: return "M2";
    case PlaneVariant::Mhalf: return "Mhalf";
  }
  return "?";
}

inline PlaneVariant plane_variant_from_string(const std::string& s) {
  if (s == "full") return PlaneVariant::full;
  if (s == "M1") return PlaneVariant::M1;
  if (s == "M2") return PlaneVariant::M2;
  if (s == "Mhalf") return PlaneVariant::Mhalf;
  throw ParseError("unknown plane variant '" + s + "'");
}

/// A (possibly truncated) Möbius plane on a subset of Z_{q^2+1}.
struct MobiusPlane {
  std::uint32_t q = 0;
  PlaneVariant variant = PlaneVariant::full;
  std::vector<std::uint32_t> tower_poly;
  std::vector<std::uint32_t> points;  // sorted
  std::vector<Circle> circles;        // sorted, deduplicated
  /// Circles with fewer than three points after truncation.
  std::vector<bool> degenerate;

  std::size_t degenerate_count() const { return static_cast<std::size_t>(std::count(degenerate.begin(), degenerate.end(), true)); }
};

namespace detail {
inline void canonicalize(std::vector<Circle>& circles) {
  for (auto& c : circles) std::sort(c.begin(), c.end());
  std::sort(circles.begin(), circles.end());
  circles.erase(std::unique(circles.begin(), circles.end()), circles.end());
}
inline MobiusPlane make_plane(std::uint32_t q, PlaneVariant v, std::vector<std::uint32_t> poly,
                              std::vector<std::uint32_t> points, std::vector<Circle> circles) {
  canonicalize(circles);
  MobiusPlane P{q, v, std::move(poly), std::move(points), std::move(circles), {}};
  P.degenerate.reserve(P.circles.size());
  for (const auto& c : P.circles) P.degenerate.push_back(c.size() < 3);
  return P;
}
}  // namespace detail

/// Full plane: every circle through 0, developed by the translations
/// i -> i + d (mod q^2+1).
inline MobiusPlane build_full_plane(const FieldTower& tower) {
  detail::require_m4(tower);
  const std::uint32_t q = tower.q();
  const std::uint32_t n = q * q + 1;
  auto D = build_difference_set(tower);
  std::vector<Circle> circles;
  for (const auto& [x, c] : circles_through_zero(D)) {
    if (c.size() != q + 1) continue;  // the tangent section {0}
    for (std::uint32_t d = 0; d < n; ++d) {
      Circle t;
      t.reserve(c.size());
      for (auto i : c) t.push_back((i + d) % n);
      circles.push_back(std::move(t));
    }
  }
  std::vector<std::uint32_t> points(n);
  for (std::uint32_t i = 0; i < n; ++i) points[i] = i;
  return detail::make_plane(q, PlaneVariant::full, tower.tower_poly(), std::move(points), std::move(circles));
}

/// Circles as zero sets of the nonzero rows of A(G^{q+1}_{q^2+1}): every
/// secant plane u·x = 0 meets the ovoid in q+1 points.
inline std::vector<Circle> circles_from_span(const FieldTower& tower) {
  detail::require_m4(tower);
  const auto& F = tower.base();
  const std::uint32_t q = tower.q();
  const auto ovoid = build_ovoid(tower);
  std::vector<Circle> circles;
  const std::uint64_t rows = detail::ipow(q, 4);
  for (std::uint64_t r = 1; r < rows; ++r) {
    std::array<std::uint32_t, 4> u{};
    std::uint64_t t = r;
    for (int k = 3; k >= 0; --k) {
      u[k] = static_cast<std::uint32_t>(t % q);
      t /= q;
    }
    Circle zeros;
    for (std::uint32_t i = 0; i < ovoid.points.size(); ++i) {
      std::uint32_t s = 0;
      for (int k = 0; k < 4; ++k) s = F.add(s, F.mul(u[k], ovoid.points[i][k]));
      if (s == 0) zeros.push_back(i);
    }
    if (zeros.size() == q + 1) circles.push_back(std::move(zeros));
  }
  detail::canonicalize(circles);
  return circles;
}

struct TruncatedPlanes {
  MobiusPlane M1, M2, Mhalf;
};

/// The three planes on the even residues of Z_{q^2+1}:
/// M1 = C ∩ E, M2 = (C ∩ E)/2, Mhalf = 2(C ∩ [0, (q^2+1)/2)).
/// Mhalf follows the circles-through-zero form {i even : x + (q+1)i/2 ∈ D},
/// whose zero sets are those of G^{q+1}.
inline TruncatedPlanes build_truncated_planes(const MobiusPlane& plane) {
  const std::uint32_t q = plane.q;
  detail::require_odd(q);
  if (plane.variant != PlaneVariant::full) throw InvalidArgument("truncation needs the full plane");
  const std::uint32_t n = q * q + 1;
  std::vector<std::uint32_t> evens;
  for (std::uint32_t i = 0; i < n; i += 2) evens.push_back(i);
  std::vector<Circle> c1, c2, chalf;
  for (const auto& c : plane.circles) {
    Circle a, b, h;
    for (auto i : c) {
      if (2 * i < n) h.push_back(2 * i);
      if (i % 2 != 0) continue;
      a.push_back(i);
      b.push_back(i % 4 == 0 ? i / 2 : (i + n) / 2);
    }
    c1.push_back(std::move(a));
    c2.push_back(std::move(b));
    chalf.push_back(std::move(h));
  }
  return {detail::make_plane(q, PlaneVariant::M1, plane.tower_poly, evens, std::move(c1)),
          detail::make_plane(q, PlaneVariant::M2, plane.tower_poly, evens, std::move(c2)),
          detail::make_plane(q, PlaneVariant::Mhalf, plane.tower_poly, evens, std::move(chalf))};
}

struct AntiCocircularReport {
  std::uint32_t max_intersection = 0;
  /// Circle indices (into Mhalf, M1, M2) of the lexicographically first
  /// triple attaining the maximum, and the common points.
  std::array<std::size_t, 3> witness{};
  std::vector<std::uint32_t> witness_points;
  std::size_t circles_half = 0, circles_1 = 0, circles_2 = 0;
  std::size_t degenerate = 0;

  bool passed() const { return max_intersection <= 3; }
};

/// Maximum of |c_half ∩ c_1 ∩ c_2| over one circle from each plane.
/// Iterates Mhalf × M1 × M2, skipping pairs whose intersection cannot beat
/// the best triple found so far in the same chunk.
inline AntiCocircularReport check_anti_cocircular(const MobiusPlane& m1, const MobiusPlane& m2,
                                                  const MobiusPlane& mhalf,
                                                  std::optional<unsigned> threads = std::nullopt) {
  if (m1.points != m2.points || m1.points != mhalf.points)
    throw InvalidArgument("planes must share one point set");
  const auto& pts = m1.points;
  const std::size_t words = (pts.size() + 63) / 64;
  const std::uint32_t universe = pts.empty() ? 0 : pts.back() + 1;
  std::vector<std::int64_t> position(universe, -1);
  for (std::size_t i = 0; i < pts.size(); ++i) position[pts[i]] = static_cast<std::int64_t>(i);
  auto pack = [&](const MobiusPlane& P) {
    std::vector<std::uint64_t> bits(P.circles.size() * words, 0);
    for (std::size_t c = 0; c < P.circles.size(); ++c)
      for (auto x : P.circles[c]) {
        if (x >= universe || position[x] < 0) throw InvalidArgument("circle point outside the point set");
        auto pos = static_cast<std::size_t>(position[x]);
        bits[c * words + pos / 64] |= std::uint64_t{1} << (pos % 64);
      }
    return bits;
  };
  const auto bh = pack(mhalf), b1 = pack(m1), b2 = pack(m2);
  const std::size_t nh = mhalf.circles.size(), n1 = m1.circles.size(), n2 = m2.circles.size();

  struct Best {
    std::uint32_t size = 0;
    std::array<std::size_t, 3> at{};
    bool found = false;
  };
  const unsigned workers = resolve_threads(threads);
  std::vector<Best> per_chunk(chunk_count(nh, workers));
  parallel_chunks(nh, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    Best best;
    std::vector<std::uint64_t> ab(words);
    for (std::size_t a = begin; a < end; ++a) {
      for (std::size_t b = 0; b < n1; ++b) {
        std::uint32_t pair = 0;
        for (std::size_t w = 0; w < words; ++w) {
          ab[w] = bh[a * words + w] & b1[b * words + w];
          pair += static_cast<std::uint32_t>(std::popcount(ab[w]));
        }
        if (best.found && pair <= best.size) continue;
        for (std::size_t c = 0; c < n2; ++c) {
          std::uint32_t s = 0;
          for (std::size_t w = 0; w < words; ++w) s += static_cast<std::uint32_t>(std::popcount(ab[w] & b2[c * words + w]));
          if (!best.found || s > best.size) best = {s, {a, b, c}, true};
        }
      }
    }
    per_chunk[chunk] = best;
  });

  AntiCocircularReport r;
  r.circles_half = nh;
  r.circles_1 = n1;
  r.circles_2 = n2;
  r.degenerate = m1.degenerate_count() + m2.degenerate_count() + mhalf.degenerate_count();
  bool any = false;
  for (const auto& b : per_chunk) {
    if (!b.found) continue;
    if (!any || b.size > r.max_intersection) {
      r.max_intersection = b.size;
      r.witness = b.at;
      any = true;
    }
  }
  if (any) {
    const auto& [a, b, c] = r.witness;
    for (auto x : mhalf.circles[a])
      if (std::binary_search(m1.circles[b].begin(), m1.circles[b].end(), x) &&
          std::binary_search(m2.circles[c].begin(), m2.circles[c].end(), x))
        r.witness_points.push_back(x);
  }
  return r;
}

struct ThreeDesignReport {
  bool passed = false;
  std::size_t blocks = 0;
  std::uint32_t block_size_min = 0, block_size_max = 0;
  std::uint64_t triples_missing = 0, triples_repeated = 0;
  std::array<std::uint32_t, 3> witness{};  // first offending triple
};

/// Checks that every 3-subset of the plane's points lies in exactly one circle.
inline ThreeDesignReport check_three_design(const MobiusPlane& plane) {
  const auto& pts = plane.points;
  const std::uint64_t n = pts.size();
  const std::uint32_t universe = pts.empty() ? 0 : pts.back() + 1;
  std::vector<std::int64_t> position(universe, -1);
  for (std::size_t i = 0; i < pts.size(); ++i) position[pts[i]] = static_cast<std::int64_t>(i);
  // colex rank of a < b < c
  auto rank = [](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return c * (c - 1) * (c - 2) / 6 + b * (b - 1) / 2 + a;
  };
  std::vector<std::uint8_t> count(detail::binomial(n, 3), 0);
  ThreeDesignReport r;
  r.blocks = plane.circles.size();
  r.block_size_min = r.blocks ? UINT32_MAX : 0;
  for (const auto& c : plane.circles) {
    r.block_size_min = std::min<std::uint32_t>(r.block_size_min, static_cast<std::uint32_t>(c.size()));
    r.block_size_max = std::max<std::uint32_t>(r.block_size_max, static_cast<std::uint32_t>(c.size()));
    std::vector<std::uint64_t> idx;
    for (auto x : c) idx.push_back(static_cast<std::uint64_t>(position.at(x)));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i + 1; j < idx.size(); ++j)
        for (std::size_t k = j + 1; k < idx.size(); ++k) {
          auto& slot = count[rank(idx[i], idx[j], idx[k])];
          if (slot < 255) ++slot;
        }
  }
  bool first = true;
  for (std::uint64_t c = 2; c < n; ++c)
    for (std::uint64_t b = 1; b < c; ++b)
      for (std::uint64_t a = 0; a < b; ++a) {
        auto v = count[rank(a, b, c)];
        if (v == 1) continue;
        (v == 0 ? r.triples_missing : r.triples_repeated)++;
        if (first) {
          r.witness = {pts[a], pts[b], pts[c]};
          first = false;
        }
      }
  r.passed = first;
  return r;
}

/// Outcome of one executable property of the circles through 0.
struct LemmaResult {
  std::string name;
  bool passed = false;
  std::string counterexample;  // empty on success
};

struct LemmaReport {
  std::uint32_t q = 0;
  std::vector<LemmaResult> lemmas;

  bool passed() const {
    return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& l) { return l.passed; });
  }
};

namespace detail {
inline std::string join(std::initializer_list<std::uint64_t> xs) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto x : xs) {
    os << (first ? "" : ", ") << x;
    first = false;
  }
  os << '}';
  return os.str();
}
}  // namespace detail

/// Exhaustively evaluates the circle properties used by the strength-4
/// constructions. h denotes (q^2+1)/2 and arithmetic on indices is mod q^2+1.
inline LemmaReport run_lemma_suite(const FieldTower& tower) {
  detail::require_m4(tower);
  const std::uint32_t q = tower.q();
  detail::require_odd(q);
  const std::uint32_t n = q * q + 1;
  const std::uint32_t h = n / 2;
  const std::uint32_t x0 = h * (q + 1);
  auto D = build_difference_set(tower);
  auto through_zero = circles_through_zero(D);
  auto plane = build_full_plane(tower);
  auto neg = [&](std::uint32_t i) { return (n - i) % n; };
  auto in = [](const Circle& c, std::uint32_t i) { return std::binary_search(c.begin(), c.end(), i); };

  LemmaReport report{q, {}};
  auto add = [&](std::string name, std::string cex) {
    report.lemmas.push_back({std::move(name), cex.empty(), std::move(cex)});
  };

  {  // Tr(α^{(q+1)x}) = 0 only at x = h
    std::string cex;
    for (std::uint32_t x = 0; x < n && cex.empty(); ++x) {
      bool zero = tower.trace_of_power(std::int64_t{x} * (q + 1)) == 0;
      if (zero != (x == h)) cex = "x = " + std::to_string(x) + (zero ? " is a root" : " is not a root");
    }
    add("trace-root-unique", cex);
  }
  {  // C_{x0} = {0}; the other C_x are exactly the circles through 0
    std::string cex;
    auto it = through_zero.find(x0);
    if (it == through_zero.end()) {
      cex = "x0 = " + std::to_string(x0) + " not in D";
    } else if (it->second != Circle{0}) {
      cex = "C_x0 has " + std::to_string(it->second.size()) + " points";
    } else {
      std::vector<Circle> from_d, from_plane;
      for (const auto& [x, c] : through_zero)
        if (x != x0) from_d.push_back(c);
      for (const auto& c : plane.circles)
        if (in(c, 0)) from_plane.push_back(c);
      detail::canonicalize(from_d);
      if (from_d.size() != through_zero.size() - 1) cex = "two elements of D give the same circle";
      else if (from_d != from_plane) cex = "circles C_x differ from the plane's circles through 0";
      else if (from_d.size() != std::size_t{q} * (q + 1)) cex = "wrong number of circles through 0";
    }
    add("circles-through-zero", cex);
  }
  {  // 0, i, -i, j ∈ C_x with i, j ∉ {0, h} implies -j ∈ C_x
    std::string cex;
    for (const auto& [x, c] : through_zero) {
      for (auto i : c) {
        if (i == 0 || i == h || !in(c, neg(i))) continue;
        for (auto j : c)
          if (j != 0 && j != h && !in(c, neg(j))) {
            cex = "x = " + std::to_string(x) + ", i = " + std::to_string(i) + ", j = " + std::to_string(j);
            break;
          }
        if (!cex.empty()) break;
      }
      if (!cex.empty()) break;
    }
    add("symmetric-circle", cex);
  }
  {  // 0, h ∈ C_x implies C_x = -C_x
    std::string cex;
    for (const auto& [x, c] : through_zero) {
      if (!in(c, 0) || !in(c, h)) continue;
      for (auto i : c)
        if (!in(c, neg(i))) {
          cex = "x = " + std::to_string(x) + ", i = " + std::to_string(i);
          break;
        }
      if (!cex.empty()) break;
    }
    add("center-circle", cex);
  }
  {  // 0, i, -i ∈ C_x with i ∉ {0, h} implies 2i ∉ C_x
    std::string cex;
    for (const auto& [x, c] : through_zero) {
      for (auto i : c)
        if (i != 0 && i != h && in(c, neg(i)) && in(c, 2 * i % n)) {
          cex = "x = " + std::to_string(x) + ", i = " + std::to_string(i);
          break;
        }
      if (!cex.empty()) break;
    }
    add("no-double", cex);
  }
  {  // no circle contains {i, j, i+h, j+h} with i != j
    std::string cex;
    for (const auto& c : plane.circles) {
      std::vector<std::uint32_t> folded;
      for (auto i : c)
        if (i < h && in(c, i + h)) folded.push_back(i);
      if (folded.size() >= 2) {
        cex = "circle contains " + detail::join({folded[0], folded[1], folded[0] + h, folded[1] + h});
        break;
      }
    }
    add("fold", cex);
  }
  {  // no C_x contains five distinct points {0, i, j, 2i, 2j}
    std::string cex;
    for (const auto& [x, c] : through_zero) {
      for (auto i : c) {
        if (i == 0 || !in(c, 2 * i % n) || 2 * i % n == 0) continue;
        for (auto j : c) {
          if (j <= i || !in(c, 2 * j % n) || 2 * j % n == 0) continue;
          std::vector<std::uint32_t> s{0, i, j, 2 * i % n, 2 * j % n};
          std::sort(s.begin(), s.end());
          if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
          cex = "x = " + std::to_string(x) + ", i = " + std::to_string(i) + ", j = " + std::to_string(j);
          break;
        }
        if (!cex.empty()) break;
      }
      if (!cex.empty()) break;
    }
    add("no-double-three", cex);
  }
  return report;
}

/// Plane dump: header `MOBIUS q=<q> variant=<v> poly=<c0,c1,...>` then one
/// circle per line, indices space separated.
inline void write_plane(std::ostream& os, const MobiusPlane& plane) {
  os << "MOBIUS q=" << plane.q << " variant=" << to_string(plane.variant)
     << " poly=" << coeffs_to_string(plane.tower_poly, ',') << '\n';
  for (const auto& c : plane.circles) {
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << '\n';
  }
}

inline MobiusPlane read_plane(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty plane dump");
  std::istringstream hs(line);
  std::string tag, qf, vf, pf;
  if (!(hs >> tag >> qf >> vf >> pf) || tag != "MOBIUS" || qf.rfind("q=", 0) != 0 || vf.rfind("variant=", 0) != 0 ||
      pf.rfind("poly=", 0) != 0)
    throw ParseError("bad plane header: '" + line + "'");
  MobiusPlane P;
  try {
    P.q = static_cast<std::uint32_t>(std::stoul(qf.substr(2)));
  } catch (const std::exception&) {
    throw ParseError("bad q in plane header");
  }
  P.variant = plane_variant_from_string(vf.substr(8));
  P.tower_poly = parse_coeffs(pf.substr(5));
  const std::uint32_t n = P.q * P.q + 1;
  for (std::uint32_t i = 0; i < n; i += (P.variant == PlaneVariant::full ? 1 : 2)) P.points.push_back(i);
  while (std::getline(is, line)) {
    Circle c;
    std::istringstream ls(line);
    long long x;
    while (ls >> x) {
      if (x < 0 || x >= n) throw ParseError("circle index out of range");
      c.push_back(static_cast<std::uint32_t>(x));
    }
    if (!ls.eof()) throw ParseError("bad circle line: '" + line + "'");
    P.circles.push_back(std::move(c));
  }
  return detail::make_plane(P.q, P.variant, P.tower_poly, P.points, std::move(P.circles));
}

}  // namespace covarray
