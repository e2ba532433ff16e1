#pragma once

// Brute-force t-wise coverage: for every t-subset of columns, count every
// t-tuple that appears among the rows.

#include <chrono>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "covarray/array.hpp"
#include "covarray/common.hpp"

namespace covarray {

/// A column set missing (or under-covering) one tuple.
struct CoverageWitness {
  std::vector<std::uint32_t> columns;
  std::vector<Symbol> tuple;
  std::uint64_t count = 0;  // occurrences observed, < λ_required
};

struct CoverageReport {
  bool passed = false;
  std::uint32_t t = 0;
  std::uint64_t lambda_required = 1;
  std::uint64_t lambda_min = 0;
  std::vector<CoverageWitness> witnesses;  // capped, enumeration order
  std::uint64_t deficient_tuples = 0;      // uncapped total
  std::uint64_t subsets = 0;
  std::int64_t elapsed_ms = 0;
};

struct CoverageOptions {
  std::uint64_t lambda_required = 1;
  std::size_t witness_cap = 100;
  std::optional<unsigned> threads;
};

/// Largest v^t for which the tuple counter is allocated.
inline constexpr std::uint64_t kMaxTupleSpace = std::uint64_t{1} << 28;

namespace detail {

/// Colex unranking of a t-subset of {0, ..., k-1}.
inline std::vector<std::uint32_t> colex_unrank(std::uint64_t rank, std::uint32_t t, std::uint32_t k) {
  std::vector<std::uint32_t> c(t);
  for (std::uint32_t i = t; i-- > 0;) {
    std::uint32_t x = i;
    while (x + 1 < k && binomial(x + 1, i + 1) <= rank) ++x;
    c[i] = x;
    rank -= binomial(x, i + 1);
  }
  return c;
}

/// Advances to the next subset in colex order; false after the last one.
inline bool colex_next(std::vector<std::uint32_t>& c, std::uint32_t k) {
  const std::size_t t = c.size();
  for (std::size_t i = 0; i < t; ++i) {
    std::uint32_t limit = (i + 1 < t) ? c[i + 1] : k;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<std::uint32_t>(j);
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Checks every t-subset of columns for λ-coverage. Subsets are visited in
/// colex order; the first witness_cap deficient (subset, tuple) pairs are
/// reported in that order.
inline CoverageReport verify_coverage(const SymbolMatrix& a, std::uint32_t v, std::uint32_t t,
                                      const CoverageOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::uint32_t k = static_cast<std::uint32_t>(a.cols());
  if (t < 1 || t > k) throw InvalidArgument("strength t must satisfy 1 <= t <= k");
  if (v < 1) throw InvalidArgument("alphabet must be non-empty");
  std::uint64_t space = 1;
  for (std::uint32_t i = 0; i < t; ++i) {
    space *= v;
    if (space > kMaxTupleSpace)
      throw InvalidArgument("v^t exceeds the brute-force memory guard; use the rank engine");
  }
  const std::size_t N = a.rows();
  // column-major copy for sequential access per column
  std::vector<std::vector<std::uint32_t>> cols(k, std::vector<std::uint32_t>(N));
  for (std::size_t r = 0; r < N; ++r)
    for (std::uint32_t c = 0; c < k; ++c) cols[c][r] = a.at(r, c);

  const std::uint64_t total = detail::binomial(k, t);
  const std::size_t cap = std::max<std::size_t>(opt.witness_cap, 1);
  struct Partial {
    std::uint64_t lambda_min = UINT64_MAX;
    std::uint64_t deficient = 0;
    std::vector<CoverageWitness> witnesses;
  };
  const unsigned workers = resolve_threads(opt.threads);
  std::vector<Partial> parts(chunk_count(total, workers));
  parallel_chunks(total, workers, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    Partial& part = parts[chunk];
    std::vector<std::uint32_t> counts(space);
    std::vector<std::uint32_t> index(N);
    auto subset = detail::colex_unrank(begin, t, k);
    for (std::size_t s = begin; s < end; ++s) {
      std::fill(index.begin(), index.end(), 0u);
      for (std::uint32_t i = 0; i < t; ++i) {
        const auto& col = cols[subset[i]];
        for (std::size_t r = 0; r < N; ++r) index[r] = index[r] * v + col[r];
      }
      std::fill(counts.begin(), counts.end(), 0u);
      for (auto x : index) ++counts[x];
      for (std::uint64_t x = 0; x < space; ++x) {
        part.lambda_min = std::min<std::uint64_t>(part.lambda_min, counts[x]);
        if (counts[x] >= opt.lambda_required) continue;
        ++part.deficient;
        if (part.witnesses.size() < cap) {
          CoverageWitness w{subset, std::vector<Symbol>(t), counts[x]};
          std::uint64_t y = x;
          for (std::uint32_t i = t; i-- > 0;) {
            w.tuple[i] = static_cast<Symbol>(y % v);
            y /= v;
          }
          part.witnesses.push_back(std::move(w));
        }
      }
      detail::colex_next(subset, k);
    }
  });

  CoverageReport rep;
  rep.t = t;
  rep.lambda_required = opt.lambda_required;
  rep.subsets = total;
  rep.lambda_min = UINT64_MAX;
  for (auto& p : parts) {
    rep.lambda_min = std::min(rep.lambda_min, p.lambda_min);
    rep.deficient_tuples += p.deficient;
    for (auto& w : p.witnesses)
      if (rep.witnesses.size() < cap) rep.witnesses.push_back(std::move(w));
  }
  if (rep.lambda_min == UINT64_MAX) rep.lambda_min = 0;
  rep.passed = rep.deficient_tuples == 0;
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline CoverageReport verify_coverage(const CoveringArray& ca, std::uint32_t t, const CoverageOptions& opt = {}) {
  return verify_coverage(ca.array, ca.v, t, opt);
}

/// `VERDICT pass|fail t=<t> lambda_min=<n> witnesses=<n> ms=<n>`.
inline std::string verdict_line(bool passed, std::uint32_t t, std::uint64_t lambda_min, std::size_t witnesses,
                                std::int64_t ms) {
  std::ostringstream os;
  os << "VERDICT " << (passed ? "pass" : "fail") << " t=" << t << " lambda_min=" << lambda_min
     << " witnesses=" << witnesses << " ms=" << ms;
  return os.str();
}

inline std::string verdict_line(const CoverageReport& r) {
  return verdict_line(r.passed, r.t, r.lambda_min, r.witnesses.size(), r.elapsed_ms);
}

inline void write_report(std::ostream& os, const CoverageReport& r) {
  os << "engine: brute-force coverage\n";
  os << "strength: " << r.t << ", lambda required: " << r.lambda_required << "\n";
  os << "column sets checked: " << r.subsets << "\n";
  os << "minimum multiplicity: " << r.lambda_min << "\n";
  os << "deficient tuples: " << r.deficient_tuples << "\n";
  for (const auto& w : r.witnesses) {
    os << "  columns {";
    for (std::size_t i = 0; i < w.columns.size(); ++i) os << (i ? " " : "") << w.columns[i];
    os << "} tuple (";
    for (std::size_t i = 0; i < w.tuple.size(); ++i) os << (i ? " " : "") << int{w.tuple[i]};
    os << ") seen " << w.count << "x\n";
  }
  os << verdict_line(r) << "\n";
}

}  // namespace covarray
