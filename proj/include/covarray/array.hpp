#pragma once

// Covering arrays and their text file format:
//
//   CA N t k v
//   # provenance: <construction> q=<q> poly=<c0,c1,...> ingredient=<name|none>
//   N lines of k space-separated symbols in 0..v-1

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "covarray/common.hpp"
#include "covarray/gf.hpp"

namespace covarray {

/// Dense row-major matrix of symbols.
class SymbolMatrix {
 public:
  SymbolMatrix() = default;
  SymbolMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Symbol at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Symbol& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Symbol> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Symbol>& data() const { return data_; }

  void reserve_rows(std::size_t rows) { data_.reserve(rows * cols_); }

  void append_row(std::span<const Symbol> r) {
    if (r.size() != cols_) throw InvalidArgument("row width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }
  /// Appends rows [first, other.rows()) of `other`.
  void append_rows(const SymbolMatrix& other, std::size_t first = 0) {
    if (other.cols_ != cols_) throw InvalidArgument("column count mismatch in vertical concatenation");
    if (first >= other.rows_) return;
    data_.insert(data_.end(), other.data_.begin() + static_cast<std::ptrdiff_t>(first * cols_), other.data_.end());
    rows_ += other.rows_ - first;
  }

  bool operator==(const SymbolMatrix&) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Symbol> data_;
};

/// Where an array came from.
struct Provenance {
  std::string construction = "unknown";
  std::uint32_t q = 0;
  std::vector<std::uint32_t> poly;
  std::string ingredient = "none";

  bool operator==(const Provenance&) const = default;
};

/// CA(N; t, k, v) with the strength claimed by its construction.
struct CoveringArray {
  SymbolMatrix array;
  std::uint32_t t = 0;
  std::uint32_t v = 0;
  Provenance provenance;

  std::size_t N() const { return array.rows(); }
  std::size_t k() const { return array.cols(); }

  /// `CA(N; t, k, v)`.
  std::string summary() const {
    std::ostringstream os;
    os << "CA(" << N() << "; " << t << ", " << k() << ", " << v << ")";
    return os.str();
  }

  void validate() const {
    if (v == 0 || v > 256) throw InvalidArgument("alphabet size must be in 1..256");
    for (auto s : array.data())
      if (s >= v) throw InvalidArgument("symbol out of range");
  }
};

inline std::string provenance_line(const Provenance& p) {
  std::ostringstream os;
  os << "# provenance: " << p.construction << " q=" << p.q << " poly=" << coeffs_to_string(p.poly, ',')
     << " ingredient=" << p.ingredient;
  return os.str();
}

inline void write_ca(std::ostream& os, const CoveringArray& ca) {
  os << "CA " << ca.N() << ' ' << ca.t << ' ' << ca.k() << ' ' << ca.v << '\n';
  os << provenance_line(ca.provenance) << '\n';
  std::string line;
  for (std::size_t r = 0; r < ca.N(); ++r) {
    line.clear();
    auto row = ca.array.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += ' ';
      line += std::to_string(row[c]);
    }
    line += '\n';
    os << line;
  }
}

namespace detail {

inline Provenance parse_provenance(const std::string& line) {
  const std::string prefix = "# provenance:";
  if (line.rfind(prefix, 0) != 0) throw ParseError("bad provenance line: '" + line + "'");
  std::istringstream is(line.substr(prefix.size()));
  Provenance p;
  if (!(is >> p.construction)) throw ParseError("provenance without construction");
  std::string field;
  while (is >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) throw ParseError("bad provenance field '" + field + "'");
    auto key = field.substr(0, eq), value = field.substr(eq + 1);
    if (key == "q") {
      try {
        p.q = static_cast<std::uint32_t>(std::stoul(value));
      } catch (const std::exception&) {
        throw ParseError("bad q in provenance");
      }
    } else if (key == "poly") {
      p.poly = parse_coeffs(value);
    } else if (key == "ingredient") {
      p.ingredient = value;
    } else {
      throw ParseError("unknown provenance field '" + key + "'");
    }
  }
  return p;
}

inline void read_symbol_row(const std::string& line, std::size_t k, std::uint32_t v, std::vector<Symbol>& out,
                            std::size_t lineno) {
  std::istringstream ls(line);
  long long x;
  std::size_t n = 0;
  while (ls >> x) {
    if (x < 0 || x >= v) throw ParseError("line " + std::to_string(lineno) + ": symbol out of range");
    out.push_back(static_cast<Symbol>(x));
    ++n;
  }
  if (!ls.eof()) throw ParseError("line " + std::to_string(lineno) + ": not an integer row");
  if (n != k)
    throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(k) + " entries, got " +
                     std::to_string(n));
}

}  // namespace detail

/// Reads the native format. The provenance line is optional.
inline CoveringArray read_ca(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty file");
  std::istringstream hs(line);
  std::string tag;
  long long N, t, k, v;
  if (!(hs >> tag >> N >> t >> k >> v) || tag != "CA" || N < 0 || t < 1 || k < 1 || v < 1 || v > 256)
    throw ParseError("missing or malformed header 'CA N t k v'");
  std::string extra;
  if (hs >> extra) throw ParseError("trailing data in header");
  CoveringArray ca;
  ca.t = static_cast<std::uint32_t>(t);
  ca.v = static_cast<std::uint32_t>(v);
  std::vector<Symbol> data;
  data.reserve(static_cast<std::size_t>(N * k));
  std::size_t lineno = 1, rows = 0;
  bool first = true;
  while (std::getline(is, line)) {
    ++lineno;
    if (first && line.rfind("#", 0) == 0) {
      ca.provenance = detail::parse_provenance(line);
      first = false;
      continue;
    }
    first = false;
    if (line.empty() && is.peek() == std::char_traits<char>::eof()) break;
    detail::read_symbol_row(line, static_cast<std::size_t>(k), ca.v, data, lineno);
    ++rows;
  }
  if (rows != static_cast<std::size_t>(N))
    throw ParseError("header declares " + std::to_string(N) + " rows, file has " + std::to_string(rows));
  ca.array = SymbolMatrix(0, static_cast<std::size_t>(k));
  for (std::size_t r = 0; r < rows; ++r)
    ca.array.append_row(std::span<const Symbol>(data.data() + r * k, static_cast<std::size_t>(k)));
  return ca;
}

/// Headerless fallback: every non-empty line is a row; t and v come from the caller.
inline CoveringArray read_rows_only(std::istream& is, std::uint32_t t, std::uint32_t v) {
  if (v < 1 || v > 256) throw InvalidArgument("alphabet size must be in 1..256");
  std::string line;
  std::vector<Symbol> data;
  std::size_t k = 0, rows = 0, lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (k == 0) {
      std::istringstream ls(line);
      long long x;
      while (ls >> x) ++k;
      if (k == 0) throw ParseError("line " + std::to_string(lineno) + ": not an integer row");
    }
    detail::read_symbol_row(line, k, v, data, lineno);
    ++rows;
  }
  if (rows == 0) throw ParseError("no rows");
  CoveringArray ca;
  ca.t = t;
  ca.v = v;
  ca.array = SymbolMatrix(0, k);
  for (std::size_t r = 0; r < rows; ++r) ca.array.append_row(std::span<const Symbol>(data.data() + r * k, k));
  return ca;
}

}  // namespace covarray
