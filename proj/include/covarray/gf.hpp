#pragma once

// Finite field arithmetic for GF(p) ⊂ GF(q = p^e) ⊂ GF(q^m), m in {3, 4}.
//
// Elements of GF(q) are encoded as integers sum a_i p^i, where a_i are the
// coefficients of the element as a polynomial in the root y of the base
// polynomial. This encoding is also the covering-array alphabet.
//
// Elements of GF(q^m) are encoded as sum c_n q^n, where (c_0, ..., c_{m-1})
// are the GF(q)-coordinates w.r.t. the basis {1, α, ..., α^{m-1}} and α is a
// root of the primitive tower polynomial. The subfield GF(q) is therefore the
// set of codes below q.

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "covarray/common.hpp"

namespace covarray {

/// Monic polynomial over GF(p), coefficients low-degree-first.
struct PrimePoly {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool operator==(const PrimePoly&) const = default;
};

/// Renders coefficients low-degree-first, space separated.
inline std::string coeffs_to_string(const std::vector<std::uint32_t>& c, char sep = ' ') {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << sep;
    os << c[i];
  }
  return os.str();
}

/// Parses a comma- or space-separated coefficient list.
inline std::vector<std::uint32_t> parse_coeffs(const std::string& text) {
  std::string s = text;
  for (auto& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream is(s);
  std::vector<std::uint32_t> out;
  long long v;
  while (is >> v) {
    if (v < 0) throw ParseError("negative coefficient in '" + text + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (!is.eof()) throw ParseError("bad coefficient list '" + text + "'");
  return out;
}

namespace detail {

/// Coefficient arithmetic of GF(p), used by the primitivity test.
struct PrimeOps {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  }
};

/// x^n mod f over the coefficient ring `ops`; f monic, low-degree-first.
template <typename Ops>
std::vector<std::uint32_t> x_pow_mod(const Ops& ops, const std::vector<std::uint32_t>& f, std::uint64_t n) {
  const std::size_t d = f.size() - 1;
  auto mulmod = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> prod(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) prod[i + j] = ops.add(prod[i + j], ops.mul(a[i], b[j]));
    }
    for (std::size_t k = 2 * d - 1; k >= d; --k) {
      std::uint32_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (std::size_t j = 0; j < d; ++j) prod[k - d + j] = ops.sub(prod[k - d + j], ops.mul(c, f[j]));
    }
    prod.resize(d);
    return prod;
  };
  std::vector<std::uint32_t> result(d, 0), base(d, 0);
  result[0] = 1;
  if (d == 1) {
    base[0] = ops.sub(0, f[0]);
  } else {
    base[1] = 1;
  }
  while (n > 0) {
    if (n & 1) result = mulmod(result, base);
    base = mulmod(base, base);
    n >>= 1;
  }
  return result;
}

/// True iff x has multiplicative order field_size^deg - 1 modulo f.
template <typename Ops>
bool has_primitive_root(const Ops& ops, const std::vector<std::uint32_t>& f, std::uint64_t field_size) {
  const std::size_t d = f.size() - 1;
  if (d == 0 || f.back() != 1 || f[0] == 0) return false;
  const std::uint64_t n = ipow(field_size, static_cast<unsigned>(d)) - 1;
  auto is_one = [](const std::vector<std::uint32_t>& v) {
    if (v[0] != 1) return false;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] != 0) return false;
    return true;
  };
  if (!is_one(x_pow_mod(ops, f, n))) return false;
  for (auto r : prime_factors(n))
    if (is_one(x_pow_mod(ops, f, n / r))) return false;
  return true;
}

}  // namespace detail

/// Bound on p^e accepted by find_primitive_poly.
inline constexpr std::uint64_t kPrimitiveSearchBound = std::uint64_t{1} << 20;

/// Primitivity test for a monic polynomial over GF(p).
inline bool is_primitive(const PrimePoly& f) {
  if (!detail::is_prime(f.p)) return false;
  for (auto c : f.coeffs)
    if (c >= f.p) return false;
  return detail::has_primitive_root(detail::PrimeOps{f.p}, f.coeffs, f.p);
}

/// Deterministic primitive polynomial of degree e over GF(p).
///
/// Degree 1 returns x - g for the smallest primitive root g of p. Higher
/// degrees return the lexicographically smallest monic primitive polynomial,
/// comparing c_0 first, then c_1, and so on.
inline PrimePoly find_primitive_poly(std::uint32_t p, std::uint32_t e,
                                     std::uint64_t bound = kPrimitiveSearchBound) {
  if (!detail::is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidArgument("degree must be at least 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < e && size <= bound; ++i) size *= p;
  if (size > bound)
    throw InvalidArgument("p^e exceeds the search bound " + std::to_string(bound));
  const detail::PrimeOps ops{p};
  if (e == 1) {
    for (std::uint32_t g = 1; g < p; ++g) {
      PrimePoly f{p, {(p - g) % p, 1}};
      if (detail::has_primitive_root(ops, f.coeffs, p)) return f;
    }
    throw std::logic_error("no primitive root found");
  }
  const std::uint64_t count = detail::ipow(p, e);
  std::vector<std::uint32_t> f(e + 1, 0);
  f[e] = 1;
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t r = n;
    for (std::uint32_t i = e; i-- > 0;) {  // c_0 is the most significant digit
      f[i] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    if (detail::has_primitive_root(ops, f, p)) return PrimePoly{p, f};
  }
  throw std::logic_error("no primitive polynomial found");
}

/// GF(q), q = p^e, as GF(p)[y]/(g) with full lookup tables.
class BaseField {
 public:
  static constexpr std::uint32_t kMaxOrder = 4096;

  explicit BaseField(PrimePoly poly) : poly_(std::move(poly)) {
    p_ = poly_.p;
    e_ = static_cast<std::uint32_t>(poly_.degree());
    q_ = static_cast<std::uint32_t>(detail::ipow(p_, e_));
    if (q_ > kMaxOrder) throw InvalidArgument("base field order exceeds " + std::to_string(kMaxOrder));
    if (!is_primitive(poly_)) throw InvalidArgument("base polynomial is not primitive");
    build_tables();
  }

  /// GF(q) with the default primitive polynomial.
  static BaseField of_order(std::uint32_t q) {
    auto pe = detail::prime_power(q);
    if (!pe) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
    return BaseField(find_primitive_poly(pe->first, pe->second));
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t order() const { return q_; }
  const PrimePoly& poly() const { return poly_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + neg_[b]]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw InvalidArgument("inverse of zero");
    return inv_[a];
  }
  /// Image of the integer n under Z -> GF(p) ⊂ GF(q).
  std::uint32_t from_integer(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

 private:
  void build_tables() {
    const std::uint32_t q = q_;
    add_.assign(std::size_t{q} * q, 0);
    mul_.assign(std::size_t{q} * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    auto digits = [&](std::uint32_t a) {
      std::vector<std::uint32_t> d(e_);
      for (auto& x : d) {
        x = a % p_;
        a /= p_;
      }
      return d;
    };
    auto encode = [&](const std::vector<std::uint32_t>& d) {
      std::uint32_t a = 0;
      for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
      return a;
    };
    for (std::uint32_t a = 0; a < q; ++a) {
      auto da = digits(a);
      std::vector<std::uint32_t> dn(e_);
      for (std::uint32_t i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[a] = encode(dn);
      for (std::uint32_t b = 0; b < q; ++b) {
        auto db = digits(b);
        std::vector<std::uint32_t> ds(e_);
        for (std::uint32_t i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = encode(ds);
      }
    }
    // Powers of the root y of g (for e = 1 the root is -g_0).
    std::vector<std::uint32_t> exp(q - 1), log(q, 0);
    std::vector<std::uint32_t> cur(e_, 0);
    cur[0] = 1;
    for (std::uint32_t j = 0; j + 1 < q; ++j) {
      exp[j] = encode(cur);
      log[exp[j]] = j;
      // multiply by y: shift up, reduce y^e = -sum g_i y^i
      const std::uint64_t top = cur[e_ - 1];
      for (std::uint32_t i = e_ - 1; i > 0; --i)
        cur[i] = static_cast<std::uint32_t>((cur[i - 1] + (p_ - poly_.coeffs[i]) * top) % p_);
      cur[0] = static_cast<std::uint32_t>((p_ - poly_.coeffs[0]) * top % p_);
    }
    for (std::uint32_t a = 1; a < q; ++a) {
      inv_[a] = exp[(q - 1 - log[a]) % (q - 1)];
      for (std::uint32_t b = 1; b < q; ++b) mul_[a * q + b] = exp[(log[a] + log[b]) % (q - 1)];
    }
  }

  PrimePoly poly_;
  std::uint32_t p_ = 0, e_ = 0, q_ = 0;
  std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

namespace detail {
struct BaseFieldOps {
  const BaseField* f;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return f->add(a, b); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return f->sub(a, b); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return f->mul(a, b); }
};
}  // namespace detail

/// An element of GF(q^m), canonical code sum c_n q^n.
struct FieldElement {
  std::uint32_t code = 0;
  bool is_zero() const { return code == 0; }
  bool operator==(const FieldElement&) const = default;
};

/// GF(q)-coordinates (c_0, ..., c_{m-1}) w.r.t. {1, α, ..., α^{m-1}}.
struct CoordinateVector {
  std::array<std::uint32_t, 4> c{};
  std::uint32_t m = 0;

  std::uint32_t operator[](std::size_t i) const { return c[i]; }
  std::uint32_t& operator[](std::size_t i) { return c[i]; }
  bool operator==(const CoordinateVector&) const = default;
};

/// GF(p) ⊂ GF(q) ⊂ GF(q^m) with primitive element α. Immutable once built.
class FieldTower {
 public:
  /// Upper bound on q^m, which sizes the log/antilog tables.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 22;

  /// Builds the tower over the default base field. If override_tower_poly is
  /// given (m+1 symbol-encoded coefficients, low-degree-first, monic) it is
  /// validated by the order test and used; otherwise the lexicographically
  /// smallest primitive polynomial is searched.
  static FieldTower build(std::uint32_t p, std::uint32_t e, std::uint32_t m,
                          std::optional<std::vector<std::uint32_t>> override_tower_poly = std::nullopt) {
    if (!detail::is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw InvalidArgument("base degree must be at least 1");
    return FieldTower(BaseField(find_primitive_poly(p, e)), m, std::move(override_tower_poly));
  }

  /// Same as build() with q given as a prime power.
  static FieldTower for_order(std::uint32_t q, std::uint32_t m,
                              std::optional<std::vector<std::uint32_t>> override_tower_poly = std::nullopt) {
    auto pe = detail::prime_power(q);
    if (!pe) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
    return build(pe->first, pe->second, m, std::move(override_tower_poly));
  }

  FieldTower(BaseField base, std::uint32_t m, std::optional<std::vector<std::uint32_t>> override_tower_poly)
      : base_(std::move(base)), m_(m) {
    if (m != 3 && m != 4) throw InvalidArgument("tower degree must be 3 or 4");
    q_ = base_.order();
    order_ = detail::ipow(q_, m);
    if (order_ > kMaxOrder) throw InvalidArgument("q^m exceeds table bound " + std::to_string(kMaxOrder));
    const detail::BaseFieldOps ops{&base_};
    if (override_tower_poly) {
      auto& f = *override_tower_poly;
      if (f.size() != m + 1) throw InvalidArgument("tower polynomial must have degree " + std::to_string(m));
      for (auto c : f)
        if (c >= q_) throw InvalidArgument("tower polynomial coefficient out of range");
      if (f.back() != 1) throw InvalidArgument("tower polynomial must be monic");
      if (!detail::has_primitive_root(ops, f, q_))
        throw InvalidArgument("tower polynomial " + coeffs_to_string(f, ',') + " is not primitive over GF(" +
                              std::to_string(q_) + ")");
      tower_poly_ = f;
    } else {
      tower_poly_ = search_tower_poly(ops);
    }
    build_tables();
  }

  const BaseField& base() const { return base_; }
  std::uint32_t p() const { return base_.p(); }
  std::uint32_t e() const { return base_.e(); }
  std::uint32_t q() const { return q_; }
  std::uint32_t m() const { return m_; }
  /// q^m.
  std::uint64_t order() const { return order_; }
  /// q^m - 1, the order of α.
  std::uint64_t group_order() const { return order_ - 1; }
  const std::vector<std::uint32_t>& tower_poly() const { return tower_poly_; }

  FieldElement alpha_pow(std::int64_t j) const {
    auto n = static_cast<std::int64_t>(group_order());
    std::int64_t r = j % n;
    return FieldElement{exp_[static_cast<std::size_t>(r < 0 ? r + n : r)]};
  }
  /// Discrete log in [0, q^m - 2]; nullopt for zero.
  std::optional<std::uint64_t> log(FieldElement a) const {
    if (a.is_zero()) return std::nullopt;
    return log_[a.code];
  }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t n = 0; n < m_; ++n) {
      out += base_.add(a.code % q_, b.code % q_) * scale;
      a.code /= q_;
      b.code /= q_;
      scale *= q_;
    }
    return FieldElement{out};
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.is_zero() || b.is_zero()) return {};
    return FieldElement{exp_[(log_[a.code] + log_[b.code]) % group_order()]};
  }
  FieldElement pow(FieldElement a, std::uint64_t n) const {
    if (n == 0) return FieldElement{1};
    if (a.is_zero()) return {};
    return FieldElement{exp_[static_cast<std::size_t>((log_[a.code] * (n % group_order())) % group_order())]};
  }
  /// Embeds s ∈ GF(q).
  FieldElement from_base(std::uint32_t s) const { return FieldElement{s}; }

  /// Tr(a) = a + a^q + ... + a^{q^{m-1}}, returned as a GF(q) symbol.
  std::uint32_t trace(FieldElement a) const {
    if (a.is_zero()) return 0;
    const std::uint64_t n = group_order();
    std::uint64_t l = log_[a.code];
    FieldElement sum{};
    for (std::uint32_t k = 0; k < m_; ++k) {
      sum = add(sum, FieldElement{exp_[l]});
      l = l * q_ % n;
    }
    if (sum.code >= q_) throw std::logic_error("trace left the subfield");
    return sum.code;
  }
  std::uint32_t trace_of_power(std::int64_t j) const { return trace(alpha_pow(j)); }

  /// Coordinates of α^j.
  CoordinateVector decompose(std::int64_t j) const { return coordinates(alpha_pow(j)); }

  CoordinateVector coordinates(FieldElement a) const {
    CoordinateVector v;
    v.m = m_;
    for (std::uint32_t n = 0; n < m_; ++n) {
      v[n] = a.code % q_;
      a.code /= q_;
    }
    return v;
  }
  FieldElement recompose(const CoordinateVector& v) const {
    std::uint32_t code = 0;
    for (std::uint32_t n = m_; n-- > 0;) code = code * q_ + v[n];
    return FieldElement{code};
  }

  /// α^((q^m-1)/(q-1)), a primitive element of GF(q), as a symbol.
  std::uint32_t subfield_primitive() const {
    return alpha_pow(static_cast<std::int64_t>(group_order() / (q_ - 1))).code;
  }

  /// `p e m base_poly_coeffs tower_poly_coeffs`, coefficients low-degree-first.
  std::string descriptor() const {
    std::ostringstream os;
    os << p() << ' ' << e() << ' ' << m_ << ' ' << coeffs_to_string(base_.poly().coeffs) << ' '
       << coeffs_to_string(tower_poly_);
    return os.str();
  }

  static FieldTower from_descriptor(const std::string& line) {
    std::istringstream is(line);
    long long p, e, m;
    if (!(is >> p >> e >> m) || p < 2 || e < 1 || (m != 3 && m != 4) || e > 32)
      throw ParseError("bad tower descriptor header: '" + line + "'");
    auto read = [&](std::size_t n) {
      std::vector<std::uint32_t> c(n);
      for (auto& x : c) {
        long long v;
        if (!(is >> v) || v < 0) throw ParseError("truncated tower descriptor: '" + line + "'");
        x = static_cast<std::uint32_t>(v);
      }
      return c;
    };
    auto base = read(static_cast<std::size_t>(e) + 1);
    auto tower = read(static_cast<std::size_t>(m) + 1);
    std::string extra;
    if (is >> extra) throw ParseError("trailing data in tower descriptor: '" + line + "'");
    if (!detail::is_prime(static_cast<std::uint64_t>(p))) throw InvalidArgument("descriptor p is not prime");
    return FieldTower(BaseField(PrimePoly{static_cast<std::uint32_t>(p), base}), static_cast<std::uint32_t>(m),
                      tower);
  }

 private:
  std::vector<std::uint32_t> search_tower_poly(const detail::BaseFieldOps& ops) const {
    std::vector<std::uint32_t> f(m_ + 1, 0);
    f[m_] = 1;
    const std::uint64_t count = detail::ipow(q_, m_);
    for (std::uint64_t n = 0; n < count; ++n) {
      std::uint64_t r = n;
      for (std::uint32_t i = m_; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(r % q_);
        r /= q_;
      }
      if (detail::has_primitive_root(ops, f, q_)) return f;
    }
    throw std::logic_error("no primitive tower polynomial found");
  }

  void build_tables() {
    const std::uint64_t n = group_order();
    exp_.assign(n, 0);
    log_.assign(order_, 0);
    std::array<std::uint32_t, 4> cur{1, 0, 0, 0};
    for (std::uint64_t j = 0; j < n; ++j) {
      std::uint32_t code = 0;
      for (std::uint32_t i = m_; i-- > 0;) code = code * q_ + cur[i];
      if (j > 0 && code == 1) throw InvalidArgument("tower polynomial is not primitive");
      exp_[j] = code;
      log_[code] = static_cast<std::uint32_t>(j);
      // multiply by α: shift up, reduce α^m = -sum f_i α^i
      std::uint32_t top = cur[m_ - 1];
      for (std::uint32_t i = m_ - 1; i > 0; --i) cur[i] = base_.sub(cur[i - 1], base_.mul(top, tower_poly_[i]));
      cur[0] = base_.neg(base_.mul(top, tower_poly_[0]));
    }
  }

  BaseField base_;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::uint64_t order_ = 0;
  std::vector<std::uint32_t> tower_poly_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

}  // namespace covarray
