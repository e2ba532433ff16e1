#include <gtest/gtest.h>

#include <random>
#include <set>

#include "covarray/gf.hpp"

using namespace covarray;

namespace {

// Multiplicative order of x modulo f over GF(p), by repeated multiplication.
std::uint64_t naive_order_of_x(const PrimePoly& f) {
  const std::uint32_t p = f.p;
  const std::size_t e = f.degree();
  std::vector<std::uint32_t> cur(e, 0);
  if (e == 1) {
    cur[0] = (p - f.coeffs[0]) % p;  // x ≡ -c0
    std::uint64_t n = 1;
    std::uint32_t v = cur[0];
    while (v != 1) {
      v = v * cur[0] % p;
      if (++n > p) return 0;
    }
    return v == 1 ? n : 0;
  }
  cur[1] = 1;
  for (std::uint64_t n = 1;; ++n) {
    bool one = cur[0] == 1;
    for (std::size_t i = 1; i < e && one; ++i) one = cur[i] == 0;
    if (one) return n;
    if (n > detail::ipow(p, static_cast<unsigned>(e))) return 0;
    std::uint32_t top = cur[e - 1];
    for (std::size_t i = e - 1; i > 0; --i) cur[i] = (cur[i - 1] + (p - f.coeffs[i]) * top) % p;
    cur[0] = (p - f.coeffs[0]) * top % p;
  }
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  for (std::uint32_t g = 1; g < p; ++g) {
    std::uint32_t v = g, n = 1;
    while (v != 1) {
      v = v * g % p;
      ++n;
    }
    if (n == p - 1) return g;
  }
  return 0;
}

}  // namespace

TEST(PrimitivePoly, DegreeOneUsesSmallestPrimitiveRoot) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    auto f = find_primitive_poly(p, 1);
    ASSERT_EQ(f.coeffs.size(), 2u);
    EXPECT_EQ(f.coeffs[1], 1u);
    EXPECT_EQ((p - f.coeffs[0]) % p, smallest_primitive_root(p)) << "p = " << p;
  }
  EXPECT_EQ(find_primitive_poly(7, 1).coeffs, (std::vector<std::uint32_t>{4, 1}));
  EXPECT_EQ(find_primitive_poly(3, 1).coeffs, (std::vector<std::uint32_t>{1, 1}));
}

TEST(PrimitivePoly, HigherDegreeIsLexicographicallyFirstPrimitive) {
  for (auto [p, e] : {std::pair{3u, 2u}, {5u, 2u}, {3u, 3u}, {2u, 4u}}) {
    auto f = find_primitive_poly(p, e);
    EXPECT_EQ(naive_order_of_x(f), detail::ipow(p, e) - 1);
    // every earlier candidate (c0 most significant) fails the naive order test
    std::vector<std::uint32_t> c(e + 1, 0);
    c[e] = 1;
    for (std::uint64_t code = 0;; ++code) {
      std::uint64_t x = code;
      for (std::uint32_t i = e; i-- > 0;) {
        c[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      if (c == f.coeffs) break;
      EXPECT_NE(naive_order_of_x(PrimePoly{p, c}), detail::ipow(p, e) - 1);
    }
  }
}

TEST(PrimitivePoly, RejectsBadInput) {
  EXPECT_THROW(find_primitive_poly(6, 1), InvalidArgument);
  EXPECT_THROW(find_primitive_poly(3, 0), InvalidArgument);
  EXPECT_THROW(find_primitive_poly(2, 40), InvalidArgument);
}

TEST(PrimitivePoly, FigurePolynomialIsPrimitive) {
  PrimePoly f{7, {3, 4, 5, 0, 1}};
  EXPECT_TRUE(is_primitive(f));
  EXPECT_FALSE(is_primitive(PrimePoly{7, {1, 1, 1, 1, 1}}));
}

TEST(BaseField, TablesMatchPolynomialArithmetic) {
  for (std::uint32_t q : {3u, 4u, 8u, 9u, 25u, 27u}) {
    auto F = BaseField::of_order(q);
    std::set<std::uint32_t> units;
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(F.add(a, F.neg(a)), 0u);
      EXPECT_EQ(F.mul(a, 1), a);
      if (a) {
        EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
        units.insert(a);
      }
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        for (std::uint32_t c = 0; c < q; c += 3) EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      }
    }
    EXPECT_EQ(units.size(), q - 1);
  }
}

TEST(BaseField, SymbolEncodingIsDigitwiseAdditionModP) {
  auto F = BaseField::of_order(9);
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b)
      EXPECT_EQ(F.add(a, b), (a % 3 + b % 3) % 3 + 3 * ((a / 3 + b / 3) % 3));
}

TEST(FieldTower, FigurePolynomialOverride) {
  auto t = FieldTower::for_order(7, 4, std::vector<std::uint32_t>{3, 4, 5, 0, 1});
  EXPECT_EQ(t.tower_poly(), (std::vector<std::uint32_t>{3, 4, 5, 0, 1}));
  auto v = t.decompose(8);
  EXPECT_EQ(std::vector<std::uint32_t>(v.c.begin(), v.c.end()), (std::vector<std::uint32_t>{4, 1, 5, 5}));
}

TEST(FieldTower, RejectsNonPrimitiveOverride) {
  EXPECT_THROW(FieldTower::for_order(7, 4, std::vector<std::uint32_t>{1, 1, 1, 1, 1}), InvalidArgument);
  EXPECT_THROW(FieldTower::for_order(7, 4, std::vector<std::uint32_t>{3, 4, 5, 1}), InvalidArgument);
  EXPECT_THROW(FieldTower::for_order(6, 4), InvalidArgument);
  EXPECT_THROW(FieldTower::for_order(3, 5), InvalidArgument);
}

TEST(FieldTower, AlphaHasFullOrderAndSubfieldGenerator) {
  for (auto [q, m] : {std::pair{3u, 4u}, {9u, 4u}, {5u, 3u}, {4u, 3u}, {7u, 4u}}) {
    auto t = FieldTower::for_order(q, m);
    const std::uint64_t n = t.group_order();
    EXPECT_EQ(n, detail::ipow(q, m) - 1);
    // distinct powers
    std::set<std::uint32_t> seen;
    for (std::uint64_t j = 0; j < n; ++j) seen.insert(t.alpha_pow(static_cast<std::int64_t>(j)).code);
    EXPECT_EQ(seen.size(), n);
    EXPECT_EQ(seen.count(0), 0u);
    // α^((q^m-1)/(q-1)) has order q-1 and lies in GF(q)
    std::uint32_t e = t.subfield_primitive();
    std::uint32_t v = e, order = 1;
    while (v != 1) {
      v = t.base().mul(v, e);
      ++order;
    }
    EXPECT_EQ(order, q - 1);
    EXPECT_EQ(t.alpha_pow(static_cast<std::int64_t>(n / (q - 1))).code, e);
  }
}

TEST(FieldTower, LogIsAHomomorphism) {
  auto t = FieldTower::for_order(3, 4);
  const auto n = t.group_order();
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) {
      auto a = t.alpha_pow(static_cast<std::int64_t>(i)), b = t.alpha_pow(static_cast<std::int64_t>(j));
      EXPECT_EQ(*t.log(t.mul(a, b)), (i + j) % n);
    }
  EXPECT_FALSE(t.log(FieldElement{0}).has_value());
}

TEST(FieldTower, TraceValues) {
  auto t7 = FieldTower::for_order(7, 4, std::vector<std::uint32_t>{3, 4, 5, 0, 1});
  EXPECT_EQ(t7.trace(t7.from_base(1)), 4u);
  EXPECT_EQ(t7.trace(FieldElement{0}), 0u);
  auto t3 = FieldTower::for_order(3, 4);
  EXPECT_EQ(t3.trace(t3.from_base(1)), 1u);
  auto t9 = FieldTower::for_order(9, 4);
  EXPECT_EQ(t9.trace(t9.from_base(1)), 1u);  // 4 = 1 in characteristic 3
}

TEST(FieldTower, TraceIsLinearAndFrobeniusInvariant) {
  std::mt19937_64 rng(12345);
  for (auto [q, m] : {std::pair{3u, 4u}, {9u, 4u}, {5u, 3u}, {8u, 3u}, {11u, 4u}}) {
    auto t = FieldTower::for_order(q, m);
    const auto& F = t.base();
    std::uniform_int_distribution<std::int64_t> exp(0, static_cast<std::int64_t>(t.group_order()) - 1);
    std::uniform_int_distribution<std::uint32_t> sym(0, q - 1);
    for (int it = 0; it < 500; ++it) {
      auto a = t.alpha_pow(exp(rng)), b = t.alpha_pow(exp(rng));
      auto s = sym(rng), r = sym(rng);
      auto lhs = t.trace(t.add(t.mul(t.from_base(s), a), t.mul(t.from_base(r), b)));
      auto rhs = F.add(F.mul(s, t.trace(a)), F.mul(r, t.trace(b)));
      EXPECT_EQ(lhs, rhs);
      EXPECT_EQ(t.trace(t.pow(a, q)), t.trace(a));
    }
  }
}

TEST(FieldTower, DecomposeRecomposeRoundTrip) {
  for (auto [q, m] : {std::pair{3u, 4u}, {9u, 4u}, {5u, 4u}, {7u, 3u}}) {
    auto t = FieldTower::for_order(q, m);
    for (std::uint64_t j = 0; j < t.group_order(); ++j) {
      auto a = t.alpha_pow(static_cast<std::int64_t>(j));
      EXPECT_EQ(t.recompose(t.decompose(static_cast<std::int64_t>(j))).code, a.code);
    }
    auto one = t.decompose(0);
    EXPECT_EQ(one[0], 1u);
    for (std::uint32_t i = 1; i < m; ++i) EXPECT_EQ(one[i], 0u);
    auto alpha = t.decompose(1);
    for (std::uint32_t i = 0; i < m; ++i) EXPECT_EQ(alpha[i], i == 1 ? 1u : 0u);
  }
}

TEST(FieldTower, DecomposeSatisfiesMinimalPolynomial) {
  // α^m = -(f_0 + f_1 α + ... + f_{m-1} α^{m-1})
  auto t = FieldTower::for_order(7, 4, std::vector<std::uint32_t>{3, 4, 5, 0, 1});
  auto v = t.decompose(4);
  const auto& F = t.base();
  for (std::uint32_t i = 0; i < 4; ++i) EXPECT_EQ(v[i], F.neg(t.tower_poly()[i]));
}

TEST(FieldTower, DescriptorRoundTrip) {
  for (std::uint32_t q : {3u, 9u, 25u}) {
    auto t = FieldTower::for_order(q, 4);
    auto line = t.descriptor();
    auto u = FieldTower::from_descriptor(line);
    EXPECT_EQ(u.descriptor(), line);
    EXPECT_EQ(u.q(), q);
  }
  EXPECT_EQ(FieldTower::for_order(7, 4, std::vector<std::uint32_t>{3, 4, 5, 0, 1}).descriptor(),
            "7 1 4 4 1 3 4 5 0 1");
}
