#include <symlev/algebra.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace symlev;

namespace {

// Reference multiplication: schoolbook product of digit vectors reduced by the modulus.
Fe ref_mul(const FiniteField& F, Fe a, Fe b) {
  const unsigned k = F.k(), p = F.p();
  auto da = F.digits(a), db = F.digits(b);
  std::vector<long long> c(2 * k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) c[i + j] += static_cast<long long>(da[i]) * db[j];
  const auto& m = F.modulus();
  for (int i = 2 * k - 1; i >= static_cast<int>(k); --i) {
    long long t = c[i] % p;
    for (unsigned j = 0; j <= k; ++j) c[i - k + j] -= t * m[j];
  }
  std::vector<std::uint32_t> d(k);
  for (unsigned i = 0; i < k; ++i) d[i] = static_cast<std::uint32_t>(((c[i] % p) + p) % p);
  return F.from_digits(d);
}

// Brute-force irreducibility over F_p: no monic divisor of degree 1..deg/2.
bool brute_irreducible(std::vector<long long> f, unsigned p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<long long> g(d + 1);
      long long v = code;
      for (int i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      std::vector<long long> r = f;
      for (int i = n; i >= d; --i) {
        long long c = ((r[i] % p) + p) % p;
        for (int j = 0; j <= d; ++j) r[i - d + j] -= c * g[j];
      }
      bool zero = true;
      for (int i = 0; i < d; ++i)
        if (((r[i] % p) + p) % p) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

FqMatrix random_matrix(const FieldPtr& F, int n, std::mt19937_64& rng) {
  FqMatrix m(F, n);
  std::uniform_int_distribution<std::uint64_t> d(0, F->size() - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<Fe>(d(rng));
  return m;
}

Poly poly_of(const FieldPtr& F, std::vector<long long> c) {
  std::vector<Fe> e;
  for (auto v : c) e.push_back(F->from_int(v));
  return Poly(F, e);
}

}  // namespace

TEST(Field, PrimeFieldF2) {
  auto F = make_field(2, 1);
  EXPECT_EQ(F->size(), 2u);
  EXPECT_EQ(F->add(1, 1), 0u);
  EXPECT_EQ(F->mul(1, 1), 1u);
}

TEST(Field, F4UnitsHaveOrderThree) {
  auto F = make_field(2, 2);
  for (Fe a = 2; a < 4; ++a) EXPECT_EQ(F->order_of(a), 3u);
}

TEST(Field, F9Counts) {
  auto F = make_field(3, 2);
  EXPECT_EQ(F->size(), 9u);
  std::set<Fe> units;
  Fe x = 1;
  for (int i = 0; i < 8; ++i) {
    units.insert(x);
    x = F->mul(x, F->generator());
  }
  EXPECT_EQ(units.size(), 8u);
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(make_field(4, 1), precondition_error);
  EXPECT_THROW(make_field(2, 0), precondition_error);
  EXPECT_THROW(make_field(2, 25), precondition_error);
}

TEST(Field, RepeatedCallsIdentical) {
  auto a = make_field(5, 3);
  auto b = make_field(5, 3);
  EXPECT_EQ(a.get(), b.get());
  FiniteField fresh(5, 3);
  EXPECT_EQ(fresh.modulus(), a->modulus());
  EXPECT_EQ(fresh.generator(), a->generator());
}

TEST(Field, ModulusIsSmallestIrreducible) {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 3}}) {
    auto F = make_field(p, k);
    std::vector<long long> m(F->modulus().begin(), F->modulus().end());
    EXPECT_TRUE(brute_irreducible(m, p));
    long long code = 0;
    for (unsigned i = k; i-- > 0;) code = code * p + m[i];
    for (long long c = 0; c < code; ++c) {
      std::vector<long long> g(k + 1);
      long long v = c;
      for (unsigned i = 0; i < k; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[k] = 1;
      EXPECT_FALSE(brute_irreducible(g, p)) << "smaller irreducible exists for p=" << p << " k=" << k;
    }
  }
}

TEST(Field, ArithmeticMatchesReference) {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    auto F = make_field(p, k);
    for (Fe a = 0; a < F->size(); ++a)
      for (Fe b = 0; b < F->size(); ++b) {
        ASSERT_EQ(F->mul(a, b), ref_mul(*F, a, b));
        auto da = F->digits(a), db = F->digits(b);
        std::vector<std::uint32_t> s(k);
        for (unsigned i = 0; i < k; ++i) s[i] = (da[i] + db[i]) % p;
        ASSERT_EQ(F->add(a, b), F->from_digits(s));
      }
  }
}

TEST(Field, LargeFieldWithoutTablesAgrees) {
  auto F = make_field(2, 23);
  EXPECT_FALSE(F->has_tables());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Fe a = static_cast<Fe>(rng() % F->size()), b = static_cast<Fe>(rng() % F->size());
    ASSERT_EQ(F->mul(a, b), ref_mul(*F, a, b));
    if (a) {
      ASSERT_EQ(F->mul(a, F->inv(a)), 1u);
    }
  }
}

TEST(Field, FrobeniusFixesExactlyPrimeField) {
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned k = 1;; ++k) {
      std::uint64_t q = 1;
      for (unsigned i = 0; i < k; ++i) q *= p;
      if (q > 4096) break;
      auto F = make_field(p, k);
      std::set<Fe> image;
      std::size_t fixed = 0;
      for (Fe a = 0; a < q; ++a) {
        Fe b = F->frobenius(a);
        image.insert(b);
        if (a == b) ++fixed;
      }
      EXPECT_EQ(image.size(), q);
      EXPECT_EQ(fixed, p);
      EXPECT_EQ(F->order_of(F->generator()), q - 1);
    }
}

TEST(Field, EmbeddingExamples) {
  auto F2 = make_field(2, 1), F4 = make_field(2, 2), F8 = make_field(2, 3), F16 = make_field(2, 4), F64 = make_field(2, 6);
  EXPECT_EQ(embed(1, F2, F16), 1u);
  Fe a4 = F4->generator();
  EXPECT_EQ(F16->order_of(embed(a4, F4, F16)), 3u);
  Fe a8 = F8->generator();
  ASSERT_EQ(F8->order_of(a8), 7u);
  Fe img = embed(a8, F8, F64);
  Fe x = 1;
  int ord = 0;
  do {
    x = F64->mul(x, img);
    ++ord;
  } while (x != 1);
  EXPECT_EQ(ord, 7);
  EXPECT_THROW(embed(1, F4, F8), precondition_error);
}

TEST(Field, EmbeddingIsRingHomomorphism) {
  for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 6}, {1, 4}}) {
    auto S = make_field(2, a), T = make_field(2, b);
    Embedding e(S, T);
    std::set<Fe> img;
    for (Fe x = 0; x < S->size(); ++x) {
      img.insert(e(x));
      for (Fe y = 0; y < S->size(); ++y) {
        ASSERT_EQ(e(S->add(x, y)), T->add(e(x), e(y)));
        ASSERT_EQ(e(S->mul(x, y)), T->mul(e(x), e(y)));
      }
    }
    EXPECT_EQ(img.size(), S->size());
  }
  auto S = make_field(3, 2), T = make_field(3, 4);
  Embedding e(S, T);
  for (Fe x = 0; x < 9; ++x)
    for (Fe y = 0; y < 9; ++y) ASSERT_EQ(e(S->mul(x, y)), T->mul(e(x), e(y)));
  for (Fe x = 0; x < 9; ++x) EXPECT_EQ(e.preimage(e(x)), x);
}

TEST(CharPoly, Examples) {
  auto F3 = make_field(3, 1), F2 = make_field(2, 1);
  EXPECT_EQ(char_poly(FqMatrix::identity(F3, 2)), poly_of(F3, {1, -2, 1}));
  Poly f = poly_of(F2, {1, 1, 1});
  EXPECT_EQ(char_poly(FqMatrix::companion(f)), f);
  EXPECT_EQ(char_poly(FqMatrix::diagonal(F3, {1, 2})), poly_of(F3, {2, 0, 1}));
}

TEST(CharPoly, AgreesWithDeterminantEvaluation) {
  std::mt19937_64 rng(11);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {5, 1}, {3, 2}}) {
    auto F = make_field(p, k);
    for (int n = 1; n <= 6; ++n)
      for (int trial = 0; trial < 15; ++trial) {
        FqMatrix M = random_matrix(F, n, rng);
        if (trial % 3 == 0) {
          for (int i = 0; i < n; ++i)
            for (int j = 0; j + 1 < i; ++j) M(i, j) = 0;
        }
        Poly f = char_poly(M);
        ASSERT_EQ(f.degree(), n);
        ASSERT_TRUE(f.is_monic());
        // Evaluate at n+1 points of an extension large enough to pin the polynomial down.
        unsigned e = 1;
        while (std::pow(double(F->size()), e) < n + 1) ++e;
        auto E = make_field(p, k * e);
        Embedding emb(F, E);
        FqMatrix ME = embed_matrix(M, emb);
        Poly fE = embed_poly(f, emb);
        for (Fe lam = 0; lam < std::min<std::uint64_t>(E->size(), n + 1); ++lam) {
          FqMatrix D = FqMatrix::scalar(E, n, lam) - ME;
          ASSERT_EQ(D.det(), fE.eval(lam));
        }
        // det and trace from coefficients
        Fe tr = 0;
        for (int i = 0; i < n; ++i) tr = F->add(tr, M(i, i));
        EXPECT_EQ(F->neg(f.coeff(n - 1)), tr);
        Fe det = f.coeff(0);
        if (n % 2) det = F->neg(det);
        EXPECT_EQ(det, M.det());
      }
  }
}

TEST(Factor, Examples) {
  auto F3 = make_field(3, 1), F2 = make_field(2, 1);
  auto r = factor_squarefree_split(poly_of(F3, {1, 0, 1}), 4);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].poly, poly_of(F3, {1, 0, 1}));
  EXPECT_EQ(r[0].multiplicity, 1);
  r = factor_squarefree_split(poly_of(F3, {-1, 0, 1}), 4);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].poly, poly_of(F3, {1, 1}));
  EXPECT_EQ(r[1].poly, poly_of(F3, {-1, 1}));
  r = factor_squarefree_split(poly_of(F2, {1, 1, 0, 0, 1}), 4);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].poly.degree(), 4);
  EXPECT_THROW(factor_squarefree_split(poly_of(F2, {1, 1, 0, 0, 1}), 3), precondition_error);
}

TEST(Factor, RemultipliesAndFactorsAreIrreducible) {
  std::mt19937_64 rng(5);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {3, 2}}) {
    auto F = make_field(p, k);
    for (int trial = 0; trial < 40; ++trial) {
      // products of random low-degree pieces, with repeats
      Poly f = Poly::constant(F, 1);
      int pieces = 1 + trial % 4;
      for (int i = 0; i < pieces; ++i) {
        int d = 1 + static_cast<int>(rng() % 3);
        std::vector<Fe> c(d + 1);
        for (auto& x : c) x = static_cast<Fe>(rng() % F->size());
        c[d] = 1;
        Poly g(F, c);
        f = f * g;
        if (rng() % 3 == 0) f = f * g;
      }
      auto fac = factor_squarefree_split(f, 6);
      Poly prod = Poly::constant(F, 1);
      for (auto& x : fac) {
        for (int i = 0; i < x.multiplicity; ++i) prod = prod * x.poly;
        // irreducible: no roots in any F_{q^e} with e <= deg/2
        for (int e = 1; e <= x.poly.degree() / 2; ++e) {
          auto E = make_field(p, k * e);
          Embedding emb(F, E);
          Poly pe = embed_poly(x.poly, emb);
          for (Fe v = 0; v < E->size(); ++v) ASSERT_NE(pe.eval(v), 0u);
        }
      }
      EXPECT_EQ(prod, f.monic());
    }
  }
}

TEST(Eigenspace, Examples) {
  auto F3 = make_field(3, 1);
  EXPECT_EQ(eigenspace_dim(FqMatrix::identity(F3, 4), 1), 4);
  EXPECT_EQ(eigenspace_dim(FqMatrix::diagonal(F3, {1, 2}), 1), 1);
  FqMatrix J(F3, 2, {1, 1, 0, 1});
  EXPECT_EQ(eigenspace_dim(J, 1), 1);
}

TEST(Eigenspace, RankNullity) {
  std::mt19937_64 rng(3);
  auto F = make_field(2, 2);
  auto E = make_field(2, 4);
  Embedding emb(F, E);
  for (int trial = 0; trial < 50; ++trial) {
    FqMatrix M = random_matrix(F, 4, rng);
    FqMatrix ME = embed_matrix(M, emb);
    for (Fe lam = 0; lam < E->size(); ++lam) {
      int d = eigenspace_dim(M, lam, E);
      EXPECT_EQ(d + (ME - FqMatrix::scalar(E, 4, lam)).rank(), 4);
      // lambda is an eigenvalue iff it is a root of the characteristic polynomial
      EXPECT_EQ(d > 0, embed_poly(char_poly(M), emb).eval(lam) == 0);
    }
  }
}

TEST(GroupOrder, Examples) {
  EXPECT_EQ(group_order(Family::GL, 2, 2), 6);
  EXPECT_EQ(group_order(Family::GU, 2, 2), 18);
  EXPECT_EQ(group_order(Family::SL, 2, 3), 24);
  EXPECT_EQ(group_order(Family::SU, 4, 2), 25920);
  EXPECT_EQ(group_order(Family::Sp, 4, 2), 720);
  EXPECT_EQ(group_order(Family::SOodd, 3, 3), 24);
  EXPECT_EQ(group_order(Family::OmegaOdd, 3, 3), 12);
  EXPECT_EQ(group_order(Family::SOplus, 2, 3), 2);
  EXPECT_EQ(group_order(Family::SOminus, 2, 3), 4);
  EXPECT_THROW(group_order(Family::Sp, 3, 3), precondition_error);
  EXPECT_THROW(group_order(Family::SOodd, 3, 4), precondition_error);
}

TEST(GroupOrder, GLMatchesBruteCount) {
  for (auto [n, q] : std::vector<std::pair<int, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    auto F = make_field_of_size(q);
    std::uint64_t total = 1;
    for (int i = 0; i < n * n; ++i) total *= q;
    std::uint64_t inv = 0, det1 = 0;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Fe> e(n * n);
      std::uint64_t v = code;
      for (auto& x : e) {
        x = static_cast<Fe>(v % q);
        v /= q;
      }
      FqMatrix M(F, n, e);
      Fe d = M.det();
      if (d) ++inv;
      if (d == 1) ++det1;
    }
    EXPECT_EQ(BigInt(inv), group_order(Family::GL, n, q));
    EXPECT_EQ(BigInt(det1), group_order(Family::SL, n, q));
  }
}

TEST(GroupOrder, UnitaryOrderBounds) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9})
    for (int N = 1; N <= 20; ++N) {
      BigInt o = group_order(Family::GU, N, q);
      BigInt lo = ipow(BigInt(q), N * N);
      EXPECT_GT(o, lo);
      // o < q^{N^2 + 0.6}  <=>  o^5 < q^{5N^2 + 3}
      EXPECT_LT(ipow(o, 5), ipow(BigInt(q), 5 * N * N + 3));
    }
}

TEST(GroupOrder, PrimeToPDegree) {
  for (auto f : {Family::GL, Family::GU, Family::Sp, Family::SOodd, Family::SOplus, Family::SOminus})
    for (int N = 1; N <= 9; ++N) {
      if ((f == Family::Sp || f == Family::SOplus || f == Family::SOminus) && N % 2) continue;
      if (f == Family::SOodd && N % 2 == 0) continue;
      // degree of a polynomial in q: compare p'-parts at two large q
      BigInt a = prime_to_p_part(group_order(f, N, 1009), 1009);
      int deg = prime_to_p_degree(f, N);
      BigInt lo = ipow(BigInt(1009), deg);
      EXPECT_GT(a * 2, lo);
      EXPECT_LT(a, lo * 2);
    }
}
