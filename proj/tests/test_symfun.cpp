#include <symlev/symfun.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace symlev;

namespace {

// chi_lambda(rho) as the coefficient of x^{lambda+delta} in a_delta * p_rho,
// with len(lambda) variables.
long long frobenius_coefficient(const Partition& lam, const CycleType& rho) {
  const int L = static_cast<int>(lam.size());
  using Mono = std::vector<int>;
  std::map<Mono, long long> poly;
  Mono target(L);
  for (int i = 0; i < L; ++i) target[i] = lam[i] + L - 1 - i;
  // a_delta = sum over permutations of sign * x^{sigma(delta)}
  std::vector<int> perm(L);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Mono m(L);
    for (int i = 0; i < L; ++i) m[i] = L - 1 - perm[i];
    int inv = 0;
    for (int i = 0; i < L; ++i)
      for (int j = i + 1; j < L; ++j)
        if (perm[i] > perm[j]) ++inv;
    poly[m] += inv % 2 ? -1 : 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int r : rho) {
    std::map<Mono, long long> next;
    for (auto& [m, c] : poly)
      for (int i = 0; i < L; ++i) {
        Mono m2 = m;
        m2[i] += r;
        if (m2[i] <= target[i]) next[m2] += c;
      }
    poly = std::move(next);
  }
  auto it = poly.find(target);
  return it == poly.end() ? 0 : it->second;
}

bool is_border_strip_skew(const Partition& l, const Partition& mu) {
  std::set<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(l.size()); ++r) {
    int keep = r < static_cast<int>(mu.size()) ? mu[r] : 0;
    for (int c = keep; c < l[r]; ++c) cells.insert({r, c});
  }
  if (cells.empty()) return false;
  for (auto [r, c] : cells)
    if (cells.count({r + 1, c}) && cells.count({r, c + 1}) && cells.count({r + 1, c + 1})) return false;
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> stack{*cells.begin()};
  while (!stack.empty()) {
    auto p = stack.back();
    stack.pop_back();
    if (!cells.count(p) || seen.count(p)) continue;
    seen.insert(p);
    stack.push_back({p.first + 1, p.second});
    stack.push_back({p.first - 1, p.second});
    stack.push_back({p.first, p.second + 1});
    stack.push_back({p.first, p.second - 1});
  }
  return seen.size() == cells.size();
}

bool contained(const Partition& mu, const Partition& l) {
  if (mu.size() > l.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > l[i]) return false;
  return true;
}

}  // namespace

TEST(Partition, TransposeExamples) {
  EXPECT_EQ(transpose({3, 2}), (Partition{2, 2, 1}));
  EXPECT_EQ(transpose({5}), (Partition{1, 1, 1, 1, 1}));
  for (int n = 0; n <= 12; ++n)
    for (auto& l : partitions(n)) EXPECT_EQ(transpose(transpose(l)), l);
}

TEST(Partition, Counts) {
  std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions(n).size(), p[n]);
}

TEST(BorderStrip, Examples) {
  EXPECT_TRUE(border_strips({3, 2}, 5).empty());
  auto s = border_strips({3, 1, 1}, 5);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].height, 2);
  s = border_strips({6}, 6);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].height, 0);
  EXPECT_TRUE(s[0].remainder.empty());
}

TEST(BorderStrip, MatchesSkewShapeSearch) {
  for (int n = 1; n <= 9; ++n)
    for (auto& l : partitions(n))
      for (int k = 1; k <= n; ++k) {
        std::set<Partition> expect;
        for (auto& mu : partitions(n - k))
          if (contained(mu, l) && is_border_strip_skew(l, mu)) expect.insert(mu);
        std::set<Partition> got;
        for (auto& st : border_strips(l, k)) {
          got.insert(st.remainder);
          std::set<int> rows;
          for (auto [r, c] : st.cells) rows.insert(r);
          EXPECT_EQ(st.height, static_cast<int>(rows.size()) - 1);
          EXPECT_EQ(static_cast<int>(st.cells.size()), k);
        }
        ASSERT_EQ(got, expect) << to_string(l) << " k=" << k;
      }
}

TEST(MN, Examples) {
  EXPECT_EQ(mn_value({5}, {2, 3}), 1);
  EXPECT_EQ(mn_value({3, 2}, {5}), 0);
  EXPECT_EQ(mn_value({3, 1, 1}, {5}), 1);
  EXPECT_THROW(mn_value({3, 1}, {5}), precondition_error);
}

TEST(MN, AgreesWithAlternantCoefficient) {
  for (int n = 1; n <= 7; ++n)
    for (auto& l : partitions(n))
      for (auto& rho : partitions(n)) ASSERT_EQ(mn_value(l, rho), frobenius_coefficient(l, rho)) << to_string(l) << to_string(rho);
}

TEST(MN, OrderIndependenceOfTableauSum) {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 8; ++n)
    for (auto& l : partitions(n))
      for (auto rho : partitions(n)) {
        long long v = mn_value(l, rho);
        for (int t = 0; t < 20; ++t) {
          std::shuffle(rho.begin(), rho.end(), rng);
          ASSERT_EQ(count_tableaux(l, rho).second, v);
        }
      }
}

TEST(CharTable, SmallExamples) {
  auto t = char_table(3);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_EQ(t.rows[0], (Partition{3}));
  EXPECT_EQ(t.values[0], (std::vector<long long>{1, 1, 1}));
  EXPECT_EQ(t.rows[1], (Partition{2, 1}));
  EXPECT_EQ(t.columns[0], (CycleType{1, 1, 1}));
  EXPECT_EQ(t.columns[1], (CycleType{1, 2}));
  EXPECT_EQ(t.columns[2], (CycleType{3}));
  EXPECT_EQ(t.values[1], (std::vector<long long>{2, 0, -1}));
  EXPECT_THROW(char_table(9), precondition_error);
  EXPECT_EQ(char_table(5).rows.size(), 7u);
}

TEST(CharTable, Orthogonality) {
  for (int n = 1; n <= 8; ++n) {
    auto t = char_table(n);
    const std::size_t k = t.rows.size();
    BigInt order = factorial(n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        BigInt row = 0, col = 0;
        for (std::size_t c = 0; c < k; ++c) row += class_size_sn(t.columns[c]) * t.at(i, c) * t.at(j, c);
        EXPECT_EQ(row, i == j ? order : BigInt(0));
        for (std::size_t r = 0; r < k; ++r) col += BigInt(t.at(r, i)) * t.at(r, j);
        EXPECT_EQ(col, i == j ? centralizer_order_sn(t.columns[i]) : BigInt(0));
      }
  }
}

TEST(CharTable, DegreesAreHookLengths) {
  for (int n = 1; n <= 10; ++n)
    for (auto& l : partitions(n)) EXPECT_EQ(BigInt(mn_value(l, CycleType(n, 1))), hook_length_degree(l));
}

TEST(CharTable, TransposeTwistsBySign) {
  for (int n = 1; n <= 8; ++n)
    for (auto& l : partitions(n))
      for (auto& rho : partitions(n)) {
        int sign = (n - static_cast<int>(rho.size())) % 2 ? -1 : 1;
        EXPECT_EQ(mn_value(transpose(l), rho), sign * mn_value(l, rho));
      }
}

TEST(Minimal, Examples) {
  EXPECT_TRUE(is_minimal({6}, {6}));
  EXPECT_FALSE(is_minimal({2, 2}, {1, 1, 1, 1}));
  EXPECT_EQ(count_tableaux({2, 2}, {1, 1, 1, 1}).first, 2);
}

TEST(FastGrowth, Examples) {
  EXPECT_TRUE(fast_growth_holds({1, 1, 3}));
  EXPECT_TRUE(fast_growth_holds({2, 5}));
  EXPECT_FALSE(fast_growth_holds({2, 2}));
}

TEST(FastGrowth, ImpliesMinimalAndSmallValues) {
  for (int n = 1; n <= 12; ++n)
    for (auto& a : fast_growth_types(n)) {
      EXPECT_TRUE(fast_growth_holds(a));
      for (auto& l : partitions(n)) {
        EXPECT_TRUE(is_minimal(l, a)) << to_string(l) << to_string(a);
        long long v = mn_value(l, a);
        EXPECT_LE(std::abs(v), 1);
      }
    }
}

TEST(FastGrowth, EnumerationIsComplete) {
  for (int n = 1; n <= 12; ++n) {
    std::size_t brute = 0;
    for (auto& p : partitions(n))
      if (fast_growth_holds(ascending(p))) ++brute;
    EXPECT_EQ(brute, fast_growth_types(n).size());
  }
}

TEST(Nonvanishing, Examples) {
  EXPECT_EQ(nonvanishing_set(7, 2, XyVariant::x).size(), 10u);
  EXPECT_EQ(nonvanishing_set(7, 2, XyVariant::y).size(), 10u);
  EXPECT_EQ(nonvanishing_set(10, 3, XyVariant::y).size(), 14u);
  EXPECT_THROW(nonvanishing_set(6, 2, XyVariant::x), precondition_error);
}

TEST(Nonvanishing, CountsAndHooks) {
  for (int N = 4; N <= 12; ++N)
    for (int a = 1; 3 * a < N; ++a) {
      auto xs = nonvanishing_set(N, a, XyVariant::x);
      EXPECT_EQ(static_cast<int>(xs.size()), a * (N - a));
      for (auto& e : xs) {
        EXPECT_LE(std::abs(e.value), 1);
        int b = N - e.lambda[0];
        if (b < a) {
          Partition hook{N - b};
          for (int i = 0; i < b; ++i) hook.push_back(1);
          EXPECT_EQ(e.lambda, hook);
        }
      }
      if (a >= 2) {
        auto ys = nonvanishing_set(N, a, XyVariant::y);
        EXPECT_EQ(static_cast<int>(ys.size()), a == 2 ? 2 * (N - 2) : (a - 1) * (N - a));
        for (auto& e : ys) EXPECT_LE(std::abs(e.value), 1);
      }
    }
}

TEST(Congruence, Examples) {
  EXPECT_TRUE(prime_order_congruence({6}, {3, 3}));
  EXPECT_EQ(mn_value({4, 2}, {3, 3}), 0);
  EXPECT_EQ(hook_length_degree({4, 2}), 9);
  EXPECT_TRUE(prime_order_congruence({4, 2}, {3, 3}));
  EXPECT_THROW(prime_order_congruence({4, 2}, {2, 4}), precondition_error);
  EXPECT_THROW(prime_order_congruence({4, 2}, {4, 1, 1}), precondition_error);
}

TEST(Congruence, FullScan) {
  for (int n = 2; n <= 8; ++n)
    for (auto& g : partitions(n)) {
      int ell = 0;
      bool ok = true;
      for (int x : g)
        if (x != 1) {
          if (ell && x != ell) ok = false;
          ell = x;
        }
      if (!ok || ell == 0 || !is_prime(ell)) continue;
      for (auto& l : partitions(n)) EXPECT_TRUE(prime_order_congruence(l, g));
    }
}
