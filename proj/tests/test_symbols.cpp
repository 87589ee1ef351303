#include <symlev/symbols.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace symlev;

namespace {

// Every pair of subsets of {0..n} with the given rank, reduced, no bijection.
std::set<Symbol> brute_symbols(int n, DefectClass cls) {
  std::set<Symbol> out;
  const int top = n;  // entries never exceed the rank
  const int U = top + 2;
  for (int ma = 0; ma < (1 << U); ++ma)
    for (int mb = 0; mb < (1 << U); ++mb) {
      Symbol s;
      for (int i = U - 1; i >= 0; --i) {
        if (ma >> i & 1) s.A.push_back(i);
        if (mb >> i & 1) s.B.push_back(i);
      }
      if (!is_reduced(s) || !cls.contains(defect(s))) continue;
      if (rank_by_entries(s) == n) out.insert(s);
    }
  return out;
}

// Bipartitions of n, from the square of the partition generating series.
long long bipartition_count(int n) {
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) p[i] += p[i - k];
  long long c = 0;
  for (int i = 0; i <= n; ++i) c += p[i] * p[n - i];
  return c;
}

// Unipotent characters of type B_n: one bipartition family per odd defect d > 0,
// shifted by (d^2 - 1)/4.
long long type_b_unipotent_count(int n) {
  long long c = 0;
  for (int d = 1; (d * d - 1) / 4 <= n; d += 2) c += bipartition_count(n - (d * d - 1) / 4);
  return c;
}

HalfSymbol range_half(int lo, int hi, std::vector<int> extra = {}) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  v.insert(v.end(), extra.begin(), extra.end());
  return make_half(v);
}

Symbol random_symbol(std::mt19937_64& rng, int max_entry, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), ent(0, max_entry);
  auto half = [&] {
    std::set<int> s;
    int k = len(rng);
    while (static_cast<int>(s.size()) < k) s.insert(ent(rng));
    return make_half(std::vector<int>(s.begin(), s.end()));
  };
  return {half(), half()};
}

std::vector<Symbol> all_reduced_upto(int n) {
  std::vector<Symbol> v;
  for (int r = 0; r <= n; ++r)
    for (auto& s : enumerate_symbols(r, DefectClass::any())) v.push_back(s);
  return v;
}

}  // namespace

TEST(HalfSymbol, SigmaBarPi) {
  EXPECT_EQ(sigma(HalfSymbol{1}), (HalfSymbol{2, 0}));
  EXPECT_EQ(bar(HalfSymbol{3, 1}), (HalfSymbol{1}));
  EXPECT_EQ(pi(HalfSymbol{3, 1}), (Partition{2, 1}));
  EXPECT_EQ(delta({2, 1}), (HalfSymbol{3, 1}));
  EXPECT_TRUE(pi(HalfSymbol{}).empty());
  EXPECT_THROW(sigma_inverse(HalfSymbol{3, 1}), precondition_error);
  EXPECT_THROW(bar(HalfSymbol{}), precondition_error);
  EXPECT_THROW(require_half_symbol({1, 1}), precondition_error);
}

TEST(HalfSymbol, InverseLaws) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    auto s = random_symbol(rng, 20, 8);
    EXPECT_EQ(sigma_inverse(sigma(s.A)), s.A);
    EXPECT_EQ(pi(sigma(s.A)), pi(s.A));
    if (!s.A.empty()) {
      Partition p = pi(s.A), pb = pi(bar(s.A));
      if (!p.empty() && static_cast<int>(p.size()) == static_cast<int>(s.A.size())) {
        p.erase(p.begin());
        EXPECT_EQ(pb, p);
      }
    }
  }
  for (int n = 0; n <= 10; ++n)
    for (auto& l : partitions(n)) {
      EXPECT_EQ(pi(delta(l)), l);
      EXPECT_TRUE(is_reduced(delta(l)));
    }
}

TEST(Symbol, RankDefectExamples) {
  Symbol s{{3}, {0}};
  EXPECT_EQ(rank(s), 3);
  EXPECT_EQ(defect(s), 0);
  EXPECT_EQ(m_param(s), 1);
  EXPECT_EQ(max_entry(s), 3);
  EXPECT_EQ(level(s), 0);
  Symbol t{{2, 1}, {0}};
  EXPECT_EQ(rank(t), 2);
  EXPECT_EQ(defect(t), 1);
  EXPECT_EQ(m_param(t), 2);
  EXPECT_EQ(max_entry(t), 2);
  EXPECT_EQ(level(t), 1);
  EXPECT_EQ(rank(Symbol{}), 0);
  EXPECT_EQ(level(Symbol{}), 0);
}

TEST(Symbol, Sequences) {
  Symbol t{{2, 1}, {0}};
  EXPECT_EQ(c_sequence(t), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(d_sequence_doubled(t), (std::vector<long long>{0, 1, 2}));
  Symbol s{{3}, {0}};
  EXPECT_EQ(d_sequence_doubled(s), (std::vector<long long>{0, 5}));
  EXPECT_EQ(d_sequence_doubled(Symbol{{}, {0}}), (std::vector<long long>{0}));
}

TEST(Symbol, IdentitiesExhaustive) {
  for (auto& s : all_reduced_upto(14)) {
    const long long n = rank(s);
    ASSERT_EQ(rank_by_defect_parity(s), n);
    ASSERT_EQ(epsilon_m(s) == 0, defect(s) % 2 != 0);
    Symbol sh = sigma(s);
    ASSERT_EQ(rank(sh), n);
    ASSERT_EQ(level(sh), level(s));
    ASSERT_EQ(level(transpose(s)), level(s));
    ASSERT_GE(level(s), 0);
    if (n > 0) { ASSERT_LE(max_entry(s), n); }
    auto c = c_sequence(s);
    for (std::size_t i = 0; i + 1 < c.size(); ++i) ASSERT_LE(c[i], c[i + 1]);
    for (std::size_t i = 0; i + 2 < c.size(); ++i) ASSERT_LT(c[i], c[i + 2]);
    auto d = d_sequence_doubled(s);
    long long sum = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      ASSERT_GE(d[i], i % 2 ? 1 : 0);
      if (i + 2 < d.size()) { ASSERT_LE(d[i], d[i + 2]); }
      if (i + 1 < d.size()) { ASSERT_LE(d[i], d[i + 1] + 1); }
      sum += d[i];
      ASSERT_GE(2 * sum, static_cast<long long>(i));
    }
    ASSERT_EQ(4 * n, 2 * sum + m_param(s) + epsilon_m(s)) << to_string(s);
    ASSERT_EQ(pair_max_sum(s), weighted_c_sum(s));
  }
}

TEST(Symbol, IdentitiesRandomLarge) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10000; ++t) {
    Symbol s = reduce(random_symbol(rng, 60, 12));
    const long long n = rank(s);
    ASSERT_EQ(rank_by_defect_parity(s), n);
    ASSERT_EQ(rank(sigma(s)), n);
    ASSERT_EQ(level(sigma(s)), level(s));
    ASSERT_EQ(pair_max_sum(s), weighted_c_sum(s));
    auto d = d_sequence_doubled(s);
    long long sum = 0;
    for (long long x : d) sum += x;
    ASSERT_EQ(4 * n, 2 * sum + m_param(s) + epsilon_m(s));
    Rational eps(epsilon_m(s), 8);
    ASSERT_EQ(log_degree_estimate(s, n), c_form_estimate(s, n) - eps);
  }
}

TEST(Hooks, Examples) {
  Symbol s{{2, 1}, {0}};
  auto h = hooks(s, 2);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_TRUE(h[0].in_A);
  EXPECT_EQ(h[0].r, 2);
  Symbol r = remove_hook(s, h[0]);
  EXPECT_EQ(r, (Symbol{{0}, {1, 0}}));
  EXPECT_EQ(rank(r), 0);
  EXPECT_TRUE(cohooks(s, 2).empty());
  auto c = cohooks(s, 1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].r, 2);
  Symbol rc = remove_cohook(s, c[0]);
  EXPECT_EQ(rc, (Symbol{{1, 0}, {1}}));
  EXPECT_EQ(rank(rc), 1);
  EXPECT_THROW(remove_hook(s, Hook{true, 1, 2}), precondition_error);
  EXPECT_THROW(remove_hook(s, Hook{false, 0, 1}), precondition_error);
}

TEST(Hooks, RemovalLowersRankAndInverts) {
  for (auto& s : all_reduced_upto(10)) {
    const long long n = rank(s);
    for (int k = 1; k <= n; ++k) {
      for (auto& h : hooks(s, k)) {
        Symbol t = remove_hook(s, h);
        ASSERT_EQ(rank(t), n - k);
        ASSERT_EQ(add_hook(t, h), s);
        if (defect(s) % 2 == 0) { ASSERT_EQ(mod_floor(defect(t), 4), mod_floor(-defect(s), 4)); }
      }
      for (auto& h : cohooks(s, k)) {
        Symbol t = remove_cohook(s, h);
        ASSERT_EQ(rank(t), n - k);
        ASSERT_EQ(add_cohook(t, h), s);
        if (defect(s) % 2 == 0) { ASSERT_EQ(mod_floor(defect(t) - defect(s), 4), 2); }
      }
    }
  }
}

TEST(Enumerate, SmallRankExamples) {
  auto e = enumerate_symbols(1, DefectClass::even());
  std::set<Symbol> got(e.begin(), e.end());
  std::set<Symbol> want{{{1, 0}, {}}, {{0}, {1}}, {{1}, {0}}, {{}, {1, 0}}};
  EXPECT_EQ(got, want);
  e = enumerate_symbols(0, DefectClass::mod4(1));
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], (Symbol{{0}, {}}));
  EXPECT_THROW(enumerate_symbols(15, DefectClass::any()), cap_exceeded);
  EXPECT_THROW(enumerate_symbols(41, DefectClass::any(), {.level_cap = 2}), cap_exceeded);
}

TEST(Enumerate, MatchesBruteForce) {
  for (int n = 0; n <= 5; ++n)
    for (auto cls : {DefectClass::any(), DefectClass::mod4(0), DefectClass::mod4(1), DefectClass::mod4(2), DefectClass::mod4(3)}) {
      auto e = enumerate_symbols(n, cls);
      std::set<Symbol> got(e.begin(), e.end());
      EXPECT_EQ(got.size(), e.size());
      EXPECT_EQ(got, brute_symbols(n, cls)) << n;
    }
}

TEST(Enumerate, TypeBCountIsBipartitionFamilies) {
  std::vector<long long> known{1, 2, 6, 12, 25};
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(type_b_unipotent_count(n), known[n]);
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(static_cast<long long>(enumerate_symbols(n, DefectClass::mod4(1)).size()), type_b_unipotent_count(n));
}

TEST(Enumerate, LevelCapMatchesFilter) {
  for (int n = 0; n <= 14; ++n)
    for (int cap = 0; cap <= 4; ++cap)
      for (auto cls : {DefectClass::odd(), DefectClass::even()}) {
        std::vector<Symbol> filtered;
        for (auto& s : enumerate_symbols(n, cls))
          if (level(s) <= cap) filtered.push_back(s);
        ASSERT_EQ(enumerate_symbols(n, cls, {.level_cap = cap}), filtered) << n << " " << cap;
      }
}

TEST(Enumerate, NonReducedShifts) {
  auto e = enumerate_symbols(6, DefectClass::odd(), {.reduced_only = false});
  auto r = enumerate_symbols(6, DefectClass::odd());
  EXPECT_GT(e.size(), r.size());
  for (auto& s : e) {
    EXPECT_EQ(rank(s), 6);
    EXPECT_LE(max_entry(s), 6);
    EXPECT_NE(std::find(r.begin(), r.end(), reduce(s)), r.end());
  }
}

TEST(Level, SteinbergHasMaximalLevel) {
  for (int n = 1; n <= 10; ++n) {
    long long best = 0;
    for (auto& s : enumerate_symbols(n, DefectClass::mod4(1))) best = std::max(best, level(s));
    EXPECT_EQ(best, n);
    EXPECT_EQ(level(Symbol{range_half(0, n), range_half(1, n)}), n);
  }
}

TEST(Degree, TrivialSymbolHasExponentZero) {
  for (int n = 1; n <= 30; ++n) {
    Symbol s{{n}, {0}};
    Rational e = log_degree_estimate(s, n);
    EXPECT_EQ(e, 0);
    EXPECT_LE(abs(e), 3 * m_param(s));
    EXPECT_EQ(level_from_degree(s, n), 0);
  }
  EXPECT_THROW(log_degree_estimate(Symbol{{3}, {0}}, 4), precondition_error);
}

TEST(Degree, NintRecoversLevelAtRank30) {
  std::size_t count = 0;
  for (auto cls : {DefectClass::odd(), DefectClass::even()})
    for (auto& s : enumerate_symbols(30, cls, {.level_cap = 3})) {
      Rational x = log_degree_estimate(s, 30) / 60;
      ASSERT_FALSE(is_half_tie(x)) << to_string(s);
      ASSERT_EQ(nint(x), level(s)) << to_string(s);
      ++count;
    }
  EXPECT_GT(count, 100u);
  Symbol four{range_half(1, 1, {20}), {0}};
  EXPECT_EQ(rank(four), 20);
  EXPECT_EQ(level(four), 1);
  EXPECT_EQ(level_from_degree(four, 20), 1);
}

TEST(NoTie, Exhaustive) {
  EXPECT_TRUE(no_tie(Symbol{{3}, {0}}));
  Symbol deg{{1, 0}, {1, 0}};
  EXPECT_FALSE(no_tie(deg));
  for (auto& s : all_reduced_upto(14))
    if (no_tie_hypothesis(s)) { ASSERT_TRUE(no_tie(s)) << to_string(s); }
}

TEST(InequalityLedger, IdentityLinesAndCorrectedBounds) {
  for (auto& s : all_reduced_upto(14)) {
    if (m_param(s) < 0) continue;
    auto L = inequality_ledger(s);
    ASSERT_TRUE(L.identities_hold()) << to_string(s);
    ASSERT_TRUE(L.cubed_with_sum_c_holds()) << to_string(s);
    ASSERT_TRUE(L.m20_with_sum_c_holds()) << to_string(s);
    const long long m = m_param(s);
    ASSERT_EQ(L.sum_c, Rational(rank(s) + floor_div(m * m, 4)));
  }
}

TEST(InequalityLedger, StatedFinalLinesWithNFail) {
  Symbol s{{1}, {1, 0}};
  auto L = inequality_ledger(s);
  EXPECT_TRUE(L.identities_hold());
  EXPECT_TRUE(L.cubed_with_sum_c_holds());
  EXPECT_FALSE(L.cubed_with_n_holds());
  std::size_t cubed = 0, m20 = 0, total = 0;
  for (auto& t : all_reduced_upto(14)) {
    if (m_param(t) < 0) continue;
    auto M = inequality_ledger(t);
    ++total;
    cubed += !M.cubed_with_n_holds();
    m20 += !M.m20_with_n_holds();
  }
  EXPECT_EQ(total, 42230u);
  EXPECT_EQ(cubed, 2116u);
  EXPECT_EQ(m20, 4444u);
}

TEST(Tn, FourSetsBC) {
  for (int n = 4; n <= 12; ++n) {
    std::set<Symbol> hook_want, cohook_want;
    for (int l = 0; l < n; ++l) {
      hook_want.insert({range_half(1, l, {n}), range_half(0, l - 1)});
      hook_want.insert({range_half(0, l + 1), range_half(1, l, {n})});
      if (l > 0) cohook_want.insert({range_half(1, l - 1), range_half(0, l, {n})});
      cohook_want.insert({range_half(0, l, {n}), range_half(1, l + 1)});
    }
    std::set<Symbol> hook_got, cohook_got;
    std::map<long long, int> per_hook, per_cohook;
    for (auto& e : tn_classification(n, TnFamily::BC, TnElement::t_n_hook)) {
      hook_got.insert(e.symbol);
      ++per_hook[e.level];
    }
    for (auto& e : tn_classification(n, TnFamily::BC, TnElement::t_n_cohook)) {
      cohook_got.insert(e.symbol);
      ++per_cohook[e.level];
    }
    // The trivial and Steinberg symbols carry both an n-hook and an n-cohook.
    const Symbol trivial{{n}, {}}, steinberg{range_half(0, n), range_half(1, n)};
    EXPECT_EQ(hook_got, hook_want) << n;
    std::set<Symbol> cohook_plus = cohook_want;
    cohook_plus.insert(trivial);
    cohook_plus.insert(steinberg);
    EXPECT_EQ(cohook_got, cohook_plus) << n;
    std::set<Symbol> all_got = hook_got, all_want = hook_want;
    all_got.insert(cohook_got.begin(), cohook_got.end());
    all_want.insert(cohook_want.begin(), cohook_want.end());
    EXPECT_EQ(all_got, all_want) << n;
    for (int l = 0; l < n; ++l) {
      EXPECT_EQ(level(Symbol{range_half(1, l, {n}), range_half(0, l - 1)}), l);
      EXPECT_EQ(level(Symbol{range_half(0, l + 1), range_half(1, l, {n})}), l + 1);
      if (l > 0) { EXPECT_EQ(level(Symbol{range_half(1, l - 1), range_half(0, l, {n})}), l); }
      EXPECT_EQ(level(Symbol{range_half(0, l, {n}), range_half(1, l + 1)}), l + 1);
    }
    for (auto [lv, c] : per_hook) EXPECT_LE(c, 2);
    for (auto [lv, c] : per_cohook) EXPECT_LE(c, 2);
    for (auto& s : hook_got) {
      if (s != trivial && s != steinberg) { EXPECT_TRUE(cohooks(s, n).empty()) << s; }
    }
  }
}

TEST(Tn, HookAndCohookAtNCoexistOnlyOnTrivialAndSteinberg) {
  for (int n = 1; n <= 12; ++n) {
    std::set<Symbol> both;
    for (auto& s : enumerate_symbols(n, DefectClass::any()))
      if (!hooks(s, n).empty() && !cohooks(s, n).empty()) both.insert(s);
    const Symbol st{range_half(0, n), range_half(1, n)};
    EXPECT_EQ(both, (std::set<Symbol>{{{n}, {}}, {{}, {n}}, st, transpose(st)})) << n;
    for (auto cls : {DefectClass::mod4(0), DefectClass::mod4(2)})
      for (auto& s : enumerate_symbols(n, cls)) ASSERT_FALSE(!hooks(s, n).empty() && !cohooks(s, n).empty()) << s;
  }
}

TEST(Tn, PrimeRankD) {
  for (int n = 5; n <= 12; ++n) {
    for (auto [fam, el] : {std::pair{TnFamily::Dplus, TnElement::t_n_hook}, std::pair{TnFamily::Dminus, TnElement::t_n_cohook}}) {
      std::map<long long, int> per;
      for (auto& e : tn_classification(n, fam, el)) ++per[e.level];
      ASSERT_EQ(per.size(), static_cast<std::size_t>(n)) << n;
      for (auto [lv, c] : per) {
        EXPECT_GE(lv, 0);
        EXPECT_LE(lv, n - 1);
        EXPECT_EQ(c, 2) << n << " level " << lv;
      }
    }
    EXPECT_TRUE(tn_classification(n, TnFamily::Dplus, TnElement::t_n_cohook).empty());
    EXPECT_TRUE(tn_classification(n, TnFamily::Dminus, TnElement::t_n_hook).empty());
  }
  EXPECT_THROW(tn_classification(4, TnFamily::Dplus, TnElement::t_n_hook), precondition_error);
}

TEST(Tn, UnipRegD) {
  for (int n = 5; n <= 12; ++n)
    for (auto fam : {TnFamily::Dplus, TnFamily::Dminus}) {
      std::map<std::pair<bool, long long>, int> per;
      for (auto& e : tn_classification(n, fam, TnElement::t_nminus1)) {
        EXPECT_LE(e.level, n - 1);
        ++per[{e.via_hook, e.level}];
      }
      for (bool via : {true, false}) {
        EXPECT_EQ((per[{via, 0}]), 2) << n;
        EXPECT_EQ((per[{via, 1}]), 2) << n;
        for (long long j = 2; j <= n - 1; ++j) EXPECT_LE((per[{via, j}]), 4) << n << " " << j;
      }
    }
}

namespace {

SeriesDescriptor unipotent_sp(int n, Symbol s) {
  SeriesDescriptor d;
  d.type = DualType::B;
  d.dim_vsharp = 2 * n + 1;
  d.plus = {std::move(s), 2 * n + 1};
  return d;
}

}  // namespace

TEST(LevelGeneral, UnipotentAgrees) {
  auto d = unipotent_sp(3, {{3}, {}});
  EXPECT_EQ(level_general(d).twice, 0);
  for (int n = 1; n <= 8; ++n)
    for (auto& s : enumerate_symbols(n, DefectClass::mod4(1))) {
      EXPECT_EQ(level_general(unipotent_sp(n, s)).twice, 2 * level(s));
      SeriesDescriptor c;
      c.type = DualType::C;
      c.q_odd = true;
      c.dim_vsharp = 2 * n;
      c.plus = {s, 2 * n};
      EXPECT_EQ(level_general(c).twice, 2 * level(s));
    }
}

TEST(LevelGeneral, WeilCharactersHaveLevelHalf) {
  for (int n = 2; n <= 10; ++n)
    for (Symbol s : {Symbol{{n}, {0}}, Symbol{{0}, {n}}}) {
      SeriesDescriptor d;
      d.type = DualType::B;
      d.dim_vsharp = 2 * n + 1;
      d.plus = {{{0}, {}}, 1};
      d.minus = {s, 2 * n};
      EXPECT_EQ(level_general(d).str(), "1/2");
      EXPECT_EQ(series_log_degree(d, psi_log_degree(d)), n);
    }
}

TEST(LevelGeneral, Validation) {
  SeriesDescriptor d;
  d.type = DualType::B;
  d.dim_vsharp = 7;
  d.plus = {{{0}, {}}, 1};
  d.minus = {{{3}, {0}}, 5};
  EXPECT_THROW(validate(d), precondition_error);
  d.minus.dim = 6;
  EXPECT_NO_THROW(validate(d));
  d.a = {1};
  EXPECT_THROW(validate(d), precondition_error);
}

TEST(SeriesDegree, TrivialAndSingleD) {
  SeriesDescriptor d;
  d.type = DualType::D;
  d.dim_vsharp = 20;
  d.plus = {{{10}, {0}}, 20};
  EXPECT_EQ(series_log_degree(d, psi_log_degree(d)), 0);
  EXPECT_EQ(level_general(d).twice, 0);
}

TEST(SeriesDegree, NintMatchesGeneralLevel) {
  std::mt19937_64 rng(5);
  const int n = 30;
  int checked = 0;
  std::vector<std::vector<Symbol>> low_odd(8), low_even(8);
  for (int r = 0; r < 8; ++r) {
    low_odd[r] = enumerate_symbols(r, DefectClass::odd());
    low_even[r] = enumerate_symbols(r, DefectClass::even());
  }
  while (checked < 1000) {
    SeriesDescriptor d;
    d.type = static_cast<DualType>(rng() % 3);
    d.dim_vsharp = d.type == DualType::B ? 2 * n + 1 : 2 * n;
    int budget = static_cast<int>(rng() % 6);
    while (budget > 0 && rng() % 2) {
      int x = 1 + static_cast<int>(rng() % budget);
      d.a.push_back(x);
      budget -= x;
    }
    int sa = 0;
    for (int x : d.a) sa += x;
    d.dim_v0 = 2 * sa;
    int small = budget > 0 ? static_cast<int>(rng() % (budget + 1)) : 0;
    int big_rank = n - sa - small;
    bool plus_big = rng() % 2;
    auto is_d = [&](int kappa) { return d.type == DualType::D || (d.type == DualType::B && kappa == -1); };
    auto dim_of = [&](int kappa, int r) { return 2 * r + (d.type == DualType::B && kappa == 1 ? 1 : 0); };
    auto pick_low = [&](int kappa, int r) {
      auto& pool = is_d(kappa) ? low_even[r] : low_odd[r];
      return pool[rng() % pool.size()];
    };
    const int kb = plus_big ? 1 : -1, ks = -kb;
    KappaComponent big, sm;
    sm = {pick_low(ks, small), dim_of(ks, small)};
    auto cands = enumerate_symbols(big_rank, is_d(kb) ? DefectClass::even() : DefectClass::odd(), {.level_cap = 2});
    big = {cands[rng() % cands.size()], dim_of(kb, big_rank)};
    (plus_big ? d.plus : d.minus) = big;
    (plus_big ? d.minus : d.plus) = sm;
    HalfInteger lev = level_general(d);
    if (lev.twice > 6) continue;
    Rational x = series_log_degree(d, psi_log_degree(d)) / (2 * n);
    if (lev.is_integer()) {
      ASSERT_FALSE(is_half_tie(x));
      ASSERT_EQ(nint(x), lev.twice / 2) << to_string(big.symbol) << " " << to_string(sm.symbol);
    } else {
      Rational diff = x - lev.value();
      ASSERT_LT(abs(diff), Rational(1, 4));
    }
    if (sm.dim + d.dim_v0 <= lev.twice) { EXPECT_EQ(dominant_kappa(d), kb); }
    ++checked;
  }
}
