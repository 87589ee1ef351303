// Named property suites shared by the command-line driver and the acceptance run.
#pragma once

#include "groupsim.hpp"
#include "howe.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

namespace symlev {

struct VerifyConfig {
  int rank_cap = 14;             // symbol identities, no-tie, hook sets (capped at 12)
  int howe_rank_cap = 12;        // main-piece sweep
  int bijection_rank = 14;       // source rank for the SO bijection
  std::size_t order_cap = 30000; // largest group enumerated
  std::uint64_t work_cap = 1000000000;
  unsigned workers = 1;
  std::uint64_t seed = 20240601;
  int random_symbols = 10000;
  int s7_samples = 200;
};

struct PropertyResult {
  std::string name;
  std::string anchor;  // the statement under test
  bool passed = false;
  bool cap_abort = false;
  std::string detail;
  std::map<std::string, std::string> counts;
  double seconds = 0;
};

struct PropertySpec {
  std::string name;
  std::string anchor;
  std::string suite;  // symbols, howe or groups
  std::function<void(const VerifyConfig&, PropertyResult&)> run;
};

namespace detail {

struct Tally {
  PropertyResult& r;
  std::size_t checked = 0, failed = 0;
  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ < 5) r.detail += (r.detail.empty() ? "" : "; ") + what;
  }
  void finish() {
    r.counts["checked"] = std::to_string(checked);
    r.counts["failed"] = std::to_string(failed);
    r.passed = failed == 0 && checked > 0;
  }
};

inline HalfSymbol range_half(int lo, int hi, std::vector<int> extra = {}) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  v.insert(v.end(), extra.begin(), extra.end());
  return make_half(v);
}

inline Partition hook_partition(int N, int b) {
  Partition h{N - b};
  for (int i = 0; i < b; ++i) h.push_back(1);
  return h;
}

// ---------------------------------------------------------------- symbols suite

inline void char_tables(const VerifyConfig&, PropertyResult& r) {
  Tally t{r};
  for (int n = 1; n <= 8; ++n) {
    auto T = char_table(n);
    const std::size_t k = T.rows.size();
    const BigInt order = factorial(n);
    for (std::size_t i = 0; i < k; ++i) {
      t.check(BigInt(T.at(i, 0)) == hook_length_degree(T.rows[i]), "degree " + to_string(T.rows[i]));
      for (std::size_t j = 0; j < k; ++j) {
        BigInt row = 0, col = 0;
        for (std::size_t c = 0; c < k; ++c) row += class_size_sn(T.columns[c]) * T.at(i, c) * T.at(j, c);
        for (std::size_t s = 0; s < k; ++s) col += BigInt(T.at(s, i)) * T.at(s, j);
        t.check(row == (i == j ? order : BigInt(0)), "row orthogonality n=" + std::to_string(n));
        t.check(col == (i == j ? centralizer_order_sn(T.columns[i]) : BigInt(0)), "column orthogonality n=" + std::to_string(n));
      }
    }
  }
  t.finish();
}

inline void xy_nonvanishing(const VerifyConfig&, PropertyResult& r) {
  Tally t{r};
  std::size_t pairs = 0;
  for (int N = 4; N <= 16; ++N)
    for (int a = 1; 3 * a < N; ++a) {
      ++pairs;
      const std::string at = " N=" + std::to_string(N) + " a=" + std::to_string(a);
      auto xs = nonvanishing_set(N, a, XyVariant::x);
      t.check(static_cast<int>(xs.size()) == a * (N - a), "x count" + at);
      std::map<int, int> per_b;
      for (auto& e : xs) {
        t.check(std::abs(e.value) <= 1, "x value" + at);
        const int b = N - e.lambda[0];
        ++per_b[b];
        if (b < a) t.check(e.lambda == hook_partition(N, b), "x hook-only" + at);
      }
      for (auto [b, c] : per_b) t.check(c <= 1 + a * (a + 1) / 2, "x per-row bound" + at);
      if (a < 2) continue;
      auto ys = nonvanishing_set(N, a, XyVariant::y);
      t.check(static_cast<int>(ys.size()) == (a == 2 ? 2 * (N - 2) : (a - 1) * (N - a)), "y count" + at);
      std::map<int, int> per_by;
      for (auto& e : ys) {
        t.check(std::abs(e.value) <= 1, "y value" + at);
        const int b = N - e.lambda[0];
        ++per_by[b];
        if (b < a - 1) {
          Partition want{N - b};
          if (b >= 2) {
            want.push_back(2);
            for (int i = 0; i < b - 2; ++i) want.push_back(1);
          }
          t.check(b != 1 && e.lambda == want, "y shape for small b" + at);
        }
      }
      for (auto [b, c] : per_by) t.check(c <= a * a, "y per-row bound" + at);
    }
  r.counts["pairs"] = std::to_string(pairs);
  t.finish();
}

inline void fast_growth(const VerifyConfig&, PropertyResult& r) {
  Tally t{r};
  std::size_t types = 0;
  for (int n = 1; n <= 14; ++n) {
    MnEvaluator ev;
    for (auto& a : fast_growth_types(n)) {
      ++types;
      for (auto& l : partitions(n)) t.check(std::abs(ev.value(l, a)) <= 1, to_string(l) + " at " + to_string(a));
    }
  }
  r.counts["types"] = std::to_string(types);
  t.finish();
}

inline void symbol_identity_checks(Tally& t, const Symbol& s) {
  const long long n = rank(s);
  const std::string w = to_string(s);
  t.check(rank_by_defect_parity(s) == n, "rank formulas " + w);
  t.check(rank(sigma(s)) == n && level(sigma(s)) == level(s), "shift invariance " + w);
  t.check(pair_max_sum(s) == weighted_c_sum(s), "weighted c sum " + w);
  auto d = d_sequence_doubled(s);
  long long sum = 0;
  bool seq = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    seq = seq && d[i] >= static_cast<long long>(i % 2);
    if (i + 2 < d.size()) seq = seq && d[i] <= d[i + 2];
    if (i + 1 < d.size()) seq = seq && d[i] <= d[i + 1] + 1;
    sum += d[i];
    seq = seq && 2 * sum >= static_cast<long long>(i);
  }
  t.check(seq, "d-sequence constraints " + w);
  t.check(4 * n == 2 * sum + m_param(s) + epsilon_m(s), "rank from d-sequence " + w);
}

inline void symbol_identities(const VerifyConfig& c, PropertyResult& r) {
  Tally t{r};
  std::size_t exhaustive = 0;
  for (int n = 0; n <= c.rank_cap; ++n)
    for (auto& s : enumerate_symbols(n, DefectClass::any())) {
      symbol_identity_checks(t, s);
      ++exhaustive;
    }
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> len(0, 12), ent(0, 60);
  auto half = [&] {
    std::set<int> v;
    const int k = len(rng);
    while (static_cast<int>(v.size()) < k) v.insert(ent(rng));
    return make_half(std::vector<int>(v.begin(), v.end()));
  };
  for (int i = 0; i < c.random_symbols; ++i) symbol_identity_checks(t, reduce(Symbol{half(), half()}));
  r.counts["exhaustive_symbols"] = std::to_string(exhaustive);
  r.counts["random_symbols"] = std::to_string(c.random_symbols);
  t.finish();
}

inline void no_tie_property(const VerifyConfig& c, PropertyResult& r) {
  Tally t{r};
  std::size_t under = 0;
  for (int n = 0; n <= c.rank_cap; ++n)
    for (auto& s : enumerate_symbols(n, DefectClass::any()))
      if (no_tie_hypothesis(s)) {
        ++under;
        t.check(no_tie(s), to_string(s));
      }
  r.counts["under_hypothesis"] = std::to_string(under);
  t.finish();
}

inline void nint_recovery(const VerifyConfig&, PropertyResult& r) {
  Tally t{r};
  for (auto cls : {DefectClass::odd(), DefectClass::even()})
    for (auto& s : enumerate_symbols(30, cls, {.level_cap = 3})) {
      Rational x = log_degree_estimate(s, 30) / 60;
      t.check(!is_half_tie(x) && nint(x) == level(s), to_string(s));
    }
  t.finish();
}

inline void hook_sets(const VerifyConfig& c, PropertyResult& r) {
  Tally t{r};
  const int top = std::min(12, c.rank_cap);
  for (int n = 4; n <= top; ++n) {
    const std::string at = " n=" + std::to_string(n);
    std::set<Symbol> hw, cw, hg, cg;
    for (int l = 0; l < n; ++l) {
      hw.insert({range_half(1, l, {n}), range_half(0, l - 1)});
      hw.insert({range_half(0, l + 1), range_half(1, l, {n})});
      if (l > 0) cw.insert({range_half(1, l - 1), range_half(0, l, {n})});
      cw.insert({range_half(0, l, {n}), range_half(1, l + 1)});
    }
    std::map<long long, int> ph, pc;
    for (auto& e : tn_classification(n, TnFamily::BC, TnElement::t_n_hook)) {
      hg.insert(e.symbol);
      ++ph[e.level];
    }
    for (auto& e : tn_classification(n, TnFamily::BC, TnElement::t_n_cohook)) {
      cg.insert(e.symbol);
      ++pc[e.level];
    }
    std::set<Symbol> all_got = hg, all_want = hw;
    all_got.insert(cg.begin(), cg.end());
    all_want.insert(cw.begin(), cw.end());
    t.check(hg == hw, "BC hook set" + at);
    t.check(all_got == all_want, "BC union of four sets" + at);
    for (auto [lv, k] : ph) t.check(k <= 2, "BC hook per-level" + at);
    for (auto [lv, k] : pc) t.check(k <= 2, "BC cohook per-level" + at);
    if (n < 5) continue;
    for (auto [fam, el] : {std::pair{TnFamily::Dplus, TnElement::t_n_hook}, std::pair{TnFamily::Dminus, TnElement::t_n_cohook}}) {
      std::map<long long, int> per;
      for (auto& e : tn_classification(n, fam, el)) ++per[e.level];
      t.check(per.size() == static_cast<std::size_t>(n), "prime-rank D level count" + at);
      for (auto [lv, k] : per) t.check(k == 2 && lv >= 0 && lv <= n - 1, "prime-rank D per-level" + at);
    }
    for (auto fam : {TnFamily::Dplus, TnFamily::Dminus}) {
      std::map<std::pair<bool, long long>, int> per;
      for (auto& e : tn_classification(n, fam, TnElement::t_nminus1)) ++per[{e.via_hook, e.level}];
      for (bool via : {true, false}) {
        t.check(per[{via, 0}] == 2 && per[{via, 1}] == 2, "regular D levels 0,1" + at);
        for (long long j = 2; j <= n - 1; ++j) t.check(per[{via, j}] <= 4, "regular D per-level" + at);
      }
    }
  }
  t.finish();
}

// ---------------------------------------------------------------- howe suite

inline void main_piece_property(const VerifyConfig& c, PropertyResult& r) {
  auto sw = sweep_main_piece(c.howe_rank_cap);
  r.counts["even_sources"] = std::to_string(sw.even_sources);
  r.counts["odd_sources"] = std::to_string(sw.odd_sources);
  r.counts["failures"] = std::to_string(sw.failures);
  r.passed = sw.ok() && !sw.checks.empty();
  for (auto& ch : sw.checks)
    if (!ch.ok() && r.detail.size() < 400) r.detail += to_string(ch.source) + " ";
}

inline void so_bijection_property(const VerifyConfig& c, PropertyResult& r) {
  bool ok = true;
  for (int np = 1; np <= 2; ++np)
    for (auto side : {HoweSide::O_even, HoweSide::SO_odd}) {
      SoBijectionOptions opt;
      opt.require_hypothesis = howe_hypothesis(c.bijection_rank, HalfInteger{2 * np});
      auto rep = so_bijection_check(c.bijection_rank, np, side, opt);
      const std::string key = std::string(to_string(side)) + "/n'=" + std::to_string(np);
      r.counts[key] = std::to_string(rep.sources) + " sources over " + std::to_string(rep.targets) + " targets, fibers " +
                      std::to_string(rep.fiber_min) + ".." + std::to_string(rep.fiber_max) + (rep.hypothesis_holds ? "" : " (outside hypothesis)");
      if (!rep.ok()) {
        ok = false;
        for (auto& f : rep.failures) r.detail += f + "; ";
      }
    }
  r.passed = ok;
}

// ---------------------------------------------------------------- groups suite

inline BuiltGroup build_capped(GroupSpec s, const VerifyConfig& c) {
  s.cap = c.order_cap;
  return build_group(s);
}

inline GroupSpec spec_of(GroupFamily f, int N, std::uint64_t q, bool proj = false) {
  GroupSpec s;
  s.family = f;
  s.N = N;
  s.q = q;
  s.projective = proj;
  return s;
}

inline void frobenius_property(const VerifyConfig& c, PropertyResult& r) {
  Tally t{r};
  for (int N = 1; N <= 7; ++N) {
    auto S = build_capped(spec_of(GroupFamily::Symmetric, N, 2), c);
    const std::size_t k = S->class_count();
    std::vector<CycleType> ct(k);
    for (std::size_t i = 0; i < k; ++i) ct[i] = cycle_type(S->permutation(S->class_rep(i)));
    auto one = [&](std::size_t x, std::size_t y, std::size_t g) {
      Rational f = frobenius_count_formula_sn(N, ct[x], ct[y], ct[g]);
      t.check(f == Rational(frobenius_count_direct(*S, x, y, S->class_rep(g))),
              "S_" + std::to_string(N) + " " + to_string(ct[x]) + to_string(ct[y]) + to_string(ct[g]));
    };
    if (N <= 6) {
      for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
          for (std::size_t g = 0; g < k; ++g) one(x, y, g);
    } else {
      std::mt19937_64 rng(c.seed);
      std::uniform_int_distribution<std::size_t> pick(0, k - 1);
      for (int i = 0; i < c.s7_samples; ++i) one(pick(rng), pick(rng), pick(rng));
    }
  }
  t.finish();
}

inline void coverage_property(const VerifyConfig& c, PropertyResult& r) {
  Tally t{r};
  const std::vector<GroupSpec> groups{spec_of(GroupFamily::Alternating, 5, 2), spec_of(GroupFamily::SL, 2, 7, true),
                                      spec_of(GroupFamily::Alternating, 6, 2), spec_of(GroupFamily::SU, 4, 2, true)};
  for (auto& s : groups) {
    auto G = build_capped(s, c);
    auto found = find_covering_classes(*G, {c.workers, c.work_cap});
    const bool confirmed = found.confirmed && found.confirmed->covers_all && found.confirmed->union_of_classes;
    t.check(!found.covering.empty() && confirmed, describe(s));
    std::string v = std::to_string(found.covering.size()) + " covering classes of " + std::to_string(G->class_count());
    if (found.confirmed) v += ", confirmed class size " + std::to_string(found.confirmed->class_size);
    r.counts[describe(s)] = v;
  }
  t.finish();
}

inline void weil_tensor_property(const VerifyConfig& c, PropertyResult& r) {
  Tally t{r};
  for (auto [f, N, jf, j, q] : {std::tuple{GroupFamily::GL, 2, GroupFamily::GL, 2, 3}, std::tuple{GroupFamily::GU, 2, GroupFamily::GU, 1, 2}}) {
    auto G = build_capped(spec_of(f, N, q), c);
    auto S = build_capped(spec_of(jf, j, q), c);
    for (GroupTable::Index a = 0; a < G->order(); ++a)
      for (GroupTable::Index b = 0; b < S->order(); ++b) {
        auto rep = tensor_fixed_dim(G->matrix(a), S->matrix(b));
        t.check(rep.ok(), "tensor bound " + G->matrix(a).str());
      }
    const int eps = is_unitary_family(f) ? -1 : 1;
    for (std::size_t k = 0; k < G->class_count(); ++k) {
      const BigInt v = weil_gl_value(G->matrix(G->class_rep(k)), eps);
      for (auto x : G->class_members(k)) t.check(weil_gl_value(G->matrix(x), eps) == v, "Weil value class constancy");
    }
  }
  t.finish();
}

inline void su_regular_property(const VerifyConfig&, PropertyResult& r) {
  Tally t{r};
  for (std::uint64_t q : {2, 3})
    for (int m = 1; m <= 4; ++m) {
      auto cnt = count_non_su_regular(q, m);
      const std::string at = " q=" + std::to_string(q) + " m=" + std::to_string(m);
      t.check(cnt.agrees(), "orbit versus equation family" + at);
      t.check(cnt.product_one_on_regular, "orbit product" + at);
      r.counts["non_regular" + at] = std::to_string(cnt.by_orbit) + "/" + std::to_string(cnt.units);
      if (q == 2 && m == 3) t.check(cnt.first_regular.has_value(), "regular element exists" + at);
    }
  for (auto [q, m] : {std::pair<std::uint64_t, int>{2, 3}, {3, 3}}) {
    auto s = verify_scalars(q, m);
    t.check(s.ok(), "x_2 witness q=" + std::to_string(q) + " m=" + std::to_string(m));
  }
  t.finish();
}

inline void order_estimates(const VerifyConfig&, PropertyResult& r) {
  Tally t{r};
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9})
    for (int N = 1; N <= 20; ++N) {
      const BigInt o = group_order(Family::GU, N, q);
      t.check(o > ipow(BigInt(q), static_cast<unsigned>(N * N)), "lower");
      t.check(ipow(o, 5) < ipow(BigInt(q), static_cast<unsigned>(5 * N * N + 3)), "upper");
    }
  t.finish();
}

}  // namespace detail

/// All properties, in acceptance order.
inline const std::vector<PropertySpec>& property_catalog() {
  static const std::vector<PropertySpec> cat{
      {"char_tables", "S_N character tables: both orthogonality relations and hook-length degrees, N <= 8", "symbols", detail::char_tables},
      {"xy_nonvanishing", "nonvanishing counts at x and y, values in {-1,0,1}, hook-only rows for b < a", "symbols", detail::xy_nonvanishing},
      {"fast_growth", "superincreasing cycle types give character values in {-1,0,1}", "symbols", detail::fast_growth},
      {"symbol_identities", "rank formulas, shift invariance, d-sequence rank identity, weighted c-sum", "symbols", detail::symbol_identities},
      {"no_tie", "no tie between the two largest entries under the rank hypothesis", "symbols", detail::no_tie_property},
      {"nint_level", "nearest integer of the degree estimate recovers the level at rank 30", "symbols", detail::nint_recovery},
      {"hook_sets", "n-hook and n-cohook symbol sets for BC, and per-level counts for D", "symbols", detail::hook_sets},
      {"main_piece", "main piece: defect and rank conditions, linking, uniqueness of the linked partner", "howe", detail::main_piece_property},
      {"so_bijection", "symbol-level bijection for SO: surjectivity and exact fibers", "howe", detail::so_bijection_property},
      {"frobenius", "class-product counting formula equals the direct count in S_N", "groups", detail::frobenius_property},
      {"class_square", "a conjugacy class whose square is the whole group", "groups", detail::coverage_property},
      {"weil_tensor", "fixed-space bounds for g (x) s and Weil value class constancy", "groups", detail::weil_tensor_property},
      {"su_regular", "SU-regularity by orbit size versus the equation family; x_2 witness", "groups", detail::su_regular_property},
      {"order_estimates", "q^{N^2} < |GU_N(q)| < q^{N^2+0.6}", "groups", detail::order_estimates},
  };
  return cat;
}

/// Runs one property, converting cap aborts and precondition failures into a
/// failed result.
inline PropertyResult run_property(const PropertySpec& p, const VerifyConfig& c) {
  PropertyResult r;
  r.name = p.name;
  r.anchor = p.anchor;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    p.run(c, r);
  } catch (const cap_exceeded& e) {
    r.passed = false;
    r.cap_abort = true;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

/// Properties of a suite: symbols, howe, groups, all or none.
inline std::vector<PropertySpec> suite_properties(const std::string& suite) {
  if (suite != "symbols" && suite != "howe" && suite != "groups" && suite != "all" && suite != "none")
    throw precondition_error("unknown suite: " + suite);
  std::vector<PropertySpec> out;
  for (auto& p : property_catalog())
    if (suite == "all" || p.suite == suite) out.push_back(p);
  return out;
}

}  // namespace symlev
