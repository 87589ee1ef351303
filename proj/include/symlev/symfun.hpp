// Partitions, border strips and Murnaghan-Nakayama evaluation of S_N characters.
#pragma once

#include "numeric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace symlev {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;
/// Orbit lengths of a permutation; order matters only where stated.
using CycleType = std::vector<int>;

inline int size_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

inline bool is_partition(const Partition& l) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] <= 0) return false;
    if (i && l[i] > l[i - 1]) return false;
  }
  return true;
}

inline void require_partition(const Partition& l) {
  if (!is_partition(l)) throw precondition_error("not a partition (positive, weakly decreasing)");
}

inline std::string to_string(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

/// All partitions of n in decreasing lexicographic order.
inline std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rem, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

inline Partition transpose(const Partition& l) {
  Partition t;
  if (l.empty()) return t;
  for (int j = 1; j <= l[0]; ++j) {
    int c = 0;
    for (int x : l)
      if (x >= j) ++c;
    t.push_back(c);
  }
  return t;
}

struct BorderStrip {
  std::vector<std::pair<int, int>> cells;  // (row, column), 0-based
  int size = 0;
  int height = 0;  // rows met minus one
  Partition remainder;
};

namespace detail {

inline std::vector<int> beta_set(const Partition& l) {
  const int L = static_cast<int>(l.size());
  std::vector<int> b(L);
  for (int i = 0; i < L; ++i) b[i] = l[i] + (L - 1 - i);
  return b;
}

inline Partition from_beta(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<int>());
  const int L = static_cast<int>(b.size());
  Partition l;
  for (int i = 0; i < L; ++i) {
    int part = b[i] - (L - 1 - i);
    if (part > 0) l.push_back(part);
  }
  return l;
}

}  // namespace detail

/// Every removable border strip of size k, with its height.
inline std::vector<BorderStrip> border_strips(const Partition& l, int k) {
  require_partition(l);
  if (k < 1) throw precondition_error("strip size must be positive");
  std::vector<BorderStrip> out;
  auto b = detail::beta_set(l);
  std::set<int> bs(b.begin(), b.end());
  for (int x : b) {
    if (x - k < 0 || bs.count(x - k)) continue;
    BorderStrip s;
    s.size = k;
    for (int y : b)
      if (y > x - k && y < x) ++s.height;
    std::vector<int> nb = b;
    *std::find(nb.begin(), nb.end(), x) = x - k;
    s.remainder = detail::from_beta(nb);
    for (int r = 0; r < static_cast<int>(l.size()); ++r) {
      int keep = r < static_cast<int>(s.remainder.size()) ? s.remainder[r] : 0;
      for (int c = keep; c < l[r]; ++c) s.cells.emplace_back(r, c);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const BorderStrip& a, const BorderStrip& c) { return a.cells < c.cells; });
  return out;
}

/// Memoized Murnaghan-Nakayama evaluator. Not thread-safe; use one per worker.
class MnEvaluator {
 public:
  long long value(const Partition& l, CycleType rho) {
    require_partition(l);
    if (size_of(l) != size_of(rho)) throw precondition_error("partition and cycle type sizes differ");
    for (int r : rho)
      if (r <= 0) throw precondition_error("cycle lengths must be positive");
    std::sort(rho.begin(), rho.end(), std::greater<int>());
    return eval(l, rho, 0);
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  long long eval(const Partition& l, const CycleType& rho, std::size_t i) {
    if (i == rho.size()) return 1;
    CycleType rest(rho.begin() + static_cast<long>(i), rho.end());
    auto key = std::make_pair(l, rest);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    long long v = 0;
    for (const auto& s : border_strips(l, rho[i])) {
      long long sub = eval(s.remainder, rho, i + 1);
      v += (s.height % 2 ? -sub : sub);
    }
    memo_.emplace(std::move(key), v);
    return v;
  }

  std::map<std::pair<Partition, CycleType>, long long> memo_;
};

/// chi_lambda at a permutation of cycle type rho.
inline long long mn_value(const Partition& l, const CycleType& rho) {
  thread_local MnEvaluator ev;
  return ev.value(l, rho);
}

/// Degree chi_lambda(1) by the hook length formula.
inline BigInt hook_length_degree(const Partition& l) {
  require_partition(l);
  const int n = size_of(l);
  BigInt num = 1;
  for (int i = 2; i <= n; ++i) num *= i;
  Partition t = transpose(l);
  BigInt den = 1;
  for (std::size_t r = 0; r < l.size(); ++r)
    for (int c = 0; c < l[r]; ++c) den *= (l[r] - c - 1) + (t[c] - static_cast<int>(r) - 1) + 1;
  return num / den;
}

/// |C_{S_N}(g)| for g of cycle type rho.
inline BigInt centralizer_order_sn(const CycleType& rho) {
  std::map<int, int> mult;
  for (int r : rho) ++mult[r];
  BigInt c = 1;
  for (auto [len, m] : mult) {
    for (int i = 0; i < m; ++i) c *= len;
    for (int i = 2; i <= m; ++i) c *= i;
  }
  return c;
}

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt class_size_sn(const CycleType& rho) { return factorial(size_of(rho)) / centralizer_order_sn(rho); }

struct CharTable {
  int N = 0;
  std::vector<Partition> rows;     // decreasing lexicographic
  std::vector<CycleType> columns;  // ascending arrays, from (1^N) to (N)
  std::vector<std::vector<long long>> values;

  long long at(std::size_t r, std::size_t c) const { return values[r][c]; }
};

inline CycleType ascending(CycleType c) {
  std::sort(c.begin(), c.end());
  return c;
}

inline CharTable char_table(int N, int bound = 8) {
  if (N < 1 || N > bound) throw precondition_error("character table size bound exceeded");
  CharTable t;
  t.N = N;
  t.rows = partitions(N);
  auto cls = partitions(N);
  std::reverse(cls.begin(), cls.end());
  for (auto& c : cls) t.columns.push_back(ascending(c));
  MnEvaluator ev;
  for (auto& r : t.rows) {
    std::vector<long long> row;
    for (auto& c : t.columns) row.push_back(ev.value(r, c));
    t.values.push_back(std::move(row));
  }
  return t;
}

/// Number of border-strip tableaux of shape l and ordered type alpha, together
/// with their signed sum. Strip alpha_m is the outermost, so it is removed first.
inline std::pair<long long, long long> count_tableaux(const Partition& l, const CycleType& alpha) {
  require_partition(l);
  if (size_of(l) != size_of(alpha)) throw precondition_error("partition and type sizes differ");
  std::map<std::pair<Partition, std::size_t>, std::pair<long long, long long>> memo;
  std::function<std::pair<long long, long long>(const Partition&, std::size_t)> rec =
      [&](const Partition& sh, std::size_t m) -> std::pair<long long, long long> {
    if (m == 0) return {1, 1};
    auto key = std::make_pair(sh, m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::pair<long long, long long> acc{0, 0};
    for (const auto& s : border_strips(sh, alpha[m - 1])) {
      auto [c, v] = rec(s.remainder, m - 1);
      acc.first += c;
      acc.second += (s.height % 2 ? -v : v);
    }
    memo.emplace(key, acc);
    return acc;
  };
  return rec(l, alpha.size());
}

inline bool is_minimal(const Partition& l, const CycleType& alpha) { return count_tableaux(l, alpha).first <= 1; }

/// alpha_{i+1} >= 2(alpha_1 + ... + alpha_i) - 1 for all i.
inline bool fast_growth_holds(const CycleType& alpha) {
  long long s = 0;
  for (std::size_t i = 0; i + 1 < alpha.size(); ++i) {
    if (i && alpha[i] < alpha[i - 1]) throw precondition_error("cycle type must be ascending");
    s += alpha[i];
    if (alpha[i + 1] < 2 * s - 1) return false;
  }
  return true;
}

/// All ascending cycle types of N satisfying the fast growth inequality.
inline std::vector<CycleType> fast_growth_types(int N) {
  std::vector<CycleType> out;
  CycleType cur;
  std::function<void(int, int)> rec = [&](int rem, int sum) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    int lo = cur.empty() ? 1 : std::max(cur.back(), 2 * sum - 1);
    for (int a = std::max(lo, 1); a <= rem; ++a) {
      cur.push_back(a);
      rec(rem - a, sum + a);
      cur.pop_back();
    }
  };
  rec(N, 0);
  return out;
}

enum class XyVariant { x, y };

/// Cycle type of x = (1..a)(a+1..N) or y = (1)(2..a)(a+1..N).
inline CycleType xy_cycle_type(int N, int a, XyVariant v) {
  if (v == XyVariant::x) return ascending({a, N - a});
  if (a < 2) throw precondition_error("variant y needs a >= 2");
  return ascending({1, a - 1, N - a});
}

struct NonvanishingEntry {
  Partition lambda;
  long long value = 0;
};

/// All lambda of N with chi_lambda nonzero at x or y.
inline std::vector<NonvanishingEntry> nonvanishing_set(int N, int a, XyVariant v) {
  if (!(a > 0 && 3 * a < N)) throw precondition_error("need 0 < a < N/3");
  CycleType rho = xy_cycle_type(N, a, v);
  MnEvaluator ev;
  std::vector<NonvanishingEntry> out;
  for (auto& l : partitions(N)) {
    long long val = ev.value(l, rho);
    if (val) out.push_back({l, val});
  }
  return out;
}

/// chi(g) = chi(1) mod l for g of prime order l.
inline bool prime_order_congruence(const Partition& lam, const CycleType& g) {
  int ell = 0;
  for (int x : g) {
    if (x == 1) continue;
    if (ell == 0) ell = x;
    if (x != ell) throw precondition_error("element is not of prime order");
  }
  if (ell == 0 || !is_prime(static_cast<std::uint64_t>(ell))) throw precondition_error("element is not of prime order");
  BigInt v = mn_value(lam, g);
  BigInt d = hook_length_degree(lam);
  BigInt diff = v - d;
  return diff % ell == 0;
}

}  // namespace symlev
