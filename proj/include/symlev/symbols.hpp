// Lusztig symbols: half-symbols, rank, defect, level, hooks and cohooks,
// enumeration, and the dominant q-exponent of unipotent degrees.
#pragma once

#include "group_order.hpp"
#include "numeric.hpp"
#include "symfun.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace symlev {

/// Strictly decreasing non-negative entries.
using HalfSymbol = std::vector<int>;

struct Symbol {
  HalfSymbol A, B;
  auto operator<=>(const Symbol&) const = default;
  bool operator==(const Symbol&) const = default;
};

inline bool is_half_symbol(const HalfSymbol& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) return false;
    if (i && a[i] >= a[i - 1]) return false;
  }
  return true;
}

inline void require_half_symbol(const HalfSymbol& a) {
  if (!is_half_symbol(a)) throw precondition_error("half-symbol must be strictly decreasing and non-negative");
}

inline void require_symbol(const Symbol& s) {
  require_half_symbol(s.A);
  require_half_symbol(s.B);
}

inline bool is_reduced(const HalfSymbol& a) { return a.empty() || a.back() > 0; }
inline bool is_reduced(const Symbol& s) { return is_reduced(s.A) || is_reduced(s.B); }
inline bool is_degenerate(const Symbol& s) { return s.A == s.B; }
inline Symbol transpose(const Symbol& s) { return {s.B, s.A}; }

inline HalfSymbol make_half(std::vector<int> v) {
  std::sort(v.begin(), v.end(), std::greater<int>());
  require_half_symbol(v);
  return v;
}

inline HalfSymbol sigma(const HalfSymbol& a) {
  require_half_symbol(a);
  HalfSymbol r;
  for (int x : a) r.push_back(x + 1);
  r.push_back(0);
  return r;
}

inline HalfSymbol sigma_inverse(const HalfSymbol& a) {
  require_half_symbol(a);
  if (is_reduced(a)) throw precondition_error("sigma_inverse needs a non-reduced half-symbol");
  HalfSymbol r;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) r.push_back(a[i] - 1);
  return r;
}

inline HalfSymbol bar(const HalfSymbol& a) {
  if (a.empty()) throw precondition_error("bar needs a nonempty half-symbol");
  return HalfSymbol(a.begin() + 1, a.end());
}

inline Symbol sigma(const Symbol& s) { return {sigma(s.A), sigma(s.B)}; }

/// Canonical representative: shift both halves down until one is reduced.
inline Symbol reduce(Symbol s) {
  require_symbol(s);
  while (!is_reduced(s)) s = {sigma_inverse(s.A), sigma_inverse(s.B)};
  return s;
}

inline Partition pi(const HalfSymbol& a) {
  require_half_symbol(a);
  const int n = static_cast<int>(a.size());
  Partition l;
  for (int i = 0; i < n; ++i) {
    int part = a[i] - (n - 1 - i);
    if (part > 0) l.push_back(part);
  }
  return l;
}

inline HalfSymbol delta(const Partition& l) {
  require_partition(l);
  const int n = static_cast<int>(l.size());
  HalfSymbol a(n);
  for (int i = 0; i < n; ++i) a[i] = l[i] + (n - 1 - i);
  return a;
}

namespace detail {

inline long long sum_of(const HalfSymbol& a) {
  long long s = 0;
  for (int x : a) s += x;
  return s;
}

inline bool contains(const HalfSymbol& a, int x) { return std::find(a.begin(), a.end(), x) != a.end(); }

inline HalfSymbol with(HalfSymbol a, int x) {
  a.push_back(x);
  return make_half(std::move(a));
}

inline HalfSymbol without(HalfSymbol a, int x) {
  a.erase(std::find(a.begin(), a.end(), x));
  return a;
}

}  // namespace detail

inline int defect(const Symbol& s) { return static_cast<int>(s.A.size()) - static_cast<int>(s.B.size()); }
inline int m_param(const Symbol& s) { return static_cast<int>(s.A.size() + s.B.size()) - 1; }
inline int epsilon_m(const Symbol& s) { return static_cast<int>(mod_floor(m_param(s), 2)); }

inline int max_entry(const Symbol& s) {
  if (s.A.empty() && s.B.empty()) throw precondition_error("empty symbol has no maximum");
  int m = -1;
  if (!s.A.empty()) m = s.A.front();
  if (!s.B.empty()) m = std::max(m, s.B.front());
  return m;
}

/// Sum of entries minus floor(m^2/4).
inline long long rank_by_entries(const Symbol& s) {
  long long m = m_param(s);
  return detail::sum_of(s.A) + detail::sum_of(s.B) - floor_div(m * m, 4);
}

/// |pi(A)| + |pi(B)| + floor(def^2/4).
inline long long rank_by_partitions(const Symbol& s) {
  long long d = defect(s);
  return size_of(pi(s.A)) + size_of(pi(s.B)) + floor_div(d * d, 4);
}

/// |pi(A)| + |pi(B)| + (def^2 - (1 - eps_m)) / 4.
inline long long rank_by_defect_parity(const Symbol& s) {
  long long d = defect(s);
  long long num = d * d - (1 - epsilon_m(s));
  if (num % 4) throw std::logic_error("defect parity identity violated");
  return size_of(pi(s.A)) + size_of(pi(s.B)) + num / 4;
}

inline long long rank(const Symbol& s) {
  require_symbol(s);
  long long r = rank_by_entries(s);
  if (r != rank_by_partitions(s)) throw std::logic_error("rank forms disagree");
  return r;
}

/// rank - max + floor(m/2). Invariant under simultaneous sigma, so defined
/// for every symbol; the empty symbol is evaluated through sigma.
inline long long level(const Symbol& s) {
  require_symbol(s);
  if (s.A.empty() && s.B.empty()) return level(sigma(s));
  return rank(s) - max_entry(s) + floor_div(m_param(s), 2);
}

/// Merged entries c_0 <= ... <= c_m.
inline std::vector<int> c_sequence(const Symbol& s) {
  std::vector<int> c(s.A.begin(), s.A.end());
  c.insert(c.end(), s.B.begin(), s.B.end());
  std::sort(c.begin(), c.end());
  return c;
}

/// 2 d_i = 2 c_i - i.
inline std::vector<long long> d_sequence_doubled(const Symbol& s) {
  auto c = c_sequence(s);
  std::vector<long long> d(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) d[i] = 2LL * c[i] - static_cast<long long>(i);
  return d;
}

inline std::vector<Rational> d_sequence(const Symbol& s) {
  std::vector<Rational> d;
  for (long long x : d_sequence_doubled(s)) d.emplace_back(x, 2);
  return d;
}

/// An entry r of one half that can be moved down by k.
struct Hook {
  bool in_A = true;
  int r = 0;
  int k = 0;
  auto operator<=>(const Hook&) const = default;
};

inline std::vector<Hook> hooks(const Symbol& s, int k) {
  require_symbol(s);
  if (k < 1) throw precondition_error("hook length must be positive");
  std::vector<Hook> out;
  for (int r : s.A)
    if (r >= k && !detail::contains(s.A, r - k)) out.push_back({true, r, k});
  for (int r : s.B)
    if (r >= k && !detail::contains(s.B, r - k)) out.push_back({false, r, k});
  return out;
}

inline std::vector<Hook> cohooks(const Symbol& s, int k) {
  require_symbol(s);
  if (k < 1) throw precondition_error("cohook length must be positive");
  std::vector<Hook> out;
  for (int r : s.A)
    if (r >= k && !detail::contains(s.B, r - k)) out.push_back({true, r, k});
  for (int r : s.B)
    if (r >= k && !detail::contains(s.A, r - k)) out.push_back({false, r, k});
  return out;
}

inline Symbol remove_hook(const Symbol& s, const Hook& h) {
  auto hs = hooks(s, h.k);
  if (std::find(hs.begin(), hs.end(), h) == hs.end()) throw precondition_error("not a hook of this symbol");
  if (h.in_A) return {s.B, detail::with(detail::without(s.A, h.r), h.r - h.k)};
  return {detail::with(detail::without(s.B, h.r), h.r - h.k), s.A};
}

inline Symbol remove_cohook(const Symbol& s, const Hook& h) {
  auto hs = cohooks(s, h.k);
  if (std::find(hs.begin(), hs.end(), h) == hs.end()) throw precondition_error("not a cohook of this symbol");
  if (h.in_A) return {detail::with(s.B, h.r - h.k), detail::without(s.A, h.r)};
  return {detail::without(s.B, h.r), detail::with(s.A, h.r - h.k)};
}

/// Inverse of remove_hook: the symbol whose hook h removes to t.
inline Symbol add_hook(const Symbol& t, const Hook& h) {
  require_symbol(t);
  const int lo = h.r - h.k;
  if (h.in_A) {
    if (!detail::contains(t.B, lo) || detail::contains(t.B, h.r)) throw precondition_error("hook cannot be added");
    return {detail::with(detail::without(t.B, lo), h.r), t.A};
  }
  if (!detail::contains(t.A, lo) || detail::contains(t.A, h.r)) throw precondition_error("hook cannot be added");
  return {t.B, detail::with(detail::without(t.A, lo), h.r)};
}

/// Inverse of remove_cohook.
inline Symbol add_cohook(const Symbol& t, const Hook& h) {
  require_symbol(t);
  const int lo = h.r - h.k;
  if (h.in_A) {
    if (!detail::contains(t.A, lo) || detail::contains(t.B, h.r)) throw precondition_error("cohook cannot be added");
    return {detail::with(t.B, h.r), detail::without(t.A, lo)};
  }
  if (!detail::contains(t.B, lo) || detail::contains(t.A, h.r)) throw precondition_error("cohook cannot be added");
  return {detail::without(t.B, lo), detail::with(t.A, h.r)};
}

/// Defect residue class: modulus 1 (any), 2 (parity) or 4.
struct DefectClass {
  int modulus = 1;
  int residue = 0;

  static DefectClass any() { return {1, 0}; }
  static DefectClass even() { return {2, 0}; }
  static DefectClass odd() { return {2, 1}; }
  static DefectClass mod4(int r) { return {4, static_cast<int>(mod_floor(r, 4))}; }

  bool contains(int d) const { return mod_floor(d, modulus) == residue; }

  static DefectClass parse(const std::string& s) {
    if (s == "any") return any();
    if (s == "even") return even();
    if (s == "odd") return odd();
    if (s.size() == 1 && s[0] >= '0' && s[0] <= '3') return mod4(s[0] - '0');
    throw precondition_error("defect class must be any, even, odd or a residue 0..3 mod 4");
  }
};

struct EnumerateOptions {
  bool reduced_only = true;
  std::optional<int> level_cap = std::nullopt;
  int full_bound = 14;
  int capped_bound = 40;
  int capped_max_level = 3;
};

namespace detail {

inline std::vector<std::pair<Partition, Partition>> bipartitions(int n) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int k = 0; k <= n; ++k)
    for (auto& l : partitions(k))
      for (auto& mu : partitions(n - k)) out.emplace_back(l, mu);
  return out;
}

inline HalfSymbol shift(HalfSymbol a, int times) {
  for (int i = 0; i < times; ++i) a = sigma(a);
  return a;
}

/// Reduced symbols of rank n and any defect in cls, via (pi(A), pi(B), defect).
inline std::vector<Symbol> all_reduced(int n, DefectClass cls) {
  std::vector<Symbol> out;
  for (int d = -2 * n - 1; d <= 2 * n + 1; ++d) {
    const int used = static_cast<int>(floor_div(static_cast<long long>(d) * d, 4));
    if (used > n || !cls.contains(d)) continue;
    for (auto& [l, mu] : bipartitions(n - used)) {
      const int gap = d - static_cast<int>(l.size()) + static_cast<int>(mu.size());
      HalfSymbol A = delta(l), B = delta(mu);
      if (gap >= 0)
        A = shift(A, gap);
      else
        B = shift(B, -gap);
      out.push_back({std::move(A), std::move(B)});
    }
  }
  return out;
}

}  // namespace detail

/// Reduced symbols of rank n with defect in cls, sorted. With a level cap the
/// symbols are assembled as (rank-L core) plus one large entry instead of being
/// filtered. With reduced_only false, the sigma-shifts whose entries stay at
/// most n are appended.
inline std::vector<Symbol> enumerate_symbols(int n, DefectClass cls, const EnumerateOptions& opt = {}) {
  if (n < 0) throw precondition_error("rank must be non-negative");
  std::set<Symbol> found;
  if (opt.level_cap && n == 0) {
    for (auto& s : detail::all_reduced(0, cls))
      if (level(s) <= *opt.level_cap) found.insert(s);
  } else if (opt.level_cap) {
    const int cap = *opt.level_cap;
    if (cap < 0) throw precondition_error("level cap must be non-negative");
    const bool small = cap <= opt.capped_max_level;
    if (n > (small ? opt.capped_bound : opt.full_bound)) throw cap_exceeded("rank exceeds the enumeration bound");
    for (int L = 0; L <= std::min(cap, n); ++L) {
      for (const auto& core : detail::all_reduced(L, DefectClass::any())) {
        const int m = static_cast<int>(core.A.size() + core.B.size());
        const long long c = static_cast<long long>(n) + floor_div(m, 2) - L;
        const int maxA = core.A.empty() ? -1 : core.A.front();
        const int maxB = core.B.empty() ? -1 : core.B.front();
        if (c > maxA && c >= maxB) {
          Symbol s{detail::with(core.A, static_cast<int>(c)), core.B};
          if (cls.contains(defect(s)) && is_reduced(s)) found.insert(s);
        }
        if (c > maxB && c >= maxA) {
          Symbol s{core.A, detail::with(core.B, static_cast<int>(c))};
          if (cls.contains(defect(s)) && is_reduced(s)) found.insert(s);
        }
      }
    }
  } else {
    if (n > opt.full_bound) throw cap_exceeded("rank exceeds the enumeration bound");
    for (auto& s : detail::all_reduced(n, cls)) found.insert(std::move(s));
  }
  std::vector<Symbol> out(found.begin(), found.end());
  if (!opt.reduced_only) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      Symbol s = sigma(out[i]);
      while (max_entry(s) <= n) {
        out.push_back(s);
        s = sigma(s);
      }
    }
  }
  return out;
}

namespace detail {

inline Rational binom2(long long x) { return x >= 2 ? Rational(x * (x - 1) / 2) : Rational(0); }

inline Rational cubic_term(long long m) { return Rational(2 * m * m * m - 3 * m * m - 2 * m, 24); }

inline void require_rank(const Symbol& s, long long n) {
  if (rank(s) != n) throw precondition_error("symbol rank does not match n");
}

}  // namespace detail

/// Exponent of q in the dominant term of the unipotent degree, with the
/// binomial sum evaluated term by term.
inline Rational log_degree_estimate(const Symbol& s, long long n) {
  detail::require_rank(s, n);
  const long long m = m_param(s);
  const long long eps = epsilon_m(s);
  Rational v = Rational(n * n + (1 - eps) * n);
  for (int a : s.A) v -= static_cast<long long>(a) * (a + 1);
  for (int b : s.B) v -= static_cast<long long>(b) * (b + 1);
  for (long long i = 0; m - 1 - 2 * i >= 0; ++i) v -= detail::binom2(m - 1 - 2 * i);
  for (std::size_t i = 0; i < s.A.size(); ++i) v += static_cast<long long>(s.A[i]) * static_cast<long long>(s.A.size() - 1 - i);
  for (std::size_t i = 0; i < s.B.size(); ++i) v += static_cast<long long>(s.B[i]) * static_cast<long long>(s.B.size() - 1 - i);
  for (int a : s.A)
    for (int b : s.B) v += std::max(a, b);
  return v;
}

/// Same exponent written through the merged sequence c_i.
inline Rational c_form_estimate(const Symbol& s, long long n) {
  detail::require_rank(s, n);
  const long long m = m_param(s);
  const long long eps = epsilon_m(s);
  Rational v = Rational(n * n + (1 - eps) * n);
  auto c = c_sequence(s);
  for (std::size_t i = 0; i < c.size(); ++i) {
    long long ci = c[i];
    v -= ci * ci + ci - static_cast<long long>(i) * ci;
  }
  return v - detail::cubic_term(m);
}

/// Sum_{a1>a2 in A} a1 + Sum_{b1>b2 in B} b1 + Sum_{a,b} max(a,b).
inline long long pair_max_sum(const Symbol& s) {
  long long v = 0;
  for (std::size_t i = 0; i < s.A.size(); ++i) v += static_cast<long long>(s.A[i]) * static_cast<long long>(s.A.size() - 1 - i);
  for (std::size_t i = 0; i < s.B.size(); ++i) v += static_cast<long long>(s.B[i]) * static_cast<long long>(s.B.size() - 1 - i);
  for (int a : s.A)
    for (int b : s.B) v += std::max(a, b);
  return v;
}

/// Sum_i i c_i.
inline long long weighted_c_sum(const Symbol& s) {
  auto c = c_sequence(s);
  long long v = 0;
  for (std::size_t i = 0; i < c.size(); ++i) v += static_cast<long long>(i) * c[i];
  return v;
}

/// nint(log_degree_estimate / 2n).
inline BigInt level_from_degree(const Symbol& s, long long n) {
  if (n < 1) throw precondition_error("rank must be positive");
  return nint(log_degree_estimate(s, n) / Rational(2 * n));
}

/// max(A) != max(B); an empty half has no maximum.
inline bool no_tie(const Symbol& s) {
  if (s.A.empty() || s.B.empty()) return !(s.A.empty() && s.B.empty());
  return s.A.front() != s.B.front();
}

inline bool no_tie_hypothesis(const Symbol& s) {
  const long long L = level(s);
  return rank(s) > 4 * L * L + 2 * L;
}

/// Successive lines of the degree-exponent inequality chain.
struct InequalityLedger {
  Rational exponent;         // n^2 - sum(c_i^2 + c_i - i c_i) - (2m^3 - 3m^2 - 2m)/24
  Rational via_d;            // n^2 - sum c - sum d^2 - cubic + m(m+1)(2m+1)/24
  Rational via_d_closed;     // n^2 - sum c - sum d^2 + (2m^2 + m)/8
  Rational cubed_with_sum_c; // -sum c + 2 d_m (d_0 + ... + d_{m-1}) + (4m^2 - m)/8
  Rational cubed_with_n;     // -n + 2 d_m (d_0 + ... + d_{m-1}) + (4m^2 - m)/8
  Rational m20_with_sum_c;   // -sum c + Sigma + (7m^2 + 2m)/16
  Rational m20_with_n;       // -n + Sigma + (7m^2 + 2m)/16
  Rational sum_c;

  bool identities_hold() const { return exponent == via_d && via_d == via_d_closed; }
  bool cubed_with_sum_c_holds() const { return exponent >= cubed_with_sum_c; }
  bool cubed_with_n_holds() const { return exponent >= cubed_with_n; }
  bool m20_with_sum_c_holds() const { return exponent >= m20_with_sum_c; }
  bool m20_with_n_holds() const { return exponent >= m20_with_n; }
};

inline InequalityLedger inequality_ledger(const Symbol& s) {
  const long long n = rank(s);
  const long long m = m_param(s);
  auto c = c_sequence(s);
  auto d = d_sequence(s);
  InequalityLedger L;
  Rational sum_c = 0, sum_d = 0, sum_d2 = 0, e = Rational(n * n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    long long ci = c[i];
    e -= ci * ci + ci - static_cast<long long>(i) * ci;
    sum_c += ci;
    sum_d += d[i];
    sum_d2 += d[i] * d[i];
  }
  L.sum_c = sum_c;
  L.exponent = e - detail::cubic_term(m);
  L.via_d = Rational(n * n) - sum_c - sum_d2 - detail::cubic_term(m) + Rational(m * (m + 1) * (2 * m + 1), 24);
  L.via_d_closed = Rational(n * n) - sum_c - sum_d2 + Rational(2 * m * m + m, 8);
  Rational head = 0;
  for (std::size_t i = 0; i + 1 < d.size(); ++i) head += d[i];
  Rational dm = d.empty() ? Rational(0) : d.back();
  Rational Sig = sum_d * sum_d - sum_d2;
  L.cubed_with_sum_c = -sum_c + 2 * dm * head + Rational(4 * m * m - m, 8);
  L.cubed_with_n = Rational(-n) + 2 * dm * head + Rational(4 * m * m - m, 8);
  L.m20_with_sum_c = -sum_c + Sig + Rational(7 * m * m + 2 * m, 16);
  L.m20_with_n = Rational(-n) + Sig + Rational(7 * m * m + 2 * m, 16);
  return L;
}

enum class TnFamily { BC, Dplus, Dminus };
enum class TnElement { t_n_hook, t_n_cohook, t_nminus1 };

inline DefectClass defect_class_of(TnFamily f) {
  switch (f) {
    case TnFamily::BC: return DefectClass::mod4(1);
    case TnFamily::Dplus: return DefectClass::mod4(0);
    case TnFamily::Dminus: return DefectClass::mod4(2);
  }
  return DefectClass::any();
}

struct TnEntry {
  Symbol symbol;
  long long level = 0;
  bool via_hook = true;  // false: via cohook
  bool operator==(const TnEntry&) const = default;
};

/// Reduced rank-n symbols of the family possessing the required n-hook,
/// n-cohook, or (n-1)-hook/cohook followed by a 1-hook or 1-cohook.
inline std::vector<TnEntry> tn_classification(int n, TnFamily family, TnElement element, int bound = 14) {
  if (family == TnFamily::BC ? n < 4 : n < 5) throw precondition_error("rank below the validity threshold");
  if (n > bound) throw cap_exceeded("rank exceeds the enumeration bound");
  std::vector<TnEntry> out;
  for (const auto& s : enumerate_symbols(n, defect_class_of(family), {.full_bound = bound})) {
    const long long lev = level(s);
    switch (element) {
      case TnElement::t_n_hook:
        if (!hooks(s, n).empty()) out.push_back({s, lev, true});
        break;
      case TnElement::t_n_cohook:
        if (!cohooks(s, n).empty()) out.push_back({s, lev, false});
        break;
      case TnElement::t_nminus1: {
        auto second_step = [](const Symbol& t) { return !hooks(t, 1).empty() || !cohooks(t, 1).empty(); };
        bool h = false, c = false;
        for (const auto& x : hooks(s, n - 1)) h = h || second_step(remove_hook(s, x));
        for (const auto& x : cohooks(s, n - 1)) c = c || second_step(remove_cohook(s, x));
        if (h) out.push_back({s, lev, true});
        if (c) out.push_back({s, lev, false});
        break;
      }
    }
  }
  return out;
}

/// Exact value stored as twice an integer.
struct HalfInteger {
  long long twice = 0;
  Rational value() const { return Rational(twice, 2); }
  bool is_integer() const { return twice % 2 == 0; }
  std::string str() const { return twice % 2 ? std::to_string(twice) + "/2" : std::to_string(twice / 2); }
  auto operator<=>(const HalfInteger&) const = default;
};

/// Type of the dual group G*.
enum class DualType { B, C, D };

struct KappaComponent {
  Symbol symbol;
  int dim = 0;
  bool operator==(const KappaComponent&) const = default;
};

/// Eigenspace data of s together with the unipotent labels on V#_{+1}, V#_{-1}.
struct SeriesDescriptor {
  DualType type = DualType::C;
  bool q_odd = true;
  int dim_vsharp = 0;
  KappaComponent plus, minus;
  int dim_v0 = 0;
  std::vector<int> a;  // GL/GU factor ranks on V#_0
  long long psi0 = 0;  // opaque label of the unipotent data on V#_0
  int v0_sign = 1;     // type of V#_0 as an orthogonal space

  bool operator==(const SeriesDescriptor&) const = default;

  const KappaComponent& part(int kappa) const { return kappa == 1 ? plus : minus; }

  int delta(int kappa) const { return q_odd && part(kappa).dim % 2 ? 1 : 0; }

  /// Rank n of G.
  int rank() const { return dim_vsharp / 2; }

  /// Factor ranks b (type B), c (type C), d (type D) of the kappa parts.
  struct FactorRanks {
    std::vector<int> b, c, d;
  };

  FactorRanks factor_ranks() const {
    FactorRanks f;
    for (int kappa : {1, -1}) {
      const int r = (part(kappa).dim - delta(kappa)) / 2;
      if (type == DualType::C)
        f.c.push_back(r);
      else if (type == DualType::B && kappa == 1)
        f.b.push_back(r);
      else
        f.d.push_back(r);
    }
    return f;
  }
};

inline void validate(const SeriesDescriptor& d) {
  if (d.plus.dim < 0 || d.minus.dim < 0 || d.dim_v0 < 0) throw precondition_error("negative dimension");
  if (d.plus.dim + d.minus.dim + d.dim_v0 != d.dim_vsharp) throw precondition_error("dimensions do not sum to dim V#");
  int sa = 0;
  for (int x : d.a) {
    if (x < 1) throw precondition_error("GL factor ranks must be positive");
    sa += x;
  }
  if (2 * sa != d.dim_v0) throw precondition_error("GL factors must fill V#_0");
  if (!d.q_odd && d.minus.dim) throw precondition_error("-1 = 1 in characteristic 2");
  if (!d.q_odd && d.type == DualType::B) throw precondition_error("type B dual needs odd q");
  if ((d.type == DualType::B) != (d.dim_vsharp % 2 == 1)) throw precondition_error("dim V# parity does not match the type");
  if (d.type == DualType::B ? d.plus.dim % 2 == 0 || d.minus.dim % 2 : d.plus.dim % 2 || d.minus.dim % 2)
    throw precondition_error("eigenspace dimension parity does not match the type");
  for (int kappa : {1, -1}) {
    const auto& p = d.part(kappa);
    require_symbol(p.symbol);
    if (2 * rank(p.symbol) + d.delta(kappa) != p.dim) throw precondition_error("symbol rank does not match eigenspace dimension");
    const bool typeD = d.type == DualType::D || (d.type == DualType::B && kappa == -1);
    if (p.dim && (defect(p.symbol) % 2 == 0) != typeD) throw precondition_error("symbol defect parity does not match the factor type");
  }
  auto f = d.factor_ranks();
  int total = sa;
  for (auto* v : {&f.b, &f.c, &f.d})
    for (int x : *v) total += x;
  if (total != d.rank()) throw std::logic_error("rank bookkeeping violated");
}

/// max(A,B) - floor(m/2); sigma-invariant, 0 on the empty symbol.
inline long long top_offset(const Symbol& s) {
  if (s.A.empty() && s.B.empty()) return 0;
  return max_entry(s) - floor_div(m_param(s), 2);
}

/// Twice the kappa term max(A,B) - floor(m/2) + delta/2.
inline long long kappa_term_doubled(const SeriesDescriptor& d, int kappa) {
  return 2 * top_offset(d.part(kappa).symbol) + d.delta(kappa);
}

inline HalfInteger level_general(const SeriesDescriptor& d) {
  validate(d);
  return {d.dim_vsharp - std::max(kappa_term_doubled(d, 1), kappa_term_doubled(d, -1))};
}

/// kappa achieving the maximum in the level, or 0 on a tie.
inline int dominant_kappa(const SeriesDescriptor& d) {
  const long long p = kappa_term_doubled(d, 1), m = kappa_term_doubled(d, -1);
  return p > m ? 1 : (m > p ? -1 : 0);
}

/// Exponent of q in |G|_{p'} / |C_{G*}(s)|_{p'}, from the exact order polynomials.
inline long long centralizer_quotient_degree(const SeriesDescriptor& d) {
  validate(d);
  const int n = d.rank();
  long long g = d.type == DualType::D ? prime_to_p_degree(Family::SOplus, 2 * n) : prime_to_p_degree(Family::Sp, 2 * n);
  long long c = 0;
  for (int x : d.a) c += prime_to_p_degree(Family::GL, x);
  auto f = d.factor_ranks();
  for (int x : f.b)
    if (x) c += prime_to_p_degree(Family::SOodd, 2 * x + 1);
  for (int x : f.c)
    if (x) c += prime_to_p_degree(Family::Sp, 2 * x);
  for (int x : f.d)
    if (x) c += prime_to_p_degree(Family::SOplus, 2 * x);
  return g - c;
}

/// Dominant exponent of psi(1): sum of the unipotent estimates on each kappa part.
inline Rational psi_log_degree(const SeriesDescriptor& d) {
  Rational v = 0;
  for (int kappa : {1, -1}) {
    const auto& s = d.part(kappa).symbol;
    v += log_degree_estimate(s, rank(s));
  }
  return v;
}

/// psi exponent plus the exponent of |G|_{p'} / |C_{G*}(s)|_{p'}.
inline Rational series_log_degree(const SeriesDescriptor& d, const Rational& psi_exponent) {
  return psi_exponent + centralizer_quotient_degree(d);
}

inline std::string to_string(const HalfSymbol& a, bool braces) {
  std::string s = braces ? "{" : "";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + (braces ? "}" : "");
}

inline std::string to_string(const Symbol& s) { return "(" + to_string(s.A, true) + "," + to_string(s.B, true) + ")"; }

inline std::ostream& operator<<(std::ostream& os, const Symbol& s) { return os << to_string(s); }

}  // namespace symlev
