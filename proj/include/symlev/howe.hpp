// Interleaving order on partitions, linked symbols, the main-piece symbol S'
// and the symbol-level Howe correspondence for (O, Sp), (SO, Sp), (Sp, O).
#pragma once

#include "symbols.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace symlev {

/// Raised when the dominant symbol of a descriptor is degenerate (A = B).
struct degenerate_symbol_error : precondition_error {
  using precondition_error::precondition_error;
};

/// mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ... (zero padded).
inline bool preceq(const Partition& lambda, const Partition& mu) {
  auto at = [](const Partition& p, std::size_t i) { return i < p.size() ? p[i] : 0; };
  const std::size_t len = std::max(lambda.size(), mu.size()) + 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (at(mu, i) < at(lambda, i)) return false;
    if (at(lambda, i) < at(mu, i + 1)) return false;
  }
  return true;
}

enum class LinkKind { split, nonsplit };

inline const char* to_string(LinkKind k) { return k == LinkKind::split ? "split" : "nonsplit"; }

/// Data behind a link (A,B) -> (C,D).
struct LinkWitness {
  LinkKind kind = LinkKind::split;
  Partition pi_A, pi_B, pi_C, pi_D;
  int size_lhs = 0;  // |A| - |B|
  int size_rhs = 0;  // +-1 + |D| - |C|
};

/// Whether the even-defect symbol is linked to the odd-defect one.
inline std::optional<LinkWitness> linked(const Symbol& even, const Symbol& odd) {
  require_symbol(even);
  require_symbol(odd);
  if (defect(even) % 2 != 0) throw precondition_error("first symbol must have even defect");
  if (defect(odd) % 2 == 0) throw precondition_error("second symbol must have odd defect");
  LinkWitness w;
  w.pi_A = pi(even.A);
  w.pi_B = pi(even.B);
  w.pi_C = pi(odd.A);
  w.pi_D = pi(odd.B);
  w.size_lhs = defect(even);
  const int dc = -defect(odd);
  const bool split = preceq(w.pi_B, w.pi_C) && preceq(w.pi_D, w.pi_A) && w.size_lhs == 1 + dc;
  const bool nonsplit = preceq(w.pi_A, w.pi_D) && preceq(w.pi_C, w.pi_B) && w.size_lhs == -1 + dc;
  if (split && nonsplit) throw std::logic_error("split and non-split conditions hold together");
  if (!split && !nonsplit) return std::nullopt;
  w.kind = split ? LinkKind::split : LinkKind::nonsplit;
  w.size_rhs = split ? 1 + dc : -1 + dc;
  return w;
}

/// Link in either order: the even-defect symbol goes first.
inline std::optional<LinkWitness> linked_any(const Symbol& s, const Symbol& t) {
  return defect(s) % 2 == 0 ? linked(s, t) : linked(t, s);
}

/// rank(S) > 4 lev(S)^2 + 2 lev(S).
inline bool main_piece_hypothesis(const Symbol& s) {
  const long long l = level(s);
  return rank(s) > 4 * l * l + 2 * l;
}

inline bool max_in_A(const Symbol& s) {
  if (!no_tie(s)) throw precondition_error("max(A,B) lies in both halves");
  return !s.A.empty() && (s.B.empty() || s.A.front() > s.B.front());
}

namespace detail {

inline void require_piece_input(const Symbol& s, bool require_hypothesis) {
  require_symbol(s);
  if (s.A.empty() && s.B.empty()) throw precondition_error("empty symbol has no maximum");
  if (require_hypothesis && !main_piece_hypothesis(s)) throw precondition_error("rank(S) > 4 lev(S)^2 + 2 lev(S) fails");
  if (!no_tie(s)) throw precondition_error("max(A,B) lies in both halves");
}

}  // namespace detail

struct MainPiece {
  bool transposed = false;
  Symbol oriented;  // S, transposed when needed
  Symbol s_prime;
  LinkKind kind = LinkKind::split;
};

/// S' = (B, bar A) when 4 | def(S), else (bar B, A), after orienting S so that
/// the maximum lies in A, respectively B.
inline MainPiece main_piece(const Symbol& S, bool require_hypothesis = true) {
  require_symbol(S);
  if (defect(S) % 2 != 0) throw precondition_error("main piece needs even defect");
  if (is_degenerate(S)) throw degenerate_symbol_error("degenerate symbol");
  detail::require_piece_input(S, require_hypothesis);
  const Symbol s = reduce(S);
  const bool div4 = mod_floor(defect(s), 4) == 0;
  MainPiece r;
  r.transposed = max_in_A(s) != div4;
  r.oriented = r.transposed ? transpose(s) : s;
  const auto& [A, B] = r.oriented;
  r.s_prime = reduce(div4 ? Symbol{B, bar(A)} : Symbol{bar(B), A});
  r.kind = div4 ? LinkKind::split : LinkKind::nonsplit;
  if (mod_floor(defect(r.s_prime), 4) != 1) throw std::logic_error("def(S') is not 1 mod 4");
  if (rank(r.s_prime) != level(s)) throw std::logic_error("rank(S') differs from lev(S)");
  auto w = linked(r.oriented, r.s_prime);
  if (!w || w->kind != r.kind) throw std::logic_error("S is not linked to S'");
  return r;
}

/// S' = (B, bar A) if max(S) is in A, else (bar B, A); defect of S is 1 mod 4.
inline Symbol main_piece_odd(const Symbol& S, bool require_hypothesis = true) {
  require_symbol(S);
  if (mod_floor(defect(S), 4) != 1) throw precondition_error("main piece needs defect 1 mod 4");
  detail::require_piece_input(S, require_hypothesis);
  const Symbol s = reduce(S);
  const auto& [A, B] = s;
  Symbol sp = reduce(max_in_A(s) ? Symbol{B, bar(A)} : Symbol{bar(B), A});
  if (rank(sp) != level(s)) throw std::logic_error("rank(S') differs from lev(S)");
  if (!linked(sp, s)) throw std::logic_error("S' is not linked to S");
  return sp;
}

/// Inverse construction: the symbol S of the given rank, with max(S) = c placed
/// in A or B, whose main piece is S'. c = rank + floor(m/2) - rank(S').
inline Symbol lift_main_piece(const Symbol& s_prime, long long source_rank, bool in_A) {
  require_symbol(s_prime);
  const long long m = static_cast<long long>(s_prime.A.size() + s_prime.B.size());
  const long long c = source_rank + floor_div(m, 2) - rank(s_prime);
  const bool empty = s_prime.A.empty() && s_prime.B.empty();
  if (!empty && c <= max_entry(s_prime)) throw precondition_error("source rank too small for a new maximum");
  if (c < 0) throw precondition_error("source rank too small");
  const int ci = static_cast<int>(c);
  const auto& [C, D] = s_prime;
  return reduce(in_A ? Symbol{detail::with(D, ci), C} : Symbol{D, detail::with(C, ci)});
}

/// Symbols T from the pool linked to S' (in the order fixed by the parities).
inline std::vector<Symbol> linked_partners(const Symbol& s_prime, const std::vector<Symbol>& pool) {
  const bool prime_odd = defect(s_prime) % 2 != 0;
  std::vector<Symbol> out;
  for (const auto& t : pool) {
    if ((defect(t) % 2 == 0) != prime_odd) continue;
    if (prime_odd ? linked(t, s_prime).has_value() : linked(s_prime, t).has_value()) out.push_back(t);
  }
  return out;
}

/// All reduced symbols of rank n in the defect class linked to S'.
inline std::vector<Symbol> linked_partners(const Symbol& s_prime, int n, DefectClass cls, int bound = 14) {
  EnumerateOptions opt;
  opt.full_bound = bound;
  return linked_partners(s_prime, enumerate_symbols(n, cls, opt));
}

/// Properties (i)-(iii) for one source symbol.
struct MainPieceCheck {
  Symbol source, oriented, s_prime;
  bool transposed = false;
  LinkKind kind = LinkKind::split;
  bool defect_ok = false;  // (i), or even defect of S' for odd sources
  bool rank_ok = false;    // (ii)
  bool linked_ok = false;
  std::vector<Symbol> partners;       // equal rank and defect class, linked to S'
  std::vector<Symbol> high_partners;  // those of level >= lev(S)
  bool unique() const { return high_partners.size() == 1 && high_partners.front() == oriented; }
  bool ok() const { return defect_ok && rank_ok && linked_ok && unique(); }
};

/// Checks S against the pool of all symbols of its rank (any defect).
inline MainPieceCheck check_main_piece(const Symbol& S, const std::vector<Symbol>& pool) {
  MainPieceCheck c;
  c.source = reduce(S);
  if (defect(S) % 2 == 0) {
    auto mp = main_piece(S);
    c.oriented = mp.oriented;
    c.s_prime = mp.s_prime;
    c.transposed = mp.transposed;
    c.kind = mp.kind;
    c.defect_ok = mod_floor(defect(c.s_prime), 4) == 1;
    auto w = linked(c.oriented, c.s_prime);
    c.linked_ok = w && w->kind == c.kind;
  } else {
    c.oriented = c.source;
    c.s_prime = main_piece_odd(S);
    c.defect_ok = defect(c.s_prime) % 2 == 0;
    auto w = linked(c.s_prime, c.oriented);
    c.linked_ok = w.has_value();
    if (w) c.kind = w->kind;
  }
  c.rank_ok = rank(c.s_prime) == level(c.oriented);
  const long long lev = level(c.oriented);
  const long long residue = mod_floor(defect(c.oriented), 4);
  std::vector<Symbol> same;
  for (const auto& t : pool)
    if (rank(t) == rank(c.oriented) && mod_floor(defect(t), 4) == residue) same.push_back(t);
  c.partners = linked_partners(c.s_prime, same);
  for (const auto& t : c.partners)
    if (level(t) >= lev) c.high_partners.push_back(t);
  return c;
}

inline MainPieceCheck check_main_piece(const Symbol& S, int bound = 14) {
  EnumerateOptions opt;
  opt.full_bound = bound;
  return check_main_piece(S, enumerate_symbols(static_cast<int>(rank(S)), DefectClass::any(), opt));
}

/// Exhaustive run over every reduced symbol of rank <= max_rank with even
/// defect or defect 1 mod 4 satisfying the rank hypothesis.
struct MainPieceSweep {
  std::vector<MainPieceCheck> checks;
  std::size_t even_sources = 0, odd_sources = 0, failures = 0;
  bool ok() const { return failures == 0; }
};

inline MainPieceSweep sweep_main_piece(int max_rank, std::optional<int> max_level = std::nullopt, int bound = 14) {
  MainPieceSweep sw;
  EnumerateOptions full;
  full.full_bound = bound;
  for (int n = 1; n <= max_rank; ++n) {
    const auto pool = enumerate_symbols(n, DefectClass::any(), full);
    for (const auto& s : pool) {
      const bool even = defect(s) % 2 == 0;
      if (!even && mod_floor(defect(s), 4) != 1) continue;
      if (!main_piece_hypothesis(s) || (max_level && level(s) > *max_level)) continue;
      auto c = check_main_piece(s, pool);
      (even ? sw.even_sources : sw.odd_sources) += 1;
      if (!c.ok()) ++sw.failures;
      sw.checks.push_back(std::move(c));
    }
  }
  return sw;
}

// ---------------------------------------------------------------------------
// Howe correspondence at symbol level.

/// Source group: O_{2n} (dual data of type D), SO_{2n+1} (type C), Sp_{2n} (type B).
enum class HoweSide { O_even, SO_odd, Sp };
enum class HoweRule { even, odd };
enum class TargetGroup { Sp, O_even, SO_odd };

inline const char* to_string(HoweSide s) {
  switch (s) {
    case HoweSide::O_even: return "O-even";
    case HoweSide::SO_odd: return "SO-odd";
    default: return "Sp";
  }
}

inline const char* to_string(TargetGroup g) {
  switch (g) {
    case TargetGroup::Sp: return "Sp";
    case TargetGroup::O_even: return "O-even";
    default: return "SO-odd";
  }
}

inline HoweSide parse_howe_side(const std::string& s) {
  if (s == "O-even" || s == "o-even") return HoweSide::O_even;
  if (s == "SO-odd" || s == "so-odd") return HoweSide::SO_odd;
  if (s == "Sp" || s == "sp") return HoweSide::Sp;
  throw precondition_error("side must be O-even, SO-odd or Sp");
}

inline DualType dual_type_of(HoweSide s) {
  switch (s) {
    case HoweSide::O_even: return DualType::D;
    case HoweSide::SO_odd: return DualType::C;
    default: return DualType::B;
  }
}

/// +1 if 4 | def, else -1: the type of the orthogonal space an even-defect symbol lives on.
inline int orthogonal_sign(const Symbol& s) { return mod_floor(defect(s), 4) == 0 ? 1 : -1; }

/// Type of O(V#) for dual data of type D.
inline int descriptor_sign(const SeriesDescriptor& d) {
  return orthogonal_sign(d.plus.symbol) * orthogonal_sign(d.minus.symbol) * d.v0_sign;
}

/// n > 4 n'^2 + 3 n' with n' possibly half-integral.
inline bool howe_hypothesis(long long n, HalfInteger n_prime) {
  const long long t = n_prime.twice;
  return 2 * t * t + 3 * t < 2 * n;
}

struct HoweOptions {
  bool require_hypothesis = true;
};

struct HoweAssignment {
  HoweSide side = HoweSide::O_even;
  SeriesDescriptor source;
  SeriesDescriptor normalized;  // after the linear twists
  HalfInteger level;            // n'
  int dominant = 1;             // kappa carrying the level in the source
  bool sigma_swap = false;      // tensored with the spinor-norm character
  bool sgn_transpose = false;   // tensored with sgn
  bool orientation_transposed = false;  // Sp case (b): S read transposed
  char sp_case = 0;                     // 'a' or 'b' on the Sp side
  Symbol main_symbol;                   // S, as used
  Symbol s_prime;
  LinkKind link = LinkKind::split;
  bool max_in_A = true;
  HoweRule rule = HoweRule::even;
  TargetGroup target_group = TargetGroup::Sp;
  int target_dim = 0;       // 2n'
  int target_sign = 0;      // type of the target orthogonal group in Sp case (a)
  bool v0_negated = false;  // s' acts as -s_0 on V'_0
  SeriesDescriptor target;  // dual data of chi'
};

/// Builds chi' from chi through S -> S' on the dominant eigenspace.
inline HoweAssignment howe_map(const SeriesDescriptor& desc, HoweSide side, const HoweOptions& opt = {}) {
  validate(desc);
  if (!desc.q_odd) throw precondition_error("odd q only");
  if (desc.type != dual_type_of(side)) throw precondition_error("descriptor type does not match the side");
  HoweAssignment h;
  h.side = side;
  h.source = desc;
  h.level = level_general(desc);
  const int n = desc.rank();
  if (opt.require_hypothesis && !howe_hypothesis(n, h.level)) throw precondition_error("n > 4n'^2 + 3n' fails");
  const int kappa = dominant_kappa(desc);
  if (kappa == 0) {
    if (opt.require_hypothesis) throw std::logic_error("dominant kappa not unique under the hypothesis");
    throw precondition_error("the level maximum is attained for both kappa");
  }
  h.dominant = kappa;
  {
    const Symbol& dom = desc.part(kappa).symbol;
    if (is_degenerate(dom) && rank(dom) > 0) throw degenerate_symbol_error("dominant symbol is degenerate");
  }
  for (int k : {1, -1})
    if (defect(desc.part(k).symbol) % 2 && mod_floor(defect(desc.part(k).symbol), 4) != 1)
      throw precondition_error("odd-defect symbols must have defect 1 mod 4");

  SeriesDescriptor w = desc;
  for (int k : {1, -1}) {
    auto& p = k == 1 ? w.plus : w.minus;
    p.symbol = reduce(p.symbol);
  }
  SeriesDescriptor& T = h.target;
  T.q_odd = true;
  T.dim_v0 = desc.dim_v0;
  T.a = desc.a;
  T.psi0 = desc.psi0;
  T.v0_sign = desc.v0_sign;
  const bool hyp = opt.require_hypothesis;

  switch (side) {
    case HoweSide::O_even: {
      if (kappa == -1) {
        std::swap(w.plus, w.minus);
        h.sigma_swap = true;
      }
      auto mp = main_piece(w.plus.symbol, hyp);
      if (mp.transposed) {
        h.sgn_transpose = true;
        w.plus.symbol = transpose(w.plus.symbol);
        w.minus.symbol = transpose(w.minus.symbol);
      }
      h.main_symbol = mp.oriented;
      h.s_prime = mp.s_prime;
      h.link = mp.kind;
      h.rule = HoweRule::even;
      h.target_group = TargetGroup::Sp;
      T.type = DualType::B;
      T.dim_vsharp = static_cast<int>(h.level.twice) + 1;
      T.plus = {h.s_prime, 2 * static_cast<int>(rank(h.s_prime)) + 1};
      T.minus = w.minus;
      break;
    }
    case HoweSide::SO_odd: {
      if (kappa == -1) {
        std::swap(w.plus, w.minus);
        h.sigma_swap = true;
      }
      h.main_symbol = w.plus.symbol;
      h.s_prime = main_piece_odd(h.main_symbol, hyp);
      h.link = linked(h.s_prime, h.main_symbol)->kind;
      h.rule = HoweRule::odd;
      h.target_group = TargetGroup::Sp;
      h.v0_negated = true;
      T.type = DualType::B;
      T.dim_vsharp = static_cast<int>(h.level.twice) + 1;
      T.plus = {w.minus.symbol, w.minus.dim + 1};
      T.minus = {h.s_prime, 2 * static_cast<int>(rank(h.s_prime))};
      break;
    }
    case HoweSide::Sp: {
      if (kappa == 1) {
        h.sp_case = 'a';
        h.main_symbol = w.plus.symbol;
        h.s_prime = main_piece_odd(h.main_symbol, hyp);
        h.link = linked(h.s_prime, h.main_symbol)->kind;
        h.rule = HoweRule::even;
        h.target_group = TargetGroup::O_even;
        T.type = DualType::D;
        T.dim_vsharp = static_cast<int>(h.level.twice);
        T.plus = {h.s_prime, 2 * static_cast<int>(rank(h.s_prime))};
        T.minus = w.minus;
        h.target_sign = (max_in_A(h.main_symbol) ? 1 : -1) * orthogonal_sign(w.minus.symbol) * desc.v0_sign;
      } else {
        h.sp_case = 'b';
        auto mp = main_piece(w.minus.symbol, hyp);
        h.orientation_transposed = mp.transposed;
        h.main_symbol = mp.oriented;
        h.s_prime = mp.s_prime;
        h.link = mp.kind;
        h.rule = HoweRule::odd;
        h.target_group = TargetGroup::SO_odd;
        h.v0_negated = true;
        T.type = DualType::C;
        T.dim_vsharp = static_cast<int>(h.level.twice) - 1;
        T.plus = {h.s_prime, 2 * static_cast<int>(rank(h.s_prime))};
        T.minus = {w.plus.symbol, w.plus.dim - 1};
      }
      break;
    }
  }
  h.max_in_A = max_in_A(h.main_symbol);
  h.target_dim = static_cast<int>(h.level.twice);
  h.normalized = w;
  validate(T);
  if (rank(h.s_prime) != level(h.main_symbol)) throw std::logic_error("rank(S') differs from lev(S)");
  return h;
}

/// Source descriptor recovered from the target, the twist flags, the position
/// of max(S) and the source rank n. Symbols come back reduced.
inline SeriesDescriptor reconstruct_source(const HoweAssignment& h, int n) {
  const SeriesDescriptor& T = h.target;
  SeriesDescriptor d;
  d.q_odd = true;
  d.dim_v0 = T.dim_v0;
  d.a = T.a;
  d.psi0 = T.psi0;
  d.v0_sign = T.v0_sign;
  d.type = dual_type_of(h.side);
  switch (h.side) {
    case HoweSide::O_even: {
      d.dim_vsharp = 2 * n;
      const int rs = n - (T.minus.dim + T.dim_v0) / 2;
      d.plus = {lift_main_piece(T.plus.symbol, rs, h.max_in_A), 2 * rs};
      d.minus = T.minus;
      if (h.sgn_transpose) {
        d.plus.symbol = transpose(d.plus.symbol);
        d.minus.symbol = transpose(d.minus.symbol);
      }
      if (h.sigma_swap) std::swap(d.plus, d.minus);
      break;
    }
    case HoweSide::SO_odd: {
      d.dim_vsharp = 2 * n;
      const int rs = n - (T.plus.dim - 1 + T.dim_v0) / 2;
      d.plus = {lift_main_piece(T.minus.symbol, rs, h.max_in_A), 2 * rs};
      d.minus = {T.plus.symbol, T.plus.dim - 1};
      if (h.sigma_swap) std::swap(d.plus, d.minus);
      break;
    }
    case HoweSide::Sp: {
      d.dim_vsharp = 2 * n + 1;
      const int rs = n - (T.minus.dim + T.dim_v0) / 2;
      Symbol s = lift_main_piece(T.plus.symbol, rs, h.max_in_A);
      if (h.sp_case == 'a') {
        d.plus = {s, 2 * rs + 1};
        d.minus = T.minus;
      } else {
        if (h.orientation_transposed) s = transpose(s);
        d.minus = {s, 2 * rs};
        d.plus = {T.minus.symbol, T.minus.dim + 1};
      }
      break;
    }
  }
  return d;
}

/// Copy with every symbol replaced by its reduced form.
inline SeriesDescriptor reduced_descriptor(SeriesDescriptor d) {
  d.plus.symbol = reduce(d.plus.symbol);
  d.minus.symbol = reduce(d.minus.symbol);
  return d;
}

inline std::string to_string(const SeriesDescriptor& d) {
  std::ostringstream os;
  os << "BCD"[static_cast<int>(d.type)] << d.dim_vsharp << " +" << d.plus.dim << to_string(d.plus.symbol) << " -" << d.minus.dim
     << to_string(d.minus.symbol) << " 0:" << d.dim_v0 << "[";
  for (std::size_t i = 0; i < d.a.size(); ++i) os << (i ? "," : "") << d.a[i];
  os << "]" << (d.v0_sign > 0 ? "+" : "-") << d.psi0;
  return os.str();
}

// ---------------------------------------------------------------------------
// Surjectivity and fibers of chi -> chi' for (O_{2n}, Sp_{2n'}) and (SO_{2n+1}, Sp_{2n'}).

struct SoBijectionOptions {
  bool require_hypothesis = true;
  std::size_t max_failures_recorded = 10;
};

struct SoBijectionReport {
  int n = 0, n_prime = 0;
  HoweSide side = HoweSide::O_even;
  bool hypothesis_holds = false;
  // Construction S' -> S for every target symbol and orientation.
  std::size_t constructed = 0, construction_failures = 0;
  // Full fibers over target descriptors.
  std::size_t targets = 0, targets_hit = 0, sources = 0, sources_mapped = 0, stray = 0;
  std::size_t fiber_min = 0, fiber_max = 0;
  int expected_fiber = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return construction_failures == 0 && targets_hit == targets && sources_mapped == sources && stray == 0 &&
           fiber_min == static_cast<std::size_t>(expected_fiber) && fiber_max == static_cast<std::size_t>(expected_fiber);
  }
};

namespace detail {

struct V0Choice {
  int rank = 0;
  std::vector<int> a;
  int sign = 1;
};

inline std::vector<V0Choice> v0_choices(int j0, bool signed_space) {
  std::vector<V0Choice> out;
  if (j0 == 0) return {V0Choice{}};
  for (auto& p : partitions(j0))
    for (int sg : {1, -1}) {
      if (!signed_space && sg < 0) continue;
      out.push_back({j0, p, sg});
    }
  return out;
}

inline void put_v0(SeriesDescriptor& d, const V0Choice& v) {
  d.dim_v0 = 2 * v.rank;
  d.a = v.a;
  d.v0_sign = v.sign;
}

}  // namespace detail

inline SoBijectionReport so_bijection_check(int n, int n_prime, HoweSide side, const SoBijectionOptions& opt = {}) {
  if (side == HoweSide::Sp) throw precondition_error("so_bijection_check covers the orthogonal sides");
  if (n_prime < 0 || n < 1) throw precondition_error("ranks must be positive");
  SoBijectionReport r;
  r.n = n;
  r.n_prime = n_prime;
  r.side = side;
  r.hypothesis_holds = howe_hypothesis(n, HalfInteger{2LL * n_prime});
  if (opt.require_hypothesis && !r.hypothesis_holds) throw precondition_error("n > 4n'^2 + 3n' fails");
  r.expected_fiber = side == HoweSide::O_even ? 4 : 2;
  const bool even_side = side == HoweSide::O_even;
  auto fail = [&](const std::string& msg) {
    if (r.failures.size() < opt.max_failures_recorded) r.failures.push_back(msg);
  };

  // S' of rank n'-j lifts to S of rank n-j and level n'-j with matching class.
  for (int j = 0; j <= n_prime; ++j) {
    const int rp = n_prime - j, rs = n - j;
    for (const auto& sp : enumerate_symbols(rp, even_side ? DefectClass::mod4(1) : DefectClass::even())) {
      for (bool in_A : {true, false}) {
        if (!even_side && in_A != (mod_floor(defect(sp), 4) == 0)) continue;
        ++r.constructed;
        try {
          Symbol s = lift_main_piece(sp, rs, in_A);
          const long long m = m_param(s), c = max_entry(s);
          const bool rank_id = rank(s) == rs && rank(s) == rank(sp) + c - floor_div(m * m, 4) + floor_div((m - 1) * (m - 1), 4);
          const bool lev_id = level(s) == rp && level(s) == rank(s) - c + floor_div(m, 2);
          const long long cls = mod_floor(defect(s), 4);
          const bool cls_ok = even_side ? cls == (in_A ? 0 : 2) : cls == 1;
          bool back = false;
          if (even_side) {
            auto mp = main_piece(s, false);
            back = !mp.transposed && mp.s_prime == sp;
          } else {
            back = main_piece_odd(s, false) == sp;
          }
          if (!(rank_id && lev_id && cls_ok && back)) {
            ++r.construction_failures;
            fail("lift " + to_string(sp) + " -> " + to_string(s));
          }
        } catch (const std::exception& e) {
          ++r.construction_failures;
          fail("lift " + to_string(sp) + ": " + e.what());
        }
      }
    }
  }

  // Target descriptors of Sp_{2n'} (dual type B), keyed with the type of O_{2n}.
  std::map<std::pair<int, std::string>, std::size_t> fiber;
  for (int j0 = 0; j0 <= n_prime; ++j0)
    for (const auto& v : detail::v0_choices(j0, even_side))
      for (int j1 = 0; j0 + j1 <= n_prime; ++j1) {
        const int rp = n_prime - j0 - j1;
        const auto others = enumerate_symbols(j1, even_side ? DefectClass::even() : DefectClass::mod4(1));
        const auto primes = enumerate_symbols(rp, even_side ? DefectClass::mod4(1) : DefectClass::even());
        for (const auto& o : others)
          for (const auto& sp : primes) {
            SeriesDescriptor t;
            t.type = DualType::B;
            t.dim_vsharp = 2 * n_prime + 1;
            detail::put_v0(t, v);
            if (even_side) {
              t.plus = {sp, 2 * rp + 1};
              t.minus = {o, 2 * j1};
            } else {
              t.plus = {o, 2 * j1 + 1};
              t.minus = {sp, 2 * rp};
            }
            for (int eps : even_side ? std::vector<int>{1, -1} : std::vector<int>{0}) fiber[{eps, to_string(t)}] = 0;
          }
      }
  r.targets = fiber.size();

  // Sources of level n': dominant symbol of rank n-j and level n'-j.
  HoweOptions hopt;
  hopt.require_hypothesis = opt.require_hypothesis;
  for (int j0 = 0; j0 <= n_prime; ++j0)
    for (const auto& v : detail::v0_choices(j0, even_side))
      for (int j1 = 0; j0 + j1 <= n_prime; ++j1) {
        const int j = j0 + j1, lev = n_prime - j;
        const DefectClass cls = even_side ? DefectClass::even() : DefectClass::mod4(1);
        EnumerateOptions capped;
        capped.level_cap = lev;
        std::vector<Symbol> doms;
        for (auto& s : enumerate_symbols(n - j, cls, capped))
          if (level(s) == lev) doms.push_back(s);
        const auto others = enumerate_symbols(j1, cls);
        for (const auto& s : doms)
          for (const auto& o : others)
            for (bool swapped : {false, true}) {
              SeriesDescriptor d;
              d.type = even_side ? DualType::D : DualType::C;
              d.dim_vsharp = 2 * n;
              detail::put_v0(d, v);
              KappaComponent big{s, 2 * (n - j)}, small{o, 2 * j1};
              d.plus = swapped ? small : big;
              d.minus = swapped ? big : small;
              ++r.sources;
              try {
                auto h = howe_map(d, side, hopt);
                if (h.level.twice != 2LL * n_prime) throw std::logic_error("level mismatch");
                if (reconstruct_source(h, n) != reduced_descriptor(d)) throw std::logic_error("round trip failed");
                ++r.sources_mapped;
                auto it = fiber.find({even_side ? descriptor_sign(d) : 0, to_string(h.target)});
                if (it == fiber.end()) {
                  ++r.stray;
                  fail("stray target " + to_string(h.target));
                } else {
                  ++it->second;
                }
              } catch (const std::exception& e) {
                fail(to_string(d) + ": " + e.what());
              }
            }
      }
  bool first = true;
  for (const auto& [key, count] : fiber) {
    if (count) ++r.targets_hit;
    r.fiber_min = first ? count : std::min(r.fiber_min, count);
    r.fiber_max = first ? count : std::max(r.fiber_max, count);
    first = false;
  }
  return r;
}

}  // namespace symlev
