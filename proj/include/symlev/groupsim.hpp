// Desk-scale checks on small groups: supports, Weil values, tensor kernels,
// T-orbits, the block element x_2, Frobenius counts and class squares.
#pragma once

#include "factor.hpp"
#include "groups.hpp"
#include "symfun.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace symlev {

// ---------------------------------------------------------------- spectra

struct Eigen {
  FieldPtr field;  // F_{q^d} for a root of a degree-d factor
  Fe value = 0;
  int degree = 1;
  int multiplicity = 0;  // algebraic
  int dim = 0;           // geometric, over `field`
};

namespace detail {

inline Fe find_root(const Poly& f, const FieldPtr& E) {
  Poly fe = embed_poly(f, Embedding(f.field(), E));
  for (std::uint64_t v = 0; v < E->size(); ++v)
    if (fe.eval(static_cast<Fe>(v)) == 0) return static_cast<Fe>(v);
  throw std::logic_error("irreducible factor has no root in its splitting field");
}

}  // namespace detail

/// One eigenvalue per irreducible factor of the characteristic polynomial.
inline std::vector<Eigen> eigen_data(const FqMatrix& g) {
  const FieldPtr& F = g.field();
  std::vector<Eigen> out;
  for (auto& fac : factor_squarefree_split(char_poly(g), g.n())) {
    Eigen e;
    e.degree = fac.poly.degree();
    e.multiplicity = fac.multiplicity;
    if (e.degree == 1) {
      e.field = F;
      e.value = F->neg(fac.poly.coeff(0));
    } else {
      e.field = make_field(F->p(), F->k() * static_cast<unsigned>(e.degree));
      e.value = detail::find_root(fac.poly, e.field);
    }
    e.dim = eigenspace_dim(g, e.value, e.field);
    out.push_back(e);
  }
  return out;
}

/// Codimension of the largest eigenspace over the splitting field.
inline int support(const FqMatrix& g) {
  int best = 0;
  for (auto& e : eigen_data(g)) best = std::max(best, e.dim);
  return g.n() - best;
}

/// The eigenvalue whose eigenspace has dimension N - supp, when supp < N/2.
/// Such an eigenvalue lies in the field of g.
inline std::optional<Fe> primary_eigenvalue(const FqMatrix& g) {
  auto ed = eigen_data(g);
  for (auto& e : ed)
    if (2 * e.dim > g.n()) return e.value;
  return std::nullopt;
}

inline bool is_regular_semisimple(const FqMatrix& g) { return is_squarefree(char_poly(g)); }

/// Number of distinct eigenvalues over the splitting field.
inline int distinct_eigenvalue_count(const FqMatrix& g) {
  int c = 0;
  for (auto& e : eigen_data(g)) c += e.degree;
  return c;
}

// ---------------------------------------------------------------- Weil values

namespace detail {

inline std::uint64_t unitary_q(const FiniteField& F) {
  if (F.k() % 2) throw precondition_error("unitary data needs a field of square order");
  return upow(F.p(), F.k() / 2);
}

}  // namespace detail

/// Value of the reducible Weil character: eps^N (eps q)^{dim ker(g - 1)}. For
/// eps = -1, g lives over F_{q^2}.
inline BigInt weil_gl_value(const FqMatrix& g, int eps) {
  if (eps != 1 && eps != -1) throw precondition_error("eps must be +1 or -1");
  const std::uint64_t q = eps == 1 ? g.field()->size() : detail::unitary_q(*g.field());
  const int d = eigenspace_dim(g, 1);
  BigInt v = ipow(BigInt(q), static_cast<unsigned>(d));
  if (eps == -1 && (g.n() + d) % 2) v = -v;
  return v;
}

struct TensorReport {
  int N = 0, j = 0, m = 0;  // m = supp(g)
  int dim = 0;              // dim ker(g (x) s - Id)
  int bound_all = 0;        // j (N - m)
  bool holds_all = false;
  bool normalized_applies = false;  // m < N/2 and s != lambda^{-1} Id
  int bound_normalized = 0;         // (N - m)(j - 2) + N
  bool holds_normalized = true;
  bool ok() const { return holds_all && holds_normalized; }
};

/// dim ker(g (x) s - Id) with the two support bounds. The sharper bound is
/// stated for g scaled to primary eigenvalue 1; equivalently s is compared with
/// lambda^{-1} Id.
inline TensorReport tensor_fixed_dim(const FqMatrix& g, const FqMatrix& s) {
  if (!g.field()->same_as(*s.field())) throw precondition_error("tensor factors over different fields");
  TensorReport r;
  r.N = g.n();
  r.j = s.n();
  r.m = support(g);
  FqMatrix k = kron(g, s);
  r.dim = eigenspace_dim(k, 1);
  r.bound_all = r.j * (r.N - r.m);
  r.holds_all = r.dim <= r.bound_all;
  if (2 * r.m < r.N) {
    Fe lambda = *primary_eigenvalue(g);
    if (s != FqMatrix::scalar(s.field(), r.j, g.field()->inv(lambda))) {
      r.normalized_applies = true;
      r.bound_normalized = (r.N - r.m) * (r.j - 2) + r.N;
      r.holds_normalized = r.dim <= r.bound_normalized;
    }
  }
  return r;
}

// ---------------------------------------------------------------- T-orbits

struct TOrbit {
  FieldPtr field;             // common extension holding alpha and T
  std::uint64_t t = 0;        // |T|
  std::uint64_t q = 0;
  int m = 0;
  Fe alpha = 0;               // in `field`
  std::vector<Fe> elements;   // sorted
  bool regular() const { return elements.size() == 2 * static_cast<std::size_t>(m) * t; }
  Fe product() const {
    Fe p = 1;
    for (Fe x : elements) p = field->mul(p, x);
    return p;
  }
};

/// Smallest extension F_{q^L} with m | L and t | q^L - 1.
inline FieldPtr orbit_field(std::uint64_t q, int m, std::uint64_t t) {
  FieldPtr Fq = make_field_of_size(q);
  for (int L = m; L <= 24; L += m) {
    const unsigned k = Fq->k() * static_cast<unsigned>(L);
    if (k > 24) break;
    BigInt size = ipow(BigInt(Fq->p()), k);
    if (size > BigInt(FiniteField::table_limit)) break;
    if ((size - 1) % t == 0) return make_field(Fq->p(), k);
  }
  throw precondition_error("no small common extension holds F_{q^m} and the roots of unity");
}

/// O_T(alpha) = { w alpha^{+-q^i} } with T = mu_t. alpha is given in F_{q^m}.
inline TOrbit t_orbit(Fe alpha, std::uint64_t t, std::uint64_t q, int m) {
  if (m < 1 || t < 1) throw precondition_error("m and |T| must be positive");
  FieldPtr Fm = make_field_of_size(upow(q, static_cast<unsigned>(m)));
  if (alpha == 0 || alpha >= Fm->size()) throw precondition_error("alpha must be a unit of F_{q^m}");
  TOrbit o;
  o.field = orbit_field(q, m, t);
  o.t = t;
  o.q = q;
  o.m = m;
  o.alpha = Embedding(Fm, o.field)(alpha);
  const FiniteField& E = *o.field;
  const Fe w0 = E.pow(E.generator(), (E.size() - 1) / t);
  std::set<Fe> s;
  Fe a = o.alpha;
  for (int i = 0; i < m; ++i) {
    for (Fe b : {a, E.inv(a)}) {
      Fe w = 1;
      for (std::uint64_t k = 0; k < t; ++k) {
        s.insert(E.mul(w, b));
        w = E.mul(w, w0);
      }
    }
    a = E.pow(a, q);
  }
  o.elements.assign(s.begin(), s.end());
  return o;
}

inline bool is_su_regular(Fe alpha, std::uint64_t q, int m) { return t_orbit(alpha, q + 1, q, m).regular(); }

/// Whether some pair of distinct tuples (w, e, r), r in [0, m), gives
/// w1 alpha^{e1 q^r1} = w2 alpha^{e2 q^r2}. With o = ord(alpha) this holds iff
/// o divides (q+1)(e1 q^r1 - e2 q^r2) for some (e1, r1) != (e2, r2).
inline bool su_irregular_by_equation(std::uint64_t order, std::uint64_t q, int m) {
  std::vector<long long> ex;
  for (int r = 0; r < m; ++r) {
    const long long qr = static_cast<long long>(upow(q, static_cast<unsigned>(r)) % order);
    ex.push_back(qr);
    ex.push_back(static_cast<long long>(order) - qr);
  }
  const auto o = static_cast<long long>(order);
  for (std::size_t a = 0; a < ex.size(); ++a)
    for (std::size_t b = a + 1; b < ex.size(); ++b) {
      const long long k = mod_floor(ex[a] - ex[b], o);
      if (static_cast<long long>((static_cast<unsigned long long>(k) * (q + 1)) % order) == 0) return true;
    }
  return false;
}

struct NonRegularCount {
  std::uint64_t q = 0;
  int m = 0;
  std::uint64_t units = 0;
  std::uint64_t by_orbit = 0;     // units with |O| < 2m(q+1)
  std::uint64_t by_equation = 0;  // units solving the equation family
  std::uint64_t disagreements = 0;
  bool product_one_on_regular = true;
  std::optional<Fe> first_regular;
  double envelope = 0;  // 9 m^2 q^{1+m/2}
  bool agrees() const { return disagreements == 0 && by_orbit == by_equation; }
  bool within_envelope() const { return static_cast<double>(by_orbit) <= envelope; }
};

/// Exhaustive count of the units of F_{q^m} that are not SU-regular.
inline NonRegularCount count_non_su_regular(std::uint64_t q, int m) {
  if (m < 1) throw precondition_error("m must be positive");
  BigInt size = ipow(BigInt(q), static_cast<unsigned>(m));
  if (size > 1000000) throw cap_exceeded("q^m exceeds 10^6");
  FieldPtr Fm = make_field_of_size(static_cast<std::uint64_t>(size));
  NonRegularCount c;
  c.q = q;
  c.m = m;
  c.units = Fm->size() - 1;
  c.envelope = 9.0 * m * m * std::pow(static_cast<double>(q), 1.0 + m / 2.0);
  for (Fe a = 1; a < Fm->size(); ++a) {
    TOrbit o = t_orbit(a, q + 1, q, m);
    const bool irr_orbit = !o.regular();
    const bool irr_eq = su_irregular_by_equation(Fm->order_of(a), q, m);
    c.by_orbit += irr_orbit;
    c.by_equation += irr_eq;
    c.disagreements += irr_orbit != irr_eq;
    if (!irr_orbit) {
      if (!c.first_regular) c.first_regular = a;
      if (o.product() != 1) c.product_one_on_regular = false;
    }
  }
  return c;
}

// ---------------------------------------------------------------- x_2

struct X2 {
  std::uint64_t q = 0;
  int m = 0;
  Fe alpha = 0;   // in F_{q^m}
  Poly min_poly;  // of alpha over F_q, coefficients in F_{q^2}
  FqMatrix X;     // companion matrix, m x m over F_{q^2}
  FqMatrix x2;    // L x L, L = (2q+2)m
};

/// x_2 = diag(X, gX, ..., g^q X, X^{-1}, g X^{-1}, ..., g^q X^{-1}) with
/// mu_{q+1} = <g>.
inline X2 build_x2(std::uint64_t q, int m, Fe alpha) {
  if (!is_su_regular(alpha, q, m)) throw precondition_error("alpha is not SU-regular");
  X2 r;
  r.q = q;
  r.m = m;
  r.alpha = alpha;
  FieldPtr Fm = make_field_of_size(upow(q, static_cast<unsigned>(m)));
  FieldPtr F2 = make_field_of_size(q * q);
  FieldPtr E = orbit_field(q, m, q + 1);
  Embedding to_e(Fm, E), f2_to_e(F2, E);
  Fe a = to_e(alpha);
  Poly mp = Poly::constant(E, 1);
  Fe y = a;
  do {
    mp = mp * Poly::linear(E, y);
    y = E->pow(y, q);
  } while (y != a);
  std::vector<Fe> c(mp.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f2_to_e.preimage(mp.coeffs()[i]);
  r.min_poly = Poly(F2, std::move(c));
  if (r.min_poly.degree() != m) throw std::logic_error("SU-regular alpha must have degree m over F_q");
  r.X = FqMatrix::companion(r.min_poly);
  const FqMatrix Xi = r.X.inverse();
  const Fe gamma = F2->pow(F2->generator(), q - 1);
  std::vector<FqMatrix> blocks;
  for (const FqMatrix* B : {static_cast<const FqMatrix*>(&r.X), &Xi}) {
    Fe w = 1;
    for (std::uint64_t k = 0; k <= q; ++k) {
      blocks.push_back(B->scaled(w));
      w = F2->mul(w, gamma);
    }
  }
  r.x2 = FqMatrix::block_diag(blocks);
  return r;
}

struct ScalarsReport {
  std::uint64_t q = 0;
  int m = 0;
  int L = 0;
  Fe alpha = 0;
  bool squarefree = false;
  bool det_one = false;
  bool unitary_spectrum = false;  // spectrum stable under x -> x^{-q}
  std::vector<std::pair<Fe, bool>> omega_checks;
  bool ok() const {
    if (!squarefree || !det_one || !unitary_spectrum || omega_checks.empty()) return false;
    for (auto& [w, b] : omega_checks)
      if (!b) return false;
    return true;
  }
};

/// Char-poly witness for every scalar w in mu_{q+1}: w x_2^{-1} and x_2 have
/// the same characteristic polynomial. Uses the first SU-regular unit.
inline ScalarsReport verify_scalars(std::uint64_t q, int m) {
  FieldPtr Fm = make_field_of_size(upow(q, static_cast<unsigned>(m)));
  std::optional<Fe> alpha;
  for (Fe a = 1; a < Fm->size() && !alpha; ++a)
    if (is_su_regular(a, q, m)) alpha = a;
  if (!alpha) throw precondition_error("no SU-regular element");
  X2 x = build_x2(q, m, *alpha);
  ScalarsReport r;
  r.q = q;
  r.m = m;
  r.L = x.x2.n();
  r.alpha = *alpha;
  const FieldPtr& F2 = x.x2.field();
  const Poly f = char_poly(x.x2);
  r.squarefree = is_squarefree(f);
  r.det_one = x.x2.det() == 1;
  const Fe c0 = F2->pow(f.coeff(0), q);
  std::vector<Fe> rev(f.coeffs().size());
  for (std::size_t i = 0; i < rev.size(); ++i) rev[i] = F2->div(F2->pow(f.coeffs()[rev.size() - 1 - i], q), c0);
  r.unitary_spectrum = Poly(F2, rev) == f;
  const FqMatrix xi = x.x2.inverse();
  const Fe gamma = F2->pow(F2->generator(), q - 1);
  Fe w = 1;
  for (std::uint64_t k = 0; k <= q; ++k) {
    r.omega_checks.emplace_back(w, char_poly(xi.scaled(w)) == f);
    w = F2->mul(w, gamma);
  }
  return r;
}

// ---------------------------------------------------------------- counting in tables

/// |{h : hg = gh}| by direct count.
inline std::uint64_t centralizer_order(const GroupTable& G, GroupTable::Index g) {
  std::uint64_t c = 0;
  for (GroupTable::Index h = 0; h < G.order(); ++h) c += G.mul(h, g) == G.mul(g, h);
  return c;
}

/// |{(a, b) in Cx x Cy : ab = g}|.
inline std::uint64_t frobenius_count_direct(const GroupTable& G, std::size_t cx, std::size_t cy, GroupTable::Index g) {
  std::uint64_t c = 0;
  for (auto a : G.class_members(cx)) c += G.class_of(G.mul(G.inverse(a), g)) == cy;
  return c;
}

/// Cycle type of a permutation, decreasing.
inline CycleType cycle_type(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  CycleType c;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    c.push_back(len);
  }
  std::sort(c.begin(), c.end(), std::greater<int>());
  return c;
}

/// (|x^G| |y^G| / |G|) sum_chi chi(x) chi(y) conj(chi(g)) / chi(1) in S_N.
inline Rational frobenius_count_formula_sn(int N, const CycleType& x, const CycleType& y, const CycleType& g) {
  if (N > 7) throw precondition_error("formula restricted to N <= 7");
  for (auto* c : {&x, &y, &g})
    if (size_of(*c) != N) throw precondition_error("cycle type size differs from N");
  CharTable t = char_table(N);
  auto col = [&](const CycleType& c) {
    auto a = ascending(c);
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      if (t.columns[i] == a) return i;
    throw precondition_error("cycle type not found");
  };
  const std::size_t ix = col(x), iy = col(y), ig = col(g), i1 = col(CycleType(N, 1));
  Rational s = 0;
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    s += Rational(t.at(r, ix) * t.at(r, iy) * t.at(r, ig), t.at(r, i1));
  return s * Rational(class_size_sn(x) * class_size_sn(y), factorial(N));
}

/// Index of the class of S_N (as a permutation table) with the given cycle type.
inline std::size_t class_with_cycle_type(const GroupTable& G, const CycleType& c) {
  CycleType want = c;
  std::sort(want.begin(), want.end(), std::greater<int>());
  for (std::size_t k = 0; k < G.class_count(); ++k)
    if (cycle_type(G.permutation(G.class_rep(k))) == want) return k;
  throw precondition_error("no class with that cycle type");
}

// ---------------------------------------------------------------- class squares

struct CoverageOptions {
  unsigned workers = 1;
  std::uint64_t work_cap = 1000000000;  // products
};

struct CoverageReport {
  std::size_t cls = 0;
  std::size_t class_size = 0;
  std::uint64_t products = 0;
  std::vector<char> member;              // over element indices
  std::vector<bool> class_hit;           // over class indices
  std::vector<GroupTable::Index> missing_class_reps;
  std::vector<GroupTable::Index> excluded_hit;
  bool union_of_classes = true;
  bool covers_all = false;
  bool covers_all_but_excluded = false;
};

/// C*C as a membership table, sharded by the first factor. Each shard fills its
/// own table; the union is independent of the worker count.
inline CoverageReport class_square_coverage(const GroupTable& G, std::size_t cls,
                                            const std::vector<GroupTable::Index>& exclude = {},
                                            CoverageOptions opt = {}) {
  const auto& C = G.class_members(cls);
  CoverageReport r;
  r.cls = cls;
  r.class_size = C.size();
  r.products = static_cast<std::uint64_t>(C.size()) * C.size();
  if (r.products > opt.work_cap) throw cap_exceeded("class-square work exceeds cap");
  const unsigned shards = std::max(1u, opt.workers);
  auto parts = parallel_map(
      shards,
      [&](std::size_t w) {
        std::vector<char> m(G.order(), 0);
        for (std::size_t i = w; i < C.size(); i += shards)
          for (auto b : C) m[G.mul(C[i], b)] = 1;
        return m;
      },
      shards);
  r.member.assign(G.order(), 0);
  for (auto& p : parts)
    for (std::size_t i = 0; i < p.size(); ++i) r.member[i] |= p[i];
  r.class_hit.assign(G.class_count(), false);
  for (std::size_t k = 0; k < G.class_count(); ++k) {
    std::size_t hits = 0;
    for (auto x : G.class_members(k)) hits += r.member[x] != 0;
    if (hits != 0 && hits != G.class_size(k)) r.union_of_classes = false;
    r.class_hit[k] = hits > 0;
    if (!hits) r.missing_class_reps.push_back(G.class_rep(k));
  }
  std::vector<char> ex(G.order(), 0);
  for (auto e : exclude) ex[e] = 1;
  r.covers_all = r.missing_class_reps.empty();
  r.covers_all_but_excluded = true;
  for (GroupTable::Index i = 0; i < G.order(); ++i) {
    if (ex[i] && r.member[i]) r.excluded_hit.push_back(i);
    if (!ex[i] && !r.member[i]) r.covers_all_but_excluded = false;
  }
  return r;
}

/// Classes met by C*C, from one representative per class: d is in C*C iff
/// c^{-1} d lies in C for some c in C.
inline std::vector<bool> class_square_classes(const GroupTable& G, std::size_t cls) {
  std::vector<bool> hit(G.class_count(), false);
  const auto& C = G.class_members(cls);
  for (std::size_t k = 0; k < G.class_count(); ++k) {
    const auto d = G.class_rep(k);
    for (auto c : C)
      if (G.class_of(G.mul(G.inverse(c), d)) == cls) {
        hit[k] = true;
        break;
      }
  }
  return hit;
}

struct CoveringSearch {
  std::vector<std::size_t> covering;       // classes C with C^2 = G, by representative test
  std::optional<CoverageReport> confirmed;  // full product table for the first one
};

/// Classes whose square is the whole group; the first is confirmed by the
/// full product table when it fits the work cap.
inline CoveringSearch find_covering_classes(const GroupTable& G, CoverageOptions opt = {}) {
  CoveringSearch s;
  auto per = parallel_map(
      G.class_count(),
      [&](std::size_t k) {
        auto h = class_square_classes(G, k);
        return std::all_of(h.begin(), h.end(), [](bool b) { return b; });
      },
      opt.workers);
  for (std::size_t k = 0; k < per.size(); ++k)
    if (per[k]) s.covering.push_back(k);
  if (!s.covering.empty()) {
    std::size_t best = s.covering.front();
    for (auto k : s.covering)
      if (G.class_size(k) < G.class_size(best)) best = k;
    const std::uint64_t w = static_cast<std::uint64_t>(G.class_size(best)) * G.class_size(best);
    if (w <= opt.work_cap) s.confirmed = class_square_coverage(G, best, {}, opt);
  }
  return s;
}

}  // namespace symlev
