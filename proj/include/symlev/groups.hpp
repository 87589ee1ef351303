// Standard generating sets for small classical and permutation groups.
#pragma once

#include "group_order.hpp"
#include "group_table.hpp"

#include <optional>
#include <unordered_set>

namespace symlev {

enum class GroupFamily { GL, SL, GU, SU, Sp, SOplus, SOminus, SOodd, OmegaPlus, OmegaMinus, OmegaOdd, Alternating, Symmetric };

inline std::string to_string(GroupFamily f) {
  switch (f) {
    case GroupFamily::Alternating: return "A";
    case GroupFamily::Symmetric: return "S";
    default: return family_name(static_cast<Family>(f));
  }
}

/// Accepts gl, sl, gu, su, sp, so+, so-, so, omega+, omega-, omega, alt, sym.
inline GroupFamily parse_group_family(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  static const std::vector<std::pair<std::string, GroupFamily>> names{
      {"gl", GroupFamily::GL},          {"sl", GroupFamily::SL},
      {"gu", GroupFamily::GU},          {"su", GroupFamily::SU},
      {"sp", GroupFamily::Sp},          {"so+", GroupFamily::SOplus},
      {"so-", GroupFamily::SOminus},    {"so", GroupFamily::SOodd},
      {"omega+", GroupFamily::OmegaPlus}, {"omega-", GroupFamily::OmegaMinus},
      {"omega", GroupFamily::OmegaOdd}, {"alt", GroupFamily::Alternating},
      {"sym", GroupFamily::Symmetric}};
  for (auto& [n, f] : names)
    if (n == s) return f;
  throw precondition_error("unknown group family: " + s);
}

inline bool is_permutation_family(GroupFamily f) { return f == GroupFamily::Alternating || f == GroupFamily::Symmetric; }
inline bool is_unitary_family(GroupFamily f) { return f == GroupFamily::GU || f == GroupFamily::SU; }

struct GroupSpec {
  GroupFamily family = GroupFamily::GL;
  int N = 1;
  std::uint64_t q = 2;                 // field size; F_{q^2} carries the unitary groups
  bool projective = false;             // quotient by the scalars in the group
  bool as_matrices = false;            // permutation families as permutation matrices over F_q
  std::optional<FqMatrix> gram;        // form for Sp, GU/SU and the orthogonal families
  std::size_t cap = 1000000;
};

inline std::string describe(const GroupSpec& s) {
  std::string r = (s.projective ? "P" : "") + to_string(s.family) + "_" + std::to_string(s.N);
  if (!is_permutation_family(s.family) || s.as_matrices) r += "(" + std::to_string(s.q) + ")";
  return r;
}

namespace detail {

inline Fe first_nonsquare(const FiniteField& F) {
  for (Fe a = 1; a < F.size(); ++a)
    if (F.pow(a, (F.size() - 1) / 2) != 1) return a;
  throw precondition_error("no nonsquare in a field of even order");
}

inline bool is_square(const FiniteField& F, Fe a) { return a == 0 || F.size() % 2 == 0 || F.pow(a, (F.size() - 1) / 2) == 1; }

inline Fe conj(const FiniteField& F2, Fe a, std::uint64_t q) { return F2.pow(a, q); }

inline std::vector<Fe> mat_vec(const FqMatrix& G, const std::vector<Fe>& v) {
  const FiniteField& F = *G.field();
  std::vector<Fe> r(G.n(), 0);
  for (int i = 0; i < G.n(); ++i)
    for (int j = 0; j < G.n(); ++j) r[i] = F.add(r[i], F.mul(G(i, j), v[j]));
  return r;
}

inline Fe dot(const FiniteField& F, const std::vector<Fe>& a, const std::vector<Fe>& b) {
  Fe s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = F.add(s, F.mul(a[i], b[i]));
  return s;
}

/// Id + c * u w^T.
inline FqMatrix rank_one_update(const FieldPtr& F, Fe c, const std::vector<Fe>& u, const std::vector<Fe>& w) {
  const int n = static_cast<int>(u.size());
  FqMatrix m = FqMatrix::identity(F, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = F->add(m(i, j), F->mul(c, F->mul(u[i], w[j])));
  return m;
}

inline std::vector<std::vector<Fe>> nonzero_vectors(const FiniteField& F, int n) {
  std::vector<std::vector<Fe>> out;
  std::vector<Fe> v(n, 0);
  for (;;) {
    int i = 0;
    while (i < n && v[i] + 1 == F.size()) v[i++] = 0;
    if (i == n) break;
    ++v[i];
    out.push_back(v);
  }
  return out;
}

inline FqMatrix conj_matrix(const FqMatrix& m, std::uint64_t q) {
  return m.map([&](Fe a) { return conj(*m.field(), a, q); });
}

/// Grow a generating list one candidate at a time, keeping candidates that
/// enlarge the current closure.
class IncrementalClosure {
 public:
  IncrementalClosure(const ElementOps& ops, std::size_t cap) : ops_(ops), cap_(cap) {
    auto id = ops_.identity();
    set_.insert(id);
    list_.push_back(id);
  }
  bool offer(const std::string& g0) {
    std::string g = ops_.canonical(g0);
    if (set_.count(g)) return false;
    gens_.push_back(g);
    std::vector<std::string> todo = list_;
    for (std::size_t h = 0; h < todo.size(); ++h)
      for (auto& s : gens_) {
        std::string x = ops_.mul(todo[h], s);
        if (set_.insert(x).second) {
          if (set_.size() > cap_) throw cap_exceeded("group order exceeds enumeration cap " + std::to_string(cap_));
          list_.push_back(x);
          todo.push_back(x);
        }
      }
    return true;
  }
  std::size_t size() const { return set_.size(); }
  const std::vector<std::string>& generators() const { return gens_; }

 private:
  const ElementOps& ops_;
  std::size_t cap_;
  std::unordered_set<std::string> set_;
  std::vector<std::string> list_;
  std::vector<std::string> gens_;
};

}  // namespace detail

/// Default Gram matrix: hyperbolic pairs (2i, 2i+1), followed for SO- by an
/// anisotropic plane x^2 - v y^2 with v a nonsquare, and for odd dimension by a
/// single 1. The unitary form is the identity.
inline FqMatrix default_gram(GroupFamily f, int N, std::uint64_t q) {
  switch (f) {
    case GroupFamily::GU:
    case GroupFamily::SU:
      return FqMatrix::identity(make_field_of_size(q * q), N);
    case GroupFamily::Sp: {
      FieldPtr F = make_field_of_size(q);
      FqMatrix J(F, N);
      for (int i = 0; i + 1 < N; i += 2) {
        J(i, i + 1) = 1;
        J(i + 1, i) = F->neg(1);
      }
      return J;
    }
    case GroupFamily::SOplus:
    case GroupFamily::SOminus:
    case GroupFamily::SOodd:
    case GroupFamily::OmegaPlus:
    case GroupFamily::OmegaMinus:
    case GroupFamily::OmegaOdd: {
      FieldPtr F = make_field_of_size(q);
      FqMatrix G(F, N);
      const bool minus = f == GroupFamily::SOminus || f == GroupFamily::OmegaMinus;
      const int pairs = N / 2 - (minus ? 1 : 0);
      for (int i = 0; i < pairs; ++i) G(2 * i, 2 * i + 1) = G(2 * i + 1, 2 * i) = 1;
      if (minus) {
        G(N - 2, N - 2) = 1;
        G(N - 1, N - 1) = F->neg(detail::first_nonsquare(*F));
      }
      if (N % 2) G(N - 1, N - 1) = 1;
      return G;
    }
    default:
      throw precondition_error("family carries no form");
  }
}

namespace detail {

inline void check_gram(GroupFamily f, const FqMatrix& G, int N, std::uint64_t q) {
  const bool unitary = is_unitary_family(f);
  if (G.n() != N || G.field()->size() != (unitary ? q * q : q)) throw precondition_error("Gram matrix size or field mismatch");
  if (!G.invertible()) throw precondition_error("degenerate Gram matrix");
  const FiniteField& F = *G.field();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      bool ok = true;
      if (unitary) ok = G(j, i) == conj(F, G(i, j), q);
      else if (f == GroupFamily::Sp) ok = G(j, i) == F.neg(G(i, j)) && (i != j || G(i, i) == 0);
      else ok = G(j, i) == G(i, j);
      if (!ok) throw precondition_error("Gram matrix has the wrong symmetry for the family");
    }
}

inline bool preserves(GroupFamily f, const FqMatrix& g, const FqMatrix& G, std::uint64_t q) {
  FqMatrix rhs = is_unitary_family(f) ? conj_matrix(g, q) : g;
  return g.transpose() * G * rhs == G;
}

inline std::vector<FqMatrix> classical_candidates(const GroupSpec& s, FqMatrix& gram_out) {
  const int N = s.N;
  std::vector<FqMatrix> cands;
  switch (s.family) {
    case GroupFamily::GL:
    case GroupFamily::SL: {
      FieldPtr F = make_field_of_size(s.q);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          if (i == j) continue;
          for (unsigned e = 0; e < F->k(); ++e) {
            FqMatrix m = FqMatrix::identity(F, N);
            m(i, j) = F->pow(F->generator(), e);
            cands.push_back(m);
          }
        }
      if (s.family == GroupFamily::GL) {
        FqMatrix d = FqMatrix::identity(F, N);
        d(0, 0) = F->generator();
        cands.push_back(d);
      }
      return cands;
    }
    case GroupFamily::GU:
    case GroupFamily::SU: {
      const std::uint64_t q = s.q;
      const FqMatrix G = s.gram ? *s.gram : default_gram(s.family, N, q);
      check_gram(s.family, G, N, q);
      gram_out = G;
      FieldPtr F = G.field();
      auto h = [&](const std::vector<Fe>& x, const std::vector<Fe>& y) {
        std::vector<Fe> yc(y.size());
        for (std::size_t i = 0; i < y.size(); ++i) yc[i] = conj(*F, y[i], q);
        return dot(*F, x, mat_vec(G, yc));
      };
      auto row = [&](const std::vector<Fe>& v) {
        std::vector<Fe> vc(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) vc[i] = conj(*F, v[i], q);
        return mat_vec(G, vc);
      };
      std::vector<Fe> trace_zero;
      for (Fe a = 1; a < F->size(); ++a)
        if (F->add(a, conj(*F, a, q)) == 0) trace_zero.push_back(a);
      const Fe gamma = F->pow(F->generator(), q - 1);
      const Fe gamma_inv = F->inv(gamma);
      std::optional<std::vector<Fe>> v0;
      auto vecs = nonzero_vectors(*F, N);
      for (auto& v : vecs) {
        Fe hv = h(v, v);
        if (hv == 0) {
          for (Fe a : trace_zero) cands.push_back(rank_one_update(F, a, v, row(v)));
        } else if (!v0) {
          v0 = v;
        }
      }
      auto reflection = [&](const std::vector<Fe>& v, Fe lambda) {
        Fe c = F->div(F->sub(lambda, 1), h(v, v));
        return rank_one_update(F, c, v, row(v));
      };
      if (v0) {
        FqMatrix r0 = reflection(*v0, gamma);
        if (s.family == GroupFamily::GU) cands.push_back(r0);
        for (auto& w : vecs)
          if (h(w, w) != 0) cands.push_back(r0 * reflection(w, gamma_inv));
      }
      return cands;
    }
    case GroupFamily::Sp: {
      const FqMatrix G = s.gram ? *s.gram : default_gram(s.family, N, s.q);
      check_gram(s.family, G, N, s.q);
      gram_out = G;
      FieldPtr F = G.field();
      for (auto& v : nonzero_vectors(*F, N))
        for (unsigned e = 0; e < F->k(); ++e) cands.push_back(rank_one_update(F, F->pow(F->generator(), e), v, mat_vec(G, v)));
      return cands;
    }
    default: {
      const FqMatrix G = s.gram ? *s.gram : default_gram(s.family, N, s.q);
      check_gram(s.family, G, N, s.q);
      gram_out = G;
      FieldPtr F = G.field();
      const bool omega = s.family == GroupFamily::OmegaPlus || s.family == GroupFamily::OmegaMinus ||
                         s.family == GroupFamily::OmegaOdd;
      auto Q = [&](const std::vector<Fe>& v) { return dot(*F, v, mat_vec(G, v)); };
      auto reflection = [&](const std::vector<Fe>& v) {
        Fe c = F->neg(F->div(2, Q(v)));
        return rank_one_update(F, c, v, mat_vec(G, v));
      };
      std::optional<std::vector<Fe>> base[2];
      auto vecs = nonzero_vectors(*F, N);
      for (auto& v : vecs) {
        Fe qv = Q(v);
        if (qv != 0 && !base[is_square(*F, qv) ? 0 : 1]) base[is_square(*F, qv) ? 0 : 1] = v;
      }
      for (auto& v : vecs) {
        Fe qv = Q(v);
        if (qv == 0) continue;
        const int cls = is_square(*F, qv) ? 0 : 1;
        if (omega) {
          cands.push_back(reflection(*base[cls]) * reflection(v));
        } else {
          const int b = base[0] ? 0 : 1;
          cands.push_back(reflection(*base[b]) * reflection(v));
        }
      }
      return cands;
    }
  }
}

inline std::vector<std::string> permutation_generators(GroupFamily f, int n) {
  std::vector<std::string> gens;
  auto ident = [&] {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
  };
  if (f == GroupFamily::Symmetric) {
    if (n >= 2) {
      auto t = ident();
      std::swap(t[0], t[1]);
      gens.push_back(PermOps::encode(t));
      auto c = ident();
      for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
      gens.push_back(PermOps::encode(c));
    }
  } else {
    for (int k = 2; k < n; ++k) {
      auto c = ident();
      c[0] = 1;
      c[1] = k;
      c[k] = 0;
      gens.push_back(PermOps::encode(c));
    }
  }
  return gens;
}

inline FqMatrix permutation_matrix(const FieldPtr& F, const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  FqMatrix m(F, n);
  for (int i = 0; i < n; ++i) m(p[i], i) = 1;
  return m;
}

}  // namespace detail

/// Expected order of the (linear) group described by the spec.
inline BigInt expected_linear_order(const GroupSpec& s) {
  if (s.N < 1) throw precondition_error("dimension must be positive");
  if (is_permutation_family(s.family)) {
    BigInt f = 1;
    for (int i = 2; i <= s.N; ++i) f *= i;
    return s.family == GroupFamily::Alternating && s.N >= 2 ? f / 2 : f;
  }
  return group_order(static_cast<Family>(s.family), s.N, s.q);
}

/// A built group together with the data it was built from.
struct BuiltGroup {
  GroupSpec spec;
  std::optional<FqMatrix> gram;
  std::vector<Fe> center_scalars;  // scalars quotiented out (projective only)
  std::shared_ptr<const GroupTable> table;
  const GroupTable& operator*() const { return *table; }
  const GroupTable* operator->() const { return table.get(); }
};

/// Enumerate the group by closure from a standard generating set and compare
/// the order against the order formula.
inline BuiltGroup build_group(const GroupSpec& s) {
  BuiltGroup out;
  out.spec = s;
  const BigInt expected = expected_linear_order(s);
  if (!s.projective && expected > BigInt(s.cap)) throw cap_exceeded("group order exceeds enumeration cap");
  if (is_permutation_family(s.family)) {
    if (s.projective) throw precondition_error("projective quotient needs a matrix family");
    auto pg = detail::permutation_generators(s.family, s.N);
    std::shared_ptr<const ElementOps> ops;
    std::vector<std::string> gens;
    if (s.as_matrices) {
      FieldPtr F = make_field_of_size(s.q);
      auto mops = std::make_shared<MatrixOps>(F, s.N);
      for (auto& g : pg) gens.push_back(mops->encode(detail::permutation_matrix(F, PermOps::decode(g))));
      ops = mops;
    } else {
      ops = std::make_shared<PermOps>(s.N);
      gens = pg;
    }
    out.table = std::make_shared<GroupTable>(ops, gens, s.cap);
    if (BigInt(out.table->order()) != expected) throw precondition_error("generator set fails closure sanity");
    return out;
  }

  FqMatrix gram;
  auto cands = detail::classical_candidates(s, gram);
  if (!gram.entries().empty()) out.gram = gram;
  FieldPtr F = is_unitary_family(s.family) ? make_field_of_size(s.q * s.q) : make_field_of_size(s.q);
  auto lin = std::make_shared<MatrixOps>(F, s.N);
  const bool special = s.family != GroupFamily::GL && s.family != GroupFamily::GU;
  detail::IncrementalClosure inc(*lin, s.cap);
  for (auto& c : cands) {
    if (out.gram && !detail::preserves(s.family, c, *out.gram, s.q)) throw std::logic_error("generator does not preserve the form");
    if (special && c.det() != 1) throw std::logic_error("generator has determinant other than 1");
    inc.offer(lin->encode(c));
    if (BigInt(inc.size()) == expected) break;
  }
  if (BigInt(inc.size()) != expected) throw precondition_error("generator set fails closure sanity");
  auto lt = std::make_shared<GroupTable>(lin, inc.generators(), s.cap);
  if (!s.projective) {
    out.table = lt;
    return out;
  }
  for (Fe z = 1; z < F->size(); ++z)
    if (lt->contains(lin->encode(FqMatrix::scalar(F, s.N, z)))) out.center_scalars.push_back(z);
  auto pops = std::make_shared<MatrixOps>(F, s.N, out.center_scalars);
  out.table = std::make_shared<GroupTable>(pops, inc.generators(), s.cap);
  if (BigInt(out.table->order()) * BigInt(out.center_scalars.size()) != expected)
    throw precondition_error("generator set fails closure sanity");
  return out;
}

}  // namespace symlev
