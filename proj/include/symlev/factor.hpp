// Factorization of polynomials over small finite fields.
#pragma once

#include "poly.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace symlev {

struct Factor {
  Poly poly;  // monic irreducible
  int multiplicity = 0;
};

inline bool is_squarefree(const Poly& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

/// Monic irreducible factors of degree d dividing a squarefree product P of
/// such factors, found by root search in F_{q^d}.
inline std::vector<Poly> split_equal_degree(const Poly& P, int d) {
  const FieldPtr& F = P.field();
  const std::uint64_t q = F->size();
  FieldPtr E = make_field(F->p(), F->k() * static_cast<unsigned>(d));
  Embedding emb(F, E);
  Poly PE = embed_poly(P, emb);
  const int want = P.degree() / d;
  std::vector<Poly> out;
  std::set<Fe> seen;
  for (std::uint64_t v = 0; v < E->size() && static_cast<int>(out.size()) < want; ++v) {
    Fe x = static_cast<Fe>(v);
    if (seen.count(x) || PE.eval(x) != 0) continue;
    Poly prod = Poly::constant(E, 1);
    Fe y = x;
    for (int i = 0; i < d; ++i) {
      seen.insert(y);
      prod = prod * Poly::linear(E, y);
      y = E->pow(y, q);
    }
    std::vector<Fe> c(prod.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = emb.preimage(prod.coeffs()[i]);
    out.emplace_back(F, std::move(c));
  }
  return out;
}

/// Complete factorization of f / lead(f) into monic irreducibles with
/// multiplicities. Degrees present are located by distinct-degree gcds, the
/// factors themselves by root search in F_{q^d}.
inline std::vector<Factor> factor_squarefree_split(const Poly& f, int max_ext) {
  if (f.degree() < 1) throw precondition_error("factorization needs degree >= 1");
  const FieldPtr& F = f.field();
  const Poly fm = f.monic();
  const std::uint64_t q = F->size();
  const Poly t = Poly::x(F);

  std::vector<Poly> h(max_ext + 1);
  Poly X = t % fm;
  for (int d = 1; d <= max_ext; ++d) {
    X = powmod(X, q, fm);
    h[d] = gcd(fm, X - t);
  }

  std::vector<Factor> out;
  Poly rem = fm;
  for (int d = 1; d <= max_ext; ++d) {
    Poly P = h[d];
    for (int e = 1; e < d; ++e)
      if (d % e == 0) P = P / gcd(P, h[e]);
    P = P.monic();
    if (P.degree() < 1) continue;
    for (Poly& g : split_equal_degree(P, d)) {
      int m = 0;
      for (;;) {
        auto [qt, r] = divmod(rem, g);
        if (!r.is_zero()) break;
        rem = qt;
        ++m;
      }
      out.push_back({g, m});
    }
  }
  if (rem.degree() > 0) throw precondition_error("irreducible factor degree exceeds max_ext");
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
    if (a.poly.degree() != b.poly.degree()) return a.poly.degree() < b.poly.degree();
    return a.poly.coeffs() < b.poly.coeffs();
  });
  return out;
}

}  // namespace symlev
