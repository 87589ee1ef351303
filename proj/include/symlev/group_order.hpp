// Orders of finite classical groups.
#pragma once

#include "field.hpp"
#include "numeric.hpp"

#include <string>

namespace symlev {

enum class Family { GL, SL, GU, SU, Sp, SOplus, SOminus, SOodd, OmegaPlus, OmegaMinus, OmegaOdd };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::GU: return "GU";
    case Family::SU: return "SU";
    case Family::Sp: return "Sp";
    case Family::SOplus: return "SO+";
    case Family::SOminus: return "SO-";
    case Family::SOodd: return "SOodd";
    case Family::OmegaPlus: return "Omega+";
    case Family::OmegaMinus: return "Omega-";
    case Family::OmegaOdd: return "Omegaodd";
  }
  return "?";
}

inline bool is_orthogonal(Family f) {
  return f == Family::SOplus || f == Family::SOminus || f == Family::SOodd || f == Family::OmegaPlus ||
         f == Family::OmegaMinus || f == Family::OmegaOdd;
}

namespace detail {

inline void check_family_dimension(Family f, int N, std::uint64_t q) {
  if (N < 1) throw precondition_error("dimension must be positive");
  auto p = prime_factors(q);
  if (q < 2 || p.size() != 1) throw precondition_error("q must be a prime power");
  switch (f) {
    case Family::Sp:
      if (N % 2) throw precondition_error("symplectic groups need even dimension");
      break;
    case Family::SOplus:
    case Family::SOminus:
    case Family::OmegaPlus:
    case Family::OmegaMinus:
      if (N % 2) throw precondition_error("SO+/SO- need even dimension");
      break;
    case Family::SOodd:
    case Family::OmegaOdd:
      if (N % 2 == 0) throw precondition_error("SOodd needs odd dimension");
      break;
    default:
      break;
  }
  if (is_orthogonal(f) && q % 2 == 0) throw precondition_error("orthogonal families are supported for odd q only");
}

}  // namespace detail

/// Exact order of the classical group of the given family in dimension N over F_q.
inline BigInt group_order(Family f, int N, std::uint64_t q) {
  detail::check_family_dimension(f, N, q);
  const BigInt Q(q);
  BigInt r = 1;
  switch (f) {
    case Family::GL:
    case Family::SL:
      r = ipow(Q, static_cast<unsigned>(N * (N - 1) / 2));
      for (int i = 1; i <= N; ++i) r *= ipow(Q, i) - 1;
      if (f == Family::SL) r /= (Q - 1);
      return r;
    case Family::GU:
    case Family::SU:
      r = ipow(Q, static_cast<unsigned>(N * (N - 1) / 2));
      for (int i = 1; i <= N; ++i) r *= ipow(Q, i) - (i % 2 ? -1 : 1);
      if (f == Family::SU) r /= (Q + 1);
      return r;
    case Family::Sp: {
      const int n = N / 2;
      r = ipow(Q, static_cast<unsigned>(n * n));
      for (int i = 1; i <= n; ++i) r *= ipow(Q, 2 * i) - 1;
      return r;
    }
    case Family::SOodd:
    case Family::OmegaOdd: {
      const int n = (N - 1) / 2;
      r = ipow(Q, static_cast<unsigned>(n * n));
      for (int i = 1; i <= n; ++i) r *= ipow(Q, 2 * i) - 1;
      if (f == Family::OmegaOdd && N > 1) r /= 2;
      return r;
    }
    case Family::SOplus:
    case Family::SOminus:
    case Family::OmegaPlus:
    case Family::OmegaMinus: {
      const int n = N / 2;
      const bool plus = f == Family::SOplus || f == Family::OmegaPlus;
      r = ipow(Q, static_cast<unsigned>(n * (n - 1)));
      r *= plus ? ipow(Q, n) - 1 : ipow(Q, n) + 1;
      for (int i = 1; i < n; ++i) r *= ipow(Q, 2 * i) - 1;
      if (f == Family::OmegaPlus || f == Family::OmegaMinus) r /= 2;
      return r;
    }
  }
  return r;
}

/// Part of n coprime to p.
inline BigInt prime_to_p_part(BigInt n, std::uint64_t p) {
  if (n == 0) return n;
  while (n % p == 0) n /= p;
  return n;
}

/// Degree in q of |G|_{p'} viewed as a polynomial in q.
inline int prime_to_p_degree(Family f, int N) {
  switch (f) {
    case Family::GL:
    case Family::GU:
      return N * (N + 1) / 2;
    case Family::SL:
    case Family::SU:
      return N * (N + 1) / 2 - 1;
    case Family::Sp:
      return (N / 2) * (N / 2) + N / 2;
    case Family::SOodd:
    case Family::OmegaOdd:
      return ((N - 1) / 2) * ((N - 1) / 2) + (N - 1) / 2;
    default:
      return (N / 2) * (N / 2);
  }
}

}  // namespace symlev
