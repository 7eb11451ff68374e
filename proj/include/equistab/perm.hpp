#pragma once

#include <string>
#include <vector>

#include "equistab/errors.hpp"

namespace equistab {

/// A permutation of {0..n-1} stored as an image array: p[i] is where i goes.
using Perm = std::vector<int>;

inline Perm identity_perm(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

/// Composition as functions: (a * b)(x) = a(b(x)); b is applied first.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

inline bool is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline void validate_perm(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree)
    throw ParseError("permutation has degree " + std::to_string(p.size()) +
                     ", expected " + std::to_string(degree));
  std::vector<bool> seen(degree, false);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v])
      throw ParseError("invalid permutation image array");
    seen[v] = true;
  }
}

}  // namespace equistab
