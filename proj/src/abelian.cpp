#include "equistab/abelian.hpp"

#include <algorithm>
#include <map>

#include "equistab/errors.hpp"

namespace equistab {

namespace {

std::map<long long, int> factorize(long long n) {
  std::map<long long, int> f;
  for (long long p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  }
  if (n > 1) ++f[n];
  return f;
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// Builds the ascending invariant-factor chain from per-prime exponent lists
/// (each sorted descending).
std::vector<long long> chain_from_primary(
    const std::map<long long, std::vector<int>>& exps) {
  size_t rank = 0;
  for (const auto& [p, es] : exps) rank = std::max(rank, es.size());
  std::vector<long long> desc;
  for (size_t k = 0; k < rank; ++k) {
    long long d = 1;
    for (const auto& [p, es] : exps)
      if (k < es.size()) d *= ipow(p, es[k]);
    desc.push_back(d);
  }
  std::reverse(desc.begin(), desc.end());
  std::erase(desc, 1);
  return desc;
}

}  // namespace

long long FgAbelianGroup::torsion_order() const {
  long long n = 1;
  for (long long d : torsion) n *= d;
  return n;
}

std::string FgAbelianGroup::pretty() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (long long d : torsion) parts.push_back("Z/" + std::to_string(d));
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (size_t i = 1; i < parts.size(); ++i) out += " ⊕ " + parts[i];
  return out;
}

FgAbelianGroup FgAbelianGroup::cyclic(long long n) {
  if (n < 1) throw InternalError("cyclic order must be positive");
  FgAbelianGroup g;
  if (n > 1) g.torsion.push_back(n);
  return g;
}

FgAbelianGroup FgAbelianGroup::from_cyclic_factors(
    const std::vector<long long>& cs) {
  std::map<long long, std::vector<int>> exps;
  for (long long c : cs) {
    if (c < 1) throw InternalError("cyclic order must be positive");
    for (const auto& [p, e] : factorize(c)) exps[p].push_back(e);
  }
  for (auto& [p, es] : exps) std::sort(es.begin(), es.end(), std::greater<>());
  FgAbelianGroup g;
  g.torsion = chain_from_primary(exps);
  return g;
}

FgAbelianGroup FgAbelianGroup::direct_sum(const FgAbelianGroup& a,
                                          const FgAbelianGroup& b) {
  std::vector<long long> cs = a.torsion;
  cs.insert(cs.end(), b.torsion.begin(), b.torsion.end());
  FgAbelianGroup g = from_cyclic_factors(cs);
  g.free_rank = a.free_rank + b.free_rank;
  return g;
}

std::vector<int> commutator_subgroup(const TableGroup& T) {
  std::vector<bool> in(T.n, false);
  std::vector<int> mem;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      mem.push_back(x);
    }
  };
  add(0);
  for (int a = 0; a < T.n; ++a)
    for (int b = 0; b < T.n; ++b)
      add(T.mult[T.mult[T.inv[a]][T.inv[b]]][T.mult[a][b]]);
  for (size_t a = 0; a < mem.size(); ++a)
    for (size_t b = 0; b < mem.size(); ++b) add(T.mult[mem[a]][mem[b]]);
  std::sort(mem.begin(), mem.end());
  return mem;
}

namespace {

/// Invariant factors of an abelian table group via Sylow exponent counting:
/// if p^{r_i} elements satisfy x^{p^i} = e, then r_i - r_{i-1} cyclic factors
/// have p-exponent at least i.
FgAbelianGroup invariant_factors_of_abelian(const TableGroup& A) {
  std::map<long long, std::vector<int>> exps;
  for (const auto& [p, e] : factorize(A.n)) {
    std::vector<int> r(e + 1, 0);
    for (int i = 1; i <= e; ++i) {
      long long pe = ipow(p, i);
      int cnt = 0;
      for (int x = 0; x < A.n; ++x)
        if (A.power(x, pe) == 0) ++cnt;
      int ri = 0;
      while (cnt > 1) {
        cnt /= static_cast<int>(p);
        ++ri;
      }
      r[i] = ri;
    }
    std::vector<int> m(e + 1, 0);
    for (int i = 1; i <= e; ++i) m[i] = r[i] - r[i - 1];
    for (int j = 1; j <= m[1]; ++j) {
      int ej = 0;
      for (int i = 1; i <= e; ++i)
        if (m[i] >= j) ++ej;
      exps[p].push_back(ej);
    }
  }
  FgAbelianGroup g;
  g.torsion = chain_from_primary(exps);
  return g;
}

}  // namespace

FgAbelianGroup abelianization(const TableGroup& T) {
  std::vector<int> comm = commutator_subgroup(T);
  std::vector<bool> in_comm(T.n, false);
  for (int c : comm) in_comm[c] = true;

  std::vector<int> coset_of(T.n, -1);
  std::vector<int> reps;
  for (int x = 0; x < T.n; ++x) {
    if (coset_of[x] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : comm) coset_of[T.mult[x][h]] = c;
  }

  TableGroup A;
  A.n = static_cast<int>(reps.size());
  A.mult.assign(A.n, std::vector<int>(A.n));
  A.inv.resize(A.n);
  for (int a = 0; a < A.n; ++a) {
    A.inv[a] = coset_of[T.inv[reps[a]]];
    for (int b = 0; b < A.n; ++b)
      A.mult[a][b] = coset_of[T.mult[reps[a]][reps[b]]];
  }
  return invariant_factors_of_abelian(A);
}

FgAbelianGroup abelianization(const PermGroup& G) {
  return abelianization(TableGroup::from_perm_group(G));
}

FgAbelianGroup abelianization(const QuotientGroup& Q) {
  return abelianization(TableGroup::from_quotient(Q));
}

}  // namespace equistab
