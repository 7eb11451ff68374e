#include "equistab/group.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "equistab/errors.hpp"

namespace equistab {

PermGroup PermGroup::enumerate(int degree, std::vector<Perm> generators,
                               int cap) {
  if (degree <= 0) throw ParseError("group degree must be positive");
  for (const Perm& g : generators) validate_perm(g, degree);

  PermGroup G;
  G.degree_ = degree;
  G.generators_ = generators;

  std::map<Perm, int> index;
  G.elements_.push_back(identity_perm(degree));
  G.provenance_.push_back({-1, -1});
  index[G.elements_[0]] = 0;

  for (size_t head = 0; head < G.elements_.size(); ++head) {
    Perm cur = G.elements_[head];  // copy: elements_ may reallocate
    for (size_t gi = 0; gi < generators.size(); ++gi) {
      Perm next = compose(cur, generators[gi]);
      if (index.emplace(next, static_cast<int>(G.elements_.size())).second) {
        if (static_cast<int>(G.elements_.size()) >= cap)
          throw SizeLimitError("group order exceeds the cap of " +
                               std::to_string(cap) + " elements");
        G.elements_.push_back(std::move(next));
        G.provenance_.push_back({static_cast<int>(head), static_cast<int>(gi)});
      }
    }
  }

  const int n = static_cast<int>(G.elements_.size());
  G.order_ = n;
  if (n > 65535) throw SizeLimitError("group order exceeds table limit");

  // Generator columns by direct composition, the rest via BFS words:
  // mult(i, p*g) = mult(mult(i, p), g).
  std::vector<int> gen_elem(G.generators_.size());
  for (size_t gi = 0; gi < G.generators_.size(); ++gi)
    gen_elem[gi] = index.at(G.generators_[gi]);

  G.mult_.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (size_t gi = 0; gi < G.generators_.size(); ++gi)
      G.mult_[i * n + gen_elem[gi]] =
          static_cast<uint16_t>(index.at(compose(G.elements_[i], G.generators_[gi])));
    G.mult_[i * n + 0] = static_cast<uint16_t>(i);
  }
  for (int j = 1; j < n; ++j) {
    const Provenance pv = G.provenance_[j];
    const int gcol = gen_elem[pv.gen_index];
    if (j == gcol) continue;  // already filled
    for (int i = 0; i < n; ++i)
      G.mult_[i * n + j] = G.mult_[G.mult_[i * n + pv.parent] * n + gcol];
  }

  G.inv_.resize(n);
  for (int i = 0; i < n; ++i) G.inv_[i] = index.at(inverse(G.elements_[i]));
  return G;
}

int PermGroup::element_order(int i) const {
  int ord = 1;
  int x = i;
  while (x != 0) {
    x = mult(x, i);
    ++ord;
  }
  return ord;
}

int PermGroup::index_of(const Perm& p) const {
  for (int i = 0; i < order_; ++i)
    if (elements_[i] == p) return i;
  return -1;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  return a.members < b.members;
}

ElementSet close_subset(const PermGroup& G, const std::vector<int>& seeds) {
  ElementSet in(G.order());
  std::vector<int> mem;
  auto add = [&](int x) {
    if (!in.test(x)) {
      in.set(x);
      mem.push_back(x);
    }
  };
  add(0);
  for (int s : seeds) add(s);
  // In a finite group, closure under products suffices.
  for (size_t a = 0; a < mem.size(); ++a) {
    for (size_t b = 0; b < mem.size(); ++b) {
      add(G.mult(mem[a], mem[b]));
      add(G.mult(mem[b], mem[a]));
    }
  }
  return in;
}

Subgroup make_subgroup(const PermGroup& G, const ElementSet& members) {
  return Subgroup{&G, members, members.count()};
}

Subgroup checked_subgroup(const PermGroup& G, const ElementSet& members) {
  if (!members.test(0)) throw InternalError("subgroup without identity");
  std::vector<int> idx = members.indices();
  for (int a : idx)
    for (int b : idx)
      if (!members.test(G.mult(a, b)))
        throw InternalError("subgroup not closed under composition");
  Subgroup H = make_subgroup(G, members);
  if (G.order() % H.order != 0)
    throw InternalError("Lagrange violation");  // unreachable if closed
  return H;
}

Subgroup trivial_subgroup(const PermGroup& G) {
  ElementSet s(G.order());
  s.set(0);
  return make_subgroup(G, s);
}

Subgroup full_subgroup(const PermGroup& G) {
  ElementSet s(G.order());
  for (int i = 0; i < G.order(); ++i) s.set(i);
  return make_subgroup(G, s);
}

Subgroup conjugate_subgroup(const PermGroup& G, const Subgroup& H, int g) {
  ElementSet s(G.order());
  for (int x : H.members.indices()) s.set(G.conj(g, x));
  return make_subgroup(G, s);
}

bool is_normal_in(const PermGroup& G, const Subgroup& H, const Subgroup& N) {
  for (int g : N.members.indices())
    for (int x : H.members.indices())
      if (!H.contains(G.conj(g, x))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const PermGroup& G) {
  std::set<ElementSet> found;
  for (int g = 0; g < G.order(); ++g) found.insert(close_subset(G, {g}));

  std::vector<ElementSet> list(found.begin(), found.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t snapshot = list.size();
    for (size_t a = 0; a < snapshot; ++a) {
      for (size_t b = a + 1; b < snapshot; ++b) {
        ElementSet u = list[a] | list[b];
        if (found.count(u)) continue;
        ElementSet closed = close_subset(G, u.indices());
        if (found.insert(closed).second) {
          list.push_back(closed);
          grew = true;
        }
        found.insert(u) /* cache join keys to skip recomputation */;
      }
    }
  }

  std::vector<Subgroup> out;
  // 'found' may contain cached non-closed join keys; keep closed sets only.
  std::set<ElementSet> closed_only;
  for (const ElementSet& s : list) closed_only.insert(s);
  out.reserve(closed_only.size());
  for (const ElementSet& s : closed_only) out.push_back(make_subgroup(G, s));
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<SubgroupConjClass> conjugacy_classes_of_subgroups(
    const PermGroup& G, const std::vector<Subgroup>& subgroups) {
  std::map<ElementSet, int> pos;
  for (size_t i = 0; i < subgroups.size(); ++i)
    pos[subgroups[i].members] = static_cast<int>(i);

  std::vector<bool> seen(subgroups.size(), false);
  std::vector<SubgroupConjClass> classes;
  for (size_t i = 0; i < subgroups.size(); ++i) {
    if (seen[i]) continue;
    std::set<int> orbit;
    for (int g = 0; g < G.order(); ++g) {
      Subgroup c = conjugate_subgroup(G, subgroups[i], g);
      auto it = pos.find(c.members);
      if (it == pos.end())
        throw InternalError("conjugate subgroup missing from lattice");
      orbit.insert(it->second);
    }
    SubgroupConjClass cls;
    cls.member_indices.assign(orbit.begin(), orbit.end());
    cls.representative = subgroups[cls.member_indices.front()];
    cls.class_order = cls.representative.order;
    for (int m : cls.member_indices) seen[m] = true;
    classes.push_back(std::move(cls));
  }

  std::sort(classes.begin(), classes.end(),
            [](const SubgroupConjClass& a, const SubgroupConjClass& b) {
              if (a.class_order != b.class_order)
                return a.class_order > b.class_order;
              return a.representative.members < b.representative.members;
            });
  return classes;
}

Subgroup normalizer(const PermGroup& G, const Subgroup& H) {
  ElementSet s(G.order());
  const std::vector<int> hs = H.members.indices();
  for (int g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (int x : hs) {
      if (!H.contains(G.conj(g, x))) {
        ok = false;
        break;
      }
    }
    if (ok) s.set(g);
  }
  return make_subgroup(G, s);
}

Subgroup intersect(const Subgroup& H, const Subgroup& K) {
  if (H.parent != K.parent)
    throw ParseError("subgroup intersection requires a common parent group");
  return make_subgroup(*H.parent, H.members & K.members);
}

int SubgroupLattice::index_of(const ElementSet& members) const {
  for (size_t i = 0; i < subgroups.size(); ++i)
    if (subgroups[i].members == members) return static_cast<int>(i);
  return -1;
}

SubgroupLattice build_lattice(const PermGroup& G) {
  SubgroupLattice lat;
  lat.group = &G;
  lat.subgroups = all_subgroups(G);
  lat.classes = conjugacy_classes_of_subgroups(G, lat.subgroups);
  lat.class_of.assign(lat.subgroups.size(), -1);
  for (size_t c = 0; c < lat.classes.size(); ++c)
    for (int m : lat.classes[c].member_indices)
      lat.class_of[m] = static_cast<int>(c);

  const int n = lat.num_subgroups();
  lat.minimal_overgroups.assign(n, {});
  for (int i = 0; i < n; ++i) {
    std::vector<int> over;
    for (int j = 0; j < n; ++j)
      if (j != i && lat.subgroups[j].members.contains(lat.subgroups[i].members))
        over.push_back(j);
    for (int j : over) {
      bool minimal = true;
      for (int l : over) {
        if (l == j) continue;
        if (lat.subgroups[j].members.contains(lat.subgroups[l].members)) {
          minimal = false;
          break;
        }
      }
      if (minimal) lat.minimal_overgroups[i].push_back(j);
    }
  }
  return lat;
}

std::vector<int> minimal_overgroups(const Subgroup& H,
                                    const SubgroupLattice& lattice) {
  int idx = lattice.index_of(H);
  if (idx < 0) throw ParseError("subgroup not found in the lattice");
  return lattice.minimal_overgroups[idx];
}

QuotientGroup weyl_group(const PermGroup& G, const Subgroup& H) {
  QuotientGroup Q;
  Q.parent = &G;
  Q.numerator = normalizer(G, H);
  Q.kernel = H;
  if (!is_normal_in(G, H, Q.numerator))
    throw InternalError("H not normal in its normalizer");

  const int n = G.order();
  std::vector<int> coset_of(n, -1);
  for (int g : Q.numerator.members.indices()) {
    if (coset_of[g] >= 0) continue;
    int c = static_cast<int>(Q.coset_reps.size());
    Q.coset_reps.push_back(g);
    for (int h : H.members.indices()) coset_of[G.mult(g, h)] = c;
  }

  const int m = Q.order();
  Q.table.assign(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      Q.table[a][b] = coset_of[G.mult(Q.coset_reps[a], Q.coset_reps[b])];
  return Q;
}

int TableGroup::element_order(int x) const {
  int ord = 1;
  int y = x;
  while (y != 0) {
    y = mult[y][x];
    ++ord;
  }
  return ord;
}

int TableGroup::power(int x, long long e) const {
  int r = 0;
  int base = x;
  while (e > 0) {
    if (e & 1) r = mult[r][base];
    base = mult[base][base];
    e >>= 1;
  }
  return r;
}

TableGroup TableGroup::from_perm_group(const PermGroup& G) {
  TableGroup T;
  T.n = G.order();
  T.mult.assign(T.n, std::vector<int>(T.n));
  T.inv.resize(T.n);
  for (int i = 0; i < T.n; ++i) {
    T.inv[i] = G.inv(i);
    for (int j = 0; j < T.n; ++j) T.mult[i][j] = G.mult(i, j);
  }
  return T;
}

TableGroup TableGroup::from_quotient(const QuotientGroup& Q) {
  TableGroup T;
  T.n = Q.order();
  T.mult = Q.table;
  T.inv.assign(T.n, -1);
  for (int i = 0; i < T.n; ++i)
    for (int j = 0; j < T.n; ++j)
      if (T.mult[i][j] == 0) T.inv[i] = j;
  return T;
}

TableGroup TableGroup::from_cyclic_factors(const std::vector<int>& factors) {
  long long n = 1;
  for (int c : factors) n *= c;
  TableGroup T;
  T.n = static_cast<int>(n);
  auto decode = [&](int x) {
    std::vector<int> t(factors.size());
    for (size_t k = 0; k < factors.size(); ++k) {
      t[k] = x % factors[k];
      x /= factors[k];
    }
    return t;
  };
  auto encode = [&](const std::vector<int>& t) {
    int x = 0;
    for (size_t k = factors.size(); k-- > 0;) x = x * factors[k] + t[k];
    return x;
  };
  T.mult.assign(T.n, std::vector<int>(T.n));
  T.inv.resize(T.n);
  for (int a = 0; a < T.n; ++a) {
    std::vector<int> ta = decode(a), ti(factors.size());
    for (size_t k = 0; k < factors.size(); ++k)
      ti[k] = (factors[k] - ta[k]) % factors[k];
    T.inv[a] = encode(ti);
    for (int b = 0; b < T.n; ++b) {
      std::vector<int> tb = decode(b), tc(factors.size());
      for (size_t k = 0; k < factors.size(); ++k)
        tc[k] = (ta[k] + tb[k]) % factors[k];
      T.mult[a][b] = encode(tc);
    }
  }
  return T;
}

}  // namespace equistab
