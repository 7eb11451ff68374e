#include "equistab/named_groups.hpp"

#include <algorithm>

#include "equistab/errors.hpp"

namespace equistab {

GroupSpec cyclic_group_spec(int n) {
  if (n < 1) throw ParseError("cyclic group needs n >= 1");
  GroupSpec s{"C" + std::to_string(n), std::max(n, 1), {}};
  if (n > 1) {
    Perm rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    s.generators.push_back(rot);
  }
  return s;
}

GroupSpec symmetric_group_spec(int n) {
  if (n < 1) throw ParseError("symmetric group needs n >= 1");
  GroupSpec s{"S" + std::to_string(n), n, {}};
  for (int i = 0; i + 1 < n; ++i) {
    Perm t = identity_perm(n);
    std::swap(t[i], t[i + 1]);
    s.generators.push_back(t);
  }
  return s;
}

GroupSpec alternating_group_spec(int n) {
  if (n < 3) throw ParseError("alternating group needs n >= 3");
  GroupSpec s{"A" + std::to_string(n), n, {}};
  for (int i = 0; i + 2 < n; ++i) {
    Perm c = identity_perm(n);
    c[i] = i + 1;
    c[i + 1] = i + 2;
    c[i + 2] = i;
    s.generators.push_back(c);
  }
  return s;
}

GroupSpec dihedral_group_spec(int n) {
  if (n < 3) throw ParseError("dihedral group needs n >= 3");
  GroupSpec s{"D" + std::to_string(n), n, {}};
  Perm rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  s.generators = {rot, refl};
  return s;
}

GroupSpec quaternion8_spec() {
  // Points 0..7 are 1, i, j, k, -1, -i, -j, -k; generators act by left
  // multiplication by i and j.
  GroupSpec s{"Q8", 8, {}};
  s.generators = {
      Perm{1, 4, 3, 6, 5, 0, 7, 2},  // i
      Perm{2, 7, 4, 1, 6, 3, 0, 5},  // j
  };
  return s;
}

GroupSpec direct_product_spec(const GroupSpec& a, const GroupSpec& b) {
  GroupSpec s{a.name + "x" + b.name, a.degree + b.degree, {}};
  for (const Perm& g : a.generators) {
    Perm p = identity_perm(s.degree);
    for (int i = 0; i < a.degree; ++i) p[i] = g[i];
    s.generators.push_back(p);
  }
  for (const Perm& g : b.generators) {
    Perm p = identity_perm(s.degree);
    for (int i = 0; i < b.degree; ++i) p[a.degree + i] = a.degree + g[i];
    s.generators.push_back(p);
  }
  return s;
}

namespace {

GroupSpec parse_atom(const std::string& name) {
  if (name == "Q8") return quaternion8_spec();
  if (name.size() < 2)
    throw ParseError("unknown group name: " + name);
  char kind = name[0];
  int n = 0;
  try {
    size_t used = 0;
    n = std::stoi(name.substr(1), &used);
    if (used + 1 != name.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw ParseError("unknown group name: " + name);
  }
  switch (kind) {
    case 'C':
      return cyclic_group_spec(n);
    case 'S':
      return symmetric_group_spec(n);
    case 'A':
      return alternating_group_spec(n);
    case 'D':
      return dihedral_group_spec(n);
    default:
      throw ParseError("unknown group name: " + name);
  }
}

}  // namespace

GroupSpec parse_group_name(const std::string& name) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t x = name.find('x', start);
    if (x == std::string::npos) {
      parts.push_back(name.substr(start));
      break;
    }
    parts.push_back(name.substr(start, x - start));
    start = x + 1;
  }
  if (parts.empty() || parts.front().empty())
    throw ParseError("empty group name");
  GroupSpec spec = parse_atom(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i)
    spec = direct_product_spec(spec, parse_atom(parts[i]));
  spec.name = name;
  return spec;
}

}  // namespace equistab
