#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "equistab/abelian.hpp"
#include "oracles.hpp"

using namespace equistab;

TEST_CASE("invariant factor recombination, known cases") {
  using V = std::vector<long long>;
  CHECK(FgAbelianGroup::from_cyclic_factors({2, 3}).torsion == V{6});
  CHECK(FgAbelianGroup::from_cyclic_factors({2, 2}).torsion == V{2, 2});
  CHECK(FgAbelianGroup::from_cyclic_factors({2, 4}).torsion == V{2, 4});
  CHECK(FgAbelianGroup::from_cyclic_factors({6, 4}).torsion == V{2, 12});
  CHECK(FgAbelianGroup::from_cyclic_factors({1, 1}).torsion == V{});
  CHECK(FgAbelianGroup::from_cyclic_factors({12, 18, 10}).torsion ==
        V{2, 6, 180});
}

TEST_CASE("recombination matches the torsion-count oracle") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> len(1, 5);
  std::uniform_int_distribution<long long> fac(2, 50);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<long long> cs;
    long long prod = 1;
    int m = len(rng);
    for (int i = 0; i < m; ++i) {
      long long c = fac(rng);
      if (prod * c > 10000) break;
      prod *= c;
      cs.push_back(c);
    }
    if (cs.empty()) cs.push_back(2), prod = 2;
    CAPTURE(cs);

    FgAbelianGroup g = FgAbelianGroup::from_cyclic_factors(cs);
    // divisibility chain with entries >= 2
    for (size_t i = 0; i + 1 < g.torsion.size(); ++i)
      CHECK(g.torsion[i + 1] % g.torsion[i] == 0);
    for (long long d : g.torsion) CHECK(d >= 2);
    CHECK(g.torsion_order() == prod);
    // same k-torsion counts for every k up to the group order
    for (long long k = 1; k <= prod; ++k)
      CHECK(oracle::count_k_torsion(cs, k) ==
            oracle::count_k_torsion(g.torsion, k));
  }
}

TEST_CASE("table-group abelianization agrees with factor recombination") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(1, 3);
  std::uniform_int_distribution<int> fac(2, 9);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> cs;
    long long prod = 1;
    int m = len(rng);
    for (int i = 0; i < m; ++i) {
      int c = fac(rng);
      if (prod * c > 200) break;
      prod *= c;
      cs.push_back(c);
    }
    if (cs.empty()) cs.push_back(2);
    CAPTURE(cs);
    TableGroup T = TableGroup::from_cyclic_factors(cs);
    std::vector<long long> csl(cs.begin(), cs.end());
    CHECK(abelianization(T) == FgAbelianGroup::from_cyclic_factors(csl));
  }
}

TEST_CASE("direct sums") {
  FgAbelianGroup a{1, {2}};
  FgAbelianGroup b{0, {3}};
  FgAbelianGroup s = FgAbelianGroup::direct_sum(a, b);
  CHECK(s.free_rank == 1);
  CHECK(s.torsion == std::vector<long long>{6});
}

TEST_CASE("pretty printing") {
  CHECK(FgAbelianGroup{}.pretty() == "0");
  CHECK(FgAbelianGroup{1, {}}.pretty() == "Z");
  CHECK(FgAbelianGroup{2, {}}.pretty() == "Z^2");
  CHECK((FgAbelianGroup{0, {2, 2}}.pretty()) == "Z/2 ⊕ Z/2");
  CHECK((FgAbelianGroup{2, {2, 6}}.pretty()) == "Z^2 ⊕ Z/2 ⊕ Z/6");
}
