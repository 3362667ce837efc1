#include <random>
#include <set>

#include "doctest.h"
#include "heckeforge/group.hpp"

using namespace heckeforge;

namespace {

GroupElement random_element(std::mt19937_64& rng, int r, int n) {
  std::uniform_int_distribution<int> e(0, r - 1);
  std::vector<int> exps(n), perm(n);
  for (int i = 0; i < n; ++i) {
    exps[i] = e(rng);
    perm[i] = i;
  }
  std::shuffle(perm.begin(), perm.end(), rng);
  return GroupElement::make(r, exps, perm);
}

// Number of r-tuples of partitions of total size n: the count of (a,k)-cycle multisets.
long multipartitions(int r, int n) {
  std::vector<long> part(n + 1, 0);
  part[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) part[m] += part[m - k];
  std::vector<long> acc(n + 1, 0);
  acc[0] = 1;
  for (int t = 0; t < r; ++t) {
    std::vector<long> next(n + 1, 0);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) next[a + b] += acc[a] * part[b];
    acc = next;
  }
  return acc[n];
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("multiplication conventions") {
    GroupElement g = multiply(GroupElement::xi(2, 2, 2), GroupElement::cycle(2, 2, {1, 2}));
    GroupElement expected = multiply(GroupElement::xi(2, 2, 1), GroupElement::xi(2, 2, 2));
    CHECK(multiply(g, g) == expected);
    CHECK(matrix(expected, RepKind::Faithful) == CycloMatrix::identity(2) - CycloMatrix::identity(2) - CycloMatrix::identity(2));
    // v_1 -> -v_2, v_2 -> v_1
    CHECK(act(g, 0, RepKind::Faithful).index == 1);
    CHECK(act(g, 0, RepKind::Faithful).exp == 1);
    CHECK(act(g, 1, RepKind::Faithful).index == 0);
    CHECK(act(g, 1, RepKind::Faithful).exp == 0);
    CHECK(multiply(g, GroupElement::identity(2, 2)) == g);
    CHECK_THROWS_AS(multiply(g, GroupElement::identity(3, 2)), std::invalid_argument);
  }

  TEST_CASE("matrix of a product is the product of matrices") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 50; ++t) {
      GroupElement g = random_element(rng, 3, 3), h = random_element(rng, 3, 3);
      CHECK(matrix(multiply(g, h), RepKind::Faithful) == matrix(g, RepKind::Faithful) * matrix(h, RepKind::Faithful));
      CHECK(matrix(multiply(g, h), RepKind::Permutation) ==
            matrix(g, RepKind::Permutation) * matrix(h, RepKind::Permutation));
      CHECK(matrix(inverse(g), RepKind::Faithful) * matrix(g, RepKind::Faithful) == CycloMatrix::identity(3));
      CHECK(det(g, RepKind::Faithful) == determinant(matrix(g, RepKind::Faithful)));
    }
  }

  TEST_CASE("action and coaction") {
    GroupElement x1 = GroupElement::xi(3, 3, 1);
    CHECK(act(x1, 0, RepKind::Faithful).exp == 1);
    CHECK(act(x1, 0, RepKind::Permutation).exp == 0);
    CHECK(coact(x1, 0, RepKind::Faithful).exp == 2);
    // (g x_i)(v_j) = x_i(g^{-1} v_j) on all basis pairs.
    std::mt19937_64 rng(2);
    for (int t = 0; t < 30; ++t) {
      GroupElement g = random_element(rng, 4, 3);
      GroupElement gi = inverse(g);
      for (RepKind rep : {RepKind::Faithful, RepKind::Permutation}) {
        for (int i = 0; i < 3; ++i) {
          ScaledIndex gx = coact(g, i, rep);
          for (int j = 0; j < 3; ++j) {
            CycloNum lhs = gx.index == j ? root_of_unity(4, gx.exp) : CycloNum(0);
            ScaledIndex gv = act(gi, j, rep);
            CycloNum rhs = gv.index == i ? root_of_unity(4, gv.exp) : CycloNum(0);
            CHECK(lhs == rhs);
          }
        }
      }
    }
  }

  TEST_CASE("subgroup membership") {
    GroupElement g = multiply(GroupElement::xi(3, 3, 1), GroupElement::xi(3, 3, 2, -1));
    CHECK(in_subgroup(g, 3));
    CHECK(in_subgroup(GroupElement::identity(4, 3), 4));
    CHECK_FALSE(in_subgroup(GroupElement::xi(2, 3, 1), 2));
    CHECK_THROWS_AS(in_subgroup(g, 2), std::invalid_argument);
  }

  TEST_CASE("cycle types") {
    GroupElement c = GroupElement::cycle(3, 4, {1, 2, 3});
    CycleType expected{{{0, 3}, 1}, {{0, 1}, 1}};
    CHECK(cycle_type(c) == expected);
    Group g314(3, 1, 4);
    std::set<std::size_t> cls;
    for (int b = 0; b < 3; ++b) cls.insert(g314.class_of(multiply(GroupElement::xi(3, 4, 3, b), c)));
    CHECK(cls.size() == 3);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 30; ++t) {
      GroupElement x = random_element(rng, 3, 4), h = random_element(rng, 3, 4);
      CHECK(conjugate_in_full_group(x, conjugate_by(x, h)));
    }
  }

  TEST_CASE("centralizer examples") {
    Group g314(3, 1, 4);
    CHECK(g314.order() == 1944);
    GroupElement c = GroupElement::cycle(3, 4, {1, 2, 3});
    CHECK(g314.centralizer(c).size() == 27);
    CHECK(centralizer_order_formula(c) == 27);
    CHECK(centralizer(GroupElement::identity(2, 3), 1).size() == 48);
    std::size_t total = 0;
    for (const auto& cl : conjugacy_classes(2, 2, 4)) total += cl.size;
    CHECK(total == 192);
  }

  TEST_CASE("group orders and class equation") {
    for (auto [r, p, n] : std::vector<std::tuple<int, int, int>>{
             {1, 1, 3}, {2, 1, 2}, {2, 2, 3}, {3, 1, 3}, {3, 3, 3}, {4, 2, 3}, {2, 1, 4}}) {
      Group g(r, p, n);
      std::size_t expected = 1;
      for (int i = 1; i <= n; ++i) expected *= static_cast<std::size_t>(i * r);
      CHECK(g.order() == expected / p);
      std::size_t total = 0;
      for (const auto& cl : g.classes()) {
        total += cl.size;
        if (p == 1) CHECK(cl.size * centralizer_order_formula(cl.representative) == g.order());
        CHECK(g.centralizer(cl.representative).size() * cl.size == g.order());
      }
      CHECK(total == g.order());
      if (p == 1) CHECK(static_cast<long>(g.classes().size()) == multipartitions(r, n));
    }
    CHECK(Group(2, 1, 2).classes().size() == 5);
    CHECK(Group(1, 1, 3).classes().size() == 3);
  }

  TEST_CASE("centralizer formula matches brute force") {
    for (auto [r, n] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}}) {
      Group g(r, 1, n);
      for (const auto& cl : g.classes())
        CHECK(g.centralizer(cl.representative).size() == centralizer_order_formula(cl.representative));
    }
  }

  TEST_CASE("classes are unions of cycle types and representatives are minimal") {
    Group g(2, 1, 3);
    for (std::size_t i = 0; i < g.order(); ++i) {
      const auto& cl = g.classes()[g.class_of_index(i)];
      CHECK(cycle_type(g.element(i)) == cycle_type(cl.representative));
      CHECK_FALSE(g.element(i) < cl.representative);
    }
  }

  TEST_CASE("classes may split in proper subgroups") {
    // xi_1 xi_2^{-1} and xi_1^{-1} xi_2 are G(2,2,2)-conjugate only through elements outside.
    Group g(4, 4, 2);
    std::size_t cycle_types = 0;
    std::set<CycleType> seen;
    for (const auto& cl : g.classes())
      if (seen.insert(cycle_type(cl.representative)).second) ++cycle_types;
    CHECK(g.classes().size() > cycle_types);
  }

  TEST_CASE("budget") {
    CHECK_THROWS_AS(Group(4, 1, 6, 1000), BudgetExceeded);
    CHECK_THROWS_AS(Group(4, 3, 3), std::invalid_argument);
  }
}
