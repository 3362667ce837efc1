#include <functional>
#include <random>

#include "doctest.h"
#include "heckeforge/hochschild.hpp"

using namespace heckeforge;

namespace {

CycloVector vec(std::initializer_list<long> xs) {
  CycloVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

bool same_span(const std::vector<CycloVector>& a, const std::vector<CycloVector>& b) {
  return span_basis(a) == span_basis(b);
}

std::vector<std::size_t> dims(const ClassComponent& c) {
  std::vector<std::size_t> out;
  for (const auto& [d, v] : c.dims_by_degree) out.push_back(v);
  return out;
}

bool same_class(const Group& G, const GroupElement& a, const GroupElement& b) {
  return G.class_of(a) == G.class_of(b);
}

// Direct enumeration of exponent vectors over the base generators.
std::uint64_t enumerate_dimension(const FreeModuleDescription& f, int d) {
  std::uint64_t total = 0;
  std::function<std::uint64_t(std::size_t, int)> count = [&](std::size_t i, int left) -> std::uint64_t {
    if (left < 0) return 0;
    if (i == f.base_generator_degrees.size()) return left == 0 ? 1 : 0;
    std::uint64_t s = 0;
    for (int e = 0; e * f.base_generator_degrees[i] <= left; ++e) s += count(i + 1, left - e * f.base_generator_degrees[i]);
    return s;
  };
  for (int g : f.module_generator_degrees) total += count(0, d - g);
  return total;
}

}  // namespace

TEST_SUITE("hochschild") {
  TEST_CASE("fixed and perpendicular spaces") {
    GroupElement g = GroupElement::cycle(1, 4, {1, 2, 3});
    auto fixed = fixed_space(g, RepKind::Faithful);
    CHECK(fixed == std::vector<CycloVector>{vec({1, 1, 1, 0}), vec({0, 0, 0, 1})});
    auto perp = perp_space(g, RepKind::Faithful);
    CHECK(perp.size() == 2);
    CHECK(same_span(perp, {vec({1, -1, 0, 0}), vec({0, 1, -1, 0})}));

    auto id = GroupElement::identity(3, 3);
    CHECK(fixed_space(id, RepKind::Faithful).size() == 3);
    CHECK(perp_space(id, RepKind::Faithful).empty());

    auto x = GroupElement::xi(3, 3, 1);
    CHECK(fixed_space(x, RepKind::Permutation).size() == 3);
    CHECK(perp_space(x, RepKind::Permutation).empty());
    CHECK(fixed_space(x, RepKind::Faithful).size() == 2);
  }

  TEST_CASE("fixed plus perp spans V") {
    Group G(3, 1, 3);
    for (RepKind rep : {RepKind::Faithful, RepKind::Permutation})
      for (const auto& g : G.elements()) {
        auto all = fixed_space(g, rep);
        auto perp = perp_space(g, rep);
        all.insert(all.end(), perp.begin(), perp.end());
        CHECK(all.size() == 3);
        CHECK(rank(CycloMatrix::from_rows(all)) == 3);
      }
  }

  TEST_CASE("Hochschild character values") {
    auto g = GroupElement::cycle(1, 4, {1, 2, 3});
    CHECK(hochschild_character(g, 1, RepKind::Faithful).value(g).is_one());

    auto g2 = GroupElement::cycle(2, 4, {1, 2, 3});
    auto h2 = multiply(multiply(GroupElement::xi(2, 4, 1), GroupElement::xi(2, 4, 2)), GroupElement::xi(2, 4, 3));
    CHECK(hochschild_character(g2, 1, RepKind::Faithful).value(h2).is_one());

    // xi_1 xi_2 xi_3 xi_4^{-3} acts as zeta_3 on span{v1,v2,v3}, so det on the 2-dim perp is zeta_3^2.
    auto g3 = GroupElement::cycle(3, 4, {1, 2, 3});
    auto h3 = GroupElement::make(3, {1, 1, 1, -3}, {0, 1, 2, 3});
    CHECK(hochschild_character(g3, 1, RepKind::Faithful).value(h3) == root_of_unity(3, 2));
  }

  TEST_CASE("character is det on perp for every centralizer element") {
    Group G(2, 1, 4);
    for (const auto& cls : G.classes()) {
      const auto& g = cls.representative;
      auto chi = hochschild_character(G, g, RepKind::Faithful);
      CHECK(chi.elements().size() == G.centralizer(g).size());
      CHECK(chi.is_multiplicative());
      if (perp_space(g, RepKind::Faithful).empty()) CHECK(chi.is_trivial());
    }
  }

  TEST_CASE("component examples") {
    Group G333(3, 3, 3);
    auto g = GroupElement::make(3, {1, 2, 0}, {0, 1, 2});
    auto c = hh_component(G333, g, RepKind::Faithful, 2, 5);
    CHECK(c.codim == 2);
    CHECK(dims(c) == std::vector<std::size_t>{0, 0, 1, 0, 0, 1});

    Group G314(3, 1, 4);
    auto e = multiply(GroupElement::cycle(3, 4, {1, 2}), GroupElement::xi(3, 4, 3));
    CHECK(hh_component(G314, e, RepKind::Faithful, 2, 5).is_zero());

    Group G224(2, 2, 4);
    auto d = multiply(GroupElement::xi(2, 4, 1), GroupElement::xi(2, 4, 2));
    CHECK(hh_component(G224, d, RepKind::Faithful, 2, 5).is_zero());
  }

  TEST_CASE("kept bases are semi-invariant") {
    Group G(2, 1, 4);
    auto g = GroupElement::cycle(2, 4, {1, 2, 3});
    ComponentOptions opt;
    opt.keep_basis = true;
    auto c = hh_component(G, g, RepKind::Faithful, 2, 4, opt);
    REQUIRE(c.basis_by_degree);
    SubspaceAction sa(c.chi.elements(), RepKind::Faithful, c.fixed_basis);
    for (const auto& [d, basis] : *c.basis_by_degree) {
      CHECK(basis.size() == c.dims_by_degree.at(d));
      for (const auto& s : basis)
        for (std::size_t h = 0; h < sa.size(); ++h) CHECK(sa.apply(h, s) == s * c.chi.values()[h]);
    }
  }

  TEST_CASE("degree 0 cohomology comes from the identity only") {
    Group G(2, 1, 3);
    for (const auto& report : hh_total(G, RepKind::Faithful, 0, 6)) {
      if (report.component.rep.is_identity()) {
        for (int d = 0; d <= 6; ++d)
          CHECK(report.component.dims_by_degree.at(d) == weighted_monomial_count({2, 4, 6}, d));
      } else {
        CHECK(report.component.is_zero());
      }
    }
  }

  TEST_CASE("nonzero classes for S_4 and WB_4") {
    Group S4(1, 1, 4);
    auto s = hh2_total(1, 1, 4, RepKind::Faithful, 4);
    REQUIRE(s.size() == 2);
    CHECK(same_class(S4, s[0].rep, GroupElement::identity(1, 4)));
    CHECK(same_class(S4, s[1].rep, GroupElement::cycle(1, 4, {1, 2, 3})));

    Group B4(2, 1, 4);
    auto b = hh2_total(2, 1, 4, RepKind::Faithful, 4);
    REQUIRE(b.size() == 3);
    std::vector<GroupElement> expected = {GroupElement::identity(2, 4), GroupElement::cycle(2, 4, {1, 2, 3}),
                                          multiply(GroupElement::xi(2, 4, 2), GroupElement::cycle(2, 4, {1, 2}))};
    for (const auto& want : expected) {
      int hits = 0;
      for (const auto& c : b) hits += same_class(B4, c.rep, want);
      CHECK(hits == 1);
    }
  }

  TEST_CASE("nonfaithful nonzero classes are diagonal or diagonal times a 3-cycle") {
    Group G(3, 1, 4);
    for (const auto& report : hh_total(G, RepKind::Permutation, 2, 2)) {
      const auto& g = report.component.rep;
      auto cycles = permutation_cycles(g);
      std::size_t moved = 0;
      for (const auto& cyc : cycles)
        if (cyc.size() > 1) ++moved;
      bool diagonal = g.is_diagonal();
      bool three = moved == 1 &&
                   std::any_of(cycles.begin(), cycles.end(), [](const auto& cyc) { return cyc.size() == 3; });
      CHECK_MESSAGE(report.component.is_zero() == !(diagonal || three), g.to_string());
    }
  }

  TEST_CASE("vanishing lemma as a property") {
    for (auto [r, n] : {std::pair{3, 3}, std::pair{2, 4}}) {
      Group G(r, 1, n);
      for (RepKind rep : {RepKind::Faithful, RepKind::Permutation})
        for (const auto& g : G.elements())
          for (int m = 0; m <= 3; ++m) {
            auto c = hh_component(G, g, rep, m, 4);
            if (c.is_zero()) continue;
            CHECK(det(g, rep).is_one());
            auto fixed = c.fixed_basis;
            for (const auto& h : c.chi.elements()) {
              // h restricted to V^g is the identity iff V^g lies in V^h.
              auto vh = fixed_space(h, rep);
              auto joined = vh;
              joined.insert(joined.end(), fixed.begin(), fixed.end());
              if (span_basis(joined).size() == vh.size()) CHECK(det(h, rep).is_one());
            }
          }
    }
  }

  TEST_CASE("skipped classes validate at low degree") {
    for (RepKind rep : {RepKind::Faithful, RepKind::Permutation}) {
      Group G(3, 1, 3);
      TotalOptions opt;
      opt.validate_skipped = true;
      for (const auto& report : hh_total(G, rep, 2, 4, opt)) {
        if (!report.skipped) continue;
        REQUIRE(report.skip_validated.has_value());
        CHECK(*report.skip_validated);
      }
    }
  }

  TEST_CASE("codimension one classes contribute nothing in degree 2") {
    for (auto [r, n] : {std::pair{3, 3}, std::pair{2, 4}}) {
      Group G(r, 1, n);
      for (RepKind rep : {RepKind::Faithful, RepKind::Permutation})
        for (const auto& cls : G.classes()) {
          auto c = hh_component(G, cls.representative, rep, 2, 4);
          if (c.codim == 1) CHECK(c.is_zero());
        }
    }
  }

  TEST_CASE("dimensions are invariant under conjugation") {
    std::mt19937_64 rng(11);
    Group G(3, 1, 3);
    std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
    for (RepKind rep : {RepKind::Faithful, RepKind::Permutation})
      for (const auto& cls : G.classes()) {
        const auto& g = cls.representative;
        auto h = G.element(pick(rng));
        auto a = hh_component(G, g, rep, 2, 3);
        auto b = hh_component(G, conjugate_by(g, h), rep, 2, 3);
        CHECK(dims(a) == dims(b));
      }
  }

  TEST_CASE("free module counting agrees with enumeration") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> len(0, 4), deg(1, 5), gdeg(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
      FreeModuleDescription f;
      for (int i = len(rng); i >= 0; --i) f.base_generator_degrees.push_back(deg(rng));
      for (int i = len(rng); i >= 0; --i) f.module_generator_degrees.push_back(gdeg(rng));
      for (int d = 0; d <= 10; ++d) CHECK(f.dimension(d) == enumerate_dimension(f, d));
    }
    CHECK_THROWS_AS(weighted_monomial_count({0, 1}, 2), std::invalid_argument);
  }

  TEST_CASE("catalog closed forms") {
    auto x = catalog::xi_pair(3, 3);
    CHECK(x.base_generator_degrees == std::vector<int>{3});
    CHECK(x.module_generator_degrees == std::vector<int>{2});

    auto m = catalog::minus_two(2, 1, 4);
    CHECK(m.module_generator_degrees == std::vector<int>{0, 4});
    for (int d = 0; d <= 8; ++d) CHECK(m.dimension(d) == weighted_monomial_count({2, 4}, d));
    CHECK(catalog::minus_two(4, 2, 4).is_zero());
    CHECK(catalog::minus_two(6, 3, 4).module_generator_degrees.size() == 2);
    CHECK_THROWS_AS(catalog::minus_two(3, 1, 4), NotApplicable);

    auto s4 = catalog::three_cycle(1, 1, 4);
    for (int d = 0; d <= 6; ++d) CHECK(s4.dimension(d) == weighted_monomial_count({1, 1}, d));
    auto b4 = catalog::three_cycle(2, 1, 4);
    for (int d = 0; d <= 6; ++d) CHECK(b4.dimension(d) == weighted_monomial_count({2, 2}, d));

    // S_n: basic derivations of degrees 0..n-1 over invariants of degrees 1..n.
    auto id = catalog::identity_faithful(1, 1, 4);
    CHECK(id.base_generator_degrees == std::vector<int>{1, 2, 3, 4});
    CHECK(id.module_generator_degrees == std::vector<int>{1, 2, 3, 3, 4, 5});

    // Two eigenvalue blocks under the permutation action give a degree-0 wedge.
    CHECK(catalog::permutation_diagonal({1, 2}).dimension(0) == 1);
    CHECK(catalog::permutation_diagonal({3}).dimension(0) == 0);
    CHECK(catalog::permutation_diagonal_three_cycle({1}).base_generator_degrees == std::vector<int>{1, 1});
  }

  TEST_CASE("catalog applicability") {
    CHECK_THROWS_AS(closed_form_catalog(2, 1, 3, RepKind::Faithful), NotApplicable);
    CHECK_THROWS_AS(closed_form_catalog(2, 1, 2, RepKind::Permutation), NotApplicable);
    CHECK_THROWS_AS(closed_form_catalog(2, 2, 4, RepKind::Permutation), NotApplicable);
    CHECK_NOTHROW(closed_form_catalog(2, 1, 3, RepKind::Permutation));
  }

  TEST_CASE("brute force matches the catalog") {
    struct Case {
      int r, p, n;
      RepKind rep;
    };
    for (auto c : {Case{2, 1, 4, RepKind::Faithful}, Case{3, 3, 4, RepKind::Faithful},
                   Case{2, 1, 3, RepKind::Permutation}, Case{2, 2, 5, RepKind::Permutation}}) {
      int D = c.n == 5 ? 3 : 6;
      auto brute = hh2_total(c.r, c.p, c.n, c.rep, D);
      auto report = compare(brute, closed_form_catalog(c.r, c.p, c.n, c.rep), D);
      CHECK(report.ok());
      CHECK(report.classes_checked > 0);
    }
  }

  TEST_CASE("comparator reports corrupted catalogs") {
    auto brute = hh2_total(2, 1, 4, RepKind::Faithful, 6);
    auto cat = closed_form_catalog(2, 1, 4, RepKind::Faithful);
    for (auto& e : cat)
      for (auto& d : e.module.module_generator_degrees) d += 1;
    auto report = compare(brute, cat, 6);
    CHECK(report.mismatches.size() >= 1);

    // A brute component the catalog has never heard of is also a mismatch.
    auto partial = closed_form_catalog(2, 1, 4, RepKind::Faithful);
    partial.erase(partial.begin());
    CHECK_FALSE(compare(brute, partial, 6).ok());
  }

  TEST_CASE("degree 0 diagonal invariants under the permutation action") {
    Group G(2, 1, 3);
    auto g = GroupElement::xi(2, 3, 1);
    auto c = hh_component(G, g, RepKind::Permutation, 2, 0);
    CHECK(c.dims_by_degree.at(0) == 1);
  }
}
