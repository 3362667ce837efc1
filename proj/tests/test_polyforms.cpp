#include <random>

#include "doctest.h"
#include "heckeforge/polyforms.hpp"

using namespace heckeforge;

namespace {

Polynomial v(int n, int i) { return Polynomial::variable(n, i - 1); }

Polynomial random_poly(std::mt19937_64& rng, int n, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg), c(-3, 3);
  Polynomial p(n);
  for (int t = 0; t < 4; ++t) {
    Exponents e(n);
    for (auto& a : e) a = deg(rng) / n;
    p.add_term(e, CycloNum(c(rng)));
  }
  return p;
}

PolyForm random_form(std::mt19937_64& rng, int n, int max_deg) {
  PolyForm w(n);
  for (const auto& s : subsets_of_size(n, 1)) w.add(s, random_poly(rng, n, max_deg));
  for (const auto& s : subsets_of_size(n, 2)) w.add(s, random_poly(rng, n, max_deg));
  return w;
}

std::vector<GroupElement> all_elements(int r, int p, int n) { return Group(r, p, n).elements(); }

}  // namespace

TEST_SUITE("polyforms") {
  TEST_CASE("substitution action") {
    GroupElement t = GroupElement::cycle(1, 2, {1, 2});
    Polynomial f = v(2, 1) * v(2, 2).pow(2);
    for (RepKind rep : {RepKind::Faithful, RepKind::Permutation})
      CHECK(act_poly(t, f, rep) == v(2, 1).pow(2) * v(2, 2));
    PolyForm w = PolyForm::from(Polynomial::constant(2, 1), {0, 1});
    CHECK(act_form(GroupElement::xi(2, 2, 1), w, RepKind::Faithful) == w * CycloNum(-1));
    CHECK(act_form(GroupElement::xi(2, 2, 1), w, RepKind::Permutation) == w);
    CHECK(act_form(GroupElement::cycle(2, 2, {1, 2}), w, RepKind::Permutation) == w * CycloNum(-1));
  }

  TEST_CASE("action axiom and bidegree preservation") {
    std::mt19937_64 rng(17);
    auto elems = all_elements(3, 1, 3);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    for (int t = 0; t < 30; ++t) {
      const auto& g = elems[pick(rng)];
      const auto& h = elems[pick(rng)];
      PolyForm w = random_form(rng, 3, 4);
      for (RepKind rep : {RepKind::Faithful, RepKind::Permutation}) {
        PolyForm gw = act_form(g, w, rep);
        CHECK(act_form(h, gw, rep) == act_form(multiply(h, g), w, rep));
        for (const auto& [s, p] : w.components()) {
          // Each homogeneous piece lands in the same bidegree.
          for (const auto& [e, c] : p.terms()) {
            PolyForm piece = PolyForm::from(Polynomial::monomial(3, e, c), s);
            PolyForm img = act_form(g, piece, rep);
            REQUIRE(img.components().size() == 1);
            CHECK(img.components().begin()->first.size() == s.size());
            CHECK(img.poly_degree() == piece.poly_degree());
          }
        }
      }
    }
  }

  TEST_CASE("elementary symmetric functions") {
    std::vector<Polynomial> vars{v(3, 1), v(3, 2), v(3, 3)};
    CHECK(elementary_symmetric(2, vars) == v(3, 1) * v(3, 2) + v(3, 1) * v(3, 3) + v(3, 2) * v(3, 3));
    CHECK(elementary_symmetric(3, vars) == v(3, 1) * v(3, 2) * v(3, 3));
  }

  TEST_CASE("invariant ring generators") {
    auto gens = invariant_ring_generators(2, 1, 2);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == v(2, 1).pow(2) + v(2, 2).pow(2));
    CHECK(gens[1] == v(2, 1).pow(2) * v(2, 2).pow(2));
    CHECK(gens[0].degree() * gens[1].degree() == static_cast<int>(Group(2, 1, 2).order()));
    for (auto [r, p, m] : std::vector<std::tuple<int, int, int>>{{3, 3, 3}, {2, 2, 3}, {4, 2, 3}, {3, 1, 2}}) {
      Group g(r, p, m);
      auto fs = invariant_ring_generators(r, p, m);
      int prod = 1;
      for (const auto& f : fs) {
        prod *= f.degree();
        for (const auto& h : g.elements()) CHECK(act_poly(h, f, RepKind::Faithful) == f);
      }
      CHECK(prod == static_cast<int>(g.order()));
    }
  }

  TEST_CASE("basic derivations") {
    PolyForm theta1(2);
    theta1.add({0}, v(2, 1));
    theta1.add({1}, v(2, 2));
    CHECK(basic_derivations(2, 1, 2)[0] == theta1);
    CHECK(basic_derivations(3, 3, 2)[0] == theta1);
    PolyForm theta2(2);
    theta2.add({0}, v(2, 1).pow(3));
    theta2.add({1}, v(2, 2).pow(3));
    CHECK(basic_derivations(2, 1, 2)[1] == theta2);
    PolyForm theta2pr(2);
    theta2pr.add({0}, v(2, 2));
    theta2pr.add({1}, v(2, 1));
    CHECK(basic_derivations(2, 2, 2)[1] == theta2pr);
  }

  TEST_CASE("Solomon criterion") {
    for (auto [r, p, m] : std::vector<std::tuple<int, int, int>>{
             {2, 1, 2}, {2, 2, 2}, {3, 1, 2}, {3, 3, 2}, {4, 2, 2}, {2, 1, 3}, {2, 2, 3}, {3, 3, 3}}) {
      auto res = solomon_check(basic_derivations(r, p, m), all_elements(r, p, m), RepKind::Faithful);
      CHECK(res.invariant);
      CHECK(res.determinant_is_Q);
    }
    auto th = basic_derivations(2, 1, 2);
    th[1] = th[0];
    auto rep = solomon_check(th, all_elements(2, 1, 2), RepKind::Faithful);
    CHECK(rep.invariant);
    CHECK_FALSE(rep.determinant_is_Q);
    CHECK(rep.determinant.is_zero());
  }

  TEST_CASE("nonfaithful block derivations") {
    auto elems = all_elements(2, 1, 2);
    auto remark = solomon_check(remark_block_derivations(2, 2), elems, RepKind::Permutation);
    CHECK(remark.invariant);
    CHECK_FALSE(remark.determinant_is_Q);
    // det = v1 v2^3 - v1^3 v2 while Q is a single root line.
    CHECK(remark.determinant == v(2, 1) * v(2, 2).pow(3) - v(2, 1).pow(3) * v(2, 2));
    CHECK(remark.Q.degree() == 1);
    auto corrected = solomon_check(symmetric_group_derivations(2), elems, RepKind::Permutation);
    CHECK(corrected.invariant);
    CHECK(corrected.determinant_is_Q);
    CHECK(solomon_check(symmetric_group_derivations(3), all_elements(3, 1, 3), RepKind::Permutation).determinant_is_Q);
  }

  TEST_CASE("character tables") {
    auto elems = all_elements(3, 1, 2);
    CHECK(CharacterTable::trivial(elems).is_multiplicative());
    std::vector<CycloNum> dets;
    for (const auto& g : elems) dets.push_back(det(g, RepKind::Faithful));
    CharacterTable d(elems, dets);
    CHECK(d.is_multiplicative());
    CHECK_FALSE(d.is_trivial());
    dets[5] = dets[5] * root_of_unity(3, 1);
    CHECK_FALSE(CharacterTable(elems, dets).is_multiplicative());
    // Not closed under multiplication.
    std::vector<GroupElement> partial(elems.begin(), elems.begin() + 5);
    CHECK_FALSE(CharacterTable::trivial(partial).is_multiplicative());
  }

  TEST_CASE("Reynolds basis examples") {
    auto s2 = all_elements(1, 1, 2);
    std::vector<CycloVector> std2{{1, 0}, {0, 1}};
    auto b = reynolds_semiinvariant_basis(s2, CharacterTable::trivial(s2), RepKind::Faithful, 1, 0, std2);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == PolyForm::from(v(2, 1) + v(2, 2)));

    std::vector<GroupElement> one{GroupElement::identity(3, 3)};
    std::vector<CycloVector> std3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CharacterTable triv = CharacterTable::trivial(one);
    CHECK(reynolds_semiinvariant_basis(one, triv, RepKind::Faithful, 2, 1, std3).size() == 6 * 3);
    CHECK(reynolds_semiinvariant_basis(one, triv, RepKind::Faithful, 0, 0, {}).size() == 1);
    CHECK(reynolds_semiinvariant_basis(one, triv, RepKind::Faithful, 1, 0, {}).empty());

    // Z((1,2,3)) in S_4 acting on its fixed space.
    Group s4(1, 1, 4);
    GroupElement c = GroupElement::cycle(1, 4, {1, 2, 3});
    auto z = s4.centralizer(c);
    std::vector<CycloVector> fixed{{1, 1, 1, 0}, {0, 0, 0, 1}};
    auto fb = reynolds_semiinvariant_basis(z, CharacterTable::trivial(z), RepKind::Faithful, 1, 0, fixed);
    CHECK(fb.size() == 2);
  }

  TEST_CASE("Reynolds projector properties") {
    std::mt19937_64 rng(23);
    Group g(3, 1, 2);
    auto elems = g.elements();
    std::vector<CycloNum> dets;
    for (const auto& h : elems) dets.push_back(det(h, RepKind::Faithful));
    CharacterTable chi(elems, dets);
    std::vector<CycloVector> basis{{1, 0}, {0, 1}};
    std::vector<CycloVector> reversed{{0, 1}, {1, 0}};
    for (int d = 0; d <= 5; ++d)
      for (int k = 0; k <= 2; ++k) {
        auto fast = reynolds_semiinvariant_basis(elems, chi, RepKind::Faithful, d, k, basis);
        auto slow = reynolds_semiinvariant_basis(elems, chi, RepKind::Faithful, d, k, basis, {true});
        CHECK(fast == slow);
        CHECK(reynolds_semiinvariant_basis(elems, chi, RepKind::Faithful, d, k, reversed).size() == fast.size());
        for (const auto& s : fast)
          for (const auto& h : elems) CHECK(act_form(h, s, RepKind::Faithful) == s * chi.value(h));
      }
    // Idempotence on random forms.
    for (int t = 0; t < 5; ++t) {
      PolyForm w = random_form(rng, 2, 3);
      PolyForm p1 = reynolds_apply(elems, chi, RepKind::Faithful, basis, w);
      CHECK(reynolds_apply(elems, chi, RepKind::Faithful, basis, p1) == p1);
    }
  }

  TEST_CASE("Reynolds on a non-monomial subspace basis") {
    Group s3(1, 1, 3);
    auto elems = s3.elements();
    std::vector<CycloNum> sgn;
    for (const auto& h : elems) sgn.push_back(det(h, RepKind::Faithful));
    CharacterTable chi(elems, sgn);
    // The reflection representation of S_3 inside C^3.
    std::vector<CycloVector> refl{{1, -1, 0}, {0, 1, -1}};
    auto b = reynolds_semiinvariant_basis(elems, chi, RepKind::Faithful, 3, 0, refl);
    CHECK(b.size() == 1);  // the Vandermonde
    auto b0 = reynolds_semiinvariant_basis(elems, chi, RepKind::Faithful, 0, 2, refl);
    CHECK(b0.size() == 1);  // the volume form transforms by the sign
  }

  TEST_CASE("text format") {
    PolyForm w = PolyForm::from(v(2, 1).pow(2) * CycloNum(3), {0, 1});
    CHECK(w.to_string() == "3 * v1^2 ^ x_{1}^x_{2}");
    CHECK(Polynomial::constant(1, root_of_unity(3, 1)).to_string() == "(1*z3^1)");
  }
}
