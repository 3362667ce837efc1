#include <random>

#include "doctest.h"
#include "heckeforge/cyclo.hpp"
#include "support.hpp"

using namespace heckeforge;
using testing_support::random_cyclo;
using testing_support::to_complex;

namespace {

// Independent oracle: Phi_r = prod_{d | r} (x^d - 1)^{mu(r/d)}, assembled with
// integer polynomials by multiplying the mu = 1 factors and dividing by the mu = -1 factors.
int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

std::vector<long> poly_div_monic(std::vector<long> a, const std::vector<long>& b) {
  std::size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    long c = a[i];  // b is monic up to sign of the leading coefficient
    c *= b[db];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::vector<long> moebius_phi(int r) {
  std::vector<long> num{1}, den{1};
  for (int d = 1; d <= r; ++d) {
    if (r % d) continue;
    std::vector<long> f(d + 1, 0);
    f[0] = -1;
    f[d] = 1;
    int mu = moebius(r / d);
    if (mu == 1) num = poly_mul(num, f);
    if (mu == -1) den = poly_mul(den, f);
  }
  return poly_div_monic(num, den);
}

CycloNum eval_poly(const std::vector<Rational>& p, const CycloNum& z) {
  CycloNum acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + CycloNum(p[i]);
  return acc;
}

}  // namespace

TEST_SUITE("cyclo") {
  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
    for (int r = 1; r <= 30; ++r) {
      auto phi = cyclotomic_polynomial(r);
      auto oracle = moebius_phi(r);
      REQUIRE(phi.size() == oracle.size());
      for (std::size_t i = 0; i < phi.size(); ++i) CHECK(phi[i] == Rational(oracle[i]));
      CHECK(static_cast<int>(phi.size()) - 1 == euler_phi(r));
    }
  }

  TEST_CASE("roots of unity vanish under their cyclotomic polynomial") {
    for (int r = 1; r <= 30; ++r) {
      CHECK(eval_poly(cyclotomic_polynomial(r), root_of_unity(r, 1)).is_zero());
      CHECK(root_of_unity(r, r) == CycloNum(1));
    }
  }

  TEST_CASE("root of unity examples") {
    CHECK(root_of_unity(2, 1) == CycloNum(-1));
    CHECK(root_of_unity(3, 1) + root_of_unity(3, 2) == CycloNum(-1));
    CHECK(root_of_unity(5, 1).inverse() == root_of_unity(5, 4));
    CHECK(root_of_unity(4, 1) * root_of_unity(4, 1) == CycloNum(-1));
    CHECK(root_of_unity(3, 1).conjugate() == root_of_unity(3, 2));
    CHECK(root_of_unity(7, -3) == root_of_unity(7, 4));
  }

  TEST_CASE("embedding preserves value") {
    CycloNum z = root_of_unity(2, 1).embed(6);
    CHECK(z.order() == 6);
    CHECK(z == root_of_unity(6, 3));
    CHECK(std::abs(to_complex(z) - to_complex(root_of_unity(6, 3))) < 1e-12);
    // Mixed-order arithmetic lands in the lcm field.
    CycloNum w = root_of_unity(4, 1) * root_of_unity(6, 1);
    CHECK(w == root_of_unity(12, 5));
    CHECK_THROWS_AS(root_of_unity(4, 1).embed(6), std::invalid_argument);
  }

  TEST_CASE("division by zero is signalled") {
    CHECK_THROWS_AS(CycloNum(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS((root_of_unity(3, 1) - root_of_unity(3, 1)).inverse(), DivisionByZero);
  }

  TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (int r : {1, 2, 3, 4, 5, 6, 8, 12}) {
      for (int t = 0; t < 25; ++t) {
        CycloNum a = random_cyclo(rng, r), b = random_cyclo(rng, r), c = random_cyclo(rng, r);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == CycloNum(1));
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK(std::abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-6);
      }
    }
  }

  TEST_CASE("embedding is injective on random samples") {
    std::mt19937_64 rng(11);
    int hits = 0;
    for (int t = 0; t < 1000; ++t) {
      CycloNum x = random_cyclo(rng, 6, 1), y = random_cyclo(rng, 6, 1);
      if (x.embed(12) == y.embed(12)) {
        ++hits;
        CHECK(x == y);
      } else {
        CHECK(x != y);
      }
    }
    CHECK(hits >= 0);
  }

  TEST_CASE("literal round trip") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
      CycloNum z = random_cyclo(rng, 5);
      CHECK(parse_cyclo(z.to_string()) == z);
    }
    CHECK(parse_cyclo("1/2 + -z3^1") == CycloNum(make_rational(1, 2)) - root_of_unity(3, 1));
  }

  TEST_CASE("linear algebra examples") {
    CHECK(kernel_basis(CycloMatrix::identity(3)).empty());
    CycloMatrix d(2, 2);
    d(0, 0) = root_of_unity(3, 1);
    d(1, 1) = root_of_unity(3, 2);
    CHECK(determinant(d) == CycloNum(1));
    CycloMatrix m = CycloMatrix::from_rows({{1, root_of_unity(3, 1)}, {root_of_unity(3, 2), 1}});
    CHECK(rank(m) == 1);
    CHECK(determinant(m).is_zero());
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK((m * k[0])[0].is_zero());
    CHECK((m * k[0])[1].is_zero());
  }

  TEST_CASE("solve and inverse") {
    CycloNum z = root_of_unity(4, 1);
    CycloMatrix m = CycloMatrix::from_rows({{1, z, 0}, {0, 1, 2}, {z, 0, 1}});
    CycloVector b{1, z, 3};
    CycloVector x = solve(m, b);
    CHECK(m * x == b);
    CHECK(inverse(m) * m == CycloMatrix::identity(3));
    CycloMatrix singular = CycloMatrix::from_rows({{1, 1}, {1, 1}});
    CHECK_THROWS_AS(solve(singular, CycloVector{1, 2}), InconsistentSystem);
  }

  TEST_CASE("rank-nullity on random matrices") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> dim(1, 5), coin(0, 2);
    for (int t = 0; t < 40; ++t) {
      std::size_t rows = dim(rng), cols = dim(rng);
      CycloMatrix m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if (coin(rng)) m(i, j) = random_cyclo(rng, 3, 2);
      // Force dependence sometimes.
      if (rows > 1 && coin(rng) == 0)
        for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * root_of_unity(3, 1);
      auto ker = kernel_basis(m);
      auto col = column_space_basis(m);
      CHECK(ker.size() + col.size() == cols);
      CHECK(col.size() == rank(m));
      CHECK(rank(m) == rank(m.transpose()));
      for (const auto& v : ker)
        for (const auto& c : m * v) CHECK(c.is_zero());
    }
  }

  TEST_CASE("subspace coordinates") {
    std::vector<CycloVector> basis{{1, 1, 1, 0}, {0, 0, 0, 1}};
    SubspaceCoordinates sc(basis);
    CycloVector c = sc.coordinates({2, 2, 2, 5});
    CHECK(c == CycloVector{2, 5});
    CHECK_THROWS_AS(sc.coordinates({1, 0, 0, 0}), InconsistentSystem);
  }

  TEST_CASE("sparse echelon agrees with dense rank") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> idx(0, 5), coin(0, 1);
    for (int t = 0; t < 20; ++t) {
      SparseEchelon ech;
      std::vector<CycloVector> dense;
      for (int v = 0; v < 5; ++v) {
        SparseVector sv;
        CycloVector dv(6);
        for (int e = 0; e < 3; ++e) {
          int i = idx(rng);
          CycloNum c = random_cyclo(rng, 4, 2);
          sv[i] += c;
          dv[i] += c;
        }
        ech.add(sv);
        dense.push_back(dv);
      }
      auto basis = span_basis(dense);
      CHECK(ech.rank() == basis.size());
      auto red = ech.reduced_basis();
      REQUIRE(red.size() == basis.size());
      for (std::size_t i = 0; i < red.size(); ++i) {
        CycloVector dv(6);
        for (const auto& [k, c] : red[i]) dv[k] = c;
        CHECK(dv == basis[i]);
      }
    }
  }
}
