#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace heckeforge {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int euler_phi(int r);

// Coefficients of Phi_r, lowest degree first.
std::vector<Rational> cyclotomic_polynomial(int r);

// Element of Q(zeta_r) in the power basis 1, z, ..., z^{phi(r)-1}.
class CycloNum {
 public:
  CycloNum();
  CycloNum(long q);  // NOLINT: implicit from integers is convenient
  CycloNum(const Rational& q);  // NOLINT

  // Reduces an arbitrary-length polynomial in zeta_order modulo Phi_order.
  static CycloNum from_poly(int order, std::vector<Rational> poly);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> as_rational() const;

  CycloNum embed(int new_order) const;
  CycloNum conjugate() const;
  CycloNum inverse() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  // "z{r}^{k}" literal syntax, e.g. "1/2 + -1*z3^1".
  std::string to_string() const;

 private:
  CycloNum(int order, std::vector<Rational> coeffs);
  bool rational_only() const;
  void normalize_order();

  int order_ = 1;
  std::vector<Rational> coeffs_;
};

CycloNum root_of_unity(int r, long k);

// Parses a "+"-separated sum of terms "c", "c*z{r}^{k}", "z{r}^{k}".
CycloNum parse_cyclo(const std::string& text);

// Dense matrix over cyclotomic numbers. Entries are embedded into a common
// order on demand by the algorithms, so callers may mix orders freely.
using CycloVector = std::vector<CycloNum>;

class CycloMatrix {
 public:
  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols);
  static CycloMatrix identity(std::size_t n);
  static CycloMatrix from_rows(const std::vector<CycloVector>& rows);
  static CycloMatrix from_columns(const std::vector<CycloVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  CycloNum& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const CycloNum& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  CycloVector row(std::size_t i) const;
  CycloVector column(std::size_t j) const;
  CycloMatrix transpose() const;
  bool is_zero() const;

  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloVector operator*(const CycloMatrix& a, const CycloVector& v);
  friend CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<CycloNum> data_;
};

struct EchelonForm {
  CycloMatrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

EchelonForm rref(const CycloMatrix& m);
std::size_t rank(const CycloMatrix& m);
// Rows of the canonical reduced echelon basis of the null space.
std::vector<CycloVector> kernel_basis(const CycloMatrix& m);
// Rows of the canonical reduced echelon basis of the column space.
std::vector<CycloVector> column_space_basis(const CycloMatrix& m);
// Canonical reduced echelon basis of the span of the given vectors.
std::vector<CycloVector> span_basis(const std::vector<CycloVector>& vectors);
CycloVector solve(const CycloMatrix& m, const CycloVector& b);
CycloNum determinant(const CycloMatrix& m);
CycloMatrix inverse(const CycloMatrix& m);

// Coordinates with respect to a fixed linearly independent family of vectors.
class SubspaceCoordinates {
 public:
  SubspaceCoordinates() = default;
  explicit SubspaceCoordinates(std::vector<CycloVector> basis);
  std::size_t dim() const { return basis_.size(); }
  const std::vector<CycloVector>& basis() const { return basis_; }
  // Throws InconsistentSystem when v is outside the span.
  CycloVector coordinates(const CycloVector& v) const;
  CycloVector combine(const CycloVector& coords) const;

 private:
  std::vector<CycloVector> basis_;
  std::vector<std::size_t> pivot_rows_;
  CycloMatrix inv_;  // inverse of the basis restricted to pivot rows
};

using SparseVector = std::map<std::size_t, CycloNum>;

// Incremental row echelon form over sparse vectors; pivot rows are normalized.
class SparseEchelon {
 public:
  // Returns true when v was independent of the rows seen so far.
  bool add(SparseVector v);
  std::size_t rank() const { return rows_.size(); }
  // Fully reduced canonical basis, ordered by pivot.
  std::vector<SparseVector> reduced_basis() const;

 private:
  std::map<std::size_t, SparseVector> rows_;  // keyed by pivot index
};

}  // namespace heckeforge
