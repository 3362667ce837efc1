#include "heckeforge/cyclo.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace heckeforge {

Rational make_rational(long num, long den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

int euler_phi(int r) {
  if (r < 1) throw std::invalid_argument("euler_phi: r must be positive");
  int result = r, m = r;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of polynomials with rational coefficients; remainder must vanish.
Poly divide_exact(Poly num, const Poly& den) {
  trim(num);
  std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {};
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Rational c = num[i] / den[dn];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

const Poly& phi_cached(int r) {
  static std::mutex mu;
  static std::map<int, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
  }
  Poly p(r + 1, 0);
  p[0] = -1;
  p[r] = 1;
  for (int d = 1; d < r; ++d) {
    if (r % d == 0) p = divide_exact(p, phi_cached(d));
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(r, std::move(p)).first->second;
}

void reduce_mod_phi(Poly& p, int r) {
  const Poly& phi = phi_cached(r);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j <= deg; ++j) p[i - deg + j] -= c * phi[j];
  }
  p.resize(deg, 0);
}

// Solves a dense square rational system by Gauss-Jordan elimination.
Poly solve_rational(std::vector<Poly> a, Poly b) {
  std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw DivisionByZero("singular multiplication matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int r) {
  if (r < 1) throw std::invalid_argument("cyclotomic_polynomial: r must be positive");
  return phi_cached(r);
}

CycloNum::CycloNum() : order_(1), coeffs_(1, 0) {}
CycloNum::CycloNum(long q) : order_(1), coeffs_(1, Rational(q)) {}
CycloNum::CycloNum(const Rational& q) : order_(1), coeffs_(1, q) {}
CycloNum::CycloNum(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

CycloNum CycloNum::from_poly(int order, std::vector<Rational> poly) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  reduce_mod_phi(poly, order);
  return CycloNum(order, std::move(poly));
}

bool CycloNum::rational_only() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycloNum::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloNum::is_one() const { return rational_only() && coeffs_[0] == 1; }

std::optional<Rational> CycloNum::as_rational() const {
  if (!rational_only()) return std::nullopt;
  return coeffs_[0];
}

CycloNum CycloNum::embed(int new_order) const {
  if (new_order < 1 || new_order % order_ != 0)
    throw std::invalid_argument("embed: order must divide the new order");
  if (new_order == order_) return *this;
  int step = new_order / order_;
  if (rational_only()) {
    Poly p(euler_phi(new_order), 0);
    p[0] = coeffs_[0];
    return CycloNum(new_order, std::move(p));
  }
  Poly p((coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
  return from_poly(new_order, std::move(p));
}

CycloNum CycloNum::conjugate() const {
  if (rational_only()) return *this;
  Poly p(order_, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[(order_ - k) % order_] += coeffs_[k];
  return from_poly(order_, std::move(p));
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
  if (rational_only()) {
    CycloNum out(*this);
    out.coeffs_[0] = 1 / coeffs_[0];
    return out;
  }
  // Column j of the multiplication-by-self matrix is self * z^j.
  std::size_t phi = coeffs_.size();
  std::vector<Poly> a(phi, Poly(phi, 0));
  for (std::size_t j = 0; j < phi; ++j) {
    Poly shifted(phi + j, 0);
    for (std::size_t k = 0; k < phi; ++k) shifted[k + j] = coeffs_[k];
    reduce_mod_phi(shifted, order_);
    for (std::size_t i = 0; i < phi; ++i) a[i][j] = shifted[i];
  }
  Poly e(phi, 0);
  e[0] = 1;
  return CycloNum(order_, solve_rational(std::move(a), std::move(e)));
}

CycloNum CycloNum::operator-() const {
  CycloNum out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

namespace {

int lcm_int(int a, int b) { return a / std::gcd(a, b) * b; }

}  // namespace

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  if (o.rational_only()) {
    coeffs_[0] += o.coeffs_[0];
    return *this;
  }
  if (rational_only()) {
    Rational c = coeffs_[0];
    *this = o;
    coeffs_[0] += c;
    return *this;
  }
  if (order_ == o.order_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  int l = lcm_int(order_, o.order_);
  *this = embed(l);
  return *this += o.embed(l);
}

CycloNum& CycloNum::operator-=(const CycloNum& o) { return *this += -o; }

CycloNum& CycloNum::operator*=(const CycloNum& o) {
  if (o.rational_only()) {
    const Rational& c = o.coeffs_[0];
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  if (rational_only()) {
    Rational c = coeffs_[0];
    *this = o;
    for (auto& x : coeffs_) x *= c;
    return *this;
  }
  if (order_ != o.order_) {
    int l = lcm_int(order_, o.order_);
    *this = embed(l);
    return *this *= o.embed(l);
  }
  std::size_t phi = coeffs_.size();
  Poly p(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (o.coeffs_[j] == 0) continue;
      p[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  reduce_mod_phi(p, order_);
  coeffs_ = std::move(p);
  return *this;
}

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this *= o.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.rational_only() && b.rational_only()) return a.coeffs_[0] == b.coeffs_[0];
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  int l = lcm_int(a.order_, b.order_);
  return a.embed(l).coeffs_ == b.embed(l).coeffs_;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << coeffs_[k].get_str();
    } else {
      os << coeffs_[k].get_str() << "*z" << order_ << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

CycloNum root_of_unity(int r, long k) {
  if (r < 1) throw std::invalid_argument("root_of_unity: r must be positive");
  long e = ((k % r) + r) % r;
  Poly p(e + 1, 0);
  p[e] = 1;
  return CycloNum::from_poly(r, std::move(p));
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

CycloNum parse_root_literal(const std::string& t) {
  // z{r}^{k}
  auto caret = t.find('^');
  if (t.size() < 2 || t[0] != 'z')
    throw std::invalid_argument("bad root-of-unity literal: " + t);
  int r = std::stoi(t.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
  long k = caret == std::string::npos ? 1 : std::stol(t.substr(caret + 1));
  return root_of_unity(r, k);
}

Rational parse_rational(const std::string& t) {
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + t);
  if (q.get_den() == 0) throw DivisionByZero("zero denominator in literal: " + t);
  q.canonicalize();
  return q;
}

}  // namespace

CycloNum parse_cyclo(const std::string& text) {
  CycloNum total;
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    term = strip(term);
    if (term.empty()) throw std::invalid_argument("empty term in cyclotomic literal");
    CycloNum value(1);
    std::stringstream ts(term);
    std::string factor;
    while (std::getline(ts, factor, '*')) {
      factor = strip(factor);
      bool neg = false;
      if (!factor.empty() && factor[0] == '-' && factor.size() > 1 && factor[1] == 'z') {
        neg = true;
        factor = factor.substr(1);
      }
      CycloNum f = factor.empty() ? throw std::invalid_argument("empty factor")
                   : factor[0] == 'z' ? parse_root_literal(factor)
                                      : CycloNum(parse_rational(factor));
      value *= neg ? -f : f;
    }
    total += value;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Dense matrices

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

CycloMatrix CycloMatrix::identity(std::size_t n) {
  CycloMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

CycloMatrix CycloMatrix::from_rows(const std::vector<CycloVector>& rows) {
  if (rows.empty()) return CycloMatrix();
  CycloMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

CycloMatrix CycloMatrix::from_columns(const std::vector<CycloVector>& cols) {
  return from_rows(cols).transpose();
}

CycloVector CycloMatrix::row(std::size_t i) const {
  return CycloVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

CycloVector CycloMatrix::column(std::size_t j) const {
  CycloVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool CycloMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const CycloNum& c) { return c.is_zero(); });
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  CycloMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const CycloNum& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

CycloVector operator*(const CycloMatrix& a, const CycloVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector: shape mismatch");
  CycloVector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
  return out;
}

CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  CycloMatrix c(a);
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  CycloMatrix c(a);
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

EchelonForm rref(const CycloMatrix& m) {
  EchelonForm out{m, {}};
  CycloMatrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    CycloNum inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      CycloNum f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const CycloMatrix& m) { return rref(m).pivots.size(); }

std::vector<CycloVector> span_basis(const std::vector<CycloVector>& vectors) {
  if (vectors.empty()) return {};
  EchelonForm e = rref(CycloMatrix::from_rows(vectors));
  std::vector<CycloVector> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

std::vector<CycloVector> kernel_basis(const CycloMatrix& m) {
  EchelonForm e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<CycloVector> raw;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    CycloVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    raw.push_back(std::move(v));
  }
  return span_basis(raw);
}

std::vector<CycloVector> column_space_basis(const CycloMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  EchelonForm e = rref(m.transpose());
  std::vector<CycloVector> out;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

CycloVector solve(const CycloMatrix& m, const CycloVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  CycloMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  EchelonForm e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols())
    throw InconsistentSystem("solve: inconsistent linear system");
  CycloVector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

CycloNum determinant(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  CycloMatrix a(m);
  std::size_t n = a.rows();
  CycloNum det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return CycloNum(0);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    CycloNum inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      CycloNum f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        if (!a(col, j).is_zero()) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

CycloMatrix inverse(const CycloMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  std::size_t n = m.rows();
  CycloMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  EchelonForm e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DivisionByZero("inverse: singular matrix");
  CycloMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

SubspaceCoordinates::SubspaceCoordinates(std::vector<CycloVector> basis) : basis_(std::move(basis)) {
  if (basis_.empty()) return;
  // Pivot rows of the basis written as columns give an invertible square block.
  CycloMatrix cols = CycloMatrix::from_columns(basis_);
  EchelonForm e = rref(cols.transpose());
  if (e.pivots.size() != basis_.size()) throw std::invalid_argument("subspace basis is dependent");
  pivot_rows_ = e.pivots;
  CycloMatrix block(basis_.size(), basis_.size());
  for (std::size_t i = 0; i < pivot_rows_.size(); ++i)
    for (std::size_t j = 0; j < basis_.size(); ++j) block(i, j) = basis_[j][pivot_rows_[i]];
  inv_ = heckeforge::inverse(block);
}

CycloVector SubspaceCoordinates::coordinates(const CycloVector& v) const {
  CycloVector restricted(pivot_rows_.size());
  for (std::size_t i = 0; i < pivot_rows_.size(); ++i) restricted[i] = v[pivot_rows_[i]];
  CycloVector c = inv_ * restricted;
  if (combine(c) != v) throw InconsistentSystem("vector lies outside the subspace");
  return c;
}

CycloVector SubspaceCoordinates::combine(const CycloVector& coords) const {
  if (basis_.empty()) return {};
  CycloVector v(basis_[0].size());
  for (std::size_t j = 0; j < basis_.size(); ++j) {
    if (coords[j].is_zero()) continue;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (!basis_[j][i].is_zero()) v[i] += coords[j] * basis_[j][i];
  }
  return v;
}

// ---------------------------------------------------------------------------
// Sparse incremental echelon

bool SparseEchelon::add(SparseVector v) {
  for (auto it = v.begin(); it != v.end();) {
    if (it->second.is_zero()) {
      it = v.erase(it);
      continue;
    }
    auto row = rows_.find(it->first);
    if (row == rows_.end()) {
      ++it;
      continue;
    }
    CycloNum f = it->second;
    std::size_t key = it->first;
    for (const auto& [idx, c] : row->second) v[idx] -= f * c;
    it = v.upper_bound(key);
    v.erase(key);
  }
  for (auto it = v.begin(); it != v.end();) it = it->second.is_zero() ? v.erase(it) : std::next(it);
  if (v.empty()) return false;
  CycloNum inv = v.begin()->second.inverse();
  for (auto& [idx, c] : v) c *= inv;
  std::size_t pivot = v.begin()->first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<SparseVector> SparseEchelon::reduced_basis() const {
  std::map<std::size_t, SparseVector> rows = rows_;
  for (auto hi = rows.rbegin(); hi != rows.rend(); ++hi) {
    for (auto& [p, row] : rows) {
      if (p >= hi->first) break;
      auto it = row.find(hi->first);
      if (it == row.end()) continue;
      CycloNum f = it->second;
      for (const auto& [idx, c] : hi->second) row[idx] -= f * c;
      for (auto jt = row.begin(); jt != row.end();) jt = jt->second.is_zero() ? row.erase(jt) : std::next(jt);
    }
  }
  std::vector<SparseVector> out;
  for (auto& [p, row] : rows) out.push_back(std::move(row));
  return out;
}

}  // namespace heckeforge
