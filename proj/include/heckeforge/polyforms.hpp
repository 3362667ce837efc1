#pragma once

#include <map>
#include <string>
#include <vector>

#include "heckeforge/cyclo.hpp"
#include "heckeforge/group.hpp"

namespace heckeforge {

using Exponents = std::vector<int>;
// Strictly increasing 0-based indices of a wedge x_{i_1} ^ ... ^ x_{i_k}.
using WedgeIndex = std::vector<int>;

class Polynomial {
 public:
  explicit Polynomial(int nvars = 0) : n_(nvars) {}
  static Polynomial constant(int nvars, const CycloNum& c);
  static Polynomial variable(int nvars, int i);
  static Polynomial monomial(int nvars, Exponents e, const CycloNum& c = CycloNum(1));
  // sum_i coeffs[i] v_i
  static Polynomial linear(const CycloVector& coeffs);

  int nvars() const { return n_; }
  const std::map<Exponents, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  CycloNum coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const CycloNum& c);
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const CycloNum& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const CycloNum& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  Polynomial pow(int k) const;

  std::string to_string() const;

 private:
  int n_;
  std::map<Exponents, CycloNum> terms_;
};

// Element of S(V) (x) Lambda(V*): wedge index -> polynomial coefficient.
class PolyForm {
 public:
  explicit PolyForm(int nvars = 0) : n_(nvars) {}
  static PolyForm from(const Polynomial& p, WedgeIndex wedge = {});

  int nvars() const { return n_; }
  const std::map<WedgeIndex, Polynomial>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  // Highest total degree over components; -1 for zero.
  int poly_degree() const;
  Polynomial component(const WedgeIndex& s) const;

  void add(const WedgeIndex& s, const Polynomial& p);
  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const CycloNum& c);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(PolyForm a, const CycloNum& c) { return a *= c; }
  friend PolyForm operator*(const Polynomial& p, const PolyForm& w);
  friend bool operator==(const PolyForm& a, const PolyForm& b) { return a.n_ == b.n_ && a.comps_ == b.comps_; }
  friend bool operator!=(const PolyForm& a, const PolyForm& b) { return !(a == b); }
  PolyForm wedge(const PolyForm& o) const;

  std::string to_string() const;

 private:
  int n_;
  std::map<WedgeIndex, Polynomial> comps_;
};

// Sign of the permutation sorting idx, or 0 on a repeated index; idx is sorted in place.
int sort_wedge(WedgeIndex& idx);

Polynomial act_poly(const GroupElement& g, const Polynomial& f, RepKind rep);
PolyForm act_form(const GroupElement& g, const PolyForm& w, RepKind rep);

Polynomial elementary_symmetric(int k, const std::vector<Polynomial>& vars);
// f_1..f_{m-1} in the r-th powers, then (v_1 ... v_m)^{r/p}.
std::vector<Polynomial> invariant_ring_generators(int r, int p, int m);
std::vector<PolyForm> basic_derivations(int r, int p, int m);
// theta_j = sum_i v_i^{(j-1)*step + 1} x_i with the displayed exponents of the nonfaithful remark (step = r).
std::vector<PolyForm> remark_block_derivations(int r, int m);
// theta_j = sum_i v_i^{j-1} x_i, basic derivations of the symmetric group S_m.
std::vector<PolyForm> symmetric_group_derivations(int m);

struct SolomonResult {
  bool invariant = false;
  bool determinant_is_Q = false;
  Polynomial determinant;
  Polynomial Q;
};

SolomonResult solomon_check(const std::vector<PolyForm>& thetas, const std::vector<GroupElement>& elements,
                            RepKind rep);
// Product of the distinct root lines of the reflections among the listed elements.
Polynomial reflection_arrangement_product(const std::vector<GroupElement>& elements, RepKind rep);

class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(std::vector<GroupElement> elements, std::vector<CycloNum> values);
  static CharacterTable trivial(std::vector<GroupElement> elements);

  const std::vector<GroupElement>& elements() const { return elements_; }
  const std::vector<CycloNum>& values() const { return values_; }
  const CycloNum& value(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return index_.count(g) > 0; }
  bool is_trivial() const;
  // Closure and chi(g s) = chi(g) chi(s) for g in the table and s in a generating set.
  bool is_multiplicative() const;

 private:
  std::vector<GroupElement> elements_;
  std::vector<CycloNum> values_;
  std::map<GroupElement, std::size_t> index_;
};

// Elements acting on a subspace W = span(basis) of V; polynomial variables are the
// coordinates u_i along the basis, wedge factors the dual basis y_i of W*.
class SubspaceAction {
 public:
  SubspaceAction(const std::vector<GroupElement>& elements, RepKind rep, const std::vector<CycloVector>& basis);
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return on_w_.size(); }
  const CycloMatrix& matrix_on_w(std::size_t h) const { return on_w_[h]; }
  PolyForm apply(std::size_t h, const PolyForm& w) const;

 private:
  std::size_t dim_;
  std::vector<CycloMatrix> on_w_;
  std::vector<CycloMatrix> on_dual_;
};

struct ReynoldsOptions {
  bool force_general = false;  // skip the monomial fast path
};

std::vector<PolyForm> reynolds_semiinvariant_basis(const std::vector<GroupElement>& subgroup, const CharacterTable& chi,
                                                   RepKind rep, int poly_degree, int form_degree,
                                                   const std::vector<CycloVector>& subspace_basis,
                                                   const ReynoldsOptions& options = {});
// (1/|H|) sum_h chi(h)^{-1} h(w) on a form in subspace coordinates.
PolyForm reynolds_apply(const std::vector<GroupElement>& subgroup, const CharacterTable& chi, RepKind rep,
                        const std::vector<CycloVector>& subspace_basis, const PolyForm& w);

std::vector<Exponents> monomials_of_degree(int nvars, int degree);
std::vector<WedgeIndex> subsets_of_size(int nvars, int k);

}  // namespace heckeforge
