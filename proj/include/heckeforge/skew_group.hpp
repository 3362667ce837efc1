#pragma once

#include <map>
#include <string>
#include <utility>

#include "heckeforge/cyclo.hpp"
#include "heckeforge/group.hpp"
#include "heckeforge/polyforms.hpp"

namespace heckeforge {

// v^mu g-bar with v^mu = v_1^{mu_1} ... v_n^{mu_n}.
using TermKey = std::pair<Exponents, GroupElement>;

// Linear combination of normal-form monomials v^mu g-bar (group element rightmost).
class NCElement {
 public:
  NCElement() = default;
  NCElement(int r, int n) : r_(r), n_(n) {}

  static NCElement scalar(int r, int n, const CycloNum& c);
  static NCElement group(const GroupElement& g, const CycloNum& c = CycloNum(1));
  // v_k with 0-based k.
  static NCElement variable(int r, int n, int k);
  static NCElement term(Exponents mu, const GroupElement& g, const CycloNum& c = CycloNum(1));

  int r() const { return r_; }
  int n() const { return n_; }
  const std::map<TermKey, CycloNum>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Max |mu| over terms; -1 for zero.
  int filtration_degree() const;
  // Terms with |mu| == d.
  NCElement homogeneous_part(int d) const;

  void add_term(const Exponents& mu, const GroupElement& g, const CycloNum& c);
  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  NCElement& operator*=(const CycloNum& c);
  friend NCElement operator+(NCElement a, const NCElement& b) { return a += b; }
  friend NCElement operator-(NCElement a, const NCElement& b) { return a -= b; }
  friend NCElement operator*(NCElement a, const CycloNum& c) { return a *= c; }
  friend bool operator==(const NCElement& a, const NCElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const NCElement& a, const NCElement& b) { return !(a == b); }

  std::string to_string() const;

 private:
  int r_ = 1;
  int n_ = 0;
  std::map<TermKey, CycloNum> terms_;
};

// Product in S(V)#G: (f g-bar)(f' h-bar) = f g(f') (gh)-bar.
NCElement skew_group_product(const NCElement& a, const NCElement& b, RepKind rep);

// Polynomial part f of f * g-bar for a fixed g, and back.
NCElement attach_group(const Polynomial& f, const GroupElement& g);

}  // namespace heckeforge
