#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heckeforge/cyclo.hpp"

namespace heckeforge {

enum class RepKind { Faithful, Permutation };

std::string to_string(RepKind rep);
RepKind parse_rep(const std::string& name);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// g = xi_1^{a_1} ... xi_n^{a_n} sigma, acting by g v_i = zeta^{a_{sigma(i)}} v_{sigma(i)}.
// perm is stored 0-based internally; JSON uses 1-based image lists.
struct GroupElement {
  int r = 1;
  int n = 0;
  std::vector<int> exps;
  std::vector<int> perm;

  static GroupElement identity(int r, int n);
  // exps reduced mod r; perm is a 0-based image list.
  static GroupElement make(int r, std::vector<int> exps, std::vector<int> perm);
  // xi_i^a with 1-based i.
  static GroupElement xi(int r, int n, int i, int a = 1);
  // Cycle i_1 -> i_2 -> ... -> i_k -> i_1 (1-based).
  static GroupElement cycle(int r, int n, const std::vector<int>& points);

  bool is_identity() const;
  bool is_diagonal() const;
  std::string to_string() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement power(const GroupElement& g, long k);
GroupElement conjugate_by(const GroupElement& g, const GroupElement& h);  // h^{-1} g h

// zeta_r^exp times the basis vector with 0-based index.
struct ScaledIndex {
  int index;
  int exp;
};

ScaledIndex act(const GroupElement& g, int i, RepKind rep);
ScaledIndex coact(const GroupElement& g, int i, RepKind rep);
CycloMatrix matrix(const GroupElement& g, RepKind rep);
CycloNum det(const GroupElement& g, RepKind rep);

bool in_subgroup(const GroupElement& g, int p);

// Multiset of (a, k) pairs with multiplicities.
using CycleType = std::map<std::pair<int, int>, int>;
CycleType cycle_type(const GroupElement& g);
std::string cycle_type_string(const CycleType& t);
bool conjugate_in_full_group(const GroupElement& g, const GroupElement& h);
std::uint64_t centralizer_order_formula(const GroupElement& g);

// Cycles of the permutation, each as a list of 0-based points starting at its minimum.
std::vector<std::vector<int>> permutation_cycles(const GroupElement& g);

std::size_t default_budget();

struct ConjugacyClass {
  GroupElement representative;
  std::size_t size;
};

// The enumerated group G(r,p,n) with elements in lexicographic (exps, perm) order.
class Group {
 public:
  Group(int r, int p, int n, std::size_t budget = default_budget());

  int r() const { return r_; }
  int p() const { return p_; }
  int n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }

  bool contains(const GroupElement& g) const;
  std::size_t index_of(const GroupElement& g) const;
  std::size_t multiply_index(std::size_t a, std::size_t b) const;
  std::size_t inverse_index(std::size_t a) const { return inverse_[a]; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(const GroupElement& g) const { return class_id_[index_of(g)]; }
  std::size_t class_of_index(std::size_t i) const { return class_id_[i]; }

  std::vector<GroupElement> centralizer(const GroupElement& g) const;
  std::vector<std::size_t> centralizer_indices(const GroupElement& g) const;
  std::vector<GroupElement> conjugacy_class(const GroupElement& g) const;

 private:
  std::size_t full_index(const GroupElement& g) const;

  int r_, p_, n_;
  std::vector<GroupElement> elements_;
  std::vector<std::int64_t> full_to_sub_;
  std::vector<std::size_t> inverse_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_id_;
};

std::vector<ConjugacyClass> conjugacy_classes(int r, int p, int n, std::size_t budget = default_budget());
std::vector<GroupElement> centralizer(const GroupElement& g, int p, std::size_t budget = default_budget());

}  // namespace heckeforge
