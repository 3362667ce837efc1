#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckeforge/cyclo.hpp"
#include "heckeforge/group.hpp"
#include "heckeforge/polyforms.hpp"

namespace heckeforge {

class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// V^g = ker(g - I), (V^g)^perp = im(g - I); both in echelon-canonical form.
std::vector<CycloVector> fixed_space(const GroupElement& g, RepKind rep);
std::vector<CycloVector> perp_space(const GroupElement& g, RepKind rep);

// chi_g(h) = det(h restricted to (V^g)^perp) on all of Z(g).
CharacterTable hochschild_character(const Group& group, const GroupElement& g, RepKind rep);
CharacterTable hochschild_character(const GroupElement& g, int p, RepKind rep);

struct ClassComponent {
  GroupElement rep;
  RepKind repkind = RepKind::Faithful;
  int cohomological_degree = 2;
  int codim = 0;
  std::vector<CycloVector> fixed_basis;
  std::vector<CycloVector> perp_basis;
  CharacterTable chi;
  std::map<int, std::size_t> dims_by_degree;
  // Forms in coordinates along fixed_basis (variables u_i, wedges of the dual basis).
  std::optional<std::map<int, std::vector<PolyForm>>> basis_by_degree;

  bool is_zero() const;
};

struct ComponentOptions {
  bool keep_basis = false;
  ReynoldsOptions reynolds;
};

ClassComponent hh_component(const Group& group, const GroupElement& g, RepKind rep, int m, int max_degree,
                            const ComponentOptions& options = {});

// Lemma-type vanishing test: codim > m, or some h in Z(g) fixing V^g pointwise has det h != 1.
struct FilterDecision {
  bool skip = false;
  std::string reason;
};
FilterDecision vanishing_filter(const Group& group, const GroupElement& g, RepKind rep, int m);

struct ClassReport {
  ClassComponent component;
  bool skipped = false;
  std::string skip_reason;
  // Set when a skipped class was recomputed by brute force (degrees <= 2).
  std::optional<bool> skip_validated;
};

struct TotalOptions {
  bool validate_skipped = false;
  int validation_degree = 2;
  ComponentOptions component;
};

std::vector<ClassReport> hh_total(const Group& group, RepKind rep, int m, int max_degree,
                                  const TotalOptions& options = {});
// Nonzero degree-2 components only, one per class.
std::vector<ClassComponent> hh2_total(int r, int p, int n, RepKind rep, int max_degree,
                                      const TotalOptions& options = {});

// Free module over a polynomial ring with the given base generator degrees.
struct FreeModuleDescription {
  std::vector<int> base_generator_degrees;
  std::vector<int> module_generator_degrees;

  bool is_zero() const { return module_generator_degrees.empty(); }
  std::uint64_t dimension(int degree) const;
  std::string to_string() const;
};

// Number of monomials of weighted degree d in free generators of the given degrees.
std::uint64_t weighted_monomial_count(const std::vector<int>& degrees, int d);

struct CatalogEntry {
  std::string label;
  GroupElement representative;
  std::size_t class_size = 0;
  FreeModuleDescription module;
};

namespace catalog {

// HH^2(1) for the natural representation: wedge pairs of basic derivations over S(V)^G.
FreeModuleDescription identity_faithful(int r, int p, int n);
// g = (1,2,3), n >= 4.
FreeModuleDescription three_cycle(int r, int p, int n);
// g = (1,-2) = xi_2^{r/2}(1,2); zero module unless the congruence has solutions.
FreeModuleDescription minus_two(int r, int p, int n);
// g = xi_1^l xi_2^{-l} in G(r,r,n), l != r/2.
FreeModuleDescription xi_pair(int r, int n);

// Nonfaithful action: blocks are the multiplicities of equal diagonal entries.
FreeModuleDescription permutation_diagonal(const std::vector<int>& blocks);
FreeModuleDescription permutation_diagonal_three_cycle(const std::vector<int>& blocks);

}  // namespace catalog

// One entry per conjugacy class of G(r,p,n); zero modules included.
std::vector<CatalogEntry> closed_form_catalog(const Group& group, RepKind rep);
std::vector<CatalogEntry> closed_form_catalog(int r, int p, int n, RepKind rep);

struct Mismatch {
  GroupElement representative;
  std::string label;
  int degree;
  std::uint64_t brute;
  std::uint64_t closed;
};

struct CompareReport {
  std::vector<Mismatch> mismatches;
  std::size_t classes_checked = 0;
  bool ok() const { return mismatches.empty(); }
};

// Components absent from brute are treated as zero; so are catalog entries not listed.
CompareReport compare(const std::vector<ClassComponent>& brute, const std::vector<CatalogEntry>& closed,
                      int max_degree);

}  // namespace heckeforge
