#pragma once

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "heckeforge/cyclo.hpp"
#include "heckeforge/group.hpp"
#include "heckeforge/hochschild.hpp"
#include "heckeforge/polyforms.hpp"
#include "heckeforge/skew_group.hpp"

namespace heckeforge {

class IllDefinedExtension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a(v, w) = v^T A w on coordinate vectors.
struct SkewForm {
  CycloMatrix matrix;

  static SkewForm zero(int n);
  int n() const { return static_cast<int>(matrix.rows()); }
  bool is_skew() const;
  bool is_zero() const { return matrix.is_zero(); }
  CycloNum operator()(const CycloVector& v, const CycloVector& w) const;
  CycloNum entry(int i, int j) const { return matrix(i, j); }
  // Form (v, w) -> a(h v, h w).
  SkewForm pulled_back(const GroupElement& h, RepKind rep) const;

  friend bool operator==(const SkewForm& a, const SkewForm& b) { return a.matrix == b.matrix; }
};

struct SkewFormFamily {
  int r = 1, p = 1, n = 0;
  RepKind rep = RepKind::Permutation;
  std::map<GroupElement, SkewForm> support;  // absent keys are the zero form

  SkewForm form(const GroupElement& g) const;
  void set(const GroupElement& g, SkewForm a);  // zero forms are dropped
  friend bool operator==(const SkewFormFamily& a, const SkewFormFamily& b) {
    return a.r == b.r && a.p == b.p && a.n == b.n && a.rep == b.rep && a.support == b.support;
  }
};

struct GHAParamReport {
  int r = 1, p = 1, n = 0;
  RepKind rep = RepKind::Faithful;
  std::size_t d = 0;
  std::vector<GroupElement> d_classes;
  std::vector<std::pair<GroupElement, std::size_t>> lambda2_dims;  // codim-0 class reps
  std::size_t total = 0;
  std::optional<std::size_t> paper_count;
  bool discrepancy_flag = false;
};

GHAParamReport param_space(int r, int p, int n, RepKind rep);
// Kernel dimension of the invariance + Jacobi constraints on all {a_g}, assembled directly.
std::size_t linear_system_param_dimension(int r, int p, int n, RepKind rep);

// Extends a_g on g to its class by a_{h^{-1} g h}(v, w) = a_g(h v, h w); throws on conflicts.
void extend_by_conjugation(SkewFormFamily& family, const Group& group, const GroupElement& g, const SkewForm& a);

// a_g with a_g(w_1, w_2) = c on the echelon basis {w_1, w_2} of (V^g)^perp and a_g(V^g, V) = 0.
SkewForm perp_volume_form(const GroupElement& g, RepKind rep, const CycloNum& c);

SkewFormFamily build_a_r1n(int r, int n);
// One scalar per (diagonal x 3-cycle) class, keyed by any element of the class.
SkewFormFamily build_generic(int r, int n, const std::map<GroupElement, CycloNum>& scalars);
enum class Preset { AR1n, Generic };
SkewFormFamily build_preset(Preset preset, int r, int n, const std::map<GroupElement, CycloNum>& scalars = {});
// Class representatives of G(r,1,n) that are a diagonal matrix times a 3-cycle.
std::vector<GroupElement> diagonal_three_cycle_classes(int r, int n);

struct PBWWitness {
  std::string condition;  // "invariance" or "jacobi" or "skew"
  GroupElement g;
  std::optional<GroupElement> h;
  std::vector<int> indices;  // 0-based basis indices involved
  std::string to_string() const;
};

struct PBWReport {
  bool invariance = true;
  bool jacobi = true;
  std::vector<PBWWitness> witnesses;
  bool ok() const { return invariance && jacobi; }
};

PBWReport pbw_check(const SkewFormFamily& family, std::size_t max_witnesses = 8);

// ---------------------------------------------------------------------------
// Koszul comparison maps

// L (x) R (x) wedge, with 0-based sorted wedge indices.
struct KoszulKey {
  Exponents left;
  Exponents right;
  std::vector<int> wedge;
  friend auto operator<=>(const KoszulKey&, const KoszulKey&) = default;
};
using KoszulChain = std::map<KoszulKey, long>;

KoszulChain psi1(const Exponents& k);
KoszulChain psi2(const Exponents& k, const Exponents& m);
KoszulChain koszul_d1(const KoszulChain& x);  // into S(V)^e, wedge empty
KoszulChain koszul_d2(const KoszulChain& x);
// psi_1 applied to delta_2(1 (x) a (x) b (x) 1) = a (x) b (x) 1 - 1 (x) ab (x) 1 + 1 (x) a (x) b.
KoszulChain psi1_of_bar_delta2(const Exponents& a, const Exponents& b);
bool chain_map_identity(const Exponents& a, const Exponents& b);

// ---------------------------------------------------------------------------
// First-order cocycle

// mu_1(r g, s h) = phi(r, g(s)) (gh)-bar with phi = f o psi_2 on S(V) (x) S(V).
// psi_2 is not G-equivariant, so the literal phi only gives a cocycle of S(V)#G on
// inputs without group parts; Averaged replaces phi by its G-average
// (1/|G|) sum_x x phi(x^{-1} -, x^{-1} -) x^{-1}, which is cohomologous and G-invariant.
class Mu1 {
 public:
  enum class Mode { Averaged, Literal };
  explicit Mu1(const SkewFormFamily& family, Mode mode = Mode::Averaged);
  NCElement operator()(const NCElement& a, const NCElement& b) const;
  // phi on a pair of monomials, as a combination of L g'-bar terms.
  NCElement phi(const Exponents& k, const Exponents& m) const;
  const SkewFormFamily& family() const { return family_; }
  Mode mode() const { return mode_; }

 private:
  NCElement literal_phi(const Polynomial& a, const Polynomial& b) const;

  SkewFormFamily family_;
  Mode mode_;
  Group group_;
  std::map<std::pair<int, int>, std::vector<std::pair<GroupElement, CycloNum>>> by_pair_;  // a_g(v_i, v_j), i < j
  mutable std::map<std::pair<Exponents, Exponents>, NCElement> cache_;
};

NCElement random_skew_group_element(std::mt19937_64& rng, const Group& group, int max_degree, int max_terms);

struct CocycleReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  bool ok() const { return failures == 0; }
};
CocycleReport cocycle_spot_check(const Mu1& mu, std::size_t samples, std::uint64_t seed, int max_degree = 2);

// Degree-0 elements of HH^2(g), one per class representative, as forms in fixed-space coordinates.
SkewFormFamily forms_from_semiinvariants(int r, int p, int n, RepKind rep,
                                         const std::map<GroupElement, PolyForm>& degree0);

}  // namespace heckeforge
