#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "heckeforge/group.hpp"
#include "heckeforge/hecke.hpp"
#include "heckeforge/skew_group.hpp"

namespace heckeforge {

// Either a Drinfeld quotient T(V)#G / (vw - wv - sum a_g(v,w) g) or the algebra H*_{r,1,n}.
class Presentation {
 public:
  enum class Kind { Drinfeld, HStar };

  static Presentation drinfeld(SkewFormFamily family);
  static Presentation hstar(int r, int n);

  Kind kind() const { return kind_; }
  int r() const { return r_; }
  int p() const { return p_; }
  int n() const { return n_; }
  RepKind rep() const { return rep_; }
  const SkewFormFamily& family() const { return family_; }
  // pbw_check result for Drinfeld; always true for HStar.
  bool trusted() const { return trusted_; }
  std::string name() const;

  // Normal form of g-bar v_k (0-based k).
  const NCElement& group_move(const GroupElement& g, int k) const;
  // [v_a, v_b] correction for a > b in the Drinfeld sorting step: sum a_g(v_a, v_b) g-bar.
  const std::vector<std::pair<GroupElement, CycloNum>>& bracket(int a, int b) const;

 private:
  Presentation() = default;
  NCElement compute_move(const GroupElement& g, int k) const;

  Kind kind_ = Kind::HStar;
  int r_ = 1, p_ = 1, n_ = 0;
  RepKind rep_ = RepKind::Permutation;
  bool trusted_ = true;
  SkewFormFamily family_;
  std::vector<std::vector<std::vector<std::pair<GroupElement, CycloNum>>>> brackets_;
  std::shared_ptr<std::map<std::pair<GroupElement, int>, NCElement>> move_cache_;
};

// Generator word of sigma as 0-based simple reflections s_i = (i, i+1), leftmost first.
std::vector<int> simple_reflection_word(const GroupElement& sigma);

NCElement group_move(const GroupElement& g, int k, const Presentation& pres);
NCElement multiply(const NCElement& x, const NCElement& y, const Presentation& pres);
NCElement commutator(const NCElement& x, const NCElement& y, const Presentation& pres);
NCElement product(const std::vector<NCElement>& factors, const Presentation& pres);

// v~_k of the change of generators in H*_{r,1,n}, 1-based k.
NCElement tilde_generator(int k, int r, int n);
// Right-hand side of the v_m v_k - v_k v_m relation: c * sum_i sum_{a,b} xi_m^a xi_k^b xi_i^{-a-b} ((m,k,i) - (m,i,k)).
NCElement three_cycle_bracket_sum(int m, int k, int r, int n, const CycloNum& c);

// (j,k)-bar v_m in H*_{r,1,n} (1-based, j < k) compared with the four-case closed form.
struct Reln4Result {
  bool ok = false;
  NCElement computed;
  NCElement expected;
};
Reln4Result verify_reln4(int j, int k, int m, int r, int n);
Reln4Result verify_reln4(int j, int k, int m, const Presentation& hstar);

struct IsoReport {
  int r = 1, n = 0;
  std::size_t xi_checks = 0, xi_failures = 0;            // xi_i v~_k = v~_k xi_i
  std::size_t commute_checks = 0, commute_failures = 0;  // s_i v~_k = v~_k s_i, k not in {i, i+1}
  std::size_t action_checks = 0, action_failures = 0;    // s_i v~_i = v~_{i+1} s_i
  std::size_t bracket_checks = 0, bracket_failures = 0;  // [v~_m, v~_k] = 1/4 sum
  std::size_t drinfeld_checks = 0, drinfeld_failures = 0;  // [v_m, v_k] in A_{r,1,n} = 1/3 sum
  std::size_t scaled_checks = 0, scaled_failures = 0;      // (4/3) [v~_m, v~_k] = [v_m, v_k] in A_{r,1,n}
  bool scaling_ratio_ok = false;                           // (1/4) / (1/3) = (sqrt(3)/2)^2
  std::vector<std::string> failures;
  bool ok() const;
};
IsoReport verify_iso(int r, int n);

struct PBWDimensionReport {
  std::size_t count = 0;
  std::size_t expected = 0;
  std::size_t association_checks = 0, association_failures = 0;
  std::size_t triples = 0, triple_failures = 0;
  bool ok() const { return count == expected && association_failures == 0 && triple_failures == 0; }
};
// Rank of the span of all words of length <= N times group elements (on both sides), two bracketings
// of every word, and random associativity triples.
PBWDimensionReport pbw_dimension_check(const Presentation& pres, int max_degree, std::size_t triples = 100,
                                       std::uint64_t seed = 1);

NCElement random_element(std::mt19937_64& rng, const Presentation& pres, int max_degree, int max_terms);

// Words of tokens v{k}, xi{k}^{a}, xi{k}, s{i}, cycle(i,j,...), and scalars (parse_cyclo syntax);
// standalone "+" / "-" tokens separate summands.
NCElement parse_expression(const std::string& text, const Presentation& pres);

}  // namespace heckeforge
