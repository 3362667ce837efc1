#include "heckeforge/hochschild.hpp"

#include <algorithm>
#include <sstream>

namespace heckeforge {

namespace {

CycloMatrix minus_identity(const GroupElement& g, RepKind rep) {
  return matrix(g, rep) - CycloMatrix::identity(static_cast<std::size_t>(g.n));
}

CycloVector apply_vector(const GroupElement& h, const CycloVector& v, RepKind rep) {
  CycloVector out(v.size());
  for (int j = 0; j < h.n; ++j) {
    if (v[j].is_zero()) continue;
    ScaledIndex s = act(h, j, rep);
    out[s.index] += v[j] * root_of_unity(h.r, s.exp);
  }
  return out;
}

bool fixes_pointwise(const GroupElement& h, const std::vector<CycloVector>& basis, RepKind rep) {
  return std::all_of(basis.begin(), basis.end(),
                     [&](const CycloVector& b) { return apply_vector(h, b, rep) == b; });
}

std::string join_degrees(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

std::vector<int> multiples(int step, int count) {
  std::vector<int> out;
  for (int i = 1; i <= count; ++i) out.push_back(i * step);
  return out;
}

std::vector<int> pair_sums(const std::vector<int>& degs) {
  std::vector<int> out;
  for (std::size_t i = 0; i < degs.size(); ++i)
    for (std::size_t j = i + 1; j < degs.size(); ++j) out.push_back(degs[i] + degs[j]);
  std::sort(out.begin(), out.end());
  return out;
}

int mod(long a, int r) { return static_cast<int>(((a % r) + r) % r); }

}  // namespace

std::vector<CycloVector> fixed_space(const GroupElement& g, RepKind rep) {
  return kernel_basis(minus_identity(g, rep));
}

std::vector<CycloVector> perp_space(const GroupElement& g, RepKind rep) {
  return column_space_basis(minus_identity(g, rep));
}

CharacterTable hochschild_character(const Group& group, const GroupElement& g, RepKind rep) {
  std::vector<GroupElement> z = group.centralizer(g);
  std::vector<CycloVector> perp = perp_space(g, rep);
  if (perp.empty()) return CharacterTable::trivial(std::move(z));
  SubspaceAction sa(z, rep, perp);
  std::vector<CycloNum> values;
  values.reserve(z.size());
  for (std::size_t i = 0; i < sa.size(); ++i) values.push_back(determinant(sa.matrix_on_w(i)));
  return CharacterTable(std::move(z), std::move(values));
}

CharacterTable hochschild_character(const GroupElement& g, int p, RepKind rep) {
  return hochschild_character(Group(g.r, p, g.n), g, rep);
}

bool ClassComponent::is_zero() const {
  return std::all_of(dims_by_degree.begin(), dims_by_degree.end(), [](const auto& kv) { return kv.second == 0; });
}

ClassComponent hh_component(const Group& group, const GroupElement& g, RepKind rep, int m, int max_degree,
                            const ComponentOptions& options) {
  if (m < 0) throw std::invalid_argument("cohomological degree must be non-negative");
  if (!group.contains(g)) throw std::invalid_argument(g.to_string() + " is not in the group");
  ClassComponent c;
  c.rep = g;
  c.repkind = rep;
  c.cohomological_degree = m;
  c.fixed_basis = fixed_space(g, rep);
  c.perp_basis = perp_space(g, rep);
  c.codim = g.n - static_cast<int>(c.fixed_basis.size());
  c.chi = hochschild_character(group, g, rep);
  if (options.keep_basis) c.basis_by_degree.emplace();

  int k = m - c.codim;
  int s = static_cast<int>(c.fixed_basis.size());
  for (int d = 0; d <= max_degree; ++d) {
    if (k < 0 || k > s) {
      c.dims_by_degree[d] = 0;
      if (c.basis_by_degree) (*c.basis_by_degree)[d] = {};
      continue;
    }
    auto basis = reynolds_semiinvariant_basis(c.chi.elements(), c.chi, rep, d, k, c.fixed_basis, options.reynolds);
    c.dims_by_degree[d] = basis.size();
    if (c.basis_by_degree) (*c.basis_by_degree)[d] = std::move(basis);
  }
  return c;
}

FilterDecision vanishing_filter(const Group& group, const GroupElement& g, RepKind rep, int m) {
  std::vector<CycloVector> fixed = fixed_space(g, rep);
  int codim = g.n - static_cast<int>(fixed.size());
  if (codim > m) return {true, "codim " + std::to_string(codim) + " exceeds cohomological degree"};
  if (m - codim > static_cast<int>(fixed.size())) return {true, "exterior power exceeds dim V^g"};
  for (const auto& h : group.centralizer(g)) {
    if (!fixes_pointwise(h, fixed, rep)) continue;
    if (!det(h, rep).is_one()) return {true, h.to_string() + " fixes V^g pointwise with det != 1"};
  }
  return {};
}

std::vector<ClassReport> hh_total(const Group& group, RepKind rep, int m, int max_degree, const TotalOptions& options) {
  std::vector<ClassReport> out;
  for (const auto& cls : group.classes()) {
    const GroupElement& g = cls.representative;
    ClassReport report;
    FilterDecision f = vanishing_filter(group, g, rep, m);
    if (!f.skip) {
      report.component = hh_component(group, g, rep, m, max_degree, options.component);
    } else {
      report.skipped = true;
      report.skip_reason = f.reason;
      ClassComponent& c = report.component;
      c.rep = g;
      c.repkind = rep;
      c.cohomological_degree = m;
      c.fixed_basis = fixed_space(g, rep);
      c.perp_basis = perp_space(g, rep);
      c.codim = g.n - static_cast<int>(c.fixed_basis.size());
      c.chi = hochschild_character(group, g, rep);
      for (int d = 0; d <= max_degree; ++d) c.dims_by_degree[d] = 0;
      if (options.validate_skipped) {
        int vd = std::min(max_degree, options.validation_degree);
        report.skip_validated = hh_component(group, g, rep, m, vd).is_zero();
      }
    }
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<ClassComponent> hh2_total(int r, int p, int n, RepKind rep, int max_degree, const TotalOptions& options) {
  Group group(r, p, n);
  std::vector<ClassComponent> out;
  for (auto& report : hh_total(group, rep, 2, max_degree, options))
    if (!report.component.is_zero()) out.push_back(std::move(report.component));
  return out;
}

// ---------------------------------------------------------------------------
// Free modules

std::uint64_t weighted_monomial_count(const std::vector<int>& degrees, int d) {
  if (d < 0) return 0;
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(d) + 1, 0);
  ways[0] = 1;
  for (int deg : degrees) {
    if (deg <= 0) throw std::invalid_argument("free generator degrees must be positive");
    for (int t = deg; t <= d; ++t) ways[t] += ways[t - deg];
  }
  return ways[d];
}

std::uint64_t FreeModuleDescription::dimension(int degree) const {
  std::uint64_t total = 0;
  for (int g : module_generator_degrees) total += weighted_monomial_count(base_generator_degrees, degree - g);
  return total;
}

std::string FreeModuleDescription::to_string() const {
  if (is_zero()) return "0";
  return "base " + join_degrees(base_generator_degrees) + " generators " + join_degrees(module_generator_degrees);
}

namespace catalog {

FreeModuleDescription identity_faithful(int r, int p, int n) {
  if (r % p != 0) throw std::invalid_argument("p must divide r");
  FreeModuleDescription f;
  f.base_generator_degrees = multiples(r, n - 1);
  f.base_generator_degrees.push_back(n * r / p);
  std::vector<int> theta;
  for (int j = 1; j < n; ++j) theta.push_back((j - 1) * r + 1);
  theta.push_back(p != r ? (n - 1) * r + 1 : (n - 1) * (r - 1));
  f.module_generator_degrees = pair_sums(theta);
  return f;
}

FreeModuleDescription three_cycle(int r, int p, int n) {
  if (n < 4) throw NotApplicable("3-cycle catalog needs n >= 4");
  int np = n - 3;
  int m = p % 3 == 0 ? p / 3 : p;
  int top = np * r / p;  // degree of f_{n'}
  FreeModuleDescription f;
  f.base_generator_degrees.push_back(r);
  for (int d : multiples(r, np - 1)) f.base_generator_degrees.push_back(d);
  f.base_generator_degrees.push_back(m * top);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m; ++j)
      if (mod(i - 2 - 3L * j * r / p, r) == 0) f.module_generator_degrees.push_back(i + j * top);
  std::sort(f.module_generator_degrees.begin(), f.module_generator_degrees.end());
  return f;
}

FreeModuleDescription minus_two(int r, int p, int n) {
  if (n < 4) throw NotApplicable("(1,-2) catalog needs n >= 4");
  if (r % 2 != 0 || (r / 2) % p != 0) throw NotApplicable("(1,-2) is not in G(r,p,n)");
  int np = n - 2;
  int top = np * r / p;
  FreeModuleDescription f;
  f.base_generator_degrees = multiples(r, np - 1);
  f.base_generator_degrees.push_back(r * top);
  for (int i = 0; i < r; ++i)
    if (mod(2 + 2L * (r / p) * i, r) == 0) f.module_generator_degrees.push_back(i * top);
  if (f.module_generator_degrees.empty()) f.base_generator_degrees.clear();
  return f;
}

FreeModuleDescription xi_pair(int r, int n) {
  if (n < 3 || r < 2) throw NotApplicable("xi pair catalog needs n >= 3, r >= 2");
  int np = n - 2;
  FreeModuleDescription f;
  f.base_generator_degrees = multiples(r, np - 1);
  f.base_generator_degrees.push_back(r * np);
  f.module_generator_degrees = {(r - 1) * np};
  return f;
}

FreeModuleDescription permutation_diagonal(const std::vector<int>& blocks) {
  FreeModuleDescription f;
  std::vector<int> theta;
  for (int b : blocks)
    for (int j = 1; j <= b; ++j) {
      f.base_generator_degrees.push_back(j);
      theta.push_back(j - 1);
    }
  f.module_generator_degrees = pair_sums(theta);
  if (f.module_generator_degrees.empty()) f.base_generator_degrees.clear();
  return f;
}

FreeModuleDescription permutation_diagonal_three_cycle(const std::vector<int>& blocks) {
  FreeModuleDescription f;
  f.base_generator_degrees.push_back(1);
  for (int b : blocks)
    for (int j = 1; j <= b; ++j) f.base_generator_degrees.push_back(j);
  f.module_generator_degrees = {0};
  return f;
}

}  // namespace catalog

namespace {

// Cycles other than (0,1), with multiplicity.
CycleType nontrivial_cycles(const GroupElement& g) {
  CycleType out;
  for (const auto& [ak, mult] : cycle_type(g))
    if (ak != std::pair<int, int>{0, 1}) out[ak] = mult;
  return out;
}

// Multiplicities of the a-values among the 1-cycles, in increasing a.
std::vector<int> one_cycle_blocks(const CycleType& t) {
  std::vector<int> out;
  for (const auto& [ak, mult] : t)
    if (ak.second == 1) out.push_back(mult);
  return out;
}

CatalogEntry faithful_entry(const GroupElement& g, int p) {
  int r = g.r, n = g.n;
  CatalogEntry e{"zero", g, 0, {}};
  CycleType t = nontrivial_cycles(g);
  if (t.empty()) {
    e.label = "identity";
    e.module = catalog::identity_faithful(r, p, n);
    return e;
  }
  if (t.size() == 1 && t.begin()->first == std::pair<int, int>{0, 3} && t.begin()->second == 1) {
    e.label = "3-cycle";
    e.module = catalog::three_cycle(r, p, n);
    return e;
  }
  if (r % 2 == 0 && t.size() == 1 && t.begin()->first == std::pair<int, int>{r / 2, 2} && t.begin()->second == 1) {
    e.label = "(1,-2)";
    e.module = catalog::minus_two(r, p, n);
    return e;
  }
  // xi_1^l xi_2^{-l}: two nontrivial 1-cycles with opposite exponents.
  std::vector<int> ones;
  bool only_ones = true;
  for (const auto& [ak, mult] : t) {
    if (ak.second != 1) only_ones = false;
    for (int i = 0; i < mult; ++i) ones.push_back(ak.first);
  }
  if (only_ones && ones.size() == 2 && mod(ones[0] + ones[1], r) == 0) {
    int l = std::min(ones[0], ones[1]);
    e.label = "xi1^" + std::to_string(l) + " xi2^-" + std::to_string(l);
    if (p == r && 2 * l != r) e.module = catalog::xi_pair(r, n);
  }
  return e;
}

CatalogEntry permutation_entry(const GroupElement& g) {
  CatalogEntry e{"zero", g, 0, {}};
  CycleType t = cycle_type(g);
  int threes = 0, others = 0;
  for (const auto& [ak, mult] : t) {
    if (ak.second == 3) threes += mult;
    else if (ak.second != 1) others += mult;
  }
  if (others == 0 && threes == 0) {
    e.label = "diagonal";
    e.module = catalog::permutation_diagonal(one_cycle_blocks(t));
  } else if (others == 0 && threes == 1) {
    e.label = "diagonal x 3-cycle";
    e.module = catalog::permutation_diagonal_three_cycle(one_cycle_blocks(t));
  }
  return e;
}

}  // namespace

std::vector<CatalogEntry> closed_form_catalog(const Group& group, RepKind rep) {
  int p = group.p(), n = group.n();
  if (rep == RepKind::Faithful && n < 4) throw NotApplicable("faithful closed forms need n >= 4");
  if (rep == RepKind::Permutation && !(n >= 3 && (p == 1 || n >= 5)))
    throw NotApplicable("nonfaithful closed forms need n >= 3 (n >= 5 when p > 1)");
  std::vector<CatalogEntry> out;
  for (const auto& cls : group.classes()) {
    CatalogEntry e = rep == RepKind::Faithful ? faithful_entry(cls.representative, p)
                                              : permutation_entry(cls.representative);
    e.class_size = cls.size;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> closed_form_catalog(int r, int p, int n, RepKind rep) {
  return closed_form_catalog(Group(r, p, n), rep);
}

CompareReport compare(const std::vector<ClassComponent>& brute, const std::vector<CatalogEntry>& closed,
                      int max_degree) {
  CompareReport report;
  std::map<GroupElement, const ClassComponent*> by_rep;
  for (const auto& c : brute) by_rep[c.rep] = &c;
  std::map<GroupElement, bool> seen;
  for (const auto& e : closed) {
    ++report.classes_checked;
    seen[e.representative] = true;
    auto it = by_rep.find(e.representative);
    for (int d = 0; d <= max_degree; ++d) {
      std::uint64_t b = 0;
      if (it != by_rep.end()) {
        auto dit = it->second->dims_by_degree.find(d);
        if (dit != it->second->dims_by_degree.end()) b = dit->second;
      }
      std::uint64_t c = e.module.dimension(d);
      if (b != c) report.mismatches.push_back({e.representative, e.label, d, b, c});
    }
  }
  for (const auto& c : brute) {
    if (seen.count(c.rep)) continue;
    for (const auto& [d, dim] : c.dims_by_degree)
      if (d <= max_degree && dim != 0) report.mismatches.push_back({c.rep, "uncatalogued", d, dim, 0});
  }
  return report;
}

}  // namespace heckeforge
