#include "heckeforge/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace heckeforge {

std::string to_string(RepKind rep) { return rep == RepKind::Faithful ? "faithful" : "permutation"; }

RepKind parse_rep(const std::string& name) {
  if (name == "faithful") return RepKind::Faithful;
  if (name == "permutation" || name == "rho") return RepKind::Permutation;
  throw std::invalid_argument("unknown representation: " + name);
}

namespace {

int mod(long a, int r) { return static_cast<int>(((a % r) + r) % r); }

void check_compatible(const GroupElement& g, const GroupElement& h) {
  if (g.r != h.r || g.n != h.n) throw std::invalid_argument("group elements from different groups");
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t perm_rank(const std::vector<int>& perm) {
  std::uint64_t rank = 0;
  int n = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (perm[j] < perm[i]) ++smaller;
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  return rank;
}

}  // namespace

GroupElement GroupElement::identity(int r, int n) {
  GroupElement g;
  g.r = r;
  g.n = n;
  g.exps.assign(n, 0);
  g.perm.resize(n);
  std::iota(g.perm.begin(), g.perm.end(), 0);
  return g;
}

GroupElement GroupElement::make(int r, std::vector<int> exps, std::vector<int> perm) {
  if (r < 1) throw std::invalid_argument("r must be positive");
  if (exps.size() != perm.size()) throw std::invalid_argument("exps and perm differ in length");
  int n = static_cast<int>(perm.size());
  std::vector<bool> seen(n, false);
  for (int x : perm) {
    if (x < 0 || x >= n || seen[x]) throw std::invalid_argument("perm is not a bijection");
    seen[x] = true;
  }
  GroupElement g;
  g.r = r;
  g.n = n;
  for (auto& a : exps) a = mod(a, r);
  g.exps = std::move(exps);
  g.perm = std::move(perm);
  return g;
}

GroupElement GroupElement::xi(int r, int n, int i, int a) {
  if (i < 1 || i > n) throw std::invalid_argument("xi index out of range");
  GroupElement g = identity(r, n);
  g.exps[i - 1] = mod(a, r);
  return g;
}

GroupElement GroupElement::cycle(int r, int n, const std::vector<int>& points) {
  GroupElement g = identity(r, n);
  std::vector<bool> used(n, false);
  for (std::size_t t = 0; t < points.size(); ++t) {
    int from = points[t] - 1;
    int to = points[(t + 1) % points.size()] - 1;
    if (from < 0 || from >= n || used[from]) throw std::invalid_argument("bad cycle points");
    used[from] = true;
    g.perm[from] = to;
  }
  return g;
}

bool GroupElement::is_identity() const {
  for (int i = 0; i < n; ++i)
    if (exps[i] != 0 || perm[i] != i) return false;
  return true;
}

bool GroupElement::is_diagonal() const {
  for (int i = 0; i < n; ++i)
    if (perm[i] != i) return false;
  return true;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < n; ++i) {
    if (exps[i] == 0) continue;
    os << (any ? " " : "") << "xi" << (i + 1);
    if (exps[i] != 1) os << "^" << exps[i];
    any = true;
  }
  for (const auto& c : permutation_cycles(*this)) {
    if (c.size() < 2) continue;
    os << (any ? " " : "") << "(";
    for (std::size_t t = 0; t < c.size(); ++t) os << (t ? "," : "") << c[t] + 1;
    os << ")";
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  check_compatible(g, h);
  GroupElement out;
  out.r = g.r;
  out.n = g.n;
  out.exps.resize(g.n);
  out.perm.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    // (sigma . b)_{sigma(i)} = b_i
    out.exps[g.perm[i]] = g.exps[g.perm[i]] + h.exps[i];
    out.perm[i] = g.perm[h.perm[i]];
  }
  for (auto& a : out.exps) a %= g.r;
  return out;
}

GroupElement inverse(const GroupElement& g) {
  GroupElement out;
  out.r = g.r;
  out.n = g.n;
  out.exps.resize(g.n);
  out.perm.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    out.perm[g.perm[i]] = i;
    out.exps[i] = mod(-g.exps[g.perm[i]], g.r);
  }
  return out;
}

GroupElement power(const GroupElement& g, long k) {
  GroupElement base = k < 0 ? inverse(g) : g;
  long e = k < 0 ? -k : k;
  GroupElement acc = GroupElement::identity(g.r, g.n);
  while (e > 0) {
    if (e & 1) acc = multiply(acc, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return acc;
}

GroupElement conjugate_by(const GroupElement& g, const GroupElement& h) {
  return multiply(inverse(h), multiply(g, h));
}

ScaledIndex act(const GroupElement& g, int i, RepKind rep) {
  int j = g.perm[i];
  return {j, rep == RepKind::Faithful ? g.exps[j] : 0};
}

ScaledIndex coact(const GroupElement& g, int i, RepKind rep) {
  int j = g.perm[i];
  return {j, rep == RepKind::Faithful ? mod(-g.exps[j], g.r) : 0};
}

CycloMatrix matrix(const GroupElement& g, RepKind rep) {
  CycloMatrix m(g.n, g.n);
  for (int i = 0; i < g.n; ++i) {
    ScaledIndex s = act(g, i, rep);
    m(s.index, i) = root_of_unity(g.r, s.exp);
  }
  return m;
}

CycloNum det(const GroupElement& g, RepKind rep) {
  int inversions = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.perm[i] > g.perm[j]) ++inversions;
  long total = 0;
  if (rep == RepKind::Faithful)
    for (int a : g.exps) total += a;
  CycloNum value = root_of_unity(g.r, total);
  return inversions % 2 ? -value : value;
}

bool in_subgroup(const GroupElement& g, int p) {
  if (p < 1 || g.r % p != 0) throw std::invalid_argument("p must divide r");
  long total = 0;
  for (int a : g.exps) total += a;
  return total % p == 0;
}

std::vector<std::vector<int>> permutation_cycles(const GroupElement& g) {
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(g.n, false);
  for (int i = 0; i < g.n; ++i) {
    if (seen[i]) continue;
    std::vector<int> c;
    for (int j = i; !seen[j]; j = g.perm[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

CycleType cycle_type(const GroupElement& g) {
  CycleType t;
  for (const auto& c : permutation_cycles(g)) {
    long a = 0;
    for (int i : c) a += g.exps[i];
    ++t[{mod(a, g.r), static_cast<int>(c.size())}];
  }
  return t;
}

std::string cycle_type_string(const CycleType& t) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [ak, m] : t) {
    os << (first ? "" : ", ") << "(" << ak.first << "," << ak.second << "):" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

bool conjugate_in_full_group(const GroupElement& g, const GroupElement& h) {
  check_compatible(g, h);
  return cycle_type(g) == cycle_type(h);
}

std::uint64_t centralizer_order_formula(const GroupElement& g) {
  std::uint64_t order = 1;
  for (const auto& [ak, m] : cycle_type(g)) {
    order *= factorial(m);
    for (int t = 0; t < m; ++t) order *= static_cast<std::uint64_t>(ak.second) * static_cast<std::uint64_t>(g.r);
  }
  return order;
}

std::size_t default_budget() {
  if (const char* env = std::getenv("HECKEFORGE_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument("HECKEFORGE_BUDGET must be a positive integer");
  }
  return 1000000;
}

// ---------------------------------------------------------------------------

Group::Group(int r, int p, int n, std::size_t budget) : r_(r), p_(p), n_(n) {
  if (r < 1 || n < 1) throw std::invalid_argument("need r >= 1 and n >= 1");
  if (p < 1 || r % p != 0) throw std::invalid_argument("p must divide r");
  long double full = factorial(n);
  for (int i = 0; i < n; ++i) full *= r;
  if (n > 20 || full / p > static_cast<long double>(budget))
    throw BudgetExceeded("group order exceeds enumeration budget");
  // The full group G(r,1,n) is indexed as well so index lookups stay O(n^2).
  if (full > static_cast<long double>(budget) * static_cast<long double>(p) + 1)
    throw BudgetExceeded("group order exceeds enumeration budget");

  std::size_t full_size = static_cast<std::size_t>(full);
  full_to_sub_.assign(full_size, -1);
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<int> exps(n, 0);
  std::size_t full_idx = 0;
  while (true) {
    long total = 0;
    for (int a : exps) total += a;
    bool inside = total % p == 0;
    for (const auto& pm : perms) {
      if (inside) {
        full_to_sub_[full_idx] = static_cast<std::int64_t>(elements_.size());
        GroupElement g;
        g.r = r;
        g.n = n;
        g.exps = exps;
        g.perm = pm;
        elements_.push_back(std::move(g));
      }
      ++full_idx;
    }
    int pos = n - 1;
    while (pos >= 0 && exps[pos] == r - 1) exps[pos--] = 0;
    if (pos < 0) break;
    ++exps[pos];
  }

  inverse_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) inverse_[i] = index_of(inverse(elements_[i]));

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  class_id_.assign(elements_.size(), unset);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (class_id_[i] != unset) continue;
    std::size_t id = classes_.size();
    std::size_t size = 0;
    for (std::size_t h = 0; h < elements_.size(); ++h) {
      std::size_t c = index_of(multiply(elements_[inverse_[h]], multiply(elements_[i], elements_[h])));
      if (class_id_[c] == unset) {
        class_id_[c] = id;
        ++size;
      }
    }
    classes_.push_back({elements_[i], size});
  }
}

std::size_t Group::full_index(const GroupElement& g) const {
  if (g.r != r_ || g.n != n_) throw std::invalid_argument("element from a different group");
  std::uint64_t e = 0;
  for (int a : g.exps) e = e * static_cast<std::uint64_t>(r_) + static_cast<std::uint64_t>(a);
  return static_cast<std::size_t>(e * factorial(n_) + perm_rank(g.perm));
}

bool Group::contains(const GroupElement& g) const {
  if (g.r != r_ || g.n != n_) return false;
  return full_to_sub_[full_index(g)] >= 0;
}

std::size_t Group::index_of(const GroupElement& g) const {
  std::int64_t s = full_to_sub_[full_index(g)];
  if (s < 0) throw std::invalid_argument("element not in G(r,p,n): " + g.to_string());
  return static_cast<std::size_t>(s);
}

std::size_t Group::multiply_index(std::size_t a, std::size_t b) const {
  return index_of(multiply(elements_[a], elements_[b]));
}

std::vector<std::size_t> Group::centralizer_indices(const GroupElement& g) const {
  std::vector<std::size_t> out;
  for (std::size_t h = 0; h < elements_.size(); ++h)
    if (multiply(elements_[h], g) == multiply(g, elements_[h])) out.push_back(h);
  return out;
}

std::vector<GroupElement> Group::centralizer(const GroupElement& g) const {
  std::vector<GroupElement> out;
  for (std::size_t h : centralizer_indices(g)) out.push_back(elements_[h]);
  return out;
}

std::vector<GroupElement> Group::conjugacy_class(const GroupElement& g) const {
  std::size_t id = class_of(g);
  std::vector<GroupElement> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (class_id_[i] == id) out.push_back(elements_[i]);
  return out;
}

std::vector<ConjugacyClass> conjugacy_classes(int r, int p, int n, std::size_t budget) {
  return Group(r, p, n, budget).classes();
}

std::vector<GroupElement> centralizer(const GroupElement& g, int p, std::size_t budget) {
  Group grp(g.r, p, g.n, budget);
  if (!grp.contains(g)) throw std::invalid_argument("element not in G(r,p,n)");
  return grp.centralizer(g);
}

}  // namespace heckeforge
