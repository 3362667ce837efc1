#include "heckeforge/ncalg.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace heckeforge {

namespace {

GroupElement simple_reflection(int r, int n, int i) { return GroupElement::cycle(r, n, {i + 1, i + 2}); }

// xi_i^a xi_j^b (1-based)
GroupElement xi_pair(int r, int n, int i, int a, int j, int b) {
  return multiply(GroupElement::xi(r, n, i, ((a % r) + r) % r), GroupElement::xi(r, n, j, ((b % r) + r) % r));
}

GroupElement diag_part(const GroupElement& g) { return GroupElement::make(g.r, g.exps, GroupElement::identity(g.r, g.n).perm); }

GroupElement perm_part(const GroupElement& g) { return GroupElement::make(g.r, std::vector<int>(g.n, 0), g.perm); }

Exponents unit_exps(int n, int k) {
  Exponents e(n, 0);
  e[k] = 1;
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// Presentation

Presentation Presentation::drinfeld(SkewFormFamily family) {
  Presentation pr;
  pr.kind_ = Kind::Drinfeld;
  pr.r_ = family.r;
  pr.p_ = family.p;
  pr.n_ = family.n;
  pr.rep_ = family.rep;
  pr.trusted_ = pbw_check(family).ok();
  const int n = family.n;
  pr.brackets_.assign(n, std::vector<std::vector<std::pair<GroupElement, CycloNum>>>(n));
  for (const auto& [g, a] : family.support)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (!a.entry(x, y).is_zero()) pr.brackets_[x][y].emplace_back(g, a.entry(x, y));
  pr.family_ = std::move(family);
  pr.move_cache_ = std::make_shared<std::map<std::pair<GroupElement, int>, NCElement>>();
  return pr;
}

Presentation Presentation::hstar(int r, int n) {
  if (r < 1 || n < 2) throw std::invalid_argument("H* needs r >= 1 and n >= 2");
  Presentation pr;
  pr.kind_ = Kind::HStar;
  pr.r_ = r;
  pr.p_ = 1;
  pr.n_ = n;
  pr.rep_ = RepKind::Permutation;
  pr.family_.r = r;
  pr.family_.n = n;
  pr.brackets_.assign(n, std::vector<std::vector<std::pair<GroupElement, CycloNum>>>(n));
  pr.move_cache_ = std::make_shared<std::map<std::pair<GroupElement, int>, NCElement>>();
  return pr;
}

std::string Presentation::name() const {
  std::ostringstream os;
  if (kind_ == Kind::HStar)
    os << "H*(" << r_ << ",1," << n_ << ")";
  else
    os << "Drinfeld G(" << r_ << "," << p_ << "," << n_ << ") " << to_string(rep_);
  return os.str();
}

const std::vector<std::pair<GroupElement, CycloNum>>& Presentation::bracket(int a, int b) const {
  return brackets_.at(a).at(b);
}

const NCElement& Presentation::group_move(const GroupElement& g, int k) const {
  if (k < 0 || k >= n_) throw std::out_of_range("variable index out of range");
  if (g.r != r_ || g.n != n_) throw std::invalid_argument("group element does not match the presentation");
  auto key = std::make_pair(g, k);
  auto it = move_cache_->find(key);
  if (it != move_cache_->end()) return it->second;
  return move_cache_->emplace(std::move(key), compute_move(g, k)).first->second;
}

std::vector<int> simple_reflection_word(const GroupElement& sigma) {
  std::vector<int> perm = sigma.perm;
  std::vector<int> collected;
  const int n = sigma.n;
  while (true) {
    int i = 0;
    while (i + 1 < n && perm[i] < perm[i + 1]) ++i;
    if (i + 1 >= n) break;
    // pi = (pi s_i) s_i, and pi s_i has one inversion fewer
    std::swap(perm[i], perm[i + 1]);
    collected.push_back(i);
  }
  std::reverse(collected.begin(), collected.end());
  GroupElement check = GroupElement::identity(sigma.r, n);
  for (int i : collected) check = multiply(check, simple_reflection(sigma.r, n, i));
  if (check != perm_part(sigma)) throw std::logic_error("simple reflection word does not reproduce the permutation");
  return collected;
}

NCElement Presentation::compute_move(const GroupElement& g, int k) const {
  NCElement out(r_, n_);
  if (kind_ == Kind::Drinfeld) {
    ScaledIndex s = act(g, k, rep_);
    out.add_term(unit_exps(n_, s.index), g, root_of_unity(r_, s.exp));
    return out;
  }
  // g = d sigma, sigma = s_{i_1} ... s_{i_L}; push v_k leftward through the word, keeping v_cur W + C.
  const std::vector<int> word = simple_reflection_word(g);
  int cur = k;
  GroupElement w = GroupElement::identity(r_, n_);
  std::map<GroupElement, CycloNum> corr;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    const GroupElement s = simple_reflection(r_, n_, i);
    std::map<GroupElement, CycloNum> next;
    for (const auto& [h, c] : corr) next[multiply(s, h)] += c;
    if (cur == i || cur == i + 1) {
      // s_i v_{i+1} = v_i s_i + sum_a xi_i^a xi_{i+1}^{-a};  s_i v_i = v_{i+1} s_i - sum_a ...
      const CycloNum sign = cur == i + 1 ? CycloNum(1) : CycloNum(-1);
      for (int a = 0; a < r_; ++a) next[multiply(xi_pair(r_, n_, i + 1, a, i + 2, -a), w)] += sign;
      cur = cur == i ? i + 1 : i;
    }
    w = multiply(s, w);
    corr.clear();
    for (auto& [h, c] : next)
      if (!c.is_zero()) corr.emplace(h, c);
  }
  const GroupElement d = diag_part(g);
  if (multiply(d, w) != g) throw std::logic_error("group factorization failed");
  out.add_term(unit_exps(n_, cur), g, CycloNum(1));
  for (const auto& [h, c] : corr) out.add_term(Exponents(n_, 0), multiply(d, h), c);
  for (const auto& [key, c] : out.terms()) {
    int deg = std::accumulate(key.first.begin(), key.first.end(), 0);
    if (deg > 1 || (deg == 1 && key.second != g)) throw std::logic_error("group_move produced a non-degree-0 correction");
  }
  return out;
}

NCElement group_move(const GroupElement& g, int k, const Presentation& pres) { return pres.group_move(g, k); }

// ---------------------------------------------------------------------------
// Multiplication

namespace {

struct State {
  std::vector<int> word;  // variables left of g, in order
  GroupElement g;
  std::vector<int> rest;  // variables right of g, still to be moved
  std::size_t pos = 0;
  GroupElement tail;
  CycloNum c;
};

std::vector<int> expand(const Exponents& mu) {
  std::vector<int> w;
  for (std::size_t i = 0; i < mu.size(); ++i)
    for (int t = 0; t < mu[i]; ++t) w.push_back(static_cast<int>(i));
  return w;
}

Exponents collect(int n, const std::vector<int>& word) {
  Exponents e(n, 0);
  for (int x : word) ++e[x];
  return e;
}

}  // namespace

NCElement multiply(const NCElement& x, const NCElement& y, const Presentation& pres) {
  const int n = pres.n();
  NCElement out(pres.r(), n);
  if (x.is_zero() || y.is_zero()) return out;
  if (x.n() != n || y.n() != n) throw std::invalid_argument("element does not match the presentation");
  const bool commutative = pres.kind() == Presentation::Kind::HStar;
  std::vector<State> stack;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms())
      stack.push_back({expand(kx.first), kx.second, expand(ky.first), 0, ky.second, cx * cy});
  while (!stack.empty()) {
    State s = std::move(stack.back());
    stack.pop_back();
    if (s.pos < s.rest.size()) {
      const NCElement& moved = pres.group_move(s.g, s.rest[s.pos]);
      for (const auto& [key, c] : moved.terms()) {
        State t{s.word, key.second, s.rest, s.pos + 1, s.tail, s.c * c};
        for (int v = 0; v < n; ++v)
          if (key.first[v]) t.word.push_back(v);
        stack.push_back(std::move(t));
      }
      continue;
    }
    const GroupElement g = multiply(s.g, s.tail);
    if (commutative) {
      out.add_term(collect(n, s.word), g, s.c);
      continue;
    }
    std::size_t p = 0;
    while (p + 1 < s.word.size() && s.word[p] <= s.word[p + 1]) ++p;
    if (p + 1 >= s.word.size()) {
      out.add_term(collect(n, s.word), g, s.c);
      continue;
    }
    // v_a v_b = v_b v_a + sum a_h(v_a, v_b) h-bar with a > b
    const int a = s.word[p], b = s.word[p + 1];
    for (const auto& [h, val] : pres.bracket(a, b)) {
      State t{std::vector<int>(s.word.begin(), s.word.begin() + p), h,
              std::vector<int>(s.word.begin() + p + 2, s.word.end()), 0, g, s.c * val};
      stack.push_back(std::move(t));
    }
    std::swap(s.word[p], s.word[p + 1]);
    stack.push_back({std::move(s.word), g, {}, 0, GroupElement::identity(pres.r(), n), s.c});
  }
  return out;
}

NCElement commutator(const NCElement& x, const NCElement& y, const Presentation& pres) {
  return multiply(x, y, pres) - multiply(y, x, pres);
}

NCElement product(const std::vector<NCElement>& factors, const Presentation& pres) {
  NCElement acc = NCElement::scalar(pres.r(), pres.n(), CycloNum(1));
  for (const auto& f : factors) acc = multiply(acc, f, pres);
  return acc;
}

// ---------------------------------------------------------------------------
// H*_{r,1,n} relations

NCElement tilde_generator(int k, int r, int n) {
  if (k < 1 || k > n) throw std::out_of_range("tilde_generator index out of range");
  NCElement out = NCElement::variable(r, n, k - 1);
  const CycloNum half(make_rational(1, 2));
  for (int j = 1; j <= n; ++j) {
    if (j == k) continue;
    const CycloNum sign = j < k ? -half : half;
    for (int a = 0; a < r; ++a)
      out.add_term(Exponents(n, 0), multiply(xi_pair(r, n, k, a, j, -a), GroupElement::cycle(r, n, {k, j})), sign);
  }
  return out;
}

NCElement three_cycle_bracket_sum(int m, int k, int r, int n, const CycloNum& c) {
  NCElement out(r, n);
  for (int i = 1; i <= n; ++i) {
    if (i == m || i == k) continue;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        GroupElement d = multiply(xi_pair(r, n, m, a, k, b), GroupElement::xi(r, n, i, (((-a - b) % r) + r) % r));
        out.add_term(Exponents(n, 0), multiply(d, GroupElement::cycle(r, n, {m, k, i})), c);
        out.add_term(Exponents(n, 0), multiply(d, GroupElement::cycle(r, n, {m, i, k})), -c);
      }
  }
  return out;
}

Reln4Result verify_reln4(int j, int k, int m, const Presentation& pres) {
  if (pres.kind() != Presentation::Kind::HStar) throw std::invalid_argument("verify_reln4 runs in H*");
  const int r = pres.r(), n = pres.n();
  if (!(1 <= j && j < k && k <= n && 1 <= m && m <= n)) throw std::invalid_argument("need 1 <= j < k <= n, 1 <= m <= n");
  const GroupElement jk = GroupElement::cycle(r, n, {j, k});
  Reln4Result res;
  res.computed = multiply(NCElement::group(jk), NCElement::variable(r, n, m - 1), pres);
  NCElement e(r, n);
  const Exponents zero(n, 0);
  auto add_group = [&](const GroupElement& diag, const GroupElement& perm, const CycloNum& c) {
    e.add_term(zero, multiply(diag, perm), c);
  };
  const GroupElement id = GroupElement::identity(r, n);
  if (m < j || k < m) {
    e.add_term(unit_exps(n, m - 1), jk, CycloNum(1));
  } else if (j < m && m < k) {
    e.add_term(unit_exps(n, m - 1), jk, CycloNum(1));
    for (int a = 0; a < r; ++a) {
      add_group(xi_pair(r, n, m, a, k, -a), GroupElement::cycle(r, n, {j, m, k}), CycloNum(1));
      add_group(xi_pair(r, n, j, a, m, -a), GroupElement::cycle(r, n, {j, k, m}), CycloNum(-1));
    }
  } else if (m == j) {
    e.add_term(unit_exps(n, k - 1), jk, CycloNum(1));
    for (int i = j + 1; i < k; ++i)
      for (int a = 0; a < r; ++a) add_group(xi_pair(r, n, i, a, k, -a), GroupElement::cycle(r, n, {j, i, k}), CycloNum(-1));
    for (int a = 0; a < r; ++a) add_group(xi_pair(r, n, j, a, k, -a), id, CycloNum(-1));
  } else {
    e.add_term(unit_exps(n, j - 1), jk, CycloNum(1));
    for (int i = j + 1; i < k; ++i)
      for (int a = 0; a < r; ++a) add_group(xi_pair(r, n, i, a, j, -a), GroupElement::cycle(r, n, {k, i, j}), CycloNum(1));
    for (int a = 0; a < r; ++a) add_group(xi_pair(r, n, j, a, k, -a), id, CycloNum(1));
  }
  res.expected = e;
  res.ok = res.computed == res.expected;
  return res;
}

Reln4Result verify_reln4(int j, int k, int m, int r, int n) { return verify_reln4(j, k, m, Presentation::hstar(r, n)); }

bool IsoReport::ok() const {
  return xi_failures == 0 && commute_failures == 0 && action_failures == 0 && bracket_failures == 0 &&
         drinfeld_failures == 0 && scaled_failures == 0 && scaling_ratio_ok && xi_checks > 0 && bracket_checks > 0;
}

IsoReport verify_iso(int r, int n) {
  if (n < 3) throw std::invalid_argument("verify_iso needs n >= 3");
  IsoReport rep;
  rep.r = r;
  rep.n = n;
  const Presentation h = Presentation::hstar(r, n);
  const Presentation a = Presentation::drinfeld(build_a_r1n(r, n));
  std::vector<NCElement> vt;
  for (int k = 1; k <= n; ++k) vt.push_back(tilde_generator(k, r, n));
  auto fail = [&](std::size_t& counter, const std::string& what) {
    ++counter;
    if (rep.failures.size() < 16) rep.failures.push_back(what);
  };
  for (int i = 1; i <= n; ++i) {
    NCElement xi = NCElement::group(GroupElement::xi(r, n, i));
    for (int k = 1; k <= n; ++k) {
      ++rep.xi_checks;
      if (multiply(xi, vt[k - 1], h) != multiply(vt[k - 1], xi, h))
        fail(rep.xi_failures, "xi_" + std::to_string(i) + " v~_" + std::to_string(k));
    }
  }
  for (int i = 1; i < n; ++i) {
    NCElement s = NCElement::group(simple_reflection(r, n, i - 1));
    for (int k = 1; k <= n; ++k) {
      if (k == i || k == i + 1) continue;
      ++rep.commute_checks;
      if (multiply(s, vt[k - 1], h) != multiply(vt[k - 1], s, h))
        fail(rep.commute_failures, "s_" + std::to_string(i) + " v~_" + std::to_string(k));
    }
    ++rep.action_checks;
    if (multiply(s, vt[i - 1], h) != multiply(vt[i], s, h)) fail(rep.action_failures, "s_" + std::to_string(i) + " v~_i");
  }
  const CycloNum quarter(make_rational(1, 4)), third(make_rational(1, 3)), four_thirds(make_rational(4, 3));
  for (int m = 1; m <= n; ++m)
    for (int k = m + 1; k <= n; ++k) {
      const std::string tag = "(" + std::to_string(m) + "," + std::to_string(k) + ")";
      NCElement br = commutator(vt[m - 1], vt[k - 1], h);
      ++rep.bracket_checks;
      if (br != three_cycle_bracket_sum(m, k, r, n, quarter)) fail(rep.bracket_failures, "[v~_m, v~_k] " + tag);
      NCElement abr = commutator(NCElement::variable(r, n, m - 1), NCElement::variable(r, n, k - 1), a);
      ++rep.drinfeld_checks;
      if (abr != three_cycle_bracket_sum(m, k, r, n, third)) fail(rep.drinfeld_failures, "[v_m, v_k] in A " + tag);
      ++rep.scaled_checks;
      if (br * four_thirds != abr) fail(rep.scaled_failures, "(4/3)[v~_m, v~_k] vs A " + tag);
    }
  // (2/sqrt 3)^2 (1/4) = 1/3
  rep.scaling_ratio_ok = quarter / third == CycloNum(make_rational(3, 4)) && four_thirds * quarter == third;
  return rep;
}

// ---------------------------------------------------------------------------
// PBW dimension

NCElement random_element(std::mt19937_64& rng, const Presentation& pres, int max_degree, int max_terms) {
  const int n = pres.n(), r = pres.r();
  NCElement out(r, n);
  std::uniform_int_distribution<int> nterms(1, std::max(1, max_terms));
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> var(0, n - 1);
  std::uniform_int_distribution<int> expo(0, r - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  const int t = nterms(rng);
  for (int s = 0; s < t; ++s) {
    Exponents mu(n, 0);
    const int d = deg(rng);
    for (int q = 0; q < d; ++q) ++mu[var(rng)];
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> exps(n);
    for (auto& e : exps) e = expo(rng);
    GroupElement g = GroupElement::make(r, exps, perm);
    while (!in_subgroup(g, pres.p())) {
      exps[0] = (exps[0] + 1) % r;
      g = GroupElement::make(r, exps, perm);
    }
    int c = coef(rng);
    out.add_term(mu, g, CycloNum(c == 0 ? 1 : c));
  }
  return out;
}

PBWDimensionReport pbw_dimension_check(const Presentation& pres, int max_degree, std::size_t triples, std::uint64_t seed) {
  const int n = pres.n(), r = pres.r();
  Group group(r, pres.p(), n);
  PBWDimensionReport rep;
  // C(n + N, n) |G|
  std::size_t binom = 1;
  for (int i = 1; i <= n; ++i) binom = binom * (max_degree + i) / i;
  rep.expected = binom * group.order();

  std::vector<std::vector<int>> words{{}};
  for (int len = 1; len <= max_degree; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == len - 1)
        for (int v = 0; v < n; ++v) {
          auto x = w;
          x.push_back(v);
          next.push_back(std::move(x));
        }
    words.insert(words.end(), next.begin(), next.end());
  }

  std::map<TermKey, std::size_t> index;
  SparseEchelon ech;
  auto add_vector = [&](const NCElement& x) {
    SparseVector sv;
    for (const auto& [key, c] : x.terms()) {
      auto it = index.emplace(key, index.size()).first;
      sv[it->second] = c;
    }
    ech.add(std::move(sv));
  };
  for (const auto& w : words) {
    std::vector<NCElement> vars;
    for (int v : w) vars.push_back(NCElement::variable(r, n, v));
    for (const auto& g : group.elements()) {
      const NCElement gbar = NCElement::group(g);
      // left-nested and right-nested products of v_{w_1} ... v_{w_L} g-bar
      NCElement left = NCElement::scalar(r, n, CycloNum(1));
      for (const auto& v : vars) left = multiply(left, v, pres);
      left = multiply(left, gbar, pres);
      NCElement right = gbar;
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) right = multiply(*it, right, pres);
      ++rep.association_checks;
      if (left != right) ++rep.association_failures;
      add_vector(left);
      // g-bar v_{w_1} ... v_{w_L}, exercising group_move
      NCElement moved = gbar;
      for (const auto& v : vars) moved = multiply(moved, v, pres);
      add_vector(moved);
    }
  }
  rep.count = ech.rank();

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < triples; ++t) {
    NCElement x = random_element(rng, pres, 2, 2), y = random_element(rng, pres, 2, 2), z = random_element(rng, pres, 2, 2);
    ++rep.triples;
    if (multiply(multiply(x, y, pres), z, pres) != multiply(x, multiply(y, z, pres), pres)) ++rep.triple_failures;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

int parse_int(const std::string& s, const std::string& token) {
  if (s.empty()) throw std::invalid_argument("bad token: " + token);
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad token: " + token);
  }
  if (used != s.size()) throw std::invalid_argument("bad token: " + token);
  return v;
}

NCElement parse_token(const std::string& tok, const Presentation& pres) {
  const int r = pres.r(), n = pres.n();
  auto check_index = [&](int k) {
    if (k < 1 || k > n) throw std::invalid_argument("index out of range in token: " + tok);
  };
  GroupElement g = GroupElement::identity(r, n);
  if (tok.size() > 1 && tok[0] == 'v' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
    int k = parse_int(tok.substr(1), tok);
    check_index(k);
    return NCElement::variable(r, n, k - 1);
  }
  if (tok.rfind("xi", 0) == 0) {
    std::string body = tok.substr(2);
    int a = 1;
    auto caret = body.find('^');
    if (caret != std::string::npos) {
      a = parse_int(body.substr(caret + 1), tok);
      body = body.substr(0, caret);
    }
    int k = parse_int(body, tok);
    check_index(k);
    g = GroupElement::xi(r, n, k, ((a % r) + r) % r);
  } else if (tok.size() > 1 && tok[0] == 's' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
    int i = parse_int(tok.substr(1), tok);
    if (i < 1 || i >= n) throw std::invalid_argument("index out of range in token: " + tok);
    g = simple_reflection(r, n, i - 1);
  } else if (tok.rfind("cycle(", 0) == 0 && tok.back() == ')') {
    std::vector<int> pts;
    std::stringstream ss(tok.substr(6, tok.size() - 7));
    std::string part;
    while (std::getline(ss, part, ',')) {
      int k = parse_int(part, tok);
      check_index(k);
      pts.push_back(k);
    }
    if (pts.size() < 2) throw std::invalid_argument("cycle needs at least two points: " + tok);
    g = GroupElement::cycle(r, n, pts);
  } else {
    return NCElement::scalar(r, n, parse_cyclo(tok));
  }
  if (!in_subgroup(g, pres.p())) throw std::invalid_argument("element not in the group: " + tok);
  return NCElement::group(g);
}

}  // namespace

NCElement parse_expression(const std::string& text, const Presentation& pres) {
  std::istringstream in(text);
  std::string tok;
  NCElement total(pres.r(), pres.n());
  NCElement cur = NCElement::scalar(pres.r(), pres.n(), CycloNum(1));
  CycloNum sign(1);
  bool any = false, in_word = false;
  auto flush = [&]() {
    if (in_word) total += cur * sign;
    cur = NCElement::scalar(pres.r(), pres.n(), CycloNum(1));
    in_word = false;
  };
  while (in >> tok) {
    if (tok == "+" || tok == "-") {
      flush();
      sign = tok == "+" ? CycloNum(1) : CycloNum(-1);
      continue;
    }
    in_word = any = true;
    cur = multiply(cur, parse_token(tok, pres), pres);
  }
  if (!any) throw std::invalid_argument("empty expression");
  flush();
  return total;
}

}  // namespace heckeforge
