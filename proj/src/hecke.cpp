#include "heckeforge/hecke.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace heckeforge {

namespace {

CycloVector unit(int n, int i) {
  CycloVector e(n, CycloNum(0));
  e[i] = CycloNum(1);
  return e;
}

std::string indices_string(const std::vector<int>& idx) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i] + 1;
  os << ")";
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// SkewForm / SkewFormFamily

SkewForm SkewForm::zero(int n) { return SkewForm{CycloMatrix(n, n)}; }

bool SkewForm::is_skew() const {
  for (int i = 0; i < n(); ++i)
    for (int j = i; j < n(); ++j)
      if (matrix(i, j) != -matrix(j, i)) return false;
  return true;
}

CycloNum SkewForm::operator()(const CycloVector& v, const CycloVector& w) const {
  CycloNum s(0);
  for (int i = 0; i < n(); ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < n(); ++j)
      if (!w[j].is_zero() && !matrix(i, j).is_zero()) s += v[i] * matrix(i, j) * w[j];
  }
  return s;
}

SkewForm SkewForm::pulled_back(const GroupElement& h, RepKind rep) const {
  CycloMatrix m = heckeforge::matrix(h, rep);
  return SkewForm{m.transpose() * matrix * m};
}

SkewForm SkewFormFamily::form(const GroupElement& g) const {
  auto it = support.find(g);
  return it == support.end() ? SkewForm::zero(n) : it->second;
}

void SkewFormFamily::set(const GroupElement& g, SkewForm a) {
  if (a.n() != n) throw std::invalid_argument("form size does not match n");
  if (!a.is_skew()) throw std::invalid_argument("form is not skew-symmetric");
  if (a.is_zero())
    support.erase(g);
  else
    support[g] = std::move(a);
}

// ---------------------------------------------------------------------------
// Parameter space

GHAParamReport param_space(int r, int p, int n, RepKind rep) {
  Group group(r, p, n);
  GHAParamReport out;
  out.r = r;
  out.p = p;
  out.n = n;
  out.rep = rep;
  std::vector<CycloVector> full;
  for (int i = 0; i < n; ++i) full.push_back(unit(n, i));
  std::size_t published = 0;
  for (const auto& cls : group.classes()) {
    const GroupElement& g = cls.representative;
    std::size_t codim = n - fixed_space(g, rep).size();
    if (codim == 2) {
      if (hochschild_character(group, g, rep).is_trivial()) {
        ++out.d;
        out.d_classes.push_back(g);
      }
    } else if (codim == 0) {
      auto z = group.centralizer(g);
      auto basis = reynolds_semiinvariant_basis(z, CharacterTable::trivial(z), rep, 0, 2, full);
      out.lambda2_dims.emplace_back(g, basis.size());
      out.total += basis.size();
    }
    if (rep == RepKind::Permutation) {
      auto ct = cycle_type(g);
      int threes = 0;
      bool other = false;
      for (const auto& [ak, mult] : ct) {
        if (ak.second == 3) threes += mult;
        else if (ak.second != 1) other = true;
      }
      if (threes == 1 && !other) ++published;
    }
  }
  out.total += out.d;
  if (rep == RepKind::Permutation) {
    out.paper_count = published;
    out.discrepancy_flag = published != out.total;
  }
  return out;
}

std::size_t linear_system_param_dimension(int r, int p, int n, RepKind rep) {
  Group group(r, p, n);
  const std::size_t order = group.order();
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, std::size_t> pair_index;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pair_index[{i, j}] = pairs.size();
      pairs.emplace_back(i, j);
    }
  const std::size_t np = pairs.size();
  const std::size_t unknowns = order * np;
  if (unknowns == 0) return 0;

  // a_g(v_k, v_l) as a sparse combination of unknowns, scaled by c.
  auto add_entry = [&](SparseVector& eq, std::size_t g, int k, int l, const CycloNum& c) {
    if (k == l || c.is_zero()) return;
    CycloNum s = c;
    if (k > l) {
      std::swap(k, l);
      s = -s;
    }
    eq[g * np + pair_index.at({k, l})] += s;
  };

  SparseEchelon ech;
  for (std::size_t gi = 0; gi < order; ++gi) {
    for (std::size_t hi = 0; hi < order; ++hi) {
      const GroupElement& h = group.element(hi);
      std::size_t conj = group.multiply_index(group.multiply_index(group.inverse_index(hi), gi), hi);
      for (const auto& [i, j] : pairs) {
        ScaledIndex hi_ = act(h, i, rep), hj = act(h, j, rep);
        SparseVector eq;
        add_entry(eq, conj, i, j, CycloNum(1));
        add_entry(eq, gi, hi_.index, hj.index, -root_of_unity(r, hi_.exp + hj.exp));
        ech.add(std::move(eq));
      }
    }
    // Jacobi: a(v_j,v_k)(e_i - g e_i) + a(v_k,v_i)(e_j - g e_j) + a(v_i,v_j)(e_k - g e_k) = 0.
    const GroupElement& g = group.element(gi);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          std::vector<SparseVector> comps(n);
          const int trip[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
          for (const auto& t : trip) {
            int u = t[0];
            ScaledIndex gu = act(g, u, rep);
            add_entry(comps[u], gi, t[1], t[2], CycloNum(1));
            add_entry(comps[gu.index], gi, t[1], t[2], -root_of_unity(r, gu.exp));
          }
          for (auto& c : comps) ech.add(std::move(c));
        }
  }
  return unknowns - ech.rank();
}

// ---------------------------------------------------------------------------
// Constructing families

void extend_by_conjugation(SkewFormFamily& family, const Group& group, const GroupElement& g, const SkewForm& a) {
  if (!group.contains(g)) throw std::invalid_argument("element not in the group: " + g.to_string());
  if (!a.is_skew()) throw std::invalid_argument("form is not skew-symmetric");
  std::map<GroupElement, SkewForm> orbit;
  for (const auto& h : group.elements()) {
    GroupElement c = conjugate_by(g, h);
    SkewForm b = a.pulled_back(h, family.rep);
    auto [it, fresh] = orbit.emplace(c, b);
    if (!fresh && !(it->second == b))
      throw IllDefinedExtension("conjugation gives two different forms on " + c.to_string() + " (via h = " +
                                h.to_string() + ")");
  }
  for (auto& [c, b] : orbit) family.set(c, std::move(b));
}

SkewForm perp_volume_form(const GroupElement& g, RepKind rep, const CycloNum& c) {
  auto fixed = fixed_space(g, rep);
  auto perp = perp_space(g, rep);
  if (perp.size() != 2) throw std::invalid_argument("perp_volume_form needs codimension 2, got " +
                                                    std::to_string(perp.size()));
  std::vector<CycloVector> cols = fixed;
  cols.insert(cols.end(), perp.begin(), perp.end());
  CycloMatrix binv = inverse(CycloMatrix::from_columns(cols));
  const int n = g.n;
  const std::size_t s = fixed.size();
  CycloVector w1 = binv.row(s), w2 = binv.row(s + 1);
  SkewForm out = SkewForm::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.matrix(i, j) = c * (w1[i] * w2[j] - w2[i] * w1[j]);
  return out;
}

namespace {

// alpha/3 (E_ij - E_ji + E_jk - E_kj + E_ki - E_ik) for a cycle i -> j -> k (0-based).
SkewForm three_cycle_form(int n, int i, int j, int k, const CycloNum& alpha) {
  SkewForm a = SkewForm::zero(n);
  CycloNum t = alpha / CycloNum(3);
  const int e[3][2] = {{i, j}, {j, k}, {k, i}};
  for (const auto& [x, y] : e) {
    a.matrix(x, y) += t;
    a.matrix(y, x) -= t;
  }
  return a;
}

bool is_diagonal_three_cycle(const GroupElement& g) {
  auto cycles = permutation_cycles(g);
  int threes = 0;
  for (const auto& c : cycles) {
    if (c.size() == 3) ++threes;
    else if (c.size() != 1) return false;
  }
  return threes == 1;
}

}  // namespace

std::vector<GroupElement> diagonal_three_cycle_classes(int r, int n) {
  std::vector<GroupElement> out;
  if (n < 3) return out;
  Group group(r, 1, n);
  for (const auto& cls : group.classes())
    if (is_diagonal_three_cycle(cls.representative)) out.push_back(cls.representative);
  return out;
}

SkewFormFamily build_generic(int r, int n, const std::map<GroupElement, CycloNum>& scalars) {
  if (n < 3) throw std::invalid_argument("the preset needs n >= 3");
  Group group(r, 1, n);
  SkewFormFamily fam;
  fam.r = r;
  fam.p = 1;
  fam.n = n;
  fam.rep = RepKind::Permutation;
  std::set<std::size_t> seen;
  for (const auto& [g, alpha] : scalars) {
    if (!group.contains(g)) throw std::invalid_argument("element not in G(r,1,n): " + g.to_string());
    if (!is_diagonal_three_cycle(g)) throw std::invalid_argument("not a diagonal x 3-cycle element: " + g.to_string());
    if (!seen.insert(group.class_of(g)).second)
      throw std::invalid_argument("two scalars given for the class of " + g.to_string());
    if (alpha.is_zero()) continue;
    for (const auto& c : permutation_cycles(g)) {
      if (c.size() != 3) continue;
      // permutation_cycles lists c[0] -> c[1] -> c[2] in the direction of the permutation
      extend_by_conjugation(fam, group, g, three_cycle_form(n, c[0], c[1], c[2], alpha));
    }
  }
  return fam;
}

SkewFormFamily build_a_r1n(int r, int n) {
  if (n < 3) throw std::invalid_argument("the preset needs n >= 3");
  return build_generic(r, n, {{GroupElement::cycle(r, n, {1, 2, 3}), CycloNum(1)}});
}

SkewFormFamily build_preset(Preset preset, int r, int n, const std::map<GroupElement, CycloNum>& scalars) {
  return preset == Preset::AR1n ? build_a_r1n(r, n) : build_generic(r, n, scalars);
}

// ---------------------------------------------------------------------------
// PBW conditions

std::string PBWWitness::to_string() const {
  std::ostringstream os;
  os << condition << " fails at g = " << g.to_string();
  if (h) os << ", h = " << h->to_string();
  if (!indices.empty()) os << ", indices " << indices_string(indices);
  return os.str();
}

PBWReport pbw_check(const SkewFormFamily& family, std::size_t max_witnesses) {
  PBWReport rep;
  Group group(family.r, family.p, family.n);
  const int n = family.n;
  auto note = [&](PBWWitness w) {
    if (rep.witnesses.size() < max_witnesses) rep.witnesses.push_back(std::move(w));
  };
  for (const auto& [g, a] : family.support) {
    if (!group.contains(g)) throw std::invalid_argument("support element not in the group: " + g.to_string());
    if (!a.is_skew()) {
      rep.invariance = false;
      note({"skew", g, std::nullopt, {}});
    }
  }
  // Invariance a_{h^{-1} g h} = h^* a_g; checking g in the support also catches stray conjugates.
  for (const auto& [g, a] : family.support) {
    for (const auto& h : group.elements()) {
      GroupElement c = conjugate_by(g, h);
      SkewForm want = a.pulled_back(h, family.rep);
      SkewForm got = family.form(c);
      if (!(got == want)) {
        rep.invariance = false;
        std::vector<int> idx;
        for (int i = 0; i < n && idx.empty(); ++i)
          for (int j = i + 1; j < n; ++j)
            if (got.entry(i, j) != want.entry(i, j)) {
              idx = {i, j};
              break;
            }
        note({"invariance", g, h, idx});
      }
    }
  }
  for (const auto& [g, a] : family.support) {
    CycloMatrix m = matrix(g, family.rep);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        for (int k = j + 1; k < n; ++k) {
          CycloVector sum(n, CycloNum(0));
          const int trip[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
          for (const auto& t : trip) {
            CycloNum c = a.entry(t[1], t[2]);
            if (c.is_zero()) continue;
            sum[t[0]] += c;
            for (int x = 0; x < n; ++x)
              if (!m(x, t[0]).is_zero()) sum[x] -= c * m(x, t[0]);
          }
          if (std::any_of(sum.begin(), sum.end(), [](const CycloNum& c) { return !c.is_zero(); })) {
            rep.jacobi = false;
            note({"jacobi", g, std::nullopt, {i, j, k}});
          }
        }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Koszul maps

KoszulChain psi1(const Exponents& k) {
  const int n = static_cast<int>(k.size());
  KoszulChain out;
  for (int i = 0; i < n; ++i)
    for (int a = 1; a <= k[i]; ++a) {
      Exponents left(n, 0), right(n, 0);
      for (int t = 0; t < n; ++t) {
        if (t < i) right[t] = k[t];
        else if (t == i) {
          left[t] = k[i] - a;
          right[t] = a - 1;
        } else
          left[t] = k[t];
      }
      out[{left, right, {i}}] += 1;
    }
  return out;
}

KoszulChain psi2(const Exponents& k, const Exponents& m) {
  const int n = static_cast<int>(k.size());
  if (static_cast<int>(m.size()) != n) throw std::invalid_argument("exponent length mismatch");
  KoszulChain out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int b = 1; b <= m[j]; ++b)
        for (int a = 1; a <= k[i]; ++a) {
          Exponents left(n, 0), right(n, 0);
          for (int t = 0; t < n; ++t) {
            if (t < i) right[t] = k[t] + m[t];
            else if (t == i) {
              left[t] = k[i] - a;
              right[t] = m[i] + a - 1;
            } else if (t < j) {
              left[t] = k[t];
              right[t] = m[t];
            } else if (t == j) {
              left[t] = k[j] + m[j] - b;
              right[t] = b - 1;
            } else
              left[t] = k[t] + m[t];
          }
          out[{left, right, {i, j}}] += 1;
        }
  return out;
}

namespace {

void accumulate(KoszulChain& out, KoszulKey key, long c) {
  if (c == 0) return;
  auto it = out.find(key);
  if (it == out.end()) {
    out.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second == 0) out.erase(it);
}

Exponents bump(Exponents e, int i) {
  ++e[i];
  return e;
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents c = a;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

}  // namespace

KoszulChain koszul_d1(const KoszulChain& x) {
  KoszulChain out;
  for (const auto& [key, c] : x) {
    if (key.wedge.size() != 1) throw std::invalid_argument("koszul_d1 expects degree-1 chains");
    int i = key.wedge[0];
    accumulate(out, {bump(key.left, i), key.right, {}}, c);
    accumulate(out, {key.left, bump(key.right, i), {}}, -c);
  }
  return out;
}

KoszulChain koszul_d2(const KoszulChain& x) {
  KoszulChain out;
  for (const auto& [key, c] : x) {
    if (key.wedge.size() != 2) throw std::invalid_argument("koszul_d2 expects degree-2 chains");
    int i = key.wedge[0], j = key.wedge[1];
    accumulate(out, {bump(key.left, i), key.right, {j}}, c);
    accumulate(out, {key.left, bump(key.right, i), {j}}, -c);
    accumulate(out, {bump(key.left, j), key.right, {i}}, -c);
    accumulate(out, {key.left, bump(key.right, j), {i}}, c);
  }
  return out;
}

KoszulChain psi1_of_bar_delta2(const Exponents& a, const Exponents& b) {
  KoszulChain out;
  for (const auto& [key, c] : psi1(b)) accumulate(out, {add_exps(key.left, a), key.right, key.wedge}, c);
  for (const auto& [key, c] : psi1(add_exps(a, b))) accumulate(out, key, -c);
  for (const auto& [key, c] : psi1(a)) accumulate(out, {key.left, add_exps(key.right, b), key.wedge}, c);
  return out;
}

bool chain_map_identity(const Exponents& a, const Exponents& b) {
  return koszul_d2(psi2(a, b)) == psi1_of_bar_delta2(a, b);
}

// ---------------------------------------------------------------------------
// mu_1

Mu1::Mu1(const SkewFormFamily& family, Mode mode)
    : family_(family), mode_(mode), group_(family.r, family.p, family.n) {
  for (const auto& [g, a] : family_.support)
    for (int i = 0; i < family_.n; ++i)
      for (int j = i + 1; j < family_.n; ++j)
        if (!a.entry(i, j).is_zero()) by_pair_[{i, j}].emplace_back(g, a.entry(i, j));
}

NCElement Mu1::literal_phi(const Polynomial& a, const Polynomial& b) const {
  const int n = family_.n;
  NCElement out(family_.r, n);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      for (const auto& [key, kc] : psi2(ka, kb)) {
        auto it = by_pair_.find({key.wedge[0], key.wedge[1]});
        if (it == by_pair_.end()) continue;
        for (const auto& [gp, val] : it->second) {
          // (L (x) R) . a_{g'} g'-bar = L g'(R) g'-bar
          Polynomial right = act_poly(gp, Polynomial::monomial(n, key.right), family_.rep);
          CycloNum coef = ca * cb * CycloNum(kc) * val;
          for (const auto& [re, rc] : right.terms()) out.add_term(add_exps(key.left, re), gp, coef * rc);
        }
      }
  return out;
}

NCElement Mu1::phi(const Exponents& k, const Exponents& m) const {
  auto key = std::make_pair(k, m);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const int n = family_.n;
  NCElement out(family_.r, n);
  if (!by_pair_.empty()) {
    Polynomial pk = Polynomial::monomial(n, k), pm = Polynomial::monomial(n, m);
    if (mode_ == Mode::Literal) {
      out = literal_phi(pk, pm);
    } else {
      const RepKind rep = family_.rep;
      for (const auto& x : group_.elements()) {
        GroupElement xi = inverse(x);
        NCElement inner = literal_phi(act_poly(xi, pk, rep), act_poly(xi, pm, rep));
        for (const auto& [t, c] : inner.terms()) {
          Polynomial moved = act_poly(x, Polynomial::monomial(n, t.first), rep);
          GroupElement conj = multiply(multiply(x, t.second), xi);
          for (const auto& [e, ce] : moved.terms()) out.add_term(e, conj, c * ce);
        }
      }
      out *= CycloNum(make_rational(1, static_cast<long>(group_.order())));
    }
  }
  cache_.emplace(std::move(key), out);
  return out;
}

NCElement Mu1::operator()(const NCElement& a, const NCElement& b) const {
  const int n = family_.n;
  NCElement out(family_.r, n);
  if (by_pair_.empty()) return out;
  for (const auto& [ka, ca] : a.terms()) {
    const GroupElement& g = ka.second;
    for (const auto& [kb, cb] : b.terms()) {
      const GroupElement gh = multiply(g, kb.second);
      Polynomial moved = act_poly(g, Polynomial::monomial(n, kb.first), family_.rep);
      for (const auto& [e, c] : moved.terms()) {
        const NCElement f = phi(ka.first, e);
        for (const auto& [t, tc] : f.terms()) out.add_term(t.first, multiply(t.second, gh), ca * cb * c * tc);
      }
    }
  }
  return out;
}

NCElement random_skew_group_element(std::mt19937_64& rng, const Group& group, int max_degree, int max_terms) {
  const int n = group.n();
  NCElement out(group.r(), n);
  std::uniform_int_distribution<int> nterms(1, std::max(1, max_terms));
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> var(0, n - 1);
  std::uniform_int_distribution<std::size_t> elem(0, group.order() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  const int t = nterms(rng);
  for (int s = 0; s < t; ++s) {
    Exponents mu(n, 0);
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++mu[var(rng)];
    int c = coef(rng);
    if (c == 0) c = 1;
    out.add_term(mu, group.element(elem(rng)), CycloNum(c));
  }
  return out;
}

CocycleReport cocycle_spot_check(const Mu1& mu, std::size_t samples, std::uint64_t seed, int max_degree) {
  const auto& fam = mu.family();
  Group group(fam.r, fam.p, fam.n);
  std::mt19937_64 rng(seed);
  CocycleReport rep;
  for (std::size_t s = 0; s < samples; ++s) {
    NCElement a = random_skew_group_element(rng, group, max_degree, 2);
    NCElement b = random_skew_group_element(rng, group, max_degree, 2);
    NCElement c = random_skew_group_element(rng, group, max_degree, 2);
    NCElement lhs = mu(a, skew_group_product(b, c, fam.rep)) + skew_group_product(a, mu(b, c), fam.rep);
    NCElement rhs = mu(skew_group_product(a, b, fam.rep), c) + skew_group_product(mu(a, b), c, fam.rep);
    ++rep.samples;
    if (lhs != rhs) ++rep.failures;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// From Hochschild classes to forms

SkewFormFamily forms_from_semiinvariants(int r, int p, int n, RepKind rep,
                                         const std::map<GroupElement, PolyForm>& degree0) {
  Group group(r, p, n);
  SkewFormFamily fam;
  fam.r = r;
  fam.p = p;
  fam.n = n;
  fam.rep = rep;
  std::set<std::size_t> seen;
  for (const auto& [g, w] : degree0) {
    if (!group.contains(g)) throw std::invalid_argument("element not in the group: " + g.to_string());
    if (!seen.insert(group.class_of(g)).second)
      throw std::invalid_argument("two classes given for the conjugacy class of " + g.to_string());
    if (w.is_zero()) continue;
    if (w.poly_degree() > 0) throw std::invalid_argument("only polynomial degree 0 is supported");
    auto fixed = fixed_space(g, rep);
    const std::size_t codim = n - fixed.size();
    SkewForm a = SkewForm::zero(n);
    if (codim == 2) {
      for (const auto& [idx, poly] : w.components())
        if (!idx.empty()) throw std::invalid_argument("codimension-2 classes carry 0-forms");
      a = perp_volume_form(g, rep, w.component({}).coefficient(Exponents(w.nvars(), 0)));
    } else if (codim == 0) {
      // w = sum c_kl y_k ^ y_l in coordinates y dual to the fixed basis B; A = B^{-T} C B^{-1}.
      CycloMatrix cmat(n, n);
      for (const auto& [idx, poly] : w.components()) {
        if (idx.size() != 2) throw std::invalid_argument("codimension-0 classes carry 2-forms");
        CycloNum c = poly.coefficient(Exponents(w.nvars(), 0));
        cmat(idx[0], idx[1]) += c;
        cmat(idx[1], idx[0]) -= c;
      }
      CycloMatrix binv = inverse(CycloMatrix::from_columns(fixed));
      a = SkewForm{binv.transpose() * cmat * binv};
    } else {
      throw std::invalid_argument("degree-0 classes live in codimension 0 or 2, got " + std::to_string(codim));
    }
    extend_by_conjugation(fam, group, g, a);
  }
  PBWReport check = pbw_check(fam);
  if (!check.ok())
    throw std::runtime_error("forms fail the PBW conditions: " +
                             (check.witnesses.empty() ? std::string("?") : check.witnesses.front().to_string()));
  return fam;
}

}  // namespace heckeforge
