#include "heckeforge/polyforms.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace heckeforge {

namespace {

std::string coeff_string(const CycloNum& c) {
  if (c.as_rational()) return c.to_string();
  return "(" + c.to_string() + ")";
}

std::string monomial_string(const Exponents& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    os << (first ? "" : "*") << "v" << i + 1;
    if (e[i] != 1) os << "^" << e[i];
    first = false;
  }
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(int nvars, const CycloNum& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
  Exponents e(nvars, 0);
  e.at(i) = 1;
  return monomial(nvars, e);
}

Polynomial Polynomial::monomial(int nvars, Exponents e, const CycloNum& c) {
  if (static_cast<int>(e.size()) != nvars) throw std::invalid_argument("exponent vector length mismatch");
  Polynomial p(nvars);
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::linear(const CycloVector& coeffs) {
  int n = static_cast<int>(coeffs.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponents e(n, 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

CycloNum Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycloNum(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const CycloNum& c) {
  if (static_cast<int>(e.size()) != n_) throw std::invalid_argument("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("polynomials over different variable sets");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const CycloNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("polynomials over different variable sets");
  Polynomial out(a.n_);
  Exponents e(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::pow(int k) const {
  Polynomial acc = constant(n_, 1);
  for (int i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    os << (first ? "" : " + ") << coeff_string(it->second);
    std::string m = monomial_string(it->first);
    if (!m.empty()) os << " * " << m;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// PolyForm

PolyForm PolyForm::from(const Polynomial& p, WedgeIndex wedge) {
  PolyForm w(p.nvars());
  int sign = sort_wedge(wedge);
  if (sign == 0) return w;
  w.add(wedge, sign > 0 ? p : p * CycloNum(-1));
  return w;
}

int PolyForm::poly_degree() const {
  int d = -1;
  for (const auto& [s, p] : comps_) d = std::max(d, p.degree());
  return d;
}

Polynomial PolyForm::component(const WedgeIndex& s) const {
  auto it = comps_.find(s);
  return it == comps_.end() ? Polynomial(n_) : it->second;
}

void PolyForm::add(const WedgeIndex& s, const Polynomial& p) {
  if (p.nvars() != n_) throw std::invalid_argument("form and polynomial over different variable sets");
  if (p.is_zero()) return;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 0 || s[i] >= n_ || (i > 0 && s[i] <= s[i - 1]))
      throw std::invalid_argument("wedge index must be strictly increasing");
  auto [it, inserted] = comps_.try_emplace(s, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) comps_.erase(it);
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  for (const auto& [s, p] : o.comps_) add(s, p);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  for (const auto& [s, p] : o.comps_) add(s, p * CycloNum(-1));
  return *this;
}

PolyForm& PolyForm::operator*=(const CycloNum& c) {
  if (c.is_zero()) {
    comps_.clear();
    return *this;
  }
  for (auto& [s, p] : comps_) p *= c;
  return *this;
}

PolyForm operator*(const Polynomial& p, const PolyForm& w) {
  PolyForm out(w.n_);
  for (const auto& [s, q] : w.comps_) out.add(s, p * q);
  return out;
}

PolyForm PolyForm::wedge(const PolyForm& o) const {
  PolyForm out(n_);
  for (const auto& [s, p] : comps_)
    for (const auto& [t, q] : o.comps_) {
      WedgeIndex idx = s;
      idx.insert(idx.end(), t.begin(), t.end());
      int sign = sort_wedge(idx);
      if (sign == 0) continue;
      Polynomial prod = p * q;
      out.add(idx, sign > 0 ? prod : prod * CycloNum(-1));
    }
  return out;
}

std::string PolyForm::to_string() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, p] : comps_) {
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
      os << (first ? "" : " + ") << coeff_string(it->second);
      std::string m = monomial_string(it->first);
      if (!m.empty()) os << " * " << m;
      if (!s.empty()) {
        os << " ^ ";
        for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "^" : "") << "x_{" << s[i] + 1 << "}";
      }
      first = false;
    }
  }
  return os.str();
}

int sort_wedge(WedgeIndex& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

// ---------------------------------------------------------------------------
// Group actions

Polynomial act_poly(const GroupElement& g, const Polynomial& f, RepKind rep) {
  if (f.nvars() != g.n) throw std::invalid_argument("act_poly: dimension mismatch");
  Polynomial out(g.n);
  Exponents e(g.n);
  for (const auto& [a, c] : f.terms()) {
    long scalar = 0;
    for (int i = 0; i < g.n; ++i) {
      ScaledIndex s = act(g, i, rep);
      e[s.index] = a[i];
      scalar += static_cast<long>(s.exp) * a[i];
    }
    out.add_term(e, scalar % g.r == 0 ? c : c * root_of_unity(g.r, scalar));
  }
  return out;
}

PolyForm act_form(const GroupElement& g, const PolyForm& w, RepKind rep) {
  if (w.nvars() != g.n) throw std::invalid_argument("act_form: dimension mismatch");
  PolyForm out(g.n);
  for (const auto& [s, p] : w.components()) {
    WedgeIndex t(s.size());
    long scalar = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      ScaledIndex c = coact(g, s[k], rep);
      t[k] = c.index;
      scalar += c.exp;
    }
    int sign = sort_wedge(t);
    CycloNum factor = root_of_unity(g.r, scalar);
    if (sign < 0) factor = -factor;
    out.add(t, act_poly(g, p, rep) * factor);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariants and derivations

Polynomial elementary_symmetric(int k, const std::vector<Polynomial>& vars) {
  if (vars.empty()) throw std::invalid_argument("elementary_symmetric: empty variable list");
  int n = vars[0].nvars();
  if (k < 0 || k > static_cast<int>(vars.size())) throw std::invalid_argument("elementary_symmetric: bad k");
  std::vector<Polynomial> e(k + 1, Polynomial(n));
  e[0] = Polynomial::constant(n, 1);
  for (const auto& x : vars)
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * x;
  return e[k];
}

std::vector<Polynomial> invariant_ring_generators(int r, int p, int m) {
  if (p < 1 || r % p != 0) throw std::invalid_argument("p must divide r");
  std::vector<Polynomial> powers;
  for (int i = 0; i < m; ++i) powers.push_back(Polynomial::variable(m, i).pow(r));
  std::vector<Polynomial> gens;
  for (int k = 1; k < m; ++k) gens.push_back(elementary_symmetric(k, powers));
  gens.push_back(Polynomial::monomial(m, Exponents(m, r / p)));
  return gens;
}

std::vector<PolyForm> basic_derivations(int r, int p, int m) {
  if (p < 1 || r % p != 0) throw std::invalid_argument("p must divide r");
  std::vector<PolyForm> thetas;
  for (int j = 1; j <= m; ++j) {
    PolyForm theta(m);
    for (int i = 0; i < m; ++i) {
      Exponents e(m, 0);
      if (j == m && p == r) {
        for (int t = 0; t < m; ++t) e[t] = t == i ? 0 : r - 1;
      } else {
        e[i] = (j - 1) * r + 1;
      }
      theta.add({i}, Polynomial::monomial(m, e));
    }
    thetas.push_back(theta);
  }
  return thetas;
}

std::vector<PolyForm> remark_block_derivations(int r, int m) {
  std::vector<PolyForm> thetas;
  for (int j = 1; j <= m; ++j) {
    PolyForm theta(m);
    for (int i = 0; i < m; ++i) {
      Exponents e(m, 0);
      e[i] = (j - 1) * r + 1;
      theta.add({i}, Polynomial::monomial(m, e));
    }
    thetas.push_back(theta);
  }
  return thetas;
}

std::vector<PolyForm> symmetric_group_derivations(int m) {
  std::vector<PolyForm> thetas;
  for (int j = 1; j <= m; ++j) {
    PolyForm theta(m);
    for (int i = 0; i < m; ++i) {
      Exponents e(m, 0);
      e[i] = j - 1;
      theta.add({i}, Polynomial::monomial(m, e));
    }
    thetas.push_back(theta);
  }
  return thetas;
}

Polynomial reflection_arrangement_product(const std::vector<GroupElement>& elements, RepKind rep) {
  if (elements.empty()) throw std::invalid_argument("empty element list");
  int n = elements[0].n;
  std::vector<CycloVector> roots;
  for (const auto& h : elements) {
    CycloMatrix d = matrix(h, rep) - CycloMatrix::identity(n);
    auto image = column_space_basis(d);
    if (image.size() != 1) continue;
    if (std::find(roots.begin(), roots.end(), image[0]) == roots.end()) roots.push_back(image[0]);
  }
  Polynomial q = Polynomial::constant(n, 1);
  for (const auto& root : roots) q = q * Polynomial::linear(root);
  return q;
}

SolomonResult solomon_check(const std::vector<PolyForm>& thetas, const std::vector<GroupElement>& elements,
                            RepKind rep) {
  SolomonResult res;
  if (thetas.empty()) throw std::invalid_argument("solomon_check: no derivations");
  int m = thetas[0].nvars();
  if (static_cast<int>(thetas.size()) != m) throw std::invalid_argument("solomon_check: need m derivations in m variables");

  res.invariant = true;
  for (const auto& g : elements)
    for (const auto& t : thetas)
      if (act_form(g, t, rep) != t) res.invariant = false;

  bool one_forms = true;
  std::vector<std::vector<Polynomial>> coeff(m, std::vector<Polynomial>(m, Polynomial(m)));
  for (int j = 0; j < m; ++j)
    for (const auto& [s, p] : thetas[j].components()) {
      if (s.size() != 1) {
        one_forms = false;
        continue;
      }
      coeff[j][s[0]] = p;
    }

  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  res.determinant = Polynomial(m);
  do {
    WedgeIndex copy(perm.begin(), perm.end());
    int sign = sort_wedge(copy);
    Polynomial term = Polynomial::constant(m, sign);
    for (int j = 0; j < m && !term.is_zero(); ++j) term = term * coeff[j][perm[j]];
    res.determinant += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  res.Q = reflection_arrangement_product(elements, rep);
  if (one_forms && !res.determinant.is_zero() && !res.Q.is_zero()) {
    const auto& [e, q] = *res.Q.terms().begin();
    CycloNum c = res.determinant.coefficient(e) / q;
    res.determinant_is_Q = !c.is_zero() && res.determinant == res.Q * c;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Characters

CharacterTable::CharacterTable(std::vector<GroupElement> elements, std::vector<CycloNum> values)
    : elements_(std::move(elements)), values_(std::move(values)) {
  if (elements_.size() != values_.size()) throw std::invalid_argument("character table size mismatch");
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

CharacterTable CharacterTable::trivial(std::vector<GroupElement> elements) {
  std::vector<CycloNum> ones(elements.size(), CycloNum(1));
  return CharacterTable(std::move(elements), std::move(ones));
}

const CycloNum& CharacterTable::value(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw std::invalid_argument("character not defined on " + g.to_string());
  return values_[it->second];
}

bool CharacterTable::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](const CycloNum& c) { return c.is_one(); });
}

bool CharacterTable::is_multiplicative() const {
  if (elements_.empty()) return false;
  GroupElement id = GroupElement::identity(elements_[0].r, elements_[0].n);
  if (!contains(id) || !value(id).is_one()) return false;

  std::vector<GroupElement> gens;
  std::set<GroupElement> closure{id};
  for (const auto& e : elements_) {
    if (closure.count(e)) continue;
    gens.push_back(e);
    std::vector<GroupElement> frontier(closure.begin(), closure.end());
    while (!frontier.empty()) {
      std::vector<GroupElement> next;
      for (const auto& x : frontier)
        for (const auto& s : gens) {
          GroupElement y = multiply(x, s);
          if (closure.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    if (closure.size() > elements_.size()) return false;
  }
  for (const auto& g : elements_)
    for (const auto& s : gens) {
      GroupElement gs = multiply(g, s);
      if (!contains(gs)) return false;
      if (value(gs) != value(g) * value(s)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Subspace actions and the Reynolds projector

std::vector<Exponents> monomials_of_degree(int nvars, int degree) {
  std::vector<Exponents> out;
  if (degree < 0) return out;
  Exponents e(nvars, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars - 1) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (int a = remaining; a >= 0; --a) {
      e[pos] = a;
      self(self, pos + 1, remaining - a);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

std::vector<WedgeIndex> subsets_of_size(int nvars, int k) {
  std::vector<WedgeIndex> out;
  if (k < 0 || k > nvars) return out;
  WedgeIndex s(k);
  std::iota(s.begin(), s.end(), 0);
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == nvars - k + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

SubspaceAction::SubspaceAction(const std::vector<GroupElement>& elements, RepKind rep,
                               const std::vector<CycloVector>& basis)
    : dim_(basis.size()) {
  SubspaceCoordinates coords(basis);
  for (const auto& h : elements) {
    CycloMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      CycloVector image(h.n);
      for (int j = 0; j < h.n; ++j) {
        if (basis[i][j].is_zero()) continue;
        ScaledIndex s = act(h, j, rep);
        image[s.index] += basis[i][j] * root_of_unity(h.r, s.exp);
      }
      CycloVector c;
      try {
        c = coords.coordinates(image);
      } catch (const InconsistentSystem&) {
        throw std::invalid_argument("subspace is not stable under " + h.to_string());
      }
      for (std::size_t j = 0; j < dim_; ++j) m(j, i) = c[j];
    }
    on_dual_.push_back(dim_ ? inverse(m).transpose() : m);
    on_w_.push_back(std::move(m));
  }
}

PolyForm SubspaceAction::apply(std::size_t h, const PolyForm& w) const {
  int s = static_cast<int>(dim_);
  const CycloMatrix& m = on_w_[h];
  const CycloMatrix& nd = on_dual_[h];
  std::vector<Polynomial> images;
  for (int i = 0; i < s; ++i) images.push_back(Polynomial::linear(m.column(i)));
  PolyForm out(s);
  for (const auto& [sub, p] : w.components()) {
    Polynomial poly(s);
    for (const auto& [e, c] : p.terms()) {
      Polynomial t = Polynomial::constant(s, c);
      for (int i = 0; i < s; ++i)
        if (e[i]) t = t * images[i].pow(e[i]);
      poly += t;
    }
    int k = static_cast<int>(sub.size());
    for (const auto& target : subsets_of_size(s, k)) {
      CycloMatrix minor(k, k);
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) minor(a, b) = nd(target[a], sub[b]);
      CycloNum d = k ? determinant(minor) : CycloNum(1);
      if (!d.is_zero()) out.add(target, poly * d);
    }
  }
  return out;
}

namespace {

struct GradedBasis {
  std::vector<Exponents> monos;
  std::vector<WedgeIndex> subs;
  std::map<Exponents, std::size_t> mono_index;
  std::map<WedgeIndex, std::size_t> sub_index;

  GradedBasis(int s, int d, int k) : monos(monomials_of_degree(s, d)), subs(subsets_of_size(s, k)) {
    for (std::size_t i = 0; i < monos.size(); ++i) mono_index.emplace(monos[i], i);
    for (std::size_t i = 0; i < subs.size(); ++i) sub_index.emplace(subs[i], i);
  }
  std::size_t size() const { return monos.size() * subs.size(); }
  std::size_t index(const Exponents& e, const WedgeIndex& w) const {
    return mono_index.at(e) * subs.size() + sub_index.at(w);
  }
  PolyForm form(int s, std::size_t idx, const CycloNum& c = CycloNum(1)) const {
    PolyForm w(s);
    w.add(subs[idx % subs.size()], Polynomial::monomial(s, monos[idx / subs.size()], c));
    return w;
  }
};

std::vector<PolyForm> to_forms(int s, const GradedBasis& gb, const std::vector<SparseVector>& rows) {
  std::vector<PolyForm> out;
  for (const auto& row : rows) {
    PolyForm w(s);
    for (const auto& [idx, c] : row) w += gb.form(s, idx, c);
    out.push_back(std::move(w));
  }
  return out;
}

// Monomial data of an element on W: h u_i = zeta_L^{e_i} u_{perm_i}.
struct MonomialData {
  std::vector<int> perm;
  std::vector<int> exps;
  int chi_inv;
};

std::optional<int> root_exponent(const CycloNum& c, const std::vector<CycloNum>& roots) {
  for (std::size_t e = 0; e < roots.size(); ++e)
    if (c == roots[e]) return static_cast<int>(e);
  return std::nullopt;
}

std::optional<std::vector<MonomialData>> monomial_data(const SubspaceAction& sa, const std::vector<CycloNum>& chi,
                                                       const std::vector<CycloNum>& roots) {
  std::vector<MonomialData> out;
  std::size_t s = sa.dim();
  for (std::size_t h = 0; h < sa.size(); ++h) {
    const CycloMatrix& m = sa.matrix_on_w(h);
    MonomialData md{std::vector<int>(s), std::vector<int>(s), 0};
    for (std::size_t i = 0; i < s; ++i) {
      int found = -1;
      for (std::size_t j = 0; j < s; ++j) {
        if (m(j, i).is_zero()) continue;
        if (found >= 0) return std::nullopt;
        found = static_cast<int>(j);
      }
      if (found < 0) return std::nullopt;
      auto e = root_exponent(m(found, i), roots);
      if (!e) return std::nullopt;
      md.perm[i] = found;
      md.exps[i] = *e;
    }
    auto c = root_exponent(chi[h].inverse(), roots);
    if (!c) return std::nullopt;
    md.chi_inv = *c;
    out.push_back(std::move(md));
  }
  return out;
}

std::vector<CycloNum> lookup_characters(const std::vector<GroupElement>& subgroup, const CharacterTable& chi) {
  std::vector<CycloNum> out;
  for (const auto& h : subgroup) out.push_back(chi.value(h));
  return out;
}

}  // namespace

std::vector<PolyForm> reynolds_semiinvariant_basis(const std::vector<GroupElement>& subgroup, const CharacterTable& chi,
                                                   RepKind rep, int poly_degree, int form_degree,
                                                   const std::vector<CycloVector>& subspace_basis,
                                                   const ReynoldsOptions& options) {
  if (subgroup.empty()) throw std::invalid_argument("reynolds: empty subgroup");
  if (!chi.is_multiplicative()) throw std::invalid_argument("reynolds: character is not multiplicative");
  std::vector<CycloNum> chi_values = lookup_characters(subgroup, chi);
  int s = static_cast<int>(subspace_basis.size());
  GradedBasis gb(s, poly_degree, form_degree);
  if (gb.size() == 0) return {};
  SubspaceAction sa(subgroup, rep, subspace_basis);
  SparseEchelon ech;

  int L = 2 * subgroup[0].r;
  std::vector<CycloNum> roots;
  for (int e = 0; e < L; ++e) roots.push_back(root_of_unity(L, e));
  auto mono = options.force_general ? std::nullopt : monomial_data(sa, chi_values, roots);

  if (mono) {
    std::vector<bool> visited(gb.size(), false);
    std::map<std::size_t, std::vector<long>> counts;
    Exponents image(s);
    WedgeIndex wimage;
    for (std::size_t b = 0; b < gb.size(); ++b) {
      if (visited[b]) continue;
      const Exponents& alpha = gb.monos[b / gb.subs.size()];
      const WedgeIndex& sub = gb.subs[b % gb.subs.size()];
      counts.clear();
      for (const auto& md : *mono) {
        long e = md.chi_inv;
        for (int i = 0; i < s; ++i) {
          image[md.perm[i]] = alpha[i];
          e += static_cast<long>(alpha[i]) * md.exps[i];
        }
        wimage.assign(sub.size(), 0);
        for (std::size_t t = 0; t < sub.size(); ++t) {
          wimage[t] = md.perm[sub[t]];
          e -= md.exps[sub[t]];
        }
        if (sort_wedge(wimage) < 0) e += L / 2;
        std::size_t target = gb.index(image, wimage);
        visited[target] = true;
        auto& slot = counts[target];
        if (slot.empty()) slot.assign(L, 0);
        ++slot[((e % L) + L) % L];
      }
      SparseVector v;
      for (const auto& [target, cnt] : counts) {
        CycloNum value;
        for (int e = 0; e < L; ++e)
          if (cnt[e]) value += roots[e] * CycloNum(cnt[e]);
        if (!value.is_zero()) v.emplace(target, value);
      }
      ech.add(std::move(v));
    }
  } else {
    for (std::size_t b = 0; b < gb.size(); ++b) {
      PolyForm src = gb.form(s, b);
      PolyForm acc(s);
      for (std::size_t h = 0; h < sa.size(); ++h) acc += sa.apply(h, src) * chi_values[h].inverse();
      SparseVector v;
      for (const auto& [sub, p] : acc.components())
        for (const auto& [e, c] : p.terms()) v.emplace(gb.index(e, sub), c);
      ech.add(std::move(v));
    }
  }
  return to_forms(s, gb, ech.reduced_basis());
}

PolyForm reynolds_apply(const std::vector<GroupElement>& subgroup, const CharacterTable& chi, RepKind rep,
                        const std::vector<CycloVector>& subspace_basis, const PolyForm& w) {
  SubspaceAction sa(subgroup, rep, subspace_basis);
  PolyForm acc(static_cast<int>(subspace_basis.size()));
  for (std::size_t h = 0; h < sa.size(); ++h) acc += sa.apply(h, w) * chi.value(subgroup[h]).inverse();
  return acc * CycloNum(make_rational(1, static_cast<long>(subgroup.size())));
}

}  // namespace heckeforge
