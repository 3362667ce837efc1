#include "heckeforge/skew_group.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heckeforge {

NCElement NCElement::scalar(int r, int n, const CycloNum& c) {
  NCElement out(r, n);
  out.add_term(Exponents(n, 0), GroupElement::identity(r, n), c);
  return out;
}

NCElement NCElement::group(const GroupElement& g, const CycloNum& c) {
  NCElement out(g.r, g.n);
  out.add_term(Exponents(g.n, 0), g, c);
  return out;
}

NCElement NCElement::variable(int r, int n, int k) {
  if (k < 0 || k >= n) throw std::out_of_range("variable index out of range");
  Exponents e(n, 0);
  e[k] = 1;
  NCElement out(r, n);
  out.add_term(e, GroupElement::identity(r, n), CycloNum(1));
  return out;
}

NCElement NCElement::term(Exponents mu, const GroupElement& g, const CycloNum& c) {
  if (static_cast<int>(mu.size()) != g.n) throw std::invalid_argument("exponent length mismatch");
  NCElement out(g.r, g.n);
  out.add_term(mu, g, c);
  return out;
}

int NCElement::filtration_degree() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, std::accumulate(key.first.begin(), key.first.end(), 0));
  return d;
}

NCElement NCElement::homogeneous_part(int d) const {
  NCElement out(r_, n_);
  for (const auto& [key, c] : terms_)
    if (std::accumulate(key.first.begin(), key.first.end(), 0) == d) out.terms_.emplace(key, c);
  return out;
}

void NCElement::add_term(const Exponents& mu, const GroupElement& g, const CycloNum& c) {
  if (c.is_zero()) return;
  if (n_ == 0 && terms_.empty()) {
    r_ = g.r;
    n_ = g.n;
  }
  TermKey key{mu, g};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NCElement& NCElement::operator+=(const NCElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

NCElement& NCElement::operator*=(const CycloNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

std::string NCElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t i = 0; i < key.first.size(); ++i) {
      if (key.first[i] == 0) continue;
      os << " v" << i + 1;
      if (key.first[i] > 1) os << "^" << key.first[i];
    }
    if (!key.second.is_identity()) os << " [" << key.second.to_string() << "]";
  }
  return os.str();
}

NCElement attach_group(const Polynomial& f, const GroupElement& g) {
  NCElement out(g.r, g.n);
  for (const auto& [e, c] : f.terms()) out.add_term(e, g, c);
  return out;
}

NCElement skew_group_product(const NCElement& a, const NCElement& b, RepKind rep) {
  NCElement out(a.r(), a.n());
  for (const auto& [ka, ca] : a.terms()) {
    const GroupElement& g = ka.second;
    for (const auto& [kb, cb] : b.terms()) {
      Polynomial moved = act_poly(g, Polynomial::monomial(g.n, kb.first, cb), rep);
      GroupElement gh = multiply(g, kb.second);
      for (const auto& [e, c] : moved.terms()) {
        Exponents mu = ka.first;
        for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += e[i];
        out.add_term(mu, gh, ca * c);
      }
    }
  }
  return out;
}

}  // namespace heckeforge
