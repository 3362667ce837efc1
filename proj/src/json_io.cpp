#include "heckeforge/json_io.hpp"

#include <stdexcept>

namespace heckeforge {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing JSON field: ") + key);
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw std::invalid_argument(std::string("JSON field must be an integer: ") + key);
  return v.get<int>();
}

Rational rational_from(const Json& num, const Json& den) {
  auto text = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw std::invalid_argument("rational parts must be strings or integers");
  };
  Rational q;
  try {
    q = Rational(text(num) + "/" + text(den));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational in JSON");
  }
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in JSON");
  q.canonicalize();
  return q;
}

}  // namespace

Json cyclo_to_json(const CycloNum& z) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < z.coeffs().size(); ++k) {
    const Rational& c = z.coeffs()[k];
    if (c == 0) continue;
    terms.push_back({{"exp", k}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
  }
  return Json{{"order", z.order()}, {"terms", terms}};
}

CycloNum cyclo_from_json(const Json& j) {
  if (j.is_number_integer()) return CycloNum(j.get<long>());
  if (j.is_string()) return parse_cyclo(j.get<std::string>());
  const int order = int_field(j, "order");
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw std::invalid_argument("cyclotomic terms must be an array");
  CycloNum out;
  for (const auto& t : terms) {
    int k = int_field(t, "exp");
    out += root_of_unity(order, k) * CycloNum(rational_from(field(t, "num"), field(t, "den")));
  }
  return out;
}

Json element_to_json(const GroupElement& g) {
  std::vector<int> perm;
  for (int x : g.perm) perm.push_back(x + 1);
  return Json{{"r", g.r}, {"n", g.n}, {"exps", g.exps}, {"perm", perm}};
}

GroupElement element_from_json(const Json& j) {
  const int r = int_field(j, "r"), n = int_field(j, "n");
  if (r < 1 || n < 1) throw std::invalid_argument("element needs r >= 1 and n >= 1");
  auto exps = field(j, "exps").get<std::vector<int>>();
  auto perm = field(j, "perm").get<std::vector<int>>();
  if (static_cast<int>(exps.size()) != n || static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("element lists must have length n");
  std::vector<bool> seen(n, false);
  for (auto& x : perm) {
    if (x < 1 || x > n || seen[x - 1]) throw std::invalid_argument("perm is not a permutation of 1..n");
    seen[x - 1] = true;
    --x;
  }
  return GroupElement::make(r, exps, perm);
}

Json forms_to_json(const SkewFormFamily& family) {
  Json forms = Json::array();
  for (const auto& [g, a] : family.support) {
    Json rows = Json::array();
    for (int i = 0; i < a.n(); ++i) {
      Json row = Json::array();
      for (int k = 0; k < a.n(); ++k) row.push_back(cyclo_to_json(a.entry(i, k)));
      rows.push_back(row);
    }
    forms.push_back({{"g", element_to_json(g)}, {"matrix", rows}});
  }
  return Json{{"r", family.r}, {"p", family.p}, {"n", family.n}, {"rep", to_string(family.rep)}, {"forms", forms}};
}

SkewFormFamily forms_from_json(const Json& j) {
  SkewFormFamily fam;
  fam.r = int_field(j, "r");
  fam.p = int_field(j, "p");
  fam.n = int_field(j, "n");
  if (fam.r < 1 || fam.n < 1 || fam.p < 1 || fam.r % fam.p != 0) throw std::invalid_argument("need p | r and n >= 1");
  const Json& rep = field(j, "rep");
  if (!rep.is_string()) throw std::invalid_argument("rep must be a string");
  fam.rep = parse_rep(rep.get<std::string>());
  const Json& forms = field(j, "forms");
  if (!forms.is_array()) throw std::invalid_argument("forms must be an array");
  for (const auto& f : forms) {
    GroupElement g = element_from_json(field(f, "g"));
    if (g.r != fam.r || g.n != fam.n) throw std::invalid_argument("form element does not match r, n");
    if (!in_subgroup(g, fam.p)) throw std::invalid_argument("form element not in G(r,p,n): " + g.to_string());
    if (fam.support.count(g)) throw std::invalid_argument("duplicate form for " + g.to_string());
    const Json& rows = field(f, "matrix");
    if (!rows.is_array() || static_cast<int>(rows.size()) != fam.n) throw std::invalid_argument("matrix must be n x n");
    SkewForm a = SkewForm::zero(fam.n);
    for (int i = 0; i < fam.n; ++i) {
      if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != fam.n)
        throw std::invalid_argument("matrix must be n x n");
      for (int k = 0; k < fam.n; ++k) a.matrix(i, k) = cyclo_from_json(rows[i][k]);
    }
    if (!a.is_skew()) throw std::invalid_argument("matrix for " + g.to_string() + " is not skew-symmetric");
    fam.set(g, std::move(a));
  }
  return fam;
}

Json nc_to_json(const NCElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms())
    terms.push_back({{"mu", key.first}, {"g", element_to_json(key.second)}, {"c", cyclo_to_json(c)}});
  return Json{{"terms", terms}};
}

Json component_to_json(const ClassComponent& c, const std::string& source, int max_degree) {
  Json dims = Json::object();
  for (int d = 0; d <= max_degree; ++d) {
    auto it = c.dims_by_degree.find(d);
    dims[std::to_string(d)] = it == c.dims_by_degree.end() ? 0 : it->second;
  }
  return Json{{"class", element_to_json(c.rep)}, {"codim", c.codim}, {"dims", dims}, {"source", source}};
}

Json catalog_entry_to_json(const CatalogEntry& e, int codim, int max_degree) {
  Json dims = Json::object();
  for (int d = 0; d <= max_degree; ++d) dims[std::to_string(d)] = e.module.dimension(d);
  return Json{{"class", element_to_json(e.representative)}, {"codim", codim}, {"dims", dims}, {"source", "closed"},
              {"label", e.label}, {"module", e.module.to_string()}};
}

Json param_report_to_json(const GHAParamReport& rep) {
  Json classes = Json::array();
  for (const auto& g : rep.d_classes) classes.push_back(element_to_json(g));
  Json l2 = Json::array();
  for (const auto& [g, d] : rep.lambda2_dims) l2.push_back({{"class", element_to_json(g)}, {"dim", d}});
  Json out{{"r", rep.r}, {"p", rep.p}, {"n", rep.n}, {"rep", to_string(rep.rep)}, {"d", rep.d},
           {"d_classes", classes}, {"lambda2_dims", l2}, {"total", rep.total}};
  out["paper_count"] = rep.paper_count ? Json(*rep.paper_count) : Json(nullptr);
  out["discrepancy_flag"] = rep.discrepancy_flag;
  return out;
}

}  // namespace heckeforge
