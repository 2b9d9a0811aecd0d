#include "redchern/json_io.hpp"

#include <algorithm>

#include "redchern/errors.hpp"

namespace redchern {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw UsageError(std::string("JSON object is missing '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const MPoly& p) {
  Json vars = Json::array();
  for (const auto& v : p.vars().variables()) vars.push_back({{"name", v.name}, {"degree", v.degree}});
  Json terms = Json::array();
  for (const auto& [e, c] : p.canonical_terms()) {
    terms.push_back({{"coeff", format_rational(c)}, {"exps", e}});
  }
  return {{"vars", std::move(vars)}, {"terms", std::move(terms)}};
}

MPoly mpoly_from_json(const Json& j) {
  try {
    std::vector<Variable> vars;
    for (const auto& v : require(j, "vars")) {
      vars.push_back({require(v, "name").get<std::string>(), require(v, "degree").get<int>()});
    }
    MPoly p{VarTable(std::move(vars))};
    for (const auto& t : require(j, "terms")) {
      auto exps = require(t, "exps").get<Exponents>();
      if (exps.size() != p.vars().size()) throw UsageError("term exponent length mismatch");
      if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; })) {
        throw UsageError("negative exponent in JSON term");
      }
      p.add_term(exps, parse_rational(require(t, "coeff").get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed polynomial JSON: ") + e.what());
  }
}

Json to_json(const Partition& p) {
  return Json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

Partition partition_from_json(const Json& j) {
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed partition JSON: ") + e.what());
  }
}

Json to_json(const SymPolyInBasis& s) {
  Json coeffs = Json::array();
  // Descending: weight first, then compare_order.
  for (auto it = s.coeffs.rbegin(); it != s.coeffs.rend(); ++it) {
    coeffs.push_back({{"partition", to_json(it->first)}, {"coeff", format_rational(it->second)}});
  }
  return {{"basis", s.basis == Basis::monomial ? "m" : "e"}, {"coeffs", std::move(coeffs)}};
}

SymPolyInBasis sympoly_from_json(const Json& j, int n) {
  SymPolyInBasis s;
  s.n = n;
  const auto tag = require(j, "basis").get<std::string>();
  if (tag == "m") {
    s.basis = Basis::monomial;
  } else if (tag == "e") {
    s.basis = Basis::elementary;
  } else {
    throw UsageError("unknown basis tag '" + tag + "'");
  }
  for (const auto& c : require(j, "coeffs")) {
    s.coeffs.emplace(partition_from_json(require(c, "partition")),
                     parse_rational(require(c, "coeff").get<std::string>()));
  }
  return s;
}

Json to_json(const UniversalPolys& u) {
  Json psi = Json::array();
  for (const auto& p : u.psi) psi.push_back(to_json(p));
  Json phi = Json::array();
  for (const auto& p : u.phi) phi.push_back(to_json(p));
  Json lead = Json::array();
  for (const auto& q : u.lead) lead.push_back(format_rational(q));
  return {{"n", u.n}, {"N", u.N}, {"psi", std::move(psi)}, {"phi", std::move(phi)},
          {"lead", std::move(lead)}};
}

UniversalPolys universal_from_json(const Json& j) {
  UniversalPolys u;
  u.n = require(j, "n").get<int>();
  u.N = require(j, "N").get<int>();
  for (const auto& p : require(j, "psi")) u.psi.push_back(mpoly_from_json(p));
  for (const auto& p : require(j, "phi")) u.phi.push_back(mpoly_from_json(p));
  for (const auto& q : require(j, "lead")) u.lead.push_back(parse_rational(q.get<std::string>()));
  return u;
}

Json to_json(const CheckReport& r) {
  Json j = {{"identity", r.identity}, {"ring", r.ring}, {"rank", r.rank}};
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["status"] = r.pass ? "pass" : "fail";
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

}  // namespace redchern
