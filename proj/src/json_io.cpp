#include "kfc/json_io.hpp"

namespace kfc {

using nlohmann::json;

json weight_to_json(const Weight& mu) { return json(mu); }

Weight weight_from_json(const json& j) { return j.get<Weight>(); }

json affine_root_to_json(const AffineRoot& a) {
  return json{{"level", a.level},
              {"lo", a.lo},
              {"hi", a.hi},
              {"sign", a.sign > 0 ? "+" : "-"}};
}

AffineRoot affine_root_from_json(const json& j) {
  return AffineRoot(j.at("level").get<int>(), j.at("lo").get<int>(),
                    j.at("hi").get<int>(),
                    j.at("sign").get<std::string>() == "-" ? -1 : +1);
}

json poly_to_json(const LaurentPoly& p) {
  json coeffs = json::object();
  for (auto& [e, c] : p.coeffs()) coeffs[std::to_string(e)] = c;
  return json{{"v_coeffs", coeffs}};
}

LaurentPoly poly_from_json(const json& j) {
  LaurentPoly p;
  for (auto& [k, v] : j.at("v_coeffs").items())
    p.add_term(std::stoi(k), v.get<long long>());
  return p;
}

json tableau_to_json(const Tableau& t) { return json(t.rows); }

Tableau tableau_from_json(const json& j) {
  Tableau t;
  t.rows = j.get<std::vector<std::vector<int>>>();
  return t;
}

json atom_to_json(const Crystal& crystal, const Atom& atom) {
  json members = json::array();
  for (int t : atom.members) members.push_back(crystal.element(t).encoding());
  return json{{"highest_weight", weight_to_json(atom.highest_weight)},
              {"members", members},
              {"atomic_number2", atom.atomic_number2}};
}

}  // namespace kfc
