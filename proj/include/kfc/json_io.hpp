#pragma once

#include <json.hpp>

#include "kfc/atoms.hpp"
#include "kfc/crystal.hpp"
#include "kfc/poly.hpp"
#include "kfc/rootlat.hpp"

// JSON forms of the core types.  Weights are integer arrays in content
// order; affine roots are {"level","lo","hi","sign"}; polynomials are
// {"v_coeffs": {exponent: coefficient}}.

namespace kfc {

nlohmann::json weight_to_json(const Weight& mu);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json affine_root_to_json(const AffineRoot& a);
AffineRoot affine_root_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const nlohmann::json& j);

nlohmann::json atom_to_json(const Crystal& crystal, const Atom& atom);

}  // namespace kfc
