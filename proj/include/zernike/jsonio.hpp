#pragma once

#include "zernike/poly.hpp"

#include <json.hpp>

namespace zern {

// Stable coefficient schema: a surd value is a list of
// {"num": "...", "den": "...", "radicand": N, "imag": bool} objects sorted by
// radicand (real terms before imaginary). num/den are decimal strings so
// arbitrary-precision values survive the trip.
nlohmann::json to_json(const SurdSum& s, bool imag = false);
nlohmann::json to_json(const ComplexSurd& z);
nlohmann::json to_json(const RadialPoly& p);
nlohmann::json to_json(const CartPoly2& p);
nlohmann::json to_json(const CartPoly3& p);
nlohmann::json to_json(const ZernExpansion2D& e);
nlohmann::json to_json(const ZernExpansion3D& e);

ComplexSurd complex_from_json(const nlohmann::json& j);
SurdSum surd_from_json(const nlohmann::json& j);
RadialPoly radial_from_json(const nlohmann::json& j);
CartPoly2 cart2_from_json(const nlohmann::json& j);
CartPoly3 cart3_from_json(const nlohmann::json& j);
ZernExpansion2D zexp2_from_json(const nlohmann::json& j);
ZernExpansion3D zexp3_from_json(const nlohmann::json& j);

} // namespace zern
