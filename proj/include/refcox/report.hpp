#pragma once

#include <string>

#include <json.hpp>

#include "refcox/cartan.hpp"
#include "refcox/classc.hpp"
#include "refcox/polyspec.hpp"
#include "refcox/poset.hpp"
#include "refcox/towers.hpp"

namespace refcox {

using Json = nlohmann::json;

// File formats. Posets: {"elements": [...], "relations": [[a, b], ...]}
// where a < b generate the order; emitted relations are the cover pairs.
// Cartan data: {"labels": [...], "matrix": [[...], ...]}.
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);

Json cartan_to_json(const CartanAlgebra& a);
CartanAlgebra cartan_from_json(const Json& j);

// Coefficient list [a_0, ..., a_k]; entries that do not fit a 64-bit signed
// integer are emitted as decimal strings.
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j);

Json mahler_to_json(const MahlerResult& m);
Json profile_to_json(const CyclotomicProfile& p);

Json certificate_to_json(const ClassCCertificate& cert);
ClassCCertificate certificate_from_json(const Json& j);

Json tower_to_json(const TowerReport& report);
std::string tower_to_csv(const TowerReport& report);

// Fixed-width decimal with 12 fractional digits, for stable output.
std::string format_measure(double value);

// Load and parse a JSON file, wrapping parse failures into input_error
// with the offending path and position.
Json load_json_file(const std::string& path);

} // namespace refcox
