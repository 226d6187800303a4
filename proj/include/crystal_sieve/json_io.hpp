#pragma once

#include <json.hpp>
#include <vector>

#include "crystal_sieve/cartan.hpp"
#include "crystal_sieve/csp.hpp"
#include "crystal_sieve/qdim.hpp"
#include "crystal_sieve/qpoly.hpp"
#include "crystal_sieve/tableaux.hpp"

namespace crystal_sieve {

using Json = nlohmann::ordered_json;

/// Array of decimal coefficient strings, constant term first.
Json poly_to_json(const IntPoly& f);
IntPoly poly_from_json(const Json& j);

/// {"n": n, "b": {"1": "...", ...}, "a": {...}, "residue": [...]}
Json congruence_to_json(const CongruenceResult& r);
CongruenceResult congruence_from_json(const Json& j);

/// {"total": N, "orbits": {"size": "count", ...}}
Json census_to_json(const OrbitCensus& c);
OrbitCensus census_from_json(const Json& j);

Json csp_report_to_json(const CspReport& r);
Json aa_to_json(const AaResult& r);
Json tableaux_to_json(const std::vector<Tableau>& ts);
Json roots_to_json(const CartanDatum& datum);

}  // namespace crystal_sieve
