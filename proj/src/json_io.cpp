#include "crystal_sieve/json_io.hpp"

#include "crystal_sieve/errors.hpp"

namespace crystal_sieve {

namespace {

Json bigint_map(const std::map<std::uint64_t, BigInt>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v.get_str();
  return out;
}

std::map<std::uint64_t, BigInt> bigint_map_from(const Json& j) {
  std::map<std::uint64_t, BigInt> out;
  for (const auto& [k, v] : j.items()) out[std::stoull(k)] = parse_bigint(v.get<std::string>());
  return out;
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  } catch (const std::logic_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace

Json poly_to_json(const IntPoly& f) { return Json(to_decimal_strings(f)); }

IntPoly poly_from_json(const Json& j) {
  return guarded([&] { return from_decimal_strings(j.get<std::vector<std::string>>()); });
}

Json congruence_to_json(const CongruenceResult& r) {
  Json out;
  out["n"] = r.n;
  if (r.kind == PairingKind::Dual) out["dual"] = true;
  out["b"] = bigint_map(r.b);
  out["a"] = bigint_map(r.a);
  out["residue"] = poly_to_json(r.residue);
  return out;
}

CongruenceResult congruence_from_json(const Json& j) {
  return guarded([&] {
    CongruenceResult r;
    r.n = j.at("n").get<std::uint64_t>();
    r.kind = j.value("dual", false) ? PairingKind::Dual : PairingKind::Standard;
    r.b = bigint_map_from(j.at("b"));
    r.a = bigint_map_from(j.at("a"));
    r.residue = poly_from_json(j.at("residue"));
    return r;
  });
}

Json census_to_json(const OrbitCensus& c) {
  Json out;
  out["total"] = c.total;
  Json orbits = Json::object();
  for (const auto& [size, count] : c.by_size) orbits[std::to_string(size)] = count;
  out["orbits"] = orbits;
  return out;
}

OrbitCensus census_from_json(const Json& j) {
  return guarded([&] {
    OrbitCensus c;
    c.total = j.at("total").get<std::uint64_t>();
    for (const auto& [k, v] : j.at("orbits").items()) c.by_size[std::stoull(k)] = v.get<std::uint64_t>();
    return c;
  });
}

Json csp_report_to_json(const CspReport& r) {
  Json out;
  out["n"] = r.n;
  out["action"] = to_string(r.action);
  out["verdict"] = r.verdict;
  out["non_rational"] = r.non_rational;
  Json rows = Json::array();
  for (const auto& e : r.per_exponent) {
    Json row;
    row["j"] = e.j;
    row["fixed"] = e.fixed_count;
    row["evaluation"] = e.evaluation ? Json(e.evaluation->get_str()) : Json(nullptr);
    row["match"] = e.match;
    rows.push_back(row);
  }
  out["exponents"] = rows;
  out["census"] = census_to_json(r.census);
  out["predicted_a"] = r.predicted_a ? bigint_map(*r.predicted_a) : Json(nullptr);
  return out;
}

Json aa_to_json(const AaResult& r) {
  Json out;
  out["exists"] = r.exists;
  out["evaluation_failure"] = r.evaluation_failure;
  out["failures"] = r.failures;
  out["mobius_sums"] = bigint_map(r.mobius_sums);
  return out;
}

Json tableaux_to_json(const std::vector<Tableau>& ts) {
  Json out = Json::array();
  for (const auto& t : ts) out.push_back(t.rows());
  return out;
}

Json roots_to_json(const CartanDatum& datum) {
  Json out;
  out["type"] = datum.type().name();
  Json roots = Json::array();
  for (const Root& beta : datum.positive_roots()) {
    Json r;
    r["coords"] = beta.coords;
    r["height"] = beta.height();
    r["rho"] = datum.rho_pairing(beta);
    r["corho"] = datum.corho_pairing(beta);
    roots.push_back(r);
  }
  out["roots"] = roots;
  return out;
}

}  // namespace crystal_sieve
