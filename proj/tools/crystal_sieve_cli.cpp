#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "crystal_sieve/cartan.hpp"
#include "crystal_sieve/csp.hpp"
#include "crystal_sieve/errors.hpp"
#include "crystal_sieve/json_io.hpp"
#include "crystal_sieve/partition.hpp"
#include "crystal_sieve/qdim.hpp"
#include "crystal_sieve/tableaux.hpp"

using namespace crystal_sieve;

namespace {

enum class Format { Plain, Json, Csv };

struct Options {
  Format format = Format::Plain;
  int jobs = 1;
};

std::string join(const auto& xs, const char* sep) {
  std::ostringstream out;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) out << sep;
    out << x;
    first = false;
  }
  return out.str();
}

unsigned jobs(const Options& opt) { return static_cast<unsigned>(std::max(1, opt.jobs)); }

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_map(const char* name, const std::map<std::uint64_t, BigInt>& m) {
  for (const auto& [d, v] : m) std::cout << name << "_" << d << " = " << v << '\n';
}

void print_poly_csv(const IntPoly& f) {
  std::cout << "exponent,coefficient\n";
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) std::cout << k << ',' << f.coeffs()[k] << '\n';
}

void print_congruence(const Options& opt, const CongruenceResult& r, const IntPoly* poly) {
  switch (opt.format) {
    case Format::Json: {
      Json j = congruence_to_json(r);
      if (poly) j["qdim"] = poly_to_json(*poly);
      print_json(j);
      break;
    }
    case Format::Csv:
      std::cout << "d,b_d,a_d\n";
      for (const auto& [d, b] : r.b) std::cout << d << ',' << b << ',' << r.a.at(d) << '\n';
      break;
    case Format::Plain:
      if (poly) std::cout << "qdim: " << to_string(*poly) << '\n';
      std::cout << "residue mod q^" << r.n << " - 1: " << to_string(r.residue) << '\n';
      print_map("b", r.b);
      print_map("a", r.a);
      break;
  }
}

Weight read_weight(const CartanDatum& datum, const std::string& text) {
  Weight w = Weight::parse(text);
  if (static_cast<int>(w.fund_coords.size()) != datum.rank()) {
    throw Error(Errc::DimensionMismatch, "weight " + text + " has wrong length for " + datum.type().name());
  }
  return w;
}

void cmd_roots(const Options& opt, const std::string& type) {
  const CartanDatum datum(CartanType::parse(type));
  switch (opt.format) {
    case Format::Json:
      print_json(roots_to_json(datum));
      break;
    case Format::Csv:
      std::cout << "root,height,rho,corho\n";
      for (const Root& b : datum.positive_roots()) {
        std::cout << join(b.coords, ";") << ',' << b.height() << ',' << datum.rho_pairing(b) << ','
                  << datum.corho_pairing(b) << '\n';
      }
      break;
    case Format::Plain:
      std::cout << datum.type().name() << ": " << datum.positive_roots().size() << " positive roots\n";
      for (const Root& b : datum.positive_roots()) {
        std::cout << b.to_string() << "  height " << b.height() << "  (beta,rho) " << datum.rho_pairing(b)
                  << "  <beta^vee,rho> " << datum.corho_pairing(b) << '\n';
      }
      break;
  }
}

void cmd_qdim(const Options& opt, const std::string& type, const std::string& weight, bool dual,
              std::optional<std::uint64_t> mod_n) {
  const CartanDatum datum(CartanType::parse(type));
  const Weight w = read_weight(datum, weight);
  const PairingKind kind = dual ? PairingKind::Dual : PairingKind::Standard;
  const IntPoly poly = qdim(datum, w, kind);
  if (mod_n) {
    print_congruence(opt, congruence(datum, w, *mod_n, kind), &poly);
    return;
  }
  switch (opt.format) {
    case Format::Json:
      print_json(poly_to_json(poly));
      break;
    case Format::Csv:
      print_poly_csv(poly);
      break;
    case Format::Plain:
      std::cout << to_string(poly) << '\n';
      break;
  }
}

void cmd_specialize(const Options& opt, const std::string& shape, int m, bool schur) {
  const Partition lambda = Partition::parse(shape);
  const IntPoly f = schur ? schur_specialization(lambda, m) : principal_specialization(lambda, m);
  switch (opt.format) {
    case Format::Json:
      print_json(poly_to_json(f));
      break;
    case Format::Csv:
      print_poly_csv(f);
      break;
    case Format::Plain:
      std::cout << to_string(f) << '\n';
      break;
  }
}

void cmd_congruence(const Options& opt, const std::string& type, const std::string& weight, std::uint64_t n,
                    bool dual) {
  const CartanDatum datum(CartanType::parse(type));
  const Weight w = read_weight(datum, weight);
  print_congruence(opt, congruence(datum, w, n, dual ? PairingKind::Dual : PairingKind::Standard), nullptr);
}

void print_census(const Options& opt, const OrbitCensus& c) {
  switch (opt.format) {
    case Format::Json:
      print_json(census_to_json(c));
      break;
    case Format::Csv:
      std::cout << "size,orbits\n";
      for (const auto& [size, count] : c.by_size) std::cout << size << ',' << count << '\n';
      break;
    case Format::Plain:
      std::cout << c.total << " elements, order " << c.order() << '\n';
      for (const auto& [size, count] : c.by_size) std::cout << "size " << size << ": " << count << " orbits\n";
      break;
  }
}

void print_tableaux(const Options& opt, const std::vector<Tableau>& ts) {
  switch (opt.format) {
    case Format::Json:
      print_json(tableaux_to_json(ts));
      break;
    case Format::Csv:
      std::cout << "tableau\n";
      for (const auto& t : ts) std::cout << t.to_string() << '\n';
      break;
    case Format::Plain:
      for (const auto& t : ts) std::cout << t.to_string() << '\n';
      if (ts.empty()) std::cout << "(none)\n";
      break;
  }
}

void print_csp(const Options& opt, const CspReport& r, bool table) {
  if (opt.format == Format::Json) {
    print_json(csp_report_to_json(r));
    return;
  }
  if (opt.format == Format::Csv || table) {
    const char* sep = opt.format == Format::Csv ? "," : "\t";
    std::cout << "j" << sep << "fixed" << sep << "f(omega^j)" << sep << "match\n";
    for (const auto& e : r.per_exponent) {
      std::cout << e.j << sep << e.fixed_count << sep << (e.evaluation ? e.evaluation->get_str() : "irrational") << sep
                << (e.match ? "yes" : "no") << '\n';
    }
    if (opt.format == Format::Csv) return;
  }
  std::cout << "action " << to_string(r.action) << ", n = " << r.n << ", verdict " << (r.verdict ? "true" : "false")
            << '\n';
  if (r.non_rational) std::cout << "some evaluations are not rational integers\n";
  if (r.predicted_a) print_map("a", *r.predicted_a);
}

void cmd_crystal(const Options& opt, const std::string& shape, int m, const std::string& action, const std::string& mode) {
  const Partition lambda = Partition::parse(shape);
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
  if (lambda.length() > m) throw Error(Errc::ShapeTooLong, "l(" + lambda.to_string() + ") > " + std::to_string(m));
  const Action act = parse_action(action);
  if (mode == "orbits") {
    print_census(opt, orbit_census(lambda, m, act, default_enumeration_cap(), jobs(opt)));
  } else if (mode == "fixed") {
    const auto all = enumerate_ssyt(lambda, m);
    const auto perm = action_permutation(all, act, jobs(opt));
    std::vector<Tableau> fixed;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (perm[i] == i) fixed.push_back(all[i]);
    }
    print_tableaux(opt, fixed);
  } else if (mode == "csp") {
    print_csp(opt, csp_check(lambda, m, act, std::nullopt, std::nullopt, default_enumeration_cap(), jobs(opt)), false);
  } else if (mode == "list") {
    print_tableaux(opt, enumerate_ssyt(lambda, m));
  } else {
    throw Error(Errc::ParseError, "unknown crystal mode " + mode);
  }
}

void cmd_csp_check(const Options& opt, const std::string& shape, int m, const std::string& action,
                   const std::string& poly, std::optional<std::uint64_t> order, bool table) {
  const Partition lambda = Partition::parse(shape);
  if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
  if (lambda.length() > m) throw Error(Errc::ShapeTooLong, "l(" + lambda.to_string() + ") > " + std::to_string(m));
  std::optional<IntPoly> f;
  if (!poly.empty()) f = parse_poly(poly);
  print_csp(opt, csp_check(lambda, m, parse_action(action), f, order, default_enumeration_cap(), jobs(opt)), table);
}

void cmd_aa_check(const Options& opt, const std::string& poly, std::uint64_t n) {
  const AaResult r = aa_criterion(parse_poly(poly), n);
  switch (opt.format) {
    case Format::Json:
      print_json(aa_to_json(r));
      break;
    case Format::Csv:
      std::cout << "k,mobius_sum\n";
      for (const auto& [k, s] : r.mobius_sums) std::cout << k << ',' << s << '\n';
      break;
    case Format::Plain:
      std::cout << "exists: " << (r.exists ? "true" : "false") << '\n';
      if (r.evaluation_failure) std::cout << "some evaluation is not a nonnegative integer\n";
      for (const auto& [k, s] : r.mobius_sums) std::cout << "k = " << k << ": " << s << '\n';
      break;
  }
}

void cmd_orbit_formula(const Options& opt, std::uint64_t a, std::uint64_t d) {
  const BigInt v = orbit_formula(a, d);
  switch (opt.format) {
    case Format::Json: {
      Json j;
      j["a"] = a;
      j["d"] = d;
      j["orbits"] = v.get_str();
      print_json(j);
      break;
    }
    case Format::Csv:
      std::cout << "a,d,orbits\n" << a << ',' << d << ',' << v << '\n';
      break;
    case Format::Plain:
      std::cout << v << '\n';
      break;
  }
}

struct SweepRow {
  Partition lambda;
  int m = 0;
  std::uint64_t n = 0;
  bool divisible = false;
  bool verdict = false;
  std::optional<bool> census_matches_a;
  bool shape_predicate = false;
  OrbitCensus census;
};

SweepRow sweep_cell(const Partition& lambda, int m, Action action) {
  SweepRow row;
  row.lambda = lambda;
  row.m = m;
  const CspReport r = csp_check(lambda, m, action);
  row.n = r.n;
  row.verdict = r.verdict;
  row.census = r.census;
  row.divisible = r.predicted_a.has_value();
  if (r.predicted_a) {
    bool match = true;
    for (const auto& [size, count] : r.census.by_size) {
      if (r.n % size != 0) match = false;
    }
    for (const auto& [d, ad] : *r.predicted_a) {
      if (ad != static_cast<unsigned long>(r.census.orbits_of_size(d))) match = false;
    }
    row.census_matches_a = match;
  }
  row.shape_predicate = is_csp_shape(lambda, m);
  return row;
}

void cmd_sweep(const Options& opt, const std::vector<int>& ms, int max_size, const std::string& action,
               bool divisible_only) {
  const Action act = parse_action(action);
  std::vector<std::pair<Partition, int>> cells;
  for (int m : ms) {
    if (m < 1) throw Error(Errc::InvalidArgument, "m must be positive");
    for (int size = 0; size <= max_size; ++size) {
      if (divisible_only && size % m != 0) continue;
      for (const auto& lambda : partitions_of(size, m)) cells.emplace_back(lambda, m);
    }
  }
  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        rows[i] = sweep_cell(cells[i].first, cells[i].second, act);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> threads;
  for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  if (opt.format == Format::Json) {
    Json out = Json::array();
    for (const auto& r : rows) {
      Json j;
      j["lambda"] = r.lambda.parts();
      j["m"] = r.m;
      j["n"] = r.n;
      j["divisible"] = r.divisible;
      j["csp"] = r.verdict;
      j["census_matches_a"] = r.census_matches_a ? Json(*r.census_matches_a) : Json(nullptr);
      j["shape_predicate"] = r.shape_predicate;
      j["census"] = census_to_json(r.census);
      out.push_back(j);
    }
    print_json(out);
    return;
  }
  std::cout << "lambda,m,n,size,divisible,csp,census_matches_a,shape_predicate\n";
  for (const auto& r : rows) {
    std::cout << '"' << r.lambda.to_string() << "\"," << r.m << ',' << r.n << ',' << r.census.total << ','
              << r.divisible << ',' << r.verdict << ','
              << (r.census_matches_a ? std::to_string(*r.census_matches_a) : std::string()) << ','
              << r.shape_predicate << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-dimensions, residues and cyclic sieving on tableau crystals"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  std::map<std::string, Format> formats{{"plain", Format::Plain}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", opt.format, "Output format: plain, json or csv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--jobs", opt.jobs, "Worker threads for sweeps and orbit tracing")->check(CLI::PositiveNumber);

  std::string type, weight, shape, poly, action = "c", mode;
  bool dual = false, schur = false, table = false, divisible_only = false;
  std::optional<std::uint64_t> mod_n, order;
  std::uint64_t n = 1, a = 0, d = 1;
  int m = 1, max_size = 8;
  std::vector<int> ms{2, 3, 4};

  auto* roots = app.add_subcommand("roots", "List positive roots with rho pairings");
  roots->add_option("type", type, "Cartan type, e.g. B2")->required();

  auto* qd = app.add_subcommand("qdim", "q-dimension of B(Lambda), optionally reduced mod q^n - 1");
  qd->add_option("type", type)->required();
  qd->add_option("weight", weight, "Fundamental-weight coordinates, e.g. 2,0")->required();
  qd->add_flag("--dual", dual, "Use coroot pairings");
  qd->add_option("--mod", mod_n, "Reduce modulo q^n - 1 and print b_d, a_d")->check(CLI::PositiveNumber);

  auto* spec = app.add_subcommand("specialize", "Principal specialization s_lambda(1, q, ..., q^{m-1}) / q^kappa");
  spec->add_option("partition", shape)->required();
  spec->add_option("-m", m, "Number of variables")->required();
  spec->add_flag("--schur", schur, "Keep the q^kappa factor");

  auto* cong = app.add_subcommand("congruence", "b_d, a_d and residue of qdim mod q^n - 1");
  cong->add_option("type", type)->required();
  cong->add_option("weight", weight)->required();
  cong->add_option("-n", n)->required()->check(CLI::PositiveNumber);
  cong->add_flag("--dual", dual);

  auto* cry = app.add_subcommand("crystal", "Orbits, fixed points or CSP verdict on SST_m(lambda)");
  cry->add_option("partition", shape)->required();
  cry->add_option("mode", mode, "orbits, fixed, csp or list")
      ->required()
      ->check(CLI::IsMember({"orbits", "fixed", "csp", "list"}));
  cry->add_option("-m", m)->required();
  cry->add_option("--action", action, "c or pr");

  auto* cc = app.add_subcommand("csp-check", "Compare fixed points with root-of-unity evaluations");
  cc->add_option("partition", shape)->required();
  cc->add_option("-m", m)->required();
  cc->add_option("--action", action, "c or pr");
  cc->add_option("--poly", poly, "Polynomial to sieve with (default: principal specialization)");
  cc->add_option("--order", order, "Group order, a multiple of the action order");
  cc->add_flag("--table", table, "Per-exponent table");

  auto* aa = app.add_subcommand("aa-check", "Existence certificate for a cyclic action sieving with f");
  aa->add_option("--poly", poly)->required();
  aa->add_option("-n", n)->required()->check(CLI::PositiveNumber);

  auto* of = app.add_subcommand("orbit-formula", "Orbit count of size d for the rectangle with parameter a");
  of->add_option("-a", a)->required();
  of->add_option("-d", d)->required()->check(CLI::PositiveNumber);

  auto* sw = app.add_subcommand("sweep", "Batch CSP / census table over partitions and m");
  sw->add_option("--m", ms, "Values of m")->delimiter(',');
  sw->add_option("--max-size", max_size, "Largest |lambda|")->check(CLI::NonNegativeNumber);
  sw->add_option("--action", action, "c or pr");
  sw->add_flag("--divisible-only", divisible_only, "Only |lambda| divisible by m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code(Errc::ParseError);
  }

  try {
    if (*roots) cmd_roots(opt, type);
    if (*qd) cmd_qdim(opt, type, weight, dual, mod_n);
    if (*spec) cmd_specialize(opt, shape, m, schur);
    if (*cong) cmd_congruence(opt, type, weight, n, dual);
    if (*cry) cmd_crystal(opt, shape, m, action, mode);
    if (*cc) cmd_csp_check(opt, shape, m, action, poly, order, table);
    if (*aa) cmd_aa_check(opt, poly, n);
    if (*of) cmd_orbit_formula(opt, a, d);
    if (*sw) cmd_sweep(opt, ms, max_size, action, divisible_only);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 5;
  }
  return 0;
}
