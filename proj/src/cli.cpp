#include "sunit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sunit/bounds.hpp"
#include "sunit/enumerate.hpp"
#include "sunit/errors.hpp"
#include "sunit/padic.hpp"
#include "sunit/presentation.hpp"
#include "sunit/quaternion.hpp"
#include "sunit/tree.hpp"

namespace sunit {

namespace {

using nlohmann::json;

class UsageError : public InputError {
 public:
  using InputError::InputError;
};

struct Settings {
  Precision real;
  long padic = kDefaultPadicPrecision;
};

long env_long(const char* name, long fallback, long lo, long hi) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (*end != '\0' || value < lo || value > hi) {
    throw InputError(std::string(name) + " must be an integer in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got '" + raw + "'");
  }
  return value;
}

Settings read_settings() {
  Settings s;
  s.real.digits10 = static_cast<unsigned>(env_long("SUNIT_PRECISION", 64, 16, 100000));
  s.padic = env_long("SUNIT_PADIC_PRECISION", kDefaultPadicPrecision, 1, kMaxPadicPrecision);
  return s;
}

std::string vertex_key(const TreeVertex& v) { return std::to_string(v.p) + ":" + v.to_string(); }

Integer parse_integer(const std::string& text, const char* what) {
  Integer out;
  if (text.empty() || out.set_str(text, 10) != 0) {
    throw InputError(std::string(what) + ": '" + text + "' is not an integer");
  }
  return out;
}

// Outcome of one subcommand: the payload plus optional text for stdout when
// the manifest is diverted to the error stream.
struct Outcome {
  json payload;
  std::vector<std::string> warnings;
  std::optional<std::string> text;
};

// ---- bounds ---------------------------------------------------------------------

struct BoundsArgs {
  std::optional<int> n, d, s, r1, r2;
  std::optional<std::string> covolume, disc, ms, shape_file;
  std::vector<std::string> places;
};

Outcome run_bounds(const BoundsArgs& args, const Settings& settings, json& params) {
  AlgebraShape shape;
  if (args.shape_file) {
    std::ifstream in(*args.shape_file);
    if (!in) throw InputError("cannot read shape file " + *args.shape_file);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& ex) {
      throw InputError("shape file is not valid JSON: " + std::string(ex.what()));
    }
    shape = shape_from_json(doc, settings.real);
    params["shape_file"] = *args.shape_file;
  } else {
    std::vector<std::string> missing;
    if (!args.n) missing.push_back("--n");
    if (!args.d) missing.push_back("--d");
    if (!args.s) missing.push_back("--s");
    if (!args.r1) missing.push_back("--r1");
    if (!args.r2) missing.push_back("--r2");
    if (!args.covolume && !args.disc) missing.push_back("--covolume or --disc");
    if (!missing.empty()) {
      std::string list;
      for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
      throw UsageError("bounds: missing " + list + " (or pass --shape FILE)");
    }
    if (args.covolume && args.disc) throw UsageError("bounds: give --covolume or --disc, not both");
    shape.n = *args.n;
    shape.d = *args.d;
    shape.s = *args.s;
    shape.r1 = *args.r1;
    shape.r2 = *args.r2;
    shape.covolume = args.covolume
                         ? Real::from_string(*args.covolume, settings.real)
                         : sqrt(Real::from_string(*args.disc, settings.real));
    shape.validate();
  }
  params["n"] = shape.n;
  params["d"] = shape.d;
  params["s"] = shape.s;
  params["r1"] = shape.r1;
  params["r2"] = shape.r2;
  params["covolume"] = shape.covolume.to_string();

  if (args.ms && !args.places.empty()) throw UsageError("bounds: give --ms or --places, not both");
  FinitePlaces places;
  if (args.ms) {
    const Integer ms = parse_integer(*args.ms, "--ms");
    if (ms < 1) throw InputError("--ms must be at least 1");
    if (ms > 1) places.norms.push_back(ms);
    params["ms"] = *args.ms;
  }
  for (const auto& text : args.places) {
    const Integer norm = parse_integer(text, "--places");
    if (norm < 2) throw InputError("finite place norms must be at least 2");
    places.norms.push_back(norm);
  }
  if (!args.places.empty()) params["places"] = args.places;

  const BoundReport report = thresholds_and_final(shape, places, OnSmallC::kOmitClosedForms);
  Outcome outcome;
  outcome.payload = to_json(report);
  outcome.payload["finite_places_required"] = report.requires_place(2);
  if (report.c_lt_one) {
    outcome.warnings.push_back("c < 1: the closed forms f1, f2 are not available");
  }
  return outcome;
}

// ---- enumerate -------------------------------------------------------------------

Outcome run_enumerate(const std::vector<unsigned long>& norms, const std::string& format) {
  Outcome outcome;
  json classes = json::array();
  std::string csv = "norm,element\n";
  for (unsigned long m : norms) {
    const auto e = enumerate_by_norm(m);
    json elements = json::array();
    for (const auto& q : e.elements) {
      elements.push_back(to_string(q));
      csv += std::to_string(m) + ",\"" + to_string(q) + "\"\n";
    }
    const unsigned long expected = 24 * sum_of_odd_divisors(m);
    if (e.elements.size() != expected) {
      throw VerificationError("norm " + std::to_string(m) + ": enumerated " +
                              std::to_string(e.elements.size()) + " elements, expected " +
                              std::to_string(expected));
    }
    json cls;
    cls["norm"] = m;
    cls["count"] = e.elements.size();
    cls["expected_count"] = expected;
    if (format == "json") cls["elements"] = std::move(elements);
    classes.push_back(std::move(cls));
  }
  outcome.payload["classes"] = std::move(classes);
  if (format == "csv") outcome.text = csv;
  return outcome;
}

// ---- height ----------------------------------------------------------------------

Outcome run_height(const std::string& text, const std::vector<unsigned long>& primes,
                   const Settings& settings) {
  const RatQuaternion q = parse_quaternion(text);
  if (q.is_zero()) throw ZeroElementError("the height of 0 is undefined");
  const SPlaceSet s(primes);
  Outcome outcome;
  json& p = outcome.payload;
  p["quaternion"] = to_string(q);
  p["reduced_norm"] = q.reduced_norm().get_str();
  p["height"] = height(q).get_str();
  p["is_hurwitz"] = is_hurwitz(q);
  p["s_places"] = s.to_string();
  p["is_s_unit"] = is_s_unit(q, s);
  json local = json::object();
  for (unsigned long prime : s.primes()) {
    const long e = content_valuation(q, prime);
    const Rational abs = local_abs(q, prime, settings.padic);
    Rational expected = 1;
    for (long i = 0; i < std::labs(e); ++i) expected *= prime;
    if (e > 0) expected = 1 / expected;
    if (abs != expected) {
      throw VerificationError("|q|_" + std::to_string(prime) + " from the splitting is " +
                              abs.get_str() + " but the content valuation gives " +
                              expected.get_str());
    }
    local[std::to_string(prime)] = {{"content_valuation", e}, {"local_abs", abs.get_str()}};
  }
  p["local"] = std::move(local);
  return outcome;
}

// ---- verification suites ---------------------------------------------------------

json units_payload() {
  const UnitGroupReport report = unit_group_check();
  const std::map<int, int> expected{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}};
  if (report.units.size() != 24 || report.order_counts != expected) {
    throw VerificationError("unit group does not have the binary tetrahedral order statistics");
  }
  json orders = json::object();
  for (const auto& [order, count] : report.order_counts) orders[std::to_string(order)] = count;
  json units = json::array();
  for (const auto& u : report.units) units.push_back(to_string(u));
  return {{"size", report.units.size()},
          {"order_counts", orders},
          {"elements_of_order_two", report.elements_of_order_two},
          {"units", units}};
}

json enumeration_suite_payload(unsigned long max_norm) {
  json counts = json::array();
  for (unsigned long m = 1; m <= max_norm; ++m) {
    const auto e = enumerate_by_norm(m);
    const unsigned long expected = 24 * sum_of_odd_divisors(m);
    std::set<HurwitzElement> seen(e.elements.begin(), e.elements.end());
    bool ok = e.elements.size() == expected && seen.size() == e.elements.size() &&
              std::is_sorted(e.elements.begin(), e.elements.end());
    for (const auto& q : e.elements) {
      ok = ok && q.reduced_norm() == m && seen.count(-q) && seen.count(q.conjugate());
    }
    if (!ok) throw VerificationError("norm class " + std::to_string(m) + " failed its checks");
    counts.push_back({{"norm", m}, {"count", e.elements.size()}});
  }
  return {{"max_norm", max_norm}, {"classes", counts}};
}

json coverage_payload(const NeighborCoverageReport& r) {
  json hits = json::object();
  for (const auto& [v, count] : r.hits) hits[v.to_string()] = count;
  return {{"p", r.p}, {"elements", r.elements}, {"neighbors", r.expected.size()}, {"hits", hits}};
}

json transitivity_payload(const TransitivityReport& r) {
  return {{"primes", r.primes},
          {"radius", r.radius},
          {"padic_precision", r.padic_precision},
          {"ball_sizes", r.ball_sizes},
          {"expected", r.expected},
          {"reached", r.reached},
          {"generators", r.generators},
          {"distinct_moves", r.distinct_moves},
          {"min_slack", r.min_slack},
          {"max_precision_loss", r.max_precision_loss},
          {"witnesses_are_s_units", r.witnesses_are_s_units}};
}

json tree_payload(const SPlaceSet& s, long radius, const Settings& settings,
                  const std::optional<std::string>& witness_file) {
  json coverage = json::array();
  for (unsigned long p : s.primes()) {
    coverage.push_back(coverage_payload(verify_neighbor_coverage(p, settings.padic)));
  }
  const TransitivityReport t = verify_product_transitivity(s, radius);
  if (witness_file) {
    json map = json::object();
    for (const auto& [v, w] : t.witnesses) {
      std::string key;
      for (const auto& c : v.components) key += (key.empty() ? "" : ";") + vertex_key(c);
      map[key.empty() ? "base" : key] = to_string(w);
    }
    std::ofstream file(*witness_file);
    if (!file) throw InputError("cannot write witness file " + *witness_file);
    file << json{{"primes", s.primes()}, {"radius", radius}, {"witnesses", map}}.dump(2) << '\n';
  }
  return {{"coverage", coverage}, {"transitivity", transitivity_payload(t)}};
}

json presentation_payload(const RelatorReport& r) {
  json relators = json::array();
  for (const auto& x : r.results) {
    relators.push_back({{"name", x.name},
                        {"word", x.text},
                        {"length", x.word.length()},
                        {"value", x.value[0].get_str()},
                        {"central", x.central}});
  }
  const Assignment gens = standard_assignment();
  const SPlaceSet s({3, 5});
  json rescaled = json::object();
  for (const auto& [name, q] : {std::pair{"a", gens.a}, std::pair{"b", gens.b}}) {
    const auto w = rescale_to_s_unit(q, s);
    rescaled[name] = w ? json{{"scalar", w->scalar.get_str()},
                              {"element", to_string(w->element)},
                              {"norm", w->norm.get_str()}}
                       : json(nullptr);
  }
  return {{"generators", {{"a", to_string(gens.a)}, {"b", to_string(gens.b)}}},
          {"relators", relators},
          {"s_unit_representatives", rescaled},
          {"all_central", r.passed}};
}

std::string presentation_text(const RelatorReport& r) {
  std::string out;
  for (const auto& x : r.results) {
    out += x.name + "  " + (x.central ? "central  " : "NOT central  ") + to_string(x.value) + "\n";
  }
  return out;
}

json hurwitz_bounds_suite(const Settings& settings) {
  const BoundReport r = thresholds_and_final(AlgebraShape::hurwitz(settings.real), FinitePlaces{});
  const Real pi = Real::pi(settings.real);
  const Real tol = pow(Real(10, settings.real), -static_cast<long>(settings.real.digits10) + 8);
  auto near = [&](const Real& x, const Real& y) { return abs(x - y) <= tol * max(Real(1, settings.real), abs(y)); };
  const bool ok = near(r.z, pi * pi * 2) && near(r.c, Real(4, settings.real) / pi) &&
                  near(r.m_X, Real(16, settings.real) / (pi * pi)) &&
                  near(r.height_bound_general, Real(4, settings.real) / pi) &&
                  !r.requires_place(2);
  if (!ok) throw VerificationError("Hurwitz constants deviate from 2pi^2, 4/pi, 16/pi^2");
  return to_json(r);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit generators and checks for S-unit groups of quaternion orders", "sunit"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Record wall-clock duration_ms in the manifest");

  BoundsArgs bargs;
  auto* bounds = app.add_subcommand("bounds", "Height bounds for a division algebra shape");
  bounds->add_option("--n", bargs.n, "Degree [k:Q]");
  bounds->add_option("--d", bargs.d, "Degree of the algebra");
  bounds->add_option("--s", bargs.s, "Real places where the algebra ramifies");
  bounds->add_option("--r1", bargs.r1, "Real places of k");
  bounds->add_option("--r2", bargs.r2, "Complex places of k");
  bounds->add_option("--covolume", bargs.covolume, "Covolume of the order (decimal)");
  bounds->add_option("--disc", bargs.disc, "Discriminant, the squared covolume (decimal)");
  bounds->add_option("--ms", bargs.ms, "Largest residue-field size of the finite places in S");
  bounds->add_option("--places", bargs.places, "Residue-field sizes of the finite places in S")
      ->delimiter(',');
  bounds->add_option("--shape", bargs.shape_file, "JSON shape document");

  std::vector<unsigned long> norms;
  std::string format = "json";
  auto* enumerate = app.add_subcommand("enumerate", "Hurwitz elements of given reduced norms");
  enumerate->add_option("--norms", norms, "Comma-separated norms")->required()->delimiter(',');
  enumerate->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string qtext;
  std::vector<unsigned long> height_primes;
  auto* heightcmd = app.add_subcommand("height", "Norm, height and local data of a quaternion");
  heightcmd->add_option("q", qtext, "Quaternion, e.g. \"1/2 + I - 3*K\"")->required();
  heightcmd->add_option("--primes", height_primes, "Odd primes of S")->delimiter(',');

  auto* units = app.add_subcommand("verify-units", "Structure of the Hurwitz unit group");

  std::vector<unsigned long> tree_primes{3};
  long tree_radius = 2;
  std::optional<std::string> witness_file;
  auto* tree = app.add_subcommand("verify-tree", "Vertex transitivity on products of trees");
  tree->add_option("--primes", tree_primes, "Odd primes of S")->delimiter(',');
  tree->add_option("--radius", tree_radius, "Ball radius in every tree")
      ->check(CLI::NonNegativeNumber);
  tree->add_option("--witnesses", witness_file, "Write vertex -> quaternion witnesses here");

  bool pres_json = false;
  auto* pres = app.add_subcommand("verify-presentation", "Centrality of the eight relators");
  pres->add_flag("--json", pres_json, "Write the manifest to stdout instead of a table");

  std::vector<unsigned long> all_primes{3};
  long all_radius = 2;
  auto* all = app.add_subcommand("verify-all", "Run every verification suite");
  all->add_option("--primes", all_primes, "Odd primes of S")->delimiter(',');
  all->add_option("--radius", all_radius, "Ball radius in every tree")
      ->check(CLI::NonNegativeNumber);

  json manifest;
  auto emit = [&](std::ostream& os) { os << manifest.dump(2) << '\n'; };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    manifest = {{"subcommand", nullptr}, {"status", "usage_error"}, {"exit_code", 2},
                {"error", e.what()}};
    emit(out);
    err << app.help();
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  manifest["subcommand"] = sub->get_name();
  json params = json::object();
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  bool to_err = false;
  int code = 0;
  std::string status = "pass";
  try {
    const Settings settings = read_settings();
    manifest["precision"] = {{"real_digits", settings.real.digits10},
                             {"padic_digits", settings.padic}};
    if (sub == bounds) {
      outcome = run_bounds(bargs, settings, params);
    } else if (sub == enumerate) {
      params = {{"norms", norms}, {"format", format}};
      outcome = run_enumerate(norms, format);
      to_err = format == "csv";
    } else if (sub == heightcmd) {
      params = {{"q", qtext}, {"primes", height_primes}};
      outcome = run_height(qtext, height_primes, settings);
    } else if (sub == units) {
      outcome.payload = units_payload();
    } else if (sub == tree) {
      params = {{"primes", tree_primes}, {"radius", tree_radius}};
      if (witness_file) params["witnesses"] = *witness_file;
      outcome.payload = tree_payload(SPlaceSet(tree_primes), tree_radius, settings, witness_file);
    } else if (sub == pres) {
      params = {{"json", pres_json}};
      RelatorReport report = evaluate_relators(standard_relators(), standard_assignment());
      outcome.payload = presentation_payload(report);
      if (!pres_json) {
        outcome.text = presentation_text(report);
        to_err = true;
      }
      if (!report.passed) {
        status = "fail";
        code = 1;
        manifest["error"] = "a relator evaluates to a non-central element";
      }
    } else if (sub == all) {
      params = {{"primes", all_primes}, {"radius", all_radius}};
      const SPlaceSet s(all_primes);
      json suites = json::object();
      std::string current;
      try {
        current = "bounds";
        suites[current] = hurwitz_bounds_suite(settings);
        current = "units";
        suites[current] = units_payload();
        current = "enumeration";
        suites[current] = enumeration_suite_payload(50);
        current = "tree";
        suites[current] = tree_payload(s, all_radius, settings, std::nullopt);
        current = "presentation";
        suites[current] = presentation_payload(verify_relators());
      } catch (const InputError&) {
        throw;
      } catch (const Error& ex) {
        outcome.payload["suites"] = std::move(suites);
        throw VerificationError(current + ": " + ex.what());
      }
      outcome.payload["suites"] = std::move(suites);
    }
  } catch (const InputError& ex) {
    status = dynamic_cast<const UsageError*>(&ex) ? "usage_error" : "input_error";
    code = 2;
    manifest["error"] = ex.what();
  } catch (const Error& ex) {
    status = "fail";
    code = 1;
    manifest["error"] = ex.what();
  } catch (const std::exception& ex) {
    status = "fail";
    code = 1;
    manifest["error"] = std::string("internal error: ") + ex.what();
  }

  manifest["parameters"] = params;
  manifest["status"] = status;
  manifest["exit_code"] = code;
  manifest["payload"] = outcome.payload.is_null() ? json(nullptr) : outcome.payload;
  if (!outcome.warnings.empty()) manifest["warnings"] = outcome.warnings;
  if (timing) {
    manifest["duration_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  if (code == 2) err << sub->help();
  if (to_err && outcome.text) {
    out << *outcome.text;
    emit(err);
  } else {
    emit(out);
  }
  return code;
}

}  // namespace sunit
