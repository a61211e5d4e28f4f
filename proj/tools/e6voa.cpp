// Command-line driver: verify-virasoro, verify-hwv, find-hwv, check-characters, report-all.
#include <CLI11.hpp>
#include <omp.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "e6voa/golden.hpp"
#include "e6voa/hwv.hpp"
#include "e6voa/json_io.hpp"
#include "e6voa/qseries.hpp"
#include "e6voa/virasoro.hpp"

using namespace e6voa;
using json = json_io::json;

namespace {

constexpr int kPass = 0, kFail = 1, kConfig = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int order_t = 100;
  int order_v = 120;
  int weight_cap = 2;
  int commutant_cap = 1;
  bool no_spot_states = false;
  bool expensive = false;
  int jobs = 0;
  std::string format = "json";
  std::string out;
  std::optional<std::string> golden_dir;
};

json parse_fixture(const std::string& name, const RunConfig& cfg) {
  std::string text = golden::load(name, cfg.golden_dir);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(name + ": " + e.what());
  }
}

// ---- verify-virasoro ----

struct VectorChoice {
  std::string key, file;
  const virasoro::ConformalVector* engine;
};

std::vector<VectorChoice> vector_choices() {
  return {{"e6", "omega_e6.json", &virasoro::omega_e6()},
          {"f4", "omega_f4.json", &virasoro::omega_f4()},
          {"coset", "omega.json", &virasoro::omega_coset()}};
}

json verify_virasoro(const RunConfig& cfg, const std::string& which, const std::optional<std::string>& charge) {
  json rep = {{"command", "verify-virasoro"}};
  bool all = true;
  std::optional<Scalar> want_charge;
  if (charge) {
    if (which == "all") throw ConfigError("--charge needs a single --vector");
    try {
      want_charge = parse_scalar(*charge);
    } catch (const std::exception&) {
      throw ConfigError("--charge: not a rational: " + *charge);
    }
  }
  auto states = virasoro::graded_test_states(cfg.weight_cap);
  const bool spot = !cfg.no_spot_states && cfg.weight_cap >= 2;
  if (spot)
    for (auto& s : virasoro::weight3_spot_states()) states.push_back(std::move(s));
  const auto small = virasoro::graded_test_states(std::min(cfg.weight_cap, cfg.commutant_cap));
  json vectors = json::array();
  bool matched = false;
  for (const auto& vc : vector_choices()) {
    if (which != "all" && which != vc.key) continue;
    matched = true;
    json v = {{"vector", vc.key}};
    auto g = json_io::golden_vector_from_json(parse_fixture(vc.file, cfg));
    virasoro::ConformalVector cv{g.name, g.state, g.central_charge};
    bool golden_ok = g.state == vc.engine->state && g.central_charge == vc.engine->central_charge;
    v["central_charge"] = to_string(cv.central_charge);
    v["golden_matches_engine"] = golden_ok;
    if (!golden_ok) v["golden_difference"] = json_io::to_json(g.state - vc.engine->state);
    bool ok = golden_ok;
    if (want_charge) {
      bool c_ok = *want_charge == cv.central_charge;
      v["expected_charge"] = to_string(*want_charge);
      v["charge_pass"] = c_ok;
      ok = ok && c_ok;
    }
    auto ope = virasoro::ope_check(cv);
    v["ope"] = json_io::to_json(ope, cv);
    auto br = virasoro::virasoro_bracket_suite(cv, -2, 3, -2, 3, states);
    v["brackets"] = json_io::to_json(br);
    v["brackets"]["weight_cap"] = cfg.weight_cap;
    v["brackets"]["weight3_spot_states"] = spot;
    ok = ok && ope.pass && br.pass();
    if (vc.key == "f4") {
      State sug = virasoro::sugawara_f4_vacuum(lattice::DualCoefficient::EpsAlphaAlpha);
      State alt = virasoro::sugawara_f4_vacuum(lattice::DualCoefficient::EpsAlphaTauAlpha);
      bool s_ok = sug == cv.state;
      v["sugawara"] = {{"pass", s_ok},
                       {"dual_coefficient", "(1/2) eps(alpha,-alpha)"},
                       {"difference", json_io::to_json(sug - cv.state)},
                       {"variant_eps_alpha_tau_alpha_matches", alt == cv.state}};
      ok = ok && s_ok;
    }
    if (vc.key == "coset") {
      auto com = virasoro::commutant_check(cv, small);
      auto mut = virasoro::mutual_commutation(small);
      v["commutes_with_f4"] = json_io::to_json(com);
      v["commutes_with_f4"]["weight_cap"] = std::min(cfg.weight_cap, cfg.commutant_cap);
      v["commutes_with_f4_virasoro"] = json_io::to_json(mut);
      State diff = virasoro::omega_e6().state - virasoro::omega_f4().state;
      v["equals_e6_minus_f4"] = diff == cv.state;
      ok = ok && com.pass() && mut.pass() && diff == cv.state;
    }
    v["pass"] = ok;
    all = all && ok;
    vectors.push_back(v);
  }
  if (!matched) throw ConfigError("--vector must be e6, f4, coset or all");
  rep["vectors"] = vectors;
  rep["pass"] = all;
  return rep;
}

// ---- verify-hwv / find-hwv ----

F4Weight parse_sector(const std::string& s) {
  if (s == "zero" || s == "0" || s == "omega0") return lattice::f4_omega(0);
  if (s.size() == 6 && s.rfind("omega", 0) == 0 && s[5] >= '1' && s[5] <= '4') return lattice::f4_omega(s[5] - '0');
  try {
    return json_io::f4_weight_from_json(json::parse(s));
  } catch (const std::exception&) {
    throw ConfigError("sector must be zero, omega1..omega4 or a JSON array of 4 \"p/q\" strings: " + s);
  }
}

json find_report(const RunConfig& cfg, int coset, const std::string& weight, const std::string& sector,
                 const std::optional<std::string>& h, std::size_t max_columns, std::optional<std::size_t> expect_dim) {
  Scalar w, hv;
  try {
    w = parse_scalar(weight);
    if (h) hv = parse_scalar(*h);
  } catch (const std::exception&) {
    throw ConfigError("weight and h must be rationals");
  }
  if (coset < 0 || coset > 2) throw ConfigError("coset must be 0, 1 or 2");
  if (w >= 3 && !cfg.expensive) throw ConfigError("weight >= 3 searches need --expensive");
  F4Weight sec = parse_sector(sector);
  hwv::FindResult f;
  try {
    f = hwv::find_hwvs(coset, w, sec, h ? std::optional<Scalar>(hv) : std::nullopt, max_columns);
  } catch (const hwv::CapExceeded& e) {
    throw ConfigError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  json rep = json_io::to_json(f);
  rep["coset"] = coset;
  rep["weight"] = to_string(w);
  rep["sector"] = json_io::to_json(sec);
  json matches = json::array();
  for (const auto& s : f.solutions) {
    json m = json::array();
    for (const auto& b : hwv::builtin_hwvs())
      if (hwv::proportional(s, b.state)) m.push_back(b.id);
    matches.push_back(m);
  }
  rep["proportional_to_builtin"] = matches;
  bool ok = !expect_dim || f.solutions.size() == *expect_dim;
  if (expect_dim) rep["expected_dimension"] = *expect_dim;
  rep["pass"] = ok;
  return rep;
}

json verify_hwv(const RunConfig& cfg) {
  json rep = {{"command", "verify-hwv"}};
  bool all = true;
  json vecs = json::array();
  std::size_t passed = 0;
  for (const auto& b : hwv::builtin_hwvs()) {
    auto g = json_io::golden_hwv_from_json(parse_fixture(golden::hwv_file(b.id), cfg));
    bool golden_ok = g.state == b.state && g.h == b.h && g.omega == b.omega && g.module == b.module;
    json v;
    try {
      v = json_io::to_json(hwv::check_hwv(g.state, g.h, g.omega, g.id));
    } catch (const std::invalid_argument& e) {
      v = {{"id", g.id}, {"pass", false}, {"error", e.what()}};
    }
    v["module"] = g.module;
    v["golden_matches_builtin"] = golden_ok;
    if (!golden_ok) v["golden_difference"] = json_io::to_json(g.state - b.state);
    bool ok = golden_ok && v["pass"].get<bool>();
    v["pass"] = ok;
    passed += ok;
    all = all && ok;
    vecs.push_back(v);
  }
  rep["vectors"] = vecs;
  rep["passed"] = std::to_string(passed) + "/" + std::to_string(hwv::builtin_hwvs().size());

  // tau-hat carries the Lambda_1 vectors onto the Lambda_6 ones.
  bool tau_ok = fock::tau_hat(hwv::builtin("e^lambda1").state) == hwv::builtin("e^lambda6").state &&
                fock::tau_hat(hwv::builtin("R").state) == hwv::builtin("tau_R").state;
  rep["tau_hat_maps_lambda1_to_lambda6"] = tau_ok;

  auto u = hwv::build_u();
  rep["U_construction"] = json_io::to_json(u);
  all = all && tau_ok && u.pass();
  rep["pass"] = all;
  return rep;
}

// ---- check-characters ----

json check_characters(const RunConfig& cfg, const std::optional<std::string>& identity) {
  json rep = {{"command", "check-characters"}, {"order_t", cfg.order_t}, {"order_v", cfg.order_v}};
  std::vector<qseries::IdentityCheck> checks;
  if (identity) {
    checks = qseries::identities_by_name(*identity, cfg.order_t, cfg.order_v);
    if (checks.empty()) {
      std::string names;
      for (const auto& n : qseries::identity_names()) names += " " + n;
      throw ConfigError("unknown identity " + *identity + "; known:" + names);
    }
  } else {
    checks = qseries::all_identities(cfg.order_t, cfg.order_v);
  }
  json arr = json::array();
  bool all = true;
  for (const auto& c : checks) {
    arr.push_back(json_io::to_json(c));
    all = all && c.pass;
  }
  rep["identities"] = arr;
  rep["pass"] = all;
  return rep;
}

json rediscovery(const RunConfig& cfg) {
  struct Case {
    int coset;
    const char *weight, *sector;
    std::size_t dim;
  };
  std::vector<Case> cases = {{0, "0", "zero", 1},   {0, "1", "omega4", 1}, {0, "2", "omega4", 1},
                             {1, "2/3", "omega4", 1}, {0, "1", "zero", 0},   {0, "2", "zero", 0}};
  if (cfg.expensive) cases.push_back({0, "3", "zero", 1});
  json arr = json::array();
  bool all = true;
  for (const auto& c : cases) {
    json r = find_report(cfg, c.coset, c.weight, c.sector, std::nullopt, 2000, c.dim);
    all = all && r["pass"].get<bool>();
    arr.push_back(r);
  }
  return {{"pass", all}, {"searches", arr}};
}

// ---- output ----

// Objects under a key are labelled by the key, array elements by their id.
std::string element_name(const json& j) {
  for (const char* k : {"identity", "id", "vector", "condition", "command", "name"})
    if (j.contains(k) && j[k].is_string()) return j[k].get<std::string>();
  for (const char* k : {"mode", "coset"})
    if (j.contains(k) && j[k].is_number()) return std::string(k) + " " + j[k].dump();
  return "";
}

void render_text(const json& j, const std::string& name, std::ostream& os) {
  if (j.is_object()) {
    if (j.contains("pass") && j["pass"].is_boolean()) {
      os << (j["pass"].get<bool>() ? "PASS " : "FAIL ") << (name.empty() ? "report" : name);
      if (j.contains("note")) os << "  (" << j["note"].get<std::string>() << ")";
      if (j.contains("first_failure") && !j["first_failure"].is_null()) os << "  first failure at " << j["first_failure"];
      os << "\n";
    }
    for (const auto& [k, v] : j.items()) {
      if (k == "residual" || k == "difference" || k == "state" || k == "basis" || k == "lhs" || k == "rhs") continue;
      if (v.is_object())
        render_text(v, name.empty() ? k : name + " / " + k, os);
      else if (v.is_array())
        for (const auto& e : v) {
          if (!e.is_object()) continue;
          std::string en = element_name(e);
          render_text(e, en.empty() ? name : (name.empty() ? en : name + " / " + en), os);
        }
    }
  }
}

int emit(json rep, const RunConfig& cfg) {
  json out = {{"schema", json_io::kSchema}};
  for (const auto& [k, v] : rep.items()) out[k] = v;
  std::ostringstream ss;
  if (cfg.format == "text")
    render_text(out, out.value("command", std::string()), ss);
  else
    ss << out.dump(2) << "\n";
  if (cfg.out.empty()) {
    std::cout << ss.str();
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return kConfig;
    }
    f << ss.str();
  }
  bool pass = out.value("pass", false);
  if (!pass) std::cerr << "verification failed; see the report for the first failures\n";
  return pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification engine for the E6 lattice vertex operator algebra and its F4 coset"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string golden_dir;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order_t, "truncation order for series in t or q")->check(CLI::PositiveNumber);
    sub->add_option("--order-v", cfg.order_v, "truncation order for series in v")->check(CLI::PositiveNumber);
    sub->add_option("--weight-cap", cfg.weight_cap, "highest weight of test states for the bracket suite")
        ->check(CLI::Range(0, 4));
    sub->add_option("--commutant-cap", cfg.commutant_cap, "highest weight of test states for commutant checks")
        ->check(CLI::Range(0, 4));
    sub->add_flag("--expensive", cfg.expensive, "allow weight >= 3 nullspace searches");
    sub->add_flag("--no-spot-states", cfg.no_spot_states,
                  "leave out the weight-3 spot states the bracket suite adds at weight cap 2");
    sub->add_option("--jobs", cfg.jobs, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_option("--golden-dir", golden_dir, "read golden fixtures from this directory");
  };

  auto* vv = app.add_subcommand("verify-virasoro", "OPE, bracket, Sugawara and commutant suites");
  std::string vector = "all";
  std::optional<std::string> charge;
  vv->add_option("--vector", vector, "e6, f4, coset or all");
  vv->add_option("--charge", charge, "expected central charge of the selected vector");
  add_common(vv);

  auto* vh = app.add_subcommand("verify-hwv", "the eight highest-weight vectors and the construction of U");
  std::vector<std::string> find_args;
  vh->add_option("--find", find_args, "coset weight sector: run a nullspace search instead")->expected(3);
  add_common(vh);

  auto* fh = app.add_subcommand("find-hwv", "exact nullspace search for highest-weight vectors");
  int coset = 0;
  std::string weight, sector;
  std::optional<std::string> h;
  std::size_t max_columns = 2000;
  std::optional<std::size_t> expect_dim;
  fh->add_option("coset", coset, "0, 1 or 2")->required();
  fh->add_option("weight", weight, "total weight, e.g. 2/3")->required();
  fh->add_option("sector", sector, "zero, omega1..omega4 or [\"p/q\",...]")->required();
  fh->add_option("--conformal-weight", h, "also impose L(0) = h");
  fh->add_option("--max-columns", max_columns, "refuse graded pieces larger than this");
  fh->add_option("--expect-dim", expect_dim, "exit 1 unless the solution space has this dimension");
  add_common(fh);

  auto* cc = app.add_subcommand("check-characters", "q-series character and branching identities");
  std::optional<std::string> identity;
  cc->add_option("--identity", identity, "run only identities whose name starts with this");
  add_common(cc);

  auto* ra = app.add_subcommand("report-all", "every suite in one report");
  add_common(ra);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kConfig;
  }
  if (!golden_dir.empty()) cfg.golden_dir = golden_dir;
  if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);

  try {
    if (*vv) return emit(verify_virasoro(cfg, vector, charge), cfg);
    if (*vh) {
      if (!find_args.empty()) {
        int c;
        try {
          c = std::stoi(find_args[0]);
        } catch (const std::exception&) {
          throw ConfigError("--find: coset must be an integer");
        }
        json r = find_report(cfg, c, find_args[1], find_args[2], std::nullopt, max_columns, std::nullopt);
        r["command"] = "verify-hwv --find";
        return emit(r, cfg);
      }
      return emit(verify_hwv(cfg), cfg);
    }
    if (*fh) {
      json r = find_report(cfg, coset, weight, sector, h, max_columns, expect_dim);
      r["command"] = "find-hwv";
      return emit(r, cfg);
    }
    if (*cc) return emit(check_characters(cfg, identity), cfg);
    if (*ra) {
      json v = verify_virasoro(cfg, "all", std::nullopt);
      json hw = verify_hwv(cfg);
      json ch = check_characters(cfg, std::nullopt);
      json rd = rediscovery(cfg);
      bool ok = v["pass"].get<bool>() && hw["pass"].get<bool>() && ch["pass"].get<bool>() && rd["pass"].get<bool>();
      return emit({{"command", "report-all"},
                   {"pass", ok},
                   {"virasoro", v},
                   {"hwv", hw},
                   {"characters", ch},
                   {"rediscovery", rd}},
                  cfg);
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    // Malformed fixtures count as verification failures, not bad flags.
    std::cerr << "invalid input: " << e.what() << "\n";
    return kFail;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return kConfig;
}
