#include "e6voa/json_io.hpp"

#include <stdexcept>

namespace e6voa::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a \"p/q\" string");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const std::exception&) {
    bad(where + ": bad rational \"" + j.get<std::string>() + "\"");
  }
}

json state_terms_json(const State& s) {
  json arr = json::array();
  for (const auto& [m, c] : s.sorted()) {
    json f = json::array();
    for (Factor x : m.factors) f.push_back({factor_index(x), factor_mode(x)});
    arr.push_back({{"factors", f}, {"exponent", to_json(m.exponent)}, {"coeff", to_string(c)}});
  }
  return arr;
}

json failures_json(const std::vector<virasoro::CommutantFailure>& fs) {
  json arr = json::array();
  for (const auto& f : fs)
    arr.push_back({{"m", f.m}, {"op", f.op}, {"state_index", f.state_index}, {"difference", to_json(f.difference)}});
  return arr;
}

}  // namespace

json to_json(const State& s) { return state_terms_json(s); }

json to_json(const LatticePoint& p) {
  json a = json::array();
  for (int x : p.c) a.push_back(x);
  return a;
}

json to_json(const F4Weight& w) {
  json a = json::array();
  for (const auto& x : w) a.push_back(to_string(x));
  return a;
}

json to_json(const Scalar& x) { return to_string(x); }

LatticePoint lattice_point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 6) bad("exponent: expected an array of 6 integers");
  LatticePoint p;
  for (std::size_t i = 0; i < 6; ++i) {
    if (!j[i].is_number_integer()) bad("exponent: entry " + std::to_string(i) + " is not an integer");
    p[i] = j[i].get<int>();
  }
  return p;
}

F4Weight f4_weight_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) bad("F4 weight: expected an array of 4 \"p/q\" strings");
  F4Weight w;
  for (std::size_t i = 0; i < 4; ++i) w[i] = scalar_from_json(j[i], "F4 weight entry " + std::to_string(i));
  return w;
}

State state_from_json(const json& j) {
  if (!j.is_array()) bad("state: expected an array of terms");
  State s;
  std::size_t idx = 0;
  for (const auto& t : j) {
    const std::string where = "term " + std::to_string(idx++);
    Monomial m;
    const json& fs = field(t, "factors");
    if (!fs.is_array()) bad(where + ": factors must be an array");
    for (const auto& f : fs) {
      if (!f.is_array() || f.size() != 2 || !f[0].is_number_integer() || !f[1].is_number_integer())
        bad(where + ": each factor is [i, n]");
      int i = f[0].get<int>(), n = f[1].get<int>();
      if (i < 1 || i > 6 || n < 1 || n > 255) bad(where + ": factor index or mode out of range");
      m.factors.push_back(make_factor(i, n));
    }
    std::sort(m.factors.begin(), m.factors.end());
    m.exponent = lattice_point_from_json(field(t, "exponent"));
    Scalar c = scalar_from_json(field(t, "coeff"), where + " coeff");
    s.add(std::move(m), c);
  }
  return s;
}

json to_json(const hwv::HwvReport& r) {
  json conds = json::array();
  for (const auto& c : r.conditions)
    conds.push_back({{"condition", c.name}, {"pass", c.pass}, {"residual", to_json(c.residual)}});
  json eps = json::array();
  for (const auto& e : r.epsilons) eps.push_back({{"u", to_json(e.u)}, {"v", to_json(e.v)}, {"epsilon", e.value}});
  json out = {{"id", r.id},
              {"pass", r.pass()},
              {"expected_h", to_string(r.expected_h)},
              {"computed_h", r.computed_h ? json(to_string(*r.computed_h)) : json(nullptr)},
              {"expected_omega", to_json(r.expected_omega)},
              {"computed_omega", r.computed_omega ? to_json(*r.computed_omega) : json(nullptr)},
              {"conditions", conds},
              {"epsilon_values_used", eps}};
  return out;
}

json to_json(const hwv::UConstruction& u) {
  const State five_omega = 5 * virasoro::omega_coset().state;
  return {{"pass", u.pass()},
          {"R_-2/3_tauR_is_zero", u.r_minus_2_3.empty()},
          {"R_-5/3_tauR_is_5omega", u.r_minus_5_3 == five_omega},
          {"matches_closed_form", u.u == u.closed_form},
          {"R_-8/3_tauR", to_json(u.r_minus_8_3)},
          {"omega_-2_vacuum", to_json(u.omega_minus_2)},
          {"U", to_json(u.u)},
          {"difference_from_closed_form", to_json(u.u - u.closed_form)}};
}

json to_json(const hwv::FindResult& f) {
  json sols = json::array();
  for (const auto& s : f.solutions) sols.push_back(to_json(s));
  return {{"graded_piece_size", f.basis_size}, {"condition_rows", f.rows}, {"dimension", f.solutions.size()},
          {"basis", sols}};
}

json to_json(const virasoro::OpeResult& r, const virasoro::ConformalVector& cv) {
  json js = json::array();
  for (std::size_t j = 0; j < r.got.size(); ++j)
    js.push_back({{"mode", j}, {"pass", r.got[j] == r.want[j]}, {"difference", to_json(r.got[j] - r.want[j])}});
  return {{"vector", cv.name}, {"central_charge", to_string(cv.central_charge)}, {"pass", r.pass}, {"modes", js}};
}

json to_json(const virasoro::BracketReport& r) {
  json fs = json::array();
  for (const auto& f : r.failures)
    fs.push_back({{"m", f.m}, {"n", f.n}, {"state_index", f.state_index}, {"lhs", to_json(f.lhs)}, {"rhs", to_json(f.rhs)}});
  return {{"vector", r.vector}, {"central_charge", to_string(r.charge)}, {"pass", r.pass()},
          {"pairs_checked", r.pairs_checked}, {"failures", fs}};
}

json to_json(const virasoro::CommutantReport& r) {
  return {{"pass", r.pass()}, {"checks", r.checks}, {"failures", failures_json(r.failures)}};
}

json to_json(const qseries::IdentityCheck& c) {
  json out = {{"identity", c.name},        {"description", c.description}, {"order", c.order},
              {"pass", c.pass},            {"first_failure", c.first_failure ? json(*c.first_failure) : json(nullptr)},
              {"lhs_head", c.lhs_head},    {"rhs_head", c.rhs_head}};
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

json golden_json(const virasoro::ConformalVector& cv) {
  return {{"schema", kSchema}, {"name", cv.name}, {"central_charge", to_string(cv.central_charge)}, {"state", to_json(cv.state)}};
}

json golden_json(const hwv::BuiltinHwv& b) {
  return {{"schema", kSchema}, {"id", b.id},          {"module", b.module},
          {"h", to_string(b.h)}, {"omega", to_json(b.omega)}, {"state", to_json(b.state)}};
}

namespace {
void check_schema(const json& j) {
  const json& s = field(j, "schema");
  if (!s.is_number_integer() || s.get<int>() != kSchema) bad("unsupported schema version");
}
}  // namespace

GoldenVector golden_vector_from_json(const json& j) {
  check_schema(j);
  const json& name = field(j, "name");
  if (!name.is_string()) bad("name must be a string");
  return {name.get<std::string>(), scalar_from_json(field(j, "central_charge"), "central_charge"),
          state_from_json(field(j, "state"))};
}

GoldenHwv golden_hwv_from_json(const json& j) {
  check_schema(j);
  const json& id = field(j, "id");
  const json& mod = field(j, "module");
  if (!id.is_string() || !mod.is_string()) bad("id and module must be strings");
  return {id.get<std::string>(), mod.get<std::string>(), scalar_from_json(field(j, "h"), "h"),
          f4_weight_from_json(field(j, "omega")), state_from_json(field(j, "state"))};
}

}  // namespace e6voa::json_io
