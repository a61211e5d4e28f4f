#include "e6voa/hwv.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>
#include <set>

#include "e6voa/linalg.hpp"
#include "e6voa/vertex.hpp"

namespace e6voa::hwv {

using lattice::alpha;
using lattice::lambda;
using virasoro::gamma;
using virasoro::nu;

bool HwvReport::pass() const {
  if (conditions.size() != 5) return false;
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.pass; });
}

namespace {

struct RaisingOp {
  std::string name;
  State vector;
  Scalar mode;
};

// Raising operators of conditions (1) and (2).
const std::vector<RaisingOp>& raising_ops() {
  static const std::vector<RaisingOp> ops = [] {
    std::vector<RaisingOp> out;
    out.push_back({"{e^-theta}_1", State::exp(-lattice::theta()), 1});
    for (const auto& b : lattice::f4_simple_root_data())
      out.push_back({"{x_" + b.name + "}_0", virasoro::recipe_state(b.op), 0});
    return out;
  }();
  return ops;
}

void note_epsilons(const State& op, const State& v, std::set<std::tuple<LatticePoint, LatticePoint>>& seen,
                   std::vector<EpsilonUse>& out) {
  for (const auto& [a, ca] : op.terms()) {
    if (a.exponent.is_zero()) continue;
    for (const auto& [b, cb] : v.terms())
      if (seen.emplace(a.exponent, b.exponent).second)
        out.push_back({a.exponent, b.exponent, lattice::epsilon(a.exponent, b.exponent)});
  }
}

// The scalar k with w = k v, if any.
std::optional<Scalar> ratio(const State& w, const State& v) {
  if (w.empty()) return Scalar(0);
  if (w.size() != v.size()) return std::nullopt;
  const auto& [m, c] = *v.terms().begin();
  Scalar k = w.coeff(m) / c;
  if (k == 0 || !(w == k * v)) return std::nullopt;
  return k;
}

}  // namespace

HwvReport check_hwv(const State& v, const Scalar& h, const F4Weight& omega, const std::string& id) {
  if (v.empty()) throw std::invalid_argument("check_hwv: zero vector");
  if (!fock::weight(v)) throw std::invalid_argument("check_hwv: vector is not homogeneous");
  HwvReport rep;
  rep.id = id;
  rep.expected_h = h;
  rep.expected_omega = omega;
  std::set<std::tuple<LatticePoint, LatticePoint>> seen;

  const auto& ops = raising_ops();
  State r1 = vertex::mode_action(ops[0].vector, ops[0].mode, v);
  note_epsilons(ops[0].vector, v, seen, rep.epsilons);
  rep.conditions.push_back({"(1) " + ops[0].name + " v = 0", r1.empty(), r1});

  State r2;
  for (std::size_t i = 1; i < ops.size(); ++i) {
    r2 += vertex::mode_action(ops[i].vector, ops[i].mode, v);
    note_epsilons(ops[i].vector, v, seen, rep.epsilons);
  }
  // Each operator raises the F4 weight differently, so the terms cannot cancel.
  rep.conditions.push_back({"(2) {x_beta_i}_0 v = 0", r2.empty(), r2});

  const auto& om = virasoro::omega_coset();
  note_epsilons(om.state, v, seen, rep.epsilons);
  State r3 = virasoro::L(1, om, v) + virasoro::L(2, om, v);
  rep.conditions.push_back({"(3) L(1) v = L(2) v = 0", r3.empty(), r3});

  State l0 = virasoro::L(0, om, v);
  rep.computed_h = ratio(l0, v);
  State r4 = l0 - h * v;
  rep.conditions.push_back({"(4) L(0) v = h v", r4.empty(), r4});

  State r5;
  auto data = lattice::f4_simple_root_data();
  for (std::size_t i = 0; i < 4; ++i) r5 += fock::heisenberg(data[i].coroot, 0, v) - omega[i] * v;
  rep.computed_omega = fock::f4_weight_sector(v);
  bool ok5 = rep.computed_omega && *rep.computed_omega == omega;
  for (std::size_t i = 0; i < 4 && ok5; ++i) ok5 = fock::heisenberg(data[i].coroot, 0, v) == omega[i] * v;
  rep.conditions.push_back({"(5) beta_i(0) v = <Omega, beta_i> v", ok5, ok5 ? State{} : r5});

  std::sort(rep.epsilons.begin(), rep.epsilons.end(),
            [](const auto& a, const auto& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return rep;
}

LatticePoint mu() { return lattice::from_root_coords({1, 1, 2, 2, 1, 1}); }

State r_vector() {
  return State::exp(nu(1)) + State::exp(nu(2)) - State::exp(-nu(1) - nu(2));
}

State p_vector() {
  const LatticePoint m = mu(), tm = lattice::tau(m);
  const LatticePoint d = lattice::from_root_coords({-2, 0, -1, 0, 1, 2});
  State s = fock::heisenberg(d, -1, State::exp(m)) + fock::heisenberg(-d, -1, State::exp(tm));
  s += State::exp(m + gamma(1), 3);
  s += State::exp(tm - gamma(1), 3);
  return s;
}

State u_closed_form() {
  State s;
  auto cube = [](const LatticePoint& h) {
    return fock::heisenberg(h, -1, fock::heisenberg(h, -1, fock::heisenberg(h, -1, State::vacuum())));
  };
  for (int k = 1; k <= 3; ++k) s += frac(1, 6) * cube(nu(k));
  // nu_2 dresses e^{+-gamma_1}, nu_1 dresses e^{+-gamma_2}, -nu_3 dresses e^{+-gamma_3}.
  const std::pair<LatticePoint, LatticePoint> dress[] = {{nu(2), gamma(1)}, {nu(1), gamma(2)}, {-nu(3), gamma(3)}};
  for (const auto& [h, g] : dress)
    for (int sign : {1, -1}) s += frac(1, 2) * fock::heisenberg(h, -1, State::exp(sign * g));
  return s;
}

const std::vector<BuiltinHwv>& builtin_hwvs() {
  static const std::vector<BuiltinHwv> all = [] {
    using lattice::f4_omega;
    const LatticePoint m = mu();
    State r = r_vector();
    return std::vector<BuiltinHwv>{
        {"vacuum", "Lambda0", State::vacuum(), 0, f4_omega(0)},
        {"U", "Lambda0", u_closed_form(), 3, f4_omega(0)},
        {"e^mu-e^tau_mu", "Lambda0", State::exp(m) - State::exp(lattice::tau(m)), frac(2, 5), f4_omega(4)},
        {"P", "Lambda0", p_vector(), frac(7, 5), f4_omega(4)},
        {"e^lambda1", "Lambda1", State::exp(lambda(1)), frac(1, 15), f4_omega(4)},
        {"R", "Lambda1", r, frac(2, 3), f4_omega(0)},
        {"e^lambda6", "Lambda6", State::exp(lambda(6)), frac(1, 15), f4_omega(4)},
        {"tau_R", "Lambda6", fock::tau_hat(r), frac(2, 3), f4_omega(0)},
    };
  }();
  return all;
}

const BuiltinHwv& builtin(const std::string& id) {
  for (const auto& b : builtin_hwvs())
    if (b.id == id) return b;
  throw std::out_of_range("no builtin vector " + id);
}

bool UConstruction::milestones_pass() const {
  return r_minus_2_3.empty() && r_minus_5_3 == 5 * virasoro::omega_coset().state;
}

UConstruction build_u() {
  UConstruction u;
  State r = r_vector(), tr = fock::tau_hat(r);
  u.r_minus_2_3 = vertex::mode_action(r, frac(-2, 3), tr);
  u.r_minus_5_3 = vertex::mode_action(r, frac(-5, 3), tr);
  u.r_minus_8_3 = vertex::mode_action(r, frac(-8, 3), tr);
  u.omega_minus_2 = vertex::mode_action(virasoro::omega_coset().state, -2, State::vacuum());
  u.u = u.r_minus_8_3 - frac(5, 2) * u.omega_minus_2;
  u.closed_form = u_closed_form();
  return u;
}

State construct_u() {
  UConstruction u = build_u();
  if (!(u.u == u.closed_form))
    throw std::runtime_error("U disagrees with its closed form; difference " + to_string(u.u - u.closed_form));
  return u.u;
}

CapExceeded::CapExceeded(std::size_t need, std::size_t cap)
    : std::runtime_error("graded piece has " + std::to_string(need) + " monomials, above the cap of " +
                         std::to_string(cap) + "; raise the cap to at least " + std::to_string(need)),
      required(need) {}

FindResult find_hwvs(int coset, const Scalar& total_weight, const F4Weight& sector, const std::optional<Scalar>& h,
                     std::size_t max_columns) {
  FindResult res;
  std::string why;
  res.basis = fock::basis_of_graded_piece(coset, total_weight, sector, &why);
  if (!why.empty()) throw std::invalid_argument(why);
  res.basis_size = res.basis.size();
  if (res.basis_size > max_columns) throw CapExceeded(res.basis_size, max_columns);

  const auto& ops = raising_ops();
  const auto& om = virasoro::omega_coset();
  const long n = static_cast<long>(res.basis.size());
  // Column j holds the images of basis vector j under every condition,
  // tagged by condition so images of different operators never mix.
  std::vector<std::vector<std::pair<std::size_t, State>>> images(res.basis.size());
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < n; ++j) {
    State b = State::from(res.basis[static_cast<std::size_t>(j)]);
    auto& col = images[static_cast<std::size_t>(j)];
    std::size_t tag = 0;
    for (const auto& op : ops) col.emplace_back(tag++, vertex::mode_action_serial(op.vector, op.mode, b));
    col.emplace_back(tag++, vertex::mode_action_serial(om.state, 2, b));
    col.emplace_back(tag++, vertex::mode_action_serial(om.state, 3, b));
    if (h) col.emplace_back(tag++, vertex::mode_action_serial(om.state, 1, b) - *h * b);
  }

  // Row key: (condition, output monomial), assigned in a deterministic order.
  std::map<std::pair<std::size_t, Monomial>, linalg::SparseRow> rows;
  for (std::size_t j = 0; j < images.size(); ++j)
    for (const auto& [tag, st] : images[j])
      for (const auto& [m, c] : st.terms()) rows[{tag, m}][j] = c;
  std::vector<linalg::SparseRow> mat;
  mat.reserve(rows.size());
  for (auto& [k, r] : rows) mat.push_back(std::move(r));
  res.rows = mat.size();

  for (const auto& v : linalg::nullspace(mat, res.basis.size())) {
    State s;
    for (std::size_t j = 0; j < v.size(); ++j) s.add(res.basis[j], v[j]);
    res.solutions.push_back(std::move(s));
  }
  return res;
}

bool proportional(const State& a, const State& b) {
  if (a.empty() || b.empty()) return false;
  auto k = ratio(a, b);
  return k && *k != 0;
}

}  // namespace e6voa::hwv
