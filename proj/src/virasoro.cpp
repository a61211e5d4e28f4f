#include "e6voa/virasoro.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <tuple>

namespace e6voa::virasoro {

using lattice::alpha;
using lattice::lambda;

LatticePoint gamma(int k) {
  switch (k) {
    case 1: return alpha(1) - alpha(6);
    case 2: return alpha(3) - alpha(5);
    case 3: return alpha(1) - alpha(6) + alpha(3) - alpha(5);
    default: throw std::out_of_range("gamma index");
  }
}

LatticePoint nu(int k) {
  switch (k) {
    case 1: return lambda(6) - lambda(1);
    case 2: return lambda(3) - lambda(5);
    case 3: return lambda(1) - lambda(3) + lambda(5) - lambda(6);
    default: throw std::out_of_range("nu index");
  }
}

namespace {

// lambda_i(-1) lambda_j(-1) 1
State quad(int i, int j) {
  Monomial m;
  m.factors = {make_factor(std::min(i, j), 1), make_factor(std::max(i, j), 1)};
  return State::from(std::move(m));
}

State h_h(const LatticePoint& a, const LatticePoint& b) {
  return fock::heisenberg(a, -1, fock::heisenberg(b, -1, State::vacuum()));
}

}  // namespace

const ConformalVector& omega_e6() {
  static const ConformalVector cv = [] {
    State s;
    for (int i = 1; i <= 6; ++i) s += h_h(alpha(i), lambda(i));
    s *= frac(1, 2);
    return ConformalVector{"omega_e6", s, 6};
  }();
  return cv;
}

const ConformalVector& omega_f4() {
  static const ConformalVector cv = [] {
    struct Q {
      int i, j, c;
    };
    const Q quads[] = {{1, 1, 4},  {1, 3, -4}, {1, 5, -1}, {1, 6, 2},  {2, 2, 5},  {2, 4, -5}, {3, 3, 4}, {3, 4, -5},
                       {3, 5, 2},  {3, 6, -1}, {4, 4, 5},  {4, 5, -5}, {5, 5, 4},  {5, 6, -4}, {6, 6, 4}};
    State s;
    for (const auto& q : quads) s += Scalar(q.c) * quad(q.i, q.j);
    for (int sign : {1, -1}) {
      s += State::exp(sign * gamma(1));
      s += State::exp(sign * gamma(2));
      s -= State::exp(sign * gamma(3));
    }
    s *= frac(1, 5);
    return ConformalVector{"omega_f4", s, frac(26, 5)};
  }();
  return cv;
}

const ConformalVector& omega_coset() {
  static const ConformalVector cv = [] {
    State s;
    for (int k = 1; k <= 3; ++k) s += frac(1, 10) * h_h(nu(k), nu(k));
    for (int sign : {1, -1}) {
      s -= frac(1, 5) * State::exp(sign * gamma(1));
      s -= frac(1, 5) * State::exp(sign * gamma(2));
      s += frac(1, 5) * State::exp(sign * gamma(3));
    }
    return ConformalVector{"omega", s, frac(4, 5)};
  }();
  return cv;
}

State recipe_state(const lattice::WeightOneRecipe& r) {
  State s = fock::heisenberg(r.heis, -1, State::vacuum());
  for (const auto& [c, p] : r.exps) s += State::exp(p, c);
  return s;
}

State sugawara_part(const std::string& kind, lattice::DualCoefficient rule) {
  State s;
  for (const auto& pr : lattice::f4_basis_dual_pairs(rule)) {
    if (!kind.empty() && pr.kind != kind) continue;
    s += vertex::mode_action(recipe_state(pr.basis), -1, recipe_state(pr.dual));
  }
  s *= frac(1, 20);
  return s;
}

State sugawara_f4_vacuum(lattice::DualCoefficient rule) { return sugawara_part("", rule); }

State L(int m, const ConformalVector& cv, const State& w) { return vertex::mode_action(cv.state, m + 1, w); }

OpeResult ope_check(const ConformalVector& cv) {
  OpeResult r;
  const State& w = cv.state;
  r.want = {vertex::mode_action(omega_e6().state, 0, w), 2 * w, State{}, (cv.central_charge / 2) * State::vacuum()};
  for (int j = 0; j <= 3; ++j) r.got.push_back(vertex::mode_action(w, j, w));
  r.pass = r.got == r.want;
  return r;
}

BracketReport virasoro_bracket_suite(const ConformalVector& cv, int m_lo, int m_hi, int n_lo, int n_hi,
                                     const std::vector<State>& test_states) {
  BracketReport rep;
  rep.vector = cv.name;
  rep.charge = cv.central_charge;
  const int lo = std::min(m_lo + n_lo, std::min(m_lo, n_lo)), hi = std::max(m_hi + n_hi, std::max(m_hi, n_hi));
  std::map<int, std::unique_ptr<vertex::ModeOperator>> ops;
  for (int k = lo; k <= hi; ++k) ops[k] = std::make_unique<vertex::ModeOperator>(cv.state, Scalar(k + 1));
  auto Lk = [&](int k, const State& w) { return (*ops.at(k))(w); };

  std::vector<BracketFailure> fails;
  std::size_t checked = 0;
  const long count = static_cast<long>(test_states.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : checked)
  for (long idx = 0; idx < count; ++idx) {
    const State& w = test_states[static_cast<std::size_t>(idx)];
    std::map<int, State> once;
    for (int k = lo; k <= hi; ++k) once[k] = Lk(k, w);
    for (int m = m_lo; m <= m_hi; ++m)
      for (int n = n_lo; n <= n_hi; ++n) {
        State lhs = Lk(m, once[n]) - Lk(n, once[m]);
        State rhs = Scalar(m - n) * once[m + n];
        if (m == -n) rhs += (cv.central_charge * frac(m * m * m - m, 12)) * w;
        ++checked;
        if (!(lhs == rhs)) {
#pragma omp critical
          fails.push_back({m, n, static_cast<std::size_t>(idx), lhs, rhs});
        }
      }
  }
  std::sort(fails.begin(), fails.end(), [](const auto& a, const auto& b) {
    return std::tie(a.state_index, a.m, a.n) < std::tie(b.state_index, b.m, b.n);
  });
  if (fails.size() > 5) fails.resize(5);
  rep.failures = std::move(fails);
  rep.pairs_checked = checked;
  return rep;
}

namespace {

struct NamedOp {
  std::string name;
  std::function<State(const State&)> apply;
};

std::vector<NamedOp> f4_operators(int k_lo, int k_hi, bool with_theta) {
  std::vector<NamedOp> ops;
  for (const auto& b : lattice::f4_simple_root_data()) {
    State xp = recipe_state(b.op);
    lattice::WeightOneRecipe neg = b.op;
    for (auto& [c, p] : neg.exps) p = -p;
    State xm = recipe_state(neg);
    for (int k = k_lo; k <= k_hi; ++k) {
      ops.push_back({"x_" + b.name + "(" + std::to_string(k) + ")",
                     [xp, k](const State& w) { return vertex::mode_action(xp, k, w); }});
      ops.push_back({"x_-" + b.name + "(" + std::to_string(k) + ")",
                     [xm, k](const State& w) { return vertex::mode_action(xm, k, w); }});
      LatticePoint h = b.coroot;
      ops.push_back({b.name + "(" + std::to_string(k) + ")",
                     [h, k](const State& w) { return fock::heisenberg(h, k, w); }});
    }
  }
  if (with_theta) {
    State xt = State::exp(-lattice::theta());
    ops.push_back({"e^-theta_1", [xt](const State& w) { return vertex::mode_action(xt, 1, w); }});
  }
  return ops;
}

}  // namespace

CommutantReport commutant_check(const ConformalVector& cv, const std::vector<State>& test_states, int m_lo, int m_hi,
                                int k_lo, int k_hi, bool with_theta) {
  CommutantReport rep;
  auto ops = f4_operators(k_lo, k_hi, with_theta);
  std::map<int, std::unique_ptr<vertex::ModeOperator>> Ls;
  for (int m = m_lo; m <= m_hi; ++m) Ls[m] = std::make_unique<vertex::ModeOperator>(cv.state, Scalar(m + 1));
  std::size_t checks = 0;
  const long count = static_cast<long>(test_states.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : checks)
  for (long idx = 0; idx < count; ++idx) {
    const State& w = test_states[static_cast<std::size_t>(idx)];
    for (const auto& op : ops) {
      State xw = op.apply(w);
      for (int m = m_lo; m <= m_hi; ++m) {
        const auto& Lm = *Ls.at(m);
        State diff = Lm(xw) - op.apply(Lm(w));
        ++checks;
        if (!diff.empty()) {
#pragma omp critical
          rep.failures.push_back({m, op.name, static_cast<std::size_t>(idx), diff});
        }
      }
    }
  }
  std::sort(rep.failures.begin(), rep.failures.end(),
            [](const auto& a, const auto& b) { return std::tie(a.state_index, a.op, a.m) < std::tie(b.state_index, b.op, b.m); });
  if (rep.failures.size() > 5) rep.failures.resize(5);
  rep.checks = checks;
  return rep;
}

CommutantReport mutual_commutation(const std::vector<State>& test_states, int lo, int hi) {
  CommutantReport rep;
  std::map<int, std::unique_ptr<vertex::ModeOperator>> a, b;
  for (int m = lo; m <= hi; ++m) {
    a[m] = std::make_unique<vertex::ModeOperator>(omega_coset().state, Scalar(m + 1));
    b[m] = std::make_unique<vertex::ModeOperator>(omega_f4().state, Scalar(m + 1));
  }
  std::size_t checks = 0;
  const long count = static_cast<long>(test_states.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : checks)
  for (long idx = 0; idx < count; ++idx) {
    const State& w = test_states[static_cast<std::size_t>(idx)];
    for (int m = lo; m <= hi; ++m)
      for (int n = lo; n <= hi; ++n) {
        State diff = (*a.at(m))((*b.at(n))(w)) - (*b.at(n))((*a.at(m))(w));
        ++checks;
        if (!diff.empty()) {
#pragma omp critical
          rep.failures.push_back({m, "L_F4(" + std::to_string(n) + ")", static_cast<std::size_t>(idx), diff});
        }
      }
  }
  if (rep.failures.size() > 5) rep.failures.resize(5);
  rep.checks = checks;
  return rep;
}

std::vector<State> graded_test_states(int weight_cap) {
  std::vector<State> out;
  for (int w = 0; w <= weight_cap; ++w)
    for (auto& m : fock::basis_of_graded_piece(0, w)) out.push_back(State::from(std::move(m)));
  return out;
}

std::vector<State> weight3_spot_states() {
  using fock::heisenberg;
  using lattice::alpha;
  using lattice::lambda;
  const State vac = State::vacuum();
  std::vector<State> out;
  out.push_back(heisenberg(lambda(1), -3, vac));
  out.push_back(heisenberg(lambda(2), -1, heisenberg(lambda(4), -2, vac)));
  out.push_back(heisenberg(lambda(3), -1, heisenberg(lambda(3), -1, heisenberg(lambda(3), -1, vac))));
  out.push_back(heisenberg(lambda(6), -2, State::exp(alpha(1))));
  out.push_back(heisenberg(lambda(1), -1, heisenberg(lambda(5), -1, State::exp(lattice::theta()))));
  out.push_back(heisenberg(lambda(4), -1, State::exp(alpha(1) - alpha(6))));
  out.push_back(State::exp(alpha(1) + alpha(2) + alpha(6)));
  // a weight-3 vector with both Heisenberg and exponential parts
  State mixed = frac(1, 6) * heisenberg(gamma(1), -1, heisenberg(gamma(1), -1, heisenberg(gamma(1), -1, vac)));
  mixed += frac(1, 2) * heisenberg(nu(2), -1, State::exp(gamma(1)));
  mixed += frac(1, 2) * heisenberg(nu(2), -1, State::exp(-gamma(1)));
  out.push_back(std::move(mixed));
  return out;
}

}  // namespace e6voa::virasoro
