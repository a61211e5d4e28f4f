#pragma once

#include <string>
#include <vector>

#include "e6voa/fock.hpp"
#include "e6voa/lattice.hpp"
#include "e6voa/vertex.hpp"

namespace e6voa::virasoro {

struct ConformalVector {
  std::string name;
  State state;
  Scalar central_charge;
};

// (1/2) sum_i alpha_i(-1) lambda_i(-1) 1, c = 6.
const ConformalVector& omega_e6();
// Heisenberg quadratic plus the six e^{+-gamma} terms, c = 26/5.
const ConformalVector& omega_f4();
// The coset vector, c = 4/5.
const ConformalVector& omega_coset();

// gamma_1 = alpha_1 - alpha_6, gamma_2 = alpha_3 - alpha_5, gamma_3 = gamma_1 + gamma_2.
LatticePoint gamma(int k);
// nu_1 = -lambda_1 + lambda_6, nu_2 = lambda_3 - lambda_5, nu_3 = -nu_1 - nu_2.
LatticePoint nu(int k);

State recipe_state(const lattice::WeightOneRecipe& r);

// (1/20) sum over an F4 basis of {u_i}_{-1} u^i.
State sugawara_f4_vacuum(lattice::DualCoefficient rule = lattice::DualCoefficient::EpsAlphaAlpha);
// Contribution of one kind of pair ("csa", "fixed", "moved").
State sugawara_part(const std::string& kind, lattice::DualCoefficient rule = lattice::DualCoefficient::EpsAlphaAlpha);

// L(m) w = {omega}_{m+1} w
State L(int m, const ConformalVector& cv, const State& w);

struct OpeResult {
  bool pass = false;
  // {omega}_j omega for j = 0..3 against L_E6(-1) omega, 2 omega, 0, (c/2) 1.
  std::vector<State> got, want;
};
OpeResult ope_check(const ConformalVector& cv);

struct BracketFailure {
  int m, n;
  std::size_t state_index;
  State lhs, rhs;
};

struct BracketReport {
  std::string vector;
  Scalar charge;
  std::size_t pairs_checked = 0;
  std::vector<BracketFailure> failures;  // at most the first few
  bool pass() const { return failures.empty(); }
};

// [L(m),L(n)] w = (m-n) L(m+n) w + c (m^3-m)/12 delta_{m,-n} w on every test state.
BracketReport virasoro_bracket_suite(const ConformalVector& cv, int m_lo, int m_hi, int n_lo, int n_hi,
                                     const std::vector<State>& test_states);

struct CommutantFailure {
  int m;
  std::string op;
  std::size_t state_index;
  State difference;
};

struct CommutantReport {
  std::size_t checks = 0;
  std::vector<CommutantFailure> failures;
  bool pass() const { return failures.empty(); }
};

// [L(m), X] w = 0 for X in {x_{beta_i}(k), x_{-beta_i}(k), beta_i(k)} and, when
// with_theta is set, {e^{-theta}}_1.
CommutantReport commutant_check(const ConformalVector& cv, const std::vector<State>& test_states, int m_lo = -2,
                                int m_hi = 2, int k_lo = -2, int k_hi = 2, bool with_theta = true);

// [L(m), L_F4(n)] w = 0.
CommutantReport mutual_commutation(const std::vector<State>& test_states, int lo = -2, int hi = 2);

// Basis monomials of coset 0 with weight <= cap, as states.
std::vector<State> graded_test_states(int weight_cap);

// A fixed handful of weight-3 states of coset 0, for spot checks above the
// full weight-2 basis.
std::vector<State> weight3_spot_states();

}  // namespace e6voa::virasoro
