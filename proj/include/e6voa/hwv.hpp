#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "e6voa/fock.hpp"
#include "e6voa/lattice.hpp"
#include "e6voa/virasoro.hpp"

namespace e6voa::hwv {

struct Condition {
  std::string name;
  bool pass = false;
  State residual;  // what should vanish; empty on success
};

// One cocycle value consulted while acting on the vector.
struct EpsilonUse {
  LatticePoint u, v;
  int value;
};

struct HwvReport {
  std::string id;
  // (1) {e^{-theta}}_1 v = 0, (2) {x_beta_i}_0 v = 0, (3) L(1) v = L(2) v = 0,
  // (4) L(0) v = h v, (5) beta_i(0) v = <Omega, beta_i> v.
  std::vector<Condition> conditions;
  Scalar expected_h;
  F4Weight expected_omega{};
  std::optional<Scalar> computed_h;
  std::optional<F4Weight> computed_omega;
  std::vector<EpsilonUse> epsilons;
  bool pass() const;
};

// Throws std::invalid_argument on the zero vector or an inhomogeneous one.
HwvReport check_hwv(const State& v, const Scalar& h, const F4Weight& omega, const std::string& id = "");

struct BuiltinHwv {
  std::string id;
  std::string module;  // "Lambda0", "Lambda1" or "Lambda6"
  State state;
  Scalar h;
  F4Weight omega;
};

// The eight vectors of the branching decomposition, U in closed form.
const std::vector<BuiltinHwv>& builtin_hwvs();
const BuiltinHwv& builtin(const std::string& id);

// Named vectors used across the suite.
LatticePoint mu();
State r_vector();
State p_vector();
State u_closed_form();

struct UConstruction {
  State r_minus_2_3;   // {R}_{-2/3} tau R, expected 0
  State r_minus_5_3;   // {R}_{-5/3} tau R, expected 5 omega
  State r_minus_8_3;   // {R}_{-8/3} tau R
  State omega_minus_2; // {omega}_{-2} vac
  State u;             // r_minus_8_3 - (5/2) omega_minus_2
  State closed_form;
  bool milestones_pass() const;
  bool pass() const { return milestones_pass() && u == closed_form; }
};

UConstruction build_u();

// U from the mode actions; throws std::runtime_error with the difference
// when it disagrees with the closed form.
State construct_u();

struct CapExceeded : std::runtime_error {
  std::size_t required;
  CapExceeded(std::size_t need, std::size_t cap);
};

struct FindResult {
  std::size_t basis_size = 0;  // columns of the condition matrix
  std::size_t rows = 0;
  std::vector<Monomial> basis;  // column labels
  std::vector<State> solutions;
};

// Exact nullspace of conditions (1)-(3), plus L(0) = h when given, over the
// graded piece of the coset.  Throws CapExceeded above max_columns and
// std::invalid_argument when the weight does not occur in the coset.
FindResult find_hwvs(int coset, const Scalar& total_weight, const F4Weight& sector,
                     const std::optional<Scalar>& h = std::nullopt, std::size_t max_columns = 2000);

// True when a and b are nonzero rational multiples of each other.
bool proportional(const State& a, const State& b);

}  // namespace e6voa::hwv
