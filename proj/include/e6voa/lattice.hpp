#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "e6voa/scalar.hpp"

namespace e6voa {

// A point of the E6 weight lattice P, in the fundamental-weight basis
// lambda_1..lambda_6 (index 0 holds the lambda_1 coordinate).
struct LatticePoint {
  std::array<int, 6> c{};

  int& operator[](std::size_t i) { return c[i]; }
  int operator[](std::size_t i) const { return c[i]; }
  bool is_zero() const {
    for (int x : c)
      if (x != 0) return false;
    return true;
  }
  friend LatticePoint operator+(LatticePoint a, const LatticePoint& b) {
    for (std::size_t i = 0; i < 6; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend LatticePoint operator-(LatticePoint a, const LatticePoint& b) {
    for (std::size_t i = 0; i < 6; ++i) a.c[i] -= b.c[i];
    return a;
  }
  friend LatticePoint operator-(LatticePoint a) {
    for (int& x : a.c) x = -x;
    return a;
  }
  friend LatticePoint operator*(int k, LatticePoint a) {
    for (int& x : a.c) x *= k;
    return a;
  }
  auto operator<=>(const LatticePoint&) const = default;
};

// Rational vector of h in the lambda-basis; used for Heisenberg directions
// such as (lambda_3 + lambda_5)/2 that are not lattice points.
using HVec = std::array<Scalar, 6>;

// F4 weight in the basis omega_1..omega_4.
using F4Weight = std::array<Scalar, 4>;

HVec to_hvec(const LatticePoint& p);
std::string to_string(const LatticePoint& p);
std::string to_string(const F4Weight& w);

namespace lattice {

using IntMatrix = std::array<std::array<int, 6>, 6>;

const IntMatrix& cartan_matrix();

// Gram matrix on the lambda-basis (the inverse Cartan matrix), times 3 so
// that it is integral.
const IntMatrix& gram3();

// 3<u,v>; always an integer on P.
long inner3(const LatticePoint& u, const LatticePoint& v);
Scalar inner_product(const LatticePoint& u, const LatticePoint& v);
Scalar inner_product(const HVec& u, const LatticePoint& v);
Scalar inner_product(const HVec& u, const HVec& v);
inline Scalar norm(const LatticePoint& u) { return inner_product(u, u); }

// 1-based, matching the node labels of the Dynkin diagram.
LatticePoint lambda(int i);
LatticePoint alpha(int i);

// sum_i k_i alpha_i
LatticePoint from_root_coords(const std::array<int, 6>& k);
// Simple-root coordinates (rational off the root lattice).
std::array<Scalar, 6> root_coords(const LatticePoint& p);

LatticePoint tau(const LatticePoint& p);
HVec tau(const HVec& h);

// Bilinear cocycle on P built from the matrix on the fundamental weights.
int epsilon(const LatticePoint& u, const LatticePoint& v);
const IntMatrix& epsilon_lambda_matrix();

// Alternative configuration: the cocycle tabulated on the simple roots,
// extended bilinearly over Q.  Arguments are simple-root coordinates.
int epsilon_simple_roots(const std::array<int, 6>& a, const std::array<int, 6>& b);
const IntMatrix& epsilon_alpha_matrix();

// The 72 roots, sorted.
const std::vector<LatticePoint>& roots();
LatticePoint theta();

// P/Q = Z/3: 0 for Q, 1 for Q + lambda_1, 2 for Q + lambda_6.
int coset_index(const LatticePoint& p);
inline bool in_root_lattice(const LatticePoint& p) { return coset_index(p) == 0; }

F4Weight project_to_f4(const LatticePoint& p);
F4Weight f4_omega(int j);  // omega_j; f4_omega(0) is the zero weight

// A weight-one state: sum of c * e^alpha plus h(-1) (x) e^0.
struct WeightOneRecipe {
  std::vector<std::pair<Scalar, LatticePoint>> exps;
  HVec heis{};
};

struct F4SimpleRoot {
  std::string name;
  HVec lattice;          // beta_i as a combination of lambdas
  LatticePoint coroot;   // h_{beta_i}; h(0) e^beta = <h, beta> e^beta
  WeightOneRecipe op;    // x_{beta_i}
};

std::vector<F4SimpleRoot> f4_simple_root_data();

// Scalar attached to the dual of x_alpha + x_{tau alpha}.
enum class DualCoefficient {
  EpsAlphaTauAlpha,  // (1/2) eps(alpha, tau alpha)
  EpsAlphaAlpha,     // (1/2) eps(alpha, -alpha), the invariant-form value
};

struct DualPair {
  std::string kind;  // "csa", "fixed" or "moved"
  WeightOneRecipe basis;
  WeightOneRecipe dual;
};

// 52 pairs: 4 Cartan, 24 tau-fixed roots, 24 tau-orbits of moved roots.
std::vector<DualPair> f4_basis_dual_pairs(DualCoefficient rule = DualCoefficient::EpsAlphaAlpha);

}  // namespace lattice
}  // namespace e6voa
