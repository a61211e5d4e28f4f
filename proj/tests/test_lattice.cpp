#include <doctest.h>

#include <set>
#include <vector>

#include "e6voa/lattice.hpp"

using namespace e6voa;
using namespace e6voa::lattice;

namespace {

// Gauss-Jordan inverse of the Cartan matrix over Q, written independently of
// the hardcoded Gram matrix.
std::array<std::array<Scalar, 6>, 6> cartan_inverse() {
  std::array<std::array<Scalar, 12>, 6> m;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 12; ++j) m[i][j] = j < 6 ? Scalar(cartan_matrix()[i][j]) : Scalar(j - 6 == i ? 1 : 0);
  for (int c = 0; c < 6; ++c) {
    int p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    Scalar d = m[c][c];
    for (auto& x : m[c]) x /= d;
    for (int r = 0; r < 6; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Scalar f = m[r][c];
      for (int k = 0; k < 12; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::array<std::array<Scalar, 6>, 6> inv;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) inv[i][j] = m[i][j + 6];
  return inv;
}

// Root system as the Weyl orbit of the simple roots, by repeated reflection.
std::set<LatticePoint> weyl_orbit_roots() {
  std::set<LatticePoint> seen;
  std::vector<LatticePoint> todo;
  for (int i = 1; i <= 6; ++i) todo.push_back(alpha(i));
  while (!todo.empty()) {
    LatticePoint r = todo.back();
    todo.pop_back();
    if (!seen.insert(r).second) continue;
    for (int i = 1; i <= 6; ++i) {
      // s_i(x) = x - <x, alpha_i^vee> alpha_i; in lambda coordinates the pairing is x_i.
      LatticePoint s = r - r[i - 1] * alpha(i);
      if (!seen.count(s)) todo.push_back(s);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("Gram matrix is the inverse Cartan matrix") {
  auto inv = cartan_inverse();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(inv[i][j] == frac(gram3()[i][j], 3));
  CHECK(inner_product(lambda(1), lambda(1)) == frac(4, 3));
  CHECK(inner_product(lambda(6), lambda(6)) == frac(4, 3));
  CHECK(inner_product(lambda(4), lambda(4)) == 6);
}

TEST_CASE("roots: 72 of them, equal to the Weyl orbit of the simple roots") {
  auto orbit = weyl_orbit_roots();
  CHECK(orbit.size() == 72);
  std::set<LatticePoint> mine(roots().begin(), roots().end());
  CHECK(mine == orbit);
  for (const auto& r : roots()) CHECK(norm(r) == 2);
  CHECK(std::find(roots().begin(), roots().end(), theta()) != roots().end());
  // theta is dominant: all lambda coordinates nonnegative.
  for (int i = 0; i < 6; ++i) CHECK(theta()[i] >= 0);
}

TEST_CASE("simple roots pair to the Cartan matrix") {
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) CHECK(inner_product(alpha(i), alpha(j)) == cartan_matrix()[i - 1][j - 1]);
}

TEST_CASE("tau is an isometry fixing alpha_2 and alpha_4") {
  CHECK(tau(alpha(2)) == alpha(2));
  CHECK(tau(alpha(4)) == alpha(4));
  CHECK(tau(alpha(1)) == alpha(6));
  CHECK(tau(alpha(3)) == alpha(5));
  for (const auto& a : roots())
    for (const auto& b : {alpha(1), alpha(3), lambda(2), lambda(6)}) CHECK(inner3(tau(a), tau(b)) == inner3(a, b));
}

TEST_CASE("cocycle: bilinear, tau-invariant, commutator law on Q") {
  std::vector<LatticePoint> pts = {lambda(1), lambda(3), lambda(6), alpha(2) - alpha(5), theta(), 2 * lambda(4) - lambda(1)};
  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& c : pts) {
        CHECK(epsilon(a + b, c) == epsilon(a, c) * epsilon(b, c));
        CHECK(epsilon(a, b + c) == epsilon(a, b) * epsilon(a, c));
      }
  for (const auto& a : pts)
    for (const auto& b : pts) CHECK(epsilon(tau(a), tau(b)) == epsilon(a, b));
  for (const auto& a : roots())
    for (const auto& b : roots()) {
      long ip = inner3(a, b) / 3;
      CHECK(epsilon(a, b) * epsilon(b, a) == (ip % 2 ? -1 : 1));
    }
  // the simple-root table has +1 on its diagonal
  for (int i = 1; i <= 6; ++i) CHECK(epsilon(alpha(i), alpha(i)) == 1);
}

TEST_CASE("cocycle on fundamental weights restricts to the simple-root table") {
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      std::array<int, 6> a{}, b{};
      a[i - 1] = 1;
      b[j - 1] = 1;
      CHECK(epsilon(alpha(i), alpha(j)) == epsilon_simple_roots(a, b));
    }
}

TEST_CASE("cosets and the F4 projection") {
  CHECK(coset_index(lambda(1)) == 1);
  CHECK(coset_index(lambda(6)) == 2);
  CHECK(coset_index(lambda(2)) == 0);
  for (const auto& r : roots()) CHECK(in_root_lattice(r));
  CHECK(project_to_f4(lambda(1)) == f4_omega(4));
  CHECK(project_to_f4(lambda(6)) == f4_omega(4));
  CHECK(project_to_f4(lambda(2)) == f4_omega(1));
  CHECK(project_to_f4(lambda(3) + lambda(5)) == F4Weight{0, 0, 2, 0});
  // Proj is tau-invariant.
  for (const auto& r : roots()) CHECK(project_to_f4(tau(r)) == project_to_f4(r));
}

TEST_CASE("F4 basis has 52 dual pairs") {
  auto pairs = f4_basis_dual_pairs();
  CHECK(pairs.size() == 52);
  std::size_t csa = 0, fixed = 0, moved = 0;
  for (const auto& p : pairs) {
    csa += p.kind == "csa";
    fixed += p.kind == "fixed";
    moved += p.kind == "moved";
  }
  CHECK(csa == 4);
  CHECK(fixed == 24);
  CHECK(moved == 24);
}
