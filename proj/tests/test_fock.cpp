#include <doctest.h>

#include "e6voa/fock.hpp"
#include "e6voa/qseries.hpp"

using namespace e6voa;

namespace {

// Lattice vectors of a given squared length in Q, by an exhaustive box in
// simple-root coordinates; box radius 4 covers norms up to 4.
std::size_t count_root_lattice_norm(long norm) {
  std::size_t n = 0;
  std::array<int, 6> k{};
  const auto& A = lattice::cartan_matrix();
  for (k[0] = -4; k[0] <= 4; ++k[0])
    for (k[1] = -4; k[1] <= 4; ++k[1])
      for (k[2] = -4; k[2] <= 4; ++k[2])
        for (k[3] = -4; k[3] <= 4; ++k[3])
          for (k[4] = -4; k[4] <= 4; ++k[4])
            for (k[5] = -4; k[5] <= 4; ++k[5]) {
              long s = 0;
              for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) s += k[i] * A[i][j] * k[j];
              n += s == norm;
            }
  return n;
}

}  // namespace

TEST_CASE("graded piece sizes: weight 1 is 6 + 72, weight 2 is 27 + 72*6 + 270") {
  CHECK(fock::basis_of_graded_piece(0, 0).size() == 1);
  CHECK(fock::basis_of_graded_piece(0, 1).size() == 6 + count_root_lattice_norm(2));
  // degree-2 Fock monomials: 21 products l_i(-1)l_j(-1) plus 6 l_i(-2)
  std::size_t w2 = 27 + count_root_lattice_norm(2) * 6 + count_root_lattice_norm(4);
  CHECK(w2 == 729);
  CHECK(fock::basis_of_graded_piece(0, 2).size() == w2);
}

TEST_CASE("graded piece sizes agree with theta/phi^6") {
  for (int coset = 0; coset < 3; ++coset) {
    auto gen = qseries::homogeneous_graded_dim(coset, 3);
    Scalar off = coset == 0 ? Scalar(0) : frac(2, 3);
    CHECK(gen.offset() == off);
    for (int k = 0; k <= 3; ++k) CHECK(Scalar(fock::basis_of_graded_piece(coset, off + k).size()) == gen[k]);
  }
  CHECK(fock::basis_of_graded_piece(1, frac(2, 3)).size() == 27);
}

TEST_CASE("graded piece rejects weights off the coset grid") {
  std::string why;
  CHECK(fock::basis_of_graded_piece(0, frac(2, 3), std::nullopt, &why).empty());
  CHECK_FALSE(why.empty());
  CHECK(fock::basis_of_graded_piece(1, 1, std::nullopt, &why).empty());
}

TEST_CASE("Heisenberg commutators [h(m), h'(n)] = m <h,h'> delta_{m,-n}") {
  using lattice::alpha;
  using lattice::lambda;
  State w = fock::heisenberg(lambda(3), -2, fock::heisenberg(lambda(1), -1, State::exp(alpha(2) - alpha(5))));
  const LatticePoint hs[] = {lambda(1), alpha(4), lambda(3) - lambda(6)};
  for (const auto& h : hs)
    for (const auto& g : hs)
      for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n) {
          State lhs = fock::heisenberg(h, m, fock::heisenberg(g, n, w)) - fock::heisenberg(g, n, fock::heisenberg(h, m, w));
          State rhs = m + n == 0 ? Scalar(m) * lattice::inner_product(h, g) * w : State{};
          CHECK(lhs == rhs);
        }
}

TEST_CASE("tau-hat is an involution preserving weight") {
  State w = fock::heisenberg(lattice::lambda(1), -2, State::exp(lattice::lambda(3)));
  CHECK(fock::tau_hat(fock::tau_hat(w)) == w);
  CHECK(fock::weight(fock::tau_hat(w)) == fock::weight(w));
  CHECK(fock::weight(w) == 2 + frac(5, 3));
}
