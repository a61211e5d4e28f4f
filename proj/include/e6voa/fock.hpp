#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "e6voa/lattice.hpp"
#include "e6voa/scalar.hpp"

namespace e6voa {

// lambda_i(-n) packed as (i << 8) | n, so sorting keys sorts by (i, n).
using Factor = std::uint16_t;
constexpr Factor make_factor(int i, int n) { return static_cast<Factor>((i << 8) | n); }
constexpr int factor_index(Factor f) { return f >> 8; }
constexpr int factor_mode(Factor f) { return f & 0xff; }

using FactorList = boost::container::small_vector<Factor, 6>;

// lambda_{i_1}(-n_1) ... lambda_{i_k}(-n_k) (x) e^beta, factors kept sorted.
struct Monomial {
  FactorList factors;
  LatticePoint exponent;

  int fock_weight() const;
  bool operator==(const Monomial& o) const { return exponent == o.exponent && factors == o.factors; }
  // Deterministic total order: Fock weight, exponent, factors.
  bool operator<(const Monomial& o) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

FactorList merge_factors(const FactorList& a, const FactorList& b);

// Finite linear combination of monomials with nonzero rational coefficients.
class State {
 public:
  using Map = std::unordered_map<Monomial, Scalar, MonomialHash>;

  State() = default;
  static State vacuum();
  static State exp(const LatticePoint& beta, const Scalar& c = 1);
  static State from(Monomial m, const Scalar& c = 1);

  void add(const Monomial& m, const Scalar& c);
  void add(Monomial&& m, const Scalar& c);
  Scalar coeff(const Monomial& m) const;

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  std::vector<std::pair<Monomial, Scalar>> sorted() const;

  State& operator+=(const State& o);
  State& operator-=(const State& o);
  State& operator*=(const Scalar& c);
  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(const Scalar& c, State a) { return a *= c; }
  bool operator==(const State& o) const;

 private:
  Map terms_;
};

std::string to_string(const Monomial& m);
std::string to_string(const State& s);

namespace fock {

// h(n) acting on w; h is a rational combination of the lambdas.
State heisenberg(const HVec& h, int n, const State& w);
State heisenberg(const LatticePoint& h, int n, const State& w);

Scalar weight(const Monomial& m);
// nullopt when the monomials disagree ("inhomogeneous"); zero state has weight 0.
std::optional<Scalar> weight(const State& w);

// Common Proj(beta) of all exponents, nullopt when mixed.
std::optional<F4Weight> f4_weight_sector(const State& w);

Monomial tau_hat(const Monomial& m);
State tau_hat(const State& w);

// All beta in coset with <beta,beta>/2 <= max_half_norm, sorted.
std::vector<LatticePoint> lattice_points(int coset, const Scalar& max_half_norm);

// All factor lists of total Fock degree d, in a fixed order.
std::vector<FactorList> fock_monomials(int d);

// Monomials of total weight w in V_{P_coset}, optionally restricted to one
// F4 sector.  A weight not congruent to the coset's weights gives an empty
// list and fills *diagnostic.
std::vector<Monomial> basis_of_graded_piece(int coset, const Scalar& total_weight,
                                            const std::optional<F4Weight>& sector = std::nullopt,
                                            std::string* diagnostic = nullptr);

}  // namespace fock
}  // namespace e6voa
