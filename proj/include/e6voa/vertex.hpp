#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "e6voa/fock.hpp"

namespace e6voa::vertex {

// One record per (v-monomial, w-monomial) pair that can contribute.
struct TraceEntry {
  Monomial v, w;
  Scalar pairing;       // <alpha, beta>, the z-power offset from z^{alpha(0)}
  long base_degree;     // -n-1-<alpha,beta>
  int selections;       // annihilation/creation splits of the v factors
  long max_creation;    // highest z-degree pulled from the creation series
  State contribution;
};
using Trace = std::vector<TraceEntry>;

// {v}_n w, the coefficient of z^{-n-1} in Y(v,z)w.  Term-parallel (OpenMP);
// the reduction is exact so the result does not depend on the schedule.
State mode_action(const State& v, const Scalar& n, const State& w, Trace* trace = nullptr);

// Single-threaded reference with the same kernel.
State mode_action_serial(const State& v, const Scalar& n, const State& w, Trace* trace = nullptr);

// Weight-shifted subscript m (Y(v,z) = sum v_m z^(-m-wt v)) to brace mode:
// m + wt(v) - 1.  Throws on inhomogeneous v.
Scalar paper_mode(const State& v, const Scalar& m);

struct Check {
  bool pass = false;
  State lhs, rhs;
};

// [{u}_m, {v}_n] w against sum_k binom(m,k) {{u}_k v}_{m+n-k} w.  u in V_{P_0}.
Check commutator_check(const State& u, int m, const State& v, const Scalar& n, const State& w);

// {L(-1)v}_n w = -n {v}_{n-1} w, with L(-1) from the E6 conformal vector.
Check derivative_check(const State& v, const State& w, const Scalar& n);

// {v}_n with per-monomial memoization; safe to share between threads.
class ModeOperator {
 public:
  ModeOperator(State v, Scalar n);
  State operator()(const State& w) const;
  State operator()(const Monomial& m) const;
  const State& vector() const { return v_; }
  const Scalar& mode() const { return n_; }
  std::size_t cached() const;

 private:
  State v_;
  Scalar n_;
  mutable std::mutex mu_;
  mutable std::unordered_map<Monomial, std::shared_ptr<const State>, MonomialHash> cache_;
};

}  // namespace e6voa::vertex
