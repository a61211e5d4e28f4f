#include <doctest.h>

#include "e6voa/hwv.hpp"
#include "e6voa/vertex.hpp"

using namespace e6voa;
using lattice::f4_omega;
using virasoro::gamma;
using virasoro::nu;

TEST_CASE("the eight built-in vectors satisfy all five conditions") {
  CHECK(hwv::builtin_hwvs().size() == 8);
  for (const auto& b : hwv::builtin_hwvs()) {
    auto r = hwv::check_hwv(b.state, b.h, b.omega, b.id);
    CHECK_MESSAGE(r.pass(), b.id);
    REQUIRE(r.computed_h);
    CHECK(*r.computed_h == b.h);
    REQUIRE(r.computed_omega);
    CHECK(*r.computed_omega == b.omega);
  }
}

TEST_CASE("conformal weights and sectors read off by hand") {
  // e^{lambda_1}: <lambda_1,lambda_1>/2 = 2/3 in E6, of which 3/5 is F4.
  auto r = hwv::check_hwv(State::exp(lattice::lambda(1)), frac(1, 15), f4_omega(4));
  CHECK(r.pass());
  CHECK(lattice::project_to_f4(lattice::lambda(1)) == f4_omega(4));
  CHECK(lattice::project_to_f4(hwv::mu()) == f4_omega(4));
  CHECK(lattice::norm(hwv::mu()) == 2);
}

TEST_CASE("wrong h or wrong sector is reported") {
  const auto& b = hwv::builtin("R");
  auto r = hwv::check_hwv(b.state, frac(1, 15), b.omega);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.conditions[3].pass);
  auto s = hwv::check_hwv(b.state, b.h, f4_omega(4));
  CHECK_FALSE(s.conditions[4].pass);
  // e^mu alone is not annihilated by the raising operators.
  CHECK_FALSE(hwv::check_hwv(State::exp(hwv::mu()), frac(2, 5), f4_omega(4)).pass());
}

TEST_CASE("scaling does not change the verdict") {
  for (const auto& b : hwv::builtin_hwvs()) {
    CHECK(hwv::check_hwv(frac(-7, 3) * b.state, b.h, b.omega).pass());
  }
}

TEST_CASE("zero and inhomogeneous vectors are rejected") {
  CHECK_THROWS_AS(hwv::check_hwv(State{}, 0, f4_omega(0)), std::invalid_argument);
  State mixed = State::vacuum() + State::exp(lattice::alpha(1));
  CHECK_THROWS_AS(hwv::check_hwv(mixed, 0, f4_omega(0)), std::invalid_argument);
}

TEST_CASE("tau-hat carries the Lambda1 vectors to the Lambda6 vectors") {
  CHECK(fock::tau_hat(hwv::builtin("e^lambda1").state) == hwv::builtin("e^lambda6").state);
  CHECK(fock::tau_hat(hwv::builtin("R").state) == hwv::builtin("tau_R").state);
}

TEST_CASE("U from R and tau R") {
  auto u = hwv::build_u();
  CHECK(u.r_minus_2_3.empty());
  CHECK(u.r_minus_5_3 == 5 * virasoro::omega_coset().state);
  // {omega}_{-2} 1 = L(-1) omega, written out by hand.
  State want;
  const State vac = State::vacuum();
  for (int k = 1; k <= 3; ++k)
    want += frac(1, 5) * fock::heisenberg(nu(k), -1, fock::heisenberg(nu(k), -2, vac));
  for (int sign : {1, -1}) {
    for (int k : {1, 2}) want -= frac(1, 5) * fock::heisenberg(sign * gamma(k), -1, State::exp(sign * gamma(k)));
    want += frac(1, 5) * fock::heisenberg(sign * gamma(3), -1, State::exp(sign * gamma(3)));
  }
  CHECK(u.omega_minus_2 == want);
  CHECK(u.u == u.closed_form);
  CHECK(u.pass());
  CHECK(hwv::construct_u() == hwv::u_closed_form());
  CHECK(fock::weight(u.u) == Scalar(3));
}

TEST_CASE("nullspace search rediscovers the built-in vectors") {
  struct Case {
    int coset;
    Scalar weight;
    F4Weight sector;
    std::size_t dim;
    const char* id;
  };
  const Case cases[] = {
      {0, 0, f4_omega(0), 1, "vacuum"},
      {0, 1, f4_omega(4), 1, "e^mu-e^tau_mu"},
      {0, 2, f4_omega(4), 1, "P"},
      {1, frac(2, 3), f4_omega(4), 1, "e^lambda1"},
      {1, frac(2, 3), f4_omega(0), 1, "R"},
      {2, frac(2, 3), f4_omega(0), 1, "tau_R"},
      {0, 1, f4_omega(0), 0, nullptr},
      {0, 2, f4_omega(0), 0, nullptr},
  };
  for (const auto& c : cases) {
    auto f = hwv::find_hwvs(c.coset, c.weight, c.sector);
    CHECK(f.solutions.size() == c.dim);
    if (c.id && f.solutions.size() == 1) CHECK_MESSAGE(hwv::proportional(f.solutions[0], hwv::builtin(c.id).state), c.id);
  }
}

TEST_CASE("weight-3 search finds U") {
  auto f = hwv::find_hwvs(0, 3, f4_omega(0));
  REQUIRE(f.solutions.size() == 1);
  CHECK(hwv::proportional(f.solutions[0], hwv::u_closed_form()));
}

TEST_CASE("search limits and bad weights") {
  CHECK_THROWS_AS(hwv::find_hwvs(0, 2, f4_omega(4), std::nullopt, 3), hwv::CapExceeded);
  try {
    hwv::find_hwvs(0, 2, f4_omega(4), std::nullopt, 3);
  } catch (const hwv::CapExceeded& e) {
    CHECK(e.required > 3);
  }
  CHECK_THROWS_AS(hwv::find_hwvs(0, frac(1, 3), f4_omega(0)), std::invalid_argument);
  CHECK_THROWS_AS(hwv::find_hwvs(1, 1, f4_omega(0)), std::invalid_argument);
}

TEST_CASE("proportionality") {
  State a = State::exp(lattice::alpha(1)) + State::exp(lattice::alpha(2));
  CHECK(hwv::proportional(a, frac(3, 2) * a));
  CHECK_FALSE(hwv::proportional(a, State::exp(lattice::alpha(1))));
  CHECK_FALSE(hwv::proportional(a, State{}));
}
