#include <doctest.h>

#include "e6voa/qseries.hpp"

using namespace e6voa;
using namespace e6voa::qseries;

namespace {

// Partitions of n into parts <= k, by recursion.
long count_partitions(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return count_partitions(n - k, k) + count_partitions(n, k - 1);
}
long p(int n) { return n < 0 ? 0 : count_partitions(n, n); }

// Partitions into parts congruent to one of the residues mod m.
long restricted(int n, int largest, int m, const std::vector<int>& res) {
  if (n == 0) return 1;
  if (largest == 0) return 0;
  long total = restricted(n, largest - 1, m, res);
  bool ok = false;
  for (int r : res) ok = ok || ((largest - r) % m + m) % m == 0;
  if (ok && largest <= n) total += restricted(n - largest, largest, m, res);
  return total;
}

}  // namespace

TEST_CASE("partition counts against a recursive count") {
  auto s = partitions(40);
  for (int n = 0; n <= 40; ++n) CHECK(s[n] == p(n));
  CHECK(s[40] == 37338);
}

TEST_CASE("Euler's function is the pentagonal series and inverts the partition series") {
  auto phi = euler_phi(60);
  for (int n = 0; n <= 60; ++n) {
    long want = 0;
    for (int k = -10; k <= 10; ++k)
      if (k * (3 * k - 1) / 2 == n) want = (k % 2 == 0) ? 1 : -1;
    CHECK(phi[n] == want);
  }
  CHECK(equal(phi * partitions(60), TruncSeries::one(60)));
}

TEST_CASE("Rogers-Ramanujan products count restricted partitions") {
  auto a = rr_a(40), b = rr_b(40);
  for (int n = 0; n <= 40; ++n) {
    CHECK(a[n] == restricted(n, n, 5, {2, 3}));
    CHECK(b[n] == restricted(n, n, 5, {1, 4}));
  }
  auto f = residue_product(12, {1, 5, 7, 11}, 30);
  for (int n = 0; n <= 30; ++n) CHECK(f[n] == restricted(n, n, 12, {1, 5, 7, 11}));
}

TEST_CASE("Jacobi triple product at several specializations") {
  for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 3}, {7, 8}, {4, 11}})
    CHECK(jtp_check(a, b, 80).pass);
}

TEST_CASE("minimal-model parameters at c = 4/5") {
  struct Case {
    int m, n;
    Scalar h, offset;
  };
  const Case cases[] = {{1, 1, 0, frac(-1, 30)},          {1, 5, 3, frac(89, 30)}, {2, 1, frac(2, 5), frac(11, 30)},
                        {2, 5, frac(7, 5), frac(41, 30)}, {1, 3, frac(2, 3), frac(19, 30)},
                        {2, 3, frac(1, 15), frac(1, 30)}};
  for (const auto& c : cases) {
    auto ch = feigin_fuchs_char(5, 6, c.m, c.n, 20);
    CHECK(ch.c == frac(4, 5));
    CHECK(ch.h == c.h);
    CHECK(ch.series.offset() == c.offset);
  }
  CHECK_THROWS_AS(feigin_fuchs_char(5, 6, 0, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(feigin_fuchs_char(5, 6, 5, 1, 10), std::invalid_argument);
}

TEST_CASE("characters agree with Verma quotients below the second singular level") {
  // h_{1,1}: singular vectors at levels 1 and 20.
  auto vac = feigin_fuchs_char(5, 6, 1, 1, 30);
  for (int k = 0; k < 20; ++k) CHECK(vac.series[k] == p(k) - p(k - 1));
  // h_{1,3}: levels 3 and 12.
  auto x = feigin_fuchs_char(5, 6, 1, 3, 30);
  for (int k = 0; k < 12; ++k) CHECK(x.series[k] == p(k) - p(k - 3));
  // h_{2,3}: levels 6 and 9.
  auto y = feigin_fuchs_char(5, 6, 2, 3, 30);
  for (int k = 0; k < 9; ++k) CHECK(y.series[k] == p(k) - p(k - 6));
}

TEST_CASE("branching coefficients start correctly") {
  CHECK(c0(10)[0] == 1);
  CHECK(c0(10).offset() == 0);
  CHECK(d0(10)[0] == 1);
  CHECK(c1(10)[0] == 1);
  CHECK(d1(10)[0] == 1);
}

TEST_CASE("the Ramanujan identity") {
  CHECK(ramanujan_identity_check(0).pass);
  CHECK(ramanujan_identity_check(150).pass);
}

TEST_CASE("congruence parts sum back and the named parts hold") {
  auto s = rr_a(50) * euler_phi(50);
  auto sum = congruence_split(s, 0) + congruence_split(s, 1) + congruence_split(s, 2);
  CHECK(equal(sum, s));
  for (const auto& c : congruence_split_checks(100)) CHECK_MESSAGE(c.pass, c.name);
  CHECK_THROWS_AS(congruence_split(s.times_power(frac(1, 3)), 0), std::invalid_argument);
}

TEST_CASE("lattice graded dimensions") {
  // theta series of the E6 root lattice, 1 + 72q + 270q^2 + 720q^3, over phi^6.
  auto g0 = homogeneous_graded_dim(0, 3);
  CHECK(g0[0] == 1);
  CHECK(g0[1] == 78);
  CHECK(g0[2] == 729);
  CHECK(g0[3] == 4382);
  auto g1 = homogeneous_graded_dim(1, 2);
  CHECK(g1.offset() == frac(2, 3));
  CHECK(g1[0] == 27);
  CHECK(equal(g1, homogeneous_graded_dim(2, 2)));
  CHECK_THROWS_AS(homogeneous_graded_dim(3, 2), std::invalid_argument);
}

TEST_CASE("series arithmetic with offsets") {
  auto a = TruncSeries::monomial(10, 2, 3).times_power(frac(1, 3));
  auto b = TruncSeries::monomial(10, 0, 1).times_power(frac(4, 3));
  auto c = a + b;
  CHECK(c.offset() == frac(1, 3));
  CHECK(c[1] == 1);
  CHECK(c[2] == 3);
  CHECK(equal(c.normalized(), c));
  auto sq = TruncSeries::one(10) - TruncSeries::monomial(10, 1);
  CHECK(equal((sq * sq) / sq, sq));
  CHECK(equal(sq.substitute(3, 10), TruncSeries::one(10) - TruncSeries::monomial(10, 3)));
  CHECK(first_difference(sq, TruncSeries::one(10)) == std::optional<long>(1));
}

TEST_CASE("every listed identity holds at the default orders") {
  for (const auto& c : all_identities(100, 120)) CHECK_MESSAGE(c.pass, c.name);
  CHECK(identities_by_name("ramanujan", 50, 50).size() == 1);
  CHECK(identities_by_name("no-such-identity", 50, 50).empty());
}
