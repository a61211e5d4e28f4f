#include <doctest.h>

#include "e6voa/linalg.hpp"

using namespace e6voa;

namespace {

std::vector<linalg::SparseRow> dense(const std::vector<std::vector<long>>& m) {
  std::vector<linalg::SparseRow> out;
  for (const auto& r : m) {
    linalg::SparseRow s;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r[j]) s[j] = Scalar(r[j]);
    out.push_back(s);
  }
  return out;
}

Scalar dot(const linalg::SparseRow& r, const std::vector<Scalar>& v) {
  Scalar s = 0;
  for (const auto& [j, c] : r) s += c * v[j];
  return s;
}

}  // namespace

TEST_CASE("nullspace of a rank-one matrix") {
  auto rows = dense({{1, 2, 3}, {2, 4, 6}});
  auto ns = linalg::nullspace(rows, 3);
  CHECK(ns.size() == 2);
  CHECK(linalg::rank(rows, 3) == 1);
  for (const auto& v : ns)
    for (const auto& r : rows) CHECK(dot(r, v) == 0);
}

TEST_CASE("a known one-dimensional kernel, normalized") {
  auto rows = dense({{2, -1, 0, 0}, {0, 2, -1, 0}, {0, 0, 2, -1}});
  auto ns = linalg::nullspace(rows, 4);
  REQUIRE(ns.size() == 1);
  std::vector<Scalar> want = {1, 2, 4, 8};
  CHECK(ns[0] == want);
}

TEST_CASE("rational entries and empty rows") {
  std::vector<linalg::SparseRow> rows(3);
  rows[0][0] = frac(1, 3);
  rows[0][1] = frac(-1, 2);
  auto ns = linalg::nullspace(rows, 2);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == std::vector<Scalar>{3, 2});
  CHECK(linalg::nullspace({}, 2).size() == 2);
  CHECK(linalg::nullspace(dense({{1, 0}, {0, 1}}), 2).empty());
}

TEST_CASE("normalize makes a primitive integer vector with positive lead") {
  CHECK(linalg::normalize({0, frac(-2, 3), frac(4, 3)}) == std::vector<Scalar>{0, 1, -2});
}

TEST_CASE("kernel dimension matches rank on a random integer matrix") {
  std::vector<std::vector<long>> m;
  unsigned x = 12345;
  for (int i = 0; i < 7; ++i) {
    std::vector<long> r;
    for (int j = 0; j < 10; ++j) {
      x = x * 1103515245u + 12345u;
      r.push_back(static_cast<long>((x >> 16) % 7) - 3);
    }
    m.push_back(r);
  }
  m.push_back(m[0]);  // a dependent row
  auto rows = dense(m);
  auto ns = linalg::nullspace(rows, 10);
  CHECK(ns.size() + linalg::rank(rows, 10) == 10);
  for (const auto& v : ns)
    for (const auto& r : rows) CHECK(dot(r, v) == 0);
}
