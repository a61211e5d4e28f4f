#include "e6voa/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace e6voa {

HVec to_hvec(const LatticePoint& p) {
  HVec h;
  for (std::size_t i = 0; i < 6; ++i) h[i] = p[i];
  return h;
}

std::string to_string(const LatticePoint& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

std::string to_string(const F4Weight& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ",";
    s += e6voa::to_string(w[i]);
  }
  return s + "]";
}

namespace lattice {
namespace {

// Bourbaki labels: chain 1-3-4-5-6, node 2 hangs off node 4.
constexpr IntMatrix kCartan{{
    {2, 0, -1, 0, 0, 0},
    {0, 2, 0, -1, 0, 0},
    {-1, 0, 2, -1, 0, 0},
    {0, -1, -1, 2, -1, 0},
    {0, 0, 0, -1, 2, -1},
    {0, 0, 0, 0, -1, 2},
}};

constexpr IntMatrix kGram3{{
    {4, 3, 5, 6, 4, 2},
    {3, 6, 6, 9, 6, 3},
    {5, 6, 10, 12, 8, 4},
    {6, 9, 12, 18, 12, 6},
    {4, 6, 8, 12, 10, 5},
    {2, 3, 4, 6, 5, 4},
}};

// eps(lambda_i, lambda_j); tau-invariant.
constexpr IntMatrix kEpsLambda{{
    {1, 1, 1, 1, 1, 1},
    {-1, 1, 1, 1, 1, -1},
    {-1, 1, 1, 1, 1, 1},
    {1, -1, 1, 1, 1, 1},
    {1, 1, 1, 1, 1, -1},
    {1, 1, 1, 1, 1, 1},
}};

// eps(alpha_i, alpha_j) as tabulated for the root lattice alone.
constexpr IntMatrix kEpsAlpha{{
    {1, 1, -1, 1, 1, 1},
    {1, 1, 1, -1, 1, 1},
    {1, 1, 1, -1, 1, 1},
    {1, 1, 1, 1, 1, 1},
    {1, 1, 1, -1, 1, 1},
    {1, 1, 1, 1, -1, 1},
}};

bool gram_checked() {
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int s = 0;
      for (int k = 0; k < 6; ++k) s += kCartan[i][k] * kGram3[k][j];
      if (s != (i == j ? 3 : 0)) return false;
    }
  return true;
}

int parity_form(const IntMatrix& m, const std::array<int, 6>& a, const std::array<int, 6>& b) {
  long s = 0;
  for (int i = 0; i < 6; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 6; ++j)
      if (m[i][j] < 0) s += static_cast<long>(a[i]) * b[j];
  }
  return (s & 1) ? -1 : 1;
}

}  // namespace

const IntMatrix& cartan_matrix() { return kCartan; }

const IntMatrix& gram3() {
  static const bool ok = gram_checked();
  if (!ok) throw std::logic_error("Cartan matrix times 3*Gram is not 3I");
  return kGram3;
}

long inner3(const LatticePoint& u, const LatticePoint& v) {
  long s = 0;
  for (int i = 0; i < 6; ++i) {
    if (u[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < 6; ++j) row += static_cast<long>(kGram3[i][j]) * v[j];
    s += u[i] * row;
  }
  return s;
}

Scalar inner_product(const LatticePoint& u, const LatticePoint& v) {
  (void)gram3();
  return frac(inner3(u, v), 3);
}

Scalar inner_product(const HVec& u, const LatticePoint& v) {
  Scalar s = 0;
  for (int i = 0; i < 6; ++i) {
    if (u[i] == 0) continue;
    long row = 0;
    for (int j = 0; j < 6; ++j) row += static_cast<long>(kGram3[i][j]) * v[j];
    s += u[i] * row;
  }
  s /= 3;
  return s;
}

Scalar inner_product(const HVec& u, const HVec& v) {
  Scalar s = 0;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (u[i] != 0 && v[j] != 0) s += u[i] * v[j] * kGram3[i][j];
  s /= 3;
  return s;
}

LatticePoint lambda(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("lambda index");
  LatticePoint p;
  p[i - 1] = 1;
  return p;
}

LatticePoint alpha(int i) {
  if (i < 1 || i > 6) throw std::out_of_range("alpha index");
  LatticePoint p;
  for (int j = 0; j < 6; ++j) p[j] = kCartan[i - 1][j];
  return p;
}

LatticePoint from_root_coords(const std::array<int, 6>& k) {
  LatticePoint p;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) p[j] += k[i] * kCartan[i][j];
  return p;
}

std::array<Scalar, 6> root_coords(const LatticePoint& p) {
  std::array<Scalar, 6> k;
  for (int i = 0; i < 6; ++i) {
    long s = 0;
    for (int j = 0; j < 6; ++j) s += static_cast<long>(kGram3[i][j]) * p[j];
    k[i] = frac(s, 3);
  }
  return k;
}

LatticePoint tau(const LatticePoint& p) {
  LatticePoint q = p;
  std::swap(q[0], q[5]);
  std::swap(q[2], q[4]);
  return q;
}

HVec tau(const HVec& h) {
  HVec q = h;
  std::swap(q[0], q[5]);
  std::swap(q[2], q[4]);
  return q;
}

int epsilon(const LatticePoint& u, const LatticePoint& v) { return parity_form(kEpsLambda, u.c, v.c); }
const IntMatrix& epsilon_lambda_matrix() { return kEpsLambda; }

int epsilon_simple_roots(const std::array<int, 6>& a, const std::array<int, 6>& b) {
  return parity_form(kEpsAlpha, a, b);
}
const IntMatrix& epsilon_alpha_matrix() { return kEpsAlpha; }

const std::vector<LatticePoint>& roots() {
  static const std::vector<LatticePoint> all = [] {
    std::vector<LatticePoint> out;
    std::array<int, 6> k{};
    // Exhaustive box [-4,4]^6 in simple-root coordinates.
    for (k[0] = -4; k[0] <= 4; ++k[0])
      for (k[1] = -4; k[1] <= 4; ++k[1])
        for (k[2] = -4; k[2] <= 4; ++k[2])
          for (k[3] = -4; k[3] <= 4; ++k[3])
            for (k[4] = -4; k[4] <= 4; ++k[4])
              for (k[5] = -4; k[5] <= 4; ++k[5]) {
                long n = 0;
                for (int i = 0; i < 6; ++i)
                  for (int j = 0; j < 6; ++j) n += static_cast<long>(k[i]) * kCartan[i][j] * k[j];
                if (n == 2) out.push_back(from_root_coords(k));
              }
    std::sort(out.begin(), out.end());
    return out;
  }();
  return all;
}

LatticePoint theta() { return from_root_coords({1, 2, 2, 3, 2, 1}); }

int coset_index(const LatticePoint& p) {
  int r = (p[0] - p[2] + p[4] - p[5]) % 3;
  return r < 0 ? r + 3 : r;
}

F4Weight project_to_f4(const LatticePoint& p) {
  // lambda_1,lambda_6 -> omega_4; lambda_2 -> omega_1; lambda_3,lambda_5 -> omega_3; lambda_4 -> omega_2
  return F4Weight{Scalar(p[1]), Scalar(p[3]), Scalar(p[2] + p[4]), Scalar(p[0] + p[5])};
}

F4Weight f4_omega(int j) {
  if (j < 0 || j > 4) throw std::out_of_range("omega index");
  F4Weight w{0, 0, 0, 0};
  if (j > 0) w[j - 1] = 1;
  return w;
}

namespace {

HVec half(const LatticePoint& p) {
  HVec h = to_hvec(p);
  for (auto& x : h) x /= 2;
  return h;
}

WeightOneRecipe exp_recipe(std::initializer_list<LatticePoint> pts, const Scalar& c = 1) {
  WeightOneRecipe r;
  for (const auto& p : pts) r.exps.emplace_back(c, p);
  return r;
}

WeightOneRecipe heis_recipe(const HVec& h) {
  WeightOneRecipe r;
  r.heis = h;
  return r;
}

}  // namespace

std::vector<F4SimpleRoot> f4_simple_root_data() {
  const LatticePoint a1 = alpha(1), a2 = alpha(2), a3 = alpha(3), a4 = alpha(4), a5 = alpha(5), a6 = alpha(6);
  return {
      {"beta_1", to_hvec(a2), a2, exp_recipe({a2})},
      {"beta_2", to_hvec(a4), a4, exp_recipe({a4})},
      {"beta_3", half(a3 + a5), a3 + a5, exp_recipe({a3, a5})},
      {"beta_4", half(a1 + a6), a1 + a6, exp_recipe({a1, a6})},
  };
}

std::vector<DualPair> f4_basis_dual_pairs(DualCoefficient rule) {
  std::vector<DualPair> out;
  const LatticePoint a1 = alpha(1), a2 = alpha(2), a3 = alpha(3), a4 = alpha(4), a5 = alpha(5), a6 = alpha(6);
  const LatticePoint l1 = lambda(1), l2 = lambda(2), l3 = lambda(3), l4 = lambda(4), l5 = lambda(5), l6 = lambda(6);
  out.push_back({"csa", heis_recipe(to_hvec(a2)), heis_recipe(to_hvec(l2))});
  out.push_back({"csa", heis_recipe(to_hvec(a4)), heis_recipe(to_hvec(l4))});
  out.push_back({"csa", heis_recipe(to_hvec(a3 + a5)), heis_recipe(half(l3 + l5))});
  out.push_back({"csa", heis_recipe(to_hvec(a1 + a6)), heis_recipe(half(l1 + l6))});

  for (const auto& a : roots()) {
    const LatticePoint ta = tau(a);
    if (ta == a) {
      out.push_back({"fixed", exp_recipe({a}), exp_recipe({-a}, epsilon(a, -a))});
    } else if (a < ta) {
      Scalar c = rule == DualCoefficient::EpsAlphaTauAlpha ? frac(epsilon(a, ta), 2) : frac(epsilon(a, -a), 2);
      out.push_back({"moved", exp_recipe({a, ta}), exp_recipe({-a, -ta}, c)});
    }
  }
  return out;
}

}  // namespace lattice
}  // namespace e6voa
