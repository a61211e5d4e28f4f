#include "e6voa/fock.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace e6voa {

int Monomial::fock_weight() const {
  int s = 0;
  for (Factor f : factors) s += factor_mode(f);
  return s;
}

bool Monomial::operator<(const Monomial& o) const {
  int a = fock_weight(), b = o.fock_weight();
  if (a != b) return a < b;
  if (exponent != o.exponent) return exponent < o.exponent;
  return std::lexicographical_compare(factors.begin(), factors.end(), o.factors.begin(), o.factors.end());
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (int x : m.exponent.c) mix(static_cast<std::size_t>(static_cast<unsigned>(x)));
  for (Factor f : m.factors) mix(f);
  return h;
}

FactorList merge_factors(const FactorList& a, const FactorList& b) {
  FactorList out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

State State::vacuum() { return exp(LatticePoint{}); }

State State::exp(const LatticePoint& beta, const Scalar& c) {
  Monomial m;
  m.exponent = beta;
  return from(std::move(m), c);
}

State State::from(Monomial m, const Scalar& c) {
  State s;
  s.add(std::move(m), c);
  return s;
}

void State::add(const Monomial& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void State::add(Monomial&& m, const Scalar& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(std::move(m), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar State::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

std::vector<std::pair<Monomial, Scalar>> State::sorted() const {
  std::vector<std::pair<Monomial, Scalar>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return v;
}

State& State::operator+=(const State& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

State& State::operator-=(const State& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

State& State::operator*=(const Scalar& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

bool State::operator==(const State& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    auto it = o.terms_.find(m);
    if (it == o.terms_.end() || it->second != c) return false;
  }
  return true;
}

std::string to_string(const Monomial& m) {
  std::ostringstream os;
  for (Factor f : m.factors) os << "l" << factor_index(f) << "(-" << factor_mode(f) << ")";
  os << "e^" << to_string(m.exponent);
  return os.str();
}

std::string to_string(const State& s) {
  if (s.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : s.sorted()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")" << to_string(m);
  }
  return os.str();
}

namespace fock {

State heisenberg(const HVec& h, int n, const State& w) {
  State out;
  if (n < 0) {
    for (const auto& [m, c] : w.terms())
      for (int i = 0; i < 6; ++i) {
        if (h[i] == 0) continue;
        Monomial mm = m;
        Factor f = make_factor(i + 1, -n);
        mm.factors.insert(std::upper_bound(mm.factors.begin(), mm.factors.end(), f), f);
        out.add(std::move(mm), c * h[i]);
      }
  } else if (n == 0) {
    for (const auto& [m, c] : w.terms()) out.add(m, c * lattice::inner_product(h, m.exponent));
  } else {
    const auto& g3 = lattice::gram3();
    for (const auto& [m, c] : w.terms()) {
      for (std::size_t k = 0; k < m.factors.size(); ++k) {
        Factor f = m.factors[k];
        if (factor_mode(f) != n) continue;
        if (k > 0 && m.factors[k - 1] == f) continue;  // one contraction per distinct factor
        std::size_t mult = 1;
        while (k + mult < m.factors.size() && m.factors[k + mult] == f) ++mult;
        int l = factor_index(f) - 1;
        Scalar pair = 0;  // <h, lambda_l>
        for (int i = 0; i < 6; ++i)
          if (h[i] != 0) pair += h[i] * g3[i][l];
        pair /= 3;
        if (pair == 0) continue;
        Monomial mm = m;
        mm.factors.erase(mm.factors.begin() + static_cast<long>(k));
        out.add(std::move(mm), c * pair * n * static_cast<long>(mult));
      }
    }
  }
  return out;
}

State heisenberg(const LatticePoint& h, int n, const State& w) { return heisenberg(to_hvec(h), n, w); }

Scalar weight(const Monomial& m) {
  return frac(lattice::inner3(m.exponent, m.exponent), 6) + m.fock_weight();
}

std::optional<Scalar> weight(const State& w) {
  std::optional<Scalar> out;
  for (const auto& [m, c] : w.terms()) {
    Scalar x = weight(m);
    if (out && *out != x) return std::nullopt;
    out = x;
  }
  return out ? out : std::optional<Scalar>(Scalar(0));
}

std::optional<F4Weight> f4_weight_sector(const State& w) {
  std::optional<F4Weight> out;
  for (const auto& [m, c] : w.terms()) {
    F4Weight x = lattice::project_to_f4(m.exponent);
    if (out && *out != x) return std::nullopt;
    out = x;
  }
  return out ? out : std::optional<F4Weight>(lattice::f4_omega(0));
}

Monomial tau_hat(const Monomial& m) {
  static constexpr int perm[7] = {0, 6, 2, 5, 4, 3, 1};
  Monomial t;
  t.exponent = lattice::tau(m.exponent);
  t.factors = m.factors;
  for (Factor& f : t.factors) f = make_factor(perm[factor_index(f)], factor_mode(f));
  std::sort(t.factors.begin(), t.factors.end());
  return t;
}

State tau_hat(const State& w) {
  State out;
  for (const auto& [m, c] : w.terms()) out.add(tau_hat(m), c);
  return out;
}

std::vector<LatticePoint> lattice_points(int coset, const Scalar& max_half_norm) {
  std::vector<LatticePoint> out;
  if (max_half_norm < 0) return out;
  // Need 3<m,m> = m^T G3 m <= 6 * max_half_norm.
  Scalar lim = 6 * max_half_norm;
  const long bound = static_cast<long>(std::floor(lim.get_d() + 1e-9));
  const auto& g = lattice::gram3();

  // Cholesky G3 = R^T R, used only for interval bounds; each interval is
  // widened by one integer and every candidate is tested exactly.
  double r[6][6] = {};
  for (int i = 0; i < 6; ++i) {
    double d = g[i][i];
    for (int k = 0; k < i; ++k) d -= r[k][i] * r[k][i];
    r[i][i] = std::sqrt(d);
    for (int j = i + 1; j < 6; ++j) {
      double s = g[i][j];
      for (int k = 0; k < i; ++k) s -= r[k][i] * r[k][j];
      r[i][j] = s / r[i][i];
    }
  }
  LatticePoint m;
  std::function<void(int, double)> rec = [&](int i, double used) {
    if (i < 0) {
      if (lattice::inner3(m, m) <= bound && lattice::coset_index(m) == coset) out.push_back(m);
      return;
    }
    double s = 0;
    for (int j = i + 1; j < 6; ++j) s += r[i][j] * m[j];
    double center = -s / r[i][i];
    double rem = std::max(0.0, static_cast<double>(bound) - used);
    double rad = std::sqrt(rem) / r[i][i];
    long lo = static_cast<long>(std::floor(center - rad)) - 1;
    long hi = static_cast<long>(std::ceil(center + rad)) + 1;
    for (long x = lo; x <= hi; ++x) {
      double t = r[i][i] * x + s;
      double u = used + t * t;
      if (u > bound + 0.5) continue;
      m[i] = static_cast<int>(x);
      rec(i - 1, u);
    }
    m[i] = 0;
  };
  rec(5, 0.0);
  std::sort(out.begin(), out.end(), [](const LatticePoint& a, const LatticePoint& b) {
    long na = lattice::inner3(a, a), nb = lattice::inner3(b, b);
    return na != nb ? na < nb : a < b;
  });
  return out;
}

std::vector<FactorList> fock_monomials(int d) {
  std::vector<FactorList> out;
  if (d < 0) return out;
  std::vector<Factor> keys;
  for (int i = 1; i <= 6; ++i)
    for (int n = 1; n <= d; ++n) keys.push_back(make_factor(i, n));
  FactorList cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t k = from; k < keys.size(); ++k) {
      int n = factor_mode(keys[k]);
      if (n > left) continue;
      cur.push_back(keys[k]);
      rec(k, left - n);
      cur.pop_back();
    }
  };
  rec(0, d);
  return out;
}

std::vector<Monomial> basis_of_graded_piece(int coset, const Scalar& total_weight,
                                            const std::optional<F4Weight>& sector, std::string* diagnostic) {
  std::vector<Monomial> out;
  auto fail = [&](const std::string& why) {
    if (diagnostic) *diagnostic = why;
    return out;
  };
  if (coset < 0 || coset > 2) return fail("coset must be 0, 1 or 2");
  if (total_weight < 0) return fail("negative weight");
  // Weights on P_0 are integers, on P_1 and P_2 they lie in 2/3 + Z.
  Scalar offset = total_weight - (coset == 0 ? Scalar(0) : frac(2, 3));
  if (!is_integer(offset)) return fail("weight " + to_string(total_weight) + " does not occur in coset " + std::to_string(coset));

  for (const auto& beta : lattice_points(coset, total_weight)) {
    if (sector && lattice::project_to_f4(beta) != *sector) continue;
    Scalar rest = total_weight - frac(lattice::inner3(beta, beta), 6);
    if (!is_integer(rest) || rest < 0) continue;
    for (auto& fl : fock_monomials(static_cast<int>(rest.get_num().get_si()))) {
      Monomial m;
      m.factors = std::move(fl);
      m.exponent = beta;
      out.push_back(std::move(m));
    }
  }
  std::sort(out.begin(), out.end());
  if (diagnostic) diagnostic->clear();
  return out;
}

}  // namespace fock
}  // namespace e6voa
