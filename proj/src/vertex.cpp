#include "e6voa/vertex.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "e6voa/virasoro.hpp"

namespace e6voa::vertex {
namespace {

using Poly = std::vector<std::pair<FactorList, Scalar>>;

struct FactorLess {
  bool operator()(const FactorList& a, const FactorList& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

// Coefficients of E^-(-alpha,z) * prod_{f in T} (creation half of f's
// derivative field), as polynomials in the creation operators.
struct CreationSeries {
  std::vector<Poly> coeff;
};

using SeriesKey = std::pair<LatticePoint, FactorList>;

struct SeriesKeyLess {
  bool operator()(const SeriesKey& a, const SeriesKey& b) const {
    if (a.first != b.first) return a.first < b.first;
    return FactorLess{}(a.second, b.second);
  }
};

Poly normalize(std::map<FactorList, Scalar, FactorLess>& acc) {
  Poly p;
  for (auto& [k, c] : acc)
    if (c != 0) p.emplace_back(k, c);
  return p;
}

std::shared_ptr<const CreationSeries> build_series(const LatticePoint& alpha, const FactorList& t, long depth) {
  auto s = std::make_shared<CreationSeries>();
  s->coeff.resize(static_cast<std::size_t>(depth) + 1);
  // E_0 = 1, d E_d = sum_{j=1}^d alpha(-j) E_{d-j}
  s->coeff[0] = {{FactorList{}, Scalar(1)}};
  for (long d = 1; d <= depth; ++d) {
    std::map<FactorList, Scalar, FactorLess> acc;
    for (long j = 1; j <= d; ++j)
      for (const auto& [g, c] : s->coeff[static_cast<std::size_t>(d - j)])
        for (int i = 0; i < 6; ++i) {
          if (alpha[i] == 0) continue;
          FactorList h = g;
          Factor f = make_factor(i + 1, static_cast<int>(j));
          h.insert(std::upper_bound(h.begin(), h.end(), f), f);
          acc[h] += c * alpha[i];
        }
    Poly p = normalize(acc);
    for (auto& [g, c] : p) c /= d;
    s->coeff[static_cast<std::size_t>(d)] = std::move(p);
  }
  // Creation half of the (m-1)-th divided derivative of lambda_i(z):
  // sum_{e>=0} binom(e+m-1, m-1) lambda_i(-(e+m)) z^e.
  for (Factor f : t) {
    int i = factor_index(f), m = factor_mode(f);
    std::vector<Poly> next(s->coeff.size());
    for (long d = 0; d <= depth; ++d) {
      std::map<FactorList, Scalar, FactorLess> acc;
      for (long e = 0; e <= d; ++e) {
        mpz_class b = binomial(e + m - 1, m - 1);
        Factor g = make_factor(i, static_cast<int>(e + m));
        for (const auto& [h, c] : s->coeff[static_cast<std::size_t>(d - e)]) {
          FactorList k = h;
          k.insert(std::upper_bound(k.begin(), k.end(), g), g);
          acc[k] += c * b;
        }
      }
      next[static_cast<std::size_t>(d)] = normalize(acc);
    }
    s->coeff = std::move(next);
  }
  return s;
}

std::mutex g_series_mu;
std::map<SeriesKey, std::shared_ptr<const CreationSeries>, SeriesKeyLess> g_series;

std::shared_ptr<const CreationSeries> creation_series(const LatticePoint& alpha, const FactorList& t, long depth) {
  SeriesKey key{alpha, t};
  {
    std::lock_guard<std::mutex> lock(g_series_mu);
    auto it = g_series.find(key);
    if (it != g_series.end() && static_cast<long>(it->second->coeff.size()) > depth) return it->second;
  }
  auto s = build_series(alpha, t, depth);
  std::lock_guard<std::mutex> lock(g_series_mu);
  auto& slot = g_series[key];
  if (!slot || slot->coeff.size() < s->coeff.size()) slot = s;
  return slot;
}

struct Piece {
  FactorList f;
  Scalar c;
  long p;  // accumulated (non-positive) z-power
};

// <h, lambda_l> * 3 for h = lambda_i
inline int g3(int i, int l) { return lattice::gram3()[i][l]; }

void apply_annihilator(Factor af, const LatticePoint& beta, std::vector<Piece>& pieces) {
  const int i = factor_index(af) - 1, m = factor_mode(af);
  const int sign = (m - 1) % 2 ? -1 : 1;
  std::vector<Piece> out;
  for (const auto& pc : pieces) {
    // s = 0: lambda_i(0) sits right of e_alpha and sees beta.
    long ib = 0;
    for (int j = 0; j < 6; ++j) ib += static_cast<long>(g3(i, j)) * beta[j];
    if (ib != 0) out.push_back({pc.f, pc.c * frac(sign * ib, 3), pc.p - m});
    // s > 0: contract with one copy of each distinct lambda_l(-s).
    for (std::size_t k = 0; k < pc.f.size(); ++k) {
      Factor f = pc.f[k];
      if (k > 0 && pc.f[k - 1] == f) continue;
      long mult = 1;
      while (k + mult < pc.f.size() && pc.f[k + mult] == f) ++mult;
      const int l = factor_index(f) - 1, s = factor_mode(f);
      if (g3(i, l) == 0) continue;
      Scalar c = pc.c * frac(sign * mult * s * g3(i, l), 3);
      c *= binomial(s + m - 1, m - 1);
      FactorList g = pc.f;
      g.erase(g.begin() + static_cast<long>(k));
      out.push_back({std::move(g), std::move(c), pc.p - s - m});
    }
  }
  pieces = std::move(out);
}

// E^+(-alpha,z): lambda_l(-t) -> lambda_l(-t) - <alpha,lambda_l> z^{-t}.
void apply_eplus(const LatticePoint& alpha, std::vector<Piece>& pieces) {
  long a3[6];
  bool any = false;
  for (int l = 0; l < 6; ++l) {
    a3[l] = 0;
    for (int j = 0; j < 6; ++j) a3[l] += static_cast<long>(g3(l, j)) * alpha[j];
    any = any || a3[l] != 0;
  }
  if (!any) return;
  std::vector<Piece> out;
  for (auto& pc : pieces) {
    std::vector<Piece> cur{{FactorList{}, pc.c, pc.p}};
    for (std::size_t k = 0; k < pc.f.size();) {
      Factor f = pc.f[k];
      std::size_t mult = 1;
      while (k + mult < pc.f.size() && pc.f[k + mult] == f) ++mult;
      k += mult;
      const int l = factor_index(f) - 1, t = factor_mode(f);
      std::vector<Piece> nxt;
      for (const auto& q : cur) {
        for (std::size_t r = 0; r <= mult; ++r) {
          if (r > 0 && a3[l] == 0) break;
          Scalar c = q.c * binomial(static_cast<long>(mult), static_cast<long>(r));
          if (r > 0) {
            Scalar a = frac(-a3[l], 3);
            for (std::size_t z = 0; z < r; ++z) c *= a;
          }
          FactorList g = q.f;
          for (std::size_t z = r; z < mult; ++z) g.push_back(f);
          nxt.push_back({std::move(g), std::move(c), q.p - static_cast<long>(t * r)});
        }
      }
      cur = std::move(nxt);
    }
    for (auto& q : cur) out.push_back(std::move(q));
  }
  pieces = std::move(out);
}

// {mv}_n mw scaled by cvw, accumulated into out.
void act(const Monomial& mv, const Scalar& n, const Monomial& mw, const Scalar& cvw, State& out, Trace* trace) {
  const LatticePoint& alpha = mv.exponent;
  const LatticePoint& beta = mw.exponent;
  const long ab3 = lattice::inner3(alpha, beta);
  Scalar kq = -n - 1 - frac(ab3, 3);
  if (!is_integer(kq)) return;
  const long K = kq.get_num().get_si();
  const int eps = lattice::epsilon(alpha, beta);
  const LatticePoint gamma = alpha + beta;

  // Distinct factors of v with multiplicities.
  std::vector<std::pair<Factor, int>> distinct;
  for (Factor f : mv.factors) {
    if (!distinct.empty() && distinct.back().first == f)
      ++distinct.back().second;
    else
      distinct.emplace_back(f, 1);
  }
  State local;
  State& sink = trace ? local : out;
  int selections = 0;
  long max_creation = -1;

  std::vector<int> r(distinct.size(), 0);
  while (true) {
    ++selections;
    Scalar weight = cvw * eps;
    FactorList t;
    std::vector<Piece> pieces{{mw.factors, Scalar(1), 0}};
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      auto [f, cnt] = distinct[k];
      weight *= binomial(cnt, r[k]);
      for (int z = 0; z < r[k]; ++z) apply_annihilator(f, beta, pieces);
      for (int z = r[k]; z < cnt; ++z) t.push_back(f);
    }
    if (!pieces.empty()) {
      apply_eplus(alpha, pieces);
      // only as deep as some piece actually reaches
      long depth = -1;
      for (const auto& pc : pieces)
        if (pc.c != 0) depth = std::max(depth, K - pc.p);
      if (depth >= 0) {
        auto series = creation_series(alpha, t, depth);
        for (const auto& pc : pieces) {
          const long d = K - pc.p;
          if (d < 0 || pc.c == 0) continue;
          max_creation = std::max(max_creation, d);
          Scalar c0 = pc.c * weight;
          for (const auto& [g, cg] : series->coeff[static_cast<std::size_t>(d)]) {
            Monomial res;
            res.factors = merge_factors(g, pc.f);
            res.exponent = gamma;
            sink.add(std::move(res), c0 * cg);
          }
        }
      }
    }
    std::size_t k = 0;
    while (k < distinct.size() && r[k] == distinct[k].second) r[k++] = 0;
    if (k == distinct.size()) break;
    ++r[k];
  }

  if (trace) {
    out += local;
    trace->push_back({mv, mw, frac(ab3, 3), K, selections, max_creation, std::move(local)});
  }
}

}  // namespace

State mode_action_serial(const State& v, const Scalar& n, const State& w, Trace* trace) {
  State out;
  for (const auto& [mv, cv] : v.sorted())
    for (const auto& [mw, cw] : w.sorted()) act(mv, n, mw, cv * cw, out, trace);
  return out;
}

State mode_action(const State& v, const Scalar& n, const State& w, Trace* trace) {
  if (trace) return mode_action_serial(v, n, w, trace);
  const auto vs = v.sorted();
  const auto ws = w.sorted();
  const long total = static_cast<long>(vs.size() * ws.size());
  if (total < 4 || omp_get_max_threads() == 1) return mode_action_serial(v, n, w);
  State out;
#pragma omp parallel
  {
    State part;
#pragma omp for schedule(dynamic, 4)
    for (long idx = 0; idx < total; ++idx) {
      const auto& [mv, cv] = vs[static_cast<std::size_t>(idx) / ws.size()];
      const auto& [mw, cw] = ws[static_cast<std::size_t>(idx) % ws.size()];
      act(mv, n, mw, cv * cw, part, nullptr);
    }
#pragma omp critical
    out += part;
  }
  return out;
}

Scalar paper_mode(const State& v, const Scalar& m) {
  auto wt = fock::weight(v);
  if (!wt) throw std::invalid_argument("paper_mode: inhomogeneous vector");
  return m + *wt - 1;
}

Check commutator_check(const State& u, int m, const State& v, const Scalar& n, const State& w) {
  for (const auto& [mu, c] : u.terms())
    if (!lattice::in_root_lattice(mu.exponent)) throw std::invalid_argument("commutator_check: u must lie in V_{P_0}");
  Check r;
  r.lhs = mode_action(u, m, mode_action(v, n, w)) - mode_action(v, n, mode_action(u, m, w));
  auto wu = fock::weight(u), wv = fock::weight(v);
  if (!wu || !wv) throw std::invalid_argument("commutator_check: inhomogeneous input");
  // {u}_k v vanishes once wt(u)+wt(v)-k-1 < 0.
  Scalar top = *wu + *wv - 1;
  for (long k = 0; k <= top; ++k) {
    State uv = mode_action(u, k, v);
    if (uv.empty()) continue;
    Scalar b = 1;  // binom(m, k) for any integer m
    for (long j = 0; j < k; ++j) b = b * (m - j) / (j + 1);
    if (b == 0) continue;
    r.rhs += b * mode_action(uv, Scalar(m) + n - k, w);
  }
  r.pass = r.lhs == r.rhs;
  return r;
}

Check derivative_check(const State& v, const State& w, const Scalar& n) {
  for (const auto& [mv, c] : v.terms())
    if (!lattice::in_root_lattice(mv.exponent)) throw std::invalid_argument("derivative_check: v must lie in V_{P_0}");
  Check r;
  State lv = mode_action(virasoro::omega_e6().state, 0, v);
  r.lhs = mode_action(lv, n, w);
  r.rhs = (-n) * mode_action(v, n - 1, w);
  r.pass = r.lhs == r.rhs;
  return r;
}

ModeOperator::ModeOperator(State v, Scalar n) : v_(std::move(v)), n_(std::move(n)) {}

State ModeOperator::operator()(const Monomial& m) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return *it->second;
  }
  auto img = std::make_shared<const State>(mode_action_serial(v_, n_, State::from(m)));
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(m, img);
  return *img;
}

State ModeOperator::operator()(const State& w) const {
  State out;
  for (const auto& [m, c] : w.terms()) {
    State img = (*this)(m);
    img *= c;
    out += img;
  }
  return out;
}

std::size_t ModeOperator::cached() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

}  // namespace e6voa::vertex
