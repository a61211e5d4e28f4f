#include "e6voa/qseries.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace e6voa::qseries {

TruncSeries::TruncSeries(int order, Scalar offset) : c_(static_cast<std::size_t>(std::max(order, -1) + 1)), offset_(std::move(offset)) {}

TruncSeries TruncSeries::one(int order) { return monomial(order, 0); }

TruncSeries TruncSeries::monomial(int order, long k, const Scalar& c) {
  TruncSeries s(order);
  if (k >= 0 && k <= order) s.at(k) = c;
  return s;
}

namespace {

long integer_gap(const Scalar& hi, const Scalar& lo) {
  Scalar d = hi - lo;
  if (!is_integer(d)) throw std::invalid_argument("series offsets differ by a non-integer");
  return d.get_num().get_si();
}

// Top exponent (relative to base) known exactly for both series.
long common_top(const TruncSeries& a, const TruncSeries& b, const Scalar& base) {
  return std::min(integer_gap(a.offset(), base) + a.order(), integer_gap(b.offset(), base) + b.order());
}

TruncSeries combine(const TruncSeries& a, const TruncSeries& b, int sign) {
  Scalar base = std::min(a.offset(), b.offset());
  long top = common_top(a, b, base);
  long da = integer_gap(a.offset(), base), db = integer_gap(b.offset(), base);
  TruncSeries out(static_cast<int>(top), base);
  for (long k = 0; k <= top; ++k) {
    Scalar x = a[k - da];
    if (sign > 0)
      x += b[k - db];
    else
      x -= b[k - db];
    out.at(k) = x;
  }
  return out;
}

}  // namespace

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) { return *this = combine(*this, o, 1); }
TruncSeries& TruncSeries::operator-=(const TruncSeries& o) { return *this = combine(*this, o, -1); }

TruncSeries& TruncSeries::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  int n = std::min(a.order(), b.order());
  TruncSeries out(n, a.offset() + b.offset());
  for (int i = 0; i <= n; ++i) {
    if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= n; ++j)
      if (b.c_[static_cast<std::size_t>(j)] != 0)
        out.c_[static_cast<std::size_t>(i + j)] += a.c_[static_cast<std::size_t>(i)] * b.c_[static_cast<std::size_t>(j)];
  }
  return out;
}

TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) {
  if (b.order() < 0 || b[0] == 0) throw std::domain_error("division by a series with zero constant term");
  int n = std::min(a.order(), b.order());
  TruncSeries out(n, a.offset() - b.offset());
  for (int k = 0; k <= n; ++k) {
    Scalar x = a[k];
    for (int j = 1; j <= k; ++j)
      if (b[j] != 0) x -= b[j] * out[k - j];
    out.at(k) = x / b[0];
  }
  return out;
}

TruncSeries TruncSeries::shifted(long k) const { return times_power(Scalar(k)); }

TruncSeries TruncSeries::times_power(const Scalar& r) const {
  TruncSeries s = *this;
  s.offset_ += r;
  return s;
}

TruncSeries TruncSeries::substitute(int k, int new_order) const {
  if (k < 1) throw std::invalid_argument("substitution exponent must be positive");
  long top = std::min<long>(static_cast<long>(k) * (order() + 1) - 1, new_order);
  TruncSeries out(static_cast<int>(top), offset_ * k);
  for (long i = 0; i * k <= top; ++i) out.at(i * k) = (*this)[i];
  return out;
}

TruncSeries TruncSeries::truncated(int n) const {
  TruncSeries out(std::min(n, order()), offset_);
  for (int k = 0; k <= out.order(); ++k) out.at(k) = (*this)[k];
  return out;
}

TruncSeries TruncSeries::normalized() const {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), offset_.get_num_mpz_t(), offset_.get_den_mpz_t());
  long shift = fl.get_si();
  Scalar frac_part = offset_ - Scalar(fl);
  if (shift < 0)
    for (long k = 0; k < -shift && k <= order(); ++k)
      if ((*this)[k] != 0) throw std::domain_error("series has a term below the requested offset");
  TruncSeries out(static_cast<int>(order() + shift), frac_part);
  for (long k = 0; k <= out.order(); ++k) out.at(k) = (*this)[k - shift];
  return out;
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x == 0; });
}

std::optional<long> first_difference(const TruncSeries& a, const TruncSeries& b) {
  Scalar base = std::min(a.offset(), b.offset());
  if (!is_integer(a.offset() - b.offset())) return -1;
  long top = common_top(a, b, base);
  long da = integer_gap(a.offset(), base), db = integer_gap(b.offset(), base);
  for (long k = 0; k <= top; ++k)
    if (a[k - da] != b[k - db]) return k;
  return std::nullopt;
}

bool equal(const TruncSeries& a, const TruncSeries& b) { return !first_difference(a, b); }

TruncSeries euler_phi(int N) {
  TruncSeries s = TruncSeries::one(N);
  for (int n = 1; n <= N; ++n)
    for (int k = N; k >= n; --k) s.at(k) -= s[k - n];
  return s;
}

TruncSeries partitions(int N) {
  TruncSeries s = TruncSeries::one(N);
  for (int part = 1; part <= N; ++part)
    for (int k = part; k <= N; ++k) s.at(k) += s[k - part];
  return s;
}

namespace {

void times_one_minus(TruncSeries& s, long e) {
  if (e <= 0) throw std::logic_error("factor (1 - q^e) with e <= 0");
  for (long k = s.order(); k >= e; --k) s.at(k) -= s[k - e];
}

void divide_one_minus(TruncSeries& s, long e) {
  if (e <= 0) throw std::logic_error("factor 1/(1 - q^e) with e <= 0");
  for (long k = e; k <= s.order(); ++k) s.at(k) += s[k - e];
}

TruncSeries inverse_residue_product(int m, const std::vector<int>& residues, int N) {
  TruncSeries s = TruncSeries::one(N);
  for (int n = 1; n <= N; ++n)
    if (std::find(residues.begin(), residues.end(), n % m) != residues.end()) divide_one_minus(s, n);
  return s;
}

std::vector<std::string> head(const TruncSeries& s) {
  std::vector<std::string> out;
  for (int k = 0; k < 8 && k <= s.order(); ++k) out.push_back(to_string(s[k]));
  return out;
}

}  // namespace

TruncSeries rr_a(int N) { return inverse_residue_product(5, {2, 3}, N); }
TruncSeries rr_b(int N) { return inverse_residue_product(5, {1, 4}, N); }
TruncSeries residue_product(int m, const std::vector<int>& residues, int N) {
  return inverse_residue_product(m, residues, N);
}

TruncSeries triple_product(int m, int r, int N) {
  TruncSeries s = TruncSeries::one(N);
  for (long n = 1; m * n - std::max(r, m - r) <= N; ++n) {
    times_one_minus(s, m * n);
    times_one_minus(s, m * n - r);
    times_one_minus(s, m * n - (m - r));
  }
  return s;
}

JtpResult jtp_check(int a, int b, int N) {
  if (a < 1 || b < 1) throw std::invalid_argument("JTP exponents must be positive");
  TruncSeries prod = TruncSeries::one(N);
  for (long n = 1; std::min<long>(a * n + b * (n - 1), a * (n - 1) + b * n) <= N; ++n) {
    times_one_minus(prod, (a + b) * n);
    times_one_minus(prod, a * n + b * (n - 1));
    times_one_minus(prod, a * (n - 1) + b * n);
  }
  TruncSeries sum(N);
  auto e = [&](long k) { return a * k * (k + 1) / 2 + b * k * (k - 1) / 2; };
  for (long k = 0;; ++k) {
    long ep = e(k), en = e(-k);
    if (ep > N && en > N) break;
    int sign = (k % 2) ? -1 : 1;
    if (ep <= N) sum.at(ep) += sign;
    if (k != 0 && en <= N) sum.at(en) += sign;
  }
  return {equal(prod, sum), prod, sum};
}

VirasoroCharacter feigin_fuchs_char(int s, int t, int m, int n, int N) {
  if (s < 2 || t < 2 || std::gcd(s, t) != 1 || m < 1 || m >= s || n < 1 || n >= t)
    throw std::invalid_argument("need coprime s,t >= 2 with 1 <= m < s and 1 <= n < t");
  VirasoroCharacter ch{s, t, m, n, 0, 0, {}};
  const long st = static_cast<long>(s) * t;
  ch.c = 1 - frac(6L * (s - t) * (s - t), st);
  const long d = static_cast<long>(m) * t - static_cast<long>(n) * s, p = static_cast<long>(m) * t + static_cast<long>(n) * s;
  ch.h = frac(d * d - static_cast<long>(s - t) * (s - t), 4 * st);

  // |k| <= ceil(sqrt(N/st)) + 1; beyond that both exponents exceed N.
  long K = 0;
  while (K * K * st < N) ++K;
  ++K;
  auto e1 = [&](long k) { return st * k * k + k * d; };
  auto e2 = [&](long k) { return st * k * k + p * k + static_cast<long>(m) * n; };
  for (long k : {K + 1, -(K + 1)})
    if (e1(k) <= N || e2(k) <= N) throw std::logic_error("character sum truncation bound too small");

  TruncSeries num(N);
  for (long k = -K; k <= K; ++k) {
    if (e1(k) >= 0 && e1(k) <= N) num.at(e1(k)) += 1;
    if (e2(k) >= 0 && e2(k) <= N) num.at(e2(k)) -= 1;
  }
  ch.series = (num / euler_phi(N)).times_power(ch.h - ch.c / 24);
  return ch;
}

TruncSeries congruence_split(const TruncSeries& s, int r) {
  if (!is_integer(s.offset())) throw std::invalid_argument("congruence split needs an integer offset");
  long off = s.offset().get_num().get_si();
  TruncSeries out = s;
  for (long k = 0; k <= s.order(); ++k)
    if ((((off + k) % 3) + 3) % 3 != r) out.at(k) = 0;
  return out;
}

namespace {

TruncSeries character_sum(std::initializer_list<std::pair<int, int>> mn, const Scalar& power, int N) {
  TruncSeries sum;
  bool first = true;
  for (auto [m, n] : mn) {
    TruncSeries x = feigin_fuchs_char(5, 6, m, n, N).series;
    sum = first ? x : sum + x;
    first = false;
  }
  return sum.times_power(power).normalized().truncated(N);
}

}  // namespace

TruncSeries c0(int N) { return character_sum({{1, 1}, {1, 5}}, frac(1, 30), N); }
TruncSeries d0(int N) { return character_sum({{2, 1}, {2, 5}}, frac(-11, 30), N); }
TruncSeries c1(int N) { return character_sum({{1, 3}}, frac(-19, 30), N); }
TruncSeries d1(int N) { return character_sum({{2, 3}}, frac(-1, 30), N); }

TruncSeries homogeneous_graded_dim(int coset, int N) {
  if (coset < 0 || coset > 2) throw std::invalid_argument("coset must be 0, 1 or 2");
  // Points x = sum k_i alpha_i + s with s = 0, lambda_1 or lambda_6, in root
  // coordinates y = k + s; <x,x> = y^T A y.  Enumerate y by a Cholesky
  // factorisation of A (bounds widened by one, every candidate tested exactly
  // in integers as 9 <x,x> = (3y)^T A (3y)).
  static const int A[6][6] = {{2, 0, -1, 0, 0, 0}, {0, 2, 0, -1, 0, 0},  {-1, 0, 2, -1, 0, 0},
                              {0, -1, -1, 2, -1, 0}, {0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, -1, 2}};
  // 3 * (root coordinates of lambda_1 and lambda_6)
  static const int S3[3][6] = {{0, 0, 0, 0, 0, 0}, {4, 3, 5, 6, 4, 2}, {2, 3, 4, 6, 5, 4}};
  const Scalar offset = coset == 0 ? Scalar(0) : frac(2, 3);
  const long bound9 = 18L * N + 12;  // 9 <x,x> <= 18 (N + offset)
  double r[6][6] = {};
  for (int i = 0; i < 6; ++i) {
    double d = A[i][i];
    for (int k = 0; k < i; ++k) d -= r[k][i] * r[k][i];
    r[i][i] = std::sqrt(d);
    for (int j = i + 1; j < 6; ++j) {
      double s = A[i][j];
      for (int k = 0; k < i; ++k) s -= r[k][i] * r[k][j];
      r[i][j] = s / r[i][i];
    }
  }
  TruncSeries theta(N, offset);
  std::array<long, 6> y3{};  // 3y, integral
  std::function<void(int, double)> rec = [&](int i, double used) {
    if (i < 0) {
      long q = 0;
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) q += y3[a] * A[a][b] * y3[b];
      if (q > bound9) return;
      Scalar e = frac(q, 18) - offset;  // <x,x>/2 - offset
      if (!is_integer(e)) throw std::logic_error("theta exponent off the coset grid");
      long ei = e.get_num().get_si();
      if (ei <= N) theta.at(ei) += 1;
      return;
    }
    double s = 0;
    for (int j = i + 1; j < 6; ++j) s += r[i][j] * y3[j] / 3.0;
    double rem = std::max(0.0, bound9 / 9.0 - used);
    double rad = std::sqrt(rem) / r[i][i];
    double shift = S3[coset][i] / 3.0;
    double center = -s / r[i][i] - shift;  // in terms of the integer k_i
    long lo = static_cast<long>(std::floor(center - rad)) - 1, hi = static_cast<long>(std::ceil(center + rad)) + 1;
    for (long k = lo; k <= hi; ++k) {
      y3[i] = 3 * k + S3[coset][i];
      double t = r[i][i] * y3[i] / 3.0 + s;
      double u = used + t * t;
      if (u > bound9 / 9.0 + 0.5) continue;
      rec(i - 1, u);
    }
    y3[i] = 0;
  };
  rec(5, 0.0);
  TruncSeries phi = euler_phi(N), phi6 = phi * phi * phi * phi * phi * phi;
  return theta / phi6;
}

IdentityCheck compare(const std::string& name, const std::string& description, const TruncSeries& lhs,
                      const TruncSeries& rhs) {
  IdentityCheck c;
  c.name = name;
  c.description = description;
  c.first_failure = first_difference(lhs, rhs);
  c.pass = !c.first_failure;
  Scalar base = std::min(lhs.offset(), rhs.offset());
  c.order = is_integer(lhs.offset() - rhs.offset()) ? static_cast<int>(common_top(lhs, rhs, base)) : 0;
  c.lhs_head = head(lhs);
  c.rhs_head = head(rhs);
  return c;
}

namespace {

TruncSeries signed_quadratic_sum(long a, long b, int N) {
  // sum_k (-1)^k q^{k(a k + b)/2}
  TruncSeries s(N);
  for (long k = 0;; ++k) {
    long ep = k * (a * k + b) / 2, en = k * (a * k - b) / 2;
    if (ep > N && en > N) break;
    int sign = (k % 2) ? -1 : 1;
    if (ep <= N) s.at(ep) += sign;
    if (k && en <= N) s.at(en) += sign;
  }
  return s;
}

IdentityCheck nonneg_integral(const std::string& name, const std::string& description, const TruncSeries& s,
                              bool leading_one) {
  IdentityCheck c;
  c.name = name;
  c.description = description;
  c.order = s.order();
  c.pass = true;
  for (long k = 0; k <= s.order(); ++k)
    if (!is_integer(s[k]) || s[k] < 0) {
      c.pass = false;
      c.first_failure = k;
      break;
    }
  if (leading_one && s[0] != 1) {
    c.pass = false;
    c.first_failure = 0;
  }
  c.lhs_head = head(s);
  return c;
}

TruncSeries G(int N) { return triple_product(15, 7, N) - triple_product(15, 2, N).shifted(1); }
TruncSeries H(int N) { return triple_product(15, 4, N) + triple_product(15, 1, N).shifted(1); }

}  // namespace

IdentityCheck ramanujan_identity_check(int N) {
  TruncSeries p1 = euler_phi(N), p3 = euler_phi(N).substitute(3, N), p9 = euler_phi(N).substitute(9, N);
  TruncSeries a1 = rr_a(N), a9 = rr_a(N).substitute(9, N), b1 = rr_b(N), b9 = rr_b(N).substitute(9, N);
  TruncSeries lhs = p3 * p3;
  TruncSeries rhs = (p1 * p9 * a1 * a9).shifted(2) + p1 * p9 * b1 * b9;
  auto c = compare("ramanujan", "phi(t^3)^2 = t^2 phi(t)phi(t^9)a(t)a(t^9) + phi(t)phi(t^9)b(t)b(t^9)", lhs,
                   rhs.truncated(N));
  return c;
}

std::vector<IdentityCheck> jtp_checks(int N) {
  std::vector<IdentityCheck> out;
  const std::pair<int, int> uv[] = {{8, 7}, {13, 2}, {11, 4}, {1, 14}, {12, 3}, {9, 6}, {4, 1}, {3, 2}};
  for (auto [a, b] : uv) {
    auto r = jtp_check(a, b, N);
    std::string tag = std::to_string(a) + "-" + std::to_string(b);
    out.push_back(compare("jtp-" + tag,
                          "triple product with u = q^" + std::to_string(a) + ", v = q^" + std::to_string(b), r.product,
                          r.sum));
  }
  return out;
}

std::vector<IdentityCheck> basic_series_checks(int N) {
  std::vector<IdentityCheck> out;
  TruncSeries phi = euler_phi(N);
  out.push_back(compare("phi-partitions", "phi(q) * sum p(n) q^n = 1", phi * partitions(N), TruncSeries::one(N)));
  out.push_back(compare("phi-pentagonal", "phi(q) = sum (-1)^k q^{k(3k-1)/2}", phi, signed_quadratic_sum(3, -1, N)));
  out.push_back(compare("rr-a-sum", "phi(q)a(q) = sum (-1)^k q^{k(5k+3)/2}", phi * rr_a(N), signed_quadratic_sum(5, 3, N)));
  out.push_back(compare("rr-b-sum", "phi(q)b(q) = sum (-1)^k q^{k(5k+1)/2}", phi * rr_b(N), signed_quadratic_sum(5, 1, N)));
  out.push_back(compare("rr-a-product", "phi(q)a(q) = prod (1-q^{5n})(1-q^{5n-1})(1-q^{5n-4})", phi * rr_a(N),
                        triple_product(5, 1, N)));
  out.push_back(compare("rr-b-product", "phi(q)b(q) = prod (1-q^{5n})(1-q^{5n-2})(1-q^{5n-3})", phi * rr_b(N),
                        triple_product(5, 2, N)));
  return out;
}

std::vector<IdentityCheck> char_product_identities(int N) {
  std::vector<IdentityCheck> out;
  TruncSeries phi = euler_phi(N);
  TruncSeries phi3 = phi.substitute(3, N);
  out.push_back(compare("char-sum-11-15", "phi q^{1/30}(chi^{1,1} + chi^{1,5}) = P(7,8) - q P(13,2)", phi * c0(N), G(N)));
  out.push_back(compare("char-sum-21-25", "phi q^{-11/30}(chi^{2,1} + chi^{2,5}) = P(4,11) + q P(14,1)", phi * d0(N),
                        H(N)));
  out.push_back(compare("char-13", "phi q^{-19/30} chi^{1,3} = phi(q^3)a(q^3)", phi * c1(N),
                        phi3 * rr_a(N).substitute(3, N)));
  out.push_back(compare("char-23", "phi q^{-1/30} chi^{2,3} = phi(q^3)b(q^3)", phi * d1(N),
                        phi3 * rr_b(N).substitute(3, N)));
  return out;
}

std::vector<IdentityCheck> congruence_split_checks(int N) {
  std::vector<IdentityCheck> out;
  TruncSeries phi = euler_phi(N);
  TruncSeries aphi = rr_a(N) * phi, bphi = rr_b(N) * phi;
  TruncSeries phi9 = phi.substitute(9, N);
  TruncSeries zero(N);
  out.push_back(compare("split-aphi-2", "[a(t)phi(t)]_2 = 0", congruence_split(aphi, 2), zero));
  out.push_back(compare("split-bphi-1", "[b(t)phi(t)]_1 = 0", congruence_split(bphi, 1), zero));
  out.push_back(compare("split-aphi-0", "[a(t)phi(t)]_0 = b(t^9)phi(t^9)", congruence_split(aphi, 0),
                        rr_b(N).substitute(9, N) * phi9));
  out.push_back(compare("split-aphi-1", "[a(t)phi(t)]_1 = -t H(t^3)", congruence_split(aphi, 1),
                        Scalar(-1) * H(N).substitute(3, N).shifted(1).normalized().truncated(N)));
  out.push_back(compare("split-bphi-0", "[b(t)phi(t)]_0 = G(t^3)", congruence_split(bphi, 0), G(N).substitute(3, N)));

  TruncSeries b2 = congruence_split(bphi, 2);
  TruncSeries a9 = rr_a(N).substitute(9, N), b9 = rr_b(N).substitute(9, N);
  auto proof_form = Scalar(-1) * (a9 * phi9).shifted(2).normalized().truncated(N);
  auto statement_form = Scalar(-1) * (a9 * b9).shifted(2).normalized().truncated(N);
  auto c = compare("split-bphi-2", "[b(t)phi(t)]_2 = -t^2 a(t^9)phi(t^9)", b2, proof_form);
  auto alt = first_difference(b2, statement_form);
  c.note = alt ? "the variant -t^2 a(t^9)b(t^9) fails first at t^" + std::to_string(*alt)
               : "the variant -t^2 a(t^9)b(t^9) also agrees through this order";
  out.push_back(c);

  for (auto [name, s] : {std::pair<std::string, TruncSeries>{"a", aphi}, {"b", bphi}}) {
    TruncSeries sum = congruence_split(s, 0) + congruence_split(s, 1) + congruence_split(s, 2);
    out.push_back(compare("split-sum-" + name, "the three congruence parts of " + name + "(t)phi(t) sum to it", sum, s));
  }
  return out;
}

std::vector<IdentityCheck> branching_identity_check(int module, int N) {
  std::vector<IdentityCheck> out;
  TruncSeries phi = euler_phi(N);
  TruncSeries lhs = phi.substitute(3, N) / phi;
  TruncSeries a = rr_a(N), b = rr_b(N);
  if (module == 0) {
    TruncSeries c = c0(N), d = d0(N);
    out.push_back(nonneg_integral("branching-lambda0-c", "c^0(t) has nonnegative integer coefficients, c^0(0) = 1", c, true));
    out.push_back(nonneg_integral("branching-lambda0-d", "d^0(t) has nonnegative integer coefficients, d^0(0) = 1", d, true));
    TruncSeries rhs = c.substitute(3, N) * a + (d.substitute(3, N) * b).shifted(1).normalized().truncated(N);
    out.push_back(compare("branching-lambda0", "phi(t^3)/phi(t) = c^0(t^3)a(t) + t d^0(t^3)b(t)", lhs, rhs));
  } else if (module == 1 || module == 6) {
    std::string tag = "branching-lambda" + std::to_string(module);
    TruncSeries c = c1(N), d = d1(N);
    out.push_back(nonneg_integral(tag + "-c", "c(t) has nonnegative integer coefficients", c, true));
    out.push_back(nonneg_integral(tag + "-d", "d(t) has nonnegative integer coefficients", d, true));
    TruncSeries rhs = (c.substitute(3, N) * a).shifted(2).normalized().truncated(N) + d.substitute(3, N) * b;
    out.push_back(compare(tag, "phi(t^3)/phi(t) = t^2 c(t^3)a(t) + d(t^3)b(t)", lhs, rhs));
  } else {
    throw std::invalid_argument("module must be 0, 1 or 6");
  }
  return out;
}

std::vector<IdentityCheck> principal_graded_dims(int N) {
  std::vector<IdentityCheck> out;
  TruncSeries phi = euler_phi(N);
  auto ph = [&](int k) { return phi.substitute(k, N); };
  TruncSeries fe6 = residue_product(12, {1, 11, 4, 8, 5, 7}, N);
  TruncSeries ff4 = residue_product(12, {1, 11, 5, 7}, N);
  out.push_back(compare("principal-e6-product", "prod_{n = +-1,+-4,+-5 mod 12} 1/(1-v^n) = eta quotient", fe6,
                        ph(2) * ph(3) * ph(12) / (ph(1) * ph(4) * ph(6))));
  out.push_back(compare("principal-f4-product", "prod_{n = +-1,+-5 mod 12} 1/(1-v^n) = eta quotient", ff4,
                        ph(2) * ph(3) / (ph(1) * ph(6))));

  TruncSeries w0 = ff4 * rr_a(N).substitute(4, N), w4 = ff4 * rr_b(N).substitute(4, N);
  const int Nt = N / 12 + 1;
  TruncSeries c0v = c0(Nt).substitute(12, N), d0v = d0(Nt).substitute(12, N);
  TruncSeries c1v = c1(Nt).substitute(12, N), d1v = d1(Nt).substitute(12, N);
  out.push_back(compare("principal-lambda0", "F(E6) = c^0(v^12) gr W0 + v^4 d^0(v^12) gr W4", fe6,
                        c0v * w0 + (d0v * w4).shifted(4).normalized().truncated(N)));
  out.push_back(compare("principal-lambda1", "F(E6) = v^8 c^1(v^12) gr W0 + d^1(v^12) gr W4", fe6,
                        (c1v * w0).shifted(8).normalized().truncated(N) + d1v * w4));

  // The t-identity read at t = v^4 against the quotient computed directly in v.
  const int Nq = N / 4 + 1;
  TruncSeries pt = euler_phi(Nq);
  TruncSeries lhs_t = (pt.substitute(3, Nq) / pt).substitute(4, N);
  out.push_back(compare("principal-substitution", "phi(t^3)/phi(t) at t = v^4 equals phi(v^12)/phi(v^4)", lhs_t,
                        ph(12) / ph(4)));
  return out;
}

std::vector<IdentityCheck> all_identities(int n_t, int n_v) {
  std::vector<IdentityCheck> out;
  auto append = [&](std::vector<IdentityCheck> v) { out.insert(out.end(), v.begin(), v.end()); };
  append(basic_series_checks(n_t));
  append(jtp_checks(n_t));
  append(char_product_identities(n_t));
  out.push_back(ramanujan_identity_check(n_t));
  append(congruence_split_checks(n_t));
  for (int m : {0, 1, 6}) append(branching_identity_check(m, n_t));
  append(principal_graded_dims(n_v));
  return out;
}

std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  for (const auto& c : all_identities(4, 12)) names.push_back(c.name);
  return names;
}

std::vector<IdentityCheck> identities_by_name(const std::string& name, int n_t, int n_v) {
  std::vector<IdentityCheck> out;
  for (auto& c : all_identities(n_t, n_v))
    if (c.name.rfind(name, 0) == 0) out.push_back(std::move(c));
  return out;
}

}  // namespace e6voa::qseries
