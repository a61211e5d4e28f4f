#pragma once

#include <optional>
#include <string>
#include <vector>

#include "e6voa/scalar.hpp"

namespace e6voa::qseries {

// q^offset * sum_{k=0}^{N} c_k q^k, exact through order N.
class TruncSeries {
 public:
  TruncSeries() = default;
  explicit TruncSeries(int order, Scalar offset = 0);
  static TruncSeries one(int order);
  // c q^k (k may exceed the order, giving zero)
  static TruncSeries monomial(int order, long k, const Scalar& c = 1);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& offset() const { return offset_; }
  Scalar operator[](long k) const { return k >= 0 && k <= order() ? c_[static_cast<std::size_t>(k)] : Scalar(0); }
  Scalar& at(long k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  // Offsets must differ by an integer; the result is expressed from the
  // smaller offset and keeps the surviving common order.
  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Scalar& s);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const Scalar& s, TruncSeries a) { return a *= s; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  // Requires b's leading coefficient to be nonzero.
  friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);

  // Multiply by q^k (integer k), keeping the order relative to the new offset.
  TruncSeries shifted(long k) const;
  // Multiply by q^r for a rational r (moves the offset only).
  TruncSeries times_power(const Scalar& r) const;
  // q -> q^k, order becomes min(k * order, new_order).
  TruncSeries substitute(int k, int new_order) const;
  TruncSeries truncated(int order) const;
  // Move all integer part of the offset into the coefficients (offset in [0,1)).
  TruncSeries normalized() const;
  bool is_zero() const;

 private:
  std::vector<Scalar> c_;
  Scalar offset_;
};

// Coefficientwise comparison through the common order after offset
// reconciliation; nullopt on agreement, otherwise the first differing power
// (relative to the smaller offset), or -1 when offsets are incompatible.
std::optional<long> first_difference(const TruncSeries& a, const TruncSeries& b);
bool equal(const TruncSeries& a, const TruncSeries& b);

TruncSeries euler_phi(int N);
TruncSeries partitions(int N);  // sum p(n) q^n, counted directly
TruncSeries rr_a(int N);
TruncSeries rr_b(int N);
// prod over n>=1 of (1 - q^{m n}) (1 - q^{m n - r}) (1 - q^{m n - (m - r)})
TruncSeries triple_product(int m, int r, int N);
// prod over 0 < n with n mod m in residues of 1/(1 - q^n)
TruncSeries residue_product(int m, const std::vector<int>& residues, int N);

struct JtpResult {
  bool pass;
  TruncSeries product, sum;
};
// u = q^a, v = q^b
JtpResult jtp_check(int a, int b, int N);

struct VirasoroCharacter {
  int s, t, m, n;
  Scalar h, c;
  TruncSeries series;  // offset h - c/24
};
// Throws std::invalid_argument on parameters outside the minimal-model range.
VirasoroCharacter feigin_fuchs_char(int s, int t, int m, int n, int N);

// Keep only powers congruent to r mod 3 (offset must be an integer).
TruncSeries congruence_split(const TruncSeries& s, int r);

// Branching coefficient series in t with integer exponents.
TruncSeries c0(int N);
TruncSeries d0(int N);
TruncSeries c1(int N);
TruncSeries d1(int N);

// Graded dimension theta_{P_i}(q) / phi(q)^6 of the coset V_{P_i}.
TruncSeries homogeneous_graded_dim(int coset, int N);

struct IdentityCheck {
  std::string name;
  std::string description;
  int order = 0;
  bool pass = false;
  std::optional<long> first_failure;
  std::vector<std::string> lhs_head, rhs_head;  // first 8 coefficients
  std::string note;
};

IdentityCheck compare(const std::string& name, const std::string& description, const TruncSeries& lhs,
                      const TruncSeries& rhs);

IdentityCheck ramanujan_identity_check(int N);
std::vector<IdentityCheck> jtp_checks(int N);
std::vector<IdentityCheck> basic_series_checks(int N);
std::vector<IdentityCheck> char_product_identities(int N);
std::vector<IdentityCheck> congruence_split_checks(int N);
// module: 0, 1 or 6
std::vector<IdentityCheck> branching_identity_check(int module, int N);
std::vector<IdentityCheck> principal_graded_dims(int N);

// Every identity, in a fixed order; n_t for series in t or q, n_v in v.
std::vector<IdentityCheck> all_identities(int n_t = 100, int n_v = 120);
// Names accepted by identity_by_name.
std::vector<std::string> identity_names();
// Checks whose name equals or starts with the given name.
std::vector<IdentityCheck> identities_by_name(const std::string& name, int n_t, int n_v);

}  // namespace e6voa::qseries
