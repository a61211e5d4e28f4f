#include "e6voa/scalar.hpp"

#include <stdexcept>

namespace e6voa {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return std::invalid_argument("not a rational: \"" + s + "\""); };
  if (s.empty()) throw bad();
  auto digits = [](const std::string& t, size_t from) {
    if (from >= t.size()) return false;
    for (size_t i = from; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  size_t sign = (!num.empty() && num[0] == '-') ? 1 : 0;
  if (!digits(num, sign) || !digits(den, 0)) throw bad();
  Scalar q;
  q.get_num() = mpz_class(num);
  q.get_den() = mpz_class(den);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace e6voa
