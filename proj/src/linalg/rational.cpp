#include "pvclift/linalg/rational.hpp"

#include <stdexcept>

namespace pvclift::linalg {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

Integer pow10(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return make_rational(parse_integer(text, text), Integer(1));
  }
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return make_rational(num, den);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal needs at least one digit");
  if (q == 0) return "0";
  const bool negative = q < 0;
  Integer a = abs(q.get_num());
  const Integer& b = q.get_den();

  // k with 10^k <= a/b < 10^(k+1)
  long k = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  auto below = [&](long e) {  // a/b < 10^e
    return e >= 0 ? a < b * pow10(e) : a * pow10(-e) < b;
  };
  while (!below(k + 1)) ++k;
  while (below(k)) --k;

  // N = round(a/b * 10^(digits-1-k)), half to even
  const long shift = digits - 1 - k;
  Integer scaled_num = shift >= 0 ? Integer(a * pow10(shift)) : a;
  Integer scaled_den = shift >= 0 ? b : Integer(b * pow10(-shift));
  Integer n, rem;
  mpz_fdiv_qr(n.get_mpz_t(), rem.get_mpz_t(), scaled_num.get_mpz_t(), scaled_den.get_mpz_t());
  const int cmp_half = cmp(Integer(rem * 2), scaled_den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(n.get_mpz_t()))) n += 1;
  if (n == pow10(digits)) {
    n /= 10;
    ++k;
  }

  std::string s = n.get_str();
  std::string out;
  if (k >= 0 && k < digits) {
    out = s.substr(0, k + 1);
    std::string frac = s.substr(k + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out += "." + frac;
  } else if (k < 0 && k > -8) {
    std::string frac = std::string(-k - 1, '0') + s;
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = "0." + frac;
  } else {
    std::string frac = s.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out = s.substr(0, 1) + (frac.empty() ? "" : "." + frac) + "e" + std::to_string(k);
  }
  return negative ? "-" + out : out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rational power(const Rational& base, unsigned exp) {
  Rational r(1);
  Rational b = base;
  while (exp > 0) {
    if (exp & 1u) r *= b;
    exp >>= 1;
    if (exp) b *= b;
  }
  return r;
}

}  // namespace pvclift::linalg
