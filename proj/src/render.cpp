#include "rag/rational.hpp"

#include <cctype>

namespace rag {

std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  size_t slash = s.find('/');
  auto is_int = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(s)) return std::nullopt;
      return Rational(Integer(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    Integer d(den);
    if (mpz_sgn(d.get_mpz_t()) == 0) return std::nullopt;
    Rational r(Integer(num), d);
    r.canonicalize();
    return r;
  } catch (...) {
    return std::nullopt;
  }
}

namespace {

Integer pow10(unsigned long e) {
  Integer t;
  mpz_ui_pow_ui(t.get_mpz_t(), 10, e);
  return t;
}

}  // namespace

std::string to_decimal(const Rational& r, int digits) {
  if (digits < 1) digits = 1;
  int s = sgn(r);
  if (s == 0) return "0";
  Rational a = abs_r(r);

  // Integers that fit in the requested precision render exactly.
  if (a.get_den() == 1 && a.get_num() < pow10(digits)) {
    return (s < 0 ? "-" : "") + a.get_num().get_str();
  }

  // decimal exponent e: 10^(e-1) <= a < 10^e
  int e = 0;
  auto cmp_pow = [&](int k) {
    // a ? 10^k
    if (k >= 0) return cmp(a, Rational(pow10(k)));
    return cmp(a, Rational(1, pow10(-k)));
  };
  while (cmp_pow(e) >= 0) ++e;
  while (cmp_pow(e - 1) < 0) --e;

  // scaled = a * 10^(digits-e), rounded half-even to integer
  int k = digits - e;
  Rational scaled = a;
  if (k >= 0)
    scaled *= Rational(pow10(k));
  else
    scaled /= Rational(pow10(-k));
  Integer n = scaled.get_num() / scaled.get_den();
  Integer rem = scaled.get_num() - n * scaled.get_den();
  Integer twice = rem * 2;
  int c = cmp(twice, scaled.get_den());
  if (c > 0 || (c == 0 && mpz_odd_p(n.get_mpz_t())))
    n += 1;
  if (n == pow10(digits)) {  // carry: 9.99.. rounded up
    n = pow10(digits - 1);
    ++e;
  }

  std::string ds = n.get_str();
  std::string out;
  if (e <= 0) {
    out = "0.";
    out.append(static_cast<size_t>(-e), '0');
    out += ds;
  } else if (e >= digits) {
    out = ds;
    out.append(static_cast<size_t>(e - digits), '0');
  } else {
    out = ds.substr(0, e) + "." + ds.substr(e);
  }
  return (s < 0 ? "-" : "") + out;
}

}  // namespace rag
