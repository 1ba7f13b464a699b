#include "minvar/numeric.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace minvar {

namespace {

mpz_class pow10_mpz(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

long digits10(const mpz_class& v) {
  // mpz_sizeinbase may overshoot by one for base 10
  long d = static_cast<long>(mpz_sizeinbase(v.get_mpz_t(), 10));
  if (d > 1 && v < pow10_mpz(static_cast<unsigned long>(d - 1))) --d;
  return d;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

mpq_class make_rational(mpz_class num, mpz_class den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  mpq_class q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    std::string unum = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? num.substr(1) : num;
    if (!all_digits(unum) || !all_digits(den))
      throw std::invalid_argument("not a rational: " + text);
    return make_rational(mpz_class(num, 10), mpz_class(den, 10));
  }

  bool negative = false;
  size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    negative = (s[0] == '-');
    i = 1;
  }
  std::string digits;
  long frac_len = 0;
  bool seen_point = false, seen_digit = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("not a rational: " + text);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) ++frac_len;
      seen_digit = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw std::invalid_argument("not a rational: " + text);
    }
  }
  long exp10 = 0;
  if (i < s.size()) {  // exponent part
    std::string e = s.substr(i + 1);
    std::string ue = (!e.empty() && (e[0] == '-' || e[0] == '+')) ? e.substr(1) : e;
    if (!all_digits(ue)) throw std::invalid_argument("not a rational: " + text);
    exp10 = std::stol(e);
  }
  if (!seen_digit) throw std::invalid_argument("not a rational: " + text);

  mpz_class mantissa(digits.empty() ? "0" : digits, 10);  // base fixed: leading zeros are not octal
  if (negative) mantissa = -mantissa;
  long shift = exp10 - frac_len;
  if (shift >= 0)
    return make_rational(mantissa * pow10_mpz(static_cast<unsigned long>(shift)), 1);
  return make_rational(mantissa, pow10_mpz(static_cast<unsigned long>(-shift)));
}

std::string decimal_string(const mpq_class& q, int significant_digits, Rounding rounding) {
  int sig = significant_digits < 1 ? 1 : significant_digits;
  if (q == 0) return "0";
  bool negative = q < 0;
  mpz_class num = abs(q.get_num());
  mpz_class den = q.get_den();

  long guard = sig + digits10(den) - digits10(num) + 3;
  if (guard < 0) guard = 0;
  mpz_class scaled, rem;
  mpz_class shifted = num * pow10_mpz(static_cast<unsigned long>(guard));
  mpz_fdiv_qr(scaled.get_mpz_t(), rem.get_mpz_t(), shifted.get_mpz_t(), den.get_mpz_t());

  std::string digits = scaled.get_str();
  long len = static_cast<long>(digits.size());
  long exp = len - 1 - guard;  // value = d.ddd * 10^exp

  bool sticky = rem != 0;
  for (long k = sig; k < len; ++k) sticky = sticky || digits[k] != '0';
  std::string keep = digits.substr(0, std::min<long>(len, sig));

  bool bump = false;
  if (rounding == Rounding::Up) {
    bump = sticky && !negative;
  } else if (len > static_cast<long>(keep.size())) {
    bump = digits[keep.size()] >= '5';
  }
  if (bump) {
    long k = static_cast<long>(keep.size()) - 1;
    while (k >= 0 && keep[k] == '9') keep[k--] = '0';
    if (k < 0) {
      keep.insert(keep.begin(), '1');
      ++exp;
      keep.resize(sig > static_cast<long>(keep.size()) ? keep.size() : sig);
    } else {
      ++keep[k];
    }
  }
  while (keep.size() > 1 && keep.back() == '0') keep.pop_back();

  std::string body;
  if (exp >= -4 && exp < sig) {
    if (exp >= 0) {
      std::string ip = keep.substr(0, std::min<long>(exp + 1, keep.size()));
      while (static_cast<long>(ip.size()) < exp + 1) ip.push_back('0');
      std::string fp = static_cast<long>(keep.size()) > exp + 1 ? keep.substr(exp + 1) : "";
      body = fp.empty() ? ip : ip + "." + fp;
    } else {
      body = "0." + std::string(-exp - 1, '0') + keep;
    }
  } else {
    body = keep.substr(0, 1);
    if (keep.size() > 1) body += "." + keep.substr(1);
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%c%02ld", exp < 0 ? '-' : '+', exp < 0 ? -exp : exp);
    body += buf;
  }
  return negative ? "-" + body : body;
}

long double log2_mpz(const mpz_class& v) {
  if (v <= 0) throw std::domain_error("log2 of a nonpositive integer");
  size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);  // exact in base 2
  long shift = bits > 128 ? static_cast<long>(bits) - 128 : 0;
  mpz_class top = v >> static_cast<unsigned long>(shift);
  mpz_class hi = top >> 64;
  mpz_class lo = top & ((mpz_class(1) << 64) - 1);
  long double x = std::ldexp(static_cast<long double>(hi.get_ui()), 64) +
                  static_cast<long double>(lo.get_ui());
  return std::log2(x) + static_cast<long double>(shift);
}

}  // namespace minvar
