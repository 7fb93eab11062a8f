#include "pqp/rat.hpp"

#include <cctype>
#include <sstream>

namespace pqp {

Rat make_rat(long n, long d) {
  if (d == 0) throw StructureError("rational with zero denominator");
  Rat v(n, d);
  v.canonicalize();
  return v;
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = (s[0] == '-');
    s = s.substr(1);
  }
  if (s.empty()) throw StructureError("empty rational literal");

  Rat v;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw StructureError("malformed rational '" + text + "'");
    mpz_class p(num, 10), q(den, 10);
    if (q == 0) throw StructureError("zero denominator in '" + text + "'");
    v = Rat(p) / Rat(q);
  } else if (dot != std::string::npos) {
    std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty()) ip = "0";
    if (!all_digits(ip) || (!fp.empty() && !all_digits(fp)))
      throw StructureError("malformed decimal '" + text + "'");
    mpz_class scale = 1;
    for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
    mpz_class whole(ip, 10);
    mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(fp, 10);
    v = Rat(whole * scale + frac) / Rat(scale);
  } else {
    if (!all_digits(s)) throw StructureError("malformed rational '" + text + "'");
    v = Rat(mpz_class(s, 10));
  }
  if (neg) v = -v;
  v.canonicalize();
  return v;
}

std::string rat_str(const Rat& v) { return v.get_str(); }

namespace {

// Exact count of base-10 digits of z > 0.
long digits10(const mpz_class& z) {
  size_t n = mpz_sizeinbase(z.get_mpz_t(), 10);  // exact or one too large
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(n - 1));
  return z < p10 ? static_cast<long>(n) - 1 : static_cast<long>(n);
}

mpz_class pow10z(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return p;
}

// floor(p / q) with the tie (exact .5) rounded to the nearest even integer.
mpz_class div_half_even(const mpz_class& p, const mpz_class& q) {
  mpz_class quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_class twice = 2 * rem;
  int c = cmp(twice, q);
  if (c > 0 || (c == 0 && mpz_odd_p(quo.get_mpz_t()))) quo += 1;
  return quo;
}

}  // namespace

std::string rat_decimal(const Rat& v, int sig_digits) {
  if (sig_digits < 1) sig_digits = 1;
  if (sgn(v) == 0) return "0";
  bool neg = sgn(v) < 0;
  mpz_class p = abs(v.get_num());
  mpz_class q = v.get_den();

  // exponent e with 10^e <= p/q < 10^(e+1)
  long e = digits10(p) - digits10(q);
  if (e >= 0 ? p < q * pow10z(e) : p * pow10z(-e) < q) e -= 1;

  long shift = sig_digits - 1 - e;
  mpz_class m = shift >= 0 ? div_half_even(p * pow10z(shift), q)
                           : div_half_even(p, q * pow10z(-shift));
  if (m == pow10z(sig_digits)) {  // rounding carried into a new digit
    m = pow10z(sig_digits - 1);
    e += 1;
  }

  std::string digits = m.get_str();
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

  std::string out;
  if (e >= 0 && e <= 20) {
    if (static_cast<long>(digits.size()) <= e) digits.append(e + 1 - digits.size(), '0');
    out = digits.substr(0, e + 1);
    if (digits.size() > static_cast<size_t>(e + 1)) out += "." + digits.substr(e + 1);
  } else if (e < 0 && e >= -6) {
    out = "0." + std::string(-e - 1, '0') + digits;
  } else {
    out = digits.substr(0, 1);
    if (digits.size() > 1) out += "." + digits.substr(1);
    out += "e" + std::to_string(e);
  }
  return neg ? "-" + out : out;
}

std::string vec_str(const std::vector<Rat>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].get_str();
  }
  return os.str();
}

}  // namespace pqp
