#include "spg/rational.hpp"

#include <cctype>

#include "spg/errors.hpp"

namespace spg {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q = Rational(BigInt(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot);
    auto fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp))) {
      throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    BigInt whole = ip.empty() ? BigInt(0) : BigInt(std::string(ip));
    BigInt frac = fp.empty() ? BigInt(0) : BigInt(std::string(fp));
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    q = Rational(whole * scale + frac, scale);
  } else {
    if (!all_digits(s)) throw ParseError("malformed rational '" + std::string(text) + "'");
    q = Rational(BigInt(std::string(s)));
  }
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInt pow2(unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace spg
