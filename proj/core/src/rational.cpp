#include "gtt/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gtt {

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rat& q) {
  Rat canonical = q;
  canonical.canonicalize();  // inputs built via mpq_class(a, b) may be unreduced
  return canonical.get_str();
}

Rat binom(long n, long k) {
  if (n < 0) throw std::invalid_argument("binom requires n >= 0");
  if (k < 0 || k > n) return Rat(0);
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rat(b);
}

Rat factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial requires n >= 0");
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(f);
}

Rat pow2(long e) {
  Rat r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

}  // namespace gtt
