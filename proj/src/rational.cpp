#include "orthant/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace orthant {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto valid_integer = [](std::string_view part) {
    std::size_t i = 0;
    if (i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + s + "'");
  }
  if (num.front() == '+') num.erase(num.begin());
  Integer p(num, 10);
  Integer q(den, 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  const Integer& num = value.get_num();
  const Integer& den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  Rational root(sqrt(num), sqrt(den));
  root.canonicalize();
  return root;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double log_abs(const Integer& value) {
  if (value == 0) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  double mantissa = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exp2) * std::log(2.0);
}

double log_abs(const Rational& value) {
  if (value == 0) return -std::numeric_limits<double>::infinity();
  return log_abs(value.get_num()) - log_abs(value.get_den());
}

double log_abs(double value) { return std::log(std::fabs(value)); }

std::vector<double> to_double(std::span<const Rational> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_d());
  return out;
}

Rational approximate_rational(double value, long max_denominator) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
  bool negative = value < 0;
  double x = std::fabs(value);
  // Convergents h/k of the continued fraction of x.
  long h_prev = 1, h = static_cast<long>(std::floor(x));
  long k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  while (frac > 1e-12) {
    double inv = 1.0 / frac;
    long a = static_cast<long>(std::floor(inv));
    long k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    long h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - static_cast<double>(a);
  }
  Rational r(negative ? -h : h, k);
  r.canonicalize();
  return r;
}

}  // namespace orthant
