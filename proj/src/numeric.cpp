#include "delbound/numeric.hpp"

#include "delbound/caps.hpp"
#include "delbound/errors.hpp"

#include <cstdio>
#include <limits>

namespace delbound {

BigInt binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ipow(std::int64_t base, std::int64_t exponent) {
  if (exponent < 0) throw DomainError("ipow: negative exponent");
  BigInt r = 1;
  BigInt b = base;
  while (exponent) {
    if (exponent & 1) r *= b;
    b *= b;
    exponent >>= 1;
  }
  return r;
}

std::string to_fraction_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt pow10(int e) { return ipow(10, e); }

// Compares |value| against 10^e.
int cmp_pow10(const BigInt& num, const BigInt& den, int e) {
  BigInt lhs = num, rhs = den;
  if (e >= 0)
    rhs *= pow10(e);
  else
    lhs *= pow10(-e);
  return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

}  // namespace

std::string to_decimal_string(const Rational& value, int digits) {
  if (digits < 1) throw DomainError("to_decimal_string: digits must be positive");
  if (value == 0) return "0";

  std::string out;
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (num < 0) {
    out.push_back('-');
    num = -num;
  }

  int e = static_cast<int>(num.str().size()) - static_cast<int>(den.str().size());
  while (cmp_pow10(num, den, e) < 0) --e;
  while (cmp_pow10(num, den, e + 1) >= 0) ++e;

  // m = round(|value| * 10^(digits-1-e)), half to even.
  const int shift = digits - 1 - e;
  BigInt sn = num, sd = den;
  if (shift >= 0)
    sn *= pow10(shift);
  else
    sd *= pow10(-shift);
  BigInt m = sn / sd;
  const BigInt twice_rem = 2 * (sn % sd);
  if (twice_rem > sd || (twice_rem == sd && (m & 1) != 0)) ++m;
  if (m == pow10(digits)) {
    m /= 10;
    ++e;
  }

  std::string mantissa = m.str();
  if (e < -4 || e >= digits) {
    std::string frac = mantissa.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out += mantissa.substr(0, 1);
    if (!frac.empty()) out += "." + frac;
    char exp[16];
    std::snprintf(exp, sizeof exp, "e%c%02d", e < 0 ? '-' : '+', e < 0 ? -e : e);
    out += exp;
    return out;
  }

  std::string int_part, frac_part;
  if (e >= 0) {
    int_part = mantissa.substr(0, static_cast<std::size_t>(e) + 1);
    frac_part = mantissa.substr(static_cast<std::size_t>(e) + 1);
  } else {
    int_part = "0";
    frac_part = std::string(static_cast<std::size_t>(-e - 1), '0') + mantissa;
  }
  while (!frac_part.empty() && frac_part.back() == '0') frac_part.pop_back();
  out += int_part;
  if (!frac_part.empty()) out += "." + frac_part;
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (q != 0 && r > std::numeric_limits<std::uint64_t>::max() / q)
      return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

void require_string_space(std::uint64_t q, std::uint64_t n, const EnumerationCaps& caps,
                          const std::string& what) {
  const std::uint64_t size = saturating_pow(q, n);
  if (size > caps.max_strings)
    throw ResourceError(what + ": " + std::to_string(q) + "^" + std::to_string(n) +
                            " strings exceed the enumeration cap",
                        size, caps.max_strings);
}

}  // namespace delbound
