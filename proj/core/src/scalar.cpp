#include "quanthelly/scalar.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "quanthelly/error.hpp"

namespace quanthelly {

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' ||
      den[0] == '+') {
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  }
  std::string n(num.front() == '+' ? num.substr(1) : num);
  Integer d{std::string(den)};
  if (d == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Scalar out(Integer(n), d);
  out.canonicalize();
  return out;
}

std::string format_scalar(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_decimal(const Scalar& value, int digits) {
  mpf_class f(value, 256);
  std::ostringstream os;
  os << std::setprecision(digits) << f;
  return os.str();
}

Integer floor_of(const Scalar& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Scalar& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Scalar abs_of(const Scalar& value) { return value < 0 ? Scalar(-value) : value; }

SqrtBounds sqrt_bounds(const Scalar& value, unsigned bits) {
  if (value < 0) throw InvalidArgument("sqrt of negative rational");
  if (value == 0) return {Scalar(0), Scalar(0)};
  Scalar root;
  if (exact_sqrt(value, root)) return {root, root};
  // sqrt(n/d) = sqrt(n*d) / d; scale by 4^bits before the integer sqrt.
  Integer radicand = value.get_num() * value.get_den();
  mpz_mul_2exp(radicand.get_mpz_t(), radicand.get_mpz_t(), 2 * bits);
  Integer s;
  mpz_sqrt(s.get_mpz_t(), radicand.get_mpz_t());
  Integer scale = value.get_den();
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Scalar lo(s, scale);
  Scalar hi(Integer(s + 1), scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

bool exact_sqrt(const Scalar& value, Scalar& root) {
  if (value < 0) return false;
  if (mpz_perfect_square_p(value.get_num_mpz_t()) == 0 ||
      mpz_perfect_square_p(value.get_den_mpz_t()) == 0) {
    return false;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), value.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), value.get_den_mpz_t());
  root = Scalar(n, d);
  root.canonicalize();
  return true;
}

Scalar pow2(int exponent) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent >= 0 ? Scalar(p) : Scalar(Integer(1), p);
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer lcm_of(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

std::vector<Scalar> primitive_integer_vector(const std::vector<Scalar>& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm_of(den, x.get_den());
  Integer g = 0;
  std::vector<Integer> ints;
  ints.reserve(v.size());
  for (const auto& x : v) {
    Integer n = x.get_num() * (den / x.get_den());
    ints.push_back(n);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  if (g == 0) return v;
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& n : ints) out.emplace_back(Integer(n / g));
  return out;
}

}  // namespace quanthelly
