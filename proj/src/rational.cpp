#include "kplane/rational.hpp"

#include <cctype>
#include <ostream>

namespace kplane {

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto is_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(s)) throw std::invalid_argument("bad rational literal: " + std::string(s));
    return Rational(mpz_class(std::string(s)));
  }
  const std::string_view ns = s.substr(0, slash);
  const std::string_view ds = s.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds)) throw std::invalid_argument("bad rational literal: " + std::string(s));
  mpz_class d{std::string(ds)};
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
  return Rational(mpz_class{std::string(ns)}, d);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::invalid_argument("simplest_between: empty interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_between(-hi, -lo);
  // Now 0 < lo <= hi. Walk the continued-fraction expansion; the first place
  // the expansions of lo and hi diverge admits an integer pick.
  mpz_class f = lo.floor();
  if (Rational(mpz_class(f + 1)) <= hi) {
    // Some integer >= 1 lies in the interval; the smallest one is simplest.
    mpz_class c = lo.is_integer() ? lo.floor() : mpz_class(lo.floor() + 1);
    return Rational(c);
  }
  if (lo.is_integer()) return lo;
  Rational fl{f};
  Rational inner = simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
  return fl + Rational(1) / inner;
}

}  // namespace kplane
