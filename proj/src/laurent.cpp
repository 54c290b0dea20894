/*
  laurent.cpp
*/

#include "hecke/laurent.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <sstream>
#include <stdexcept>

namespace hecke {

Laurent::Laurent(long n) {
  if (n != 0) c_[0] = n;
}

Laurent::Laurent(Int n) {
  if (n != 0) c_[0] = std::move(n);
}

Laurent Laurent::term(Int c, int e) {
  Laurent p;
  if (c != 0) p.c_[e] = std::move(c);
  return p;
}

int Laurent::min_exp() const {
  if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

int Laurent::max_exp() const {
  if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

Int Laurent::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Int(0) : it->second;
}

void Laurent::trim(int e) {
  auto it = c_.find(e);
  if (it != c_.end() && it->second == 0) c_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.c_) {
    c_[e] += c;
    trim(e);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.c_) {
    c_[e] -= c;
    trim(e);
  }
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : c_)
    for (const auto& [e2, c2] : o.c_) {
      r.c_[e1 + e2] += c1 * c2;
      r.trim(e1 + e2);
    }
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  *this = *this * o;
  return *this;
}

Laurent operator*(const Int& c, const Laurent& p) {
  return Laurent(c) * p;
}

bool Laurent::in_q_after_shift(int shift) const {
  for (const auto& [e, c] : c_) {
    int s = e + shift;
    if (s < 0 || s % 2 != 0) return false;
  }
  return true;
}

Rat Laurent::eval(const Rat& q, const Rat& sqrt_q) const {
  if (sqrt_q == Rat(0) || sqrt_q * sqrt_q != q)
    throw std::invalid_argument("eval: sqrt_q^2 != q or sqrt_q == 0");
  Rat acc(0);
  for (const auto& [e, c] : c_) {
    Rat p(1);
    for (int i = 0; i < (e < 0 ? -e : e); ++i) p *= sqrt_q;
    if (e < 0) p = Rat(1) / p;
    acc += Rat(c) * p;
  }
  return acc;
}

Int Laurent::eval_at_one() const {
  Int s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

Int Laurent::content() const {
  Int g = 0;
  for (const auto& [e, c] : c_) g = boost::integer::gcd(g, c < 0 ? Int(-c) : c);
  return g;
}

bool Laurent::div_exact(const Laurent& a, const Laurent& b, Laurent& out) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    out = Laurent();
    return true;
  }
  // Long division from the top; an exact quotient has minimal exponent
  // a.min_exp() - b.min_exp(), which bounds the loop.
  const int qmin = a.min_exp() - b.min_exp();
  const int db = b.max_exp();
  const Int& lb = b.c_.rbegin()->second;
  Laurent rem = a;
  Laurent q;
  while (!rem.is_zero()) {
    int da = rem.max_exp();
    if (da - db < qmin) return false;
    const Int& la = rem.c_.rbegin()->second;
    if (la % lb != 0) return false;
    Laurent t = term(la / lb, da - db);
    q += t;
    rem -= t * b;
  }
  out = q;
  return true;
}

namespace {

std::string monomial(const Int& c, int e, const char* var, bool first) {
  std::ostringstream os;
  Int a = c < 0 ? Int(-c) : c;
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (e == 0) {
    os << a;
  } else {
    if (a != 1) os << a << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

} // namespace

std::string Laurent::str() const {
  if (c_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    s += monomial(it->second, it->first, "v", first);
    first = false;
  }
  return s;
}

std::string Laurent::q_str() const {
  if (c_.empty()) return "0";
  bool all_even = true, all_odd = true;
  for (const auto& [e, c] : c_) ((e % 2 + 2) % 2 == 0 ? all_odd : all_even) = false;
  if (all_even) {
    // Ascending, the way the tables in the literature are printed.
    std::string s;
    bool first = true;
    for (const auto& [e, c] : c_) {
      s += monomial(c, e / 2, "q", first);
      first = false;
    }
    return s;
  }
  if (all_odd) {
    int k = -min_exp(); // v^k * this is a polynomial in q
    std::string s;
    bool first = true;
    for (const auto& [e, c] : c_) {
      s += monomial(c, (e + k) / 2, "q", first);
      first = false;
    }
    std::ostringstream os;
    os << "q^{" << -k << "/2}*(" << s << ")";
    return os.str();
  }
  return str();
}

LaurentFraction::LaurentFraction(Laurent num, Laurent den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("fraction with zero denominator");
  normalize();
}

void LaurentFraction::normalize() {
  if (num_.is_zero()) {
    den_ = Laurent(1);
    return;
  }
  int shift = -den_.min_exp();
  num_ = num_ * Laurent::v_pow(shift);
  den_ = den_ * Laurent::v_pow(shift);
  Int g = boost::integer::gcd(num_.content(), den_.content());
  if (den_.coeff(den_.min_exp()) < 0) g = -g;
  if (g != 0 && g != 1) {
    Laurent n2, d2;
    Laurent::div_exact(num_, Laurent(g), n2);
    Laurent::div_exact(den_, Laurent(g), d2);
    num_ = n2;
    den_ = d2;
  } else if (g == -1) {
    num_ = -num_;
    den_ = -den_;
  }
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const {
  return LaurentFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LaurentFraction LaurentFraction::operator*(const LaurentFraction& o) const {
  return LaurentFraction(num_ * o.num_, den_ * o.den_);
}

bool LaurentFraction::operator==(const LaurentFraction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string LaurentFraction::str() const {
  if (den_ == Laurent(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace hecke
