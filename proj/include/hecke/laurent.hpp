/*
  laurent.hpp

  Exact arithmetic in Z[v, v^{-1}], the coefficient ring of the affine
  Hecke algebra (v^2 plays the role of q).  Coefficients are arbitrary
  precision integers; there is no floating point anywhere in this
  library.  Values are immutable in spirit: every operation returns a
  fresh polynomial in canonical form (no zero coefficients stored).
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <map>
#include <string>

namespace hecke {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

class Laurent {
public:
  Laurent() = default;
  Laurent(long n);
  explicit Laurent(Int n);

  // c * v^e
  static Laurent term(Int c, int e);
  static Laurent v_pow(int e) { return term(1, e); }

  bool is_zero() const { return c_.empty(); }
  int min_exp() const; // requires nonzero
  int max_exp() const; // requires nonzero
  Int coeff(int e) const;
  const std::map<int, Int>& terms() const { return c_; }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator*=(const Laurent& o);
  bool operator==(const Laurent& o) const { return c_ == o.c_; }
  bool operator!=(const Laurent& o) const { return c_ != o.c_; }
  bool operator<(const Laurent& o) const { return c_ < o.c_; }

  // v^shift * this lies in Z[q] = Z[v^2], i.e. all shifted exponents are
  // even and nonnegative.
  bool in_q_after_shift(int shift) const;

  // Exact evaluation at v = sqrt_q.  Throws std::invalid_argument unless
  // sqrt_q^2 == q and sqrt_q != 0.
  Rat eval(const Rat& q, const Rat& sqrt_q) const;

  // Sum of coefficients = evaluation at v = 1 (q = 1).
  Int eval_at_one() const;

  // gcd of all coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const;

  // Exact division: quotient of a by b when b divides a in Z[v,v^{-1}].
  // Returns false (and leaves out untouched) when b does not divide a.
  static bool div_exact(const Laurent& a, const Laurent& b, Laurent& out);

  // "c*v^e + ..." with exponents descending; "0" for zero.
  std::string str() const;

  // Display in q = v^2.  Even-exponent polynomials print as Laurent
  // polynomials in q; uniform odd parity prints as the paper-style
  // prefix form q^{-k/2}(...); mixed parity falls back to str().
  std::string q_str() const;

private:
  std::map<int, Int> c_; // exponent of v -> nonzero coefficient
  void trim(int e);
};

Laurent operator*(const Int& c, const Laurent& p);

// Fraction num/den over Z[v,v^{-1}], den nonzero.  Reduced by integer
// content and a v-power shift only; no polynomial gcd is attempted.
class LaurentFraction {
public:
  LaurentFraction() : num_(0), den_(1) {}
  LaurentFraction(Laurent num, Laurent den);
  LaurentFraction(const Laurent& p) : num_(p), den_(1) {}

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  LaurentFraction operator+(const LaurentFraction& o) const;
  LaurentFraction operator*(const LaurentFraction& o) const;
  bool operator==(const LaurentFraction& o) const;
  bool operator!=(const LaurentFraction& o) const { return !(*this == o); }

  std::string str() const;

private:
  Laurent num_, den_;
  void normalize();
};

} // namespace hecke
