#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bialg/errors.hpp"

namespace bialg {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p", "p/q" (q > 0 after canonicalization).
Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& q);

/// num/den in canonical form. The raw two-argument mpq constructor does not
/// reduce the fraction, and non-canonical values break exact equality.
Rat frac(long num, long den);

/// Power product of named parameters; factors sorted by name, exponents >= 1.
struct Monomial {
  std::vector<std::pair<std::string, int>> factors;

  int degree() const;
  bool is_one() const { return factors.empty(); }
  bool operator==(const Monomial& o) const { return factors == o.factors; }
};

Monomial mul(const Monomial& a, const Monomial& b);

/// Graded-lexicographic order: total degree first, ties broken by exponents
/// over the sorted parameter names.
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Element of the coefficient ring: a multivariate polynomial with exact
/// rational coefficients, kept in canonical form (sorted monomials, no zero
/// terms). A Scalar without variables behaves as a plain rational under all
/// operations, so equality is decidable everywhere.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int n);
  Scalar(const Rat& q);
  static Scalar variable(const std::string& name);

  /// Grammar: sum of terms; term = [sign] factor ('*' factor)*;
  /// factor = rational | name ['^' uint]. No parentheses.
  static Scalar parse(const std::string& text);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_one() const;
  Rat rational() const;  // throws Error unless is_rational()

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar div_rat(const Rat& q) const;
  Scalar pow(int k) const;

  /// Replaces the listed variables; untouched variables stay symbolic.
  Scalar substitute(const std::map<std::string, Scalar>& bindings) const;

  std::set<std::string> variables() const;
  int total_degree() const;
  std::string str() const;

  bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const std::map<Monomial, Rat, MonomialLess>& terms() const { return terms_; }

 private:
  std::map<Monomial, Rat, MonomialLess> terms_;

  void add_term(const Monomial& m, const Rat& c);
  friend Scalar operator*(const Scalar&, const Scalar&);
};

Scalar operator+(Scalar a, const Scalar& b);
Scalar operator-(Scalar a, const Scalar& b);
Scalar operator*(const Scalar& a, const Scalar& b);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace bialg
