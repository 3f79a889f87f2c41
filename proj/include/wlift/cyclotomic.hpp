#pragma once

#include <map>
#include <string>
#include <vector>

#include "wlift/matrix.hpp"
#include "wlift/rational.hpp"

namespace wlift {

/// Dense polynomial, coefficient of y^k at index k, no trailing zeros (zero is empty).
using Poly = std::vector<Rational>;

Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
int poly_degree(const Poly& p);

/// Phi_d by repeated division of y^d - 1 by Phi_e for proper divisors e.
const Poly& cyclotomic(int d);

/// det(yI - M) by Faddeev-LeVerrier.
Poly characteristic_polynomial(const IntMat& m);

/// Largest k with Phi_d^k dividing p.
int cyclotomic_multiplicity(const Poly& p, int d);

/// Factorization into cyclotomic polynomials as d -> multiplicity; throws if p is not such a product.
std::map<int, int> cyclotomic_factorization(const Poly& p);
/// "Phi2^2*Phi6" style.
std::string factorization_label(const std::map<int, int>& f);

/// The field Q[y]/Phi_d with zeta = class of y.
class CyclotomicField {
 public:
  explicit CyclotomicField(int d);
  int order() const { return d_; }
  Poly zeta() const;
  Poly reduce(const Poly& p) const;
  Poly add(const Poly& a, const Poly& b) const;
  Poly sub(const Poly& a, const Poly& b) const;
  Poly mul(const Poly& a, const Poly& b) const;
  Poly inv(const Poly& a) const;
  static bool is_zero(const Poly& a) { return a.empty(); }

  /// Basis of {v : (M - zeta I) v = 0} over the field.
  std::vector<std::vector<Poly>> eigenspace(const IntMat& m) const;

 private:
  int d_;
  Poly phi_;
};

}  // namespace wlift
