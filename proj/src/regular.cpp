#include "wlift/regular.hpp"

#include <numeric>
#include <stdexcept>

#include "wlift/cyclotomic.hpp"

namespace wlift {

namespace {

bool eigenspace_has_regular_vector(const RootDatum& rd, const std::vector<std::vector<Poly>>& basis,
                                   const CyclotomicField& field) {
  if (basis.empty()) return false;
  for (const auto& f : rd.root_functionals()) {
    bool vanishes = true;
    for (const auto& v : basis) {
      Poly s;
      for (int j = 0; j < rd.rank(); ++j)
        if (f[j] != 0) s = field.add(s, field.mul(Poly{Rational(static_cast<long>(f[j]))}, v[j]));
      if (!CyclotomicField::is_zero(s)) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) return false;
  }
  return true;
}

}  // namespace

bool is_d_regular(const RootDatum& rd, const TwistedWeylElt& x, int d) {
  CyclotomicField field(d);
  return eigenspace_has_regular_vector(rd, field.eigenspace(action_matrix(rd, x)), field);
}

RegularityReport regularity(const RootDatum& rd, const TwistedWeylElt& x) {
  RegularityReport rep;
  rep.element = x;
  rep.order = order(rd, x);
  IntMat l = action_matrix(rd, x);
  Poly chi = characteristic_polynomial(l);
  for (int d = 1; d <= rep.order; ++d) {
    if (rep.order % d) continue;
    CyclotomicField field(d);
    auto basis = field.eigenspace(l);
    rep.eigenspace_dim[d] = static_cast<int>(basis.size());
    rep.charpoly_multiplicity[d] = cyclotomic_multiplicity(chi, d);
    if (eigenspace_has_regular_vector(rd, basis, field)) rep.regular_orders.push_back(d);
  }
  for (int d : rep.regular_orders)
    if (d == rep.order) rep.z_regular = true;
  return rep;
}

bool order_lcm_check(const RootDatum& rd, const TwistedWeylElt& x, int d) {
  if (!is_d_regular(rd, x, d)) throw std::invalid_argument("d is not a regular order of the element");
  int r = rd.delta_order();
  int rj = r / std::gcd(r, x.j);
  return order(rd, x) == std::lcm<std::int64_t>(rj, d);
}

bool verify_regular_power(const RootDatum& rd, const TwistedWeylElt& x, int d) {
  if (d <= 1) throw std::invalid_argument("d = 1 is handled by conjugator_to_delta");
  std::int64_t o = order(rd, x);
  if (o % d) return false;
  TorusElt expected = torus_scale(rd, z_G(rd), o / d);
  return sigma_power(rd, x) == expected;
}

std::optional<WeylElt> conjugator_to_delta(const RootDatum& rd, const TwistedWeylElt& x) {
  int n = rd.rank();
  IntMat l = action_matrix(rd, x);
  RatMat a = to_rational(l - IntMat::identity(n));
  auto fixed = kernel(a);
  if (fixed.empty()) return std::nullopt;
  // Regular fixed vector: sum of t^k b_k avoids each root hyperplane for all but finitely many t.
  std::size_t bound = rd.positive_roots().size() * fixed.size() + 2;
  RatVec v;
  bool found = false;
  for (std::size_t t = 1; t <= bound && !found; ++t) {
    v.assign(n, Rational(0));
    Rational c = 1;
    for (const auto& b : fixed) {
      v = v + c * b;
      c *= static_cast<long>(t);
    }
    found = true;
    for (const auto& f : rd.root_functionals()) {
      Rational s = 0;
      for (int j = 0; j < n; ++j) s += Rational(static_cast<long>(f[j])) * v[j];
      if (s == 0) {
        found = false;
        break;
      }
    }
  }
  if (!found) return std::nullopt;
  IntMat u = IntMat::identity(n);
  while (true) {
    int neg = -1;
    for (int i = 0; i < n && neg < 0; ++i) {
      Rational s = 0;
      for (int j = 0; j < n; ++j) s += Rational(static_cast<long>(rd.cartan()(i, j))) * v[j];
      if (s < 0) neg = i;
    }
    if (neg < 0) break;
    v = act(rd.reflection0(neg), v);
    u = rd.reflection0(neg) * u;
  }
  WeylElt uw{u};
  TwistedWeylElt c = conjugate(rd, uw, x);
  if (!c.w.m.is_identity()) throw std::logic_error("regular fixed vector did not give a conjugate of delta");
  return uw;
}

}  // namespace wlift
