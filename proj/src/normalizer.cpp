#include "wlift/normalizer.hpp"

#include <algorithm>
#include <stdexcept>

namespace wlift {

NormalizerElt normalizer_identity(const RootDatum& rd) {
  return {torus_identity(rd), weyl_identity(rd), 0};
}

NormalizerElt sigma(const RootDatum& rd, const TwistedWeylElt& x) {
  return {torus_identity(rd), x.w, x.j % rd.delta_order()};
}

NormalizerElt torus_part(const RootDatum& rd, const TorusElt& t) { return {t, weyl_identity(rd), 0}; }

TwistedWeylElt projection(const NormalizerElt& x) { return {x.w, x.j}; }

NormalizerElt multiply(const RootDatum& rd, const NormalizerElt& x, const NormalizerElt& y) {
  if (x.t.coords.size() != static_cast<std::size_t>(rd.rank()) ||
      y.t.coords.size() != static_cast<std::size_t>(rd.rank()))
    throw std::invalid_argument("normalizer elements belong to a different datum");
  // delta^j moves t' by D^j, then sigma(w) moves it by w.
  RatVec t = x.t.coords + act(action_matrix(rd, {x.w, x.j}), y.t.coords);
  IntMat m = x.w.m;
  Word word = reduced_word(rd, y.w);
  for (int letter : word) {
    int a = rd.delta_index(letter, x.j) - 1;
    bool descent = is_right_descent(m, a);
    right_multiply_reflection(rd, m, a);
    if (descent) {
      // sigma(u) sigma_a = sigma(u s_a) m_a = (u s_a)(m_a) sigma(u s_a).
      for (int r = 0; r < rd.rank(); ++r)
        if (m(r, a) != 0) t[r] += Rational(static_cast<long>(m(r, a))) / 2;
    }
  }
  return {torus_from_cochar(rd, t), {m}, (x.j + y.j) % rd.delta_order()};
}

NormalizerElt power(const RootDatum& rd, const NormalizerElt& x, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("negative exponent");
  NormalizerElt result = normalizer_identity(rd);
  NormalizerElt base = x;
  while (k > 0) {
    if (k & 1) result = multiply(rd, result, base);
    k >>= 1;
    if (k) base = multiply(rd, base, base);
  }
  return result;
}

NormalizerElt inverse(const RootDatum& rd, const NormalizerElt& x) {
  // sigma(w^-1) sigma(w) = t0, so sigma(w)^-1 = (-t0) sigma(w^-1).
  WeylElt winv = inverse(x.w);
  NormalizerElt t0 = multiply(rd, sigma(rd, untwisted(winv)), sigma(rd, untwisted(x.w)));
  NormalizerElt sinv{torus_neg(rd, t0.t), winv, 0};
  int r = rd.delta_order();
  NormalizerElt dinv = sigma(rd, {weyl_identity(rd), (r - x.j) % r});
  return multiply(rd, multiply(rd, dinv, sinv), torus_part(rd, torus_neg(rd, x.t)));
}

NormalizerElt conjugate(const RootDatum& rd, const NormalizerElt& g, const NormalizerElt& x) {
  return multiply(rd, multiply(rd, g, x), inverse(rd, g));
}

std::int64_t order_elt(const RootDatum& rd, const NormalizerElt& x) {
  std::int64_t o = order(rd, projection(x));
  NormalizerElt y = power(rd, x, o);
  if (!y.w.m.is_identity() || y.j != 0) throw std::logic_error("power does not project to identity");
  return o * order_torus(rd, y.t).get_si();
}

TorusElt sigma_power(const RootDatum& rd, const TwistedWeylElt& x) {
  std::int64_t o = order(rd, x);
  return power(rd, sigma(rd, x), o).t;
}

TorusElt involution_square(const RootDatum& rd, const TwistedWeylElt& x) {
  if (!twisted_involution_test(rd, x)) throw std::invalid_argument("element is not a twisted involution");
  RatVec rho = rd.rho_check();
  RatVec diff = act(action_matrix(rd, x), rho) - rho;
  return torus_from_cochar(rd, Rational(1, 2) * diff);
}

TorusElt sigma_power_via_good_data(const RootDatum& rd, const GoodData& good) {
  RatVec sum(rd.rank(), Rational(0));
  for (std::size_t i = 0; i < good.size(); ++i) {
    const auto& [S, d] = good[i];
    if (d <= 0 || d % 2 != 0) throw std::invalid_argument("good-data exponents must be even and positive");
    if (i > 0) {
      const auto& prev = good[i - 1].first;
      bool subset = std::all_of(S.begin(), S.end(), [&](int s) {
        return std::find(prev.begin(), prev.end(), s) != prev.end();
      });
      if (!subset || S.size() >= prev.size())
        throw std::invalid_argument("good-data subsets must be strictly decreasing");
    }
    sum = sum + Rational(d) * rd.rho_check(S);
  }
  return torus_from_cochar(rd, Rational(1, 2) * sum);
}

}  // namespace wlift
