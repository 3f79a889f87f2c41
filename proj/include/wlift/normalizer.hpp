#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "wlift/root_datum.hpp"
#include "wlift/weyl.hpp"

namespace wlift {

/// t * sigma(w) * delta^j with t a torsion point of T.
struct NormalizerElt {
  TorusElt t;
  WeylElt w;
  int j = 0;
  bool operator==(const NormalizerElt& o) const { return t == o.t && w == o.w && j == o.j; }
  bool operator!=(const NormalizerElt& o) const { return !(*this == o); }
};

/// Good-element data: pairs (S_i, d_i), S_i given by 1-based simple indices.
using GoodData = std::vector<std::pair<std::vector<int>, int>>;

NormalizerElt normalizer_identity(const RootDatum& rd);
/// Canonical Tits lift (0, w, j).
NormalizerElt sigma(const RootDatum& rd, const TwistedWeylElt& x);
NormalizerElt torus_part(const RootDatum& rd, const TorusElt& t);
TwistedWeylElt projection(const NormalizerElt& x);

NormalizerElt multiply(const RootDatum& rd, const NormalizerElt& x, const NormalizerElt& y);
NormalizerElt power(const RootDatum& rd, const NormalizerElt& x, std::int64_t k);
NormalizerElt inverse(const RootDatum& rd, const NormalizerElt& x);
/// g x g^-1.
NormalizerElt conjugate(const RootDatum& rd, const NormalizerElt& g, const NormalizerElt& x);
std::int64_t order_elt(const RootDatum& rd, const NormalizerElt& x);

/// Torus component of sigma(x)^{o(x)}.
TorusElt sigma_power(const RootDatum& rd, const TwistedWeylElt& x);

/// (w rho-check - rho-check)(-1) for a twisted involution x.
TorusElt involution_square(const RootDatum& rd, const TwistedWeylElt& x);

/// (sum d_i rho-check(S_i))(-1); d_i even, S_1 > S_2 > ... strictly nested.
TorusElt sigma_power_via_good_data(const RootDatum& rd, const GoodData& good);

}  // namespace wlift
