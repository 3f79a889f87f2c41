#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wlift/normalizer.hpp"
#include "wlift/root_datum.hpp"
#include "wlift/weyl.hpp"

namespace wlift {

struct RegularityReport {
  TwistedWeylElt element;
  std::int64_t order = 1;
  /// d such that some eigenvector with eigenvalue of order d avoids every root hyperplane.
  std::vector<int> regular_orders;
  /// order() itself is a regular order.
  bool z_regular = false;
  /// Candidate d -> dimension of the zeta_d-eigenspace.
  std::map<int, int> eigenspace_dim;
  /// Candidate d -> multiplicity of Phi_d in the characteristic polynomial.
  std::map<int, int> charpoly_multiplicity;
};

/// Eigenvalues of order d are tested over Q[y]/Phi_d for every divisor d of the order.
RegularityReport regularity(const RootDatum& rd, const TwistedWeylElt& x);

bool is_d_regular(const RootDatum& rd, const TwistedWeylElt& x, int d);

/// o(x) = lcm(o(delta^j), d). Throws if d is not a regular order of x.
bool order_lcm_check(const RootDatum& rd, const TwistedWeylElt& x, int d);

/// sigma(x)^{o(x)} = z_G^{o(x)/d}. Requires d > 1.
bool verify_regular_power(const RootDatum& rd, const TwistedWeylElt& x, int d);

/// For d = 1: some u with u x u^-1 = delta^j, found from a regular fixed vector moved into
/// the dominant chamber. Empty when x fixes no regular vector.
std::optional<WeylElt> conjugator_to_delta(const RootDatum& rd, const TwistedWeylElt& x);

}  // namespace wlift
