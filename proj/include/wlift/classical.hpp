#pragma once

#include <string>
#include <vector>

#include "wlift/root_datum.hpp"
#include "wlift/weyl.hpp"

namespace wlift {

using Partition = std::vector<int>;

/// Partitions of n, parts non-increasing, in decreasing lexicographic order.
std::vector<Partition> partitions(int n);
std::vector<Partition> odd_partitions(int n);
std::string partition_to_string(const Partition& p);
/// Accepts "[2,1,1]", "2,1,1" or "(2,1,1)".
Partition parse_partition(const std::string& text);
int lcm_of_parts(const Partition& p);

/// Columns are the simple coroots in the orthonormal basis e_1..e_m
/// (m = rank + 1 for type A, m = rank otherwise). Types A, B, C, D only.
RatMat standard_basis(const RootDatum& rd);
RatVec to_standard(const RootDatum& rd, const RatVec& coroot_coords);
/// Projects onto the coroot span for type A.
RatVec from_standard(const RootDatum& rd, const RatVec& std_coords);

/// Signed permutation: entry i (0-based) is +-(k+1) when e_{i+1} maps to +-e_{k+1}.
using SignedPerm = std::vector<int>;

/// Signed permutation of x acting on the standard basis.
SignedPerm to_signed_permutation(const RootDatum& rd, const TwistedWeylElt& x);
/// Builds (w, j) with w delta^j acting as sp. Type D uses j = 1 for an odd number of sign changes.
TwistedWeylElt from_signed_permutation(const RootDatum& rd, const SignedPerm& sp);

/// E(P): negative cycles on consecutive blocks (B, C, D, twisted D);
/// for twisted A the element c w_0 delta with c a product of block Coxeter elements.
TwistedWeylElt classical_representative(const RootDatum& rd, const Partition& p);

/// Partition labelling the (twisted) elliptic class of x. Throws on non-classical or
/// non-elliptic input.
Partition class_label_classical(const RootDatum& rd, const TwistedWeylElt& x);

}  // namespace wlift
