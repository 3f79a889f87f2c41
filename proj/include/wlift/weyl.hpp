#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wlift/matrix.hpp"
#include "wlift/root_datum.hpp"

namespace wlift {

/// Sequence of 1-based simple indices.
using Word = std::vector<int>;

/// Element of W, stored as its matrix on simple-coroot coordinates.
struct WeylElt {
  IntMat m;
  bool operator==(const WeylElt& o) const { return m == o.m; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
};

/// Element w * delta^j of W x| <delta>.
struct TwistedWeylElt {
  WeylElt w;
  int j = 0;
  bool operator==(const TwistedWeylElt& o) const { return w == o.w && j == o.j; }
  bool operator!=(const TwistedWeylElt& o) const { return !(*this == o); }
};

WeylElt weyl_identity(const RootDatum& rd);
WeylElt reflection(const RootDatum& rd, int i);
WeylElt from_word(const RootDatum& rd, const Word& word);
TwistedWeylElt from_word(const RootDatum& rd, const Word& word, int j);
TwistedWeylElt untwisted(const WeylElt& w);

IntVec act(const WeylElt& w, const IntVec& v);
RatVec act(const WeylElt& w, const RatVec& v);

/// In-place right multiplication by the simple reflection with 0-based index i.
void right_multiply_reflection(const RootDatum& rd, IntMat& m, int i);

/// True iff w(alpha_i) is negative (0-based i).
bool is_right_descent(const IntMat& m, int i);

WeylElt multiply(const WeylElt& a, const WeylElt& b);
WeylElt inverse(const WeylElt& w);
/// delta^j(w) = D^j w D^-j.
WeylElt delta_twist(const RootDatum& rd, const WeylElt& w, int j);

TwistedWeylElt multiply(const RootDatum& rd, const TwistedWeylElt& x, const TwistedWeylElt& y);
TwistedWeylElt inverse(const RootDatum& rd, const TwistedWeylElt& x);
TwistedWeylElt power(const RootDatum& rd, const TwistedWeylElt& x, std::int64_t k);
/// Matrix of the action of w delta^j on simple-coroot coordinates.
IntMat action_matrix(const RootDatum& rd, const TwistedWeylElt& x);
/// Inverse of action_matrix for a given delta exponent.
TwistedWeylElt from_action(const RootDatum& rd, const IntMat& l, int j);

/// Descent walk: smallest index with w(alpha_i) < 0 becomes the last letter.
Word reduced_word(const RootDatum& rd, const WeylElt& w);
/// Inversion count |{alpha > 0 : w(alpha) < 0}|.
int length(const RootDatum& rd, const WeylElt& w);
WeylElt longest_element(const RootDatum& rd, const std::vector<int>& S);
WeylElt longest_element(const RootDatum& rd);
WeylElt coxeter_element(const RootDatum& rd);

std::int64_t order(const RootDatum& rd, const TwistedWeylElt& x);
std::int64_t order(const RootDatum& rd, const WeylElt& w);
bool is_elliptic(const RootDatum& rd, const TwistedWeylElt& x);
/// w delta(w) = 1 with j in {0,1}; throws for j != 0 when delta has order > 2.
bool twisted_involution_test(const RootDatum& rd, const TwistedWeylElt& x);

/// Every element of W (breadth-first by length).
std::vector<WeylElt> enumerate_weyl_group(const RootDatum& rd);
/// |W| from the enumeration (or the product formula for large types).
Integer weyl_group_order(const RootDatum& rd);

/// Conjugacy classes of the coset W delta^j, each as a list of elements.
std::vector<std::vector<TwistedWeylElt>> twisted_conjugacy_classes(const RootDatum& rd, int j);

/// v x v^-1.
TwistedWeylElt conjugate(const RootDatum& rd, const WeylElt& v, const TwistedWeylElt& x);

WeylElt random_element(const RootDatum& rd, std::mt19937_64& rng);

std::string word_to_string(const Word& w);

}  // namespace wlift
