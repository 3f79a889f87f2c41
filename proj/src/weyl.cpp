#include "wlift/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace wlift {

WeylElt weyl_identity(const RootDatum& rd) { return {IntMat::identity(rd.rank())}; }

WeylElt reflection(const RootDatum& rd, int i) {
  if (i < 1 || i > rd.rank()) throw std::out_of_range("simple index out of range: " + std::to_string(i));
  return {rd.reflection0(i - 1)};
}

void right_multiply_reflection(const RootDatum& rd, IntMat& m, int i) {
  const IntMat& c = rd.cartan();
  int n = rd.rank();
  for (int r = 0; r < n; ++r) {
    std::int64_t x = m(r, i);
    if (x == 0) continue;
    for (int j = 0; j < n; ++j) m(r, j) -= x * c(i, j);
  }
}

bool is_right_descent(const IntMat& m, int i) {
  for (int r = 0; r < m.rows(); ++r) {
    if (m(r, i) < 0) return true;
    if (m(r, i) > 0) return false;
  }
  return false;
}

WeylElt from_word(const RootDatum& rd, const Word& word) {
  IntMat m = IntMat::identity(rd.rank());
  for (int i : word) {
    if (i < 1 || i > rd.rank()) throw std::out_of_range("simple index out of range: " + std::to_string(i));
    right_multiply_reflection(rd, m, i - 1);
  }
  return {m};
}

TwistedWeylElt from_word(const RootDatum& rd, const Word& word, int j) {
  int r = rd.delta_order();
  return {from_word(rd, word), ((j % r) + r) % r};
}

TwistedWeylElt untwisted(const WeylElt& w) { return {w, 0}; }

IntVec act(const WeylElt& w, const IntVec& v) { return w.m * v; }
RatVec act(const WeylElt& w, const RatVec& v) { return act(w.m, v); }

WeylElt multiply(const WeylElt& a, const WeylElt& b) { return {a.m * b.m}; }

WeylElt inverse(const WeylElt& w) { return {to_integer(inverse(to_rational(w.m)))}; }

WeylElt delta_twist(const RootDatum& rd, const WeylElt& w, int j) {
  if (!rd.has_delta()) return w;
  return {rd.delta_matrix(j) * w.m * rd.delta_matrix(-j)};
}

TwistedWeylElt multiply(const RootDatum& rd, const TwistedWeylElt& x, const TwistedWeylElt& y) {
  int r = rd.delta_order();
  return {multiply(x.w, delta_twist(rd, y.w, x.j)), (x.j + y.j) % r};
}

TwistedWeylElt inverse(const RootDatum& rd, const TwistedWeylElt& x) {
  int r = rd.delta_order();
  return {delta_twist(rd, inverse(x.w), -x.j), (r - x.j) % r};
}

TwistedWeylElt power(const RootDatum& rd, const TwistedWeylElt& x, std::int64_t k) {
  TwistedWeylElt result{weyl_identity(rd), 0};
  TwistedWeylElt base = x;
  while (k > 0) {
    if (k & 1) result = multiply(rd, result, base);
    base = multiply(rd, base, base);
    k >>= 1;
  }
  return result;
}

IntMat action_matrix(const RootDatum& rd, const TwistedWeylElt& x) {
  if (x.j == 0) return x.w.m;
  return x.w.m * rd.delta_matrix(x.j);
}

TwistedWeylElt from_action(const RootDatum& rd, const IntMat& l, int j) {
  if (j == 0) return {{l}, 0};
  return {{l * rd.delta_matrix(-j)}, j};
}

Word reduced_word(const RootDatum& rd, const WeylElt& w) {
  IntMat m = w.m;
  int n = rd.rank();
  Word rev;
  while (true) {
    int found = -1;
    for (int i = 0; i < n; ++i)
      if (is_right_descent(m, i)) {
        found = i;
        break;
      }
    if (found < 0) break;
    rev.push_back(found + 1);
    right_multiply_reflection(rd, m, found);
  }
  if (!m.is_identity()) throw std::logic_error("descent walk did not reach the identity");
  return Word(rev.rbegin(), rev.rend());
}

int length(const RootDatum& rd, const WeylElt& w) {
  int count = 0;
  for (const auto& cr : rd.positive_coroots()) {
    IntVec img = w.m * cr;
    for (auto x : img) {
      if (x < 0) {
        ++count;
        break;
      }
      if (x > 0) break;
    }
  }
  return count;
}

WeylElt longest_element(const RootDatum& rd, const std::vector<int>& S) {
  std::vector<bool> in(rd.rank(), false);
  for (int i : S) {
    if (i < 1 || i > rd.rank()) throw std::out_of_range("simple index out of range");
    in[i - 1] = true;
  }
  IntMat m = IntMat::identity(rd.rank());
  while (true) {
    int found = -1;
    for (int i = 0; i < rd.rank(); ++i)
      if (in[i] && !is_right_descent(m, i)) {
        found = i;
        break;
      }
    if (found < 0) break;
    right_multiply_reflection(rd, m, found);
  }
  return {m};
}

WeylElt longest_element(const RootDatum& rd) {
  std::vector<int> all(rd.rank());
  std::iota(all.begin(), all.end(), 1);
  return longest_element(rd, all);
}

WeylElt coxeter_element(const RootDatum& rd) {
  Word w(rd.rank());
  std::iota(w.begin(), w.end(), 1);
  return from_word(rd, w);
}

std::int64_t order(const RootDatum& rd, const TwistedWeylElt& x) {
  IntMat l = action_matrix(rd, x);
  IntMat p = l;
  int r = rd.delta_order();
  for (std::int64_t k = 1;; ++k) {
    if (p.is_identity() && (k * x.j) % r == 0) return k;
    if (k > 100000) throw std::logic_error("Weyl element order did not terminate");
    p = p * l;
  }
}

std::int64_t order(const RootDatum& rd, const WeylElt& w) { return order(rd, untwisted(w)); }

bool is_elliptic(const RootDatum& rd, const TwistedWeylElt& x) {
  RatMat a = to_rational(IntMat::identity(rd.rank()) - action_matrix(rd, x));
  return determinant(a) != 0;
}

bool twisted_involution_test(const RootDatum& rd, const TwistedWeylElt& x) {
  if (x.j != 0 && rd.delta_order() > 2)
    throw std::invalid_argument("twisted involutions need delta of order at most 2");
  WeylElt prod = multiply(x.w, delta_twist(rd, x.w, x.j));
  return prod.m.is_identity();
}

std::vector<WeylElt> enumerate_weyl_group(const RootDatum& rd) {
  std::unordered_set<IntMat, IntMatHash> seen;
  std::vector<WeylElt> out{weyl_identity(rd)};
  seen.insert(out[0].m);
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rd.rank(); ++i) {
      if (is_right_descent(out[k].m, i)) continue;
      IntMat m = out[k].m;
      right_multiply_reflection(rd, m, i);
      if (seen.insert(m).second) out.push_back({m});
    }
  }
  return out;
}

Integer weyl_group_order(const RootDatum& rd) {
  Integer total = 1;
  for (const auto& c : rd.components()) {
    Integer f = 1;
    int n = c.rank;
    switch (c.family) {
      case 'A':
        for (int k = 2; k <= n + 1; ++k) f *= k;
        break;
      case 'B':
      case 'C':
        for (int k = 1; k <= n; ++k) f *= 2 * k;
        break;
      case 'D':
        for (int k = 1; k <= n; ++k) f *= 2 * k;
        f /= 2;
        break;
      case 'E':
        f = n == 6 ? 51840 : (n == 7 ? 2903040 : Integer("696729600"));
        break;
      case 'F':
        f = 1152;
        break;
      case 'G':
        f = 12;
        break;
    }
    total *= f;
  }
  if (rd.components().empty()) total = static_cast<unsigned long>(enumerate_weyl_group(rd).size());
  return total;
}

std::vector<std::vector<TwistedWeylElt>> twisted_conjugacy_classes(const RootDatum& rd, int j) {
  auto group = enumerate_weyl_group(rd);
  const IntMat& d = rd.delta_matrix(j);
  std::unordered_map<IntMat, int, IntMatHash> cls;
  std::vector<std::vector<TwistedWeylElt>> out;
  for (const auto& w : group) {
    IntMat l = j == 0 ? w.m : w.m * d;
    if (cls.count(l)) continue;
    int id = static_cast<int>(out.size());
    std::vector<IntMat> members{l};
    cls[l] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (int i = 0; i < rd.rank(); ++i) {
        const IntMat& s = rd.reflection0(i);
        IntMat c = s * members[k] * s;
        if (cls.emplace(c, id).second) members.push_back(c);
      }
    }
    std::vector<TwistedWeylElt> elts;
    elts.reserve(members.size());
    for (const auto& m : members) elts.push_back(from_action(rd, m, j));
    out.push_back(std::move(elts));
  }
  return out;
}

TwistedWeylElt conjugate(const RootDatum& rd, const WeylElt& v, const TwistedWeylElt& x) {
  return multiply(rd, multiply(rd, untwisted(v), x), untwisted(inverse(v)));
}

WeylElt random_element(const RootDatum& rd, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, rd.rank() - 1);
  // A fixed word length would pin the sign character; the coin flip makes both parities reachable.
  std::size_t steps = 4 * rd.positive_coroots().size() + 8 + (rng() & 1);
  IntMat m = IntMat::identity(rd.rank());
  for (std::size_t k = 0; k < steps; ++k) right_multiply_reflection(rd, m, pick(rng));
  return {m};
}

std::string word_to_string(const Word& w) {
  bool small = std::all_of(w.begin(), w.end(), [](int i) { return i <= 9; });
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!small && k) s += ",";
    s += std::to_string(w[k]);
  }
  return s;
}

}  // namespace wlift
