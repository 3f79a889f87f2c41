#include "wlift/classical.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace wlift {

namespace {

void gen_partitions(int n, int maxp, Partition& cur, std::vector<Partition>& out, bool odd) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, maxp); p >= 1; --p) {
    if (odd && p % 2 == 0) continue;
    cur.push_back(p);
    gen_partitions(n - p, p, cur, out, odd);
    cur.pop_back();
  }
}

char classical_family(const RootDatum& rd) {
  char f = rd.family();
  if (f != 'A' && f != 'B' && f != 'C' && f != 'D')
    throw std::invalid_argument("classical type required, got " + rd.type_label());
  return f;
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out, false);
  return out;
}

std::vector<Partition> odd_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n, cur, out, true);
  return out;
}

std::string partition_to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::string num;
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      num.push_back(ch);
    } else if (ch == ',' || ch == ' ' || ch == '[' || ch == ']' || ch == '(' || ch == ')') {
      if (!num.empty()) p.push_back(std::stoi(num));
      num.clear();
    } else {
      throw std::invalid_argument("bad partition: " + text);
    }
  }
  if (!num.empty()) p.push_back(std::stoi(num));
  if (p.empty()) throw std::invalid_argument("empty partition");
  for (int a : p)
    if (a < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(p.rbegin(), p.rend());
  return p;
}

int lcm_of_parts(const Partition& p) {
  int l = 1;
  for (int a : p) l = std::lcm(l, a);
  return l;
}

RatMat standard_basis(const RootDatum& rd) {
  char f = classical_family(rd);
  int n = rd.rank();
  int m = f == 'A' ? n + 1 : n;
  RatMat e(m, n);
  for (int i = 0; i + 1 < n; ++i) {
    e(i, i) = 1;
    e(i + 1, i) = -1;
  }
  switch (f) {
    case 'A':
      e(n - 1, n - 1) = 1;
      e(n, n - 1) = -1;
      break;
    case 'B':
      e(n - 1, n - 1) = 2;
      break;
    case 'C':
      e(n - 1, n - 1) = 1;
      break;
    case 'D':
      e(n - 2, n - 1) = 1;
      e(n - 1, n - 1) = 1;
      break;
  }
  return e;
}

RatVec to_standard(const RootDatum& rd, const RatVec& c) { return standard_basis(rd) * c; }

namespace {

// Left inverse (E^T E)^-1 E^T of the standard basis matrix.
RatMat left_inverse(const RatMat& e) {
  RatMat et = e.transpose();
  return inverse(et * e) * et;
}

}  // namespace

RatVec from_standard(const RootDatum& rd, const RatVec& v) {
  return left_inverse(standard_basis(rd)) * v;
}

SignedPerm to_signed_permutation(const RootDatum& rd, const TwistedWeylElt& x) {
  char f = classical_family(rd);
  RatMat e = standard_basis(rd);
  RatMat l = to_rational(action_matrix(rd, x));
  RatMat p = e * l * left_inverse(e);
  int m = e.rows();
  if (f == 'A') {
    Rational s = (x.j % 2 == 0) ? Rational(1, m) : Rational(-1, m);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) p(i, k) += s;
  }
  SignedPerm sp(m, 0);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i) {
      if (p(i, k) == 1) sp[k] = i + 1;
      else if (p(i, k) == -1) sp[k] = -(i + 1);
      else if (p(i, k) != 0) throw std::logic_error("not a signed permutation matrix");
    }
  for (int v : sp)
    if (v == 0) throw std::logic_error("not a signed permutation matrix");
  return sp;
}

TwistedWeylElt from_signed_permutation(const RootDatum& rd, const SignedPerm& sp) {
  char f = classical_family(rd);
  RatMat e = standard_basis(rd);
  int m = e.rows();
  if (static_cast<int>(sp.size()) != m) throw std::invalid_argument("signed permutation has wrong size");
  RatMat p(m, m);
  int negatives = 0;
  for (int k = 0; k < m; ++k) {
    int v = sp[k];
    p(std::abs(v) - 1, k) = v > 0 ? 1 : -1;
    if (v < 0) ++negatives;
  }
  int j = 0;
  if (f == 'A') {
    if (negatives != 0 && negatives != m) throw std::invalid_argument("not an element of W(A) delta^j");
    if (negatives == m) {
      if (!rd.has_delta()) throw std::invalid_argument("twisted type A element needs delta");
      j = 1;
    }
  } else if (f == 'D' && negatives % 2 == 1) {
    if (!rd.has_delta() || rd.delta_order() != 2)
      throw std::invalid_argument("odd sign changes in type D need the flip delta");
    j = 1;
  }
  RatMat l = left_inverse(e) * p * e;
  IntMat li = to_integer(l);
  TwistedWeylElt x = from_action(rd, li, j);
  if (to_signed_permutation(rd, x) != sp) throw std::invalid_argument("not an element of the Weyl group");
  return x;
}

TwistedWeylElt classical_representative(const RootDatum& rd, const Partition& p) {
  char f = classical_family(rd);
  int n = rd.rank();
  int total = std::accumulate(p.begin(), p.end(), 0);
  if (f == 'A') {
    if (total != n + 1) throw std::invalid_argument("partition size must be n for A_{n-1}");
    if (!rd.has_delta()) {
      if (p.size() != 1) throw std::invalid_argument("only the Coxeter class is elliptic in type A");
      return untwisted(coxeter_element(rd));
    }
    for (int a : p)
      if (a % 2 == 0) throw std::invalid_argument("twisted type A classes have all parts odd");
    Word c;
    int start = 0;
    for (int a : p) {
      for (int k = start + 1; k < start + a; ++k) c.push_back(k);
      start += a;
    }
    return {multiply(from_word(rd, c), longest_element(rd)), 1};
  }
  if (total != n) throw std::invalid_argument("partition size must equal the rank");
  SignedPerm sp(n);
  int start = 0;
  for (int a : p) {
    for (int k = 0; k + 1 < a; ++k) sp[start + k] = start + k + 2;
    sp[start + a - 1] = -(start + 1);
    start += a;
  }
  if (f == 'D' && p.size() % 2 == 1 && !rd.has_delta())
    throw std::invalid_argument("odd number of parts needs the twisted type D group");
  return from_signed_permutation(rd, sp);
}

Partition class_label_classical(const RootDatum& rd, const TwistedWeylElt& x) {
  char f = classical_family(rd);
  if (!is_elliptic(rd, x)) throw std::invalid_argument("element is not elliptic");
  SignedPerm sp = to_signed_permutation(rd, x);
  int m = static_cast<int>(sp.size());
  std::vector<bool> seen(m, false);
  Partition out;
  for (int s = 0; s < m; ++s) {
    if (seen[s]) continue;
    int len = 0, sign = 1, k = s;
    while (!seen[k]) {
      seen[k] = true;
      ++len;
      if (sp[k] < 0) sign = -sign;
      k = std::abs(sp[k]) - 1;
    }
    if (f != 'A' && sign > 0) throw std::logic_error("elliptic element with a positive cycle");
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace wlift
