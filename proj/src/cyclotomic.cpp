#include "wlift/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>

namespace wlift {

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return poly_trim(c);
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return poly_trim(c);
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = poly_trim(a);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, Rational(0));
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    r = poly_trim(r);
  }
  return {poly_trim(q), r};
}

const Poly& cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic index must be positive");
  static std::recursive_mutex mu;
  static std::map<int, Poly> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  Poly p(d + 1, Rational(0));
  p[0] = -1;
  p[d] = 1;
  for (int e = 1; e < d; ++e) {
    if (d % e) continue;
    auto [q, r] = poly_divmod(p, cyclotomic(e));
    if (!r.empty()) throw std::logic_error("cyclotomic division left a remainder");
    p = q;
  }
  return cache.emplace(d, p).first->second;
}

Poly characteristic_polynomial(const IntMat& m) {
  int n = m.rows();
  RatMat a = to_rational(m);
  // c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k.
  Poly c(n + 1, Rational(0));
  c[n] = 1;
  RatMat mk(n, n);
  for (int k = 1; k <= n; ++k) {
    RatMat next = a * mk;
    for (int i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    RatMat am = a * mk;
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / k;
  }
  return c;
}

int cyclotomic_multiplicity(const Poly& p, int d) {
  const Poly& phi = cyclotomic(d);
  Poly cur = poly_trim(p);
  int k = 0;
  while (!cur.empty()) {
    auto [q, r] = poly_divmod(cur, phi);
    if (!r.empty()) break;
    cur = q;
    ++k;
  }
  return k;
}

std::map<int, int> cyclotomic_factorization(const Poly& p) {
  std::map<int, int> out;
  Poly cur = poly_trim(p);
  int deg = poly_degree(cur);
  for (int d = 1; poly_degree(cur) > 0 && d <= 4 * deg * deg + 8; ++d) {
    if (poly_degree(cyclotomic(d)) > poly_degree(cur)) continue;
    int k = 0;
    while (true) {
      auto [q, r] = poly_divmod(cur, cyclotomic(d));
      if (!r.empty()) break;
      cur = q;
      ++k;
    }
    if (k) out[d] = k;
  }
  if (poly_degree(cur) != 0) throw std::invalid_argument("polynomial is not a product of cyclotomics");
  return out;
}

std::string factorization_label(const std::map<int, int>& f) {
  std::string s;
  for (auto [d, k] : f) {
    if (!s.empty()) s += "*";
    s += "Phi" + std::to_string(d);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "1" : s;
}

CyclotomicField::CyclotomicField(int d) : d_(d), phi_(cyclotomic(d)) {}

Poly CyclotomicField::zeta() const { return reduce(Poly{Rational(0), Rational(1)}); }

Poly CyclotomicField::reduce(const Poly& p) const { return poly_divmod(p, phi_).second; }

Poly CyclotomicField::add(const Poly& a, const Poly& b) const {
  Poly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return poly_trim(c);
}

Poly CyclotomicField::sub(const Poly& a, const Poly& b) const { return poly_sub(a, b); }

Poly CyclotomicField::mul(const Poly& a, const Poly& b) const { return reduce(poly_mul(a, b)); }

Poly CyclotomicField::inv(const Poly& a) const {
  if (a.empty()) throw std::domain_error("inverse of zero");
  // Extended Euclid: s*a + t*phi = g, g a nonzero constant since phi is irreducible.
  Poly r0 = phi_, r1 = reduce(a);
  Poly s0{}, s1{Rational(1)};
  while (poly_degree(r1) > 0) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  if (r1.empty()) throw std::domain_error("element is not invertible");
  Rational c = 1 / r1[0];
  Poly out = s1;
  for (auto& x : out) x *= c;
  return reduce(out);
}

std::vector<std::vector<Poly>> CyclotomicField::eigenspace(const IntMat& m) const {
  int n = m.rows();
  Poly z = zeta();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Poly e = m(i, j) ? Poly{Rational(static_cast<long>(m(i, j)))} : Poly{};
      a[i][j] = i == j ? sub(e, z) : e;
    }
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (!is_zero(a[i][c])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Poly iv = inv(a[r][c]);
    for (int j = 0; j < n; ++j) a[r][j] = mul(a[r][j], iv);
    for (int i = 0; i < n; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      Poly f = a[i][c];
      for (int j = 0; j < n; ++j) a[i][j] = sub(a[i][j], mul(f, a[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(n, false);
  for (int c : pivots) is_piv[c] = true;
  std::vector<std::vector<Poly>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<Poly> v(n);
    v[f] = Poly{Rational(1)};
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = sub(Poly{}, a[k][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace wlift
