#include "wlift/root_datum.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <regex>
#include <set>
#include <stdexcept>

namespace wlift {

IntMat cartan_matrix(char family, int n) {
  auto bad = [&] {
    throw std::invalid_argument(std::string("invalid simple type ") + family + std::to_string(n));
  };
  if (n < 1) bad();
  IntMat c = IntMat::identity(n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](int i, int j, int a = -1, int b = -1) {
    c(i, j) = a;
    c(j, i) = b;
  };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      if (n < 2) bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);
      break;
    case 'C':
      if (n < 2) bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);
      break;
    case 'D':
      if (n < 2) bad();
      if (n >= 3) {
        for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
        link(n - 3, n - 1);
      }
      break;
    case 'E':
      if (n < 6 || n > 8) bad();
      link(0, 2);
      link(1, 3);
      link(2, 3);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      if (n != 4) bad();
      link(0, 1);
      link(1, 2, -2, -1);
      link(2, 3);
      break;
    case 'G':
      if (n != 2) bad();
      link(0, 1, -1, -3);
      break;
    default:
      bad();
  }
  return c;
}

std::vector<SimpleComponent> parse_type_label(const std::string& label) {
  std::vector<SimpleComponent> out;
  static const std::regex part(R"(([A-Ga-g])\s*(\d+))");
  std::string rest;
  for (char ch : label)
    if (!std::isspace(static_cast<unsigned char>(ch))) rest.push_back(ch);
  if (rest.empty()) throw std::invalid_argument("empty type label");
  int offset = 0;
  std::size_t pos = 0;
  while (pos < rest.size()) {
    std::smatch m;
    std::string tail = rest.substr(pos);
    if (!std::regex_search(tail, m, part, std::regex_constants::match_continuous))
      throw std::invalid_argument("unknown type label: " + label);
    SimpleComponent c{static_cast<char>(std::toupper(m[1].str()[0])), std::stoi(m[2]), offset};
    cartan_matrix(c.family, c.rank);
    out.push_back(c);
    offset += c.rank;
    pos += m.length(0);
    if (pos < rest.size()) {
      if (rest[pos] != 'x' && rest[pos] != 'X' && rest[pos] != '*')
        throw std::invalid_argument("unknown type label: " + label);
      ++pos;
      if (pos == rest.size()) throw std::invalid_argument("unknown type label: " + label);
    }
  }
  return out;
}

void validate_cartan(const IntMat& c) {
  int n = c.rows();
  if (n == 0 || c.cols() != n) throw std::invalid_argument("Cartan matrix must be square");
  for (int i = 0; i < n; ++i) {
    if (c(i, i) != 2) throw std::invalid_argument("Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) throw std::invalid_argument("Cartan off-diagonal entry is positive");
      if ((c(i, j) == 0) != (c(j, i) == 0))
        throw std::invalid_argument("Cartan zero pattern is not symmetric");
    }
  }
  // Symmetrize: find d with d_i C_ij = d_j C_ji, then test positive definiteness.
  std::vector<Rational> d(n, Rational(0));
  for (int s = 0; s < n; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j) {
        if (j == i || c(i, j) == 0) continue;
        Rational dj = d[i] * Rational(static_cast<long>(c(i, j))) / Rational(static_cast<long>(c(j, i)));
        if (d[j] == 0) {
          d[j] = dj;
          stack.push_back(j);
        } else if (d[j] != dj) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  RatMat sym(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym(i, j) = d[i] * Rational(static_cast<long>(c(i, j)));
  for (int k = 1; k <= n; ++k) {
    RatMat minor(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor(i, j) = sym(i, j);
    if (determinant(minor) <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
  }
}

RatMat lattice_basis(const std::vector<RatVec>& generators, int dim) {
  Integer den = 1;
  for (const auto& g : generators) den = lcm(den, denominator_lcm(g));
  std::vector<std::vector<Integer>> rows;
  for (const auto& g : generators) {
    std::vector<Integer> r(dim);
    for (int i = 0; i < dim; ++i) {
      Rational x = g[i] * Rational(den);
      r[i] = x.get_num();
    }
    rows.push_back(std::move(r));
  }
  // Row Hermite reduction over Z.
  std::vector<std::vector<Integer>> basis;
  for (int c = 0; c < dim; ++c) {
    while (true) {
      int best = -1;
      for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        if (rows[i][c] != 0 && (best < 0 || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best < 0) break;
      bool reduced = true;
      for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (i == best || rows[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t());
        for (int j = 0; j < dim; ++j) rows[i][j] -= q * rows[best][j];
        if (rows[i][c] != 0) reduced = false;
      }
      if (reduced) {
        basis.push_back(rows[best]);
        rows.erase(rows.begin() + best);
        break;
      }
    }
  }
  if (static_cast<int>(basis.size()) != dim)
    throw std::invalid_argument("lattice generators do not have full rank");
  // Positive pivots and reduced entries above them give the unique Hermite form.
  for (int k = 0; k < dim; ++k) {
    if (basis[k][k] < 0)
      for (auto& x : basis[k]) x = -x;
    for (int l = 0; l < k; ++l) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), basis[l][k].get_mpz_t(), basis[k][k].get_mpz_t());
      for (int j = 0; j < dim; ++j) basis[l][j] -= q * basis[k][j];
    }
  }
  RatMat b(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) {
      Rational x(basis[j][i], den);
      x.canonicalize();
      b(i, j) = x;
    }
  return b;
}

RootDatum::RootDatum(IntMat cartan, RatMat cochar_basis, std::vector<int> delta,
                     std::string type_label, std::vector<SimpleComponent> components,
                     std::string isogeny_name)
    : n_(cartan.rows()),
      cartan_(std::move(cartan)),
      basis_(std::move(cochar_basis)),
      delta_(std::move(delta)),
      type_label_(std::move(type_label)),
      components_(std::move(components)),
      isogeny_name_(std::move(isogeny_name)) {
  validate_cartan(cartan_);
  if (basis_.rows() != n_ || basis_.cols() != n_)
    throw std::invalid_argument("cochar basis has wrong shape");
  {
    std::vector<RatVec> cols;
    for (int j = 0; j < n_; ++j) cols.push_back(basis_.column(j));
    basis_ = lattice_basis(cols, n_);
  }
  basis_inv_ = inverse(basis_);
  coweights_ = inverse(to_rational(cartan_));
  for (int i = 0; i < n_; ++i) {
    RatVec e(n_, Rational(0));
    e[i] = 1;
    if (!is_integral(basis_inv_ * e))
      throw std::invalid_argument("lattice does not contain the coroot lattice");
  }
  RatMat pair = to_rational(cartan_) * basis_;
  for (const auto& x : pair.data())
    if (x.get_den() != 1)
      throw std::invalid_argument("lattice is not contained in the coweight lattice");

  delta_perm_.resize(n_);
  std::iota(delta_perm_.begin(), delta_perm_.end(), 0);
  if (!delta_.empty()) {
    if (static_cast<int>(delta_.size()) != n_) throw std::invalid_argument("delta has wrong length");
    std::vector<int> sorted = delta_;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n_; ++i)
      if (sorted[i] != i) throw std::invalid_argument("delta is not a permutation");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (cartan_(delta_[i], delta_[j]) != cartan_(i, j))
          throw std::invalid_argument("delta is not a diagram symmetry");
    delta_perm_ = delta_;
    bool trivial = true;
    for (int i = 0; i < n_; ++i) trivial = trivial && delta_[i] == i;
    if (trivial) delta_.clear();
  }
  IntMat d(n_, n_);
  for (int i = 0; i < n_; ++i) d(delta_perm_[i], i) = 1;
  delta_pows_.push_back(IntMat::identity(n_));
  while (true) {
    IntMat next = d * delta_pows_.back();
    if (next.is_identity()) break;
    delta_pows_.push_back(next);
  }
  delta_order_ = static_cast<int>(delta_pows_.size());
  if (!delta_.empty()) {
    RatMat conj = basis_inv_ * to_rational(d) * basis_;
    for (const auto& x : conj.data())
      if (x.get_den() != 1) throw std::invalid_argument("delta does not preserve the lattice");
  }

  for (int i = 0; i < n_; ++i) {
    IntMat s = IntMat::identity(n_);
    for (int j = 0; j < n_; ++j) s(i, j) -= cartan_(i, j);
    refl_.push_back(s);
  }

  // Reflection closure on (coroot, root) pairs.
  std::map<IntVec, IntVec> found;
  std::vector<IntVec> frontier;
  for (int i = 0; i < n_; ++i) {
    IntVec e(n_, 0);
    e[i] = 1;
    found[e] = e;
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& cr : frontier) {
      const IntVec& rt = found[cr];
      for (int i = 0; i < n_; ++i) {
        std::int64_t a = 0, b = 0;
        for (int j = 0; j < n_; ++j) {
          a += cartan_(i, j) * cr[j];
          b += rt[j] * cartan_(j, i);
        }
        if (a == 0) continue;
        IntVec cr2 = cr, rt2 = rt;
        cr2[i] -= a;
        rt2[i] -= b;
        if (cr2[i] < 0 || found.count(cr2)) continue;
        found[cr2] = rt2;
        next.push_back(cr2);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<IntVec, IntVec>> pairs(found.begin(), found.end());
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    auto hx = std::accumulate(x.second.begin(), x.second.end(), std::int64_t{0});
    auto hy = std::accumulate(y.second.begin(), y.second.end(), std::int64_t{0});
    if (hx != hy) return hx < hy;
    return x.second > y.second;
  });
  for (auto& [cr, rt] : pairs) {
    pos_coroots_.push_back(cr);
    pos_roots_.push_back(rt);
    IntVec f(n_, 0);
    for (int j = 0; j < n_; ++j)
      for (int i = 0; i < n_; ++i) f[j] += rt[i] * cartan_(i, j);
    root_fun_.push_back(f);
  }
}

const IntMat& RootDatum::delta_matrix(int j) const {
  int r = delta_order_;
  return delta_pows_[((j % r) + r) % r];
}

int RootDatum::delta_index(int i, int j) const {
  int r = delta_order_;
  j = ((j % r) + r) % r;
  int k = i - 1;
  for (int s = 0; s < j; ++s) k = delta_perm_[k];
  return k + 1;
}

RatVec RootDatum::rho_check(const std::vector<int>& S) const {
  std::vector<bool> in(n_, false);
  for (int i : S) {
    if (i < 1 || i > n_) throw std::out_of_range("simple index out of range");
    in[i - 1] = true;
  }
  RatVec sum(n_, Rational(0));
  for (const auto& cr : pos_coroots_) {
    bool inside = true;
    for (int j = 0; j < n_ && inside; ++j)
      if (cr[j] != 0 && !in[j]) inside = false;
    if (!inside) continue;
    for (int j = 0; j < n_; ++j) sum[j] += Rational(static_cast<long>(cr[j]));
  }
  for (auto& x : sum) x /= 2;
  return sum;
}

RatVec RootDatum::rho_check() const {
  std::vector<int> all(n_);
  std::iota(all.begin(), all.end(), 1);
  return rho_check(all);
}

RatVec RootDatum::lattice_coords(const RatVec& mu) const { return basis_inv_ * mu; }

bool RootDatum::in_cochar_lattice(const RatVec& mu) const { return is_integral(lattice_coords(mu)); }

Integer RootDatum::center_order() const {
  Rational idx = determinant(basis_) / determinant(coweights_);
  if (idx < 0) idx = -idx;
  return idx.get_num();
}

std::string RootDatum::describe_name() const {
  std::string s = type_label_ + " " + isogeny_name_;
  if (has_delta()) {
    s += " delta=(";
    for (int i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(delta_perm_[i] + 1);
    s += ")";
  }
  return s;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

RatVec coweight(const IntMat& cartan, int j) {
  RatMat cw = inverse(to_rational(cartan));
  return cw.column(j);
}

RatMat lattice_from_extra(const IntMat& cartan, const std::vector<RatVec>& extra) {
  int n = cartan.rows();
  std::vector<RatVec> gens = extra;
  for (int i = 0; i < n; ++i) {
    RatVec e(n, Rational(0));
    e[i] = 1;
    gens.push_back(e);
  }
  return lattice_basis(gens, n);
}

RatMat parse_basis_matrix(const std::string& spec, int n) {
  // "[[a,b],[c,d]]": each inner list is one basis vector.
  std::vector<RatVec> vecs;
  std::size_t pos = spec.find('[');
  if (pos == std::string::npos) throw std::invalid_argument("bad basis matrix: " + spec);
  ++pos;
  while (true) {
    auto open = spec.find('[', pos);
    if (open == std::string::npos) break;
    auto close = spec.find(']', open);
    if (close == std::string::npos) throw std::invalid_argument("bad basis matrix: " + spec);
    std::string body = spec.substr(open + 1, close - open - 1);
    RatVec v;
    std::size_t p = 0;
    while (p <= body.size()) {
      auto comma = body.find(',', p);
      std::string tok = body.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
      std::string t;
      for (char ch : tok)
        if (ch != '"' && !std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
      v.push_back(parse_rational(t));
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    vecs.push_back(v);
    pos = close + 1;
  }
  if (static_cast<int>(vecs.size()) != n) throw std::invalid_argument("basis matrix has wrong size");
  RatMat b(n, n);
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(vecs[j].size()) != n)
      throw std::invalid_argument("basis vector has wrong length");
    for (int i = 0; i < n; ++i) b(i, j) = vecs[j][i];
  }
  return b;
}

IntMat block_cartan(const std::vector<SimpleComponent>& comps) {
  int n = 0;
  for (auto& c : comps) n += c.rank;
  IntMat m(n, n);
  for (auto& c : comps) {
    IntMat b = cartan_matrix(c.family, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) m(c.offset + i, c.offset + j) = b(i, j);
  }
  return m;
}

std::vector<int> parse_delta(const std::string& spec, const std::vector<SimpleComponent>& comps,
                             int n) {
  std::string s = trim(spec);
  if (s.empty() || s == "none") return {};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (s == "flip" || s == "triality") {
    if (comps.size() != 1) throw std::invalid_argument("named delta needs a simple type");
    char f = comps[0].family;
    if (s == "triality") {
      if (f != 'D' || n != 4) throw std::invalid_argument("triality requires D4");
      return {2, 1, 3, 0};
    }
    if (f == 'A') {
      for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
    } else if (f == 'D' && n >= 3) {
      std::swap(perm[n - 2], perm[n - 1]);
    } else if (f == 'E' && n == 6) {
      perm = {5, 1, 4, 3, 2, 0};
    } else {
      throw std::invalid_argument("flip is defined for A, D and E6 only");
    }
    return perm;
  }
  std::vector<int> out;
  std::string body;
  for (char ch : s)
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == ',') body.push_back(ch);
    else if (ch != '[' && ch != ']' && ch != ' ')
      throw std::invalid_argument("bad delta specification: " + spec);
  std::size_t p = 0;
  while (p < body.size()) {
    auto comma = body.find(',', p);
    out.push_back(std::stoi(body.substr(p, comma - p)) - 1);
    if (comma == std::string::npos) break;
    p = comma + 1;
  }
  return out;
}

}  // namespace

RootDatum build_root_datum(const std::string& type_label, const std::string& isogeny_spec,
                           const std::string& delta_spec) {
  auto comps = parse_type_label(type_label);
  IntMat cartan = block_cartan(comps);
  int n = cartan.rows();
  std::string iso = trim(isogeny_spec);
  std::string name;
  RatMat basis;
  auto require_simple = [&](const char* what) {
    if (comps.size() != 1)
      throw std::invalid_argument(std::string(what) + " requires a simple type");
    return comps[0];
  };
  std::smatch m;
  if (iso.empty() || iso == "simply_connected" || iso == "sc") {
    basis = RatMat::identity(n);
    name = "simply_connected";
  } else if (iso == "adjoint" || iso == "ad") {
    basis = inverse(to_rational(cartan));
    name = "adjoint";
  } else if (!iso.empty() && iso[0] == '[') {
    basis = parse_basis_matrix(iso, n);
    name = "custom";
  } else if (std::regex_match(iso, m, std::regex(R"(SO(?:\((\d+|2n|2n\+1)\))?)"))) {
    auto c = require_simple("SO");
    std::string arg = m[1].matched ? m[1].str() : "";
    bool even = arg == "2n" || (!arg.empty() && std::isdigit(static_cast<unsigned char>(arg[0])) &&
                                std::stoi(arg) % 2 == 0);
    bool odd = arg == "2n+1" || (!arg.empty() && std::isdigit(static_cast<unsigned char>(arg[0])) &&
                                 std::stoi(arg) % 2 == 1);
    if (!arg.empty() && std::isdigit(static_cast<unsigned char>(arg[0]))) {
      int dimv = std::stoi(arg);
      int expect = c.family == 'B' ? 2 * c.rank + 1 : 2 * c.rank;
      if ((c.family == 'B' || c.family == 'D') && dimv != expect)
        throw std::invalid_argument("SO(" + arg + ") does not match type " + type_label);
    }
    if (c.family == 'D' && !odd) {
      RatVec e1 = coweight(cartan, 0);
      // D2 = A1 x A1: e_1 is half the sum of both coroots.
      if (c.rank == 2) e1 = RatVec{Rational(1, 2), Rational(1, 2)};
      basis = lattice_from_extra(cartan, {e1});
      name = "SO";
    } else if (c.family == 'B' && !even) {
      basis = inverse(to_rational(cartan));
      name = "adjoint";
    } else if (c.family == 'A' && c.rank == 3 && !odd) {
      basis = lattice_from_extra(cartan, {Rational(2) * coweight(cartan, 0)});
      name = "SL(4)/mu_2";
    } else {
      throw std::invalid_argument("isogeny " + iso + " is incompatible with type " + type_label);
    }
  } else if (iso == "Semispin" || iso == "semispin") {
    auto c = require_simple("Semispin");
    if (c.family != 'D' || c.rank % 2 != 0 || c.rank < 4)
      throw std::invalid_argument("Semispin requires type D_n with n even, n >= 4");
    basis = lattice_from_extra(cartan, {coweight(cartan, n - 1)});
    name = "Semispin";
  } else if (std::regex_match(iso, m, std::regex(R"(SL\((\d+)\)/(?:mu|μ)_?(\d+))"))) {
    auto c = require_simple("SL(n)/mu_k");
    int nn = std::stoi(m[1]), k = std::stoi(m[2]);
    if (c.family != 'A' || nn != c.rank + 1 || k < 1 || nn % k != 0)
      throw std::invalid_argument("isogeny " + iso + " is incompatible with type " + type_label);
    basis = lattice_from_extra(cartan, {Rational(nn / k) * coweight(cartan, 0)});
    name = k == 1 ? "simply_connected" : (k == nn ? "adjoint" : "SL(" + m[1].str() + ")/mu_" + m[2].str());
  } else {
    throw std::invalid_argument("unknown isogeny: " + iso);
  }
  std::string label;
  for (std::size_t i = 0; i < comps.size(); ++i)
    label += (i ? "x" : "") + std::string(1, comps[i].family) + std::to_string(comps[i].rank);
  return RootDatum(cartan, basis, parse_delta(delta_spec, comps, n), label, comps, name);
}

RootDatum with_delta(const RootDatum& rd, const std::string& delta_spec) {
  std::vector<int> perm = parse_delta(delta_spec, rd.components(), rd.rank());
  return RootDatum(rd.cartan(), rd.cochar_basis(), perm, rd.type_label(), rd.components(), rd.isogeny_name());
}

RootDatum parse_datum(const std::string& text) {
  std::string s = trim(text);
  std::string head = s, iso, delta = "none";
  auto sep = s.find_first_of(": \t");
  if (sep != std::string::npos) {
    head = s.substr(0, sep);
    iso = trim(s.substr(sep + 1));
  }
  std::smatch m;
  auto num = [&](int k) { return std::stoi(m[k].str()); };
  auto with = [&](const std::string& type, const std::string& default_iso) {
    return build_root_datum(type, iso.empty() ? default_iso : iso, delta);
  };
  static const std::regex twisted(R"(([23])([ADE])(\d+))");
  if (std::regex_match(head, m, twisted)) {
    delta = m[1].str() == "3" ? "triality" : "flip";
    return with(m[2].str() + m[3].str(), "simply_connected");
  }
  auto named = [&](const std::string& pat) {
    return std::regex_match(head, m, std::regex(pat));
  };
  if (named(R"(SL\(?(\d+)\)?)")) {
    int k = num(1);
    if (k < 2) throw std::invalid_argument("SL(n) needs n >= 2");
    return with("A" + std::to_string(k - 1), "simply_connected");
  }
  if (named(R"((?:PGL|PSL)\(?(\d+)\)?)")) {
    int k = num(1);
    if (k < 2) throw std::invalid_argument("PGL(n) needs n >= 2");
    return with("A" + std::to_string(k - 1), "adjoint");
  }
  if (named(R"((P?)Sp\(?(\d+)\)?)")) {
    int k = num(2);
    if (k < 2 || k % 2) throw std::invalid_argument("Sp(n) needs n even");
    std::string t = k == 2 ? "A1" : "C" + std::to_string(k / 2);
    return with(t, m[1].str().empty() ? "simply_connected" : "adjoint");
  }
  if (named(R"(SO\(?(\d+)\)?)")) {
    int k = num(1);
    if (k == 3) return with("A1", "adjoint");
    if (k < 3) throw std::invalid_argument("SO(n) needs n >= 3");
    if (k % 2) return with("B" + std::to_string(k / 2), "adjoint");
    return with("D" + std::to_string(k / 2), "SO");
  }
  if (named(R"(PSO\(?(\d+)\)?)")) {
    int k = num(1);
    if (k < 4 || k % 2) throw std::invalid_argument("PSO(n) needs n even");
    return with("D" + std::to_string(k / 2), "adjoint");
  }
  if (named(R"(Spin\(?(\d+)\)?)")) {
    int k = num(1);
    if (k == 3) return with("A1", "simply_connected");
    if (k < 3) throw std::invalid_argument("Spin(n) needs n >= 3");
    if (k % 2) return with("B" + std::to_string(k / 2), "simply_connected");
    return with("D" + std::to_string(k / 2), "simply_connected");
  }
  if (named(R"(Semispin\(?(\d+)\)?)")) {
    int k = num(1);
    return with("D" + std::to_string(k / 2), "Semispin");
  }
  return with(head, "simply_connected");
}

TorusElt torus_from_cochar(const RootDatum& rd, const RatVec& mu) {
  if (static_cast<int>(mu.size()) != rd.rank()) throw std::invalid_argument("vector has wrong length");
  RatVec m = mu;
  for (auto& x : m) x.canonicalize();
  RatVec q = rd.lattice_coords(m);
  for (auto& x : q) x = frac(x);
  return TorusElt{rd.cochar_basis() * q};
}

TorusElt torus_identity(const RootDatum& rd) { return TorusElt{RatVec(rd.rank(), Rational(0))}; }

TorusElt torus_add(const RootDatum& rd, const TorusElt& a, const TorusElt& b) {
  return torus_from_cochar(rd, a.coords + b.coords);
}

TorusElt torus_neg(const RootDatum& rd, const TorusElt& a) {
  return torus_from_cochar(rd, Rational(-1) * a.coords);
}

TorusElt torus_scale(const RootDatum& rd, const TorusElt& a, const Integer& k) {
  return torus_from_cochar(rd, Rational(k) * a.coords);
}

bool is_identity(const TorusElt& t) { return is_zero(t.coords); }

Rational evaluate(const RootDatum& rd, const IntVec& chi, const TorusElt& t) {
  RatVec q = rd.lattice_coords(t.coords);
  Rational s = 0;
  for (int i = 0; i < rd.rank(); ++i) s += Rational(static_cast<long>(chi[i])) * q[i];
  return frac(s);
}

Rational evaluate_root(const RootDatum& rd, const IntVec& root, const TorusElt& t) {
  Rational s = 0;
  for (int i = 0; i < rd.rank(); ++i)
    for (int j = 0; j < rd.rank(); ++j)
      s += Rational(static_cast<long>(root[i] * rd.cartan()(i, j))) * t.coords[j];
  return frac(s);
}

Integer order_torus(const RootDatum& rd, const TorusElt& t) {
  return denominator_lcm(rd.lattice_coords(t.coords));
}

TorusElt m_alpha(const RootDatum& rd, int i) {
  if (i < 1 || i > rd.rank()) throw std::out_of_range("simple index out of range");
  RatVec mu(rd.rank(), Rational(0));
  mu[i - 1] = Rational(1, 2);
  return torus_from_cochar(rd, mu);
}

TorusElt m_alpha(const RootDatum& rd, const IntVec& coroot) {
  return torus_from_cochar(rd, Rational(1, 2) * to_rational(coroot));
}

TorusElt z_G(const RootDatum& rd) { return torus_from_cochar(rd, rd.rho_check()); }

TorusElt z_S(const RootDatum& rd, const std::vector<int>& S) {
  return torus_from_cochar(rd, rd.rho_check(S));
}

bool rho_in_cochar_lattice(const RootDatum& rd) { return rd.in_cochar_lattice(rd.rho_check()); }

bool is_central(const RootDatum& rd, const TorusElt& t) {
  for (int i = 0; i < rd.rank(); ++i) {
    IntVec e(rd.rank(), 0);
    e[i] = 1;
    if (evaluate_root(rd, e, t) != 0) return false;
  }
  return true;
}

std::vector<TorusElt> center_elements(const RootDatum& rd) {
  std::set<TorusElt> seen{torus_identity(rd)};
  std::vector<TorusElt> frontier{torus_identity(rd)};
  while (!frontier.empty()) {
    std::vector<TorusElt> next;
    for (const auto& t : frontier)
      for (int j = 0; j < rd.rank(); ++j) {
        TorusElt u = torus_from_cochar(rd, t.coords + rd.coweights().column(j));
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::string to_string(const TorusElt& t) { return to_string(t.coords); }

}  // namespace wlift
