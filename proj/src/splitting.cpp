#include "wlift/splitting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wlift/classes.hpp"

namespace wlift {

std::string Obstruction::describe() const {
  if (kind == Kind::RhoCheck) return "rho-check is not in X_*";
  std::ostringstream os;
  os << (twisted ? "twisted " : "") << "elliptic class " << label << ": o(w) = " << weyl_order
     << ", o(sigma(w)) = " << lift_order;
  return os.str();
}

std::string to_string(VerdictSource s) {
  switch (s) {
    case VerdictSource::Classification: return "classification";
    case VerdictSource::SearchCertificate: return "search-certificate";
    case VerdictSource::Obstruction: return "obstruction";
    case VerdictSource::Unknown: return "unknown";
  }
  return "?";
}

namespace {

RatMat lattice_with(const RootDatum& rd, const std::vector<RatVec>& extra) {
  int n = rd.rank();
  std::vector<RatVec> gens;
  for (int i = 0; i < n; ++i) {
    RatVec e(n, Rational(0));
    e[i] = 1;
    gens.push_back(e);
  }
  for (const auto& v : extra) gens.push_back(v);
  return lattice_basis(gens, n);
}

RatVec coweight(const RootDatum& rd, int i) { return rd.coweights().column(i - 1); }

std::vector<RatVec> all_coweights(const RootDatum& rd) {
  std::vector<RatVec> out;
  for (int i = 1; i <= rd.rank(); ++i) out.push_back(coweight(rd, i));
  return out;
}

int bond(const RootDatum& rd, int i, int j) {
  std::int64_t p = rd.cartan()(i, j) * rd.cartan()(j, i);
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw std::logic_error("unexpected Cartan product");
}

// Classes of simple roots under W-conjugacy: components of the graph of odd bonds.
std::vector<int> root_orbits(const RootDatum& rd) {
  int n = rd.rank();
  std::vector<int> orbit(n);
  std::iota(orbit.begin(), orbit.end(), 0);
  std::function<int(int)> find = [&](int a) { return orbit[a] == a ? a : orbit[a] = find(orbit[a]); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (bond(rd, i, j) == 3) orbit[find(j)] = find(i);
  for (int i = 0; i < n; ++i) orbit[i] = find(i);
  return orbit;
}

std::vector<int> flip_permutation(char family, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  if (family == 'A') {
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  } else if (family == 'D' && n >= 3) {
    std::swap(p[n - 2], p[n - 1]);
  } else if (family == 'E' && n == 6) {
    p = {5, 1, 4, 3, 2, 0};
  } else {
    return {};
  }
  return p;
}

NormalizerElt generator(const RootDatum& rd, int alpha, const TorusElt& t) {
  return {t, reflection(rd, alpha), 0};
}

bool braid_ok(const RootDatum& rd, const NormalizerElt& a, const NormalizerElt& b, int m) {
  NormalizerElt ab = multiply(rd, a, b);
  NormalizerElt p = power(rd, ab, m);
  return is_identity(p.t) && p.w.m.is_identity() && p.j == 0;
}

}  // namespace

std::string recognize_isogeny(const RootDatum& rd) {
  if (!rd.is_simple()) return "";
  char f = rd.family();
  int n = rd.rank();
  const RatMat& mine = rd.cochar_basis();
  auto is = [&](const std::vector<RatVec>& extra) { return lattice_with(rd, extra) == mine; };
  auto num = [](int k) { return std::to_string(k); };
  switch (f) {
    case 'A': {
      int m = n + 1;
      for (int k = 1; k <= m; ++k) {
        if (m % k) continue;
        if (is({Rational(m / k) * coweight(rd, 1)}))
          return k == 1 ? "SL(" + num(m) + ")" : k == m ? "PGL(" + num(m) + ")" : "SL(" + num(m) + ")/mu_" + num(k);
      }
      break;
    }
    case 'B':
      if (is({})) return "Spin(" + num(2 * n + 1) + ")";
      if (is(all_coweights(rd))) return "SO(" + num(2 * n + 1) + ")";
      break;
    case 'C':
      if (is({})) return "Sp(" + num(2 * n) + ")";
      if (is(all_coweights(rd))) return "PSp(" + num(2 * n) + ")";
      break;
    case 'D':
      if (is({})) return "Spin(" + num(2 * n) + ")";
      if (is({n == 2 ? RatVec{Rational(1, 2), Rational(1, 2)} : coweight(rd, 1)})) return "SO(" + num(2 * n) + ")";
      if (is(all_coweights(rd))) return "PSO(" + num(2 * n) + ")";
      if (n >= 4 && n % 2 == 0 && (is({coweight(rd, n)}) || is({coweight(rd, n - 1)})))
        return "Semispin(" + num(2 * n) + ")";
      break;
    case 'E':
      if (is({})) return "E" + num(n) + " simply_connected";
      if (is(all_coweights(rd))) return "E" + num(n) + " adjoint";
      break;
    case 'F':
    case 'G':
      return std::string(1, f) + num(n);
  }
  return "";
}

SplittingVerdict splits_classification(const RootDatum& rd, bool char2) {
  if (!rd.is_simple()) throw std::invalid_argument("splitting classification needs a simple datum");
  SplittingVerdict v;
  v.group = recognize_isogeny(rd);
  if (char2) {
    v.splits = true;
    v.source = VerdictSource::Classification;
    v.note = "characteristic 2: the Tits group is isomorphic to W";
    return v;
  }
  if (v.group.empty()) {
    v.note = "isogeny not recognized";
    return v;
  }
  char f = rd.family();
  int n = rd.rank();
  const std::string& g = v.group;
  bool yes = false;
  switch (f) {
    case 'A': yes = rd.center_order() % 2 == 1 || g == "SL(4)/mu_2"; break;
    case 'B': yes = g.rfind("SO(", 0) == 0; break;
    case 'C': yes = g.rfind("PSp(", 0) == 0 && n <= 2; break;
    case 'D': yes = g.rfind("SO(", 0) == 0 || g.rfind("PSO(", 0) == 0 || g == "Semispin(8)"; break;
    case 'G': yes = true; break;
    default: yes = false; v.note = "negative case rests on subgroup arguments"; break;
  }
  v.splits = yes;
  v.source = VerdictSource::Classification;
  return v;
}

std::vector<Obstruction> obstruction_report(const RootDatum& rd) {
  std::vector<Obstruction> out;
  if (!rho_in_cochar_lattice(rd)) out.push_back({Obstruction::Kind::RhoCheck, "", false, 0, 0});
  if (!rd.is_simple()) return out;
  auto scan = [&](const RootDatum& d, bool twisted) {
    std::vector<EllipticClassRecord> records;
    try {
      records = elliptic_classes(d, twisted);
    } catch (const std::invalid_argument&) {
      return;
    }
    for (const auto& r : records) {
      TorusElt t;
      std::int64_t o = r.order;
      if (r.rep_word) {
        TwistedWeylElt x = representative(d, r);
        o = order(d, x);
        t = sigma_power(d, x);
      } else if (r.good_data) {
        t = sigma_power_via_good_data(d, *r.good_data);
      } else {
        continue;
      }
      if (!is_identity(t))
        out.push_back({Obstruction::Kind::EllipticClass, r.label, twisted, o, o * order_torus(d, t).get_si()});
    }
  };
  scan(rd, false);
  if (rd.has_delta() && rd.delta_order() == 2) {
    scan(rd, true);
  } else if (!rd.has_delta()) {
    auto perm = flip_permutation(rd.family(), rd.rank());
    if (!perm.empty()) {
      try {
        RootDatum tw(rd.cartan(), rd.cochar_basis(), perm, rd.type_label(), rd.components(), rd.isogeny_name());
        scan(tw, true);
      } catch (const std::invalid_argument&) {
        // delta does not preserve X_*
      }
    }
  }
  return out;
}

bool verify_certificate(const RootDatum& rd, const SplittingCertificate& cert) {
  int n = rd.rank();
  if (static_cast<int>(cert.size()) != n) return false;
  std::vector<NormalizerElt> g;
  for (int a = 1; a <= n; ++a) {
    auto it = cert.find(a);
    if (it == cert.end() || it->second.coords.size() != static_cast<std::size_t>(n)) return false;
    if (torus_from_cochar(rd, it->second.coords) != it->second) return false;
    g.push_back(generator(rd, a, it->second));
  }
  for (int a = 0; a < n; ++a) {
    NormalizerElt sq = multiply(rd, g[a], g[a]);
    if (!is_identity(sq.t) || !sq.w.m.is_identity()) return false;
    for (int b = a + 1; b < n; ++b)
      if (!braid_ok(rd, g[a], g[b], bond(rd, a, b))) return false;
  }
  return true;
}

namespace {

// Every element of (1/k) X_* / X_*.
std::vector<TorusElt> torsion_points(const RootDatum& rd, int k) {
  int n = rd.rank();
  std::vector<TorusElt> out;
  std::vector<int> v(n, 0);
  const RatMat& B = rd.cochar_basis();
  while (true) {
    RatVec q(n);
    for (int i = 0; i < n; ++i) q[i] = Rational(v[i], k);
    for (auto& x : q) x.canonicalize();
    out.push_back(torus_from_cochar(rd, B * q));
    int i = 0;
    while (i < n && ++v[i] == k) v[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

SearchResult search_splittings(const RootDatum& rd, const SearchOptions& opts) {
  int n = rd.rank();
  int k = opts.torsion_bound;
  if (k < 1) throw std::invalid_argument("torsion bound must be positive");
  if (std::pow(static_cast<double>(k), n) > 1e7) throw std::invalid_argument("search space exceeds 10^7 (k^n)");
  SearchResult res;
  auto points = torsion_points(rd, k);
  // Candidates: (t sigma_alpha)^2 = t + s_alpha(t) + m_alpha = 1.
  std::vector<std::vector<TorusElt>> cand(n);
  for (int a = 1; a <= n; ++a) {
    TorusElt ma = m_alpha(rd, a);
    for (const auto& t : points) {
      RatVec s = t.coords + act(rd.reflection0(a - 1), t.coords) + ma.coords;
      if (is_identity(torus_from_cochar(rd, s))) cand[a - 1].push_back(t);
    }
  }

  auto accept = [&](const SplittingCertificate& c) {
    ++res.candidates_checked;
    if (!verify_certificate(rd, c)) return false;
    for (const auto& prev : res.certificates)
      if (splittings_equivalent(rd, prev, c)) return false;
    res.certificates.push_back(c);
    return static_cast<int>(res.certificates.size()) >= opts.max_certificates;
  };

  // Backtracking over the given free roots; derived roots are filled by `derive`.
  auto run = [&](const std::vector<int>& free_roots,
                 const std::function<bool(std::vector<std::optional<NormalizerElt>>&)>& derive) {
    std::vector<std::optional<NormalizerElt>> g(n);
    std::function<bool(std::size_t)> rec = [&](std::size_t idx) -> bool {
      if (idx == free_roots.size()) {
        auto full = g;
        if (!derive(full)) return false;
        SplittingCertificate c;
        for (int a = 0; a < n; ++a) c[a + 1] = full[a]->t;
        return accept(c);
      }
      int a = free_roots[idx];
      for (const auto& t : cand[a]) {
        NormalizerElt x = generator(rd, a + 1, t);
        bool ok = true;
        for (std::size_t p = 0; p < idx && ok; ++p) {
          int b = free_roots[p];
          ok = braid_ok(rd, *g[b], x, bond(rd, b, a));
        }
        if (!ok) continue;
        g[a] = x;
        if (rec(idx + 1)) return true;
      }
      g[a].reset();
      return false;
    };
    return rec(0);
  };

  // Heuristic pass: within each odd-bond component only the smallest root is free; a neighbour
  // beta of alpha receives sigma(s_alpha s_beta) g_alpha sigma(s_alpha s_beta)^-1.
  auto orbit = root_orbits(rd);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a)
    if (orbit[a] == a) reps.push_back(a);
  if (static_cast<int>(reps.size()) < n) {
    res.heuristic_used = true;
    bool done = run(reps, [&](std::vector<std::optional<NormalizerElt>>& g) {
      std::vector<int> queue = reps;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        int a = queue[q];
        for (int b = 0; b < n; ++b) {
          if (g[b] || bond(rd, a, b) != 3) continue;
          NormalizerElt u = sigma(rd, untwisted(multiply(reflection(rd, a + 1), reflection(rd, b + 1))));
          NormalizerElt c = conjugate(rd, u, *g[a]);
          if (c.w != reflection(rd, b + 1)) throw std::logic_error("transport does not reach the neighbour");
          g[b] = c;
          queue.push_back(b);
        }
      }
      return true;
    });
    if (done) return res;
  }
  res.full_search_used = true;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  run(all, [](std::vector<std::optional<NormalizerElt>>&) { return true; });
  return res;
}

SplittingVerdict search_splitting(const RootDatum& rd, int torsion_bound) {
  SplittingVerdict v;
  v.group = recognize_isogeny(rd);
  SearchResult r = search_splittings(rd, {torsion_bound, 1});
  if (!r.certificates.empty()) {
    v.splits = true;
    v.source = VerdictSource::SearchCertificate;
    v.certificate = r.certificates.front();
  } else {
    v.note = "no certificate at torsion level " + std::to_string(torsion_bound);
  }
  return v;
}

bool splittings_equivalent(const RootDatum& rd, const SplittingCertificate& a, const SplittingCertificate& b) {
  if (!verify_certificate(rd, a) || !verify_certificate(rd, b)) throw std::invalid_argument("invalid certificate");
  int n = rd.rank();
  std::vector<TorusElt> z2;
  for (const auto& z : center_elements(rd))
    if (order_torus(rd, z) <= 2) z2.push_back(z);
  auto orbit = root_orbits(rd);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i)
    if (orbit[i] == i) reps.push_back(i);

  // q - c coroot in X_* for some rational c: c = (q_i0 + m) / u_i0 with u = B^-1 coroot.
  auto solvable = [&](int alpha, const RatVec& q) {
    RatVec e(n, Rational(0));
    e[alpha] = 1;
    RatVec u = rd.lattice_coords(e);
    RatVec p = rd.lattice_coords(q);
    int i0 = -1;
    for (int i = 0; i < n && i0 < 0; ++i)
      if (u[i] != 0) i0 = i;
    Integer span = Rational(abs(u[i0])).get_num();
    for (Integer m = 0; m < span; ++m) {
      Rational c = (p[i0] + Rational(m)) / u[i0];
      bool ok = true;
      for (int i = 0; i < n && ok; ++i) ok = Rational(p[i] - c * u[i]).get_den() == 1;
      if (ok) return true;
    }
    return false;
  };

  std::vector<std::size_t> choice(reps.size(), 0);
  while (true) {
    bool all_ok = true;
    for (int alpha = 0; alpha < n && all_ok; ++alpha) {
      std::size_t r = std::find(reps.begin(), reps.end(), orbit[alpha]) - reps.begin();
      RatVec q = b.at(alpha + 1).coords - a.at(alpha + 1).coords - z2[choice[r]].coords;
      all_ok = solvable(alpha, q);
    }
    if (all_ok) return true;
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == z2.size()) choice[i++] = 0;
    if (i == choice.size()) return false;
  }
}

std::string to_string(const SplittingCertificate& c) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [a, t] : c) {
    os << (first ? "" : ", ") << a << ": " << to_string(t);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace wlift
