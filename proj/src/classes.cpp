#include "wlift/classes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wlift/cyclotomic.hpp"
#include "wlift/element_io.hpp"
#include "wlift/parallel.hpp"

namespace wlift {

namespace {

struct TableEntry {
  const char* label;
  int order;
  const char* word;  // nullptr: no printed word; "w_I": longest element
  GoodData good;
  const char* charpoly;
};

std::vector<int> all_nodes(int n) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 1);
  return s;
}

const std::vector<TableEntry>& f4_table() {
  static const std::vector<TableEntry> t = {
      {"4A_1", 2, "w_I", {{all_nodes(4), 2}}, nullptr},
      {"D_4", 8, "2323432134", {{all_nodes(4), 2}, {{3, 4}, 4}}, nullptr},
      {"D_4(a_1)", 4, "324321324321", {{all_nodes(4), 2}}, nullptr},
      {"C_3+A_1", 8, "1214321323", {{all_nodes(4), 2}, {{1, 2}, 4}}, nullptr},
      {"A_2+~A_2", 3, "3214321323432132", {{all_nodes(4), 2}}, nullptr},
      {"F_4(a_1)", 6, "32432132", {{all_nodes(4), 2}}, nullptr},
      {"F_4", 12, "4321", {{all_nodes(4), 2}}, nullptr},
      {"A_3+~A_1", 4, "23234321324321", {{all_nodes(4), 2}, {{2, 3}, 2}}, nullptr},
      {"B_4", 8, "243213", {{all_nodes(4), 2}}, nullptr},
  };
  return t;
}

const std::vector<TableEntry>& e7_table() {
  static const auto I = all_nodes(7);
  static const std::vector<TableEntry> t = {
      {"E7", 18, nullptr, {{I, 2}}, "Phi2*Phi18"},
      {"E7(a1)", 14, nullptr, {{I, 2}}, "Phi2*Phi14"},
      {"E7(a2)", 12, nullptr, {{I, 6}, {{2, 5, 7}, 2}}, "Phi2*Phi6*Phi12"},
      {"E7(a3)", 30, nullptr, {{I, 6}, {{2, 4}, 4}}, "Phi2*Phi6*Phi10"},
      {"D6+A1", 10, nullptr, {{I, 2}, {{2, 4}, 8}}, "Phi2^3*Phi10"},
      {"A7", 8, nullptr, {{I, 2}, {{2, 5, 7}, 2}, {{2}, 4}}, "Phi2*Phi4*Phi8"},
      {"E7(a4)", 6, nullptr, {{I, 2}}, "Phi2*Phi6^3"},
      {"D6(a2)+A1", 6, nullptr, {{I, 2}, {{1, 3}, 4}}, "Phi2^3*Phi6^2"},
      {"A5+A2", 6, nullptr, {{I, 2}, {{2, 3, 4, 5}, 2}}, "Phi2*Phi3^2*Phi6"},
      {"D4+3A1", 6, nullptr, {{I, 2}, {{2, 4, 5, 6, 7}, 4}}, "Phi2^5*Phi6"},
      {"2A3+A1", 4, nullptr, {{I, 2}, {{2, 5, 7}, 2}}, "Phi2^3*Phi4^2"},
      {"7A1", 2, nullptr, {{I, 2}}, "Phi2^7"},
  };
  return t;
}

const std::vector<TableEntry>& e8_table() {
  static const auto I = all_nodes(8);
  static const std::vector<TableEntry> t = {
      {"E8(a7)", 12, nullptr, {{I, 2}, {{2, 3, 4, 5}, 2}}, "Phi6^2*Phi12"},
      {"E7(a2)+A1", 12, nullptr, {{I, 2}, {{2, 3, 4, 5}, 2}, {{2, 4}, 8}}, "Phi2^2*Phi6*Phi12"},
      {"E6(a2)+A2", 12, nullptr, {{I, 2}, {{2, 3, 4, 5}, 6}}, nullptr},
      {"A7+A1", 8, nullptr, {{I, 2}, {{2, 3, 4, 5}, 2}, {{2, 5}, 4}}, "Phi2^2*Phi4*Phi8"},
      {"E6(a2)+A2", 6, nullptr, {{I, 2}, {{2, 3, 4, 5}, 2}}, "Phi3^2*Phi6^2"},
      {"A5+A2+A1", 6, nullptr, {{I, 2}, {{2, 3, 4, 5, 7, 8}, 2}, {{7, 8}, 2}}, "Phi2^2*Phi3^2*Phi6"},
      {"D5(a1)+A3", 12, nullptr, {{I, 4}, {{1, 2, 3, 4, 5, 6}, 2}}, "Phi2^2*Phi4^2*Phi6"},
      {"2A3+2A1", 4, nullptr, {{I, 2}, {{2, 3, 4, 5}, 2}}, "Phi2^4*Phi4^2"},
  };
  return t;
}

const char* k2E6Word = "4254234565423456";

std::map<std::string, std::string> carter_names(char family, int n) {
  if (family == 'E' && n == 6)
    return {{"Phi3*Phi12", "E6"}, {"Phi9", "E6(a1)"}, {"Phi3*Phi6^2", "E6(a2)"},
            {"Phi2^2*Phi3*Phi6", "A5+A1"}, {"Phi3^3", "3A2"}};
  if (family == 'G' && n == 2) return {{"Phi6", "G2"}, {"Phi3", "A2"}, {"Phi2^2", "A1+~A1"}};
  return {};
}

std::string charpoly_label(const IntMat& l) {
  return factorization_label(cyclotomic_factorization(characteristic_polynomial(l)));
}

std::string strip_underscores(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != '_' && c != ' ') out += c;
  return out;
}

std::int64_t lcm_order(const Partition& p) { return 2 * static_cast<std::int64_t>(lcm_of_parts(p)); }

// Nested (S_i, d_i) for E(P) in types B, C, D: e_i = o/a_i, S_i = [Sigma_i + 1, n].
GoodData classical_good_data(char family, int n, const Partition& p) {
  std::int64_t o = lcm_order(p);
  GoodData g;
  int sigma = 0;
  std::int64_t eprev = 0;
  for (int a : p) {
    std::int64_t e = o / a;
    std::vector<int> S;
    if (family != 'D' || sigma <= n - 2)
      for (int k = sigma + 1; k <= n; ++k) S.push_back(k);
    if (e > eprev && !S.empty()) g.push_back({S, static_cast<int>(e - eprev)});
    eprev = e;
    sigma += a;
  }
  return g;
}

std::vector<EllipticClassRecord> enumerated_records(const RootDatum& rd, int j) {
  auto names = j == 0 ? carter_names(rd.family(), rd.rank()) : std::map<std::string, std::string>{};
  std::vector<EllipticClassRecord> out;
  for (const auto& cls : twisted_conjugacy_classes(rd, j)) {
    if (!is_elliptic(rd, cls.front())) continue;
    int best = -1;
    std::vector<std::size_t> shortest;
    for (std::size_t k = 0; k < cls.size(); ++k) {
      int len = length(rd, cls[k].w);
      if (best < 0 || len < best) {
        best = len;
        shortest.clear();
      }
      if (len == best) shortest.push_back(k);
    }
    Word word;
    for (std::size_t k : shortest) {
      Word w = reduced_word(rd, cls[k].w);
      if (word.empty() || w < word) word = w;
    }
    EllipticClassRecord r;
    r.charpoly = charpoly_label(action_matrix(rd, cls.front()));
    auto it = names.find(*r.charpoly);
    r.label = it != names.end() ? it->second : *r.charpoly;
    r.twisted = j != 0;
    r.rep_word = word;
    r.rep_j = j;
    r.order = order(rd, cls.front());
    r.rep_source = "enumeration";
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.order != b.order) return a.order > b.order;
    if (a.label != b.label) return a.label < b.label;
    return *a.rep_word < *b.rep_word;
  });
  std::map<std::string, int> seen;
  for (auto& r : out)
    if (seen[r.label]++) r.label += "#" + std::to_string(seen[r.label]);
  return out;
}

std::vector<EllipticClassRecord> from_table(const RootDatum& rd, const std::vector<TableEntry>& table) {
  std::vector<EllipticClassRecord> out;
  for (const auto& e : table) {
    EllipticClassRecord r;
    r.label = e.label;
    r.order = e.order;
    r.good_data = e.good;
    if (e.charpoly) r.charpoly = e.charpoly;
    if (e.word) {
      r.rep_word = std::string(e.word) == "w_I" ? reduced_word(rd, longest_element(rd)) : parse_word(e.word, rd.rank());
      r.rep_source = "table";
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<EllipticClassRecord> elliptic_classes(const RootDatum& rd, bool twisted) {
  if (!rd.is_simple()) throw std::invalid_argument("elliptic classes need a simple datum");
  if (twisted && !rd.has_delta()) throw std::invalid_argument("twisted classes need a diagram automorphism");
  char f = rd.family();
  int n = rd.rank();
  std::vector<EllipticClassRecord> out;
  auto classical = [&](const Partition& p, bool tw) {
    EllipticClassRecord r;
    r.label = partition_to_string(p);
    r.twisted = tw;
    r.partition = p;
    r.order = lcm_order(p);
    TwistedWeylElt x = classical_representative(rd, p);
    r.rep_word = reduced_word(rd, x.w);
    r.rep_j = x.j;
    r.rep_source = "construction";
    if (f != 'A') r.good_data = classical_good_data(f, n, p);
    out.push_back(std::move(r));
  };
  if (f == 'A') {
    if (!twisted) {
      EllipticClassRecord r;
      r.label = "Coxeter";
      r.partition = Partition{n + 1};
      r.order = n + 1;
      r.rep_word = reduced_word(rd, coxeter_element(rd));
      r.rep_source = "construction";
      r.good_data = GoodData{{all_nodes(n), 2}};
      out.push_back(std::move(r));
    } else {
      for (const auto& p : odd_partitions(n + 1)) classical(p, true);
    }
  } else if (f == 'B' || f == 'C') {
    if (twisted) throw std::invalid_argument("no twisted classes for this type");
    for (const auto& p : partitions(n)) classical(p, false);
  } else if (f == 'D') {
    bool triality = rd.delta_order() == 3;
    if (twisted && triality) return enumerated_records(rd, 1);
    for (const auto& p : partitions(n))
      if ((p.size() % 2 == 1) == twisted) classical(p, twisted);
  } else if (f == 'F' && n == 4) {
    if (twisted) throw std::invalid_argument("no twisted classes for this type");
    return from_table(rd, f4_table());
  } else if (f == 'E' && n == 7) {
    if (twisted) throw std::invalid_argument("no twisted classes for this type");
    return from_table(rd, e7_table());
  } else if (f == 'E' && n == 8) {
    if (twisted) throw std::invalid_argument("no twisted classes for this type");
    return from_table(rd, e8_table());
  } else if (f == 'E' && n == 6) {
    out = enumerated_records(rd, twisted ? 1 : 0);
    if (twisted) {
      // The printed word labels its own class and carries the tabulated good data.
      TwistedWeylElt x = from_word(rd, parse_word(k2E6Word, n), 1);
      for (const auto& cls : twisted_conjugacy_classes(rd, 1)) {
        if (std::find(cls.begin(), cls.end(), x) == cls.end()) continue;
        for (auto& r : out) {
          TwistedWeylElt y = from_word(rd, *r.rep_word, 1);
          if (std::find(cls.begin(), cls.end(), y) == cls.end()) continue;
          r.label = k2E6Word;
          r.rep_word = parse_word(k2E6Word, n);
          r.rep_source = "table";
          r.good_data = GoodData{{all_nodes(6), 2}, {{2, 3, 4, 5}, 2}};
        }
      }
    }
  } else if (f == 'G') {
    if (twisted) throw std::invalid_argument("no twisted classes for this type");
    out = enumerated_records(rd, 0);
  } else {
    throw std::invalid_argument("no elliptic class catalog for type " + rd.type_label());
  }
  return out;
}

const EllipticClassRecord& find_class(const std::vector<EllipticClassRecord>& records, const std::string& label) {
  std::string want = label;
  std::optional<std::int64_t> want_order;
  auto at = label.rfind('@');
  if (at != std::string::npos) {
    want = label.substr(0, at);
    want_order = std::stoll(label.substr(at + 1));
  }
  std::optional<Partition> want_partition;
  try {
    if (!want.empty() && (want[0] == '[' || want[0] == '(' || std::isdigit(static_cast<unsigned char>(want[0]))) &&
        want.find_first_not_of("[](), 0123456789") == std::string::npos)
      want_partition = parse_partition(want);
  } catch (const std::exception&) {
  }
  std::vector<const EllipticClassRecord*> hits;
  for (const auto& r : records) {
    bool match = strip_underscores(r.label) == strip_underscores(want) ||
                 (want_partition && r.partition && *r.partition == *want_partition);
    if (match && (!want_order || r.order == *want_order)) hits.push_back(&r);
  }
  if (hits.empty()) throw std::invalid_argument("unknown class label: " + label);
  if (hits.size() > 1) {
    std::string msg = "ambiguous class label " + label + "; use one of";
    for (auto* h : hits) msg += " " + h->label + "@" + std::to_string(h->order);
    throw std::invalid_argument(msg);
  }
  return *hits.front();
}

TwistedWeylElt representative(const RootDatum& rd, const EllipticClassRecord& record) {
  if (!record.rep_word) throw std::invalid_argument("class " + record.label + " has no representative word");
  return from_word(rd, *record.rep_word, record.rep_j);
}

std::vector<std::int64_t> integer_charpoly(const IntMat& m) {
  // Faddeev-LeVerrier stays integral for integer input: c_{n-k} = -tr(A M_k) / k exactly.
  int n = m.rows();
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  IntMat mk = IntMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    IntMat am = m * mk;
    std::int64_t tr = 0;
    for (int i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / k;
    mk = am;
    for (int i = 0; i < n; ++i) mk(i, i) += c[n - k];
  }
  return c;
}

namespace {

struct SampleSummary {
  int drawn = 0;
  int elliptic = 0;
  // charpoly label -> shortest word found
  std::map<std::string, Word> words;
};

SampleSummary sample_elliptic(const RootDatum& rd, int samples, std::uint64_t seed) {
  SampleSummary s;
  std::mt19937_64 rng(seed);
  std::map<std::vector<std::int64_t>, std::string> labels;
  std::map<std::string, int> best_len;
  WeylElt w0 = longest_element(rd);
  IntMat minus = IntMat::identity(rd.rank());
  for (int i = 0; i < rd.rank(); ++i) minus(i, i) = -1;
  bool central_w0 = w0.m == minus;
  auto consider = [&](const WeylElt& w) {
    ++s.drawn;
    auto cp = integer_charpoly(w.m);
    std::int64_t at_one = std::accumulate(cp.begin(), cp.end(), std::int64_t{0});
    if (at_one == 0) return;
    ++s.elliptic;
    auto it = labels.find(cp);
    if (it == labels.end()) it = labels.emplace(cp, charpoly_label(w.m)).first;
    int len = length(rd, w);
    auto b = best_len.find(it->second);
    if (b == best_len.end() || len < b->second) {
      best_len[it->second] = len;
      s.words[it->second] = reduced_word(rd, w);
    }
  };
  consider(w0);
  for (int k = 0; k < samples; ++k) {
    WeylElt w = random_element(rd, rng);
    consider(w);
    // -1 in W: w and -w are both samples.
    if (central_w0) consider(multiply(w0, w));
  }
  return s;
}

}  // namespace

int attach_sampled_representatives(const RootDatum& rd, std::vector<EllipticClassRecord>& records, int samples,
                                   std::uint64_t seed) {
  SampleSummary s = sample_elliptic(rd, samples, seed);
  int attached = 0;
  for (auto& r : records) {
    if (r.rep_word || !r.charpoly) continue;
    auto it = s.words.find(*r.charpoly);
    if (it == s.words.end()) continue;
    r.rep_word = it->second;
    r.rep_j = 0;
    r.rep_source = "sampled";
    ++attached;
  }
  return attached;
}

std::vector<std::string> apply_word_file(const RootDatum& rd, std::vector<EllipticClassRecord>& records,
                                         std::istream& in) {
  std::vector<std::string> errors;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.rfind(':');
    std::string where = "line " + std::to_string(lineno) + ": ";
    if (colon == std::string::npos) {
      errors.push_back(where + "expected 'label: word'");
      continue;
    }
    std::string label = line.substr(0, colon), word = line.substr(colon + 1);
    label.erase(0, label.find_first_not_of(" \t"));
    label.erase(label.find_last_not_of(" \t") + 1);
    try {
      const EllipticClassRecord& found = find_class(records, label);
      auto& r = records[static_cast<std::size_t>(&found - records.data())];
      std::string body = word;
      while (!body.empty() && std::string("dD \t\r").find(body.back()) != std::string::npos) body.pop_back();
      TwistedWeylElt x = parse_element(rd, word);
      if (x.j != r.rep_j && r.rep_word) throw std::invalid_argument("delta exponent differs from the class");
      if (!is_elliptic(rd, x)) throw std::invalid_argument("word is not elliptic");
      std::int64_t want_order = r.rep_word ? order(rd, representative(rd, r)) : r.order;
      if (order(rd, x) != want_order)
        throw std::invalid_argument("order " + std::to_string(order(rd, x)) + " differs from " +
                                    std::to_string(want_order));
      std::optional<std::string> want_cp = r.charpoly;
      if (!want_cp && r.rep_word) want_cp = charpoly_label(action_matrix(rd, representative(rd, r)));
      std::string cp = charpoly_label(action_matrix(rd, x));
      if (want_cp && cp != *want_cp)
        throw std::invalid_argument("characteristic polynomial " + cp + " differs from " + *want_cp);
      r.rep_word = parse_word(body, rd.rank());
      r.rep_j = x.j;
      r.rep_source = "user";
    } catch (const std::exception& e) {
      errors.push_back(where + e.what());
    }
  }
  return errors;
}

std::string to_string(LiftMethod m) {
  switch (m) {
    case LiftMethod::EllipticTits: return "elliptic-tits";
    case LiftMethod::OddOrder: return "odd-order";
    case LiftMethod::TorsionSearch: return "torsion-search";
  }
  return "?";
}

LiftOrderReport lift_order(const RootDatum& rd, const TwistedWeylElt& x, const LiftOrderOptions& opts) {
  LiftOrderReport rep;
  rep.weyl_order = order(rd, x);
  NormalizerElt g = sigma(rd, x);
  if (is_elliptic(rd, x)) {
    rep.method = LiftMethod::EllipticTits;
    rep.exact = true;
    rep.witness = g;
    rep.lift_order = order_elt(rd, g);
    return rep;
  }
  if (rep.weyl_order % 2 == 1) {
    rep.method = LiftMethod::OddOrder;
    rep.exact = true;
    rep.witness = power(rd, g, rep.weyl_order + 1);
    rep.lift_order = order_elt(rd, rep.witness);
    if (rep.lift_order != rep.weyl_order) throw std::logic_error("odd-order lift has the wrong order");
    return rep;
  }
  int k = opts.torsion_bound;
  if (k < 1) throw std::invalid_argument("torsion bound must be positive");
  int n = rd.rank();
  double space = std::pow(static_cast<double>(k), n);
  if (space > 1e7) throw std::invalid_argument("torsion search space exceeds 10^7 elements");
  rep.method = LiftMethod::TorsionSearch;
  // (t g)^o = (N t) g^o with N = sum of L^i; work in lattice coordinates scaled to integers.
  IntMat l = action_matrix(rd, x);
  IntMat nsum(n, n);
  IntMat pw = IntMat::identity(n);
  for (std::int64_t i = 0; i < rep.weyl_order; ++i) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) nsum(a, b) += pw(a, b);
    pw = pw * l;
  }
  const RatMat& B = rd.cochar_basis();
  IntMat nl = to_integer(rd.cochar_basis_inverse() * to_rational(nsum) * B);
  RatVec u0 = rd.lattice_coords(power(rd, g, rep.weyl_order).t.coords);
  Integer den = lcm(denominator_lcm(u0), Integer(k));
  std::int64_t M = den.get_si();
  std::vector<std::int64_t> base(n), v(n, 0), acc(n);
  for (int i = 0; i < n; ++i) base[i] = Rational(u0[i] * Rational(den)).get_num().get_si();
  acc = base;
  std::int64_t step = M / k;
  std::int64_t best = -1;
  std::vector<std::int64_t> best_v;
  auto torus_order = [&]() {
    std::int64_t gdiv = M;
    for (int i = 0; i < n; ++i) gdiv = std::gcd(gdiv, ((acc[i] % M) + M) % M);
    return M / gdiv;
  };
  while (true) {
    std::int64_t o = torus_order();
    if (best < 0 || o < best) {
      best = o;
      best_v = v;
      if (o == 1) break;
    }
    int i = 0;
    while (i < n) {
      ++v[i];
      for (int r = 0; r < n; ++r) acc[r] += step * nl(r, i);
      if (v[i] < k) break;
      for (int r = 0; r < n; ++r) acc[r] -= k * step * nl(r, i);
      v[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  RatVec q(n);
  for (int i = 0; i < n; ++i) q[i] = Rational(best_v[i]) / k;
  rep.witness = {torus_from_cochar(rd, B * q), x.w, x.j};
  rep.lift_order = order_elt(rd, rep.witness);
  if (rep.lift_order != rep.weyl_order * best) throw std::logic_error("torsion search witness order mismatch");
  rep.exact = best == 1;
  return rep;
}

std::string to_string(SigmaKind k) {
  switch (k) {
    case SigmaKind::Trivial: return "trivial";
    case SigmaKind::ZG: return "z_G";
    case SigmaKind::Nontrivial: return "nontrivial";
  }
  return "?";
}

SigmaKind classify_sigma_power(const RootDatum& rd, const TorusElt& t) {
  if (is_identity(t)) return SigmaKind::Trivial;
  if (t == z_G(rd)) return SigmaKind::ZG;
  return SigmaKind::Nontrivial;
}

bool same_two_power(const Partition& p) {
  auto v2 = [](int a) {
    int k = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++k;
    }
    return k;
  };
  return std::all_of(p.begin(), p.end(), [&](int a) { return v2(a) == v2(p.front()); });
}

ClosedFormResult theorem_c_classification(const RootDatum& rd, const EllipticClassRecord& record) {
  ClosedFormResult res;
  char f = rd.family();
  int n = rd.rank();
  if (f == 'A') {
    res.value = z_G(rd);
    res.rule = "z_G";
  } else if (f == 'B' || f == 'C' || f == 'D') {
    if (!record.partition) throw std::invalid_argument("class " + record.label + " has no partition");
    const Partition& p = *record.partition;
    std::int64_t o = lcm_order(p);
    RatVec tau(n, Rational(0));
    if (f == 'C') {
      RatVec tstd;
      Rational e = lcm_of_parts(p);
      for (int a : p)
        for (int k = 0; k < a; ++k) tstd.push_back(e / a * (Rational(a - k) - Rational(1, 2)));
      tau = from_standard(rd, tstd);
      res.rule = "tau = sum (e/a_i) rho(C_{a_i})";
    } else {
      int sig = 0;
      std::int64_t eprev = 0;
      for (int a : p) {
        std::int64_t e = o / a;
        std::vector<int> S;
        if (f == 'B' || sig <= n - 2)
          for (int k = sig + 1; k <= n; ++k) S.push_back(k);
        tau = tau + Rational(e - eprev, 2) * rd.rho_check(S);
        eprev = e;
        sig += a;
      }
      res.rule = "tau = sum ((e_i - e_{i-1})/2) rho(S_i), e_i = o/a_i";
    }
    for (auto& c : tau) c.canonicalize();
    res.tau = tau;
    res.tau_standard = to_standard(rd, tau);
    res.value = torus_from_cochar(rd, tau);
  } else if (record.good_data) {
    res.value = sigma_power_via_good_data(rd, *record.good_data);
    res.rule = "good data";
  } else {
    throw std::invalid_argument("no closed form for class " + record.label);
  }
  res.kind = classify_sigma_power(rd, res.value);
  return res;
}

NormalizerElt epsilon_element(const RootDatum& rd) {
  if (rd.family() != 'A' || (!rd.has_delta() && rd.rank() != 1))
    throw std::invalid_argument("epsilon needs type A with the flip");
  return sigma(rd, {longest_element(rd), rd.has_delta() ? 1 : 0});
}

bool TableReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.mismatches.empty(); });
}

namespace {

struct TableSpec {
  std::string type;
  std::string delta = "none";
  bool twisted = false;
  char family = 'A';
  int rank = 0;
};

TableSpec parse_table_id(const std::string& id) {
  std::smatch m;
  if (!std::regex_match(id, m, std::regex(R"(([23]?)([A-G])(\d+))")))
    throw std::invalid_argument("unknown table: " + id);
  TableSpec s;
  s.family = m[2].str()[0];
  s.rank = std::stoi(m[3]);
  s.type = m[2].str() + m[3].str();
  std::string prefix = m[1];
  bool ok = false;
  if (prefix.empty()) {
    ok = (s.family == 'F' && s.rank == 4) || (s.family == 'E' && s.rank >= 6 && s.rank <= 8) ||
         (s.family == 'G' && s.rank == 2) || (s.family == 'A' && s.rank >= 1 && s.rank <= 8) ||
         ((s.family == 'B' || s.family == 'C') && s.rank >= 2 && s.rank <= 8) ||
         (s.family == 'D' && s.rank >= 4 && s.rank <= 8);
  } else if (prefix == "2") {
    s.twisted = true;
    s.delta = "flip";
    ok = (s.family == 'E' && s.rank == 6) || (s.family == 'A' && s.rank >= 2 && s.rank <= 8) ||
         (s.family == 'D' && s.rank >= 4 && s.rank <= 8);
  } else {
    s.twisted = true;
    s.delta = "triality";
    ok = s.family == 'D' && s.rank == 4;
  }
  if (!ok) throw std::invalid_argument("unknown table: " + id);
  return s;
}

std::optional<SigmaKind> expected_kind(const TableSpec& s, const std::string& table_id, const RootDatum& rd,
                                       const EllipticClassRecord& r) {
  const std::string& iso = rd.isogeny_name();
  if (table_id == "F4") return strip_underscores(r.label) == "A3+~A1" ? SigmaKind::Nontrivial : SigmaKind::Trivial;
  if (table_id == "E7") {
    if (iso == "adjoint") return SigmaKind::Trivial;
    static const std::set<std::string> one = {"E7(a2)", "A7", "2A3+A1"};
    return one.count(r.label) ? SigmaKind::Trivial : SigmaKind::ZG;
  }
  if (table_id == "E8" || table_id == "E6" || table_id == "2E6" || table_id == "3D4" || table_id == "G2")
    return SigmaKind::Trivial;
  if (s.family == 'A') return SigmaKind::ZG;
  if (s.family == 'C') {
    if (iso == "simply_connected") return SigmaKind::Nontrivial;
    if (iso == "adjoint") return same_two_power(*r.partition) ? SigmaKind::Trivial : SigmaKind::Nontrivial;
  }
  if ((s.family == 'B' || s.family == 'D') && (iso == "adjoint" || iso == "SO")) return SigmaKind::Trivial;
  return std::nullopt;
}

bool matches_expectation(const RootDatum& rd, SigmaKind want, const TorusElt& t) {
  switch (want) {
    case SigmaKind::Trivial: return is_identity(t);
    case SigmaKind::ZG: return t == z_G(rd);
    case SigmaKind::Nontrivial: return !is_identity(t);
  }
  return false;
}

int default_samples(const std::string& table_id) {
  if (table_id == "E7") return 6000;
  if (table_id == "E8") return 30000;
  return 0;
}

}  // namespace

std::vector<std::string> standard_isogenies(const std::string& table_id) {
  TableSpec s = parse_table_id(table_id);
  if (s.family == 'A') {
    std::vector<std::string> out;
    int m = s.rank + 1;
    for (int k = 1; k <= m; ++k)
      if (m % k == 0)
        out.push_back(k == 1 ? "simply_connected" : k == m ? "adjoint" : "SL(" + std::to_string(m) + ")/mu_" + std::to_string(k));
    return out;
  }
  if (s.family == 'D') {
    std::vector<std::string> out = {"simply_connected", "adjoint", "SO"};
    if (!s.twisted && s.rank % 2 == 0) out.push_back("Semispin");
    if (s.delta == "triality") out = {"simply_connected", "adjoint"};
    return out;
  }
  if (s.family == 'F' || s.family == 'G' || (s.family == 'E' && s.rank == 8)) return {"simply_connected"};
  return {"simply_connected", "adjoint"};
}

TableReport verify_table(const std::string& table_id, const VerifyOptions& opts) {
  TableSpec spec = parse_table_id(table_id);
  TableReport report;
  report.table_id = table_id;
  report.type_label = spec.type;
  report.twisted = spec.twisted;
  std::vector<std::string> isos = opts.isogenies.empty() ? standard_isogenies(table_id) : opts.isogenies;
  RootDatum base = build_root_datum(spec.type, "simply_connected", spec.delta);
  std::vector<RootDatum> data;
  for (const auto& iso : isos) data.push_back(build_root_datum(spec.type, iso, spec.delta));

  auto records = elliptic_classes(base, spec.twisted);
  int samples = opts.samples >= 0 ? opts.samples : default_samples(table_id);
  std::map<std::string, Word> sampled;
  if (samples > 0) {
    SampleSummary s = sample_elliptic(base, samples, opts.seed);
    std::ostringstream note;
    note << "sampled " << s.drawn << " elements (seed " << opts.seed << "), " << s.elliptic << " elliptic, "
         << s.words.size() << " characteristic polynomials";
    report.notes.push_back(note.str());
    for (auto& r : records) {
      if (r.rep_word || !r.charpoly) continue;
      auto it = s.words.find(*r.charpoly);
      if (it == s.words.end()) continue;
      r.rep_word = it->second;
      r.rep_source = "sampled";
    }
    std::set<std::string> tabulated;
    for (const auto& r : records)
      if (r.charpoly) tabulated.insert(*r.charpoly);
    for (const auto& [cp, w] : s.words)
      if (!tabulated.count(cp)) sampled[cp] = w;
  }
  if (!opts.word_file.empty()) {
    std::ifstream in(opts.word_file);
    if (!in) throw std::invalid_argument("cannot read word file " + opts.word_file);
    for (const auto& e : apply_word_file(base, records, in)) report.notes.push_back("word file " + e);
  }

  report.rows.resize(records.size());
  parallel_for(records.size(), [&](std::size_t idx) {
    const auto& r = records[idx];
    TableRow& row = report.rows[idx];
    row.label = r.label;
    row.partition = r.partition;
    row.tabulated_order = r.order;
    row.rep_source = r.rep_source;
    if (spec.family == 'C' && r.partition) row.same_two_power = same_two_power(*r.partition);
    std::optional<RatVec> direct;
    std::int64_t o = r.order;
    if (r.rep_word) {
      TwistedWeylElt x = representative(base, r);
      row.rep = format_word(*r.rep_word, r.rep_j);
      o = order(base, x);
      row.computed_order = o;
      if (!is_elliptic(base, x)) row.mismatches.push_back("representative is not elliptic");
      if (o != r.order)
        row.mismatches.push_back("order " + std::to_string(o) + " differs from tabulated " + std::to_string(r.order));
      if (r.charpoly && charpoly_label(action_matrix(base, x)) != *r.charpoly)
        row.mismatches.push_back("characteristic polynomial differs from " + *r.charpoly);
      if (r.good_data) {
        std::int64_t lhs = static_cast<std::int64_t>(length(base, x.w)) * o, rhs = 0;
        for (const auto& [S, d] : *r.good_data) {
          std::int64_t npos = length(base, longest_element(base, S));
          rhs += static_cast<std::int64_t>(d) * npos;
        }
        row.length_identity = lhs == rhs;
        if (!*row.length_identity && r.rep_source == "table")
          row.mismatches.push_back("length identity l(w) o(w) = sum d_i |pos(S_i)| fails");
      }
      direct = sigma_power(base, x).coords;
    }
    for (std::size_t k = 0; k < data.size(); ++k) {
      const RootDatum& rd = data[k];
      IsogenyColumn col;
      col.isogeny = isos[k];
      if (direct) col.methods.push_back({"direct", torus_from_cochar(rd, *direct)});
      if (r.good_data) col.methods.push_back({"good-data", sigma_power_via_good_data(rd, *r.good_data)});
      if (spec.family == 'A' || spec.family == 'B' || spec.family == 'C' ||
          (spec.family == 'D' && spec.delta != "triality"))
        col.methods.push_back({"closed-form", theorem_c_classification(rd, r).value});
      if (col.methods.empty()) {
        row.mismatches.push_back(col.isogeny + ": no method available");
        row.columns.push_back(std::move(col));
        continue;
      }
      col.sigma_power = col.methods.front().second;
      for (const auto& [name, value] : col.methods)
        if (value != col.sigma_power)
          row.mismatches.push_back(col.isogeny + ": " + name + " " + to_string(value) + " differs from " +
                                   col.methods.front().first + " " + to_string(col.sigma_power));
      col.sigma_power_order = order_torus(rd, col.sigma_power);
      col.kind = classify_sigma_power(rd, col.sigma_power);
      col.lift_order = o * col.sigma_power_order.get_si();
      col.expected = expected_kind(spec, table_id, rd, r);
      if (col.expected && !matches_expectation(rd, *col.expected, col.sigma_power))
        row.mismatches.push_back(col.isogeny + ": sigma power is " + to_string(col.kind) + ", expected " +
                                 to_string(*col.expected));
      row.columns.push_back(std::move(col));
    }
  });

  // Elliptic classes met while sampling that no tabulated row covers.
  for (const auto& [cp, w] : sampled) {
    TwistedWeylElt x{from_word(base, w), 0};
    RatVec direct = sigma_power(base, x).coords;
    std::ostringstream note;
    note << "untabulated elliptic class " << cp << " (order " << order(base, x) << ", word " << format_word(w) << "):";
    for (std::size_t k = 0; k < data.size(); ++k)
      note << " " << isos[k] << " " << to_string(classify_sigma_power(data[k], torus_from_cochar(data[k], direct)));
    report.notes.push_back(note.str());
    if (table_id == "E8") {
      TorusElt t = torus_from_cochar(data[0], direct);
      if (!is_identity(t)) {
        TableRow row;
        row.label = cp;
        row.mismatches.push_back("sampled elliptic element with nontrivial sigma power");
        report.rows.push_back(row);
      }
    }
  }
  return report;
}

}  // namespace wlift
