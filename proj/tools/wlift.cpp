// wlift: minimal orders of lifts of Weyl group elements to the torus normalizer.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wlift/classes.hpp"
#include "wlift/element_io.hpp"
#include "wlift/regular.hpp"
#include "wlift/splitting.hpp"

using nlohmann::json;
using namespace wlift;

namespace {

enum class Format { Plain, Csv, Json };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_table(std::ostream& os, const Table& t, Format f) {
  if (f == Format::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
      os << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return;
  }
  std::vector<std::size_t> width(t.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  grow(t.header);
  for (const auto& r : t.rows) grow(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) s += "  ";
      s += cells[i];
      if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
    }
    os << s << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

/// Key/value output: "key: value" lines in plain mode, a two-column table in CSV.
void print_fields(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& fields, Format f) {
  if (f == Format::Csv) {
    Table t{{"field", "value"}, {}};
    for (const auto& [k, v] : fields) t.rows.push_back({k, v});
    print_table(os, t, f);
    return;
  }
  std::size_t w = 0;
  for (const auto& kv : fields) w = std::max(w, kv.first.size());
  for (const auto& [k, v] : fields) os << k << ":" << std::string(w - k.size() + 1, ' ') << v << "\n";
}

json rational_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json torus_json(const TorusElt& t) { return rational_json(t.coords); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string good_data_string(const GoodData& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += " ";
    s += "({" + join_ints(g[i].first) + "}," + std::to_string(g[i].second) + ")";
  }
  return s;
}

/// Columns of B, each in simple-coroot coordinates.
std::string basis_string(const RatMat& b) {
  std::string s;
  for (int j = 0; j < b.cols(); ++j) s += (j ? " " : "") + to_string(b.column(j));
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct DatumOptions {
  std::string datum;
  std::string isogeny;
  bool twisted = false;
};

/// A JSON file path or a named group ("SL4", "C3:adjoint", "2A5"). A "2"/"3" prefix selects the twisted coset.
RootDatum load_datum(DatumOptions& o) {
  std::error_code ec;
  bool is_file = o.datum.find(".json") != std::string::npos && std::filesystem::is_regular_file(o.datum, ec);
  RootDatum rd = is_file ? root_datum_from_json(read_file(o.datum))
                         : parse_datum(o.isogeny.empty() ? o.datum : o.datum + ":" + o.isogeny);
  if (is_file && !o.isogeny.empty()) throw std::invalid_argument("--isogeny cannot override a datum file");
  if (o.twisted && !rd.has_delta()) rd = with_delta(rd, "flip");
  if (!is_file && (o.datum[0] == '2' || o.datum[0] == '3')) o.twisted = true;
  return rd;
}

void add_datum_options(CLI::App* cmd, DatumOptions& o) {
  cmd->add_option("datum", o.datum, "named group (SL4, Spin8, C3:adjoint, 2A5, E7) or a datum JSON file")
      ->required();
  cmd->add_option("--isogeny", o.isogeny, "simply_connected | adjoint | SO | Semispin | SL(n)/mu_k | basis");
  cmd->add_flag("--twisted", o.twisted, "use the twisted coset W delta (adds the flip when absent)");
}

struct Common {
  std::string format = "plain";
  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "json") return Format::Json;
    return Format::Plain;
  }
};

void emit_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------- describe

int cmd_describe(DatumOptions d, const Common& c) {
  RootDatum rd = load_datum(d);
  std::size_t pos = rd.positive_roots().size();
  TorusElt z = z_G(rd);
  std::string group = rd.is_simple() ? recognize_isogeny(rd) : "";
  std::string delta = "none";
  if (rd.has_delta()) {
    std::vector<int> p;
    for (int i : rd.delta()) p.push_back(i + 1);
    delta = join_ints(p);
  }
  if (c.fmt() == Format::Json) {
    json doc;
    doc["type"] = rd.type_label();
    doc["isogeny"] = rd.isogeny_name();
    doc["group"] = group;
    doc["rank"] = rd.rank();
    doc["roots"] = 2 * pos;
    doc["positive_roots"] = pos;
    doc["weyl_order"] = weyl_group_order(rd).get_str();
    doc["center_order"] = rd.center_order().get_str();
    doc["rho_check"] = rational_json(rd.rho_check());
    doc["rho_check_in_cochar_lattice"] = rho_in_cochar_lattice(rd);
    doc["z_G"] = torus_json(z);
    doc["z_G_order"] = order_torus(rd, z).get_str();
    doc["delta"] = delta;
    doc["datum"] = json::parse(root_datum_to_json(rd));
    emit_json(doc);
    return 0;
  }
  print_fields(std::cout,
               {{"type", rd.type_label()},
                {"isogeny", rd.isogeny_name()},
                {"group", group.empty() ? "-" : group},
                {"rank", std::to_string(rd.rank())},
                {"roots", std::to_string(2 * pos)},
                {"positive roots", std::to_string(pos)},
                {"|W|", weyl_group_order(rd).get_str()},
                {"|Z|", rd.center_order().get_str()},
                {"rho-check", to_string(rd.rho_check())},
                {"rho-check in X_*", yes_no(rho_in_cochar_lattice(rd))},
                {"z_G", to_string(z)},
                {"o(z_G)", order_torus(rd, z).get_str()},
                {"delta", delta},
                {"cochar basis", basis_string(rd.cochar_basis())}},
               c.fmt());
  return 0;
}

// ---------------------------------------------------------------- lift-order

struct LiftArgs {
  std::string word;
  std::string label;
  int torsion_bound = 2;
};

int cmd_lift_order(DatumOptions d, const LiftArgs& a, const Common& c) {
  RootDatum rd = load_datum(d);
  if (a.word.empty() == a.label.empty()) throw std::invalid_argument("give exactly one of --word and --class");
  TwistedWeylElt x;
  std::string label;
  if (!a.label.empty()) {
    auto records = elliptic_classes(rd, d.twisted);
    const auto& r = find_class(records, a.label);
    label = r.label;
    if (!r.rep_word) throw std::invalid_argument("class " + r.label + " has no representative; use --word");
    x = representative(rd, r);
  } else {
    x = parse_element(rd, a.word);
  }
  LiftOrderReport rep = lift_order(rd, x, {a.torsion_bound});
  std::int64_t check = order_elt(rd, rep.witness);
  bool consistent = check == rep.lift_order && rep.lift_order % rep.weyl_order == 0 && projection(rep.witness) == x;
  std::string witness_word = format_element(rd, projection(rep.witness));
  if (c.fmt() == Format::Json) {
    json doc;
    doc["element"] = format_element(rd, x);
    if (!label.empty()) doc["class"] = label;
    doc["elliptic"] = is_elliptic(rd, x);
    doc["weyl_order"] = rep.weyl_order;
    doc["lift_order"] = rep.lift_order;
    doc["exact"] = rep.exact;
    doc["method"] = to_string(rep.method);
    doc["witness"] = {{"t", torus_json(rep.witness.t)}, {"word", witness_word}, {"j", rep.witness.j}};
    doc["consistent"] = consistent;
    emit_json(doc);
  } else {
    std::vector<std::pair<std::string, std::string>> f;
    f.push_back({"element", format_element(rd, x)});
    if (!label.empty()) f.push_back({"class", label});
    f.push_back({"elliptic", yes_no(is_elliptic(rd, x))});
    f.push_back({"o(w)", std::to_string(rep.weyl_order)});
    f.push_back({"lift order", std::to_string(rep.lift_order)});
    f.push_back({"exact", yes_no(rep.exact)});
    f.push_back({"method", to_string(rep.method)});
    f.push_back({"witness t", to_string(rep.witness.t)});
    f.push_back({"witness word", witness_word});
    f.push_back({"witness check", consistent ? "ok" : "MISMATCH"});
    print_fields(std::cout, f, c.fmt());
  }
  return consistent ? 0 : 1;
}

// ---------------------------------------------------------------- elliptic-table

struct TableArgs {
  std::string words;
  int samples = 0;
  std::uint64_t seed = 20240601;
};

int cmd_elliptic_table(DatumOptions d, const TableArgs& a, const Common& c) {
  RootDatum rd = load_datum(d);
  auto records = elliptic_classes(rd, d.twisted);
  int problems = 0;
  if (!a.words.empty()) {
    std::ifstream in(a.words);
    if (!in) throw std::invalid_argument("cannot read " + a.words);
    for (const auto& msg : apply_word_file(rd, records, in)) {
      std::cerr << "rejected: " << msg << "\n";
      ++problems;
    }
  }
  if (a.samples > 0) attach_sampled_representatives(rd, records, a.samples, a.seed);

  Table t{{"label", "o(w)", "rep", "source", "good data", "sigma power", "o(sigma power)", "lift order", "exact",
           "check"},
          {}};
  json rows = json::array();
  for (const auto& r : records) {
    std::optional<TorusElt> direct, formula;
    std::int64_t lift = 0;
    bool exact = false;
    if (r.rep_word) {
      TwistedWeylElt x = representative(rd, r);
      direct = sigma_power(rd, x);
      LiftOrderReport lr = lift_order(rd, x);
      lift = lr.lift_order;
      exact = lr.exact;
    }
    try {
      formula = theorem_c_classification(rd, r).value;
    } catch (const std::invalid_argument&) {
    }
    std::optional<TorusElt> value = direct ? direct : formula;
    if (!direct && formula) {
      lift = r.order * order_torus(rd, *formula).get_si();
      exact = true;
    }
    std::string check = "-";
    if (direct && formula) {
      check = *direct == *formula ? "agree" : "MISMATCH";
      if (*direct != *formula) ++problems;
    }
    std::string rep = r.rep_word ? format_word(*r.rep_word, r.rep_j) : "-";
    std::string gd = r.good_data ? good_data_string(*r.good_data) : "-";
    std::string sp = value ? to_string(*value) : "?";
    std::string so = value ? order_torus(rd, *value).get_str() : "?";
    t.rows.push_back({r.label, std::to_string(r.order), rep, r.rep_source.empty() ? "-" : r.rep_source, gd, sp, so,
                      lift ? std::to_string(lift) : "?", lift ? yes_no(exact) : "-", check});
    json row;
    row["label"] = r.label;
    row["order"] = r.order;
    row["rep"] = r.rep_word ? json(rep) : json(nullptr);
    row["rep_source"] = r.rep_source;
    if (r.partition) row["partition"] = *r.partition;
    if (r.good_data) {
      json g = json::array();
      for (const auto& [S, dd] : *r.good_data) g.push_back({{"S", S}, {"d", dd}});
      row["good_data"] = g;
    }
    if (r.charpoly) row["charpoly"] = *r.charpoly;
    row["sigma_power"] = value ? torus_json(*value) : json(nullptr);
    row["sigma_power_order"] = so;
    row["lift_order"] = lift ? json(lift) : json(nullptr);
    row["exact"] = exact;
    row["check"] = check;
    rows.push_back(row);
  }
  if (c.fmt() == Format::Json) {
    emit_json({{"datum", rd.describe_name()}, {"twisted", d.twisted}, {"classes", rows}});
  } else {
    if (c.fmt() == Format::Plain) std::cout << rd.describe_name() << (d.twisted ? " (twisted)" : "") << "\n";
    print_table(std::cout, t, c.fmt());
  }
  return problems ? 1 : 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string table;
  std::vector<std::string> isogenies;
  std::string words;
  int samples = -1;
  std::uint64_t seed = 20240601;
};

int cmd_verify(const VerifyArgs& a, const Common& c) {
  VerifyOptions opts;
  opts.isogenies = a.isogenies;
  opts.samples = a.samples;
  opts.seed = a.seed;
  opts.word_file = a.words;
  TableReport rep = verify_table(a.table, opts);

  std::vector<std::string> isos;
  if (!rep.rows.empty())
    for (const auto& col : rep.rows.front().columns) isos.push_back(col.isogeny);

  if (c.fmt() == Format::Json) {
    json rows = json::array();
    for (const auto& r : rep.rows) {
      json row;
      row["label"] = r.label;
      row["order"] = r.tabulated_order;
      row["computed_order"] = r.computed_order ? json(*r.computed_order) : json(nullptr);
      row["rep"] = r.rep ? json(*r.rep) : json(nullptr);
      row["rep_source"] = r.rep_source;
      if (r.length_identity) row["length_identity"] = *r.length_identity;
      if (r.same_two_power) row["same_two_power"] = *r.same_two_power;
      json cols = json::array();
      for (const auto& col : r.columns) {
        json m = json::object();
        for (const auto& [name, v] : col.methods) m[name] = torus_json(v);
        cols.push_back({{"isogeny", col.isogeny},
                        {"sigma_power", torus_json(col.sigma_power)},
                        {"sigma_power_order", col.sigma_power_order.get_str()},
                        {"kind", to_string(col.kind)},
                        {"lift_order", col.lift_order},
                        {"exact", col.exact},
                        {"methods", m},
                        {"expected", col.expected ? json(to_string(*col.expected)) : json(nullptr)}});
      }
      row["isogenies"] = cols;
      row["mismatches"] = r.mismatches;
      rows.push_back(row);
    }
    emit_json({{"table", rep.table_id},
               {"type", rep.type_label},
               {"twisted", rep.twisted},
               {"ok", rep.ok()},
               {"rows", rows},
               {"notes", rep.notes}});
    return rep.ok() ? 0 : 1;
  }

  bool show_two = std::any_of(rep.rows.begin(), rep.rows.end(), [](const TableRow& r) { return r.same_two_power.has_value(); });
  bool show_len = std::any_of(rep.rows.begin(), rep.rows.end(), [](const TableRow& r) { return r.length_identity.has_value(); });
  Table t{{"label", "o(w)", "computed", "rep"}, {}};
  if (show_two) t.header.push_back("same 2-power");
  if (show_len) t.header.push_back("length identity");
  for (const auto& iso : isos) {
    t.header.push_back(iso + " sigma^o");
    t.header.push_back(iso + " o(sigma^o)");
    t.header.push_back(iso + " lift");
    t.header.push_back(iso + " exact");
  }
  t.header.push_back("status");
  std::vector<std::string> diffs;
  for (const auto& r : rep.rows) {
    std::vector<std::string> cells = {r.label, std::to_string(r.tabulated_order),
                                      r.computed_order ? std::to_string(*r.computed_order) : "-",
                                      r.rep_source.empty() ? "-" : r.rep_source};
    if (show_two) cells.push_back(r.same_two_power ? yes_no(*r.same_two_power) : "-");
    if (show_len) cells.push_back(r.length_identity ? (*r.length_identity ? "holds" : "FAILS") : "-");
    for (const auto& col : r.columns) {
      cells.push_back(to_string(col.kind));
      cells.push_back(col.sigma_power_order.get_str());
      cells.push_back(std::to_string(col.lift_order));
      cells.push_back(yes_no(col.exact));
    }
    cells.push_back(r.mismatches.empty() ? "ok" : "MISMATCH");
    t.rows.push_back(cells);
    for (const auto& m : r.mismatches) diffs.push_back(r.label + ": " + m);
  }
  if (c.fmt() == Format::Plain)
    std::cout << "table " << rep.table_id << " (" << rep.type_label << (rep.twisted ? ", twisted" : "") << ")\n";
  print_table(std::cout, t, c.fmt());
  std::ostream& side = c.fmt() == Format::Csv ? std::cerr : std::cout;
  for (const auto& n : rep.notes) side << "note: " << n << "\n";
  for (const auto& m : diffs) side << "mismatch: " << m << "\n";
  side << (rep.ok() ? "PASS" : "FAIL") << " " << rep.table_id << " (" << rep.rows.size() << " rows, " << diffs.size()
       << " mismatches)\n";
  return rep.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- regular

int cmd_regular(DatumOptions d, const std::string& word, const Common& c) {
  RootDatum rd = load_datum(d);
  TwistedWeylElt x = parse_element(rd, word);
  RegularityReport rep = regularity(rd, x);
  int problems = 0;
  json checks = json::array();
  Table t{{"d", "eigenspace dim", "charpoly mult", "regular", "lcm law", "power law"}, {}};
  for (const auto& [dd, dim] : rep.eigenspace_dim) {
    int mult = rep.charpoly_multiplicity.count(dd) ? rep.charpoly_multiplicity.at(dd) : 0;
    if (mult != dim) ++problems;
    bool reg = std::find(rep.regular_orders.begin(), rep.regular_orders.end(), dd) != rep.regular_orders.end();
    std::string lcm = "-", power = "-";
    json ck = {{"d", dd}, {"eigenspace_dim", dim}, {"charpoly_multiplicity", mult}, {"regular", reg}};
    if (reg) {
      bool l = order_lcm_check(rd, x, dd);
      if (!l) ++problems;
      lcm = l ? "holds" : "FAILS";
      ck["lcm_law"] = l;
      if (dd > 1) {
        bool p = verify_regular_power(rd, x, dd);
        power = p ? "holds" : "fails";
        ck["power_law"] = p;
      } else {
        auto u = conjugator_to_delta(rd, x);
        power = u ? "conj to delta by " + format_word(reduced_word(rd, *u)) : "no conjugator";
        ck["conjugator"] = u ? json(format_word(reduced_word(rd, *u))) : json(nullptr);
      }
    }
    t.rows.push_back({std::to_string(dd), std::to_string(dim), std::to_string(mult), yes_no(reg), lcm, power});
    checks.push_back(ck);
  }
  if (c.fmt() == Format::Json) {
    emit_json({{"element", format_element(rd, x)},
               {"order", rep.order},
               {"elliptic", is_elliptic(rd, x)},
               {"regular_orders", rep.regular_orders},
               {"z_regular", rep.z_regular},
               {"candidates", checks}});
  } else {
    if (c.fmt() == Format::Plain) {
      print_fields(std::cout,
                   {{"element", format_element(rd, x)},
                    {"o(w)", std::to_string(rep.order)},
                    {"elliptic", yes_no(is_elliptic(rd, x))},
                    {"regular orders", rep.regular_orders.empty() ? "none" : join_ints(rep.regular_orders, " ")},
                    {"Z-regular", yes_no(rep.z_regular)}},
                   Format::Plain);
    }
    print_table(std::cout, t, c.fmt());
  }
  return problems ? 1 : 0;
}

// ---------------------------------------------------------------- splitting

json certificate_json(const SplittingCertificate& cert) {
  json j = json::object();
  for (const auto& [a, t] : cert) j[std::to_string(a)] = torus_json(t);
  return j;
}

SplittingCertificate certificate_from_json(const RootDatum& rd, const std::string& text) {
  json j = json::parse(text);
  SplittingCertificate cert;
  for (auto it = j.begin(); it != j.end(); ++it) {
    RatVec v;
    for (const auto& x : it.value()) v.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
    cert[std::stoi(it.key())] = torus_from_cochar(rd, v);
  }
  return cert;
}

struct SplitArgs {
  int torsion_bound = 4;
  bool char2 = false;
  int certificates = 1;
};

int cmd_splitting(DatumOptions d, const SplitArgs& a, const Common& c) {
  RootDatum rd = load_datum(d);
  SplittingVerdict cls = splits_classification(rd, a.char2);
  std::vector<Obstruction> obs = a.char2 ? std::vector<Obstruction>{} : obstruction_report(rd);
  std::optional<SearchResult> search;
  std::string search_note;
  bool classified_no = cls.splits && !*cls.splits;
  if (!classified_no && !a.char2) {
    try {
      search = search_splittings(rd, {a.torsion_bound, a.certificates});
    } catch (const std::invalid_argument& e) {
      search_note = e.what();
    }
  }
  std::vector<std::string> problems;
  bool have_cert = search && !search->certificates.empty();
  if (search)
    for (const auto& cert : search->certificates)
      if (!verify_certificate(rd, cert)) problems.push_back("certificate fails relation check: " + to_string(cert));
  if (cls.splits && *cls.splits && !obs.empty()) problems.push_back("classification says splits but obstructions fired");
  if (cls.splits && !*cls.splits && have_cert) problems.push_back("classification says no but a certificate exists");
  if (have_cert && !obs.empty()) problems.push_back("certificate found despite obstructions");
  if (search && !have_cert)
    search_note = "no certificate at torsion level " + std::to_string(a.torsion_bound);

  SplittingVerdict v = cls;
  if (have_cert) {
    v.splits = true;
    v.source = VerdictSource::SearchCertificate;
    v.certificate = search->certificates.front();
  } else if (!obs.empty()) {
    v.splits = false;
    v.source = VerdictSource::Obstruction;
  }
  std::string verdict = v.splits ? (*v.splits ? "splits" : "does not split") : "undecided";

  if (c.fmt() == Format::Json) {
    json o = json::array();
    for (const auto& ob : obs)
      o.push_back({{"kind", ob.kind == Obstruction::Kind::RhoCheck ? "rho-check" : "elliptic-class"},
                   {"label", ob.label},
                   {"twisted", ob.twisted},
                   {"weyl_order", ob.weyl_order},
                   {"lift_order", ob.lift_order},
                   {"text", ob.describe()}});
    json certs = json::array();
    if (search)
      for (const auto& cert : search->certificates) certs.push_back(certificate_json(cert));
    json doc = {{"datum", rd.describe_name()},
                {"group", cls.group},
                {"splits", v.splits ? json(*v.splits) : json(nullptr)},
                {"source", to_string(v.source)},
                {"classification", cls.splits ? json(*cls.splits) : json(nullptr)},
                {"classification_note", cls.note},
                {"obstructions", o},
                {"certificates", certs},
                {"search_note", search_note},
                {"problems", problems}};
    if (search) {
      doc["search"] = {{"torsion_bound", a.torsion_bound},
                       {"heuristic_used", search->heuristic_used},
                       {"full_search_used", search->full_search_used},
                       {"candidates_checked", search->candidates_checked}};
    }
    emit_json(doc);
    return problems.empty() ? 0 : 1;
  }
  std::vector<std::pair<std::string, std::string>> f = {
      {"datum", rd.describe_name()},
      {"group", cls.group.empty() ? "-" : cls.group},
      {"verdict", verdict},
      {"source", to_string(v.source)},
      {"classification", cls.splits ? yes_no(*cls.splits) : "unknown"}};
  if (!cls.note.empty()) f.push_back({"note", cls.note});
  for (const auto& ob : obs) f.push_back({"obstruction", ob.describe()});
  if (search) {
    f.push_back({"search", "k=" + std::to_string(a.torsion_bound) + ", " +
                               (search->heuristic_used ? "heuristic" : "full") + ", " +
                               std::to_string(search->candidates_checked) + " candidates"});
    for (const auto& cert : search->certificates) f.push_back({"certificate", to_string(cert)});
  }
  if (!search_note.empty()) f.push_back({"search note", search_note});
  for (const auto& p : problems) f.push_back({"MISMATCH", p});
  print_fields(std::cout, f, c.fmt());
  return problems.empty() ? 0 : 1;
}

struct EquivArgs {
  int torsion_bound = 8;
  int certificates = 2;
  std::vector<std::string> cert_files;
};

int cmd_equivalent(DatumOptions d, const EquivArgs& a, const Common& c) {
  RootDatum rd = load_datum(d);
  std::vector<SplittingCertificate> certs;
  std::vector<std::string> names;
  for (const auto& path : a.cert_files) {
    certs.push_back(certificate_from_json(rd, read_file(path)));
    names.push_back(path);
  }
  if (a.cert_files.size() < 2) {
    SearchResult r = search_splittings(rd, {a.torsion_bound, a.certificates});
    for (const auto& cert : r.certificates) {
      certs.push_back(cert);
      names.push_back("search#" + std::to_string(certs.size()));
    }
  }
  int problems = 0;
  std::vector<bool> valid;
  for (const auto& cert : certs) {
    valid.push_back(verify_certificate(rd, cert));
    if (!valid.back()) ++problems;
  }
  Table t{{"certificate", "valid", "value"}, {}};
  for (std::size_t i = 0; i < certs.size(); ++i) t.rows.push_back({names[i], yes_no(valid[i]), to_string(certs[i])});
  Table m{{"pair", "equivalent"}, {}};
  json pairs = json::array();
  for (std::size_t i = 0; i < certs.size(); ++i)
    for (std::size_t k = i + 1; k < certs.size(); ++k) {
      if (!valid[i] || !valid[k]) continue;
      bool eq = splittings_equivalent(rd, certs[i], certs[k]);
      m.rows.push_back({names[i] + " ~ " + names[k], yes_no(eq)});
      pairs.push_back({{"a", names[i]}, {"b", names[k]}, {"equivalent", eq}});
    }
  if (c.fmt() == Format::Json) {
    json cs = json::array();
    for (std::size_t i = 0; i < certs.size(); ++i)
      cs.push_back({{"name", names[i]}, {"valid", valid[i]}, {"certificate", certificate_json(certs[i])}});
    emit_json({{"datum", rd.describe_name()}, {"certificates", cs}, {"pairs", pairs}});
  } else {
    print_table(std::cout, t, c.fmt());
    if (c.fmt() == Format::Plain) std::cout << "\n";
    print_table(std::cout, m, c.fmt());
  }
  return problems ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wlift: lifts of Weyl group elements to the torus normalizer"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "plain | csv | json")
      ->check(CLI::IsMember({"plain", "csv", "json"}))
      ->capture_default_str();

  DatumOptions dopt;
  LiftArgs lift;
  TableArgs table;
  VerifyArgs verify;
  SplitArgs split;
  EquivArgs equiv;
  std::string regular_word;

  auto* describe = app.add_subcommand("describe", "summary of a root datum");
  add_datum_options(describe, dopt);

  auto* lo = app.add_subcommand("lift-order", "minimal order of a lift of a (twisted) Weyl element");
  add_datum_options(lo, dopt);
  lo->add_option("--word", lift.word, "word such as 2323432134, 10,11,3 or 13524-13524d");
  lo->add_option("--class", lift.label, "elliptic class label or partition");
  lo->add_option("--torsion-bound", lift.torsion_bound, "k for the (1/k)X_*/X_* search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* et = app.add_subcommand("elliptic-table", "elliptic classes with sigma powers and lift orders");
  add_datum_options(et, dopt);
  et->add_option("--words", table.words, "word file, one 'label: word' per line");
  et->add_option("--samples", table.samples, "random elements used to find missing representatives")
      ->capture_default_str();
  et->add_option("--seed", table.seed)->capture_default_str();

  auto* vf = app.add_subcommand("verify", "verify a class table (F4, 2E6, E7, E8, E6, 3D4, G2, An, 2An, Bn, Cn, Dn, 2Dn)");
  vf->add_option("table", verify.table, "table id")->required();
  vf->add_option("--isogeny", verify.isogenies, "restrict to these isogenies (repeatable)");
  vf->add_option("--words", verify.words, "word file, one 'label: word' per line");
  vf->add_option("--samples", verify.samples, "random elements for tables without printed words (-1: default)")
      ->capture_default_str();
  vf->add_option("--seed", verify.seed)->capture_default_str();

  auto* rg = app.add_subcommand("regular", "regular orders and the regular power law");
  add_datum_options(rg, dopt);
  rg->add_option("--word", regular_word, "element")->required();

  auto* sp = app.add_subcommand("splitting", "does W lift to N?");
  add_datum_options(sp, dopt);
  sp->add_option("--torsion-bound", split.torsion_bound, "search t_alpha in (1/k)X_*/X_*")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sp->add_option("--certificates", split.certificates, "stop after this many inequivalent certificates")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sp->add_flag("--char2", split.char2, "characteristic 2");

  auto* eq = app.add_subcommand("equivalent-splittings", "pairwise T-conjugacy of splittings up to the center");
  add_datum_options(eq, dopt);
  eq->add_option("--torsion-bound", equiv.torsion_bound)->check(CLI::PositiveNumber)->capture_default_str();
  eq->add_option("--certificates", equiv.certificates)->check(CLI::PositiveNumber)->capture_default_str();
  eq->add_option("--cert", equiv.cert_files, "certificate JSON file {\"1\": [\"p/q\", ...], ...} (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*describe) return cmd_describe(dopt, common);
    if (*lo) return cmd_lift_order(dopt, lift, common);
    if (*et) return cmd_elliptic_table(dopt, table, common);
    if (*vf) return cmd_verify(verify, common);
    if (*rg) return cmd_regular(dopt, regular_word, common);
    if (*sp) return cmd_splitting(dopt, split, common);
    if (*eq) return cmd_equivalent(dopt, equiv, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
