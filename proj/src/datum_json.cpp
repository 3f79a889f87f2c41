#include <stdexcept>

#include <json.hpp>

#include "wlift/root_datum.hpp"

namespace wlift {

using nlohmann::json;

namespace {

Rational rational_of(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument("rational entries must be strings \"p/q\" or integers");
}

}  // namespace

RootDatum root_datum_from_json(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("bad datum file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("type"))
    throw std::invalid_argument("datum file needs a \"type\" field");
  std::string type = doc["type"].get<std::string>();

  std::string delta = "none";
  if (doc.contains("delta") && !doc["delta"].is_null()) {
    const auto& d = doc["delta"];
    if (d.is_string()) {
      delta = d.get<std::string>();
    } else {
      delta.clear();
      for (std::size_t i = 0; i < d.size(); ++i)
        delta += (i ? "," : "") + std::to_string(d[i].get<int>());
    }
  }

  json iso = doc.contains("isogeny") ? doc["isogeny"] : json("simply_connected");

  if (type != "custom") {
    RootDatum probe = build_root_datum(type, "simply_connected", "none");
    if (doc.contains("rank") && doc["rank"].get<int>() != probe.rank())
      throw std::invalid_argument("rank does not match type");
    if (doc.contains("cartan")) {
      const auto& c = doc["cartan"];
      for (int i = 0; i < probe.rank(); ++i)
        for (int j = 0; j < probe.rank(); ++j)
          if (c.at(i).at(j).get<long>() != probe.cartan()(i, j))
            throw std::invalid_argument("cartan does not match type " + type);
    }
    if (iso.is_string()) return build_root_datum(type, iso.get<std::string>(), delta);
    std::string spec = "[";
    for (std::size_t j = 0; j < iso.size(); ++j) {
      spec += j ? ",[" : "[";
      for (std::size_t i = 0; i < iso[j].size(); ++i)
        spec += (i ? "," : "") + to_string(rational_of(iso[j][i]));
      spec += "]";
    }
    spec += "]";
    return build_root_datum(type, spec, delta);
  }

  if (!doc.contains("cartan")) throw std::invalid_argument("custom datum needs a cartan matrix");
  const auto& c = doc["cartan"];
  int n = static_cast<int>(c.size());
  IntMat cartan(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cartan(i, j) = c.at(i).at(j).get<long>();
  validate_cartan(cartan);
  RatMat basis;
  std::string name = "custom";
  if (iso.is_string()) {
    std::string k = iso.get<std::string>();
    if (k == "simply_connected" || k == "sc") {
      basis = RatMat::identity(n);
      name = "simply_connected";
    } else if (k == "adjoint" || k == "ad") {
      basis = inverse(to_rational(cartan));
      name = "adjoint";
    } else {
      throw std::invalid_argument("custom datum supports only sc, adjoint or a basis matrix");
    }
  } else {
    basis = RatMat(n, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) basis(i, j) = rational_of(iso.at(j).at(i));
  }
  std::vector<int> perm;
  if (delta != "none") {
    std::size_t p = 0;
    while (p < delta.size()) {
      auto comma = delta.find(',', p);
      perm.push_back(std::stoi(delta.substr(p, comma - p)) - 1);
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
  }
  return RootDatum(cartan, basis, perm, "custom", {}, name);
}

std::string root_datum_to_json(const RootDatum& rd) {
  json doc;
  doc["type"] = rd.type_label();
  doc["rank"] = rd.rank();
  json c = json::array();
  for (int i = 0; i < rd.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < rd.rank(); ++j) row.push_back(rd.cartan()(i, j));
    c.push_back(row);
  }
  doc["cartan"] = c;
  json basis = json::array();
  for (int j = 0; j < rd.rank(); ++j) {
    json col = json::array();
    for (int i = 0; i < rd.rank(); ++i) col.push_back(to_string(rd.cochar_basis()(i, j)));
    basis.push_back(col);
  }
  doc["isogeny"] = basis;
  doc["isogeny_name"] = rd.isogeny_name();
  if (rd.has_delta()) {
    json d = json::array();
    for (int v : rd.delta()) d.push_back(v + 1);
    doc["delta"] = d;
  } else {
    doc["delta"] = nullptr;
  }
  return doc.dump(2);
}

}  // namespace wlift
