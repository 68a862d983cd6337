#include "qtutte/serialization.hpp"

#include <json.hpp>

#include "qtutte/error.hpp"

namespace qtutte {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("invalid JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParseError, std::string("missing key \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kParseError, std::string("key \"") + key + "\" has the wrong type");
  }
}

json qpoly_json(const QPoly& p) {
  if (p.is_zero()) return json::array({0});
  return json(p.coeffs());
}

}  // namespace

std::string matroid_to_json(const QMatroid& m) {
  json j;
  j["q"] = m.lattice().q();
  j["k"] = m.lattice().k();
  j["ranks"] = std::vector<int>(m.ranks().begin(), m.ranks().end());
  return j.dump();
}

QMatroid matroid_from_json(const std::string& text,
                           const LatticeOptions& options) {
  const json j = parse(text);
  const int q = field<int>(j, "q");
  const int k = field<int>(j, "k");
  auto ranks = field<std::vector<int>>(j, "ranks");
  if (k < 0) throw Error(ErrorCode::kParseError, "k must be >= 0");
  return QMatroid::from_ranks(shared_lattice(q, k, options), std::move(ranks));
}

std::string poly_to_json(const BiPoly& p) {
  json j;
  j["mode"] = p.is_symbolic() ? "symbolic" : "numeric";
  j["xdeg"] = p.xdeg();
  j["ydeg"] = p.ydeg();
  if (!p.is_symbolic()) j["q"] = p.q();
  json rows = json::array();
  for (int i = 0; i <= p.xdeg(); ++i) {
    json row = json::array();
    for (int jj = 0; jj <= p.ydeg(); ++jj) {
      if (p.is_symbolic()) {
        row.push_back(qpoly_json(p.at(i, jj)));
      } else {
        row.push_back(p.value(i, jj));
      }
    }
    rows.push_back(std::move(row));
  }
  j["coeffs"] = std::move(rows);
  return j.dump();
}

BiPoly poly_from_json(const std::string& text) {
  const json j = parse(text);
  const auto mode = field<std::string>(j, "mode");
  const int xdeg = field<int>(j, "xdeg");
  const int ydeg = field<int>(j, "ydeg");
  if (xdeg < 0 || ydeg < 0) throw Error(ErrorCode::kParseError, "negative degree");
  BiPoly p;
  if (mode == "symbolic") {
    p = BiPoly::symbolic(xdeg, ydeg);
  } else if (mode == "numeric") {
    p = BiPoly::numeric(xdeg, ydeg, field<int>(j, "q"));
  } else {
    throw Error(ErrorCode::kParseError, "mode must be numeric or symbolic");
  }
  const json& rows = j.at("coeffs");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(xdeg + 1)) {
    throw Error(ErrorCode::kParseError, "coeffs must have xdeg + 1 rows");
  }
  for (int i = 0; i <= xdeg; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(ydeg + 1)) {
      throw Error(ErrorCode::kParseError, "each coeffs row must have ydeg + 1 entries");
    }
    for (int c = 0; c <= ydeg; ++c) {
      const json& e = row[c];
      if (p.is_symbolic() && e.is_array()) {
        std::vector<std::int64_t> coeffs;
        for (const json& v : e) {
          if (!v.is_number_integer()) {
            throw Error(ErrorCode::kParseError, "coefficient lists hold integers");
          }
          coeffs.push_back(v.get<std::int64_t>());
        }
        p.at(i, c) = QPoly(std::move(coeffs));
      } else if (!p.is_symbolic() && e.is_number_integer()) {
        p.at(i, c) = QPoly(e.get<std::int64_t>());
      } else {
        throw Error(ErrorCode::kParseError, "entry type does not match mode");
      }
    }
  }
  return p;
}

std::string partition_to_json(const TuttePartition& p) {
  json parts = json::array();
  for (const auto& part : p.parts) {
    parts.push_back({{"z", part.z},
                     {"w", part.w},
                     {"rho", part.rho},
                     {"nu", part.nu},
                     {"clopen", part.clopen}});
  }
  json j;
  j["parts"] = std::move(parts);
  return j.dump();
}

TuttePartition partition_from_json(const std::string& text, int q) {
  const json j = parse(text);
  if (!j.is_object() || !j.contains("parts") || !j["parts"].is_array()) {
    throw Error(ErrorCode::kParseError, "missing \"parts\" array");
  }
  TuttePartition p;
  p.q = q;
  for (const json& e : j["parts"]) {
    PrimeFreeInterval part;
    part.z = field<FlatId>(e, "z");
    part.w = field<FlatId>(e, "w");
    part.rho = field<int>(e, "rho");
    part.nu = field<int>(e, "nu");
    part.clopen = field<FlatId>(e, "clopen");
    p.parts.push_back(std::move(part));
  }
  return p;
}

}  // namespace qtutte
