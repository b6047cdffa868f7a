#include "adapted/json_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace adapted {

using nlohmann::json;

json to_json(const PrimeOrderData& d) {
  json j;
  j["p"] = d.p;
  j["t"] = d.t;
  j["n"] = d.n;
  j["s"] = d.s;
  j["m"] = d.m;
  j["g0"] = d.g0;
  j["g"] = d.g;
  return j;
}

PrimeOrderData data_from_json(const json& j) {
  require(j.is_object(), errc::parse_error, "input must be a JSON object");
  require(j.contains("p") && j["p"].is_number_integer(), errc::parse_error,
          "missing integer field \"p\"");
  require(j.contains("g0") && j["g0"].is_number_integer(), errc::parse_error,
          "missing integer field \"g0\"");
  i64 p = j["p"].get<i64>();
  i64 g0 = j["g0"].get<i64>();

  auto int_vector = [](const json& arr, const char* name) {
    require(arr.is_array(), errc::parse_error, std::string("field \"") + name + "\" must be an array");
    std::vector<i64> v;
    for (const auto& e : arr) {
      require(e.is_number_integer(), errc::parse_error,
              std::string("field \"") + name + "\" must contain integers");
      v.push_back(e.get<i64>());
    }
    return v;
  };

  if (j.contains("n")) {
    auto n = int_vector(j["n"], "n");
    if (!n.empty()) return validate(p, n, g0);
    require(!j.contains("t") || j["t"].get<i64>() == 0, errc::parse_error,
            "empty \"n\" requires t = 0");
    return validate_fixed_point_free(p, g0);
  }
  if (j.contains("m")) return validate_from_multiplicities(p, int_vector(j["m"], "m"), g0);
  if (j.contains("t")) {
    require(j["t"].is_number_integer() && j["t"].get<i64>() == 0, errc::parse_error,
            "without \"n\" or \"m\" only t = 0 is meaningful");
    return validate_fixed_point_free(p, g0);
  }
  throw validation_error(errc::parse_error, "need one of \"n\", \"m\" or \"t\": 0");
}

json matrix_json(const IntMatrix& m, const std::vector<std::string>& labels) {
  json j;
  j["labels"] = labels;
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

json presentation_json(const Presentation& pres) {
  json j;
  json gens = json::array();
  for (const auto& g : pres.generators) gens.push_back(to_string(g));
  j["generators"] = gens;
  json rels = json::array();
  for (const auto& rel : pres.relators) {
    json letters = json::array();
    for (const auto& l : rel.letters()) letters.push_back(json::array({to_string(l.sym), l.sign}));
    rels.push_back(letters);
  }
  if (rels.size() == 1)
    j["relator"] = rels[0];
  else
    j["relators"] = rels;
  return j;
}

std::string matrix_text(const IntMatrix& m, const std::vector<std::string>& labels) {
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::size_t cell = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t c = 0; c < m.cols(); ++c)
      cell = std::max(cell, std::to_string(m.at(i, c)).size());

  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << std::left << std::setw(static_cast<int>(label_width))
       << (i < labels.size() ? labels[i] : "") << " |";
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << ' ' << std::right << std::setw(static_cast<int>(cell)) << m.at(i, c);
    os << '\n';
  }
  return os.str();
}

std::string matrix_csv(const IntMatrix& m, const std::vector<std::string>& labels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) os << ',';
    os << '"' << labels[i] << '"';
  }
  os << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m.at(i, c);
    }
    os << '\n';
  }
  return os.str();
}

std::string presentation_text(const Presentation& pres) {
  std::ostringstream os;
  os << "generators (" << pres.generators.size() << "):\n";
  for (const auto& g : pres.generators) os << "  " << to_string(g) << '\n';
  for (const auto& rel : pres.relators) os << "relator: " << to_string(rel) << '\n';
  return os.str();
}

}  // namespace adapted
