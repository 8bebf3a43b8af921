#include "msgeo/io.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace msgeo {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("FileNotFound", "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail("ParseError", std::string(e.what()) + " in " + path);
  }
  return j;
}

double as_number(const json& v, const char* what) {
  if (!v.is_number()) fail("ParseError", std::string(what) + " must be a number");
  return v.get<double>();
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) fail("ParseError", std::string(what) + " must be an integer");
  return v.get<int>();
}

std::vector<std::pair<int, int>> as_edge_list(const json& v, const char* what) {
  if (!v.is_array()) fail("ParseError", std::string(what) + " must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : v) {
    if (!e.is_array() || e.size() != 2)
      fail("ParseError", std::string(what) + " entries must be index pairs");
    edges.emplace_back(as_int(e[0], what), as_int(e[1], what));
  }
  return edges;
}

}  // namespace

FiniteMetricSpace load_space(const std::string& path, double tol) {
  json j = load_json(path);
  if (!j.is_object()) fail("ParseError", "space file must hold a JSON object");

  if (j.contains("matrix")) {
    const auto& m = j["matrix"];
    if (!m.is_array()) fail("ParseError", "matrix must be an array of rows");
    std::vector<std::vector<double>> table;
    for (const auto& row : m) {
      if (!row.is_array()) fail("ParseError", "matrix rows must be arrays");
      std::vector<double> r;
      for (const auto& v : row) r.push_back(as_number(v, "matrix entry"));
      table.push_back(std::move(r));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      if (!j["labels"].is_array()) fail("ParseError", "labels must be an array");
      for (const auto& l : j["labels"]) {
        if (!l.is_string()) fail("ParseError", "labels must be strings");
        labels.push_back(l.get<std::string>());
      }
    } else {
      labels = default_labels(static_cast<int>(table.size()));
    }
    return validate_space(labels, table, tol);
  }

  if (j.contains("points")) {
    if (!j["points"].is_array()) fail("ParseError", "points must be an array");
    std::vector<std::vector<double>> pts;
    for (const auto& row : j["points"]) {
      if (!row.is_array()) fail("ParseError", "points must be coordinate arrays");
      std::vector<double> p;
      for (const auto& v : row) p.push_back(as_number(v, "coordinate"));
      pts.push_back(std::move(p));
    }
    std::string metric = "euclidean";
    if (j.contains("metric")) {
      if (!j["metric"].is_string()) fail("ParseError", "metric must be a string");
      metric = j["metric"].get<std::string>();
    }
    return space_from_points(pts, metric, tol);
  }

  fail("ParseError", "space file needs a matrix or a points field");
}

SimpleGraph load_graph(const std::string& path) {
  json j = load_json(path);
  if (!j.is_object() || !j.contains("n"))
    fail("ParseError", "graph file needs fields n and edges");
  int n = as_int(j["n"], "n");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) edges = as_edge_list(j["edges"], "edges");
  return make_graph(n, std::move(edges));
}

BipartiteGraph load_bipartite(const std::string& path) {
  json j = load_json(path);
  if (!j.is_object() || !j.contains("p") || !j.contains("q"))
    fail("ParseError", "bipartite file needs fields p, q and edges");
  int p = as_int(j["p"], "p");
  int q = as_int(j["q"], "q");
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) edges = as_edge_list(j["edges"], "edges");
  return make_bipartite(p, q, std::move(edges));
}

std::vector<std::pair<int, int>> load_pairs(const std::string& path) {
  json j = load_json(path);
  if (!j.is_object() || !j.contains("pairs"))
    fail("ParseError", "correspondence file needs a pairs field");
  return as_edge_list(j["pairs"], "pairs");
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string json_doubles(const std::vector<double>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += format_double(v[i]);
  }
  return out + "]";
}

std::string json_ints(const std::vector<int>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string space_to_json(const FiniteMetricSpace& x) {
  std::string out = "{\"labels\":[";
  for (int i = 0; i < x.n; ++i) {
    if (i) out += ',';
    out += json_quote(x.labels[i]);
  }
  out += "],\"matrix\":[";
  for (int i = 0; i < x.n; ++i) {
    if (i) out += ',';
    out += '[';
    for (int j = 0; j < x.n; ++j) {
      if (j) out += ',';
      out += format_double(x.d(i, j));
    }
    out += ']';
  }
  return out + "]}";
}

}  // namespace msgeo
