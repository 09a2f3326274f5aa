#include "locsid/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "locsid/errors.hpp"

namespace locsid {

Json parse_json(const std::string& text)
{
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), e.byte);
  }
}

Json read_json_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.position());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j)
{
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  throw ParseError("expected a number or rational string, got " + std::string(j.type_name()));
}

namespace {

int int_from_json(const Json& j, const char* what)
{
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

const Json& field(const Json& j, const char* name)
{
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<std::pair<int, int>> edge_list(const Json& j)
{
  if (!j.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [u, v]");
    out.emplace_back(int_from_json(e[0], "edge endpoint"), int_from_json(e[1], "edge endpoint"));
  }
  return out;
}

}  // namespace

Json graph_to_json(const Bigraph& f)
{
  Json first = Json::array();
  Json second = Json::array();
  for (int v = 0; v < f.node_count(); ++v) (f.side(v) == Side::first ? first : second).push_back(v);
  Json edges = Json::array();
  for (const auto& e : f.edges()) edges.push_back({e.first, e.second});
  Json out;
  out["first"] = first;
  out["second"] = second;
  out["edges"] = edges;
  Json labels = Json::object();
  for (int k = 0; k < f.label_count(); ++k) labels[std::to_string(k + 1)] = f.labels()[static_cast<std::size_t>(k)];
  out["labels"] = labels;
  return out;
}

Bigraph graph_from_json(const Json& j)
{
  if (!j.is_object()) throw ParseError("graph must be a JSON object");
  if (j.contains("n")) return bigraph_from_plain(plain_graph_from_json(j));

  std::map<int, Side> side_of;
  for (auto [name, side] : {std::pair{"first", Side::first}, std::pair{"second", Side::second}}) {
    const Json& ids = field(j, name);
    if (!ids.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array");
    for (const auto& id : ids) {
      if (!side_of.emplace(int_from_json(id, "node id"), side).second) throw ParseError("node id listed twice");
    }
  }
  std::map<int, int> index;
  std::vector<Side> sides;
  for (auto [id, side] : side_of) {
    index[id] = static_cast<int>(sides.size());
    sides.push_back(side);
  }
  auto node = [&](int id) {
    auto it = index.find(id);
    if (it == index.end()) throw ParseError("edge uses unknown node " + std::to_string(id));
    return it->second;
  };
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : edge_list(j.contains("edges") ? j.at("edges") : Json::array())) edges.emplace_back(node(u), node(v));

  std::vector<int> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_object()) throw ParseError("\"labels\" must be an object");
    labels.assign(l.size(), -1);
    for (const auto& [key, id] : l.items()) {
      int k = 0;
      try {
        k = std::stoi(key);
      } catch (const std::exception&) {
        throw ParseError("label key \"" + key + "\" is not an integer");
      }
      if (k < 1 || k > static_cast<int>(l.size())) throw ParseError("labels must be numbered 1..k");
      labels[static_cast<std::size_t>(k - 1)] = node(int_from_json(id, "label node"));
    }
  }
  try {
    return Bigraph(sides, edges, labels);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json plain_graph_to_json(const PlainGraph& g)
{
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json out;
  out["n"] = g.node_count();
  out["edges"] = edges;
  return out;
}

PlainGraph plain_graph_from_json(const Json& j)
{
  if (!j.is_object()) throw ParseError("graph must be a JSON object");
  try {
    if (j.contains("n")) {
      return PlainGraph(int_from_json(j.at("n"), "\"n\""), edge_list(j.contains("edges") ? j.at("edges") : Json::array()));
    }
    return plain_from_bigraph(graph_from_json(j));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

namespace {

template <Scalar T>
Json kernel_json(const StepKernel<T>& k, const char* mode)
{
  auto number = [](const T& x) -> Json {
    if constexpr (std::is_same_v<T, Rational>) {
      return to_json(x);
    } else {
      return x;
    }
  };
  Json rows = Json::array();
  Json cols = Json::array();
  for (const auto& m : k.row_measures()) rows.push_back(number(m));
  for (const auto& m : k.col_measures()) cols.push_back(number(m));
  Json values = Json::array();
  for (int i = 0; i < k.rows(); ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < k.cols(); ++jj) row.push_back(number(k.at(i, jj)));
    values.push_back(row);
  }
  Json out;
  out["row_measures"] = rows;
  out["col_measures"] = cols;
  out["values"] = values;
  out["mode"] = mode;
  return out;
}

template <Scalar T>
StepKernel<T> kernel_from(const Json& j)
{
  if (!j.is_object()) throw ParseError("kernel must be a JSON object");
  auto scalar = [](const Json& x) -> T {
    if constexpr (std::is_same_v<T, Rational>) {
      return rational_from_json(x);
    } else {
      if (x.is_number()) return x.get<double>();
      return rational_from_json(x).get_d();
    }
  };
  auto list = [&](const char* name) {
    const Json& a = field(j, name);
    if (!a.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array");
    std::vector<T> out;
    for (const auto& x : a) out.push_back(scalar(x));
    return out;
  };
  std::vector<T> rows = list("row_measures");
  std::vector<T> cols = j.contains("col_measures") ? list("col_measures") : rows;
  const Json& v = field(j, "values");
  if (!v.is_array() || v.size() != rows.size()) throw ParseError("\"values\" must have one row per row block");
  std::vector<T> values;
  for (const auto& row : v) {
    if (!row.is_array() || row.size() != cols.size()) throw ParseError("each row of \"values\" needs one entry per column block");
    for (const auto& x : row) values.push_back(scalar(x));
  }
  try {
    return StepKernel<T>(rows, cols, values);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json kernel_to_json(const RationalKernel& k) { return kernel_json(k, "rational"); }
Json kernel_to_json(const FloatKernel& k) { return kernel_json(k, "float"); }

std::string kernel_mode(const Json& j)
{
  if (j.is_object() && j.contains("mode")) {
    const Json& m = j.at("mode");
    if (m == "float") return "float";
    if (m != "rational") throw ParseError("\"mode\" must be \"rational\" or \"float\"");
  }
  return "rational";
}

RationalKernel rational_kernel_from_json(const Json& j) { return kernel_from<Rational>(j); }
FloatKernel float_kernel_from_json(const Json& j) { return kernel_from<double>(j); }

}  // namespace locsid
