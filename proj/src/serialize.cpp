#include "polar/serialize.hpp"

#include <stdexcept>

#include "polar/lambda_graph.hpp"

namespace polar {

namespace {

std::vector<int> flat(const Mat& m) {
  std::vector<int> out;
  out.reserve(m.entries().size());
  for (Elem e : m.entries()) out.push_back(e.v);
  return out;
}

Mat read_flat(const FieldPtr& f, const nlohmann::json& arr, int rows, int cols, const char* what) {
  if (!arr.is_array() || arr.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument(std::string(what) + " must be an array of " + std::to_string(rows * cols) + " integers");
  std::vector<Elem> e;
  for (const auto& x : arr) {
    if (!x.is_number_integer()) throw std::invalid_argument(std::string(what) + " entries must be integers");
    long long v = x.get<long long>();
    if (v < 0 || v >= f->order())
      throw std::invalid_argument(std::string(what) + " entry " + std::to_string(v) + " is not a field index");
    e.push_back(f->at(static_cast<int>(v)));
  }
  return Mat(f, rows, cols, std::move(e));
}

}  // namespace

nlohmann::json mat_to_json(const Mat& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", flat(m)}};
}

Mat mat_from_json(const FieldPtr& f, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs rows, cols and entries");
  return read_flat(f, j["entries"], j["rows"].get<int>(), j["cols"].get<int>(), "entries");
}

nlohmann::json vertex_to_json(const Vertex& v) { return {{"X", flat(v.X)}, {"Z", flat(v.Z)}}; }

Vertex vertex_from_json(const OrthoSpace& sp, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("X") || !j.contains("Z"))
    throw std::invalid_argument("vertex JSON needs keys X and Z");
  int nu = sp.nu();
  Vertex v{read_flat(sp.field(), j["X"], nu, nu, "X"), read_flat(sp.field(), j["Z"], nu, 2, "Z")};
  require_vertex(sp, v);
  return v;
}

nlohmann::json g01_to_json(const G01Element& g) {
  return {{"full", mat_to_json(g.full())}, {"T", mat_to_json(g.T)}, {"S", mat_to_json(g.S)}};
}

nlohmann::json g0_to_json(const OrthoSpace& sp, const G0Element& g) {
  return {{"full", mat_to_json(g0_full(sp, g))},
          {"T11", mat_to_json(g.T11)},
          {"T21", mat_to_json(g.T21)},
          {"T23", mat_to_json(g.T23)},
          {"S", mat_to_json(g.S)}};
}

}  // namespace polar
