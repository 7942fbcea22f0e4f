#include "polar/lambda_graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "polar/serialize.hpp"

namespace polar {

namespace {

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / 2 / base)
      throw std::overflow_error("vertex count exceeds 64-bit range");
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t vertex_count(int q, int nu) {
  if (q < 2 || nu < 1) throw std::invalid_argument("vertex_count: need q >= 2 and nu >= 1");
  return checked_pow(static_cast<std::uint64_t>(q), vertex_coordinate_count(nu));
}

int vertex_coordinate_count(int nu) { return nu * (nu + 3) / 2; }

std::uint64_t vertex_index(const Vertex& v) {
  const std::uint64_t q = v.X.F().order();
  int nu = v.X.rows();
  std::uint64_t idx = 0;
  for (int i = 0; i < nu; ++i)
    for (int j = i + 1; j < nu; ++j) idx = idx * q + v.X(i, j).v;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < 2; ++j) idx = idx * q + v.Z(i, j).v;
  return idx;
}

Vertex vertex_at(const OrthoSpace& sp, std::uint64_t index) {
  const Field& F = sp.F();
  const std::uint64_t q = F.order();
  int nu = sp.nu();
  if (index >= vertex_count(F.order(), nu)) throw std::out_of_range("vertex index out of range");
  Vertex v{Mat(sp.field(), nu, nu), Mat(sp.field(), nu, 2)};
  for (int i = nu - 1; i >= 0; --i)
    for (int j = 1; j >= 0; --j) {
      v.Z(i, j) = F.at(static_cast<int>(index % q));
      index /= q;
    }
  for (int i = nu - 1; i >= 0; --i)
    for (int j = nu - 1; j > i; --j) {
      Elem x = F.at(static_cast<int>(index % q));
      index /= q;
      v.X(i, j) = x;
      v.X(j, i) = F.neg(x);
    }
  return v;
}

std::vector<Vertex> enumerate_vertices(const OrthoSpace& sp) {
  sp.require_delta2();
  std::uint64_t n = vertex_count(sp.F().order(), sp.nu());
  std::vector<Vertex> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(vertex_at(sp, i));
  return out;
}

Vertex base_vertex(const OrthoSpace& sp) {
  return {Mat(sp.field(), sp.nu(), sp.nu()), Mat(sp.field(), sp.nu(), 2)};
}

Mat base_subspace_p0(const OrthoSpace& sp) {
  Mat p(sp.field(), sp.nu(), sp.dim());
  p.set_block(0, 0, Mat::identity(sp.field(), sp.nu()));
  return p;
}

Mat a_block(const OrthoSpace& sp, const Vertex& v) {
  return v.X - scale(sp.F().half(), v.Z * sp.Delta() * transpose(v.Z));
}

Mat realize(const OrthoSpace& sp, const Vertex& v) {
  return hconcat({a_block(sp, v), Mat::identity(sp.field(), sp.nu()), v.Z});
}

Vertex vertex_from_matrix(const OrthoSpace& sp, const Mat& m) {
  sp.require_delta2();
  int nu = sp.nu();
  if (m.rows() != nu || m.cols() != sp.dim())
    throw std::invalid_argument("vertex_from_matrix: expected a " + std::to_string(nu) + "x" +
                                std::to_string(sp.dim()) + " matrix");
  Mat mid = m.block(0, nu, nu, nu);
  if (rank(mid) != nu) throw std::domain_error("middle block is singular: subspace is not in Lambda");
  Mat n = inverse(mid) * m;
  if (!(n * sp.gram() * transpose(n)).is_zero()) throw std::domain_error("subspace is not totally isotropic");
  Mat a = n.block(0, 0, nu, nu);
  Mat z = n.block(0, 2 * nu, nu, 2);
  Mat x = a + scale(sp.F().half(), z * sp.Delta() * transpose(z));
  return {x, z};
}

void require_vertex(const OrthoSpace& sp, const Vertex& v) {
  int nu = sp.nu();
  if (v.X.rows() != nu || v.X.cols() != nu || v.Z.rows() != nu || v.Z.cols() != 2)
    throw std::invalid_argument("vertex shape does not match nu = " + std::to_string(nu));
  if (v.X.F().order() != sp.F().order() || v.Z.F().order() != sp.F().order())
    throw std::invalid_argument("vertex over a different field");
  require_alternate(v.X);
}

bool adjacent(const OrthoSpace& sp, const Vertex& u, const Vertex& v) {
  return rank(hconcat({a_block(sp, u) - a_block(sp, v), u.Z - v.Z})) == 1;
}

std::vector<Vertex> neighbors(const OrthoSpace& sp, const Vertex& v) {
  sp.require_delta2();
  const FieldPtr& f = sp.field();
  const Field& F = *f;
  int nu = sp.nu();
  int q = F.order();
  std::vector<Vertex> out;
  Mat cd = v.Z * sp.Delta();

  std::uint64_t nvec = vertex_count(q, 1);  // q^2, reused as the (x, y) range
  std::uint64_t ncol = 1;
  for (int i = 0; i < nu; ++i) ncol *= q;
  for (std::uint64_t c = 1; c < ncol; ++c) {
    Mat d0(f, nu, 1);
    std::uint64_t rest = c;
    for (int i = nu - 1; i >= 0; --i) {
      d0(i, 0) = F.at(static_cast<int>(rest % q));
      rest /= q;
    }
    int lead = 0;
    while (d0(lead, 0).is_zero()) ++lead;
    if (d0(lead, 0) != F.one()) continue;
    for (std::uint64_t xy = 1; xy < nvec; ++xy) {
      Mat row(f, 1, 2);
      row(0, 0) = F.at(static_cast<int>(xy / q));
      row(0, 1) = F.at(static_cast<int>(xy % q));
      Mat d = d0 * row;
      // X' = X + 1/2 (C Delta D^t - D Delta C^t)
      Mat cdt = cd * transpose(d);
      Mat x = v.X + scale(F.half(), cdt - transpose(cdt));
      out.push_back({x, v.Z + d});
    }
  }
  return out;
}

std::vector<std::uint64_t> neighbor_indices(const OrthoSpace& sp, const Vertex& v) {
  auto nb = neighbors(sp, v);
  std::vector<std::uint64_t> idx;
  idx.reserve(nb.size());
  for (const auto& u : nb) idx.push_back(vertex_index(u));
  std::sort(idx.begin(), idx.end());
  return idx;
}

int joint_dim(const OrthoSpace& sp, const Vertex& u, const Vertex& v) {
  return rank(vconcat({realize(sp, u), realize(sp, v)}));
}

GraphFormat parse_graph_format(const std::string& s) {
  if (s == "edgelist") return GraphFormat::EdgeList;
  if (s == "dimacs") return GraphFormat::Dimacs;
  if (s == "json") return GraphFormat::Json;
  throw std::invalid_argument("unknown graph format '" + s + "' (expected edgelist, dimacs or json)");
}

ExportSummary export_graph(const OrthoSpace& sp, GraphFormat fmt, std::ostream& out) {
  auto verts = enumerate_vertices(sp);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
  for (std::uint64_t u = 0; u < verts.size(); ++u)
    for (std::uint64_t w : neighbor_indices(sp, verts[u]))
      if (w > u) edges.emplace_back(u, w);

  ExportSummary s{verts.size(), edges.size()};
  switch (fmt) {
    case GraphFormat::EdgeList:
      out << s.vertices << ' ' << s.edges << '\n';
      for (auto [a, b] : edges) out << a << ' ' << b << '\n';
      break;
    case GraphFormat::Dimacs:
      out << "p edge " << s.vertices << ' ' << s.edges << '\n';
      for (auto [a, b] : edges) out << "e " << a + 1 << ' ' << b + 1 << '\n';
      break;
    case GraphFormat::Json: {
      nlohmann::json j;
      j["q"] = sp.F().order();
      j["nu"] = sp.nu();
      j["vertices"] = nlohmann::json::array();
      for (const auto& v : verts) j["vertices"].push_back(vertex_to_json(v));
      j["edges"] = edges;
      out << j.dump() << '\n';
      break;
    }
  }
  if (!out) throw std::runtime_error("graph export: write failed");
  return s;
}

ExportSummary export_graph(const OrthoSpace& sp, GraphFormat fmt, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  return export_graph(sp, fmt, os);
}

}  // namespace polar
