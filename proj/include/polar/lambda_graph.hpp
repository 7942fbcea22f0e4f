#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polar/geometry.hpp"

namespace polar {

// q^{nu(nu+3)/2}; throws std::overflow_error past 2^63.
std::uint64_t vertex_count(int q, int nu);

// Number of free coordinates: nu(nu-1)/2 entries of X above the diagonal, then Z.
int vertex_coordinate_count(int nu);

// Position in enumeration order: coordinates (X above the diagonal row-major,
// then Z row-major) read as a base-q number, most significant first.
std::uint64_t vertex_index(const Vertex& v);
Vertex vertex_at(const OrthoSpace& sp, std::uint64_t index);
std::vector<Vertex> enumerate_vertices(const OrthoSpace& sp);

Vertex base_vertex(const OrthoSpace& sp);  // P1 = (0 | I | 0)
Mat base_subspace_p0(const OrthoSpace& sp);  // P0 = (I | 0 | 0)

// A = X - 1/2 Z Delta Z^t.
Mat a_block(const OrthoSpace& sp, const Vertex& v);
Mat realize(const OrthoSpace& sp, const Vertex& v);
// Row-reduces M so the middle block is I. Throws std::domain_error when M is
// not a totally isotropic nu-space with invertible middle block.
Vertex vertex_from_matrix(const OrthoSpace& sp, const Mat& m);
void require_vertex(const OrthoSpace& sp, const Vertex& v);

bool adjacent(const OrthoSpace& sp, const Vertex& u, const Vertex& v);
// All (q^nu - 1)(q + 1) neighbours, from rank-1 D = D0 (x y) with the first
// nonzero entry of D0 equal to 1.
std::vector<Vertex> neighbors(const OrthoSpace& sp, const Vertex& v);
std::vector<std::uint64_t> neighbor_indices(const OrthoSpace& sp, const Vertex& v);
// dim(P + Q).
int joint_dim(const OrthoSpace& sp, const Vertex& u, const Vertex& v);

enum class GraphFormat { EdgeList, Dimacs, Json };
GraphFormat parse_graph_format(const std::string& s);

struct ExportSummary {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
};

ExportSummary export_graph(const OrthoSpace& sp, GraphFormat fmt, std::ostream& out);
ExportSummary export_graph(const OrthoSpace& sp, GraphFormat fmt, const std::string& path);

}  // namespace polar
