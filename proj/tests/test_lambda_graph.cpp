#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "helpers.hpp"
#include "independent_subspaces.hpp"
#include "polar/suborbits.hpp"

using namespace polar;
using namespace testing_helpers;

TEST_CASE("vertex counts and enumeration") {
  CHECK(vertex_count(3, 2) == 243);
  CHECK(vertex_count(3, 1) == 9);
  CHECK(vertex_count(5, 2) == 3125);
  CHECK_THROWS_AS(vertex_count(3, 40), std::overflow_error);
  OrthoSpace sp(Field::create(3), 2);
  auto verts = enumerate_vertices(sp);
  REQUIRE(verts.size() == 243);
  CHECK(verts.front() == base_vertex(sp));
  for (std::uint64_t i = 0; i < verts.size(); ++i) {
    CHECK(vertex_index(verts[i]) == i);
    CHECK(is_totally_isotropic(sp, realize(sp, verts[i])));
    CHECK(vertex_from_matrix(sp, realize(sp, verts[i])) == verts[i]);
    CHECK(rank(vconcat({realize(sp, verts[i]), base_subspace_p0(sp)})) == 2 * sp.nu());
  }
}

TEST_CASE("vertex_from_matrix normalizes row spaces") {
  auto f = Field::create(3);
  OrthoSpace sp(f, 2);
  CHECK(vertex_from_matrix(sp, realize(sp, base_vertex(sp))) == base_vertex(sp));
  Vertex phi11 = representative(sp, {Family::Phi1, 1, 0, Elem{}});
  CHECK(phi11.X == std_alternate(f, 1));
  CHECK(phi11.Z.is_zero());
  CHECK(vertex_from_matrix(sp, realize(sp, phi11)) == phi11);
  CHECK_THROWS_AS(vertex_from_matrix(sp, base_subspace_p0(sp)), std::domain_error);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    Vertex v = random_vertex(sp, rng);
    Mat g = random_invertible(f, 2, rng);
    CHECK(vertex_from_matrix(sp, g * realize(sp, v)) == v);
  }
  Mat bad = realize(sp, base_vertex(sp));
  bad(0, 4) = f->one();
  CHECK_THROWS_AS(vertex_from_matrix(sp, bad), std::domain_error);
}

TEST_CASE("adjacency and joint dimension examples") {
  OrthoSpace sp(Field::create(3), 2);
  Vertex p1 = base_vertex(sp);
  Vertex phi200 = representative(sp, {Family::Phi2, 0, 0, Elem{}});
  Vertex phi11 = representative(sp, {Family::Phi1, 1, 0, Elem{}});
  CHECK_FALSE(adjacent(sp, p1, p1));
  CHECK(adjacent(sp, p1, phi200));
  CHECK_FALSE(adjacent(sp, p1, phi11));
  CHECK(joint_dim(sp, p1, p1) == 2);
  CHECK(joint_dim(sp, p1, phi11) == 4);
  CHECK(joint_dim(sp, p1, phi200) == 3);
}

TEST_CASE("neighbour sets match a full scan") {
  for (int nu : {1, 2}) {
    OrthoSpace sp(Field::create(3), nu);
    auto verts = enumerate_vertices(sp);
    const std::size_t k = (nu == 1 ? 2 : 8) * 4;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      auto nb = neighbor_indices(sp, verts[i]);
      CHECK(nb.size() == k);
      CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
      std::vector<std::uint64_t> scan;
      for (std::size_t j = 0; j < verts.size(); ++j) {
        CHECK(adjacent(sp, verts[i], verts[j]) == adjacent(sp, verts[j], verts[i]));
        if (adjacent(sp, verts[i], verts[j])) scan.push_back(j);
      }
      CHECK(scan == nb);
    }
  }
}

TEST_CASE("graph export") {
  OrthoSpace sp(Field::create(3), 2);
  std::ostringstream el, dm, js;
  auto s = export_graph(sp, GraphFormat::EdgeList, el);
  CHECK(s.vertices == 243);
  CHECK(s.edges == 3888);
  CHECK(el.str().rfind("243 3888\n", 0) == 0);
  export_graph(sp, GraphFormat::Dimacs, dm);
  CHECK(dm.str().rfind("p edge 243 3888\ne 1 ", 0) == 0);
  export_graph(sp, GraphFormat::Json, js);
  auto j = nlohmann::json::parse(js.str());
  CHECK(j["vertices"].size() == 243);
  CHECK(j["edges"].size() == 3888);
  CHECK(j["q"] == 3);
  OrthoSpace s1(Field::create(3), 1);
  std::ostringstream k9;
  auto c = export_graph(s1, GraphFormat::EdgeList, k9);
  CHECK(c.vertices == 9);
  CHECK(c.edges == 36);
  CHECK_THROWS_AS(parse_graph_format("graphml"), std::invalid_argument);
  CHECK(parse_graph_format("dimacs") == GraphFormat::Dimacs);
}

namespace {

// Library vertex as an RREF basis in plain integers.
indep::Basis to_basis(const OrthoSpace& sp, const Vertex& v) {
  Mat m = realize(sp, v);
  indep::Basis b(m.rows(), indep::Row(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) b[i][j] = m(i, j).v;
  indep::rref(b, sp.F().order());
  return b;
}

}  // namespace

TEST_CASE("vertex set and adjacency agree with an independent subspace model") {
  for (int nu : {1, 2}) {
    CAPTURE(nu);
    const int q = 3;
    indep::Model m = indep::build(q, nu);
    OrthoSpace sp(Field::create(q), nu);
    CHECK(m.z == sp.F().z().v);
    // maximal totally isotropic subspaces of the elliptic space: prod (q^{i+1} + 1)
    std::size_t expect = 1, qi = q;
    for (int i = 1; i <= nu; ++i) expect *= (qi *= q) + 1;
    CHECK(m.maximal_count == expect);
    REQUIRE(m.lambda.size() == vertex_count(q, nu));
    std::map<indep::Basis, int> pos;
    for (std::size_t i = 0; i < m.lambda.size(); ++i) pos[m.lambda[i]] = static_cast<int>(i);
    auto verts = enumerate_vertices(sp);
    std::vector<int> map(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      auto it = pos.find(to_basis(sp, verts[i]));
      REQUIRE(it != pos.end());
      map[i] = it->second;
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
      std::vector<int> mine;
      for (auto j : neighbor_indices(sp, verts[i])) mine.push_back(map[j]);
      std::sort(mine.begin(), mine.end());
      CHECK(mine == m.adj[map[i]]);
    }
  }
}
