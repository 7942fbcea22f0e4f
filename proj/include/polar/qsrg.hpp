#pragma once

#include <cstdint>
#include <json.hpp>
#include <map>
#include <vector>

#include "polar/suborbits.hpp"

namespace polar {

// Parameters (n, k, lambda; c_1, ..., c_p) as displayed for the last
// subconstituent. c_values keeps the order {0, q^2, q^2 - 1, q^2 + q}.
struct QsrgParams {
  std::uint64_t n = 0, k = 0, lambda = 0;
  std::vector<std::uint64_t> c_values;
};

// Throws std::invalid_argument for nu < 2.
QsrgParams qsrg_params(int q, int nu);

// |Lambda(u) cap Lambda(v)| by intersecting neighbour sets.
std::uint64_t mu(const OrthoSpace& sp, const Vertex& u, const Vertex& v);

struct CensusOptions {
  // All unordered pairs are scanned when n(n-1)/2 is at most this.
  std::uint64_t exhaustive_pair_limit = 5'000'000;
  // Beyond this vertex count the census refuses to run.
  std::uint64_t max_vertices = 200'000;
  // Raw pairs cross-checked against the per-label values.
  int sample_pairs = 200;
  std::uint64_t seed = 1;
  int threads = 0;
};

struct LabelObservation {
  std::uint64_t size = 0;  // suborbit length
  bool adjacent = false;   // adjacent to P1
  int joint_dim = 0;       // dim(P1 + v)
  std::uint64_t common = 0;  // common neighbours with P1
};

struct CensusReport {
  QsrgParams params;
  int q = 0, nu = 0;
  bool exhaustive = false;
  std::uint64_t pairs_examined = 0;
  // value -> number of vertices / unordered pairs
  std::map<std::uint64_t, std::uint64_t> degree_hist, lambda_hist, mu_hist;
  std::map<SuborbitLabel, LabelObservation> by_label;
  std::vector<SuborbitLabel> codim2_labels;  // joint_dim = nu + 2

  bool regular = false;
  bool edge_regular = false;
  bool lambda_matches = false;
  bool mu_support_ok = false;
  bool all_c_values_attained = false;
  bool mu_zero_beyond_codim2 = false;
  bool mu_constant_per_label = false;

  bool passed() const;
};

// Throws std::length_error when |Lambda| exceeds opt.max_vertices and
// std::invalid_argument for nu < 2.
CensusReport census(const OrthoSpace& sp, const CensusOptions& opt = {});

// {params: {n, k, lambda, c_values}, observed: {degree, lambda_hist, mu_hist,
// mu_by_label}, joint_dim_by_label, codim2_labels, checks, passed}
nlohmann::json to_json(const QsrgParams& p);
nlohmann::json to_json(const CensusReport& r);

}  // namespace polar
