#pragma once

#include <cstdint>
#include <functional>
#include <json.hpp>
#include <vector>

#include "polar/suborbits.hpp"

namespace polar {

// Brute-force orbit machinery, kept independent of the classifier.

// Transvections I + aE_jk with a running over an F_p-basis of F_q, a
// primitive dilation diag(w, 1, ..., 1) (all with S = I), then every element
// of O_2 with T = I.
std::vector<G01Element> g01_generators(const OrthoSpace& sp);

// g01_generators, plus T21 = E_12 - E_21 (nu >= 2) and
// T23 = (E_1 0), T21 = -1/2 T23 Delta T23^t.
std::vector<G0Element> g0_generators(const OrthoSpace& sp);

// BFS closure from the identity. Throws std::length_error past cap elements.
std::vector<G01Element> group_closure(const std::vector<G01Element>& gens, std::size_t cap = 1'000'000);

struct OrbitPartition {
  std::uint64_t points = 0;
  // Each class sorted; classes ordered by smallest member.
  std::vector<std::vector<std::uint64_t>> classes;
  std::vector<std::uint32_t> index;  // point -> class id
};

using Permutation = std::vector<std::uint32_t>;

// Orbits of the group generated by the given permutations of [0, n).
// Throws std::logic_error if some generator is not a bijection.
OrbitPartition orbits_from_permutations(std::uint64_t n, const std::vector<Permutation>& gens);

// Vertex permutation induced by a G0 element (through vertex_from_matrix).
Permutation vertex_permutation(const OrthoSpace& sp, const G0Element& g, int threads = 0);

// Orbits of G01 on Lambda. Throws std::length_error when |Lambda| > cap.
OrbitPartition orbits_on_lambda(const OrthoSpace& sp, std::uint64_t cap = 20'000, int threads = 0);

// Alternate nu x nu matrices indexed by their upper-triangle entries,
// row-major, read as a base-q number with the first entry most significant.
std::uint64_t alt_count(int q, int nu);
std::uint64_t alt_index(const Mat& x);
Mat alt_at(const FieldPtr& f, int nu, std::uint64_t idx);

enum class AltOrbitMethod {
  Enumerate,   // apply every element of O_i to one member per orbit
  Generators,  // BFS over generators of O_i
};

// Orbits of O_i (i = 1, 2) on K_nu. Throws std::length_error when |K_nu|
// exceeds cap or, for Enumerate, when |O_i| exceeds group_cap.
OrbitPartition orbits_on_alt(const FieldPtr& f, int nu, int i, AltOrbitMethod method = AltOrbitMethod::Enumerate,
                             std::uint64_t cap = 20'000, std::uint64_t group_cap = 2'000'000);

// Orbits of G0 on Lambda x Lambda; pair (u, v) is point u * |Lambda| + v.
// Throws std::length_error when |Lambda|^2 > cap.
OrbitPartition orbits_on_pairs(const OrthoSpace& sp, std::uint64_t cap = 1'000'000, int threads = 0);

struct CrossValidation {
  int q = 0, nu = 0;
  std::uint64_t orbit_count = 0;
  int rank = 0;
  std::vector<std::uint64_t> orbit_sizes, formula_sizes;  // both sorted
  bool count_matches = false;       // (a) orbit count = rank_g0
  bool sizes_match = false;         // (b) size multisets agree
  bool classify_consistent = false; // (c) constant on orbits, distinct across
  bool representatives_ok = false;  // (d) representative(L) in the orbit labelled L, of size suborbit_size(L)
  bool witnesses_ok = false;        // g01_act(witness, representative) = v for every v
  bool passed() const;
};

CrossValidation cross_validate(const OrthoSpace& sp, std::uint64_t cap = 20'000, int threads = 0);

// {points: n, classes: [[indices]...]}
nlohmann::json to_json(const OrbitPartition& p);
nlohmann::json to_json(const CrossValidation& c);

}  // namespace polar
