#include "polar/qsrg.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <random>
#include <stdexcept>

#include "polar/lambda_graph.hpp"
#include "polar/parallel.hpp"
#include "polar/scheme.hpp"

namespace polar {

namespace {

void require_nu2_plus(int nu) {
  if (nu < 2) throw std::invalid_argument("quasi-strongly-regular parameters need nu >= 2, got " + std::to_string(nu));
}

using Hist = std::map<std::uint64_t, std::uint64_t>;

void merge(Hist& into, const Hist& from) {
  for (auto [k, v] : from) into[k] += v;
}

nlohmann::json hist_json(const Hist& h) {
  nlohmann::json j = nlohmann::json::object();
  for (auto [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

}  // namespace

QsrgParams qsrg_params(int q, int nu) {
  require_nu2_plus(nu);
  const std::uint64_t Q = q;
  std::uint64_t qn = 1;
  for (int i = 0; i < nu; ++i) qn *= Q;
  QsrgParams p;
  p.n = vertex_count(q, nu);
  p.k = (qn - 1) * (Q + 1);
  p.lambda = qn + Q * Q - Q - 1;
  p.c_values = {0, Q * Q, Q * Q - 1, Q * Q + Q};
  return p;
}

std::uint64_t mu(const OrthoSpace& sp, const Vertex& u, const Vertex& v) {
  auto a = neighbor_indices(sp, u);
  auto b = neighbor_indices(sp, v);
  std::vector<std::uint64_t> c;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
  return c.size();
}

bool CensusReport::passed() const {
  return regular && edge_regular && lambda_matches && mu_support_ok && all_c_values_attained &&
         mu_zero_beyond_codim2 && mu_constant_per_label;
}

CensusReport census(const OrthoSpace& sp, const CensusOptions& opt) {
  const int q = sp.F().order(), nu = sp.nu();
  CensusReport r;
  r.params = qsrg_params(q, nu);
  r.q = q;
  r.nu = nu;
  const std::uint64_t n = r.params.n;
  if (n > opt.max_vertices)
    throw std::length_error("census needs " + std::to_string(n) + " vertices; raise the vertex cap to at least that");
  const int threads = resolve_threads(opt.threads);

  // Per-label data from representatives.
  const Vertex p1 = base_vertex(sp);
  for (const auto& l : all_labels(sp.F(), nu)) {
    Vertex rep = representative(sp, l);
    LabelObservation o;
    o.size = static_cast<std::uint64_t>(suborbit_size(q, nu, l));
    o.adjacent = adjacent(sp, p1, rep);
    o.joint_dim = joint_dim(sp, p1, rep);
    o.common = l.family == Family::Phi0 ? r.params.k : mu(sp, p1, rep);
    r.by_label[l] = o;
    if (o.joint_dim == nu + 2) r.codim2_labels.push_back(l);
  }

  // Neighbour lists of every vertex.
  std::vector<std::vector<std::uint64_t>> nbr(n);
  parallel_chunks(n, threads, [&](std::uint64_t b, std::uint64_t e, int) {
    for (std::uint64_t i = b; i < e; ++i) nbr[i] = neighbor_indices(sp, vertex_at(sp, i));
  });
  for (const auto& l : nbr) ++r.degree_hist[l.size()];

  bool consistent = true;
  r.exhaustive = n * (n - 1) / 2 <= opt.exhaustive_pair_limit;
  if (r.exhaustive) {
    const std::uint64_t words = (n + 63) / 64;
    std::vector<std::uint64_t> bits(n * words, 0);
    for (std::uint64_t i = 0; i < n; ++i)
      for (auto j : nbr[i]) bits[i * words + j / 64] |= std::uint64_t{1} << (j % 64);
    int w = static_cast<int>(std::min<std::uint64_t>(threads, n));
    std::vector<Hist> lam(w), mus(w);
    parallel_chunks(n, w, [&](std::uint64_t b, std::uint64_t e, int id) {
      for (std::uint64_t u = b; u < e; ++u) {
        const std::uint64_t* bu = &bits[u * words];
        for (std::uint64_t v = u + 1; v < n; ++v) {
          const std::uint64_t* bv = &bits[v * words];
          std::uint64_t c = 0;
          for (std::uint64_t k = 0; k < words; ++k) c += std::popcount(bu[k] & bv[k]);
          bool adj = (bu[v / 64] >> (v % 64)) & 1;
          ++(adj ? lam[id] : mus[id])[c];
        }
      }
    });
    for (int id = 0; id < w; ++id) {
      merge(r.lambda_hist, lam[id]);
      merge(r.mu_hist, mus[id]);
    }
    r.pairs_examined = n * (n - 1) / 2;

    // Every vertex as seen from P1 must match its label's value.
    std::vector<char> ok(n, 1);
    parallel_chunks(n, threads, [&](std::uint64_t b, std::uint64_t e, int) {
      for (std::uint64_t v = std::max<std::uint64_t>(b, 1); v < e; ++v) {
        const auto& o = r.by_label.at(classify(sp, vertex_at(sp, v)).label);
        std::uint64_t c = 0;
        for (std::uint64_t k = 0; k < words; ++k) c += std::popcount(bits[k] & bits[v * words + k]);
        bool adj = (bits[v / 64] >> (v % 64)) & 1;
        ok[v] = c == o.common && adj == o.adjacent;
      }
    });
    consistent = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  } else {
    // Suborbit invariance: each label contributes n * size ordered pairs.
    Hist lam, mus;
    for (const auto& [l, o] : r.by_label) {
      if (l.family == Family::Phi0) continue;
      (o.adjacent ? lam : mus)[o.common] += n * o.size;
    }
    for (auto& [k, v] : lam) r.lambda_hist[k] = v / 2;
    for (auto& [k, v] : mus) r.mu_hist[k] = v / 2;
    r.pairs_examined = 0;
  }

  // Raw random pairs against the per-label table.
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::uint64_t> dv(0, n - 1);
  for (int s = 0; s < opt.sample_pairs; ++s) {
    std::uint64_t a = dv(rng), b = dv(rng);
    if (a == b) continue;
    Vertex u = vertex_at(sp, a), v = vertex_at(sp, b);
    const auto& o = r.by_label.at(suborbit_of_pair(sp, u, v));
    std::vector<std::uint64_t> c;
    std::set_intersection(nbr[a].begin(), nbr[a].end(), nbr[b].begin(), nbr[b].end(), std::back_inserter(c));
    if (c.size() != o.common || adjacent(sp, u, v) != o.adjacent) consistent = false;
    if (!r.exhaustive) ++r.pairs_examined;
  }

  r.regular = r.degree_hist.size() == 1 && r.degree_hist.begin()->first == r.params.k;
  r.edge_regular = r.lambda_hist.size() == 1;
  r.lambda_matches = r.edge_regular && r.lambda_hist.begin()->first == r.params.lambda;
  const auto& cv = r.params.c_values;
  r.mu_support_ok = std::all_of(r.mu_hist.begin(), r.mu_hist.end(), [&](const auto& kv) {
    return std::find(cv.begin(), cv.end(), kv.first) != cv.end();
  });
  r.all_c_values_attained =
      std::all_of(cv.begin(), cv.end(), [&](std::uint64_t c) { return r.mu_hist.count(c) > 0; });
  r.mu_zero_beyond_codim2 = std::all_of(r.by_label.begin(), r.by_label.end(), [&](const auto& kv) {
    return kv.second.joint_dim <= nu + 2 || kv.second.common == 0;
  });
  r.mu_constant_per_label = consistent;
  return r;
}

nlohmann::json to_json(const QsrgParams& p) {
  return {{"n", p.n}, {"k", p.k}, {"lambda", p.lambda}, {"c_values", p.c_values}};
}

nlohmann::json to_json(const CensusReport& r) {
  nlohmann::json j;
  j["q"] = r.q;
  j["nu"] = r.nu;
  j["params"] = to_json(r.params);
  nlohmann::json mbl = nlohmann::json::object(), jd = nlohmann::json::object(), sizes = nlohmann::json::object();
  for (const auto& [l, o] : r.by_label) {
    if (l.family == Family::Phi0) continue;
    mbl[to_string(l)] = o.common;
    jd[to_string(l)] = o.joint_dim;
    sizes[to_string(l)] = o.size;
  }
  j["observed"] = {{"degree", hist_json(r.degree_hist)},
                   {"lambda_hist", hist_json(r.lambda_hist)},
                   {"mu_hist", hist_json(r.mu_hist)},
                   {"mu_by_label", mbl}};
  j["joint_dim_by_label"] = jd;
  j["size_by_label"] = sizes;
  j["codim2_labels"] = nlohmann::json::array();
  for (const auto& l : r.codim2_labels) j["codim2_labels"].push_back(to_string(l));
  j["exhaustive"] = r.exhaustive;
  j["pairs_examined"] = r.pairs_examined;
  j["checks"] = {{"regular", r.regular},
                 {"edge_regular", r.edge_regular},
                 {"lambda_matches", r.lambda_matches},
                 {"mu_support_ok", r.mu_support_ok},
                 {"all_c_values_attained", r.all_c_values_attained},
                 {"mu_zero_beyond_codim2", r.mu_zero_beyond_codim2},
                 {"mu_constant_per_label", r.mu_constant_per_label}};
  j["passed"] = r.passed();
  return j;
}

}  // namespace polar
