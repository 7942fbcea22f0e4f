#include "polar/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "polar/lambda_graph.hpp"
#include "polar/parallel.hpp"

namespace polar {

namespace {

// Additive generators of F_q over F_p: 1, x, ..., x^{e-1}.
std::vector<Elem> additive_basis(const Field& F) {
  std::vector<Elem> out;
  int idx = 1;
  for (int k = 0; k < F.degree(); ++k, idx *= F.characteristic()) out.push_back(F.at(idx));
  return out;
}

Mat elementary(const FieldPtr& f, int n, int j, int k, Elem a) {
  Mat t = Mat::identity(f, n);
  if (j == k)
    t(j, j) = a;
  else
    t(j, k) = a;
  return t;
}

std::vector<std::uint16_t> key(const G01Element& g) {
  std::vector<std::uint16_t> k;
  for (int i = 0; i < g.T.rows(); ++i)
    for (int j = 0; j < g.T.cols(); ++j) k.push_back(g.T(i, j).v);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.push_back(g.S(i, j).v);
  return k;
}

// Every invertible m x m matrix.
std::vector<Mat> enumerate_gl(const FieldPtr& f, int m) {
  std::vector<Mat> out;
  if (m == 0) {
    out.emplace_back(f, 0, 0);
    return out;
  }
  const int q = f->order();
  std::uint64_t total = 1;
  for (int i = 0; i < m * m; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Mat t(f, m, m);
    std::uint64_t rest = idx;
    for (int i = m * m - 1; i >= 0; --i) {
      t(i / m, i % m) = f->at(static_cast<int>(rest % q));
      rest /= q;
    }
    if (rank(t) == m) out.push_back(std::move(t));
  }
  return out;
}

Mat assemble_oi(const FieldPtr& f, const Mat& t1, const Mat& t2, const Mat& t21) {
  int i = t1.rows(), m = t2.rows();
  Mat t(f, i + m, i + m);
  t.set_block(0, 0, t1);
  if (m > 0) {
    t.set_block(i, i, t2);
    t.set_block(i, 0, t21);
  }
  return t;
}

Permutation alt_permutation(const FieldPtr& f, int nu, const Mat& t) {
  std::uint64_t n = alt_count(f->order(), nu);
  Permutation p(n);
  Mat tt = transpose(t);
  for (std::uint64_t x = 0; x < n; ++x) p[x] = static_cast<std::uint32_t>(alt_index(tt * alt_at(f, nu, x) * t));
  return p;
}

OrbitPartition from_index(std::uint64_t n, const std::vector<std::uint32_t>& index, std::uint32_t classes) {
  OrbitPartition out;
  out.points = n;
  out.index = index;
  out.classes.resize(classes);
  for (std::uint64_t x = 0; x < n; ++x) out.classes[index[x]].push_back(x);
  return out;
}

}  // namespace

std::vector<G01Element> g01_generators(const OrthoSpace& sp) {
  sp.require_delta2();
  const FieldPtr& f = sp.field();
  const int nu = sp.nu();
  std::vector<G01Element> out;
  Mat i2 = Mat::identity(f, 2);
  for (int j = 0; j < nu; ++j)
    for (int k = 0; k < nu; ++k)
      if (j != k)
        for (Elem a : additive_basis(sp.F())) out.push_back({elementary(f, nu, j, k, a), i2});
  out.push_back({elementary(f, nu, 0, 0, sp.F().primitive()), i2});
  for (const Mat& s : sp.o2()) out.push_back({Mat::identity(f, nu), s});
  return out;
}

std::vector<G0Element> g0_generators(const OrthoSpace& sp) {
  const FieldPtr& f = sp.field();
  const int nu = sp.nu();
  std::vector<G0Element> out;
  for (const auto& g : g01_generators(sp)) out.push_back(g0_from_g01(sp, g));
  Mat i = Mat::identity(f, nu), i2 = Mat::identity(f, 2);
  Mat zero23(f, nu, 2);
  if (nu >= 2) {
    Mat t21(f, nu, nu);
    t21(0, 1) = sp.F().one();
    t21(1, 0) = sp.F().neg(sp.F().one());
    out.push_back(g0_element(sp, i, t21, zero23, i2));
  }
  Mat t23(f, nu, 2);
  t23(0, 0) = sp.F().one();
  Mat t21 = -scale(sp.F().half(), t23 * sp.Delta() * transpose(t23));
  out.push_back(g0_element(sp, i, t21, t23, i2));
  return out;
}

std::vector<G01Element> group_closure(const std::vector<G01Element>& gens, std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("group_closure: no generators");
  const FieldPtr& f = gens.front().T.field();
  G01Element id{Mat::identity(f, gens.front().T.rows()), Mat::identity(f, 2)};
  std::set<std::vector<std::uint16_t>> seen{key(id)};
  std::vector<G01Element> out{id};
  for (std::size_t at = 0; at < out.size(); ++at)
    for (const auto& g : gens) {
      G01Element h = compose(out[at], g);
      if (seen.insert(key(h)).second) {
        if (out.size() >= cap) throw std::length_error("group closure exceeds cap " + std::to_string(cap));
        out.push_back(std::move(h));
      }
    }
  return out;
}

OrbitPartition orbits_from_permutations(std::uint64_t n, const std::vector<Permutation>& gens) {
  for (const auto& p : gens) {
    if (p.size() != n) throw std::logic_error("permutation has wrong length");
    std::vector<char> hit(n, 0);
    for (auto x : p) {
      if (x >= n || hit[x]) throw std::logic_error("generator is not a bijection");
      hit[x] = 1;
    }
  }
  const std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> index(n, none);
  std::uint32_t classes = 0;
  std::vector<std::uint64_t> queue;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (index[s] != none) continue;
    index[s] = classes;
    queue.assign(1, s);
    for (std::size_t at = 0; at < queue.size(); ++at)
      for (const auto& p : gens) {
        std::uint64_t y = p[queue[at]];
        if (index[y] == none) {
          index[y] = classes;
          queue.push_back(y);
        }
      }
    ++classes;
  }
  return from_index(n, index, classes);
}

Permutation vertex_permutation(const OrthoSpace& sp, const G0Element& g, int threads) {
  std::uint64_t n = vertex_count(sp.F().order(), sp.nu());
  Mat full = g0_full(sp, g);
  Permutation p(n);
  parallel_chunks(n, resolve_threads(threads), [&](std::uint64_t b, std::uint64_t e, int) {
    for (std::uint64_t v = b; v < e; ++v)
      p[v] = static_cast<std::uint32_t>(vertex_index(vertex_from_matrix(sp, realize(sp, vertex_at(sp, v)) * full)));
  });
  return p;
}

OrbitPartition orbits_on_lambda(const OrthoSpace& sp, std::uint64_t cap, int threads) {
  std::uint64_t n = vertex_count(sp.F().order(), sp.nu());
  if (n > cap) throw std::length_error("|Lambda| = " + std::to_string(n) + " exceeds the vertex cap " + std::to_string(cap));
  std::vector<Permutation> perms;
  for (const auto& g : g01_generators(sp)) perms.push_back(vertex_permutation(sp, g0_from_g01(sp, g), threads));
  return orbits_from_permutations(n, perms);
}

std::uint64_t alt_count(int q, int nu) {
  std::uint64_t n = 1;
  for (int i = 0; i < nu * (nu - 1) / 2; ++i) n *= q;
  return n;
}

std::uint64_t alt_index(const Mat& x) {
  require_alternate(x);
  const std::uint64_t q = x.F().order();
  std::uint64_t idx = 0;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = i + 1; j < x.cols(); ++j) idx = idx * q + x(i, j).v;
  return idx;
}

Mat alt_at(const FieldPtr& f, int nu, std::uint64_t idx) {
  const std::uint64_t q = f->order();
  if (idx >= alt_count(f->order(), nu)) throw std::out_of_range("alternate matrix index out of range");
  Mat x(f, nu, nu);
  for (int i = nu - 1; i >= 0; --i)
    for (int j = nu - 1; j > i; --j) {
      x(i, j) = f->at(static_cast<int>(idx % q));
      x(j, i) = f->neg(x(i, j));
      idx /= q;
    }
  return x;
}

OrbitPartition orbits_on_alt(const FieldPtr& f, int nu, int i, AltOrbitMethod method, std::uint64_t cap,
                             std::uint64_t group_cap) {
  if (i != 1 && i != 2) throw std::invalid_argument("i must be 1 or 2");
  if (nu < i) throw std::invalid_argument("nu must be at least i");
  const int q = f->order(), m = nu - i;
  const std::uint64_t n = alt_count(q, nu);
  if (n > cap) throw std::length_error("|K_nu| = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));

  if (method == AltOrbitMethod::Generators) {
    const Field& F = *f;
    std::vector<Permutation> perms;
    auto add = [&](const Mat& t) { perms.push_back(alt_permutation(f, nu, t)); };
    for (int r = 0; r < nu; ++r)
      for (int c = 0; c < nu; ++c) {
        if (r == c) continue;
        // Zero block above the leading i x i block.
        if (r < i && c >= i) continue;
        for (Elem a : additive_basis(F)) add(elementary(f, nu, r, c, a));
      }
    add(elementary(f, nu, 0, 0, F.primitive()));
    if (m > 0) add(elementary(f, nu, i, i, F.primitive()));
    return orbits_from_permutations(n, perms);
  }

  BigInt order = order_gl(i, q) * order_gl(m, q) * boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(i * m));
  if (order > group_cap)
    throw std::length_error("|O_i| = " + order.str() + " exceeds the group cap " + std::to_string(group_cap));
  auto gl1 = enumerate_gl(f, i), gl2 = enumerate_gl(f, m);
  std::uint64_t blocks = 1;
  for (int k = 0; k < i * m; ++k) blocks *= q;

  const std::uint32_t none = UINT32_MAX;
  std::vector<std::uint32_t> index(n, none);
  std::uint32_t classes = 0;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (index[s] != none) continue;
    Mat x = alt_at(f, nu, s);
    for (const Mat& a : gl1)
      for (const Mat& b : gl2)
        for (std::uint64_t c = 0; c < blocks; ++c) {
          Mat t21(f, m, i);
          std::uint64_t rest = c;
          for (int k = m * i - 1; k >= 0; --k) {
            t21(k / i, k % i) = f->at(static_cast<int>(rest % q));
            rest /= q;
          }
          Mat t = assemble_oi(f, a, b, t21);
          std::uint64_t y = alt_index(transpose(t) * x * t);
          if (index[y] != none && index[y] != classes) throw std::logic_error("orbits overlap");
          index[y] = classes;
        }
    ++classes;
  }
  return from_index(n, index, classes);
}

OrbitPartition orbits_on_pairs(const OrthoSpace& sp, std::uint64_t cap, int threads) {
  const std::uint64_t n = vertex_count(sp.F().order(), sp.nu());
  if (n * n > cap)
    throw std::length_error("|Lambda|^2 = " + std::to_string(n * n) + " exceeds the pair cap " + std::to_string(cap));
  std::vector<Permutation> vperm;
  for (const auto& g : g0_generators(sp)) vperm.push_back(vertex_permutation(sp, g, threads));
  std::vector<Permutation> pperm;
  for (const auto& p : vperm) {
    Permutation pp(n * n);
    for (std::uint64_t u = 0; u < n; ++u)
      for (std::uint64_t v = 0; v < n; ++v) pp[u * n + v] = static_cast<std::uint32_t>(p[u] * n + p[v]);
    pperm.push_back(std::move(pp));
  }
  return orbits_from_permutations(n * n, pperm);
}

bool CrossValidation::passed() const {
  return count_matches && sizes_match && classify_consistent && representatives_ok && witnesses_ok;
}

CrossValidation cross_validate(const OrthoSpace& sp, std::uint64_t cap, int threads) {
  const int q = sp.F().order(), nu = sp.nu();
  CrossValidation cv;
  cv.q = q;
  cv.nu = nu;
  OrbitPartition orb = orbits_on_lambda(sp, cap, threads);
  cv.orbit_count = orb.classes.size();
  cv.rank = rank_g0(q, nu);
  cv.count_matches = cv.orbit_count == static_cast<std::uint64_t>(cv.rank);

  auto labels = all_labels(sp.F(), nu);
  for (const auto& c : orb.classes) cv.orbit_sizes.push_back(c.size());
  for (const auto& l : labels) cv.formula_sizes.push_back(static_cast<std::uint64_t>(suborbit_size(q, nu, l)));
  std::sort(cv.orbit_sizes.begin(), cv.orbit_sizes.end());
  std::sort(cv.formula_sizes.begin(), cv.formula_sizes.end());
  cv.sizes_match = cv.orbit_sizes == cv.formula_sizes;

  const std::uint64_t n = orb.points;
  std::vector<SuborbitLabel> lab(n);
  std::vector<char> wit(n, 0);
  parallel_chunks(n, resolve_threads(threads), [&](std::uint64_t b, std::uint64_t e, int) {
    for (std::uint64_t v = b; v < e; ++v) {
      Vertex x = vertex_at(sp, v);
      Classification c = classify(sp, x);
      lab[v] = c.label;
      wit[v] = g01_act(c.witness, representative(sp, c.label)) == x;
    }
  });
  cv.witnesses_ok = std::all_of(wit.begin(), wit.end(), [](char c) { return c != 0; });

  bool consistent = true;
  std::map<SuborbitLabel, std::uint32_t> orbit_of;
  for (std::uint32_t k = 0; k < orb.classes.size(); ++k) {
    const auto& cls = orb.classes[k];
    SuborbitLabel l = lab[cls.front()];
    for (auto v : cls)
      if (lab[v] != l) consistent = false;
    if (!orbit_of.emplace(l, k).second) consistent = false;
  }
  cv.classify_consistent = consistent;

  bool reps = true;
  for (const auto& l : labels) {
    std::uint64_t r = vertex_index(representative(sp, l));
    auto it = orbit_of.find(l);
    if (it == orbit_of.end() || orb.index[r] != it->second ||
        orb.classes[it->second].size() != static_cast<std::uint64_t>(suborbit_size(q, nu, l)))
      reps = false;
  }
  cv.representatives_ok = reps;
  return cv;
}

nlohmann::json to_json(const OrbitPartition& p) {
  return {{"points", p.points}, {"classes", p.classes}};
}

nlohmann::json to_json(const CrossValidation& c) {
  return {{"q", c.q},
          {"nu", c.nu},
          {"orbit_count", c.orbit_count},
          {"rank", c.rank},
          {"orbit_sizes", c.orbit_sizes},
          {"formula_sizes", c.formula_sizes},
          {"checks",
           {{"count_matches", c.count_matches},
            {"sizes_match", c.sizes_match},
            {"classify_consistent", c.classify_consistent},
            {"representatives_ok", c.representatives_ok},
            {"witnesses_ok", c.witnesses_ok}}},
          {"passed", c.passed()}};
}

}  // namespace polar
