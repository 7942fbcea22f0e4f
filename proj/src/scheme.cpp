#include "polar/scheme.hpp"

#include <map>
#include <random>
#include <sstream>

#include "polar/lambda_graph.hpp"
#include "polar/parallel.hpp"

namespace polar {

namespace {

void require_nu2(const OrthoSpace& sp) {
  if (sp.nu() != 2) throw std::invalid_argument("the relation scheme is defined for nu = 2 only");
}

Mat random_invertible(const FieldPtr& f, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, f->order() - 1);
  for (;;) {
    Mat t(f, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = f->at(d(rng));
    if (rank(t) == n) return t;
  }
}

G01Element random_g01(const OrthoSpace& sp, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> ds(0, sp.o2().size() - 1);
  return {random_invertible(sp.field(), sp.nu(), rng), sp.o2()[ds(rng)]};
}

// Relation lookups through per-vertex transporter matrices and the
// classification of every vertex as seen from P1.
class RelationOracle {
 public:
  RelationOracle(const OrthoSpace& sp, int threads) : sp_(sp) {
    auto rels = all_relations(sp.F());
    std::map<RelationLabel, int> pos;
    for (int i = 0; i < static_cast<int>(rels.size()); ++i) pos[rels[i]] = i;
    n_ = vertex_count(sp.F().order(), sp.nu());
    from_base_.assign(n_, -1);
    full_.resize(n_);
    parallel_chunks(n_, threads, [&](std::uint64_t b, std::uint64_t e, int) {
      for (std::uint64_t i = b; i < e; ++i) {
        Vertex v = vertex_at(sp, i);
        from_base_[i] = pos.at(relation_from_suborbit(classify(sp, v).label));
        full_[i] = g0_full(sp, transporter_to_basepoint(sp, v));
      }
    });
  }

  std::uint64_t size() const { return n_; }
  int from_base(std::uint64_t v) const { return from_base_[v]; }
  // Relation of (u, v) given the realized matrix of v.
  int rel(std::uint64_t u, const Mat& realized_v) const {
    return from_base_[vertex_index(vertex_from_matrix(sp_, realized_v * full_[u]))];
  }
  const Mat& full(std::uint64_t u) const { return full_[u]; }

 private:
  const OrthoSpace& sp_;
  std::uint64_t n_ = 0;
  std::vector<int> from_base_;
  std::vector<Mat> full_;
};

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : "; ") + x;
  return s;
}

}  // namespace

std::string to_string(const RelationLabel& r) {
  switch (r.tag) {
    case RelTag::R0: return "R0";
    case RelTag::R1: return "R1";
    case RelTag::R2: return "R2(a=" + std::to_string(r.a) + ")";
    case RelTag::R3: return "R3(a=" + std::to_string(r.a) + ")";
    case RelTag::R4: return "R4";
    case RelTag::R5: return "R5(b=" + std::to_string(r.b.v) + ")";
  }
  return "?";
}

RelationLabel relation_from_suborbit(const SuborbitLabel& l) {
  switch (l.family) {
    case Family::Phi0: return {RelTag::R0, 0, Elem{}};
    case Family::Phi1:
      if (l.r == 1) return {RelTag::R1, 0, Elem{}};
      break;
    case Family::Phi2:
      if (l.r == 0) return {RelTag::R2, l.a, Elem{}};
      break;
    case Family::Phi3:
      if (l.r == 1) return {RelTag::R3, l.a, Elem{}};
      break;
    case Family::Phi4:
      if (l.r == 0) return {RelTag::R4, 0, Elem{}};
      break;
    case Family::Phi7:
      if (l.r == 1) return {RelTag::R5, 0, l.b};
      break;
    default: break;
  }
  throw std::logic_error("suborbit " + to_string(l) + " has no relation at nu = 2");
}

SuborbitLabel suborbit_from_relation(const RelationLabel& r) {
  switch (r.tag) {
    case RelTag::R0: return {Family::Phi0, 0, 0, Elem{}};
    case RelTag::R1: return {Family::Phi1, 1, 0, Elem{}};
    case RelTag::R2: return {Family::Phi2, 0, r.a, Elem{}};
    case RelTag::R3: return {Family::Phi3, 1, r.a, Elem{}};
    case RelTag::R4: return {Family::Phi4, 0, 0, Elem{}};
    case RelTag::R5: return {Family::Phi7, 1, 0, r.b};
  }
  throw std::logic_error("unknown relation tag");
}

std::vector<RelationLabel> all_relations(const Field& F) {
  std::vector<RelationLabel> out;
  for (const auto& l : all_labels(F, 2)) out.push_back(relation_from_suborbit(l));
  return out;
}

int SchemeTable::relation_index(const RelationLabel& r) const {
  for (int i = 0; i < static_cast<int>(relations.size()); ++i)
    if (relations[i] == r) return i;
  throw std::out_of_range("relation " + to_string(r) + " not in table");
}

G0Element transporter_to_basepoint(const OrthoSpace& sp, const Vertex& v) {
  const FieldPtr& f = sp.field();
  int nu = sp.nu();
  Mat t21 = -(v.X + scale(sp.F().half(), v.Z * sp.Delta() * transpose(v.Z)));
  return g0_element(sp, Mat::identity(f, nu), t21, -v.Z, Mat::identity(f, 2));
}

SuborbitLabel suborbit_of_pair(const OrthoSpace& sp, const Vertex& u, const Vertex& v) {
  return classify(sp, g0_act(sp, transporter_to_basepoint(sp, u), v)).label;
}

RelationLabel relation_of_pair(const OrthoSpace& sp, const Vertex& u, const Vertex& v) {
  require_nu2(sp);
  return relation_from_suborbit(suborbit_of_pair(sp, u, v));
}

SchemeTable build_scheme(const OrthoSpace& sp, const SchemeOptions& opt) {
  require_nu2(sp);
  int threads = resolve_threads(opt.threads);
  RelationOracle ro(sp, threads);
  const std::uint64_t n = ro.size();

  SchemeTable t;
  t.q = sp.F().order();
  t.relations = all_relations(sp.F());
  const int d = static_cast<int>(t.relations.size());
  t.valencies.assign(d, 0);
  for (std::uint64_t v = 0; v < n; ++v) ++t.valencies[ro.from_base(v)];

  std::vector<Mat> realized(n);
  for (std::uint64_t v = 0; v < n; ++v) realized[v] = realize(sp, vertex_at(sp, v));

  using Table = std::vector<std::vector<std::uint64_t>>;
  auto count_for = [&](std::uint64_t x, std::uint64_t y) {
    Table c(d, std::vector<std::uint64_t>(d, 0));
    for (std::uint64_t z = 0; z < n; ++z) ++c[ro.rel(x, realized[z])][ro.rel(z, realized[y])];
    return c;
  };

  t.p.resize(d);
  for (int k = 0; k < d; ++k) {
    std::uint64_t y = vertex_index(representative(sp, suborbit_from_relation(t.relations[k])));
    t.p[k] = count_for(0, y);
  }

  std::vector<std::string> problems;
  // (i) R0 is the diagonal.
  if (t.valencies[0] != 1) problems.push_back("R0 meets more than the diagonal at P1");
  for (std::uint64_t v = 0; v < n; ++v)
    if (ro.rel(v, realized[v]) != 0) {
      problems.push_back("(v, v) outside R0 at vertex " + std::to_string(v));
      break;
    }
  // (ii) partition of each row.
  std::uint64_t total = 0;
  for (auto k : t.valencies) total += k;
  if (total != n) problems.push_back("valencies do not sum to |Lambda|");
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) {
      std::uint64_t s = 0;
      for (int j = 0; j < d; ++j) s += t.p[k][i][j];
      if (s != t.valencies[i]) problems.push_back("row sum of p^" + to_string(t.relations[k]) + " at " + to_string(t.relations[i]));
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (t.p[0][i][j] != (i == j ? t.valencies[i] : 0)) problems.push_back("p^0 is not diagonal");

  t.exhaustive = n * n <= opt.exhaustive_pair_limit;
  if (t.exhaustive) {
    std::vector<int> m(n * n);
    parallel_chunks(n, threads, [&](std::uint64_t b, std::uint64_t e, int) {
      for (std::uint64_t x = b; x < e; ++x)
        for (std::uint64_t y = 0; y < n; ++y) m[x * n + y] = ro.rel(x, realized[y]);
    });
    std::vector<std::string> worker_problems[64];
    int w = std::min(threads, 64);
    parallel_chunks(n, w, [&](std::uint64_t b, std::uint64_t e, int id) {
      std::vector<std::uint64_t> c(d * d);
      for (std::uint64_t x = b; x < e; ++x)
        for (std::uint64_t y = 0; y < n; ++y) {
          int k = m[x * n + y];
          if (m[y * n + x] != k) {
            worker_problems[id].push_back("relation not symmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            continue;
          }
          std::fill(c.begin(), c.end(), 0);
          for (std::uint64_t z = 0; z < n; ++z) ++c[m[x * n + z] * d + m[z * n + y]];
          for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
              if (c[i * d + j] != t.p[k][i][j]) {
                worker_problems[id].push_back("p^k_ij not constant at (" + std::to_string(x) + "," + std::to_string(y) + ")");
                i = d;
                break;
              }
        }
    });
    for (int id = 0; id < w; ++id)
      if (!worker_problems[id].empty()) problems.push_back(worker_problems[id].front());
    t.base_pairs_checked = n * n;
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint64_t> dv(0, n - 1);
    for (int k = 0; k < d; ++k) {
      Vertex rep = representative(sp, suborbit_from_relation(t.relations[k]));
      for (int s = 0; s < opt.spot_checks; ++s) {
        std::uint64_t x = dv(rng);
        // y with (x, y) in R_k: move rep_k by a random G01 element, then
        // carry P1 back to x.
        Vertex moved = g01_act(random_g01(sp, rng), rep);
        std::uint64_t y = vertex_index(vertex_from_matrix(sp, realize(sp, moved) * inverse(ro.full(x))));
        if (ro.rel(x, realized[y]) != k) problems.push_back("sampled pair left R_" + to_string(t.relations[k]));
        if (ro.rel(y, realized[x]) != k) problems.push_back("relation " + to_string(t.relations[k]) + " not symmetric");
        if (count_for(x, y) != t.p[k]) problems.push_back("p^k_ij not constant for k = " + to_string(t.relations[k]));
        ++t.base_pairs_checked;
      }
    }
  }
  if (!problems.empty()) throw SchemeAxiomError("scheme axioms violated: " + join(problems));
  return t;
}

bool P1Report::passed() const {
  if (!unlisted_zero || !row_sums_ok) return false;
  for (const auto& e : entries)
    if (!e.match) return false;
  return true;
}

P1Report verify_p1_closed_forms(const OrthoSpace& sp, const SchemeTable& t) {
  require_nu2(sp);
  const Field& F = sp.F();
  const std::uint64_t q = F.order();
  const int d = static_cast<int>(t.relations.size());
  const int k1 = t.relation_index({RelTag::R1, 0, Elem{}});
  const auto& row = t.p[k1];

  P1Report rep;
  std::vector<std::vector<bool>> listed(d, std::vector<bool>(d, false));
  auto add = [&](const std::string& name, const RelationLabel& i, const RelationLabel& j, std::uint64_t expected) {
    int a = t.relation_index(i), b = t.relation_index(j);
    listed[a][b] = true;
    rep.entries.push_back({name, i, j, expected, row[a][b], row[a][b] == expected});
  };

  RelationLabel r0{RelTag::R0, 0, Elem{}}, r1{RelTag::R1, 0, Elem{}}, r4{RelTag::R4, 0, Elem{}};
  add("p1_{0,1}", r0, r1, 1);
  add("p1_{1,0}", r1, r0, 1);
  add("p1_{1,1}", r1, r1, q - 2);
  const std::uint64_t q23 = (q - 1) * (q + 1) * (q + 1) / 2;
  for (int a = 0; a < 2; ++a) {
    RelationLabel r2{RelTag::R2, a, Elem{}}, r3{RelTag::R3, a, Elem{}};
    std::string s = std::to_string(a);
    add("p1_{2" + s + ",3" + s + "}", r2, r3, q23);
    add("p1_{3" + s + ",2" + s + "}", r3, r2, q23);
    add("p1_{3" + s + ",3" + s + "}", r3, r3, (q - 2) * q23);
  }
  const std::uint64_t c5 = 2 * q * (q * q - 1);
  for (Elem b : F.omega()) {
    RelationLabel r5{RelTag::R5, 0, b};
    std::string s = std::to_string(b.v);
    add("p1_{4,5" + s + "}", r4, r5, c5);
    add("p1_{5" + s + ",4}", r5, r4, c5);
    std::map<Elem, int> hits;
    for (Elem x : F.elements()) {
      if (x.is_zero() || x == F.one()) continue;
      ++hits[F.omega_rep(F.mul(b, F.mul(F.inv(x), F.sub(F.one(), x))))];
    }
    for (auto [b2, cnt] : hits) {
      RelationLabel t5{RelTag::R5, 0, b2};
      add("p1_{5" + s + ",5" + std::to_string(b2.v) + "}", r5, t5, c5 * cnt);
      if (row[t.relation_index(r5)][t.relation_index(t5)] != c5) rep.per_target_reading_ok = false;
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!listed[i][j] && row[i][j] != 0) rep.unlisted_zero = false;
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i) {
      std::uint64_t s = 0;
      for (int j = 0; j < d; ++j) s += t.p[k][i][j];
      if (s != t.valencies[i]) rep.row_sums_ok = false;
    }
  return rep;
}

nlohmann::json to_json(const SchemeTable& t) {
  nlohmann::json j;
  j["q"] = t.q;
  j["class"] = t.class_count();
  j["relations"] = nlohmann::json::array();
  for (const auto& r : t.relations) j["relations"].push_back(to_string(r));
  nlohmann::json val = nlohmann::json::object();
  for (std::size_t i = 0; i < t.relations.size(); ++i) val[to_string(t.relations[i])] = t.valencies[i];
  j["valencies"] = val;
  j["p"] = t.p;
  j["exhaustive"] = t.exhaustive;
  j["base_pairs_checked"] = t.base_pairs_checked;
  return j;
}

nlohmann::json to_json(const P1Report& r) {
  nlohmann::json j;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : r.entries)
    j["entries"].push_back({{"name", e.name},
                            {"i", to_string(e.i)},
                            {"j", to_string(e.j)},
                            {"expected", e.expected},
                            {"computed", e.computed},
                            {"match", e.match}});
  j["unlisted_zero"] = r.unlisted_zero;
  j["row_sums_ok"] = r.row_sums_ok;
  j["per_target_reading_ok"] = r.per_target_reading_ok;
  j["passed"] = r.passed();
  return j;
}

std::string scheme_csv(const SchemeTable& t) {
  std::ostringstream os;
  for (std::size_t k = 0; k < t.relations.size(); ++k) {
    os << "# k=" << to_string(t.relations[k]) << "\n";
    os << "i\\j";
    for (const auto& r : t.relations) os << ',' << to_string(r);
    os << '\n';
    for (std::size_t i = 0; i < t.relations.size(); ++i) {
      os << to_string(t.relations[i]);
      for (std::size_t j = 0; j < t.relations.size(); ++j) os << ',' << t.p[k][i][j];
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace polar
