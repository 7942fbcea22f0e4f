// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

#include "polar/lambda_graph.hpp"
#include "polar/oracle.hpp"
#include "polar/qsrg.hpp"
#include "polar/scheme.hpp"

using namespace polar;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream why;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      why << (why.tellp() > 0 ? "; " : "") << what;
    }
  }
};

std::vector<std::uint64_t> sorted_sizes(const OrbitPartition& p) {
  std::vector<std::uint64_t> s;
  for (const auto& c : p.classes) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

std::string join(const std::map<std::uint64_t, std::uint64_t>& h) {
  std::string s = "{";
  for (auto [k, v] : h) s += (s.size() > 1 ? "," : "") + std::to_string(k);
  return s + "}";
}

Outcome ac1() {
  Outcome o;
  struct Case {
    int q, nu;
    double limit;
    std::size_t rank;
  };
  for (Case c : {Case{3, 2, 5, 8}, Case{5, 2, 120, 9}, Case{3, 3, 600, 12}}) {
    auto t = Clock::now();
    OrthoSpace sp(Field::create(c.q), c.nu);
    BigInt sum = 0;
    for (const auto& l : all_labels(sp.F(), c.nu)) sum += suborbit_size(c.q, c.nu, l);
    CrossValidation cv = cross_validate(sp, 200'000);
    std::string tag = "(" + std::to_string(c.q) + "," + std::to_string(c.nu) + ")";
    o.require(sum == BigInt(vertex_count(c.q, c.nu)), tag + " lengths do not sum to |Lambda|");
    o.require(cv.orbit_count == c.rank && cv.rank == static_cast<int>(c.rank), tag + " rank");
    o.require(cv.sizes_match && cv.classify_consistent && cv.representatives_ok, tag + " oracle disagrees");
    if (c.q == 3 && c.nu == 2) {
      o.require(cv.formula_sizes == std::vector<std::uint64_t>{1, 2, 16, 16, 32, 32, 48, 96}, "(3,2) sizes");
      o.require(cv.rank == (c.q + 13) / 2, "(3,2) rank != (q+13)/2");
    }
    o.require(since(t) < c.limit, tag + " too slow");
  }
  return o;
}

Outcome ac2() {
  Outcome o;
  OrthoSpace sp(Field::create(3), 2);
  CrossValidation cv = cross_validate(sp);
  o.require(cv.witnesses_ok, "witness mismatch");
  o.require(cv.classify_consistent, "classify not constant on orbits or not injective across them");
  return o;
}

Outcome ac3() {
  Outcome o;
  auto f = Field::create(3);
  for (int nu : {2, 3})
    for (int i : {1, 2}) {
      std::string tag = "(nu=" + std::to_string(nu) + ",i=" + std::to_string(i) + ")";
      OrbitPartition orb = orbits_on_alt(f, nu, i, AltOrbitMethod::Enumerate);
      auto forms = all_alt_forms(nu, i);
      o.require(orb.classes.size() == forms.size(), tag + " orbit count");
      std::map<std::uint32_t, AltCanonicalForm> form_of;
      std::set<AltCanonicalForm> hit;
      for (std::uint64_t x = 0; x < orb.points; ++x) {
        auto c = oi_canonicalize(alt_at(f, nu, x), i);
        auto [it, fresh] = form_of.emplace(orb.index[x], c.form);
        if (it->second != c.form) o.require(false, tag + " canonical form not constant on an orbit");
        hit.insert(c.form);
      }
      o.require(hit == std::set<AltCanonicalForm>(forms.begin(), forms.end()), tag + " representative set");
      for (const auto& form : forms)
        o.require(orb.index[alt_index(realize_form(f, nu, form))] != UINT32_MAX, tag + " form missing");
    }
  return o;
}

Outcome ac4() {
  Outcome o;
  auto t = Clock::now();
  OrthoSpace sp(Field::create(3), 2);
  CensusReport r = census(sp);
  o.require(r.exhaustive, "census not exhaustive");
  o.require(r.degree_hist == std::map<std::uint64_t, std::uint64_t>{{32, 243}}, "degree");
  o.require(r.lambda_hist == std::map<std::uint64_t, std::uint64_t>{{14, 3888}},
            "lambda observed " + join(r.lambda_hist) + " on 3888 edges, expected {14}");
  std::set<std::uint64_t> want{0, 8, 9, 12}, got;
  for (auto [k, n] : r.mu_hist) got.insert(k);
  o.require(got == want, "mu observed " + join(r.mu_hist) + ", expected {0,8,9,12} all attained");
  for (int a : {0, 1}) {
    std::uint64_t m = mu(sp, base_vertex(sp), representative(sp, {Family::Phi3, 1, a, Elem{}}));
    o.require(m == 9, "mu(P1, phi3(1," + std::to_string(a) + ")) = " + std::to_string(m) + ", expected 9");
  }
  o.require(since(t) < 30, "too slow");
  return o;
}

Outcome ac5() {
  Outcome o;
  for (int q : {3, 5}) {
    std::string tag = "q=" + std::to_string(q);
    OrthoSpace sp(Field::create(q), 2);
    SchemeTable t;
    try {
      t = build_scheme(sp);
    } catch (const SchemeAxiomError& e) {
      o.require(false, tag + " " + e.what());
      continue;
    }
    P1Report p = verify_p1_closed_forms(sp, t);
    o.require(t.class_count() == (q + 11) / 2, tag + " class");
    o.require(p.passed(), tag + " p1 closed forms");
    if (q == 3) {
      o.require(t.exhaustive, "q=3 axioms not checked exhaustively");
      o.require(t.valencies == std::vector<std::uint64_t>{1, 2, 16, 16, 32, 32, 48, 96}, "q=3 valencies");
      int k1 = t.relation_index({RelTag::R1, 0, Elem{}});
      auto at = [&](RelTag i, int ai, RelTag j, int aj) {
        auto b = [](RelTag tag) { return Elem{static_cast<std::uint16_t>(tag == RelTag::R5 ? 1 : 0)}; };
        return t.p[k1][t.relation_index({i, ai, b(i)})][t.relation_index({j, aj, b(j)})];
      };
      o.require(at(RelTag::R0, 0, RelTag::R1, 0) == 1 && at(RelTag::R1, 0, RelTag::R0, 0) == 1 &&
                    at(RelTag::R1, 0, RelTag::R1, 0) == 1, "q=3 p1_01, p1_11");
      for (int a : {0, 1})
        o.require(at(RelTag::R2, a, RelTag::R3, a) == 16 && at(RelTag::R3, a, RelTag::R2, a) == 16 &&
                      at(RelTag::R3, a, RelTag::R3, a) == 16, "q=3 p1_2a3a");
      o.require(at(RelTag::R4, 0, RelTag::R5, 0) == 48 && at(RelTag::R5, 0, RelTag::R4, 0) == 48 &&
                    at(RelTag::R5, 0, RelTag::R5, 0) == 48, "q=3 p1_45b");
    }
    for (std::size_t k = 0; k < t.relations.size(); ++k)
      for (std::size_t i = 0; i < t.relations.size(); ++i) {
        std::uint64_t s = 0;
        for (auto x : t.p[k][i]) s += x;
        if (s != t.valencies[i]) o.require(false, tag + " row sum");
      }
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  for (int q : {3, 5, 7}) {
    OrthoSpace sp(Field::create(q), 1);
    std::vector<G01Element> gens;
    for (const Mat& s : sp.o2()) gens.push_back({Mat::identity(sp.field(), 1), s});
    auto closure = group_closure(gens);
    o.require(sp.o2().size() == static_cast<std::size_t>(2 * (q + 1)) && closure.size() == sp.o2().size(),
              "O_2 at q=" + std::to_string(q) + " is not a group of order 2(q+1)");
  }
  OrthoSpace sp(Field::create(3), 2);
  o.require(BigInt(sp.o2().size()) == order_o(2, 3) && sp.o2().size() == 8, "|O_2(F_3)| != 8");
  auto g = group_closure(g01_generators(sp));
  o.require(BigInt(g.size()) == order_gl(2, 3) * 8 && g.size() == 384, "G01 closure order");
  return o;
}

Outcome ac7() {
  Outcome o;
  for (int q : {3, 5, 7}) {
    std::string tag = "q=" + std::to_string(q);
    OrthoSpace sp(Field::create(q), 1);
    std::uint64_t n = vertex_count(q, 1);
    o.require(n == static_cast<std::uint64_t>(q * q), tag + " vertex count");
    for (std::uint64_t v = 0; v < n; ++v)
      if (neighbor_indices(sp, vertex_at(sp, v)).size() != n - 1) o.require(false, tag + " not complete");
    std::vector<std::uint64_t> want{1, static_cast<std::uint64_t>((q * q - 1) / 2), static_cast<std::uint64_t>((q * q - 1) / 2)};
    o.require(sorted_sizes(orbits_on_lambda(sp)) == want, tag + " orbit sizes");
    std::vector<std::uint64_t> formula;
    for (const auto& l : all_labels(sp.F(), 1)) formula.push_back(static_cast<std::uint64_t>(suborbit_size(q, 1, l)));
    std::sort(formula.begin(), formula.end());
    o.require(formula == want, tag + " formula sizes");
  }
  return o;
}

std::pair<int, std::string> run_cli(const std::string& args) {
  std::string cmd = std::string(POLAR_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

Outcome ac8() {
  Outcome o;
  // field axioms, z and Omega
  for (int q : {3, 5, 7, 9, 25}) {
    auto f = Field::create(q);
    const Field& F = *f;
    bool ok = !F.is_square(F.z()) && !F.is_square(F.sub(F.one(), F.z())) &&
              F.omega().size() == static_cast<std::size_t>((q - 1) / 2);
    for (Elem a : F.elements()) {
      ok &= F.in_omega(a) != F.in_omega(F.neg(a)) || a.is_zero();
      if (!a.is_zero()) ok &= F.mul(a, F.inv(a)) == F.one();
      for (Elem b : F.elements())
        for (Elem c : F.elements()) {
          ok &= F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c));
          ok &= F.add(F.add(a, b), c) == F.add(a, F.add(b, c));
          ok &= F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c));
        }
    }
    o.require(ok, "field or z/Omega invariants at q=" + std::to_string(q));
  }
  // isometries under assembly, action compatibility
  std::mt19937_64 rng(8);
  for (int q : {3, 5}) {
    OrthoSpace sp(Field::create(q), 2);
    const FieldPtr& f = sp.field();
    std::uniform_int_distribution<std::size_t> ds(0, sp.o2().size() - 1);
    std::uniform_int_distribution<int> de(0, q - 1);
    auto rnd = [&](int r, int c) {
      Mat m(f, r, c);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = f->at(de(rng));
      return m;
    };
    auto inv_mat = [&] {
      for (;;) {
        Mat m = rnd(2, 2);
        if (rank(m) == 2) return m;
      }
    };
    bool iso = true, act = true;
    for (int k = 0; k < 100; ++k) {
      G01Element g{inv_mat(), sp.o2()[ds(rng)]}, h{inv_mat(), sp.o2()[ds(rng)]};
      Mat t23 = rnd(2, 2), w = rnd(2, 2);
      w = w - transpose(w);
      Mat t11 = inv_mat();
      Mat t21 = (w - scale(sp.F().half(), t23 * sp.Delta() * transpose(t23))) * t11;
      G0Element g0 = g0_element(sp, t11, t21, t23, sp.o2()[ds(rng)]);
      iso &= is_isometry(sp, g.full()) && is_isometry(sp, g0_full(sp, g0));
      Vertex v = vertex_at(sp, std::uniform_int_distribution<std::uint64_t>(0, vertex_count(q, 2) - 1)(rng));
      act &= g01_act(compose(g, h), v) == g01_act(h, g01_act(g, v));
      act &= g0_act(sp, g0_from_g01(sp, g), v) == g01_act(g, v);
    }
    o.require(iso, "isometry under assembly");
    o.require(act, "action compatibility");
    bool tiso = true;
    for (const auto& v : enumerate_vertices(sp)) tiso &= is_totally_isotropic(sp, realize(sp, v));
    o.require(tiso, "vertex total isotropy at q=" + std::to_string(q));
  }
  // determinism of every command
  for (const char* args : {"suborbits --q 5 --nu 3 --format json", "verify --q 3 --nu 2 --suite all",
                           "graph --q 3 --nu 2 --format json", "scheme --q 3",
                           R"(classify --q 3 --nu 2 --vertex '{"X":[0,0,0,0],"Z":[1,0,0,0]}')"}) {
    auto a = run_cli(args), b = run_cli(args);
    o.require(a.first >= 0 && a == b && !a.second.empty(), std::string("nondeterministic: ") + args);
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*fn)();
  };
  const Criterion all[] = {
      {"suborbit partition and rank", ac1}, {"classifier soundness", ac2},
      {"canonical forms of alternate matrices", ac3}, {"quasi-strongly-regular parameters", ac4},
      {"association scheme", ac5}, {"group structure", ac6},
      {"nu = 1 identities", ac7}, {"property suites", ac8},
  };
  int failed = 0, k = 0;
  for (const auto& c : all) {
    ++k;
    auto t = Clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "AC" << k << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << c.name;
    std::printf("  (%.2f s)", since(t));
    std::cout.flush();
    if (!o.pass) std::cout << "  -- " << o.why.str();
    std::cout << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
