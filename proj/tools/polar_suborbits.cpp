#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "polar/lambda_graph.hpp"
#include "polar/oracle.hpp"
#include "polar/qsrg.hpp"
#include "polar/scheme.hpp"
#include "polar/serialize.hpp"

using namespace polar;
using nlohmann::json;

namespace {

constexpr int kOk = 0, kFail = 1, kUsage = 2;

// Parameter errors raised by the command layer itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int q = 0;
  int nu = 2;
  int delta = 2;
  std::string format;
  std::string out;
  int threads = 0;
};

OrthoSpace make_space(const Config& c) {
  if (c.delta != 2) throw UsageError("only delta = 2 is supported by this command");
  if (c.nu < 1) throw UsageError("nu must be >= 1");
  return OrthoSpace(Field::create(c.q), c.nu, c.delta);
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw UsageError("cannot write " + c.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int cmd_suborbits(const Config& c) {
  OrthoSpace sp = make_space(c);
  const Field& F = sp.F();
  json rows = json::array();
  BigInt cum = 0;
  std::ostringstream table, csv;
  table << "label\tsize\tcumulative\n";
  csv << "label,size,displayed,cumulative\n";
  for (const auto& l : all_labels(F, c.nu)) {
    BigInt s = suborbit_size(F.order(), c.nu, l);
    cum += s;
    std::string disp;
    try {
      disp = suborbit_size_displayed(F.order(), c.nu, l).str();
    } catch (const std::domain_error&) {
      disp = "";
    }
    rows.push_back({{"label", to_string(l)},
                    {"size", s.str()},
                    {"displayed", disp.empty() ? json(nullptr) : json(disp)},
                    {"cumulative", cum.str()}});
    table << to_string(l) << '\t' << s << '\t' << cum << '\n';
    csv << to_string(l) << ',' << s << ',' << disp << ',' << cum << '\n';
  }
  int rank = rank_g0(F.order(), c.nu);
  table << "rank\t" << rank << "\ttotal\t" << cum << '\n';
  if (c.format == "json")
    emit(c, dump({{"q", F.order()}, {"nu", c.nu}, {"rank", rank}, {"total", cum.str()}, {"rows", rows}}));
  else if (c.format == "csv")
    emit(c, csv.str());
  else
    emit(c, table.str());
  return kOk;
}

struct VerifyOptions {
  std::string suite = "all";
  std::uint64_t vertex_cap = 20'000;
  std::uint64_t pair_limit = 5'000'000;
  std::uint64_t max_vertices = 200'000;
  int samples = 200;
  int spot_checks = 20;
  std::uint64_t seed = 1;
};

int cmd_verify(const Config& c, const VerifyOptions& v) {
  OrthoSpace sp = make_space(c);
  const bool all = v.suite == "all";
  json report{{"q", sp.F().order()}, {"nu", c.nu}, {"suites", json::object()}};
  bool ok = true;
  auto note = [](const std::string& name, bool pass) {
    std::cerr << name << ": " << (pass ? "PASS" : "FAIL") << '\n';
  };

  if (all || v.suite == "suborbits") {
    CrossValidation cv = cross_validate(sp, v.vertex_cap, c.threads);
    report["suites"]["suborbits"] = to_json(cv);
    ok = ok && cv.passed();
    note("suborbits", cv.passed());
  }
  if (all || v.suite == "qsrg") {
    if (c.nu < 2) {
      if (!all) throw UsageError("the qsrg suite needs nu >= 2");
      report["suites"]["qsrg"] = "skipped: nu < 2";
    } else {
      CensusOptions o;
      o.exhaustive_pair_limit = v.pair_limit;
      o.max_vertices = v.max_vertices;
      o.sample_pairs = v.samples;
      o.seed = v.seed;
      o.threads = c.threads;
      CensusReport r = census(sp, o);
      report["suites"]["qsrg"] = to_json(r);
      ok = ok && r.passed();
      note("qsrg", r.passed());
      std::cerr << "  lambda expected " << r.params.lambda << ", observed";
      for (auto [k, n] : r.lambda_hist) std::cerr << ' ' << k;
      std::cerr << "; mu observed";
      for (auto [k, n] : r.mu_hist) std::cerr << ' ' << k;
      std::cerr << '\n';
    }
  }
  if (all || v.suite == "scheme") {
    if (c.nu != 2) {
      if (!all) throw UsageError("the scheme suite needs nu = 2");
      report["suites"]["scheme"] = "skipped: nu != 2";
    } else {
      SchemeOptions o;
      o.spot_checks = v.spot_checks;
      o.seed = v.seed;
      o.threads = c.threads;
      try {
        SchemeTable t = build_scheme(sp, o);
        P1Report p = verify_p1_closed_forms(sp, t);
        report["suites"]["scheme"] = {{"table", to_json(t)}, {"p1", to_json(p)}, {"passed", p.passed()}};
        ok = ok && p.passed();
        note("scheme", p.passed());
      } catch (const SchemeAxiomError& e) {
        report["suites"]["scheme"] = {{"error", e.what()}, {"passed", false}};
        ok = false;
        note("scheme", false);
      }
    }
  }
  report["passed"] = ok;
  emit(c, dump(report));
  return ok ? kOk : kFail;
}

int cmd_graph(const Config& c, std::uint64_t cap) {
  OrthoSpace sp = make_space(c);
  std::uint64_t n = vertex_count(sp.F().order(), c.nu);
  if (n > cap) throw UsageError("graph has " + std::to_string(n) + " vertices; raise --vertex-cap to at least that");
  GraphFormat fmt = parse_graph_format(c.format);
  ExportSummary s;
  if (c.out.empty()) {
    s = export_graph(sp, fmt, std::cout);
    std::cerr << s.vertices << " vertices, " << s.edges << " edges\n";
  } else {
    s = export_graph(sp, fmt, c.out);
    std::cout << s.vertices << " vertices, " << s.edges << " edges\n";
  }
  return kOk;
}

int cmd_scheme(const Config& c, const SchemeOptions& o) {
  if (c.nu != 2) throw UsageError("the scheme command needs nu = 2");
  OrthoSpace sp = make_space(c);
  SchemeTable t;
  try {
    t = build_scheme(sp, o);
  } catch (const SchemeAxiomError& e) {
    std::cerr << e.what() << '\n';
    return kFail;
  }
  P1Report p = verify_p1_closed_forms(sp, t);
  if (c.format == "csv") {
    emit(c, scheme_csv(t));
  } else {
    json j = to_json(t);
    j["p1_check"] = to_json(p);
    emit(c, dump(j));
  }
  std::cerr << "class " << t.class_count() << ", p1 closed forms " << (p.passed() ? "match" : "MISMATCH") << '\n';
  return kOk;
}

int cmd_classify(const Config& c, const std::string& vertex) {
  OrthoSpace sp = make_space(c);
  json in;
  try {
    in = json::parse(vertex);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed --vertex JSON: ") + e.what());
  }
  Vertex v = vertex_from_json(sp, in);
  Classification cl = classify(sp, v);
  if (c.format == "table") {
    emit(c, to_string(cl.label) + "\n");
  } else {
    emit(c, dump({{"label", to_string(cl.label)},
                  {"vertex", vertex_to_json(v)},
                  {"representative", vertex_to_json(representative(sp, cl.label))},
                  {"witness", g01_to_json(cl.witness)}}));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Suborbits, quasi-strongly-regular census and association scheme of the last subconstituent"};
  app.require_subcommand(1);
  Config cfg;
  std::map<std::string, std::string> formats;  // per subcommand
  auto common = [&](CLI::App* s, const std::string& fmt_default, const std::vector<std::string>& allowed) {
    s->add_option("--q", cfg.q, "odd prime power field order")->required();
    s->add_option("--nu", cfg.nu, "Witt index")->capture_default_str();
    s->add_option("--delta", cfg.delta, "definite part dimension")->capture_default_str();
    s->add_option("--out", cfg.out, "output path (default stdout)");
    s->add_option("--threads", cfg.threads, "worker threads (0: POLAR_SUBORBITS_THREADS or all cores)");
    if (!allowed.empty()) {
      formats[s->get_name()] = fmt_default;
      s->add_option("--format", formats[s->get_name()], "output format")->check(CLI::IsMember(allowed))->capture_default_str();
    }
  };

  auto* sub = app.add_subcommand("suborbits", "suborbit labels with their lengths");
  common(sub, "table", {"json", "csv", "table"});

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "run verification suites");
  common(ver, "", {});
  ver->add_option("--suite", vo.suite)->check(CLI::IsMember({"suborbits", "qsrg", "scheme", "all"}))->capture_default_str();
  ver->add_option("--vertex-cap", vo.vertex_cap, "cap on |Lambda| for orbit enumeration")->capture_default_str();
  ver->add_option("--pair-limit", vo.pair_limit, "exhaustive census when n(n-1)/2 is at most this")->capture_default_str();
  ver->add_option("--max-vertices", vo.max_vertices, "cap on |Lambda| for the census")->capture_default_str();
  ver->add_option("--samples", vo.samples, "random pairs cross-checked by the census")->capture_default_str();
  ver->add_option("--spot-checks", vo.spot_checks, "random base pairs per relation")->capture_default_str();
  ver->add_option("--seed", vo.seed)->capture_default_str();

  std::uint64_t graph_cap = 200'000;
  auto* gr = app.add_subcommand("graph", "export Lambda");
  common(gr, "edgelist", {"edgelist", "dimacs", "json"});
  gr->add_option("--vertex-cap", graph_cap)->capture_default_str();

  SchemeOptions so;
  auto* sch = app.add_subcommand("scheme", "association scheme at nu = 2");
  common(sch, "json", {"json", "csv"});
  sch->add_option("--pair-limit", so.exhaustive_pair_limit, "exhaustive checks when |Lambda|^2 is at most this")
      ->capture_default_str();
  sch->add_option("--spot-checks", so.spot_checks)->capture_default_str();
  sch->add_option("--seed", so.seed)->capture_default_str();

  std::string vertex;
  auto* cls = app.add_subcommand("classify", "suborbit label and witness for one vertex");
  common(cls, "json", {"json", "table"});
  cls->add_option("--vertex", vertex, R"(vertex as {"X": [nu*nu], "Z": [2*nu]})")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    so.threads = cfg.threads;
    for (auto* s : app.get_subcommands())
      if (formats.count(s->get_name())) cfg.format = formats[s->get_name()];
    if (*sub) return cmd_suborbits(cfg);
    if (*ver) return cmd_verify(cfg, vo);
    if (*gr) return cmd_graph(cfg, graph_cap);
    if (*sch) return cmd_scheme(cfg, so);
    if (*cls) return cmd_classify(cfg, vertex);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
