#include "macut/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "macut/errors.hpp"
#include "macut/isotopy.hpp"
#include "macut/moment_angle.hpp"
#include "macut/serialize.hpp"
#include "macut/surgery.hpp"

namespace macut::cli {

namespace {

constexpr const char* kWorkersEnv = "MACUT_WORKERS";

int parse_int(const std::string& token, const char* what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used == token.size()) return value;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("expected an integer for ") + what + ", got \"" + token + "\"");
}

const std::string& next_token(const std::vector<std::string>& tokens, std::size_t& pos, const char* what) {
  if (pos >= tokens.size()) throw UsageError(std::string("missing ") + what);
  return tokens[pos++];
}

const SimplePolytope& need_polytope(const Input& in, const char* who) {
  if (const auto* p = in.polytope()) return *p;
  throw UsageError(std::string(who) + " needs a polytope, got a simplicial complex");
}

Input load_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open input file \"" + path + "\"");
  const Json j = Json::parse(file);
  if (j.contains("dim")) return {polytope_from_json(j), path};
  if (j.contains("maximal_faces")) return {complex_from_json(j), path};
  throw InvariantError("schema", "\"" + path + "\" is neither a polytope nor a complex");
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string describe_group(const Group& g) {
  std::string out = "rank " + std::to_string(g.rank);
  if (!g.torsion.empty()) out += " torsion [" + torsion_string(g) + "]";
  return out;
}

void write_groups_table(std::ostream& os, const GradedGroups& groups) {
  os << "degree  rank  torsion\n";
  for (const auto& [degree, g] : groups.degrees()) {
    char line[64];
    std::snprintf(line, sizeof line, "%6d  %4ld  ", degree, g.rank);
    os << line << (g.torsion.empty() ? "-" : torsion_string(g)) << '\n';
  }
}

SweepOptions sweep(const JobOptions& options) { return {options.workers, options.max_exponent}; }

int cmd_build(const Input& in, const JobOptions& options, std::ostream& os) {
  Json j = std::visit([](const auto& obj) { return to_json(obj); }, in.object);
  if (options.format == Format::Csv) throw UsageError("build supports table or --json output only");
  Json out{{"schema", kSchemaVersion}};
  for (const auto& [key, value] : j.items()) out[key] = value;
  os << out.dump() << '\n';
  return kSuccess;
}

int cmd_betti(const Input& in, const JobOptions& options, std::ostream& os) {
  const SimplicialComplex complex =
      in.polytope() ? dual_complex(*in.polytope()) : std::get<SimplicialComplex>(in.object);
  const auto groups = moment_angle_cohomology(complex, sweep(options));
  const auto poly = betti(groups);

  switch (options.format) {
    case Format::Json: {
      Json j{{"schema", kSchemaVersion}, {"command", "betti"}, {"input", in.description},
             {"m", complex.vertex_count()}};
      if (const auto* p = in.polytope()) {
        j["n"] = p->dim();
        j["dim"] = p->facet_count() + p->dim();
      }
      j["groups"] = to_json(groups);
      j["poincare"] = poly.to_string();
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "degree,rank,torsion\n";
      for (const auto& [degree, g] : groups.degrees())
        os << degree << ',' << g.rank << ',' << torsion_string(g) << '\n';
      break;
    case Format::Table:
      os << "input     " << in.description << '\n';
      os << "m         " << complex.vertex_count() << '\n';
      if (const auto* p = in.polytope()) {
        os << "n         " << p->dim() << '\n';
        os << "dim Z     " << p->facet_count() + p->dim() << '\n';
      }
      write_groups_table(os, groups);
      os << "poincare  " << poly.to_string() << '\n';
      break;
  }
  return kSuccess;
}

void write_reports(const std::string& description, const std::vector<TheoremReport>& reports,
                   Format format, std::ostream& os) {
  bool all = true;
  for (const auto& r : reports) all = all && r.match;

  switch (format) {
    case Format::Json: {
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(to_json(r));
      Json j{{"schema", kSchemaVersion}, {"command", "verify"}, {"input", description},
             {"reports", list}, {"all_match", all}};
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      os << "vertex,degree,lhs_rank,lhs_torsion,rhs_rank,rhs_torsion,match\n";
      for (const auto& r : reports) {
        std::set<int> degrees;
        for (const auto& [d, g] : r.lhs.degrees()) degrees.insert(d);
        for (const auto& [d, g] : r.rhs.degrees()) degrees.insert(d);
        for (int d : degrees) {
          const auto& l = r.lhs.at(d);
          const auto& h = r.rhs.at(d);
          os << r.vertex << ',' << d << ',' << l.rank << ',' << torsion_string(l) << ',' << h.rank
             << ',' << torsion_string(h) << ',' << (l == h ? "true" : "false") << '\n';
        }
      }
      break;
    case Format::Table:
      for (const auto& r : reports) {
        os << description << ", vertex " << r.vertex << ": "
           << (r.match ? "match" : "MISMATCH") << " (cohomology-level)\n";
        os << "  lhs  " << betti(r.lhs).to_string() << '\n';
        os << "  rhs  " << betti(r.rhs).to_string() << '\n';
        for (const auto& [d, diff] : r.diff)
          os << "  degree " << d << ": lhs " << describe_group(diff.lhs) << ", rhs "
             << describe_group(diff.rhs) << '\n';
      }
      os << (all ? "all match" : "mismatch found") << '\n';
      break;
  }
}

int cmd_verify(const Input& in, const std::vector<int>& vertices, const JobOptions& options,
               std::ostream& os) {
  const auto& polytope = need_polytope(in, "verify");
  std::vector<TheoremReport> reports;
  for (int v : vertices) reports.push_back(verify_cut_theorem(polytope, v, sweep(options)));
  write_reports(in.description, reports, options.format, os);
  for (const auto& r : reports)
    if (!r.match) return kMismatch;
  return kSuccess;
}

int cmd_verify_corpus(const JobOptions& options, std::ostream& os) {
  struct Row {
    std::string name;
    int m, n, vertices;
    bool match;
    std::string lhs;
  };
  std::vector<Row> rows;
  bool all = true;
  for (const auto& c : verification_corpus()) {
    bool match = true;
    std::string lhs;
    for (int v = 0; v < c.polytope.vertex_count(); ++v) {
      const auto r = verify_cut_theorem(c.polytope, v, sweep(options));
      match = match && r.match;
      if (v == 0) lhs = betti(r.lhs).to_string();
    }
    all = all && match;
    rows.push_back({c.name, c.polytope.facet_count(), c.polytope.dim(), c.polytope.vertex_count(), match, lhs});
  }

  switch (options.format) {
    case Format::Json: {
      Json list = Json::array();
      for (const auto& r : rows)
        list.push_back(Json{{"case", r.name}, {"m", r.m}, {"n", r.n}, {"vertices", r.vertices},
                            {"match", r.match}, {"cut_poincare", r.lhs}});
      os << Json{{"schema", kSchemaVersion}, {"command", "verify-corpus"}, {"cases", list},
                 {"all_match", all}}
                .dump(2)
         << '\n';
      break;
    }
    case Format::Csv:
      os << "case,m,n,vertices,match,cut_poincare\n";
      for (const auto& r : rows)
        os << r.name << ',' << r.m << ',' << r.n << ',' << r.vertices << ','
           << (r.match ? "true" : "false") << ',' << r.lhs << '\n';
      break;
    case Format::Table:
      for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-26s m=%-2d n=%d  %2d vertices  %-8s  %s\n", r.name.c_str(),
                      r.m, r.n, r.vertices, r.match ? "match" : "MISMATCH", r.lhs.c_str());
        os << line;
      }
      os << (all ? "all cases match" : "mismatch found") << '\n';
      break;
  }
  return all ? kSuccess : kMismatch;
}

int cmd_isotopy_check(int k, long samples, std::uint64_t seed, const JobOptions& options,
                      std::ostream& os) {
  if (k < 1) throw UsageError("isotopy-check: k must be >= 1");
  if (samples < 2) throw UsageError("isotopy-check: need at least 2 samples");
  constexpr double kIdentityTolerance = 1e-12;
  constexpr double kLipschitzBound = 2.0;

  const auto endpoints = isotopy::check_endpoints(k, samples, seed);
  struct Probe {
    std::string name;
    isotopy::ProbeTarget target;
  };
  std::vector<Probe> probes{{"standard torus", {isotopy::MapKind::StandardTorus, k, 1.0}},
                            {"isotopy t=0", {isotopy::MapKind::Isotopy, k, 0.0}},
                            {"isotopy t=0.5", {isotopy::MapKind::Isotopy, k, 0.5}},
                            {"isotopy t=1", {isotopy::MapKind::Isotopy, k, 1.0}}};
  if (k == 1) {
    probes.push_back({"f1 t=0", {isotopy::MapKind::F1, 1, 0.0}});
    probes.push_back({"f1 t=1", {isotopy::MapKind::F1, 1, 1.0}});
  }
  isotopy::ProbeOptions probe_options;
  probe_options.samples = samples;
  probe_options.seed = seed;
  probe_options.workers = options.workers;

  const bool a_ok = endpoints.identity_a_error <= kIdentityTolerance;
  const bool b_ok = endpoints.identity_b_radius_error <= kIdentityTolerance &&
                    endpoints.identity_b_drift <= kIdentityTolerance;
  const bool lip_ok = endpoints.lipschitz <= kLipschitzBound;
  bool all = a_ok && b_ok && lip_ok;

  Json probe_json = Json::array();
  std::ostringstream table;
  for (const auto& p : probes) {
    const auto report = isotopy::injectivity_probe(p.target, probe_options);
    all = all && report.passed();
    Json j{{"name", p.name}};
    j.update(to_json(report));
    probe_json.push_back(j);
    table << "probe " << p.name << ": " << report.violations << " violations, min separation "
          << format_double(report.min_separation) << '\n';
  }

  switch (options.format) {
    case Format::Json:
      os << Json{{"schema", kSchemaVersion},
                 {"command", "isotopy-check"},
                 {"k", k},
                 {"samples", samples},
                 {"seed", seed},
                 {"identity_a_error", endpoints.identity_a_error},
                 {"identity_b_radius_error", endpoints.identity_b_radius_error},
                 {"identity_b_drift", endpoints.identity_b_drift},
                 {"lipschitz", endpoints.lipschitz},
                 {"probes", probe_json},
                 {"passed", all}}
                .dump(2)
         << '\n';
      break;
    case Format::Csv:
      os << "check,value,passed\n";
      os << "identity_a," << format_double(endpoints.identity_a_error) << ',' << a_ok << '\n';
      os << "identity_b_radius," << format_double(endpoints.identity_b_radius_error) << ',' << b_ok << '\n';
      os << "identity_b_drift," << format_double(endpoints.identity_b_drift) << ',' << b_ok << '\n';
      os << "lipschitz," << format_double(endpoints.lipschitz) << ',' << lip_ok << '\n';
      for (const auto& j : probe_json)
        os << "probe " << j["name"].get<std::string>() << ',' << j["violations"].get<long>() << ','
           << j["passed"].get<bool>() << '\n';
      break;
    case Format::Table:
      os << "k = " << k << ", samples = " << samples << ", seed = " << seed << '\n';
      os << "endpoint A error   " << format_double(endpoints.identity_a_error) << '\n';
      os << "endpoint B radius  " << format_double(endpoints.identity_b_radius_error) << '\n';
      os << "endpoint B drift   " << format_double(endpoints.identity_b_drift) << '\n';
      os << "lipschitz (max)    " << format_double(endpoints.lipschitz) << '\n';
      os << table.str();
      os << (all ? "pass" : "FAIL") << '\n';
      break;
  }
  return all ? kSuccess : kMismatch;
}

int default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

Input parse_whole(const std::vector<std::string>& tokens) {
  std::size_t pos = 0;
  Input in = parse_input(tokens, pos);
  if (pos != tokens.size()) throw UsageError("unexpected trailing argument \"" + tokens[pos] + "\"");
  return in;
}

}  // namespace

std::vector<std::string> tokenize(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& arg : args) {
    std::string word;
    for (char c : arg) {
      if (c == '(' || c == ')' || c == ' ') {
        if (!word.empty()) out.push_back(std::move(word));
        word.clear();
        if (c != ' ') out.emplace_back(1, c);
      } else {
        word += c;
      }
    }
    if (!word.empty()) out.push_back(std::move(word));
  }
  return out;
}

Input parse_input(const std::vector<std::string>& tokens, std::size_t& pos) {
  const std::string head = next_token(tokens, pos, "input expression");
  if (head == "(") {
    Input inner = parse_input(tokens, pos);
    if (next_token(tokens, pos, "\")\"") != ")") throw UsageError("expected \")\"");
    return inner;
  }
  if (head == ")") throw UsageError("unexpected \")\"");

  if (head == "simplex" || head == "polygon" || head == "cube") {
    const int n = parse_int(next_token(tokens, pos, "size"), head.c_str());
    const std::string description = head + " " + std::to_string(n);
    try {
      if (head == "simplex") return {simplex_polytope(n), description};
      if (head == "polygon") return {polygon(n), description};
      return {cube(n), description};
    } catch (const InvariantError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (head == "product") {
    const Input lhs = parse_input(tokens, pos);
    const Input rhs = parse_input(tokens, pos);
    return {product(need_polytope(lhs, "product"), need_polytope(rhs, "product")),
            "product (" + lhs.description + ") (" + rhs.description + ")"};
  }
  if (head == "cut-vertex") {
    const Input base = parse_input(tokens, pos);
    const int v = parse_int(next_token(tokens, pos, "vertex index"), "vertex index");
    const auto& p = need_polytope(base, "cut-vertex");
    if (v < 0 || v >= p.vertex_count())
      throw UsageError("vertex " + std::to_string(v) + " out of range for " + base.description);
    return {cut_vertex(p, v), "cut-vertex (" + base.description + ") " + std::to_string(v)};
  }
  if (head == "file") return load_file(next_token(tokens, pos, "file path"));
  if (head.find('/') != std::string::npos || head.find('.') != std::string::npos) return load_file(head);
  throw UsageError("unknown constructor \"" + head + "\"");
}

std::vector<CorpusCase> verification_corpus() {
  std::vector<CorpusCase> out;
  for (int m = 3; m <= 8; ++m) out.push_back({"polygon " + std::to_string(m), polygon(m)});
  for (int n = 2; n <= 4; ++n) out.push_back({"simplex " + std::to_string(n), simplex_polytope(n)});
  out.push_back({"cube 3", cube(3)});
  out.push_back({"prism", product(simplex_polytope(1), simplex_polytope(2))});
  out.push_back({"cut-vertex (polygon 5) 0", cut_vertex(polygon(5), 0)});
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology of moment-angle manifolds and the vertex-cut surgery formula", "macut"};
  app.require_subcommand(1);

  JobOptions options;
  options.workers = default_workers();
  std::vector<std::string> positional;
  bool json = false, csv = false, all_vertices = false;
  std::string output_path;
  unsigned long long seed = 0;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--workers", options.workers, "worker threads (default $MACUT_WORKERS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-subsets", options.max_exponent, "refuse more than 2^E vertex subsets")
        ->check(CLI::Range(1, 62));
    auto* j = sub->add_flag("--json", json, "JSON output");
    auto* c = sub->add_flag("--csv", csv, "CSV output");
    j->excludes(c);
    sub->add_option("--output", output_path, "write output to PATH");
    sub->add_option("--seed", seed, "sampling seed");
  };

  auto* build = app.add_subcommand("build", "print the canonical JSON of a polytope or complex");
  auto* betti_cmd = app.add_subcommand("betti", "cohomology of the moment-angle manifold");
  auto* verify = app.add_subcommand("verify", "check the vertex-cut formula on one polytope");
  auto* corpus = app.add_subcommand("verify-corpus", "check the vertex-cut formula on the built-in corpus");
  auto* iso = app.add_subcommand("isotopy-check", "numeric checks of the torus isotopy");
  for (auto* sub : {build, betti_cmd, verify, iso}) {
    sub->add_option("args", positional, "input expression and arguments");
    add_common(sub);
  }
  add_common(corpus);
  verify->add_flag("--all-vertices", all_vertices, "verify every vertex");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  options.format = json ? Format::Json : csv ? Format::Csv : Format::Table;
  if (!output_path.empty()) options.output_path = output_path;
  for (auto* sub : {build, betti_cmd, verify, corpus, iso})
    if (sub->count("--seed") > 0) options.seed = seed;

  std::ostringstream result;
  int code = kSuccess;
  try {
    const auto tokens = tokenize(positional);
    if (build->parsed()) {
      code = cmd_build(parse_whole(tokens), options, result);
    } else if (betti_cmd->parsed()) {
      code = cmd_betti(parse_whole(tokens), options, result);
    } else if (verify->parsed()) {
      std::size_t pos = 0;
      const Input in = parse_input(tokens, pos);
      std::vector<int> vertices;
      if (all_vertices) {
        if (pos != tokens.size()) throw UsageError("--all-vertices takes no vertex index");
        for (int v = 0; v < need_polytope(in, "verify").vertex_count(); ++v) vertices.push_back(v);
      } else {
        if (pos + 1 != tokens.size()) throw UsageError("verify needs one vertex index or --all-vertices");
        vertices.push_back(parse_int(tokens[pos], "vertex index"));
        if (vertices[0] < 0 || vertices[0] >= need_polytope(in, "verify").vertex_count())
          throw UsageError("vertex " + tokens[pos] + " out of range");
      }
      code = cmd_verify(in, vertices, options, result);
    } else if (corpus->parsed()) {
      code = cmd_verify_corpus(options, result);
    } else if (iso->parsed()) {
      if (tokens.empty() || tokens.size() > 3)
        throw UsageError("usage: isotopy-check K [SAMPLES [SEED]]");
      const int k = parse_int(tokens[0], "k");
      const long samples = tokens.size() > 1 ? parse_int(tokens[1], "samples") : 10000;
      std::uint64_t s = tokens.size() > 2 ? static_cast<std::uint64_t>(parse_int(tokens[2], "seed")) : 42;
      if (options.seed) s = *options.seed;
      code = cmd_isotopy_check(k, samples, s, options, result);
    }
  } catch (const ResourceLimitError& e) {
    err << "error: " << e.what() << " (raise the cap with --max-subsets)\n";
    return kResourceLimit;
  } catch (const InvariantError& e) {
    err << "error: invariant \"" << e.invariant() << "\" violated: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  if (options.output_path) {
    std::ofstream file(*options.output_path);
    if (!file) {
      err << "error: cannot write " << *options.output_path << '\n';
      return kUsage;
    }
    file << result.str();
  } else {
    out << result.str();
  }
  return code;
}

}  // namespace macut::cli
