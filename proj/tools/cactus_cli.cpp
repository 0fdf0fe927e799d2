// cactus-cli: exact closeness, constructions, enumeration and rewrite checks
// on cactus graphs. Exit codes: 0 ok, 1 violations found, 2 usage error.

#include <cactus/cactus.hpp>
#include <cactus/json.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace cactus;

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string output = "-";
  std::string format;
  unsigned workers = 1;

  std::size_t n = 0, k = 0, k1 = 0, k2 = 0;
  std::size_t n_max = 8;
  std::size_t path_n = 0, cycle_n = 0;
  std::vector<std::size_t> d_args;
  std::string direction = "min";
  std::string lemma;
  bool corpus = false;
  std::size_t random_count = 500;
  std::size_t random_n_max = 14;
  std::uint64_t seed = 1;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

// One graph per non-blank line. Errors carry the 1-based line number.
std::vector<std::pair<std::size_t, Graph>> read_graphs(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open input file: " + path);
    in = &file;
  }
  std::vector<std::pair<std::size_t, Graph>> out;
  std::string line;
  for (std::size_t lineno = 1; std::getline(*in, line); ++lineno) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    try {
      out.emplace_back(lineno, from_graph6(std::string_view(line).substr(start)));
    } catch (const Graph6Error& e) {
      throw UsageError("line " + std::to_string(lineno) + ": malformed graph6: " + e.what());
    }
  }
  return out;
}

CactusClassKey class_key(const Options& o) {
  CactusClassKey key{o.n, o.k};
  key.validate();
  return key;
}

int cmd_closeness(const Options& o) {
  Output out(o.output);
  for (const auto& [lineno, g] : read_graphs(o.input)) {
    if (!is_connected(g)) throw UsageError("line " + std::to_string(lineno) + ": graph is disconnected");
    Json per_vertex = Json::array();
    for (const auto& c : all_vertex_closeness(g)) per_vertex.push_back(exact_json(c));
    const DyadicRational total = graph_closeness(g);
    const Json j{{"graph6", to_graph6(g)},
                 {"closeness", exact_json(total)},
                 {"closeness_decimal", total.to_decimal()},
                 {"per_vertex", per_vertex}};
    out.stream() << j.dump() << '\n';
  }
  return kOk;
}

int cmd_construct(const Options& o, const CLI::App& sub) {
  const bool path = sub.count("--path") > 0, cycle = sub.count("--cycle") > 0, d = sub.count("--d") > 0;
  const bool d_flags = sub.count("--n") > 0;
  if (path + cycle + d + d_flags != 1) throw UsageError("choose exactly one of --path, --cycle, --d or --n");
  Graph g(0);
  if (path) {
    g = make_path(o.path_n);
  } else if (cycle) {
    g = make_cycle(o.cycle_n);
  } else if (d) {
    g = make_D({o.d_args[0], o.d_args[1], o.d_args[2]});
  } else if (sub.count("--k1") || sub.count("--k2")) {
    g = make_D({o.n, o.k1, o.k2});
  } else {
    g = make_D(DParams::balanced(o.n, o.k));
  }
  Output out(o.output);
  out.stream() << to_graph6(g) << '\n';
  return kOk;
}

int cmd_enumerate(const Options& o) {
  const auto codes = enumerate_cactus_codes(class_key(o), o.workers);
  Output out(o.output);
  for (const auto& c : codes) out.stream() << c << '\n';
  return kOk;
}

int cmd_extremal(const Options& o) {
  const Direction dir = o.direction == "max" ? Direction::Max : Direction::Min;
  const CactusClassKey key = class_key(o);
  const ExtremalResult r = extremal_closeness(key, dir, o.workers);
  const Json j{{"n", key.n},
               {"k", key.k},
               {"direction", direction_name(dir)},
               {"class_size", r.class_size},
               {"value", exact_json(r.value)},
               {"decimal", r.value.to_decimal()},
               {"witnesses", r.witnesses}};
  Output out(o.output);
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const Options& o) {
  if (o.n_max < 3) throw UsageError("--n-max must be at least 3");
  if (o.n_max > kDefaultExhaustiveCeiling) {
    std::cerr << "note: n-max " << o.n_max << " exceeds " << kDefaultExhaustiveCeiling
              << "; class sizes roughly triple per extra vertex\n";
  }
  const auto reports = verify_theorem(o.n_max, o.workers);
  Output out(o.output);
  bool all_hold = true;
  std::size_t at_min = 0, at_max = 0;
  for (const auto& r : reports) {
    all_hold = all_hold && r.theorem_holds && r.violations.empty();
    if (r.resolved_direction == Direction::Min) ++at_min;
    if (r.resolved_direction == Direction::Max) ++at_max;
  }
  if (o.format == "csv") {
    auto& s = out.stream();
    s << "n,k,class_size,min,max,minimizer_graph6,theorem_holds\n";
    for (const auto& r : reports) {
      std::string mins;
      for (std::size_t i = 0; i < r.minimizers.size(); ++i) mins += (i ? ";" : "") + r.minimizers[i];
      s << r.key.n << ',' << r.key.k << ',' << r.class_size << ',' << r.min_value.to_string() << ','
        << r.max_value.to_string() << ',' << mins << ',' << (r.theorem_holds ? "true" : "false") << '\n';
    }
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    out.stream() << arr.dump(2) << '\n';
  }
  std::cerr << "direction: the balanced D attains the minimum in " << at_min << " and the maximum in " << at_max
            << " of " << reports.size() << " classes\n";
  for (const auto& r : reports) {
    if (!r.theorem_holds) {
      std::cerr << "not unique: (n=" << r.key.n << ", k=" << r.key.k << ") " << r.violations.size()
                << " competing witness(es)\n";
    }
  }
  return all_hold ? kOk : kViolations;
}

int cmd_lemma_check(const Options& o, const CLI::App& sub) {
  std::vector<LemmaId> lemmas;
  if (o.lemma == "all") {
    lemmas.assign(kAllLemmas.begin(), kAllLemmas.end());
  } else if (auto id = parse_lemma(o.lemma)) {
    lemmas.push_back(*id);
  } else {
    throw UsageError("unknown lemma: " + o.lemma);
  }
  Output out(o.output);
  bool violated = false;

  if (o.corpus) {
    if (sub.count("--input")) throw UsageError("--corpus and --input are exclusive");
    LemmaCorpusOptions opt;
    opt.exhaustive_n_max = o.n_max;
    opt.random_count = o.random_count;
    opt.random_n_max = o.random_n_max;
    opt.seed = o.seed;
    opt.workers = o.workers;
    if (opt.random_n_max < opt.random_n_min) throw UsageError("--random-n-max must be at least 3");
    Json arr = Json::array();
    for (LemmaId id : lemmas) {
      const LemmaCorpusReport rep = verify_lemma_corpus(id, opt);
      violated = violated || !rep.violations.empty();
      std::cerr << lemma_name(id) << ": " << rep.sites_checked << " sites, " << rep.violations.size()
                << " violations, " << rep.equality_findings.size() << " equality findings\n";
      arr.push_back(corpus_json(rep));
    }
    out.stream() << arr.dump(2) << '\n';
    return violated ? kViolations : kOk;
  }

  for (const auto& [lineno, g] : read_graphs(o.input)) {
    if (!is_cactus(g).is_cactus) throw UsageError("line " + std::to_string(lineno) + ": not a connected cactus");
    for (LemmaId id : lemmas) {
      for (const auto& r : check_lemma_sites(g, id)) {
        violated = violated || r.violation();
        out.stream() << record_json(r).dump() << '\n';
      }
    }
  }
  return violated ? kViolations : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact closeness and extremal checks on cactus graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_workers = [&](CLI::App* s) {
    s->add_option("--workers", o.workers, "worker threads (0 = hardware concurrency)")->capture_default_str();
  };
  auto add_output = [&](CLI::App* s) { s->add_option("--output,-o", o.output, "output path, - for stdout"); };

  auto* closeness = app.add_subcommand("closeness", "closeness of each graph6 line, as JSON lines");
  closeness->add_option("--input,-i", o.input, "graph6 file, - for stdin");
  add_output(closeness);

  auto* construct = app.add_subcommand("construct", "emit graph6 for a path, cycle or D(n;k1,k2)");
  construct->add_option("--path", o.path_n, "path on N vertices")->check(CLI::PositiveNumber);
  construct->add_option("--cycle", o.cycle_n, "cycle on N vertices")->check(CLI::Range(3, 1 << 20));
  construct->add_option("--d", o.d_args, "D(n;k1,k2) given as n k1 k2")->expected(3);
  construct->add_option("--n", o.n, "order of D");
  construct->add_option("--k", o.k, "cycles of D, split as evenly as possible");
  construct->add_option("--k1", o.k1, "leading triangles of D");
  construct->add_option("--k2", o.k2, "trailing triangles of D");
  add_output(construct);

  auto* enumerate = app.add_subcommand("enumerate", "all cacti with n vertices and k cycles, up to isomorphism");
  enumerate->add_option("--n", o.n)->required();
  enumerate->add_option("--k", o.k)->required();
  add_workers(enumerate);
  add_output(enumerate);

  auto* extremal = app.add_subcommand("extremal", "extremal closeness over a class and its witnesses");
  extremal->add_option("--n", o.n)->required();
  extremal->add_option("--k", o.k)->required();
  extremal->add_option("--direction", o.direction)->check(CLI::IsMember({"min", "max"}))->capture_default_str();
  add_workers(extremal);
  add_output(extremal);

  auto* verify = app.add_subcommand("verify", "check that balanced D is the unique extremal cactus per class");
  verify->add_option("--n-max", o.n_max)->capture_default_str();
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));
  add_workers(verify);
  add_output(verify);

  auto* lemma = app.add_subcommand("lemma-check", "apply a rewrite at every site and check its claim");
  lemma->add_option("--lemma", o.lemma, "L-branch, L-cycle, L-c4, L-triangle, L-pendant, L-balance or all")
      ->required();
  lemma->add_option("--input,-i", o.input, "graph6 file, - for stdin");
  lemma->add_flag("--corpus", o.corpus, "enumerated cacti up to --n-max plus seeded random cacti");
  lemma->add_option("--n-max", o.n_max, "corpus: exhaustive order bound")->capture_default_str();
  lemma->add_option("--random", o.random_count, "corpus: number of random cacti")->capture_default_str();
  lemma->add_option("--random-n-max", o.random_n_max, "corpus: largest random order")->capture_default_str();
  lemma->add_option("--seed", o.seed)->capture_default_str();
  add_workers(lemma);
  add_output(lemma);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (o.workers == 0) o.workers = std::max(1u, std::thread::hardware_concurrency());

  try {
    if (*closeness) return cmd_closeness(o);
    if (*construct) return cmd_construct(o, *construct);
    if (*enumerate) return cmd_enumerate(o);
    if (*extremal) return cmd_extremal(o);
    if (*verify) return cmd_verify(o);
    return cmd_lemma_check(o, *lemma);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
