// tesim: topic-event extraction and document similarity toolkit.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tesim/errors.hpp"
#include "tesim/evaluation.hpp"
#include "tesim/extraction.hpp"
#include "tesim/lsa.hpp"
#include "tesim/ontology.hpp"
#include "tesim/parallel.hpp"
#include "tesim/resources.hpp"
#include "tesim/similarity.hpp"
#include "tesim/termsim.hpp"
#include "tesim/text_normalize.hpp"
#include "tesim/topic_event.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // data-level failure
constexpr int kExitUsage = 2;    // invalid invocation or config

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

long peak_memory_kb() {
  struct rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw tesim::ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tesim::Error("cannot write file: " + path.string());
  out << content;
}

// Run log: resolved resources, per-stage wall clock, peak memory. Timings
// vary run to run, so this never lands in the data outputs.
class RunManifest {
 public:
  explicit RunManifest(std::string command) { set("command", std::move(command)); }

  void set(const std::string& key, std::string value) {
    entries_.emplace_back(key, std::move(value));
  }
  void set(const std::string& key, long value) { set(key, std::to_string(value)); }
  void set_ms(const std::string& key, double ms) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", ms);
    set(key, std::string(buf));
  }

  void write(const fs::path& path) {
    set("peak_memory_kb", peak_memory_kb());
    std::ostringstream out;
    for (const auto& [k, v] : entries_) out << k << "=" << v << "\n";
    write_file(path, out.str());
  }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

struct ResourcePaths {
  std::string ontology;
  std::string style_ontology;
  std::string patterns;
  std::string style_rules;
  std::string triggers;
};

struct Resources {
  tesim::OntologyGraph ontology;
  tesim::OntologyGraph style_ontology;
  std::vector<tesim::PatternRule> patterns;
  std::vector<tesim::StyleRule> style_rules;
  std::vector<std::string> triggers;
};

std::string source_of(const std::string& path) {
  return path.empty() ? "<embedded>" : path;
}

Resources load_resources(const ResourcePaths& paths, RunManifest* manifest) {
  Resources r;
  r.ontology = paths.ontology.empty()
                   ? tesim::OntologyGraph::load(tesim::resources::kClOntology)
                   : tesim::OntologyGraph::load_file(paths.ontology);
  r.style_ontology =
      tesim::load_style_ontology(paths.style_ontology.empty()
                                     ? tesim::resources::kStyleOntology
                                     : read_file(paths.style_ontology));
  r.patterns = tesim::parse_pattern_rules(
      paths.patterns.empty() ? tesim::resources::kPatternRules
                             : read_file(paths.patterns));
  r.style_rules = tesim::parse_style_rules(
      paths.style_rules.empty() ? tesim::resources::kStyleRules
                                : read_file(paths.style_rules));
  r.triggers = tesim::parse_trigger_lexicon(
      paths.triggers.empty() ? tesim::resources::kTriggerLexicon
                             : read_file(paths.triggers));
  if (manifest) {
    manifest->set("ontology", source_of(paths.ontology));
    manifest->set("style_ontology", source_of(paths.style_ontology));
    manifest->set("patterns", source_of(paths.patterns));
    manifest->set("style_rules", source_of(paths.style_rules));
    manifest->set("triggers", source_of(paths.triggers));
  }
  return r;
}

void add_resource_flags(CLI::App* cmd, ResourcePaths* paths) {
  cmd->add_option("--ontology", paths->ontology, "Domain ontology file");
  cmd->add_option("--style-ontology", paths->style_ontology, "Style ontology file");
  cmd->add_option("--patterns", paths->patterns, "Pattern rule file");
  cmd->add_option("--style-rules", paths->style_rules, "Style rule file");
  cmd->add_option("--triggers", paths->triggers, "Trigger lexicon file");
}

std::string sanitize_filename(const std::string& did) {
  std::string out;
  for (char c : did)
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
                          c == '_' || c == '.'
                      ? c
                      : '_');
  return out;
}

// ---------------------------------------------------------------------------
// Similarity wiring shared by sim and eval

struct BackendOptions {
  std::string config_path;
  std::string backend_flag;  // overrides config when set
  std::string vectors_path;  // overrides config when set
};

struct Scorer {
  tesim::FileConfig file_config;
  std::unique_ptr<tesim::TermSimBackend> term_backend;
  std::unique_ptr<tesim::OntologyBackend> onto_backend;
  tesim::SimilarityConfig config;
  std::string config_source;
};

Scorer make_scorer(const BackendOptions& opts, const Resources& resources) {
  Scorer s;
  if (opts.config_path.empty()) {
    s.file_config = tesim::parse_config(tesim::default_config_text());
    s.config_source = "defaults";
  } else {
    s.file_config = tesim::load_config_file(opts.config_path);
    s.config_source = opts.config_path;
  }
  if (!opts.backend_flag.empty()) s.file_config.backend = opts.backend_flag;
  if (!opts.vectors_path.empty()) s.file_config.vectors_path = opts.vectors_path;

  s.onto_backend = std::make_unique<tesim::OntologyBackend>(resources.ontology);
  if (s.file_config.backend == "onto") {
    s.term_backend = std::make_unique<tesim::OntologyBackend>(resources.ontology);
  } else {
    if (s.file_config.vectors_path.empty())
      throw tesim::ConfigError("backend \"" + s.file_config.backend +
                               "\" needs a vector file (--vectors or vectors.path)");
    s.term_backend = std::make_unique<tesim::VectorBackend>(
        tesim::load_vector_file(s.file_config.vectors_path), s.file_config.backend);
  }

  s.config.weights = s.file_config.weights;
  s.config.term_backend = s.term_backend.get();
  s.config.domain_backend =
      s.file_config.domain_backend == "onto" ? s.onto_backend.get() : nullptr;
  s.config.style_ontology = &resources.style_ontology;
  tesim::validate_config(s.config);
  return s;
}

void add_backend_flags(CLI::App* cmd, BackendOptions* opts) {
  cmd->add_option("--config", opts->config_path, "Similarity config file (key=value)");
  cmd->add_option("--backend", opts->backend_flag, "Terminology backend: onto|lsa|vectors")
      ->check(CLI::IsMember({"onto", "lsa", "vectors"}));
  cmd->add_option("--vectors", opts->vectors_path, "Term vector file for lsa|vectors");
}

// ---------------------------------------------------------------------------
// extract

struct ExtractArgs {
  std::string input;
  std::string out;
  ResourcePaths resources;
  int workers = 1;
};

int cmd_extract(const ExtractArgs& args) {
  auto t_start = Clock::now();
  RunManifest manifest("extract");
  manifest.set("input", args.input);
  manifest.set("output", args.out);
  manifest.set("workers", args.workers);

  Resources resources = load_resources(args.resources, &manifest);
  auto t_loaded = Clock::now();
  manifest.set_ms("time.load_resources_ms", ms_since(t_start));

  std::vector<fs::path> inputs;
  fs::path input_path(args.input);
  if (fs::is_directory(input_path)) {
    for (const auto& entry : fs::directory_iterator(input_path))
      if (entry.is_regular_file() && entry.path().extension() == ".txt")
        inputs.push_back(entry.path());
    std::sort(inputs.begin(), inputs.end());
  } else if (fs::is_regular_file(input_path)) {
    inputs.push_back(input_path);
  } else {
    std::cerr << "error: input not found: " << args.input << "\n";
    return kExitUsage;
  }
  if (inputs.empty()) {
    std::cerr << "error: no .txt articles under " << args.input << "\n";
    return kExitUsage;
  }

  struct Result {
    std::string key;  // did when known, else filename
    std::optional<tesim::TopicEvent> te;
    std::string error;
  };
  std::vector<Result> results(inputs.size());
  tesim::parallel_for(inputs.size(), args.workers, [&](size_t i) {
    Result& r = results[i];
    r.key = inputs[i].filename().string();
    try {
      tesim::ArticleText article = tesim::parse_article_file(inputs[i].string());
      r.key = article.did;
      tesim::ExtractionResources er;
      er.ontology = &resources.ontology;
      er.patterns = resources.patterns;
      er.style_rules = resources.style_rules;
      er.triggers = resources.triggers;
      r.te = tesim::extract_topic_event(article, er);
    } catch (const tesim::Error& e) {
      r.error = e.what();
    }
  });
  std::sort(results.begin(), results.end(),
            [](const Result& a, const Result& b) { return a.key < b.key; });

  bool jsonl = tesim::ends_with(args.out, ".jsonl");
  fs::path out_dir;
  std::ostringstream batch;
  if (jsonl) {
    out_dir = fs::path(args.out).parent_path();
    if (!out_dir.empty()) fs::create_directories(out_dir);
  } else {
    out_dir = args.out;
    fs::create_directories(out_dir);
  }

  size_t ok = 0;
  std::ostringstream error_log;
  for (const Result& r : results) {
    if (r.te) {
      ++ok;
      if (jsonl)
        batch << tesim::serialize_topic_event_line(*r.te) << "\n";
      else
        write_file(out_dir / (sanitize_filename(r.te->did) + ".te.json"),
                   tesim::serialize_topic_event(*r.te));
    } else {
      error_log << r.key << "\t" << r.error << "\n";
      std::cerr << "extract error: " << r.key << ": " << r.error << "\n";
    }
  }
  if (jsonl) write_file(args.out, batch.str());

  fs::path error_path = jsonl ? fs::path(args.out + ".errors.txt")
                              : out_dir / "errors.txt";
  if (ok < results.size()) write_file(error_path, error_log.str());

  manifest.set("articles_total", static_cast<long>(results.size()));
  manifest.set("articles_ok", static_cast<long>(ok));
  manifest.set("articles_failed", static_cast<long>(results.size() - ok));
  manifest.set_ms("time.extract_ms", ms_since(t_loaded));
  manifest.set_ms("time.total_ms", ms_since(t_start));
  manifest.write(jsonl ? fs::path(args.out + ".manifest") : out_dir / "run_manifest.txt");

  std::cout << "extracted " << ok << "/" << results.size() << " topic events\n";
  return ok == 0 ? kExitFailure : kExitOk;
}

// ---------------------------------------------------------------------------
// link

int cmd_link(const std::string& term, const ResourcePaths& paths) {
  Resources resources = load_resources(paths, nullptr);
  auto link = resources.ontology.link(tesim::Terminology(term));
  const auto& node = resources.ontology.node(link.node_id);
  char buf[64];
  std::cout << "node=" << node.id << "\n";
  std::cout << "label=" << node.label << "\n";
  std::cout << "depth=" << resources.ontology.depth(node.id) << "\n";
  std::cout << "distance=" << link.distance << "\n";
  std::snprintf(buf, sizeof(buf), "%.4f", link.normalized);
  std::cout << "normalized=" << buf << "\n";
  std::cout << "confident=" << (link.confident ? "true" : "false") << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// sim

int cmd_sim(const std::string& te_a_path, const std::string& te_b_path,
            const BackendOptions& backend_opts, const ResourcePaths& paths) {
  Resources resources = load_resources(paths, nullptr);
  Scorer scorer = make_scorer(backend_opts, resources);

  tesim::TopicEvent a = tesim::parse_topic_event(read_file(te_a_path));
  tesim::TopicEvent b = tesim::parse_topic_event(read_file(te_b_path));
  tesim::SimilarityBreakdown breakdown = tesim::te_similarity(a, b, scorer.config);

  std::cout << "# command=sim\n";
  std::cout << "# config=" << scorer.config_source << "\n";
  std::cout << "# backend=" << scorer.term_backend->name() << "\n";
  char buf[64];
  for (tesim::TeElement e : tesim::kAllElements) {
    std::snprintf(buf, sizeof(buf), "s.%s=%.4f", tesim::to_string(e), breakdown.score_of(e));
    std::cout << buf << "\n";
    std::snprintf(buf, sizeof(buf), "w.%s=%.4f", tesim::to_string(e),
                  breakdown.weight_of(e));
    std::cout << buf << "\n";
  }
  std::snprintf(buf, sizeof(buf), "total=%.4f", breakdown.total);
  std::cout << buf << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
  std::string te_dir;
  std::string pairs;
  std::string out_csv;
  BackendOptions backend;
  ResourcePaths resources;
  int workers = 1;
  std::string thresholds;  // "start:stop:step"
};

std::vector<double> parse_threshold_grid(const std::string& spec) {
  if (spec.empty()) return tesim::default_thresholds();
  double start = 0, stop = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &start, &stop, &step) != 3 || step <= 0 ||
      stop < start)
    throw tesim::ConfigError("bad --thresholds, expected start:stop:step");
  std::vector<double> out;
  for (int i = 0;; ++i) {
    double t = start + i * step;
    if (t > stop + 1e-12) break;
    out.push_back(t);
  }
  return out;
}

int cmd_eval(const EvalArgs& args) {
  auto t_start = Clock::now();
  RunManifest manifest("eval");
  manifest.set("te_dir", args.te_dir);
  manifest.set("pairs", args.pairs);
  manifest.set("output", args.out_csv);
  manifest.set("workers", args.workers);

  Resources resources = load_resources(args.resources, &manifest);
  Scorer scorer = make_scorer(args.backend, resources);
  manifest.set("config", scorer.config_source);
  manifest.set("backend", scorer.term_backend->name());

  std::map<std::string, tesim::TopicEvent> records;
  for (const auto& entry : fs::directory_iterator(args.te_dir)) {
    if (!entry.is_regular_file()) continue;
    auto name = entry.path().filename().string();
    if (!tesim::ends_with(name, ".te.json")) continue;
    tesim::TopicEvent te = tesim::parse_topic_event(read_file(entry.path().string()));
    if (!records.emplace(te.did, std::move(te)).second)
      std::cerr << "warning: duplicate TE record for did " << name << ", first kept\n";
  }

  tesim::PairLoadResult loaded = tesim::load_pairs_file(args.pairs);
  for (const auto& w : loaded.warnings) std::cerr << "warning: pairs: " << w << "\n";
  if (loaded.pairs.empty()) {
    std::cerr << "error: no pairs in " << args.pairs << "\n";
    return kExitUsage;
  }

  std::vector<const tesim::AnnotatedPair*> usable;
  std::vector<std::string> skipped;
  for (const auto& p : loaded.pairs) {
    if (records.count(p.did_a) && records.count(p.did_b)) {
      usable.push_back(&p);
    } else {
      skipped.push_back(p.did_a + "/" + p.did_b);
    }
  }
  for (const auto& s : skipped) std::cerr << "skipped pair (missing TE): " << s << "\n";
  std::cout << "pairs_total=" << loaded.pairs.size() << "\n";
  std::cout << "pairs_skipped=" << skipped.size() << "\n";
  if (skipped.size() * 2 > loaded.pairs.size()) {
    std::cerr << "error: more than half of the pairs lack TE records ("
              << skipped.size() << "/" << loaded.pairs.size() << ")\n";
    return kExitFailure;
  }

  std::vector<double> scores(usable.size());
  std::vector<int> labels2(usable.size());
  std::vector<double> labels2_real(usable.size()), labels5_real(usable.size());
  auto t_score = Clock::now();
  tesim::parallel_for(usable.size(), args.workers, [&](size_t i) {
    const auto& p = *usable[i];
    scores[i] =
        tesim::te_similarity(records.at(p.did_a), records.at(p.did_b), scorer.config).total;
    labels2[i] = p.label2;
    labels2_real[i] = p.label2;
    labels5_real[i] = p.label5;
  });
  double scoring_ms = ms_since(t_score);

  std::optional<double> pearson5, pearson2;
  try {
    pearson5 = tesim::pearson(scores, labels5_real);
  } catch (const tesim::EvalError& e) {
    std::cerr << "pearson_5level undefined: " << e.what() << "\n";
  }
  try {
    pearson2 = tesim::pearson(scores, labels2_real);
  } catch (const tesim::EvalError& e) {
    std::cerr << "pearson_2level undefined: " << e.what() << "\n";
  }

  std::vector<double> grid = parse_threshold_grid(args.thresholds);
  tesim::SweepResult sweep = tesim::threshold_sweep(scores, labels2, grid);

  std::ostringstream csv;
  tesim::write_report(csv, sweep, pearson5, pearson2);
  fs::path out_path(args.out_csv);
  if (!out_path.parent_path().empty()) fs::create_directories(out_path.parent_path());
  write_file(out_path, csv.str());

  // Echo the summary block (everything after the per-threshold rows).
  std::istringstream echo(csv.str());
  std::string line;
  while (std::getline(echo, line))
    if (line.find('=') != std::string::npos) std::cout << line << "\n";

  manifest.set("pairs_total", static_cast<long>(loaded.pairs.size()));
  manifest.set("pairs_scored", static_cast<long>(usable.size()));
  manifest.set("pairs_skipped", static_cast<long>(skipped.size()));
  manifest.set_ms("time.scoring_ms", scoring_ms);
  manifest.set_ms("time.mean_pair_ms",
                  usable.empty() ? 0.0 : scoring_ms / static_cast<double>(usable.size()));
  manifest.set_ms("time.total_ms", ms_since(t_start));
  manifest.write(fs::path(args.out_csv + ".manifest"));
  return kExitOk;
}

// ---------------------------------------------------------------------------
// lsa-build

struct LsaBuildArgs {
  std::string input;
  std::string out;
  int rank = 100;
  bool raw_counts = false;
};

int cmd_lsa_build(const LsaBuildArgs& args) {
  auto t_start = Clock::now();
  RunManifest manifest("lsa-build");
  manifest.set("input", args.input);
  manifest.set("output", args.out);

  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(args.input))
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      inputs.push_back(entry.path());
  std::sort(inputs.begin(), inputs.end());
  if (inputs.empty()) {
    std::cerr << "error: no .txt articles under " << args.input << "\n";
    return kExitUsage;
  }

  std::vector<std::vector<std::string>> docs;
  std::vector<std::string> doc_ids;
  for (const auto& path : inputs) {
    tesim::ArticleText article = tesim::parse_article_file(path.string());
    std::string text = article.title;
    for (const auto& [heading, body] : article.sections) {
      text.push_back('\n');
      text += body;
    }
    docs.push_back(tesim::tokenize_words(text));
    doc_ids.push_back(article.did);
  }

  size_t vocab = 0;
  {
    std::set<std::string> v;
    for (const auto& d : docs) v.insert(d.begin(), d.end());
    vocab = v.size();
  }
  int max_rank = static_cast<int>(std::min(vocab, docs.size()));
  int rank = args.rank;
  if (rank > max_rank) {
    std::cerr << "note: rank " << rank << " clipped to " << max_rank
              << " (min of vocabulary size and document count)\n";
    rank = max_rank;
  }

  tesim::LsaSpace space = tesim::build_lsa_space(
      docs, rank,
      args.raw_counts ? tesim::MatrixWeighting::RawCounts : tesim::MatrixWeighting::TfIdf,
      doc_ids);

  std::ostringstream out;
  tesim::save_vector_space(tesim::to_vector_space(space), out);
  fs::path out_path(args.out);
  if (!out_path.parent_path().empty()) fs::create_directories(out_path.parent_path());
  write_file(out_path, out.str());

  manifest.set("documents", static_cast<long>(docs.size()));
  manifest.set("vocabulary", static_cast<long>(vocab));
  manifest.set("rank", rank);
  manifest.set("weighting", args.raw_counts ? "raw" : "tfidf");
  manifest.set_ms("time.total_ms", ms_since(t_start));
  manifest.write(fs::path(args.out + ".manifest"));

  std::cout << "built " << docs.size() << "-document space, vocabulary " << vocab
            << ", rank " << rank << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// ontology-check

int cmd_ontology_check(const std::string& path, bool style) {
  std::string text = path.empty()
                         ? std::string(style ? tesim::resources::kStyleOntology
                                             : tesim::resources::kClOntology)
                         : read_file(path);
  tesim::OntologyGraph g =
      style ? tesim::load_style_ontology(text) : tesim::OntologyGraph::load(text);
  std::cout << "nodes=" << g.size() << " max_depth=" << g.max_depth() << "\n";
  std::cout << "root=" << g.node(g.root()).label << "\n";
  std::cout << "depth_histogram:";
  for (int d = 1; d <= g.max_depth(); ++d)
    std::cout << " " << d << ":" << g.nodes_at_depth(d).size();
  std::cout << "\n";
  std::cout << "ok\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topic-event extraction and document similarity toolkit"};
  app.require_subcommand(1);

  ExtractArgs extract_args;
  auto* extract = app.add_subcommand("extract", "Extract topic events from articles");
  extract->add_option("--input", extract_args.input, "Article file or directory")
      ->required();
  extract->add_option("--out", extract_args.out,
                      "Output directory (or .jsonl batch file)")
      ->required();
  extract->add_option("--workers", extract_args.workers, "Worker threads");
  add_resource_flags(extract, &extract_args.resources);

  std::string link_term;
  ResourcePaths link_paths;
  auto* link = app.add_subcommand("link", "Link a terminology to its ontology node");
  link->add_option("term", link_term, "Terminology surface form")->required();
  add_resource_flags(link, &link_paths);

  std::string sim_a, sim_b;
  BackendOptions sim_backend;
  ResourcePaths sim_paths;
  auto* sim = app.add_subcommand("sim", "Score two topic event records");
  sim->add_option("te_a", sim_a, "First TE record")->required();
  sim->add_option("te_b", sim_b, "Second TE record")->required();
  add_backend_flags(sim, &sim_backend);
  add_resource_flags(sim, &sim_paths);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate against an annotated pair corpus");
  eval->add_option("--te-dir", eval_args.te_dir, "Directory of .te.json records")
      ->required();
  eval->add_option("--pairs", eval_args.pairs, "Annotated pair file")->required();
  eval->add_option("--out", eval_args.out_csv, "Report CSV path")->required();
  eval->add_option("--workers", eval_args.workers, "Worker threads");
  eval->add_option("--thresholds", eval_args.thresholds,
                   "Sweep grid start:stop:step (default 0.05:0.95:0.05)");
  add_backend_flags(eval, &eval_args.backend);
  add_resource_flags(eval, &eval_args.resources);

  LsaBuildArgs lsa_args;
  auto* lsa = app.add_subcommand("lsa-build", "Build a term vector file from articles");
  lsa->add_option("--input", lsa_args.input, "Article directory")->required();
  lsa->add_option("--out", lsa_args.out, "Vector file path")->required();
  lsa->add_option("--lsa-rank", lsa_args.rank, "Truncation rank (default 100)");
  lsa->add_flag("--raw-counts", lsa_args.raw_counts,
                "Skip tf-idf weighting of the term-document matrix");

  std::string check_path;
  bool check_style = false;
  auto* check = app.add_subcommand("ontology-check", "Validate and describe an ontology");
  check->add_option("path", check_path, "Ontology file (embedded default when omitted)");
  check->add_flag("--style", check_style, "Validate as the style ontology");

  auto* config = app.add_subcommand("config", "Print the default similarity config");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*extract) return cmd_extract(extract_args);
    if (*link) return cmd_link(link_term, link_paths);
    if (*sim) return cmd_sim(sim_a, sim_b, sim_backend, sim_paths);
    if (*eval) return cmd_eval(eval_args);
    if (*lsa) return cmd_lsa_build(lsa_args);
    if (*check) return cmd_ontology_check(check_path, check_style);
    if (*config) {
      std::cout << tesim::resources::kDefaultConfig;
      return kExitOk;
    }
  } catch (const tesim::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const tesim::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
