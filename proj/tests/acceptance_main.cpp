// Acceptance suite: runs every acceptance criterion and prints one
// PASS/FAIL line each. Exit code is nonzero when any criterion fails.

#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tesim/errors.hpp"
#include "tesim/evaluation.hpp"
#include "tesim/extraction.hpp"
#include "tesim/lsa.hpp"
#include "tesim/ontology.hpp"
#include "tesim/resources.hpp"
#include "tesim/similarity.hpp"
#include "tesim/termsim.hpp"
#include "tesim/topic_event.hpp"

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using namespace tesim;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> check;  // fills a detail string
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

int run_cli(const std::string& args, const fs::path& stdout_file) {
  std::string cmd = std::string(TESIM_BIN) + " " + args + " > " + stdout_file.string() +
                    " 2> /dev/null";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

const fs::path kCorpus = fs::path(TESIM_SOURCE_DIR) / "fixtures" / "corpus";

ExtractionResources make_resources(const OntologyGraph& g) {
  ExtractionResources r;
  r.ontology = &g;
  r.patterns = parse_pattern_rules(resources::kPatternRules);
  r.style_rules = parse_style_rules(resources::kStyleRules);
  r.triggers = parse_trigger_lexicon(resources::kTriggerLexicon);
  return r;
}

// --------------------------------------------------------------------------

bool criterion1_worked_example(std::string& detail) {
  auto start = Clock::now();
  OntologyGraph g = OntologyGraph::load(resources::kClOntology);
  auto res = make_resources(g);
  ArticleText art = parse_article_file((kCorpus / "P001.txt").string());
  TopicEvent te = extract_topic_event(art, res);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();

  bool ok = te.target.size() >= 1 && te.target[0].surface == "relation extraction" &&
            ms < 1000.0;
  std::ostringstream d;
  d << "target=\"" << (te.target.empty() ? "" : te.target[0].surface) << "\" in "
    << ms << " ms";
  detail = d.str();
  return ok;
}

bool criterion2_style_classification(std::string& detail) {
  auto rules = parse_style_rules(resources::kStyleRules);
  struct Row {
    const char* title;
    ResearchStyle expected;
  };
  const Row catalog[] = {
      {"Latent Dirichlet Allocation", ResearchStyle::TheoreticalOrigination},
      {"Improving LDA Topic Models for Microblogs via Tweet Pooling and Automatic "
       "Labeling",
       ResearchStyle::MethodologyImprovement},
      {"TEXTRUNNER : Open Information Extraction On the Web",
       ResearchStyle::SystemImplementation},
      {"Biological Event Extraction using Subgraph Matching",
       ResearchStyle::IssueSolution},
      {"An Overview of Event Extraction from Text", ResearchStyle::Survey},
      {"a comparison of approaches to large-scale data analysis",
       ResearchStyle::Analysis},
      {"The Role of Research Leaders on the Evolution of Scientific Communities",
       ResearchStyle::PhenomenonDiscovery},
  };
  int correct = 0;
  for (const Row& row : catalog)
    if (classify_style(row.title, rules) == row.expected) ++correct;

  bool three_exact =
      classify_style(catalog[2].title, rules) == ResearchStyle::SystemImplementation &&
      classify_style(catalog[4].title, rules) == ResearchStyle::Survey &&
      classify_style(catalog[1].title, rules) == ResearchStyle::MethodologyImprovement;

  detail = "catalog " + std::to_string(correct) + "/7 correct";
  return three_exact && correct >= 6;
}

bool criterion3_wu_palmer_oracle(std::string& detail) {
  OntologyGraph g = OntologyGraph::load(oracle::fixture_ontology_text());
  oracle::Tree tree = oracle::fixture_tree();
  int pairs = 0;
  for (const auto& a : g.node_ids())
    for (const auto& b : g.node_ids()) {
      if (g.wu_palmer(a, b) != tree.wu_palmer(a, b)) {
        detail = "mismatch at (" + a + "," + b + ")";
        return false;
      }
      ++pairs;
    }

  std::mt19937 rng(2024);
  int trees = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    std::uniform_int_distribution<int> size(2, 100);
    int n = size(rng);
    OntologyGraph rg = OntologyGraph::load(oracle::random_tree_text(n, rng));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < n; ++i) {
      std::string node = "n" + std::to_string(i);
      if (rg.wu_palmer(node, node) != 1.0) {
        detail = "identity violated on random tree " + std::to_string(iter);
        return false;
      }
    }
    for (int s = 0; s < 30; ++s) {
      std::string a = "n" + std::to_string(pick(rng));
      std::string b = "n" + std::to_string(pick(rng));
      double ab = rg.wu_palmer(a, b);
      if (ab != rg.wu_palmer(b, a) || !(ab > 0.0) || !(ab <= 1.0)) {
        detail = "symmetry/range violated on random tree " + std::to_string(iter);
        return false;
      }
    }
    ++trees;
  }
  detail = std::to_string(pairs) + " fixture pairs exact, " + std::to_string(trees) +
           " random trees clean";
  return pairs == 64;
}

bool criterion4_formula_fixed_points(std::string& detail) {
  bool dates_ok = date_similarity(PubDate{2008, 1}, PubDate{2009, 1}) == 0.5 &&
                  date_similarity(PubDate{2005, 6}, PubDate{2009, 6}) == 0.2;

  OntologyGraph g = OntologyGraph::load(oracle::fixture_ontology_text());
  OntologyGraph styles = load_style_ontology(resources::kStyleOntology);
  OntologyBackend backend(g);
  SimilarityConfig cfg;
  cfg.term_backend = &backend;
  cfg.domain_backend = &backend;
  cfg.style_ontology = &styles;

  TopicEvent a;
  a.eid = "te-A";
  a.did = "A";
  a.target.emplace_back("relation extraction");
  a.methodology.emplace_back("machine learning");
  a.domain = Terminology("information extraction", "InformationExtraction");
  a.style = ResearchStyle::IssueSolution;
  a.keywords.emplace_back("event extraction");
  a.date = PubDate{2008, 6};
  TopicEvent b = a;
  b.eid = "te-B";
  b.did = "B";
  b.date = PubDate{2009, 6};

  double total = te_similarity(a, b, cfg).total;
  bool te_ok = std::abs(total - 0.975) <= 1e-9;
  std::ostringstream d;
  d << "dates exact, one-year-apart total=" << total;
  detail = d.str();
  return dates_ok && te_ok;
}

bool criterion5_evaluation_math(std::string& detail) {
  std::vector<double> x{1, 2, 3, 4}, y{1, 3, 2, 4};
  if (std::abs(pearson(x, y) - 0.8) > 1e-12) {
    detail = "pearson fixed point off";
    return false;
  }

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> count(0, 60);
  for (int iter = 0; iter < 200; ++iter) {
    ConfusionCounts c{count(rng), count(rng), count(rng), count(rng)};
    if (c.total() == 0) continue;
    double direct_acc =
        static_cast<double>(c.tp + c.tn) / (c.tp + c.tn + c.fp + c.fn);
    if (std::abs(accuracy(c) - direct_acc) > 1e-12) {
      detail = "accuracy mismatch";
      return false;
    }
    if (c.tp + c.fp > 0 && c.tp + c.fn > 0) {
      double p = static_cast<double>(c.tp) / (c.tp + c.fp);
      double r = static_cast<double>(c.tp) / (c.tp + c.fn);
      double f1 = (p + r) == 0.0 ? 0.0 : 2 * p * r / (p + r);
      if (std::abs(f_score(c) - f1) > 1e-12) {
        detail = "f1 mismatch";
        return false;
      }
    }
  }

  // Threshold sweep vs an independent per-threshold recount.
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  std::vector<double> scores;
  std::vector<int> labels;
  for (int i = 0; i < 100; ++i) {
    scores.push_back(dist(rng));
    labels.push_back(dist(rng) > 0.45 ? 1 : 0);
  }
  auto grid = default_thresholds();
  SweepResult sweep = threshold_sweep(scores, labels, grid);
  for (size_t i = 0; i < grid.size(); ++i) {
    long tp = 0, tn = 0, fp = 0, fn = 0;
    for (size_t j = 0; j < scores.size(); ++j) {
      bool pred = scores[j] > grid[i];
      if (pred && labels[j]) ++tp;
      else if (pred) ++fp;
      else if (labels[j]) ++fn;
      else ++tn;
    }
    double acc = static_cast<double>(tp + tn) / 100.0;
    if (std::abs(sweep.rows[i].accuracy - acc) > 1e-12) {
      detail = "sweep accuracy row mismatch";
      return false;
    }
    bool calculable = tp + fp > 0 && tp + fn > 0;
    if (calculable != sweep.rows[i].f1.has_value()) {
      detail = "sweep f1 calculability mismatch";
      return false;
    }
    if (calculable) {
      double p = static_cast<double>(tp) / (tp + fp);
      double r = static_cast<double>(tp) / (tp + fn);
      double f1 = (p + r) == 0.0 ? 0.0 : 2 * p * r / (p + r);
      if (std::abs(*sweep.rows[i].f1 - f1) > 1e-12) {
        detail = "sweep f1 row mismatch";
        return false;
      }
    }
  }
  detail = "pearson, 200 confusion tables, 19-row sweep on 100 pairs";
  return true;
}

bool criterion6_svd_oracle(std::string& detail) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 5.0);
  double worst = 0.0;
  for (int iter = 0; iter < 20; ++iter) {
    Eigen::MatrixXd m(10, 8);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 8; ++j) m(i, j) = std::floor(dist(rng));

    TruncatedSvd svd = truncated_svd(m, 3);
    Eigen::MatrixXd recon = svd.u * svd.singular_values.asDiagonal() * svd.v.transpose();
    double err = (recon - oracle::rank_k_reconstruction(m, 3)).norm();
    worst = std::max(worst, err);
    if (err > 1e-6) {
      detail = "rank-3 reconstruction differs from the oracle by " + std::to_string(err);
      return false;
    }

    double prev = std::numeric_limits<double>::max();
    for (int k = 1; k <= 8; ++k) {
      TruncatedSvd t = truncated_svd(m, k);
      double rek = (m - t.u * t.singular_values.asDiagonal() * t.v.transpose()).norm();
      if (rek > prev + 1e-9) {
        detail = "reconstruction error increased at k=" + std::to_string(k);
        return false;
      }
      prev = rek;
    }
  }
  std::ostringstream d;
  d << "20 matrices, worst Frobenius gap " << worst;
  detail = d.str();
  return true;
}

bool criterion7_end_to_end_determinism(std::string& detail) {
  fs::path base = fs::temp_directory_path() / "tesim_acceptance";
  std::error_code ec;
  fs::remove_all(base, ec);
  fs::create_directories(base);

  auto te_records = [](const fs::path& dir) {
    std::map<std::string, std::string> out;
    for (const auto& entry : fs::directory_iterator(dir)) {
      auto name = entry.path().filename().string();
      if (name.size() > 8 && name.substr(name.size() - 8) == ".te.json")
        out[name] = slurp(entry.path());
    }
    return out;
  };

  for (const auto& [name, workers] :
       std::vector<std::pair<std::string, int>>{{"a", 1}, {"b", 1}, {"c", 4}}) {
    int code = run_cli("extract --input " + kCorpus.string() + " --out " +
                           (base / name).string() + " --workers " +
                           std::to_string(workers),
                       base / (name + ".out"));
    if (code != 0) {
      detail = "extract exited with " + std::to_string(code);
      return false;
    }
  }
  auto run_a = te_records(base / "a");
  if (run_a.size() != 6) {
    detail = "expected 6 records, got " + std::to_string(run_a.size());
    return false;
  }
  if (run_a != te_records(base / "b") || run_a != te_records(base / "c")) {
    detail = "TE records differ across runs/workers";
    return false;
  }

  for (const char* name : {"sim1", "sim2"}) {
    int code = run_cli("sim " + (base / "a" / "P001.te.json").string() + " " +
                           (base / "a" / "P002.te.json").string(),
                       base / name);
    if (code != 0) {
      detail = "sim exited with " + std::to_string(code);
      return false;
    }
  }
  if (slurp(base / "sim1") != slurp(base / "sim2")) {
    detail = "sim output differs across runs";
    return false;
  }

  for (const auto& [name, workers] :
       std::vector<std::pair<std::string, int>>{{"r1.csv", 1}, {"r2.csv", 1},
                                                {"r3.csv", 4}}) {
    int code = run_cli("eval --te-dir " + (base / "a").string() + " --pairs " +
                           (kCorpus / "pairs.tsv").string() + " --out " +
                           (base / name).string() + " --workers " +
                           std::to_string(workers),
                       base / (name + ".out"));
    if (code != 0) {
      detail = "eval exited with " + std::to_string(code);
      return false;
    }
  }
  if (slurp(base / "r1.csv") != slurp(base / "r2.csv") ||
      slurp(base / "r1.csv") != slurp(base / "r3.csv")) {
    detail = "eval CSV differs across runs/workers";
    return false;
  }

  fs::remove_all(base, ec);
  detail = "extract/sim/eval byte-identical across 2 runs and workers 1 vs 4";
  return true;
}

bool criterion8_performance(std::string& detail) {
  std::mt19937 rng(123);
  OntologyGraph g = OntologyGraph::load(oracle::random_tree_text(1000, rng));
  OntologyGraph styles = load_style_ontology(resources::kStyleOntology);
  OntologyBackend backend(g);
  SimilarityConfig cfg;
  cfg.term_backend = &backend;
  cfg.domain_backend = &backend;
  cfg.style_ontology = &styles;

  std::uniform_int_distribution<int> node(0, 999);
  std::uniform_int_distribution<int> style(0, 6);
  std::uniform_int_distribution<int> year(1990, 2020), month(1, 12);
  std::uniform_int_distribution<int> variant(0, 9);
  auto random_term = [&]() {
    std::string label = "label n" + std::to_string(node(rng));
    int v = variant(rng);
    if (v < 3) label += "s";                    // near-miss: scan path
    else if (v == 3) label = "unlinkable " + std::to_string(node(rng));
    return Terminology(label);
  };

  std::vector<TopicEvent> tes;
  tes.reserve(2000);
  for (int i = 0; i < 2000; ++i) {
    TopicEvent te;
    te.did = "S" + std::to_string(i);
    te.eid = "te-" + te.did;
    te.target.push_back(random_term());
    te.methodology.push_back(random_term());
    std::string domain_node = "n" + std::to_string(node(rng));
    te.domain = Terminology(g.node(domain_node).label, domain_node);
    te.style = kAllStyles[static_cast<size_t>(style(rng))];
    for (int k = 0; k < 3; ++k) te.keywords.push_back(random_term());
    te.date = PubDate{year(rng), month(rng)};
    tes.push_back(std::move(te));
  }

  auto start = Clock::now();
  double checksum = 0.0;
  for (int i = 0; i < 1000; ++i)
    checksum += te_similarity(tes[2 * i], tes[2 * i + 1], cfg).total;
  double total_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  double mean_ms = total_ms / 1000.0;

  struct rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  long peak_kb = usage.ru_maxrss;

  std::ostringstream d;
  d << "mean " << mean_ms << " ms/pair, peak " << peak_kb / 1024 << " MB (checksum "
    << checksum << ")";
  detail = d.str();
  return mean_ms <= 10.0 && peak_kb <= 200 * 1024;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "worked-example target extraction", criterion1_worked_example},
      {2, "style classification of the catalog titles", criterion2_style_classification},
      {3, "Wu-Palmer equals the brute-force oracle", criterion3_wu_palmer_oracle},
      {4, "date and weighted-sum fixed points", criterion4_formula_fixed_points},
      {5, "evaluation math vs direct formulas", criterion5_evaluation_math},
      {6, "truncated SVD vs the Jacobi oracle", criterion6_svd_oracle},
      {7, "end-to-end byte determinism", criterion7_end_to_end_determinism},
      {8, "per-pair latency and peak memory", criterion8_performance},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name
              << " (" << detail << ")\n";
  }
  if (failures > 0) std::cout << failures << " criterion(s) failed\n";
  return failures == 0 ? 0 : 1;
}
