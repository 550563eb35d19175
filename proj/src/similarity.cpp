#include "tesim/similarity.hpp"

#include <cassert>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tesim/errors.hpp"
#include "tesim/text_normalize.hpp"

namespace tesim {

const char* to_string(TeElement e) {
  switch (e) {
    case TeElement::Target: return "target";
    case TeElement::Domain: return "domain";
    case TeElement::Style: return "style";
    case TeElement::Methodology: return "methodology";
    case TeElement::Keywords: return "keywords";
    case TeElement::Date: return "date";
  }
  return "target";
}

ElementWeights ElementWeights::defaults() {
  ElementWeights w;
  w[TeElement::Target] = 0.30;
  w[TeElement::Domain] = 0.25;
  w[TeElement::Style] = 0.25;
  w[TeElement::Methodology] = 0.10;
  w[TeElement::Keywords] = 0.05;
  w[TeElement::Date] = 0.05;
  return w;
}

void validate_config(const SimilarityConfig& cfg) {
  double sum = 0.0;
  for (TeElement e : kAllElements) {
    if (cfg.weights[e] < 0.0)
      throw ConfigError(std::string("weight.") + to_string(e) + " must be >= 0");
    sum += cfg.weights[e];
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw ConfigError("element weights must sum to 1 (got " + std::to_string(sum) + ")");
  if (cfg.term_backend == nullptr) throw ConfigError("no terminology backend configured");
  if (cfg.style_ontology == nullptr) throw ConfigError("no style ontology configured");
}

double style_similarity(const OntologyGraph& style_ontology, ResearchStyle a,
                        ResearchStyle b) {
  return style_ontology.wu_palmer(style_node_id(a), style_node_id(b));
}

double date_similarity(const PubDate& a, const PubDate& b) {
  // Month arithmetic first keeps whole-year intervals exact.
  double months = 12.0 * (a.year - b.year) + (a.month - b.month);
  return 1.0 / (1.0 + std::abs(months) / 12.0);
}

SimilarityBreakdown te_similarity(const TopicEvent& a, const TopicEvent& b,
                                  const SimilarityConfig& cfg) {
  validate_config(cfg);
  for (const auto* te : {&a, &b}) {
    auto report = validate_topic_event(*te);
    if (!report.empty()) {
      std::ostringstream msg;
      msg << "invalid TE " << te->eid << ":";
      for (const auto& v : report) msg << " [" << v.field << ": " << v.message << "]";
      throw ValidationError(msg.str());
    }
  }

  const TermSimBackend& term_backend = *cfg.term_backend;
  const TermSimBackend& domain_backend =
      cfg.domain_backend ? *cfg.domain_backend : *cfg.term_backend;

  SimilarityBreakdown out;
  auto set = [&out](TeElement e, double score) {
    out.score[static_cast<size_t>(e)] = score;
  };
  set(TeElement::Target, set_similarity(a.target, b.target, term_backend));
  set(TeElement::Domain, domain_backend.score(a.domain, b.domain));
  set(TeElement::Style, style_similarity(*cfg.style_ontology, a.style, b.style));
  set(TeElement::Methodology, set_similarity(a.methodology, b.methodology, term_backend));
  set(TeElement::Keywords, set_similarity(a.keywords, b.keywords, term_backend));
  set(TeElement::Date, date_similarity(a.date, b.date));

  // Optional elements absent on either side drop out; their weight is
  // spread proportionally over what remains.
  std::array<bool, 6> used;
  used.fill(true);
  if (a.methodology.empty() || b.methodology.empty())
    used[static_cast<size_t>(TeElement::Methodology)] = false;
  if (a.keywords.empty() || b.keywords.empty())
    used[static_cast<size_t>(TeElement::Keywords)] = false;

  double used_sum = 0.0;
  for (TeElement e : kAllElements)
    if (used[static_cast<size_t>(e)]) used_sum += cfg.weights[e];
  if (used_sum <= 0.0) throw ConfigError("all remaining element weights are zero");

  double total = 0.0;
  for (TeElement e : kAllElements) {
    size_t i = static_cast<size_t>(e);
    out.effective_weight[i] = used[i] ? cfg.weights[e] / used_sum : 0.0;
    total += out.effective_weight[i] * out.score[i];
  }
  out.total = total;

  double recomputed = 0.0;
  for (size_t i = 0; i < 6; ++i) recomputed += out.effective_weight[i] * out.score[i];
  assert(std::abs(out.total - recomputed) <= 1e-9);
  return out;
}

namespace {

std::optional<TeElement> element_from_string(std::string_view s) {
  for (TeElement e : kAllElements)
    if (s == to_string(e)) return e;
  return std::nullopt;
}

}  // namespace

FileConfig parse_config(std::string_view text) {
  FileConfig cfg;
  size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line(text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos));
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = collapse_whitespace(line);
    if (line.empty()) continue;

    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected key=value, got \"" + line + "\"");
    std::string key = collapse_whitespace(line.substr(0, eq));
    std::string value = collapse_whitespace(line.substr(eq + 1));

    if (starts_with(key, "weight.")) {
      auto element = element_from_string(key.substr(7));
      if (!element) throw ConfigError("unknown weight key: " + key);
      try {
        cfg.weights[*element] = std::stod(value);
      } catch (...) {
        throw ConfigError("bad numeric value for " + key + ": \"" + value + "\"");
      }
    } else if (key == "backend") {
      if (value != "onto" && value != "lsa" && value != "vectors")
        throw ConfigError("backend must be onto|lsa|vectors, got \"" + value + "\"");
      cfg.backend = value;
    } else if (key == "domain.backend") {
      if (value != "onto" && value != "same")
        throw ConfigError("domain.backend must be onto|same, got \"" + value + "\"");
      cfg.domain_backend = value;
    } else if (key == "lsa.rank") {
      try {
        cfg.lsa_rank = std::stoi(value);
      } catch (...) {
        throw ConfigError("bad numeric value for lsa.rank: \"" + value + "\"");
      }
      if (cfg.lsa_rank < 1) throw ConfigError("lsa.rank must be >= 1");
    } else if (key == "vectors.path") {
      cfg.vectors_path = value;
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }

  double sum = 0.0;
  for (TeElement e : kAllElements) {
    if (cfg.weights[e] < 0.0)
      throw ConfigError(std::string("weight.") + to_string(e) + " must be >= 0");
    sum += cfg.weights[e];
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw ConfigError("element weights must sum to 1 (got " + std::to_string(sum) + ")");
  return cfg;
}

FileConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string default_config_text() {
  std::ostringstream out;
  ElementWeights w = ElementWeights::defaults();
  for (TeElement e : kAllElements) {
    out << "weight." << to_string(e) << "=" << w[e] << "\n";
  }
  out << "backend=onto\n";
  out << "domain.backend=onto\n";
  out << "lsa.rank=100\n";
  return out.str();
}

}  // namespace tesim
