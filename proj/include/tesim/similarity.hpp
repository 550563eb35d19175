#pragma once

#include <array>
#include <string>
#include <string_view>

#include "tesim/ontology.hpp"
#include "tesim/termsim.hpp"
#include "tesim/topic_event.hpp"

namespace tesim {

// The six scored TE elements, in the fixed reporting order.
enum class TeElement { Target, Domain, Style, Methodology, Keywords, Date };

inline constexpr std::array<TeElement, 6> kAllElements = {
    TeElement::Target,      TeElement::Domain,   TeElement::Style,
    TeElement::Methodology, TeElement::Keywords, TeElement::Date,
};

const char* to_string(TeElement e);

struct ElementWeights {
  std::array<double, 6> w{};

  double& operator[](TeElement e) { return w[static_cast<size_t>(e)]; }
  double operator[](TeElement e) const { return w[static_cast<size_t>(e)]; }

  // Target .30, Domain .25, Style .25, Methodology .10, Keywords .05, Date .05.
  static ElementWeights defaults();
};

struct SimilarityConfig {
  ElementWeights weights = ElementWeights::defaults();
  // Scores Target/Methodology/Keywords.
  const TermSimBackend* term_backend = nullptr;
  // Scores Domain; null means "use term_backend". The usual wiring keeps
  // an ontology backend here even when terms are scored by vectors,
  // because Domain is an ontology node by construction.
  const TermSimBackend* domain_backend = nullptr;
  const OntologyGraph* style_ontology = nullptr;
};

// Throws ConfigError unless all weights are >= 0 and sum to 1 within 1e-9,
// and the backends/style ontology are wired.
void validate_config(const SimilarityConfig& cfg);

struct SimilarityBreakdown {
  std::array<double, 6> score{};
  std::array<double, 6> effective_weight{};
  double total = 0.0;

  double score_of(TeElement e) const { return score[static_cast<size_t>(e)]; }
  double weight_of(TeElement e) const { return effective_weight[static_cast<size_t>(e)]; }
};

// Wu-Palmer over the style hierarchy.
double style_similarity(const OntologyGraph& style_ontology, ResearchStyle a,
                        ResearchStyle b);

// 1 / (1 + |(y1 + m1/12) - (y2 + m2/12)|); 1 iff the dates are identical.
double date_similarity(const PubDate& a, const PubDate& b);

// Weighted sum of the six element similarities. When Methodology or
// Keywords is empty in either TE its weight is redistributed
// proportionally over the remaining elements; the weights actually used
// are recorded in the breakdown.
SimilarityBreakdown te_similarity(const TopicEvent& a, const TopicEvent& b,
                                  const SimilarityConfig& cfg);

// Flat key=value config file: weight.<element>=, backend=onto|lsa|vectors,
// domain.backend=onto|same, lsa.rank=, vectors.path=. `#` comments.
struct FileConfig {
  ElementWeights weights = ElementWeights::defaults();
  std::string backend = "onto";
  std::string domain_backend = "onto";
  int lsa_rank = 100;
  std::string vectors_path;
};

FileConfig parse_config(std::string_view text);
FileConfig load_config_file(const std::string& path);
std::string default_config_text();

}  // namespace tesim
