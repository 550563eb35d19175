#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tesim/ontology.hpp"
#include "tesim/topic_event.hpp"

namespace tesim {

struct ArticleText {
  std::string did;
  std::string title;
  std::vector<std::pair<std::string, std::string>> sections;  // heading, body
  PubDate date;
  std::optional<std::vector<std::string>> declared_keywords;
};

// Front-matter block (`did:`, `title:`, `date: YYYY-MM`, optional
// `keywords:` comma-separated) followed by sections introduced by lines
// starting `== <heading>`.
ArticleText parse_article(std::string_view text);
ArticleText parse_article_file(const std::string& path);

enum class PosTag { Noun, Verb, Adj, Det, Prep, Punct, Other };

struct Token {
  std::string surface;
  std::string lower;
  PosTag tag = PosTag::Other;
};

struct NpSpan {
  int begin = 0;  // token index, inclusive
  int end = 0;    // exclusive
};

struct TaggedSentence {
  std::string text;
  std::vector<Token> tokens;
  std::vector<NpSpan> np_spans;
};

enum class TeElementKind { Target, Methodology };
enum class PatternPosition { Pre, Post };

struct PatternRule {
  TeElementKind element = TeElementKind::Target;
  PatternPosition position = PatternPosition::Pre;
  std::vector<std::string> pattern;  // lowercase tokens
  int priority = 0;                  // lower wins
};

// Title pattern; `@colon-structural` is the rule that fires on a title of
// the form `NAME : rest` / `NAME - rest` with a single capitalized leading
// token.
struct StyleRule {
  ResearchStyle style = ResearchStyle::IssueSolution;
  std::string pattern;
  int priority = 0;
};

// `element <TAB> pre|post <TAB> pattern tokens <TAB> priority`, # comments.
std::vector<PatternRule> parse_pattern_rules(std::string_view text);
// `style <TAB> pattern-or-@colon-structural <TAB> priority`, # comments.
std::vector<StyleRule> parse_style_rules(std::string_view text);
// One trigger word per line, # comments.
std::vector<std::string> parse_trigger_lexicon(std::string_view text);

// Title (as a pseudo-section) plus the bodies of sections whose heading
// normalizes to abstract/introduction/conclusion(s), in document order.
// Falls back to title + first section when nothing matches.
std::vector<std::string> select_sections(const ArticleText& article);

// Boundaries at ./!/? followed by whitespace and a capital, guarded
// against common abbreviations ("et al.", "Fig.", "e.g.", ...).
std::vector<std::string> split_sentences(std::string_view body);

// Coarse POS tags (closed-class lexicon, suffix rules, default NOUN) and
// maximal DET? ADJ* NOUN+ noun-phrase spans.
TaggedSentence tag_and_chunk(std::string_view sentence);

// Token positions whose lemma-normalized surface is in the lexicon. A
// sentence is implicated iff the result is non-empty.
std::vector<int> find_triggers(const TaggedSentence& sentence,
                               const std::vector<std::string>& trigger_lexicon);

// First rule in priority order whose token sequence sits immediately
// before (pre) or after (post) a noun phrase; a leading determiner of the
// NP may be absorbed by a pre-pattern. The matched NP minus its leading
// determiner becomes the terminology. Absent when no rule fires.
std::optional<Terminology> match_element(const TaggedSentence& sentence,
                                         const std::vector<PatternRule>& rules,
                                         TeElementKind element);

// First style rule (priority order) matching the title decides; default
// IssueSolution when nothing fires.
ResearchStyle classify_style(std::string_view title, const std::vector<StyleRule>& rules);

// Candidate with maximal Wu-Palmer similarity to the linked target; ties
// broken by smaller depth then lexicographic label. Throws ExtractionError
// when the target cannot be linked confidently.
std::string induce_domain(const OntologyGraph& graph, const Terminology& target,
                          const std::vector<std::string>& domain_candidates);

struct ExtractionResources {
  const OntologyGraph* ontology = nullptr;
  std::vector<PatternRule> patterns;
  std::vector<StyleRule> style_rules;
  std::vector<std::string> triggers;
  // Empty means: use ontology->default_domain_candidates().
  std::vector<std::string> domain_candidates;
};

// The whole pipeline: section selection, sentence splitting, trigger
// scan, chunking, pattern matching, title style, domain induction,
// keyword selection. Deterministic for fixed inputs and resources.
// Throws ExtractionError when an essential element cannot be produced.
TopicEvent extract_topic_event(const ArticleText& article,
                               const ExtractionResources& resources);

}  // namespace tesim
