#include "tesim/extraction.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tesim/errors.hpp"
#include "tesim/text_normalize.hpp"

namespace tesim {

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t nl = text.find('\n', pos);
    size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string line(text.substr(pos, end - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= line.size()) {
    size_t next = line.find(sep, pos);
    if (next == std::string::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace

ArticleText parse_article(std::string_view text) {
  ArticleText art;
  bool saw_date = false;
  std::string* current_body = nullptr;

  size_t line_no = 0;
  for (const std::string& raw : split_lines(text)) {
    ++line_no;
    if (starts_with(raw, "== ") || raw == "==") {
      std::string heading = collapse_whitespace(raw.size() > 2 ? raw.substr(3) : "");
      art.sections.emplace_back(heading, "");
      current_body = &art.sections.back().second;
      continue;
    }
    if (current_body) {
      current_body->append(raw);
      current_body->push_back('\n');
      continue;
    }
    std::string line = collapse_whitespace(raw);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("article line " + std::to_string(line_no) +
                       ": expected `key: value` front matter or `== heading`");
    std::string key = to_lower(collapse_whitespace(line.substr(0, colon)));
    std::string value = collapse_whitespace(line.substr(colon + 1));
    if (key == "did") {
      art.did = value;
    } else if (key == "title") {
      art.title = value;
    } else if (key == "date") {
      art.date = parse_pub_date(value);
      saw_date = true;
    } else if (key == "keywords") {
      std::vector<std::string> kws;
      for (const auto& part : split_fields(value, ',')) {
        std::string kw = collapse_whitespace(part);
        if (!kw.empty()) kws.push_back(std::move(kw));
      }
      art.declared_keywords = std::move(kws);
    } else {
      throw ParseError("article line " + std::to_string(line_no) +
                       ": unknown front-matter key \"" + key + "\"");
    }
  }

  if (art.did.empty()) throw ValidationError("article: missing did");
  if (art.title.empty()) throw ValidationError("article: missing title");
  if (!saw_date) throw ValidationError("article: missing date");
  if (art.date.year < 1900 || art.date.year > 2100 || art.date.month < 1 ||
      art.date.month > 12)
    throw ValidationError("article: date out of range: " + format_pub_date(art.date));
  if (art.sections.empty()) throw ValidationError("article: no sections (`== heading`)");
  return art;
}

ArticleText parse_article_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open article file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_article(buf.str());
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Rule and lexicon files

std::vector<PatternRule> parse_pattern_rules(std::string_view text) {
  std::vector<PatternRule> rules;
  size_t line_no = 0;
  for (std::string& line : split_lines(text)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (collapse_whitespace(line).empty()) continue;
    auto fields = split_fields(line, '\t');
    if (fields.size() != 4)
      throw ParseError("pattern rules line " + std::to_string(line_no) +
                       ": expected `element <TAB> pre|post <TAB> pattern <TAB> priority`");
    PatternRule r;
    std::string element = normalize(fields[0]);
    if (element == "target") r.element = TeElementKind::Target;
    else if (element == "methodology") r.element = TeElementKind::Methodology;
    else
      throw ParseError("pattern rules line " + std::to_string(line_no) +
                       ": element must be target|methodology");
    std::string position = normalize(fields[1]);
    if (position == "pre") r.position = PatternPosition::Pre;
    else if (position == "post") r.position = PatternPosition::Post;
    else
      throw ParseError("pattern rules line " + std::to_string(line_no) +
                       ": position must be pre|post");
    r.pattern = tokenize_words(fields[2]);
    if (r.pattern.empty())
      throw ParseError("pattern rules line " + std::to_string(line_no) + ": empty pattern");
    try {
      r.priority = std::stoi(fields[3]);
    } catch (...) {
      throw ParseError("pattern rules line " + std::to_string(line_no) + ": bad priority");
    }
    rules.push_back(std::move(r));
  }
  return rules;
}

std::vector<StyleRule> parse_style_rules(std::string_view text) {
  std::vector<StyleRule> rules;
  size_t line_no = 0;
  for (std::string& line : split_lines(text)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (collapse_whitespace(line).empty()) continue;
    auto fields = split_fields(line, '\t');
    if (fields.size() != 3)
      throw ParseError("style rules line " + std::to_string(line_no) +
                       ": expected `style <TAB> pattern <TAB> priority`");
    StyleRule r;
    auto style = style_from_string(collapse_whitespace(fields[0]));
    if (!style)
      throw ParseError("style rules line " + std::to_string(line_no) +
                       ": unknown style \"" + fields[0] + "\"");
    r.style = *style;
    r.pattern = normalize(fields[1]);
    if (r.pattern.empty())
      throw ParseError("style rules line " + std::to_string(line_no) + ": empty pattern");
    try {
      r.priority = std::stoi(fields[2]);
    } catch (...) {
      throw ParseError("style rules line " + std::to_string(line_no) + ": bad priority");
    }
    rules.push_back(std::move(r));
  }
  return rules;
}

std::vector<std::string> parse_trigger_lexicon(std::string_view text) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::string& line : split_lines(text)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string word = normalize(line);
    if (word.empty()) continue;
    if (seen.insert(word).second) out.push_back(word);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Section selection

namespace {

bool is_roman(const std::string& word) {
  return !word.empty() && word.find_first_not_of("ivxlcdm") == std::string::npos;
}

std::string normalize_heading(std::string_view heading) {
  std::string lowered = to_lower(heading);
  std::string cleaned;
  for (char c : lowered)
    cleaned.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : ' ');
  std::vector<std::string> words = tokenize_words(cleaned);
  // Strip leading enumeration: bare numbers, or roman numerals followed by
  // more words.
  size_t start = 0;
  while (start < words.size()) {
    const std::string& w = words[start];
    bool numeric = w.find_first_not_of("0123456789") == std::string::npos;
    if (numeric || (is_roman(w) && start + 1 < words.size())) {
      ++start;
      continue;
    }
    break;
  }
  std::string out;
  for (size_t i = start; i < words.size(); ++i) {
    if (!out.empty()) out.push_back(' ');
    out += words[i];
  }
  return out;
}

bool heading_selected(std::string_view heading) {
  static const std::set<std::string> kWanted = {"abstract", "introduction", "conclusion",
                                                "conclusions"};
  std::string norm = normalize_heading(heading);
  if (kWanted.count(norm)) return true;
  auto space = norm.find(' ');
  if (space != std::string::npos && kWanted.count(norm.substr(0, space))) return true;
  return false;
}

}  // namespace

std::vector<std::string> select_sections(const ArticleText& article) {
  std::vector<std::string> out;
  out.push_back(article.title);
  bool matched = false;
  for (const auto& [heading, body] : article.sections) {
    if (heading_selected(heading)) {
      out.push_back(body);
      matched = true;
    }
  }
  if (!matched) out.push_back(article.sections.front().second);
  return out;
}

// ---------------------------------------------------------------------------
// Sentence splitting

namespace {

bool is_abbreviation_before(std::string_view text, size_t dot) {
  // Word (letters and dots) ending at `dot`, inclusive.
  size_t start = dot;
  while (start > 0) {
    char c = text[start - 1];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '.') --start;
    else break;
  }
  std::string word = to_lower(std::string(text.substr(start, dot - start + 1)));
  static const std::set<std::string> kGuards = {
      "et al.", "al.",  "fig.", "figs.", "e.g.", "i.e.", "etc.", "vs.", "cf.",
      "eq.",    "eqs.", "tab.", "sec.",  "no.",  "dr.",  "mr.",  "ms.", "prof.",
      "ref.",   "refs.",
  };
  if (kGuards.count(word)) return true;
  // Two-word guard ("et al.").
  if (start >= 1 && text[start - 1] == ' ') {
    size_t prev_end = start - 1;
    size_t prev_start = prev_end;
    while (prev_start > 0 &&
           std::isalpha(static_cast<unsigned char>(text[prev_start - 1])))
      --prev_start;
    std::string two =
        to_lower(std::string(text.substr(prev_start, dot - prev_start + 1)));
    if (kGuards.count(two)) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view body) {
  std::vector<std::string> out;
  std::string current;
  for (size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    current.push_back(c);
    if (c != '.' && c != '!' && c != '?') continue;

    size_t j = i + 1;
    while (j < body.size() && std::isspace(static_cast<unsigned char>(body[j]))) ++j;
    bool boundary = j > i + 1 && j < body.size() &&
                    std::isupper(static_cast<unsigned char>(body[j]));
    if (j >= body.size()) boundary = true;  // trailing terminator ends the last sentence
    if (boundary && c == '.' && is_abbreviation_before(body, i)) boundary = false;
    if (boundary) {
      std::string sentence = collapse_whitespace(current);
      if (!sentence.empty()) out.push_back(std::move(sentence));
      current.clear();
      i = j - 1;
    }
  }
  std::string tail = collapse_whitespace(current);
  if (!tail.empty()) out.push_back(std::move(tail));
  return out;
}

// ---------------------------------------------------------------------------
// POS tagging and NP chunking

namespace {

const std::unordered_set<std::string>& det_words() {
  static const std::unordered_set<std::string> kSet = {
      "a",     "an",   "the",  "this", "that",  "these", "those", "each",
      "every", "some", "any",  "no",   "all",   "both",  "our",   "their",
      "its",   "his",  "her",  "my",   "your",
  };
  return kSet;
}

const std::unordered_set<std::string>& prep_words() {
  static const std::unordered_set<std::string> kSet = {
      "of",   "in",      "on",      "at",      "by",      "for",    "with",
      "from", "to",      "into",    "onto",    "over",    "under",  "between",
      "among", "through", "during", "via",     "within",  "without", "about",
      "after", "before",  "against", "toward", "towards", "per",    "across",
      "along", "as",      "upon",
  };
  return kSet;
}

const std::unordered_set<std::string>& verb_words() {
  static const std::unordered_set<std::string> kSet = {
      // auxiliaries and modals
      "is", "are", "was", "were", "be", "been", "being", "am", "has", "have",
      "had", "having", "do", "does", "did", "can", "could", "will", "would",
      "shall", "should", "may", "might", "must",
      // common reporting/working verbs (base + s forms)
      "propose", "proposes", "present", "presents", "describe", "describes",
      "introduce", "introduces", "develop", "develops", "design", "designs",
      "implement", "implements", "evaluate", "evaluates", "investigate",
      "investigates", "address", "addresses", "compare", "compares",
      "analyze", "analyzes", "show", "shows", "use", "uses", "using",
      "apply", "applies", "applying", "achieve", "achieves", "obtain",
      "obtains", "provide", "provides", "demonstrate", "demonstrates",
      "explore", "explores", "examine", "examines",
  };
  return kSet;
}

const std::unordered_set<std::string>& adj_words() {
  static const std::unordered_set<std::string> kSet = {
      "supervised", "unsupervised", "automated",  "hybrid", "novel", "new",
      "robust",     "efficient",    "scalable",   "fast",   "large", "small",
      "several",    "many",         "such",       "other",  "recent", "common",
      "semisupervised", "joint",    "multilingual",
  };
  return kSet;
}

const std::unordered_set<std::string>& other_words() {
  static const std::unordered_set<std::string> kSet = {
      "we", "i", "you", "they", "it", "he", "she", "one", "and", "or", "but",
      "not", "also", "however", "thus", "hence", "moreover", "furthermore",
      "then", "there", "here", "which", "who", "whose", "what", "when",
      "where", "how", "while", "than", "if", "because", "so", "well",
      "more", "most", "less", "least", "very",
  };
  return kSet;
}

bool is_punct_token(const std::string& s) {
  return s.size() == 1 && std::ispunct(static_cast<unsigned char>(s[0]));
}

PosTag tag_word(const std::string& lower) {
  if (is_punct_token(lower)) return PosTag::Punct;
  if (det_words().count(lower)) return PosTag::Det;
  if (prep_words().count(lower)) return PosTag::Prep;
  if (verb_words().count(lower)) return PosTag::Verb;
  if (adj_words().count(lower)) return PosTag::Adj;
  if (other_words().count(lower)) return PosTag::Other;
  if (std::isdigit(static_cast<unsigned char>(lower[0]))) return PosTag::Other;
  // Hyphenated participles act as modifiers ("graph-based methods").
  bool hyphenated = lower.find('-') != std::string::npos;
  if (hyphenated && (ends_with(lower, "ed") || ends_with(lower, "ing")))
    return PosTag::Adj;
  if (ends_with(lower, "tion") || ends_with(lower, "ment") || ends_with(lower, "ity") ||
      ends_with(lower, "ness"))
    return PosTag::Noun;
  if (ends_with(lower, "ize") || ends_with(lower, "ise") || ends_with(lower, "ed"))
    return PosTag::Verb;
  if (ends_with(lower, "ous") || ends_with(lower, "al") || ends_with(lower, "ive"))
    return PosTag::Adj;
  if (ends_with(lower, "ly")) return PosTag::Other;
  return PosTag::Noun;  // unknown content words default to NOUN
}

std::vector<Token> tokenize_sentence(std::string_view sentence) {
  std::vector<Token> tokens;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    Token t;
    t.surface = cur;
    t.lower = to_lower(cur);
    t.tag = tag_word(t.lower);
    tokens.push_back(std::move(t));
    cur.clear();
  };
  for (size_t i = 0; i < sentence.size(); ++i) {
    char c = sentence[i];
    if (std::isalnum(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    } else if ((c == '-' || c == '\'') && !cur.empty() && i + 1 < sentence.size() &&
               std::isalnum(static_cast<unsigned char>(sentence[i + 1]))) {
      cur.push_back(c);
    } else {
      flush();
      if (std::ispunct(static_cast<unsigned char>(c))) {
        Token t;
        t.surface = std::string(1, c);
        t.lower = t.surface;
        t.tag = PosTag::Punct;
        tokens.push_back(std::move(t));
      }
    }
  }
  flush();
  return tokens;
}

}  // namespace

TaggedSentence tag_and_chunk(std::string_view sentence) {
  TaggedSentence out;
  out.text = std::string(sentence);
  out.tokens = tokenize_sentence(sentence);

  // Maximal DET? ADJ* NOUN+ spans.
  const int n = static_cast<int>(out.tokens.size());
  int i = 0;
  while (i < n) {
    int start = i;
    int j = i;
    if (j < n && out.tokens[j].tag == PosTag::Det) ++j;
    while (j < n && out.tokens[j].tag == PosTag::Adj) ++j;
    int first_noun = j;
    while (j < n && out.tokens[j].tag == PosTag::Noun) ++j;
    if (j > first_noun) {
      out.np_spans.push_back({start, j});
      i = j;
    } else {
      i = start + 1;
    }
  }
  return out;
}

std::vector<int> find_triggers(const TaggedSentence& sentence,
                               const std::vector<std::string>& trigger_lexicon) {
  std::unordered_set<std::string> lexicon(trigger_lexicon.begin(), trigger_lexicon.end());
  std::vector<int> positions;
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    for (const auto& lemma : lemma_candidates(sentence.tokens[i].lower)) {
      if (lexicon.count(lemma)) {
        positions.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  return positions;
}

namespace {

int leading_determiners(const TaggedSentence& s, const NpSpan& np) {
  int d = 0;
  while (np.begin + d < np.end && s.tokens[np.begin + d].tag == PosTag::Det) ++d;
  return d;
}

bool tokens_match_ending_at(const TaggedSentence& s, const std::vector<std::string>& pattern,
                            int end) {
  int start = end - static_cast<int>(pattern.size());
  if (start < 0) return false;
  for (size_t i = 0; i < pattern.size(); ++i)
    if (s.tokens[start + static_cast<int>(i)].lower != pattern[i]) return false;
  return true;
}

bool tokens_match_starting_at(const TaggedSentence& s,
                              const std::vector<std::string>& pattern, int start) {
  if (start + static_cast<int>(pattern.size()) > static_cast<int>(s.tokens.size()))
    return false;
  for (size_t i = 0; i < pattern.size(); ++i)
    if (s.tokens[start + static_cast<int>(i)].lower != pattern[i]) return false;
  return true;
}

Terminology np_terminology(const TaggedSentence& s, const NpSpan& np) {
  int start = np.begin + leading_determiners(s, np);
  std::string surface;
  for (int i = start; i < np.end; ++i) {
    if (!surface.empty()) surface.push_back(' ');
    surface += s.tokens[i].surface;
  }
  return Terminology(surface);
}

}  // namespace

std::optional<Terminology> match_element(const TaggedSentence& sentence,
                                         const std::vector<PatternRule>& rules,
                                         TeElementKind element) {
  std::vector<const PatternRule*> ordered;
  for (const auto& r : rules)
    if (r.element == element) ordered.push_back(&r);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const PatternRule* a, const PatternRule* b) {
                     return a->priority < b->priority;
                   });

  for (const PatternRule* rule : ordered) {
    for (const NpSpan& np : sentence.np_spans) {
      bool fires = false;
      if (rule->position == PatternPosition::Pre) {
        // The pattern may end right before the NP or may absorb its
        // leading determiner(s).
        int dets = leading_determiners(sentence, np);
        fires = tokens_match_ending_at(sentence, rule->pattern, np.begin) ||
                (dets > 0 && tokens_match_ending_at(sentence, rule->pattern, np.begin + dets));
      } else {
        fires = tokens_match_starting_at(sentence, rule->pattern, np.end);
      }
      if (fires) {
        Terminology term = np_terminology(sentence, np);
        if (!term.canonical.empty()) return term;
      }
    }
  }
  return std::nullopt;
}

namespace {

bool colon_structural_matches(std::string_view title) {
  // Leading software-style name connected by ':' or a spaced '-'.
  std::string t = collapse_whitespace(title);
  size_t sep = std::string::npos;
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] == ':') {
      sep = i;
      break;
    }
    if (t[i] == '-' && i > 0 && i + 1 < t.size() && (t[i - 1] == ' ' || t[i + 1] == ' ')) {
      sep = i;
      break;
    }
  }
  if (sep == std::string::npos || sep == 0 || sep + 1 >= t.size()) return false;
  std::string prefix = collapse_whitespace(t.substr(0, sep));
  if (prefix.empty() || prefix.find(' ') != std::string::npos) return false;
  return std::isupper(static_cast<unsigned char>(prefix[0])) != 0;
}

bool title_contains_pattern(const std::vector<std::string>& title_tokens,
                            const std::vector<std::string>& pattern_tokens) {
  if (pattern_tokens.empty() || title_tokens.size() < pattern_tokens.size()) return false;
  for (size_t i = 0; i + pattern_tokens.size() <= title_tokens.size(); ++i) {
    bool ok = true;
    for (size_t j = 0; j < pattern_tokens.size(); ++j) {
      if (title_tokens[i + j] != pattern_tokens[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

ResearchStyle classify_style(std::string_view title, const std::vector<StyleRule>& rules) {
  std::vector<const StyleRule*> ordered;
  for (const auto& r : rules) ordered.push_back(&r);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const StyleRule* a, const StyleRule* b) {
                     return a->priority < b->priority;
                   });
  std::vector<std::string> title_tokens = tokenize_words(title);
  for (const StyleRule* rule : ordered) {
    if (rule->pattern == "@colon-structural") {
      if (colon_structural_matches(title)) return rule->style;
      continue;
    }
    if (title_contains_pattern(title_tokens, tokenize_words(rule->pattern)))
      return rule->style;
  }
  return ResearchStyle::IssueSolution;
}

std::string induce_domain(const OntologyGraph& graph, const Terminology& target,
                          const std::vector<std::string>& domain_candidates) {
  if (domain_candidates.empty())
    throw ExtractionError("induce_domain: no domain candidates");
  std::string target_node;
  if (target.concept_id && graph.contains(*target.concept_id)) {
    target_node = *target.concept_id;
  } else {
    auto link = graph.link(target);
    if (!link.confident)
      throw ExtractionError("induce_domain: target \"" + target.surface +
                            "\" cannot be linked confidently; manual domain "
                            "assignment required");
    target_node = link.node_id;
  }

  std::string best;
  double best_score = -1.0;
  for (const auto& candidate : domain_candidates) {
    double score = graph.wu_palmer(target_node, candidate);
    bool better = score > best_score;
    if (!better && score == best_score && !best.empty()) {
      int dc = graph.depth(candidate), db = graph.depth(best);
      if (dc != db) better = dc < db;
      else better = graph.node(candidate).label < graph.node(best).label;
    }
    if (better) {
      best = candidate;
      best_score = score;
    }
  }
  return best;
}

namespace {

struct NpCount {
  std::string first_surface;
  std::string concept_id;
  int count = 0;
};

}  // namespace

TopicEvent extract_topic_event(const ArticleText& article,
                               const ExtractionResources& resources) {
  if (resources.ontology == nullptr)
    throw ExtractionError("extract_topic_event: no ontology loaded");
  const OntologyGraph& graph = *resources.ontology;

  TopicEvent te;
  te.did = article.did;
  te.eid = "te-" + article.did;
  te.date = article.date;
  te.style = classify_style(article.title, resources.style_rules);

  std::optional<Terminology> target;
  std::optional<Terminology> methodology;
  // Keyword fallback counts every confidently linked NP in the selected
  // sections, keyed by canonical surface.
  std::map<std::string, NpCount> np_counts;

  for (const std::string& body : select_sections(article)) {
    for (const std::string& sentence_text : split_sentences(body)) {
      TaggedSentence sentence = tag_and_chunk(sentence_text);
      for (const NpSpan& np : sentence.np_spans) {
        int dets = 0;
        while (np.begin + dets < np.end && sentence.tokens[np.begin + dets].tag == PosTag::Det)
          ++dets;
        std::string surface;
        for (int i = np.begin + dets; i < np.end; ++i) {
          if (!surface.empty()) surface.push_back(' ');
          surface += sentence.tokens[i].surface;
        }
        if (surface.empty()) continue;
        auto link = graph.link(surface);
        if (!link.confident) continue;
        auto [it, inserted] = np_counts.try_emplace(normalize(surface));
        if (inserted) {
          it->second.first_surface = collapse_whitespace(surface);
          it->second.concept_id = link.node_id;
        }
        ++it->second.count;
      }

      if (target && methodology) continue;
      if (find_triggers(sentence, resources.triggers).empty()) continue;
      if (!target)
        target = match_element(sentence, resources.patterns, TeElementKind::Target);
      if (!methodology)
        methodology =
            match_element(sentence, resources.patterns, TeElementKind::Methodology);
    }
  }

  if (!target)
    throw ExtractionError("extraction failed for " + article.did +
                          ": target not found in any implicated sentence");

  auto link_confident = [&graph](Terminology& term) {
    auto link = graph.link(term);
    if (link.confident) term.concept_id = link.node_id;
  };
  link_confident(*target);
  te.target.push_back(*target);
  if (methodology) {
    link_confident(*methodology);
    te.methodology.push_back(*methodology);
  }

  std::vector<std::string> candidates = resources.domain_candidates.empty()
                                            ? graph.default_domain_candidates()
                                            : resources.domain_candidates;
  std::string domain_node;
  try {
    domain_node = induce_domain(graph, *target, candidates);
  } catch (const ExtractionError& e) {
    throw ExtractionError("extraction failed for " + article.did +
                          ": domain not induced: " + e.what());
  }
  te.domain = Terminology(graph.node(domain_node).label, domain_node);

  if (article.declared_keywords) {
    for (const auto& kw : *article.declared_keywords) {
      Terminology term(kw);
      link_confident(term);
      te.keywords.push_back(std::move(term));
    }
  } else {
    // Top 5 by count, ties by canonical surface.
    std::vector<std::pair<std::string, const NpCount*>> ranked;
    ranked.reserve(np_counts.size());
    for (const auto& [canonical, entry] : np_counts) ranked.emplace_back(canonical, &entry);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second->count != b.second->count) return a.second->count > b.second->count;
      return a.first < b.first;
    });
    for (size_t i = 0; i < ranked.size() && i < 5; ++i)
      te.keywords.emplace_back(ranked[i].second->first_surface,
                               ranked[i].second->concept_id);
  }

  auto report = validate_topic_event(te);
  if (!report.empty()) {
    std::ostringstream msg;
    msg << "extraction failed for " << article.did << ": missing required element:";
    for (const auto& v : report) msg << " " << v.field;
    throw ExtractionError(msg.str());
  }
  return te;
}

}  // namespace tesim
