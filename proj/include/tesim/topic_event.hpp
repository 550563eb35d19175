#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tesim {

// The seven research style categories.
enum class ResearchStyle {
  TheoreticalOrigination,
  MethodologyImprovement,
  SystemImplementation,
  IssueSolution,
  Survey,
  Analysis,
  PhenomenonDiscovery,
};

inline constexpr std::array<ResearchStyle, 7> kAllStyles = {
    ResearchStyle::TheoreticalOrigination, ResearchStyle::MethodologyImprovement,
    ResearchStyle::SystemImplementation,   ResearchStyle::IssueSolution,
    ResearchStyle::Survey,                 ResearchStyle::Analysis,
    ResearchStyle::PhenomenonDiscovery,
};

const char* to_string(ResearchStyle s);

// Accepts the canonical CamelCase name; also tolerates spacing and case
// differences ("issue solution" -> IssueSolution).
std::optional<ResearchStyle> style_from_string(std::string_view s);

// An extracted term. `surface` is the raw form as seen in text (trimmed),
// `canonical` its lowercased whitespace-collapsed twin, and `concept_id`
// the ontology node it was linked to, when linking succeeded.
struct Terminology {
  std::string surface;
  std::string canonical;
  std::optional<std::string> concept_id;

  Terminology() = default;
  explicit Terminology(std::string_view raw_surface,
                       std::optional<std::string> concept_node = std::nullopt);

  bool operator==(const Terminology& o) const {
    return surface == o.surface && concept_id == o.concept_id;
  }
};

struct PubDate {
  int year = 0;
  int month = 0;
  // True when the source date carried no month and 6 was substituted.
  bool month_defaulted = false;

  bool operator==(const PubDate& o) const {
    return year == o.year && month == o.month && month_defaulted == o.month_defaulted;
  }
};

// Parses "YYYY-MM" or bare "YYYY" (month defaults to 6, flagged).
// Throws ParseError on any other shape; range checks are validation's job.
PubDate parse_pub_date(std::string_view s);
std::string format_pub_date(const PubDate& d);

// Optional free-text fields carried verbatim and never scored.
inline constexpr std::array<const char*, 10> kExtraFields = {
    "name",       "object",   "tools",       "feature", "conclusion",
    "background", "forecast", "performance", "dataset", "metadata",
};

struct TopicEvent {
  std::string eid;
  std::string did;
  std::vector<Terminology> target;       // >= 1 required
  std::vector<Terminology> methodology;  // may be empty
  Terminology domain;
  ResearchStyle style = ResearchStyle::IssueSolution;
  std::vector<Terminology> keywords;  // may be empty
  PubDate date;
  std::map<std::string, std::string> extras;

  bool operator==(const TopicEvent& o) const = default;
};

struct Violation {
  std::string field;
  std::string message;
};

// Never throws; the returned report lists one entry per violated invariant.
// An empty report means the TE is valid.
std::vector<Violation> validate_topic_event(const TopicEvent& te);

// UTF-8 JSON record, field names as in the TE structure (eid, did, target,
// methodology, domain, style, keywords, date). Pretty-printed with a
// trailing newline; field order is fixed so output is byte-deterministic.
std::string serialize_topic_event(const TopicEvent& te);

// Single-line form for batch (one record per line) files.
std::string serialize_topic_event_line(const TopicEvent& te);

// Throws ParseError (with byte offset) on malformed input and
// ValidationError naming the field on missing/invalid required fields.
TopicEvent parse_topic_event(std::string_view text);

// One record per non-empty line.
std::vector<TopicEvent> parse_topic_event_batch(std::string_view text);

}  // namespace tesim
