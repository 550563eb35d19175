#include "tesim/topic_event.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "tesim/errors.hpp"
#include "tesim/text_normalize.hpp"

namespace tesim {

using ordered_json = nlohmann::ordered_json;

const char* to_string(ResearchStyle s) {
  switch (s) {
    case ResearchStyle::TheoreticalOrigination: return "TheoreticalOrigination";
    case ResearchStyle::MethodologyImprovement: return "MethodologyImprovement";
    case ResearchStyle::SystemImplementation: return "SystemImplementation";
    case ResearchStyle::IssueSolution: return "IssueSolution";
    case ResearchStyle::Survey: return "Survey";
    case ResearchStyle::Analysis: return "Analysis";
    case ResearchStyle::PhenomenonDiscovery: return "PhenomenonDiscovery";
  }
  return "IssueSolution";
}

std::optional<ResearchStyle> style_from_string(std::string_view s) {
  std::string key;
  for (char c : s) {
    if (std::isalnum(static_cast<unsigned char>(c)))
      key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (ResearchStyle st : kAllStyles) {
    std::string name;
    for (const char* p = to_string(st); *p; ++p)
      name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(*p))));
    if (key == name) return st;
  }
  return std::nullopt;
}

Terminology::Terminology(std::string_view raw_surface, std::optional<std::string> concept_node)
    : surface(collapse_whitespace(raw_surface)),
      canonical(normalize(raw_surface)),
      concept_id(std::move(concept_node)) {}

PubDate parse_pub_date(std::string_view s) {
  std::string t = collapse_whitespace(s);
  auto all_digits = [](std::string_view v) {
    return !v.empty() && std::all_of(v.begin(), v.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };
  PubDate d;
  auto dash = t.find('-');
  if (dash == std::string::npos) {
    if (!all_digits(t) || t.size() != 4)
      throw ParseError("bad date \"" + t + "\": expected YYYY-MM or YYYY");
    d.year = std::stoi(t);
    d.month = 6;
    d.month_defaulted = true;
    return d;
  }
  std::string ys = t.substr(0, dash), ms = t.substr(dash + 1);
  if (ys.size() != 4 || !all_digits(ys) || ms.empty() || ms.size() > 2 || !all_digits(ms))
    throw ParseError("bad date \"" + t + "\": expected YYYY-MM or YYYY");
  d.year = std::stoi(ys);
  d.month = std::stoi(ms);
  return d;
}

std::string format_pub_date(const PubDate& d) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d", d.year, d.month);
  return buf;
}

namespace {

void validate_term_list(const std::vector<Terminology>& terms, const std::string& field,
                        std::vector<Violation>& out) {
  for (size_t i = 0; i < terms.size(); ++i) {
    if (normalize(terms[i].surface).empty())
      out.push_back({field + "[" + std::to_string(i) + "]",
                     "terminology surface empty after normalization"});
  }
}

}  // namespace

std::vector<Violation> validate_topic_event(const TopicEvent& te) {
  std::vector<Violation> out;
  if (normalize(te.eid).empty()) out.push_back({"eid", "required identifier missing"});
  if (normalize(te.did).empty()) out.push_back({"did", "required identifier missing"});
  if (te.target.empty())
    out.push_back({"target", "required element: at least one terminology"});
  validate_term_list(te.target, "target", out);
  validate_term_list(te.methodology, "methodology", out);
  validate_term_list(te.keywords, "keywords", out);
  if (normalize(te.domain.surface).empty())
    out.push_back({"domain", "required element missing"});
  if (te.date.year < 1900 || te.date.year > 2100)
    out.push_back({"date.year", "year out of range [1900,2100]"});
  if (te.date.month < 1 || te.date.month > 12)
    out.push_back({"date.month", "month out of range [1,12]"});
  return out;
}

namespace {

ordered_json term_to_json(const Terminology& t) {
  ordered_json j;
  j["surface"] = t.surface;
  if (t.concept_id) j["concept"] = *t.concept_id;
  return j;
}

ordered_json term_list_to_json(const std::vector<Terminology>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : v) arr.push_back(term_to_json(t));
  return arr;
}

ordered_json te_to_json(const TopicEvent& te) {
  ordered_json j;
  j["eid"] = te.eid;
  j["did"] = te.did;
  j["target"] = term_list_to_json(te.target);
  j["methodology"] = term_list_to_json(te.methodology);
  j["domain"] = term_to_json(te.domain);
  j["style"] = to_string(te.style);
  j["keywords"] = term_list_to_json(te.keywords);
  j["date"] = format_pub_date(te.date);
  if (te.date.month_defaulted) j["date_month_defaulted"] = true;
  for (const char* field : kExtraFields) {
    auto it = te.extras.find(field);
    if (it != te.extras.end()) j[field] = it->second;
  }
  return j;
}

Terminology term_from_json(const ordered_json& j, const std::string& field) {
  if (j.is_string()) return Terminology(j.get<std::string>());
  if (!j.is_object() || !j.contains("surface") || !j["surface"].is_string())
    throw ParseError("field \"" + field + "\": expected terminology object with \"surface\"");
  std::optional<std::string> concept_node;
  if (j.contains("concept")) {
    if (!j["concept"].is_string())
      throw ParseError("field \"" + field + "\": \"concept\" must be a string");
    concept_node = j["concept"].get<std::string>();
  }
  return Terminology(j["surface"].get<std::string>(), std::move(concept_node));
}

std::vector<Terminology> term_list_from_json(const ordered_json& j, const std::string& field) {
  if (!j.is_array())
    throw ParseError("field \"" + field + "\": expected array of terminologies");
  std::vector<Terminology> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(term_from_json(e, field));
  return out;
}

}  // namespace

std::string serialize_topic_event(const TopicEvent& te) {
  return te_to_json(te).dump(2) + "\n";
}

std::string serialize_topic_event_line(const TopicEvent& te) {
  return te_to_json(te).dump();
}

TopicEvent parse_topic_event(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("malformed TE record at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!j.is_object()) throw ParseError("TE record must be a JSON object");

  static const char* kRequired[] = {"eid",   "did",      "target", "methodology",
                                    "domain", "style",   "keywords", "date"};
  for (const char* key : kRequired) {
    if (!j.contains(key))
      throw ValidationError(std::string("missing required field: ") + key);
  }

  TopicEvent te;
  if (!j["eid"].is_string() || !j["did"].is_string())
    throw ParseError("eid/did must be strings");
  te.eid = j["eid"].get<std::string>();
  te.did = j["did"].get<std::string>();
  te.target = term_list_from_json(j["target"], "target");
  te.methodology = term_list_from_json(j["methodology"], "methodology");
  te.domain = term_from_json(j["domain"], "domain");
  if (!j["style"].is_string()) throw ParseError("style must be a string");
  auto style = style_from_string(j["style"].get<std::string>());
  if (!style)
    throw ValidationError("invalid value for field: style (\"" +
                          j["style"].get<std::string>() + "\")");
  te.style = *style;
  te.keywords = term_list_from_json(j["keywords"], "keywords");
  if (!j["date"].is_string()) throw ParseError("date must be a string");
  te.date = parse_pub_date(j["date"].get<std::string>());
  if (j.contains("date_month_defaulted")) {
    if (!j["date_month_defaulted"].is_boolean())
      throw ParseError("date_month_defaulted must be a boolean");
    te.date.month_defaulted = j["date_month_defaulted"].get<bool>();
  }

  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    bool known = std::find_if(std::begin(kRequired), std::end(kRequired),
                              [&](const char* k) { return key == k; }) !=
                 std::end(kRequired);
    known = known || key == "date_month_defaulted";
    for (const char* field : kExtraFields) known = known || key == field;
    if (!known) throw ParseError("unknown field in TE record: " + key);
  }
  for (const char* field : kExtraFields) {
    if (!j.contains(field)) continue;
    if (!j[field].is_string())
      throw ParseError(std::string("optional field \"") + field +
                       "\" must be a string (carried as opaque text)");
    te.extras[field] = j[field].get<std::string>();
  }

  auto report = validate_topic_event(te);
  if (!report.empty()) {
    std::ostringstream msg;
    msg << "invalid TE record:";
    for (const auto& v : report) msg << " [" << v.field << ": " << v.message << "]";
    throw ValidationError(msg.str());
  }
  return te;
}

std::vector<TopicEvent> parse_topic_event_batch(std::string_view text) {
  std::vector<TopicEvent> out;
  size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    std::string trimmed = collapse_whitespace(line);
    if (!trimmed.empty()) {
      try {
        out.push_back(parse_topic_event(line));
      } catch (const Error& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

}  // namespace tesim
