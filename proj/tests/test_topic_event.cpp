#include "tesim/topic_event.hpp"

#include <random>

#include "doctest.h"
#include "tesim/errors.hpp"

using namespace tesim;

namespace {

TopicEvent make_valid_te() {
  TopicEvent te;
  te.eid = "te-P1";
  te.did = "P1";
  te.target.emplace_back("relation extraction");
  te.methodology.emplace_back("supervised machine learning approach");
  te.domain = Terminology("information extraction", "InformationExtraction");
  te.style = ResearchStyle::IssueSolution;
  te.keywords.emplace_back("kernel methods");
  te.date = PubDate{2009, 6};
  return te;
}

bool report_names(const std::vector<Violation>& report, const std::string& field) {
  for (const auto& v : report)
    if (v.field == field) return true;
  return false;
}

}  // namespace

TEST_CASE("valid TE yields an empty report") {
  CHECK(validate_topic_event(make_valid_te()).empty());
}

TEST_CASE("each invariant violation is reported by field name") {
  auto te = make_valid_te();
  te.target.clear();
  auto report = validate_topic_event(te);
  CHECK(report.size() == 1);
  CHECK(report_names(report, "target"));

  te = make_valid_te();
  te.date.month = 13;
  CHECK(report_names(validate_topic_event(te), "date.month"));

  te = make_valid_te();
  te.date.year = 1800;
  CHECK(report_names(validate_topic_event(te), "date.year"));

  te = make_valid_te();
  te.eid = "  ";
  CHECK(report_names(validate_topic_event(te), "eid"));

  te = make_valid_te();
  te.domain = Terminology();
  CHECK(report_names(validate_topic_event(te), "domain"));
}

TEST_CASE("serialize/parse round trip is the identity on valid TEs") {
  auto te = make_valid_te();
  te.extras["conclusion"] = "It works.";
  te.extras["dataset"] = "ACE 2005";
  CHECK(parse_topic_event(serialize_topic_event(te)) == te);
  CHECK(parse_topic_event(serialize_topic_event_line(te)) == te);
  // serialize . parse is also the identity on serialized text
  CHECK(serialize_topic_event(parse_topic_event(serialize_topic_event(te))) ==
        serialize_topic_event(te));
}

TEST_CASE("round trip holds on randomized TEs") {
  std::mt19937 rng(7);
  auto rand_string = [&rng](size_t max_len) {
    static const char charset[] =
        "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789 _-";
    std::uniform_int_distribution<size_t> len(1, max_len);
    std::uniform_int_distribution<size_t> pick(0, sizeof(charset) - 2);
    std::string s;
    size_t n = len(rng);
    for (size_t i = 0; i < n; ++i) s.push_back(charset[pick(rng)]);
    if (s.find_first_not_of(" -_") == std::string::npos) s = "x" + s;
    return s;
  };
  for (int iter = 0; iter < 100; ++iter) {
    TopicEvent te;
    te.eid = rand_string(10);
    te.did = rand_string(10);
    std::uniform_int_distribution<int> small(0, 3);
    te.target.emplace_back(rand_string(20));
    for (int i = small(rng); i > 0; --i) te.target.emplace_back(rand_string(20));
    for (int i = small(rng); i > 0; --i) te.methodology.emplace_back(rand_string(20));
    for (int i = small(rng); i > 0; --i) te.keywords.emplace_back(rand_string(20));
    te.domain = Terminology(rand_string(15), "Node" + std::to_string(iter));
    te.style = kAllStyles[static_cast<size_t>(iter) % kAllStyles.size()];
    std::uniform_int_distribution<int> year(1900, 2100), month(1, 12);
    te.date = PubDate{year(rng), month(rng), iter % 5 == 0};
    if (iter % 3 == 0) te.extras["forecast"] = rand_string(30);
    CAPTURE(iter);
    CHECK(parse_topic_event(serialize_topic_event(te)) == te);
  }
}

TEST_CASE("missing required key names the field") {
  auto te = make_valid_te();
  std::string record = serialize_topic_event(te);
  auto pos = record.find("\"style\"");
  REQUIRE(pos != std::string::npos);
  auto end = record.find('\n', pos);
  record.erase(pos, end - pos + 1);
  CHECK_THROWS_WITH_AS(parse_topic_event(record), doctest::Contains("style"),
                       ValidationError);
}

TEST_CASE("date parsing") {
  CHECK(parse_pub_date("2009-06") == PubDate{2009, 6, false});
  CHECK(parse_pub_date("2009-6") == PubDate{2009, 6, false});
  PubDate defaulted = parse_pub_date("2009");
  CHECK(defaulted.year == 2009);
  CHECK(defaulted.month == 6);
  CHECK(defaulted.month_defaulted);
  CHECK_THROWS_AS(parse_pub_date("June 2009"), ParseError);
  CHECK_THROWS_AS(parse_pub_date("09-06"), ParseError);
  CHECK(format_pub_date(PubDate{2009, 6}) == "2009-06");
}

TEST_CASE("month-defaulted flag survives the round trip") {
  auto te = make_valid_te();
  te.date = PubDate{2011, 6, true};
  auto parsed = parse_topic_event(serialize_topic_event(te));
  CHECK(parsed.date.month_defaulted);
  CHECK(parsed == te);
}

TEST_CASE("malformed record reports a byte offset") {
  CHECK_THROWS_WITH_AS(parse_topic_event("{\"eid\": }"), doctest::Contains("byte"),
                       ParseError);
}

TEST_CASE("out-of-range month in a record raises a validation error") {
  std::string record = serialize_topic_event(make_valid_te());
  auto pos = record.find("2009-06");
  record.replace(pos, 7, "2009-13");
  CHECK_THROWS_WITH_AS(parse_topic_event(record), doctest::Contains("date.month"),
                       ValidationError);
}

TEST_CASE("unknown top-level keys are rejected") {
  std::string record = serialize_topic_event_line(make_valid_te());
  record.insert(1, "\"bogus\": 1, ");
  CHECK_THROWS_AS(parse_topic_event(record), ParseError);
}

TEST_CASE("batch parsing keeps line numbers in errors") {
  auto te = make_valid_te();
  std::string batch = serialize_topic_event_line(te) + "\n" + "{broken}\n";
  CHECK_THROWS_WITH_AS(parse_topic_event_batch(batch), doctest::Contains("line 2"),
                       ParseError);
  auto parsed = parse_topic_event_batch(serialize_topic_event_line(te) + "\n");
  REQUIRE(parsed.size() == 1);
  CHECK(parsed[0] == te);
}
