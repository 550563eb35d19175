#include "tesim/similarity.hpp"

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tesim/errors.hpp"
#include "tesim/resources.hpp"

using namespace tesim;

namespace {

struct Fixture {
  OntologyGraph ontology = OntologyGraph::load(oracle::fixture_ontology_text());
  OntologyGraph styles = load_style_ontology(resources::kStyleOntology);
  OntologyBackend backend{ontology};
  SimilarityConfig config;

  Fixture() {
    config.term_backend = &backend;
    config.domain_backend = &backend;
    config.style_ontology = &styles;
  }
};

TopicEvent make_te(const std::string& did, const std::string& target,
                   const std::string& domain_label, const std::string& domain_node,
                   ResearchStyle style, PubDate date) {
  TopicEvent te;
  te.did = did;
  te.eid = "te-" + did;
  te.target.emplace_back(target);
  te.domain = Terminology(domain_label, domain_node);
  te.style = style;
  te.date = date;
  return te;
}

}  // namespace

TEST_CASE("style similarity on the shipped hierarchy") {
  Fixture f;
  CHECK(style_similarity(f.styles, ResearchStyle::Survey, ResearchStyle::Survey) == 1.0);
  // Siblings under the same depth-2 group.
  CHECK(style_similarity(f.styles, ResearchStyle::Survey, ResearchStyle::Analysis) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  // Across the two groups the subsumer is the root.
  CHECK(style_similarity(f.styles, ResearchStyle::Survey, ResearchStyle::IssueSolution) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(style_similarity(f.styles, ResearchStyle::Survey, ResearchStyle::IssueSolution) ==
        style_similarity(f.styles, ResearchStyle::IssueSolution, ResearchStyle::Survey));
}

TEST_CASE("date similarity fixed points") {
  CHECK(date_similarity(PubDate{2009, 6}, PubDate{2009, 6}) == 1.0);
  CHECK(date_similarity(PubDate{2008, 1}, PubDate{2009, 1}) == 0.5);
  CHECK(date_similarity(PubDate{2005, 6}, PubDate{2009, 6}) == 0.2);
  CHECK(date_similarity(PubDate{2009, 1}, PubDate{2008, 1}) == 0.5);  // symmetric
}

TEST_CASE("date similarity is translation invariant") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> year(1950, 2050), month(1, 12), shift(-20, 20);
  for (int iter = 0; iter < 100; ++iter) {
    PubDate a{year(rng), month(rng)};
    PubDate b{year(rng), month(rng)};
    int n = shift(rng);
    PubDate a2{a.year + n, a.month};
    PubDate b2{b.year + n, b.month};
    CHECK(date_similarity(a, b) == date_similarity(a2, b2));
  }
}

TEST_CASE("te_similarity of a TE with itself is 1") {
  Fixture f;
  TopicEvent e = make_te("P1", "relation extraction", "information extraction",
                         "InformationExtraction", ResearchStyle::IssueSolution,
                         PubDate{2009, 6});
  e.methodology.emplace_back("machine learning");
  e.keywords.emplace_back("event extraction");
  auto breakdown = te_similarity(e, e, f.config);
  CHECK(breakdown.total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dates one year apart under default weights score 0.975") {
  Fixture f;
  TopicEvent a = make_te("P1", "relation extraction", "information extraction",
                         "InformationExtraction", ResearchStyle::IssueSolution,
                         PubDate{2008, 6});
  a.methodology.emplace_back("machine learning");
  a.keywords.emplace_back("event extraction");
  TopicEvent b = a;
  b.did = "P2";
  b.eid = "te-P2";
  b.date = PubDate{2009, 6};
  auto breakdown = te_similarity(a, b, f.config);
  CHECK(breakdown.total == doctest::Approx(0.975).epsilon(1e-9));
}

TEST_CASE("missing optional elements redistribute weight proportionally") {
  Fixture f;
  TopicEvent a = make_te("P1", "relation extraction", "information extraction",
                         "InformationExtraction", ResearchStyle::IssueSolution,
                         PubDate{2009, 6});
  TopicEvent b = make_te("P2", "event extraction", "information extraction",
                         "InformationExtraction", ResearchStyle::IssueSolution,
                         PubDate{2009, 6});
  auto breakdown = te_similarity(a, b, f.config);
  // Hand-applied: weights over {.3,.25,.25,.05}/0.85, target 0.75, rest 1.
  double expected = (0.3 * 0.75 + 0.25 + 0.25 + 0.05) / 0.85;
  CHECK(breakdown.total == doctest::Approx(expected).epsilon(1e-12));
  CHECK(breakdown.total == doctest::Approx(0.9118).epsilon(1e-4));
  CHECK(breakdown.weight_of(TeElement::Methodology) == 0.0);
  CHECK(breakdown.weight_of(TeElement::Keywords) == 0.0);
  CHECK(breakdown.weight_of(TeElement::Target) ==
        doctest::Approx(0.3 / 0.85).epsilon(1e-12));

  SUBCASE("element empty on one side only also drops out") {
    a.methodology.emplace_back("machine learning");
    auto partial = te_similarity(a, b, f.config);
    CHECK(partial.weight_of(TeElement::Methodology) == 0.0);
    CHECK(partial.total == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("te_similarity is symmetric and self-consistent") {
  Fixture f;
  TopicEvent a = make_te("P1", "relation extraction", "information extraction",
                         "InformationExtraction", ResearchStyle::Survey, PubDate{2007, 3});
  a.keywords.emplace_back("machine translation");
  TopicEvent b = make_te("P2", "machine learning", "machine translation",
                         "MachineTranslation", ResearchStyle::Analysis, PubDate{2011, 9});
  b.keywords.emplace_back("event extraction");
  b.methodology.emplace_back("relation extraction");

  auto ab = te_similarity(a, b, f.config);
  auto ba = te_similarity(b, a, f.config);
  CHECK(ab.total == ba.total);
  CHECK(ab.total >= 0.0);
  CHECK(ab.total <= 1.0);

  double recomputed = 0.0;
  for (TeElement e : kAllElements) recomputed += ab.weight_of(e) * ab.score_of(e);
  CHECK(ab.total == doctest::Approx(recomputed).epsilon(1e-12));
}

TEST_CASE("raising one element similarity never lowers the total") {
  Fixture f;
  TopicEvent a = make_te("P1", "relation extraction", "information extraction",
                         "InformationExtraction", ResearchStyle::Survey, PubDate{2007, 3});
  TopicEvent b = make_te("P2", "machine learning", "machine translation",
                         "MachineTranslation", ResearchStyle::Analysis, PubDate{2011, 9});
  double base = te_similarity(a, b, f.config).total;
  b.date = PubDate{2007, 3};  // S_date rises to 1, everything else fixed
  CHECK(te_similarity(a, b, f.config).total >= base);
}

TEST_CASE("invalid configs and TEs are rejected") {
  Fixture f;
  TopicEvent e = make_te("P1", "relation extraction", "information extraction",
                         "InformationExtraction", ResearchStyle::IssueSolution,
                         PubDate{2009, 6});
  SimilarityConfig bad = f.config;
  bad.weights[TeElement::Target] = 0.5;  // sum now 1.2
  CHECK_THROWS_AS(te_similarity(e, e, bad), ConfigError);
  bad.weights[TeElement::Target] = -0.1;
  CHECK_THROWS_AS(te_similarity(e, e, bad), ConfigError);

  TopicEvent invalid = e;
  invalid.target.clear();
  CHECK_THROWS_WITH_AS(te_similarity(invalid, e, f.config), doctest::Contains("target"),
                       ValidationError);
}

TEST_CASE("config file parsing") {
  FileConfig defaults = parse_config(default_config_text());
  CHECK(defaults.weights[TeElement::Target] == 0.3);
  CHECK(defaults.weights[TeElement::Date] == 0.05);
  CHECK(defaults.backend == "onto");
  CHECK(defaults.lsa_rank == 100);

  FileConfig custom = parse_config(
      "weight.target=0.5\nweight.domain=0.5\nweight.style=0\n"
      "weight.methodology=0\nweight.keywords=0\nweight.date=0\n"
      "backend=vectors\nvectors.path=/tmp/v.txt\nlsa.rank=7\n# comment\n");
  CHECK(custom.weights[TeElement::Target] == 0.5);
  CHECK(custom.backend == "vectors");
  CHECK(custom.vectors_path == "/tmp/v.txt");
  CHECK(custom.lsa_rank == 7);

  CHECK_THROWS_AS(parse_config("weight.target=0.9\n"), ConfigError);  // sum != 1
  CHECK_THROWS_AS(parse_config("nonsense\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("unknown.key=1\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("backend=magic\n"), ConfigError);
}
