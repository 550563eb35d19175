#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tesim/topic_event.hpp"

namespace tesim {

struct ConceptNode {
  std::string id;
  std::string label;
  std::vector<std::string> synonyms;
  std::string parent;  // empty for the root
};

// Links whose normalized edit distance exceeds this are low-confidence;
// callers fall back to exact-surface comparison.
inline constexpr double kLinkRejectThreshold = 0.4;

// Unit-cost edit distance on normalized (lowercased, whitespace-collapsed)
// strings.
int levenshtein(std::string_view a, std::string_view b);

// A rooted concept tree with synonym-annotated nodes. Immutable after load;
// every query is const and safe for concurrent readers.
class OntologyGraph {
 public:
  // One node per line: `id <TAB> parent|- <TAB> label <TAB> syn1;syn2`.
  // `-` marks the root; `#` starts a comment. Throws OntologyError on
  // cycles, multiple roots, dangling parents or duplicate ids.
  static OntologyGraph load(std::string_view text);
  static OntologyGraph load_file(const std::string& path);

  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  const ConceptNode& node(const std::string& id) const;
  const std::string& root() const { return nodes_[root_].id; }
  size_t size() const { return nodes_.size(); }

  // Root has depth 1; a child is one deeper than its parent.
  int depth(const std::string& id) const;
  int max_depth() const { return max_depth_; }
  std::vector<std::string> nodes_at_depth(int d) const;
  std::vector<std::string> node_ids() const;  // sorted
  const std::vector<std::string>& children(const std::string& id) const;

  // Deepest node that is an ancestor-or-self of both a and b.
  std::string lcs(const std::string& a, const std::string& b) const;

  // 2*depth(lcs(a,b)) / (depth(a)+depth(b)), always in (0,1].
  double wu_palmer(const std::string& a, const std::string& b) const;

  struct Link {
    std::string node_id;
    int distance = 0;          // edit distance to the best label/synonym
    double normalized = 0.0;   // distance / max(term length, match length)
    bool confident = true;     // normalized <= kLinkRejectThreshold
  };

  // Exact label/synonym match wins with distance 0; otherwise the node
  // minimizing edit distance over all labels and synonyms, ties broken by
  // lexicographically smallest label then smallest id. Both sides are
  // normalized (lowercase, collapsed whitespace, leading article dropped).
  Link link(const Terminology& term) const;
  Link link(std::string_view surface) const;

  // Depth-3 nodes under a "research topic" branch when one exists, else
  // all depth-3 nodes, else the root's children, else the root itself.
  // Sorted by id.
  std::vector<std::string> default_domain_candidates() const;

 private:
  int idx(const std::string& id) const;

  std::vector<ConceptNode> nodes_;
  std::vector<int> parent_;  // -1 for root
  std::vector<int> depth_;
  std::vector<std::vector<std::string>> children_;
  std::unordered_map<std::string, int> index_;
  // Exact-match index over normalized labels and synonyms.
  std::unordered_map<std::string, int> surface_index_;
  int root_ = -1;
  int max_depth_ = 0;
};

// Loads and checks the style hierarchy: a valid OntologyGraph whose leaves
// are exactly the seven research style categories (node ids match the
// enum names).
OntologyGraph load_style_ontology(std::string_view text);

const std::string& style_node_id(ResearchStyle s);

}  // namespace tesim
