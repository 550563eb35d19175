#include "tesim/ontology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <limits>
#include <sstream>
#include <tuple>

#include "tesim/errors.hpp"
#include "tesim/text_normalize.hpp"

namespace tesim {

namespace {

// Two-row DP on raw bytes; callers normalize.
int edit_distance_raw(std::string_view a, std::string_view b) {
  const size_t n = b.size();
  std::vector<int> prev(n + 1), cur(n + 1);
  for (size_t j = 0; j <= n; ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 0; i < a.size(); ++i) {
    cur[0] = static_cast<int>(i) + 1;
    for (size_t j = 0; j < n; ++j) {
      int subst = prev[j] + (a[i] == b[j] ? 0 : 1);
      cur[j + 1] = std::min({cur[j] + 1, prev[j + 1] + 1, subst});
    }
    prev.swap(cur);
  }
  return prev[n];
}

// Same DP with an early-out once every cell in a row exceeds `limit`.
// Returns limit+1 when the distance is known to exceed limit.
int edit_distance_bounded(std::string_view a, std::string_view b, int limit) {
  limit = std::clamp(limit, 0, std::numeric_limits<int>::max() - 1);
  int len_gap = static_cast<int>(a.size() > b.size() ? a.size() - b.size()
                                                     : b.size() - a.size());
  if (len_gap > limit) return limit + 1;
  const size_t n = b.size();
  std::vector<int> prev(n + 1), cur(n + 1);
  for (size_t j = 0; j <= n; ++j) prev[j] = static_cast<int>(j);
  for (size_t i = 0; i < a.size(); ++i) {
    cur[0] = static_cast<int>(i) + 1;
    int row_min = cur[0];
    for (size_t j = 0; j < n; ++j) {
      int subst = prev[j] + (a[i] == b[j] ? 0 : 1);
      cur[j + 1] = std::min({cur[j] + 1, prev[j + 1] + 1, subst});
      row_min = std::min(row_min, cur[j + 1]);
    }
    if (row_min > limit) return limit + 1;
    prev.swap(cur);
  }
  return std::min(prev[n], limit + 1);
}

struct RawNode {
  std::string id, parent, label;
  std::vector<std::string> synonyms;
  size_t line_no = 0;
};

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.emplace_back(s.substr(pos));
      break;
    }
    out.emplace_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return out;
}

}  // namespace

int levenshtein(std::string_view a, std::string_view b) {
  return edit_distance_raw(normalize(a), normalize(b));
}

OntologyGraph OntologyGraph::load(std::string_view text) {
  std::vector<RawNode> raw;
  size_t line_no = 0;
  for (std::string& line : split(text, '\n')) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (collapse_whitespace(line).empty()) continue;
    auto fields = split(line, '\t');
    if (fields.size() < 3)
      throw OntologyError("ontology line " + std::to_string(line_no) +
                          ": expected `id <TAB> parent|- <TAB> label [<TAB> synonyms]`");
    RawNode n;
    n.id = collapse_whitespace(fields[0]);
    n.parent = collapse_whitespace(fields[1]);
    n.label = normalize(fields[2]);
    if (fields.size() >= 4) {
      for (const auto& syn : split(fields[3], ';')) {
        std::string s = normalize(syn);
        if (!s.empty()) n.synonyms.push_back(std::move(s));
      }
    }
    n.line_no = line_no;
    if (n.id.empty())
      throw OntologyError("ontology line " + std::to_string(line_no) + ": empty node id");
    if (n.label.empty())
      throw OntologyError("ontology node " + n.id + ": empty label");
    raw.push_back(std::move(n));
  }
  if (raw.empty()) throw OntologyError("ontology is empty");

  OntologyGraph g;
  g.nodes_.reserve(raw.size());
  for (const auto& n : raw) {
    if (g.index_.count(n.id))
      throw OntologyError("duplicate node id: " + n.id);
    g.index_[n.id] = static_cast<int>(g.nodes_.size());
    g.nodes_.push_back({n.id, n.label, n.synonyms, n.parent == "-" ? "" : n.parent});
  }

  g.parent_.assign(g.nodes_.size(), -1);
  g.children_.assign(g.nodes_.size(), {});
  for (size_t i = 0; i < g.nodes_.size(); ++i) {
    const auto& node = g.nodes_[i];
    if (node.parent.empty()) {
      if (g.root_ != -1)
        throw OntologyError("multiple roots: " + g.nodes_[g.root_].id + " and " + node.id);
      g.root_ = static_cast<int>(i);
      continue;
    }
    auto it = g.index_.find(node.parent);
    if (it == g.index_.end())
      throw OntologyError("node " + node.id + ": dangling parent " + node.parent);
    if (it->second == static_cast<int>(i))
      throw OntologyError("cycle detected at node " + node.id + " (self parent)");
    g.parent_[i] = it->second;
    g.children_[it->second].push_back(node.id);
  }
  if (g.root_ == -1) throw OntologyError("no root node (parent `-`) found");
  for (auto& c : g.children_) std::sort(c.begin(), c.end());

  // BFS from the root assigns depths; anything unreached sits on a cycle.
  g.depth_.assign(g.nodes_.size(), 0);
  std::deque<int> queue{g.root_};
  g.depth_[g.root_] = 1;
  size_t visited = 0;
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    ++visited;
    g.max_depth_ = std::max(g.max_depth_, g.depth_[cur]);
    for (const auto& child_id : g.children_[cur]) {
      int c = g.index_.at(child_id);
      g.depth_[c] = g.depth_[cur] + 1;
      queue.push_back(c);
    }
  }
  if (visited != g.nodes_.size()) {
    for (size_t i = 0; i < g.nodes_.size(); ++i)
      if (g.depth_[i] == 0)
        throw OntologyError("cycle detected at node " + g.nodes_[i].id);
  }

  for (size_t i = 0; i < g.nodes_.size(); ++i) {
    auto claim = [&](const std::string& key) {
      std::string norm = link_normalize(key);
      if (norm.empty()) return;
      // First claimant keeps an ambiguous surface; order is file order.
      g.surface_index_.emplace(norm, static_cast<int>(i));
    };
    claim(g.nodes_[i].label);
    for (const auto& syn : g.nodes_[i].synonyms) claim(syn);
  }
  return g;
}

OntologyGraph OntologyGraph::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OntologyError("cannot open ontology file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str());
}

int OntologyGraph::idx(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw OntologyError("unknown node id: " + id);
  return it->second;
}

const ConceptNode& OntologyGraph::node(const std::string& id) const {
  return nodes_[idx(id)];
}

int OntologyGraph::depth(const std::string& id) const { return depth_[idx(id)]; }

std::vector<std::string> OntologyGraph::nodes_at_depth(int d) const {
  std::vector<std::string> out;
  for (size_t i = 0; i < nodes_.size(); ++i)
    if (depth_[i] == d) out.push_back(nodes_[i].id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> OntologyGraph::node_ids() const {
  std::vector<std::string> out;
  out.reserve(nodes_.size());
  for (const auto& n : nodes_) out.push_back(n.id);
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<std::string>& OntologyGraph::children(const std::string& id) const {
  return children_[idx(id)];
}

std::string OntologyGraph::lcs(const std::string& a, const std::string& b) const {
  int x = idx(a), y = idx(b);
  while (depth_[x] > depth_[y]) x = parent_[x];
  while (depth_[y] > depth_[x]) y = parent_[y];
  while (x != y) {
    x = parent_[x];
    y = parent_[y];
  }
  return nodes_[x].id;
}

double OntologyGraph::wu_palmer(const std::string& a, const std::string& b) const {
  int d_lcs = depth_[idx(lcs(a, b))];
  return 2.0 * d_lcs / (depth_[idx(a)] + depth_[idx(b)]);
}

OntologyGraph::Link OntologyGraph::link(const Terminology& term) const {
  return link(term.surface);
}

OntologyGraph::Link OntologyGraph::link(std::string_view surface) const {
  std::string key = link_normalize(surface);

  auto exact = surface_index_.find(key);
  if (exact != surface_index_.end())
    return {nodes_[exact->second].id, 0, 0.0, true};

  int best_idx = -1;
  int best_dist = std::numeric_limits<int>::max() - 1;
  size_t best_match_len = 0;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    auto consider = [&](const std::string& candidate) {
      int d = edit_distance_bounded(key, candidate, best_dist);
      if (d > best_dist) return;
      bool better = d < best_dist;
      if (!better && best_idx >= 0) {
        // Equal distance: prefer lexicographically smaller label, then id.
        const auto& cur = nodes_[i];
        const auto& best = nodes_[best_idx];
        better = std::tie(cur.label, cur.id) < std::tie(best.label, best.id);
        if (!better && static_cast<int>(i) == best_idx)
          better = candidate.size() > best_match_len;  // longer match, lower normalized
      }
      if (better || best_idx < 0) {
        best_idx = static_cast<int>(i);
        best_dist = d;
        best_match_len = candidate.size();
      }
    };
    consider(nodes_[i].label);
    for (const auto& syn : nodes_[i].synonyms) consider(syn);
  }

  Link out;
  out.node_id = nodes_[best_idx].id;
  out.distance = best_dist;
  size_t denom = std::max(key.size(), best_match_len);
  out.normalized = denom == 0 ? 1.0 : static_cast<double>(best_dist) / denom;
  out.confident = out.normalized <= kLinkRejectThreshold;
  return out;
}

std::vector<std::string> OntologyGraph::default_domain_candidates() const {
  // Find a research-topic branch by id or label.
  int topic = -1;
  for (size_t i = 0; i < nodes_.size(); ++i) {
    std::string label = link_normalize(nodes_[i].label);
    std::string id = to_lower(nodes_[i].id);
    if (label == "research topic" || id == "researchtopic") {
      topic = static_cast<int>(i);
      break;
    }
  }
  std::vector<std::string> out;
  if (topic >= 0) {
    for (size_t i = 0; i < nodes_.size(); ++i) {
      if (depth_[i] != 3) continue;
      int cur = static_cast<int>(i);
      while (cur != -1 && cur != topic) cur = parent_[cur];
      if (cur == topic) out.push_back(nodes_[i].id);
    }
  }
  if (out.empty()) out = nodes_at_depth(3);
  if (out.empty()) out = children_[root_];
  if (out.empty()) out.push_back(nodes_[root_].id);
  std::sort(out.begin(), out.end());
  return out;
}

OntologyGraph load_style_ontology(std::string_view text) {
  OntologyGraph g = OntologyGraph::load(text);
  std::vector<std::string> leaves;
  for (const auto& id : g.node_ids())
    if (g.children(id).empty()) leaves.push_back(id);
  std::vector<std::string> expected;
  for (ResearchStyle s : kAllStyles) expected.push_back(to_string(s));
  std::sort(expected.begin(), expected.end());
  if (leaves != expected) {
    std::ostringstream msg;
    msg << "style ontology leaves must be exactly the seven research styles; got:";
    for (const auto& l : leaves) msg << " " << l;
    throw OntologyError(msg.str());
  }
  return g;
}

const std::string& style_node_id(ResearchStyle s) {
  static const std::array<std::string, 7> ids = [] {
    std::array<std::string, 7> a;
    for (size_t i = 0; i < kAllStyles.size(); ++i) a[i] = to_string(kAllStyles[i]);
    return a;
  }();
  return ids[static_cast<size_t>(s)];
}

}  // namespace tesim
