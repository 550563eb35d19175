#include "tesim/termsim.hpp"

#include <algorithm>

#include "tesim/errors.hpp"
#include "tesim/text_normalize.hpp"

namespace tesim {

double cosine_similarity(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  if (u.size() != v.size())
    throw EvalError("cosine: dimension mismatch (" + std::to_string(u.size()) + " vs " +
                    std::to_string(v.size()) + ")");
  double nu = u.norm(), nv = v.norm();
  if (nu == 0.0 || nv == 0.0)
    throw EvalError("cosine: zero vector (treat as out-of-vocabulary)");
  return u.dot(v) / (nu * nv);
}

double cosine_score(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  return std::clamp(cosine_similarity(u, v), 0.0, 1.0);
}

double cosine_score(const TermVector& u, const TermVector& v) {
  return cosine_score(u.components, v.components);
}

std::optional<std::string> OntologyBackend::resolve(const Terminology& t) const {
  if (t.concept_id && graph_->contains(*t.concept_id)) return t.concept_id;
  std::string key = link_normalize(t.surface);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = link_cache_.find(key);
    if (it != link_cache_.end())
      return it->second.confident ? std::optional(it->second.node_id) : std::nullopt;
  }
  OntologyGraph::Link link = graph_->link(t.surface);
  std::lock_guard<std::mutex> lock(cache_mutex_);
  link_cache_.emplace(std::move(key), link);
  return link.confident ? std::optional(link.node_id) : std::nullopt;
}

double OntologyBackend::score(const Terminology& a, const Terminology& b) const {
  auto na = resolve(a), nb = resolve(b);
  if (na && nb) return graph_->wu_palmer(*na, *nb);
  return link_normalize(a.surface) == link_normalize(b.surface) ? 1.0 : 0.0;
}

std::optional<Eigen::VectorXd> VectorSpace::find(std::string_view term) const {
  std::string key = link_normalize(term);
  auto it = vectors.find(key);
  if (it != vectors.end()) return it->second;

  Eigen::VectorXd sum = Eigen::VectorXd::Zero(k);
  int hits = 0;
  for (const auto& word : tokenize_words(key)) {
    auto w = vectors.find(word);
    if (w != vectors.end()) {
      sum += w->second;
      ++hits;
    }
  }
  if (hits == 0) return std::nullopt;
  return Eigen::VectorXd(sum / hits);
}

double VectorBackend::score(const Terminology& a, const Terminology& b) const {
  auto va = space_.find(a.surface);
  auto vb = space_.find(b.surface);
  if (va && vb && va->norm() > 0.0 && vb->norm() > 0.0)
    return cosine_score(*va, *vb);
  return link_normalize(a.surface) == link_normalize(b.surface) ? 1.0 : 0.0;
}

double set_similarity(std::span<const Terminology> a, std::span<const Terminology> b,
                      const TermSimBackend& backend) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;

  Eigen::MatrixXd scores(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) scores(i, j) = backend.score(a[i], b[j]);

  double total = scores.rowwise().maxCoeff().sum() + scores.colwise().maxCoeff().sum();
  return total / static_cast<double>(a.size() + b.size());
}

}  // namespace tesim
