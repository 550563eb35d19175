#pragma once

#include <Eigen/Dense>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>

#include "tesim/ontology.hpp"
#include "tesim/topic_event.hpp"

namespace tesim {

struct TermVector {
  std::string term;
  Eigen::VectorXd components;
};

// Raw cosine in [-1,1]. Throws EvalError on dimension mismatch or a zero
// vector (out-of-vocabulary handling belongs to the backend).
double cosine_similarity(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

// Cosine clamped to [0,1] so it composes with non-negative element weights.
double cosine_score(const Eigen::VectorXd& u, const Eigen::VectorXd& v);
double cosine_score(const TermVector& u, const TermVector& v);

// Interchangeable terminology scorer. Implementations are symmetric,
// return values in [0,1], and score any term they know against itself as 1.
class TermSimBackend {
 public:
  virtual ~TermSimBackend() = default;
  virtual double score(const Terminology& a, const Terminology& b) const = 0;
  virtual std::string name() const = 0;
};

// Concept-tree backend: link both terms, then Wu-Palmer on the linked
// nodes. A term with a preset concept_id is trusted as already linked.
// If either link is low-confidence the score falls back to exact surface
// comparison (1 when the normalized surfaces are equal, else 0).
class OntologyBackend final : public TermSimBackend {
 public:
  explicit OntologyBackend(const OntologyGraph& graph) : graph_(&graph) {}
  double score(const Terminology& a, const Terminology& b) const override;
  std::string name() const override { return "onto"; }

 private:
  std::optional<std::string> resolve(const Terminology& t) const;

  const OntologyGraph* graph_;
  mutable std::unordered_map<std::string, OntologyGraph::Link> link_cache_;
  mutable std::mutex cache_mutex_;
};

// Dense word/term vectors keyed by whitespace-free tokens or full terms.
struct VectorSpace {
  int k = 0;
  std::unordered_map<std::string, Eigen::VectorXd> vectors;

  // Full-term lookup first; otherwise the centroid of in-vocabulary word
  // vectors of the term's tokens. Empty result means out-of-vocabulary.
  std::optional<Eigen::VectorXd> find(std::string_view term) const;
};

class VectorBackend final : public TermSimBackend {
 public:
  explicit VectorBackend(VectorSpace space, std::string name = "vectors")
      : space_(std::move(space)), name_(std::move(name)) {}
  double score(const Terminology& a, const Terminology& b) const override;
  std::string name() const override { return name_; }
  const VectorSpace& space() const { return space_; }

 private:
  VectorSpace space_;
  std::string name_;
};

// Symmetric greedy alignment over two terminology collections:
// (sum_a max_b s + sum_b max_a s) / (|A|+|B|). Both empty -> 1 (vacuous
// agreement); exactly one empty -> 0.
double set_similarity(std::span<const Terminology> a, std::span<const Terminology> b,
                      const TermSimBackend& backend);

}  // namespace tesim
