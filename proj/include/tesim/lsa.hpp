#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tesim/termsim.hpp"

namespace tesim {

struct TruncatedSvd {
  Eigen::MatrixXd u;                // m x k
  Eigen::VectorXd singular_values;  // k
  Eigen::MatrixXd v;                // n x k
};

// Rank-k truncation of a full SVD, singular values descending. Sign
// convention: the largest-magnitude entry of each left singular vector is
// made non-negative, so results are deterministic for a fixed input.
TruncatedSvd truncated_svd(const Eigen::MatrixXd& m, int k);

enum class MatrixWeighting {
  TfIdf,      // log(1+tf) * log(1 + #docs/df)
  RawCounts,
};

struct LsaSpace {
  std::map<std::string, int> vocabulary;  // term -> row index
  std::vector<std::string> doc_ids;
  int k = 0;
  Eigen::MatrixXd term_vectors;  // |V| x k, rows are U_k * Sigma_k
  Eigen::MatrixXd doc_vectors;   // |D| x k, rows are V_k * Sigma_k
};

// Builds the weighted term-by-document matrix over `docs` (token lists)
// and factorizes it at rank k. Deterministic for a fixed document order:
// vocabulary rows are sorted terms. Throws EvalError when k is out of
// range (k must satisfy 1 <= k <= min(|V|, #docs)) or the vocabulary is
// empty.
LsaSpace build_lsa_space(const std::vector<std::vector<std::string>>& docs, int k,
                         MatrixWeighting weighting = MatrixWeighting::TfIdf,
                         std::vector<std::string> doc_ids = {});

VectorSpace to_vector_space(const LsaSpace& space);

// Vector file format: first line `k`, then `term c1 c2 ... ck` per line.
// Terms are whitespace-free tokens. Doubles are written round-trippable.
void save_vector_space(const VectorSpace& space, std::ostream& out);
VectorSpace load_vector_space(std::istream& in);
VectorSpace load_vector_file(const std::string& path);

}  // namespace tesim
