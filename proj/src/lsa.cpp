#include "tesim/lsa.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tesim/errors.hpp"

namespace tesim {

TruncatedSvd truncated_svd(const Eigen::MatrixXd& m, int k) {
  int max_rank = static_cast<int>(std::min(m.rows(), m.cols()));
  if (k < 1 || k > max_rank)
    throw EvalError("truncated_svd: rank " + std::to_string(k) +
                    " out of range [1," + std::to_string(max_rank) + "]");

  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  TruncatedSvd out;
  out.u = svd.matrixU().leftCols(k);
  out.v = svd.matrixV().leftCols(k);
  out.singular_values = svd.singularValues().head(k);

  for (int j = 0; j < k; ++j) {
    int arg_max = 0;
    out.u.col(j).cwiseAbs().maxCoeff(&arg_max);
    if (out.u(arg_max, j) < 0.0) {
      out.u.col(j) = -out.u.col(j);
      out.v.col(j) = -out.v.col(j);
    }
  }
  return out;
}

LsaSpace build_lsa_space(const std::vector<std::vector<std::string>>& docs, int k,
                         MatrixWeighting weighting, std::vector<std::string> doc_ids) {
  if (docs.empty()) throw EvalError("build_lsa_space: no documents");
  if (!doc_ids.empty() && doc_ids.size() != docs.size())
    throw EvalError("build_lsa_space: doc_ids/docs size mismatch");

  LsaSpace space;
  if (doc_ids.empty()) {
    for (size_t i = 0; i < docs.size(); ++i) doc_ids.push_back("d" + std::to_string(i));
  }
  space.doc_ids = std::move(doc_ids);

  // Sorted vocabulary keeps the row order independent of token order.
  for (const auto& doc : docs)
    for (const auto& tok : doc) space.vocabulary.emplace(tok, 0);
  if (space.vocabulary.empty()) throw EvalError("build_lsa_space: empty vocabulary");
  int row = 0;
  for (auto& [term, index] : space.vocabulary) index = row++;

  const int n_terms = static_cast<int>(space.vocabulary.size());
  const int n_docs = static_cast<int>(docs.size());
  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(n_terms, n_docs);
  for (int d = 0; d < n_docs; ++d)
    for (const auto& tok : docs[d]) counts(space.vocabulary.at(tok), d) += 1.0;

  Eigen::MatrixXd weighted = counts;
  if (weighting == MatrixWeighting::TfIdf) {
    Eigen::VectorXd idf(n_terms);
    for (int t = 0; t < n_terms; ++t) {
      int df = 0;
      for (int d = 0; d < n_docs; ++d)
        if (counts(t, d) > 0.0) ++df;
      idf(t) = std::log(1.0 + static_cast<double>(n_docs) / df);
    }
    for (int t = 0; t < n_terms; ++t)
      for (int d = 0; d < n_docs; ++d)
        weighted(t, d) = std::log1p(counts(t, d)) * idf(t);
  }

  int max_rank = std::min(n_terms, n_docs);
  if (k < 1 || k > max_rank)
    throw EvalError("build_lsa_space: rank " + std::to_string(k) + " out of range [1," +
                    std::to_string(max_rank) + "]");

  TruncatedSvd svd = truncated_svd(weighted, k);
  space.k = k;
  space.term_vectors = svd.u * svd.singular_values.asDiagonal();
  space.doc_vectors = svd.v * svd.singular_values.asDiagonal();
  return space;
}

VectorSpace to_vector_space(const LsaSpace& space) {
  VectorSpace out;
  out.k = space.k;
  for (const auto& [term, row] : space.vocabulary)
    out.vectors.emplace(term, space.term_vectors.row(row).transpose());
  return out;
}

void save_vector_space(const VectorSpace& space, std::ostream& out) {
  out << space.k << "\n";
  std::map<std::string, const Eigen::VectorXd*> sorted;
  for (const auto& [term, vec] : space.vectors) sorted.emplace(term, &vec);
  char buf[64];
  for (const auto& [term, vec] : sorted) {
    out << term;
    for (int i = 0; i < vec->size(); ++i) {
      std::snprintf(buf, sizeof(buf), " %.17g", (*vec)(i));
      out << buf;
    }
    out << "\n";
  }
}

VectorSpace load_vector_space(std::istream& in) {
  VectorSpace space;
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("vector file: missing dimension header");
  try {
    space.k = std::stoi(line);
  } catch (...) {
    throw ParseError("vector file: bad dimension header \"" + line + "\"");
  }
  if (space.k < 1) throw ParseError("vector file: dimension must be >= 1");

  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string term;
    ls >> term;
    Eigen::VectorXd vec(space.k);
    for (int i = 0; i < space.k; ++i) {
      if (!(ls >> vec(i)))
        throw ParseError("vector file line " + std::to_string(line_no) +
                         ": expected " + std::to_string(space.k) + " components");
    }
    space.vectors[term] = std::move(vec);
  }
  return space;
}

VectorSpace load_vector_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open vector file: " + path);
  return load_vector_space(in);
}

}  // namespace tesim
