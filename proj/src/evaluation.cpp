#include "tesim/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include "tesim/errors.hpp"
#include "tesim/text_normalize.hpp"

namespace tesim {

PairLoadResult load_pairs(std::string_view text) {
  PairLoadResult out;
  std::set<std::pair<std::string, std::string>> seen;
  size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line(text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos));
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (collapse_whitespace(line).empty()) continue;

    std::vector<std::string> fields;
    size_t fpos = 0;
    while (fpos <= line.size()) {
      size_t tab = line.find('\t', fpos);
      if (tab == std::string::npos) {
        fields.push_back(collapse_whitespace(line.substr(fpos)));
        break;
      }
      fields.push_back(collapse_whitespace(line.substr(fpos, tab - fpos)));
      fpos = tab + 1;
    }
    if (fields.size() != 4)
      throw ParseError("pairs line " + std::to_string(line_no) +
                       ": expected `did_a <TAB> did_b <TAB> label2 <TAB> label5`");

    AnnotatedPair p;
    p.did_a = fields[0];
    p.did_b = fields[1];
    try {
      p.label2 = std::stoi(fields[2]);
      p.label5 = std::stoi(fields[3]);
    } catch (...) {
      throw ParseError("pairs line " + std::to_string(line_no) + ": non-numeric label");
    }
    if (p.did_a.empty() || p.did_b.empty())
      throw ValidationError("pairs line " + std::to_string(line_no) + ": empty document id");
    if (p.label2 != 0 && p.label2 != 1)
      throw ValidationError("pairs line " + std::to_string(line_no) +
                            ": label2 must be 0 or 1, got " + fields[2]);
    if (p.label5 < 1 || p.label5 > 5)
      throw ValidationError("pairs line " + std::to_string(line_no) +
                            ": label5 must be in [1,5], got " + fields[3]);

    auto key = std::minmax(p.did_a, p.did_b);
    if (!seen.insert({key.first, key.second}).second) {
      out.warnings.push_back("line " + std::to_string(line_no) + ": duplicate pair " +
                             p.did_a + "/" + p.did_b + " ignored (first kept)");
      continue;
    }
    out.pairs.push_back(std::move(p));
  }
  return out;
}

PairLoadResult load_pairs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open pairs file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_pairs(buf.str());
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size())
    throw EvalError("pearson: length mismatch (" + std::to_string(x.size()) + " vs " +
                    std::to_string(y.size()) + ")");
  if (x.size() < 2) throw EvalError("pearson: need at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double cov = 0.0, vx = 0.0, vy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    double dx = x[i] - mx, dy = y[i] - my;
    cov += dx * dy;
    vx += dx * dx;
    vy += dy * dy;
  }
  if (vx == 0.0 || vy == 0.0)
    throw EvalError("pearson: undefined for a constant sequence");
  return cov / std::sqrt(vx * vy);
}

ConfusionCounts confusion_at_threshold(std::span<const double> scores,
                                       std::span<const int> labels2, double threshold) {
  if (scores.size() != labels2.size())
    throw EvalError("confusion: scores/labels length mismatch");
  ConfusionCounts c;
  for (size_t i = 0; i < scores.size(); ++i) {
    bool predicted = scores[i] > threshold;
    bool actual = labels2[i] != 0;
    if (predicted && actual) ++c.tp;
    else if (predicted && !actual) ++c.fp;
    else if (!predicted && actual) ++c.fn;
    else ++c.tn;
  }
  return c;
}

double accuracy(const ConfusionCounts& c) {
  if (c.total() == 0) throw EvalError("accuracy: no evaluated pairs");
  return static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
}

double f_score(const ConfusionCounts& c, double beta) {
  if (c.tp + c.fp == 0)
    throw EvalError("f_score incalculable: precision undefined (tp+fp=0)");
  if (c.tp + c.fn == 0)
    throw EvalError("f_score incalculable: recall undefined (tp+fn=0)");
  double p = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  double r = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  double b2 = beta * beta;
  double denom = b2 * p + r;
  if (denom == 0.0) return 0.0;  // p = r = 0
  return (1.0 + b2) * p * r / denom;
}

std::vector<double> default_thresholds() {
  std::vector<double> out;
  for (int i = 1; i <= 19; ++i) out.push_back(i * 0.05);
  return out;
}

SweepResult threshold_sweep(std::span<const double> scores, std::span<const int> labels2,
                            std::span<const double> thresholds) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end()))
    throw EvalError("threshold_sweep: thresholds must be sorted ascending");
  SweepResult out;
  bool have_any = false;
  for (double t : thresholds) {
    ConfusionCounts c = confusion_at_threshold(scores, labels2, t);
    SweepRow row;
    row.threshold = t;
    row.accuracy = accuracy(c);
    try {
      row.f1 = f_score(c);
    } catch (const EvalError&) {
      row.f1 = std::nullopt;
    }
    if (!have_any || row.accuracy > out.best_accuracy) out.best_accuracy = row.accuracy;
    have_any = true;
    if (row.f1 && (!out.best_f1 || *row.f1 > *out.best_f1)) out.best_f1 = row.f1;
    out.rows.push_back(row);
  }
  return out;
}

void write_report(std::ostream& out, const SweepResult& sweep,
                  std::optional<double> pearson5, std::optional<double> pearson2) {
  char buf[96];
  out << "threshold,accuracy,f1\n";
  for (const auto& row : sweep.rows) {
    if (row.f1)
      std::snprintf(buf, sizeof(buf), "%.2f,%.4f,%.4f\n", row.threshold, row.accuracy,
                    *row.f1);
    else
      std::snprintf(buf, sizeof(buf), "%.2f,%.4f,incalculable\n", row.threshold,
                    row.accuracy);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), "best_accuracy=%.4f\n", sweep.best_accuracy);
  out << buf;
  if (sweep.best_f1) {
    std::snprintf(buf, sizeof(buf), "best_f1=%.4f\n", *sweep.best_f1);
    out << buf;
  } else {
    out << "best_f1=incalculable\n";
  }
  if (pearson5) {
    std::snprintf(buf, sizeof(buf), "pearson_5level=%.6f\n", *pearson5);
    out << buf;
  } else {
    out << "pearson_5level=undefined\n";
  }
  if (pearson2) {
    std::snprintf(buf, sizeof(buf), "pearson_2level=%.6f\n", *pearson2);
    out << buf;
  } else {
    out << "pearson_2level=undefined\n";
  }
}

}  // namespace tesim
