#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tesim {

struct AnnotatedPair {
  std::string did_a;
  std::string did_b;
  int label2 = 0;  // 0 dissimilar, 1 similar
  int label5 = 1;  // 1..5 similarity degree
};

struct PairLoadResult {
  std::vector<AnnotatedPair> pairs;
  std::vector<std::string> warnings;  // duplicate pairs, first kept
};

// `did_a <TAB> did_b <TAB> label2 <TAB> label5` per line, `#` comments.
// Throws ParseError/ValidationError with the line number on bad rows.
PairLoadResult load_pairs(std::string_view text);
PairLoadResult load_pairs_file(const std::string& path);

struct ConfusionCounts {
  long tp = 0, tn = 0, fp = 0, fn = 0;
  long total() const { return tp + tn + fp + fn; }
};

// Population Pearson correlation. Throws EvalError on length mismatch,
// fewer than two points, or a constant sequence.
double pearson(std::span<const double> x, std::span<const double> y);

// Predict similar iff score > threshold (strict).
ConfusionCounts confusion_at_threshold(std::span<const double> scores,
                                       std::span<const int> labels2, double threshold);

double accuracy(const ConfusionCounts& c);  // throws EvalError on empty counts

// F_beta; beta=1 is the harmonic mean 2PR/(P+R). Throws EvalError
// ("incalculable") when precision or recall is undefined.
double f_score(const ConfusionCounts& c, double beta = 1.0);

struct SweepRow {
  double threshold = 0.0;
  double accuracy = 0.0;
  std::optional<double> f1;  // empty when incalculable at this threshold
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double best_accuracy = 0.0;
  std::optional<double> best_f1;
};

// 0.05, 0.10, ..., 0.95.
std::vector<double> default_thresholds();

// One row per threshold (thresholds must be sorted ascending); incalculable
// F1 is recorded per-row without aborting the sweep.
SweepResult threshold_sweep(std::span<const double> scores, std::span<const int> labels2,
                            std::span<const double> thresholds);

// CSV report: header `threshold,accuracy,f1`, one row per threshold, then
// summary lines best_accuracy=, best_f1=, pearson_5level=, pearson_2level=.
void write_report(std::ostream& out, const SweepResult& sweep,
                  std::optional<double> pearson5, std::optional<double> pearson2);

}  // namespace tesim
