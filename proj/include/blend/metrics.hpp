#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blend/tables.hpp"

namespace blend {

// One point per classification threshold; a sample is called positive when
// its score >= threshold. The first point is (0,0) (threshold above every
// score) and the last is (1,1) (threshold below every score); fpr and tpr
// are non-decreasing along the sequence.
struct RocPoint {
    double fpr;
    double tpr;
    double threshold;
};

struct RocCurve {
    std::vector<RocPoint> points;

    // Trapezoidal area under the curve; equals auroc() exactly.
    double trapezoid_area() const;
};

struct MetricRow {
    std::string name;
    double dev_auroc;
    std::optional<double> test_auroc;
    std::optional<double> accuracy;
};

struct MetricReport {
    std::vector<MetricRow> rows;
};

// Probability that a uniformly random positive outscores a uniformly random
// negative, ties counted half (the Mann-Whitney statistic). Every score id
// must have a label; labels must contain both classes.
double auroc(const PredictionTable& scores, const LabelTable& labels);

// Mann-Whitney AUROC over parallel score/label arrays. The table overload
// and the optimizer both funnel through this.
double auroc_scores(std::span<const double> scores, std::span<const unsigned char> labels);

RocCurve roc_curve(const PredictionTable& scores, const LabelTable& labels);

// Fraction of ids where (score >= threshold) equals the label. The
// threshold is inclusive: a score exactly at it is classified positive.
double accuracy(const PredictionTable& scores, const LabelTable& labels,
                double threshold = 0.5);

// Replaces each score with (midrank - 1) / (n - 1); tied values share the
// mean of their positions. A single-row table maps to 0.5. Row order is
// preserved. Idempotent, and invariant under strictly increasing transforms
// of the input scores.
PredictionTable rank_transform(const PredictionTable& table);

std::vector<double> rank_transform_scores(std::span<const double> scores);

}  // namespace blend
