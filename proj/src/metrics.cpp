#include "blend/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace blend {

namespace {

// Gathers parallel score/label arrays in table row order, checking that
// every id is labeled.
void gather(const PredictionTable& table, const LabelTable& labels,
            std::vector<double>& scores, std::vector<unsigned char>& truth) {
    scores.reserve(table.size());
    truth.reserve(table.size());
    for (const Row& row : table.rows()) {
        scores.push_back(row.score);
        truth.push_back(static_cast<unsigned char>(labels.at(row.id)));
    }
}

void require_both_classes(std::span<const unsigned char> labels) {
    const std::size_t pos = static_cast<std::size_t>(
        std::count(labels.begin(), labels.end(), static_cast<unsigned char>(1)));
    if (pos == 0 || pos == labels.size()) {
        throw DegenerateLabelsError("labels contain a single class");
    }
}

std::vector<std::size_t> ascending_order(std::span<const double> scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
    return order;
}

}  // namespace

double auroc_scores(std::span<const double> scores, std::span<const unsigned char> labels) {
    require_both_classes(labels);
    const std::vector<std::size_t> order = ascending_order(scores);

    // Walk tie groups in ascending score order. Positives in a group earn
    // full credit against negatives strictly below and half credit against
    // negatives inside the group.
    double credit = 0.0;
    double neg_below = 0.0;
    double pos_total = 0.0;
    double neg_total = 0.0;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        double group_pos = 0.0;
        double group_neg = 0.0;
        while (j < order.size() && scores[order[j]] == scores[order[i]]) {
            if (labels[order[j]]) {
                group_pos += 1.0;
            } else {
                group_neg += 1.0;
            }
            ++j;
        }
        credit += group_pos * neg_below + 0.5 * group_pos * group_neg;
        neg_below += group_neg;
        pos_total += group_pos;
        neg_total += group_neg;
        i = j;
    }
    return credit / (pos_total * neg_total);
}

double auroc(const PredictionTable& scores, const LabelTable& labels) {
    std::vector<double> s;
    std::vector<unsigned char> y;
    gather(scores, labels, s, y);
    return auroc_scores(s, y);
}

RocCurve roc_curve(const PredictionTable& table, const LabelTable& labels) {
    std::vector<double> scores;
    std::vector<unsigned char> truth;
    gather(table, labels, scores, truth);
    require_both_classes(truth);

    std::vector<std::size_t> order = ascending_order(scores);
    std::reverse(order.begin(), order.end());  // descending: sweep thresholds downwards

    const double pos_total = static_cast<double>(
        std::count(truth.begin(), truth.end(), static_cast<unsigned char>(1)));
    const double neg_total = static_cast<double>(truth.size()) - pos_total;

    RocCurve curve;
    curve.points.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});

    double tp = 0.0;
    double fp = 0.0;
    std::size_t i = 0;
    while (i < order.size()) {
        const double threshold = scores[order[i]];
        while (i < order.size() && scores[order[i]] == threshold) {
            if (truth[order[i]]) {
                tp += 1.0;
            } else {
                fp += 1.0;
            }
            ++i;
        }
        curve.points.push_back({fp / neg_total, tp / pos_total, threshold});
    }
    curve.points.push_back({1.0, 1.0, -std::numeric_limits<double>::infinity()});
    return curve;
}

double RocCurve::trapezoid_area() const {
    double area = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        area += (points[i].fpr - points[i - 1].fpr) * 0.5 *
                (points[i].tpr + points[i - 1].tpr);
    }
    return area;
}

double accuracy(const PredictionTable& scores, const LabelTable& labels, double threshold) {
    if (scores.empty()) {
        throw EmptyInputError("accuracy of an empty table");
    }
    std::size_t correct = 0;
    for (const Row& row : scores.rows()) {
        const int predicted = row.score >= threshold ? 1 : 0;
        if (predicted == labels.at(row.id)) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(scores.size());
}

std::vector<double> rank_transform_scores(std::span<const double> scores) {
    const std::size_t n = scores.size();
    if (n == 0) {
        throw EmptyInputError("rank transform of an empty table");
    }
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = 0.5;
        return out;
    }

    const std::vector<std::size_t> order = ascending_order(scores);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && scores[order[j]] == scores[order[i]]) ++j;
        // 1-based positions i+1 .. j averaged, then scaled onto [0, 1].
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);
        const double value = (midrank - 1.0) / static_cast<double>(n - 1);
        for (std::size_t k = i; k < j; ++k) out[order[k]] = value;
        i = j;
    }
    return out;
}

PredictionTable rank_transform(const PredictionTable& table) {
    const std::vector<double> ranked = rank_transform_scores(table.scores());
    std::vector<Row> rows;
    rows.reserve(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        rows.push_back({table.rows()[i].id, ranked[i]});
    }
    return PredictionTable(table.split(), std::move(rows));
}

}  // namespace blend
