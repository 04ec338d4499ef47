#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "blend/tables.hpp"

namespace blend {

enum class ScoreBounds {
    probability,  // scores must lie in [0, 1]
    raw           // any finite real (e.g. logits)
};

// Reads a prediction CSV with header `id,proba,label`. The label column is
// ignored on input and may be empty. Row order is preserved.
PredictionTable load_predictions(const std::filesystem::path& path, Split split,
                                 ScoreBounds bounds = ScoreBounds::probability);

// Reads line-delimited JSON records with integer fields `id` and `label`;
// other fields are ignored.
LabelTable load_labels(const std::filesystem::path& path);

struct AlignResult {
    std::vector<PredictionTable> tables;   // restricted to the common ids, ascending id
    std::vector<SampleId> dropped_ids;     // ids missing from at least one input, ascending
};

// Restricts all tables to the intersection of their id sets and reorders
// rows to ascending id. Dropped ids are reported, never silently discarded.
AlignResult align(const std::vector<PredictionTable>& tables);

// Writes `id,proba,label` rows in table order. Scores are rendered as the
// shortest decimal that round-trips the double; the label column is
// 1 when proba >= threshold, else 0. Rows are LF-terminated. The file is
// written atomically: either the complete file appears or nothing does.
void write_submission(const PredictionTable& table, const std::filesystem::path& path,
                      double threshold = 0.5);

// Shortest round-trip decimal rendering used by write_submission.
std::string format_score(double value);

}  // namespace blend
