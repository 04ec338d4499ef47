#include "blend/tables.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace blend {

PredictionTable::PredictionTable(Split split, std::vector<Row> rows)
    : split_(split), rows_(std::move(rows)) {
    std::unordered_set<SampleId> seen;
    seen.reserve(rows_.size());
    for (const Row& row : rows_) {
        if (row.id < 0) {
            throw IngestError("negative sample id " + std::to_string(row.id));
        }
        if (!seen.insert(row.id).second) {
            throw IngestError("duplicate id " + std::to_string(row.id));
        }
        if (!std::isfinite(row.score)) {
            throw IngestError("non-finite score at id " + std::to_string(row.id));
        }
    }
}

std::vector<SampleId> PredictionTable::ids() const {
    std::vector<SampleId> out;
    out.reserve(rows_.size());
    for (const Row& row : rows_) out.push_back(row.id);
    return out;
}

std::vector<double> PredictionTable::scores() const {
    std::vector<double> out;
    out.reserve(rows_.size());
    for (const Row& row : rows_) out.push_back(row.score);
    return out;
}

bool PredictionTable::scores_in_unit_interval() const {
    return std::all_of(rows_.begin(), rows_.end(),
                       [](const Row& r) { return r.score >= 0.0 && r.score <= 1.0; });
}

bool PredictionTable::same_id_sequence(const PredictionTable& other) const {
    if (rows_.size() != other.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].id != other.rows_[i].id) return false;
    }
    return true;
}

LabelTable::LabelTable(std::vector<std::pair<SampleId, int>> entries) {
    lookup_.reserve(entries.size());
    for (const auto& [id, label] : entries) {
        if (label != 0 && label != 1) {
            throw IngestError("label for id " + std::to_string(id) +
                              " is " + std::to_string(label) + ", expected 0 or 1");
        }
        if (!lookup_.emplace(id, label).second) {
            throw IngestError("duplicate label id " + std::to_string(id));
        }
        positives_ += static_cast<std::size_t>(label);
    }
}

int LabelTable::at(SampleId id) const {
    auto it = lookup_.find(id);
    if (it == lookup_.end()) {
        throw AlignmentError("no label for id " + std::to_string(id));
    }
    return it->second;
}

void LabelTable::require_both_classes() const {
    if (positives() == 0 || negatives() == 0) {
        throw DegenerateLabelsError("labels contain a single class (" +
                                    std::to_string(positives()) + " positives of " +
                                    std::to_string(size()) + ")");
    }
}

namespace {

std::vector<SampleId> sorted_ids(const PredictionTable& table) {
    std::vector<SampleId> ids = table.ids();
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

ModelEntry::ModelEntry(std::string name, std::vector<SeedPair> seeds)
    : name_(std::move(name)), seeds_(std::move(seeds)) {
    if (seeds_.empty()) {
        throw ConfigError("model '" + name_ + "' has no seeds");
    }
    const auto dev_ids = sorted_ids(seeds_[0].dev);
    const auto test_ids = sorted_ids(seeds_[0].test);
    for (std::size_t i = 1; i < seeds_.size(); ++i) {
        if (sorted_ids(seeds_[i].dev) != dev_ids) {
            throw AlignmentError("model '" + name_ + "': dev id sets differ across seeds");
        }
        if (sorted_ids(seeds_[i].test) != test_ids) {
            throw AlignmentError("model '" + name_ + "': test id sets differ across seeds");
        }
    }
}

}  // namespace blend
