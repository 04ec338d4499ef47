#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "blend/errors.hpp"

namespace blend {

using SampleId = std::int64_t;

enum class Split { dev, test };

inline const char* to_string(Split s) { return s == Split::dev ? "dev" : "test"; }

struct Row {
    SampleId id;
    double score;

    friend bool operator==(const Row&, const Row&) = default;
};

// One split's worth of scores for one source, in a fixed row order.
// Ids are unique and every score is finite; both are enforced on
// construction. Immutable afterwards.
class PredictionTable {
public:
    PredictionTable(Split split, std::vector<Row> rows);

    Split split() const { return split_; }
    const std::vector<Row>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    std::vector<SampleId> ids() const;
    std::vector<double> scores() const;

    // True when every score lies in [0, 1].
    bool scores_in_unit_interval() const;

    // Same ids in the same order.
    bool same_id_sequence(const PredictionTable& other) const;

    friend bool operator==(const PredictionTable&, const PredictionTable&) = default;

private:
    Split split_;
    std::vector<Row> rows_;
};

// Binary ground truth, id -> {0,1}.
class LabelTable {
public:
    LabelTable() = default;
    explicit LabelTable(std::vector<std::pair<SampleId, int>> entries);

    std::size_t size() const { return lookup_.size(); }
    bool contains(SampleId id) const { return lookup_.count(id) != 0; }
    int at(SampleId id) const;

    std::size_t positives() const { return positives_; }
    std::size_t negatives() const { return lookup_.size() - positives_; }

    // Throws DegenerateLabelsError unless both classes are present.
    void require_both_classes() const;

private:
    std::unordered_map<SampleId, int> lookup_;
    std::size_t positives_ = 0;
};

// A named model with one (dev, test) table pair per training seed.
struct SeedPair {
    PredictionTable dev;
    PredictionTable test;
};

class ModelEntry {
public:
    ModelEntry(std::string name, std::vector<SeedPair> seeds);

    const std::string& name() const { return name_; }
    const std::vector<SeedPair>& seeds() const { return seeds_; }

private:
    std::string name_;
    std::vector<SeedPair> seeds_;
};

}  // namespace blend
