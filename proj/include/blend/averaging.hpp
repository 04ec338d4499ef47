#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "blend/tables.hpp"

namespace blend {

// Mixing weights: non-negative, summing to 1 within 1e-12.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);

    static WeightVector uniform(std::size_t n);

    const std::vector<double>& values() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<double> weights_;
};

// Deterministic summation independent of any parallel evaluation order.
double pairwise_sum(std::span<const double> values);

// Per-id weighted arithmetic mean. All tables must share one id sequence
// (align first); weights default to uniform.
PredictionTable simple_average(const std::vector<PredictionTable>& tables,
                               const std::optional<WeightVector>& weights = std::nullopt);

// simple_average over the rank transform of each table.
PredictionTable rank_average(const std::vector<PredictionTable>& tables,
                             const std::optional<WeightVector>& weights = std::nullopt);

// Per-id weighted mean of score^exponent, exponent >= 1, scores in [0,1].
// The result is not renormalized.
PredictionTable power_average(const std::vector<PredictionTable>& tables, double exponent,
                              const std::optional<WeightVector>& weights = std::nullopt);

enum class SeedAverageMode {
    probability,  // plain mean of seed probabilities
    rank          // mean of rank-transformed seeds, for uncalibrated models
};

// Uniform mean over a model's seeds, dev and test separately.
std::pair<PredictionTable, PredictionTable> seed_average(
    const ModelEntry& entry, SeedAverageMode mode = SeedAverageMode::probability);

}  // namespace blend
