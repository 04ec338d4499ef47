#include "blend/averaging.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "blend/metrics.hpp"
#include "blend/prediction_store.hpp"

namespace blend {

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw ConfigError("weight vector is empty");
    }
    double sum = 0.0;
    for (double w : weights_) {
        if (!std::isfinite(w) || w < 0.0) {
            throw ConfigError("weight " + std::to_string(w) + " is not a finite non-negative real");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ConfigError("weights sum to " + std::to_string(sum) + ", expected 1");
    }
}

WeightVector WeightVector::uniform(std::size_t n) {
    if (n == 0) {
        throw ConfigError("uniform weights over zero tables");
    }
    return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 8) {
        double sum = 0.0;
        for (double v : values) sum += v;
        return sum;
    }
    const std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

const WeightVector& check_shape(const std::vector<PredictionTable>& tables,
                                const std::optional<WeightVector>& weights,
                                WeightVector& uniform_storage) {
    if (tables.empty()) {
        throw ConfigError("no tables to average");
    }
    for (std::size_t i = 1; i < tables.size(); ++i) {
        if (!tables[i].same_id_sequence(tables[0])) {
            throw AlignmentError("table " + std::to_string(i) +
                                 " id sequence differs; align tables first");
        }
    }
    if (weights) {
        if (weights->size() != tables.size()) {
            throw ConfigError("got " + std::to_string(weights->size()) + " weights for " +
                              std::to_string(tables.size()) + " tables");
        }
        return *weights;
    }
    uniform_storage = WeightVector::uniform(tables.size());
    return uniform_storage;
}

// Weighted per-id mean of fn(score). Summation within one id uses pairwise
// order so serial and parallel schedules agree.
PredictionTable combine(const std::vector<PredictionTable>& tables, const WeightVector& w,
                        const std::function<double(double)>& fn) {
    const std::size_t n = tables[0].size();
    std::vector<double> terms(tables.size());
    std::vector<Row> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t m = 0; m < tables.size(); ++m) {
            terms[m] = w[m] * fn(tables[m].rows()[i].score);
        }
        rows.push_back({tables[0].rows()[i].id, pairwise_sum(terms)});
    }
    return PredictionTable(tables[0].split(), std::move(rows));
}

}  // namespace

PredictionTable simple_average(const std::vector<PredictionTable>& tables,
                               const std::optional<WeightVector>& weights) {
    WeightVector uniform_storage = WeightVector::uniform(1);
    const WeightVector& w = check_shape(tables, weights, uniform_storage);
    return combine(tables, w, [](double s) { return s; });
}

PredictionTable rank_average(const std::vector<PredictionTable>& tables,
                             const std::optional<WeightVector>& weights) {
    WeightVector uniform_storage = WeightVector::uniform(1);
    const WeightVector& w = check_shape(tables, weights, uniform_storage);
    std::vector<PredictionTable> ranked;
    ranked.reserve(tables.size());
    for (const PredictionTable& table : tables) {
        ranked.push_back(rank_transform(table));
    }
    return combine(ranked, w, [](double s) { return s; });
}

PredictionTable power_average(const std::vector<PredictionTable>& tables, double exponent,
                              const std::optional<WeightVector>& weights) {
    if (!std::isfinite(exponent) || exponent < 1.0) {
        throw ConfigError("power exponent " + std::to_string(exponent) + " must be >= 1");
    }
    WeightVector uniform_storage = WeightVector::uniform(1);
    const WeightVector& w = check_shape(tables, weights, uniform_storage);
    for (std::size_t m = 0; m < tables.size(); ++m) {
        if (!tables[m].scores_in_unit_interval()) {
            throw DomainError("table " + std::to_string(m) +
                              " has scores outside [0,1]; power averaging needs probabilities");
        }
    }
    return combine(tables, w, [exponent](double s) { return std::pow(s, exponent); });
}

std::pair<PredictionTable, PredictionTable> seed_average(const ModelEntry& entry,
                                                         SeedAverageMode mode) {
    std::vector<PredictionTable> dev_tables;
    std::vector<PredictionTable> test_tables;
    dev_tables.reserve(entry.seeds().size());
    test_tables.reserve(entry.seeds().size());
    for (const SeedPair& seed : entry.seeds()) {
        dev_tables.push_back(seed.dev);
        test_tables.push_back(seed.test);
    }
    // Seeds within one model share an id set but not necessarily an order.
    std::vector<PredictionTable> dev_aligned = align(dev_tables).tables;
    std::vector<PredictionTable> test_aligned = align(test_tables).tables;
    if (mode == SeedAverageMode::rank) {
        return {rank_average(dev_aligned), rank_average(test_aligned)};
    }
    return {simple_average(dev_aligned), simple_average(test_aligned)};
}

}  // namespace blend
