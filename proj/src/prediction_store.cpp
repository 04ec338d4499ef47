#include "blend/prediction_store.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace blend {

namespace {

// Strips one trailing '\r' so CRLF input does not poison the last field.
std::string_view trim_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

SampleId parse_id(std::string_view field, const std::string& where) {
    SampleId id = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), id);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw IngestError(where + ": bad id '" + std::string(field) + "'");
    }
    if (id < 0) {
        throw IngestError(where + ": negative id " + std::to_string(id));
    }
    return id;
}

double parse_score(std::string_view field, const std::string& where) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw IngestError(where + ": bad score '" + std::string(field) + "'");
    }
    return value;
}

std::string location(const std::filesystem::path& path, std::size_t line_no) {
    return path.string() + ":" + std::to_string(line_no);
}

}  // namespace

PredictionTable load_predictions(const std::filesystem::path& path, Split split,
                                 ScoreBounds bounds) {
    std::ifstream in(path);
    if (!in) {
        throw IngestError("cannot open prediction file " + path.string());
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw FormatError(path.string() + ": empty file, expected header id,proba,label");
    }
    if (trim_cr(line) != "id,proba,label") {
        throw FormatError(path.string() + ": bad header '" + line +
                          "', expected id,proba,label");
    }

    std::vector<Row> rows;
    std::unordered_set<SampleId> seen;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim_cr(line);
        if (view.empty()) continue;

        const auto where = location(path, line_no);
        const std::size_t c1 = view.find(',');
        if (c1 == std::string_view::npos) {
            throw IngestError(where + ": expected id,proba,label row");
        }
        const std::size_t c2 = view.find(',', c1 + 1);
        // The label column is optional on input; a third comma is malformed.
        const std::string_view id_field = view.substr(0, c1);
        const std::string_view score_field = (c2 == std::string_view::npos)
                                                 ? view.substr(c1 + 1)
                                                 : view.substr(c1 + 1, c2 - c1 - 1);
        if (c2 != std::string_view::npos &&
            view.find(',', c2 + 1) != std::string_view::npos) {
            throw IngestError(where + ": too many columns");
        }

        const SampleId id = parse_id(id_field, where);
        if (!seen.insert(id).second) {
            throw IngestError(where + ": duplicate id " + std::to_string(id));
        }
        const double score = parse_score(score_field, where);
        if (!std::isfinite(score)) {
            throw IngestError(where + ": non-finite score for id " + std::to_string(id));
        }
        if (bounds == ScoreBounds::probability && (score < 0.0 || score > 1.0)) {
            throw IngestError(where + ": score " + format_score(score) + " for id " +
                              std::to_string(id) + " outside [0,1]");
        }
        rows.push_back({id, score});
    }
    return PredictionTable(split, std::move(rows));
}

LabelTable load_labels(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IngestError("cannot open label file " + path.string());
    }

    std::vector<std::pair<SampleId, int>> entries;
    std::unordered_set<SampleId> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = trim_cr(line);
        if (view.empty()) continue;

        const auto where = location(path, line_no);
        nlohmann::json record;
        try {
            record = nlohmann::json::parse(view);
        } catch (const nlohmann::json::parse_error& e) {
            throw FormatError(where + ": " + e.what());
        }
        if (!record.is_object() || !record.contains("id") || !record.contains("label")) {
            throw FormatError(where + ": expected object with 'id' and 'label'");
        }
        if (!record["id"].is_number_integer() || !record["label"].is_number_integer()) {
            throw IngestError(where + ": 'id' and 'label' must be integers");
        }
        const SampleId id = record["id"].get<SampleId>();
        const int label = record["label"].get<int>();
        if (label != 0 && label != 1) {
            throw IngestError(where + ": label " + std::to_string(label) +
                              " for id " + std::to_string(id) + " not in {0,1}");
        }
        if (!seen.insert(id).second) {
            throw IngestError(where + ": duplicate id " + std::to_string(id));
        }
        entries.emplace_back(id, label);
    }
    return LabelTable(std::move(entries));
}

AlignResult align(const std::vector<PredictionTable>& tables) {
    if (tables.empty()) return {};

    std::unordered_map<SampleId, std::size_t> counts;
    for (const PredictionTable& table : tables) {
        for (const Row& row : table.rows()) counts[row.id] += 1;
    }

    std::vector<SampleId> common;
    std::vector<SampleId> dropped;
    for (const auto& [id, count] : counts) {
        (count == tables.size() ? common : dropped).push_back(id);
    }
    if (common.empty()) {
        throw AlignmentError("id intersection across " + std::to_string(tables.size()) +
                             " tables is empty");
    }
    std::sort(common.begin(), common.end());
    std::sort(dropped.begin(), dropped.end());

    AlignResult result;
    result.dropped_ids = std::move(dropped);
    result.tables.reserve(tables.size());
    for (const PredictionTable& table : tables) {
        std::unordered_map<SampleId, double> by_id;
        by_id.reserve(table.size());
        for (const Row& row : table.rows()) by_id.emplace(row.id, row.score);

        std::vector<Row> rows;
        rows.reserve(common.size());
        for (SampleId id : common) rows.push_back({id, by_id.at(id)});
        result.tables.emplace_back(table.split(), std::move(rows));
    }
    return result;
}

std::string format_score(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

void write_submission(const PredictionTable& table, const std::filesystem::path& path,
                      double threshold) {
    std::string body = "id,proba,label\n";
    for (const Row& row : table.rows()) {
        body += std::to_string(row.id);
        body += ',';
        body += format_score(row.score);
        body += ',';
        body += (row.score >= threshold) ? '1' : '0';
        body += '\n';
    }

    // Stage next to the target and rename so a failure never leaves a
    // partial submission behind.
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        out << body;
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw IoError("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw IoError("cannot move submission into place at " + path.string());
    }
}

}  // namespace blend
