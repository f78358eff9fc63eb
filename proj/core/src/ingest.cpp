#include "electionpulse/ingest.hpp"

#include "electionpulse/common.hpp"
#include "electionpulse/csv.hpp"
#include "electionpulse/ini.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace electionpulse::ingest {

namespace {

using nlohmann::json;

const json* resolve(const json& root, std::string_view path) {
    const json* node = &root;
    for (const auto& part : ini::split_list(path, '.')) {
        if (!node->is_object()) return nullptr;
        auto it = node->find(part);
        if (it == node->end()) return nullptr;
        node = &*it;
    }
    return node;
}

const json* first_present(const json& root, const std::vector<std::string>& paths) {
    for (const auto& p : paths) {
        const json* v = resolve(root, p);
        if (v && !v->is_null()) return v;
    }
    return nullptr;
}

std::optional<std::string> as_string(const json* v) {
    if (!v) return std::nullopt;
    if (v->is_string()) return v->get<std::string>();
    if (v->is_number_unsigned()) return std::to_string(v->get<std::uint64_t>());
    if (v->is_number_integer()) return std::to_string(v->get<std::int64_t>());
    return std::nullopt;
}

void skip(ParseReport& report, const char* reason) {
    ++report.skipped;
    ++report.skipped_by_reason[reason];
}

}  // namespace

FieldMap FieldMap::load(const std::filesystem::path& path) {
    const auto doc = ini::Document::load(path);
    FieldMap map;
    std::vector<std::string> errors;
    const auto* section = doc.find("fields");
    if (!section) throw ConfigError(path.string() + ": missing [fields] section");
    for (const auto& e : section->entries) {
        auto paths = ini::split_list(e.value, '|');
        std::vector<std::string>* target = nullptr;
        if (e.key == "id") target = &map.id;
        else if (e.key == "created_at") target = &map.created_at;
        else if (e.key == "text") target = &map.text;
        else if (e.key == "author") target = &map.author;
        else if (e.key == "retweet") target = &map.retweet;
        const auto where = path.string() + ":" + std::to_string(e.line) + ": ";
        if (!target) {
            errors.push_back(where + "unknown field '" + e.key + "'");
        } else if (paths.empty()) {
            errors.push_back(where + "field '" + e.key + "' has no paths");
        } else {
            *target = std::move(paths);
        }
    }
    if (!errors.empty()) {
        std::string msg;
        for (const auto& e : errors) msg += (msg.empty() ? "" : "\n") + e;
        throw ConfigError(msg);
    }
    return map;
}

ParseResult parse_tweet_stream(std::istream& source, UtcOffset offset, const FieldMap& fields) {
    ParseResult result;
    auto& report = result.report;
    std::unordered_set<std::string> seen;
    std::string line;
    while (std::getline(source, line)) {
        ++report.lines_read;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (obj.is_discarded() || !obj.is_object()) {
            skip(report, "malformed_json");
            continue;
        }
        const auto id = as_string(first_present(obj, fields.id));
        const json* created = first_present(obj, fields.created_at);
        const json* text = first_present(obj, fields.text);
        if (!id || id->empty() || !created || !created->is_string() || !text || !text->is_string()) {
            skip(report, "missing_field");
            continue;
        }
        const auto instant = parse_timestamp(created->get<std::string>());
        if (!instant) {
            skip(report, "bad_timestamp");
            continue;
        }
        auto body = text->get<std::string>();
        if (ini::trim(body).empty()) {
            skip(report, "empty_text");
            continue;
        }
        if (body.size() > kMaxTextBytes) {
            skip(report, "text_too_long");
            continue;
        }
        if (!seen.insert(*id).second) {
            skip(report, "duplicate_id");
            continue;
        }
        TweetRecord rec;
        rec.id = *id;
        rec.created_at = LocalTime{*instant, offset};
        rec.author = as_string(first_present(obj, fields.author)).value_or("");
        rec.is_retweet = first_present(obj, fields.retweet) != nullptr ||
                         ini::trim(body).starts_with("RT @");
        rec.text = std::move(body);
        result.records.push_back(std::move(rec));
        ++report.records;
    }
    if (source.bad()) throw IoError("read error in tweet stream");
    return result;
}

ParseResult parse_tweet_file(const std::filesystem::path& path, UtcOffset offset,
                             const FieldMap& fields) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open tweet stream '" + path.string() + "'");
    return parse_tweet_stream(in, offset, fields);
}

DatasetStats dataset_stats(std::span<const TweetRecord> records,
                           std::span<const ProcessedTweet> kept, const actors::ActorSet& groups) {
    DatasetStats stats;
    stats.total_raw = records.size();
    stats.total_kept = kept.size();
    for (const auto& a : groups.actors()) stats.per_group[a.id] = {};

    std::unordered_set<std::string_view> ids;
    for (const auto& r : records) {
        ids.insert(r.id);
        for (const auto& id : actors::match_text(r.text, groups)) ++stats.per_group[id].raw;
    }
    for (const auto& t : kept) {
        if (!ids.contains(t.record_id))
            throw ConsistencyError("kept tweet '" + t.record_id + "' has no source record");
        const auto matched = actors::match_actors(t, groups);
        for (const auto& id : matched) ++stats.per_group[id].kept;
        if (!matched.empty()) ++stats.kept_matching_any;
    }
    if (stats.total_kept > 0) {
        const auto total = static_cast<long long>(stats.total_kept);
        const auto hit = static_cast<long long>(stats.kept_matching_any);
        stats.coverage_basis_points = (2 * hit * 10000 + total) / (2 * total);
    }
    return stats;
}

void export_records(std::span<const ProcessedTweet> tweets, const actors::ActorSet& actors,
                    std::ostream& out) {
    std::vector<std::string> header{"id", "created_at", "bucket", "tokens"};
    for (const auto& a : actors.actors()) header.push_back(a.id);
    csv::write_row(out, header);
    std::vector<std::string> row;
    for (const auto& t : tweets) {
        row.clear();
        row.push_back(t.record_id);
        row.push_back(t.created_at.iso8601());
        row.emplace_back(t.bucket_label());
        std::string joined;
        for (const auto& tok : t.tokens) {
            if (!joined.empty()) joined.push_back(' ');
            joined += tok;
        }
        row.push_back(std::move(joined));
        const auto matched = actors::match_actors(t, actors);
        for (const auto& a : actors.actors()) row.emplace_back(matched.contains(a.id) ? "true" : "false");
        csv::write_row(out, row);
    }
}

void export_records(std::span<const ProcessedTweet> tweets, const actors::ActorSet& actors,
                    const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    export_records(tweets, actors, out);
    out.flush();
    if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::vector<ExportedRow> read_exported_records(std::istream& in) {
    const auto rows = csv::read_all(in);
    std::vector<ExportedRow> out;
    if (rows.empty()) return out;
    const auto& header = rows.front();
    if (header.size() < 4 || header[0] != "id" || header[3] != "tokens")
        throw IoError("not an exported records file");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() != header.size())
            throw IoError("row " + std::to_string(i) + " has " + std::to_string(r.size()) +
                          " fields, expected " + std::to_string(header.size()));
        ExportedRow row{r[0], r[1], r[2], ini::split_list(r[3], ' '), {}};
        for (std::size_t c = 4; c < r.size(); ++c) row.actors[header[c]] = r[c] == "true";
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace electionpulse::ingest
