#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace htm {

enum class Platform { meta, steamvr, viveport, other };
enum class Role { user, developer, mixed };

std::string to_string(Platform p);
std::string to_string(Role r);
std::optional<Platform> platform_from_string(const std::string& s);
std::optional<Role> role_from_string(const std::string& s);

/// UTC calendar month. Ordered so it can key a std::map.
struct MonthKey {
    int year = 0;
    int month = 1;  // 1..12

    auto operator<=>(const MonthKey&) const = default;
    /// "YYYY-MM"
    std::string str() const;
};

/// One review or forum post.
struct Document {
    std::string id;
    Platform platform = Platform::other;
    Role role = Role::user;  // user or developer, never mixed
    std::int64_t timestamp = 0;  // seconds since Unix epoch, UTC
    std::string text;
    std::optional<std::string> language;

    MonthKey month() const;
};

struct Corpus {
    std::vector<Document> documents;
    Role role = Role::mixed;
    std::map<std::string, std::string> provenance;

    std::size_t size() const { return documents.size(); }
};

/// Parses a strict ISO-8601 UTC instant ("2016-08-01T12:30:00Z", "+00:00"
/// accepted in place of "Z"). Returns nullopt on malformed or out-of-calendar
/// dates.
std::optional<std::int64_t> parse_utc_timestamp(const std::string& s);

/// Canonical "YYYY-MM-DDTHH:MM:SSZ" form of an epoch-seconds instant.
std::string format_utc_timestamp(std::int64_t epoch_seconds);

MonthKey month_of(std::int64_t epoch_seconds);

/// Reads a JSONL corpus: one object per line with keys id, platform, role,
/// timestamp, text. Malformed lines are skipped and counted in
/// provenance["skipped"]. Duplicate ids and role mismatches against
/// expected_role are errors.
Corpus ingest_jsonl(const std::string& path,
                    std::optional<Role> expected_role = std::nullopt);

/// Buckets document ids by UTC calendar month. Every document lands in
/// exactly one bucket.
std::map<MonthKey, std::vector<std::string>> partition_by_month(const Corpus& corpus);

/// Snapshot: one-line JSON header with provenance followed by the document
/// JSONL. load(save(c)) == c field for field.
void save_snapshot(const Corpus& corpus, const std::string& path);
Corpus load_snapshot(const std::string& path);

}  // namespace htm
