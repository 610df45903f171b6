#include "htm/corpus.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace htm {

using nlohmann::json;

std::string to_string(Platform p) {
    switch (p) {
        case Platform::meta: return "meta";
        case Platform::steamvr: return "steamvr";
        case Platform::viveport: return "viveport";
        case Platform::other: return "other";
    }
    return "other";
}

std::string to_string(Role r) {
    switch (r) {
        case Role::user: return "user";
        case Role::developer: return "developer";
        case Role::mixed: return "mixed";
    }
    return "mixed";
}

std::optional<Platform> platform_from_string(const std::string& s) {
    if (s == "meta") return Platform::meta;
    if (s == "steamvr") return Platform::steamvr;
    if (s == "viveport") return Platform::viveport;
    if (s == "other") return Platform::other;
    return std::nullopt;
}

std::optional<Role> role_from_string(const std::string& s) {
    if (s == "user") return Role::user;
    if (s == "developer") return Role::developer;
    if (s == "mixed") return Role::mixed;
    return std::nullopt;
}

std::string MonthKey::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

// ---- calendar arithmetic (proleptic Gregorian, civil epoch days) ----

static std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const int yoe = static_cast<int>(y - era * 400);
    const int doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const int doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

static void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const int doe = static_cast<int>(z - era * 146097);
    const int yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const int yr = static_cast<int>(yoe + era * 400);
    const int doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const int mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = yr + (m <= 2);
}

static bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

static int days_in_month(int y, int m) {
    static const int len[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return len[m - 1];
}

static bool parse_fixed_digits(const std::string& s, std::size_t pos, int n, int& out) {
    out = 0;
    for (int i = 0; i < n; ++i) {
        char c = s[pos + i];
        if (c < '0' || c > '9') return false;
        out = out * 10 + (c - '0');
    }
    return true;
}

std::optional<std::int64_t> parse_utc_timestamp(const std::string& s) {
    // YYYY-MM-DDTHH:MM:SS followed by Z or +00:00
    if (s.size() < 20) return std::nullopt;
    int y, mo, d, h, mi, sec;
    if (!parse_fixed_digits(s, 0, 4, y) || s[4] != '-' ||
        !parse_fixed_digits(s, 5, 2, mo) || s[7] != '-' ||
        !parse_fixed_digits(s, 8, 2, d) || (s[10] != 'T' && s[10] != ' ') ||
        !parse_fixed_digits(s, 11, 2, h) || s[13] != ':' ||
        !parse_fixed_digits(s, 14, 2, mi) || s[16] != ':' ||
        !parse_fixed_digits(s, 17, 2, sec))
        return std::nullopt;
    const std::string tail = s.substr(19);
    if (tail != "Z" && tail != "+00:00") return std::nullopt;
    if (mo < 1 || mo > 12 || d < 1 || d > days_in_month(y, mo)) return std::nullopt;
    if (h > 23 || mi > 59 || sec > 60) return std::nullopt;
    if (sec == 60) sec = 59;  // clamp leap seconds
    return days_from_civil(y, mo, d) * 86400 + h * 3600 + mi * 60 + sec;
}

std::string format_utc_timestamp(std::int64_t t) {
    std::int64_t days = t / 86400;
    std::int64_t rem = t % 86400;
    if (rem < 0) {
        rem += 86400;
        days -= 1;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", y, m, d,
                  static_cast<int>(rem / 3600), static_cast<int>(rem / 60 % 60),
                  static_cast<int>(rem % 60));
    return buf;
}

MonthKey month_of(std::int64_t t) {
    std::int64_t days = t / 86400;
    if (t % 86400 < 0) days -= 1;
    int y, m, d;
    civil_from_days(days, y, m, d);
    return MonthKey{y, m};
}

MonthKey Document::month() const { return month_of(timestamp); }

// ---- ingestion ----

static bool is_blank(const std::string& s) {
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

static std::optional<Document> parse_document_line(const std::string& line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    for (const char* key : {"id", "platform", "role", "timestamp", "text"})
        if (!j.contains(key) || !j[key].is_string()) return std::nullopt;

    Document doc;
    doc.id = j["id"].get<std::string>();
    if (doc.id.empty()) return std::nullopt;
    auto platform = platform_from_string(j["platform"].get<std::string>());
    auto role = role_from_string(j["role"].get<std::string>());
    if (!platform || !role || *role == Role::mixed) return std::nullopt;
    doc.platform = *platform;
    doc.role = *role;
    auto ts = parse_utc_timestamp(j["timestamp"].get<std::string>());
    if (!ts) return std::nullopt;
    doc.timestamp = *ts;
    doc.text = j["text"].get<std::string>();
    if (is_blank(doc.text)) return std::nullopt;
    if (j.contains("language") && j["language"].is_string())
        doc.language = j["language"].get<std::string>();
    return doc;
}

Corpus ingest_jsonl(const std::string& path, std::optional<Role> expected_role) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);

    Corpus corpus;
    corpus.role = expected_role.value_or(Role::mixed);
    std::unordered_set<std::string> seen_ids;
    std::size_t skipped = 0, lines = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (is_blank(line)) continue;
        ++lines;
        auto doc = parse_document_line(line);
        if (!doc) {
            ++skipped;
            continue;
        }
        if (!seen_ids.insert(doc->id).second)
            throw std::runtime_error("duplicate document id: " + doc->id);
        if (expected_role && *expected_role != Role::mixed && doc->role != *expected_role)
            throw std::runtime_error("document " + doc->id + " has role " +
                                     to_string(doc->role) + ", expected " +
                                     to_string(*expected_role));
        corpus.documents.push_back(std::move(*doc));
    }
    corpus.provenance["source"] = path;
    corpus.provenance["lines"] = std::to_string(lines);
    corpus.provenance["skipped"] = std::to_string(skipped);
    return corpus;
}

std::map<MonthKey, std::vector<std::string>> partition_by_month(const Corpus& corpus) {
    std::map<MonthKey, std::vector<std::string>> buckets;
    for (const auto& doc : corpus.documents) buckets[doc.month()].push_back(doc.id);
    return buckets;
}

// ---- snapshots ----

static json document_to_json(const Document& d) {
    json j{{"id", d.id},
           {"platform", to_string(d.platform)},
           {"role", to_string(d.role)},
           {"timestamp", format_utc_timestamp(d.timestamp)},
           {"text", d.text}};
    if (d.language) j["language"] = *d.language;
    return j;
}

void save_snapshot(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write snapshot: " + path);
    json header{{"htm_snapshot", 1},
                {"role", to_string(corpus.role)},
                {"provenance", corpus.provenance}};
    out << header.dump() << "\n";
    for (const auto& d : corpus.documents) out << document_to_json(d).dump() << "\n";
    if (!out) throw std::runtime_error("short write on snapshot: " + path);
}

Corpus load_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open snapshot: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("corrupt snapshot (empty): " + path);
    json header = json::parse(line, nullptr, false);
    if (header.is_discarded() || !header.is_object() || !header.contains("htm_snapshot"))
        throw std::runtime_error("corrupt snapshot (bad header): " + path);

    Corpus corpus;
    auto role = role_from_string(header.value("role", "mixed"));
    if (!role) throw std::runtime_error("corrupt snapshot (bad role): " + path);
    corpus.role = *role;
    if (header.contains("provenance"))
        corpus.provenance = header["provenance"].get<std::map<std::string, std::string>>();

    std::unordered_set<std::string> seen_ids;
    while (std::getline(in, line)) {
        if (is_blank(line)) continue;
        auto doc = parse_document_line(line);
        if (!doc) throw std::runtime_error("corrupt snapshot (bad document line): " + path);
        if (!seen_ids.insert(doc->id).second)
            throw std::runtime_error("corrupt snapshot (duplicate id " + doc->id + "): " + path);
        corpus.documents.push_back(std::move(*doc));
    }
    return corpus;
}

}  // namespace htm
