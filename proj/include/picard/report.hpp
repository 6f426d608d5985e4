#pragma once

#include <string>
#include <vector>

namespace picard {

// Verification report: one entry per checked display, with expected
// transcription divergences ranked separately from real failures.

enum class EntryStatus { match, typo_flag, fail };
const char* status_name(EntryStatus s);

struct ReportEntry {
    std::string anchor;
    EntryStatus status = EntryStatus::match;
    std::string engine; // engine value (or a short digest)
    std::string golden; // golden value (or the transcribed value for flags)
    std::string note;
};

struct Report {
    std::vector<ReportEntry> entries;

    void add(ReportEntry e) { entries.push_back(std::move(e)); }
    bool ok() const;
    int count(EntryStatus s) const;

    // stable ordering: failures first, then flags, then matches; anchors
    // alphabetical within each class
    void sort();
    std::string to_text() const;
    std::string to_json() const; // {"version":1,"entries":[...]}
    static Report from_json(const std::string& text);
};

} // namespace picard
