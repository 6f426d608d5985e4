#include "picard/report.hpp"

#include <algorithm>

#include <json.hpp>

namespace picard {

namespace {
using ordered_json = nlohmann::ordered_json;

int status_rank(EntryStatus s) {
    switch (s) {
        case EntryStatus::fail: return 0;
        case EntryStatus::typo_flag: return 1;
        case EntryStatus::match: return 2;
    }
    return 3;
}
} // namespace

const char* status_name(EntryStatus s) {
    switch (s) {
        case EntryStatus::match: return "match";
        case EntryStatus::typo_flag: return "paper-typo-flag";
        case EntryStatus::fail: return "fail";
    }
    return "?";
}

bool Report::ok() const { return count(EntryStatus::fail) == 0; }

int Report::count(EntryStatus s) const {
    return (int)std::count_if(entries.begin(), entries.end(),
                              [&](const ReportEntry& e) { return e.status == s; });
}

void Report::sort() {
    std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        if (status_rank(a.status) != status_rank(b.status))
            return status_rank(a.status) < status_rank(b.status);
        return a.anchor < b.anchor;
    });
}

std::string Report::to_text() const {
    std::string out = "verification report: " + std::to_string(entries.size()) + " entries, " +
                      std::to_string(count(EntryStatus::match)) + " match, " +
                      std::to_string(count(EntryStatus::typo_flag)) + " flagged, " +
                      std::to_string(count(EntryStatus::fail)) + " fail\n";
    for (const auto& e : entries) {
        out += std::string("[") + status_name(e.status) + "] " + e.anchor;
        if (e.status != EntryStatus::match) {
            out += "\n    engine: " + e.engine + "\n    golden: " + e.golden;
            if (!e.note.empty()) out += "\n    note: " + e.note;
        }
        out += "\n";
    }
    return out;
}

std::string Report::to_json() const {
    ordered_json arr = ordered_json::array();
    for (const auto& e : entries) {
        ordered_json je;
        je["anchor"] = e.anchor;
        je["status"] = status_name(e.status);
        je["engine"] = e.engine;
        je["golden"] = e.golden;
        je["note"] = e.note;
        arr.push_back(std::move(je));
    }
    ordered_json j;
    j["version"] = 1;
    j["entries"] = std::move(arr);
    return j.dump(2) + "\n";
}

Report Report::from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    Report r;
    for (const auto& je : j.at("entries")) {
        ReportEntry e;
        e.anchor = je.at("anchor").get<std::string>();
        std::string st = je.at("status").get<std::string>();
        e.status = st == "match"             ? EntryStatus::match
                   : st == "paper-typo-flag" ? EntryStatus::typo_flag
                                             : EntryStatus::fail;
        e.engine = je.at("engine").get<std::string>();
        e.golden = je.at("golden").get<std::string>();
        e.note = je.at("note").get<std::string>();
        r.add(std::move(e));
    }
    return r;
}

} // namespace picard
