#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "crea/corpus.hpp"

namespace crea {

// Unordered paper-id pair, stored with lexicographically ordered keys.
struct PaperPair {
    std::string a, b;  // a <= b
    PaperPair(std::string i, std::string j);
    bool operator==(const PaperPair& o) const { return a == o.a && b == o.b; }
};

struct PaperPairHash {
    std::size_t operator()(const PaperPair& p) const;
};

// Cumulative co-citation counts per unordered pair: count_till(i, j, t) is
// the number of corpus papers published strictly before year t that cite
// both i and j.
class CoCitationIndex {
public:
    CoCitationIndex() = default;

    std::int64_t count_till(const std::string& i, const std::string& j, int year) const;
    std::size_t pair_count() const { return counts_.size(); }
    std::int64_t total_cocitations() const;  // sum over pairs of count_till(., ., +inf)

    friend CoCitationIndex build_cocitation_index(const std::vector<PaperRecord>& papers);

private:
    // sorted (year, cumulative count)
    std::unordered_map<PaperPair, std::vector<std::pair<int, std::int64_t>>, PaperPairHash> counts_;
};

CoCitationIndex build_cocitation_index(const std::vector<PaperRecord>& papers);

// Reading events grouped per paper, with the median reading time per paper
// (lower median for even event counts).
class ReadingLog {
public:
    ReadingLog() = default;
    explicit ReadingLog(std::vector<ReadingEvent> events);

    bool contains(const std::string& paper_id) const { return events_.count(paper_id) != 0; }
    // Throws if the paper has no events.
    std::int64_t median_time(const std::string& paper_id) const;
    const std::vector<std::int64_t>& events_for(const std::string& paper_id) const;
    std::vector<std::string> paper_ids() const;  // sorted
    std::size_t paper_count() const { return events_.size(); }
    std::size_t event_count() const { return event_count_; }

private:
    std::map<std::string, std::vector<std::int64_t>> events_;  // sorted timestamps
    std::unordered_map<std::string, std::int64_t> median_;
    std::size_t event_count_ = 0;
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_no(line) {}
    std::size_t line_no;
};

// Line-delimited JSON parsers.  Unknown fields are ignored; records missing
// required fields are rejected with the offending line number.
std::vector<PaperRecord> parse_papers(std::istream& in);
TopicHierarchy parse_topic_hierarchy(std::istream& in);
ReadingLog parse_readings(std::istream& in);

}  // namespace crea
