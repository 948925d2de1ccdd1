#include "crea/ingest.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace crea {

using nlohmann::json;

PaperPair::PaperPair(std::string i, std::string j) {
    if (i <= j) {
        a = std::move(i);
        b = std::move(j);
    } else {
        a = std::move(j);
        b = std::move(i);
    }
}

std::size_t PaperPairHash::operator()(const PaperPair& p) const {
    std::size_t h = std::hash<std::string>{}(p.a);
    h ^= std::hash<std::string>{}(p.b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::int64_t CoCitationIndex::count_till(const std::string& i, const std::string& j,
                                         int year) const {
    auto it = counts_.find(PaperPair(i, j));
    if (it == counts_.end()) return 0;
    const auto& v = it->second;
    // last entry with entry.year < year
    auto pos = std::lower_bound(v.begin(), v.end(), year,
                                [](const std::pair<int, std::int64_t>& e, int y) {
                                    return e.first < y;
                                });
    if (pos == v.begin()) return 0;
    return std::prev(pos)->second;
}

std::int64_t CoCitationIndex::total_cocitations() const {
    std::int64_t total = 0;
    for (const auto& [pair, v] : counts_) total += v.back().second;
    return total;
}

CoCitationIndex build_cocitation_index(const std::vector<PaperRecord>& papers) {
    // (pair -> year -> contributions), then cumulate.
    std::unordered_map<PaperPair, std::map<int, std::int64_t>, PaperPairHash> raw;
    for (const PaperRecord& p : papers) {
        const auto& refs = p.references;
        for (std::size_t x = 0; x < refs.size(); ++x)
            for (std::size_t y = x + 1; y < refs.size(); ++y)
                raw[PaperPair(refs[x], refs[y])][p.publish_year] += 1;
    }
    CoCitationIndex idx;
    idx.counts_.reserve(raw.size());
    for (auto& [pair, per_year] : raw) {
        std::vector<std::pair<int, std::int64_t>> cum;
        cum.reserve(per_year.size());
        std::int64_t running = 0;
        for (const auto& [year, n] : per_year) {
            running += n;
            cum.emplace_back(year, running);
        }
        idx.counts_.emplace(pair, std::move(cum));
    }
    return idx;
}

ReadingLog::ReadingLog(std::vector<ReadingEvent> events) {
    for (ReadingEvent& e : events) {
        events_[std::move(e.paper_id)].push_back(e.timestamp);
        ++event_count_;
    }
    for (auto& [id, ts] : events_) {
        std::sort(ts.begin(), ts.end());
        median_[id] = ts[(ts.size() - 1) / 2];  // lower median
    }
}

std::int64_t ReadingLog::median_time(const std::string& paper_id) const {
    auto it = median_.find(paper_id);
    if (it == median_.end())
        throw std::runtime_error("no reading events for paper '" + paper_id + "'");
    return it->second;
}

const std::vector<std::int64_t>& ReadingLog::events_for(const std::string& paper_id) const {
    auto it = events_.find(paper_id);
    if (it == events_.end())
        throw std::runtime_error("no reading events for paper '" + paper_id + "'");
    return it->second;
}

std::vector<std::string> ReadingLog::paper_ids() const {
    std::vector<std::string> ids;
    ids.reserve(events_.size());
    for (const auto& [id, ts] : events_) ids.push_back(id);
    return ids;
}

namespace {

json parse_line(const std::string& line, std::size_t line_no) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError(line_no, "malformed record");
    return j;
}

std::string require_string(const json& j, const char* key, std::size_t line_no) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_string())
        throw ParseError(line_no, std::string("missing or non-string field '") + key + "'");
    return it->get<std::string>();
}

std::int64_t require_int(const json& j, const char* key, std::size_t line_no) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_number_integer())
        throw ParseError(line_no, std::string("missing or non-integer field '") + key + "'");
    return it->get<std::int64_t>();
}

}  // namespace

std::vector<PaperRecord> parse_papers(std::istream& in) {
    std::vector<PaperRecord> papers;
    std::set<std::string> ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = parse_line(line, line_no);
        PaperRecord p;
        p.id = require_string(j, "id", line_no);
        if (p.id.empty()) throw ParseError(line_no, "empty paper id");
        if (!ids.insert(p.id).second)
            throw ParseError(line_no, "duplicate paper id '" + p.id + "'");
        p.publish_year = static_cast<int>(require_int(j, "year", line_no));
        auto read_list = [&](const char* key) {
            auto it = j.find(key);
            if (it == j.end() || !it->is_array())
                throw ParseError(line_no, std::string("missing or non-array field '") + key + "'");
            std::vector<std::string> out;
            for (const auto& e : *it) {
                if (!e.is_string())
                    throw ParseError(line_no, std::string("non-string entry in '") + key + "'");
                out.push_back(e.get<std::string>());
            }
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
            return out;
        };
        p.topics = read_list("topics");
        p.references = read_list("references");
        papers.push_back(std::move(p));
    }
    return papers;
}

TopicHierarchy parse_topic_hierarchy(std::istream& in) {
    std::vector<TopicNode> nodes;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = parse_line(line, line_no);
        TopicNode n;
        n.id = require_string(j, "id", line_no);
        n.level = static_cast<int>(require_int(j, "level", line_no));
        if (n.level < 0 || n.level > kTopLevel)
            throw ParseError(line_no, "topic level out of range 0-3");
        auto it = j.find("parents");
        if (it == j.end() || !it->is_array())
            throw ParseError(line_no, "missing or non-array field 'parents'");
        for (const auto& e : *it) {
            if (!e.is_object()) throw ParseError(line_no, "malformed parent entry");
            std::string pid = require_string(e, "id", line_no);
            auto w = e.find("weight");
            if (w == e.end() || !w->is_number())
                throw ParseError(line_no, "missing or non-numeric parent weight");
            n.parents.emplace_back(std::move(pid), w->get<double>());
        }
        nodes.push_back(std::move(n));
    }
    return TopicHierarchy::build(std::move(nodes));
}

ReadingLog parse_readings(std::istream& in) {
    std::vector<ReadingEvent> events;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j = parse_line(line, line_no);
        ReadingEvent e;
        e.paper_id = require_string(j, "paper_id", line_no);
        e.timestamp = require_int(j, "timestamp", line_no);
        if (e.timestamp <= 0) throw ParseError(line_no, "non-positive timestamp");
        events.push_back(std::move(e));
    }
    return ReadingLog(std::move(events));
}

}  // namespace crea
