#include "crea/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace crea {

TopicHierarchy TopicHierarchy::build(std::vector<TopicNode> nodes) {
    TopicHierarchy h;
    h.nodes_ = std::move(nodes);
    h.index_.reserve(h.nodes_.size());
    for (std::size_t i = 0; i < h.nodes_.size(); ++i) {
        const TopicNode& n = h.nodes_[i];
        if (n.id.empty()) throw std::runtime_error("topic with empty id");
        if (n.level < 0 || n.level > kTopLevel)
            throw std::runtime_error("topic '" + n.id + "': level out of range");
        if (!h.index_.emplace(n.id, static_cast<int>(i)).second)
            throw std::runtime_error("duplicate topic id '" + n.id + "'");
    }
    for (const TopicNode& n : h.nodes_) {
        if (n.level == kTopLevel) {
            if (!n.parents.empty())
                throw std::runtime_error("topic '" + n.id + "': level-3 node cannot have parents");
            continue;
        }
        double sum = 0;
        std::unordered_set<std::string> seen;
        for (const auto& [pid, w] : n.parents) {
            auto it = h.index_.find(pid);
            if (it == h.index_.end())
                throw std::runtime_error("topic '" + n.id + "': missing parent '" + pid + "'");
            if (h.nodes_[it->second].level != n.level + 1)
                throw std::runtime_error("topic '" + n.id + "': parent '" + pid +
                                         "' is not exactly one level up");
            if (!seen.insert(pid).second)
                throw std::runtime_error("topic '" + n.id + "': duplicate parent '" + pid + "'");
            if (!(w > 0.0) || w > 1.0)
                throw std::runtime_error("topic '" + n.id + "': parent weight out of (0,1]");
            sum += w;
        }
        if (std::abs(sum - 1.0) > kWeightTolerance)
            throw std::runtime_error("topic '" + n.id + "': parent weights sum to " +
                                     std::to_string(sum) + ", expected 1");
    }

    // Propagate ancestor weights level by level: the weight of a level-l
    // ancestor x is the sum over upward paths of the product of edge weights.
    h.anc_.resize(h.nodes_.size());
    std::vector<int> order(h.nodes_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return h.nodes_[a].level > h.nodes_[b].level;  // top level first
    });
    for (int idx : order) {
        const TopicNode& n = h.nodes_[idx];
        h.anc_[idx][n.level] = {{idx, 1.0}};
        for (int l = n.level; l < kTopLevel; ++l) {
            std::unordered_map<int, double> acc;
            bool complete = true;
            for (const auto& [xi, w] : h.anc_[idx][l]) {
                const TopicNode& x = h.nodes_[xi];
                if (x.parents.empty()) {
                    complete = false;
                    break;
                }
                for (const auto& [pid, pw] : x.parents)
                    acc[h.index_.at(pid)] += w * pw;
            }
            if (!complete) break;  // level l+1 unreachable
            std::vector<std::pair<int, double>> v(acc.begin(), acc.end());
            std::sort(v.begin(), v.end());
            double sum = 0;
            for (const auto& [xi, w] : v) sum += w;
            if (std::abs(sum - 1.0) > kWeightTolerance)
                throw std::runtime_error("topic '" + n.id + "': propagated weights at level " +
                                         std::to_string(l + 1) + " sum to " + std::to_string(sum));
            h.anc_[idx][l + 1] = std::move(v);
        }
    }
    return h;
}

const TopicNode& TopicHierarchy::node(const std::string& topic_id) const {
    return nodes_[static_cast<std::size_t>(index_of(topic_id))];
}

int TopicHierarchy::index_of(const std::string& topic_id) const {
    auto it = index_.find(topic_id);
    if (it == index_.end()) throw std::runtime_error("unknown topic '" + topic_id + "'");
    return it->second;
}

const std::vector<std::pair<int, double>>& TopicHierarchy::ancestors(const std::string& topic_id,
                                                                     int level) const {
    return ancestors(index_of(topic_id), level);
}

const std::vector<std::pair<int, double>>& TopicHierarchy::ancestors(int topic_idx,
                                                                     int level) const {
    if (level < 0 || level > kTopLevel) throw std::runtime_error("ancestor level out of range");
    return anc_[static_cast<std::size_t>(topic_idx)][static_cast<std::size_t>(level)];
}

Corpus::Corpus(std::vector<PaperRecord> papers) : papers_(std::move(papers)) {
    index_.reserve(papers_.size());
    for (std::size_t i = 0; i < papers_.size(); ++i) {
        if (!index_.emplace(papers_[i].id, i).second)
            throw std::runtime_error("duplicate paper id '" + papers_[i].id + "'");
    }
}

const PaperRecord* Corpus::find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &papers_[it->second];
}

std::vector<Violation> validate_corpus(const std::vector<PaperRecord>& papers,
                                       const TopicHierarchy& hierarchy) {
    std::vector<Violation> report;
    std::unordered_set<std::string> ids;
    ids.reserve(papers.size());
    for (const PaperRecord& p : papers) {
        if (p.id.empty())
            report.push_back({Violation::Severity::error, p.id, "empty paper id"});
        if (!ids.insert(p.id).second)
            report.push_back({Violation::Severity::error, p.id, "duplicate paper id"});
        std::unordered_set<std::string> refs;
        for (const std::string& r : p.references) {
            if (r == p.id)
                report.push_back({Violation::Severity::error, p.id, "self-citation"});
            if (!refs.insert(r).second)
                report.push_back({Violation::Severity::error, p.id, "duplicate reference '" + r + "'"});
        }
        for (const std::string& t : p.topics) {
            if (!hierarchy.contains(t))
                report.push_back({Violation::Severity::error, p.id, "unknown topic '" + t + "'"});
        }
        if (p.topics.empty())
            report.push_back({Violation::Severity::warning, p.id, "empty topic set"});
    }
    for (const PaperRecord& p : papers) {
        for (const std::string& r : p.references) {
            if (ids.count(r) == 0)
                report.push_back(
                    {Violation::Severity::warning, p.id, "dangling reference '" + r + "'"});
        }
    }
    return report;
}

}  // namespace crea
