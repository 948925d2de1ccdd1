#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace crea {

// A publication: identifier, publish year, resolved topic set, reference list.
struct PaperRecord {
    std::string id;
    int publish_year = 0;
    std::vector<std::string> topics;      // sorted, unique
    std::vector<std::string> references;  // sorted, unique
};

// One node of the four-level field-of-study hierarchy.
// Level 0 is the most specific subject, level 3 a discipline.
struct TopicNode {
    std::string id;
    int level = 0;
    std::vector<std::pair<std::string, double>> parents;  // (parent id, weight)
};

constexpr int kTopLevel = 3;
constexpr double kWeightTolerance = 1e-9;

// Four-level weighted DAG of topics with a propagated-ancestor cache.
// Immutable once built; `ancestors(u, level)` returns the weighted ancestor
// set of u at an absolute hierarchy level (path-product weight propagation,
// weights sum to 1 per reachable level).
class TopicHierarchy {
public:
    TopicHierarchy() = default;

    // Throws std::runtime_error on structural violations (missing parent,
    // parent not one level up, weights not summing to 1).
    static TopicHierarchy build(std::vector<TopicNode> nodes);

    bool contains(const std::string& topic_id) const { return index_.count(topic_id) != 0; }
    const TopicNode& node(const std::string& topic_id) const;
    int level_of(const std::string& topic_id) const { return node(topic_id).level; }
    std::size_t size() const { return nodes_.size(); }
    const std::vector<TopicNode>& nodes() const { return nodes_; }

    // Weighted ancestors of `topic_id` at absolute level `level`
    // (level == node level yields {topic_id: 1}).  Sorted by internal index.
    const std::vector<std::pair<int, double>>& ancestors(const std::string& topic_id,
                                                         int level) const;
    const std::vector<std::pair<int, double>>& ancestors(int topic_idx, int level) const;

    int index_of(const std::string& topic_id) const;
    const std::string& id_of(int topic_idx) const { return nodes_[topic_idx].id; }
    int level_of(int topic_idx) const { return nodes_[topic_idx].level; }

private:
    std::vector<TopicNode> nodes_;
    std::unordered_map<std::string, int> index_;
    // anc_[idx][level] = weighted ancestor set at absolute level, sorted by index.
    std::vector<std::array<std::vector<std::pair<int, double>>, kTopLevel + 1>> anc_;
};

// One web request for a paper.
struct ReadingEvent {
    std::string paper_id;
    std::int64_t timestamp = 0;  // epoch seconds, UTC
};

struct Aggregator {
    enum class Kind { average, median, percentile, maximum };
    Kind kind = Kind::average;
    double q = 50.0;  // percentile only, in [0,100]

    static Aggregator average() { return {Kind::average, 0}; }
    static Aggregator median() { return {Kind::median, 0}; }
    static Aggregator percentile(double q) { return {Kind::percentile, q}; }
    static Aggregator maximum() { return {Kind::maximum, 0}; }
};

enum class DecayMode { none, reading, publishing };

struct AnalysisConfig {
    double sigma = 0.8;
    Aggregator aggregator = Aggregator::average();
    int budget_rho = 1;
    std::uint64_t rng_seed = 0;
    DecayMode decay_mode = DecayMode::none;
};

// Validated corpus: papers plus an id index.
class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::vector<PaperRecord> papers);

    const std::vector<PaperRecord>& papers() const { return papers_; }
    const PaperRecord* find(const std::string& id) const;
    bool contains(const std::string& id) const { return index_.count(id) != 0; }
    std::size_t size() const { return papers_.size(); }

private:
    std::vector<PaperRecord> papers_;
    std::unordered_map<std::string, std::size_t> index_;
};

struct Violation {
    enum class Severity { error, warning };
    Severity severity = Severity::error;
    std::string paper_id;
    std::string message;
};

// Empty report iff every invariant holds and every topic id resolves.
// Dangling references (citing ids absent from the corpus) and empty topic
// sets are warnings, not errors.
std::vector<Violation> validate_corpus(const std::vector<PaperRecord>& papers,
                                       const TopicHierarchy& hierarchy);

}  // namespace crea
