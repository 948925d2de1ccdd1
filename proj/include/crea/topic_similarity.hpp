#pragma once

#include <array>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "crea/corpus.hpp"

namespace crea {

// Per-level breakdown of an overall similarity evaluation.
struct LevelSimilarityTrace {
    std::array<double, kTopLevel + 1> level_similarity{};  // s^l
    std::array<double, kTopLevel + 1> budget{};            // max(1 - sum_{l'<l} s^{l'}, 0)
    std::array<double, kTopLevel + 1> contribution{};      // budget * s^l * sigma^l
    double overall = 0;                                    // sum of contributions
};

// Level-l similarity of two same-level topics: sum over shared level-l
// ancestors of the min of the propagated weights.  l is the offset above
// the pair's own level (offset 0 compares the topics themselves).
double level_similarity(const TopicHierarchy& hierarchy, const std::string& u,
                        const std::string& v, int level_offset);

// Overall hierarchical similarity with discount sigma.  Cross-level pairs
// are handled by lifting the more specific topic to the other's level via
// its propagated ancestors.
double topic_pair_similarity(const TopicHierarchy& hierarchy, const std::string& u,
                             const std::string& v, double sigma);

LevelSimilarityTrace topic_pair_similarity_trace(const TopicHierarchy& hierarchy,
                                                 const std::string& u, const std::string& v,
                                                 double sigma);

// Memoizes topic-pair similarities over an immutable hierarchy.  The cache
// stores the sigma-independent per-level profile; safe for concurrent
// readers (insert-once under a shared mutex).
class SimilarityCache {
public:
    explicit SimilarityCache(const TopicHierarchy& hierarchy) : hierarchy_(hierarchy) {}

    const TopicHierarchy& hierarchy() const { return hierarchy_; }
    double similarity(int u_idx, int v_idx, double sigma) const;
    double similarity(const std::string& u, const std::string& v, double sigma) const;

    // Average dissimilarity of two topic sets (topic ids).  nullopt when
    // either set is empty (undefined disconnect; the caller decides).
    std::optional<double> disconnect(const std::vector<std::string>& topics_i,
                                     const std::vector<std::string>& topics_j,
                                     double sigma) const;

private:
    const TopicHierarchy& hierarchy_;
    mutable std::shared_mutex mutex_;
    // key packs (min idx, max idx); value: per-level contribution
    // coefficients c_l = budget_l * s^l, so similarity = sum_l c_l * sigma^l.
    // Cross-level pairs store the lifted (weighted-average) coefficients.
    mutable std::unordered_map<std::uint64_t, std::array<double, kTopLevel + 1>> coeffs_;

    std::array<double, kTopLevel + 1> coefficients(int u_idx, int v_idx) const;
};

// Convenience wrappers without a cache.
std::optional<double> disconnect(const TopicHierarchy& hierarchy,
                                 const std::vector<std::string>& topics_i,
                                 const std::vector<std::string>& topics_j, double sigma);

}  // namespace crea
