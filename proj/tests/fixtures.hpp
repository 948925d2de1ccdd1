#pragma once

#include <random>
#include <string>
#include <vector>

#include "crea/corpus.hpp"

namespace crea::test {

// Two level-0 topics u2, u4 sharing parent u6, with identical propagated
// weight at level 2 ({u8: 0.5, u9: 0.5}), so s^0 = 0, s^1 = 0.5, s^2 = 1
// and the overall similarity at sigma = 0.8 is 0.72.
inline TopicHierarchy worked_example_hierarchy() {
    std::vector<TopicNode> nodes = {
        {"u10", 3, {}},
        {"u8", 2, {{"u10", 1.0}}},
        {"u9", 2, {{"u10", 1.0}}},
        {"u5", 1, {{"u8", 0.5}, {"u9", 0.5}}},
        {"u6", 1, {{"u8", 0.5}, {"u9", 0.5}}},
        {"u7", 1, {{"u8", 0.5}, {"u9", 0.5}}},
        {"u2", 0, {{"u5", 0.5}, {"u6", 0.5}}},
        {"u4", 0, {{"u6", 0.5}, {"u7", 0.5}}},
    };
    return TopicHierarchy::build(std::move(nodes));
}

// Two fully disjoint sub-hierarchies: topics "a" and "b" share no ancestor
// at any level.
inline TopicHierarchy disjoint_hierarchy() {
    std::vector<TopicNode> nodes = {
        {"d1", 3, {}},          {"d2", 3, {}},
        {"a2", 2, {{"d1", 1.0}}}, {"b2", 2, {{"d2", 1.0}}},
        {"a1", 1, {{"a2", 1.0}}}, {"b1", 1, {{"b2", 1.0}}},
        {"a", 0, {{"a1", 1.0}}},  {"b", 0, {{"b1", 1.0}}},
    };
    return TopicHierarchy::build(std::move(nodes));
}

// Random four-level hierarchy; every non-top node gets one or two parents
// with weights summing to 1.
inline TopicHierarchy random_hierarchy(std::mt19937_64& rng, int n0 = 20, int n1 = 10,
                                       int n2 = 5, int n3 = 3) {
    std::vector<TopicNode> nodes;
    auto add_level = [&](int level, int count, int parent_count, const std::string& prefix) {
        for (int i = 0; i < count; ++i) {
            TopicNode n;
            n.id = prefix + std::to_string(i);
            n.level = level;
            if (level < kTopLevel) {
                std::uniform_int_distribution<int> pick(0, parent_count - 1);
                int p1 = pick(rng);
                int p2 = pick(rng);
                const std::string pprefix = "L" + std::to_string(level + 1) + "_";
                if (p1 == p2) {
                    n.parents = {{pprefix + std::to_string(p1), 1.0}};
                } else {
                    std::uniform_real_distribution<double> w(0.1, 0.9);
                    const double w1 = w(rng);
                    n.parents = {{pprefix + std::to_string(p1), w1},
                                 {pprefix + std::to_string(p2), 1.0 - w1}};
                }
            }
            nodes.push_back(std::move(n));
        }
    };
    add_level(3, n3, 0, "L3_");
    add_level(2, n2, n3, "L2_");
    add_level(1, n1, n2, "L1_");
    add_level(0, n0, n1, "L0_");
    return TopicHierarchy::build(std::move(nodes));
}

// Topic ids at a given level of a hierarchy built by random_hierarchy.
inline std::vector<std::string> level_topics(const TopicHierarchy& h, int level) {
    std::vector<std::string> ids;
    for (const TopicNode& n : h.nodes())
        if (n.level == level) ids.push_back(n.id);
    return ids;
}

}  // namespace crea::test
