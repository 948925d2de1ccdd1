#include "crea/topic_similarity.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>

namespace crea {

namespace {

// Sum of min weights over the intersection of two sorted ancestor sets.
double min_overlap(const std::vector<std::pair<int, double>>& a,
                   const std::vector<std::pair<int, double>>& b) {
    double sum = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            sum += std::min(ia->second, ib->second);
            ++ia;
            ++ib;
        }
    }
    return sum;
}

// Contribution coefficients for a same-level pair: c_l = budget_l * s^l,
// indexed by level offset above the pair's own level.
std::array<double, kTopLevel + 1> same_level_coefficients(const TopicHierarchy& h, int u_idx,
                                                          int v_idx) {
    const int base = h.level_of(u_idx);
    std::array<double, kTopLevel + 1> c{};
    double consumed = 0;
    for (int off = 0; base + off <= kTopLevel; ++off) {
        const auto& au = h.ancestors(u_idx, base + off);
        const auto& av = h.ancestors(v_idx, base + off);
        if (au.empty() || av.empty()) break;  // level unreachable
        const double s = min_overlap(au, av);
        const double budget = std::max(1.0 - consumed, 0.0);
        c[static_cast<std::size_t>(off)] = budget * s;
        consumed += s;
    }
    return c;
}

double combine(const std::array<double, kTopLevel + 1>& c, double sigma) {
    double sim = 0;
    double pow_sigma = 1;
    for (int l = 0; l <= kTopLevel; ++l) {
        sim += c[static_cast<std::size_t>(l)] * pow_sigma;
        pow_sigma *= sigma;
    }
    return sim;
}

std::uint64_t pair_key(int u_idx, int v_idx) {
    const auto lo = static_cast<std::uint64_t>(std::min(u_idx, v_idx));
    const auto hi = static_cast<std::uint64_t>(std::max(u_idx, v_idx));
    return (lo << 32) | hi;
}

void check_sigma(double sigma) {
    if (!(sigma > 0.0) || sigma > 1.0) throw std::runtime_error("sigma must be in (0,1]");
}

}  // namespace

double level_similarity(const TopicHierarchy& h, const std::string& u, const std::string& v,
                        int level_offset) {
    const int ui = h.index_of(u);
    const int vi = h.index_of(v);
    if (h.level_of(ui) != h.level_of(vi))
        throw std::runtime_error("level_similarity requires same-level topics");
    const int abs_level = h.level_of(ui) + level_offset;
    if (level_offset < 0 || abs_level > kTopLevel)
        throw std::runtime_error("level offset out of range");
    const auto& au = h.ancestors(ui, abs_level);
    const auto& av = h.ancestors(vi, abs_level);
    return min_overlap(au, av);
}

LevelSimilarityTrace topic_pair_similarity_trace(const TopicHierarchy& h, const std::string& u,
                                                 const std::string& v, double sigma) {
    check_sigma(sigma);
    const int ui = h.index_of(u);
    const int vi = h.index_of(v);
    if (h.level_of(ui) != h.level_of(vi))
        throw std::runtime_error("similarity trace requires same-level topics");
    const int base = h.level_of(ui);
    LevelSimilarityTrace trace;
    double consumed = 0;
    double pow_sigma = 1;
    for (int off = 0; base + off <= kTopLevel; ++off) {
        const auto idx = static_cast<std::size_t>(off);
        const auto& au = h.ancestors(ui, base + off);
        const auto& av = h.ancestors(vi, base + off);
        if (au.empty() || av.empty()) break;
        trace.level_similarity[idx] = min_overlap(au, av);
        trace.budget[idx] = std::max(1.0 - consumed, 0.0);
        trace.contribution[idx] = trace.budget[idx] * trace.level_similarity[idx] * pow_sigma;
        trace.overall += trace.contribution[idx];
        consumed += trace.level_similarity[idx];
        pow_sigma *= sigma;
    }
    return trace;
}

std::array<double, kTopLevel + 1> SimilarityCache::coefficients(int u_idx, int v_idx) const {
    const std::uint64_t key = pair_key(u_idx, v_idx);
    {
        std::shared_lock lock(mutex_);
        auto it = coeffs_.find(key);
        if (it != coeffs_.end()) return it->second;
    }
    std::array<double, kTopLevel + 1> c{};
    const int lu = hierarchy_.level_of(u_idx);
    const int lv = hierarchy_.level_of(v_idx);
    if (lu == lv) {
        c = same_level_coefficients(hierarchy_, u_idx, v_idx);
    } else {
        // Lift the more specific topic to the other's level and average the
        // same-level coefficients over its weighted ancestors.
        const int lo = lu < lv ? u_idx : v_idx;
        const int hi = lu < lv ? v_idx : u_idx;
        const int target_level = hierarchy_.level_of(hi);
        for (const auto& [anc_idx, w] : hierarchy_.ancestors(lo, target_level)) {
            const auto part = same_level_coefficients(hierarchy_, anc_idx, hi);
            for (std::size_t l = 0; l <= kTopLevel; ++l) c[l] += w * part[l];
        }
    }
    std::unique_lock lock(mutex_);
    return coeffs_.emplace(key, c).first->second;
}

double SimilarityCache::similarity(int u_idx, int v_idx, double sigma) const {
    check_sigma(sigma);
    return combine(coefficients(u_idx, v_idx), sigma);
}

double SimilarityCache::similarity(const std::string& u, const std::string& v,
                                   double sigma) const {
    return similarity(hierarchy_.index_of(u), hierarchy_.index_of(v), sigma);
}

std::optional<double> SimilarityCache::disconnect(const std::vector<std::string>& topics_i,
                                                  const std::vector<std::string>& topics_j,
                                                  double sigma) const {
    if (topics_i.empty() || topics_j.empty()) return std::nullopt;
    double sum = 0;
    for (const std::string& u : topics_i)
        for (const std::string& v : topics_j) sum += similarity(u, v, sigma);
    const double avg = sum / (static_cast<double>(topics_i.size()) *
                              static_cast<double>(topics_j.size()));
    return std::clamp(1.0 - avg, 0.0, 1.0);
}

double topic_pair_similarity(const TopicHierarchy& h, const std::string& u, const std::string& v,
                             double sigma) {
    SimilarityCache cache(h);
    return cache.similarity(u, v, sigma);
}

std::optional<double> disconnect(const TopicHierarchy& h, const std::vector<std::string>& topics_i,
                                 const std::vector<std::string>& topics_j, double sigma) {
    SimilarityCache cache(h);
    return cache.disconnect(topics_i, topics_j, sigma);
}

}  // namespace crea
