#include "crea/dependency.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace crea {

double paper_level_dependency(const std::vector<std::string>& referenced,
                              const std::vector<std::string>& read) {
    if (referenced.empty() || read.empty())
        throw std::runtime_error("paper_level_dependency: empty set");
    std::unordered_set<std::string> c(referenced.begin(), referenced.end());
    std::unordered_set<std::string> q(read.begin(), read.end());
    std::size_t overlap = 0;
    for (const std::string& id : c) overlap += q.count(id);
    return static_cast<double>(overlap) /
           static_cast<double>(std::min(c.size(), q.size()));
}

double topic_level_dependency(const std::vector<const PaperRecord*>& produced,
                              const std::vector<const PaperRecord*>& read,
                              const SimilarityCache& cache, double sigma) {
    if (produced.empty() || read.empty())
        throw std::runtime_error("topic_level_dependency: empty list");
    double sum = 0;
    std::size_t pairs = 0;
    for (const PaperRecord* i : produced) {
        if (i->topics.empty()) continue;
        for (const PaperRecord* j : read) {
            auto d = cache.disconnect(i->topics, j->topics, sigma);
            if (!d) continue;
            sum += *d;
            ++pairs;
        }
    }
    if (pairs == 0) throw std::runtime_error("topic_level_dependency: no resolvable pairs");
    return 1.0 - sum / static_cast<double>(pairs);
}

std::unordered_map<std::string, std::int64_t> citation_counts(const Corpus& corpus) {
    std::unordered_map<std::string, std::int64_t> counts;
    counts.reserve(corpus.size());
    for (const PaperRecord& p : corpus.papers()) counts.emplace(p.id, 0);
    for (const PaperRecord& p : corpus.papers()) {
        for (const std::string& r : p.references) {
            auto it = counts.find(r);
            if (it != counts.end()) it->second += 1;
        }
    }
    return counts;
}

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) return std::nullopt;
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) return std::nullopt;  // zero variance
    return sxy / std::sqrt(sxx * syy);
}

CorrelationReport impact_correlation(
    const std::vector<DecompositionResult>& results,
    const std::unordered_map<std::string, std::int64_t>& counts) {
    std::vector<double> psi, chi, c;
    for (const DecompositionResult& r : results) {
        if (r.insufficient_references) continue;
        auto it = counts.find(r.paper_id);
        if (it == counts.end()) continue;
        psi.push_back(r.preparation);
        chi.push_back(r.inspiration);
        c.push_back(static_cast<double>(it->second));
    }
    if (psi.size() < 3)
        throw std::runtime_error("impact_correlation: fewer than 3 usable papers");
    CorrelationReport report;
    report.n = psi.size();
    report.preparation_citations = pearson(psi, c);
    report.inspiration_citations = pearson(chi, c);
    return report;
}

}  // namespace crea
