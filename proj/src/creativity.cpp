#include "crea/creativity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

namespace crea {

double rarity_from_count(std::int64_t c) {
    if (c < 0) throw std::runtime_error("negative co-citation count");
    return 1.0 / (1.0 + std::log2(static_cast<double>(c) + 1.0));
}

double rarity(const CoCitationIndex& index, const std::string& i, const std::string& j,
              int year) {
    if (i == j) throw std::runtime_error("degenerate pair (" + i + "," + j + ")");
    return rarity_from_count(index.count_till(i, j, year));
}

PairScore creativity_score(const SimilarityCache& cache, const CoCitationIndex& index,
                           const PaperRecord& paper_i, const PaperRecord& paper_j, int year,
                           double sigma) {
    if (paper_i.id == paper_j.id)
        throw std::runtime_error("degenerate pair (" + paper_i.id + "," + paper_j.id + ")");
    auto d = cache.disconnect(paper_i.topics, paper_j.topics, sigma);
    if (!d)
        throw std::runtime_error("undefined disconnect: empty topic set for '" +
                                 (paper_i.topics.empty() ? paper_i.id : paper_j.id) + "'");
    PairScore s;
    const bool ordered = paper_i.id < paper_j.id;
    s.i = ordered ? paper_i.id : paper_j.id;
    s.j = ordered ? paper_j.id : paper_i.id;
    s.year = year;
    s.rarity = rarity(index, s.i, s.j, year);
    s.disconnect = *d;
    s.creativity = s.disconnect * s.rarity;
    return s;
}

double aggregate(const std::vector<double>& scores, const Aggregator& agg) {
    if (scores.empty()) throw std::invalid_argument("no reference pairs to aggregate");
    const std::size_t n = scores.size();
    switch (agg.kind) {
        case Aggregator::Kind::average: {
            double sum = 0;
            for (double s : scores) sum += s;
            return sum / static_cast<double>(n);
        }
        case Aggregator::Kind::maximum:
            return *std::max_element(scores.begin(), scores.end());
        case Aggregator::Kind::median: {
            std::vector<double> v(scores);
            const std::size_t rank = (n - 1) / 2;  // lower median
            std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(rank), v.end());
            return v[rank];
        }
        case Aggregator::Kind::percentile: {
            if (agg.q < 0 || agg.q > 100)
                throw std::invalid_argument("percentile q out of [0,100]");
            // nearest-rank: ceil(q/100 * n)-th order statistic, 1-based
            auto rank = static_cast<std::size_t>(
                std::ceil(agg.q / 100.0 * static_cast<double>(n)));
            rank = std::clamp<std::size_t>(rank, 1, n);
            std::vector<double> v(scores);
            std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(rank - 1),
                             v.end());
            return v[rank - 1];
        }
    }
    throw std::logic_error("unreachable aggregator kind");
}

PaperCreativity paper_creativity(const SimilarityCache& cache, const CoCitationIndex& index,
                                 const Corpus& corpus, const std::string& k,
                                 const AnalysisConfig& config) {
    const PaperRecord* paper = corpus.find(k);
    if (!paper) throw std::runtime_error("paper '" + k + "' not in corpus");

    std::vector<const PaperRecord*> refs;
    for (const std::string& r : paper->references) {
        const PaperRecord* ref = corpus.find(r);
        if (ref && !ref->topics.empty()) refs.push_back(ref);
    }

    PaperCreativity result;
    result.paper_id = k;
    if (refs.size() < 2) {
        result.insufficient_references = true;
        return result;
    }
    const int year = paper->publish_year;
    std::vector<double> scores;
    scores.reserve(refs.size() * (refs.size() - 1) / 2);
    for (std::size_t a = 0; a < refs.size(); ++a) {
        for (std::size_t b = a + 1; b < refs.size(); ++b) {
            PairScore s = creativity_score(cache, index, *refs[a], *refs[b], year, config.sigma);
            scores.push_back(s.creativity);
            result.pairs.push_back(std::move(s));
        }
    }
    std::sort(result.pairs.begin(), result.pairs.end(), [](const PairScore& x, const PairScore& y) {
        return std::tie(x.i, x.j) < std::tie(y.i, y.j);
    });
    result.phi = aggregate(scores, config.aggregator);
    return result;
}

}  // namespace crea
