#pragma once

#include <string>
#include <vector>

#include "crea/corpus.hpp"
#include "crea/ingest.hpp"
#include "crea/topic_similarity.hpp"

namespace crea {

// Creativity score of one co-cited pair at evaluation year t.
struct PairScore {
    std::string i, j;  // i < j
    double rarity = 0;
    double disconnect = 0;
    double creativity = 0;  // disconnect * rarity
    int year = 0;
};

// r = 1 / (1 + log2(c + 1)) with c the co-citation count strictly before
// year t.  Throws on i == j.
double rarity(const CoCitationIndex& index, const std::string& i, const std::string& j, int year);
double rarity_from_count(std::int64_t cocitation_count);

// Throws on i == j or when either paper has an empty topic set.
PairScore creativity_score(const SimilarityCache& cache, const CoCitationIndex& index,
                           const PaperRecord& paper_i, const PaperRecord& paper_j, int year,
                           double sigma);

// Average / lower-median / nearest-rank percentile / maximum of the multiset.
// Throws std::invalid_argument on an empty list.
double aggregate(const std::vector<double>& scores, const Aggregator& agg);

struct PaperCreativity {
    std::string paper_id;
    double phi = 0;
    bool insufficient_references = false;  // fewer than two resolvable references
    std::vector<PairScore> pairs;          // sorted by (i, j)
};

// Creativity of paper k at its own publish year: one PairScore per
// unordered pair of resolvable references (present in the corpus with a
// nonempty topic set), aggregated with config.aggregator.
PaperCreativity paper_creativity(const SimilarityCache& cache, const CoCitationIndex& index,
                                 const Corpus& corpus, const std::string& k,
                                 const AnalysisConfig& config);

}  // namespace crea
