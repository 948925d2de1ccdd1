#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "crea/corpus.hpp"
#include "crea/decomposition.hpp"
#include "crea/topic_similarity.hpp"

namespace crea {

// Overlap coefficient |C ∩ Q| / min(|C|, |Q|).  Throws on empty sets.
double paper_level_dependency(const std::vector<std::string>& referenced,
                              const std::vector<std::string>& read);

// Average connectedness 1 - sum d_ij / (|P||Q|) over all cross pairs of
// topic-resolvable papers.  Papers without topics are skipped with the
// denominator adjusted.  Throws when no resolvable pairs exist.
double topic_level_dependency(const std::vector<const PaperRecord*>& produced,
                              const std::vector<const PaperRecord*>& read,
                              const SimilarityCache& cache, double sigma);

// In-corpus citation in-degree.
std::unordered_map<std::string, std::int64_t> citation_counts(const Corpus& corpus);

struct CorrelationReport {
    std::optional<double> preparation_citations;  // pearson(psi, c)
    std::optional<double> inspiration_citations;  // pearson(chi, c)
    std::size_t n = 0;
};

// Sample Pearson correlations of preparation/inspiration with citation
// counts.  Undefined (nullopt) when a variable has zero variance; throws
// below 3 usable points.
CorrelationReport impact_correlation(const std::vector<DecompositionResult>& results,
                                     const std::unordered_map<std::string, std::int64_t>& counts);

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace crea
