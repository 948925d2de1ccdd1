#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crea/creativity.hpp"
#include "crea/temporal.hpp"

namespace crea {

// Impact of a single bridge x on the creativity required to connect (i,j):
// phi_ij - min(phi_ij, max(phi_ix, phi_xj)).  Always in [0, phi_ij].
double pair_impact(double phi_ij, double phi_ix, double phi_xj);

// n-hop generalization: chain_scores holds the pair scores along the path
// i -> x1 -> ... -> xn -> j, in order.  Throws on an empty chain.
double path_impact(double phi_ij, const std::vector<double>& chain_scores);

// One reading-set candidate for bridging a specific reference pair.
struct EnablerCandidate {
    std::string id;
    double delta = 0;        // pair_impact of this candidate
    double accept_prob = 1;  // m(tau) for the Bernoulli trial; 1 when no decay
};

struct EnablerChoice {
    std::optional<std::string> enabler;
    double delta = 0;
};

// Argmax of delta; ties broken by lexicographically smallest id.  Empty
// candidate list yields (none, 0).
EnablerChoice best_enabler(const std::vector<EnablerCandidate>& candidates);

// Walks candidates in decreasing (delta, id asc) order and accepts each
// with its accept_prob; if every candidate is rejected, (none, 0).
EnablerChoice sample_enabler(const std::vector<EnablerCandidate>& candidates,
                             std::uint64_t rng_seed);

// Deterministic per-pair sub-generator seed, so results are independent of
// the evaluation schedule.
std::uint64_t pair_rng_seed(std::uint64_t base_seed, const std::string& k, const std::string& i,
                            const std::string& j);

struct PairDecomposition {
    std::string i, j;
    double creativity = 0;  // phi_ij
    std::optional<std::string> enabler;
    double impact = 0;  // delta for the chosen enabler, 0 when none
};

struct DecompositionResult {
    std::string paper_id;
    double phi = 0;
    double preparation = 0;  // psi
    double inspiration = 0;  // chi
    bool insufficient_references = false;
    std::vector<PairDecomposition> pairs;
};

// Splits paper k's creativity into reading-explained preparation and
// residual inspiration over reading set Q.  With decay == nullptr the
// choice per pair is the deterministic argmax; otherwise each candidate is
// accepted with probability m(t^p_k - reading year).
DecompositionResult decompose(const std::string& k, const std::vector<std::string>& reading_set,
                              const Corpus& corpus, const SimilarityCache& cache,
                              const CoCitationIndex& index, const ReadingLog* readings,
                              const TemporalDecayModel* decay, const AnalysisConfig& config);

}  // namespace crea
