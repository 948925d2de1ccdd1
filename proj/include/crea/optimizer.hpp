#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crea/creativity.hpp"
#include "crea/decomposition.hpp"
#include "crea/temporal.hpp"

namespace crea {

// A weighted set of target papers; weights sum to 1.
struct TargetSet {
    std::vector<std::pair<std::string, double>> targets;  // (paper id, lambda)
};

// Precomputed reward instance: per-target reference-pair scores and, per
// candidate, the impact it has on every pair of every target.  The reward
// of a candidate set A is
//   R(A) = sum_k lambda_k [ agg({phi}) - agg({phi - max_{x in A} delta_x}) ]
// where the residual aggregate is evaluated at the rank the aggregator
// selects on the *base* scores (for the average this is the plain mean).
// Re-sorting the residual multiset instead would break submodularity for
// the quantile and maximum aggregators, which is what the greedy guarantee
// and lazy evaluation rest on; the fixed-rank form is the one the
// submodularity argument actually covers.
struct RewardInstance {
    Aggregator aggregator;

    struct Target {
        std::string id;
        double weight = 1.0;
        double publish_year = 0;
        std::vector<double> pair_phi;
        double base_aggregate = 0;         // agg(pair_phi), filled by finalize()
        std::vector<double> rank_weight;   // linear form of agg at the base rank
    };
    std::vector<Target> targets;

    std::vector<std::string> candidate_ids;
    std::vector<double> candidate_years;
    // impact[t] is row-major candidates x pairs for target t.
    std::vector<std::vector<double>> impact;

    std::size_t candidate_count() const { return candidate_ids.size(); }
    double target_year_mean() const;  // lambda-weighted mean publish year
    void finalize();                  // computes base aggregates, checks shapes
};

// Builds the instance for corpus targets against an explicit candidate
// pool.  Candidates equal to a target, without topics, or absent from the
// corpus are dropped.
RewardInstance build_reward_instance(const TargetSet& targets,
                                     const std::vector<std::string>& candidate_pool,
                                     const Corpus& corpus, const SimilarityCache& cache,
                                     const CoCitationIndex& index, const AnalysisConfig& config);

double reward(const RewardInstance& instance, const std::vector<std::size_t>& selected);

// Incremental gain evaluation against running per-pair maxima.
class RewardState {
public:
    explicit RewardState(const RewardInstance& instance);
    double current_reward() const { return reward_; }
    double gain(std::size_t candidate) const;  // R(A + x) - R(A), O(#pairs)
    void add(std::size_t candidate);

private:
    const RewardInstance& instance_;
    std::vector<std::vector<double>> current_delta_;  // per target, per pair
    double reward_ = 0;
};

struct SelectionStep {
    std::size_t candidate = 0;
    std::string id;
    double marginal_gain = 0;
    double cumulative_reward = 0;
    double accept_probability = 1.0;
};

struct SelectionResult {
    std::vector<SelectionStep> steps;
    double reward = 0;
    std::size_t evaluations = 0;  // marginal-gain computations performed
};

// Greedy maximization under cardinality budget rho.  Stops at zero gain or
// budget exhaustion.  With a decay model, each provisional argmax is
// accepted with probability m(mean target year - candidate year) and
// permanently removed from the pool on rejection.  lazy=true uses
// stale-upper-bound priority ordering and returns the identical set as the
// eager variant when decay == nullptr.
SelectionResult greedy_select(const RewardInstance& instance, int rho,
                              const TemporalDecayModel* decay, std::uint64_t rng_seed,
                              bool lazy);

// Exact maximum over all candidate subsets of size <= rho.  Guarded to
// |candidates| <= 20 and rho <= 5.
std::pair<std::vector<std::size_t>, double> brute_force_select(const RewardInstance& instance,
                                                               int rho);

// |A intersect Q| / |A|.  Throws on empty A.
double precision(const std::vector<std::string>& selected, const std::vector<std::string>& reading_set);

}  // namespace crea
