#include "crea/decomposition.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace crea {

double pair_impact(double phi_ij, double phi_ix, double phi_xj) {
    return phi_ij - std::min(phi_ij, std::max(phi_ix, phi_xj));
}

double path_impact(double phi_ij, const std::vector<double>& chain_scores) {
    if (chain_scores.empty()) throw std::runtime_error("path_impact: empty chain");
    const double weakest = *std::max_element(chain_scores.begin(), chain_scores.end());
    return phi_ij - std::min(phi_ij, weakest);
}

EnablerChoice best_enabler(const std::vector<EnablerCandidate>& candidates) {
    EnablerChoice choice;
    for (const EnablerCandidate& c : candidates) {
        if (!choice.enabler || c.delta > choice.delta ||
            (c.delta == choice.delta && c.id < *choice.enabler)) {
            choice.enabler = c.id;
            choice.delta = c.delta;
        }
    }
    if (!choice.enabler || choice.delta <= 0) return {};
    return choice;
}

std::uint64_t pair_rng_seed(std::uint64_t base_seed, const std::string& k, const std::string& i,
                            const std::string& j) {
    auto mix = [](std::uint64_t h, std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        // splitmix64 finalizer
        h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
        h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
        return h ^ (h >> 31);
    };
    std::hash<std::string> hs;
    std::uint64_t h = mix(base_seed, hs(k));
    h = mix(h, hs(i));
    return mix(h, hs(j));
}

EnablerChoice sample_enabler(const std::vector<EnablerCandidate>& candidates,
                             std::uint64_t rng_seed) {
    std::vector<const EnablerCandidate*> order;
    order.reserve(candidates.size());
    for (const EnablerCandidate& c : candidates)
        if (c.delta > 0) order.push_back(&c);
    std::sort(order.begin(), order.end(), [](const EnablerCandidate* a, const EnablerCandidate* b) {
        if (a->delta != b->delta) return a->delta > b->delta;
        return a->id < b->id;
    });
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    for (const EnablerCandidate* c : order) {
        if (uniform(rng) < c->accept_prob) return {c->id, c->delta};
    }
    return {};
}

DecompositionResult decompose(const std::string& k, const std::vector<std::string>& reading_set,
                              const Corpus& corpus, const SimilarityCache& cache,
                              const CoCitationIndex& index, const ReadingLog* readings,
                              const TemporalDecayModel* decay, const AnalysisConfig& config) {
    PaperCreativity pc = paper_creativity(cache, index, corpus, k, config);
    DecompositionResult result;
    result.paper_id = k;
    if (pc.insufficient_references) {
        result.insufficient_references = true;
        return result;
    }
    const PaperRecord* paper = corpus.find(k);
    const double publish = static_cast<double>(paper->publish_year);

    // Resolve reading candidates once; candidates without topics are skipped.
    struct Candidate {
        const PaperRecord* paper;
        double accept_prob;
    };
    std::vector<Candidate> candidates;
    for (const std::string& x : reading_set) {
        const PaperRecord* px = corpus.find(x);
        if (!px || px->topics.empty()) continue;
        double prob = 1.0;
        if (decay) {
            double tau;
            if (decay->mode() == DecayMode::publishing) {
                tau = publish - static_cast<double>(px->publish_year);
            } else {
                if (!readings || !readings->contains(x)) continue;
                tau = publish - timestamp_to_year(readings->median_time(x));
            }
            prob = decay->influence_probability(tau);
        }
        candidates.push_back({px, prob});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.paper->id < b.paper->id; });

    // phi between each reference endpoint and each candidate, memoized per
    // endpoint (endpoints repeat across pairs).
    std::unordered_map<std::string, std::vector<double>> endpoint_phi;
    auto phis_for = [&](const std::string& endpoint) -> const std::vector<double>& {
        auto it = endpoint_phi.find(endpoint);
        if (it != endpoint_phi.end()) return it->second;
        const PaperRecord* pe = corpus.find(endpoint);
        std::vector<double> v(candidates.size(), 0.0);
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const PaperRecord* px = candidates[c].paper;
            if (px->id == endpoint) {
                v[c] = 0.0;  // excluded per pair below
                continue;
            }
            v[c] = creativity_score(cache, index, *pe, *px, paper->publish_year, config.sigma)
                       .creativity;
        }
        return endpoint_phi.emplace(endpoint, std::move(v)).first->second;
    };

    std::vector<double> residuals;
    residuals.reserve(pc.pairs.size());
    for (const PairScore& pair : pc.pairs) {
        const std::vector<double>& phi_i = phis_for(pair.i);
        const std::vector<double>& phi_j = phis_for(pair.j);
        std::vector<EnablerCandidate> pool;
        pool.reserve(candidates.size());
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const std::string& xid = candidates[c].paper->id;
            if (xid == pair.i || xid == pair.j) continue;
            EnablerCandidate ec;
            ec.id = xid;
            ec.delta = pair_impact(pair.creativity, phi_i[c], phi_j[c]);
            ec.accept_prob = candidates[c].accept_prob;
            pool.push_back(std::move(ec));
        }
        EnablerChoice choice =
            decay ? sample_enabler(pool, pair_rng_seed(config.rng_seed, k, pair.i, pair.j))
                  : best_enabler(pool);
        result.pairs.push_back({pair.i, pair.j, pair.creativity, choice.enabler, choice.delta});
        residuals.push_back(pair.creativity - choice.delta);
    }
    result.phi = pc.phi;
    result.inspiration = aggregate(residuals, config.aggregator);
    result.preparation = result.phi - result.inspiration;
    return result;
}

}  // namespace crea
