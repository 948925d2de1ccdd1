#include "crea/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace crea {

double RewardInstance::target_year_mean() const {
    double mean = 0;
    for (const Target& t : targets) mean += t.weight * t.publish_year;
    return mean;
}

namespace {

// Linear form of the aggregator evaluated at the rank it selects on the
// base scores: mean weights for avg, a unit weight on the chosen order
// statistic otherwise (ties resolved by index for determinism).
std::vector<double> rank_weights(const std::vector<double>& phi, const Aggregator& agg) {
    const std::size_t n = phi.size();
    std::vector<double> w(n, 0.0);
    if (n == 0) return w;
    if (agg.kind == Aggregator::Kind::average) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(n));
        return w;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (phi[a] != phi[b]) return phi[a] < phi[b];
        return a < b;
    });
    std::size_t r = n - 1;  // maximum
    if (agg.kind == Aggregator::Kind::median) {
        r = (n - 1) / 2;
    } else if (agg.kind == Aggregator::Kind::percentile) {
        auto rank =
            static_cast<std::size_t>(std::ceil(agg.q / 100.0 * static_cast<double>(n)));
        r = std::clamp<std::size_t>(rank, 1, n) - 1;
    }
    w[order[r]] = 1.0;
    return w;
}

}  // namespace

void RewardInstance::finalize() {
    if (targets.empty()) throw std::runtime_error("reward instance has no targets");
    if (impact.size() != targets.size())
        throw std::runtime_error("impact matrix does not match target count");
    double weight_sum = 0;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        Target& tgt = targets[t];
        weight_sum += tgt.weight;
        if (tgt.weight < 0) throw std::runtime_error("negative target weight");
        tgt.rank_weight = rank_weights(tgt.pair_phi, aggregator);
        if (!tgt.pair_phi.empty())
            tgt.base_aggregate = aggregate(tgt.pair_phi, aggregator);
        if (impact[t].size() != tgt.pair_phi.size() * candidate_ids.size())
            throw std::runtime_error("impact matrix shape mismatch for target " + tgt.id);
    }
    if (std::abs(weight_sum - 1.0) > 1e-9)
        throw std::runtime_error("target weights must sum to 1");
    if (candidate_years.size() != candidate_ids.size())
        throw std::runtime_error("candidate year list shape mismatch");
}

RewardInstance build_reward_instance(const TargetSet& targets,
                                     const std::vector<std::string>& candidate_pool,
                                     const Corpus& corpus, const SimilarityCache& cache,
                                     const CoCitationIndex& index, const AnalysisConfig& config) {
    RewardInstance inst;
    inst.aggregator = config.aggregator;

    std::unordered_set<std::string> target_ids;
    std::vector<PaperCreativity> traces;
    for (const auto& [id, weight] : targets.targets) {
        const PaperRecord* p = corpus.find(id);
        if (!p) throw std::runtime_error("target '" + id + "' not in corpus");
        target_ids.insert(id);
        RewardInstance::Target t;
        t.id = id;
        t.weight = weight;
        t.publish_year = static_cast<double>(p->publish_year);
        traces.push_back(paper_creativity(cache, index, corpus, id, config));
        for (const PairScore& s : traces.back().pairs) t.pair_phi.push_back(s.creativity);
        inst.targets.push_back(std::move(t));
    }

    for (const std::string& x : candidate_pool) {
        const PaperRecord* px = corpus.find(x);
        if (!px || px->topics.empty() || target_ids.count(x)) continue;
        inst.candidate_ids.push_back(x);
        inst.candidate_years.push_back(static_cast<double>(px->publish_year));
    }

    inst.impact.resize(inst.targets.size());
    for (std::size_t t = 0; t < inst.targets.size(); ++t) {
        const PaperCreativity& trace = traces[t];
        const int year = corpus.find(inst.targets[t].id)->publish_year;
        const std::size_t n_pairs = trace.pairs.size();
        inst.impact[t].assign(inst.candidate_ids.size() * n_pairs, 0.0);
        if (n_pairs == 0) continue;

        // phi between each distinct pair endpoint and each candidate.
        std::unordered_map<std::string, std::vector<double>> endpoint_phi;
        auto phis_for = [&](const std::string& endpoint) -> const std::vector<double>& {
            auto it = endpoint_phi.find(endpoint);
            if (it != endpoint_phi.end()) return it->second;
            const PaperRecord* pe = corpus.find(endpoint);
            std::vector<double> v(inst.candidate_ids.size(), 1.0);
            for (std::size_t c = 0; c < inst.candidate_ids.size(); ++c) {
                const PaperRecord* px = corpus.find(inst.candidate_ids[c]);
                v[c] = px->id == endpoint
                           ? 1.0  // a pair endpoint cannot bridge its own pair
                           : creativity_score(cache, index, *pe, *px, year, config.sigma)
                                 .creativity;
            }
            return endpoint_phi.emplace(endpoint, std::move(v)).first->second;
        };
        for (std::size_t p = 0; p < n_pairs; ++p) {
            const PairScore& pair = trace.pairs[p];
            const std::vector<double>& phi_i = phis_for(pair.i);
            const std::vector<double>& phi_j = phis_for(pair.j);
            for (std::size_t c = 0; c < inst.candidate_ids.size(); ++c) {
                const std::string& xid = inst.candidate_ids[c];
                if (xid == pair.i || xid == pair.j) continue;
                inst.impact[t][c * n_pairs + p] =
                    pair_impact(pair.creativity, phi_i[c], phi_j[c]);
            }
        }
    }
    inst.finalize();
    return inst;
}

double reward(const RewardInstance& inst, const std::vector<std::size_t>& selected) {
    double total = 0;
    for (std::size_t t = 0; t < inst.targets.size(); ++t) {
        const auto& tgt = inst.targets[t];
        const std::size_t n_pairs = tgt.pair_phi.size();
        if (n_pairs == 0) continue;
        std::vector<double> delta(n_pairs, 0.0);
        for (std::size_t c : selected)
            for (std::size_t p = 0; p < n_pairs; ++p)
                delta[p] = std::max(delta[p], inst.impact[t][c * n_pairs + p]);
        double explained = 0;
        for (std::size_t p = 0; p < n_pairs; ++p) explained += tgt.rank_weight[p] * delta[p];
        total += tgt.weight * explained;
    }
    return total;
}

RewardState::RewardState(const RewardInstance& instance) : instance_(instance) {
    current_delta_.resize(instance.targets.size());
    for (std::size_t t = 0; t < instance.targets.size(); ++t)
        current_delta_[t].assign(instance.targets[t].pair_phi.size(), 0.0);
}

double RewardState::gain(std::size_t candidate) const {
    double g = 0;
    for (std::size_t t = 0; t < instance_.targets.size(); ++t) {
        const auto& tgt = instance_.targets[t];
        const std::size_t n_pairs = tgt.pair_phi.size();
        if (n_pairs == 0) continue;
        const double* row = instance_.impact[t].data() + candidate * n_pairs;
        double inc = 0;
        for (std::size_t p = 0; p < n_pairs; ++p) {
            const double cur = current_delta_[t][p];
            if (row[p] > cur) inc += tgt.rank_weight[p] * (row[p] - cur);
        }
        g += tgt.weight * inc;
    }
    return g;
}

void RewardState::add(std::size_t candidate) {
    reward_ += gain(candidate);
    for (std::size_t t = 0; t < instance_.targets.size(); ++t) {
        const std::size_t n_pairs = instance_.targets[t].pair_phi.size();
        const double* row = instance_.impact[t].data() + candidate * n_pairs;
        for (std::size_t p = 0; p < n_pairs; ++p)
            current_delta_[t][p] = std::max(current_delta_[t][p], row[p]);
    }
}

namespace {

struct AcceptContext {
    const TemporalDecayModel* decay;
    double mean_target_year;
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> uniform{0.0, 1.0};

    // probability that the candidate survives the temporal Bernoulli trial
    double probability(double candidate_year) const {
        if (!decay) return 1.0;
        return decay->influence_probability(mean_target_year - candidate_year);
    }
    bool accept(double prob) { return uniform(rng) < prob; }
};

SelectionResult eager_greedy(const RewardInstance& inst, int rho, AcceptContext& accept) {
    SelectionResult result;
    RewardState state(inst);
    std::vector<bool> removed(inst.candidate_count(), false);
    for (int step = 0; step < rho; ++step) {
        std::vector<double> gains(inst.candidate_count(), -1.0);
        for (std::size_t c = 0; c < inst.candidate_count(); ++c) {
            if (removed[c]) continue;
            gains[c] = state.gain(c);
            ++result.evaluations;
        }
        bool picked = false;
        while (!picked) {
            std::size_t best = inst.candidate_count();
            for (std::size_t c = 0; c < inst.candidate_count(); ++c) {
                if (removed[c]) continue;
                if (best == inst.candidate_count() || gains[c] > gains[best] ||
                    (gains[c] == gains[best] &&
                     inst.candidate_ids[c] < inst.candidate_ids[best]))
                    best = c;
            }
            if (best == inst.candidate_count() || gains[best] <= 0) return result;
            const double prob = accept.probability(inst.candidate_years[best]);
            if (!accept.accept(prob)) {
                removed[best] = true;  // permanent removal on rejection
                continue;
            }
            state.add(best);
            removed[best] = true;
            result.steps.push_back({best, inst.candidate_ids[best], gains[best],
                                    state.current_reward(), prob});
            result.reward = state.current_reward();
            picked = true;
        }
    }
    return result;
}

SelectionResult lazy_greedy(const RewardInstance& inst, int rho, AcceptContext& accept) {
    SelectionResult result;
    RewardState state(inst);

    struct Entry {
        double bound;
        std::size_t candidate;
        int computed_at;  // selection-step index the bound is valid for
    };
    auto worse = [&](const Entry& a, const Entry& b) {
        if (a.bound != b.bound) return a.bound < b.bound;
        return inst.candidate_ids[a.candidate] > inst.candidate_ids[b.candidate];
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> queue(worse);
    for (std::size_t c = 0; c < inst.candidate_count(); ++c) {
        const double g = state.gain(c);
        ++result.evaluations;
        if (g > 0) queue.push({g, c, 0});
    }
    std::vector<bool> removed(inst.candidate_count(), false);
    int step = 0;
    while (step < rho && !queue.empty()) {
        Entry top = queue.top();
        queue.pop();
        if (removed[top.candidate]) continue;
        if (top.computed_at != step) {
            // stale upper bound: refresh (submodularity: gains only shrink)
            top.bound = state.gain(top.candidate);
            ++result.evaluations;
            top.computed_at = step;
            if (top.bound > 0) queue.push(top);
            continue;
        }
        if (top.bound <= 0) break;
        const double prob = accept.probability(inst.candidate_years[top.candidate]);
        if (!accept.accept(prob)) {
            removed[top.candidate] = true;
            continue;
        }
        state.add(top.candidate);
        removed[top.candidate] = true;
        result.steps.push_back({top.candidate, inst.candidate_ids[top.candidate], top.bound,
                                state.current_reward(), prob});
        result.reward = state.current_reward();
        ++step;
    }
    return result;
}

}  // namespace

SelectionResult greedy_select(const RewardInstance& instance, int rho,
                              const TemporalDecayModel* decay, std::uint64_t rng_seed,
                              bool lazy) {
    if (rho < 1) throw std::runtime_error("budget rho must be >= 1");
    if (instance.candidate_count() == 0) throw std::runtime_error("empty candidate set");
    AcceptContext accept{decay, instance.target_year_mean(), std::mt19937_64(rng_seed)};
    return lazy ? lazy_greedy(instance, rho, accept) : eager_greedy(instance, rho, accept);
}

std::pair<std::vector<std::size_t>, double> brute_force_select(const RewardInstance& instance,
                                                               int rho) {
    const std::size_t n = instance.candidate_count();
    if (n > 20 || rho > 5) throw std::runtime_error("brute_force_select size guard violated");
    if (rho < 1) throw std::runtime_error("budget rho must be >= 1");

    std::vector<std::size_t> best;
    double best_reward = 0;  // R(empty) = 0
    std::vector<std::size_t> combo;
    auto recurse = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (!combo.empty()) {
            const double r = reward(instance, combo);
            if (r > best_reward) {
                best_reward = r;
                best = combo;
            }
        }
        if (remaining == 0) return;
        for (std::size_t c = start; c < n; ++c) {
            combo.push_back(c);
            self(self, c + 1, remaining - 1);
            combo.pop_back();
        }
    };
    recurse(recurse, 0, std::min<int>(rho, static_cast<int>(n)));
    return {best, best_reward};
}

double precision(const std::vector<std::string>& selected,
                 const std::vector<std::string>& reading_set) {
    if (selected.empty()) throw std::runtime_error("precision: empty selection");
    std::unordered_set<std::string> q(reading_set.begin(), reading_set.end());
    std::size_t hits = 0;
    for (const std::string& id : selected) hits += q.count(id);
    return static_cast<double>(hits) / static_cast<double>(selected.size());
}

}  // namespace crea
