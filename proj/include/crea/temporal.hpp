#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "crea/corpus.hpp"
#include "crea/ingest.hpp"

namespace crea {

// Converts an epoch-seconds timestamp to a fractional calendar year.
double timestamp_to_year(std::int64_t epoch_seconds);

// Empirical survival function m(dt) over consumption/production intervals:
// m(dt) = fraction of observed intervals >= dt, on fixed-width year bins.
// m(0) = 1, m is non-increasing, and m vanishes beyond the largest
// observed interval.
class TemporalDecayModel {
public:
    TemporalDecayModel() = default;

    DecayMode mode() const { return mode_; }
    double bin_width() const { return bin_width_; }
    std::size_t sample_count() const { return sample_count_; }
    const std::vector<double>& survival() const { return survival_; }

    // m looked up at floor(dt / bin) * bin; dt < 0 -> 0; beyond the last
    // bin -> 0.
    double influence_probability(double delta_t) const;

    // Two-column text: bin_start_years m, one row per bin, '#' comments.
    void save(std::ostream& out) const;
    static TemporalDecayModel load(std::istream& in);

    friend TemporalDecayModel fit_decay(const std::vector<double>& intervals, double bin_width,
                                        DecayMode mode);

private:
    DecayMode mode_ = DecayMode::reading;
    double bin_width_ = 1.0;
    std::vector<double> survival_;  // survival_[b] = m(b * bin_width)
    std::size_t sample_count_ = 0;
};

// Intervals between consumption (or prior publication) and publication, in
// years.  mode=reading: t^p_k - median reading year of x, for x in
// C_k intersected with the reading set.  mode=publishing: t^p_k - t^p_x for
// in-corpus references x.  Non-positive intervals are excluded.  Throws
// when no qualifying pairs exist.
std::vector<double> collect_intervals(const Corpus& corpus, const ReadingLog& readings,
                                      DecayMode mode);

TemporalDecayModel fit_decay(const std::vector<double>& intervals, double bin_width = 1.0,
                             DecayMode mode = DecayMode::reading);

}  // namespace crea
