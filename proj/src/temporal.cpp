#include "crea/temporal.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace crea {

namespace {
constexpr double kSecondsPerYear = 31556952.0;  // mean Gregorian year
}

double timestamp_to_year(std::int64_t epoch_seconds) {
    return 1970.0 + static_cast<double>(epoch_seconds) / kSecondsPerYear;
}

std::vector<double> collect_intervals(const Corpus& corpus, const ReadingLog& readings,
                                      DecayMode mode) {
    if (mode == DecayMode::none) throw std::runtime_error("collect_intervals: mode is none");
    std::vector<double> intervals;
    for (const PaperRecord& k : corpus.papers()) {
        const double publish = static_cast<double>(k.publish_year);
        for (const std::string& x : k.references) {
            double tau;
            if (mode == DecayMode::reading) {
                if (!readings.contains(x)) continue;
                tau = publish - timestamp_to_year(readings.median_time(x));
            } else {
                const PaperRecord* ref = corpus.find(x);
                if (!ref) continue;
                tau = publish - static_cast<double>(ref->publish_year);
            }
            if (tau > 0) intervals.push_back(tau);
        }
    }
    if (intervals.empty()) throw std::runtime_error("insufficient interval data");
    return intervals;
}

TemporalDecayModel fit_decay(const std::vector<double>& intervals, double bin_width,
                             DecayMode mode) {
    if (intervals.empty()) throw std::runtime_error("fit_decay: empty interval list");
    if (!(bin_width > 0)) throw std::runtime_error("fit_decay: bin width must be positive");
    for (double t : intervals)
        if (!(t > 0)) throw std::runtime_error("fit_decay: non-positive interval");

    const double max_interval = *std::max_element(intervals.begin(), intervals.end());
    const auto n_bins = static_cast<std::size_t>(std::floor(max_interval / bin_width)) + 1;

    // Count intervals per bin, then accumulate the tail.
    std::vector<std::size_t> per_bin(n_bins, 0);
    for (double t : intervals) {
        auto b = static_cast<std::size_t>(std::floor(t / bin_width));
        per_bin[std::min(b, n_bins - 1)] += 1;
    }
    TemporalDecayModel m;
    m.mode_ = mode;
    m.bin_width_ = bin_width;
    m.sample_count_ = intervals.size();
    m.survival_.resize(n_bins + 1, 0.0);
    std::size_t tail = 0;
    for (std::size_t b = n_bins; b-- > 0;) {
        tail += per_bin[b];
        // m(b*bin) = fraction of intervals >= b*bin; intervals in bin b are
        // all >= b*bin, so the tail count from bin b onward is exact.
        m.survival_[b] = static_cast<double>(tail) / static_cast<double>(intervals.size());
    }
    m.survival_[0] = 1.0;
    return m;
}

double TemporalDecayModel::influence_probability(double delta_t) const {
    if (delta_t < 0) return 0.0;
    if (survival_.empty()) return 0.0;
    const auto b = static_cast<std::size_t>(std::floor(delta_t / bin_width_));
    if (b >= survival_.size()) return 0.0;
    return survival_[b];
}

void TemporalDecayModel::save(std::ostream& out) const {
    out << "# mode " << (mode_ == DecayMode::publishing ? "publishing" : "reading") << "\n";
    out << "# bin_width " << bin_width_ << "\n";
    out << "# samples " << sample_count_ << "\n";
    out << "bin_start_years m\n";
    out.precision(17);
    for (std::size_t b = 0; b < survival_.size(); ++b)
        out << (static_cast<double>(b) * bin_width_) << " " << survival_[b] << "\n";
}

TemporalDecayModel TemporalDecayModel::load(std::istream& in) {
    TemporalDecayModel m;
    m.bin_width_ = 0;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream ss(line.substr(1));
            std::string key;
            ss >> key;
            if (key == "mode") {
                std::string v;
                ss >> v;
                m.mode_ = v == "publishing" ? DecayMode::publishing : DecayMode::reading;
            } else if (key == "bin_width") {
                ss >> m.bin_width_;
            } else if (key == "samples") {
                ss >> m.sample_count_;
            }
            continue;
        }
        if (!header_seen) {
            header_seen = true;  // column header row
            continue;
        }
        std::istringstream ss(line);
        double bin_start, value;
        if (!(ss >> bin_start >> value))
            throw std::runtime_error("malformed decay model row: " + line);
        m.survival_.push_back(value);
    }
    if (m.survival_.empty()) throw std::runtime_error("empty decay model file");
    if (!(m.bin_width_ > 0)) m.bin_width_ = 1.0;
    return m;
}

}  // namespace crea
