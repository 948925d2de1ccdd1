// Command-line front end: corpus validation, creativity scoring,
// preparation/inspiration decomposition, temporal-decay fitting, enabler
// prediction, dependency matrices, and plot-data export.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "crea/creativity.hpp"
#include "crea/decomposition.hpp"
#include "crea/dependency.hpp"
#include "crea/ingest.hpp"
#include "crea/optimizer.hpp"
#include "crea/temporal.hpp"

using namespace crea;

namespace {

constexpr int kExitValidation = 1;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    return in;
}

Aggregator parse_aggregator(const std::string& spec) {
    if (spec == "avg" || spec == "average") return Aggregator::average();
    if (spec == "median") return Aggregator::median();
    if (spec == "max" || spec == "maximum") return Aggregator::maximum();
    if (spec.rfind("p:", 0) == 0) {
        const double q = std::stod(spec.substr(2));
        if (q < 0 || q > 100) throw CLI::ValidationError("percentile q out of [0,100]");
        return Aggregator::percentile(q);
    }
    throw CLI::ValidationError("unknown aggregator '" + spec + "' (avg|median|p:<q>|max)");
}

DecayMode parse_decay(const std::string& spec) {
    if (spec == "none") return DecayMode::none;
    if (spec == "reading") return DecayMode::reading;
    if (spec == "publishing") return DecayMode::publishing;
    throw CLI::ValidationError("unknown decay mode '" + spec + "'");
}

struct CommonOpts {
    std::string papers_path;
    std::string topics_path;
    std::string readings_path;
    double sigma = 0.8;
    std::string aggregate = "avg";
    std::uint64_t seed = 0;
    std::string decay = "none";
    unsigned threads = 0;

    AnalysisConfig config() const {
        AnalysisConfig c;
        c.sigma = sigma;
        c.aggregator = parse_aggregator(aggregate);
        c.rng_seed = seed;
        c.decay_mode = parse_decay(decay);
        return c;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool readings_required = false) {
    cmd->add_option("--papers", o.papers_path, "papers jsonl file")->required();
    cmd->add_option("--topics", o.topics_path, "topic hierarchy jsonl file")->required();
    auto* r = cmd->add_option("--readings", o.readings_path, "reading events jsonl file");
    if (readings_required) r->required();
    cmd->add_option("--sigma", o.sigma, "level discount in (0,1]")->capture_default_str();
    cmd->add_option("--aggregate", o.aggregate, "aggregator: avg|median|p:<q>|max")
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "rng seed")->capture_default_str();
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
}

struct Workspace {
    Corpus corpus;
    TopicHierarchy hierarchy;
    CoCitationIndex index;
    ReadingLog readings;
    bool has_readings = false;
};

Workspace load(const CommonOpts& o, bool need_index = true) {
    Workspace w;
    {
        auto in = open_in(o.topics_path);
        w.hierarchy = parse_topic_hierarchy(in);
    }
    std::vector<PaperRecord> papers;
    {
        auto in = open_in(o.papers_path);
        papers = parse_papers(in);
    }
    auto report = validate_corpus(papers, w.hierarchy);
    for (const Violation& v : report) {
        if (v.severity == Violation::Severity::error)
            throw std::runtime_error("invalid corpus: paper '" + v.paper_id + "': " + v.message);
    }
    if (need_index) w.index = build_cocitation_index(papers);
    w.corpus = Corpus(std::move(papers));
    if (!o.readings_path.empty()) {
        auto in = open_in(o.readings_path);
        w.readings = parse_readings(in);
        w.has_readings = true;
    }
    return w;
}

// Chunked parallel loop; results must be written to per-index slots so the
// outcome is independent of the thread count.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < n; i += threads) body(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

// Level-3 ancestor with the largest propagated weight over the paper's
// topics (ties by id); empty string when the paper has no topics.
std::string discipline_of(const PaperRecord& p, const TopicHierarchy& h) {
    std::map<std::string, double> weights;
    for (const std::string& t : p.topics)
        for (const auto& [idx, w] : h.ancestors(t, kTopLevel)) weights[h.id_of(idx)] += w;
    std::string best;
    double best_w = -1;
    for (const auto& [id, w] : weights) {
        if (w > best_w + 1e-12) {
            best = id;
            best_w = w;
        }
    }
    return best;
}

std::string sanitize_filename(const std::string& s) {
    std::string out;
    for (char c : s) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '_';
    return out.empty() ? "_untagged" : out;
}

std::string with_suffix(const std::string& path, const std::string& tag) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
        return path + "." + tag;
    return path.substr(0, dot) + "." + tag + path.substr(dot);
}

TemporalDecayModel fit_decay_for(const Workspace& w, DecayMode mode) {
    if (mode == DecayMode::reading && !w.has_readings)
        throw std::runtime_error("--decay reading requires --readings");
    return fit_decay(collect_intervals(w.corpus, w.readings, mode), 1.0, mode);
}

// ---- subcommand bodies ------------------------------------------------

int run_validate(const CommonOpts& o) {
    Workspace w;
    {
        auto in = open_in(o.topics_path);
        w.hierarchy = parse_topic_hierarchy(in);
    }
    std::vector<PaperRecord> papers;
    {
        auto in = open_in(o.papers_path);
        papers = parse_papers(in);
    }
    auto report = validate_corpus(papers, w.hierarchy);
    bool any_error = false;
    for (const Violation& v : report) {
        const bool err = v.severity == Violation::Severity::error;
        any_error |= err;
        std::cout << (err ? "error" : "warning") << "," << csv_escape(v.paper_id) << ","
                  << csv_escape(v.message) << "\n";
    }
    if (!o.readings_path.empty()) {
        auto in = open_in(o.readings_path);
        auto log = parse_readings(in);
        std::cerr << "readings: " << log.event_count() << " events over " << log.paper_count()
                  << " papers\n";
    }
    std::cerr << "papers: " << papers.size() << ", violations: " << report.size() << "\n";
    return any_error ? kExitValidation : 0;
}

int run_score(const CommonOpts& o, const std::string& out_path, bool group_by_discipline) {
    Workspace w = load(o);
    SimilarityCache cache(w.hierarchy);
    const AnalysisConfig config = o.config();

    const auto& papers = w.corpus.papers();
    std::vector<PaperCreativity> results(papers.size());
    parallel_for(papers.size(), o.threads, [&](std::size_t i) {
        results[i] = paper_creativity(cache, w.index, w.corpus, papers[i].id, config);
    });

    auto write_rows = [&](std::ostream& out, const std::vector<std::size_t>& rows) {
        out << "id,phi,n_pairs,insufficient_references\n";
        for (std::size_t i : rows) {
            const auto& r = results[i];
            out << csv_escape(r.paper_id) << "," << fmt(r.phi) << "," << r.pairs.size() << ","
                << (r.insufficient_references ? 1 : 0) << "\n";
        }
    };

    if (!group_by_discipline) {
        auto out = open_out(out_path);
        std::vector<std::size_t> all(papers.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        write_rows(out, all);
    } else {
        std::map<std::string, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < papers.size(); ++i)
            groups[discipline_of(papers[i], w.hierarchy)].push_back(i);
        for (const auto& [disc, rows] : groups) {
            auto out = open_out(with_suffix(out_path, sanitize_filename(disc)));
            write_rows(out, rows);
        }
    }
    return 0;
}

int run_decompose(const CommonOpts& o, const std::string& out_path, const std::string& trace_path,
                  const std::string& model_path, int repeat) {
    Workspace w = load(o);
    SimilarityCache cache(w.hierarchy);
    AnalysisConfig config = o.config();

    TemporalDecayModel decay;
    const TemporalDecayModel* decay_ptr = nullptr;
    if (config.decay_mode != DecayMode::none) {
        if (!model_path.empty()) {
            auto in = open_in(model_path);
            decay = TemporalDecayModel::load(in);
        } else {
            decay = fit_decay_for(w, config.decay_mode);
        }
        decay_ptr = &decay;
    }

    std::vector<std::string> reading_set = w.has_readings ? w.readings.paper_ids()
                                                          : std::vector<std::string>{};
    const auto& papers = w.corpus.papers();

    struct Row {
        DecompositionResult base;
        double psi_mean = 0, psi_std = 0, chi_mean = 0, chi_std = 0;
    };
    std::vector<Row> rows(papers.size());
    parallel_for(papers.size(), o.threads, [&](std::size_t i) {
        Row row;
        std::vector<double> psis, chis;
        for (int rep = 0; rep < repeat; ++rep) {
            AnalysisConfig c = config;
            c.rng_seed = config.rng_seed + static_cast<std::uint64_t>(rep);
            auto r = decompose(papers[i].id, reading_set, w.corpus, cache, w.index,
                               w.has_readings ? &w.readings : nullptr, decay_ptr, c);
            if (rep == 0) row.base = r;
            psis.push_back(r.preparation);
            chis.push_back(r.inspiration);
        }
        auto mean_std = [](const std::vector<double>& v) {
            double m = 0;
            for (double x : v) m += x;
            m /= static_cast<double>(v.size());
            double s2 = 0;
            for (double x : v) s2 += (x - m) * (x - m);
            const double sd = v.size() > 1 ? std::sqrt(s2 / static_cast<double>(v.size() - 1)) : 0;
            return std::pair{m, sd};
        };
        std::tie(row.psi_mean, row.psi_std) = mean_std(psis);
        std::tie(row.chi_mean, row.chi_std) = mean_std(chis);
        rows[i] = std::move(row);
    });

    auto out = open_out(out_path);
    out << "k,phi,psi,chi,n_pairs,n_pairs_with_enabler";
    if (repeat > 1) out << ",psi_std,chi_std";
    out << "\n";
    for (const Row& row : rows) {
        std::size_t with_enabler = 0;
        for (const auto& p : row.base.pairs) with_enabler += p.enabler.has_value();
        out << csv_escape(row.base.paper_id) << "," << fmt(row.base.phi) << ","
            << fmt(row.psi_mean) << "," << fmt(row.chi_mean) << "," << row.base.pairs.size()
            << "," << with_enabler;
        if (repeat > 1) out << "," << fmt(row.psi_std) << "," << fmt(row.chi_std);
        out << "\n";
    }
    if (!trace_path.empty()) {
        auto trace = open_out(trace_path);
        trace << "k,i,j,phi_ij,enabler,delta\n";
        for (const Row& row : rows)
            for (const auto& p : row.base.pairs)
                trace << csv_escape(row.base.paper_id) << "," << csv_escape(p.i) << ","
                      << csv_escape(p.j) << "," << fmt(p.creativity) << ","
                      << csv_escape(p.enabler.value_or("")) << "," << fmt(p.impact) << "\n";
    }
    return 0;
}

int run_fit_temporal(const CommonOpts& o, const std::string& mode_str,
                     const std::string& out_path, double bin) {
    const DecayMode mode = parse_decay(mode_str);
    if (mode == DecayMode::none) throw CLI::ValidationError("--mode must be reading|publishing");
    CommonOpts opts = o;
    Workspace w = load(opts, false);
    auto model = fit_decay(collect_intervals(w.corpus, w.readings, mode), bin, mode);
    auto out = open_out(out_path);
    model.save(out);
    std::cerr << "fitted " << model.sample_count() << " intervals over "
              << model.survival().size() << " bins\n";
    return 0;
}

int run_predict(const CommonOpts& o, const std::vector<std::string>& targets,
                const std::string& out_path, int budget, int candidates_before,
                const std::string& model_path, int laziness) {
    Workspace w = load(o);
    SimilarityCache cache(w.hierarchy);
    AnalysisConfig config = o.config();

    TargetSet target_set;
    for (const std::string& t : targets)
        target_set.targets.emplace_back(t, 1.0 / static_cast<double>(targets.size()));

    std::vector<std::string> pool;
    for (const PaperRecord& p : w.corpus.papers())
        if (p.publish_year < candidates_before) pool.push_back(p.id);
    if (pool.empty()) throw std::runtime_error("no candidates before year " +
                                               std::to_string(candidates_before));

    auto instance = build_reward_instance(target_set, pool, w.corpus, cache, w.index, config);

    TemporalDecayModel decay;
    const TemporalDecayModel* decay_ptr = nullptr;
    if (config.decay_mode != DecayMode::none) {
        if (!model_path.empty()) {
            auto in = open_in(model_path);
            decay = TemporalDecayModel::load(in);
        } else {
            decay = fit_decay_for(w, DecayMode::publishing);
        }
        decay_ptr = &decay;
    }

    const bool lazy = laziness < 0 ? instance.candidate_count() > 10000 : laziness > 0;
    auto result = greedy_select(instance, budget, decay_ptr, config.rng_seed, lazy);

    auto out = open_out(out_path);
    out << "step,paper_id,marginal_gain,cumulative_R,accepted_probability\n";
    for (std::size_t s = 0; s < result.steps.size(); ++s) {
        const auto& step = result.steps[s];
        out << (s + 1) << "," << csv_escape(step.id) << "," << fmt(step.marginal_gain) << ","
            << fmt(step.cumulative_reward) << "," << fmt(step.accept_probability) << "\n";
    }
    std::cout << "candidates," << instance.candidate_count() << "\n";
    std::cout << "selected," << result.steps.size() << "\n";
    std::cout << "reward," << fmt(result.reward) << "\n";
    std::cout << "evaluations," << result.evaluations << "\n";
    if (w.has_readings && !result.steps.empty()) {
        std::vector<std::string> selected;
        for (const auto& step : result.steps) selected.push_back(step.id);
        std::cout << "precision," << fmt(precision(selected, w.readings.paper_ids())) << "\n";
    }
    return 0;
}

struct DependencyMatrix {
    std::vector<int> prod_years, cons_years;
    std::vector<std::vector<std::string>> cells;  // formatted values, "" = undefined
};

DependencyMatrix dependency_matrix(const Workspace& w, const SimilarityCache& cache,
                                   double sigma, const std::string& measure, int prod_lo,
                                   int prod_hi, int cons_lo, int cons_hi) {
    DependencyMatrix m;
    for (int t = prod_lo; t <= prod_hi; ++t) m.prod_years.push_back(t);
    for (int t = cons_lo; t <= cons_hi; ++t) m.cons_years.push_back(t);

    // reading year of a paper = year of its median timestamp
    std::map<int, std::vector<std::string>> read_by_year;
    for (const std::string& id : w.readings.paper_ids()) {
        const int year = static_cast<int>(std::floor(timestamp_to_year(w.readings.median_time(id))));
        read_by_year[year].push_back(id);
    }
    std::map<int, std::vector<const PaperRecord*>> published_by_year;
    for (const PaperRecord& p : w.corpus.papers())
        published_by_year[p.publish_year].push_back(&p);

    for (int t : m.prod_years) {
        std::vector<std::string> row;
        const auto& produced = published_by_year[t];
        std::vector<std::string> referenced;
        for (const PaperRecord* p : produced)
            referenced.insert(referenced.end(), p->references.begin(), p->references.end());
        std::sort(referenced.begin(), referenced.end());
        referenced.erase(std::unique(referenced.begin(), referenced.end()), referenced.end());

        for (int tp : m.cons_years) {
            const auto& read_ids = read_by_year[tp];
            try {
                if (measure == "paper") {
                    row.push_back(fmt(paper_level_dependency(referenced, read_ids)));
                } else {
                    std::vector<const PaperRecord*> read_papers;
                    for (const std::string& id : read_ids) {
                        const PaperRecord* p = w.corpus.find(id);
                        if (p) read_papers.push_back(p);
                    }
                    row.push_back(fmt(topic_level_dependency(produced, read_papers, cache, sigma)));
                }
            } catch (const std::exception&) {
                row.emplace_back();  // undefined cell
            }
        }
        m.cells.push_back(std::move(row));
    }
    return m;
}

void write_dependency_matrix(std::ostream& out, const DependencyMatrix& m) {
    out << "t";
    for (int tp : m.cons_years) out << ",t" << tp;
    out << "\n";
    for (std::size_t r = 0; r < m.prod_years.size(); ++r) {
        out << m.prod_years[r];
        for (const std::string& cell : m.cells[r]) out << "," << cell;
        out << "\n";
    }
}

bool parse_year_range(const std::string& spec, int& lo, int& hi) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) return false;
    lo = std::stoi(spec.substr(0, colon));
    hi = std::stoi(spec.substr(colon + 1));
    return lo <= hi;
}

int run_dependency(const CommonOpts& o, const std::string& out_path, const std::string& measure,
                   const std::string& prod_range, const std::string& cons_range) {
    int plo, phi, clo, chi;
    if (!parse_year_range(prod_range, plo, phi) || !parse_year_range(cons_range, clo, chi))
        throw CLI::ValidationError("year ranges must be <lo>:<hi>");
    if (measure != "paper" && measure != "topic")
        throw CLI::ValidationError("--measure must be paper|topic");
    Workspace w = load(o, false);
    if (!w.has_readings) throw std::runtime_error("dependency requires --readings");
    SimilarityCache cache(w.hierarchy);
    auto m = dependency_matrix(w, cache, o.sigma, measure, plo, phi, clo, chi);
    auto out = open_out(out_path);
    write_dependency_matrix(out, m);
    return 0;
}

int run_export_plot_data(const CommonOpts& o, const std::string& kind,
                         const std::string& out_path, double bin_width,
                         const std::string& mode_str, const std::string& measure,
                         const std::string& prod_range, const std::string& cons_range) {
    if (kind == "dependency_matrix")
        return run_dependency(o, out_path, measure, prod_range, cons_range);

    Workspace w = load(o);
    SimilarityCache cache(w.hierarchy);
    const AnalysisConfig config = o.config();

    auto out = open_out(out_path);
    if (kind == "rarity_cdf" || kind == "score_histogram" || kind == "creativity_cdf") {
        const auto& papers = w.corpus.papers();
        std::vector<PaperCreativity> results(papers.size());
        parallel_for(papers.size(), o.threads, [&](std::size_t i) {
            results[i] = paper_creativity(cache, w.index, w.corpus, papers[i].id, config);
        });
        std::vector<double> values;
        if (kind == "creativity_cdf") {
            for (const auto& r : results)
                if (!r.insufficient_references) values.push_back(r.phi);
        } else {
            for (const auto& r : results)
                for (const auto& p : r.pairs)
                    values.push_back(kind == "rarity_cdf" ? p.rarity : p.creativity);
        }
        if (values.empty()) throw std::runtime_error("no values to export");
        std::sort(values.begin(), values.end());
        if (kind == "score_histogram") {
            const double width = bin_width > 0 ? bin_width : 0.05;
            const auto n_bins =
                static_cast<std::size_t>(std::floor(values.back() / width)) + 1;
            std::vector<std::size_t> counts(n_bins, 0);
            for (double v : values)
                counts[std::min(static_cast<std::size_t>(std::floor(v / width)), n_bins - 1)]++;
            out << "bin_start,count\n";
            for (std::size_t b = 0; b < n_bins; ++b)
                out << fmt(static_cast<double>(b) * width) << "," << counts[b] << "\n";
        } else {
            out << "value,cum_fraction\n";
            const double n = static_cast<double>(values.size());
            for (std::size_t i = 0; i < values.size(); ++i) {
                if (i + 1 < values.size() && values[i + 1] == values[i]) continue;
                out << fmt(values[i]) << "," << fmt(static_cast<double>(i + 1) / n) << "\n";
            }
        }
        return 0;
    }
    if (kind == "interval_histogram") {
        const DecayMode mode = parse_decay(mode_str);
        if (mode == DecayMode::none)
            throw CLI::ValidationError("interval_histogram needs --mode reading|publishing");
        auto intervals = collect_intervals(w.corpus, w.readings, mode);
        const double width = bin_width > 0 ? bin_width : 1.0;
        const double max_v = *std::max_element(intervals.begin(), intervals.end());
        const auto n_bins = static_cast<std::size_t>(std::floor(max_v / width)) + 1;
        std::vector<std::size_t> counts(n_bins, 0);
        for (double v : intervals)
            counts[std::min(static_cast<std::size_t>(std::floor(v / width)), n_bins - 1)]++;
        out << "bin_start,count\n";
        for (std::size_t b = 0; b < n_bins; ++b)
            out << fmt(static_cast<double>(b) * width) << "," << counts[b] << "\n";
        return 0;
    }
    throw CLI::ValidationError("unknown plot kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"creativity analysis of citation corpora"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string out_path, trace_path, model_path, mode_str = "reading", kind;
    std::string measure = "paper", prod_range, cons_range;
    std::vector<std::string> targets;
    bool group_by_discipline = false;
    int repeat = 1, budget = 1, candidates_before = 0, laziness = -1;
    double bin = 1.0, plot_bin = 0.0;

    auto* validate = app.add_subcommand("validate", "check corpus invariants");
    add_common(validate, opts);

    auto* score = app.add_subcommand("score", "per-paper creativity phi_k");
    add_common(score, opts);
    score->add_option("--out", out_path, "output csv")->required();
    score->add_flag("--group-by-discipline", group_by_discipline,
                    "one output per level-3 discipline");

    auto* decompose_cmd = app.add_subcommand("decompose", "preparation/inspiration split");
    add_common(decompose_cmd, opts, true);
    decompose_cmd->add_option("--out", out_path, "output csv")->required();
    decompose_cmd->add_option("--trace", trace_path, "per-pair trace csv");
    decompose_cmd->add_option("--decay", opts.decay, "none|reading|publishing")
        ->capture_default_str();
    decompose_cmd->add_option("--decay-model", model_path, "load a saved decay model");
    decompose_cmd->add_option("--repeat", repeat, "stochastic repetitions")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* fit = app.add_subcommand("fit-temporal", "fit the decay survival function");
    add_common(fit, opts, true);
    fit->add_option("--mode", mode_str, "reading|publishing")->capture_default_str();
    fit->add_option("--bin", bin, "bin width in years")->capture_default_str();
    fit->add_option("--out", out_path, "model output file")->required();

    auto* predict = app.add_subcommand("predict", "greedy enabler selection");
    add_common(predict, opts);
    predict->add_option("--target", targets, "target paper id (repeatable)")->required();
    predict->add_option("--budget", budget, "selection budget rho")
        ->required()
        ->check(CLI::PositiveNumber);
    predict->add_option("--candidates-before", candidates_before,
                        "candidate pool: papers published before this year")
        ->required();
    predict->add_option("--out", out_path, "selection report csv")->required();
    predict->add_option("--decay", opts.decay, "none|publishing")->capture_default_str();
    predict->add_option("--decay-model", model_path, "load a saved decay model");
    predict->add_flag("--lazy{1},--eager{0}", laziness,
                      "force lazy or eager gain evaluation (default: lazy above 10k candidates)");

    auto* dependency = app.add_subcommand("dependency", "production-consumption dependency matrix");
    add_common(dependency, opts, true);
    dependency->add_option("--out", out_path, "matrix csv")->required();
    dependency->add_option("--measure", measure, "paper|topic")->capture_default_str();
    dependency->add_option("--prod-years", prod_range, "production years <lo>:<hi>")->required();
    dependency->add_option("--cons-years", cons_range, "consumption years <lo>:<hi>")->required();

    auto* plot = app.add_subcommand("export-plot-data", "columnar data behind the figures");
    add_common(plot, opts);
    plot->add_option("--kind", kind,
                     "rarity_cdf|score_histogram|creativity_cdf|interval_histogram|"
                     "dependency_matrix")
        ->required();
    plot->add_option("--out", out_path, "output file")->required();
    plot->add_option("--bin-width", plot_bin, "histogram bin width");
    plot->add_option("--mode", mode_str, "interval mode: reading|publishing");
    plot->add_option("--measure", measure, "dependency measure: paper|topic");
    plot->add_option("--prod-years", prod_range, "production years <lo>:<hi>");
    plot->add_option("--cons-years", cons_range, "consumption years <lo>:<hi>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return run_validate(opts);
        if (score->parsed()) return run_score(opts, out_path, group_by_discipline);
        if (decompose_cmd->parsed())
            return run_decompose(opts, out_path, trace_path, model_path, repeat);
        if (fit->parsed()) return run_fit_temporal(opts, mode_str, out_path, bin);
        if (predict->parsed())
            return run_predict(opts, targets, out_path, budget, candidates_before, model_path,
                               laziness);
        if (dependency->parsed())
            return run_dependency(opts, out_path, measure, prod_range, cons_range);
        if (plot->parsed())
            return run_export_plot_data(opts, kind, out_path, plot_bin, mode_str, measure,
                                        prod_range, cons_range);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 2;
}
