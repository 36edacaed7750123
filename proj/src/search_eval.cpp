#include "bcsketch/search_eval.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <span>
#include <utility>

#include "bcsketch/bcs.hpp"
#include "bcsketch/ingest.hpp"
#include "bcsketch/minhash.hpp"
#include "bcsketch/similarity.hpp"

namespace bcsketch {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Flat upper-triangular index for the pair (i, j), i < j.
std::size_t tri_index(std::size_t n, std::size_t i, std::size_t j) {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

struct GroundTruth {
    // One result set per threshold; query mode has one per (threshold, query).
    std::vector<ResultSet> allpairs;
    std::vector<std::vector<ResultSet>> per_query;
};

struct CellStats {
    std::vector<double> accuracy;     // per threshold
    std::vector<double> search_time;  // per threshold
    double compress_time = 0.0;
};

// Compression + sketch search for one (method, length) cell across repeats.
// CompressAll: (span of vectors, length, seed) -> vector of sketches.
// Sim: (sketch, sketch) -> double.
template <typename CompressAll, typename Sim>
CellStats run_cell(std::span<const SparseBinaryVector> combined, std::size_t item_count,
                   std::size_t query_count, const GroundTruth& ground,
                   const BenchOptions& options, std::uint64_t length, CompressAll&& compress_all,
                   Sim&& sim) {
    const std::size_t num_thresholds = options.thresholds.size();
    CellStats stats;
    stats.accuracy.assign(num_thresholds, 0.0);
    stats.search_time.assign(num_thresholds, 0.0);

    for (unsigned rep = 0; rep < options.repeats; ++rep) {
        const std::uint64_t rep_seed = keyed_hash(options.seed, rep);

        auto t_compress = Clock::now();
        const auto sketches = compress_all(combined, length, rep_seed);
        stats.compress_time += seconds_since(t_compress);

        for (std::size_t ti = 0; ti < num_thresholds; ++ti) {
            const double threshold = options.thresholds[ti];
            if (options.mode == SearchMode::AllPairs) {
                auto t_search = Clock::now();
                const ResultSet rs = allpairs_above(
                    [&](std::uint32_t i, std::uint32_t j) { return sim(sketches[i], sketches[j]); },
                    item_count, threshold);
                stats.search_time[ti] += seconds_since(t_search);
                stats.accuracy[ti] += result_accuracy(ground.allpairs[ti], rs);
            } else {
                std::vector<ResultSet> results(query_count);
                auto t_search = Clock::now();
                for (std::size_t q = 0; q < query_count; ++q) {
                    const auto& query_sketch = sketches[item_count + q];
                    results[q] = query_above(
                        [&](std::uint32_t i) { return sim(query_sketch, sketches[i]); },
                        item_count, threshold);
                }
                stats.search_time[ti] +=
                    seconds_since(t_search) / static_cast<double>(query_count);
                double acc = 0.0;
                for (std::size_t q = 0; q < query_count; ++q) {
                    acc += result_accuracy(ground.per_query[ti][q], results[q]);
                }
                stats.accuracy[ti] += acc / static_cast<double>(query_count);
            }
        }
    }

    const auto reps = static_cast<double>(options.repeats);
    stats.compress_time /= reps;
    for (std::size_t ti = 0; ti < num_thresholds; ++ti) {
        stats.accuracy[ti] /= reps;
        stats.search_time[ti] /= reps;
    }
    return stats;
}

}  // namespace

std::string to_string(SearchMode mode) {
    return mode == SearchMode::AllPairs ? "allpairs" : "query";
}

std::string to_string(Method method) {
    return method == Method::Bcs ? "bcs" : "minhash";
}

SearchMode parse_search_mode(const std::string& s) {
    if (s == "allpairs") return SearchMode::AllPairs;
    if (s == "query") return SearchMode::Query;
    throw std::invalid_argument("unknown search mode '" + s + "' (allpairs|query)");
}

Method parse_method(const std::string& s) {
    if (s == "bcs") return Method::Bcs;
    if (s == "minhash") return Method::MinHash;
    throw std::invalid_argument("unknown method '" + s + "' (bcs|minhash)");
}

double result_accuracy(const ResultSet& ground, const ResultSet& got) {
    if (ground.mode != got.mode) {
        throw std::invalid_argument("result_accuracy: mode mismatch");
    }
    std::size_t inter = 0;
    for (std::size_t i = 0, j = 0; i < ground.keys.size() && j < got.keys.size();) {
        if (ground.keys[i] < got.keys[j]) {
            ++i;
        } else if (ground.keys[i] > got.keys[j]) {
            ++j;
        } else {
            ++inter;
            ++i;
            ++j;
        }
    }
    const std::size_t uni = ground.keys.size() + got.keys.size() - inter;
    if (uni == 0) return 1.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

void BenchReport::write_csv(std::ostream& out) const {
    out << "method,N,threshold,accuracy,compress_time_s,search_time_s,repeats\n";
    for (const auto& row : rows) {
        out << to_string(row.method) << ',' << row.length << ',' << row.threshold << ','
            << row.accuracy << ',' << row.compress_time_s << ',' << row.search_time_s << ','
            << row.repeats << '\n';
    }
}

double BenchReport::mean_accuracy(Method method, std::uint64_t length) const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& row : rows) {
        if (row.method == method && row.length == length) {
            sum += row.accuracy;
            ++count;
        }
    }
    if (count == 0) throw std::invalid_argument("mean_accuracy: no rows for that cell");
    return sum / static_cast<double>(count);
}

BenchReport run_benchmark(const SparseDataset& ds, const BenchOptions& options) {
    if (ds.empty()) throw std::invalid_argument("run_benchmark: empty dataset");
    if (options.methods.empty()) throw std::invalid_argument("run_benchmark: no methods");
    if (options.lengths.empty()) throw std::invalid_argument("run_benchmark: no lengths");
    if (options.thresholds.empty()) throw std::invalid_argument("run_benchmark: no thresholds");
    if (options.repeats == 0) throw std::invalid_argument("run_benchmark: repeats must be >= 1");
    for (std::uint64_t length : options.lengths) {
        if (length == 0) throw std::invalid_argument("run_benchmark: length must be positive");
    }
    for (double t : options.thresholds) {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw std::invalid_argument("run_benchmark: threshold outside [0,1]");
        }
    }

    const BucketMapFactory map_factory =
        options.bucket_map_factory
            ? options.bucket_map_factory
            : [](std::uint32_t dim, std::uint64_t n, std::uint64_t seed) {
                  return make_bucket_map(dim, n, seed);
              };

    // Raw vectors: searched items first, then (query mode) the query vectors.
    std::vector<SparseBinaryVector> combined;
    std::size_t item_count = 0;
    std::size_t query_count = 0;
    if (options.mode == SearchMode::AllPairs) {
        combined = ds.vectors();
        item_count = combined.size();
    } else {
        auto [train, query] =
            split_train_query(ds, options.query_fraction, keyed_hash(options.seed, ~0ull));
        item_count = train.size();
        query_count = query.size();
        combined.reserve(item_count + query_count);
        combined.insert(combined.end(), train.vectors().begin(), train.vectors().end());
        combined.insert(combined.end(), query.vectors().begin(), query.vectors().end());
    }

    // Exact similarities and per-threshold ground truth, untimed, computed
    // once on the raw vectors; sketches never enter here.
    const std::size_t num_thresholds = options.thresholds.size();
    GroundTruth ground;
    if (options.mode == SearchMode::AllPairs) {
        std::vector<double> exact(item_count * (item_count - 1) / 2);
        for (std::size_t i = 0; i < item_count; ++i) {
            for (std::size_t j = i + 1; j < item_count; ++j) {
                exact[tri_index(item_count, i, j)] = jaccard_exact(combined[i], combined[j]);
            }
        }
        ground.allpairs.reserve(num_thresholds);
        for (double t : options.thresholds) {
            ground.allpairs.push_back(allpairs_above(
                [&](std::uint32_t i, std::uint32_t j) { return exact[tri_index(item_count, i, j)]; },
                item_count, t));
        }
    } else {
        std::vector<double> exact(query_count * item_count);
        for (std::size_t q = 0; q < query_count; ++q) {
            for (std::size_t i = 0; i < item_count; ++i) {
                exact[q * item_count + i] = jaccard_exact(combined[item_count + q], combined[i]);
            }
        }
        ground.per_query.assign(num_thresholds, {});
        for (std::size_t ti = 0; ti < num_thresholds; ++ti) {
            ground.per_query[ti].reserve(query_count);
            for (std::size_t q = 0; q < query_count; ++q) {
                ground.per_query[ti].push_back(query_above(
                    [&](std::uint32_t i) { return exact[q * item_count + i]; }, item_count,
                    options.thresholds[ti]));
            }
        }
    }

    BenchReport report;
    report.mode = options.mode;
    const std::span<const SparseBinaryVector> all(combined);

    for (Method method : options.methods) {
        for (std::uint64_t length : options.lengths) {
            CellStats stats;
            if (method == Method::Bcs) {
                stats = run_cell(
                    all, item_count, query_count, ground, options, length,
                    [&](std::span<const SparseBinaryVector> vs, std::uint64_t n,
                        std::uint64_t seed) {
                        const BucketMap map = map_factory(ds.dim(), n, seed);
                        std::vector<BcsSketch> sketches;
                        sketches.reserve(vs.size());
                        for (const auto& v : vs) sketches.push_back(bcs_compress(v, map));
                        return sketches;
                    },
                    [](const BcsSketch& a, const BcsSketch& b) { return jaccard_bcs(a, b); });
            } else {
                stats = run_cell(
                    all, item_count, query_count, ground, options, length,
                    [&](std::span<const SparseBinaryVector> vs, std::uint64_t n,
                        std::uint64_t seed) {
                        const PermutationFamily fam(ds.dim(), static_cast<std::uint32_t>(n), seed);
                        return minhash_compress_all(vs, fam);
                    },
                    [](const MinHashSketch& a, const MinHashSketch& b) {
                        return jaccard_minhash(a, b);
                    });
            }
            for (std::size_t ti = 0; ti < num_thresholds; ++ti) {
                report.rows.push_back(BenchRow{method, length, options.thresholds[ti],
                                               stats.accuracy[ti], stats.compress_time,
                                               stats.search_time[ti], options.repeats});
            }
        }
    }
    return report;
}

}  // namespace bcsketch
