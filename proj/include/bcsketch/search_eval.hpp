#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcsketch/bucket_map.hpp"
#include "bcsketch/prng.hpp"
#include "bcsketch/sparse_vector.hpp"

namespace bcsketch {

enum class SearchMode { AllPairs, Query };
enum class Method { Bcs, MinHash };

std::string to_string(SearchMode mode);
std::string to_string(Method method);
SearchMode parse_search_mode(const std::string& s);
Method parse_method(const std::string& s);

/**
 * The outcome of a threshold search: unordered pairs (i,j) with i<j in
 * all-pairs mode, item indices in query mode. Keys are sorted and unique.
 */
struct ResultSet {
    SearchMode mode = SearchMode::AllPairs;
    std::vector<std::uint64_t> keys;

    static std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
        return (static_cast<std::uint64_t>(i) << 32) | j;
    }

    std::size_t size() const noexcept { return keys.size(); }
    bool operator==(const ResultSet&) const = default;
};

// All pairs i<j with similarity(i,j) >= threshold; plain quadratic scan.
template <typename SimFn>
ResultSet allpairs_above(SimFn&& similarity, std::size_t item_count, double threshold) {
    ResultSet rs{SearchMode::AllPairs, {}};
    for (std::uint32_t i = 0; i < item_count; ++i) {
        for (std::uint32_t j = i + 1; j < item_count; ++j) {
            if (similarity(i, j) >= threshold) rs.keys.push_back(ResultSet::pair_key(i, j));
        }
    }
    return rs;
}

// All items with similarity(i) >= threshold against a fixed query; the query
// is bound inside the callable. Linear scan.
template <typename SimFn>
ResultSet query_above(SimFn&& similarity, std::size_t item_count, double threshold) {
    ResultSet rs{SearchMode::Query, {}};
    for (std::uint32_t i = 0; i < item_count; ++i) {
        if (similarity(i) >= threshold) rs.keys.push_back(i);
    }
    return rs;
}

// Jaccard ratio of the two result sets; 1 when both are empty.
double result_accuracy(const ResultSet& ground, const ResultSet& got);

struct BenchRow {
    Method method;
    std::uint64_t length;
    double threshold;
    double accuracy;
    double compress_time_s;
    double search_time_s;
    unsigned repeats;
};

struct BenchReport {
    SearchMode mode = SearchMode::AllPairs;
    std::vector<BenchRow> rows;

    // Header: method,N,threshold,accuracy,compress_time_s,search_time_s,repeats
    void write_csv(std::ostream& out) const;
    // Accuracy averaged across thresholds for one (method, length) cell.
    double mean_accuracy(Method method, std::uint64_t length) const;
};

using BucketMapFactory =
    std::function<BucketMap(std::uint32_t dim, std::uint64_t num_buckets, std::uint64_t seed)>;

struct BenchOptions {
    std::vector<Method> methods{Method::Bcs, Method::MinHash};
    std::vector<std::uint64_t> lengths;
    std::vector<double> thresholds;
    unsigned repeats = 10;
    SearchMode mode = SearchMode::AllPairs;
    double query_fraction = 0.1;  // query mode only
    std::uint64_t seed = kDefaultSeed;
    // Test hook; defaults to make_bucket_map.
    BucketMapFactory bucket_map_factory;
};

/**
 * The full sweep: for every (method, length, threshold) cell, ground truth is
 * computed once on the raw vectors, then each repeat draws a fresh
 * compression seed (PRF of the master seed and the repeat index), compresses
 * every vector, reruns the same search on the sketches alone, and records
 * accuracy plus compression/search wall-clock. Rows hold per-cell averages
 * over repeats; query mode additionally averages over all query vectors and
 * reports per-query search time. Ground-truth work and dataset loading are
 * never timed.
 */
BenchReport run_benchmark(const SparseDataset& ds, const BenchOptions& options);

}  // namespace bcsketch
