#pragma once

#include <cstddef>
#include <cstdint>

#include "bcsketch/sparse_vector.hpp"

namespace bcsketch {

/**
 * A pair of vectors built around `shared` common positions, each side padded
 * with its own extra positions. The construction guarantees
 * jaccard >= shared / (shared + extra_first + extra_second).
 */
struct PlantedPair {
    SparseBinaryVector first;
    SparseBinaryVector second;
    std::uint32_t shared;
    std::uint32_t extra_first;
    std::uint32_t extra_second;

    double guaranteed_similarity() const {
        return static_cast<double>(shared) /
               static_cast<double>(shared + extra_first + extra_second);
    }
};

// Draws shared s in [1,psi], plants s common positions, then pads each side
// with s' in [1, psi-s] extra positions (s' = 0 when s = psi).
PlantedPair gen_similar_pair(std::uint32_t dim, std::uint32_t psi, std::uint64_t seed);

// The first 2*num_similar_pairs vectors are planted pairs (consecutive);
// the rest are uniform vectors of weight uniform in [1, psi].
SparseDataset gen_allpairs_dataset(std::size_t n, std::uint32_t dim, std::uint32_t psi,
                                   std::size_t num_similar_pairs, std::uint64_t seed);

/**
 * Query-search dataset: one query vector plus n-1 items, of which the first
 * num_neighbors share planted positions with the query and the remaining
 * n-1-num_neighbors are uniform background vectors.
 */
struct KnnDataset {
    SparseBinaryVector query;
    SparseDataset items;
    std::size_t num_neighbors;
};

KnnDataset gen_knn_dataset(std::size_t n, std::uint32_t dim, std::uint32_t psi,
                           std::size_t num_neighbors, std::uint64_t seed);

}  // namespace bcsketch
