#include "bcsketch/datagen.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "bcsketch/prng.hpp"

namespace bcsketch {

namespace {

// Seed-derivation domains so the planted pairs, background vectors and the
// query of one dataset draw from disjoint streams.
constexpr std::uint64_t kPairDomain = 1;
constexpr std::uint64_t kBackgroundDomain = 2;
constexpr std::uint64_t kQueryDomain = 3;
constexpr std::uint64_t kNeighborDomain = 4;

// Floyd's algorithm: `count` distinct values from [1, dim] in O(count).
std::unordered_set<std::uint32_t> sample_distinct(SplitMix64& rng, std::uint32_t count,
                                                  std::uint32_t dim) {
    std::unordered_set<std::uint32_t> chosen;
    chosen.reserve(count * 2);
    for (std::uint32_t j = dim - count + 1; j <= dim; ++j) {
        const auto t = static_cast<std::uint32_t>(rng.next_in(1, j));
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    return chosen;
}

// `count` distinct values from [1, dim] avoiding `excluded`; rejection
// sampling, fine while count + |excluded| stays well below dim.
std::unordered_set<std::uint32_t> sample_distinct_excluding(
    SplitMix64& rng, std::uint32_t count, std::uint32_t dim,
    const std::unordered_set<std::uint32_t>& excluded) {
    std::unordered_set<std::uint32_t> chosen;
    chosen.reserve(count * 2);
    while (chosen.size() < count) {
        const auto candidate = static_cast<std::uint32_t>(rng.next_in(1, dim));
        if (!excluded.contains(candidate)) chosen.insert(candidate);
    }
    return chosen;
}

std::vector<std::uint32_t> sorted_indices(const std::unordered_set<std::uint32_t>& a,
                                          const std::unordered_set<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

SparseBinaryVector random_vector(std::uint32_t dim, std::uint32_t psi, std::uint64_t seed) {
    SplitMix64 rng(seed);
    const auto weight = static_cast<std::uint32_t>(rng.next_in(1, psi));
    auto positions = sample_distinct(rng, weight, dim);
    std::vector<std::uint32_t> idx(positions.begin(), positions.end());
    std::sort(idx.begin(), idx.end());
    return SparseBinaryVector(dim, std::move(idx));
}

}  // namespace

PlantedPair gen_similar_pair(std::uint32_t dim, std::uint32_t psi, std::uint64_t seed) {
    if (psi == 0) throw std::invalid_argument("gen_similar_pair: psi must be positive");
    if (psi > dim) throw std::invalid_argument("gen_similar_pair: psi exceeds dim");

    SplitMix64 rng(seed);
    const auto shared = static_cast<std::uint32_t>(rng.next_in(1, psi));
    const auto common = sample_distinct(rng, shared, dim);

    const auto pad = [&](std::uint32_t& extra_out) {
        std::uint32_t extra = 0;
        if (shared < psi) extra = static_cast<std::uint32_t>(rng.next_in(1, psi - shared));
        extra_out = extra;
        const auto extras = sample_distinct_excluding(rng, extra, dim, common);
        return SparseBinaryVector(dim, sorted_indices(common, extras));
    };

    std::uint32_t extra_first = 0;
    std::uint32_t extra_second = 0;
    SparseBinaryVector first = pad(extra_first);
    SparseBinaryVector second = pad(extra_second);
    return PlantedPair{std::move(first), std::move(second), shared, extra_first, extra_second};
}

SparseDataset gen_allpairs_dataset(std::size_t n, std::uint32_t dim, std::uint32_t psi,
                                   std::size_t num_similar_pairs, std::uint64_t seed) {
    if (2 * num_similar_pairs > n) {
        throw std::invalid_argument("gen_allpairs_dataset: 2*num_similar_pairs exceeds n");
    }
    if (psi == 0) throw std::invalid_argument("gen_allpairs_dataset: psi must be positive");
    if (psi > dim) throw std::invalid_argument("gen_allpairs_dataset: psi exceeds dim");
    std::vector<SparseBinaryVector> vectors;
    vectors.reserve(n);
    for (std::size_t p = 0; p < num_similar_pairs; ++p) {
        PlantedPair pair = gen_similar_pair(dim, psi, derive_seed(seed, kPairDomain, p));
        vectors.push_back(std::move(pair.first));
        vectors.push_back(std::move(pair.second));
    }
    for (std::size_t i = 2 * num_similar_pairs; i < n; ++i) {
        vectors.push_back(random_vector(dim, psi, derive_seed(seed, kBackgroundDomain, i)));
    }
    return SparseDataset(dim, std::move(vectors));
}

KnnDataset gen_knn_dataset(std::size_t n, std::uint32_t dim, std::uint32_t psi,
                           std::size_t num_neighbors, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("gen_knn_dataset: n must be positive");
    if (num_neighbors >= n) {
        throw std::invalid_argument("gen_knn_dataset: num_neighbors must be below n");
    }
    if (psi == 0) throw std::invalid_argument("gen_knn_dataset: psi must be positive");
    if (psi > dim) throw std::invalid_argument("gen_knn_dataset: psi exceeds dim");

    SparseBinaryVector query = random_vector(dim, psi, derive_seed(seed, kQueryDomain, 0));
    const auto query_weight = static_cast<std::uint32_t>(query.weight());

    std::vector<SparseBinaryVector> items;
    items.reserve(n - 1);
    for (std::size_t j = 0; j < num_neighbors; ++j) {
        SplitMix64 rng(derive_seed(seed, kNeighborDomain, j));
        // Planted-pair construction with the query as the fixed side: share s
        // of the query's own positions, pad with s' positions off its support.
        const auto shared = static_cast<std::uint32_t>(rng.next_in(1, query_weight));
        std::vector<std::uint32_t> support(query.indices());
        for (std::uint32_t i = query_weight - 1; i > 0; --i) {
            std::swap(support[i], support[rng.next_below(i + 1)]);
        }
        std::unordered_set<std::uint32_t> common(support.begin(), support.begin() + shared);
        std::uint32_t extra = 0;
        if (shared < psi) extra = static_cast<std::uint32_t>(rng.next_in(1, psi - shared));
        const auto extras = sample_distinct_excluding(rng, extra, dim, common);
        items.emplace_back(dim, sorted_indices(common, extras));
    }
    for (std::size_t i = num_neighbors; i + 1 < n; ++i) {
        items.push_back(random_vector(dim, psi, derive_seed(seed, kBackgroundDomain, i)));
    }
    return KnnDataset{std::move(query), SparseDataset(dim, std::move(items)), num_neighbors};
}

}  // namespace bcsketch
