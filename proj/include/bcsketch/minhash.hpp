#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bcsketch/prng.hpp"
#include "bcsketch/sparse_vector.hpp"

namespace bcsketch {

/**
 * A family of num_perms independent uniform permutations of {1..dim}. Each
 * permutation is derived on demand from (seed, perm index) by an unbiased
 * Fisher-Yates shuffle, so a family costs O(dim) memory to use no matter how
 * many permutations it has.
 */
class PermutationFamily {
public:
    PermutationFamily(std::uint32_t dim, std::uint32_t num_perms, std::uint64_t seed)
        : dim_(dim), num_perms_(num_perms), seed_(seed) {
        if (dim == 0) throw std::invalid_argument("PermutationFamily: dim must be positive");
        if (num_perms == 0) {
            throw std::invalid_argument("PermutationFamily: num_perms must be positive");
        }
    }

    std::uint32_t dim() const noexcept { return dim_; }
    std::uint32_t num_perms() const noexcept { return num_perms_; }
    std::uint64_t seed() const noexcept { return seed_; }

    // Materializes permutation k: out[i-1] = pi_k(i), a bijection on {1..dim}.
    void fill_ranks(std::uint32_t k, std::vector<std::uint32_t>& out) const {
        if (k >= num_perms_) throw std::out_of_range("PermutationFamily: perm index out of range");
        out.resize(dim_);
        std::iota(out.begin(), out.end(), std::uint32_t{1});
        SplitMix64 rng(derive_seed(seed_, k));
        for (std::uint32_t j = dim_ - 1; j > 0; --j) {
            std::swap(out[j], out[rng.next_below(j + 1)]);
        }
    }

    std::vector<std::uint32_t> ranks(std::uint32_t k) const {
        std::vector<std::uint32_t> out;
        fill_ranks(k, out);
        return out;
    }

private:
    std::uint32_t dim_;
    std::uint32_t num_perms_;
    std::uint64_t seed_;
};

/**
 * MinHash sketch: entry k is the set position minimizing permutation k, or
 * kEmpty (0) when the source vector had no set positions.
 */
class MinHashSketch {
public:
    static constexpr std::uint32_t kEmpty = 0;

    explicit MinHashSketch(std::vector<std::uint32_t> values) : values_(std::move(values)) {
        if (values_.empty()) throw std::invalid_argument("MinHashSketch: num_perms must be positive");
    }

    std::size_t num_perms() const noexcept { return values_.size(); }
    const std::vector<std::uint32_t>& values() const noexcept { return values_; }

    bool operator==(const MinHashSketch&) const = default;

private:
    std::vector<std::uint32_t> values_;
};

// The set position of v minimizing the given rank table (ranks[i-1] = pi(i));
// MinHashSketch::kEmpty when v is empty.
inline std::uint32_t min_position_under(const SparseBinaryVector& v,
                                        std::span<const std::uint32_t> ranks) {
    std::uint32_t best_pos = MinHashSketch::kEmpty;
    std::uint32_t best_rank = std::numeric_limits<std::uint32_t>::max();
    for (std::uint32_t pos : v.indices()) {
        const std::uint32_t r = ranks[pos - 1];
        if (r < best_rank) {
            best_rank = r;
            best_pos = pos;
        }
    }
    return best_pos;
}

inline MinHashSketch minhash_compress(const SparseBinaryVector& v, const PermutationFamily& fam) {
    if (v.dim() != fam.dim()) {
        throw std::invalid_argument("minhash_compress: vector/family dimension mismatch");
    }
    std::vector<std::uint32_t> values(fam.num_perms());
    std::vector<std::uint32_t> ranks;
    for (std::uint32_t k = 0; k < fam.num_perms(); ++k) {
        fam.fill_ranks(k, ranks);
        values[k] = min_position_under(v, ranks);
    }
    return MinHashSketch(std::move(values));
}

// Compresses many vectors under one family, materializing each permutation
// only once. This is the form the benchmark times.
inline std::vector<MinHashSketch> minhash_compress_all(std::span<const SparseBinaryVector> vs,
                                                       const PermutationFamily& fam) {
    std::vector<std::vector<std::uint32_t>> values(vs.size());
    for (auto& vals : values) vals.resize(fam.num_perms());
    std::vector<std::uint32_t> ranks;
    for (std::uint32_t k = 0; k < fam.num_perms(); ++k) {
        fam.fill_ranks(k, ranks);
        for (std::size_t m = 0; m < vs.size(); ++m) {
            if (vs[m].dim() != fam.dim()) {
                throw std::invalid_argument(
                    "minhash_compress_all: vector/family dimension mismatch");
            }
            values[m][k] = min_position_under(vs[m], ranks);
        }
    }
    std::vector<MinHashSketch> sketches;
    sketches.reserve(vs.size());
    for (auto& vals : values) sketches.emplace_back(std::move(vals));
    return sketches;
}

}  // namespace bcsketch
