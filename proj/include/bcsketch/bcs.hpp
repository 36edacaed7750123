#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bcsketch/bucket_map.hpp"
#include "bcsketch/sparse_vector.hpp"

namespace bcsketch {

/**
 * Parity sketch of a sparse binary vector: bit j is the parity of the source
 * positions assigned to bucket j. Packed into 64-bit words; bits past
 * num_buckets in the last word are kept zero so word-level popcounts are
 * exact.
 */
class BcsSketch {
public:
    explicit BcsSketch(std::uint64_t num_buckets)
        : num_buckets_(num_buckets), words_((num_buckets + 63) / 64, 0) {
        if (num_buckets == 0) throw std::invalid_argument("BcsSketch: num_buckets must be positive");
    }

    std::uint64_t num_buckets() const noexcept { return num_buckets_; }

    bool test(std::uint64_t bucket) const {
        check_range(bucket);
        return (words_[(bucket - 1) / 64] >> ((bucket - 1) % 64)) & 1u;
    }

    void flip(std::uint64_t bucket) {
        check_range(bucket);
        words_[(bucket - 1) / 64] ^= std::uint64_t{1} << ((bucket - 1) % 64);
    }

    std::size_t weight() const noexcept {
        std::size_t w = 0;
        for (std::uint64_t word : words_) w += std::popcount(word);
        return w;
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    BcsSketch& operator^=(const BcsSketch& other) {
        if (num_buckets_ != other.num_buckets_) {
            throw std::invalid_argument("BcsSketch: length mismatch");
        }
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    friend BcsSketch operator^(BcsSketch lhs, const BcsSketch& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    bool operator==(const BcsSketch&) const = default;

private:
    void check_range(std::uint64_t bucket) const {
        if (bucket == 0 || bucket > num_buckets_) {
            throw std::out_of_range("BcsSketch: bucket out of range");
        }
    }

    std::uint64_t num_buckets_;
    std::vector<std::uint64_t> words_;
};

inline std::size_t hamming_distance(const BcsSketch& a, const BcsSketch& b) {
    if (a.num_buckets() != b.num_buckets()) {
        throw std::invalid_argument("hamming_distance: length mismatch");
    }
    std::size_t d = 0;
    for (std::size_t w = 0; w < a.words().size(); ++w) {
        d += std::popcount(a.words()[w] ^ b.words()[w]);
    }
    return d;
}

// One pass over the set positions; time proportional to the vector's weight.
inline BcsSketch bcs_compress(const SparseBinaryVector& v, const BucketMap& map) {
    if (v.dim() != map.dim()) {
        throw std::invalid_argument("bcs_compress: vector/map dimension mismatch");
    }
    BcsSketch sketch(map.num_buckets());
    for (std::uint32_t pos : v.indices()) sketch.flip(map.bucket_of(pos));
    return sketch;
}

// Streaming update: folds one set position into the sketch (XOR semantics).
// Folding all positions of a vector over a zero sketch equals bcs_compress.
inline void bcs_update(BcsSketch& sketch, std::uint32_t position, const BucketMap& map) {
    if (sketch.num_buckets() != map.num_buckets()) {
        throw std::invalid_argument("bcs_update: sketch/map length mismatch");
    }
    if (position == 0 || position > map.dim()) {
        throw std::out_of_range("bcs_update: position out of range");
    }
    sketch.flip(map.bucket_of(position));
}

}  // namespace bcsketch
