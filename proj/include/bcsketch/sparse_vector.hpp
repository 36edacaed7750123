#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bcsketch {

/**
 * A subset of {1..dim} stored as strictly increasing 1-based indices.
 * Equivalently: a binary vector in {0,1}^dim whose ones sit at the stored
 * positions. Immutable after construction.
 */
class SparseBinaryVector {
public:
    SparseBinaryVector(std::uint32_t dim, std::vector<std::uint32_t> indices)
        : dim_(dim), indices_(std::move(indices)) {
        if (dim_ == 0) {
            throw std::invalid_argument("SparseBinaryVector: dim must be positive");
        }
        std::uint32_t prev = 0;
        for (std::uint32_t idx : indices_) {
            if (idx == 0 || idx > dim_) {
                throw std::invalid_argument("SparseBinaryVector: index " + std::to_string(idx) +
                                            " outside [1, " + std::to_string(dim_) + "]");
            }
            if (idx <= prev) {
                throw std::invalid_argument(
                    "SparseBinaryVector: indices must be strictly increasing");
            }
            prev = idx;
        }
    }

    // Sorts and deduplicates before validating.
    static SparseBinaryVector from_unsorted(std::uint32_t dim, std::vector<std::uint32_t> indices) {
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        return SparseBinaryVector(dim, std::move(indices));
    }

    std::uint32_t dim() const noexcept { return dim_; }
    std::size_t weight() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    const std::vector<std::uint32_t>& indices() const noexcept { return indices_; }

    bool operator==(const SparseBinaryVector&) const = default;

private:
    std::uint32_t dim_;
    std::vector<std::uint32_t> indices_;
};

// Coordinatewise XOR, i.e. the symmetric difference of the index sets.
inline SparseBinaryVector symmetric_difference(const SparseBinaryVector& u,
                                               const SparseBinaryVector& v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("symmetric_difference: dimension mismatch");
    }
    std::vector<std::uint32_t> out;
    out.reserve(u.weight() + v.weight());
    std::set_symmetric_difference(u.indices().begin(), u.indices().end(), v.indices().begin(),
                                  v.indices().end(), std::back_inserter(out));
    return SparseBinaryVector(u.dim(), std::move(out));
}

/**
 * A same-dimension collection of sparse binary vectors together with its
 * sparsity bound (the maximum weight, always recomputed from the data).
 */
class SparseDataset {
public:
    SparseDataset(std::uint32_t dim, std::vector<SparseBinaryVector> vectors)
        : dim_(dim), vectors_(std::move(vectors)) {
        if (dim_ == 0) {
            throw std::invalid_argument("SparseDataset: dim must be positive");
        }
        sparsity_ = 0;
        for (const auto& v : vectors_) {
            if (v.dim() != dim_) {
                throw std::invalid_argument("SparseDataset: vector dimension mismatch");
            }
            sparsity_ = std::max(sparsity_, v.weight());
        }
    }

    std::uint32_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return vectors_.size(); }
    bool empty() const noexcept { return vectors_.empty(); }
    // Maximum weight over all vectors (0 for an empty collection).
    std::size_t sparsity() const noexcept { return sparsity_; }
    const SparseBinaryVector& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<SparseBinaryVector>& vectors() const noexcept { return vectors_; }

    bool operator==(const SparseDataset&) const = default;

private:
    std::uint32_t dim_;
    std::vector<SparseBinaryVector> vectors_;
    std::size_t sparsity_;
};

}  // namespace bcsketch
