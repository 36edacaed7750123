#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "bcsketch/bcs.hpp"
#include "bcsketch/minhash.hpp"
#include "bcsketch/sparse_vector.hpp"

namespace bcsketch {

// Intersection and union cardinalities of the index sets; the integer parts
// of the Jaccard ratio, for tests that must avoid floating point.
struct SetOverlap {
    std::size_t intersection;
    std::size_t union_size;
};

inline SetOverlap overlap(const SparseBinaryVector& u, const SparseBinaryVector& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("overlap: dimension mismatch");
    const auto& a = u.indices();
    const auto& b = v.indices();
    std::size_t inter = 0;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
        if (a[i] < b[j]) {
            ++i;
        } else if (a[i] > b[j]) {
            ++j;
        } else {
            ++inter;
            ++i;
            ++j;
        }
    }
    return {inter, a.size() + b.size() - inter};
}

inline std::size_t inner_exact(const SparseBinaryVector& u, const SparseBinaryVector& v) {
    return overlap(u, v).intersection;
}

inline std::size_t hamming_exact(const SparseBinaryVector& u, const SparseBinaryVector& v) {
    const SetOverlap o = overlap(u, v);
    return o.union_size - o.intersection;
}

// |u n v| / |u u v|; 1 when both vectors are empty.
inline double jaccard_exact(const SparseBinaryVector& u, const SparseBinaryVector& v) {
    const SetOverlap o = overlap(u, v);
    if (o.union_size == 0) return 1.0;
    return static_cast<double>(o.intersection) / static_cast<double>(o.union_size);
}

// Jaccard of two parity sketches: popcount(a AND b) / popcount(a OR b),
// word at a time; 1 when both sketches are all-zero.
inline double jaccard_bcs(const BcsSketch& a, const BcsSketch& b) {
    if (a.num_buckets() != b.num_buckets()) {
        throw std::invalid_argument("jaccard_bcs: length mismatch");
    }
    std::size_t and_pop = 0;
    std::size_t or_pop = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t w = 0; w < wa.size(); ++w) {
        and_pop += std::popcount(wa[w] & wb[w]);
        or_pop += std::popcount(wa[w] | wb[w]);
    }
    if (or_pop == 0) return 1.0;
    return static_cast<double>(and_pop) / static_cast<double>(or_pop);
}

// Fraction of coordinates on which the two sketches agree (two kEmpty
// entries agree, so two empty sets estimate as 1).
inline double jaccard_minhash(const MinHashSketch& a, const MinHashSketch& b) {
    if (a.num_perms() != b.num_perms()) {
        throw std::invalid_argument("jaccard_minhash: length mismatch");
    }
    std::size_t matches = 0;
    const auto& va = a.values();
    const auto& vb = b.values();
    for (std::size_t k = 0; k < va.size(); ++k) matches += (va[k] == vb[k]);
    return static_cast<double>(matches) / static_cast<double>(va.size());
}

}  // namespace bcsketch
