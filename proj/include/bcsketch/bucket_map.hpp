#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bcsketch/prng.hpp"

namespace bcsketch {

/**
 * Random assignment of positions {1..dim} to buckets {1..num_buckets}.
 *
 * The seeded form is a stateless keyed PRF of (seed, position): each position
 * draws its bucket independently and uniformly, the map occupies O(1) memory,
 * and lookups can be made against a stream without materializing anything.
 * Identity and explicit-table maps exist as fixtures (lossless compression,
 * hand-built assignments).
 */
class BucketMap {
public:
    BucketMap(std::uint32_t dim, std::uint64_t num_buckets, std::uint64_t seed)
        : kind_(Kind::Prf), dim_(dim), num_buckets_(num_buckets), seed_(seed) {
        if (dim == 0) throw std::invalid_argument("BucketMap: dim must be positive");
        if (num_buckets == 0) throw std::invalid_argument("BucketMap: num_buckets must be positive");
    }

    // Injective map with one bucket per position.
    static BucketMap identity(std::uint32_t dim) {
        BucketMap m(dim, dim, 0);
        m.kind_ = Kind::Identity;
        return m;
    }

    // Explicit assignment; table[i-1] is the bucket of position i.
    static BucketMap from_table(std::uint64_t num_buckets, std::vector<std::uint64_t> table) {
        if (table.empty()) throw std::invalid_argument("BucketMap: empty table");
        BucketMap m(static_cast<std::uint32_t>(table.size()), num_buckets, 0);
        for (std::uint64_t b : table) {
            if (b == 0 || b > num_buckets) {
                throw std::invalid_argument("BucketMap: table bucket out of range");
            }
        }
        m.kind_ = Kind::Table;
        m.table_ = std::move(table);
        return m;
    }

    std::uint32_t dim() const noexcept { return dim_; }
    std::uint64_t num_buckets() const noexcept { return num_buckets_; }
    std::uint64_t seed() const noexcept { return seed_; }

    // Bucket of a 1-based position, in [1, num_buckets].
    std::uint64_t bucket_of(std::uint32_t position) const {
        if (position == 0 || position > dim_) {
            throw std::out_of_range("BucketMap: position out of range");
        }
        switch (kind_) {
            case Kind::Identity:
                return position;
            case Kind::Table:
                return table_[position - 1];
            case Kind::Prf:
            default:
                return SplitMix64(keyed_hash(seed_, position)).next_below(num_buckets_) + 1;
        }
    }

private:
    enum class Kind { Prf, Identity, Table };

    Kind kind_;
    std::uint32_t dim_;
    std::uint64_t num_buckets_;
    std::uint64_t seed_;
    std::vector<std::uint64_t> table_;
};

inline BucketMap make_bucket_map(std::uint32_t dim, std::uint64_t num_buckets,
                                 std::uint64_t seed) {
    return BucketMap(dim, num_buckets, seed);
}

}  // namespace bcsketch
