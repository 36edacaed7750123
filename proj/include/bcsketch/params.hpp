#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace bcsketch {

/**
 * Inputs of the compression-length calculator: sparsity bound psi, vector
 * count n, deviation fraction epsilon in (0,1), distance scale r, and the
 * Jaccard tolerance epsilon_tilde >= max(epsilon, 2*epsilon/(1-epsilon)).
 *
 * Logs are base 2 throughout; the bounds hold for any base up to constants.
 */
struct CompressionParams {
    std::uint64_t psi;
    std::uint64_t n;
    double epsilon;
    std::uint64_t r;
    double epsilon_tilde;

    CompressionParams(std::uint64_t psi_, std::uint64_t n_, double epsilon_, std::uint64_t r_)
        : CompressionParams(psi_, n_, epsilon_, r_, min_epsilon_tilde(epsilon_)) {}

    CompressionParams(std::uint64_t psi_, std::uint64_t n_, double epsilon_, std::uint64_t r_,
                      double epsilon_tilde_)
        : psi(psi_), n(n_), epsilon(epsilon_), r(r_), epsilon_tilde(epsilon_tilde_) {
        if (psi == 0) throw std::invalid_argument("CompressionParams: psi must be positive");
        if (n == 0) throw std::invalid_argument("CompressionParams: n must be positive");
        if (!(epsilon > 0.0 && epsilon < 1.0)) {
            throw std::invalid_argument("CompressionParams: epsilon must be in (0,1)");
        }
        if (r == 0) throw std::invalid_argument("CompressionParams: r must be positive");
        if (epsilon_tilde < min_epsilon_tilde(epsilon)) {
            throw std::invalid_argument(
                "CompressionParams: epsilon_tilde below max(eps, 2*eps/(1-eps))");
        }
    }

    static double min_epsilon_tilde(double epsilon) {
        return std::max(epsilon, 2.0 * epsilon / (1.0 - epsilon));
    }
};

// True when the small-length branch N = 16*psi^2 applies.
inline bool uses_small_length_branch(const CompressionParams& p) {
    return p.epsilon * static_cast<double>(p.r) > 3.0 * std::log2(static_cast<double>(p.n));
}

// Compression length sufficient for the concentration bounds: 16*psi^2 when
// eps*r > 3*log2(n), otherwise ceil(144 * psi^2 * log2(n)^2).
inline std::uint64_t required_length(const CompressionParams& p) {
    if (uses_small_length_branch(p)) {
        return 16 * p.psi * p.psi;
    }
    const double log_n = std::log2(static_cast<double>(p.n));
    return static_cast<std::uint64_t>(
        std::ceil(144.0 * static_cast<double>(p.psi) * static_cast<double>(p.psi) * log_n * log_n));
}

// Probability that two sketches share more than eps*r corrupted buckets:
// min(1, (2*psi / sqrt(N))^(eps*r)).
inline double corruption_bound(std::uint64_t psi, std::uint64_t num_buckets, double epsilon,
                               std::uint64_t r) {
    if (psi == 0) throw std::invalid_argument("corruption_bound: psi must be positive");
    if (num_buckets == 0) throw std::invalid_argument("corruption_bound: N must be positive");
    const double base = 2.0 * static_cast<double>(psi) / std::sqrt(static_cast<double>(num_buckets));
    const double exponent = epsilon * static_cast<double>(r);
    return std::min(1.0, std::pow(base, exponent));
}

// Theoretical random bits consumed per compression of n d-dimensional
// vectors: bucket assignment needs one draw in [1,N] per position, minhash
// needs d draws in [1,d] per permutation.
inline double bcs_randomness_bits(std::uint64_t dim, std::uint64_t num_buckets) {
    return static_cast<double>(dim) * std::log2(static_cast<double>(num_buckets));
}

inline double minhash_randomness_bits(std::uint64_t dim, std::uint64_t num_perms) {
    return static_cast<double>(num_perms) * static_cast<double>(dim) *
           std::log2(static_cast<double>(dim));
}

}  // namespace bcsketch
