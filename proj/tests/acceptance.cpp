// Acceptance suite: one checkable criterion per scenario, each printing a
// single [PASS]/[FAIL]/[SKIP] line. Run all with no arguments or one by
// number (1-9). Exit code is nonzero iff a selected criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "bcsketch/bcs.hpp"
#include "bcsketch/bucket_map.hpp"
#include "bcsketch/datagen.hpp"
#include "bcsketch/ingest.hpp"
#include "bcsketch/minhash.hpp"
#include "bcsketch/prng.hpp"
#include "bcsketch/search_eval.hpp"
#include "bcsketch/similarity.hpp"

using namespace bcsketch;

namespace {

struct Outcome {
    enum class Kind { Pass, Fail, Skip } kind;
    std::string detail;

    static Outcome pass(std::string d = {}) { return {Kind::Pass, std::move(d)}; }
    static Outcome fail(std::string d) { return {Kind::Fail, std::move(d)}; }
    static Outcome skip(std::string d) { return {Kind::Skip, std::move(d)}; }
};

std::string fmt(double value, int digits = 4) {
    std::ostringstream os;
    os.precision(digits);
    os << value;
    return os.str();
}

SparseBinaryVector random_subset(SplitMix64& rng, std::uint32_t dim, std::uint32_t weight_cap) {
    const auto w = rng.next_below(std::min<std::uint64_t>(dim, weight_cap) + 1);
    std::vector<std::uint32_t> idx;
    idx.reserve(w);
    while (idx.size() < w) {
        const auto cand = static_cast<std::uint32_t>(rng.next_in(1, dim));
        if (std::find(idx.begin(), idx.end(), cand) == idx.end()) idx.push_back(cand);
    }
    return SparseBinaryVector::from_unsorted(dim, std::move(idx));
}

SparseBinaryVector random_subset_exact(SplitMix64& rng, std::uint32_t dim, std::uint32_t weight) {
    std::vector<std::uint32_t> idx;
    idx.reserve(weight);
    while (idx.size() < weight) {
        const auto cand = static_cast<std::uint32_t>(rng.next_in(1, dim));
        if (std::find(idx.begin(), idx.end(), cand) == idx.end()) idx.push_back(cand);
    }
    return SparseBinaryVector::from_unsorted(dim, std::move(idx));
}

// `both` shared positions plus `only` private ones per side, packed from 1.
std::pair<SparseBinaryVector, SparseBinaryVector> pair_with_overlap(std::uint32_t dim,
                                                                    std::uint32_t both,
                                                                    std::uint32_t only) {
    std::vector<std::uint32_t> a, b;
    std::uint32_t next = 1;
    for (std::uint32_t i = 0; i < both; ++i, ++next) {
        a.push_back(next);
        b.push_back(next);
    }
    for (std::uint32_t i = 0; i < only; ++i, ++next) a.push_back(next);
    for (std::uint32_t i = 0; i < only; ++i, ++next) b.push_back(next);
    return {SparseBinaryVector(dim, std::move(a)), SparseBinaryVector(dim, std::move(b))};
}

std::vector<double> threshold_sweep() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}; }

std::string find_kos_corpus() {
    if (const char* p = std::getenv("BCSKETCH_KOS"); p && *p) {
        if (std::filesystem::exists(p)) return p;
    }
    for (const char* dir : {"data/", "../data/", "../../data/"}) {
        const std::string candidate = std::string(dir) + "docword.kos.txt";
        if (std::filesystem::exists(candidate)) return candidate;
    }
    return {};
}

// 1. Exactness suite: gf(2) linearity, hamming and weight non-increase, and
//    the union = inner + hamming identity behind the jaccard ratio; 10^4
//    randomized instances per property, zero tolerance.
Outcome criterion1() {
    SplitMix64 rng(0xACC1ull);
    const int instances = 10'000;
    for (int it = 0; it < instances; ++it) {
        const auto dim = static_cast<std::uint32_t>(rng.next_in(1, 256));
        const SparseBinaryVector u = random_subset(rng, dim, 40);
        const SparseBinaryVector v = random_subset(rng, dim, 40);
        const BucketMap map = make_bucket_map(dim, rng.next_in(1, 128), rng.next());

        const BcsSketch su = bcs_compress(u, map);
        const BcsSketch sv = bcs_compress(v, map);
        if (!((su ^ sv) == bcs_compress(symmetric_difference(u, v), map))) {
            return Outcome::fail("gf(2) linearity violated at instance " + std::to_string(it));
        }
        if (hamming_distance(su, sv) > hamming_exact(u, v)) {
            return Outcome::fail("hamming distance increased at instance " + std::to_string(it));
        }
        if (su.weight() > u.weight()) {
            return Outcome::fail("sketch weight increased at instance " + std::to_string(it));
        }
        const SetOverlap o = overlap(u, v);
        if (o.union_size != inner_exact(u, v) + hamming_exact(u, v)) {
            return Outcome::fail("jaccard identity violated at instance " + std::to_string(it));
        }
    }
    return Outcome::pass("4 properties x " + std::to_string(instances) + " instances");
}

// 2. MinHash exact unbiasedness: for every d <= 6 and every pair of subsets,
//    the match count over all d! permutations equals the jaccard ratio as an
//    exact rational.
Outcome criterion2() {
    for (std::uint32_t dim = 1; dim <= 6; ++dim) {
        std::vector<std::uint32_t> perm(dim);
        for (std::uint32_t i = 0; i < dim; ++i) perm[i] = i + 1;
        std::vector<std::vector<std::uint32_t>> rank_tables;
        do {
            rank_tables.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));

        std::vector<SparseBinaryVector> subsets;
        for (std::uint32_t mask = 0; mask < (1u << dim); ++mask) {
            std::vector<std::uint32_t> idx;
            for (std::uint32_t i = 0; i < dim; ++i) {
                if (mask & (1u << i)) idx.push_back(i + 1);
            }
            subsets.emplace_back(dim, std::move(idx));
        }

        // h(subset) under every permutation, then pairwise match counts.
        std::vector<std::vector<std::uint32_t>> h(rank_tables.size());
        for (std::size_t p = 0; p < rank_tables.size(); ++p) {
            h[p].resize(subsets.size());
            for (std::size_t s = 0; s < subsets.size(); ++s) {
                h[p][s] = min_position_under(subsets[s], rank_tables[p]);
            }
        }
        for (std::size_t a = 0; a < subsets.size(); ++a) {
            for (std::size_t b = a; b < subsets.size(); ++b) {
                std::size_t matches = 0;
                for (std::size_t p = 0; p < rank_tables.size(); ++p) {
                    matches += (h[p][a] == h[p][b]);
                }
                const SetOverlap o = overlap(subsets[a], subsets[b]);
                const bool exact =
                    o.union_size == 0
                        ? matches == rank_tables.size()
                        : matches * o.union_size == o.intersection * rank_tables.size();
                if (!exact) {
                    return Outcome::fail("mismatch at d=" + std::to_string(dim) + " pair (" +
                                         std::to_string(a) + "," + std::to_string(b) + ")");
                }
            }
        }
    }
    return Outcome::pass("all subset pairs, d = 1..6, exact rational equality");
}

// 3. MinHash concentration: exact JS in {1/4, 1/3, 1/2}, N = 3000
//    permutations, estimate within +-0.04 in at least 99 of 100 seeded trials.
Outcome criterion3() {
    const std::uint32_t dim = 300;
    const struct {
        const char* label;
        std::uint32_t both;
        std::uint32_t only;
        double truth;
    } cases[] = {
        {"1/4", 10, 15, 0.25},
        {"1/3", 10, 10, 1.0 / 3.0},
        {"1/2", 20, 10, 0.5},
    };

    std::vector<SparseBinaryVector> vectors;
    for (const auto& c : cases) {
        auto [u, v] = pair_with_overlap(dim, c.both, c.only);
        if (jaccard_exact(u, v) != c.truth) {
            return Outcome::fail(std::string("fixture broken for JS=") + c.label);
        }
        vectors.push_back(std::move(u));
        vectors.push_back(std::move(v));
    }

    std::array<int, 3> within{0, 0, 0};
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        const PermutationFamily fam(dim, 3000, derive_seed(0xACC3ull, trial));
        const auto sketches = minhash_compress_all(vectors, fam);
        for (std::size_t c = 0; c < 3; ++c) {
            const double est = jaccard_minhash(sketches[2 * c], sketches[2 * c + 1]);
            if (std::abs(est - cases[c].truth) <= 0.04) ++within[c];
        }
    }
    for (std::size_t c = 0; c < 3; ++c) {
        if (within[c] < 99) {
            return Outcome::fail(std::string("JS=") + cases[c].label + " within tolerance in " +
                                 std::to_string(within[c]) + "/100 trials (need 99)");
        }
    }
    return Outcome::pass("within +-0.04 in " + std::to_string(within[0]) + "/" +
                         std::to_string(within[1]) + "/" + std::to_string(within[2]) +
                         " of 100 trials for JS=1/4, 1/3, 1/2");
}

// 4. BCS estimator fidelity at desk scale: 50 planted pairs (100 vectors,
//    psi=50, exact JS >= 0.3), N=40000 >= 16*psi^2; relative error <= 0.15
//    for >= 95% of (pair, map-seed) instances over 20 seeds.
Outcome criterion4() {
    const std::uint32_t dim = 10'000;
    const std::uint32_t psi = 50;
    const std::uint64_t length = 40'000;
    const int num_pairs = 50;
    const int num_seeds = 20;

    std::vector<PlantedPair> pairs;
    std::vector<double> exact;
    std::uint64_t attempt = 0;
    while (pairs.size() < static_cast<std::size_t>(num_pairs)) {
        PlantedPair p = gen_similar_pair(dim, psi, derive_seed(0xACC4ull, attempt++));
        const double js = jaccard_exact(p.first, p.second);
        if (js >= 0.3) {
            pairs.push_back(std::move(p));
            exact.push_back(js);
        }
    }

    int ok = 0;
    for (int seed = 0; seed < num_seeds; ++seed) {
        const BucketMap map = make_bucket_map(dim, length, derive_seed(0xACC4Full, seed));
        for (int p = 0; p < num_pairs; ++p) {
            const double estimate =
                jaccard_bcs(bcs_compress(pairs[p].first, map), bcs_compress(pairs[p].second, map));
            if (std::abs(estimate - exact[p]) <= 0.15 * exact[p]) ++ok;
        }
    }
    const int total = num_pairs * num_seeds;
    const int needed = (total * 95 + 99) / 100;
    if (ok < needed) {
        return Outcome::fail("within 15% relative error in " + std::to_string(ok) + "/" +
                             std::to_string(total) + " instances (need " + std::to_string(needed) +
                             ")");
    }
    return Outcome::pass(std::to_string(ok) + "/" + std::to_string(total) +
                         " instances within 15% relative error");
}

// 5. Corrupted-bucket bound: psi=10, N=6400, fresh max-sparsity pair and map
//    per trial; frequency of >= 2 shared corrupted buckets must not exceed
//    (2*psi/sqrt(N))^2 = 0.0625 over 10^4 trials.
Outcome criterion5() {
    const std::uint32_t dim = 1000;
    const std::uint32_t psi = 10;
    const std::uint64_t length = 6400;
    const int trials = 10'000;

    int hits = 0;
    std::unordered_map<std::uint64_t, int> bucket_load;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(derive_seed(0xACC5ull, t));
        const SparseBinaryVector u = random_subset_exact(rng, dim, psi);
        const SparseBinaryVector v = random_subset_exact(rng, dim, psi);
        const BucketMap map = make_bucket_map(dim, length, rng.next());

        // Active positions: set in u or v. A bucket is corrupted when two or
        // more active positions land in it.
        std::vector<std::uint32_t> active;
        std::set_union(u.indices().begin(), u.indices().end(), v.indices().begin(),
                       v.indices().end(), std::back_inserter(active));
        bucket_load.clear();
        for (std::uint32_t pos : active) ++bucket_load[map.bucket_of(pos)];
        int corrupted = 0;
        for (const auto& [bucket, load] : bucket_load) corrupted += (load >= 2);
        if (corrupted >= 2) ++hits;
    }
    const double freq = static_cast<double>(hits) / trials;
    if (freq > 0.0625) {
        return Outcome::fail("frequency " + fmt(freq) + " exceeds the 0.0625 bound");
    }
    return Outcome::pass("frequency " + fmt(freq) + " <= 0.0625 over 10^4 map seeds");
}

// 6. Synthetic all-pairs accuracy: n=200, d=20000, psi=50; BCS mean accuracy
//    across thresholds 0.1-0.9 at N=5000 must reach 0.85, and accuracy must
//    rise with N in {100, 500, 5000} up to 0.05 noise.
Outcome criterion6() {
    const SparseDataset ds = gen_allpairs_dataset(200, 20'000, 50, 40, 0xACC6ull);
    BenchOptions options;
    options.methods = {Method::Bcs};
    options.lengths = {100, 500, 5000};
    options.thresholds = threshold_sweep();
    options.repeats = 10;
    options.seed = 0xACC6ull;
    const BenchReport report = run_benchmark(ds, options);

    const double acc100 = report.mean_accuracy(Method::Bcs, 100);
    const double acc500 = report.mean_accuracy(Method::Bcs, 500);
    const double acc5000 = report.mean_accuracy(Method::Bcs, 5000);
    const std::string detail = "mean accuracy: N=100 " + fmt(acc100) + ", N=500 " + fmt(acc500) +
                               ", N=5000 " + fmt(acc5000);
    if (acc5000 < 0.85) return Outcome::fail(detail + " (need >= 0.85 at N=5000)");
    if (acc500 < acc100 - 0.05 || acc5000 < acc500 - 0.05) {
        return Outcome::fail(detail + " (not monotone within 0.05)");
    }
    return Outcome::pass(detail);
}

// 7. Lossless limit: with an injective bucket map (N = d), benchmark accuracy
//    is exactly 1.0 at every threshold.
Outcome criterion7() {
    const SparseDataset ds = gen_allpairs_dataset(60, 500, 20, 15, 0xACC7ull);
    BenchOptions options;
    options.methods = {Method::Bcs};
    options.lengths = {500};
    options.thresholds = threshold_sweep();
    options.repeats = 2;
    options.seed = 0xACC7ull;
    options.bucket_map_factory = [](std::uint32_t dim, std::uint64_t, std::uint64_t) {
        return BucketMap::identity(dim);
    };
    const BenchReport report = run_benchmark(ds, options);
    for (const auto& row : report.rows) {
        if (row.accuracy != 1.0) {
            return Outcome::fail("accuracy " + fmt(row.accuracy, 10) + " at threshold " +
                                 fmt(row.threshold) + " (must be exactly 1)");
        }
    }
    return Outcome::pass("accuracy exactly 1.0 at all " +
                         std::to_string(report.rows.size()) + " thresholds");
}

// 8. Real-data smoke on the KOS corpus (skipped when the file is absent):
//    exact Table-1 shape, then a 90/10 query benchmark with BCS at N=2000
//    reaching mean accuracy >= 0.8 across thresholds.
Outcome criterion8() {
    const std::string path = find_kos_corpus();
    if (path.empty()) {
        return Outcome::skip(
            "KOS corpus not found; set BCSKETCH_KOS or place data/docword.kos.txt");
    }
    const SparseDataset ds = load_docword(path);
    if (ds.size() != 3430 || ds.dim() != 6906 || ds.sparsity() != 457) {
        return Outcome::fail("unexpected corpus shape: n=" + std::to_string(ds.size()) +
                             " d=" + std::to_string(ds.dim()) +
                             " psi=" + std::to_string(ds.sparsity()) +
                             " (expected 3430/6906/457)");
    }
    BenchOptions options;
    options.methods = {Method::Bcs};
    options.lengths = {2000};
    options.thresholds = threshold_sweep();
    options.repeats = 3;
    options.mode = SearchMode::Query;
    options.query_fraction = 0.1;
    options.seed = 0xACC8ull;
    const BenchReport report = run_benchmark(ds, options);
    const double acc = report.mean_accuracy(Method::Bcs, 2000);
    if (acc < 0.8) {
        return Outcome::fail("mean query accuracy " + fmt(acc) + " below 0.8");
    }
    return Outcome::pass("corpus shape exact; mean query accuracy " + fmt(acc));
}

// 9. Relative performance at N=5000 on the criterion-6 dataset: BCS must
//    compress and search faster than minhash; the ratios themselves are
//    hardware-dependent and only reported.
Outcome criterion9() {
    const SparseDataset ds = gen_allpairs_dataset(200, 20'000, 50, 40, 0xACC6ull);
    BenchOptions options;
    options.methods = {Method::Bcs, Method::MinHash};
    options.lengths = {5000};
    options.thresholds = threshold_sweep();
    options.repeats = 3;
    options.seed = 0xACC9ull;
    const BenchReport report = run_benchmark(ds, options);

    double bcs_compress_t = 0, mh_compress_t = 0, bcs_search = 0, mh_search = 0;
    std::size_t bcs_rows = 0, mh_rows = 0;
    for (const auto& row : report.rows) {
        if (row.method == Method::Bcs) {
            bcs_compress_t = row.compress_time_s;
            bcs_search += row.search_time_s;
            ++bcs_rows;
        } else {
            mh_compress_t = row.compress_time_s;
            mh_search += row.search_time_s;
            ++mh_rows;
        }
    }
    bcs_search /= static_cast<double>(bcs_rows);
    mh_search /= static_cast<double>(mh_rows);

    const std::string detail = "compress bcs " + fmt(bcs_compress_t) + "s vs minhash " +
                               fmt(mh_compress_t) + "s (" +
                               fmt(mh_compress_t / bcs_compress_t, 3) + "x); search bcs " +
                               fmt(bcs_search) + "s vs minhash " + fmt(mh_search) + "s (" +
                               fmt(mh_search / bcs_search, 3) + "x)";
    if (!(bcs_compress_t < mh_compress_t)) {
        return Outcome::fail(detail + "; bcs compression not faster");
    }
    if (!(bcs_search < mh_search)) {
        return Outcome::fail(detail + "; bcs search not faster");
    }
    return Outcome::pass(detail);
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {1, "exactness properties (gf2 linearity, non-increase, jaccard identity)", criterion1},
        {2, "minhash exact unbiasedness over all permutations (d <= 6)", criterion2},
        {3, "minhash concentration (N=3000, +-0.04, 99/100 trials)", criterion3},
        {4, "bcs estimator fidelity (psi=50, N=40000, 15% relative error)", criterion4},
        {5, "corrupted-bucket bound (psi=10, N=6400, freq <= 0.0625)", criterion5},
        {6, "synthetic all-pairs accuracy (bcs mean >= 0.85 at N=5000)", criterion6},
        {7, "lossless limit (injective map, accuracy exactly 1)", criterion7},
        {8, "real-data smoke (KOS, exact shape + query accuracy >= 0.8)", criterion8},
        {9, "relative performance (bcs faster than minhash)", criterion9},
    };

    int selected = 0;
    if (argc > 1) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > static_cast<int>(criteria.size())) {
            std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
            return 2;
        }
    }

    bool any_failed = false;
    for (const auto& criterion : criteria) {
        if (selected != 0 && criterion.id != selected) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome = Outcome::fail("unknown error");
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome = Outcome::fail(std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const char* tag = outcome.kind == Outcome::Kind::Pass   ? "[PASS]"
                          : outcome.kind == Outcome::Kind::Fail ? "[FAIL]"
                                                                : "[SKIP]";
        std::printf("%s criterion %d: %s", tag, criterion.id, criterion.name);
        if (!outcome.detail.empty()) std::printf(" :: %s", outcome.detail.c_str());
        std::printf(" [%.1fs]\n", elapsed);
        if (outcome.kind == Outcome::Kind::Fail) any_failed = true;
    }
    return any_failed ? 1 : 0;
}
