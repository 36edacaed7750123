#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bcsketch/prng.hpp"
#include "bcsketch/search_eval.hpp"

namespace bcsketch {

// Command implementations behind the CLI front end. Each writes its outputs
// plus a manifest next to every output file and throws on invalid arguments
// or I/O failure.

struct SynthArgs {
    std::string kind;  // "allpairs" | "knn"
    std::size_t n = 0;
    std::uint32_t dim = 0;
    std::uint32_t psi = 0;
    std::size_t pairs = 0;      // allpairs: number of planted pairs
    std::size_t neighbors = 0;  // knn: number of planted neighbors
    std::uint64_t seed = kDefaultSeed;
    std::string out;
    std::string query_out;  // knn only; defaults to out + ".query"
};

void cmd_synth(const SynthArgs& args);

struct IngestArgs {
    std::string input;
    std::size_t sample = 0;  // 0 = keep the whole corpus
    std::uint64_t seed = kDefaultSeed;
    std::string out;
};

struct IngestSummary {
    std::size_t n;
    std::uint32_t dim;
    std::size_t psi;
};

IngestSummary cmd_ingest(const IngestArgs& args);

struct BenchArgs {
    std::string data;
    std::vector<std::string> methods{"bcs", "minhash"};
    std::vector<std::uint64_t> lengths;
    std::vector<double> thresholds;
    unsigned repeats = 10;
    std::string mode = "allpairs";
    double query_fraction = 0.1;
    std::uint64_t seed = kDefaultSeed;
    std::string csv_out;
};

BenchReport cmd_bench(const BenchArgs& args, std::ostream& summary);

struct ParamsArgs {
    std::uint64_t psi = 0;
    std::uint64_t n = 0;
    double epsilon = 0.0;
    std::uint64_t r = 0;
    std::uint64_t dim = 0;  // optional; adds the randomness comparison
};

void cmd_params(const ParamsArgs& args, std::ostream& out);

struct CompressArgs {
    std::string data;
    std::string method = "bcs";
    std::uint64_t length = 0;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
};

void cmd_compress(const CompressArgs& args);

}  // namespace bcsketch
