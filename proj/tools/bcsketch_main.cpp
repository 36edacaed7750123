#include <exception>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "bcsketch/cli.hpp"
#include "bcsketch/version.hpp"

namespace {

// Seed handling shared by all subcommands: a fixed default keeps naive runs
// reproducible; --random-seed opts into a fresh one.
struct SeedFlags {
    std::uint64_t seed = bcsketch::kDefaultSeed;
    bool randomize = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--seed", seed, "Master seed (default: fixed constant)");
        cmd->add_flag("--random-seed", randomize, "Draw the master seed from the OS entropy pool");
    }

    std::uint64_t resolve() const {
        if (!randomize) return seed;
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) | rd();
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jaccard-preserving compression of sparse binary sets: parity bucket sketches "
                 "(bcs) and minhash, with benchmark tooling"};
    app.set_version_flag("--version", std::string(bcsketch::kVersion));
    app.require_subcommand(1);

    // synth
    bcsketch::SynthArgs synth;
    SeedFlags synth_seed;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic dataset");
    synth_cmd->add_option("--kind", synth.kind, "allpairs|knn")->required();
    synth_cmd->add_option("--n", synth.n, "Total number of vectors (knn: including the query)")
        ->required();
    synth_cmd->add_option("--dim", synth.dim, "Dimension d")->required();
    synth_cmd->add_option("--psi", synth.psi, "Sparsity bound (max weight)")->required();
    synth_cmd->add_option("--pairs", synth.pairs, "allpairs: number of planted similar pairs");
    synth_cmd->add_option("--neighbors", synth.neighbors, "knn: number of planted neighbors");
    synth_cmd->add_option("--out", synth.out, "Output dataset path")->required();
    synth_cmd->add_option("--query-out", synth.query_out,
                          "knn: query vector path (default: <out>.query)");
    synth_seed.attach(synth_cmd);

    // ingest
    bcsketch::IngestArgs ingest;
    SeedFlags ingest_seed;
    auto* ingest_cmd =
        app.add_subcommand("ingest", "Binarize a UCI docword corpus into the native format");
    ingest_cmd->add_option("--input", ingest.input, "docword file (plain text)")->required();
    ingest_cmd->add_option("--sample", ingest.sample,
                           "Uniform sample size without replacement (default: whole corpus)");
    ingest_cmd->add_option("--out", ingest.out, "Output dataset path")->required();
    ingest_seed.attach(ingest_cmd);

    // bench
    bcsketch::BenchArgs bench;
    SeedFlags bench_seed;
    auto* bench_cmd = app.add_subcommand(
        "bench", "Accuracy / compression-time / search-time sweep over sketch methods");
    bench_cmd->add_option("--data", bench.data, "Dataset in native sparse format")->required();
    bench_cmd->add_option("--methods", bench.methods, "Comma-separated: bcs,minhash")
        ->delimiter(',');
    bench_cmd->add_option("--lengths", bench.lengths, "Comma-separated compression lengths N")
        ->required()
        ->delimiter(',');
    bench_cmd
        ->add_option("--thresholds", bench.thresholds, "Comma-separated support thresholds in [0,1]")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--repeats", bench.repeats, "Independent compression repeats (default 10)");
    bench_cmd->add_option("--mode", bench.mode, "allpairs|query (default allpairs)");
    bench_cmd->add_option("--query-fraction", bench.query_fraction,
                          "query mode: fraction held out as queries (default 0.1)");
    bench_cmd->add_option("--csv", bench.csv_out, "Output CSV path")->required();
    bench_seed.attach(bench_cmd);

    // params
    bcsketch::ParamsArgs params;
    auto* params_cmd = app.add_subcommand(
        "params", "Theoretical compression length and corruption bound calculator");
    params_cmd->add_option("--psi", params.psi, "Sparsity bound")->required();
    params_cmd->add_option("--n", params.n, "Number of vectors")->required();
    params_cmd->add_option("--epsilon", params.epsilon, "Deviation fraction in (0,1)")->required();
    params_cmd->add_option("--r", params.r, "Distance scale r (positive integer)")->required();
    params_cmd->add_option("--dim", params.dim, "Optional dimension d for the randomness counts");

    // compress
    bcsketch::CompressArgs compress;
    SeedFlags compress_seed;
    auto* compress_cmd =
        app.add_subcommand("compress", "One-shot compression of a dataset to a sketch file");
    compress_cmd->add_option("--data", compress.data, "Dataset in native sparse format")
        ->required();
    compress_cmd->add_option("--method", compress.method, "bcs|minhash (default bcs)");
    compress_cmd->add_option("--length", compress.length, "Compression length N")->required();
    compress_cmd->add_option("--out", compress.out, "Output sketch path")->required();
    compress_seed.attach(compress_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth_cmd->parsed()) {
            synth.seed = synth_seed.resolve();
            bcsketch::cmd_synth(synth);
        } else if (ingest_cmd->parsed()) {
            ingest.seed = ingest_seed.resolve();
            const auto summary = bcsketch::cmd_ingest(ingest);
            std::cout << "ingested " << ingest.input << ": n=" << summary.n << " d=" << summary.dim
                      << " psi=" << summary.psi << " -> " << ingest.out << "\n";
        } else if (bench_cmd->parsed()) {
            bench.seed = bench_seed.resolve();
            bcsketch::cmd_bench(bench, std::cout);
        } else if (params_cmd->parsed()) {
            bcsketch::cmd_params(params, std::cout);
        } else if (compress_cmd->parsed()) {
            compress.seed = compress_seed.resolve();
            bcsketch::cmd_compress(compress);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
