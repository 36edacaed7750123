#include "bcsketch/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bcsketch/bcs.hpp"
#include "bcsketch/datagen.hpp"
#include "bcsketch/ingest.hpp"
#include "bcsketch/manifest.hpp"
#include "bcsketch/minhash.hpp"
#include "bcsketch/params.hpp"
#include "bcsketch/similarity.hpp"

namespace bcsketch {

namespace {

std::string join_u64(const std::vector<std::uint64_t>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    return os.str();
}

std::string join_doubles(const std::vector<double>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    return os.str();
}

std::string join_strings(const std::vector<std::string>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += xs[i];
    }
    return out;
}

}  // namespace

void cmd_synth(const SynthArgs& args) {
    if (args.out.empty()) throw std::invalid_argument("synth: --out is required");
    RunManifest manifest("synth", args.seed);
    manifest.add("kind", args.kind);
    manifest.add("n", args.n);
    manifest.add("dim", std::uint64_t{args.dim});
    manifest.add("psi", std::uint64_t{args.psi});

    if (args.kind == "allpairs") {
        const SparseDataset ds = gen_allpairs_dataset(args.n, args.dim, args.psi, args.pairs,
                                                      args.seed);
        save_sparse(ds, args.out);
        manifest.add("pairs", args.pairs);
        manifest.add("out", args.out);
        manifest.write(manifest_path_for(args.out));
    } else if (args.kind == "knn") {
        const KnnDataset knn = gen_knn_dataset(args.n, args.dim, args.psi, args.neighbors,
                                               args.seed);
        const std::string query_out =
            args.query_out.empty() ? args.out + ".query" : args.query_out;
        save_sparse(knn.items, args.out);
        save_sparse(SparseDataset(knn.query.dim(), {knn.query}), query_out);
        manifest.add("neighbors", args.neighbors);
        manifest.add("out", args.out);
        manifest.add("query_out", query_out);
        manifest.write(manifest_path_for(args.out));
    } else {
        throw std::invalid_argument("synth: unknown kind '" + args.kind + "' (allpairs|knn)");
    }
}

IngestSummary cmd_ingest(const IngestArgs& args) {
    if (args.out.empty()) throw std::invalid_argument("ingest: --out is required");
    SparseDataset ds = load_docword(args.input);
    if (args.sample > 0) ds = sample_dataset(ds, args.sample, args.seed);
    save_sparse(ds, args.out);

    RunManifest manifest("ingest", args.seed);
    manifest.add("input", args.input);
    manifest.add("sample", args.sample);
    manifest.add("out", args.out);
    manifest.add("n", ds.size());
    manifest.add("d", std::uint64_t{ds.dim()});
    manifest.add("psi", ds.sparsity());
    manifest.write(manifest_path_for(args.out));
    return IngestSummary{ds.size(), ds.dim(), ds.sparsity()};
}

BenchReport cmd_bench(const BenchArgs& args, std::ostream& summary) {
    if (args.csv_out.empty()) throw std::invalid_argument("bench: --csv is required");
    if (args.thresholds.empty()) throw std::invalid_argument("bench: --thresholds is required");
    if (args.lengths.empty()) throw std::invalid_argument("bench: --lengths is required");

    const SparseDataset ds = load_sparse(args.data);

    BenchOptions options;
    options.methods.clear();
    for (const auto& m : args.methods) options.methods.push_back(parse_method(m));
    options.lengths = args.lengths;
    options.thresholds = args.thresholds;
    options.repeats = args.repeats;
    options.mode = parse_search_mode(args.mode);
    options.query_fraction = args.query_fraction;
    options.seed = args.seed;

    const BenchReport report = run_benchmark(ds, options);

    std::ofstream csv(args.csv_out, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + args.csv_out);
    report.write_csv(csv);
    if (!csv) throw std::runtime_error("write failed: " + args.csv_out);

    RunManifest manifest("bench", args.seed);
    manifest.add("data", args.data);
    manifest.add("methods", join_strings(args.methods));
    manifest.add("lengths", join_u64(args.lengths));
    manifest.add("thresholds", join_doubles(args.thresholds));
    manifest.add("repeats", args.repeats);
    manifest.add("mode", args.mode);
    if (options.mode == SearchMode::Query) manifest.add("query_fraction", args.query_fraction);
    manifest.add("csv", args.csv_out);
    manifest.add("n", ds.size());
    manifest.add("d", std::uint64_t{ds.dim()});
    manifest.add("psi", ds.sparsity());
    manifest.write(manifest_path_for(args.csv_out));

    summary << "dataset " << args.data << ": n=" << ds.size() << " d=" << ds.dim()
            << " psi=" << ds.sparsity() << " mode=" << args.mode << " repeats=" << args.repeats
            << "\n";
    summary << std::left << std::setw(9) << "method" << std::right << std::setw(8) << "N"
            << std::setw(15) << "mean_accuracy" << std::setw(13) << "compress_s" << std::setw(13)
            << "search_s" << "\n";
    for (Method method : options.methods) {
        for (std::uint64_t length : options.lengths) {
            double search = 0.0;
            double compress = 0.0;
            std::size_t count = 0;
            for (const auto& row : report.rows) {
                if (row.method == method && row.length == length) {
                    search += row.search_time_s;
                    compress = row.compress_time_s;
                    ++count;
                }
            }
            summary << std::left << std::setw(9) << to_string(method) << std::right << std::setw(8)
                    << length << std::setw(15) << std::fixed << std::setprecision(4)
                    << report.mean_accuracy(method, length) << std::setw(13)
                    << std::setprecision(4) << compress << std::setw(13) << std::setprecision(6)
                    << (search / static_cast<double>(count)) << "\n";
            summary.unsetf(std::ios::fixed);
            summary << std::setprecision(6);
        }
    }
    summary << "per-threshold rows written to " << args.csv_out << "\n";
    return report;
}

void cmd_params(const ParamsArgs& args, std::ostream& out) {
    const CompressionParams params(args.psi, args.n, args.epsilon, args.r);
    const std::uint64_t length = required_length(params);
    const bool small_branch = uses_small_length_branch(params);
    const double bound = corruption_bound(args.psi, length, args.epsilon, args.r);

    out << "psi=" << args.psi << " n=" << args.n << " epsilon=" << args.epsilon << " r=" << args.r
        << " epsilon_tilde=" << params.epsilon_tilde << "\n";
    out << "branch: " << (small_branch ? "eps*r > 3*log2(n), N = 16*psi^2"
                                       : "eps*r <= 3*log2(n), N = ceil(144*psi^2*log2(n)^2)")
        << "\n";
    out << "required length N = " << length << "\n";
    out << "corruption bound (2*psi/sqrt(N))^(eps*r) = " << bound << "\n";
    if (args.dim > 0) {
        out << "randomness at d=" << args.dim << ": bcs d*log2(N) = "
            << bcs_randomness_bits(args.dim, length) << " bits, minhash N*d*log2(d) = "
            << minhash_randomness_bits(args.dim, length) << " bits\n";
    }
}

void cmd_compress(const CompressArgs& args) {
    if (args.out.empty()) throw std::invalid_argument("compress: --out is required");
    if (args.length == 0) throw std::invalid_argument("compress: --length must be positive");
    const Method method = parse_method(args.method);
    const SparseDataset ds = load_sparse(args.data);

    std::ofstream out(args.out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + args.out);
    out << ds.size() << ' ' << args.length << ' ' << to_string(method) << ' ' << args.seed << '\n';

    if (method == Method::Bcs) {
        const BucketMap map = make_bucket_map(ds.dim(), args.length, args.seed);
        for (const auto& v : ds.vectors()) {
            const BcsSketch sketch = bcs_compress(v, map);
            bool first = true;
            for (std::uint64_t b = 1; b <= sketch.num_buckets(); ++b) {
                if (!sketch.test(b)) continue;
                if (!first) out << ' ';
                out << b;
                first = false;
            }
            out << '\n';
        }
    } else {
        const PermutationFamily fam(ds.dim(), static_cast<std::uint32_t>(args.length), args.seed);
        const auto sketches = minhash_compress_all(ds.vectors(), fam);
        for (const auto& sketch : sketches) {
            const auto& values = sketch.values();
            for (std::size_t k = 0; k < values.size(); ++k) {
                if (k) out << ' ';
                out << values[k];
            }
            out << '\n';
        }
    }
    if (!out) throw std::runtime_error("write failed: " + args.out);

    RunManifest manifest("compress", args.seed);
    manifest.add("data", args.data);
    manifest.add("method", to_string(method));
    manifest.add("length", args.length);
    manifest.add("out", args.out);
    manifest.add("n", ds.size());
    manifest.add("d", std::uint64_t{ds.dim()});
    manifest.write(manifest_path_for(args.out));
}

}  // namespace bcsketch
