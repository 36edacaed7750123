#include "bcsketch/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "bcsketch/prng.hpp"

namespace bcsketch {

namespace {

[[noreturn]] void parse_error(const std::string& name, std::size_t line_no,
                              const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line_no) + ": " + what);
}

// Splits on spaces/tabs and parses every token as a nonnegative integer.
std::vector<std::uint64_t> parse_fields(const std::string& name, std::size_t line_no,
                                        std::string_view line) {
    std::vector<std::uint64_t> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
        if (ec != std::errc{} || ptr != line.data() + j) {
            parse_error(name, line_no,
                        "expected an integer, got '" + std::string(line.substr(i, j - i)) + "'");
        }
        out.push_back(value);
        i = j;
    }
    return out;
}

std::uint64_t parse_header_line(std::istream& in, const std::string& name, std::size_t& line_no,
                                const char* label) {
    std::string line;
    if (!std::getline(in, line)) {
        parse_error(name, line_no + 1, std::string("missing header line (") + label + ")");
    }
    ++line_no;
    const auto fields = parse_fields(name, line_no, line);
    if (fields.size() != 1 || fields[0] == 0) {
        parse_error(name, line_no, std::string("header line must be one positive integer (") +
                                       label + ")");
    }
    return fields[0];
}

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    SplitMix64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        std::swap(idx[i - 1], idx[rng.next_below(i)]);
    }
    return idx;
}

SparseDataset take(const SparseDataset& ds, const std::vector<std::size_t>& order,
                   std::size_t begin, std::size_t end) {
    std::vector<SparseBinaryVector> out;
    out.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) out.push_back(ds[order[i]]);
    return SparseDataset(ds.dim(), std::move(out));
}

}  // namespace

SparseDataset load_docword(std::istream& in, const std::string& name) {
    std::size_t line_no = 0;
    BowHeader header{};
    header.num_docs = parse_header_line(in, name, line_no, "D");
    header.vocab_size = parse_header_line(in, name, line_no, "W");
    header.nnz = parse_header_line(in, name, line_no, "NNZ");
    if (header.nnz > header.num_docs * header.vocab_size) {
        parse_error(name, line_no, "NNZ exceeds D*W");
    }

    std::vector<std::vector<std::uint32_t>> docs(header.num_docs);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto fields = parse_fields(name, line_no, line);
        if (fields.empty()) continue;
        if (fields.size() != 3) {
            parse_error(name, line_no, "expected 'docID wordID count', got " +
                                           std::to_string(fields.size()) + " fields");
        }
        const auto [doc, word, count] = std::tuple{fields[0], fields[1], fields[2]};
        if (doc == 0 || doc > header.num_docs) {
            parse_error(name, line_no, "docID " + std::to_string(doc) + " outside [1, " +
                                           std::to_string(header.num_docs) + "]");
        }
        if (word == 0 || word > header.vocab_size) {
            parse_error(name, line_no, "wordID " + std::to_string(word) + " outside [1, " +
                                           std::to_string(header.vocab_size) + "]");
        }
        if (count >= 1) docs[doc - 1].push_back(static_cast<std::uint32_t>(word));
    }

    std::vector<SparseBinaryVector> vectors;
    vectors.reserve(header.num_docs);
    const auto dim = static_cast<std::uint32_t>(header.vocab_size);
    for (auto& words : docs) {
        vectors.push_back(SparseBinaryVector::from_unsorted(dim, std::move(words)));
    }
    return SparseDataset(dim, std::move(vectors));
}

SparseDataset load_docword(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_docword(in, path);
}

void write_sparse(const SparseDataset& ds, std::ostream& out) {
    out << ds.size() << ' ' << ds.dim() << '\n';
    for (const auto& v : ds.vectors()) {
        const auto& idx = v.indices();
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) out << ' ';
            out << idx[i];
        }
        out << '\n';
    }
}

void save_sparse(const SparseDataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: keep LF endings everywhere
    if (!out) throw std::runtime_error("cannot write " + path);
    write_sparse(ds, out);
    if (!out) throw std::runtime_error("write failed: " + path);
}

SparseDataset read_sparse(std::istream& in, const std::string& name) {
    std::size_t line_no = 0;
    std::string line;
    if (!std::getline(in, line)) parse_error(name, 1, "missing 'n d' header line");
    ++line_no;
    const auto header = parse_fields(name, line_no, line);
    if (header.size() != 2 || header[1] == 0) {
        parse_error(name, line_no, "header line must be 'n d' with d positive");
    }
    const std::uint64_t n = header[0];
    const auto dim = static_cast<std::uint32_t>(header[1]);

    std::vector<SparseBinaryVector> vectors;
    vectors.reserve(n);
    for (std::uint64_t row = 0; row < n; ++row) {
        if (!std::getline(in, line)) {
            parse_error(name, line_no + 1, "expected " + std::to_string(n) + " vector lines, got " +
                                               std::to_string(row));
        }
        ++line_no;
        const auto fields = parse_fields(name, line_no, line);
        std::vector<std::uint32_t> idx;
        idx.reserve(fields.size());
        for (std::uint64_t f : fields) {
            if (f == 0 || f > dim) {
                parse_error(name, line_no, "index " + std::to_string(f) + " outside [1, " +
                                               std::to_string(dim) + "]");
            }
            if (!idx.empty() && f <= idx.back()) {
                parse_error(name, line_no, "indices must be strictly ascending");
            }
            idx.push_back(static_cast<std::uint32_t>(f));
        }
        vectors.emplace_back(dim, std::move(idx));
    }
    return SparseDataset(dim, std::move(vectors));
}

SparseDataset load_sparse(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_sparse(in, path);
}

SparseDataset sample_dataset(const SparseDataset& ds, std::size_t m, std::uint64_t seed) {
    if (m > ds.size()) {
        throw std::invalid_argument("sample_dataset: sample size exceeds dataset size");
    }
    // Partial Fisher-Yates: the first m entries of the shuffle are the draw.
    std::vector<std::size_t> idx(ds.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    SplitMix64 rng(seed);
    std::vector<SparseBinaryVector> out;
    out.reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
        std::swap(idx[j], idx[j + rng.next_below(ds.size() - j)]);
        out.push_back(ds[idx[j]]);
    }
    return SparseDataset(ds.dim(), std::move(out));
}

std::pair<SparseDataset, SparseDataset> split_train_query(const SparseDataset& ds,
                                                          double query_fraction,
                                                          std::uint64_t seed) {
    if (!(query_fraction > 0.0 && query_fraction < 1.0)) {
        throw std::invalid_argument("split_train_query: query_fraction must be in (0,1)");
    }
    const auto q = static_cast<std::size_t>(
        std::llround(query_fraction * static_cast<double>(ds.size())));
    if (q == 0 || q >= ds.size()) {
        throw std::invalid_argument("split_train_query: split would leave an empty partition");
    }
    const auto order = shuffled_indices(ds.size(), seed);
    SparseDataset query = take(ds, order, 0, q);
    SparseDataset train = take(ds, order, q, ds.size());
    return {std::move(train), std::move(query)};
}

}  // namespace bcsketch
