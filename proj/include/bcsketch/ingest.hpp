#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include "bcsketch/sparse_vector.hpp"

namespace bcsketch {

// Header of a UCI bag-of-words file: document count, vocabulary size,
// number of nonzero entries.
struct BowHeader {
    std::uint64_t num_docs;
    std::uint64_t vocab_size;
    std::uint64_t nnz;
};

/**
 * Loads a UCI docword file (three header lines D, W, NNZ, then lines of
 * "docID wordID count") as one binary vector per document: any count >= 1
 * sets the word's bit, duplicates collapse. Parse errors carry the 1-based
 * line number.
 */
SparseDataset load_docword(const std::string& path);
SparseDataset load_docword(std::istream& in, const std::string& name);

// Native sparse text format: first line "n d", then one line per vector of
// strictly ascending 1-based indices (an empty line is an empty vector).
void write_sparse(const SparseDataset& ds, std::ostream& out);
void save_sparse(const SparseDataset& ds, const std::string& path);
SparseDataset read_sparse(std::istream& in, const std::string& name);
SparseDataset load_sparse(const std::string& path);

// m vectors drawn uniformly without replacement (in draw order).
SparseDataset sample_dataset(const SparseDataset& ds, std::size_t m, std::uint64_t seed);

// Disjoint random split; the query side gets round(query_fraction * n)
// vectors. Throws if either side would be empty.
std::pair<SparseDataset, SparseDataset> split_train_query(const SparseDataset& ds,
                                                          double query_fraction,
                                                          std::uint64_t seed);

}  // namespace bcsketch
