#pragma once

#include <utility>
#include <vector>

namespace scldpc {

/// Sparse binary matrix held as row- and column-adjacency lists (both sorted).
class SparseBinaryMatrix {
  public:
    SparseBinaryMatrix() : rows_(0), cols_(0) {}
    SparseBinaryMatrix(int rows, int cols, std::vector<std::pair<int, int>> entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long num_entries() const { return nnz_; }

    const std::vector<int>& row_cols(int r) const { return row_cols_[r]; }
    const std::vector<int>& col_rows(int c) const { return col_rows_[c]; }

    bool get(int r, int c) const;

    /// Contiguous column slice [first, first+count) as its own matrix.
    SparseBinaryMatrix column_block(int first, int count) const;

    bool operator==(const SparseBinaryMatrix&) const = default;

  private:
    int rows_, cols_;
    long long nnz_ = 0;
    std::vector<std::vector<int>> row_cols_;
    std::vector<std::vector<int>> col_rows_;
};

}  // namespace scldpc
