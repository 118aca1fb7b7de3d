#include "scldpc/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace scldpc {

SparseBinaryMatrix::SparseBinaryMatrix(int rows, int cols,
                                       std::vector<std::pair<int, int>> entries)
    : rows_(rows), cols_(cols), row_cols_(rows), col_rows_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("SparseBinaryMatrix: bad shape");
    std::sort(entries.begin(), entries.end());
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
    for (auto [r, c] : entries) {
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw std::out_of_range("SparseBinaryMatrix: entry out of range");
        row_cols_[r].push_back(c);
        col_rows_[c].push_back(r);
    }
    nnz_ = static_cast<long long>(entries.size());
}

bool SparseBinaryMatrix::get(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseBinaryMatrix: index out of range");
    const auto& rc = row_cols_[r];
    return std::binary_search(rc.begin(), rc.end(), c);
}

SparseBinaryMatrix SparseBinaryMatrix::column_block(int first, int count) const {
    if (first < 0 || count < 0 || first + count > cols_)
        throw std::out_of_range("SparseBinaryMatrix: column block out of range");
    std::vector<std::pair<int, int>> entries;
    for (int c = first; c < first + count; ++c)
        for (int r : col_rows_[c]) entries.emplace_back(r, c - first);
    return SparseBinaryMatrix(rows_, count, std::move(entries));
}

}  // namespace scldpc
