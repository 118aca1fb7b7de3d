#pragma once

#include <stdexcept>
#include <string>

#include "scldpc/matrix.hpp"
#include "scldpc/sparse.hpp"

namespace scldpc {

/// Parse failure with 1-based line and token position of the offending cell.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", token " +
                             std::to_string(column) + ")"),
          line(line), column(column) {}
    int line, column;
};

/// Partitioning matrix grid: gamma rows of whitespace-separated tokens, `X`
/// for the dummy component, integer labels otherwise. Memory is inferred as
/// the largest label.
PartitioningMatrix parse_pm_text(const std::string& text);
std::string pm_to_text(const PartitioningMatrix& pm);

/// Circulant power grid: `X` marks positions without a circulant (stored as
/// zero circulants), integers in [0,z) otherwise.
CBMatrix parse_cm_text(const std::string& text, int z);
std::string cm_to_text(const CBMatrix& cm);

/// Dummy X-pattern grid: tokens `X` (dummy) and `.` (free).
Protograph parse_dummy_pattern(const std::string& text);
std::string dummy_pattern_to_text(const Protograph& hd);

/// Standard alist interchange: dimensions, max degrees, per-node degrees,
/// 1-based adjacency lists (columns first). Zero padding is tolerated on read.
std::string write_alist(const SparseBinaryMatrix& h);
SparseBinaryMatrix read_alist(const std::string& text);

}  // namespace scldpc
