#pragma once

#include <vector>

#include "scldpc/matrix.hpp"
#include "scldpc/sparse.hpp"

namespace scldpc {

/// Partition of a block code: component grids plus the discarded dummy grid.
struct Partition {
    std::vector<CBMatrix> components;  // H_0 .. H_m
    CBMatrix dummy;                    // H_d, inspection only
};

/// Split h according to pm: component k keeps the circulants labeled k, the
/// dummy grid keeps the discarded ones. Every circulant lands in exactly one
/// output grid.
Partition partition(const CBMatrix& h, const PartitioningMatrix& pm);

/// Spatially coupled code: L copies of the component stack on a band diagonal.
struct SCCode {
    std::vector<CBMatrix> components;
    int gamma = 0, kappa = 0, z = 0, m = 0, L = 0;
    SparseBinaryMatrix lifted;  // gamma*z*(L+m) rows, kappa*z*L cols
    Protograph protograph;      // gamma*(L+m) rows, kappa*L cols

    SCCode() : protograph(1, 1) {}

    double design_rate() const {
        return 1.0 - static_cast<double>(gamma) * (L + m) / (static_cast<double>(kappa) * L);
    }
};

/// Couple L replicas of the component stack. Replica r (1-based) places
/// component k's bits in row block (r-1+k), column block (r-1).
SCCode assemble_sc(const std::vector<CBMatrix>& components, int L);

/// One replica: a kappa*z column slice of the lifted matrix. Non-zero rows are
/// confined to row blocks (index-1) .. (index-1+m).
struct ReplicaBlock {
    int index;      // 1-based
    int first_col;  // in the lifted matrix
    SparseBinaryMatrix bits;
};

ReplicaBlock replica(const SCCode& sc, int r);

/// Node-degree fractions of the coupled protograph. vn[i] is the fraction of
/// VNs with degree i+1; cn[j] the fraction of interior CNs with degree j+1.
/// Boundary CNs (first and last m row blocks) have lower degree and are
/// reported separately.
struct DegreeDistribution {
    std::vector<double> vn;       // length gamma
    std::vector<double> cn;       // length kappa, interior CNs
    std::vector<int> vn_counts;   // columns per VN degree class
    std::vector<int> cn_counts;   // rows per interior CN degree class
};

DegreeDistribution degree_distributions(const Protograph& hd_proto, int gamma, int kappa);

/// Degrees of the terminated CN row groups, one value per protograph row of
/// the first and last block. For m=1: first block sees only H_0, last only H_1.
struct BoundaryDegrees {
    std::vector<std::vector<int>> first;  // m blocks, each gamma values
    std::vector<std::vector<int>> last;
};

BoundaryDegrees boundary_degrees(const PartitioningMatrix& pm);

}  // namespace scldpc
