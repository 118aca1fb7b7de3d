#include "scldpc/cb_core.hpp"

#include <stdexcept>

namespace scldpc {

Partition partition(const CBMatrix& h, const PartitioningMatrix& pm) {
    if (h.gamma() != pm.gamma() || h.kappa() != pm.kappa())
        throw std::invalid_argument("partition: dimension mismatch between H and PM");

    Partition out{std::vector<CBMatrix>(), CBMatrix(h.gamma(), h.kappa(), h.z())};
    out.components.assign(pm.memory() + 1, CBMatrix(h.gamma(), h.kappa(), h.z()));

    for (int i = 0; i < h.gamma(); ++i) {
        for (int j = 0; j < h.kappa(); ++j) {
            if (h.is_zero(i, j)) continue;
            int lab = pm.label(i, j);
            CBMatrix& dst = (lab == PartitioningMatrix::kDummy) ? out.dummy : out.components[lab];
            dst.set_power(i, j, h.power(i, j));
        }
    }
    return out;
}

SCCode assemble_sc(const std::vector<CBMatrix>& components, int L) {
    if (components.empty()) throw std::invalid_argument("assemble_sc: no components");
    if (L < 1) throw std::invalid_argument("assemble_sc: L must be >= 1");
    const int gamma = components[0].gamma();
    const int kappa = components[0].kappa();
    const int z = components[0].z();
    for (const CBMatrix& c : components)
        if (c.gamma() != gamma || c.kappa() != kappa || c.z() != z)
            throw std::invalid_argument("assemble_sc: inconsistent component shapes");

    SCCode sc;
    sc.components = components;
    sc.gamma = gamma;
    sc.kappa = kappa;
    sc.z = z;
    sc.m = static_cast<int>(components.size()) - 1;
    sc.L = L;

    const int proto_rows = gamma * (L + sc.m);
    const int proto_cols = kappa * L;
    sc.protograph = Protograph(proto_rows, proto_cols);

    std::vector<std::pair<int, int>> entries;
    for (int r = 0; r < L; ++r) {
        for (int k = 0; k <= sc.m; ++k) {
            const CBMatrix& comp = components[k];
            const int row_block = r + k;
            for (int i = 0; i < gamma; ++i) {
                for (int j = 0; j < kappa; ++j) {
                    if (comp.is_zero(i, j)) continue;
                    sc.protograph.set(row_block * gamma + i, r * kappa + j, true);
                    const int p = comp.power(i, j);
                    const int base_row = (row_block * gamma + i) * z;
                    const int base_col = (r * kappa + j) * z;
                    for (int s = 0; s < z; ++s)
                        entries.emplace_back(base_row + s, base_col + (s + p) % z);
                }
            }
        }
    }
    sc.lifted = SparseBinaryMatrix(gamma * z * (L + sc.m), kappa * z * L, std::move(entries));
    return sc;
}

ReplicaBlock replica(const SCCode& sc, int r) {
    if (r < 1 || r > sc.L) throw std::out_of_range("replica: index outside 1..L");
    const int width = sc.kappa * sc.z;
    const int first = (r - 1) * width;
    return ReplicaBlock{r, first, sc.lifted.column_block(first, width)};
}

DegreeDistribution degree_distributions(const Protograph& hd_proto, int gamma, int kappa) {
    if (hd_proto.rows() != gamma || hd_proto.cols() != kappa)
        throw std::invalid_argument("degree_distributions: H_d^p must be gamma x kappa");

    DegreeDistribution d;
    d.vn_counts.assign(gamma, 0);
    d.cn_counts.assign(kappa, 0);

    // Column with beta dummy entries yields a VN of degree gamma - beta.
    for (int v = 0; v < kappa; ++v) {
        int beta = hd_proto.col_weight(v);
        int degree = gamma - beta;
        if (degree >= 1) d.vn_counts[degree - 1] += 1;
    }
    // Row with alpha dummy entries yields interior CNs of degree kappa - alpha.
    for (int u = 0; u < gamma; ++u) {
        int alpha = hd_proto.row_weight(u);
        int degree = kappa - alpha;
        if (degree >= 1) d.cn_counts[degree - 1] += 1;
    }

    d.vn.assign(gamma, 0.0);
    d.cn.assign(kappa, 0.0);
    for (int i = 0; i < gamma; ++i) d.vn[i] = static_cast<double>(d.vn_counts[i]) / kappa;
    for (int j = 0; j < kappa; ++j) d.cn[j] = static_cast<double>(d.cn_counts[j]) / gamma;
    return d;
}

BoundaryDegrees boundary_degrees(const PartitioningMatrix& pm) {
    const int gamma = pm.gamma();
    const int m = pm.memory();

    // Weight of row u in component k's protograph.
    auto weight = [&](int k, int u) {
        int w = 0;
        for (int j = 0; j < pm.kappa(); ++j) w += (pm.label(u, j) == k);
        return w;
    };

    BoundaryDegrees b;
    for (int blk = 0; blk < m; ++blk) {
        std::vector<int> degs(gamma, 0);
        for (int u = 0; u < gamma; ++u)
            for (int k = 0; k <= blk && k <= m; ++k) degs[u] += weight(k, u);
        b.first.push_back(std::move(degs));
    }
    // Last m blocks of an L-replica chain; block L-1+t sees components k >= t.
    for (int t = 1; t <= m; ++t) {
        std::vector<int> degs(gamma, 0);
        for (int u = 0; u < gamma; ++u)
            for (int k = t; k <= m; ++k) degs[u] += weight(k, u);
        b.last.push_back(std::move(degs));
    }
    return b;
}

}  // namespace scldpc
