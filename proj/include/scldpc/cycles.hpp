#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scldpc/matrix.hpp"
#include "scldpc/overlap.hpp"

namespace scldpc {

struct CycleCensus {
    enum class Scope { protograph, lifted };

    int length = 6;  // 4 or 6
    Scope scope = Scope::protograph;
    long long count = 0;

    // Participation per circulant position of the base grid, row-major
    // gamma x kappa; present for lifted censuses. Sums to length * count.
    int grid_gamma = 0, grid_kappa = 0;
    std::optional<std::vector<long long>> per_circulant;

    long long participation(int i, int j) const {
        return (*per_circulant)[static_cast<size_t>(i) * grid_kappa + j];
    }

    std::string to_json() const;
    static CycleCensus from_json(const std::string& text);
};

/// Protograph of the coupled chain without lifting: gamma*(L+m) x kappa*L.
Protograph sc_protograph(const PartitioningMatrix& pm, int L);

/// Clamped cycle-count kernels. a: triple overlap; p, q: the two pair overlaps
/// sharing the distinguished row; r / s: the remaining pair overlap.
long long theorem1_A(long long a, long long p, long long q, long long r);
long long theorem1_B(long long a, long long p, long long q, long long s);

/// Closed-form number of cycles-6 in the coupled protograph for m=1:
/// F = L*F_1^1 + (L-1)*F_1^2, with F_1^1 summing theorem1_A over row triples
/// of one replica and F_1^2 summing theorem1_B over the two-replica families.
/// All overlaps are resolved through the table.
long long theorem1_count(const OverlapParameterTable& table, int L, int gamma, int kappa);

/// Independent oracle: exact census of length-4 or length-6 cycles in the
/// bipartite graph of p, by canonical depth-first path enumeration. Each
/// unordered cycle is counted exactly once.
CycleCensus brute_force_proto_cycles(const Protograph& p, int length);

/// One protograph cycle of the two-replica window, mapped to base circulant
/// positions with traversal signs.
struct TemplateCycle {
    bool spans_two;  // uses columns of both replicas: weight L-1 instead of L
    struct Edge {
        int i, j;  // base circulant position
        int sign;  // +1 / -1, alternating along the traversal
    };
    std::vector<Edge> edges;  // 4 or 6 entries
};

struct CycleTemplates {
    int gamma = 0, kappa = 0;
    std::vector<TemplateCycle> len6;
    std::vector<TemplateCycle> len4;
};

/// Enumerate the protograph cycles of an m=1 chain once, inside the
/// two-replica window. Cycles confined to the second replica are shifted
/// copies of first-replica cycles and are skipped.
CycleTemplates build_cycle_templates(const PartitioningMatrix& pm);

/// Cycle count in the lifted graph: each protograph cycle lifts to exactly z
/// cycles when its alternating power sum is 0 mod z, and to none otherwise.
/// Populates per-circulant participation counts.
CycleCensus lifted_cycle_count(const PartitioningMatrix& pm, const CBMatrix& cm, int z, int L,
                               int length);

/// Shortest cycle length in the lifted graph probed at 4 and 6; returns 8
/// meaning "greater than 6".
int girth(const PartitioningMatrix& pm, const CBMatrix& cm, int z, int L);

}  // namespace scldpc
