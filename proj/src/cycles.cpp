#include "scldpc/cycles.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace scldpc {

std::string CycleCensus::to_json() const {
    nlohmann::json j;
    j["scope"] = (scope == Scope::protograph) ? "protograph" : "lifted";
    j["length"] = length;
    j["count"] = count;
    if (per_circulant) {
        j["grid"] = {{"gamma", grid_gamma}, {"kappa", grid_kappa}};
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < grid_gamma; ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int jj = 0; jj < grid_kappa; ++jj) row.push_back(participation(i, jj));
            rows.push_back(row);
        }
        j["per_circulant"] = rows;
    }
    return j.dump(2);
}

CycleCensus CycleCensus::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CycleCensus c;
    c.scope = (j.at("scope").get<std::string>() == "lifted") ? Scope::lifted : Scope::protograph;
    c.length = j.at("length").get<int>();
    c.count = j.at("count").get<long long>();
    if (j.contains("per_circulant")) {
        c.grid_gamma = j.at("grid").at("gamma").get<int>();
        c.grid_kappa = j.at("grid").at("kappa").get<int>();
        std::vector<long long> grid;
        for (const auto& row : j.at("per_circulant"))
            for (const auto& v : row) grid.push_back(v.get<long long>());
        c.per_circulant = std::move(grid);
    }
    return c;
}

Protograph sc_protograph(const PartitioningMatrix& pm, int L) {
    if (L < 1) throw std::invalid_argument("sc_protograph: L must be >= 1");
    const int gamma = pm.gamma(), kappa = pm.kappa(), m = pm.memory();
    Protograph p(gamma * (L + m), kappa * L);
    for (int r = 0; r < L; ++r)
        for (int i = 0; i < gamma; ++i)
            for (int j = 0; j < kappa; ++j) {
                int lab = pm.label(i, j);
                if (lab == PartitioningMatrix::kDummy) continue;
                p.set((r + lab) * gamma + i, r * kappa + j, true);
            }
    return p;
}

long long theorem1_A(long long a, long long p, long long q, long long r) {
    auto pos = [](long long x) { return x > 0 ? x : 0; };
    return a * pos(a - 1) * pos(r - 2) + a * (q - a) * pos(r - 1) + (p - a) * a * pos(r - 1) +
           (p - a) * (q - a) * r;
}

long long theorem1_B(long long a, long long p, long long q, long long s) {
    auto pos = [](long long x) { return x > 0 ? x : 0; };
    return a * pos(q - 1) * s + (p - a) * q * s;
}

long long theorem1_count(const OverlapParameterTable& table, int L, int gamma, int kappa) {
    if (L < 1) throw std::invalid_argument("theorem1_count: L must be >= 1");
    if (table.gamma() != gamma || table.kappa() != kappa)
        throw std::invalid_argument("theorem1_count: table parameters disagree with gamma/kappa");

    auto t = [&](std::vector<int> rows) {
        std::sort(rows.begin(), rows.end());
        return table.resolve(rows);
    };
    auto residues_ok = [&](int a, int b, int c) {
        return a % gamma != b % gamma && a % gamma != c % gamma && b % gamma != c % gamma;
    };

    // Cycles confined to one replica: row triples of [H_0^p; H_1^p].
    long long f11 = 0;
    for (int i1 = 0; i1 < 2 * gamma; ++i1)
        for (int i2 = i1 + 1; i2 < 2 * gamma; ++i2)
            for (int i3 = i2 + 1; i3 < 2 * gamma; ++i3) {
                if (!residues_ok(i1, i2, i3)) continue;
                f11 += theorem1_A(t({i1, i2, i3}), t({i1, i2}), t({i1, i3}), t({i2, i3}));
            }

    // Cycles spanning two adjacent replicas. The lone cross-replica column
    // hangs off the two rows shared by the replicas: H_1 rows of the left
    // replica (seen as H_0 rows by the right one), and symmetrically.
    long long f12 = 0;
    for (int i1 = 0; i1 < 2 * gamma; ++i1) {
        for (int i2 = gamma; i2 < 2 * gamma; ++i2)
            for (int i3 = i2 + 1; i3 < 2 * gamma; ++i3) {
                if (i1 == i2 || i1 == i3 || !residues_ok(i1, i2, i3)) continue;
                f12 += theorem1_B(t({i1, i2, i3}), t({i1, i2}), t({i1, i3}),
                                  t({i2 - gamma, i3 - gamma}));
            }
        for (int i2 = 0; i2 < gamma; ++i2)
            for (int i3 = i2 + 1; i3 < gamma; ++i3) {
                if (i1 == i2 || i1 == i3 || !residues_ok(i1, i2, i3)) continue;
                f12 += theorem1_B(t({i1, i2, i3}), t({i1, i2}), t({i1, i3}),
                                  t({i2 + gamma, i3 + gamma}));
            }
    }

    return static_cast<long long>(L) * f11 + static_cast<long long>(L - 1) * f12;
}

namespace {

struct BipartiteAdj {
    std::vector<std::vector<int>> row_cols, col_rows;
    std::vector<std::vector<std::uint64_t>> row_bits;

    explicit BipartiteAdj(const Protograph& p)
        : row_cols(p.rows()), col_rows(p.cols()),
          row_bits(p.rows(), std::vector<std::uint64_t>((p.cols() + 63) / 64, 0)) {
        for (int r = 0; r < p.rows(); ++r)
            for (int c = 0; c < p.cols(); ++c)
                if (p.get(r, c)) {
                    row_cols[r].push_back(c);
                    col_rows[c].push_back(r);
                    row_bits[r][c >> 6] |= 1ULL << (c & 63);
                }
    }
    bool has(int r, int c) const { return (row_bits[r][c >> 6] >> (c & 63)) & 1; }
};

// Canonical traversal: c0 is the smallest column, direction fixed by r1 < r3.
// Emits the row/column visit order; each unordered cycle appears exactly once.
template <typename Fn>
void for_each_cycle6(const BipartiteAdj& g, Fn&& fn) {
    const int cols = static_cast<int>(g.col_rows.size());
    for (int c0 = 0; c0 < cols; ++c0)
        for (int r1 : g.col_rows[c0])
            for (int c1 : g.row_cols[r1]) {
                if (c1 <= c0) continue;
                for (int r2 : g.col_rows[c1]) {
                    if (r2 == r1) continue;
                    for (int c2 : g.row_cols[r2]) {
                        if (c2 <= c0 || c2 == c1) continue;
                        for (int r3 : g.col_rows[c2]) {
                            if (r3 <= r1 || r3 == r2) continue;
                            if (g.has(r3, c0)) fn(c0, r1, c1, r2, c2, r3);
                        }
                    }
                }
            }
}

template <typename Fn>
void for_each_cycle4(const BipartiteAdj& g, Fn&& fn) {
    const int cols = static_cast<int>(g.col_rows.size());
    for (int c0 = 0; c0 < cols; ++c0)
        for (int r1 : g.col_rows[c0])
            for (int c1 : g.row_cols[r1]) {
                if (c1 <= c0) continue;
                for (int r2 : g.col_rows[c1]) {
                    if (r2 <= r1) continue;
                    if (g.has(r2, c0)) fn(c0, r1, c1, r2);
                }
            }
}

}  // namespace

CycleCensus brute_force_proto_cycles(const Protograph& p, int length) {
    if (length != 4 && length != 6)
        throw std::invalid_argument("brute_force_proto_cycles: length must be 4 or 6");
    BipartiteAdj g(p);
    CycleCensus census;
    census.length = length;
    census.scope = CycleCensus::Scope::protograph;
    if (length == 6)
        for_each_cycle6(g, [&](int, int, int, int, int, int) { ++census.count; });
    else
        for_each_cycle4(g, [&](int, int, int, int) { ++census.count; });
    return census;
}

CycleTemplates build_cycle_templates(const PartitioningMatrix& pm) {
    if (pm.memory() != 1)
        throw std::invalid_argument("build_cycle_templates: defined for m=1 only");
    const int gamma = pm.gamma(), kappa = pm.kappa();

    Protograph window = sc_protograph(pm, 2);  // 3*gamma rows, 2*kappa cols
    BipartiteAdj g(window);

    CycleTemplates out;
    out.gamma = gamma;
    out.kappa = kappa;

    auto make_edges = [&](std::initializer_list<std::pair<int, int>> walk) {
        TemplateCycle cyc;
        cyc.spans_two = false;
        int sign = +1;
        for (auto [row, col] : walk) {
            cyc.edges.push_back({row % gamma, col % kappa, sign});
            sign = -sign;
        }
        return cyc;
    };

    for_each_cycle6(g, [&](int c0, int r1, int c1, int r2, int c2, int r3) {
        bool in_second = c0 >= kappa && c1 >= kappa && c2 >= kappa;
        if (in_second) return;  // shifted copy of a first-replica cycle
        TemplateCycle cyc = make_edges(
            {{r1, c0}, {r1, c1}, {r2, c1}, {r2, c2}, {r3, c2}, {r3, c0}});
        cyc.spans_two = (c0 >= kappa || c1 >= kappa || c2 >= kappa);
        out.len6.push_back(std::move(cyc));
    });
    for_each_cycle4(g, [&](int c0, int r1, int c1, int r2) {
        if (c0 >= kappa && c1 >= kappa) return;
        TemplateCycle cyc = make_edges({{r1, c0}, {r1, c1}, {r2, c1}, {r2, c0}});
        cyc.spans_two = (c1 >= kappa);
        out.len4.push_back(std::move(cyc));
    });
    return out;
}

namespace {

void require_powers(const PartitioningMatrix& pm, const CBMatrix& cm) {
    if (cm.gamma() != pm.gamma() || cm.kappa() != pm.kappa())
        throw std::invalid_argument("lifted_cycle_count: CM and PM dimensions disagree");
    for (int i = 0; i < pm.gamma(); ++i)
        for (int j = 0; j < pm.kappa(); ++j)
            if (!pm.is_dummy(i, j) && cm.is_zero(i, j))
                throw std::invalid_argument("lifted_cycle_count: missing power at (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
}

long long alternating_sum_mod(const TemplateCycle& cyc, const CBMatrix& cm, int z) {
    long long s = 0;
    for (const auto& e : cyc.edges) s += e.sign * cm.power(e.i, e.j);
    return ((s % z) + z) % z;
}

}  // namespace

CycleCensus lifted_cycle_count(const PartitioningMatrix& pm, const CBMatrix& cm, int z, int L,
                               int length) {
    if (length != 4 && length != 6)
        throw std::invalid_argument("lifted_cycle_count: length must be 4 or 6");
    if (L < 1) throw std::invalid_argument("lifted_cycle_count: L must be >= 1");
    if (cm.z() != z) throw std::invalid_argument("lifted_cycle_count: z disagrees with CM");
    require_powers(pm, cm);

    CycleTemplates templates = build_cycle_templates(pm);
    const auto& cycles = (length == 6) ? templates.len6 : templates.len4;

    CycleCensus census;
    census.length = length;
    census.scope = CycleCensus::Scope::lifted;
    census.grid_gamma = pm.gamma();
    census.grid_kappa = pm.kappa();
    census.per_circulant = std::vector<long long>(
        static_cast<size_t>(pm.gamma()) * pm.kappa(), 0);

    for (const TemplateCycle& cyc : cycles) {
        const long long mult = cyc.spans_two ? (L - 1) : L;
        if (mult == 0) continue;
        if (alternating_sum_mod(cyc, cm, z) != 0) continue;
        census.count += mult * z;  // z lifted cycles per satisfied protograph cycle
        for (const auto& e : cyc.edges)
            (*census.per_circulant)[static_cast<size_t>(e.i) * pm.kappa() + e.j] += mult * z;
    }
    return census;
}

int girth(const PartitioningMatrix& pm, const CBMatrix& cm, int z, int L) {
    if (lifted_cycle_count(pm, cm, z, L, 4).count > 0) return 4;
    if (lifted_cycle_count(pm, cm, z, L, 6).count > 0) return 6;
    return 8;
}

}  // namespace scldpc
