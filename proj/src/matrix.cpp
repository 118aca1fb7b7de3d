#include "scldpc/matrix.hpp"

namespace scldpc {

CBMatrix make_ab_powers(int gamma, int kappa, int z) {
    CBMatrix h(gamma, kappa, z);
    for (int i = 0; i < gamma; ++i)
        for (int j = 0; j < kappa; ++j)
            h.set_power(i, j, static_cast<int>((static_cast<long long>(i) * j) % z));
    return h;
}

Protograph protograph_of(const CBMatrix& grid) {
    Protograph p(grid.gamma(), grid.kappa());
    for (int i = 0; i < grid.gamma(); ++i)
        for (int j = 0; j < grid.kappa(); ++j)
            p.set(i, j, !grid.is_zero(i, j));
    return p;
}

Protograph dummy_protograph(const PartitioningMatrix& pm) {
    Protograph p(pm.gamma(), pm.kappa());
    for (int i = 0; i < pm.gamma(); ++i)
        for (int j = 0; j < pm.kappa(); ++j)
            p.set(i, j, pm.is_dummy(i, j));
    return p;
}

}  // namespace scldpc
