#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scldpc/matrix.hpp"

namespace scldpc {

/// The 3*gamma x kappa stack [H_0^p; H_1^p; H_d^p]. Each column has exactly
/// one 1 among rows {i, gamma+i, 2*gamma+i} for every i (partition property).
class StackedProtograph {
  public:
    StackedProtograph(int gamma, int kappa)
        : gamma_(gamma), kappa_(kappa), bits_(3 * gamma, kappa) {}

    int gamma() const { return gamma_; }
    int kappa() const { return kappa_; }
    const Protograph& bits() const { return bits_; }
    bool get(int row, int col) const { return bits_.get(row, col); }
    void set(int row, int col, bool v) { bits_.set(row, col, v); }

  private:
    int gamma_, kappa_;
    Protograph bits_;
};

/// Stack the component protographs of an m=1 partitioning: rows i from H_0^p,
/// gamma+i from H_1^p, 2*gamma+i from H_d^p.
StackedProtograph build_pi(const PartitioningMatrix& pm);

/// Number of columns of pi in which all listed rows hold 1s. rows must be
/// non-empty and within 0..3*gamma-1.
long long overlap(const StackedProtograph& pi, const std::vector<int>& rows);

struct UnresolvableOverlap : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Map from sorted row-index sets of the stacked protograph to overlap counts.
/// Stores the free parameters (sets over rows gamma..3*gamma-1); everything
/// else resolves through the zero rule or inclusion-exclusion expansion.
class OverlapParameterTable {
  public:
    OverlapParameterTable(int gamma, int kappa) : gamma_(gamma), kappa_(kappa) {}

    /// Table of a concrete partitioning: stores every distinct-residue set over
    /// rows gamma..3*gamma-1 up to size 3 and keeps pi for larger sets, which
    /// are counted on demand.
    static OverlapParameterTable from_stacked(const StackedProtograph& pi);

    int gamma() const { return gamma_; }
    int kappa() const { return kappa_; }

    /// Insert one parameter. The key must be sorted and duplicate-free.
    void set(const std::vector<int>& rows, long long value);

    bool contains(const std::vector<int>& rows) const {
        return entries_.count(rows) != 0;
    }

    /// Resolve any row set: empty -> kappa; repeated residue mod gamma -> 0;
    /// sets over rows >= gamma from storage (or from the retained stack);
    /// sets touching rows < gamma via the inclusion-exclusion expansion.
    /// Throws UnresolvableOverlap when a referenced parameter is unknown.
    long long resolve(const std::vector<int>& rows) const;

    const std::map<std::vector<int>, long long>& entries() const { return entries_; }

    std::string to_json() const;
    static OverlapParameterTable from_json(const std::string& text);

  private:
    int gamma_, kappa_;
    std::map<std::vector<int>, long long> entries_;
    std::optional<StackedProtograph> source_;
};

/// The non-deterministic independent parameter index sets, ordered by size
/// then lexicographically: subsets of {gamma,..,3*gamma-1} of size 1..gamma
/// with pairwise-distinct residues mod gamma, excluding subsets lying fully
/// in the dummy block {2*gamma,..,3*gamma-1}. Cardinality 3^gamma - 2^gamma.
std::vector<std::vector<int>> enumerate_ndi(int gamma);

/// Expansion of a dependent parameter in terms of table entries. A target with
/// two indices equal mod gamma yields 0.
long long expand_dependent(const std::vector<int>& target, const OverlapParameterTable& table,
                           int kappa, int gamma);

}  // namespace scldpc
