#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace scldpc {

/// Grid of circulant descriptors: the parity-check matrix of a circulant-based
/// block code. Entry (i,j) is either a power p in [0,z) — the z-by-z identity
/// cyclically shifted p positions — or the z-by-z zero block.
class CBMatrix {
  public:
    static constexpr int kZero = -1;

    CBMatrix(int gamma, int kappa, int z)
        : gamma_(gamma), kappa_(kappa), z_(z), entries_(static_cast<size_t>(gamma) * kappa, kZero) {
        if (gamma < 1 || kappa < 1 || z < 1)
            throw std::invalid_argument("CBMatrix: gamma, kappa, z must be positive");
    }

    int gamma() const { return gamma_; }
    int kappa() const { return kappa_; }
    int z() const { return z_; }

    bool is_zero(int i, int j) const { return at(i, j) == kZero; }
    int power(int i, int j) const {
        int p = at(i, j);
        if (p == kZero) throw std::logic_error("CBMatrix: power() on zero circulant");
        return p;
    }
    /// Raw entry: kZero or a power.
    int entry(int i, int j) const { return at(i, j); }

    void set_power(int i, int j, int p) {
        if (p < 0 || p >= z_) throw std::invalid_argument("CBMatrix: power out of [0,z)");
        at(i, j) = p;
    }
    void set_zero(int i, int j) { at(i, j) = kZero; }

    bool operator==(const CBMatrix&) const = default;

  private:
    int& at(int i, int j) {
        check(i, j);
        return entries_[static_cast<size_t>(i) * kappa_ + j];
    }
    int at(int i, int j) const {
        check(i, j);
        return entries_[static_cast<size_t>(i) * kappa_ + j];
    }
    void check(int i, int j) const {
        if (i < 0 || i >= gamma_ || j < 0 || j >= kappa_)
            throw std::out_of_range("CBMatrix: index out of range");
    }

    int gamma_, kappa_, z_;
    std::vector<int> entries_;
};

/// AB-code powers f(i,j) = i*j mod z on a gamma-by-kappa grid.
CBMatrix make_ab_powers(int gamma, int kappa, int z);

/// Records which component each circulant joins: label in {0,..,m} or dummy.
class PartitioningMatrix {
  public:
    static constexpr int kDummy = -1;

    PartitioningMatrix(int gamma, int kappa, int memory)
        : gamma_(gamma), kappa_(kappa), m_(memory),
          labels_(static_cast<size_t>(gamma) * kappa, 0) {
        if (gamma < 1 || kappa < 1 || memory < 0)
            throw std::invalid_argument("PartitioningMatrix: bad dimensions");
    }

    int gamma() const { return gamma_; }
    int kappa() const { return kappa_; }
    int memory() const { return m_; }

    int label(int i, int j) const { return labels_[index(i, j)]; }
    bool is_dummy(int i, int j) const { return label(i, j) == kDummy; }

    void set_label(int i, int j, int lab) {
        if (lab != kDummy && (lab < 0 || lab > m_))
            throw std::invalid_argument("PartitioningMatrix: label outside {d,0..m}");
        labels_[index(i, j)] = lab;
    }
    void set_dummy(int i, int j) { labels_[index(i, j)] = kDummy; }

    int count_label(int lab) const {
        int n = 0;
        for (int v : labels_) n += (v == lab);
        return n;
    }

    bool operator==(const PartitioningMatrix&) const = default;

  private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= gamma_ || j < 0 || j >= kappa_)
            throw std::out_of_range("PartitioningMatrix: index out of range");
        return static_cast<size_t>(i) * kappa_ + j;
    }

    int gamma_, kappa_, m_;
    std::vector<int> labels_;
};

/// Binary matrix: a CB grid with circulants collapsed to scalars.
class Protograph {
  public:
    Protograph(int rows, int cols)
        : rows_(rows), cols_(cols), bits_(static_cast<size_t>(rows) * cols, 0) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("Protograph: bad dimensions");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool get(int i, int j) const { return bits_[index(i, j)] != 0; }
    void set(int i, int j, bool v) { bits_[index(i, j)] = v ? 1 : 0; }

    int row_weight(int i) const {
        int w = 0;
        for (int j = 0; j < cols_; ++j) w += get(i, j);
        return w;
    }
    int col_weight(int j) const {
        int w = 0;
        for (int i = 0; i < rows_; ++i) w += get(i, j);
        return w;
    }

    bool operator==(const Protograph&) const = default;

  private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("Protograph: index out of range");
        return static_cast<size_t>(i) * cols_ + j;
    }

    int rows_, cols_;
    std::vector<std::uint8_t> bits_;
};

/// Collapse circulants to scalars: bit (i,j) = 1 iff the circulant is non-zero.
Protograph protograph_of(const CBMatrix& grid);

/// X-pattern of a partitioning: bit (i,j) = 1 iff the circulant is discarded.
Protograph dummy_protograph(const PartitioningMatrix& pm);

}  // namespace scldpc
