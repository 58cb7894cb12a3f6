#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pushtasep/poly.hpp"
#include "pushtasep/rational.hpp"

namespace pushtasep {

using RationalVector = std::vector<Rational>;

// Sparse matrix over Rational or PolyZ. Stored entries are nonzero;
// dimensions are fixed at construction. Row-major key order makes
// iteration (and every serialization) deterministic.
template <typename T>
class SparseMatrix {
public:
    using Key = std::pair<std::size_t, std::size_t>;
    using Map = std::map<Key, T>;

    SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static SparseMatrix identity(std::size_t n) {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_.emplace(Key{i, i}, T(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t nnz() const { return data_.size(); }
    const Map& entries() const { return data_; }

    T get(std::size_t i, std::size_t j) const {
        auto it = data_.find(Key{i, j});
        return it == data_.end() ? T(0) : it->second;
    }

    void set(std::size_t i, std::size_t j, const T& v) {
        check_index(i, j);
        if (pushtasep::is_zero(v))
            data_.erase(Key{i, j});
        else
            data_[Key{i, j}] = v;
    }

    void add_at(std::size_t i, std::size_t j, const T& v) {
        check_index(i, j);
        if (pushtasep::is_zero(v)) return;
        auto [it, inserted] = data_.emplace(Key{i, j}, v);
        if (!inserted) {
            it->second += v;
            if (pushtasep::is_zero(it->second)) data_.erase(it);
        }
    }

    bool is_zero() const { return data_.empty(); }

    SparseMatrix operator-() const {
        SparseMatrix r(rows_, cols_);
        for (const auto& [k, v] : data_) r.data_.emplace(k, -v);
        return r;
    }

    SparseMatrix& operator+=(const SparseMatrix& o) {
        require_same_shape(o);
        for (const auto& [k, v] : o.data_) add_at(k.first, k.second, v);
        return *this;
    }
    SparseMatrix& operator-=(const SparseMatrix& o) {
        require_same_shape(o);
        for (const auto& [k, v] : o.data_) add_at(k.first, k.second, -v);
        return *this;
    }
    friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
    friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

    friend SparseMatrix operator*(const T& s, const SparseMatrix& m) {
        SparseMatrix r(m.rows_, m.cols_);
        if (pushtasep::is_zero(s)) return r;
        for (const auto& [k, v] : m.data_) r.add_at(k.first, k.second, s * v);
        return r;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

    T column_sum(std::size_t j) const {
        T acc(0);
        for (const auto& [k, v] : data_)
            if (k.second == j) acc += v;
        return acc;
    }

    // Rows of B reachable from a column index, via the row-major map order.
    std::vector<std::pair<std::size_t, T>> row(std::size_t i) const {
        std::vector<std::pair<std::size_t, T>> out;
        for (auto it = data_.lower_bound(Key{i, 0}); it != data_.end() && it->first.first == i; ++it)
            out.emplace_back(it->first.second, it->second);
        return out;
    }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("SparseMatrix: index out of range");
    }
    void require_same_shape(const SparseMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("SparseMatrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    Map data_;
};

template <typename T>
SparseMatrix<T> mat_mul(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
    SparseMatrix<T> r(a.rows(), b.cols());
    for (const auto& [k, va] : a.entries())
        for (const auto& [j, vb] : b.row(k.second)) r.add_at(k.first, j, va * vb);
    return r;
}

inline SparseMatrix<PolyZ> promote(const SparseMatrix<Rational>& m) {
    SparseMatrix<PolyZ> r(m.rows(), m.cols());
    for (const auto& [k, v] : m.entries()) r.set(k.first, k.second, PolyZ(v));
    return r;
}

inline SparseMatrix<PolyZ> mat_mul(const SparseMatrix<Rational>& a, const SparseMatrix<PolyZ>& b) {
    return mat_mul(promote(a), b);
}
inline SparseMatrix<PolyZ> mat_mul(const SparseMatrix<PolyZ>& a, const SparseMatrix<Rational>& b) {
    return mat_mul(a, promote(b));
}

template <typename T>
SparseMatrix<T> commutator(const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("commutator: need square matrices of equal dimension");
    return mat_mul(a, b) - mat_mul(b, a);
}

template <typename T>
std::vector<T> mat_apply(const SparseMatrix<T>& m, const std::vector<T>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<T> out(m.rows(), T(0));
    for (const auto& [k, val] : m.entries()) out[k.first] += val * v[k.second];
    return out;
}

inline SparseMatrix<Rational> eval_at(const SparseMatrix<PolyZ>& m, const Rational& z0) {
    SparseMatrix<Rational> r(m.rows(), m.cols());
    for (const auto& [k, p] : m.entries()) r.set(k.first, k.second, p.eval(z0));
    return r;
}

inline SparseMatrix<Rational> coeff_matrix(const SparseMatrix<PolyZ>& m, std::size_t d) {
    SparseMatrix<Rational> r(m.rows(), m.cols());
    for (const auto& [k, p] : m.entries()) r.set(k.first, k.second, p.coeff(d));
    return r;
}

// Right null space basis via fraction-free (Bareiss) elimination.
// Basis vectors are scaled so the first nonzero coordinate is 1.
std::vector<RationalVector> kernel_basis(const SparseMatrix<Rational>& a);

// Elimination rank, from the same pivot structure kernel_basis uses.
std::size_t matrix_rank(const SparseMatrix<Rational>& a);

}  // namespace pushtasep
