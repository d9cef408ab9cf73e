#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace eqob {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix scalar(std::size_t n, const BigInt& value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    BigInt* row_data(std::size_t i) { return data_.data() + i * cols_; }
    const BigInt* row_data(std::size_t i) const { return data_.data() + i * cols_; }

    IntMatrix transpose() const;
    bool is_zero() const;

    /// Rows [r0, r0+nr) x columns [c0, c0+nc).
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
    void add_block(std::size_t r0, std::size_t c0, const IntMatrix& b, long factor = 1);

    std::vector<BigInt> column(std::size_t j) const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(long s, const IntMatrix& a);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// [a | b], requires equal row counts.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
/// [a ; b], requires equal column counts.
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
/// Block-diagonal sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Sparse integer matrix with small (machine word) entries, stored by rows.
/// Used for boundary and coboundary matrices, which are large and have few
/// nonzeros per row.
class SparseMatrix {
public:
    struct Entry {
        std::uint32_t col;
        std::int64_t value;
    };

    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Accumulates value into (i, j); entries summing to zero are dropped on
    /// finalize().
    void add(std::size_t i, std::size_t j, std::int64_t value);
    /// Sorts each row by column and merges duplicates.
    void finalize();

    const std::vector<Entry>& row(std::size_t i) const { return rows_data_[i]; }
    std::size_t nonzeros() const;

    IntMatrix to_dense() const;
    static SparseMatrix from_dense(const IntMatrix& m);
    SparseMatrix transpose() const;

    /// this * other, both sparse.
    SparseMatrix multiply(const SparseMatrix& other) const;
    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::vector<Entry>> rows_data_;
};

}  // namespace eqob
