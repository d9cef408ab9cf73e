#include "eqob/matrix.hpp"

#include "eqob/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace eqob {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidArgument("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) { return scalar(n, 1); }

IntMatrix IntMatrix::scalar(std::size_t n, const BigInt& value) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return sgn(v) == 0; });
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void IntMatrix::add_block(std::size_t r0, std::size_t c0, const IntMatrix& b, long factor) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) += factor * b(i, j);
}

std::vector<BigInt> IntMatrix::column(std::size_t j) const {
    std::vector<BigInt> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap_ranges(row_data(i), row_data(i) + cols_, row_data(j));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) mpz_swap((*this)(r, i).get_mpz_t(), (*this)(r, j).get_mpz_t());
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidArgument("IntMatrix: dimension mismatch in product");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("IntMatrix: dimension mismatch in sum");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidArgument("IntMatrix: dimension mismatch in difference");
    IntMatrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] -= b.data_[k];
    return c;
}

IntMatrix operator*(long s, const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& v : c.data_) v *= s;
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    return os << ']';
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw InvalidArgument("hstack: row count mismatch");
    IntMatrix c(a.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(0, a.cols(), b);
    return c;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw InvalidArgument("vstack: column count mismatch");
    IntMatrix c(a.rows() + b.rows(), a.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), 0, b);
    return c;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.rows() + b.rows(), a.cols() + b.cols());
    c.set_block(0, 0, a);
    c.set_block(a.rows(), a.cols(), b);
    return c;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), rows_data_(rows) {}

void SparseMatrix::add(std::size_t i, std::size_t j, std::int64_t value) {
    if (value == 0) return;
    rows_data_[i].push_back({static_cast<std::uint32_t>(j), value});
}

void SparseMatrix::finalize() {
    for (auto& r : rows_data_) {
        std::sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
        std::vector<Entry> merged;
        merged.reserve(r.size());
        for (const auto& e : r) {
            if (!merged.empty() && merged.back().col == e.col)
                merged.back().value += e.value;
            else
                merged.push_back(e);
        }
        std::erase_if(merged, [](const Entry& e) { return e.value == 0; });
        r = std::move(merged);
    }
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_data_) n += r.size();
    return n;
}

IntMatrix SparseMatrix::to_dense() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& e : rows_data_[i]) m(i, e.col) = static_cast<long>(e.value);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m) {
    SparseMatrix s(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(m(i, j)) == 0) continue;
            if (!m(i, j).fits_slong_p()) throw InvalidArgument("SparseMatrix: entry exceeds machine word");
            s.add(i, j, m(i, j).get_si());
        }
    s.finalize();
    return s;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& e : rows_data_[i]) t.rows_data_[e.col].push_back({static_cast<std::uint32_t>(i), e.value});
    return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
    if (cols_ != other.rows_) throw InvalidArgument("SparseMatrix: dimension mismatch in product");
    SparseMatrix c(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& e : rows_data_[i])
            for (const auto& f : other.rows_data_[e.col]) c.add(i, f.col, e.value * f.value);
    c.finalize();
    return c;
}

bool SparseMatrix::is_zero() const {
    return std::all_of(rows_data_.begin(), rows_data_.end(), [](const auto& r) { return r.empty(); });
}

}  // namespace eqob
