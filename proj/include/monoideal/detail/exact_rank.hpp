#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace monoideal::detail {

template <class Scalar>
class DenseMatrix {
public:
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    template <class Other>
    explicit DenseMatrix(const DenseMatrix<Other>& other) : DenseMatrix(other.rows(), other.cols()) {
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = Scalar(other(r, c));
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

/// int64 that throws Overflow instead of wrapping.
class Checked64 {
public:
    struct Overflow {};

    Checked64(std::int64_t v = 0) : v_(v) {}  // NOLINT(google-explicit-constructor)
    std::int64_t value() const noexcept { return v_; }

    friend Checked64 operator*(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow{};
        return r;
    }
    friend Checked64 operator-(Checked64 a, Checked64 b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow{};
        return r;
    }
    friend Checked64 operator/(Checked64 a, Checked64 b) { return a.v_ / b.v_; }
    friend bool operator==(Checked64 a, Checked64 b) { return a.v_ == b.v_; }
    friend bool operator!=(Checked64 a, Checked64 b) { return a.v_ != b.v_; }
    bool is_unit() const noexcept { return v_ == 1 || v_ == -1; }

private:
    std::int64_t v_;
};

inline bool is_unit(const Checked64& x) { return x.is_unit(); }
inline bool is_unit(const boost::multiprecision::cpp_int& x) { return x == 1 || x == -1; }

/// Rank of an integer matrix by fraction-free (Bareiss) elimination to row
/// echelon form. Every stored entry is a minor of the input, so the
/// division by the previous pivot is exact.
template <class Scalar>
std::size_t fraction_free_rank(DenseMatrix<Scalar> m) {
    const Scalar zero(0);
    Scalar prev(1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t pivot = m.rows();
        for (std::size_t r = rank; r < m.rows(); ++r) {
            if (m(r, c) != zero) {
                if (pivot == m.rows()) pivot = r;
                if (is_unit(m(r, c))) {
                    pivot = r;
                    break;
                }
            }
        }
        if (pivot == m.rows()) continue;
        m.swap_rows(pivot, rank);
        const Scalar p = m(rank, c);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const Scalar lead = m(r, c);
            for (std::size_t j = c + 1; j < m.cols(); ++j) m(r, j) = (p * m(r, j) - lead * m(rank, j)) / prev;
            m(r, c) = zero;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

/// Exact rank over the rationals: int64 arithmetic, redone with big
/// integers if an intermediate overflows.
inline std::size_t rank_over_rationals(const DenseMatrix<std::int64_t>& m) {
    try {
        return fraction_free_rank(DenseMatrix<Checked64>(m));
    } catch (const Checked64::Overflow&) {
        return fraction_free_rank(DenseMatrix<boost::multiprecision::cpp_int>(m));
    }
}

inline std::size_t rank_over_gf2(const DenseMatrix<std::int64_t>& m) {
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(m.rows(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) % 2 != 0) rows[r][c / 64] |= std::uint64_t{1} << (c % 64);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows.size(); ++c) {
        const auto bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < rows.size() && (rows[pivot][c / 64] & bit) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if ((rows[r][c / 64] & bit) == 0) continue;
            for (std::size_t w = 0; w < words; ++w) rows[r][w] ^= rows[rank][w];
        }
        ++rank;
    }
    return rank;
}

}  // namespace monoideal::detail
