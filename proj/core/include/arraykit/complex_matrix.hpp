#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace arraykit {

using Complex = std::complex<double>;

/// Small dense complex matrix (row-major). Sized for port/element counts,
/// dimension capped at 16 on the operations that care.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("matrix dimensions must be positive");
    }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{1.0, 0.0};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexMatrix hermitian_transpose() const {
        ComplexMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const {
        if (cols_ != rhs.rows_)
            throw std::invalid_argument("matrix product shape mismatch");
        ComplexMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Complex a = (*this)(i, k);
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    ComplexMatrix operator+(const ComplexMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("matrix sum shape mismatch");
        ComplexMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
        return out;
    }

    ComplexMatrix scaled(Complex s) const {
        ComplexMatrix out = *this;
        for (auto& v : out.data_) v *= s;
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Complex> data_;
};

/// H * H^H, an Nr x Nr Hermitian positive-semidefinite matrix.
ComplexMatrix hermitian_product(const ComplexMatrix& h);

/// Determinant by partial-pivot elimination. Square input, dimension <= 16.
Complex determinant(const ComplexMatrix& m);

} // namespace arraykit
