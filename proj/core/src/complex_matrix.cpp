#include "arraykit/complex_matrix.hpp"

#include <cmath>

namespace arraykit {

ComplexMatrix hermitian_product(const ComplexMatrix& h) {
    const std::size_t nr = h.rows(), nt = h.cols();
    ComplexMatrix out(nr, nr);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nr; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t k = 0; k < nt; ++k)
                acc += h(i, k) * std::conj(h(j, k));
            out(i, j) = acc;
        }
    return out;
}

Complex determinant(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant requires a square matrix");
    const std::size_t n = m.rows();
    if (n > 16)
        throw std::invalid_argument("determinant supports dimension <= 16");

    ComplexMatrix a = m;
    Complex det{1.0, 0.0};
    for (std::size_t col = 0; col < n; ++col) {
        // partial pivot on magnitude
        std::size_t pivot = col;
        double best = std::abs(a(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(a(r, col));
            if (mag > best) { best = mag; pivot = r; }
        }
        if (best == 0.0) return Complex{0.0, 0.0};
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const Complex factor = a(r, col) / a(col, col);
            if (factor == Complex{0.0, 0.0}) continue;
            for (std::size_t j = col; j < n; ++j)
                a(r, j) -= factor * a(col, j);
        }
    }
    return det;
}

} // namespace arraykit
