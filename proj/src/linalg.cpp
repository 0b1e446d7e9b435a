#include "mldsurf/linalg.hpp"

#include <stdexcept>

namespace mldsurf {

Rat determinant(RatMatrix m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == Rat(0)) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == Rat(0)) continue;
            Rat f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::optional<RatVector> solve_linear(RatMatrix m, RatVector rhs) {
    const size_t n = m.size();
    if (rhs.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("solve_linear: matrix not square");
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == Rat(0)) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            std::swap(rhs[pivot], rhs[col]);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == Rat(0)) continue;
            Rat f = m[r][col] / m[col][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    RatVector x(n);
    for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

bool is_symmetric(const RatMatrix& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) return false;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

bool is_negative_definite(const RatMatrix& m) {
    if (!is_symmetric(m)) throw std::invalid_argument("is_negative_definite: matrix not symmetric");
    const size_t n = m.size();
    if (n == 0) return true;
    for (size_t k = 1; k <= n; ++k) {
        RatMatrix lead(k, RatVector(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
        Rat d = determinant(std::move(lead));
        // (-1)^k * minor_k must be strictly positive.
        if (k % 2 == 1 ? d >= Rat(0) : d <= Rat(0)) return false;
    }
    return true;
}

}  // namespace mldsurf
