#include "affvcs/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace affvcs {

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::size_t bareiss_rank(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }

    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);

    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = r;
        while (piv < rows && is_zero(a[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        Scalar inv = 1 / a[r][col];
        for (std::size_t j = col; j < cols; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(a[i][col])) continue;
            Scalar factor = a[i][col];
            for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[r][j];
        }
        pivot_col_of_row.push_back(col);
        is_pivot[col] = true;
        ++r;
    }

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) v[pivot_col_of_row[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

PsdCertificate certify_psd(const Matrix& symmetric) {
    if (!symmetric.is_symmetric()) throw std::invalid_argument("certify_psd needs a symmetric matrix");
    const std::size_t n = symmetric.rows();
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = symmetric(i, j);

    PsdCertificate cert;
    std::vector<bool> alive(n, true);
    std::size_t remaining = n;
    while (remaining > 0) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            if (sgn(a[i][i]) < 0) return cert;
            if (piv == n && sgn(a[i][i]) > 0) piv = i;
        }
        if (piv == n) {
            // Zero diagonal on what is left: PSD only if the block vanishes.
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (alive[i] && alive[j] && !is_zero(a[i][j])) return cert;
            cert.kernel_dim = remaining;
            break;
        }
        const Scalar p = a[piv][piv];
        cert.pivots.push_back(p);
        alive[piv] = false;
        --remaining;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i] || is_zero(a[i][piv])) continue;
            Scalar factor = a[i][piv] / p;
            for (std::size_t j = 0; j < n; ++j)
                if (alive[j]) a[i][j] -= factor * a[piv][j];
        }
    }
    cert.positive_semidefinite = true;
    return cert;
}

bool EchelonBasis::insert(std::vector<Scalar> v) {
    if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: wrong vector length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t pc = pivot_cols_[r];
        if (is_zero(v[pc])) continue;
        Scalar factor = v[pc];
        for (std::size_t j = pc; j < dim_; ++j) v[j] -= factor * rows_[r][j];
    }
    std::size_t pc = 0;
    while (pc < dim_ && is_zero(v[pc])) ++pc;
    if (pc == dim_) return false;
    Scalar inv = 1 / v[pc];
    for (std::size_t j = pc; j < dim_; ++j) v[j] *= inv;
    rows_.push_back(std::move(v));
    pivot_cols_.push_back(pc);
    return true;
}

}  // namespace affvcs
