#ifndef AFFVCS_LINALG_HPP
#define AFFVCS_LINALG_HPP

#include <cstddef>
#include <vector>

#include "affvcs/scalar.hpp"

namespace affvcs {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_symmetric() const;
    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Rank by fraction-free (Bareiss) elimination. Each row is first scaled to
/// integers, so the elimination runs entirely over Z.
std::size_t bareiss_rank(const Matrix& m);

/// Basis of {v : m v = 0} from the reduced row echelon form.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Outcome of symmetric elimination on a Gram block.
struct PsdCertificate {
    bool positive_semidefinite = false;
    /// Pivots used, all strictly positive when positive_semidefinite holds.
    std::vector<Scalar> pivots;
    /// Dimension of the block left after the last pivot (all zeros when PSD).
    std::size_t kernel_dim = 0;
};

/// Exact LDL^T-style check: repeatedly eliminates on a positive diagonal
/// entry. A negative diagonal entry, or a zero diagonal with a nonzero entry
/// in its row, certifies indefiniteness.
PsdCertificate certify_psd(const Matrix& symmetric);

/// Incremental row-echelon basis used to extract a linearly independent
/// subset from a stream of coordinate vectors.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    /// Returns true and keeps the vector if it is independent of those kept.
    bool insert(std::vector<Scalar> v);
    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t dim_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivot_cols_;
};

}  // namespace affvcs

#endif
