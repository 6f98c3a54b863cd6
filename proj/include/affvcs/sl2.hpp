#ifndef AFFVCS_SL2_HPP
#define AFFVCS_SL2_HPP

#include <utility>
#include <vector>

#include "affvcs/scalar.hpp"

namespace affvcs {

/// Which sl(2) action matrix (or the identity) to apply on V0.
enum class Endo : unsigned char { I = 0, E = 1, H = 2, F = 3 };

using V0Vector = std::vector<Scalar>;
using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// The irreducible sl(2) module of highest weight lambda, in the basis
/// w_j = f^j v+ (j = 0..lambda). The basis is orthogonal for the
/// contravariant form but not normalized.
class Sl2Irrep {
public:
    explicit Sl2Irrep(int lambda);

    int lambda() const { return lambda_; }
    int dim() const { return lambda_ + 1; }

    /// h-weight of w_j.
    int weight(int j) const { return lambda_ - 2 * j; }

    /// Nonzero image of w_j under the given endomorphism as (index, coeff);
    /// every pi0 matrix has at most one nonzero entry per column.
    std::vector<std::pair<int, Scalar>> apply_basis(Endo endo, int j) const;

    const ScalarMatrix& pi0_e() const { return e_; }
    const ScalarMatrix& pi0_h() const { return h_; }
    const ScalarMatrix& pi0_f() const { return f_; }
    const ScalarMatrix& matrix(Endo endo) const;

    /// <w_j, w_j>; gram_diag()[0] = 1.
    const std::vector<Scalar>& gram_diag() const { return gram_; }

private:
    int lambda_;
    ScalarMatrix e_, h_, f_, id_;
    std::vector<Scalar> gram_;
};

Sl2Irrep build_irrep(int lambda);

/// Matrix-vector product with the action matrix of e, h or f.
V0Vector act_pi0(const Sl2Irrep& rep, Endo gen, const V0Vector& v);

/// Contravariant form on V0 (bilinear; the basis is orthogonal).
Scalar v0_inner(const Sl2Irrep& rep, const V0Vector& u, const V0Vector& v);

V0Vector basis_vector(const Sl2Irrep& rep, int j);

}  // namespace affvcs

#endif
