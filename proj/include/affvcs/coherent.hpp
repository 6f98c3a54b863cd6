#ifndef AFFVCS_COHERENT_HPP
#define AFFVCS_COHERENT_HPP

#include <cstddef>
#include <vector>

#include "affvcs/realization.hpp"
#include "affvcs/verma.hpp"

namespace affvcs {

/// w -> xi_w = sum_j <w_j^dual | g(X,Y,Z) w> w_j with
/// g = exp(E(X)) exp(H(Y)) exp(F(Z)).
///
/// g w is expanded inside W: exp(F) acts first, then exp(H), then exp(E).
/// A depth-k vector is killed by any product of more than k positive-mode
/// generators, so each exponential is cut at order k without loss. The
/// result is the depth-0 part of g w in the w_j basis (the dual-basis pairing
/// with the orthogonal basis w_j).
VcsVector coherent_state_map(const VermaModule& module, const WVector& w);

/// xi(u) xi_w == xi_{u w}, exactly.
bool intertwine_check(const Realizer& r, const VermaModule& module, const Generator& u, const WVector& w);

/// True iff xi_w vanishes, i.e. w lies in the maximal submodule.
bool kernel_check(const VermaModule& module, const WVector& w);

/// Linearly independent subset of {xi(u_1) ... xi(u_r) (1 (x) w_j)} over the
/// PBW basis of the weight space, obtained by exact elimination on the
/// polynomial coordinates.
std::vector<VcsVector> image_basis(const Realizer& r, const VermaModule& module, const WeightSpaceKey& key);

/// Exact rank of a family of VcsVectors over their polynomial coordinates.
std::size_t span_rank(const std::vector<VcsVector>& vectors);

/// Dimension of span{xi_w : w in weight_basis(key)}.
std::size_t coherent_image_rank(const VermaModule& module, const WeightSpaceKey& key);

}  // namespace affvcs

#endif
