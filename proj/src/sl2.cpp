#include "affvcs/sl2.hpp"

#include <stdexcept>

namespace affvcs {

Sl2Irrep::Sl2Irrep(int lambda) : lambda_(lambda) {
    if (lambda < 0) throw std::invalid_argument("highest weight lambda must be >= 0");
    const int n = dim();
    auto zero = [n] { return ScalarMatrix(n, std::vector<Scalar>(n, Scalar(0))); };
    e_ = zero();
    h_ = zero();
    f_ = zero();
    id_ = zero();
    gram_.assign(n, Scalar(1));
    for (int j = 0; j < n; ++j) {
        id_[j][j] = 1;
        h_[j][j] = weight(j);
        if (j + 1 < n) f_[j + 1][j] = 1;
        if (j > 0) {
            // e f^j v+ = j(lambda - j + 1) f^{j-1} v+
            e_[j - 1][j] = j * (lambda - j + 1);
            gram_[j] = gram_[j - 1] * Scalar(j * (lambda - j + 1));
        }
    }
}

std::vector<std::pair<int, Scalar>> Sl2Irrep::apply_basis(Endo endo, int j) const {
    switch (endo) {
        case Endo::I: return {{j, Scalar(1)}};
        case Endo::H:
            if (weight(j) == 0) return {};
            return {{j, Scalar(weight(j))}};
        case Endo::F:
            if (j + 1 < dim()) return {{j + 1, Scalar(1)}};
            return {};
        case Endo::E:
            if (j > 0) return {{j - 1, Scalar(j * (lambda_ - j + 1))}};
            return {};
    }
    return {};
}

const ScalarMatrix& Sl2Irrep::matrix(Endo endo) const {
    switch (endo) {
        case Endo::E: return e_;
        case Endo::H: return h_;
        case Endo::F: return f_;
        case Endo::I: break;
    }
    return id_;
}

Sl2Irrep build_irrep(int lambda) { return Sl2Irrep(lambda); }

V0Vector act_pi0(const Sl2Irrep& rep, Endo gen, const V0Vector& v) {
    if (static_cast<int>(v.size()) != rep.dim()) throw std::invalid_argument("V0 vector has wrong length");
    V0Vector out(rep.dim(), Scalar(0));
    for (int j = 0; j < rep.dim(); ++j) {
        if (is_zero(v[j])) continue;
        for (const auto& [k, c] : rep.apply_basis(gen, j)) out[k] += c * v[j];
    }
    return out;
}

Scalar v0_inner(const Sl2Irrep& rep, const V0Vector& u, const V0Vector& v) {
    if (static_cast<int>(u.size()) != rep.dim() || static_cast<int>(v.size()) != rep.dim())
        throw std::invalid_argument("V0 vector has wrong length");
    Scalar s = 0;
    for (int j = 0; j < rep.dim(); ++j) s += u[j] * v[j] * rep.gram_diag()[j];
    return s;
}

V0Vector basis_vector(const Sl2Irrep& rep, int j) {
    if (j < 0 || j >= rep.dim()) throw std::out_of_range("V0 basis index out of range");
    V0Vector v(rep.dim(), Scalar(0));
    v[j] = 1;
    return v;
}

}  // namespace affvcs
