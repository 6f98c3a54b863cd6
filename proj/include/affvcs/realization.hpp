#ifndef AFFVCS_REALIZATION_HPP
#define AFFVCS_REALIZATION_HPP

#include <array>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "affvcs/affine.hpp"
#include "affvcs/polynomial.hpp"
#include "affvcs/scalar.hpp"
#include "affvcs/sl2.hpp"

namespace affvcs {

/// Z_N evaluated at (scale*y_1, scale*y_2, ...), where Z_N(Y) is the t^N
/// coefficient of exp(sum_k t^k y_k). Built from N Z_N = sum_k k y_k Z_{N-k}
/// and memoized process-wide.
Polynomial z_poly(int n, const Scalar& scale = 1);

/// An element of P(X, Y, Z) (x) V0: one polynomial per basis vector w_j.
class VcsVector {
public:
    VcsVector() = default;
    explicit VcsVector(int dim) : components_(dim) {}
    /// p (x) w_j in a module of dimension dim.
    static VcsVector basis(int dim, int j, const Polynomial& p = Polynomial(1L));

    int dim() const { return static_cast<int>(components_.size()); }
    const Polynomial& operator[](int j) const { return components_[j]; }
    Polynomial& operator[](int j) { return components_[j]; }
    const std::vector<Polynomial>& components() const { return components_; }

    bool is_zero() const;
    /// True when all nonzero components share a single degree.
    bool is_homogeneous() const;
    /// Common degree of a homogeneous nonzero vector, -1 otherwise.
    int degree() const;
    int max_index() const;

    VcsVector& operator+=(const VcsVector& other);
    VcsVector& operator-=(const VcsVector& other);
    VcsVector& operator*=(const Scalar& s);
    friend VcsVector operator+(VcsVector a, const VcsVector& b) { return a += b; }
    friend VcsVector operator-(VcsVector a, const VcsVector& b) { return a -= b; }
    friend VcsVector operator*(const Scalar& s, VcsVector a) { return a *= s; }
    bool operator==(const VcsVector&) const = default;

private:
    std::vector<Polynomial> components_;
};

std::string to_string(const VcsVector& v);

/// Coefficient of a single differential order: sum over endo of
/// parts[endo] (x) pi0(endo), with pi0(I) the identity.
struct EndoPoly {
    std::array<Polynomial, 4> parts;

    Polynomial& operator[](Endo e) { return parts[static_cast<int>(e)]; }
    const Polynomial& operator[](Endo e) const { return parts[static_cast<int>(e)]; }
    bool is_zero() const;
    EndoPoly& operator+=(const EndoPoly& other);
    EndoPoly& operator-=(const EndoPoly& other);
    /// Left multiplication by a polynomial.
    friend EndoPoly operator*(const Polynomial& p, const EndoPoly& e);
    bool operator==(const EndoPoly&) const = default;
};

/// coeff * pi0(endo) * d/d(derivative) (no derivative for order zero).
struct OperatorTerm {
    Polynomial coeff;
    std::optional<VarRef> derivative;
    Endo endo = Endo::I;
};

std::string to_string(const OperatorTerm& t);

class Realizer;

/// Which form of the h[-k] (k > 0) operator to build. The printed form carries
/// an extra factor x_k on its last term, 2 x_k sum_p z_p xi(f[p-k]), which
/// breaks degree homogeneity and the bracket relations. Corrected drops it.
enum class Transcription { Corrected, Printed };

struct RealizerOptions {
    Transcription transcription = Transcription::Corrected;
    /// Build e[-1] from the general negative-mode formula instead of its
    /// explicit form. Both must agree; this exists to test that.
    bool general_block_for_e_minus_one = false;
};

/// Handle on xi(a). Every realized operator is first order: a zeroth-order
/// part plus, for each variable v, the coefficient of d/dv. The coefficient
/// for v is computed on demand, so applying the operator to a monomial only
/// touches the finitely many variables that occur in it.
class RealizedOperator {
public:
    RealizedOperator(const Realizer& owner, Generator g) : owner_(&owner), gen_(g) {}

    const Generator& generator() const { return gen_; }
    /// Polynomial degree change: -n for a[n], 0 for kappa and d.
    int degree_shift() const;
    const EndoPoly& zeroth() const;
    const EndoPoly& coefficient(VarRef v) const;
    VcsVector apply(const VcsVector& v) const;
    /// All terms whose derivative variable has index <= max_index.
    std::vector<OperatorTerm> terms(int max_index) const;

private:
    const Realizer* owner_;
    Generator gen_;
};

/// Builds xi(a) for every generator of affine sl(2) acting on P(X,Y,Z) (x) V0
/// with V0 of highest weight lambda, central charge c and grading constant d0.
///
/// Negative modes are defined through operators of larger mode:
/// f[-k] through f[0] and the D_t, h[-k] through f[p-k] (p = 1..k), e[-k]
/// through h and f modes above -k. All memo tables are guarded and hold
/// immutable values, so a Realizer can be shared between threads.
class Realizer {
public:
    using Options = RealizerOptions;

    Realizer(int lambda, Scalar c, Scalar d0 = 0, Options opts = {});

    const Sl2Irrep& rep() const { return rep_; }
    int dim() const { return rep_.dim(); }
    const Scalar& c() const { return c_; }
    const Scalar& d0() const { return d0_; }

    RealizedOperator realize(const Generator& a) const { return {*this, a}; }

    const EndoPoly& zeroth(const Generator& a) const;
    const EndoPoly& coefficient(const Generator& a, VarRef v) const;

    /// xi(a) applied to p (x) w_j for a single monomial p; memoized.
    const VcsVector& apply_monomial(const Generator& a, const Monomial& m, int j) const;
    VcsVector apply(const Generator& a, const VcsVector& v) const;
    /// Applies the linear combination of operators xi(bracket terms).
    VcsVector apply(const BracketResult& r, const VcsVector& v) const;

private:
    EndoPoly compute_zeroth(const Generator& a) const;
    EndoPoly compute_coefficient(const Generator& a, VarRef v) const;
    const EndoPoly& script_d_zeroth(int k) const;
    const EndoPoly& script_d_coefficient(int k, VarRef v) const;
    /// Factor in front of sum_p z_p xi(f[p-k]) in xi(h[-k]).
    Polynomial h_minus_lead(int k) const;
    EndoPoly general_e_negative_zeroth(int k) const;
    EndoPoly general_e_negative_coefficient(int k, VarRef v) const;

    Sl2Irrep rep_;
    Scalar c_;
    Scalar d0_;
    Options opts_;

    mutable std::shared_mutex mutex_;
    mutable std::map<Generator, EndoPoly> zeroth_memo_;
    mutable std::map<std::pair<Generator, VarRef>, EndoPoly> coeff_memo_;
    mutable std::map<int, EndoPoly> script_d_zeroth_memo_;
    mutable std::map<std::pair<int, VarRef>, EndoPoly> script_d_coeff_memo_;
    mutable std::map<std::tuple<Generator, Monomial, int>, VcsVector> apply_memo_;
};

/// All monomials of degree <= max_degree in x_k, y_k, z_k, in graded order.
std::vector<Monomial> monomials_up_to(int max_degree);

struct CommutatorFailure {
    Monomial monomial;
    int j = 0;
    VcsVector lhs;
    VcsVector rhs;
};

struct CommutatorReport {
    Generator a;
    Generator b;
    BracketResult expected;
    std::size_t checked = 0;
    std::vector<CommutatorFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// Checks [xi(a), xi(b)] = xi([a, b]) on every monomial (x) w_j with monomial
/// degree <= max_degree. The operators are exact at any degree, so no
/// truncation of intermediate results is involved.
CommutatorReport commutator_check(const Realizer& r, const Generator& a, const Generator& b, int max_degree);

}  // namespace affvcs

#endif
