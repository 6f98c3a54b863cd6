#ifndef AFFVCS_VERMA_HPP
#define AFFVCS_VERMA_HPP

#include <compare>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "affvcs/affine.hpp"
#include "affvcs/linalg.hpp"
#include "affvcs/scalar.hpp"
#include "affvcs/sl2.hpp"

namespace affvcs {

/// Negative-mode generators sorted ascending by pbw_less (repeats allowed).
using PbwMonomial = std::vector<Generator>;

/// Basis element u_1 ... u_r (x) w_j of W = U(u_-) (x) V0.
struct BasisKey {
    PbwMonomial word;
    int j = 0;

    auto operator<=>(const BasisKey&) const = default;
    bool operator==(const BasisKey&) const = default;
};

int depth_of(const PbwMonomial& word);
std::string to_string(const PbwMonomial& word);
/// e.g. "e[-2] e[-1]^2 (x) w_0".
std::string to_string(const BasisKey& key);
/// Parses a space-separated word such as "e[-1] f[-2]" into canonical order.
PbwMonomial parse_word(const std::string& text);
PbwMonomial canonical_word(PbwMonomial word);

struct WeightSpaceKey {
    int weight = 0;
    int depth = 0;

    auto operator<=>(const WeightSpaceKey&) const = default;
    bool operator==(const WeightSpaceKey&) const = default;
};

/// Sparse vector of the generalized Verma module, no zero coefficients.
class WVector {
public:
    using Terms = std::map<BasisKey, Scalar>;

    WVector() = default;
    explicit WVector(const BasisKey& key, const Scalar& coeff = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const BasisKey& key) const;
    void add_term(const BasisKey& key, const Scalar& c);
    /// Largest depth among the terms (0 for the zero vector).
    int max_depth() const;

    WVector& operator+=(const WVector& other);
    WVector& operator-=(const WVector& other);
    WVector& operator*=(const Scalar& s);
    friend WVector operator+(WVector a, const WVector& b) { return a += b; }
    friend WVector operator-(WVector a, const WVector& b) { return a -= b; }
    friend WVector operator*(const Scalar& s, WVector a) { return a *= s; }
    bool operator==(const WVector&) const = default;

private:
    Terms terms_;
};

std::string to_string(const WVector& w);

struct CharacterRow {
    WeightSpaceKey key;
    std::size_t dim_w = 0;
    std::size_t rank = 0;

    bool operator==(const CharacterRow&) const = default;
};

/// W = U (x)_{U(p)} V0 for V0 the lambda+1 dimensional sl(2) module on which
/// kappa acts by c and positive modes act by zero.
///
/// The left action is computed by commuting the generator rightward through
/// the PBW word with the affine brackets and is memoized per
/// (generator, basis element). The memo is guarded, so one instance may be
/// shared by concurrent workers.
class VermaModule {
public:
    VermaModule(int lambda, Scalar c);

    const Sl2Irrep& rep() const { return rep_; }
    int lambda() const { return rep_.lambda(); }
    const Scalar& c() const { return c_; }

    int weight_of(const BasisKey& key) const;
    WeightSpaceKey key_of(const BasisKey& key) const;

    /// Left action of a generator; d is rejected with std::domain_error.
    WVector act(const Generator& a, const WVector& w) const;
    WVector act_basis(const Generator& a, const BasisKey& key) const;

    std::vector<BasisKey> weight_basis(const WeightSpaceKey& key) const;
    /// Weight spaces of the given depth with nonempty basis, descending weight.
    std::vector<WeightSpaceKey> keys_at_depth(int depth) const;

    Scalar contravariant_form(const WVector& w1, const WVector& w2) const;
    Scalar form_basis(const BasisKey& b, const WVector& w) const;

    Matrix gram_matrix(const WeightSpaceKey& key) const;
    std::size_t gram_rank(const WeightSpaceKey& key) const;
    /// Basis of the Gram kernel in the weight space.
    std::vector<WVector> singular_vectors(const WeightSpaceKey& key) const;

    /// One row per weight space with depth <= max_depth. Weight spaces are
    /// independent, so up to `jobs` of them are evaluated concurrently.
    /// Throws std::length_error if a weight space exceeds `cap` basis vectors.
    std::vector<CharacterRow> character_table(int max_depth, unsigned jobs = 1,
                                              std::size_t cap = 2000) const;

private:
    WVector act_uncached(const Generator& a, const BasisKey& key) const;

    Sl2Irrep rep_;
    Scalar c_;
    mutable std::shared_mutex memo_mutex_;
    mutable std::map<std::pair<Generator, BasisKey>, WVector> memo_;
};

/// All PBW words of the given depth in canonical order.
std::vector<PbwMonomial> pbw_words(int depth);

}  // namespace affvcs

#endif
