#ifndef AFFVCS_POLYNOMIAL_HPP
#define AFFVCS_POLYNOMIAL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affvcs/scalar.hpp"

namespace affvcs {

enum class Family : std::uint8_t { X = 0, Y = 1, Z = 2 };

char family_letter(Family f);

/// One of the indeterminates x_k, y_k, z_k (k >= 1).
struct VarRef {
    Family family = Family::X;
    int index = 1;

    VarRef() = default;
    VarRef(Family f, int k);

    auto operator<=>(const VarRef&) const = default;
    bool operator==(const VarRef&) const = default;
};

inline VarRef xvar(int k) { return {Family::X, k}; }
inline VarRef yvar(int k) { return {Family::Y, k}; }
inline VarRef zvar(int k) { return {Family::Z, k}; }

std::string to_string(const VarRef& v);

/// Sparse exponent vector. Factors are kept sorted by VarRef with strictly
/// positive exponents; deg(x_p) = deg(y_p) = deg(z_p) = p.
class Monomial {
public:
    using Factor = std::pair<VarRef, int>;

    Monomial() = default;
    explicit Monomial(VarRef v, int exponent = 1);
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    int degree() const { return degree_; }
    bool is_one() const { return factors_.empty(); }
    int exponent(VarRef v) const;
    /// Sum of exponents over the given family.
    int family_count(Family f) const;
    /// Largest variable index present, 0 for the unit monomial.
    int max_index() const;

    Monomial operator*(const Monomial& other) const;
    /// Divides out one power of v. Precondition: exponent(v) > 0.
    Monomial without_one(VarRef v) const;

    /// Graded lexicographic: degree first, then the sorted factor list.
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

private:
    std::vector<Factor> factors_;
    int degree_ = 0;
};

std::string to_string(const Monomial& m);

/// Sparse polynomial in x_k, y_k, z_k with exact rational coefficients.
/// Zero coefficients are never stored, so equality of maps is equality of
/// polynomials.
class Polynomial {
public:
    using Terms = std::map<Monomial, Scalar>;

    Polynomial() = default;
    Polynomial(const Scalar& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant) : Polynomial(Scalar(constant)) {}  // NOLINT
    explicit Polynomial(const Monomial& m, const Scalar& coeff = 1);
    static Polynomial variable(VarRef v) { return Polynomial(Monomial(v)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const Monomial& m) const;

    /// Adds c·m in place, dropping the entry if it cancels.
    void add_term(const Monomial& m, const Scalar& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Scalar& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
    friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
    Polynomial operator-() const;
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial& other) const = default;

    /// Min and max monomial degree; (0, -1) for the zero polynomial.
    std::pair<int, int> degree_range() const;
    bool is_homogeneous() const;
    int max_index() const;

    /// Replaces y_k by s·y_k everywhere.
    Polynomial scale_family(Family f, const Scalar& s) const;

private:
    Terms terms_;
};

int degree_of(const Monomial& m);
Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial partial(VarRef v, const Polynomial& p);
/// Drops every monomial of degree > max_degree.
Polynomial truncate(const Polynomial& p, int max_degree);

/// Renders as e.g. "3/2*x_1^2*y_3 - z_2 + 1"; the zero polynomial is "0".
std::string to_string(const Polynomial& p);
/// Inverse of to_string. Throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(std::string_view text);

}  // namespace affvcs

#endif
