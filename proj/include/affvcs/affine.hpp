#ifndef AFFVCS_AFFINE_HPP
#define AFFVCS_AFFINE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affvcs/scalar.hpp"

namespace affvcs {

enum class GenFamily : std::uint8_t { E = 0, H = 1, F = 2, Kappa = 3, D = 4 };

/// A basis element of affine sl(2) extended by the grading operator:
/// e[n], h[n], f[n] (n in Z), the central element kappa, and d.
struct Generator {
    GenFamily family = GenFamily::E;
    int mode = 0;

    auto operator<=>(const Generator&) const = default;
    bool operator==(const Generator&) const = default;

    bool is_loop() const { return family == GenFamily::E || family == GenFamily::H || family == GenFamily::F; }
    /// h[0]-eigenvalue of ad: +2 for e, 0 for h, -2 for f, 0 otherwise.
    int weight() const;
};

Generator make_generator(GenFamily family, int mode = 0);
inline Generator e_(int n) { return {GenFamily::E, n}; }
inline Generator h_(int n) { return {GenFamily::H, n}; }
inline Generator f_(int n) { return {GenFamily::F, n}; }
inline Generator kappa() { return {GenFamily::Kappa, 0}; }
inline Generator grading() { return {GenFamily::D, 0}; }

/// "e[-2]", "h[0]", "kappa", "d".
std::string to_string(const Generator& g);
/// Parses the to_string syntax; throws std::invalid_argument.
Generator parse_generator(std::string_view text);

/// A linear combination of generators. A bracket of two basis elements has at
/// most two terms: one loop generator and a multiple of kappa.
struct BracketResult {
    std::vector<std::pair<Scalar, Generator>> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const BracketResult&) const = default;
};

std::string to_string(const BracketResult& r);

/// Structure constants of affine sl(2) with [d, a[n]] = n a[n].
BracketResult bracket(const Generator& a, const Generator& b);

/// The anti-linear involution e[n] -> f[-n], f[n] -> e[-n], h[n] -> h[-n],
/// kappa -> kappa. Throws std::domain_error for d.
Generator dagger(const Generator& a);

/// Total order on negative-mode generators: mode ascending, then e < h < f.
/// Throws std::invalid_argument if either argument is not a negative-mode loop
/// generator.
bool pbw_less(const Generator& a, const Generator& b);

}  // namespace affvcs

#endif
