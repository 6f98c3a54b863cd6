#ifndef AFFVCS_TESTS_SUPPORT_HPP
#define AFFVCS_TESTS_SUPPORT_HPP

// Oracles that share no code path with the library beyond Scalar and
// Polynomial arithmetic.

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "affvcs/polynomial.hpp"
#include "affvcs/scalar.hpp"

namespace oracle {

using affvcs::Polynomial;
using affvcs::Scalar;

/// Number of partitions of n (0 for n < 0).
inline long partitions(int n) {
    if (n < 0) return 0;
    std::vector<long> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    return p[n];
}

/// dim W_(weight, depth) from the generating function
///   (sum_j u^(lambda-2j)) * prod_k 1 / ((1 - q^k u^2)(1 - q^k)(1 - q^k u^-2)).
/// Keys are (weight, depth).
inline std::map<std::pair<int, int>, long> verma_dimensions(int lambda, int max_depth) {
    std::map<std::pair<int, int>, long> series;
    for (int j = 0; j <= lambda; ++j) series[{lambda - 2 * j, 0}] += 1;
    for (int k = 1; k <= max_depth; ++k)
        for (int w : {2, 0, -2}) {
            // multiply by 1/(1 - q^k u^w); depths ascend, so a factor can be
            // picked up any number of times
            std::map<std::pair<int, int>, long> acc = series;
            for (int d = k; d <= max_depth; ++d) {
                std::vector<std::pair<std::pair<int, int>, long>> add;
                for (const auto& [key, val] : acc)
                    if (key.second == d - k) add.push_back({{key.first + w, d}, val});
                for (const auto& [key, val] : add) acc[key] += val;
            }
            series = std::move(acc);
        }
    return series;
}

/// Character of the level-one integrable module with highest weight
/// lambda in {0, 1}: the weight lambda + 2m space at depth n has dimension
/// p(n - m^2) for lambda = 0 and p(n - m(m+1)) for lambda = 1.
inline long level_one_dimension(int lambda, int weight, int depth) {
    if ((weight - lambda) % 2 != 0) return 0;
    const int m = (weight - lambda) / 2;
    const int shift = lambda == 0 ? m * m : m * (m + 1);
    return partitions(depth - shift);
}

/// Coefficients of t^0..t^n in exp(sum_{k<=n} t^k y_k), expanded as
/// sum_{r<=n} S^r / r! with S truncated in t.
inline std::vector<Polynomial> exp_series(int n) {
    using Series = std::vector<Polynomial>;
    Series s(n + 1);
    for (int k = 1; k <= n; ++k) s[k] = Polynomial::variable(affvcs::yvar(k));
    auto mul = [n](const Series& a, const Series& b) {
        Series out(n + 1);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    Series power(n + 1);
    power[0] = Polynomial(1L);
    Series total = power;
    Scalar factorial = 1;
    for (int r = 1; r <= n; ++r) {
        power = mul(power, s);
        factorial *= r;
        for (int i = 0; i <= n; ++i) total[i] += power[i] * Scalar(1 / factorial);
    }
    return total;
}

/// sum over partitions of n with multiplicities m_k of prod_k y_k^m_k / m_k!.
inline Polynomial partition_sum(int n) {
    Polynomial out;
    std::vector<std::pair<int, int>> parts;  // (size, multiplicity)
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            std::vector<affvcs::Monomial::Factor> factors;
            Scalar coeff = 1;
            for (const auto& [k, m] : parts) {
                factors.push_back({affvcs::yvar(k), m});
                for (int i = 2; i <= m; ++i) coeff /= i;
            }
            out.add_term(affvcs::Monomial::from_factors(factors), coeff);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k)
            for (int m = 1; m * k <= remaining; ++m) {
                parts.push_back({k, m});
                self(self, remaining - m * k, k - 1);
                parts.pop_back();
            }
    };
    rec(rec, n, n);
    return out;
}

/// Random polynomial with up to `terms` monomials in variables of index <= 3.
inline Polynomial random_polynomial(std::mt19937_64& rng, int terms = 4, int max_exp = 2) {
    std::uniform_int_distribution<int> fam(0, 2), idx(1, 3), ex(0, max_exp), num(-6, 6), den(1, 5);
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        std::vector<affvcs::Monomial::Factor> f;
        for (int v = 0; v < 2; ++v) {
            const int e = ex(rng);
            if (e == 0) continue;
            f.push_back({affvcs::VarRef(static_cast<affvcs::Family>(fam(rng)), idx(rng)), e});
        }
        Scalar c(num(rng), den(rng));
        c.canonicalize();
        p.add_term(affvcs::Monomial::from_factors(f), c);
    }
    return p;
}

}  // namespace oracle

#endif
