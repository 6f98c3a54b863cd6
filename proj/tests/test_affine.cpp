#include "doctest.h"

#include <map>
#include <stdexcept>
#include <vector>

#include "affvcs/affine.hpp"

using namespace affvcs;

namespace {

using Combo = std::map<Generator, Scalar>;

void add(Combo& c, const Generator& g, const Scalar& s) {
    c[g] += s;
    if (is_zero(c[g])) c.erase(g);
}

Combo combo(const BracketResult& r) {
    Combo out;
    for (const auto& [s, g] : r.terms) add(out, g, s);
    return out;
}

Combo bracket(const Generator& a, const Combo& b) {
    Combo out;
    for (const auto& [g, s] : b)
        for (const auto& [t, h] : affvcs::bracket(a, g).terms) add(out, h, s * t);
    return out;
}

Combo operator+(Combo a, const Combo& b) {
    for (const auto& [g, s] : b) add(a, g, s);
    return a;
}

std::vector<Generator> generators(int max_mode) {
    std::vector<Generator> out{kappa(), grading()};
    for (int n = -max_mode; n <= max_mode; ++n) {
        out.push_back(e_(n));
        out.push_back(h_(n));
        out.push_back(f_(n));
    }
    return out;
}

}  // namespace

TEST_CASE("structure constants") {
    CHECK(combo(affvcs::bracket(h_(2), e_(-1))) == Combo{{e_(1), 2}});
    CHECK(combo(affvcs::bracket(e_(2), f_(-2))) == Combo{{h_(0), 1}, {kappa(), 2}});
    CHECK(affvcs::bracket(e_(1), e_(5)).is_zero());
    CHECK(combo(affvcs::bracket(h_(3), h_(-3))) == Combo{{kappa(), 6}});
    CHECK(affvcs::bracket(h_(3), h_(-2)).is_zero());
    CHECK(combo(affvcs::bracket(h_(1), f_(4))) == Combo{{f_(5), -2}});
    CHECK(combo(affvcs::bracket(e_(-1), f_(0))) == Combo{{h_(-1), 1}});
    CHECK(combo(affvcs::bracket(grading(), f_(-3))) == Combo{{f_(-3), -3}});
    CHECK(affvcs::bracket(grading(), h_(0)).is_zero());
    CHECK(affvcs::bracket(kappa(), e_(2)).is_zero());
}

TEST_CASE("involution") {
    CHECK(dagger(e_(3)) == f_(-3));
    CHECK(dagger(kappa()) == kappa());
    CHECK(dagger(h_(-2)) == h_(2));
    CHECK_THROWS_AS(dagger(grading()), std::domain_error);
}

TEST_CASE("PBW order") {
    CHECK(pbw_less(e_(-2), e_(-1)));
    CHECK(pbw_less(e_(-1), h_(-1)));
    CHECK(pbw_less(h_(-1), f_(-1)));
    CHECK_FALSE(pbw_less(f_(-1), f_(-1)));
    CHECK(pbw_less(f_(-3), e_(-2)));
}

TEST_CASE("generator syntax") {
    for (const auto& g : generators(3)) CHECK(parse_generator(to_string(g)) == g);
    CHECK(to_string(e_(-2)) == "e[-2]");
    CHECK(to_string(kappa()) == "kappa");
    CHECK(to_string(grading()) == "d");
    CHECK_THROWS_AS(parse_generator("g[1]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator("e[x]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_generator("e[1"), std::invalid_argument);
    CHECK_THROWS_AS(make_generator(GenFamily::Kappa, 1), std::invalid_argument);
    CHECK(e_(1).weight() == 2);
    CHECK(f_(-1).weight() == -2);
    CHECK(h_(4).weight() == 0);
}

TEST_CASE("antisymmetry") {
    for (const auto& a : generators(4))
        for (const auto& b : generators(4)) {
            Combo ab = combo(affvcs::bracket(a, b));
            Combo ba = combo(affvcs::bracket(b, a));
            for (auto& [g, s] : ba) s = -s;
            CHECK(ab == ba);
        }
}

TEST_CASE("Jacobi identity") {
    const auto gens = generators(3);
    std::size_t failures = 0;
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : gens) {
                Combo sum = bracket(a, combo(affvcs::bracket(b, c))) + bracket(b, combo(affvcs::bracket(c, a))) +
                            bracket(c, combo(affvcs::bracket(a, b)));
                if (!sum.empty()) ++failures;
            }
    CHECK(failures == 0);
}

TEST_CASE("involution is an anti-automorphism") {
    std::vector<Generator> gens;
    for (const auto& g : generators(3))
        if (g != grading()) gens.push_back(g);
    for (const auto& a : gens) {
        CHECK(dagger(dagger(a)) == a);
        for (const auto& b : gens) {
            Combo lhs;
            for (const auto& [s, g] : affvcs::bracket(a, b).terms) add(lhs, dagger(g), s);
            CHECK(lhs == combo(affvcs::bracket(dagger(b), dagger(a))));
        }
    }
}
