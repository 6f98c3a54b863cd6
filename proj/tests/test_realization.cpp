#include "doctest.h"

#include <stdexcept>

#include "affvcs/realization.hpp"
#include "affvcs/suite.hpp"
#include "support.hpp"

using namespace affvcs;

namespace {

Polynomial P(const char* s) { return parse_polynomial(s); }

VcsVector constant(int dim, int j, const char* poly = "1") { return VcsVector::basis(dim, j, P(poly)); }

std::string render(const Realizer& r, const Generator& g, int max_index) {
    std::string out;
    for (const auto& t : r.realize(g).terms(max_index)) out += (out.empty() ? "" : " | ") + to_string(t);
    return out;
}

}  // namespace

TEST_CASE("Z polynomials") {
    CHECK(z_poly(0) == Polynomial(1L));
    CHECK(z_poly(1) == P("y_1"));
    CHECK(z_poly(2) == P("y_2 + 1/2*y_1^2"));
    CHECK(z_poly(2, 2) == P("2*y_2 + 2*y_1^2"));
    CHECK(z_poly(3, -2) == P("-2*y_3 + 4*y_1*y_2 - 4/3*y_1^3"));
    CHECK_THROWS_AS(z_poly(-1), std::invalid_argument);

    auto series = oracle::exp_series(8);
    for (int n = 0; n <= 8; ++n) {
        CHECK(z_poly(n) == series[n]);
        CHECK(z_poly(n) == oracle::partition_sum(n));
        CHECK(z_poly(n).is_homogeneous());
    }
}

TEST_CASE("simple operators") {
    Realizer r(0, 1);
    CHECK(render(r, f_(3), 4) == "∂/∂z_3");
    CHECK(render(r, kappa(), 4) == "1");
    CHECK(render(Realizer(2, Scalar(7, 3)), kappa(), 2) == "7/3");

    Realizer r2(2, 3);
    const auto& h0 = r2.zeroth(h_(0));
    CHECK(h0[Endo::H] == Polynomial(1L));
    CHECK(h0[Endo::I].is_zero());
    for (int p = 1; p <= 5; ++p) {
        CHECK(r2.coefficient(h_(0), zvar(p))[Endo::I] == Scalar(2) * Polynomial::variable(zvar(p)));
        CHECK(r2.coefficient(h_(0), xvar(p))[Endo::I] == Scalar(-2) * Polynomial::variable(xvar(p)));
        CHECK(r2.coefficient(h_(0), yvar(p)).is_zero());
    }

    Realizer rd(0, 1, Scalar(7, 3));
    CHECK(rd.zeroth(grading())[Endo::I] == Polynomial(Scalar(7, 3)));
    CHECK(rd.coefficient(grading(), yvar(4))[Endo::I] == P("-4*y_4"));
}

TEST_CASE("applying operators to small inputs") {
    Realizer r(0, 1);
    CHECK(r.apply(f_(1), constant(1, 0, "z_1^2")) == constant(1, 0, "2*z_1"));
    CHECK(r.apply(e_(-1), constant(1, 0)) == constant(1, 0, "z_1"));
    CHECK(r.apply(e_(-1), constant(1, 0, "z_1")).is_zero());

    Realizer r2(0, 2);
    CHECK(r2.apply(e_(-1), constant(1, 0, "z_1")) == constant(1, 0, "z_1^2"));

    Realizer r11(1, 1);
    VcsVector expected(2);
    expected[0] = P("2*x_1");
    expected[1] = P("-2*y_1");
    CHECK(r11.apply(f_(-1), constant(2, 0)) == expected);
    CHECK_THROWS_AS(r11.apply(f_(0), constant(1, 0)), std::invalid_argument);
}

TEST_CASE("bracket examples") {
    Realizer r(0, 1);
    auto hh = commutator_check(r, h_(1), h_(-1), 4);
    CHECK(hh.passed());
    CHECK(hh.checked > 0);
    CHECK(hh.expected.terms.size() == 1);
    CHECK(commutator_check(r, e_(0), f_(0), 4).passed());
    auto ff = commutator_check(r, f_(2), f_(-1), 4);
    CHECK(ff.passed());
    CHECK(ff.expected.is_zero());

    // the commutator of h[1] and h[-1] is multiplication by 2c
    Realizer r3(1, 3);
    VcsVector v = VcsVector::basis(2, 1, P("x_1*z_2 + y_1^2"));
    VcsVector lhs = r3.apply(h_(1), r3.apply(h_(-1), v)) - r3.apply(h_(-1), r3.apply(h_(1), v));
    CHECK(lhs == Scalar(6) * v);
}

TEST_CASE("operators shift degree by minus the mode") {
    Realizer r(1, Scalar(5, 2));
    const auto monos = monomials_up_to(3);
    for (const auto& g : test_generators(3))
        for (const auto& m : monos)
            for (int j = 0; j < r.dim(); ++j) {
                const VcsVector& out = r.apply_monomial(g, m, j);
                if (out.is_zero()) continue;
                CHECK(out.is_homogeneous());
                CHECK(out.degree() == m.degree() - (g.is_loop() ? g.mode : 0));
            }
}

TEST_CASE("h[0] is diagonal with the expected eigenvalues") {
    for (int lambda = 0; lambda <= 3; ++lambda) {
        Realizer r(lambda, 4);
        for (const auto& m : monomials_up_to(4))
            for (int j = 0; j <= lambda; ++j) {
                const int eigen = lambda - 2 * j + 2 * (m.family_count(Family::Z) - m.family_count(Family::X));
                CHECK(r.apply_monomial(h_(0), m, j) == VcsVector::basis(r.dim(), j, Polynomial(m, eigen)));
            }
    }
}

TEST_CASE("grading operator") {
    for (const Scalar& d0 : {Scalar(0), Scalar(7, 3)}) {
        Realizer r(1, 2, d0);
        for (const auto& a : test_generators(3, false)) {
            auto res = commutator_check(r, grading(), a, 3);
            CHECK(res.passed());
            CHECK(res.expected.terms.size() == (a.mode == 0 ? 0u : 1u));
        }
    }
}

TEST_CASE("general negative-mode formula reproduces e[-1]") {
    RealizerOptions opts;
    opts.general_block_for_e_minus_one = true;
    for (auto [lambda, c] : {std::pair{0, Scalar(1)}, std::pair{2, Scalar(5, 3)}}) {
        Realizer simple(lambda, c), general(lambda, c, 0, opts);
        CHECK(simple.zeroth(e_(-1)) == general.zeroth(e_(-1)));
        for (int i = 1; i <= 6; ++i)
            for (Family f : {Family::X, Family::Y, Family::Z})
                CHECK(simple.coefficient(e_(-1), VarRef(f, i)) == general.coefficient(e_(-1), VarRef(f, i)));
        CHECK(commutator_check(general, e_(-1), f_(1), 3).passed());
        CHECK(commutator_check(general, e_(-1), h_(-1), 3).passed());
    }
}

TEST_CASE("operators stay finite on high-index variables") {
    Realizer r(1, 1);
    Monomial m = Monomial::from_factors({{xvar(40), 1}, {zvar(37), 2}});
    for (const auto& g : {e_(-2), h_(-3), f_(-1), e_(3), h_(2), f_(0)}) {
        const VcsVector& out = r.apply_monomial(g, m, 0);
        if (!out.is_zero()) CHECK(out.degree() == m.degree() - g.mode);
        CHECK(out.max_index() <= 40 + 3);
    }
}

TEST_CASE("bracket relations hold at small degree") {
    RunConfig cfg;
    cfg.degree = 3;
    for (auto [lambda, c] : {std::pair{0, Scalar(1)}, std::pair{1, Scalar(5, 2)}}) {
        cfg.lambda = lambda;
        cfg.c = c;
        Realizer r(lambda, c);
        VerifyReport report;
        auto tally = check_homomorphism(r, cfg, report);
        CHECK(tally.checked > 0);
        CHECK(tally.failed == 0);
    }
}

TEST_CASE("printed h[-k] operator breaks the bracket relations") {
    RealizerOptions opts;
    opts.transcription = Transcription::Printed;
    Realizer printed(1, 1, 0, opts), corrected(1, 1);
    CHECK_FALSE(printed.zeroth(h_(-1)) == corrected.zeroth(h_(-1)));
    CHECK_FALSE(commutator_check(printed, e_(1), f_(-2), 2).passed());
    CHECK(commutator_check(corrected, e_(1), f_(-2), 2).passed());
}

TEST_CASE("pretty printing") {
    CHECK(to_string(OperatorTerm{P("-1"), zvar(2), Endo::I}) == "-∂/∂z_2");
    CHECK(to_string(OperatorTerm{P("x_1 - y_2"), std::nullopt, Endo::E}) == "(x_1 - y_2)*π0(e)");
    CHECK(to_string(OperatorTerm{P("3"), std::nullopt, Endo::I}) == "3");
    CHECK(to_string(OperatorTerm{P("1"), std::nullopt, Endo::F}) == "π0(f)");
}
