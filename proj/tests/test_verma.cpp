#include "doctest.h"

#include <random>
#include <stdexcept>

#include "affvcs/suite.hpp"
#include "affvcs/verma.hpp"
#include "support.hpp"

using namespace affvcs;

namespace {

BasisKey key(const char* word, int j = 0) { return {parse_word(word), j}; }
WVector vec(const char* word, int j = 0) { return WVector(key(word, j)); }

}  // namespace

TEST_CASE("word syntax") {
    CHECK(parse_word("").empty());
    CHECK(parse_word("f[-1] e[-1]") == PbwMonomial{e_(-1), f_(-1)});
    CHECK(parse_word("e[-1]^2 h[-2]") == PbwMonomial{h_(-2), e_(-1), e_(-1)});
    CHECK(to_string(key("e[-1]^2 e[-2]")) == "e[-2] e[-1]^2 w_0");
    CHECK(depth_of(parse_word("e[-1]^2 f[-3]")) == 5);
    CHECK_THROWS_AS(parse_word("e[1]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("kappa"), std::invalid_argument);
}

TEST_CASE("left action examples") {
    VermaModule m(0, 1);
    CHECK(m.act(f_(1), vec("f[-1]")).is_zero());
    CHECK(m.act(e_(1), vec("f[-1]")) == vec(""));
    CHECK(m.act(h_(0), vec("e[-1]")) == Scalar(2) * vec("e[-1]"));

    VermaModule m1(1, Scalar(5, 2));
    CHECK(m1.act(h_(0), vec("e[-1]")) == Scalar(3) * vec("e[-1]"));
    CHECK(m1.act(kappa(), vec("h[-2]", 1)) == Scalar(5, 2) * vec("h[-2]", 1));
    CHECK(m1.act(f_(0), vec("")) == vec("", 1));
    CHECK(m1.act(f_(0), vec("", 1)).is_zero());
    CHECK_THROWS_AS(m1.act(grading(), vec("")), std::domain_error);
    // h[-1] e[-1] = e[-1] h[-1] + 2 e[-2]
    CHECK(m1.act(h_(-1), vec("e[-1]")) == vec("e[-1] h[-1]") + Scalar(2) * vec("e[-2]"));
}

TEST_CASE("weight space bases") {
    VermaModule m(0, 1);
    CHECK(m.weight_basis({0, 0}) == std::vector<BasisKey>{key("")});
    CHECK(m.keys_at_depth(1) == std::vector<WeightSpaceKey>{{2, 1}, {0, 1}, {-2, 1}});
    CHECK(m.weight_basis({2, 1}) == std::vector<BasisKey>{key("e[-1]")});
    CHECK(m.weight_basis({0, 1}) == std::vector<BasisKey>{key("h[-1]")});
    CHECK(m.weight_basis({-2, 1}) == std::vector<BasisKey>{key("f[-1]")});

    VermaModule m1(1, 1);
    CHECK(m1.keys_at_depth(0) == std::vector<WeightSpaceKey>{{1, 0}, {-1, 0}});
    CHECK(m1.weight_basis({1, 0}) == std::vector<BasisKey>{key("", 0)});
    CHECK(m1.weight_basis({-1, 0}) == std::vector<BasisKey>{key("", 1)});
    CHECK(m1.weight_basis({7, 1}).empty());
}

TEST_CASE("dimensions match the colored partition generating function") {
    for (int lambda = 0; lambda <= 2; ++lambda) {
        VermaModule m(lambda, 1);
        const int max_depth = 4;
        auto expected = oracle::verma_dimensions(lambda, max_depth);
        std::size_t seen = 0;
        for (int d = 0; d <= max_depth; ++d)
            for (const auto& k : m.keys_at_depth(d)) {
                CHECK(static_cast<long>(m.weight_basis(k).size()) == expected[{k.weight, k.depth}]);
                ++seen;
            }
        std::size_t nonzero = 0;
        for (const auto& [k, v] : expected) nonzero += v > 0;
        CHECK(seen == nonzero);
    }
}

TEST_CASE("contravariant form examples") {
    VermaModule m(0, 1);
    CHECK(m.contravariant_form(vec(""), vec("")) == 1);
    CHECK(m.contravariant_form(vec("h[-1]"), vec("h[-1]")) == 2);
    CHECK(m.contravariant_form(vec("e[-1]"), vec("h[-1]")) == 0);

    Matrix g2 = m.gram_matrix({2, 1}), g0 = m.gram_matrix({0, 1}), gm = m.gram_matrix({-2, 1});
    CHECK((g2.rows() == 1 && g2(0, 0) == 1));
    CHECK((g0.rows() == 1 && g0(0, 0) == 2));
    CHECK((gm.rows() == 1 && gm(0, 0) == 1));
    CHECK(m.gram_matrix({9, 1}).rows() == 0);

    VermaModule m2(2, 3);
    Matrix floor0 = m2.gram_matrix({-2, 0});
    CHECK(floor0(0, 0) == m2.rep().gram_diag()[2]);
}

TEST_CASE("gram ranks and singular vectors") {
    VermaModule m(0, 1);
    CHECK(m.gram_rank({2, 1}) == 1);
    CHECK(m.weight_basis({4, 2}).size() == 1);
    CHECK(m.gram_rank({4, 2}) == 0);
    auto sing = m.singular_vectors({4, 2});
    REQUIRE(sing.size() == 1);
    CHECK(sing[0] == vec("e[-1]^2"));
    CHECK(m.singular_vectors({0, 0}).empty());

    VermaModule generic(1, Scalar(5, 2));
    for (int d = 0; d <= 3; ++d)
        for (const auto& k : generic.keys_at_depth(d)) {
            CHECK(generic.gram_rank(k) == generic.weight_basis(k).size());
            CHECK(generic.singular_vectors(k).empty());
        }
}

TEST_CASE("level one characters") {
    for (auto [lambda, depth] : {std::pair{0, 4}, std::pair{1, 3}}) {
        VermaModule m(lambda, 1);
        for (const auto& row : m.character_table(depth)) {
            CAPTURE(lambda);
            CAPTURE(row.key.weight);
            CAPTURE(row.key.depth);
            CHECK(static_cast<long>(row.rank) == oracle::level_one_dimension(lambda, row.key.weight, row.key.depth));
        }
    }
}

TEST_CASE("character table shape") {
    VermaModule m(0, 1);
    auto rows = m.character_table(1);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == CharacterRow{{0, 0}, 1, 1});
    CHECK(rows[1] == CharacterRow{{2, 1}, 1, 1});
    CHECK(rows[2] == CharacterRow{{0, 1}, 1, 1});
    CHECK(rows[3] == CharacterRow{{-2, 1}, 1, 1});

    for (int lambda = 0; lambda <= 3; ++lambda) {
        VermaModule mm(lambda, 2);
        std::size_t total = 0;
        for (const auto& row : mm.character_table(0)) {
            CHECK(row.key.depth == 0);
            CHECK(row.rank == row.dim_w);
            total += row.dim_w;
        }
        CHECK(total == static_cast<std::size_t>(lambda + 1));
    }

    for (auto [lambda, c] : {std::pair{0, 1}, std::pair{1, 1}}) {
        VermaModule mm(lambda, c);
        auto table = mm.character_table(3, 2);
        std::map<WeightSpaceKey, std::size_t> rank;
        for (const auto& row : table) {
            CHECK(row.rank <= row.dim_w);
            rank[row.key] = row.rank;
        }
        for (const auto& [k, r] : rank) CHECK(rank.at({-k.weight, k.depth}) == r);
        CHECK(mm.character_table(3, 1) == table);
    }
    CHECK_THROWS_AS(m.character_table(4, 1, 3), std::length_error);
    CHECK_THROWS_AS(m.character_table(-1), std::invalid_argument);
}

TEST_CASE("contravariance on random vectors") {
    std::mt19937_64 rng(41);
    for (auto [lambda, c] : {std::pair{0, Scalar(1)}, std::pair{1, Scalar(5, 2)}, std::pair{2, Scalar(3)}}) {
        VermaModule m(lambda, c);
        for (int trial = 0; trial < 40; ++trial) {
            WVector w1 = random_wvector(m, 3, rng), w2 = random_wvector(m, 3, rng);
            for (const auto& a : test_generators(2))
                CHECK(m.contravariant_form(m.act(a, w1), w2) == m.contravariant_form(w1, m.act(dagger(a), w2)));
        }
    }
}

TEST_CASE("module axiom, Gram blocks and local finiteness") {
    RunConfig cfg;
    cfg.degree = 3;
    for (auto [lambda, c] : {std::pair{0, Scalar(1)}, std::pair{1, Scalar(5, 2)}, std::pair{2, Scalar(3)}}) {
        VermaModule m(lambda, c);
        VerifyReport report;
        CHECK(check_module_axiom(m, cfg, report).checked > 0);
        CHECK(check_gram_blocks(m, cfg, report).checked > 0);
        CHECK(check_local_finiteness(m, cfg, report).checked > 0);
        CHECK(check_contravariance(m, cfg, report).checked > 0);
        CHECK(report.passed());
        for (const auto& f : report.failures) MESSAGE(f.suite << ": " << f.detail);
    }
}

TEST_CASE("non-integrable points admit indefinite Gram blocks") {
    // <e[-1] v+, e[-1] v+> = c - lambda < 0
    VermaModule m(2, 1);
    bool indefinite = false;
    for (int d = 0; d <= 1; ++d)
        for (const auto& k : m.keys_at_depth(d)) indefinite |= !certify_psd(m.gram_matrix(k)).positive_semidefinite;
    CHECK(indefinite);
    CHECK_FALSE(is_integrable(2, 1));
    CHECK(is_integrable(1, 1));
    CHECK_FALSE(is_integrable(1, Scalar(5, 2)));
}
