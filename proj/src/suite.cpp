#include "affvcs/suite.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace affvcs {

using detail::parallel_for;

namespace {

constexpr std::size_t kKeepFailures = 20;

void record(VerifyReport& report, SuiteResult& tally, const std::string& detail) {
    ++tally.failed;
    std::size_t kept = 0;
    for (const auto& f : report.failures)
        if (f.suite == tally.name) ++kept;
    if (kept < kKeepFailures) report.failures.push_back({tally.name, detail});
}

std::vector<BasisKey> basis_up_to(const VermaModule& m, int max_depth, std::size_t cap) {
    std::vector<BasisKey> out;
    for (int d = 0; d <= max_depth; ++d)
        for (const auto& key : m.keys_at_depth(d)) {
            auto b = m.weight_basis(key);
            if (b.size() > cap) throw std::length_error("weight space dimension above the cap");
            out.insert(out.end(), b.begin(), b.end());
        }
    return out;
}

int suite_depth(const RunConfig& cfg) { return std::min(cfg.degree, 3); }

}  // namespace

void RunConfig::validate() const {
    if (lambda < 0) throw std::invalid_argument("lambda must be >= 0");
    if (degree < 0) throw std::invalid_argument("degree must be >= 0");
    if (max_mode < 0) throw std::invalid_argument("max_mode must be >= 0");
    if (cap == 0) throw std::invalid_argument("cap must be positive");
}

std::vector<Generator> test_generators(int max_mode, bool with_kappa) {
    std::vector<Generator> out;
    if (with_kappa) out.push_back(kappa());
    for (int n = -max_mode; n <= max_mode; ++n)
        for (GenFamily f : {GenFamily::E, GenFamily::H, GenFamily::F}) out.push_back({f, n});
    return out;
}

bool is_integrable(int lambda, const Scalar& c) { return c.get_den() == 1 && c - lambda >= 0; }

SuiteResult check_homomorphism(const Realizer& r, const RunConfig& cfg, VerifyReport& report) {
    SuiteResult tally{"homomorphism"};
    auto gens = test_generators(cfg.max_mode);
    std::vector<std::pair<Generator, Generator>> pairs;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = i; k < gens.size(); ++k) pairs.emplace_back(gens[i], gens[k]);

    std::vector<CommutatorReport> results(pairs.size());
    parallel_for(pairs.size(), cfg.jobs, [&](std::size_t i) {
        results[i] = commutator_check(r, pairs[i].first, pairs[i].second, cfg.degree);
    });
    for (const auto& res : results) {
        tally.checked += res.checked;
        for (const auto& f : res.failures)
            record(report, tally,
                   "[xi(" + to_string(res.a) + "), xi(" + to_string(res.b) + ")] != xi(" + to_string(res.expected) +
                       ") on " + to_string(f.monomial) + " (x) w_" + std::to_string(f.j) + ": lhs = " +
                       to_string(f.lhs) + ", rhs = " + to_string(f.rhs));
    }
    return tally;
}

SuiteResult check_grading(const Realizer& r, const RunConfig& cfg, VerifyReport& report) {
    SuiteResult tally{"grading"};
    for (const auto& a : test_generators(cfg.max_mode, false)) {
        auto res = commutator_check(r, grading(), a, cfg.degree);
        tally.checked += res.checked;
        for (const auto& f : res.failures)
            record(report, tally,
                   "[xi(d), xi(" + to_string(a) + ")] != " + std::to_string(a.mode) + " xi(" + to_string(a) + ") on " +
                       to_string(f.monomial) + " (x) w_" + std::to_string(f.j));
    }
    return tally;
}

SuiteResult check_contravariance(const VermaModule& m, const RunConfig& cfg, VerifyReport& report) {
    SuiteResult tally{"contravariance"};
    const auto basis = basis_up_to(m, suite_depth(cfg), cfg.cap);
    for (const auto& a : test_generators(std::min(cfg.max_mode, 2))) {
        const Generator ad = dagger(a);
        for (const auto& b1 : basis) {
            WVector lhs_vec = m.act(a, WVector(b1));
            WeightSpaceKey k = m.key_of(b1);
            WeightSpaceKey target{k.weight + a.weight(), k.depth - a.mode};
            if (target.depth < 0) continue;
            for (const auto& b2 : m.weight_basis(target)) {
                WVector w2(b2);
                Scalar lhs = m.contravariant_form(lhs_vec, w2);
                Scalar rhs = m.contravariant_form(WVector(b1), m.act(ad, w2));
                ++tally.checked;
                if (lhs != rhs)
                    record(report, tally,
                           "<" + to_string(a) + " " + to_string(b1) + " | " + to_string(b2) + "> = " + lhs.get_str() +
                               " but <" + to_string(b1) + " | " + to_string(ad) + " " + to_string(b2) +
                               "> = " + rhs.get_str());
            }
        }
    }
    return tally;
}

SuiteResult check_module_axiom(const VermaModule& m, const RunConfig& cfg, VerifyReport& report) {
    SuiteResult tally{"module-axiom"};
    const auto basis = basis_up_to(m, suite_depth(cfg), cfg.cap);
    const auto gens = test_generators(std::min(cfg.max_mode, 2));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t k = i + 1; k < gens.size(); ++k) {
            const auto& a = gens[i];
            const auto& b = gens[k];
            const BracketResult ab = bracket(a, b);
            for (const auto& key : basis) {
                WVector w(key);
                WVector lhs = m.act(a, m.act(b, w)) - m.act(b, m.act(a, w));
                WVector rhs;
                for (const auto& [coeff, g] : ab.terms) rhs += coeff * m.act(g, w);
                ++tally.checked;
                if (!(lhs == rhs))
                    record(report, tally,
                           "[" + to_string(a) + ", " + to_string(b) + "] on " + to_string(key) + ": " + to_string(lhs) +
                               " != " + to_string(rhs));
            }
        }
    return tally;
}

SuiteResult check_intertwining(const Realizer& r, const VermaModule& m, const RunConfig& cfg, VerifyReport& report) {
    SuiteResult tally{"intertwining"};
    const auto basis = basis_up_to(m, suite_depth(cfg), cfg.cap);
    const auto gens = test_generators(cfg.max_mode);
    std::vector<char> ok(basis.size() * gens.size(), 1);
    parallel_for(ok.size(), cfg.jobs, [&](std::size_t i) {
        ok[i] = intertwine_check(r, m, gens[i % gens.size()], WVector(basis[i / gens.size()]));
    });
    for (std::size_t i = 0; i < ok.size(); ++i) {
        ++tally.checked;
        if (!ok[i])
            record(report, tally,
                   "xi(" + to_string(gens[i % gens.size()]) + ") xi_w != xi_{u w} for w = " +
                       to_string(basis[i / gens.size()]));
    }
    return tally;
}

WVector random_wvector(const VermaModule& m, int max_depth, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> depth_dist(0, max_depth);
    std::uniform_int_distribution<int> count_dist(1, 3);
    std::uniform_int_distribution<int> num_dist(-5, 5);
    std::uniform_int_distribution<int> den_dist(1, 4);
    WVector w;
    const int terms = count_dist(rng);
    for (int t = 0; t < terms; ++t) {
        const int d = depth_dist(rng);
        auto keys = m.keys_at_depth(d);
        auto& key = keys[std::uniform_int_distribution<std::size_t>(0, keys.size() - 1)(rng)];
        auto basis = m.weight_basis(key);
        const auto& b = basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
        int num = 0;
        while (num == 0) num = num_dist(rng);
        Scalar coeff(num, den_dist(rng));
        coeff.canonicalize();
        w.add_term(b, coeff);
    }
    return w;
}

SuiteResult check_random_intertwining(const Realizer& r, const VermaModule& m, const RunConfig& cfg,
                                      VerifyReport& report) {
    SuiteResult tally{"intertwining-random"};
    std::mt19937_64 rng(cfg.seed);
    const auto gens = test_generators(cfg.max_mode);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (std::size_t i = 0; i < cfg.random_pairs; ++i) {
        const Generator u = gens[pick(rng)];
        WVector w = random_wvector(m, suite_depth(cfg), rng);
        ++tally.checked;
        if (!intertwine_check(r, m, u, w))
            record(report, tally, "xi(" + to_string(u) + ") xi_w != xi_{u w} for w = " + to_string(w));
    }
    return tally;
}

SuiteResult check_kernel_theorem(const Realizer& r, const VermaModule& m, const RunConfig& cfg, VerifyReport& report) {
    SuiteResult tally{"kernel-theorem"};
    std::vector<WeightSpaceKey> keys;
    for (int d = 0; d <= cfg.degree; ++d)
        for (const auto& k : m.keys_at_depth(d)) {
            if (m.weight_basis(k).size() > cfg.cap) throw std::length_error("weight space dimension above the cap");
            keys.push_back(k);
        }

    struct Row {
        std::size_t rank, image, realized;
        std::string grading_error;
    };
    std::vector<Row> rows(keys.size());
    parallel_for(keys.size(), cfg.jobs, [&](std::size_t i) {
        const auto& key = keys[i];
        rows[i].rank = m.gram_rank(key);
        rows[i].image = coherent_image_rank(m, key);
        rows[i].realized = image_basis(r, m, key).size();
        for (const auto& b : m.weight_basis(key)) {
            VcsVector xi = coherent_state_map(m, WVector(b));
            if (xi.is_zero()) continue;
            VcsVector h0 = r.apply(h_(0), xi);
            if (xi.degree() != key.depth || !(h0 == Scalar(key.weight) * xi)) {
                rows[i].grading_error = "xi_w for w = " + to_string(b) + " is not homogeneous of degree " +
                                        std::to_string(key.depth) + " with h[0]-eigenvalue " +
                                        std::to_string(key.weight);
                break;
            }
        }
    });
    for (std::size_t i = 0; i < keys.size(); ++i) {
        ++tally.checked;
        const auto& row = rows[i];
        std::string where = "(" + std::to_string(keys[i].weight) + ", " + std::to_string(keys[i].depth) + ")";
        if (row.rank != row.image || row.rank != row.realized)
            record(report, tally,
                   "weight space " + where + ": gram rank " + std::to_string(row.rank) + ", coherent image rank " +
                       std::to_string(row.image) + ", realized image dimension " + std::to_string(row.realized));
        if (!row.grading_error.empty()) record(report, tally, row.grading_error);
    }
    return tally;
}

SuiteResult check_gram_blocks(const VermaModule& m, const RunConfig& cfg, VerifyReport& report) {
    SuiteResult tally{"gram-blocks"};
    const bool integrable = is_integrable(m.lambda(), m.c());
    for (int d = 0; d <= cfg.degree; ++d)
        for (const auto& key : m.keys_at_depth(d)) {
            std::string where = "(" + std::to_string(key.weight) + ", " + std::to_string(key.depth) + ")";
            Matrix g = m.gram_matrix(key);
            ++tally.checked;
            if (!g.is_symmetric()) record(report, tally, "Gram block " + where + " is not symmetric");
            if (integrable && !certify_psd(g).positive_semidefinite)
                record(report, tally, "Gram block " + where + " is not positive semidefinite");
            for (const auto& v : m.singular_vectors(key))
                if (!kernel_check(m, v)) record(report, tally, "singular vector " + to_string(v) + " has xi_w != 0");
        }
    return tally;
}

SuiteResult check_local_finiteness(const VermaModule& m, const RunConfig& cfg, VerifyReport& report) {
    SuiteResult tally{"local-finiteness"};
    const auto basis = basis_up_to(m, suite_depth(cfg), cfg.cap);
    for (const auto& key : basis) {
        const int k = depth_of(key.word);
        for (int n = 1; n <= std::max(1, cfg.max_mode); ++n)
            for (GenFamily f : {GenFamily::E, GenFamily::H, GenFamily::F}) {
                WVector w(key);
                for (int i = 0; i <= k; ++i) w = m.act({f, n}, w);
                ++tally.checked;
                if (!w.is_zero())
                    record(report, tally,
                           to_string(Generator{f, n}) + "^" + std::to_string(k + 1) + " does not kill " + to_string(key));
            }
    }
    return tally;
}

VerifyReport run_verify(const RunConfig& cfg) {
    cfg.validate();
    VerifyReport report;
    RealizerOptions opts;
    opts.transcription = cfg.transcription;
    Realizer r(cfg.lambda, cfg.c, cfg.d0, opts);
    VermaModule m(cfg.lambda, cfg.c);

    report.suites.push_back(check_homomorphism(r, cfg, report));
    report.suites.push_back(check_grading(r, cfg, report));
    report.suites.push_back(check_contravariance(m, cfg, report));
    report.suites.push_back(check_module_axiom(m, cfg, report));
    report.suites.push_back(check_intertwining(r, m, cfg, report));
    report.suites.push_back(check_random_intertwining(r, m, cfg, report));
    report.suites.push_back(check_kernel_theorem(r, m, cfg, report));
    report.suites.push_back(check_gram_blocks(m, cfg, report));
    report.suites.push_back(check_local_finiteness(m, cfg, report));
    return report;
}

}  // namespace affvcs
