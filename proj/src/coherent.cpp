#include "affvcs/coherent.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "affvcs/linalg.hpp"

namespace affvcs {

namespace {

/// Element of W with polynomial coefficients, used while expanding g w.
using PolyW = std::map<BasisKey, Polynomial>;

void add_to(PolyW& target, const BasisKey& key, const Polynomial& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = target.try_emplace(key, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero()) target.erase(it);
    }
}

/// sum_k var_k * act(gen[k], v) over the modes that can act nonzero.
PolyW apply_series_generator(const VermaModule& module, GenFamily family, Family var, const PolyW& v) {
    PolyW out;
    for (const auto& [key, poly] : v) {
        const int depth = depth_of(key.word);
        for (int k = 1; k <= depth; ++k) {
            WVector image = module.act_basis(Generator{family, k}, key);
            if (image.is_zero()) continue;
            const Polynomial shifted = poly * Polynomial::variable(VarRef(var, k));
            for (const auto& [target, c] : image.terms()) add_to(out, target, shifted * c);
        }
    }
    return out;
}

/// exp(sum_k var_k gen[k]) v, truncated at order depth(v).
PolyW apply_exponential(const VermaModule& module, GenFamily family, Family var, const PolyW& v, int budget) {
    PolyW result = v;
    PolyW term = v;
    for (int n = 1; n <= budget && !term.empty(); ++n) {
        term = apply_series_generator(module, family, var, term);
        for (auto& [key, poly] : term) poly *= Scalar(1, n);
        for (const auto& [key, poly] : term) add_to(result, key, poly);
    }
    return result;
}

std::vector<Scalar> coordinates(const VcsVector& v, const std::map<std::pair<int, Monomial>, std::size_t>& index) {
    std::vector<Scalar> out(index.size(), Scalar(0));
    for (int j = 0; j < v.dim(); ++j)
        for (const auto& [m, c] : v[j].terms()) out[index.at({j, m})] = c;
    return out;
}

}  // namespace

VcsVector coherent_state_map(const VermaModule& module, const WVector& w) {
    PolyW state;
    for (const auto& [key, c] : w.terms()) state.emplace(key, Polynomial(c));
    const int budget = w.max_depth();

    state = apply_exponential(module, GenFamily::F, Family::Z, state, budget);
    state = apply_exponential(module, GenFamily::H, Family::Y, state, budget);
    state = apply_exponential(module, GenFamily::E, Family::X, state, budget);

    VcsVector out(module.rep().dim());
    for (const auto& [key, poly] : state)
        if (key.word.empty()) out[key.j] += poly;
    return out;
}

bool intertwine_check(const Realizer& r, const VermaModule& module, const Generator& u, const WVector& w) {
    if (r.rep().lambda() != module.lambda() || r.c() != module.c())
        throw std::invalid_argument("realizer and module parameters differ");
    VcsVector lhs = r.apply(u, coherent_state_map(module, w));
    VcsVector rhs = coherent_state_map(module, module.act(u, w));
    return lhs == rhs;
}

bool kernel_check(const VermaModule& module, const WVector& w) { return coherent_state_map(module, w).is_zero(); }

std::size_t span_rank(const std::vector<VcsVector>& vectors) {
    std::map<std::pair<int, Monomial>, std::size_t> index;
    for (const auto& v : vectors)
        for (int j = 0; j < v.dim(); ++j)
            for (const auto& [m, c] : v[j].terms()) index.try_emplace({j, m}, 0);
    std::size_t next = 0;
    for (auto& [k, i] : index) i = next++;

    Matrix rows(vectors.size(), index.size());
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        auto coords = coordinates(vectors[r], index);
        for (std::size_t c = 0; c < coords.size(); ++c) rows(r, c) = coords[c];
    }
    return bareiss_rank(rows);
}

std::vector<VcsVector> image_basis(const Realizer& r, const VermaModule& module, const WeightSpaceKey& key) {
    std::vector<VcsVector> spanning;
    for (const auto& b : module.weight_basis(key)) {
        VcsVector v = VcsVector::basis(r.dim(), b.j);
        for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) v = r.apply(*it, v);
        spanning.push_back(std::move(v));
    }

    std::map<std::pair<int, Monomial>, std::size_t> index;
    for (const auto& v : spanning)
        for (int j = 0; j < v.dim(); ++j)
            for (const auto& [m, c] : v[j].terms()) index.try_emplace({j, m}, 0);
    std::size_t next = 0;
    for (auto& [k, i] : index) i = next++;

    EchelonBasis echelon(index.size());
    std::vector<VcsVector> basis;
    for (auto& v : spanning)
        if (echelon.insert(coordinates(v, index))) basis.push_back(std::move(v));
    return basis;
}

std::size_t coherent_image_rank(const VermaModule& module, const WeightSpaceKey& key) {
    std::vector<VcsVector> images;
    for (const auto& b : module.weight_basis(key)) images.push_back(coherent_state_map(module, WVector(b)));
    return span_rank(images);
}

}  // namespace affvcs
