#include "affvcs/realization.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace affvcs {

// ---------------------------------------------------------------------------
// Z_N polynomials

Polynomial z_poly(int n, const Scalar& scale) {
    if (n < 0) throw std::invalid_argument("z_poly needs N >= 0");
    static std::shared_mutex mutex;
    static std::vector<Polynomial> base{Polynomial(1L)};
    static std::map<std::pair<int, Scalar>, Polynomial> scaled;

    {
        std::shared_lock lock(mutex);
        if (scale == 1 && n < static_cast<int>(base.size())) return base[n];
        if (scale != 1)
            if (auto it = scaled.find({n, scale}); it != scaled.end()) return it->second;
    }

    std::unique_lock lock(mutex);
    while (static_cast<int>(base.size()) <= n) {
        const int m = static_cast<int>(base.size());
        Polynomial next;
        for (int k = 1; k <= m; ++k)
            next += Polynomial(Monomial(yvar(k)), Scalar(k)) * base[m - k];
        next *= Scalar(1, m);
        base.push_back(std::move(next));
    }
    if (scale == 1) return base[n];
    auto [it, inserted] = scaled.try_emplace({n, scale}, base[n].scale_family(Family::Y, scale));
    return it->second;
}

// ---------------------------------------------------------------------------
// VcsVector

VcsVector VcsVector::basis(int dim, int j, const Polynomial& p) {
    if (j < 0 || j >= dim) throw std::out_of_range("V0 basis index out of range");
    VcsVector v(dim);
    v[j] = p;
    return v;
}

bool VcsVector::is_zero() const {
    for (const auto& p : components_)
        if (!p.is_zero()) return false;
    return true;
}

bool VcsVector::is_homogeneous() const {
    int deg = -1;
    for (const auto& p : components_) {
        if (p.is_zero()) continue;
        auto [lo, hi] = p.degree_range();
        if (lo != hi) return false;
        if (deg >= 0 && deg != lo) return false;
        deg = lo;
    }
    return true;
}

int VcsVector::degree() const {
    if (!is_homogeneous()) return -1;
    for (const auto& p : components_)
        if (!p.is_zero()) return p.degree_range().first;
    return -1;
}

int VcsVector::max_index() const {
    int k = 0;
    for (const auto& p : components_) k = std::max(k, p.max_index());
    return k;
}

VcsVector& VcsVector::operator+=(const VcsVector& other) {
    if (other.dim() != dim()) throw std::invalid_argument("VcsVector dimension mismatch");
    for (int j = 0; j < dim(); ++j) components_[j] += other.components_[j];
    return *this;
}

VcsVector& VcsVector::operator-=(const VcsVector& other) {
    if (other.dim() != dim()) throw std::invalid_argument("VcsVector dimension mismatch");
    for (int j = 0; j < dim(); ++j) components_[j] -= other.components_[j];
    return *this;
}

VcsVector& VcsVector::operator*=(const Scalar& s) {
    for (auto& p : components_) p *= s;
    return *this;
}

std::string to_string(const VcsVector& v) {
    std::string out;
    for (int j = 0; j < v.dim(); ++j) {
        if (v[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_string(v[j]) + ")*w_" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// EndoPoly / OperatorTerm

bool EndoPoly::is_zero() const {
    for (const auto& p : parts)
        if (!p.is_zero()) return false;
    return true;
}

EndoPoly& EndoPoly::operator+=(const EndoPoly& other) {
    for (int i = 0; i < 4; ++i) parts[i] += other.parts[i];
    return *this;
}

EndoPoly& EndoPoly::operator-=(const EndoPoly& other) {
    for (int i = 0; i < 4; ++i) parts[i] -= other.parts[i];
    return *this;
}

EndoPoly operator*(const Polynomial& p, const EndoPoly& e) {
    EndoPoly out;
    for (int i = 0; i < 4; ++i)
        if (!e.parts[i].is_zero()) out.parts[i] = p * e.parts[i];
    return out;
}

std::string to_string(const OperatorTerm& t) {
    std::string out;
    const bool unit = t.coeff == Polynomial(1L);
    const bool bare = t.endo == Endo::I && !t.derivative;
    if (!bare && t.coeff == Polynomial(-1L)) {
        out = "-";
    } else if (!unit || bare) {
        bool compound = t.coeff.size() > 1;
        out += compound ? "(" + to_string(t.coeff) + ")" : to_string(t.coeff);
    }
    auto join = [&](const std::string& s) {
        if (!out.empty() && out != "-") out += "*";
        out += s;
    };
    switch (t.endo) {
        case Endo::E: join("π0(e)"); break;
        case Endo::H: join("π0(h)"); break;
        case Endo::F: join("π0(f)"); break;
        case Endo::I: break;
    }
    if (t.derivative) join("∂/∂" + to_string(*t.derivative));
    return out;
}

// ---------------------------------------------------------------------------
// RealizedOperator

int RealizedOperator::degree_shift() const { return gen_.is_loop() ? -gen_.mode : 0; }

const EndoPoly& RealizedOperator::zeroth() const { return owner_->zeroth(gen_); }

const EndoPoly& RealizedOperator::coefficient(VarRef v) const { return owner_->coefficient(gen_, v); }

VcsVector RealizedOperator::apply(const VcsVector& v) const { return owner_->apply(gen_, v); }

std::vector<OperatorTerm> RealizedOperator::terms(int max_index) const {
    std::vector<OperatorTerm> out;
    auto push_all = [&](const EndoPoly& e, std::optional<VarRef> der) {
        for (Endo endo : {Endo::I, Endo::E, Endo::H, Endo::F})
            if (!e[endo].is_zero()) out.push_back({e[endo], der, endo});
    };
    push_all(zeroth(), std::nullopt);
    for (int i = 1; i <= max_index; ++i)
        for (Family f : {Family::X, Family::Y, Family::Z}) push_all(coefficient(VarRef(f, i)), VarRef(f, i));
    return out;
}

// ---------------------------------------------------------------------------
// Realizer

namespace {

Polynomial x(int k) { return Polynomial::variable(xvar(k)); }
Polynomial y(int k) { return Polynomial::variable(yvar(k)); }
Polynomial z(int k) { return Polynomial::variable(zvar(k)); }

EndoPoly endo_only(Endo e, const Polynomial& p) {
    EndoPoly out;
    out[e] = p;
    return out;
}

EndoPoly scalar_only(const Polynomial& p) { return endo_only(Endo::I, p); }

Polynomial times_monomial(const Polynomial& p, const Monomial& m, const Scalar& s) {
    Polynomial out;
    for (const auto& [pm, pc] : p.terms()) out.add_term(pm * m, Scalar(pc * s));
    return out;
}

}  // namespace

Realizer::Realizer(int lambda, Scalar c, Scalar d0, Options opts)
    : rep_(lambda), c_(std::move(c)), d0_(std::move(d0)), opts_(opts) {}

const EndoPoly& Realizer::zeroth(const Generator& a) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = zeroth_memo_.find(a); it != zeroth_memo_.end()) return it->second;
    }
    EndoPoly value = compute_zeroth(a);
    std::unique_lock lock(mutex_);
    return zeroth_memo_.try_emplace(a, std::move(value)).first->second;
}

const EndoPoly& Realizer::coefficient(const Generator& a, VarRef v) const {
    auto key = std::make_pair(a, v);
    {
        std::shared_lock lock(mutex_);
        if (auto it = coeff_memo_.find(key); it != coeff_memo_.end()) return it->second;
    }
    EndoPoly value = compute_coefficient(a, v);
    std::unique_lock lock(mutex_);
    return coeff_memo_.try_emplace(key, std::move(value)).first->second;
}

const EndoPoly& Realizer::script_d_zeroth(int k) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = script_d_zeroth_memo_.find(k); it != script_d_zeroth_memo_.end()) return it->second;
    }
    // x_k (c k + pi0(h)) - sum_{p+q=k} x_p x_q pi0(e)
    EndoPoly value;
    value[Endo::I] = x(k) * Scalar(c_ * k);
    value[Endo::H] = x(k);
    for (int p = 1; p < k; ++p) value[Endo::E] -= x(p) * x(k - p);
    std::unique_lock lock(mutex_);
    return script_d_zeroth_memo_.try_emplace(k, std::move(value)).first->second;
}

const EndoPoly& Realizer::script_d_coefficient(int k, VarRef v) const {
    auto key = std::make_pair(k, v);
    {
        std::shared_lock lock(mutex_);
        if (auto it = script_d_coeff_memo_.find(key); it != script_d_coeff_memo_.end()) return it->second;
    }
    const int i = v.index;
    Polynomial p;
    switch (v.family) {
        case Family::Z:
            // - sum_N Z_{N+k}(2Y) d/dz_N
            p = -z_poly(i + k, 2);
            break;
        case Family::Y:
            // sum_p x_{p+k} d/dy_p
            p = x(i + k);
            break;
        case Family::X:
            // sum_{p,q} x_{p+k} x_q d/dx_{p+q}
            for (int q = 1; q < i; ++q) p += x(i - q + k) * x(q);
            // - sum_p sum_{q<=k} x_p x_q theta(p+q-k) d/dx_{p+q-k}
            for (int q = 1; q <= k; ++q) p -= x(i + k - q) * x(q);
            break;
    }
    EndoPoly value = scalar_only(p);
    std::unique_lock lock(mutex_);
    return script_d_coeff_memo_.try_emplace(key, std::move(value)).first->second;
}

Polynomial Realizer::h_minus_lead(int k) const {
    if (opts_.transcription == Transcription::Printed) return x(k) * Scalar(2);
    return Polynomial(2L);
}

EndoPoly Realizer::compute_zeroth(const Generator& a) const {
    const int n = a.mode;
    switch (a.family) {
        case GenFamily::Kappa: return scalar_only(Polynomial(c_));
        case GenFamily::D: return scalar_only(Polynomial(d0_));
        default: break;
    }
    if (n > 0) return {};
    if (n == 0) {
        Endo endo = a.family == GenFamily::E ? Endo::E : a.family == GenFamily::H ? Endo::H : Endo::F;
        return endo_only(endo, Polynomial(1L));
    }

    const int k = -n;
    EndoPoly out;
    switch (a.family) {
        case GenFamily::F: {
            // Z_k(-2Y) xi(f[0]) + sum_{t=1}^k Z_{k-t}(-2Y) D_t
            out = z_poly(k, -2) * zeroth(f_(0));
            for (int t = 1; t <= k; ++t) out += z_poly(k - t, -2) * script_d_zeroth(t);
            return out;
        }
        case GenFamily::H: {
            // 2 c k y_k - 2 x_k pi0(e) + 2 sum_{p=1}^k z_p xi(f[p-k])
            out[Endo::I] = y(k) * Scalar(2 * c_ * k);
            out[Endo::E] = x(k) * Scalar(-2);
            const Polynomial lead = h_minus_lead(k);
            for (int p = 1; p <= k; ++p) out += (lead * z(p)) * zeroth(f_(p - k));
            return out;
        }
        case GenFamily::E: {
            if (k == 1 && !opts_.general_block_for_e_minus_one) {
                // 2 y_1 pi0(e) + z_1 (c - pi0(h))
                out[Endo::E] = y(1) * Scalar(2);
                out[Endo::I] = z(1) * c_;
                out[Endo::H] = -z(1);
                return out;
            }
            return general_e_negative_zeroth(k);
        }
        default: break;
    }
    return out;
}

EndoPoly Realizer::general_e_negative_zeroth(int k) const {
    // c k z_k + Z_k(2Y) pi0(e) - sum_p z_p xi(h[p-k]) + sum_{p,q} z_p z_q xi(f[p+q-k])
    EndoPoly out;
    out[Endo::I] = z(k) * Scalar(c_ * k);
    out[Endo::E] = z_poly(k, 2);
    for (int p = 1; p <= k; ++p) out -= z(p) * zeroth(h_(p - k));
    for (int p = 1; p < k; ++p)
        for (int q = 1; p + q <= k; ++q) out += (z(p) * z(q)) * zeroth(f_(p + q - k));
    return out;
}

EndoPoly Realizer::compute_coefficient(const Generator& a, VarRef v) const {
    const int i = v.index;
    const Family fam = v.family;
    const int n = a.mode;

    switch (a.family) {
        case GenFamily::Kappa: return {};
        case GenFamily::D: return scalar_only(Polynomial::variable(v) * Scalar(-i));
        default: break;
    }

    if (a.family == GenFamily::F) {
        if (n > 0) return fam == Family::Z && i == n ? scalar_only(Polynomial(1L)) : EndoPoly{};
        if (n == 0) {
            // -sum_N Z_N(2Y) d/dz_N + sum_p [x_p d/dy_p + x_p sum_q x_q d/dx_{p+q}]
            Polynomial p;
            if (fam == Family::Z) p = -z_poly(i, 2);
            if (fam == Family::Y) p = x(i);
            if (fam == Family::X)
                for (int q = 1; q < i; ++q) p += x(i - q) * x(q);
            return scalar_only(p);
        }
        const int k = -n;
        EndoPoly out = z_poly(k, -2) * coefficient(f_(0), v);
        for (int t = 1; t <= k; ++t) out += z_poly(k - t, -2) * script_d_coefficient(t, v);
        return out;
    }

    if (a.family == GenFamily::H) {
        if (n > 0) {
            // d/dy_k + 2 sum_p z_p d/dz_{k+p}
            if (fam == Family::Y && i == n) return scalar_only(Polynomial(1L));
            if (fam == Family::Z && i > n) return scalar_only(z(i - n) * Scalar(2));
            return {};
        }
        if (n == 0) {
            // 2 sum_p [z_p d/dz_p - x_p d/dx_p]
            if (fam == Family::Z) return scalar_only(z(i) * Scalar(2));
            if (fam == Family::X) return scalar_only(x(i) * Scalar(-2));
            return {};
        }
        const int k = -n;
        // 2 sum_p [z_{k+p} d/dz_p - x_{k+p} d/dx_p] + 2 sum_{p=1}^k z_p xi(f[p-k])
        EndoPoly out;
        if (fam == Family::Z) out[Endo::I] = z(k + i) * Scalar(2);
        if (fam == Family::X) out[Endo::I] = x(k + i) * Scalar(-2);
        const Polynomial lead = h_minus_lead(k);
        for (int p = 1; p <= k; ++p) out += (lead * z(p)) * coefficient(f_(p - k), v);
        return out;
    }

    // e family
    if (n >= 0) {
        // d/dx_k + sum_N Z_N(2Y) d/dx_{k+N} - sum_p [z_p d/dy_{k+p} + z_p sum_q z_q d/dz_{k+p+q}]
        Polynomial p;
        if (fam == Family::X && i >= n) p = z_poly(i - n, 2);
        if (fam == Family::Y && i > n) p = -z(i - n);
        if (fam == Family::Z)
            for (int q = 1; q < i - n; ++q) p -= z(i - n - q) * z(q);
        return scalar_only(p);
    }
    const int k = -n;
    if (k == 1 && !opts_.general_block_for_e_minus_one) {
        // z_1 * 2 sum_p x_p d/dx_p + sum_N Z_{N+1}(2Y) d/dx_N
        //   - sum_p [z_{p+1} d/dy_p + z_p sum_q z_q d/dz_{p+q-1}]
        Polynomial p;
        if (fam == Family::X) p = z(1) * x(i) * Scalar(2) + z_poly(i + 1, 2);
        if (fam == Family::Y) p = -z(i + 1);
        if (fam == Family::Z)
            for (int q = 1; q <= i; ++q) p -= z(i + 1 - q) * z(q);
        return scalar_only(p);
    }
    return general_e_negative_coefficient(k, v);
}

EndoPoly Realizer::general_e_negative_coefficient(int k, VarRef v) const {
    const int i = v.index;
    EndoPoly out;
    // sum_N Z_{N+k}(2Y) d/dx_N
    if (v.family == Family::X) out[Endo::I] = z_poly(i + k, 2);
    // - xi(sigma_{-k} H(Z)) = - sum_p z_p xi(h[p-k]); h[m] with m > i has no d/dv term.
    for (int p = 1; p <= k + i; ++p) out -= z(p) * coefficient(h_(p - k), v);
    // + sum_{p,q} z_p z_q xi(f[p+q-k]); f[m] with m > i has no d/dv term.
    for (int p = 1; p < k + i; ++p)
        for (int q = 1; p + q <= k + i; ++q) out += (z(p) * z(q)) * coefficient(f_(p + q - k), v);
    return out;
}

const VcsVector& Realizer::apply_monomial(const Generator& a, const Monomial& m, int j) const {
    auto key = std::make_tuple(a, m, j);
    {
        std::shared_lock lock(mutex_);
        if (auto it = apply_memo_.find(key); it != apply_memo_.end()) return it->second;
    }

    VcsVector out(dim());
    auto accumulate = [&](const EndoPoly& coeff, const Monomial& base, const Scalar& factor) {
        for (Endo endo : {Endo::I, Endo::E, Endo::H, Endo::F}) {
            const Polynomial& p = coeff[endo];
            if (p.is_zero()) continue;
            for (const auto& [target, s] : rep_.apply_basis(endo, j))
                out[target] += times_monomial(p, base, Scalar(s * factor));
        }
    };
    accumulate(zeroth(a), m, 1);
    for (const auto& [v, e] : m.factors()) accumulate(coefficient(a, v), m.without_one(v), e);

    std::unique_lock lock(mutex_);
    return apply_memo_.try_emplace(std::move(key), std::move(out)).first->second;
}

VcsVector Realizer::apply(const Generator& a, const VcsVector& v) const {
    if (v.dim() != dim()) throw std::invalid_argument("VcsVector dimension does not match V0");
    VcsVector out(dim());
    for (int j = 0; j < dim(); ++j)
        for (const auto& [m, c] : v[j].terms()) {
            VcsVector part = apply_monomial(a, m, j);
            part *= c;
            out += part;
        }
    return out;
}

VcsVector Realizer::apply(const BracketResult& r, const VcsVector& v) const {
    VcsVector out(dim());
    for (const auto& [c, g] : r.terms) {
        VcsVector part = apply(g, v);
        part *= c;
        out += part;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphism check

namespace {

void extend_monomials(const std::vector<VarRef>& vars, std::size_t from, int remaining,
                      std::vector<Monomial::Factor>& cur, std::vector<Monomial>& out) {
    out.push_back(Monomial::from_factors(cur));
    for (std::size_t i = from; i < vars.size(); ++i) {
        if (vars[i].index > remaining) continue;
        if (!cur.empty() && cur.back().first == vars[i]) {
            ++cur.back().second;
            extend_monomials(vars, i, remaining - vars[i].index, cur, out);
            --cur.back().second;
        } else {
            cur.emplace_back(vars[i], 1);
            extend_monomials(vars, i, remaining - vars[i].index, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

std::vector<Monomial> monomials_up_to(int max_degree) {
    std::vector<VarRef> vars;
    for (int k = 1; k <= max_degree; ++k)
        for (Family f : {Family::X, Family::Y, Family::Z}) vars.emplace_back(f, k);
    std::sort(vars.begin(), vars.end());
    std::vector<Monomial> out;
    std::vector<Monomial::Factor> cur;
    extend_monomials(vars, 0, max_degree, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

CommutatorReport commutator_check(const Realizer& r, const Generator& a, const Generator& b, int max_degree) {
    CommutatorReport report{a, b, bracket(a, b), 0, {}};
    for (const auto& m : monomials_up_to(max_degree))
        for (int j = 0; j < r.dim(); ++j) {
            const VcsVector& base_b = r.apply_monomial(b, m, j);
            const VcsVector& base_a = r.apply_monomial(a, m, j);
            VcsVector lhs = r.apply(a, base_b) - r.apply(b, base_a);
            VcsVector rhs = r.apply(report.expected, VcsVector::basis(r.dim(), j, Polynomial(m)));
            ++report.checked;
            if (!(lhs == rhs)) report.failures.push_back({m, j, std::move(lhs), std::move(rhs)});
        }
    return report;
}

}  // namespace affvcs
