#include "affvcs/verma.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace affvcs {

int depth_of(const PbwMonomial& word) {
    int d = 0;
    for (const auto& g : word) d -= g.mode;
    return d;
}

std::string to_string(const PbwMonomial& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size();) {
        std::size_t k = i;
        while (k < word.size() && word[k] == word[i]) ++k;
        if (!out.empty()) out += ' ';
        out += to_string(word[i]);
        if (k - i > 1) out += "^" + std::to_string(k - i);
        i = k;
    }
    return out;
}

std::string to_string(const BasisKey& key) {
    std::string w = to_string(key.word);
    return (w.empty() ? "" : w + " ") + "w_" + std::to_string(key.j);
}

PbwMonomial canonical_word(PbwMonomial word) {
    for (const auto& g : word)
        if (!g.is_loop() || g.mode >= 0) throw std::invalid_argument("PBW words hold negative-mode generators only");
    std::sort(word.begin(), word.end(), [](const Generator& a, const Generator& b) { return pbw_less(a, b); });
    return word;
}

PbwMonomial parse_word(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    PbwMonomial word;
    while (in >> tok) {
        int power = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            power = std::stoi(tok.substr(caret + 1));
            tok = tok.substr(0, caret);
            if (power < 0) throw std::invalid_argument("negative power in word");
        }
        Generator g = parse_generator(tok);
        for (int i = 0; i < power; ++i) word.push_back(g);
    }
    return canonical_word(std::move(word));
}

// ---------------------------------------------------------------------------
// WVector

WVector::WVector(const BasisKey& key, const Scalar& coeff) {
    if (!affvcs::is_zero(coeff)) terms_.emplace(key, coeff);
}

Scalar WVector::coefficient(const BasisKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void WVector::add_term(const BasisKey& key, const Scalar& c) {
    if (affvcs::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (affvcs::is_zero(it->second)) terms_.erase(it);
    }
}

int WVector::max_depth() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, depth_of(k.word));
    return d;
}

WVector& WVector::operator+=(const WVector& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, c);
    return *this;
}

WVector& WVector::operator-=(const WVector& other) {
    for (const auto& [k, c] : other.terms_) add_term(k, -c);
    return *this;
}

WVector& WVector::operator*=(const Scalar& s) {
    if (affvcs::is_zero(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

std::string to_string(const WVector& w) {
    if (w.is_zero()) return "0";
    std::string out;
    for (const auto& [k, c] : w.terms()) {
        if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        Scalar mag = abs(c);
        if (mag != 1) out += mag.get_str() + "*";
        out += "(" + to_string(k) + ")";
    }
    return out;
}

// ---------------------------------------------------------------------------
// PBW enumeration

namespace {

// Negative-mode generators with |mode| <= depth, ascending in pbw_less.
std::vector<Generator> letters(int depth) {
    std::vector<Generator> out;
    for (int m = -depth; m <= -1; ++m)
        for (GenFamily f : {GenFamily::E, GenFamily::H, GenFamily::F}) out.push_back({f, m});
    return out;
}

void extend_words(const std::vector<Generator>& alphabet, std::size_t from, int remaining, PbwMonomial& cur,
                  std::vector<PbwMonomial>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < alphabet.size(); ++i) {
        int cost = -alphabet[i].mode;
        if (cost > remaining) continue;
        cur.push_back(alphabet[i]);
        extend_words(alphabet, i, remaining - cost, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<PbwMonomial> pbw_words(int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    std::vector<PbwMonomial> out;
    PbwMonomial cur;
    extend_words(letters(depth), 0, depth, cur, out);
    return out;
}

// ---------------------------------------------------------------------------
// VermaModule

VermaModule::VermaModule(int lambda, Scalar c) : rep_(lambda), c_(std::move(c)) {}

int VermaModule::weight_of(const BasisKey& key) const {
    int wt = rep_.weight(key.j);
    for (const auto& g : key.word) wt += g.weight();
    return wt;
}

WeightSpaceKey VermaModule::key_of(const BasisKey& key) const { return {weight_of(key), depth_of(key.word)}; }

WVector VermaModule::act(const Generator& a, const WVector& w) const {
    WVector out;
    for (const auto& [key, coeff] : w.terms()) {
        WVector part = act_basis(a, key);
        part *= coeff;
        out += part;
    }
    return out;
}

WVector VermaModule::act_basis(const Generator& a, const BasisKey& key) const {
    if (a.family == GenFamily::D) throw std::domain_error("d does not act on W here; use the depth grading");
    if (a.family == GenFamily::Kappa) return WVector(key, c_);

    auto memo_key = std::make_pair(a, key);
    {
        std::shared_lock lock(memo_mutex_);
        if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;
    }
    WVector result = act_uncached(a, key);
    std::unique_lock lock(memo_mutex_);
    memo_.emplace(std::move(memo_key), result);
    return result;
}

WVector VermaModule::act_uncached(const Generator& a, const BasisKey& key) const {
    if (key.word.empty()) {
        // Floor: V0 is a p-module with positive modes acting by zero.
        if (a.mode > 0) return {};
        if (a.mode < 0) return WVector(BasisKey{{a}, key.j});
        Endo endo = a.family == GenFamily::E ? Endo::E : a.family == GenFamily::H ? Endo::H : Endo::F;
        WVector out;
        for (const auto& [k, c] : rep_.apply_basis(endo, key.j)) out.add_term(BasisKey{{}, k}, c);
        return out;
    }

    const Generator& first = key.word.front();
    if (a.mode < 0 && !pbw_less(first, a)) {
        BasisKey out = key;
        out.word.insert(out.word.begin(), a);
        return WVector(out);
    }

    // a u rest = u (a rest) + [a, u] rest
    BasisKey rest{PbwMonomial(key.word.begin() + 1, key.word.end()), key.j};
    WVector result = act(first, act_basis(a, rest));
    for (const auto& [coeff, g] : bracket(a, first).terms) {
        WVector part = act_basis(g, rest);
        part *= coeff;
        result += part;
    }
    return result;
}

std::vector<BasisKey> VermaModule::weight_basis(const WeightSpaceKey& key) const {
    std::vector<BasisKey> out;
    if (key.depth < 0) return out;
    for (auto& word : pbw_words(key.depth)) {
        int wt = 0;
        for (const auto& g : word) wt += g.weight();
        for (int j = 0; j < rep_.dim(); ++j)
            if (wt + rep_.weight(j) == key.weight) out.push_back(BasisKey{word, j});
    }
    return out;
}

std::vector<WeightSpaceKey> VermaModule::keys_at_depth(int depth) const {
    std::vector<WeightSpaceKey> out;
    const int top = lambda() + 2 * depth;
    for (int wt = top; wt >= -top; wt -= 2) {
        WeightSpaceKey k{wt, depth};
        if (!weight_basis(k).empty()) out.push_back(k);
    }
    return out;
}

Scalar VermaModule::form_basis(const BasisKey& b, const WVector& w) const {
    // <u_1 ... u_r w_j | y> = <w_j | u_r^+ ... u_1^+ y>
    WVector cur = w;
    for (const auto& g : b.word) {
        cur = act(dagger(g), cur);
        if (cur.is_zero()) return 0;
    }
    return cur.coefficient(BasisKey{{}, b.j}) * rep_.gram_diag()[b.j];
}

Scalar VermaModule::contravariant_form(const WVector& w1, const WVector& w2) const {
    Scalar s = 0;
    for (const auto& [key, coeff] : w1.terms()) s += coeff * form_basis(key, w2);
    return s;
}

Matrix VermaModule::gram_matrix(const WeightSpaceKey& key) const {
    auto basis = weight_basis(key);
    Matrix g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t k = 0; k < basis.size(); ++k) g(i, k) = form_basis(basis[i], WVector(basis[k]));
    return g;
}

std::size_t VermaModule::gram_rank(const WeightSpaceKey& key) const { return bareiss_rank(gram_matrix(key)); }

std::vector<WVector> VermaModule::singular_vectors(const WeightSpaceKey& key) const {
    auto basis = weight_basis(key);
    std::vector<WVector> out;
    for (const auto& v : nullspace(gram_matrix(key))) {
        WVector w;
        for (std::size_t i = 0; i < basis.size(); ++i) w.add_term(basis[i], v[i]);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<CharacterRow> VermaModule::character_table(int max_depth, unsigned jobs, std::size_t cap) const {
    if (max_depth < 0) throw std::invalid_argument("depth must be >= 0");
    std::vector<CharacterRow> rows;
    for (int d = 0; d <= max_depth; ++d)
        for (const auto& k : keys_at_depth(d)) {
            CharacterRow row;
            row.key = k;
            row.dim_w = weight_basis(k).size();
            if (row.dim_w > cap)
                throw std::length_error("weight space (" + std::to_string(k.weight) + ", " + std::to_string(k.depth) +
                                        ") has dimension " + std::to_string(row.dim_w) + " above the cap");
            rows.push_back(row);
        }

    detail::parallel_for(rows.size(), jobs, [&](std::size_t i) { rows[i].rank = gram_rank(rows[i].key); });
    return rows;
}

}  // namespace affvcs
