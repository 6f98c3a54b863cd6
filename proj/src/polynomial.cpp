#include "affvcs/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace affvcs {

char family_letter(Family f) {
    switch (f) {
        case Family::X: return 'x';
        case Family::Y: return 'y';
        case Family::Z: return 'z';
    }
    return '?';
}

VarRef::VarRef(Family f, int k) : family(f), index(k) {
    if (k < 1) throw std::invalid_argument("variable index must be >= 1");
}

std::string to_string(const VarRef& v) {
    return std::string(1, family_letter(v.family)) + "_" + std::to_string(v.index);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(VarRef v, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    if (exponent > 0) {
        factors_.emplace_back(v, exponent);
        degree_ = v.index * exponent;
    }
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (auto& [v, e] : factors) {
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(v, e);
        m.degree_ += v.index * e;
    }
    return m;
}

int Monomial::exponent(VarRef v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, const VarRef& key) { return f.first < key; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

int Monomial::family_count(Family f) const {
    int n = 0;
    for (const auto& [v, e] : factors_)
        if (v.family == f) n += e;
    return n;
}

int Monomial::max_index() const {
    int k = 0;
    for (const auto& [v, e] : factors_) k = std::max(k, v.index);
    return k;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

Monomial Monomial::without_one(VarRef v) const {
    Monomial out = *this;
    auto it = std::find_if(out.factors_.begin(), out.factors_.end(),
                           [&](const Factor& f) { return f.first == v; });
    if (it == out.factors_.end()) throw std::logic_error("variable not present in monomial");
    if (--it->second == 0) out.factors_.erase(it);
    out.degree_ -= v.index;
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = degree_ <=> other.degree_; c != 0) return c;
    return factors_ <=> other.factors_;
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty()) out += '*';
        out += to_string(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

int degree_of(const Monomial& m) { return m.degree(); }

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Scalar& constant) {
    if (!affvcs::is_zero(constant)) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const Scalar& coeff) {
    if (!affvcs::is_zero(coeff)) terms_.emplace(m, coeff);
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (affvcs::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (affvcs::is_zero(it->second)) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& s) {
    if (affvcs::is_zero(s)) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, Scalar(ca * cb));
    return out;
}

std::pair<int, int> Polynomial::degree_range() const {
    if (terms_.empty()) return {0, -1};
    // Map order is graded, so the extremes are the first and last keys.
    return {terms_.begin()->first.degree(), terms_.rbegin()->first.degree()};
}

bool Polynomial::is_homogeneous() const {
    auto [lo, hi] = degree_range();
    return lo == hi || terms_.empty();
}

int Polynomial::max_index() const {
    int k = 0;
    for (const auto& [m, c] : terms_) k = std::max(k, m.max_index());
    return k;
}

Polynomial Polynomial::scale_family(Family f, const Scalar& s) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Scalar factor = 1;
        for (const auto& [v, e] : m.factors()) {
            if (v.family != f) continue;
            for (int i = 0; i < e; ++i) factor *= s;
        }
        out.add_term(m, Scalar(c * factor));
    }
    return out;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial partial(VarRef v, const Polynomial& p) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        out.add_term(m.without_one(v), Scalar(c * e));
    }
    return out;
}

Polynomial truncate(const Polynomial& p, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
    Polynomial out;
    for (const auto& [m, c] : p.terms())
        if (m.degree() <= max_degree) out.add_term(m, c);
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        Scalar mag = abs(c);
        if (out.empty()) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += to_string(m);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser for the to_string format. Accepts optional whitespace.

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view s) : s_(s) {}

    Polynomial parse() {
        Polynomial out;
        skip_ws();
        if (at_end()) fail("empty input");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [m, c] = term();
            out.add_term(m, Scalar(c * sign));
            skip_ws();
        }
        return out;
    }

private:
    std::pair<Monomial, Scalar> term() {
        Scalar coeff = 1;
        std::vector<Monomial::Factor> factors;
        bool have_factor = false;
        while (true) {
            skip_ws();
            if (at_end()) fail("dangling term");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= number();
            } else if (peek() == 'x' || peek() == 'y' || peek() == 'z') {
                factors.push_back(variable());
            } else {
                fail("unexpected character");
            }
            have_factor = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!have_factor) fail("empty term");
        return {Monomial::from_factors(std::move(factors)), coeff};
    }

    Scalar number() {
        std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
        return parse_scalar(s_.substr(start, pos_ - start));
    }

    int integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stoi(std::string(s_.substr(start, pos_ - start)));
    }

    Monomial::Factor variable() {
        Family f = peek() == 'x' ? Family::X : peek() == 'y' ? Family::Y : Family::Z;
        ++pos_;
        if (at_end() || peek() != '_') fail("expected '_' after variable letter");
        ++pos_;
        int index = integer();
        int exponent = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            exponent = integer();
        }
        return {VarRef(f, index), exponent};
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const char* what) const {
        std::ostringstream os;
        os << "polynomial parse error at offset " << pos_ << ": " << what;
        throw std::invalid_argument(os.str());
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    if (t == "0") return {};
    return PolyParser(text).parse();
}

}  // namespace affvcs
