#include "affvcs/affine.hpp"

#include <cctype>
#include <stdexcept>

namespace affvcs {

int Generator::weight() const {
    switch (family) {
        case GenFamily::E: return 2;
        case GenFamily::F: return -2;
        default: return 0;
    }
}

Generator make_generator(GenFamily family, int mode) {
    if ((family == GenFamily::Kappa || family == GenFamily::D) && mode != 0)
        throw std::invalid_argument("kappa and d carry mode 0 only");
    return {family, mode};
}

std::string to_string(const Generator& g) {
    switch (g.family) {
        case GenFamily::Kappa: return "kappa";
        case GenFamily::D: return "d";
        case GenFamily::E: return "e[" + std::to_string(g.mode) + "]";
        case GenFamily::H: return "h[" + std::to_string(g.mode) + "]";
        case GenFamily::F: return "f[" + std::to_string(g.mode) + "]";
    }
    return "?";
}

Generator parse_generator(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text == "kappa") return kappa();
    if (text == "d") return grading();

    auto bad = [&] { return std::invalid_argument("cannot parse generator '" + std::string(text) + "'"); };
    if (text.size() < 4 || text[1] != '[' || text.back() != ']') throw bad();
    GenFamily fam;
    switch (text[0]) {
        case 'e': fam = GenFamily::E; break;
        case 'h': fam = GenFamily::H; break;
        case 'f': fam = GenFamily::F; break;
        default: throw bad();
    }
    std::string_view digits = text.substr(2, text.size() - 3);
    std::size_t i = 0;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) i = 1;
    if (i == digits.size()) throw bad();
    for (std::size_t k = i; k < digits.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(digits[k]))) throw bad();
    return {fam, std::stoi(std::string(digits))};
}

std::string to_string(const BracketResult& r) {
    if (r.terms.empty()) return "0";
    std::string out;
    for (const auto& [c, g] : r.terms) {
        if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) out += "-";
        Scalar mag = abs(c);
        if (mag != 1) out += mag.get_str() + "*";
        out += to_string(g);
    }
    return out;
}

namespace {

void push(BracketResult& r, const Scalar& c, const Generator& g) {
    if (!is_zero(c)) r.terms.emplace_back(c, g);
}

BracketResult negate(BracketResult r) {
    for (auto& [c, g] : r.terms) c = -c;
    return r;
}

// Brackets [a, b] of loop generators with a.family <= b.family in e < h < f.
BracketResult loop_bracket_ordered(const Generator& a, const Generator& b) {
    BracketResult r;
    const int m = a.mode;
    const int n = b.mode;
    using G = GenFamily;
    if (a.family == G::E && b.family == G::H) {
        // [e[m], h[n]] = -[h[n], e[m]] = -2 e[m+n]
        push(r, -2, e_(m + n));
    } else if (a.family == G::E && b.family == G::F) {
        push(r, 1, h_(m + n));
        if (m + n == 0) push(r, m, kappa());
    } else if (a.family == G::H && b.family == G::H) {
        if (m + n == 0) push(r, 2 * m, kappa());
    } else if (a.family == G::H && b.family == G::F) {
        push(r, -2, f_(m + n));
    }
    // [e,e] = [f,f] = 0
    return r;
}

}  // namespace

BracketResult bracket(const Generator& a, const Generator& b) {
    using G = GenFamily;
    if (a.family == G::Kappa || b.family == G::Kappa) return {};
    if (a.family == G::D && b.family == G::D) return {};
    if (a.family == G::D) {
        BracketResult r;
        push(r, b.mode, b);
        return r;
    }
    if (b.family == G::D) {
        BracketResult r;
        push(r, -a.mode, a);
        return r;
    }
    if (a.family <= b.family) return loop_bracket_ordered(a, b);
    return negate(loop_bracket_ordered(b, a));
}

Generator dagger(const Generator& a) {
    switch (a.family) {
        case GenFamily::Kappa: return a;
        case GenFamily::E: return f_(-a.mode);
        case GenFamily::F: return e_(-a.mode);
        case GenFamily::H: return h_(-a.mode);
        case GenFamily::D: break;
    }
    throw std::domain_error("the involution is not defined on d");
}

bool pbw_less(const Generator& a, const Generator& b) {
    if (!a.is_loop() || !b.is_loop() || a.mode >= 0 || b.mode >= 0)
        throw std::invalid_argument("pbw_less is defined on negative-mode generators only");
    if (a.mode != b.mode) return a.mode < b.mode;
    return a.family < b.family;
}

}  // namespace affvcs
