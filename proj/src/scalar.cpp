#include "affvcs/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace affvcs {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!den.empty() && (den.front() == '-' || den.front() == '+'))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    if (num.front() == '+') num.remove_prefix(1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");

    Scalar out(n, d);
    out.canonicalize();
    return out;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace affvcs
