#include "gdasp/rational.hpp"

namespace gdasp {

std::optional<rational> rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        // exact decimal: shift the point away and divide by the matching power of ten
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        size_t frac_len = s.size() - dot - 1;
        if (frac_len == 0 || digits.empty()) return std::nullopt;
        for (size_t i = (digits[0] == '-' ? 1 : 0); i < digits.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(digits[i]))) return std::nullopt;
        mpz_class num(digits, 10);
        mpz_class den = 1;
        for (size_t i = 0; i < frac_len; ++i) den *= 10;
        mpq_class q(num, den);
        q.canonicalize();
        return rational(q);
    }
    try {
        mpq_class q(s, 10);
        if (q.get_den() == 0) return std::nullopt;
        q.canonicalize();
        return rational(q);
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

rational rational::pow(unsigned e) const {
    rational acc(1);
    rational base = *this;
    while (e) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string rational::str() const {
    return q_.get_str();
}

}  // namespace gdasp
