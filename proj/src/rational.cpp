#include "hankel/rational.hpp"

namespace hankel {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(text.substr(0, slash), 10) != 0 || den.set_str(text.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("bad rational literal: " + text);
        return rat(num, den);
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad rational literal: " + text);
        mpz_class num;
        if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
        mpz_class den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return rat(num, den);
    }
    mpz_class num;
    if (num.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    return {Rational(num)};
}

std::string to_string(const GaussianRational& g) {
    if (g.is_real()) return to_string(g.re);
    std::string s = to_string(g.re);
    if (g.im > 0) s += " + " + to_string(g.im) + "i";
    else s += " - " + to_string(-g.im) + "i";
    return s;
}

}  // namespace hankel
