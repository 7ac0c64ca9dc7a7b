#include "gmact/rational.hpp"
#include "gmact/errors.hpp"

namespace gmact {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw input_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rational_from_string(const std::string& text) {
    if (text.empty())
        throw input_error("empty rational literal");
    auto check_digits = [&](const std::string& s) {
        if (s.empty())
            throw input_error("malformed rational literal: '" + text + "'");
        size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size())
            throw input_error("malformed rational literal: '" + text + "'");
        for (size_t i = start; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i])))
                throw input_error("malformed rational literal: '" + text + "'");
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        check_digits(text);
        return Rational(Integer(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_digits(num);
    check_digits(den);
    return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_pow(const Rational& base, long exp) {
    if (exp == 0)
        return Rational(1);
    if (exp < 0) {
        if (base == 0)
            throw input_error("negative power of zero");
        Rational inv = Rational(1) / base;
        return rational_pow(inv, -exp);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
    // num/den already coprime, so the powers are too
    return out;
}

} // namespace gmact
