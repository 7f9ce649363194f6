#include "distblock/rational.hpp"

#include <cctype>

namespace distblock {

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw Error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw Error("reciprocal of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InvalidSpecError("empty rational literal");

    // explicit base 10: GMP's base auto-detection would read a leading
    // zero (e.g. the digits of "0.125") as octal
    auto parse_int = [&s](const std::string& digits) {
        try {
            return Int(digits, 10);
        } catch (const std::invalid_argument&) {
            throw InvalidSpecError("bad rational literal: " + s);
        }
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

    if (auto dot = s.find('.'); dot != std::string::npos) {
        // Exact decimal: digits after the dot become a power-of-ten denominator.
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        std::size_t frac_len = s.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw InvalidSpecError("bad rational literal: " + s);
        Int den = 1;
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        return Rational(parse_int(digits), den);
    }

    return Rational(parse_int(s));
}

}  // namespace distblock
