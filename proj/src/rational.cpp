#include "ctrace/rational.hpp"

#include "ctrace/errors.hpp"

#include <cctype>
#include <ostream>

namespace ctrace::qlinalg {

namespace {

void require_nonzero_den(const mpz_class& den) {
    if (den == 0)
        throw InputError("rational denominator must be nonzero");
}

} // namespace

Rational::Rational(long num, long den) : value_() {
    require_nonzero_den(mpz_class(den));
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_() {
    require_nonzero_den(den);
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin])))
        ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1])))
        --end;
    const std::string body = text.substr(begin, end - begin);

    auto is_integer_literal = [](const std::string& s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };

    const std::size_t slash = body.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_literal(body))
            throw ParseError("not a rational literal: \"" + text + "\"");
        return Rational(mpz_class(body), mpz_class(1));
    }
    const std::string num = body.substr(0, slash);
    const std::string den = body.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw ParseError("not a rational literal: \"" + text + "\"");
    mpz_class d(den);
    if (d == 0)
        throw ParseError("zero denominator in rational literal: \"" + text + "\"");
    return Rational(mpz_class(num), d);
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-value_));
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.is_zero())
        throw InputError("division by zero rational");
    value_ /= other.value_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

std::string Rational::str() const {
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace ctrace::qlinalg
