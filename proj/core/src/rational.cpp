#include "qordkit/rational.hpp"

#include <numeric>

#include "qordkit/error.hpp"

namespace qordkit {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    if (text.empty()) {
        throw ValidationError("empty rational literal");
    }
    auto valid_int = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                return false;
            }
        }
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
        throw ValidationError("malformed rational literal '" + std::string(text) + "'");
    }
    auto strip_plus = [](std::string_view s) { return std::string(s[0] == '+' ? s.substr(1) : s); };
    return make_rational(Integer(strip_plus(num)), Integer(strip_plus(den)));
}

std::string to_string(const Rational& q)
{
    return q.get_str();
}

std::string to_string(const Integer& z)
{
    return z.get_str();
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

long long lcm(long long a, long long b)
{
    if (a == 0 || b == 0) {
        return 0;
    }
    return std::lcm(a, b);
}

} // namespace qordkit
