#ifndef GERMLAB_RATIONAL_HPP
#define GERMLAB_RATIONAL_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace germlab
{

// Exact coefficient field used by every algebraic module.
using rational = mpq_class;

// Raised for malformed user input (exit code 1 at the CLI).
class user_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an internal mathematical invariant fails (exit code 2 at the CLI).
class invariant_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

namespace detail
{

template <class C>
inline bool is_zero(const C &c)
{
    return c == 0;
}

inline bool is_zero(const rational &c)
{
    return ::sgn(c) == 0;
}

} // namespace detail

// Parses "3", "-3/2", "+7/4". Whitespace is not accepted inside the token.
inline rational parse_rational(std::string_view s)
{
    if (s.empty()) {
        throw user_error("empty rational literal");
    }
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        ++i;
    }
    const auto slash = s.find('/', i);
    auto digits_ok = [&](std::size_t b, std::size_t e) {
        if (b >= e) {
            return false;
        }
        for (auto j = b; j < e; ++j) {
            if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
                return false;
            }
        }
        return true;
    };
    const auto num_end = slash == std::string_view::npos ? s.size() : slash;
    if (!digits_ok(i, num_end) || (slash != std::string_view::npos && !digits_ok(slash + 1, s.size()))) {
        throw user_error("malformed rational literal '" + std::string(s) + "'");
    }
    mpz_class num(std::string(s.substr(i, num_end - i)), 10);
    mpz_class den(1);
    if (slash != std::string_view::npos) {
        den = mpz_class(std::string(s.substr(slash + 1)), 10);
        if (den == 0) {
            throw user_error("zero denominator in '" + std::string(s) + "'");
        }
    }
    rational r(num, den);
    r.canonicalize();
    return neg ? rational(-r) : r;
}

inline std::string to_string(const rational &r)
{
    return r.get_str();
}

inline double to_double(const rational &r)
{
    return r.get_d();
}

} // namespace germlab

#endif
