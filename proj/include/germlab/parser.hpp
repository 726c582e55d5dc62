#ifndef GERMLAB_PARSER_HPP
#define GERMLAB_PARSER_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include <germlab/jet.hpp>
#include <germlab/rational.hpp>

namespace germlab
{

// Parse failure with a 1-based column into the offending string.
class parse_error : public user_error
{
public:
    parse_error(const std::string &what, std::size_t column)
        : user_error(what + " at column " + std::to_string(column)), column_(column)
    {
    }

    std::size_t column() const
    {
        return column_;
    }

private:
    std::size_t column_;
};

namespace detail
{

// Grammar:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | var ['^' int]
//   var    := ('x'|'y') int          (1-based index)
// Whitespace is ignored everywhere.
class poly_parser
{
public:
    poly_parser(std::string_view src, unsigned n, unsigned order) : src_(src), n_(n), order_(order)
    {
    }

    jet_poly parse()
    {
        jet_poly out(n_, order_);
        skip_ws();
        if (at_end()) {
            throw parse_error("empty polynomial", col());
        }
        bool first = true;
        while (!at_end()) {
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw parse_error("expected '+' or '-'", col());
            }
            auto [m, c] = parse_term();
            out.add_term(m, neg ? rational(-c) : c);
            first = false;
            skip_ws();
        }
        return out;
    }

private:
    std::pair<monomial, rational> parse_term()
    {
        monomial m(n_);
        rational c(1);
        parse_factor(m, c);
        skip_ws();
        while (!at_end() && peek() == '*') {
            ++pos_;
            skip_ws();
            parse_factor(m, c);
            skip_ws();
        }
        return {m, c};
    }

    void parse_factor(monomial &m, rational &c)
    {
        if (at_end()) {
            throw parse_error("unexpected end of input", col());
        }
        const char ch = peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            const auto start = pos_;
            read_digits();
            if (!at_end() && peek() == '/') {
                ++pos_;
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                    throw parse_error("expected denominator", col());
                }
                read_digits();
            }
            c *= parse_rational(src_.substr(start, pos_ - start));
            return;
        }
        if (ch == 'x' || ch == 'y') {
            const auto var_col = col();
            ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                throw parse_error("expected variable index after '" + std::string(1, ch) + "'", col());
            }
            const auto idx = read_uint();
            if (idx < 1 || idx > n_) {
                throw parse_error("variable " + std::string(1, ch) + std::to_string(idx) + " out of range 1.."
                                      + std::to_string(n_),
                                  var_col);
            }
            skip_ws();
            unsigned e = 1;
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                    throw parse_error("expected exponent", col());
                }
                e = read_uint();
                if (e < 1) {
                    throw parse_error("exponent must be >= 1", col());
                }
            }
            m.set(idx - 1, m[idx - 1] + e);
            return;
        }
        throw parse_error(std::string("unexpected character '") + ch + "'", col());
    }

    void read_digits()
    {
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    unsigned read_uint()
    {
        const auto start = pos_;
        read_digits();
        const auto digits = src_.substr(start, pos_ - start);
        if (digits.size() > 6) {
            throw parse_error("integer too large", start + 1);
        }
        return static_cast<unsigned>(std::stoul(std::string(digits)));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
    }

    bool at_end() const
    {
        return pos_ >= src_.size();
    }

    char peek() const
    {
        return src_[pos_];
    }

    std::size_t col() const
    {
        return pos_ + 1;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    unsigned n_;
    unsigned order_;
};

} // namespace detail

// Parses a polynomial in x1..xn (or y1..yn) and truncates it at the given order.
inline jet_poly parse_jet(std::string_view text, unsigned n, unsigned order)
{
    return detail::poly_parser(text, n, order).parse();
}

} // namespace germlab

#endif
