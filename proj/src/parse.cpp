#include "pickspace/parse.hpp"

#include <cctype>
#include <cstdlib>

namespace pickspace {

namespace {

class Parser {
public:
    Parser(const std::string& text, int dim) : text_(text), dim_(dim) {}

    Polynomial run() {
        Polynomial p = parse_sum();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(line, col, msg);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_factor(char c) const {
        return c == '(' || c == 'i' || c == 'z' || std::isdigit(static_cast<unsigned char>(c)) ||
               c == '.';
    }

    Polynomial parse_sum() {
        Polynomial acc = Polynomial::zero(dim_);
        bool first = true;
        while (true) {
            skip_ws();
            double sign = 1.0;
            char c = peek();
            if (c == '+' || c == '-') {
                sign = (c == '-') ? -1.0 : 1.0;
                ++pos_;
            } else if (!first) {
                break;
            }
            if (!starts_factor(peek())) fail("expected a term");
            acc = acc + parse_term() * Complex(sign);
            first = false;
            c = peek();
            if (c != '+' && c != '-') break;
        }
        return acc;
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                if (!starts_factor(peek())) fail("expected a factor after '*'");
                acc = poly_mul(acc, parse_factor());
            } else if (c == '/') {
                ++pos_;
                skip_ws();
                const Polynomial div = parse_factor();
                if (div.degree() > 0) fail("division is only defined by a numeric constant");
                const Complex v = div.coeff(MultiIndex::zero(dim_));
                if (v == Complex(0.0)) fail("division by zero");
                acc = acc * (Complex(1.0) / v);
            } else if (starts_factor(c)) {
                acc = poly_mul(acc, parse_factor());  // juxtaposition
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
            const int e = static_cast<int>(parse_uint());
            base = poly_pow(base, e);
        }
        return base;
    }

    Polynomial parse_primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial p = parse_sum();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'i') {
            ++pos_;
            return Polynomial::constant(dim_, Complex(0.0, 1.0));
        }
        if (c == 'z') {
            ++pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a coordinate index after 'z'");
            const long idx = parse_uint();
            if (idx < 1 || idx > dim_)
                fail("coordinate z" + std::to_string(idx) + " out of range for dimension " +
                     std::to_string(dim_));
            return Polynomial::coordinate(dim_, static_cast<int>(idx - 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const double v = parse_number();
            if (peek() == 'i') {
                ++pos_;
                return Polynomial::constant(dim_, Complex(0.0, v));
            }
            return Polynomial::constant(dim_, Complex(v, 0.0));
        }
        fail("expected a number, 'i', a coordinate, or '('");
    }

    long parse_uint() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return std::strtol(text_.substr(start, pos_ - start).c_str(), nullptr, 10);
    }

    double parse_number() {
        skip_ws();
        std::size_t start = pos_;
        bool saw_digit = false;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
            saw_digit = saw_digit || std::isdigit(static_cast<unsigned char>(text_[pos_]));
            ++pos_;
        }
        if (!saw_digit) fail("expected a number");
        // exponent part
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            } else {
                pos_ = save;  // not an exponent, leave for the caller
            }
        }
        if (pos_ == start) fail("expected a number");
        return std::strtod(text_.substr(start, pos_ - start).c_str(), nullptr);
    }

    const std::string& text_;
    int dim_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int dim) {
    if (dim < 1) throw std::invalid_argument("parse_polynomial: dimension must be >= 1");
    return Parser(text, dim).run();
}

}  // namespace pickspace
