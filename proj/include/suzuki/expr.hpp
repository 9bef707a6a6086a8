// Parser and printer for monomial expressions in x, y, v, w over GF(2).
//
//   expr   := term ('+' term)*
//   term   := factor factor*
//   factor := var ('^' uint)?        var in {x, y, v, w}
//
// Whitespace-insensitive.  A monomial carries coefficient 1 iff it appears an
// odd number of times in the sum.

#ifndef SUZUKI_EXPR_HPP
#define SUZUKI_EXPR_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "suzuki/params.hpp"
#include "suzuki/rewrite.hpp"
#include "suzuki/tuples.hpp"

namespace suzuki {

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                             std::to_string(col_)),
          line(line_), column(col_) {}
};

class ExprParser {
public:
    explicit ExprParser(std::string text) : text_(std::move(text)) {}

    FFPoly parse() {
        FFPoly p = parse_term();
        skip_ws();
        while (!eof() && peek() == '+') {
            get();
            p = p + parse_term();
            skip_ws();
        }
        if (!eof())
            fail(std::string("unexpected character '") + peek() + "'");
        return p;
    }

private:
    std::string text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            get();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'v' || c == 'w'; }

    FFPoly parse_term() {
        skip_ws();
        if (eof() || !is_var(peek()))
            fail(eof() ? "expected a variable (one of x, y, v, w)"
                       : std::string("expected a variable, got '") + peek() + "'");
        ExponentTuple t{};
        while (true) {
            skip_ws();
            if (eof() || !is_var(peek()))
                break;
            char var = get();
            long long e = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                get();
                skip_ws();
                if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                    fail("expected an exponent after '^'");
                e = 0;
                while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                    e = e * 10 + (get() - '0');
                    if (e > (1LL << 40))
                        fail("exponent too large");
                }
            }
            switch (var) {
            case 'x': t.a += e; break;
            case 'y': t.b += e; break;
            case 'v': t.c += e; break;
            case 'w': t.d += e; break;
            }
        }
        FFPoly p;
        p.add_term(t, 1);
        return p;
    }
};

inline FFPoly parse_expr(const std::string& text) { return ExprParser(text).parse(); }

// Canonical printing: terms by descending pole order (leading term first),
// factors space-separated, exponents only when > 1, the empty monomial as 1.
inline std::string print_expr(const FFPoly& poly, const SuzukiParams& p) {
    if (poly.is_zero())
        return "0";
    std::vector<ExponentTuple> ts;
    for (const auto& [t, c] : poly.terms())
        ts.push_back(t);
    std::sort(ts.begin(), ts.end(), [&p](const ExponentTuple& s, const ExponentTuple& t) {
        long long ns = norm(s, p), nt = norm(t, p);
        if (ns != nt)
            return ns > nt;
        return t < s;
    });
    std::ostringstream out;
    bool first_term = true;
    for (const ExponentTuple& t : ts) {
        if (!first_term)
            out << " + ";
        first_term = false;
        if (t.coord_sum() == 0) {
            out << "1";
            continue;
        }
        const char* names = "xyvw";
        long long es[4] = {t.a, t.b, t.c, t.d};
        bool first_factor = true;
        for (int i = 0; i < 4; ++i) {
            if (es[i] == 0)
                continue;
            if (!first_factor)
                out << " ";
            first_factor = false;
            out << names[i];
            if (es[i] > 1)
                out << "^" << es[i];
        }
    }
    return out.str();
}

} // namespace suzuki

#endif
