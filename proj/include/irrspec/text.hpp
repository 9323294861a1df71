#ifndef IRRSPEC_TEXT_HPP
#define IRRSPEC_TEXT_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bipoly.hpp"
#include "error.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "poly.hpp"

// Text format for field elements and polynomials.
//
//   element   prime field: decimal integer in [0, p)
//             extension:   [c0,c1,...,c_{k-1}] coordinates over F_p
//   term      coeff*X^e*T^i, coefficient 1 and exponent 1 omitted
//   poly      terms joined by '+', X-power descending then T-power descending;
//             the zero polynomial prints as 0
//
// The parser also accepts '-', spaces, any factor order and integers outside
// [0, p) (reduced mod p).

namespace irrspec {

/// Parses "p^k" (or a bare prime "p").
inline FieldCtx parse_field(std::string_view spec) {
    auto num = [&](std::string_view s) -> std::uint64_t {
        if (s.empty()) fail(Errc::ParseError, "bad field spec '" + std::string(spec) + "'");
        std::uint64_t v = 0;
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) fail(Errc::ParseError, "bad field spec '" + std::string(spec) + "'");
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
            if (v > (1ULL << 40)) fail(Errc::Overflow, "field spec number too large");
        }
        return v;
    };
    const auto caret = spec.find('^');
    if (caret == std::string_view::npos) return FieldCtx::create(num(spec), 1);
    return FieldCtx::create(num(spec.substr(0, caret)), static_cast<unsigned>(num(spec.substr(caret + 1))));
}

inline std::string format_elem(const FieldCtx& ctx, FieldElem a) {
    if (ctx.is_prime_field()) return std::to_string(a.v);
    std::string s = "[";
    const auto c = ctx.coords(a);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s + "]";
}

namespace detail {

inline std::string format_term(const FieldCtx& ctx, FieldElem c, std::size_t ex, std::size_t et) {
    std::string body;
    auto add_var = [&](char v, std::size_t e) {
        if (e == 0) return;
        if (!body.empty()) body += '*';
        body += v;
        if (e > 1) body += '^' + std::to_string(e);
    };
    add_var('X', ex);
    add_var('T', et);
    if (body.empty()) return format_elem(ctx, c);
    if (c == ctx.one()) return body;
    return format_elem(ctx, c) + "*" + body;
}

struct Monomial {
    FieldElem coeff;
    std::size_t ex = 0;
    std::size_t et = 0;
};

class TermParser {
   public:
    TermParser(const FieldCtx& ctx, std::string_view text) : ctx_(ctx), text_(text) {}

    std::vector<Monomial> parse() {
        std::vector<Monomial> out;
        skip_ws();
        if (pos_ == text_.size()) fail(Errc::ParseError, "empty polynomial");
        bool negate = false;
        if (peek() == '-' || peek() == '+') negate = get() == '-';
        for (;;) {
            Monomial m = term();
            if (negate) m.coeff = ctx_.neg(m.coeff);
            out.push_back(m);
            skip_ws();
            if (pos_ == text_.size()) break;
            const char op = get();
            if (op != '+' && op != '-') error("expected '+' or '-'");
            negate = op == '-';
        }
        return out;
    }

   private:
    Monomial term() {
        Monomial m{ctx_.one()};
        bool any = false;
        for (;;) {
            skip_ws();
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                m.coeff = ctx_.mul(m.coeff, integer_elem());
            } else if (c == '[') {
                m.coeff = ctx_.mul(m.coeff, coord_elem());
            } else if (c == 'X' || c == 'x' || c == 'T' || c == 't') {
                ++pos_;
                std::size_t e = 1;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    e = static_cast<std::size_t>(number());
                }
                ((c == 'X' || c == 'x') ? m.ex : m.et) += e;
            } else {
                error("expected a coefficient or variable");
            }
            any = true;
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
        }
        if (!any) error("empty term");
        return m;
    }

    std::uint64_t number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected a number");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(get() - '0');
            if (v > (1ULL << 40)) error("number too large");
        }
        return v;
    }

    FieldElem integer_elem() { return ctx_.from_int(static_cast<std::int64_t>(number() % ctx_.p())); }

    FieldElem coord_elem() {
        ++pos_;
        std::vector<std::uint64_t> coords;
        for (;;) {
            skip_ws();
            coords.push_back(number() % ctx_.p());
            skip_ws();
            const char c = get();
            if (c == ']') break;
            if (c != ',') error("expected ',' or ']'");
        }
        if (coords.size() > ctx_.k()) error("too many coordinates");
        return ctx_.from_coords(coords);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
    [[noreturn]] void error(const std::string& what) const {
        fail(Errc::ParseError, what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    const FieldCtx& ctx_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline FieldElem parse_elem(const FieldCtx& ctx, std::string_view text) {
    const auto terms = detail::TermParser(ctx, text).parse();
    FieldElem r = ctx.zero();
    for (const auto& m : terms) {
        if (m.ex || m.et) fail(Errc::ParseError, "field element may not contain variables");
        r = ctx.add(r, m.coeff);
    }
    return r;
}

/// Univariate polynomial; `var` names the variable printed ('X' or 'T').
inline std::string format_poly(const Poly& f, char var = 'X') {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f.coeff(i).v == 0) continue;
        if (!s.empty()) s += '+';
        s += var == 'T' ? detail::format_term(f.ctx(), f.coeff(i), 0, i) : detail::format_term(f.ctx(), f.coeff(i), i, 0);
    }
    return s;
}

inline std::string format_bipoly(const BiPoly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t j = f.size(); j-- > 0;) {
        const Poly c = f.coeff(j);
        for (std::size_t i = c.size(); i-- > 0;) {
            if (c.coeff(i).v == 0) continue;
            if (!s.empty()) s += '+';
            s += detail::format_term(f.ctx(), c.coeff(i), j, i);
        }
    }
    return s;
}

inline BiPoly parse_bipoly(const FieldCtx& ctx, std::string_view text) {
    const auto terms = detail::TermParser(ctx, text).parse();
    std::size_t max_x = 0, max_t = 0;
    for (const auto& m : terms) {
        max_x = std::max(max_x, m.ex);
        max_t = std::max(max_t, m.et);
    }
    std::vector<std::vector<FieldElem>> grid(max_x + 1, std::vector<FieldElem>(max_t + 1, ctx.zero()));
    for (const auto& m : terms) grid[m.ex][m.et] = ctx.add(grid[m.ex][m.et], m.coeff);
    std::vector<Poly> coeffs;
    for (auto& row : grid) coeffs.emplace_back(ctx, std::move(row));
    return BiPoly(ctx, std::move(coeffs));
}

/// Univariate polynomial in `var`; the other variable may not appear.
inline Poly parse_poly(const FieldCtx& ctx, std::string_view text, char var = 'X') {
    const auto terms = detail::TermParser(ctx, text).parse();
    std::size_t top = 0;
    for (const auto& m : terms) {
        if (var == 'X' ? m.et : m.ex) fail(Errc::ParseError, std::string("unexpected variable in polynomial in ") + var);
        top = std::max(top, var == 'X' ? m.ex : m.et);
    }
    std::vector<FieldElem> c(top + 1, ctx.zero());
    for (const auto& m : terms) {
        auto& slot = c[var == 'X' ? m.ex : m.et];
        slot = ctx.add(slot, m.coeff);
    }
    return Poly(ctx, std::move(c));
}

/// Rows separated by ';', entries by spaces or commas outside brackets.
inline Matrix parse_matrix(const FieldCtx& ctx, std::string_view text) {
    std::vector<std::vector<FieldElem>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find(';', start), text.size());
        const std::string_view row = text.substr(start, end - start);
        std::vector<FieldElem> entries;
        std::string token;
        int depth = 0;
        auto flush = [&] {
            if (!token.empty()) entries.push_back(parse_elem(ctx, token));
            token.clear();
        };
        for (char c : row) {
            if (c == '[') ++depth;
            if (c == ']') --depth;
            if (depth == 0 && (c == ',' || std::isspace(static_cast<unsigned char>(c))))
                flush();
            else
                token += c;
        }
        flush();
        if (!entries.empty()) rows.push_back(std::move(entries));
        start = end + 1;
    }
    const std::size_t n = rows.size();
    if (n == 0) fail(Errc::ParseError, "empty matrix");
    Matrix m(ctx, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) fail(Errc::ParseError, "matrix must be square");
        for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline std::string format_matrix(const Matrix& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ';';
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) s += ' ';
            s += format_elem(m.ctx(), m(i, j));
        }
    }
    return s;
}

}  // namespace irrspec

#endif  // IRRSPEC_TEXT_HPP
