/*
   Copyright 2026 linpoly contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "linpoly/textio.hpp"

#include <cctype>
#include <map>

#include "linpoly/field_impl.hpp"

namespace linpoly {

// ---------------------------------------------------------------------------
// tokenizer

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, lbracket, rbracket, end };

struct Token {
    Tok kind;
    u64 number = 0;
    std::string text;
    std::size_t pos = 0;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) throw ParseError("expected " + what, cur_.pos);
        return take();
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        cur_ = Token{Tok::end, 0, "", i_};
        if (i_ >= s_.size()) return;
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            u64 v = 0;
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
                u64 d = u64(s_[i_] - '0');
                if (v > (UINT64_MAX - d) / 10) throw ParseError("integer literal too large", start);
                v = v * 10 + d;
                ++i_;
            }
            cur_ = Token{Tok::number, v, s_.substr(start, i_ - start), start};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
                ++i_;
            cur_ = Token{Tok::ident, 0, s_.substr(start, i_ - start), start};
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::plus; break;
            case '-': k = Tok::minus; break;
            case '*': k = Tok::star; break;
            case '/': k = Tok::slash; break;
            case '^': k = Tok::caret; break;
            case '(': k = Tok::lparen; break;
            case ')': k = Tok::rparen; break;
            case '[': k = Tok::lbracket; break;
            case ']': k = Tok::rbracket; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i_);
        }
        cur_ = Token{k, 0, std::string(1, c), i_};
        ++i_;
    }

    const std::string& s_;
    std::size_t i_ = 0;
    Token cur_;
};

// ---------------------------------------------------------------------------
// expression parser over Poly<K> values

template <class K>
class ExprParser {
public:
    ExprParser(Lexer& lex, std::map<std::string, Poly<K>> symbols, K one)
        : lex_(lex), symbols_(std::move(symbols)), one_(std::move(one)) {}

    Poly<K> parse_expr() {
        Poly<K> v = parse_term();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            Token op = lex_.take();
            Poly<K> rhs = parse_term();
            v = op.kind == Tok::plus ? v + rhs : v - rhs;
        }
        return v;
    }

private:
    Poly<K> parse_term() {
        Poly<K> v = parse_unary();
        while (lex_.peek().kind == Tok::star || lex_.peek().kind == Tok::slash) {
            Token op = lex_.take();
            Poly<K> rhs = parse_unary();
            if (op.kind == Tok::star) {
                v = v * rhs;
            } else {
                if (rhs.deg() > 0)
                    throw ParseError("division is only supported by coefficient constants", op.pos);
                if (rhs.is_zero()) throw ParseError("division by zero", op.pos);
                v = (one_ / rhs[0]) * v;
            }
        }
        return v;
    }

    Poly<K> parse_unary() {
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            return -parse_unary();
        }
        return parse_primary();
    }

    Poly<K> parse_primary() {
        Token t = lex_.take();
        Poly<K> v;
        switch (t.kind) {
            case Tok::number: {
                K c = one_.zero();
                u64 reduced = t.number % characteristic_of(one_);
                for (u64 i = 0; i < reduced; ++i) c += one_;
                v = Poly<K>::constant(c);
                break;
            }
            case Tok::ident: {
                auto it = symbols_.find(t.text);
                if (it == symbols_.end()) throw ParseError("unknown symbol '" + t.text + "'", t.pos);
                v = it->second;
                break;
            }
            case Tok::lparen: {
                v = parse_expr();
                lex_.expect(Tok::rparen, "')'");
                break;
            }
            default:
                throw ParseError("expected a number, symbol or '('", t.pos);
        }
        if (lex_.peek().kind == Tok::caret) {
            lex_.take();
            Token e = lex_.expect(Tok::number, "a nonnegative integer exponent");
            Poly<K> r = Poly<K>::constant(one_);
            Poly<K> b = v;
            u64 exp = e.number;
            while (exp) {
                if (exp & 1) r = r * b;
                exp >>= 1;
                if (exp) b = b * b;
            }
            v = std::move(r);
        }
        return v;
    }

    Lexer& lex_;
    std::map<std::string, Poly<K>> symbols_;
    K one_;
};

std::map<std::string, Poly<FFElem>> ff_symbols(const FieldCtx& ctx, const std::string& var) {
    std::map<std::string, Poly<FFElem>> sym;
    sym[var] = Poly<FFElem>::x(FFElem::one(ctx));
    for (const FieldCtxImpl* level = ctx.impl(); level; level = level->base.impl()) {
        if (!level->base.valid()) break;
        FieldCtx lc = FieldCtxImpl::wrap(level->shared_from_this());
        sym[level->gen_name] = Poly<FFElem>::constant(embed(lc.gen(), ctx));
    }
    return sym;
}

}  // namespace

// ---------------------------------------------------------------------------
// public parsers

Poly<FFElem> parse_poly_ff(const std::string& text, const FieldCtx& ctx, const std::string& var) {
    Lexer lex(text);
    ExprParser<FFElem> parser(lex, ff_symbols(ctx, var), FFElem::one(ctx));
    Poly<FFElem> v = parser.parse_expr();
    if (lex.peek().kind != Tok::end) throw ParseError("trailing input after polynomial", lex.peek().pos);
    return v;
}

Poly<RatFun> parse_poly_rat(const std::string& text, const FieldCtx& coeff_field, const std::string& var) {
    std::map<std::string, Poly<RatFun>> sym;
    RatFun one = RatFun::from_int(coeff_field, 1);
    sym[var] = Poly<RatFun>::x(one);
    sym["t"] = Poly<RatFun>::constant(RatFun::t(coeff_field));
    for (const FieldCtxImpl* level = coeff_field.impl(); level; level = level->base.impl()) {
        if (!level->base.valid()) break;
        FieldCtx lc = FieldCtxImpl::wrap(level->shared_from_this());
        FFElem g = embed(lc.gen(), coeff_field);
        sym[level->gen_name] =
            Poly<RatFun>::constant(RatFun::from_poly(Poly<FFElem>::constant(g), coeff_field));
    }
    Lexer lex(text);
    ExprParser<RatFun> parser(lex, std::move(sym), one);
    Poly<RatFun> v = parser.parse_expr();
    if (lex.peek().kind != Tok::end) throw ParseError("trailing input after polynomial", lex.peek().pos);
    return v;
}

FieldDesc parse_field(const std::string& text) {
    Lexer lex(text);
    Token gf = lex.expect(Tok::ident, "'GF'");
    if (gf.text != "GF") throw ParseError("field description must start with GF", gf.pos);
    lex.expect(Tok::lparen, "'('");
    Token card = lex.expect(Tok::number, "a prime power");
    lex.expect(Tok::rparen, "')'");
    FieldDesc out;
    out.ctx = FieldCtx::gf(card.number);

    while (lex.peek().kind != Tok::end) {
        if (lex.peek().kind == Tok::lbracket) {
            lex.take();
            Token gen = lex.expect(Tok::ident, "a generator name");
            lex.expect(Tok::rbracket, "']'");
            lex.expect(Tok::slash, "'/'");
            lex.expect(Tok::lparen, "'('");
            // consume the balanced modulus text and parse it over the current tower
            std::string modtext;
            int depth = 1;
            while (depth > 0) {
                Token t = lex.take();
                if (t.kind == Tok::end) throw ParseError("unterminated modulus", t.pos);
                if (t.kind == Tok::lparen) ++depth;
                if (t.kind == Tok::rparen && --depth == 0) break;
                modtext += t.text;
            }
            Poly<FFElem> mod = parse_poly_ff(modtext, out.ctx, gen.text);
            out.ctx = FieldCtx::extension(out.ctx, mod.coeffs(), gen.text);
        } else if (lex.peek().kind == Tok::lparen) {
            lex.take();
            Token tv = lex.expect(Tok::ident, "'t'");
            if (tv.text != "t") throw ParseError("rational function field suffix must be (t)", tv.pos);
            lex.expect(Tok::rparen, "')'");
            out.rational = true;
            if (lex.peek().kind != Tok::end) throw ParseError("trailing input after field", lex.peek().pos);
        } else {
            throw ParseError("unexpected input in field description", lex.peek().pos);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// printers

namespace {

// composite = has a top-level " + " (needs parentheses as a coefficient)
bool needs_parens(const std::string& s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (depth == 0 && s[i] == '+') return true;
        if (depth == 0 && s[i] == '-' && i > 0) return true;
    }
    return false;
}

template <class K>
std::string poly_text_impl(const Poly<K>& f, const std::string& var,
                           std::string (*coeff_text)(const K&)) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t e = f.coeffs().size(); e-- > 0;) {
        const K& c = f[e];
        if (c.is_zero()) continue;
        std::string part;
        std::string ct = coeff_text(c);
        if (e == 0) {
            part = needs_parens(ct) ? "(" + ct + ")" : ct;
        } else {
            std::string xp = e == 1 ? var : var + "^" + std::to_string(e);
            if (c.is_one())
                part = xp;
            else if (needs_parens(ct))
                part = "(" + ct + ")*" + xp;
            else
                part = ct + "*" + xp;
        }
        if (!out.empty()) out += " + ";
        out += part;
    }
    return out;
}

}  // namespace

std::string elem_to_text(const FFElem& a) { return element_text(a); }

std::string poly_to_text(const Poly<FFElem>& f, const std::string& var) {
    return poly_text_impl<FFElem>(f, var, [](const FFElem& c) { return element_text(c); });
}

std::string ratfun_to_text(const RatFun& a) {
    std::string num = poly_to_text(a.num(), "t");
    if (a.is_poly()) return num;
    return "(" + num + ")/(" + poly_to_text(a.den(), "t") + ")";
}

std::string poly_to_text(const Poly<RatFun>& f, const std::string& var) {
    return poly_text_impl<RatFun>(f, var, [](const RatFun& c) { return ratfun_to_text(c); });
}

std::string form_to_text(const std::vector<FFElem>& coeffs, const MonomialBasis& basis) {
    std::string out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        const auto& e = basis.exponents(i);
        std::string mono;
        for (u32 v = 0; v < basis.n(); ++v) {
            if (!e[v]) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(v + 1);
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string ct = elem_to_text(coeffs[i]);
        std::string part;
        if (mono.empty())
            part = needs_parens(ct) ? "(" + ct + ")" : ct;
        else if (coeffs[i].is_one())
            part = mono;
        else
            part = (needs_parens(ct) ? "(" + ct + ")" : ct) + "*" + mono;
        if (!out.empty()) out += " + ";
        out += part;
    }
    return out.empty() ? "0" : out;
}

}  // namespace linpoly
