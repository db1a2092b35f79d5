#include "logicfuse/parse.hpp"

#include <cctype>
#include <charconv>

namespace logicfuse {

namespace {

enum class Tok : uint8_t {
    End, Bad, LParen, RParen, Comma, SeqArrow,
    And, Or, Imp,        // &tag |tag ->tag
    Word,                // neg, imp.pl, p1, bot, p1.pl
    Meta, AtVar, Ctx,    // ?b, @p[.tag], $G
    LBracket, RBracket,
};

struct Token {
    Tok kind = Tok::End;
    size_t pos = 0;
    std::string text;
    std::string tag;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {
        cur_ = scan();
        next_ = scan();
    }

    const Token& peek() const { return cur_; }
    const Token& peek2() const { return next_; }
    Token take() {
        Token t = cur_;
        cur_ = next_;
        next_ = scan();
        return t;
    }

  private:
    static bool word_char(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
               c == '_';
    }
    static bool tag_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }

    std::string take_tag() {
        size_t start = pos_;
        while (pos_ < text_.size() && tag_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Token scan() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Token t;
        t.pos = pos_;
        if (pos_ >= text_.size()) return t;
        char c = text_[pos_];
        switch (c) {
            case '(': t.kind = Tok::LParen; ++pos_; return t;
            case ')': t.kind = Tok::RParen; ++pos_; return t;
            case ',': t.kind = Tok::Comma; ++pos_; return t;
            case '[': t.kind = Tok::LBracket; ++pos_; return t;
            case ']': t.kind = Tok::RBracket; ++pos_; return t;
            case '&': ++pos_; t.kind = Tok::And; t.tag = take_tag(); return t;
            case '|': ++pos_; t.kind = Tok::Or; t.tag = take_tag(); return t;
            case '=':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                    t.kind = Tok::SeqArrow;
                    pos_ += 2;
                    return t;
                }
                break;
            case '-':
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                    pos_ += 2;
                    t.kind = Tok::Imp;
                    t.tag = take_tag();
                    return t;
                }
                break;
            case '?':
            case '@':
            case '$': {
                ++pos_;
                size_t start = pos_;
                while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
                t.text = std::string(text_.substr(start, pos_ - start));
                if (c == '?') t.kind = Tok::Meta;
                if (c == '$') t.kind = Tok::Ctx;
                if (c == '@') {
                    t.kind = Tok::AtVar;
                    if (pos_ < text_.size() && text_[pos_] == '.') {
                        ++pos_;
                        t.tag = take_tag();
                    }
                }
                return t;
            }
            default: break;
        }
        if (word_char(c)) {
            size_t start = pos_;
            while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
            t.kind = Tok::Word;
            t.text = std::string(text_.substr(start, pos_ - start));
            if (pos_ < text_.size() && text_[pos_] == '.') {
                ++pos_;
                t.text += "." + take_tag();
            }
            return t;
        }
        t.kind = Tok::Bad;
        t.text = std::string(1, c);
        ++pos_;
        return t;
    }

    std::string_view text_;
    size_t pos_ = 0;
    Token cur_, next_;
};

class FormulaParser {
  public:
    FormulaParser(Lexer& lx, const Signature& sig, const ParseOptions& opts)
        : lx_(lx), sig_(sig), opts_(opts) {}

    Result<Formula> expr() { return imp_expr(); }

  private:
    Result<Formula> imp_expr() {
        auto lhs = or_expr();
        if (!lhs.ok()) return lhs;
        if (lx_.peek().kind == Tok::Imp) {
            Token op = lx_.take();
            auto c = resolve_op("imp", op);
            if (!c.ok()) return std::move(c).error();
            auto rhs = imp_expr();  // right associative
            if (!rhs.ok()) return rhs;
            return Formula::app(c.value(), {lhs.value(), rhs.value()});
        }
        return lhs;
    }

    Result<Formula> or_expr() {
        auto lhs = and_expr();
        if (!lhs.ok()) return lhs;
        while (lx_.peek().kind == Tok::Or) {
            Token op = lx_.take();
            auto c = resolve_op("disj", op);
            if (!c.ok()) return std::move(c).error();
            auto rhs = and_expr();
            if (!rhs.ok()) return rhs;
            lhs = Formula::app(c.value(), {lhs.value(), rhs.value()});
        }
        return lhs;
    }

    Result<Formula> and_expr() {
        auto lhs = unary_expr();
        if (!lhs.ok()) return lhs;
        while (lx_.peek().kind == Tok::And) {
            Token op = lx_.take();
            auto c = resolve_op("conj", op);
            if (!c.ok()) return std::move(c).error();
            auto rhs = unary_expr();
            if (!rhs.ok()) return rhs;
            lhs = Formula::app(c.value(), {lhs.value(), rhs.value()});
        }
        return lhs;
    }

    Result<Formula> unary_expr() {
        const Token& t = lx_.peek();
        if (t.kind == Tok::Word && !is_atom_token(t.text)) {
            auto c = try_resolve(t.text);
            if (c && c->arity == 1) {
                lx_.take();
                auto arg = unary_expr();
                if (!arg.ok()) return arg;
                return Formula::app(*c, {arg.value()});
            }
        }
        return primary();
    }

    Result<Formula> primary() {
        Token t = lx_.take();
        switch (t.kind) {
            case Tok::Word: {
                if (auto idx = prop_base_index(t.text)) return Formula::prop(*idx);
                auto c = resolve_word(t.text, t.pos);
                if (!c.ok()) return std::move(c).error();
                if (c.value().arity != 0)
                    return SyntaxError{t.pos, c.value().token() + " takes " +
                                                  std::to_string(c.value().arity) +
                                                  " argument(s)"};
                return Formula::app(c.value());
            }
            case Tok::Meta:
                if (!opts_.patterns) return SyntaxError{t.pos, "metavariable not allowed here"};
                if (t.text.empty()) return SyntaxError{t.pos, "empty metavariable name"};
                return Formula::meta(t.text);
            case Tok::AtVar:
                if (!opts_.patterns) return SyntaxError{t.pos, "prop variable not allowed here"};
                if (t.text.empty()) return SyntaxError{t.pos, "empty prop variable name"};
                if (t.tag.empty()) return Formula::prop_var(t.text);
                if (!sig_.has_sourceprops(t.tag))
                    return SyntaxError{t.pos, "no source prop family ." + t.tag};
                return Formula::source_prop_var(t.text, t.tag);
            case Tok::LParen: {
                const Token& head = lx_.peek();
                if (head.kind == Tok::Word && !is_atom_token(head.text)) {
                    auto c = try_resolve(head.text);
                    if (c && c->arity > 0) {
                        lx_.take();
                        std::vector<Formula> args;
                        for (int i = 0; i < c->arity; ++i) {
                            auto a = primary();
                            if (!a.ok()) return a;
                            args.push_back(std::move(a).value());
                        }
                        Token close = lx_.take();
                        if (close.kind != Tok::RParen)
                            return SyntaxError{close.pos,
                                               "expected ')' after arguments of " + c->token()};
                        return Formula::app(*c, std::move(args));
                    }
                }
                auto inner = expr();
                if (!inner.ok()) return inner;
                Token close = lx_.take();
                if (close.kind != Tok::RParen) return SyntaxError{close.pos, "expected ')'"};
                return inner;
            }
            default:
                return SyntaxError{t.pos, t.text.empty() ? "expected formula"
                                                         : "unexpected '" + t.text + "'"};
        }
    }

    bool is_atom_token(const std::string& word) const {
        if (prop_base_index(word)) return true;
        auto c = sig_.find(word);
        return c && c->arity == 0;
    }

    std::optional<Constructor> try_resolve(const std::string& word) const {
        if (auto c = sig_.find(word)) return c;
        if (word.find('.') == std::string::npos) return sig_.find_unique_base(word);
        return std::nullopt;
    }

    Result<Constructor> resolve_word(const std::string& word, size_t pos) const {
        if (auto c = try_resolve(word)) return *c;
        if (word.find('.') == std::string::npos) {
            for (const auto& c : sig_.constructors())
                if (c.base == word)
                    return SyntaxError{pos, "ambiguous constructor '" + word + "': add a tag"};
        }
        return SyntaxError{pos, "unknown constructor '" + word + "'"};
    }

    Result<Constructor> resolve_op(const std::string& base, const Token& op) const {
        if (!op.tag.empty()) {
            auto c = sig_.find(base + "." + op.tag);
            if (!c) return SyntaxError{op.pos, "unknown constructor " + base + "." + op.tag};
            return *c;
        }
        if (auto c = sig_.find(base)) return *c;
        if (auto c = sig_.find_unique_base(base)) return *c;
        return SyntaxError{op.pos, "ambiguous or unknown operator for " + base};
    }

    Lexer& lx_;
    const Signature& sig_;
    const ParseOptions& opts_;
};

// Comma-separated side of a sequent or pattern, ending at => or end.
std::optional<SyntaxError> parse_side(Lexer& lx, const Signature& sig, const ParseOptions& opts,
                                      SidePattern& out) {
    if (lx.peek().kind == Tok::SeqArrow || lx.peek().kind == Tok::End) return std::nullopt;
    while (true) {
        if (opts.patterns && lx.peek().kind == Tok::Ctx) {
            Token ctx = lx.take();
            if (ctx.text.empty()) return SyntaxError{ctx.pos, "empty context variable"};
            out.ctxs.push_back(ContextVar{ctx.text, std::nullopt});
        } else if (opts.patterns && lx.peek().kind == Tok::Word &&
                   lx.peek2().kind == Tok::LBracket) {
            Token w = lx.take();
            auto c = sig.find(w.text);
            if (!c && w.text.find('.') == std::string::npos) c = sig.find_unique_base(w.text);
            if (!c) return SyntaxError{w.pos, "unknown constructor '" + w.text + "'"};
            if (c->arity != 1)
                return SyntaxError{w.pos, "modal context needs a unary constructor"};
            lx.take();  // [
            Token ctx = lx.take();
            if (ctx.kind != Tok::Ctx)
                return SyntaxError{ctx.pos, "expected $-variable in modal context"};
            Token close = lx.take();
            if (close.kind != Tok::RBracket) return SyntaxError{close.pos, "expected ']'"};
            out.ctxs.push_back(ContextVar{ctx.text, *c});
        } else {
            FormulaParser fp(lx, sig, opts);
            auto f = fp.expr();
            if (!f.ok()) return f.error();
            out.elems.push_back(std::move(f).value());
        }
        if (lx.peek().kind == Tok::Comma) {
            lx.take();
            continue;
        }
        return std::nullopt;
    }
}

std::optional<SyntaxError> expect_end(Lexer& lx, const char* what) {
    const Token& t = lx.peek();
    if (t.kind != Tok::End) return SyntaxError{t.pos, std::string("trailing input after ") + what};
    return std::nullopt;
}

Result<SequentPattern> parse_sequent_like(std::string_view text, const Signature& sig,
                                          const ParseOptions& opts) {
    Lexer lx(text);
    SequentPattern p;
    if (auto e = parse_side(lx, sig, opts, p.left)) return *e;
    Token arrow = lx.take();
    if (arrow.kind != Tok::SeqArrow) return SyntaxError{arrow.pos, "expected '=>'"};
    if (auto e = parse_side(lx, sig, opts, p.right)) return *e;
    if (auto e = expect_end(lx, "sequent")) return *e;
    return p;
}

}  // namespace

Result<Formula> parse_formula(std::string_view text, const Signature& sig,
                              const ParseOptions& opts) {
    Lexer lx(text);
    FormulaParser fp(lx, sig, opts);
    auto f = fp.expr();
    if (!f.ok()) return f;
    if (auto e = expect_end(lx, "formula")) return *e;
    return f;
}

Result<Sequent> parse_sequent(std::string_view text, const Signature& sig) {
    auto p = parse_sequent_like(text, sig, ParseOptions{});
    if (!p.ok()) return p.error();
    Sequent s;
    s.left = Multiset(std::move(p.value().left.elems));
    s.right = Multiset(std::move(p.value().right.elems));
    return s;
}

Result<SequentPattern> parse_sequent_pattern(std::string_view text, const Signature& sig) {
    ParseOptions opts;
    opts.patterns = true;
    return parse_sequent_like(text, sig, opts);
}

Result<Derivation> parse_derivation(std::string_view text, const Signature& sig) {
    Derivation d;
    size_t line_start = 0;
    int expected = 1;
    while (line_start < text.size()) {
        size_t eol = text.find('\n', line_start);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(line_start, eol - line_start);
        size_t offset = line_start;
        line_start = eol + 1;

        if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
        size_t a = 0, b = line.size();
        while (a < b && std::isspace(static_cast<unsigned char>(line[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(line[b - 1]))) --b;
        line = line.substr(a, b - a);
        if (line.empty()) continue;

        size_t dot = line.find('.');
        if (dot == std::string_view::npos)
            return SyntaxError{offset, "derivation line must start with 'N.'"};
        int num = 0;
        auto conv = std::from_chars(line.data(), line.data() + dot, num);
        if (conv.ec != std::errc{} || conv.ptr != line.data() + dot)
            return SyntaxError{offset, "bad line number"};
        if (num != expected)
            return SyntaxError{offset, "expected line number " + std::to_string(expected)};
        ++expected;

        std::string_view rest = line.substr(dot + 1);
        size_t semi = rest.rfind(';');
        if (semi == std::string_view::npos)
            return SyntaxError{offset, "missing ';' before justification"};
        std::string_view seq_text = rest.substr(0, semi);
        std::string_view just = rest.substr(semi + 1);

        auto seq = parse_sequent(seq_text, sig);
        if (!seq.ok()) {
            SyntaxError e = seq.error();
            e.pos += offset;
            return e;
        }
        Derivation::Line out;
        out.sequent = std::move(seq).value();

        size_t i = 0;
        while (i < just.size() && std::isspace(static_cast<unsigned char>(just[i]))) ++i;
        size_t name_start = i;
        while (i < just.size() && !std::isspace(static_cast<unsigned char>(just[i]))) ++i;
        out.rule = std::string(just.substr(name_start, i - name_start));
        if (out.rule.empty()) return SyntaxError{offset, "missing rule name"};
        while (i < just.size()) {
            while (i < just.size() && std::isspace(static_cast<unsigned char>(just[i]))) ++i;
            if (i >= just.size()) break;
            int prem = 0;
            auto pc = std::from_chars(just.data() + i, just.data() + just.size(), prem);
            if (pc.ec != std::errc{} || pc.ptr == just.data() + i)
                return SyntaxError{offset, "bad premise number in justification"};
            out.premises.push_back(prem);
            i = static_cast<size_t>(pc.ptr - just.data());
        }
        d.lines.push_back(std::move(out));
    }
    if (d.lines.empty()) return SyntaxError{0, "empty derivation"};
    return d;
}

}  // namespace logicfuse
