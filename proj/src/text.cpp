#include "apolar/text.hpp"

#include "apolar/errors.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

namespace apolar {

namespace {

bool is_label_char(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

constexpr std::size_t kMaxIndexDigits = 6;

enum class TokenKind { Number, Variable, Caret, Star, Plus, Minus, End };

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_blank();
            Token t;
            t.line = line_;
            t.column = column_;
            if (pos_ >= text_.size()) {
                out.push_back(t);
                return out;
            }
            const char c = text_[pos_];
            if (is_digit(c)) {
                t.kind = TokenKind::Number;
                t.text = take_while(is_digit);
                if (pos_ < text_.size() && text_[pos_] == '/') {
                    t.text += advance();
                    if (pos_ >= text_.size() || !is_digit(text_[pos_])) {
                        throw ParseError("expected denominator after '/'", line_, column_);
                    }
                    t.text += take_while(is_digit);
                }
            } else if (is_label_char(c)) {
                t.kind = TokenKind::Variable;
                t.text = take_while(is_label_char);
                t.text += take_while(is_digit);
            } else if (c == '^' || c == '*' || c == '+' || c == '-') {
                t.kind = c == '^' ? TokenKind::Caret : c == '*' ? TokenKind::Star : c == '+' ? TokenKind::Plus : TokenKind::Minus;
                t.text = std::string(1, advance());
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
            }
            out.push_back(std::move(t));
        }
    }

private:
    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    template <typename Pred>
    std::string take_while(Pred pred) {
        std::string out;
        while (pos_ < text_.size() && pred(text_[pos_])) out += advance();
        return out;
    }

    void skip_blank() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

std::string declared_groups(const VarSpace& space) {
    std::string out;
    for (std::size_t g = 0; g < space.group_count(); ++g) {
        if (g) out += ", ";
        const auto& grp = space.group(g);
        out += grp.label + "0.." + grp.label + std::to_string(grp.dim - 1);
    }
    return out;
}

class PolyParser {
public:
    PolyParser(std::vector<Token> tokens, const VarSpace& space) : tokens_(std::move(tokens)), space_(space) {}

    MultiPoly run() {
        if (peek().kind == TokenKind::End) throw error("empty polynomial", peek());
        std::optional<MultiPoly> out;
        Rational sign = 1;
        if (!accept(TokenKind::Plus) && accept(TokenKind::Minus)) sign = -1;
        while (true) {
            const Token& start = peek();
            auto [alpha, coeff] = term();
            const MultiDegree d = multidegree_of(space_, alpha);
            if (!out) out.emplace(space_, d);
            if (out->mdeg() != d) {
                throw error("term has multidegree " + to_string(d) + " but the polynomial has multidegree " +
                                to_string(out->mdeg()) + " (input must be multihomogeneous)",
                            start);
            }
            out->add_term(alpha, sign * coeff);
            if (peek().kind == TokenKind::End) break;
            if (accept(TokenKind::Plus)) {
                sign = 1;
            } else if (accept(TokenKind::Minus)) {
                sign = -1;
            } else {
                throw error("expected '+' or '-' before '" + peek().text + "'", peek());
            }
        }
        return *out;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }

    bool accept(TokenKind kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    static ParseError error(const std::string& msg, const Token& at) { return ParseError(msg, at.line, at.column); }

    std::pair<ExponentVector, Rational> term() {
        ExponentVector alpha(std::vector<unsigned>(space_.variable_count(), 0));
        Rational coeff = 1;
        while (true) {
            const Token& t = peek();
            if (t.kind == TokenKind::Number) {
                coeff *= number(t);
                ++pos_;
            } else if (t.kind == TokenKind::Variable) {
                const std::size_t var = variable(t);
                ++pos_;
                unsigned power = 1;
                if (accept(TokenKind::Caret)) {
                    const Token& p = peek();
                    if (p.kind != TokenKind::Number || p.text.find('/') != std::string::npos) {
                        throw error("expected a nonnegative integer exponent after '^'", p);
                    }
                    if (p.text.size() > kMaxIndexDigits) throw error("exponent too large", p);
                    power = static_cast<unsigned>(std::stoul(p.text));
                    ++pos_;
                }
                alpha.exps[var] += power;
            } else {
                throw error(t.kind == TokenKind::End ? "unexpected end of input" : "unexpected '" + t.text + "'", t);
            }
            const TokenKind next = peek().kind;
            if (next == TokenKind::Star) {
                ++pos_;
                continue;
            }
            if (next == TokenKind::Number || next == TokenKind::Variable) continue;
            break;
        }
        return {alpha, coeff};
    }

    static Rational number(const Token& t) {
        Rational q(t.text, 10);
        if (sgn(q.get_den()) == 0) throw error("zero denominator", t);
        q.canonicalize();
        return q;
    }

    std::size_t variable(const Token& t) const {
        std::size_t split = 0;
        while (split < t.text.size() && is_label_char(t.text[split])) ++split;
        const std::string label = t.text.substr(0, split);
        const std::string digits = t.text.substr(split);
        for (std::size_t g = 0; g < space_.group_count(); ++g) {
            if (space_.group(g).label != label) continue;
            if (digits.empty()) throw error("variable '" + t.text + "' is missing an index", t);
            if (digits.size() > kMaxIndexDigits || std::stoul(digits) >= space_.group(g).dim) {
                throw error("unknown variable '" + t.text + "' (declared groups: " + declared_groups(space_) + ")", t);
            }
            return space_.offset(g) + std::stoul(digits);
        }
        throw error("unknown variable '" + t.text + "' (declared groups: " + declared_groups(space_) + ")", t);
    }

    std::vector<Token> tokens_;
    const VarSpace& space_;
    std::size_t pos_ = 0;
};

} // namespace

VarSpace parse_groups(std::string_view text) {
    std::vector<VarGroup> groups;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        std::string_view item = text.substr(pos, comma - pos);
        std::size_t lead = 0;
        while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead]))) ++lead;
        item.remove_prefix(lead);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
        const std::size_t column = pos + lead + 1;
        const std::size_t colon = item.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected <label>:<dimension>", 1, column);
        std::string label(item.substr(0, colon));
        std::string_view dim = item.substr(colon + 1);
        if (label.empty() || !std::all_of(label.begin(), label.end(), is_label_char)) {
            throw ParseError("group label must be letters, '_' or '\\'' (got '" + label + "')", 1, column);
        }
        if (dim.empty() || !std::all_of(dim.begin(), dim.end(), is_digit) || dim.size() > kMaxIndexDigits) {
            throw ParseError("group dimension must be a positive integer", 1, column + colon + 1);
        }
        const unsigned n = static_cast<unsigned>(std::stoul(std::string(dim)));
        if (n == 0) throw ParseError("group dimension must be a positive integer", 1, column + colon + 1);
        for (const auto& g : groups) {
            if (g.label == label) throw ParseError("duplicate group label '" + label + "'", 1, column);
        }
        groups.push_back({label, n});
        if (comma >= text.size()) break;
        pos = comma + 1;
    }
    return VarSpace(std::move(groups));
}

MultiPoly parse_polynomial(std::string_view text, const VarSpace& space) {
    return PolyParser(Lexer(text).run(), space).run();
}

} // namespace apolar
