#include <cctype>
#include <cmath>
#include <cstdlib>

#include "indiv/dsl.hpp"

namespace indiv::dsl {

ParseError::ParseError(int line, int column, std::string expected, std::string found)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
                         expected + ", found " + found),
      line_(line), column_(column), expected_(std::move(expected)), found_(std::move(found))
{
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run()
    {
        std::vector<Token> out;
        while (true) {
            skip_blank();
            if (pos_ >= src_.size()) {
                break;
            }
            out.push_back(next());
        }
        out.push_back(end_token());
        return out;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    int last_line_ = 1;
    int last_column_ = 1;

    char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

    void advance()
    {
        const char c = src_[pos_++];
        last_line_ = line_;
        last_column_ = column_;
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else if (pos_ >= src_.size() || (static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
            // Columns count code points: step once the last UTF-8 byte is consumed.
            ++column_;
        }
    }

    void skip_blank()
    {
        while (pos_ < src_.size()) {
            const char c = peek();
            if (c == '#') {
                while (pos_ < src_.size() && peek() != '\n') {
                    advance();
                }
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    // Positioned on the last character of the source, so it still points
    // inside the text.
    Token end_token() const
    {
        if (src_.empty()) {
            return {TokenKind::End, "end of input", 1, 1};
        }
        return {TokenKind::End, "end of input", last_line_, last_column_};
    }

    Token next()
    {
        const int line = line_;
        const int column = column_;
        const std::size_t start = pos_;
        const char c = peek();

        if (is_ident_start(c)) {
            while (pos_ < src_.size() && is_ident_char(peek())) {
                advance();
            }
            std::string word(src_.substr(start, pos_ - start));
            const TokenKind kind = (word == "let" || word == "assert_close") ? TokenKind::Keyword : TokenKind::Ident;
            return {kind, std::move(word), line, column};
        }

        if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
            while (is_digit(peek())) {
                advance();
            }
            if (peek() == '.') {
                advance();
                while (is_digit(peek())) {
                    advance();
                }
            }
            if ((peek() == 'e' || peek() == 'E') &&
                (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
                advance();
                if (peek() == '+' || peek() == '-') {
                    advance();
                }
                while (is_digit(peek())) {
                    advance();
                }
            }
            std::string text(src_.substr(start, pos_ - start));
            Token t{TokenKind::Number, text, line, column};
            t.number = std::strtod(text.c_str(), nullptr);
            if (!std::isfinite(t.number)) {
                throw ParseError(line, column, "finite NUMBER", "'" + text + "'");
            }
            return t;
        }

        switch (c) {
        case '(':
        case ')':
        case ',':
        case ';':
        case '=':
        case '+':
        case '-':
        case '*':
        case '/':
            advance();
            return {TokenKind::Punct, std::string(1, c), line, column};
        default:
            break;
        }

        std::size_t len = 1;
        const auto lead = static_cast<unsigned char>(c);
        if (lead >= 0xC0) {
            len = lead >= 0xF0 ? 4 : lead >= 0xE0 ? 3 : 2;
        }
        throw ParseError(line, column, "token", "'" + std::string(src_.substr(start, len)) + "'");
    }
};

} // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

} // namespace indiv::dsl
