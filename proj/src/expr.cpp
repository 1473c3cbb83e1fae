#include "virasoro/expr.hpp"

#include <cctype>

namespace virasoro {

ParseError::ParseError(const std::string& message, std::string token, std::size_t position)
    : std::invalid_argument(message), token_(std::move(token)), position_(position) {}

namespace {

class Parser {
public:
    Parser(std::string_view text, bool comments) : text_(text), comments_(comments) {}

    EnvElem elem() {
        skip();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        EnvElem out = term();
        if (negative) out = -out;
        while (true) {
            skip();
            const char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            EnvElem t = term();
            out += c == '-' ? -t : t;
        }
        return out;
    }

    std::vector<StateTerm> state() {
        std::vector<StateTerm> out;
        skip();
        if (at_end()) fail("expected a term");
        bool negative = false;
        while (true) {
            skip();
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
            }
            EnvElem t = term();
            if (negative) t = -t;
            expect("@v(");
            const std::int64_t j = signed_int();
            expect(")");
            out.push_back({std::move(t), j});
            skip();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail("expected '+', '-' or end of input");
            negative = false;
        }
        return out;
    }

    void finish() {
        skip();
        if (!at_end()) fail("unexpected trailing input");
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip() {
        while (!at_end()) {
            const char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (comments_ && c == '#') {
                while (!at_end() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::string token_here() const {
        if (at_end()) return "<end>";
        std::size_t end = pos_;
        while (end < text_.size() && end - pos_ < 12 && !std::isspace(static_cast<unsigned char>(text_[end]))) ++end;
        return std::string(text_.substr(pos_, std::max<std::size_t>(end - pos_, 1)));
    }

    [[noreturn]] void fail(const std::string& what) const {
        const std::string tok = token_here();
        throw ParseError(what + " at position " + std::to_string(pos_) + ", found '" + tok + "'", tok, pos_);
    }

    void expect(std::string_view lit) {
        skip();
        for (char c : lit) {
            if (peek() != c) fail("expected '" + std::string(lit) + "'");
            ++pos_;
            skip();
        }
    }

    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    long small_int(long lo, long hi) {
        const std::size_t start = pos_;
        const std::string d = digits();
        if (d.size() > 9 || std::stol(d) < lo || std::stol(d) > hi) {
            pos_ = start;
            skip();
            fail("integer out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        }
        return std::stol(d);
    }

    std::int64_t signed_int() {
        skip();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        }
        const long v = small_int(0, 999'999'999);
        return negative ? -v : v;
    }

    Rat coeff() {
        const std::string num = digits();
        skip();
        if (peek() != '/') return Rat::parse(num);
        ++pos_;
        const std::size_t at = pos_;
        const std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) {
            pos_ = at;
            skip();
            fail("zero denominator");
        }
        return Rat::parse(num + "/" + den);
    }

    // d(-k)^e
    EnvElem factor(EnvElem acc) {
        skip();
        if (peek() != 'd') fail("expected 'd(-k)'");
        ++pos_;
        expect("(");
        expect("-");
        skip();
        const int k = static_cast<int>(small_int(1, 10'000));
        expect(")");
        skip();
        long e = 1;
        if (peek() == '^') {
            ++pos_;
            skip();
            e = small_int(0, 1'000);
        }
        for (long i = 0; i < e; ++i) acc = multiply(acc, EnvElem::generator(k));
        return acc;
    }

    EnvElem term() {
        skip();
        EnvElem acc;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            acc = EnvElem(coeff());
        } else if (peek() == 'd') {
            acc = factor(EnvElem::unit());
        } else {
            fail("expected a coefficient or 'd(-k)'");
        }
        while (true) {
            skip();
            if (peek() != '*') break;
            ++pos_;
            acc = factor(std::move(acc));
        }
        return acc;
    }

    std::string_view text_;
    bool comments_;
    std::size_t pos_ = 0;
};

}  // namespace

EnvElem parse_env_elem(std::string_view text) {
    Parser p(text, false);
    EnvElem out = p.elem();
    p.finish();
    return out;
}

std::vector<StateTerm> parse_state(std::string_view text) {
    Parser p(text, true);
    auto out = p.state();
    p.finish();
    return out;
}

}  // namespace virasoro
