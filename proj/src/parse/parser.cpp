#include "psolve/parse.hpp"

#include <cctype>
#include <sstream>

namespace psolve {

namespace {

constexpr unsigned kMaxExponent = 256;
constexpr int kMaxDepth = 200;
constexpr unsigned long kMaxDegree = 512;

std::string describe(std::size_t pos, const std::vector<std::string>& expected, const std::string& detail) {
    std::ostringstream os;
    os << "parse error at position " << pos << ": " << detail;
    if (!expected.empty()) {
        os << " (expected one of:";
        for (const auto& e : expected) os << ' ' << e;
        os << ')';
    }
    return os.str();
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Poly expr() {
        Poly acc = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    bool at_end() {
        skip_ws();
        return pos_ == src_.size();
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_word(std::string_view word) {
        skip_ws();
        if (src_.substr(pos_, word.size()) != word) fail({'"' + std::string(word) + '"'}, "unexpected input");
        pos_ += word.size();
    }

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& detail) const {
        throw ParseError(pos_, std::move(expected), detail);
    }

    void expect_end(std::vector<std::string> expected) {
        if (!at_end()) fail(std::move(expected), "unexpected trailing input");
    }

private:
    Poly term() {
        Poly acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    Poly unary() {
        if (accept('-')) {
            DepthGuard guard(*this);
            return -unary();
        }
        return power();
    }

    Poly power() {
        Poly base = primary();
        if (!accept('^')) return base;
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ >= src_.size() || !is_digit(src_[pos_])) fail({"non-negative integer exponent"}, "bad exponent");
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        const std::string_view digits = src_.substr(start, pos_ - start);
        if (pos_ < src_.size() && src_[pos_] == '/') fail({"non-negative integer exponent"}, "fractional exponent");
        if (digits.size() > 4 || std::stoul(std::string(digits)) > kMaxExponent) {
            pos_ = start;
            fail({"exponent <= " + std::to_string(kMaxExponent)}, "exponent too large");
        }
        const auto e = static_cast<unsigned>(std::stoul(std::string(digits)));
        if (base.degree() > 0 && static_cast<unsigned long>(base.degree()) * e > kMaxDegree) {
            pos_ = start;
            fail({}, "power exceeds degree limit " + std::to_string(kMaxDegree));
        }
        return pow(base, e);
    }

    Poly primary() {
        skip_ws();
        if (pos_ >= src_.size()) fail(primary_tokens(), "unexpected end of input");
        const char c = src_[pos_];
        if (c == 'x' || c == 'y') {
            ++pos_;
            return c == 'x' ? Poly::x() : Poly::y();
        }
        if (is_digit(c)) return number();
        if (c == '(') {
            ++pos_;
            DepthGuard guard(*this);
            Poly inner = expr();
            if (!accept(')')) fail({"\")\"", "\"+\"", "\"-\"", "\"*\""}, "unbalanced parenthesis");
            return inner;
        }
        fail(primary_tokens(), std::string("unexpected character '") + c + "'");
    }

    Poly number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        // "a/b" with no spaces is a single rational literal.
        if (pos_ + 1 < src_.size() && src_[pos_] == '/' && is_digit(src_[pos_ + 1])) {
            ++pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        }
        try {
            return Poly(Rational::from_string(src_.substr(start, pos_ - start)));
        } catch (const std::invalid_argument& e) {
            pos_ = start;
            fail({"number"}, e.what());
        }
    }

    static std::vector<std::string> primary_tokens() { return {"number", "\"x\"", "\"y\"", "\"(\"", "\"-\""}; }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    struct DepthGuard {
        explicit DepthGuard(Parser& p) : parser(p) {
            if (++parser.depth_ > kMaxDepth) parser.fail({}, "expression nested too deeply");
        }
        ~DepthGuard() { --parser.depth_; }
        DepthGuard(const DepthGuard&) = delete;
        DepthGuard& operator=(const DepthGuard&) = delete;
        Parser& parser;
    };

    std::string_view src_;
    std::size_t pos_ = 0;
    int depth_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& detail)
    : std::runtime_error(describe(position, expected, detail)), position_(position), expected_(std::move(expected)) {}

Poly parse_poly(std::string_view text) {
    Parser p(text);
    Poly result = p.expr();
    p.expect_end({"\"+\"", "\"-\"", "\"*\"", "\"^\"", "end of input"});
    return result;
}

OdeSpec parse_ode(std::string_view text) {
    Parser p(text);
    p.expect_word("dy");
    p.expect_word("/");
    p.expect_word("dx");
    p.expect_word("=");

    OdeSpec spec;
    spec.source_text = std::string(text);
    spec.M = p.expr();
    spec.N = p.accept('/') ? p.expr() : Poly(1);
    p.expect_end({"\"/\"", "\"+\"", "\"-\"", "\"*\"", "end of input"});
    if (spec.N.is_zero()) throw ZeroDenominator();

    const Poly g = gcd(spec.M, spec.N);
    if (!g.is_constant()) {
        spec.M = *exact_div(spec.M, g);
        spec.N = *exact_div(spec.N, g);
        spec.common_factor_removed = true;
    }
    return spec;
}

}  // namespace psolve
