#include "psolve/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace psolve {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (negative) n = -n;
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(value_.get_den(), value_.get_num());
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    value_ /= o.value_;
    return *this;
}

std::size_t Rational::hash() const {
    // Low limbs are enough for bucketing.
    const auto limb = [](const mpz_class& z) -> std::size_t {
        return mpz_size(z.get_mpz_t()) == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
    };
    std::size_t h = limb(value_.get_num()) * 1000003u ^ limb(value_.get_den());
    return sign() < 0 ? ~h : h;
}

}  // namespace psolve
