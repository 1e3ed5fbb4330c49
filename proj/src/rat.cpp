#include "pluck/rat.hpp"

#include <stdexcept>

namespace pluck {

namespace {

bool is_digit_run(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rat::Rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    value_ /= o.value_;
    return *this;
}

Rat Rat::parse(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') body.remove_prefix(1);
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!is_digit_run(num) || (slash != std::string_view::npos && !is_digit_run(den)))
        throw std::invalid_argument("Rat: malformed rational '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10);
    mpz_class d(1);
    if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("Rat: zero denominator in '" + std::string(text) + "'");
    if (text.front() == '-') n = -n;

    Rat r(n, d);
    if (r.to_string() != text)
        throw std::invalid_argument("Rat: non-canonical rational '" + std::string(text) + "'");
    return r;
}

std::string Rat::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace pluck
