#include "bpf/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace bpf {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw std::invalid_argument("zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw std::invalid_argument("malformed rational \"" + std::string(text) + "\"");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) {
        throw std::invalid_argument("malformed rational \"" + std::string(text) +
                                    "\": zero denominator");
    }
    if (negative) {
        n = -n;
    }
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::to_string() const {
    // mpq get_str prints "p" for integers and "p/q" otherwise.
    return value_.get_str(10);
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(10); }

std::string Rational::denominator_string() const { return value_.get_den().get_str(10); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::pow(long exponent) const {
    if (exponent < 0) {
        return inverse().pow(-exponent);
    }
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    // Powers of coprime integers stay coprime and den stays positive.
    return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("division by zero");
    }
    mpq_class q;
    mpq_inv(q.get_mpq_t(), value_.get_mpq_t());
    return Rational(std::move(q));
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& x) { return Rational(mpq_class(-x.value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace bpf
