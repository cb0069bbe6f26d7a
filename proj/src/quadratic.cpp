#include "bpf/quadratic.hpp"

#include <ostream>
#include <stdexcept>

namespace bpf {

QuadraticContext::QuadraticContext(Rational radicand) : radicand_(std::move(radicand)) {
    if (radicand_.is_zero()) {
        throw std::invalid_argument("quadratic context requires D != 0");
    }
}

QuadraticElement::QuadraticElement(Rational x, Rational y, QuadraticContext context)
    : x_(std::move(x)), y_(std::move(y)), context_(std::move(context)) {}

QuadraticElement::QuadraticElement(Rational x, QuadraticContext context)
    : x_(std::move(x)), y_(0), context_(std::move(context)) {}

Rational QuadraticElement::field_norm() const {
    return x_ * x_ - context_.radicand() * y_ * y_;
}

std::string QuadraticElement::to_string() const {
    if (is_rational()) {
        return x_.to_string();
    }
    std::string out = x_.to_string();
    out += y_.sign() < 0 ? "-" : "+";
    out += (y_.sign() < 0 ? -y_ : y_).to_string();
    out += "*sqrt(" + context_.radicand().to_string() + ")";
    return out;
}

void QuadraticElement::require_same_context(const QuadraticElement& other) const {
    if (!(context_ == other.context_)) {
        throw std::invalid_argument("mixed quadratic contexts");
    }
}

QuadraticElement& QuadraticElement::operator+=(const QuadraticElement& rhs) {
    require_same_context(rhs);
    x_ += rhs.x_;
    y_ += rhs.y_;
    return *this;
}

QuadraticElement& QuadraticElement::operator-=(const QuadraticElement& rhs) {
    require_same_context(rhs);
    x_ -= rhs.x_;
    y_ -= rhs.y_;
    return *this;
}

QuadraticElement& QuadraticElement::operator*=(const QuadraticElement& rhs) {
    require_same_context(rhs);
    Rational x = x_ * rhs.x_ + context_.radicand() * y_ * rhs.y_;
    Rational y = x_ * rhs.y_ + y_ * rhs.x_;
    x_ = std::move(x);
    y_ = std::move(y);
    return *this;
}

QuadraticElement& QuadraticElement::operator*=(const Rational& rhs) {
    x_ *= rhs;
    y_ *= rhs;
    return *this;
}

QuadraticElement operator-(const QuadraticElement& u) {
    return QuadraticElement(-u.x_, -u.y_, u.context_);
}

std::ostream& operator<<(std::ostream& os, const QuadraticElement& u) {
    return os << u.to_string();
}

QuadraticElement quad_mul(const QuadraticElement& u, const QuadraticElement& v) { return u * v; }

QuadraticElement quad_inv(const QuadraticElement& u) {
    const Rational norm = u.field_norm();
    if (norm.is_zero()) {
        throw std::domain_error("non-invertible element");
    }
    const Rational scale = norm.inverse();
    return QuadraticElement(u.x() * scale, -u.y() * scale, u.context());
}

QuadraticElement quad_conj(const QuadraticElement& u) {
    return QuadraticElement(u.x(), -u.y(), u.context());
}

QuadraticElement pow(const QuadraticElement& u, long exponent) {
    if (exponent < 0) {
        return pow(quad_inv(u), -exponent);
    }
    QuadraticElement result = one_like(u);
    QuadraticElement base = u;
    auto e = static_cast<unsigned long>(exponent);
    while (e != 0) {
        if ((e & 1U) != 0) {
            result *= base;
        }
        e >>= 1U;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

}  // namespace bpf
