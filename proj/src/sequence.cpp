#include "bpf/sequence.hpp"

#include <stdexcept>

namespace bpf {

Params::Params(Rational a, Rational b, Rational w0, Rational w1)
    : a_(std::move(a)), b_(std::move(b)), w0_(std::move(w0)), w1_(std::move(w1)) {
    if (a_.is_zero()) {
        throw std::invalid_argument("a = 0");
    }
    if (b_.is_zero()) {
        throw std::invalid_argument("b = 0");
    }
    const Rational ab = a_ * b_;
    d_ = ab * ab + Rational(4) * ab;
    if (d_.is_zero()) {
        throw std::invalid_argument("a²b²+4ab = 0");
    }
    if (w0_.is_zero() && w1_.is_zero()) {
        throw std::invalid_argument("w0 = w1 = 0");
    }
}

std::string Params::to_string() const {
    return "(a=" + a_.to_string() + ", b=" + b_.to_string() + ", w0=" + w0_.to_string() +
           ", w1=" + w1_.to_string() + ")";
}

Params fibonacci_params(const Rational& a, const Rational& b) {
    return Params(a, b, Rational(0), Rational(1));
}

Params lucas_params(const Rational& a, const Rational& b) {
    return Params(b, a, Rational(2), a);
}

SequenceEngine::SequenceEngine(Params params) : params_(std::move(params)) {
    forward_.push_back(params_.w0());
    forward_.push_back(params_.w1());
}

const Rational& SequenceEngine::value(long n) {
    if (n >= 0) {
        const auto idx = static_cast<std::size_t>(n);
        while (forward_.size() <= idx) {
            const auto k = static_cast<long>(forward_.size());
            const std::size_t last = forward_.size() - 1;
            forward_.push_back(params_.coefficient(k) * forward_[last] + forward_[last - 1]);
        }
        return forward_[idx];
    }
    const auto idx = static_cast<std::size_t>(-n - 1);
    while (backward_.size() <= idx) {
        // Producing w_m from w_{m+2} = c(m+2) w_{m+1} + w_m.
        const long m = -static_cast<long>(backward_.size()) - 1;
        const Rational& next1 = m + 1 >= 0 ? forward_[static_cast<std::size_t>(m + 1)]
                                           : backward_[static_cast<std::size_t>(-(m + 1) - 1)];
        const Rational& next2 = m + 2 >= 0 ? forward_[static_cast<std::size_t>(m + 2)]
                                           : backward_[static_cast<std::size_t>(-(m + 2) - 1)];
        backward_.push_back(next2 - params_.coefficient(m + 2) * next1);
    }
    return backward_[idx];
}

QuadraticElement Roots::alpha_pow(long k) const {
    if (k >= 0) {
        return pow(alpha, k);
    }
    return pow(-beta * ab.inverse(), -k);
}

QuadraticElement Roots::beta_pow(long k) const {
    if (k >= 0) {
        return pow(beta, k);
    }
    return pow(-alpha * ab.inverse(), -k);
}

Roots roots(const Params& params) {
    const QuadraticContext ctx = params.context();
    const Rational half_ab = params.ab() / Rational(2);
    return Roots{QuadraticElement(half_ab, Rational(1, 2), ctx),
                 QuadraticElement(half_ab, Rational(-1, 2), ctx), params.ab()};
}

BinetConstants binet_constants(const Params& params) {
    const Roots r = roots(params);
    const QuadraticElement inv_diff = quad_inv(r.alpha - r.beta);
    const QuadraticElement bw0(params.b() * params.w0(), params.context());
    return BinetConstants{(r.alpha * params.w1() + bw0) * inv_diff,
                          (r.beta * params.w1() + bw0) * inv_diff};
}

Rational w_binet(long n, const Params& params) {
    if (n < 0) {
        throw std::invalid_argument("w_binet requires n >= 0");
    }
    const Roots r = roots(params);
    const BinetConstants k = binet_constants(params);
    const Rational scale = params.a().pow(zeta(n + 1)) / params.ab().pow(floor_half(n));
    const QuadraticElement value = (k.A * r.alpha_pow(n - 1) - k.B * r.beta_pow(n - 1)) * scale;
    if (!value.is_rational()) {
        throw std::logic_error("nonrational Binet value");
    }
    return value.x();
}

}  // namespace bpf
