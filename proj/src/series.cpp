#include "bpf/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpf {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Rational Polynomial::coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

Polynomial operator+(const Polynomial& l, const Polynomial& r) {
    std::vector<Rational> out(std::max(l.c_.size(), r.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = l.coefficient(i) + r.coefficient(i);
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& l, const Polynomial& r) {
    if (l.is_zero() || r.is_zero()) {
        return {};
    }
    std::vector<Rational> out(l.c_.size() + r.c_.size() - 1);
    for (std::size_t i = 0; i < l.c_.size(); ++i) {
        for (std::size_t j = 0; j < r.c_.size(); ++j) {
            out[i + j] += l.c_[i] * r.c_[j];
        }
    }
    return Polynomial(std::move(out));
}

PowerSeries::PowerSeries(std::vector<Rational> coefficients, std::size_t order)
    : c_(std::move(coefficients)), order_(order) {
    c_.resize(order_ + 1);
}

PowerSeries PowerSeries::zero(std::size_t order) { return PowerSeries({}, order); }

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, std::size_t order) {
    std::vector<Rational> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        c[i] = p.coefficient(i);
    }
    return PowerSeries(std::move(c), order);
}

std::size_t PowerSeries::valuation() const {
    for (std::size_t i = 0; i <= order_; ++i) {
        if (!c_[i].is_zero()) {
            return i;
        }
    }
    return order_ + 1;
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    if (order > order_) {
        throw std::invalid_argument("cannot extend a truncated series");
    }
    return PowerSeries({c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)}, order);
}

PowerSeries operator+(const PowerSeries& l, const PowerSeries& r) {
    const std::size_t order = std::min(l.order_, r.order_);
    std::vector<Rational> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        out[i] = l.c_[i] + r.c_[i];
    }
    return PowerSeries(std::move(out), order);
}

PowerSeries operator-(const PowerSeries& l, const PowerSeries& r) {
    return l + Rational(-1) * r;
}

PowerSeries operator*(const PowerSeries& l, const PowerSeries& r) {
    const std::size_t order = std::min(l.order_, r.order_);
    std::vector<Rational> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (l.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= order; ++j) {
            out[i + j] += l.c_[i] * r.c_[j];
        }
    }
    return PowerSeries(std::move(out), order);
}

PowerSeries operator*(const Rational& s, const PowerSeries& r) {
    std::vector<Rational> out = r.c_;
    for (auto& x : out) {
        x *= s;
    }
    return PowerSeries(std::move(out), r.order_);
}

bool operator==(const PowerSeries& l, const PowerSeries& r) {
    const std::size_t order = std::min(l.order_, r.order_);
    for (std::size_t i = 0; i <= order; ++i) {
        if (!(l.c_[i] == r.c_[i])) {
            return false;
        }
    }
    return true;
}

PowerSeries series_divide(const PowerSeries& num, const Polynomial& den) {
    const Rational d0 = den.coefficient(0);
    if (d0.is_zero()) {
        throw std::domain_error("pole at origin");
    }
    const Rational inv_d0 = d0.inverse();
    const std::size_t order = num.order();
    std::vector<Rational> s(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = num[k];
        const auto top = std::min<std::size_t>(k, static_cast<std::size_t>(std::max(den.degree(), 0L)));
        for (std::size_t j = 1; j <= top; ++j) {
            acc -= den.coefficient(j) * s[k - j];
        }
        s[k] = acc * inv_d0;
    }
    return PowerSeries(std::move(s), order);
}

PowerSeries series_expand(const RationalFunction& rf, std::size_t order) {
    return series_divide(PowerSeries::from_polynomial(rf.num, order), rf.den);
}

PowerSeries f_series(const Params& params, std::size_t order) {
    const Rational& w0 = params.w0();
    const Rational& w1 = params.w1();
    const Polynomial num({Rational(0), w1, Rational(0), params.b() * w0 - w1});
    const Polynomial den({Rational(1), Rational(0), -(params.ab() + Rational(2)), Rational(0), Rational(1)});
    return series_expand({num, den}, order);
}

PowerSeries correction_term(const Params& params, std::size_t s, std::size_t order) {
    // Multiplying by t^{1-s} lowers exponents by s - 1 when s >= 1.
    const std::size_t drop = s >= 1 ? s - 1 : 0;
    const std::size_t raise = s == 0 ? 1 : 0;
    PowerSeries f = f_series(params, order + drop);
    std::vector<Rational> c = f.coefficients();

    SequenceEngine engine(params);
    const std::size_t odd_terms = (s + 1) / 2;
    for (std::size_t k = 1; k <= odd_terms; ++k) {
        const std::size_t idx = 2 * k - 1;
        if (idx < c.size()) {
            c[idx] -= engine.value(static_cast<long>(idx));
        }
    }
    const PowerSeries trimmed(std::move(c), order + drop);
    if (trimmed.valuation() < drop) {
        throw std::logic_error("negative exponent after shift");
    }

    std::vector<Rational> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (raise == 1) {
            out[i] = i >= 1 ? trimmed[i - 1] : Rational(0);
        } else {
            out[i] = trimmed[i + drop];
        }
    }
    return PowerSeries(std::move(out), order);
}

template <std::size_t N>
std::vector<Hypercomplex<Rational, N>> genfunc(const Params& params, std::size_t order) {
    SequenceEngine engine(params);
    const Polynomial den({Rational(1), -params.b(), Rational(-1)});
    const Rational a_minus_b = params.a() - params.b();

    std::vector<Hypercomplex<Rational, N>> out(order + 1, Hypercomplex<Rational, N>::zero(Rational(0)));
    for (std::size_t l = 0; l < N; ++l) {
        const auto li = static_cast<long>(l);
        const Rational x0 = engine.value(li);
        const Rational x1 = engine.value(li + 1);
        PowerSeries num = PowerSeries::from_polynomial(Polynomial({x0, x1 - params.b() * x0}), order);
        if (!a_minus_b.is_zero()) {
            num = num + a_minus_b * correction_term(params, l, order);
        }
        const PowerSeries component = series_divide(num, den);
        for (std::size_t k = 0; k <= order; ++k) {
            out[k][l] = component[k];
        }
    }
    return out;
}

template std::vector<Hypercomplex<Rational, 4>> genfunc<4>(const Params&, std::size_t);
template std::vector<Hypercomplex<Rational, 8>> genfunc<8>(const Params&, std::size_t);

}  // namespace bpf
