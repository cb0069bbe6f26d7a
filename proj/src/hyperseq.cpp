#include "bpf/hyperseq.hpp"

#include <stdexcept>

namespace bpf {

namespace {

template <std::size_t N>
Hypercomplex<QuadraticElement, N> weighted_powers(const Params& params, const QuadraticElement& root,
                                                  bool double_star) {
    const QuadraticContext ctx = params.context();
    auto out = Hypercomplex<QuadraticElement, N>::zero(QuadraticElement(Rational(0), ctx));
    QuadraticElement power(Rational(1), ctx);
    for (std::size_t i = 0; i < N; ++i) {
        const auto l = static_cast<long>(i);
        const Rational weight =
            double_star ? params.a().pow(zeta(l)) / params.ab().pow(floor_half(l + 1))
                        : params.a().pow(zeta(l + 1)) / params.ab().pow(floor_half(l));
        out[i] = power * weight;
        power *= root;
    }
    return out;
}

template <std::size_t N>
Hypercomplex<Rational, N> require_rational(const Hypercomplex<QuadraticElement, N>& value) {
    auto r = rational_part(value);
    if (!r) {
        throw std::logic_error("nonrational Binet value");
    }
    return *r;
}

template <std::size_t N>
std::vector<QuadraticElement> to_vector(const Hypercomplex<QuadraticElement, N>& u) {
    return {u.coefficients().begin(), u.coefficients().end()};
}

template <std::size_t N>
ClassicalBinetReport classical(long n, const Rational& a, const Rational& b, ClassicalKind kind,
                               bool lucas) {
    const Params fib = fibonacci_params(a, b);
    const ClosedForm cf(fib);
    const StarConstants<N>& s = cf.stars<N>();
    const QuadraticElement an = cf.roots.alpha_pow(n);
    const QuadraticElement bn = cf.roots.beta_pow(n);
    const bool even = zeta(n) == 0;

    Hypercomplex<QuadraticElement, N> formula = s.alpha_star;
    if (!lucas) {
        const auto& sa = even ? s.alpha_star : s.alpha_dstar;
        const auto& sb = even ? s.beta_star : s.beta_dstar;
        const QuadraticElement scale =
            quad_inv(cf.roots.alpha - cf.roots.beta) * fib.ab().pow(floor_half(n)).inverse();
        formula = hc_scale(scale, hc_scale(an, sa) - hc_scale(bn, sb));
    } else {
        const auto& sa = even ? s.alpha_dstar : s.alpha_star;
        const auto& sb = even ? s.beta_dstar : s.beta_star;
        const Rational scale = fib.ab().pow(floor_half(n + 1)).inverse();
        formula = hc_scale(scale, hc_scale(an, sa) + hc_scale(bn, sb));
    }

    SequenceEngine engine(lucas ? lucas_params(a, b) : fib);
    const auto seq = lift_sequence<N>(n, engine);
    bool equal = true;
    for (std::size_t i = 0; i < N; ++i) {
        equal = equal && formula[i] == cf.embed(seq[i]);
    }
    return ClassicalBinetReport{kind, n, a, b, to_vector(formula),
                                {seq.coefficients().begin(), seq.coefficients().end()}, equal};
}

}  // namespace

template <std::size_t N>
StarConstants<N> build_star_constants(const Params& params) {
    const Roots r = roots(params);
    return StarConstants<N>{weighted_powers<N>(params, r.alpha, false),
                            weighted_powers<N>(params, r.beta, false),
                            weighted_powers<N>(params, r.alpha, true),
                            weighted_powers<N>(params, r.beta, true)};
}

template StarConstants<4> build_star_constants<4>(const Params&);
template StarConstants<8> build_star_constants<8>(const Params&);

ClosedForm::ClosedForm(const Params& p)
    : params(p),
      context(p.context()),
      roots(bpf::roots(p)),
      constants(binet_constants(p)),
      quat(build_star_constants<4>(p)),
      oct(build_star_constants<8>(p)) {}

template <std::size_t N>
Hypercomplex<Rational, N> hyper_binet(long n, const ClosedForm& cf) {
    if (n < 0) {
        throw std::invalid_argument("hypercomplex Binet form requires n >= 0");
    }
    const StarConstants<N>& s = cf.stars<N>();
    const bool even = zeta(n) == 0;
    const auto& sa = even ? s.alpha_star : s.alpha_dstar;
    const auto& sb = even ? s.beta_star : s.beta_dstar;
    const QuadraticElement ka = cf.constants.A * cf.roots.alpha_pow(n - 1);
    const QuadraticElement kb = cf.constants.B * cf.roots.beta_pow(n - 1);
    const Rational scale = cf.params.ab().pow(floor_half(n)).inverse();
    return require_rational(hc_scale(scale, hc_scale(ka, sa) - hc_scale(kb, sb)));
}

template Hypercomplex<Rational, 4> hyper_binet<4>(long, const ClosedForm&);
template Hypercomplex<Rational, 8> hyper_binet<8>(long, const ClosedForm&);

Quaternion<Rational> W_binet(long n, const Params& params) {
    return hyper_binet<4>(n, ClosedForm(params));
}

Octonion<Rational> OW_binet(long n, const Params& params) {
    return hyper_binet<8>(n, ClosedForm(params));
}

std::string to_string(ClassicalKind kind) {
    switch (kind) {
        case ClassicalKind::FibQuat:
            return "fib-quat";
        case ClassicalKind::LucasQuat:
            return "lucas-quat";
        case ClassicalKind::FibOct:
            return "fib-oct";
        case ClassicalKind::LucasOct:
            return "lucas-oct";
    }
    return "unknown";
}

ClassicalKind parse_classical_kind(const std::string& text) {
    for (auto k : {ClassicalKind::FibQuat, ClassicalKind::LucasQuat, ClassicalKind::FibOct,
                   ClassicalKind::LucasOct}) {
        if (to_string(k) == text) {
            return k;
        }
    }
    throw std::invalid_argument("unknown classical Binet kind \"" + text + "\"");
}

ClassicalBinetReport classical_binet_check(long n, const Rational& a, const Rational& b,
                                           ClassicalKind kind) {
    if (n < 0) {
        throw std::invalid_argument("classical Binet check requires n >= 0");
    }
    switch (kind) {
        case ClassicalKind::FibQuat:
            return classical<4>(n, a, b, kind, false);
        case ClassicalKind::LucasQuat:
            return classical<4>(n, a, b, kind, true);
        case ClassicalKind::FibOct:
            return classical<8>(n, a, b, kind, false);
        case ClassicalKind::LucasOct:
            return classical<8>(n, a, b, kind, true);
    }
    throw std::invalid_argument("unknown classical Binet kind");
}

}  // namespace bpf
