#ifndef BPF_SERIES_HPP
#define BPF_SERIES_HPP

#include "bpf/hypercomplex.hpp"
#include "bpf/sequence.hpp"

#include <cstddef>
#include <vector>

namespace bpf {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] Rational coefficient(std::size_t i) const;

    friend Polynomial operator+(const Polynomial& l, const Polynomial& r);
    friend Polynomial operator*(const Polynomial& l, const Polynomial& r);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Rational> c_;
};

/// Power series truncated after t^order.
class PowerSeries {
public:
    PowerSeries(std::vector<Rational> coefficients, std::size_t order);
    static PowerSeries zero(std::size_t order);
    static PowerSeries from_polynomial(const Polynomial& p, std::size_t order);

    [[nodiscard]] std::size_t order() const { return order_; }
    [[nodiscard]] const Rational& operator[](std::size_t i) const { return c_.at(i); }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return c_; }
    /// Index of the first nonzero coefficient, or order + 1 if all vanish.
    [[nodiscard]] std::size_t valuation() const;

    /// Truncates (never extends) to a lower order.
    [[nodiscard]] PowerSeries truncated(std::size_t order) const;

    friend PowerSeries operator+(const PowerSeries& l, const PowerSeries& r);
    friend PowerSeries operator-(const PowerSeries& l, const PowerSeries& r);
    friend PowerSeries operator*(const PowerSeries& l, const PowerSeries& r);
    friend PowerSeries operator*(const Rational& s, const PowerSeries& r);
    /// Compares coefficients up to the smaller of the two orders.
    friend bool operator==(const PowerSeries& l, const PowerSeries& r);

private:
    std::vector<Rational> c_;
    std::size_t order_;
};

/// num / den; expandable at t = 0 only when den(0) != 0.
struct RationalFunction {
    Polynomial num;
    Polynomial den;

    friend RationalFunction operator*(const RationalFunction& l, const RationalFunction& r) {
        return {l.num * r.num, l.den * r.den};
    }
};

/// The unique s with num = den * s through t^order, solved coefficient by
/// coefficient. Throws std::domain_error "pole at origin" if den(0) = 0.
PowerSeries series_expand(const RationalFunction& rf, std::size_t order);
/// Same solve with a series numerator.
PowerSeries series_divide(const PowerSeries& num, const Polynomial& den);

/// f(t) = sum_{n>=1} w_{2n-1} t^{2n-1}
///      = (w1 t + (b w0 - w1) t^3) / (1 - (ab+2) t^2 + t^4).
PowerSeries f_series(const Params& params, std::size_t order);

/// R(t, s) = (f(t) - sum_{k=1}^{floor((s+1)/2)} w_{2k-1} t^{2k-1}) t^{1-s},
/// truncated after t^order. The shift is a reindexing of a series whose
/// valuation is checked first; a violation throws std::logic_error
/// "negative exponent after shift".
PowerSeries correction_term(const Params& params, std::size_t s, std::size_t order);

/// Coefficients of t^0..t^order of the generating function
///   [X_0 + (X_1 - b X_0) t + (a - b) sum_s R(t, s) e_s] / (1 - b t - t^2)
/// with X = W (N = 4) or OW (N = 8), assembled one basis component at a time.
template <std::size_t N>
std::vector<Hypercomplex<Rational, N>> genfunc(const Params& params, std::size_t order);

inline std::vector<Quaternion<Rational>> genfunc_quat(const Params& params, std::size_t order) {
    return genfunc<4>(params, order);
}
inline std::vector<Octonion<Rational>> genfunc_oct(const Params& params, std::size_t order) {
    return genfunc<8>(params, order);
}

}  // namespace bpf

#endif  // BPF_SERIES_HPP
