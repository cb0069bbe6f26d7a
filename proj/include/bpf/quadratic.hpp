#ifndef BPF_QUADRATIC_HPP
#define BPF_QUADRATIC_HPP

#include "bpf/rational.hpp"

#include <iosfwd>
#include <string>

namespace bpf {

/// The radicand D of the formal ring Q[t]/(t^2 - D). D must be nonzero.
class QuadraticContext {
public:
    explicit QuadraticContext(Rational radicand);

    [[nodiscard]] const Rational& radicand() const { return radicand_; }

    friend bool operator==(const QuadraticContext&, const QuadraticContext&) = default;

private:
    Rational radicand_;
};

/// x + y*sqrt(D) in Q[sqrt(D)], treated as a ring: when D is a perfect square
/// zero divisors exist and inversion is norm-checked.
class QuadraticElement {
public:
    QuadraticElement(Rational x, Rational y, QuadraticContext context);
    /// Rational embedding x + 0*sqrt(D).
    QuadraticElement(Rational x, QuadraticContext context);

    [[nodiscard]] const Rational& x() const { return x_; }
    [[nodiscard]] const Rational& y() const { return y_; }
    [[nodiscard]] const QuadraticContext& context() const { return context_; }

    [[nodiscard]] bool is_rational() const { return y_.is_zero(); }
    /// x^2 - D*y^2
    [[nodiscard]] Rational field_norm() const;

    [[nodiscard]] std::string to_string() const;

    QuadraticElement& operator+=(const QuadraticElement& rhs);
    QuadraticElement& operator-=(const QuadraticElement& rhs);
    QuadraticElement& operator*=(const QuadraticElement& rhs);
    QuadraticElement& operator*=(const Rational& rhs);

    friend QuadraticElement operator+(QuadraticElement l, const QuadraticElement& r) { return l += r; }
    friend QuadraticElement operator-(QuadraticElement l, const QuadraticElement& r) { return l -= r; }
    friend QuadraticElement operator*(QuadraticElement l, const QuadraticElement& r) { return l *= r; }
    friend QuadraticElement operator*(QuadraticElement l, const Rational& r) { return l *= r; }
    friend QuadraticElement operator*(const Rational& l, QuadraticElement r) { return r *= l; }
    friend QuadraticElement operator-(const QuadraticElement& u);

    /// Componentwise equality; elements of different contexts are never equal.
    friend bool operator==(const QuadraticElement&, const QuadraticElement&) = default;

    friend std::ostream& operator<<(std::ostream& os, const QuadraticElement& u);

private:
    void require_same_context(const QuadraticElement& other) const;

    Rational x_;
    Rational y_;
    QuadraticContext context_;
};

/// (u.x v.x + D u.y v.y, u.x v.y + u.y v.x). Throws on mixed contexts.
QuadraticElement quad_mul(const QuadraticElement& u, const QuadraticElement& v);
/// Conjugate-based inverse (x, -y) / (x^2 - D y^2). Throws std::domain_error
/// "non-invertible element" when the field norm vanishes.
QuadraticElement quad_inv(const QuadraticElement& u);
QuadraticElement quad_conj(const QuadraticElement& u);
/// Nonnegative powers by repeated squaring; negative powers go through quad_inv.
QuadraticElement pow(const QuadraticElement& u, long exponent);

inline QuadraticElement zero_like(const QuadraticElement& u) {
    return QuadraticElement(Rational(0), u.context());
}
inline QuadraticElement one_like(const QuadraticElement& u) {
    return QuadraticElement(Rational(1), u.context());
}

}  // namespace bpf

#endif  // BPF_QUADRATIC_HPP
