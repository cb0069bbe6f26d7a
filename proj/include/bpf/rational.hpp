#ifndef BPF_RATIONAL_HPP
#define BPF_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bpf {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Backed by GMP's mpq_class; every arithmetic result is canonicalized, so
/// equality is structural equality of numerator and denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(long num, long den);

    /// Parses "p" or "p/q" with an optional sign on p. No decimals, no
    /// whitespace, q > 0 after parsing. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::string numerator_string() const;
    [[nodiscard]] std::string denominator_string() const;

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Integer power; negative exponents require a nonzero base.
    [[nodiscard]] Rational pow(long exponent) const;
    [[nodiscard]] Rational inverse() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& x);

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

    [[nodiscard]] const mpq_class& raw() const { return value_; }

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_;
};

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

}  // namespace bpf

#endif  // BPF_RATIONAL_HPP
