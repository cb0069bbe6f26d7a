#ifndef BPF_SEQUENCE_HPP
#define BPF_SEQUENCE_HPP

#include "bpf/quadratic.hpp"
#include "bpf/rational.hpp"

#include <deque>
#include <string>

namespace bpf {

/// floor(n / 2) for any sign of n.
constexpr long floor_half(long n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

/// Parity function n - 2 floor(n/2): 0 for even n, 1 for odd n, zeta(-1) = 1.
constexpr int zeta(long n) { return static_cast<int>(n - 2 * floor_half(n)); }

/// Parameters (a, b, w0, w1) of one generalized bi-periodic sequence:
///   w_n = a w_{n-1} + w_{n-2} for even n, b w_{n-1} + w_{n-2} for odd n.
///
/// Construction enforces a != 0, b != 0, D = a^2 b^2 + 4ab != 0 and that the
/// initial values are not both zero.
class Params {
public:
    /// Throws std::invalid_argument naming the violated invariant.
    Params(Rational a, Rational b, Rational w0, Rational w1);

    [[nodiscard]] const Rational& a() const { return a_; }
    [[nodiscard]] const Rational& b() const { return b_; }
    [[nodiscard]] const Rational& w0() const { return w0_; }
    [[nodiscard]] const Rational& w1() const { return w1_; }
    [[nodiscard]] const Rational& discriminant() const { return d_; }
    [[nodiscard]] Rational ab() const { return a_ * b_; }
    [[nodiscard]] QuadraticContext context() const { return QuadraticContext(d_); }

    /// Coefficient multiplying w_{n-1} in the step that produces w_n.
    [[nodiscard]] const Rational& coefficient(long n) const { return zeta(n) == 0 ? a_ : b_; }

    /// False when a or b is negative; such inputs are outside the
    /// positive-parameter setting the closed forms were stated for.
    [[nodiscard]] bool positive_setting() const { return a_.sign() > 0 && b_.sign() > 0; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Params&, const Params&) = default;

private:
    Rational a_;
    Rational b_;
    Rational w0_;
    Rational w1_;
    Rational d_;
};

/// (a, b, 0, 1): the bi-periodic Fibonacci numbers q_n.
Params fibonacci_params(const Rational& a, const Rational& b);
/// (b, a, 2, a): a and b swapped, w0 = 2, w1 = a. The resulting w_n are the
/// bi-periodic Lucas numbers p_n (p_n = b p_{n-1} + p_{n-2} for even n).
Params lucas_params(const Rational& a, const Rational& b);

/// Memoized w_n for every integer n; negative indices come from running the
/// recurrence backwards, w_{n-2} = w_n - c(n) w_{n-1}. Not thread-safe;
/// use one engine per thread.
class SequenceEngine {
public:
    explicit SequenceEngine(Params params);

    [[nodiscard]] const Params& params() const { return params_; }
    const Rational& value(long n);

private:
    Params params_;
    std::deque<Rational> forward_;   // w_0, w_1, ...
    std::deque<Rational> backward_;  // w_{-1}, w_{-2}, ...
};

/// Characteristic roots of x^2 - ab x - ab in Q[sqrt(D)]:
/// alpha = (ab + sqrt(D)) / 2, beta = (ab - sqrt(D)) / 2.
struct Roots {
    QuadraticElement alpha;
    QuadraticElement beta;
    Rational ab;

    /// alpha^k for any integer k; alpha^{-1} = -beta / (ab) so no general
    /// inversion is needed.
    [[nodiscard]] QuadraticElement alpha_pow(long k) const;
    [[nodiscard]] QuadraticElement beta_pow(long k) const;
};

Roots roots(const Params& params);

struct BinetConstants {
    QuadraticElement A;  // (alpha w1 + b w0) / (alpha - beta)
    QuadraticElement B;  // (beta w1 + b w0) / (alpha - beta)
};

BinetConstants binet_constants(const Params& params);

/// w_n from the closed form
///   a^{zeta(n+1)} / (ab)^{floor(n/2)} * (A alpha^{n-1} - B beta^{n-1}).
/// Throws std::logic_error "nonrational Binet value" on a sqrt(D) residue.
Rational w_binet(long n, const Params& params);

}  // namespace bpf

#endif  // BPF_SEQUENCE_HPP
