#ifndef BPF_HYPERSEQ_HPP
#define BPF_HYPERSEQ_HPP

#include "bpf/hypercomplex.hpp"
#include "bpf/sequence.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace bpf {

/// sum_l w_{n+l} e_l for l = 0..N-1.
template <std::size_t N>
Hypercomplex<Rational, N> lift_sequence(long n, SequenceEngine& engine) {
    auto out = Hypercomplex<Rational, N>::zero(Rational(0));
    for (std::size_t l = 0; l < N; ++l) {
        out[l] = engine.value(n + static_cast<long>(l));
    }
    return out;
}

/// Generalized bi-periodic Fibonacci quaternion W_n = (w_n, .., w_{n+3}).
inline Quaternion<Rational> W(long n, SequenceEngine& engine) { return lift_sequence<4>(n, engine); }
/// Generalized bi-periodic Fibonacci octonion OW_n = (w_n, .., w_{n+7}).
inline Octonion<Rational> OW(long n, SequenceEngine& engine) { return lift_sequence<8>(n, engine); }

using QuadQuaternion = Quaternion<QuadraticElement>;
using QuadOctonion = Octonion<QuadraticElement>;

/// Basis-weighted root powers packaged as hypercomplex numbers over Q[sqrt(D)].
/// Component l of alpha_star is a^{zeta(l+1)} / (ab)^{floor(l/2)} alpha^l,
/// component l of alpha_dstar is a^{zeta(l)} / (ab)^{floor((l+1)/2)} alpha^l,
/// and the beta versions use beta. For N = 8 these are gamma*, delta*,
/// gamma**, delta**.
template <std::size_t N>
struct StarConstants {
    Hypercomplex<QuadraticElement, N> alpha_star;
    Hypercomplex<QuadraticElement, N> beta_star;
    Hypercomplex<QuadraticElement, N> alpha_dstar;
    Hypercomplex<QuadraticElement, N> beta_dstar;
};

using QuatStarConstants = StarConstants<4>;
using OctStarConstants = StarConstants<8>;

template <std::size_t N>
StarConstants<N> build_star_constants(const Params& params);

inline QuatStarConstants star_constants(const Params& params) {
    return build_star_constants<4>(params);
}
inline OctStarConstants oct_star_constants(const Params& params) {
    return build_star_constants<8>(params);
}

/// Everything on the closed-form side for one parameter set.
struct ClosedForm {
    explicit ClosedForm(const Params& p);

    Params params;
    QuadraticContext context;
    Roots roots;
    BinetConstants constants;
    QuatStarConstants quat;
    OctStarConstants oct;

    template <std::size_t N>
    [[nodiscard]] const StarConstants<N>& stars() const {
        if constexpr (N == 4) {
            return quat;
        } else {
            return oct;
        }
    }

    /// Rational constant embedded in Q[sqrt(D)].
    [[nodiscard]] QuadraticElement embed(const Rational& x) const {
        return QuadraticElement(x, context);
    }
};

/// (1/(ab)^{floor(n/2)}) (A S_alpha alpha^{n-1} - B S_beta beta^{n-1}) with
/// S = star constants for even n and double-star constants for odd n.
/// Throws std::logic_error "nonrational Binet value" on a sqrt(D) residue.
template <std::size_t N>
Hypercomplex<Rational, N> hyper_binet(long n, const ClosedForm& cf);

Quaternion<Rational> W_binet(long n, const Params& params);
Octonion<Rational> OW_binet(long n, const Params& params);

/// Which classical closed form to test.
enum class ClassicalKind { FibQuat, LucasQuat, FibOct, LucasOct };

std::string to_string(ClassicalKind kind);
ClassicalKind parse_classical_kind(const std::string& text);

struct ClassicalBinetReport {
    ClassicalKind kind;
    long n;
    Rational a;
    Rational b;
    std::vector<QuadraticElement> formula;  // printed closed form
    std::vector<Rational> sequence;         // recurrence under the specialization
    bool equal;
};

/// Evaluates the classical quaternion/octonion Binet forms exactly as
/// printed (exponent n, divisor (ab)^{floor(n/2)} for the Fibonacci forms,
/// (ab)^{floor((n+1)/2)} for the Lucas forms) and compares them with W/OW
/// under fibonacci_params(a, b) / lucas_params(a, b). Mismatches are report
/// content, not errors.
ClassicalBinetReport classical_binet_check(long n, const Rational& a, const Rational& b,
                                           ClassicalKind kind);

}  // namespace bpf

#endif  // BPF_HYPERSEQ_HPP
