#ifndef BPF_HYPERCOMPLEX_HPP
#define BPF_HYPERCOMPLEX_HPP

#include "bpf/quadratic.hpp"
#include "bpf/rational.hpp"

#include <array>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace bpf {

/// Commutative coefficient ring with exact equality. zero_like/one_like are
/// found by ADL and carry any context (e.g. the radicand of Q[sqrt(D)]).
template <typename T>
concept CoefficientRing = std::copyable<T> && requires(const T& x, const T& y) {
    { x + y } -> std::convertible_to<T>;
    { x - y } -> std::convertible_to<T>;
    { x * y } -> std::convertible_to<T>;
    { -x } -> std::convertible_to<T>;
    { x == y } -> std::convertible_to<bool>;
    { zero_like(x) } -> std::same_as<T>;
    { one_like(x) } -> std::same_as<T>;
};

/// e_i e_j = sign[i][j] * e_{index[i][j]}.
template <std::size_t N>
struct MultiplicationTable {
    std::array<std::array<int, N>, N> sign{};
    std::array<std::array<std::size_t, N>, N> index{};

    friend bool operator==(const MultiplicationTable&, const MultiplicationTable&) = default;
};

/// Tables parsed from their literal forms, validated on first use.
const MultiplicationTable<4>& quaternion_table();
const MultiplicationTable<8>& octonion_table();

/// The literal text the tables are parsed from, one row per line with
/// entries such as "1", "-1", "e3", "-e5".
std::string_view quaternion_table_literal();
std::string_view octonion_table_literal();

template <std::size_t N>
MultiplicationTable<N> parse_table(std::string_view literal);

/// Throws std::logic_error if the table breaks an algebra invariant
/// (identity row/column, e_l^2 = -1, rows are signed permutations).
template <std::size_t N>
void validate_table(const MultiplicationTable<N>& table);

template <std::size_t N>
const MultiplicationTable<N>& table_for() {
    static_assert(N == 4 || N == 8, "only quaternions and octonions are supported");
    if constexpr (N == 4) {
        return quaternion_table();
    } else {
        return octonion_table();
    }
}

namespace detail {
template <typename T, std::size_t... I>
std::array<T, sizeof...(I)> filled(const T& v, std::index_sequence<I...>) {
    return {((void)I, v)...};
}
}  // namespace detail

/// Element of the N-dimensional algebra (N = 4 quaternions, N = 8 octonions)
/// over a commutative coefficient ring. Stored componentwise, unnormalized.
template <CoefficientRing T, std::size_t N>
class Hypercomplex {
public:
    static constexpr std::size_t dimension = N;
    using coefficient_type = T;

    explicit Hypercomplex(std::array<T, N> c) : c_(std::move(c)) {}

    static Hypercomplex filled(const T& v) {
        return Hypercomplex(detail::filled(v, std::make_index_sequence<N>{}));
    }
    static Hypercomplex zero(const T& like) { return filled(zero_like(like)); }
    /// zero everywhere except coefficient `k`.
    static Hypercomplex basis(std::size_t k, const T& coefficient) {
        Hypercomplex out = zero(coefficient);
        out.c_.at(k) = coefficient;
        return out;
    }

    [[nodiscard]] const T& operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] T& operator[](std::size_t i) { return c_[i]; }
    [[nodiscard]] const std::array<T, N>& coefficients() const { return c_; }

    Hypercomplex& operator+=(const Hypercomplex& rhs) {
        for (std::size_t i = 0; i < N; ++i) {
            c_[i] = c_[i] + rhs.c_[i];
        }
        return *this;
    }
    Hypercomplex& operator-=(const Hypercomplex& rhs) {
        for (std::size_t i = 0; i < N; ++i) {
            c_[i] = c_[i] - rhs.c_[i];
        }
        return *this;
    }

    friend Hypercomplex operator+(Hypercomplex l, const Hypercomplex& r) { return l += r; }
    friend Hypercomplex operator-(Hypercomplex l, const Hypercomplex& r) { return l -= r; }
    friend Hypercomplex operator-(const Hypercomplex& u) {
        Hypercomplex out = u;
        for (auto& x : out.c_) {
            x = -x;
        }
        return out;
    }
    /// Bilinear expansion over the multiplication table; order matters.
    friend Hypercomplex operator*(const Hypercomplex& u, const Hypercomplex& v) {
        const auto& table = table_for<N>();
        Hypercomplex out = zero(u.c_[0]);
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                const int s = table.sign[i][j];
                if (s == 0) {
                    continue;
                }
                T term = u.c_[i] * v.c_[j];
                T& slot = out.c_[table.index[i][j]];
                slot = s > 0 ? slot + term : slot - term;
            }
        }
        return out;
    }

    friend bool operator==(const Hypercomplex& l, const Hypercomplex& r) {
        for (std::size_t i = 0; i < N; ++i) {
            if (!(l.c_[i] == r.c_[i])) {
                return false;
            }
        }
        return true;
    }

private:
    std::array<T, N> c_;
};

template <CoefficientRing T>
using Quaternion = Hypercomplex<T, 4>;
template <CoefficientRing T>
using Octonion = Hypercomplex<T, 8>;

template <CoefficientRing T, std::size_t N>
Hypercomplex<T, N> hc_mul(const Hypercomplex<T, N>& u, const Hypercomplex<T, N>& v) {
    return u * v;
}

template <CoefficientRing T, std::size_t N>
Hypercomplex<T, N> hc_add(const Hypercomplex<T, N>& u, const Hypercomplex<T, N>& v) {
    return u + v;
}

/// Central scaling s*u. S is any scalar whose product with T lands in T.
template <typename S, CoefficientRing T, std::size_t N>
    requires requires(const S& s, const T& t) {
        { s * t } -> std::convertible_to<T>;
    }
Hypercomplex<T, N> hc_scale(const S& s, const Hypercomplex<T, N>& u) {
    Hypercomplex<T, N> out = u;
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = s * u[i];
    }
    return out;
}

template <CoefficientRing T, std::size_t N>
Hypercomplex<T, N> hc_conj(const Hypercomplex<T, N>& u) {
    Hypercomplex<T, N> out = u;
    for (std::size_t i = 1; i < N; ++i) {
        out[i] = -u[i];
    }
    return out;
}

/// Norm computed as u * conj(u), which must be a scalar equal to the sum of
/// squares. Any disagreement means a broken table, reported as logic_error.
template <CoefficientRing T, std::size_t N>
T hc_norm(const Hypercomplex<T, N>& u) {
    const Hypercomplex<T, N> product = u * hc_conj(u);
    T squares = zero_like(u[0]);
    for (std::size_t i = 0; i < N; ++i) {
        squares = squares + u[i] * u[i];
    }
    if (!(product[0] == squares)) {
        throw std::logic_error("norm via conjugation disagrees with sum of squares");
    }
    const T zero = zero_like(u[0]);
    for (std::size_t i = 1; i < N; ++i) {
        if (!(product[i] == zero)) {
            throw std::logic_error("u * conj(u) has a nonzero imaginary part");
        }
    }
    return squares;
}

/// Embeds a rational element into Q[sqrt(D)] coefficients.
template <std::size_t N>
Hypercomplex<QuadraticElement, N> lift(const Hypercomplex<Rational, N>& u,
                                       const QuadraticContext& ctx) {
    std::array<QuadraticElement, N> c = detail::filled(QuadraticElement(Rational(0), ctx),
                                                       std::make_index_sequence<N>{});
    for (std::size_t i = 0; i < N; ++i) {
        c[i] = QuadraticElement(u[i], ctx);
    }
    return Hypercomplex<QuadraticElement, N>(std::move(c));
}

/// Rational part if every sqrt(D) component vanishes.
template <std::size_t N>
std::optional<Hypercomplex<Rational, N>> rational_part(
    const Hypercomplex<QuadraticElement, N>& u) {
    auto out = Hypercomplex<Rational, N>::zero(Rational(0));
    for (std::size_t i = 0; i < N; ++i) {
        if (!u[i].is_rational()) {
            return std::nullopt;
        }
        out[i] = u[i].x();
    }
    return out;
}

}  // namespace bpf

#endif  // BPF_HYPERCOMPLEX_HPP
