#ifndef BPF_TESTS_SUPPORT_HPP
#define BPF_TESTS_SUPPORT_HPP

#include "bpf/hypercomplex.hpp"
#include "bpf/sequence.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace bpf::test {

inline Rational R(const char* text) { return Rational::parse(text); }

template <std::size_t N>
Hypercomplex<Rational, N> H(std::initializer_list<long> values) {
    auto out = Hypercomplex<Rational, N>::zero(Rational(0));
    std::size_t i = 0;
    for (long v : values) {
        out[i++] = Rational(v);
    }
    return out;
}

inline Quaternion<Rational> Hq(std::initializer_list<long> values) { return H<4>(values); }
inline Octonion<Rational> Ho(std::initializer_list<long> values) { return H<8>(values); }

/// Small random rationals with denominators up to 7, fixed seed per caller.
class RandomRationals {
public:
    explicit RandomRationals(unsigned seed) : gen_(seed) {}
    Rational next() {
        std::uniform_int_distribution<long> num(-20, 20);
        std::uniform_int_distribution<long> den(1, 7);
        return Rational(num(gen_), den(gen_));
    }
    template <std::size_t N>
    Hypercomplex<Rational, N> hyper() {
        auto out = Hypercomplex<Rational, N>::zero(Rational(0));
        for (std::size_t i = 0; i < N; ++i) {
            out[i] = next();
        }
        return out;
    }

private:
    std::mt19937 gen_;
};

/// (a, b) pairs and initial values of the default verification grid.
inline std::vector<Params> grid() {
    const std::vector<std::pair<Rational, Rational>> ab = {
        {Rational(1), Rational(1)}, {Rational(2), Rational(1)}, {Rational(1), Rational(2)},
        {Rational(2), Rational(3)}, {Rational(1), Rational(-3)}, {Rational(1, 2), Rational(3)}};
    std::vector<Params> out;
    for (const auto& [a, b] : ab) {
        out.push_back(fibonacci_params(a, b));
        out.push_back(lucas_params(a, b));
        out.emplace_back(a, b, Rational(1), Rational(1));
        out.emplace_back(a, b, Rational(1), Rational(4));
    }
    return out;
}

}  // namespace bpf::test

#endif
