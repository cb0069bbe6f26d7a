#ifndef BPF_SERIALIZE_HPP
#define BPF_SERIALIZE_HPP

#include "bpf/hyperseq.hpp"
#include "bpf/identities.hpp"

#include <json.hpp>

#include <string>

namespace bpf {

// Rationals serialize as "p/q" (or "p") strings, hypercomplex numbers as
// arrays of those, quadratic elements as "x" or "x+y*sqrt(D)".

inline nlohmann::json to_json(const Rational& x) { return x.to_string(); }
inline nlohmann::json to_json(const QuadraticElement& x) { return x.to_string(); }

template <typename T, std::size_t N>
nlohmann::json to_json(const Hypercomplex<T, N>& u) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < N; ++i) {
        out.push_back(to_json(u[i]));
    }
    return out;
}

nlohmann::json to_json(const QuatMatrix2& m);
nlohmann::json to_json(const Params& p);
nlohmann::json to_json(const IdentityReport& report);

/// Parses an array of rational strings back into a hypercomplex number.
template <std::size_t N>
Hypercomplex<Rational, N> hypercomplex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != N) {
        throw std::invalid_argument("expected an array of " + std::to_string(N) + " rationals");
    }
    auto out = Hypercomplex<Rational, N>::zero(Rational(0));
    for (std::size_t i = 0; i < N; ++i) {
        out[i] = Rational::parse(j[i].get<std::string>());
    }
    return out;
}

/// Canonical single-line JSON (keys sorted, no whitespace).
std::string dump_canonical(const nlohmann::json& j);

std::string csv_header();
/// identity,a,b,w0,w1,indices,equal,hypothesis,gating,note
std::string csv_row(const IdentityReport& report);

}  // namespace bpf

#endif  // BPF_SERIALIZE_HPP
