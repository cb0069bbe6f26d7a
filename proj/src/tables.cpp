#include "bpf/hypercomplex.hpp"

#include <sstream>
#include <string>

namespace bpf {

namespace {

// e1e2 = -e2e1 = e3, e2e3 = -e3e2 = e1, e3e1 = -e1e3 = e2, e_l^2 = -1.
constexpr std::string_view kQuaternionTable =
    "1  e1  e2  e3\n"
    "e1 -1  e3  -e2\n"
    "e2 -e3 -1  e1\n"
    "e3 e2  -e1 -1\n";

// Row i, column j holds e_i e_j.
#ifndef BPF_CORRUPT_TABLE_ENTRY
constexpr std::string_view kOctonionTable =
    "1  e1  e2  e3  e4  e5  e6  e7\n"
    "e1 -1  e3  -e2 e5  -e4 -e7 e6\n"
    "e2 -e3 -1  e1  e6  e7  -e4 -e5\n"
    "e3 e2  -e1 -1  e7  -e6 e5  -e4\n"
    "e4 -e5 -e6 -e7 -1  e1  e2  e3\n"
    "e5 e4  -e7 e6  -e1 -1  -e3 e2\n"
    "e6 e7  e4  -e5 -e2 e3  -1  -e1\n"
    "e7 -e6 e5  e4  -e3 -e2 e1  -1\n";
#else
// Test build only: e3e5 carries the wrong sign.
constexpr std::string_view kOctonionTable =
    "1  e1  e2  e3  e4  e5  e6  e7\n"
    "e1 -1  e3  -e2 e5  -e4 -e7 e6\n"
    "e2 -e3 -1  e1  e6  e7  -e4 -e5\n"
    "e3 e2  -e1 -1  e7  e6  e5  -e4\n"
    "e4 -e5 -e6 -e7 -1  e1  e2  e3\n"
    "e5 e4  -e7 e6  -e1 -1  -e3 e2\n"
    "e6 e7  e4  -e5 -e2 e3  -1  -e1\n"
    "e7 -e6 e5  e4  -e3 -e2 e1  -1\n";
#endif

void parse_entry(const std::string& token, std::size_t n, int& sign, std::size_t& index) {
    std::string_view t = token;
    sign = 1;
    if (!t.empty() && t.front() == '-') {
        sign = -1;
        t.remove_prefix(1);
    }
    if (t == "1") {
        index = 0;
        return;
    }
    if (t.size() == 2 && t[0] == 'e' && t[1] >= '1' && t[1] <= '9') {
        index = static_cast<std::size_t>(t[1] - '0');
        if (index < n) {
            return;
        }
    }
    throw std::logic_error("bad multiplication table entry \"" + token + "\"");
}

template <std::size_t N>
const MultiplicationTable<N>& load(std::string_view literal) {
    static const MultiplicationTable<N> table = [&] {
        auto t = parse_table<N>(literal);
        validate_table(t);
        return t;
    }();
    return table;
}

}  // namespace

template <std::size_t N>
MultiplicationTable<N> parse_table(std::string_view literal) {
    MultiplicationTable<N> table;
    std::istringstream in{std::string(literal)};
    std::string token;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            if (!(in >> token)) {
                throw std::logic_error("multiplication table literal is truncated");
            }
            parse_entry(token, N, table.sign[i][j], table.index[i][j]);
        }
    }
    if (in >> token) {
        throw std::logic_error("multiplication table literal has trailing entries");
    }
    return table;
}

template <std::size_t N>
void validate_table(const MultiplicationTable<N>& table) {
    for (std::size_t k = 0; k < N; ++k) {
        if (table.sign[0][k] != 1 || table.index[0][k] != k || table.sign[k][0] != 1 ||
            table.index[k][0] != k) {
            throw std::logic_error("e0 is not the identity of the multiplication table");
        }
    }
    for (std::size_t l = 1; l < N; ++l) {
        if (table.sign[l][l] != -1 || table.index[l][l] != 0) {
            throw std::logic_error("multiplication table violates e_l^2 = -1");
        }
    }
    for (std::size_t i = 0; i < N; ++i) {
        std::array<bool, N> seen{};
        for (std::size_t j = 0; j < N; ++j) {
            if (seen[table.index[i][j]]) {
                throw std::logic_error("multiplication table row is not a permutation");
            }
            seen[table.index[i][j]] = true;
        }
    }
}

template MultiplicationTable<4> parse_table<4>(std::string_view);
template MultiplicationTable<8> parse_table<8>(std::string_view);
template void validate_table<4>(const MultiplicationTable<4>&);
template void validate_table<8>(const MultiplicationTable<8>&);

std::string_view quaternion_table_literal() { return kQuaternionTable; }
std::string_view octonion_table_literal() { return kOctonionTable; }

const MultiplicationTable<4>& quaternion_table() { return load<4>(kQuaternionTable); }
const MultiplicationTable<8>& octonion_table() { return load<8>(kOctonionTable); }

}  // namespace bpf
