#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace kk {

using BigInt = boost::multiprecision::cpp_int;

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidHypergraph : std::runtime_error {
    explicit InvalidHypergraph(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// Generalized binomial coefficient: n(n-1)...(n-k+1)/k! for k >= 1,
/// 1 for k == 0 (any integer n, including negatives), 0 for k < 0.
inline BigInt binom(const BigInt& n, long long k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact: the running product is a binomial times i!
    }
    return r;
}

inline BigInt binom(long long n, long long k) { return binom(BigInt(n), k); }

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt bigint_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return BigInt(s);
}

/// floor(log2(n)) for n >= 1.
inline int ilog2(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("ilog2 requires n >= 1");
    return static_cast<int>(boost::multiprecision::msb(n));
}

}  // namespace kk
