#include "kk/decomposition.hpp"

namespace kk {

BigInt eval_decomposition(const Decomposition& d) {
    BigInt total = 0;
    for (std::size_t i = 0; i < d.coeffs.size(); ++i)
        total += binom(d.coeffs[i], d.k - static_cast<long long>(i));
    return total;
}

bool decomposition_valid(const Decomposition& d) {
    const auto& a = d.coeffs;
    const int k = d.k;
    if (k < 1) return false;
    switch (d.kind) {
        case Decomposition::Kind::KBinomial: {
            const int t = static_cast<int>(a.size()) - 1;
            if (t < 0 || t > k - 1) return false;
            for (int i = 0; i + 1 <= t; ++i)
                if (a[i] <= a[i + 1]) return false;
            return a[t] >= k - t && k - t >= 1;
        }
        case Decomposition::Kind::Full: {
            if (static_cast<int>(a.size()) != k) return false;
            for (int i = 0; i + 2 < k; ++i)
                if (a[i] <= a[i + 1]) return false;
            if (k >= 2 && a[k - 2] < a[k - 1]) return false;
            return a[k - 1] >= 1;
        }
        case Decomposition::Kind::Shadow: {
            if (static_cast<int>(a.size()) != k) return false;
            for (int i = 0; i + 2 < k; ++i)
                if (a[i] <= a[i + 1]) return false;
            if (k >= 2 && a[k - 2] < a[k - 1]) return false;
            return true;
        }
    }
    return false;
}

namespace {

// Largest a with binom(a, d) <= m, for m >= 1, d >= 1.
BigInt greedy_coefficient(const BigInt& m, int d) {
    BigInt lo = d;  // binom(d, d) = 1 <= m
    BigInt hi = lo + 1;
    while (binom(hi, d) <= m) {
        lo = hi;
        hi *= 2;
    }
    // invariant: binom(lo, d) <= m < binom(hi, d)
    while (hi - lo > 1) {
        BigInt mid = (lo + hi) / 2;
        if (binom(mid, d) <= m)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

Decomposition k_binomial_decomposition(const BigInt& m, int k) {
    if (m <= 0) throw std::invalid_argument("k_binomial_decomposition: m must be positive");
    if (k < 1) throw std::invalid_argument("k_binomial_decomposition: k must be positive");
    Decomposition d;
    d.kind = Decomposition::Kind::KBinomial;
    d.k = k;
    BigInt rem = m;
    for (int i = 0; i < k && rem > 0; ++i) {
        BigInt a = greedy_coefficient(rem, k - i);
        d.coeffs.push_back(a);
        rem -= binom(a, k - i);
    }
    if (rem != 0 || !decomposition_valid(d) || eval_decomposition(d) != m)
        throw std::logic_error("k_binomial_decomposition: internal inconsistency");
    return d;
}

Decomposition full_k_binomial_decomposition(const BigInt& m, int k) {
    Decomposition d = k_binomial_decomposition(m, k);
    d.kind = Decomposition::Kind::Full;
    // Cascade the last term binom(a, r) into binom(a-1, r) + binom(a-2, r-1) +
    // ... + binom(a-r+1, 2) + binom(a-r+1, 1); one cascade reaches length k.
    if (static_cast<int>(d.coeffs.size()) < k) {
        const int t = static_cast<int>(d.coeffs.size()) - 1;
        const int r = k - t;  // denominator of the last present term, >= 2 here
        BigInt a = d.coeffs.back();
        d.coeffs.back() = a - 1;
        for (int dn = r - 1; dn >= 2; --dn) d.coeffs.push_back(a - 1 - (r - dn));
        d.coeffs.push_back(a - r + 1);
    }
    if (!decomposition_valid(d) || eval_decomposition(d) != m)
        throw std::logic_error("full_k_binomial_decomposition: internal inconsistency");
    return d;
}

BigInt kk_lower_bound(const BigInt& m, int k, int i) {
    if (i < 0 || i > k - 1) throw std::invalid_argument("kk_lower_bound: i out of [0, k-1]");
    Decomposition d = k_binomial_decomposition(m, k);
    BigInt total = 0;
    for (std::size_t j = 0; j < d.coeffs.size(); ++j)
        total += binom(d.coeffs[j], k - static_cast<long long>(j) - i);
    return total;
}

std::string decomposition_kind_name(Decomposition::Kind kind) {
    switch (kind) {
        case Decomposition::Kind::KBinomial: return "kbinomial";
        case Decomposition::Kind::Full: return "full";
        case Decomposition::Kind::Shadow: return "shadow";
    }
    return "?";
}

}  // namespace kk
