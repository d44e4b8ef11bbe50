#include "kk/bbw.hpp"

#include <algorithm>

namespace kk {

std::vector<BigInt> hamilton_numbers(std::size_t count) {
    std::vector<BigInt> h(count + 1);  // 1-based
    if (count >= 1) h[1] = 2;
    for (std::size_t n = 2; n <= count; ++n) {
        BigInt v = 2;
        for (std::size_t i = 1; i <= n - 1; ++i) {
            BigInt term = binom(h[n - i], static_cast<long long>(i) + 1);
            if (i % 2 == 1)
                v += term;
            else
                v -= term;
        }
        h[n] = v;
    }
    return std::vector<BigInt>(h.begin() + 1, h.end());
}

std::vector<BigInt> hypotenusal_from_hamilton(std::size_t count) {
    if (count == 0) return {};
    std::vector<BigInt> h = hamilton_numbers(count);
    std::vector<BigInt> a(count);
    a[0] = 1;
    for (std::size_t n = 1; n < count; ++n) a[n] = h[n] - h[n - 1];
    return a;
}

std::vector<BigInt> hypotenusal_from_table(std::size_t count) {
    if (count > 8)
        throw CapacityError("triangle table gated to 8 values (the 9th needs ~1e11 rows)");
    std::vector<BigInt> a;
    a.push_back(1);
    if (count >= 2) a.push_back(1);
    if (count <= 2) {
        a.resize(count);
        return a;
    }
    // Row recurrence: first row all ones; below, a cell is the prefix sum of
    // the previous row while the previous column is alive, then it decreases
    // by one per row until it hits zero. The value a[j] is the last
    // prefix-sum cell of column j (the one written when column j-1 dies).
    const std::size_t cols = count;  // columns 1..count
    std::vector<BigInt> prev(cols + 1, 0), cur(cols + 1, 0);
    for (std::size_t j = 1; j <= cols; ++j) prev[j] = 1;
    std::vector<BigInt> last_sigma(cols + 1, 0);
    std::vector<bool> had_sigma(cols + 1, false), extracted(cols + 1, false);
    while (a.size() < count) {
        cur.assign(cols + 1, 0);
        BigInt row_prefix = 0;
        std::vector<BigInt> prefix(cols + 1, 0);
        for (std::size_t j = 1; j <= cols; ++j) {
            row_prefix += prev[j];
            prefix[j] = row_prefix;
        }
        for (std::size_t j = 2; j <= cols; ++j) {
            if (prev[j - 1] > 0) {
                cur[j] = prefix[j];
                last_sigma[j] = prefix[j];
                had_sigma[j] = true;
            } else {
                if (had_sigma[j] && !extracted[j]) {
                    extracted[j] = true;
                    if (a.size() == j) a.push_back(last_sigma[j]);
                }
                if (prev[j] >= 1) cur[j] = prev[j] - 1;
            }
        }
        prev.swap(cur);
    }
    return a;
}

namespace {

// Integer-valued polynomial in the binomial basis: p(u) = sum c_i * C(u, i).
struct IntPoly {
    std::vector<BigInt> c;

    BigInt eval(const BigInt& u) const {
        BigInt acc = 0;
        for (std::size_t i = 0; i < c.size(); ++i) acc += c[i] * binom(u, static_cast<long long>(i));
        return acc;
    }
    // prefix(u) = sum_{x=0..u} p(x); in this basis d_i = c_i + c_{i-1}.
    IntPoly prefix() const {
        IntPoly out;
        out.c.assign(c.size() + 1, 0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            out.c[i] += c[i];
            out.c[i + 1] += c[i];
        }
        return out;
    }
};

struct Segment {
    BigInt len;
    IntPoly poly;  // value at local offset u in [0, len)
};

}  // namespace

std::vector<BigInt> hypotenusal_numbers(std::size_t count) {
    std::vector<BigInt> a;
    if (count == 0) return a;
    a.push_back(1);  // iteration 0 processes the single seeded ball
    // Occupancy at the start of iteration t (t >= 1): every ball has delay t.
    // One iteration maps occupancy o to (prefix sums of o) ++ (S, S-1, ..., 1)
    // where S = total(o); S equals the wall advance, i.e. a[t].
    std::vector<Segment> occ;
    occ.push_back(Segment{1, IntPoly{{1}}});
    for (std::size_t t = 1; t < count; ++t) {
        BigInt total = 0;
        std::vector<Segment> next;
        next.reserve(occ.size() + 1);
        for (const Segment& seg : occ) {
            IntPoly pre = seg.poly.prefix();
            IntPoly shifted = pre;
            if (shifted.c.empty()) shifted.c.push_back(0);
            shifted.c[0] += total;
            next.push_back(Segment{seg.len, shifted});
            total += pre.eval(seg.len - 1);
        }
        a.push_back(total);
        next.push_back(Segment{total, IntPoly{{total, -1}}});
        occ = std::move(next);
    }
    return a;
}


}  // namespace kk
