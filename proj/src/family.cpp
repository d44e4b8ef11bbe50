#include "kk/family.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>

#include "kk/canonical.hpp"
#include "kk/decomposition.hpp"

namespace kk {

SetMask mask_of(std::span<const int> elements_1based, int n) {
    SetMask s = 0;
    for (int e : elements_1based) {
        if (e < 1 || e > n) throw std::invalid_argument("element out of ground set");
        s |= 1ull << (e - 1);
    }
    return s;
}

std::vector<int> elements_of(SetMask s) {
    std::vector<int> out;
    while (s) {
        int b = std::countr_zero(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

int colex_compare(SetMask x, SetMask y) {
    // max of the symmetric difference lies in the larger mask
    if (x == y) return 0;
    return x < y ? -1 : 1;
}

bool lex_vertex_less(SetMask a, SetMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    SetMask diff = a ^ b;
    return (diff & -diff & a) != 0;  // smallest differing vertex belongs to a
}

SetMask KSetFamily::support() const {
    SetMask s = 0;
    for (SetMask x : sets) s |= x;
    return s;
}

KSetFamily make_family(int n, int k, std::vector<SetMask> sets) {
    if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("ground set size out of [1,63]");
    if (k < 0 || k > n) throw std::invalid_argument("k out of range");
    for (SetMask s : sets) {
        if (s & ~full_mask(n)) throw std::invalid_argument("set leaves the ground set");
        if (std::popcount(s) != k) throw std::invalid_argument("set size differs from k");
    }
    std::sort(sets.begin(), sets.end());
    if (std::adjacent_find(sets.begin(), sets.end()) != sets.end())
        throw std::invalid_argument("duplicate set in family");
    return KSetFamily{n, k, std::move(sets)};
}

std::vector<SetMask> all_ksubsets(int n, int k, std::uint64_t budget) {
    BigInt total = binom(n, k);
    if (total > budget) throw CapacityError("k-subset enumeration exceeds budget");
    std::vector<SetMask> out;
    out.reserve(static_cast<std::size_t>(total));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    if (k > n) return out;
    SetMask v = (1ull << k) - 1;
    SetMask limit = 1ull << n;
    while (v < limit) {
        out.push_back(v);
        SetMask t = v | (v - 1);  // Gosper's hack
        if (t == ~0ull) break;
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
    return out;
}

KSetFamily initial_segment(int n, int k, const BigInt& m, std::uint64_t budget) {
    if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("ground set size out of [1,63]");
    if (k < 1 || k > n) throw std::invalid_argument("k out of range");
    if (m < 1 || m > binom(n, k)) throw std::invalid_argument("m out of [1, binom(n,k)]");
    if (m > budget) throw CapacityError("initial segment exceeds budget");
    std::uint64_t count = static_cast<std::uint64_t>(m);
    std::vector<SetMask> sets;
    sets.reserve(count);
    SetMask v = (1ull << k) - 1;
    for (std::uint64_t i = 0; i < count; ++i) {
        sets.push_back(v);
        SetMask t = v | (v - 1);
        v = (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
    }
    return KSetFamily{n, k, std::move(sets)};
}

KSetFamily shadow(const KSetFamily& s) {
    if (s.empty()) throw std::invalid_argument("shadow of empty family");
    if (s.k < 1) throw std::invalid_argument("shadow needs k >= 1");
    std::vector<SetMask> out;
    out.reserve(s.sets.size() * s.k);
    for (SetMask x : s.sets) {
        SetMask rest = x;
        while (rest) {
            SetMask bit = rest & -rest;
            out.push_back(x ^ bit);
            rest &= rest - 1;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return KSetFamily{s.n, s.k - 1, std::move(out)};
}

KSetFamily iterated_shadow(const KSetFamily& s, int i) {
    if (s.empty()) throw std::invalid_argument("iterated shadow of empty family");
    if (i < 0 || i > s.k - 1) throw std::invalid_argument("shadow iteration out of [0, k-1]");
    KSetFamily cur = s;
    for (int j = 0; j < i; ++j) cur = shadow(cur);
    return cur;
}

bool is_initial_segment(const KSetFamily& s, bool up_to_iso) {
    if (s.empty()) throw std::invalid_argument("empty family");
    KSetFamily segment = initial_segment(s.n, s.k, BigInt(s.sets.size()));
    if (!up_to_iso) return s == segment;
    if (s == segment) return true;
    return canonical_form(s) == canonical_form(segment);
}

KSetFamily canonical_form(const KSetFamily& s) {
    std::vector<SetMask> canon = canonical_edges(s.sets, s.n);
    return KSetFamily{s.n, s.k, std::move(canon)};
}

std::string family_to_text(const KSetFamily& s) {
    std::ostringstream os;
    os << s.n << ' ' << s.k << '\n';
    for (SetMask x : s.sets) {
        auto elems = elements_of(x);
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (i) os << ',';
            os << elems[i];
        }
        os << '\n';
    }
    return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& line, int lineno) {
    std::vector<int> vals;
    std::string tok;
    std::istringstream is(line);
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos != tok.size()) throw std::invalid_argument("trailing junk");
            vals.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(lineno, "cannot parse integer '" + tok + "'");
        }
    }
    if (vals.empty()) throw ParseError(lineno, "empty element list");
    return vals;
}

}  // namespace

KSetFamily family_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int n = -1, k = -1;
    std::vector<SetMask> sets;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream hl(line);
        if (n < 0) {
            if (!(hl >> n >> k)) throw ParseError(lineno, "expected header 'n k'");
            if (n < 1 || n > kMaxGroundSet || k < 0 || k > n)
                throw ParseError(lineno, "header out of range");
            continue;
        }
        auto elems = parse_int_list(line, lineno);
        SetMask m;
        try {
            m = mask_of(elems, n);
        } catch (const std::exception& e) {
            throw ParseError(lineno, e.what());
        }
        if (std::popcount(m) != k) throw ParseError(lineno, "set size differs from k");
        sets.push_back(m);
    }
    if (n < 0) throw ParseError(lineno, "missing header 'n k'");
    try {
        return make_family(n, k, std::move(sets));
    } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
    }
}

KSetFamily read_family_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return family_from_text(buf.str());
}

}  // namespace kk
