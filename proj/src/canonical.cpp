#include "kk/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace kk {

namespace {

std::vector<SetMask> remap_sorted(const std::vector<SetMask>& edges,
                                  const std::vector<int>& target_of_vertex) {
    std::vector<SetMask> out;
    out.reserve(edges.size());
    for (SetMask e : edges) {
        SetMask img = 0;
        SetMask rest = e;
        while (rest) {
            int b = std::countr_zero(rest);
            img |= 1ull << target_of_vertex[b];
            rest &= rest - 1;
        }
        out.push_back(img);
    }
    std::sort(out.begin(), out.end(), [](SetMask a, SetMask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    return out;
}

bool edge_list_less(const std::vector<SetMask>& a, const std::vector<SetMask>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int pa = std::popcount(a[i]), pb = std::popcount(b[i]);
        if (pa != pb) return pa < pb;
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

// Iterated refinement of vertex invariants; label independent by construction.
// Each vertex ends with an integer class id, and cells carry a canonical sort
// key (the invariant signature), so isomorphic inputs produce identical cell
// structures.
struct Cells {
    std::vector<std::vector<int>> members;  // support vertices (0-based bits), cell by cell
};

Cells refine_cells(const std::vector<SetMask>& edges, const std::vector<int>& support) {
    std::size_t v_count = support.size();
    std::vector<int> cls(v_count, 0);
    std::vector<int> pos_of_vertex(64, -1);
    for (std::size_t i = 0; i < v_count; ++i) pos_of_vertex[support[i]] = static_cast<int>(i);

    using Sig = std::vector<long long>;
    auto signature = [&](std::size_t vi) {
        Sig sig;
        std::vector<std::vector<long long>> per_edge;
        for (SetMask e : edges) {
            if (!(e & (1ull << support[vi]))) continue;
            std::vector<long long> es;
            es.push_back(std::popcount(e));
            std::vector<long long> mates;
            SetMask rest = e;
            while (rest) {
                int b = std::countr_zero(rest);
                rest &= rest - 1;
                if (b == support[vi]) continue;
                mates.push_back(cls[pos_of_vertex[b]]);
            }
            std::sort(mates.begin(), mates.end());
            es.insert(es.end(), mates.begin(), mates.end());
            per_edge.push_back(std::move(es));
        }
        std::sort(per_edge.begin(), per_edge.end());
        sig.push_back(cls[vi]);
        for (auto& es : per_edge) {
            sig.push_back(-1);
            sig.insert(sig.end(), es.begin(), es.end());
        }
        return sig;
    };

    for (int round = 0; round < 64; ++round) {
        std::map<Sig, int> ids;
        std::vector<Sig> sigs(v_count);
        for (std::size_t i = 0; i < v_count; ++i) sigs[i] = signature(i);
        std::vector<Sig> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i) ids[sorted[i]] = static_cast<int>(i);
        std::vector<int> next(v_count);
        for (std::size_t i = 0; i < v_count; ++i) next[i] = ids[sigs[i]];
        if (next == cls) break;
        cls = std::move(next);
    }

    int cell_count = 0;
    for (int c : cls) cell_count = std::max(cell_count, c + 1);
    Cells cells;
    cells.members.resize(cell_count);
    for (std::size_t i = 0; i < v_count; ++i) cells.members[cls[i]].push_back(support[i]);
    return cells;
}

}  // namespace

std::vector<SetMask> canonical_edges(const std::vector<SetMask>& edges, int n,
                                     std::uint64_t budget) {
    (void)n;
    SetMask support_mask = 0;
    for (SetMask e : edges) support_mask |= e;
    if (support_mask == 0) {
        std::vector<SetMask> out = edges;
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<int> support;
    {
        SetMask rest = support_mask;
        while (rest) {
            support.push_back(std::countr_zero(rest));
            rest &= rest - 1;
        }
    }

    Cells cells = refine_cells(edges, support);

    std::uint64_t work = 1;
    for (auto& cell : cells.members) {
        for (std::size_t i = 2; i <= cell.size(); ++i) {
            work *= i;
            if (work > budget) throw CapacityError("canonical form search exceeds budget");
        }
    }

    // Assign target labels cell by cell (cells are already in canonical order);
    // enumerate within-cell permutations and keep the minimal image.
    std::vector<int> target_of_vertex(64, 63);
    std::vector<SetMask> best;
    std::vector<std::vector<int>> perms = cells.members;  // working copies
    for (auto& p : perms) std::sort(p.begin(), p.end());

    std::vector<int> base(cells.members.size());
    {
        int next = 0;
        for (std::size_t c = 0; c < cells.members.size(); ++c) {
            base[c] = next;
            next += static_cast<int>(cells.members[c].size());
        }
    }

    auto apply = [&]() {
        for (std::size_t c = 0; c < perms.size(); ++c)
            for (std::size_t i = 0; i < perms[c].size(); ++i)
                target_of_vertex[perms[c][i]] = base[c] + static_cast<int>(i);
        std::vector<SetMask> img = remap_sorted(edges, target_of_vertex);
        if (best.empty() || edge_list_less(img, best)) best = std::move(img);
    };

    // Odometer over per-cell permutations.
    std::vector<bool> done(perms.size(), false);
    auto advance = [&](std::size_t c) -> bool {
        return std::next_permutation(perms[c].begin(), perms[c].end());
    };
    (void)done;
    while (true) {
        apply();
        std::size_t c = 0;
        while (c < perms.size() && !advance(c)) ++c;  // next_permutation wraps to sorted
        if (c == perms.size()) break;
    }
    return best;
}

bool are_isomorphic(const std::vector<SetMask>& a, const std::vector<SetMask>& b, int n) {
    if (a.size() != b.size()) return false;
    std::vector<int> sa, sb;
    for (SetMask e : a) sa.push_back(std::popcount(e));
    for (SetMask e : b) sb.push_back(std::popcount(e));
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    return canonical_edges(a, n) == canonical_edges(b, n);
}

}  // namespace kk
