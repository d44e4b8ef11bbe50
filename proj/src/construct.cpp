#include "kk/construct.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace kk {

namespace {

struct ColexInfo {
    int n = 0;
    std::vector<long long> counts;   // per size, padded
    std::vector<long long> a;        // a[0] = n-1-counts[0], a[i] = a[i-1]-1-counts[i]
    std::vector<long long> prefix;   // prefix[i] = counts[0..i-1] summed
};

ColexInfo colex_info(int n, std::vector<long long> counts) {
    ColexInfo info;
    info.n = n;
    info.counts = std::move(counts);
    info.a.resize(info.counts.size());
    info.prefix.resize(info.counts.size() + 1, 0);
    long long prev = n;
    for (std::size_t i = 0; i < info.counts.size(); ++i) {
        if (info.counts[i] < 0) throw std::invalid_argument("negative edge count");
        info.a[i] = prev - 1 - info.counts[i];
        prev = info.a[i];
        info.prefix[i + 1] = info.prefix[i] + info.counts[i];
        if (info.prefix[i + 1] > n - static_cast<long long>(i + 1) + 1)
            throw std::invalid_argument("edge counts exceed the colex vertex budget");
    }
    return info;
}

// vertex v_s = a[s-1] + 1 (1-based vertex number)
long long v_vertex(const ColexInfo& info, int s) { return info.a[s - 1] + 1; }

// private vertex of the edge with 1-based index idx
long long u_vertex(const ColexInfo& info, long long idx) {
    std::size_t size = 1;
    while (idx > info.prefix[size]) ++size;
    long long p = idx - info.prefix[size - 1];  // position inside the level, 1-based
    long long from = (size == 1) ? info.n : info.a[size - 2];
    return from - (p - 1);
}

int spine_t(const ColexInfo& info, int j, long long upto_edges) {
    // deepest s in [1, j] whose vertex v_s covers >= 2 of the first upto_edges
    for (int s = j; s >= 1; --s) {
        long long deg = upto_edges - info.prefix[s];
        if (deg >= 2) return s;
    }
    return 0;
}

void require_level(const std::vector<long long>& counts, int j) {
    if (j < 1 || j + 1 > static_cast<int>(counts.size()) || counts[j] < 1)
        throw std::invalid_argument("construction needs at least one edge of size j+1");
}

std::vector<long long> padded(const std::vector<long long>& counts, int j) {
    std::vector<long long> out = counts;
    if (static_cast<int>(out.size()) < j + 1) out.resize(j + 1, 0);
    return out;
}

SetMask vertex_bit(long long v) { return 1ull << (v - 1); }

Hypergraph modified_colex(int j, long long target_idx, const std::vector<long long>& counts0,
                          int n, bool construction_a) {
    std::vector<long long> counts = padded(counts0, j);
    require_level(counts, j);
    ColexInfo info = colex_info(n, counts);
    const long long R = info.prefix[j + 1];
    if (target_idx < info.prefix[j] + 1 || target_idx > R)
        throw std::invalid_argument("modified edge index outside the level j+1 block");
    if (info.prefix[j + 1] < 2) throw std::invalid_argument("construction needs >= 2 edges");
    if (info.a[j] < 0)
        throw std::invalid_argument("no vertex available for the exchanged spine position");
    int t = spine_t(info, j, target_idx);
    if (t == 0)
        throw std::invalid_argument("no spine vertex of degree >= 2; construction undefined");
    Hypergraph h = colex_hypergraph(n, counts);
    SetMask edge = h.edges.at(target_idx - 1);
    edge &= ~vertex_bit(v_vertex(info, t));
    edge |= vertex_bit(info.a[j] + 1);  // v_{j+1}
    if (construction_a) {
        if (target_idx - 1 <= counts[0])
            throw std::invalid_argument("previous edge is a singleton; construction undefined");
        edge &= ~vertex_bit(u_vertex(info, target_idx));
        edge |= vertex_bit(u_vertex(info, target_idx - 1));
    }
    h.edges[target_idx - 1] = edge;
    return h;
}

}  // namespace

Hypergraph construction_B(int j, const std::vector<long long>& counts, int n) {
    std::vector<long long> c = padded(counts, j);
    require_level(c, j);
    return modified_colex(j, colex_info(n, c).prefix[j + 1], c, n, false);
}

Hypergraph construction_A(int j, const std::vector<long long>& counts, int n) {
    std::vector<long long> c = padded(counts, j);
    require_level(c, j);
    return modified_colex(j, colex_info(n, c).prefix[j + 1], c, n, true);
}

Hypergraph construction_B_prime(int j, long long r, const std::vector<long long>& counts, int n) {
    return modified_colex(j, r + 1, counts, n, false);
}

Hypergraph construction_A_prime(int j, long long r, const std::vector<long long>& counts, int n) {
    return modified_colex(j, r + 1, counts, n, true);
}

std::optional<ConstructionId> recognize_construction(const Hypergraph& h) {
    if (h.edges.size() > 4000) throw CapacityError("recognition gated to 4000 edges");
    std::vector<long long> counts;
    for (SetMask e : h.edges) {
        int sz = std::popcount(e);
        if (static_cast<int>(counts.size()) < sz) counts.resize(sz, 0);
        ++counts[sz - 1];
    }
    auto sorted_edges = [](const Hypergraph& g) {
        std::vector<SetMask> v = g.edges;
        std::sort(v.begin(), v.end());
        return v;
    };
    std::vector<SetMask> target = sorted_edges(h);
    auto matches = [&](const Hypergraph& g) { return sorted_edges(g) == target; };

    try {
        if (matches(colex_hypergraph(h.n, counts)))
            return ConstructionId{'C', 0, 0, counts};
    } catch (const std::invalid_argument&) {
    }
    for (int j = 1; j + 1 <= static_cast<int>(counts.size()); ++j) {
        if (counts[j] < 1) continue;
        long long lo = 0, hi = 0;
        try {
            ColexInfo info = colex_info(h.n, padded(counts, j));
            lo = info.prefix[j] + 1;
            hi = info.prefix[j + 1];
        } catch (const std::invalid_argument&) {
            continue;
        }
        for (long long idx = lo; idx <= hi; ++idx) {
            for (bool a_kind : {false, true}) {
                try {
                    if (matches(modified_colex(j, idx, counts, h.n, a_kind))) {
                        char tag;
                        if (idx == hi)
                            tag = a_kind ? 'A' : 'B';
                        else
                            tag = a_kind ? 'a' : 'b';
                        return ConstructionId{tag, j, idx - 1, counts};
                    }
                } catch (const std::invalid_argument&) {
                }
            }
        }
    }
    return std::nullopt;
}

BallMultiset construction_ball_profile(const ConstructionId& id, int n) {
    BallMultiset balls;
    const std::vector<long long>& counts = id.counts;
    std::vector<long long> prefix(counts.size() + 1, 0);
    for (std::size_t i = 0; i < counts.size(); ++i) prefix[i + 1] = prefix[i] + counts[i];
    auto add = [&](long long pos, long long delay) { ++balls[BallSpec{pos, delay}]; };

    if (id.tag == 'C') {
        for (std::size_t sz = 1; sz <= counts.size(); ++sz)
            for (long long idx = prefix[sz - 1] + 1; idx <= prefix[sz]; ++idx)
                add(idx - 1, static_cast<long long>(sz));
        return balls;
    }

    const int j = id.j;
    const long long q = (id.tag == 'A' || id.tag == 'B') ? prefix[j + 1] : id.r + 1;
    const bool a_kind = (id.tag == 'A' || id.tag == 'a');
    ColexInfo info = colex_info(n, padded(counts, j));
    const int t = spine_t(info, j, q);
    for (std::size_t sz = 1; sz <= counts.size(); ++sz) {
        for (long long idx = prefix[sz - 1] + 1; idx <= prefix[sz]; ++idx) {
            if (idx < q) {
                add(idx - 1, static_cast<long long>(sz));
            } else if (idx == q) {
                add(prefix[t] + 1, j + 1);
                if (!a_kind) add(q - 1, j + 2);
            } else if (a_kind) {
                add(idx - 2, static_cast<long long>(sz));
            } else {
                add(idx - 1, static_cast<long long>(sz));
                // after a B-type swap the freed spine vertex still dominates
                // the modified edge, so later edges of the swap size pick up
                // a second, one-step-delayed blocking set
                if (static_cast<int>(sz) == j + 1) add(idx - 1, sz + 1);
            }
        }
    }
    return balls;
}

BallMultiset ball_profile_of_construction(const Hypergraph& h) {
    auto id = recognize_construction(h);
    if (!id) throw std::invalid_argument("hypergraph is not a recognized construction");
    return construction_ball_profile(*id, h.n);
}

std::vector<std::vector<long long>> construction_vertex_edges(const ConstructionId& id, int n) {
    std::vector<long long> counts =
        (id.tag == 'C') ? id.counts : padded(id.counts, id.j);
    ColexInfo info = colex_info(n, counts);
    std::vector<std::vector<long long>> edges;
    for (std::size_t lvl = 1; lvl <= counts.size(); ++lvl) {
        std::vector<long long> tail;
        for (std::size_t s = 0; s + 2 <= lvl; ++s) tail.push_back(info.a[s] + 1);
        long long from = (lvl == 1) ? n : info.a[lvl - 2];
        for (long long x = from; x >= from - counts[lvl - 1] + 1; --x) {
            std::vector<long long> edge = tail;
            edge.push_back(x);
            std::sort(edge.begin(), edge.end());
            edges.push_back(std::move(edge));
        }
    }
    if (id.tag == 'C') return edges;
    const long long q =
        (id.tag == 'A' || id.tag == 'B') ? info.prefix[id.j + 1] : id.r + 1;
    const bool a_kind = (id.tag == 'A' || id.tag == 'a');
    const int t = spine_t(info, id.j, q);
    if (t == 0) throw std::invalid_argument("construction undefined for these counts");
    auto& edge = edges.at(q - 1);
    auto replace = [&](long long out, long long in) {
        auto it = std::find(edge.begin(), edge.end(), out);
        if (it == edge.end()) throw std::logic_error("construction edge lost a vertex");
        *it = in;
    };
    replace(v_vertex(info, t), info.a[id.j] + 1);
    if (a_kind) {
        replace(u_vertex(info, q), u_vertex(info, q - 1));
    }
    std::sort(edge.begin(), edge.end());
    return edges;
}

std::vector<std::vector<long long>> DecideResult::edge_lists() const {
    return construction_vertex_edges(ConstructionId{construction, j, 0, counts}, n);
}

KSetFamily DecideResult::family(std::uint64_t budget) const {
    if (!hypergraph_materialized)
        throw CapacityError("family not materializable beyond 63 vertices");
    return family_of_hypergraph(hypergraph, k, /*validate=*/false, budget);
}

namespace {

constexpr int kDecideMaxN = 50'000'000;

struct Simulation {
    // next-delay descendant counts by position
    std::vector<std::int64_t> next;
    std::int64_t next_total = 0;
    std::int64_t next_max_pos = -1;

    void deposit(std::int64_t pos, std::int64_t amount) {
        next[pos] += amount;
        next_total += amount;
        next_max_pos = std::max(next_max_pos, pos);
    }
};

}  // namespace

std::optional<DecideResult> decide_extremal_with_depth(int n, int k, const BigInt& m, int t,
                                                       char only) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("bad (n, k)");
    if (n > kDecideMaxN) throw CapacityError("decide gated to n <= 5e7");
    if (m < 1 || m > binom(n, k)) throw std::invalid_argument("m out of [1, binom(n,k)]");
    if (t < 0 || t > k - 1) throw std::invalid_argument("depth out of [0, k-1]");

    if (t == 0) {
        DecideResult res;
        res.found = true;
        res.construction = 'C';
        res.n = n;
        res.k = k;
        res.counts = colex_counts_for(n, k, m);
        if (n <= kMaxGroundSet) {
            res.hypergraph = colex_hypergraph(n, res.counts);
            res.hypergraph_materialized = true;
        }
        return res;
    }

    Decomposition d = k_binomial_decomposition(m, k);
    if (static_cast<int>(d.coeffs.size()) < k) return std::nullopt;  // only the colex exists
    for (const BigInt& c : d.coeffs)
        if (c > n) return std::nullopt;

    // Extremality pins the whole wall trajectory.
    std::vector<std::int64_t> wall_target(k + 1, 0);
    for (int i = 1; i <= k - 1; ++i)
        wall_target[i] = n - static_cast<std::int64_t>(d.coeffs[i - 1]) - i;
    wall_target[k] = n - static_cast<std::int64_t>(d.coeffs[k - 1]) - (k - 1);
    for (int i = 1; i <= k; ++i)
        if (wall_target[i] < wall_target[i - 1] || wall_target[i] < 0) return std::nullopt;

    const int j = k - t;
    std::vector<long long> base_counts(k, 0);
    for (int i = 1; i <= j + 1; ++i) base_counts[i - 1] = wall_target[i] - wall_target[i - 1];
    if (base_counts[j] < 1) return std::nullopt;
    long long level_total = 0;
    for (int i = 0; i <= j; ++i) level_total += base_counts[i];
    if (level_total < 2) return std::nullopt;

    // spine vertex shared by >= 2 of the first level_total edges
    int t_spine = 0;
    {
        long long suffix = 0;
        for (int s = j; s >= 1; --s) {
            suffix += base_counts[s];  // edges of size s+1
            if (suffix >= 2) {
                t_spine = s;
                break;
            }
        }
    }
    if (t_spine == 0) return std::nullopt;
    long long spine_suffix = 0;
    for (int s = t_spine; s <= j; ++s) spine_suffix += base_counts[s];

    for (char tag : {'A', 'B'}) {
        if (only != '\0' && tag != only) continue;
        if (tag == 'A' && spine_suffix == 2) continue;  // degenerates to the colex
        std::vector<long long> counts = base_counts;
        long long sigma_t = 0;
        for (int i = 1; i <= t_spine; ++i) sigma_t += counts[i - 1];

        std::vector<std::int64_t> cur(static_cast<std::size_t>(n) + 3, 0);
        std::vector<std::int64_t> nxt(static_cast<std::size_t>(n) + 3, 0);
        std::int64_t cur_max = -1;
        auto add_cur = [&](std::int64_t pos, std::int64_t amount) {
            cur[pos] += amount;
            cur_max = std::max(cur_max, pos);
        };

        bool feasible = true;
        std::int64_t wall = 0;
        std::int64_t pending_total = 0;  // descendants waiting for the next iteration
        std::int64_t pending_max = -1;
        std::int64_t edge_cum = 0;  // edges placed so far
        std::int64_t b_extra_pos = -1;

        for (int iter = 1; iter <= k && feasible; ++iter) {
            // move pending descendants in
            std::fill(cur.begin(), cur.begin() + std::max<std::int64_t>(cur_max + 1, 0), 0);
            std::swap(cur, nxt);
            cur_max = pending_max;
            std::int64_t descend_total = pending_total;
            pending_total = 0;
            pending_max = -1;
            if (iter == j + 2 && tag == 'B' && b_extra_pos >= 0) {
                add_cur(b_extra_pos, 1);
                ++descend_total;
            }

            const std::int64_t gap = wall_target[iter] - wall_target[iter - 1];
            std::int64_t fresh = gap - descend_total;
            if (iter <= j + 1) {
                fresh = counts[iter - 1];  // forced by the wall targets
                if (fresh != gap - descend_total) {
                    feasible = false;
                    break;
                }
            } else if (fresh < 0) {
                feasible = false;
                break;
            } else {
                counts[iter - 1] = fresh;
            }

            // place the fresh edges' balls
            if (iter == j + 1) {
                for (std::int64_t x = 0; x < fresh - 1; ++x) add_cur(edge_cum + x, 1);
                add_cur(sigma_t + 1, 1);
                if (tag == 'B') b_extra_pos = edge_cum + fresh - 1;
            } else {
                for (std::int64_t x = 0; x < fresh; ++x) {
                    std::int64_t pos = edge_cum + x + (iter > j + 1 && tag == 'A' ? -1 : 0);
                    add_cur(pos, 1);
                }
            }
            edge_cum += fresh;

            // process ascending positions
            for (std::int64_t p = 0; p <= cur_max && feasible; ++p) {
                std::int64_t c = cur[p];
                if (c == 0) continue;
                if (p > wall) {
                    feasible = false;  // abrupt: target walls unreachable
                    break;
                }
                if (iter < k) {
                    for (std::int64_t qq = p; qq <= wall - 1; ++qq) {
                        nxt[qq] += c;
                        pending_total += c;
                    }
                    for (std::int64_t qq = wall; qq <= wall + c - 2; ++qq) {
                        nxt[qq] += wall + c - 1 - qq;
                        pending_total += wall + c - 1 - qq;
                    }
                    pending_max = std::max(pending_max, std::max(wall + c - 2, wall - 1));
                }
                wall += c;
                if (wall > wall_target[iter]) {
                    feasible = false;
                    break;
                }
            }
            if (feasible && wall != wall_target[iter]) feasible = false;
            if (feasible && iter < k && pending_total > wall_target[iter + 1] - wall_target[iter])
                feasible = false;  // next iteration would push past the target
        }

        if (!feasible) continue;

        // vertex budget for the final counts
        bool budget_ok = true;
        long long prefix = 0;
        for (int i = 1; i <= k; ++i) {
            prefix += counts[i - 1];
            if (prefix > n - static_cast<long long>(i) + 1) budget_ok = false;
        }
        long long upto_level = 0;
        for (int i = 0; i <= j; ++i) upto_level += counts[i];
        if (upto_level > n - j - 1) budget_ok = false;  // v_{j+1} must exist
        if (!budget_ok) continue;

        DecideResult res;
        res.found = true;
        res.construction = tag;
        res.j = j;
        res.n = n;
        res.k = k;
        res.counts = counts;

        // Replay the closed-form profile through the generic process and make
        // sure the walls land on the target; reject otherwise.
        ConstructionId id{tag, j, 0, counts};
        BbwConfig config;
        for (const auto& [spec, cnt] : construction_ball_profile(id, n))
            config.balls[{spec.pos, spec.delay}] = cnt;
        RunResult rr = bbw_run(std::move(config), k + 1,
                               static_cast<std::uint64_t>(n) + 16);
        bool verified = !rr.abrupt;
        for (int i = 1; verified && i <= k; ++i)
            if (rr.trace[i + 1] != wall_target[i]) verified = false;
        if (!verified) continue;

        if (n <= kMaxGroundSet) {
            try {
                res.hypergraph = (tag == 'A') ? construction_A(j, counts, n)
                                              : construction_B(j, counts, n);
                res.hypergraph_materialized = true;
            } catch (const std::invalid_argument&) {
                continue;
            }
            // the breaking level must really break colexness
            Hypergraph level = truncate(res.hypergraph, j + 1);
            std::vector<int> order(level.edges.size());
            std::iota(order.begin(), order.end(), 0);
            BlockingSetFamily bf =
                blocking_sets(level, order, static_cast<int>(level.edges.size()));
            bool breaks = bf.sets.size() != 1 ||
                          std::popcount(bf.sets[0]) !=
                              static_cast<int>(level.edges.size()) - 1;
            if (!breaks) continue;
        } else {
            // beyond the mask range: validate the construction arithmetically
            try {
                (void)construction_vertex_edges(id, n);
            } catch (const std::exception&) {
                continue;
            }
        }
        return res;
    }
    return std::nullopt;
}

}  // namespace kk
