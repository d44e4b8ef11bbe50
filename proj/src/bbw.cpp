#include "kk/bbw.hpp"

#include <algorithm>

namespace kk {

namespace {

template <class Count>
bool step_impl(BasicBbwConfig<Count>& config, std::uint64_t span_guard) {
    const std::int64_t t = config.iteration;
    using Key = std::pair<std::int64_t, std::int64_t>;
    std::map<Key, Count> active;  // eligible this iteration
    for (auto it = config.balls.begin(); it != config.balls.end();) {
        if (it->first.second <= t) {
            active.emplace(it->first, it->second);
            it = config.balls.erase(it);
        } else {
            ++it;
        }
    }
    bool abrupt = false;
    while (!active.empty()) {
        auto it = active.begin();  // minimal (position, delay)
        const std::int64_t pos = it->first.first;
        const std::int64_t delay = it->first.second;
        const Count count = it->second;
        if (Count(pos) > config.wall) {
            abrupt = true;
            break;
        }
        active.erase(it);
        // Descendants of c balls processed one by one from position pos with
        // the wall at w: +c on [pos, w-1], then a ramp c-1, ..., 1 on
        // [w, w+c-2]; the wall ends at w + c.
        Count span = config.wall + count - pos;  // positions touched + 1
        if (span > Count(static_cast<std::int64_t>(span_guard)))
            throw CapacityError("bbw descendant span exceeds guard");
        const std::int64_t w = static_cast<std::int64_t>(config.wall);
        const std::int64_t c_end = w + static_cast<std::int64_t>(count) - 2;
        const std::int64_t d = delay + 1;
        auto deposit = [&](std::int64_t q, Count amount) {
            if (d <= t) {
                active[{q, d}] += amount;
            } else {
                config.balls[{q, d}] += amount;
            }
        };
        for (std::int64_t q = pos; q <= w - 1; ++q) deposit(q, count);
        for (std::int64_t q = w; q <= c_end; ++q) deposit(q, Count(w) + count - 1 - q);
        config.wall += count;
    }
    if (abrupt) {
        // put unprocessed eligibles back so the final state is inspectable
        for (auto& [key, cnt] : active) config.balls[key] += cnt;
    }
    config.iteration = t + 1;
    return abrupt;
}

template <class Count>
BasicRunResult<Count> run_impl(BasicBbwConfig<Count> config, std::int64_t iterations,
                               std::uint64_t span_guard) {
    BasicRunResult<Count> result;
    result.trace.push_back(config.wall);
    for (std::int64_t i = 0; i < iterations; ++i) {
        bool abrupt = step_impl(config, span_guard);
        result.trace.push_back(config.wall);
        if (abrupt) {
            result.abrupt = true;
            break;
        }
    }
    result.final = std::move(config);
    return result;
}

}  // namespace

bool bbw_step(BbwConfig& config, std::uint64_t span_guard) {
    return step_impl(config, span_guard);
}

bool bbw_step(LeanBbwConfig& config, std::uint64_t span_guard) {
    if (config.wall > (std::int64_t(1) << 56))
        throw CapacityError("lean bbw wall exceeds machine range");
    return step_impl(config, span_guard);
}

RunResult bbw_run(BbwConfig config, std::int64_t iterations, std::uint64_t span_guard) {
    return run_impl(std::move(config), iterations, span_guard);
}

BasicRunResult<std::int64_t> bbw_run(LeanBbwConfig config, std::int64_t iterations,
                                     std::uint64_t span_guard) {
    return run_impl(std::move(config), iterations, span_guard);
}

BbwConfig init_from_hypergraph(const Hypergraph& h, const std::vector<int>& order) {
    BbwConfig config;
    for (const auto& [spec, count] : tree_ball_specs(h, order))
        config.balls[{spec.pos, spec.delay}] = count;
    return config;
}

LeanBbwConfig lean_init_from_hypergraph(const Hypergraph& h, const std::vector<int>& order) {
    LeanBbwConfig config;
    for (const auto& [spec, count] : tree_ball_specs(h, order))
        config.balls[{spec.pos, spec.delay}] = static_cast<std::int64_t>(count);
    return config;
}

Decomposition beta_from_walls(int n, int k, const std::vector<BigInt>& end_walls) {
    if (static_cast<int>(end_walls.size()) < k)
        throw std::invalid_argument("beta_from_walls: need walls w_1..w_k");
    Decomposition d;
    d.kind = Decomposition::Kind::Shadow;
    d.k = k;
    for (int i = 0; i + 1 < k; ++i) d.coeffs.push_back(BigInt(n) - end_walls[i] - (i + 1));
    d.coeffs.push_back(BigInt(n) - end_walls[k - 1] - (k - 1));
    return d;
}

std::vector<BigInt> family_walls(const KSetFamily& s) {
    Hypergraph h = hypergraph_of_family(s);
    std::vector<int> order = comfortable_order(h);
    BbwConfig config = init_from_hypergraph(h, order);
    RunResult res = bbw_run(std::move(config), s.k + 1);
    if (res.abrupt) throw std::logic_error("family-derived process terminated abruptly");
    // trace[j] = beginning of iteration j; end of iteration i = trace[i+1]
    std::vector<BigInt> walls;
    for (int i = 1; i <= s.k; ++i) walls.push_back(res.trace[i + 1]);
    return walls;
}

Decomposition shadow_decomposition_wall(const KSetFamily& s) {
    if (s.empty()) throw std::invalid_argument("empty family");
    return beta_from_walls(s.n, s.k, family_walls(s));
}

Decomposition shadow_decomposition_direct(const KSetFamily& s) {
    if (s.empty()) throw std::invalid_argument("empty family");
    const int k = s.k;
    // |Delta^i(S)| for i = 0..k-1
    std::vector<BigInt> card(k);
    KSetFamily cur = s;
    card[0] = cur.size();
    for (int i = 1; i < k; ++i) {
        cur = shadow(cur);
        card[i] = cur.size();
    }
    Decomposition d;
    d.kind = Decomposition::Kind::Shadow;
    d.k = k;
    if (k == 1) {
        d.coeffs.push_back(card[0]);
        return d;
    }
    std::vector<BigInt>& beta = d.coeffs;
    beta.resize(k);
    beta[0] = card[k - 1] - 1;
    for (int i = 1; i < k - 1; ++i) {
        BigInt acc = 0;
        for (int j = 0; j < i; ++j) acc += binom(beta[j], i + 1 - j);
        beta[i] = card[k - i - 1] - acc - 1;
    }
    BigInt acc = 0;
    for (int j = 0; j < k - 1; ++j) acc += binom(beta[j], k - j);
    beta[k - 1] = card[0] - acc;
    return d;
}

bool verify_growth(const std::vector<BigInt>& seq, std::size_t i) {
    if (i >= seq.size()) throw std::invalid_argument("index beyond generated prefix");
    bool ok = true;
    if (i >= 2) ok = ok && seq[i] >= binom(seq[i - 1] + 1, 2) + seq[i - 1];
    if (i >= 4) {
        ok = ok && seq[i - 1] * seq[i - 1] >= seq[i];
        BigInt upper = BigInt(1) << (std::size_t(1) << i);
        BigInt lower = BigInt(1) << ((std::size_t(1) << (i - 2)) + 1);
        ok = ok && upper >= seq[i] && seq[i] >= lower;
    }
    return ok;
}

}  // namespace kk
