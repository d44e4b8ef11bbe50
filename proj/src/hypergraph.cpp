#include "kk/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <fstream>
#include <sstream>

#include "kk/canonical.hpp"
#include "kk/decomposition.hpp"

#include "json.hpp"

namespace kk {

namespace {

bool edge_order_less(SetMask a, SetMask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;  // colex
}

void check_antichain(const std::vector<SetMask>& edges) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (i != j && (edges[i] & edges[j]) == edges[i])
                throw InvalidHypergraph("edges are not an antichain");
}

}  // namespace

std::vector<BallSpec> ExtensionTree::leaf_balls() const {
    std::vector<BallSpec> out;
    const int esize = std::popcount(edge);
    for (const TreeNode& node : nodes) {
        if (!node.leaf) continue;
        out.push_back(BallSpec{std::popcount(node.ell_v) - std::popcount(node.ell_e),
                               esize + std::popcount(node.ell_e)});
    }
    return out;
}

Hypergraph hypergraph_of_family(const KSetFamily& s, std::uint64_t budget) {
    if (s.empty()) throw std::invalid_argument("hypergraph of empty family");
    Hypergraph h;
    h.n = s.n;
    std::vector<SetMask> faces = s.sets;  // level k downwards
    std::vector<SetMask> edges;
    for (int level = s.k; level >= 1; --level) {
        std::vector<SetMask> lower;
        if (level >= 2) {
            lower.reserve(faces.size() * level);
            for (SetMask x : faces) {
                SetMask rest = x;
                while (rest) {
                    SetMask bit = rest & -rest;
                    lower.push_back(x ^ bit);
                    rest &= rest - 1;
                }
            }
            std::sort(lower.begin(), lower.end());
            lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
        } else {
            lower.push_back(0);
        }
        // minimal non-faces at this level: not a face, all subsets faces
        for (SetMask x : all_ksubsets(s.n, level, budget)) {
            if (std::binary_search(faces.begin(), faces.end(), x)) continue;
            bool minimal = true;
            SetMask rest = x;
            while (rest && minimal) {
                SetMask bit = rest & -rest;
                if (!std::binary_search(lower.begin(), lower.end(), x ^ bit)) minimal = false;
                rest &= rest - 1;
            }
            if (minimal) edges.push_back(x);
        }
        faces = std::move(lower);
    }
    std::sort(edges.begin(), edges.end(), edge_order_less);
    h.edges = std::move(edges);
    return h;
}

KSetFamily family_of_hypergraph(const Hypergraph& h, int k, bool validate,
                                std::uint64_t budget) {
    if (h.n < 1 || h.n > kMaxGroundSet) throw std::invalid_argument("ground set out of range");
    for (SetMask e : h.edges) {
        if (e == 0 || (e & ~full_mask(h.n))) throw std::invalid_argument("edge out of ground set");
        if (std::popcount(e) > k) throw std::invalid_argument("edge larger than k");
    }
    if (validate) check_antichain(h.edges);
    std::vector<SetMask> sets;
    for (SetMask x : all_ksubsets(h.n, k, budget)) {
        bool keep = true;
        for (SetMask e : h.edges)
            if ((x & e) == e) {
                keep = false;
                break;
            }
        if (keep) sets.push_back(x);
    }
    if (sets.empty()) throw InvalidHypergraph("hypergraph encodes an empty family");
    KSetFamily fam{h.n, k, std::move(sets)};
    if (validate) {
        Hypergraph back = hypergraph_of_family(fam, budget);
        std::vector<SetMask> ours = h.edges;
        std::sort(ours.begin(), ours.end(), edge_order_less);
        if (back.edges != ours)
            throw InvalidHypergraph("edge set is not the minimal non-face encoding of a family");
    }
    return fam;
}

Hypergraph truncate(const Hypergraph& h, int k_prime) {
    Hypergraph out;
    out.n = h.n;
    for (SetMask e : h.edges)
        if (std::popcount(e) <= k_prime) out.edges.push_back(e);
    return out;
}

std::vector<int> comfortable_order(const Hypergraph& h) {
    std::vector<int> order(h.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return edge_order_less(h.edges[a], h.edges[b]);
    });
    return order;
}

Hypergraph apply_order(const Hypergraph& h, const std::vector<int>& order) {
    Hypergraph out;
    out.n = h.n;
    out.edges.reserve(order.size());
    for (int i : order) out.edges.push_back(h.edges.at(i));
    return out;
}

namespace {

bool counts_valid_for_colex(int n, const std::vector<long long>& counts) {
    long long prefix = 0;
    for (std::size_t t = 1; t <= counts.size(); ++t) {
        if (counts[t - 1] < 0) return false;
        prefix += counts[t - 1];
        if (prefix > n - static_cast<long long>(t) + 1) return false;
    }
    return true;
}

bool iso_to_colex(const std::vector<SetMask>& edges, int n) {
    std::vector<long long> counts;
    for (SetMask e : edges) {
        int sz = std::popcount(e);
        if (static_cast<int>(counts.size()) < sz) counts.resize(sz, 0);
        ++counts[sz - 1];
    }
    if (!counts_valid_for_colex(n, counts)) return false;
    Hypergraph model = colex_hypergraph(n, counts);
    return are_isomorphic(edges, model.edges, n);
}

}  // namespace

std::pair<std::vector<int>, int> supercomfortable_order(const Hypergraph& h) {
    if (h.edges.size() > 20) throw CapacityError("supercomfortable search gated to 20 edges");
    std::vector<int> comfort = comfortable_order(h);
    const int m = static_cast<int>(comfort.size());
    if (m == 0) return {comfort, 0};

    // A comfortable prefix of length t must consist of the t smallest sizes;
    // only the boundary size class admits choice.
    std::vector<int> sizes(m);
    for (int i = 0; i < m; ++i) sizes[i] = std::popcount(h.edges[comfort[i]]);

    for (int t = m; t >= 1; --t) {
        int boundary_size = sizes[t - 1];
        int lo = t - 1, hi = t - 1;
        while (lo > 0 && sizes[lo - 1] == boundary_size) --lo;
        while (hi + 1 < m && sizes[hi + 1] == boundary_size) ++hi;
        int need = t - lo;  // how many boundary-size edges the prefix takes
        std::vector<int> pick(hi - lo + 1, 0);
        std::fill(pick.begin(), pick.begin() + need, 1);
        std::sort(pick.begin(), pick.end(), std::greater<int>());
        // iterate over combinations of boundary edges
        std::vector<int> idx;
        for (int i = 0; i < static_cast<int>(pick.size()); ++i) idx.push_back(i);
        std::vector<int> comb(need);
        for (int i = 0; i < need; ++i) comb[i] = i;
        while (true) {
            std::vector<SetMask> prefix;
            std::vector<int> prefix_order;
            for (int i = 0; i < lo; ++i) {
                prefix.push_back(h.edges[comfort[i]]);
                prefix_order.push_back(comfort[i]);
            }
            for (int c : comb) {
                prefix.push_back(h.edges[comfort[lo + c]]);
                prefix_order.push_back(comfort[lo + c]);
            }
            if (iso_to_colex(prefix, h.n)) {
                std::vector<int> order = prefix_order;
                for (int i = 0; i < m; ++i)
                    if (std::find(order.begin(), order.end(), comfort[i]) == order.end())
                        order.push_back(comfort[i]);
                return {order, t};
            }
            // next combination
            int i = need - 1;
            while (i >= 0 && comb[i] == hi - lo - (need - 1 - i)) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < need; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return {comfort, 0};
}

BlockingSetFamily blocking_sets(const Hypergraph& h, const std::vector<int>& order, int j) {
    if (j < 1 || j > static_cast<int>(order.size()))
        throw std::invalid_argument("blocking_sets: edge index out of range");
    SetMask avoid = h.edges.at(order[j - 1]);
    SetMask allowed = full_mask(h.n) & ~avoid;
    std::vector<SetMask> targets;
    for (int i = 0; i < j - 1; ++i) targets.push_back(h.edges.at(order[i]) & allowed);

    BlockingSetFamily out;
    out.edge_index_1based = j;
    for (SetMask t : targets)
        if (t == 0) return out;  // some earlier edge cannot be hit at all

    std::vector<SetMask> found;
    constexpr std::size_t kCandidateCap = 1u << 21;
    // enumerate hitting sets: branch on the first unhit target
    std::vector<SetMask> stack_choice;
    auto rec = [&](auto&& self, SetMask chosen) -> void {
        if (found.size() > kCandidateCap) throw CapacityError("blocking set enumeration blow-up");
        SetMask unhit_first = 0;
        bool all_hit = true;
        for (SetMask t : targets)
            if ((t & chosen) == 0) {
                unhit_first = t;
                all_hit = false;
                break;
            }
        if (all_hit) {
            found.push_back(chosen);
            return;
        }
        SetMask rest = unhit_first;
        while (rest) {
            SetMask bit = rest & -rest;
            rest &= rest - 1;
            self(self, chosen | bit);
        }
    };
    rec(rec, 0);

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    // keep only minimal hitting sets
    std::vector<SetMask> minimal;
    for (SetMask s : found) {
        bool ok = true;
        SetMask rest = s;
        while (rest && ok) {
            SetMask bit = rest & -rest;
            rest &= rest - 1;
            SetMask reduced = s ^ bit;
            bool hits_all = true;
            for (SetMask t : targets)
                if ((t & reduced) == 0) {
                    hits_all = false;
                    break;
                }
            if (hits_all) ok = false;
        }
        if (ok) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(), lex_vertex_less);
    out.sets = std::move(minimal);
    return out;
}

ExtensionTree build_extension_tree(const Hypergraph& h, const std::vector<int>& order, int j) {
    BlockingSetFamily bf = blocking_sets(h, order, j);
    ExtensionTree tree;
    tree.edge_index_1based = j;
    tree.edge = h.edges.at(order[j - 1]);
    tree.blocking = bf.sets;
    if (bf.sets.empty()) return tree;  // no tree

    std::vector<int> internal_count(bf.sets.size(), 0);
    struct PathInfo {
        SetMask path_v;
        SetMask path_e;
    };
    std::vector<PathInfo> paths;

    auto add_internal = [&](int parent, int block, SetMask edge_label, SetMask path_v_parent,
                            SetMask path_e_parent) {
        TreeNode node;
        node.parent = parent;
        node.leaf = false;
        node.block = block;
        node.counter = 2 * internal_count[block] + 1;
        ++internal_count[block];
        node.edge_label = edge_label;
        node.vertex_label = bf.sets[block] & ~path_v_parent;
        tree.nodes.push_back(node);
        paths.push_back(PathInfo{path_v_parent | node.vertex_label, path_e_parent | edge_label});
        return static_cast<int>(tree.nodes.size()) - 1;
    };

    std::deque<int> worklist;  // FIFO
    worklist.push_back(add_internal(-1, 0, 0, 0, 0));

    while (!worklist.empty()) {
        int u = worklist.front();
        worklist.pop_front();
        const SetMask label = tree.nodes[u].vertex_label;
        const SetMask path_v = paths[u].path_v;
        const SetMask path_e = paths[u].path_e;
        if (std::popcount(label) > 25) throw CapacityError("extension tree label too large");
        // iterate subsets s of the vertex label, empty set first
        SetMask s = 0;
        while (true) {
            if (s == 0) {
                TreeNode leafnode;
                leafnode.parent = u;
                leafnode.leaf = true;
                leafnode.block = tree.nodes[u].block;
                leafnode.counter = tree.nodes[u].counter + 1;
                leafnode.edge_label = 0;
                leafnode.ell_v = path_v;
                leafnode.ell_e = path_e;
                tree.nodes.push_back(leafnode);
                paths.push_back(PathInfo{path_v, path_e});
            } else {
                SetMask blockmask = path_e | s;
                for (std::size_t r = 0; r < bf.sets.size(); ++r) {
                    if ((bf.sets[r] & blockmask) == 0) {
                        worklist.push_back(
                            add_internal(u, static_cast<int>(r), s, path_v, path_e));
                        break;
                    }
                }
            }
            if (s == label) break;
            s = (s - label) & label;  // next subset of label
        }
    }
    return tree;
}

BallMultiset tree_ball_specs(const Hypergraph& h, const std::vector<int>& order) {
    BallMultiset balls;
    for (int j = 1; j <= static_cast<int>(order.size()); ++j) {
        ExtensionTree tree = build_extension_tree(h, order, j);
        for (BallSpec b : tree.leaf_balls()) ++balls[b];
    }
    return balls;
}

bool is_colex_hypergraph(const Hypergraph& h) {
    std::vector<int> order = comfortable_order(h);
    for (int j = 1; j <= static_cast<int>(order.size()); ++j) {
        BlockingSetFamily bf = blocking_sets(h, order, j);
        if (bf.sets.size() != 1) return false;
        if (std::popcount(bf.sets[0]) != j - 1) return false;
    }
    return true;
}

Hypergraph colex_hypergraph(int n, const std::vector<long long>& counts) {
    if (n < 1 || n > kMaxGroundSet) throw std::invalid_argument("ground set out of range");
    if (!counts_valid_for_colex(n, counts))
        throw std::invalid_argument("invalid colex edge counts");
    Hypergraph h;
    h.n = n;
    // a[0] = n - 1 - counts[0]; a[i] = a[i-1] - 1 - counts[i]
    std::vector<long long> a(counts.size());
    long long prev = n;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        a[i] = prev - 1 - counts[i];
        prev = a[i];
    }
    for (std::size_t lvl = 1; lvl <= counts.size(); ++lvl) {
        SetMask tail = 0;  // {a[lvl-2]+1, ..., a[0]+1}
        for (std::size_t t = 0; t + 2 <= lvl; ++t) tail |= 1ull << a[t];  // vertex a[t]+1
        long long from = (lvl == 1) ? n : a[lvl - 2];
        for (long long x = from; x >= from - counts[lvl - 1] + 1; --x)
            h.edges.push_back(tail | (1ull << (x - 1)));
    }
    return h;
}

std::vector<long long> colex_counts_for(int n, int k, const BigInt& m) {
    if (m < 1 || m > binom(n, k)) throw std::invalid_argument("m out of range");
    std::vector<long long> counts(static_cast<std::size_t>(k), 0);
    if (m == binom(n, k)) return counts;
    Decomposition d = k_binomial_decomposition(m, k);
    const int t = static_cast<int>(d.coeffs.size()) - 1;
    auto coeff = [&](int i) { return static_cast<long long>(d.coeffs[i]); };
    if (t == 0) {
        counts[0] = n - coeff(0);
        return counts;
    }
    counts[0] = n - coeff(0) - 1;
    for (int j = 2; j <= t; ++j) counts[j - 1] = coeff(j - 2) - coeff(j - 1) - 1;
    counts[t] = coeff(t - 1) - coeff(t);
    return counts;
}

std::string hypergraph_to_text(const Hypergraph& h) {
    std::ostringstream os;
    os << h.n << '\n';
    for (SetMask e : h.edges) {
        auto elems = elements_of(e);
        for (std::size_t i = 0; i < elems.size(); ++i) {
            if (i) os << ',';
            os << elems[i];
        }
        os << '\n';
    }
    return os.str();
}

Hypergraph hypergraph_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<SetMask> edges;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (n < 0) {
            std::istringstream hl(line);
            if (!(hl >> n) || n < 1 || n > kMaxGroundSet)
                throw ParseError(lineno, "expected header 'n'");
            continue;
        }
        std::vector<int> elems;
        std::string tok;
        std::istringstream ls(line);
        while (std::getline(ls, tok, ',')) {
            try {
                elems.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError(lineno, "cannot parse vertex '" + tok + "'");
            }
        }
        if (elems.empty()) throw ParseError(lineno, "empty edge");
        SetMask e;
        try {
            e = mask_of(elems, n);
        } catch (const std::exception& ex) {
            throw ParseError(lineno, ex.what());
        }
        edges.push_back(e);
    }
    if (n < 0) throw ParseError(lineno, "missing header 'n'");
    return Hypergraph{n, std::move(edges)};
}

Hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open hypergraph file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return hypergraph_from_text(buf.str());
}

std::string trees_to_json(const Hypergraph& h, const std::vector<int>& order, int k) {
    nlohmann::json out;
    out["schema"] = "1";
    out["n"] = h.n;
    out["k"] = k;
    auto set_json = [](SetMask m) {
        nlohmann::json arr = nlohmann::json::array();
        for (int e : elements_of(m)) arr.push_back(e);
        return arr;
    };
    nlohmann::json trees = nlohmann::json::array();
    for (int j = 1; j <= static_cast<int>(order.size()); ++j) {
        ExtensionTree tree = build_extension_tree(h, order, j);
        nlohmann::json t;
        t["edge"] = set_json(tree.edge);
        t["blocking_sets"] = nlohmann::json::array();
        for (SetMask b : tree.blocking) t["blocking_sets"].push_back(set_json(b));
        t["nodes"] = nlohmann::json::array();
        const int esz = std::popcount(tree.edge);
        for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
            const TreeNode& node = tree.nodes[i];
            nlohmann::json nj;
            nj["id"] = i;
            nj["parent"] = node.parent;
            nj["kind"] = node.leaf ? "leaf" : "internal";
            nj["counter"] = node.counter;
            nj["block"] = node.block;
            nj["edge_label"] = set_json(node.edge_label);
            if (node.leaf) {
                nj["avoided"] = set_json(node.ell_v & ~node.ell_e);
                nj["picked"] = set_json(node.ell_e);
                int pos = std::popcount(node.ell_v) - std::popcount(node.ell_e);
                int delay = esz + std::popcount(node.ell_e);
                nj["pos"] = pos;
                nj["delay"] = delay;
                nj["coefficient"] = to_string(binom(h.n - pos - delay, k - delay));
            } else {
                nj["vertex_label"] = set_json(node.vertex_label);
            }
            t["nodes"].push_back(nj);
        }
        trees.push_back(t);
    }
    out["trees"] = trees;
    return out.dump(2);
}

}  // namespace kk
