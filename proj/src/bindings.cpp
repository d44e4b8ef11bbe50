// Python bindings for the core operations. Big integers cross the boundary
// as Python ints (via decimal strings), families as (n, k, list-of-lists).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kk/bbw.hpp"
#include "kk/canonical.hpp"
#include "kk/construct.hpp"
#include "kk/extremal.hpp"
#include "kk/oracle.hpp"

namespace py = pybind11;

namespace {

kk::BigInt big_from_py(const py::int_& v) {
    return kk::BigInt(v.attr("__str__")().cast<std::string>());
}

py::int_ big_to_py(const kk::BigInt& v) {
    py::object parsed = py::module_::import("builtins").attr("int")(kk::to_string(v));
    return py::reinterpret_borrow<py::int_>(parsed);
}

py::list coeffs_to_py(const kk::Decomposition& d) {
    py::list out;
    for (const kk::BigInt& c : d.coeffs) out.append(big_to_py(c));
    return out;
}

kk::KSetFamily family_from_py(int n, int k, const std::vector<std::vector<int>>& sets) {
    std::vector<kk::SetMask> masks;
    masks.reserve(sets.size());
    for (const auto& s : sets) masks.push_back(kk::mask_of(s, n));
    return kk::make_family(n, k, std::move(masks));
}

py::list family_to_py(const kk::KSetFamily& fam) {
    py::list out;
    for (kk::SetMask s : fam.sets) {
        py::list elems;
        for (int e : kk::elements_of(s)) elems.append(e);
        out.append(elems);
    }
    return out;
}

py::list edges_to_py(const std::vector<kk::SetMask>& edges) {
    py::list out;
    for (kk::SetMask e : edges) {
        py::list vs;
        for (int v : kk::elements_of(e)) vs.append(v);
        out.append(vs);
    }
    return out;
}

kk::Hypergraph hypergraph_from_py(int n, const std::vector<std::vector<int>>& edges) {
    kk::Hypergraph h;
    h.n = n;
    for (const auto& e : edges) h.edges.push_back(kk::mask_of(e, n));
    return h;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Kruskal-Katona extremal families: decompositions, shadows, the "
              "minimal-non-face encoding, the bins-balls-wall process and the "
              "depth-aware decision algorithm.";

    m.def("binom", [](const py::int_& n, long long k) { return big_to_py(kk::binom(big_from_py(n), k)); });

    m.def("k_binomial_decomposition", [](const py::int_& mm, int k) {
        return coeffs_to_py(kk::k_binomial_decomposition(big_from_py(mm), k));
    });
    m.def("full_k_binomial_decomposition", [](const py::int_& mm, int k) {
        return coeffs_to_py(kk::full_k_binomial_decomposition(big_from_py(mm), k));
    });
    m.def("kk_lower_bound", [](const py::int_& mm, int k, int i) {
        return big_to_py(kk::kk_lower_bound(big_from_py(mm), k, i));
    });

    m.def("initial_segment", [](int n, int k, const py::int_& mm) {
        return family_to_py(kk::initial_segment(n, k, big_from_py(mm)));
    });
    m.def("shadow", [](int n, int k, const std::vector<std::vector<int>>& sets, int iter) {
        return family_to_py(kk::iterated_shadow(family_from_py(n, k, sets), iter));
    }, py::arg("n"), py::arg("k"), py::arg("sets"), py::arg("iter") = 1);
    m.def("is_initial_segment", [](int n, int k, const std::vector<std::vector<int>>& sets,
                                   bool up_to_iso) {
        return kk::is_initial_segment(family_from_py(n, k, sets), up_to_iso);
    }, py::arg("n"), py::arg("k"), py::arg("sets"), py::arg("up_to_iso") = true);
    m.def("canonical_form", [](int n, int k, const std::vector<std::vector<int>>& sets) {
        return family_to_py(kk::canonical_form(family_from_py(n, k, sets)));
    });

    m.def("hypergraph_of_family", [](int n, int k, const std::vector<std::vector<int>>& sets) {
        return edges_to_py(kk::hypergraph_of_family(family_from_py(n, k, sets)).edges);
    });
    m.def("family_of_hypergraph", [](int n, const std::vector<std::vector<int>>& edges, int k) {
        return family_to_py(kk::family_of_hypergraph(hypergraph_from_py(n, edges), k));
    });
    m.def("blocking_sets", [](int n, const std::vector<std::vector<int>>& edges, int j) {
        kk::Hypergraph h = hypergraph_from_py(n, edges);
        std::vector<int> order(h.edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        return edges_to_py(kk::blocking_sets(h, order, j).sets);
    });
    m.def("tree_ball_specs", [](int n, const std::vector<std::vector<int>>& edges) {
        kk::Hypergraph h = hypergraph_from_py(n, edges);
        std::vector<int> order(h.edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        py::list out;
        for (const auto& [spec, cnt] : kk::tree_ball_specs(h, order))
            out.append(py::make_tuple(spec.pos, spec.delay, cnt));
        return out;
    });
    m.def("is_colex_hypergraph", [](int n, const std::vector<std::vector<int>>& edges) {
        return kk::is_colex_hypergraph(hypergraph_from_py(n, edges));
    });
    m.def("colex_hypergraph", [](int n, const std::vector<long long>& counts) {
        return edges_to_py(kk::colex_hypergraph(n, counts).edges);
    });

    m.def("family_walls", [](int n, int k, const std::vector<std::vector<int>>& sets) {
        py::list out;
        for (const kk::BigInt& w : kk::family_walls(family_from_py(n, k, sets)))
            out.append(big_to_py(w));
        return out;
    });
    m.def("shadow_decomposition", [](int n, int k, const std::vector<std::vector<int>>& sets) {
        return coeffs_to_py(kk::shadow_decomposition_direct(family_from_py(n, k, sets)));
    });
    m.def("hypotenusal_numbers", [](int count) {
        py::list out;
        for (const kk::BigInt& v : kk::hypotenusal_numbers(count)) out.append(big_to_py(v));
        return out;
    });

    m.def("is_extremal", [](int n, int k, const std::vector<std::vector<int>>& sets) {
        return kk::is_extremal_direct(family_from_py(n, k, sets));
    });
    m.def("depth", [](int n, int k, const std::vector<std::vector<int>>& sets) {
        return kk::depth(family_from_py(n, k, sets));
    });
    m.def("depth_bound", [](const py::int_& n) { return kk::depth_bound(big_from_py(n)); });
    m.def("unique_colex_predicate", [](const py::int_& mm, int k, int n) {
        return kk::unique_colex_predicate(big_from_py(mm), k, n);
    });
    m.def("embed_extremal", [](int n, int k, const std::vector<std::vector<int>>& sets) {
        kk::EmbedResult er = kk::embed_extremal(family_from_py(n, k, sets));
        return py::make_tuple(er.r0, er.extended.n, family_to_py(er.extended));
    });

    m.def("construction", [](const std::string& kind, int j, long long r,
                             const std::vector<long long>& counts, int n) {
        kk::Hypergraph h;
        if (kind == "A") h = kk::construction_A(j, counts, n);
        else if (kind == "B") h = kk::construction_B(j, counts, n);
        else if (kind == "Aprime") h = kk::construction_A_prime(j, r, counts, n);
        else if (kind == "Bprime") h = kk::construction_B_prime(j, r, counts, n);
        else throw std::invalid_argument("kind must be A, B, Aprime or Bprime");
        return edges_to_py(h.edges);
    }, py::arg("kind"), py::arg("j"), py::arg("r"), py::arg("counts"), py::arg("n"));
    m.def("decide_extremal_with_depth", [](int n, int k, const py::int_& mm, int t) -> py::object {
        auto res = kk::decide_extremal_with_depth(n, k, big_from_py(mm), t);
        if (!res) return py::none();
        py::dict out;
        out["construction"] = std::string(1, res->construction);
        out["counts"] = res->counts;
        py::list edges;
        for (const auto& e : res->edge_lists()) {
            py::list one;
            for (long long v : e) one.append(v);
            edges.append(one);
        }
        out["edges"] = edges;
        return out;
    });

    m.def("verify", [](int n, int k, std::uint64_t budget, int threads, std::uint64_t seed) {
        kk::VerifyOptions opts;
        opts.budget = budget;
        opts.threads = threads;
        opts.seed = seed;
        kk::VerifyReport r = kk::verify_all(n, k, opts);
        py::dict out;
        out["all_pass"] = r.all_pass;
        out["sampled"] = r.sampled;
        py::list checks;
        for (const auto& c : r.checks) {
            py::dict cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["checked"] = c.checked;
            cj["failures"] = c.failures;
            checks.append(cj);
        }
        out["checks"] = checks;
        return out;
    }, py::arg("n"), py::arg("k"), py::arg("budget") = 20'000'000ull, py::arg("threads") = 1,
       py::arg("seed") = 12345ull);
}
