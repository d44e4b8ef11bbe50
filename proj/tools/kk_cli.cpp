// Command line surface for the Kruskal-Katona extremal-family toolkit.
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 ok, 1 decide
// found nothing, 2 invalid input, 3 capacity, 4 verification failure.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "kk/bbw.hpp"
#include "kk/construct.hpp"
#include "kk/extremal.hpp"
#include "kk/oracle.hpp"

namespace {

using nlohmann::json;

json decomposition_json(const kk::Decomposition& d) {
    json out;
    out["schema"] = "1";
    out["kind"] = kk::decomposition_kind_name(d.kind);
    out["k"] = d.k;
    out["coeffs"] = json::array();
    for (const kk::BigInt& c : d.coeffs) out["coeffs"].push_back(kk::to_string(c));
    return out;
}

std::vector<long long> parse_counts(const std::string& arg) {
    std::vector<long long> counts;
    std::string tok;
    std::istringstream is(arg);
    while (std::getline(is, tok, ',')) counts.push_back(std::stoll(tok));
    if (counts.empty()) throw std::invalid_argument("empty counts");
    return counts;
}

int run(int argc, char** argv) {
    CLI::App app{"Kruskal-Katona extremal families toolkit"};
    app.require_subcommand(1);

    // decompose
    auto* cmd_dec = app.add_subcommand("decompose", "binomial decompositions of an integer");
    std::string dec_m;
    int dec_k = 0;
    bool dec_full = false;
    std::string dec_shadow_file;
    cmd_dec->add_option("m", dec_m, "positive integer")->required();
    cmd_dec->add_option("--k", dec_k, "denominator k")->required();
    cmd_dec->add_flag("--full", dec_full, "full k-binomial decomposition");
    cmd_dec->add_option("--shadow", dec_shadow_file,
                        "family file; emit its shadow decomposition instead");

    // shadow
    auto* cmd_sh = app.add_subcommand("shadow", "iterated shadow of a family");
    std::string sh_file;
    int sh_iter = 1;
    cmd_sh->add_option("family", sh_file, "family file")->required();
    cmd_sh->add_option("--iter", sh_iter, "number of shadow iterations");

    // hypergraph / family
    auto* cmd_hg = app.add_subcommand("hypergraph", "minimal non-face encoding of a family");
    std::string hg_file;
    cmd_hg->add_option("family", hg_file, "family file")->required();

    auto* cmd_fam = app.add_subcommand("family", "family encoded by a hypergraph");
    std::string fam_file;
    int fam_k = 0;
    cmd_fam->add_option("hypergraph", fam_file, "hypergraph file")->required();
    cmd_fam->add_option("--k", fam_k, "set size k")->required();

    // trees
    auto* cmd_tr = app.add_subcommand("trees", "extension trees of every edge, as JSON");
    std::string tr_file;
    cmd_tr->add_option("family", tr_file, "family file")->required();

    // bbw
    auto* cmd_bbw = app.add_subcommand("bbw", "bins-balls-wall process");
    auto* cmd_bbw_run = cmd_bbw->add_subcommand("run", "run the process of a family");
    std::string bbw_file;
    int bbw_steps = -1;
    cmd_bbw_run->add_option("family", bbw_file, "family file")->required();
    cmd_bbw_run->add_option("--steps", bbw_steps, "iterations (default k+1)");
    auto* cmd_bbw_hyp = cmd_bbw->add_subcommand("hypotenusal", "hypotenusal numbers");
    int hyp_count = 9;
    cmd_bbw_hyp->add_option("--count", hyp_count, "how many values");

    // check
    auto* cmd_chk = app.add_subcommand("check", "extremality report for a family");
    std::string chk_file;
    cmd_chk->add_option("family", chk_file, "family file")->required();

    // construct
    auto* cmd_con = app.add_subcommand("construct", "near-colex constructions");
    std::string con_kind;
    int con_j = 0, con_n = 0;
    long long con_r = -1;
    std::string con_counts;
    cmd_con->add_option("kind", con_kind, "A | B | Aprime | Bprime")->required();
    cmd_con->add_option("--j", con_j, "modification level is j+1")->required();
    cmd_con->add_option("--r", con_r, "primed variants: modified edge is r+1");
    cmd_con->add_option("--counts", con_counts, "n1,...,nk")->required();
    cmd_con->add_option("--n", con_n, "ground set size")->required();

    // decide
    auto* cmd_dcd = app.add_subcommand("decide", "existence of an extremal family of given depth");
    int dcd_n = 0, dcd_k = 0, dcd_t = 0;
    std::string dcd_m;
    cmd_dcd->add_option("--n", dcd_n)->required();
    cmd_dcd->add_option("--k", dcd_k)->required();
    cmd_dcd->add_option("--m", dcd_m)->required();
    cmd_dcd->add_option("--depth", dcd_t)->required();

    // embed
    auto* cmd_emb = app.add_subcommand("embed", "extremal extension of a family");
    std::string emb_file, emb_out;
    cmd_emb->add_option("family", emb_file, "family file")->required();
    cmd_emb->add_option("--out", emb_out, "write the extended family file here");

    // verify
    auto* cmd_ver = app.add_subcommand("verify", "run the invariant battery");
    int ver_n = 0, ver_k = 0, ver_threads = 1;
    std::uint64_t ver_budget = 20'000'000, ver_seed = 12345;
    cmd_ver->add_option("--n", ver_n)->required();
    cmd_ver->add_option("--k", ver_k)->required();
    cmd_ver->add_option("--budget", ver_budget, "max families enumerated");
    cmd_ver->add_option("--threads", ver_threads);
    cmd_ver->add_option("--seed", ver_seed, "seed for sampled sweeps");

    CLI11_PARSE(app, argc, argv);

    if (cmd_dec->parsed()) {
        if (!dec_shadow_file.empty()) {
            kk::KSetFamily fam = kk::read_family_file(dec_shadow_file);
            std::cout << decomposition_json(kk::shadow_decomposition_direct(fam)).dump(2)
                      << '\n';
            return 0;
        }
        kk::BigInt m = kk::bigint_from_string(dec_m);
        kk::Decomposition d = dec_full ? kk::full_k_binomial_decomposition(m, dec_k)
                                       : kk::k_binomial_decomposition(m, dec_k);
        std::cout << decomposition_json(d).dump(2) << '\n';
        return 0;
    }
    if (cmd_sh->parsed()) {
        kk::KSetFamily fam = kk::read_family_file(sh_file);
        std::cout << kk::family_to_text(kk::iterated_shadow(fam, sh_iter));
        return 0;
    }
    if (cmd_hg->parsed()) {
        kk::KSetFamily fam = kk::read_family_file(hg_file);
        std::cout << kk::hypergraph_to_text(kk::hypergraph_of_family(fam));
        return 0;
    }
    if (cmd_fam->parsed()) {
        kk::Hypergraph h = kk::read_hypergraph_file(fam_file);
        std::cout << kk::family_to_text(kk::family_of_hypergraph(h, fam_k));
        return 0;
    }
    if (cmd_tr->parsed()) {
        kk::KSetFamily fam = kk::read_family_file(tr_file);
        kk::Hypergraph h = kk::hypergraph_of_family(fam);
        std::vector<int> order = kk::comfortable_order(h);
        std::cout << kk::trees_to_json(h, order, fam.k) << '\n';
        return 0;
    }
    if (cmd_bbw_run->parsed()) {
        kk::KSetFamily fam = kk::read_family_file(bbw_file);
        kk::Hypergraph h = kk::hypergraph_of_family(fam);
        std::vector<int> order = kk::comfortable_order(h);
        kk::BbwConfig config = kk::init_from_hypergraph(h, order);
        int steps = bbw_steps >= 0 ? bbw_steps : fam.k + 1;
        kk::RunResult rr = kk::bbw_run(std::move(config), steps);
        json out;
        out["schema"] = "1";
        out["walls"] = json::array();
        for (const kk::BigInt& w : rr.trace) out["walls"].push_back(kk::to_string(w));
        out["balls"] = json::array();
        for (const auto& [key, cnt] : rr.final.balls) {
            json b;
            b["pos"] = key.first;
            b["delay"] = key.second;
            b["count"] = kk::to_string(cnt);
            out["balls"].push_back(b);
        }
        out["abrupt"] = rr.abrupt;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (cmd_bbw_hyp->parsed()) {
        json out;
        out["schema"] = "1";
        out["values"] = json::array();
        for (const kk::BigInt& v : kk::hypotenusal_numbers(hyp_count))
            out["values"].push_back(kk::to_string(v));
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (cmd_chk->parsed()) {
        kk::KSetFamily fam = kk::read_family_file(chk_file);
        kk::Decomposition beta = kk::shadow_decomposition_direct(fam);
        std::vector<kk::BigInt> walls = kk::family_walls(fam);
        kk::Decomposition beta_wall = kk::beta_from_walls(fam.n, fam.k, walls);
        if (beta_wall.coeffs != beta.coeffs) {
            std::cerr << "internal disagreement between wall and direct decompositions\n";
            return 4;
        }
        json out;
        out["schema"] = "1";
        out["extremal"] = kk::is_extremal_direct(fam);
        out["beta"] = json::array();
        for (const kk::BigInt& b : beta.coeffs) out["beta"].push_back(kk::to_string(b));
        out["depth"] = kk::depth(fam);
        out["walls"] = json::array();
        for (const kk::BigInt& w : walls) out["walls"].push_back(kk::to_string(w));
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (cmd_con->parsed()) {
        std::vector<long long> counts = parse_counts(con_counts);
        kk::Hypergraph h;
        if (con_kind == "A")
            h = kk::construction_A(con_j, counts, con_n);
        else if (con_kind == "B")
            h = kk::construction_B(con_j, counts, con_n);
        else if (con_kind == "Aprime")
            h = kk::construction_A_prime(con_j, con_r, counts, con_n);
        else if (con_kind == "Bprime")
            h = kk::construction_B_prime(con_j, con_r, counts, con_n);
        else
            throw std::invalid_argument("kind must be A, B, Aprime or Bprime");
        std::cout << kk::hypergraph_to_text(h);
        return 0;
    }
    if (cmd_dcd->parsed()) {
        auto res = kk::decide_extremal_with_depth(dcd_n, dcd_k, kk::bigint_from_string(dcd_m),
                                                  dcd_t);
        if (!res) {
            std::cout << "NONE\n";
            return 1;
        }
        // materialize the family at desk scale, fall back to the hypergraph
        try {
            std::cout << kk::family_to_text(res->family());
        } catch (const kk::CapacityError&) {
            std::cerr << "family too large to materialize; emitting its hypergraph\n";
            std::cout << dcd_n << '\n';
            for (const auto& edge : res->edge_lists()) {
                for (std::size_t i = 0; i < edge.size(); ++i) {
                    if (i) std::cout << ',';
                    std::cout << edge[i];
                }
                std::cout << '\n';
            }
        }
        return 0;
    }
    if (cmd_emb->parsed()) {
        kk::KSetFamily fam = kk::read_family_file(emb_file);
        kk::EmbedResult er = kk::embed_extremal(fam);
        json out;
        out["schema"] = "1";
        out["r0"] = er.r0;
        out["n"] = er.extended.n;
        out["k"] = er.extended.k;
        out["family"] = kk::family_to_text(er.extended);
        if (!emb_out.empty()) {
            std::ofstream f(emb_out);
            f << kk::family_to_text(er.extended);
            out["written"] = emb_out;
        }
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    if (cmd_ver->parsed()) {
        kk::VerifyOptions opts;
        opts.budget = ver_budget;
        opts.threads = ver_threads;
        opts.seed = ver_seed;
        kk::VerifyReport report = kk::verify_all(ver_n, ver_k, opts);
        std::cout << kk::report_to_json(report) << '\n';
        return report.all_pass ? 0 : 4;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const kk::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const kk::CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return 3;
    } catch (const kk::InvalidHypergraph& e) {
        std::cerr << "invalid hypergraph: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
