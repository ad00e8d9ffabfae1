#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tritail/analytic.hpp"
#include "tritail/edge_io.hpp"
#include "tritail/montecarlo.hpp"
#include "tritail/structure.hpp"
#include "tritail/tig.hpp"
#include "tritail/verify.hpp"

using nlohmann::json;
using namespace tritail;

namespace {

unsigned default_workers() {
    if (const char* env = std::getenv("TRITAIL_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> seed) {
    if (seed) return *seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw InputError("cannot open output file: " + out_path);
        out << text << '\n';
    }
}

void emit(const json& j, const std::string& out_path) { emit(j.dump(), out_path); }

json triangle_list_json(const std::vector<Triangle>& tris) {
    json arr = json::array();
    for (const Triangle& t : tris) arr.push_back({t.a, t.b, t.c});
    return arr;
}

json tail_json(const mc::TailEstimate& est, json params) {
    return json{{"params", std::move(params)},
                {"estimate", est.p_hat},
                {"std_err", est.std_err},
                {"ci95", {est.ci95[0], est.ci95[1]}},
                {"successes", est.successes},
                {"trials", est.trials},
                {"exact", est.exact},
                {"seed", est.seed},
                {"wall_time_s", est.wall_time_s}};
}

json classification_json(const EventClassification& ev) {
    return json{{"d_event", ev.d_event},
                {"c_event", ev.c_event},
                {"t_event", ev.t_event},
                {"d_or_c", ev.d_event || ev.c_event},
                {"k", ev.k},
                {"eps", ev.eps},
                {"disjoint_threshold", ev.disjoint_threshold},
                {"component_threshold", ev.component_threshold},
                {"clique_triangle_threshold", ev.clique_triangle_threshold},
                {"clique_size_bound", ev.clique_size_bound},
                {"packing", {{"size", ev.packing.size},
                             {"exact", ev.packing.exact},
                             {"triangles", triangle_list_json(ev.packing.triangles)}}},
                {"c_witness", ev.c_witness},
                {"c_witness_triangles", ev.c_witness_triangles},
                {"max_component_triangles", ev.max_component_triangles},
                {"t_witness", ev.t_witness}};
}

int run(int argc, char** argv) {
    CLI::App app{"triangle upper-tail toolkit for sparse random graphs"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::string out_path;  // report destination; sample/plant use --out for the graph file
    auto add_report_out = [&out_path](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    };

    // ---- sample ----------------------------------------------------------
    auto* cmd_sample = app.add_subcommand("sample", "draw one G(n, d/n) graph");
    struct {
        std::uint64_t n = 0;
        double d = 0.0;
        std::optional<std::uint64_t> seed;
        std::string graph_out;
    } sample_opt;
    cmd_sample->add_option("--n", sample_opt.n, "vertex count")->required();
    cmd_sample->add_option("--d", sample_opt.d, "average degree parameter")->required();
    cmd_sample->add_option("--seed", sample_opt.seed, "RNG seed (fresh when absent)");
    cmd_sample->add_option("--out", sample_opt.graph_out, "edge-list output file");
    cmd_sample->callback([&] {
        std::uint64_t seed = resolve_seed(sample_opt.seed);
        Graph g = mc::sample_er(static_cast<Vertex>(sample_opt.n), sample_opt.d, seed);
        json j{{"params", {{"n", sample_opt.n}, {"d", sample_opt.d}, {"seed", seed}}},
               {"n", g.vertex_count()},
               {"edges", g.edge_count()},
               {"triangles", count_triangles(g)},
               {"seed", seed}};
        if (!sample_opt.graph_out.empty()) {
            write_edge_list_file(sample_opt.graph_out, g);
            j["out"] = sample_opt.graph_out;
        } else {
            json arr = json::array();
            for (auto [u, v] : g.edges()) arr.push_back({u, v});
            j["edge_list"] = std::move(arr);
        }
        emit(j, "");
    });

    // ---- triangles -------------------------------------------------------
    auto* cmd_triangles = app.add_subcommand("triangles", "count triangles of a graph file");
    struct {
        std::string in;
        bool list = false;
    } tri_opt;
    add_report_out(cmd_triangles);
    cmd_triangles->add_option("--in", tri_opt.in, "edge-list file")->required();
    cmd_triangles->add_flag("--list", tri_opt.list, "include the triangle list");
    cmd_triangles->callback([&] {
        Graph g = read_edge_list_file(tri_opt.in);
        json j{{"params", {{"in", tri_opt.in}}},
               {"n", g.vertex_count()},
               {"edges", g.edge_count()},
               {"triangles", count_triangles(g)}};
        if (tri_opt.list) j["triangle_list"] = triangle_list_json(enumerate_triangles(g));
        emit(j, out_path);
    });

    // ---- decompose -------------------------------------------------------
    auto* cmd_decompose =
        app.add_subcommand("decompose", "triangle-union components with their profile");
    struct {
        std::string in;
        std::uint64_t budget = 1'000'000;
        bool spanning = false;
    } dec_opt;
    add_report_out(cmd_decompose);
    cmd_decompose->add_option("--in", dec_opt.in, "edge-list file")->required();
    cmd_decompose->add_option("--budget", dec_opt.budget, "set-cover search budget");
    cmd_decompose->add_flag("--spanning", dec_opt.spanning,
                            "also report the minimum spanning-triangle count");
    cmd_decompose->callback([&] {
        Graph g = read_edge_list_file(dec_opt.in);
        auto components = tisg_components(g);
        json comps = json::array();
        for (const auto& c : components) {
            json jc{{"vertices", c.vertices.size()},
                    {"edges", c.edges.size()},
                    {"triangles", c.triangle_count},
                    {"excess", c.excess},
                    {"vertex_ids", c.vertices}};
            if (dec_opt.spanning) {
                SpanCover cover = min_spanning_triangles(c, dec_opt.budget);
                jc["min_spanning_triangles"] = cover.exact ? json(cover.size) : json();
                jc["spanning_cover_upper_bound"] = cover.size;
            }
            comps.push_back(std::move(jc));
        }
        TisgProfile prof = profile_of(components);
        emit(json{{"params", {{"in", dec_opt.in}, {"budget", dec_opt.budget}}},
                  {"components", std::move(comps)},
                  {"profile", prof.sizes},
                  {"total_triangles", prof.total}},
             out_path);
    });

    // ---- pack ------------------------------------------------------------
    auto* cmd_pack = app.add_subcommand("pack", "maximum vertex-disjoint triangle packing");
    struct {
        std::string in;
        std::optional<std::uint64_t> target;
        std::uint64_t budget = 1'000'000;
    } pack_opt;
    add_report_out(cmd_pack);
    cmd_pack->add_option("--in", pack_opt.in, "edge-list file")->required();
    cmd_pack->add_option("--target", pack_opt.target, "stop once a packing this large is found");
    cmd_pack->add_option("--budget", pack_opt.budget, "branch-and-bound node budget");
    cmd_pack->callback([&] {
        Graph g = read_edge_list_file(pack_opt.in);
        PackingResult res = max_disjoint_triangles(g, pack_opt.target, pack_opt.budget);
        emit(json{{"params",
                   {{"in", pack_opt.in},
                    {"target", pack_opt.target ? json(*pack_opt.target) : json()},
                    {"budget", pack_opt.budget}}},
                  {"size", res.size},
                  {"exact", res.exact},
                  {"triangles", triangle_list_json(res.triangles)}},
             out_path);
    });

    // ---- extract ---------------------------------------------------------
    auto* cmd_extract = app.add_subcommand("extract", "structure extraction");
    cmd_extract->require_subcommand(1);
    auto* cmd_core = cmd_extract->add_subcommand("dense-core", "high-degree excess core");
    struct {
        std::string in;
        std::uint64_t ell = 0;
        double xi = 0.1;
    } core_opt;
    add_report_out(cmd_core);
    cmd_core->add_option("--in", core_opt.in, "edge-list file")->required();
    cmd_core->add_option("--ell", core_opt.ell, "target triangle count")->required();
    cmd_core->add_option("--xi", core_opt.xi, "pruning parameter")->required();
    cmd_core->callback([&] {
        Graph g = read_edge_list_file(core_opt.in);
        DenseCoreReport r = dense_core(g, core_opt.ell, core_opt.xi);
        emit(json{{"params", {{"in", core_opt.in}, {"ell", core_opt.ell}, {"xi", core_opt.xi}}},
                  {"core_vertices", r.core_vertices},
                  {"core_edges", r.core_edges},
                  {"core_triangles", r.core_triangles},
                  {"vertex_ids", r.original_of},
                  {"precondition_ok", r.precondition_ok},
                  {"size_bound", r.size_bound},
                  {"edge_bound", r.edge_bound},
                  {"triangle_bound", r.triangle_bound},
                  {"size_ok", r.size_ok},
                  {"edges_ok", r.edges_ok},
                  {"triangles_ok", r.triangles_ok},
                  {"lost_to_tree_types", r.lost_to_tree_types},
                  {"lost_to_pruning", r.lost_to_pruning}},
             out_path);
    });
    auto* cmd_clique = cmd_extract->add_subcommand("near-clique", "spectral S4 extraction");
    struct {
        std::string in;
        std::uint64_t k = 0;
        double eps = 0.1;
    } nc_opt;
    add_report_out(cmd_clique);
    cmd_clique->add_option("--in", nc_opt.in, "edge-list file")->required();
    cmd_clique->add_option("--k", nc_opt.k, "target triangle scale")->required();
    cmd_clique->add_option("--eps", nc_opt.eps, "slack parameter")->required();
    cmd_clique->callback([&] {
        Graph g = read_edge_list_file(nc_opt.in);
        NearCliqueReport r = spectral_near_clique(g, nc_opt.k, nc_opt.eps);
        emit(json{{"params", {{"in", nc_opt.in}, {"k", nc_opt.k}, {"eps", nc_opt.eps}}},
                  {"lambda1", r.partition.lambda1},
                  {"eps_tilde", r.partition.eps_tilde},
                  {"residual_frobenius_sq", r.partition.residual_frobenius_sq},
                  {"s1", r.partition.s1},
                  {"s2", r.partition.s2},
                  {"s3", r.partition.s3},
                  {"s4", r.partition.s4},
                  {"hypotheses_met", r.hypotheses_met},
                  {"v_prime", r.v_prime},
                  {"v_prime_triangles", r.v_prime_triangles},
                  {"size_bound", r.size_bound},
                  {"triangle_bound", r.triangle_bound},
                  {"size_ok", r.size_ok},
                  {"triangles_ok", r.triangles_ok},
                  {"s1_s2_bound", r.s1_s2_bound},
                  {"s4_bound", r.s4_bound},
                  {"s1_ok", r.s1_ok},
                  {"s2_ok", r.s2_ok},
                  {"s4_ok", r.s4_ok}},
             out_path);
    });

    // ---- classify ----------------------------------------------------------
    auto* cmd_classify = app.add_subcommand("classify", "disjoint/clique/component events");
    struct {
        std::string in;
        std::uint64_t k = 0;
        double eps = 0.1;
    } cls_opt;
    add_report_out(cmd_classify);
    cmd_classify->add_option("--in", cls_opt.in, "edge-list file")->required();
    cmd_classify->add_option("--k", cls_opt.k, "triangle threshold")->required();
    cmd_classify->add_option("--eps", cls_opt.eps, "slack parameter")->required();
    cmd_classify->callback([&] {
        Graph g = read_edge_list_file(cls_opt.in);
        EventClassification ev = classify_events(g, cls_opt.k, cls_opt.eps);
        json j = classification_json(ev);
        j["params"] = {{"in", cls_opt.in}, {"k", cls_opt.k}, {"eps", cls_opt.eps}};
        emit(j, out_path);
    });

    // ---- tail / dist -------------------------------------------------------
    auto* cmd_tail = app.add_subcommand("tail", "estimate P(triangle count >= k)");
    struct {
        std::uint64_t n = 0;
        double d = 0.0;
        std::uint64_t k = 0;
        std::uint64_t trials = 100'000;
        std::optional<std::uint64_t> seed;
        unsigned workers = 0;
        bool exhaustive = false;
    } tail_opt;
    add_report_out(cmd_tail);
    cmd_tail->add_option("--n", tail_opt.n)->required();
    cmd_tail->add_option("--d", tail_opt.d)->required();
    cmd_tail->add_option("--k", tail_opt.k)->required();
    cmd_tail->add_option("--trials", tail_opt.trials);
    cmd_tail->add_option("--seed", tail_opt.seed);
    cmd_tail->add_option("--workers", tail_opt.workers, "0 = TRITAIL_THREADS or hardware");
    cmd_tail->add_flag("--exhaustive", tail_opt.exhaustive,
                       "enumerate all graphs exactly (needs C(n,2) <= 20)");
    cmd_tail->callback([&] {
        unsigned workers = tail_opt.workers ? tail_opt.workers : default_workers();
        json params{{"n", tail_opt.n},      {"d", tail_opt.d},
                    {"k", tail_opt.k},      {"trials", tail_opt.trials},
                    {"workers", workers},   {"exhaustive", tail_opt.exhaustive}};
        mc::TailEstimate est;
        if (tail_opt.exhaustive) {
            est = mc::exhaustive_tail(static_cast<Vertex>(tail_opt.n), tail_opt.d, tail_opt.k);
            params["seed"] = json();
        } else {
            std::uint64_t seed = resolve_seed(tail_opt.seed);
            params["seed"] = seed;
            est = mc::estimate_tail(static_cast<Vertex>(tail_opt.n), tail_opt.d, tail_opt.k,
                                    tail_opt.trials, seed, workers);
        }
        emit(tail_json(est, std::move(params)), out_path);
    });

    auto* cmd_dist = app.add_subcommand("dist", "triangle-count law vs the Poisson limit");
    struct {
        std::uint64_t n = 0;
        double d = 0.0;
        std::uint64_t trials = 100'000;
        std::optional<std::uint64_t> seed;
        unsigned workers = 0;
        bool exhaustive = false;
    } dist_opt;
    add_report_out(cmd_dist);
    cmd_dist->add_option("--n", dist_opt.n)->required();
    cmd_dist->add_option("--d", dist_opt.d)->required();
    cmd_dist->add_option("--trials", dist_opt.trials);
    cmd_dist->add_option("--seed", dist_opt.seed);
    cmd_dist->add_option("--workers", dist_opt.workers);
    cmd_dist->add_flag("--exhaustive", dist_opt.exhaustive);
    cmd_dist->callback([&] {
        unsigned workers = dist_opt.workers ? dist_opt.workers : default_workers();
        mc::DistributionReport rep;
        json params{{"n", dist_opt.n},
                    {"d", dist_opt.d},
                    {"trials", dist_opt.trials},
                    {"workers", workers},
                    {"exhaustive", dist_opt.exhaustive}};
        if (dist_opt.exhaustive) {
            rep = mc::exhaustive_distribution(static_cast<Vertex>(dist_opt.n), dist_opt.d);
            params["seed"] = json();
        } else {
            std::uint64_t seed = resolve_seed(dist_opt.seed);
            params["seed"] = seed;
            rep = mc::empirical_distribution(static_cast<Vertex>(dist_opt.n), dist_opt.d,
                                             dist_opt.trials, seed, workers);
        }
        json hist = json::object();
        for (const auto& [tri, cnt] : rep.histogram) hist[std::to_string(tri)] = cnt;
        json j{{"params", std::move(params)},
               {"histogram", std::move(hist)},
               {"lambda", rep.lambda},
               {"tv_distance_to_poisson", rep.tv_distance_to_poisson},
               {"trials", rep.trials},
               {"seed", rep.seed},
               {"exact", rep.exact},
               {"wall_time_s", rep.wall_time_s}};
        if (rep.exact) {
            json pmf = json::object();
            for (const auto& [tri, mass] : rep.pmf) pmf[std::to_string(tri)] = mass;
            j["pmf"] = std::move(pmf);
        }
        emit(j, out_path);
    });

    // ---- conditional -------------------------------------------------------
    auto* cmd_cond =
        app.add_subcommand("conditional", "structure frequencies conditioned on N >= k");
    struct {
        std::uint64_t n = 0;
        double d = 0.0;
        std::uint64_t k = 0;
        double eps = 0.3;
        std::uint64_t samples = 1000;
        std::optional<std::uint64_t> seed;
        unsigned workers = 0;
        std::uint64_t max_draws = 10'000'000;
    } cond_opt;
    add_report_out(cmd_cond);
    cmd_cond->add_option("--n", cond_opt.n)->required();
    cmd_cond->add_option("--d", cond_opt.d)->required();
    cmd_cond->add_option("--k", cond_opt.k)->required();
    cmd_cond->add_option("--eps", cond_opt.eps)->required();
    cmd_cond->add_option("--samples", cond_opt.samples);
    cmd_cond->add_option("--seed", cond_opt.seed);
    cmd_cond->add_option("--workers", cond_opt.workers);
    cmd_cond->add_option("--max-draws", cond_opt.max_draws, "global rejection budget");
    cmd_cond->callback([&] {
        unsigned workers = cond_opt.workers ? cond_opt.workers : default_workers();
        std::uint64_t seed = resolve_seed(cond_opt.seed);
        mc::ConditionalReport rep = mc::conditional_structure_experiment(
            static_cast<Vertex>(cond_opt.n), cond_opt.d, cond_opt.k, cond_opt.eps,
            cond_opt.samples, seed, workers, cond_opt.max_draws);
        emit(json{{"params",
                   {{"n", cond_opt.n},
                    {"d", cond_opt.d},
                    {"k", cond_opt.k},
                    {"eps", cond_opt.eps},
                    {"samples", cond_opt.samples},
                    {"seed", seed},
                    {"workers", workers},
                    {"max_draws", cond_opt.max_draws}}},
                  {"samples", rep.samples},
                  {"total_draws", rep.total_draws},
                  {"acceptance_rate", rep.acceptance_rate},
                  {"d_freq", rep.d_freq},
                  {"c_freq", rep.c_freq},
                  {"t_freq", rep.t_freq},
                  {"d_or_c_freq", rep.d_or_c_freq},
                  {"seed", rep.seed},
                  {"wall_time_s", rep.wall_time_s}},
             out_path);
    });

    // ---- plant -------------------------------------------------------------
    auto* cmd_plant = app.add_subcommand("plant", "sample with a forced configuration");
    cmd_plant->require_subcommand(1);
    struct {
        std::uint64_t n = 0;
        double d = 0.0;
        std::uint64_t k = 0;
        std::uint64_t m = 0;
        std::optional<std::uint64_t> seed;
        std::string graph_out;
    } plant_opt;
    auto* plant_tri = cmd_plant->add_subcommand("triangles", "force k disjoint triangles");
    plant_tri->add_option("--n", plant_opt.n)->required();
    plant_tri->add_option("--d", plant_opt.d)->required();
    plant_tri->add_option("--k", plant_opt.k)->required();
    plant_tri->add_option("--seed", plant_opt.seed);
    plant_tri->add_option("--out", plant_opt.graph_out, "edge-list output file");
    auto* plant_clq = cmd_plant->add_subcommand("clique", "force a clique of size m");
    plant_clq->add_option("--n", plant_opt.n)->required();
    plant_clq->add_option("--d", plant_opt.d)->required();
    plant_clq->add_option("--m", plant_opt.m)->required();
    plant_clq->add_option("--seed", plant_opt.seed);
    plant_clq->add_option("--out", plant_opt.graph_out, "edge-list output file");
    auto plant_emit = [&](const Graph& g, json params, std::uint64_t seed) {
        json j{{"params", std::move(params)},
               {"n", g.vertex_count()},
               {"edges", g.edge_count()},
               {"triangles", count_triangles(g)},
               {"seed", seed}};
        if (!plant_opt.graph_out.empty()) {
            write_edge_list_file(plant_opt.graph_out, g);
            j["out"] = plant_opt.graph_out;
        } else {
            json arr = json::array();
            for (auto [u, v] : g.edges()) arr.push_back({u, v});
            j["edge_list"] = std::move(arr);
        }
        emit(j, "");
    };
    plant_tri->callback([&] {
        std::uint64_t seed = resolve_seed(plant_opt.seed);
        Graph g = mc::plant_disjoint_triangles(static_cast<Vertex>(plant_opt.n), plant_opt.d,
                                               plant_opt.k, seed);
        plant_emit(g,
                   json{{"n", plant_opt.n}, {"d", plant_opt.d}, {"k", plant_opt.k},
                        {"seed", seed}},
                   seed);
    });
    plant_clq->callback([&] {
        std::uint64_t seed = resolve_seed(plant_opt.seed);
        Graph g =
            mc::plant_clique(static_cast<Vertex>(plant_opt.n), plant_opt.d, plant_opt.m, seed);
        plant_emit(g,
                   json{{"n", plant_opt.n}, {"d", plant_opt.d}, {"m", plant_opt.m},
                        {"seed", seed}},
                   seed);
    });

    // ---- h / f -------------------------------------------------------------
    auto* cmd_h = app.add_subcommand("h", "piecewise inverse of the edge-growth function");
    double h_y = 0.0;
    add_report_out(cmd_h);
    cmd_h->add_option("--y", h_y)->required();
    cmd_h->callback([&] { emit(json{{"y", h_y}, {"h", analytic::h_of(h_y)}}, out_path); });

    auto* cmd_f = app.add_subcommand("f", "edge-growth function (sqrt2/3)(x+1)^{3/2}+3(x+1)");
    double f_x = 0.0;
    add_report_out(cmd_f);
    cmd_f->add_option("--x", f_x)->required();
    cmd_f->callback([&] { emit(json{{"x", f_x}, {"f", analytic::f_of(f_x)}}, out_path); });

    // ---- bounds ------------------------------------------------------------
    auto* cmd_bounds = app.add_subcommand("bounds", "closed-form tail bound expressions");
    struct {
        std::uint64_t n = 0;
        double d = 0.0;
        std::uint64_t k = 0;
        analytic::BoundParams params;
    } bnd_opt;
    add_report_out(cmd_bounds);
    cmd_bounds->add_option("--n", bnd_opt.n)->required();
    cmd_bounds->add_option("--d", bnd_opt.d)->required();
    cmd_bounds->add_option("--k", bnd_opt.k)->required();
    cmd_bounds->add_option("--eta", bnd_opt.params.eta);
    cmd_bounds->add_option("--alpha", bnd_opt.params.alpha);
    cmd_bounds->add_option("--c", bnd_opt.params.c);
    cmd_bounds->add_option("--c-prime", bnd_opt.params.c_prime);
    cmd_bounds->add_option("--eps", bnd_opt.params.epsilon);
    cmd_bounds->add_option("--delta", bnd_opt.params.delta);
    cmd_bounds->callback([&] {
        const auto& P = bnd_opt.params;
        json j{{"params",
                {{"n", bnd_opt.n},
                 {"d", bnd_opt.d},
                 {"k", bnd_opt.k},
                 {"eta", P.eta},
                 {"alpha", P.alpha},
                 {"c", P.c},
                 {"c_prime", P.c_prime},
                 {"eps", P.epsilon},
                 {"delta", P.delta}}}};
        j["regime"] = analytic::regime_name(
            analytic::regime_of(bnd_opt.n, static_cast<double>(std::max<std::uint64_t>(
                                               bnd_opt.k, 1)),
                                P.delta));
        j["phase_boundary_k"] = analytic::phase_boundary_k(bnd_opt.n);
        if (bnd_opt.k >= 2) {
            auto t1 = analytic::tail_exponent_expressions(
                bnd_opt.n, static_cast<double>(bnd_opt.k), P);
            j["disjoint_log_lower"] = t1.disjoint_lower_log;
            j["disjoint_log_upper"] = t1.disjoint_upper_log;
            j["clique_log_lower"] = t1.clique_lower_log;
            j["clique_log_upper"] = t1.clique_upper_log;
        }
        j["partition_sum_log"] =
            analytic::partition_sum_upper_bound_log(bnd_opt.n, bnd_opt.d, bnd_opt.k, P);
        if (3 * bnd_opt.k <= bnd_opt.n) {
            auto pe = analytic::expected_isolated_packings(bnd_opt.n, bnd_opt.d, bnd_opt.k);
            j["first_moment_log_exact"] = pe.log_exact;
            j["first_moment_log_bound"] = pe.log_bound;
        }
        if (bnd_opt.k >= 1) {
            // e^{-k ln k + c' k}, the closed-form cap on the first-moment bound
            double kd = static_cast<double>(bnd_opt.k);
            j["first_moment_remark_log"] = -kd * std::log(kd) + P.c_prime * kd;
        }
        try {
            auto cl = analytic::clique_lower_bound(bnd_opt.n, bnd_opt.d, bnd_opt.k);
            j["clique_plant_size"] = cl.clique_size;
            j["clique_plant_log_probability"] = cl.log_probability;
        } catch (const PreconditionError&) {
            // clique larger than n: field omitted
        }
        if (bnd_opt.k >= 1)
            j["tisg_rarity_bound"] =
                analytic::tisg_rarity_bound(bnd_opt.n, bnd_opt.k, P.eta);
        emit(j, out_path);
    });

    // ---- phase -------------------------------------------------------------
    auto* cmd_phase = app.add_subcommand("phase", "critical k by n (CSV grid)");
    struct {
        std::uint64_t n_min = 0;
        std::uint64_t n_max = 0;
        std::uint64_t steps = 10;
        double delta = 0.1;
        std::string format = "csv";
    } ph_opt;
    add_report_out(cmd_phase);
    cmd_phase->add_option("--n-min", ph_opt.n_min)->required();
    cmd_phase->add_option("--n-max", ph_opt.n_max)->required();
    cmd_phase->add_option("--steps", ph_opt.steps);
    cmd_phase->add_option("--delta", ph_opt.delta);
    cmd_phase->add_option("--format", ph_opt.format)->check(CLI::IsMember({"csv", "json"}));
    cmd_phase->callback([&] {
        if (ph_opt.n_min < 3 || ph_opt.n_max < ph_opt.n_min || ph_opt.steps < 1)
            throw InputError("phase grid requires 3 <= n-min <= n-max and steps >= 1");
        std::vector<std::uint64_t> grid;
        double lo = std::log(static_cast<double>(ph_opt.n_min));
        double hi = std::log(static_cast<double>(ph_opt.n_max));
        for (std::uint64_t s = 0; s < ph_opt.steps; ++s) {
            double t = ph_opt.steps == 1 ? 0.0
                                         : static_cast<double>(s) /
                                               static_cast<double>(ph_opt.steps - 1);
            grid.push_back(static_cast<std::uint64_t>(std::llround(std::exp(lo + (hi - lo) * t))));
        }
        grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
        auto boundary = [](std::uint64_t n, double coeff) {
            double target = coeff * std::log(static_cast<double>(n));
            double klo = 1.0, khi = 2.0;
            auto lhs = [](double k) { return std::cbrt(k) * std::log(k); };
            while (lhs(khi) < target) khi *= 2.0;
            for (int i = 0; i < 200 && khi - klo > 1e-10 * khi; ++i) {
                double mid = 0.5 * (klo + khi);
                (lhs(mid) < target ? klo : khi) = mid;
            }
            return 0.5 * (klo + khi);
        };
        double a = analytic::critical_coefficient();
        if (ph_opt.format == "csv") {
            std::ostringstream csv;
            csv << "n,k_star,k_subcritical_below,k_supercritical_above\n";
            for (auto n : grid)
                csv << n << ',' << analytic::phase_boundary_k(n) << ','
                    << boundary(n, a - ph_opt.delta) << ',' << boundary(n, a + ph_opt.delta)
                    << '\n';
            std::string text = csv.str();
            text.pop_back();
            emit(text, out_path);
        } else {
            json rows = json::array();
            for (auto n : grid)
                rows.push_back({{"n", n},
                                {"k_star", analytic::phase_boundary_k(n)},
                                {"k_subcritical_below", boundary(n, a - ph_opt.delta)},
                                {"k_supercritical_above", boundary(n, a + ph_opt.delta)}});
            emit(json{{"params",
                       {{"n_min", ph_opt.n_min},
                        {"n_max", ph_opt.n_max},
                        {"steps", ph_opt.steps},
                        {"delta", ph_opt.delta}}},
                      {"rows", std::move(rows)}},
                 out_path);
        }
    });

    // ---- verify ------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "run the full invariant battery");
    VerifyConfig vcfg;
    std::uint64_t verify_max_n = 6;
    std::uint64_t verify_n = 500;
    add_report_out(cmd_verify);
    cmd_verify->add_option("--exhaustive-max-n", verify_max_n, "enumerate all graphs up to n");
    cmd_verify->add_option("--samples", vcfg.random_samples, "random graphs to check");
    cmd_verify->add_option("--n", verify_n, "random graph size");
    cmd_verify->add_option("--d", vcfg.random_d, "random graph degree parameter");
    cmd_verify->add_option("--seed", vcfg.seed);
    cmd_verify->add_flag("--self-test-break", vcfg.self_test_break,
                         "inject a fault the suite must report");
    cmd_verify->add_flag("--skip-analytic", [&vcfg](std::int64_t) { vcfg.analytic_checks = false; },
                         "graph battery only");
    cmd_verify->callback([&] {
        vcfg.exhaustive_max_n = static_cast<Vertex>(verify_max_n);
        vcfg.random_n = static_cast<Vertex>(verify_n);
        VerifyReport rep = verify_suite(vcfg);
        json violations = json::array();
        for (const auto& v : rep.violations)
            violations.push_back(
                {{"check", v.check}, {"detail", v.detail}, {"edge_list", v.edge_list}});
        emit(json{{"params",
                   {{"exhaustive_max_n", vcfg.exhaustive_max_n},
                    {"samples", vcfg.random_samples},
                    {"n", vcfg.random_n},
                    {"d", vcfg.random_d},
                    {"seed", vcfg.seed},
                    {"self_test_break", vcfg.self_test_break}}},
                  {"graphs_checked", rep.graphs_checked},
                  {"components_checked", rep.components_checked},
                  {"analytic_points_checked", rep.analytic_points_checked},
                  {"violations", std::move(violations)},
                  {"ok", rep.ok()}},
             out_path);
        if (!rep.ok()) exit_code = 3;  // invariant violation
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;  // bad flags are exit 1, --help is exit 0
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const FeasibilityError& e) {
        std::cout << json{{"error", {{"type", "feasibility"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 2;
    } catch (const IntegrityError& e) {
        std::cout << json{{"error", {{"type", "integrity"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 3;
    } catch (const NumericError& e) {
        std::cout << json{{"error", {{"type", "numeric"}, {"message", e.what()}}}}.dump() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cout << json{{"error", {{"type", "input"}, {"message", e.what()}}}}.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump()
                  << '\n';
        return 3;
    }
}
