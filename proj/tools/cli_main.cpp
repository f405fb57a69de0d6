// pickspace command line: every check as a reproducible, scriptable command
// with machine-readable output (JSON lines; CSV for sweep tables).
//
// Exit codes: 0 ok, 1 a contract was refuted, 2 invalid input.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "pickspace/json_io.hpp"
#include "pickspace/multops.hpp"
#include "pickspace/oracle.hpp"
#include "pickspace/parse.hpp"
#include "pickspace/rng.hpp"
#include "pickspace/weakprod.hpp"

using namespace pickspace;

namespace {

struct Output {
    std::string format = "jsonl";
    std::string path;
    bool no_header = false;
    std::vector<std::string> lines;

    void header(const std::string& command, Json config) {
        if (no_header) return;
        const auto now = std::chrono::system_clock::now();
        const std::time_t t = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
        Json h;
        h["command"] = command;
        h["config"] = std::move(config);
        h["timestamp"] = buf;
        lines.push_back(h.dump());
    }

    void record(const Json& j) { lines.push_back(j.dump()); }
    void csv(const std::string& line) { lines.push_back(line); }

    void flush() const {
        if (path.empty()) {
            for (const auto& l : lines) std::cout << l << '\n';
        } else {
            std::ofstream os(path);
            if (!os) throw std::runtime_error("cannot open output file " + path);
            for (const auto& l : lines) os << l << '\n';
        }
    }
};


std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Polynomial random_poly(int dim, int deg, Rng& rng) {
    Polynomial p(dim);
    for (const auto& a : multi_indices_up_to(dim, deg)) p.add_term(a, rng.coeff());
    return p;
}

RadialWeight parse_weight_arg(const std::string& arg) {
    if (arg == "one") return RadialWeight::one();
    if (arg.rfind("standard:", 0) == 0)
        return RadialWeight::standard(std::stod(arg.substr(9)));
    throw std::invalid_argument("unknown weight '" + arg + "' (expected one or standard:<a>)");
}

PointSet load_or_sample_points(const std::string& points_file, int dim, int count,
                               std::uint64_t seed) {
    if (!points_file.empty()) {
        std::ifstream is(points_file);
        if (!is) throw std::invalid_argument("cannot read points file " + points_file);
        Json j;
        is >> j;
        return pointset_from_json(j);
    }
    return PointSet::random(dim, count, seed);
}

int run(int argc, char** argv) {
    CLI::App app{"numerical checks for complete Pick kernels, weighted Besov spaces, "
                 "multiplier operators, weak products and Hankel forms on the unit ball"};
    app.require_subcommand(1);

    Output out;
    bool strict = false;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    app.add_option("--format", out.format, "output format: jsonl or csv (sweeps only)")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    app.add_option("--out", out.path, "write output to a file instead of stdout");
    app.add_flag("--no-header", out.no_header, "suppress the timestamp header line");
    app.add_flag("--strict", strict, "turn evidence-grade violations into failures");
    app.add_option("--seed", seed, "random seed, echoed in the header");
    app.add_option("--tol", tol, "tolerance for psd verdicts and contract checks")
        ->check(CLI::PositiveNumber);

    int exit_code = 0;

    // ------------------------------------------------------------------ norm
    auto* cmd_norm = app.add_subcommand("norm", "space norm of a polynomial");
    std::string norm_space = "da:2", norm_poly;
    cmd_norm->add_option("--space", norm_space, "space spec (JSON or shorthand)");
    cmd_norm->add_option("--poly", norm_poly, "polynomial (expression or JSON)")->required();
    cmd_norm->callback([&] {
        const SpaceSpec sp = parse_space_arg(norm_space);
        const Polynomial p = parse_poly_arg(norm_poly, sp.dim);
        Json cfg;
        cfg["space"] = space_to_json(sp);
        cfg["seed"] = seed;
        out.header("norm", cfg);
        Json rec;
        rec["space"] = space_to_json(sp);
        rec["poly"] = poly_to_json(p);
        rec["norm"] = space_norm(sp, p);
        out.record(rec);
    });

    // ------------------------------------------------------------ pick-check
    auto* cmd_pick = app.add_subcommand("pick-check",
                                        "complete-Pick positivity certificate for a kernel");
    std::string pick_kernel = "da:2", pick_points, pick_z0;
    int pick_count = 30, pick_budget = 0;
    cmd_pick->add_option("--kernel", pick_kernel, "kernel spec (JSON or shorthand)");
    cmd_pick->add_option("--points", pick_points, "JSON point-set file (overrides sampling)");
    cmd_pick->add_option("--count", pick_count, "number of sampled points");
    cmd_pick->add_option("--z0", pick_z0, "normalization point as JSON [[re,im],...]");
    cmd_pick->add_option("--budget", pick_budget,
                         "refutation search budget in points (0 = single certificate)");
    cmd_pick->callback([&] {
        const KernelSpec k = parse_kernel_arg(pick_kernel);
        Point z0(static_cast<std::size_t>(k.dim()), Complex(0.0));
        if (!pick_z0.empty()) {
            const Json j = Json::parse(pick_z0);
            z0.clear();
            for (const auto& c : j) z0.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
        }
        Json cfg;
        cfg["kernel"] = k.name();
        cfg["seed"] = seed;
        out.header("pick-check", cfg);
        Json rec;
        rec["kernel"] = k.name();
        if (pick_budget > 0) {
            const auto res = pick_refutation_search(k, z0, pick_budget, seed, 1e-6);
            rec["budget"] = pick_budget;
            rec["points_used"] = res.points_used;
            rec["min_eig"] = res.min_eig;
            rec["verdict"] = res.refuted ? "REFUTED" : "psd-evidence";
            if (res.refuted) {
                rec["witness"] = pointset_to_json(*res.witness);
                exit_code = 1;
            }
        } else {
            const PointSet pts = load_or_sample_points(pick_points, k.dim(), pick_count, seed);
            if (pts.seed()) {
                rec["seed"] = *pts.seed();
                rec["count"] = pts.size();
            } else {
                rec["points"] = pointset_to_json(pts);
            }
            const double eig = min_eigenvalue(complete_pick_gram(k, pts, z0));
            rec["min_eig"] = eig;
            rec["verdict"] = eig >= -tol ? "psd-evidence" : "REFUTED";
            if (eig < -tol) exit_code = 1;
        }
        out.record(rec);
    });

    // -------------------------------------------------------- counterexample
    auto* cmd_ce = app.add_subcommand(
        "counterexample", "row-bounded column-unbounded multiplier family on H^2_d");
    int ce_d = 2, ce_nmax = 20, ce_degree = -1;
    cmd_ce->add_option("--d", ce_d, "ambient dimension, must be >= 2");
    cmd_ce->add_option("--nmax", ce_nmax, "largest homogeneity level");
    cmd_ce->add_option("--degree", ce_degree, "row truncation degree (default nmax + 1)");
    cmd_ce->callback([&] {
        if (ce_d < 2) throw CLI::ValidationError("counterexample", "requires d >= 2");
        const int D = ce_degree < 0 ? ce_nmax + 1 : ce_degree;
        Json cfg;
        cfg["d"] = ce_d;
        cfg["nmax"] = ce_nmax;
        cfg["degree"] = D;
        cfg["seed"] = seed;
        out.header("counterexample", cfg);
        const SpaceSpec h2 = SpaceSpec::drury_arveson(ce_d);
        if (out.format == "csv") out.csv("n,column_sq_lower,row_upper_truncated");
        double zeta_partial = 0.0;
        double row_final = 0.0;
        for (int n = 1; n <= ce_nmax; ++n) {
            zeta_partial += 1.0 / (static_cast<double>(n) * n);
            const auto tup = counterexample_tuple(ce_d, n);
            const double col_sq = counterexample_column_sq_lower(ce_d, n);
            const double row = row_norm(h2, h2, tup, D);
            row_final = row;
            if (out.format == "csv") {
                out.csv(std::to_string(n) + "," + fmt(col_sq) + "," + fmt(row));
            } else {
                Json rec;
                rec["n"] = n;
                rec["column_sq_lower"] = col_sq;
                rec["row_upper_truncated"] = row;
                out.record(rec);
            }
        }
        const double bound = 3.14159265358979323846 / std::sqrt(6.0);
        Json verdict;
        verdict["row_bound_pi_sqrt6"] = bound;
        verdict["row_sq_bound_partial"] = zeta_partial;
        const bool row_ok = row_final * row_final <= zeta_partial + 1e-8;
        verdict["verdict"] = row_ok ? "row bounded, column divergent" : "row bound VIOLATED";
        out.record(verdict);
        if (!row_ok) exit_code = 1;
    });

    // ----------------------------------------------------------------- rowcol
    auto* cmd_rowcol = app.add_subcommand(
        "rowcol", "row vs column norms for sampled multiplier tuples");
    std::string rc_space = "dirichlet", rc_dst;
    int rc_tuples = 20, rc_entries = 5, rc_entry_degree = 4, rc_degree = 12;
    double rc_bound = 0.0;
    cmd_rowcol->add_option("--space", rc_space, "source space spec");
    cmd_rowcol->add_option("--dst", rc_dst, "destination space spec (default: source)");
    cmd_rowcol->add_option("--tuples", rc_tuples, "number of sampled tuples");
    cmd_rowcol->add_option("--entries", rc_entries, "entries per tuple");
    cmd_rowcol->add_option("--entry-degree", rc_entry_degree, "degree of each entry");
    cmd_rowcol->add_option("--degree", rc_degree, "truncation degree");
    cmd_rowcol->add_option("--bound", rc_bound,
                           "fail (exit 1) when the empirical ratio exceeds this bound");
    cmd_rowcol->callback([&] {
        const SpaceSpec src = parse_space_arg(rc_space);
        const SpaceSpec dst = rc_dst.empty() ? src : parse_space_arg(rc_dst);
        Json cfg;
        cfg["space"] = space_to_json(src);
        cfg["dst"] = space_to_json(dst);
        cfg["tuples"] = rc_tuples;
        cfg["entries"] = rc_entries;
        cfg["entry_degree"] = rc_entry_degree;
        cfg["degree"] = rc_degree;
        cfg["seed"] = seed;
        out.header("rowcol", cfg);
        Rng rng(seed);
        double worst = 0.0;
        if (out.format == "csv") out.csv("tuple,column,row,ratio");
        for (int t = 0; t < rc_tuples; ++t) {
            std::vector<Polynomial> e;
            for (int i = 0; i < rc_entries; ++i)
                e.push_back(random_poly(src.dim, rc_entry_degree, rng));
            const MultiplierTuple tup(src.dim, e);
            const double col = column_norm(src, dst, tup, rc_degree);
            const double row = row_norm(src, dst, tup, rc_degree);
            const double ratio = col > 0 ? row / col : 0.0;
            worst = std::max(worst, ratio);
            if (out.format == "csv") {
                out.csv(std::to_string(t) + "," + fmt(col) + "," + fmt(row) + "," + fmt(ratio));
            } else {
                Json rec;
                rec["tuple"] = t;
                rec["column"] = col;
                rec["row"] = row;
                rec["ratio"] = ratio;
                rec["bound_kind"] = "lower";
                out.record(rec);
            }
        }
        Json summary;
        summary["space_src"] = space_to_json(src);
        summary["space_dst"] = space_to_json(dst);
        summary["D"] = rc_degree;
        summary["seed"] = seed;
        summary["empirical_c"] = worst;
        summary["bound_kind"] = "lower";
        if (rc_bound > 0.0) {
            summary["bound"] = rc_bound;
            summary["pass"] = worst <= rc_bound;
            if (worst > rc_bound) exit_code = 1;
        }
        out.record(summary);
    });

    // --------------------------------------------------------------- leibnitz
    auto* cmd_leib = app.add_subcommand(
        "leibnitz", "empirical constant of the derivative product estimate");
    int lb_d = 1, lb_N = 1, lb_j = 1, lb_k = 0, lb_samples = 10, lb_sample_degree = 6;
    std::vector<std::string> lb_phi;
    std::string lb_wsrc = "one", lb_wdst = "one";
    cmd_leib->add_option("--d", lb_d, "ambient dimension");
    cmd_leib->add_option("--N", lb_N, "top level of the scale");
    cmd_leib->add_option("--j", lb_j, "derivative order on the multipliers");
    cmd_leib->add_option("--k", lb_k, "derivative order on the samples");
    cmd_leib->add_option("--phi", lb_phi, "tuple entries (repeatable)")->required();
    cmd_leib->add_option("--samples", lb_samples, "number of random samples");
    cmd_leib->add_option("--sample-degree", lb_sample_degree, "degree of the samples");
    cmd_leib->add_option("--weight", lb_wsrc, "source weight: one or standard:<a>");
    cmd_leib->add_option("--weight-dst", lb_wdst, "destination weight");
    cmd_leib->callback([&] {
        std::vector<Polynomial> entries;
        for (const auto& s : lb_phi) entries.push_back(parse_poly_arg(s, lb_d));
        const MultiplierTuple tup(lb_d, entries);
        Rng rng(seed);
        std::vector<Polynomial> samples;
        for (int i = 0; i < lb_samples; ++i)
            samples.push_back(random_poly(lb_d, lb_sample_degree, rng));
        Json cfg;
        cfg["d"] = lb_d;
        cfg["N"] = lb_N;
        cfg["j"] = lb_j;
        cfg["k"] = lb_k;
        cfg["samples"] = lb_samples;
        cfg["seed"] = seed;
        out.header("leibnitz", cfg);
        Json rec;
        rec["N"] = lb_N;
        rec["j"] = lb_j;
        rec["k"] = lb_k;
        rec["seed"] = seed;
        rec["worst_ratio"] = leibnitz_check(tup, lb_N, lb_j, lb_k, samples, lb_d,
                                            parse_weight_arg(lb_wsrc), parse_weight_arg(lb_wdst));
        rec["bound_kind"] = "lower";
        out.record(rec);
    });

    // ----------------------------------------------------------------- hankel
    auto* cmd_hankel = app.add_subcommand("hankel", "Hankel form of a polynomial symbol");
    std::string hk_space = "da:2", hk_b, hk_phi;
    int hk_degree = 4, hk_inner = -1;
    cmd_hankel->add_option("--space", hk_space, "space spec");
    cmd_hankel->add_option("--b", hk_b, "symbol polynomial")->required();
    cmd_hankel->add_option("--degree", hk_degree, "form truncation degree");
    cmd_hankel->add_option("--phi", hk_phi, "multiplier for the intertwining check");
    cmd_hankel->add_option("--inner", hk_inner,
                           "inner degree of the intertwining check (default degree - deg phi)");
    bool hk_sweep = false;
    cmd_hankel->add_flag("--sweep", hk_sweep, "emit norm_lower for every degree up to --degree");
    cmd_hankel->callback([&] {
        const SpaceSpec sp = parse_space_arg(hk_space);
        const Polynomial b = parse_poly_arg(hk_b, sp.dim);
        const auto h = hankel_build(sp, b, hk_degree);
        Json cfg;
        cfg["space"] = space_to_json(sp);
        cfg["degree"] = hk_degree;
        cfg["seed"] = seed;
        out.header("hankel", cfg);
        if (hk_sweep) {
            if (out.format == "csv") out.csv("D,norm_lower");
            for (int D = 0; D <= hk_degree; ++D) {
                const double v = hankel_norm_lower(hankel_build(sp, b, D));
                if (out.format == "csv") {
                    out.csv(std::to_string(D) + "," + fmt(v));
                } else {
                    Json row;
                    row["D"] = D;
                    row["value"] = v;
                    row["bound_kind"] = "lower";
                    out.record(row);
                }
            }
        }
        Json rec;
        rec["b"] = poly_to_json(b);
        rec["norm_lower"] = hankel_norm_lower(h);
        rec["bound_kind"] = "lower";
        if (!hk_phi.empty()) {
            const Polynomial phi = parse_poly_arg(hk_phi, sp.dim);
            const int inner = hk_inner >= 0 ? hk_inner
                                            : hk_degree - std::max(phi.degree(), 0);
            const double defect = hankel_intertwine_check(h, phi, inner);
            rec["intertwine_defect"] = defect;
            rec["intertwine_inner_degree"] = inner;
            if (defect > tol) exit_code = 1;
        }
        out.record(rec);
    });

    // ---------------------------------------------------------------- smirnov
    auto* cmd_smirnov = app.add_subcommand(
        "smirnov", "verify an h = phi/(1-psi)^2 witness and its multiplier bounds");
    std::string sm_space = "da:2", sm_h, sm_phi, sm_psi;
    int sm_degree = 15;
    std::vector<double> sm_rs = {0.5, 0.9, 0.99};
    cmd_smirnov->add_option("--space", sm_space, "space spec");
    cmd_smirnov->add_option("--hfun", sm_h, "the function h of the witness")->required();
    cmd_smirnov->add_option("--phi", sm_phi, "numerator multiplier")->required();
    cmd_smirnov->add_option("--psi", sm_psi, "denominator multiplier, psi(0) = 0")->required();
    cmd_smirnov->add_option("--degree", sm_degree, "verification truncation degree");
    cmd_smirnov->add_option("--r", sm_rs, "r-sequence for the fraction bounds");
    cmd_smirnov->callback([&] {
        const SpaceSpec sp = parse_space_arg(sm_space);
        const SmirnovWitness w(parse_poly_arg(sm_h, sp.dim), parse_poly_arg(sm_phi, sp.dim),
                               parse_poly_arg(sm_psi, sp.dim), sm_rs);
        Json cfg;
        cfg["space"] = space_to_json(sp);
        cfg["degree"] = sm_degree;
        cfg["seed"] = seed;
        out.header("smirnov", cfg);
        const auto rep = smirnov_verify(sp, w, sm_degree);
        Json rec;
        rec["residual"] = rep.residual;
        rec["psi_mult_lower"] = rep.psi_mult_lower;
        Json fbs = Json::array();
        bool bounds_ok = true;
        for (const auto& fb : rep.fraction_bounds) {
            Json f;
            f["r"] = fb.r;
            f["contraction_bound"] = fb.contraction_bound;
            f["cyclic_bound"] = fb.cyclic_bound;
            fbs.push_back(std::move(f));
            bounds_ok = bounds_ok && fb.contraction_bound <= 1.0 + 1e-9 &&
                        fb.cyclic_bound <= 2.0 + 1e-9;
        }
        rec["fraction_bounds"] = std::move(fbs);
        const bool verified = rep.residual <= tol;
        rec["verdict"] = verified ? (bounds_ok ? "verified" : "residual ok, bounds exceeded")
                                  : "REFUTED";
        out.record(rec);
        if (!verified || (strict && !bounds_ok)) exit_code = 1;
    });

    // ------------------------------------------------------------------ oracle
    auto* cmd_oracle = app.add_subcommand(
        "oracle", "independent quadrature and Monte-Carlo cross-validation battery");
    int or_samples = 100000;
    cmd_oracle->add_option("--samples", or_samples, "Monte-Carlo sample count (>= 1000)");
    cmd_oracle->callback([&] {
        Json cfg;
        cfg["samples"] = or_samples;
        cfg["seed"] = seed;
        out.header("oracle", cfg);
        bool all_ok = true;

        double worst_quad = 0.0;
        for (const auto& w : {RadialWeight::one(), RadialWeight::standard(1.0)})
            for (int d = 1; d <= 3; ++d)
                for (const auto& alpha : multi_indices_up_to(d, 4)) {
                    const double q = quad_monomial_norm(w, alpha);
                    const double c = bergman_monomial_norm_sq(d, w, alpha);
                    worst_quad = std::max(worst_quad, std::abs(q - c) / c);
                }
        Json quad;
        quad["check"] = "quad_monomial_norm_vs_closed_form";
        quad["worst_rel_dev"] = worst_quad;
        quad["bound"] = 5e-3;
        quad["pass"] = worst_quad <= 5e-3;
        all_ok = all_ok && worst_quad <= 5e-3;
        out.record(quad);

        const SpaceSpec h2 = SpaceSpec::drury_arveson(2);
        Rng rng(seed);
        double worst_mat = 0.0;
        for (int t = 0; t < 5; ++t) {
            const Polynomial phi = random_poly(2, 3, rng);
            worst_mat = std::max(worst_mat,
                                 (mult_matrix_raw(h2, h2, phi, 6) - mult_matrix(h2, h2, phi, 6))
                                     .cwiseAbs()
                                     .maxCoeff());
        }
        Json mat;
        mat["check"] = "mult_matrix_vs_raw";
        mat["worst_entry_dev"] = worst_mat;
        mat["bound"] = 1e-11;
        mat["pass"] = worst_mat <= 1e-11;
        all_ok = all_ok && worst_mat <= 1e-11;
        out.record(mat);

        QuadratureConfig qc;
        qc.n_samples = or_samples;
        qc.seed = seed;
        const Polynomial z1 = Polynomial::coordinate(2, 0);
        const Polynomial z2 = Polynomial::coordinate(2, 1);
        const struct {
            const char* name;
            Polynomial p, q;
            RadialWeight w;
        } cases[] = {{"mc_z1_z2_orthogonal", z1, z2, RadialWeight::one()},
                 {"mc_z1_z1z2_orthogonal", z1, poly_mul(z1, z2), RadialWeight::one()},
                 {"mc_z1_z1z1_standard", z1, poly_mul(z1, z1), RadialWeight::standard(1.0)}};
        for (const auto& c : cases) {
            const auto e = mc_inner_product(c.w, c.p, c.q, qc);
            Json rec;
            rec["check"] = c.name;
            rec["estimate_re"] = e.estimate.real();
            rec["estimate_im"] = e.estimate.imag();
            rec["stderr"] = e.stderr_;
            rec["reference"] = 0.0;
            const double z = e.z_score(0.0);
            rec["z_score"] = z;
            rec["pass"] = z <= 3.0;
            all_ok = all_ok && z <= 3.0;
            out.record(rec);
        }
        if (strict && !all_ok) exit_code = 1;
    });

    // allow the global flags (--seed, --format, ...) after the subcommand name
    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    out.flush();
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
