#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pickspace/json_io.hpp"
#include "pickspace/multops.hpp"
#include "pickspace/oracle.hpp"
#include "pickspace/parse.hpp"
#include "pickspace/weakprod.hpp"

namespace py = pybind11;
using namespace pickspace;

namespace {

Polynomial poly_from_terms(int dim, const std::vector<std::pair<std::vector<int>, Complex>>& terms) {
    Polynomial p(dim);
    for (const auto& [e, c] : terms) p.add_term(MultiIndex(e), c);
    return p;
}

std::vector<std::pair<std::vector<int>, Complex>> poly_terms(const Polynomial& p) {
    std::vector<std::pair<std::vector<int>, Complex>> out;
    for (const auto& [a, c] : p.terms()) out.emplace_back(a.exponents(), c);
    return out;
}

MultiplierTuple make_tuple(const std::vector<Polynomial>& entries) {
    if (entries.empty()) throw std::invalid_argument("multiplier tuple must not be empty");
    return MultiplierTuple(entries.front().dim(), entries);
}

}  // namespace

PYBIND11_MODULE(pickspace, m) {
    m.doc() = "complete Pick kernels, weighted Besov spaces, multiplier operators, "
              "weak products and Hankel forms on the unit ball, at finite truncation";

    py::register_exception<ParseError>(m, "PolyParseError", PyExc_ValueError);

    py::class_<Polynomial>(m, "Polynomial")
        .def(py::init(&poly_from_terms), py::arg("dim"), py::arg("terms"))
        .def_static("parse", &parse_polynomial, py::arg("text"), py::arg("dim"))
        .def_property_readonly("dim", &Polynomial::dim)
        .def_property_readonly("degree", &Polynomial::degree)
        .def("terms", &poly_terms)
        .def("coeff", [](const Polynomial& p, const std::vector<int>& e) {
            return p.coeff(MultiIndex(e));
        })
        .def("__add__", [](const Polynomial& p, const Polynomial& q) { return p + q; })
        .def("__sub__", [](const Polynomial& p, const Polynomial& q) { return p - q; })
        .def("__mul__", [](const Polynomial& p, const Polynomial& q) { return p * q; })
        .def("__mul__", [](const Polynomial& p, Complex c) { return p * c; })
        .def("__rmul__", [](const Polynomial& p, Complex c) { return p * c; })
        .def("__neg__", [](const Polynomial& p) { return -p; })
        .def("__eq__", [](const Polynomial& p, const Polynomial& q) { return p == q; })
        .def("__call__",
             [](const Polynomial& p, const std::vector<Complex>& z) { return evaluate(p, z); })
        .def("__repr__", &Polynomial::to_string);

    m.def("one", &Polynomial::one, py::arg("dim"));
    m.def("coordinate", &Polynomial::coordinate, py::arg("dim"), py::arg("i"));
    m.def("homogeneous_part", &pickspace::homogeneous_part);
    m.def("radial_derivative", &pickspace::radial_derivative);
    m.def("truncate", &pickspace::truncate);
    m.def("invert_one_minus", &invert_one_minus, py::arg("psi"), py::arg("r"), py::arg("degree"));

    py::class_<RadialWeight>(m, "RadialWeight")
        .def_static("one", &RadialWeight::one)
        .def_static("standard", &RadialWeight::standard, py::arg("a"))
        .def_static("tabulated", &RadialWeight::tabulated, py::arg("moments"))
        .def("moment", &RadialWeight::moment)
        .def("__repr__", &RadialWeight::kind_name);

    py::class_<SpaceSpec>(m, "Space")
        .def_static("drury_arveson", &SpaceSpec::drury_arveson, py::arg("dim"))
        .def_static("besov_da", &SpaceSpec::besov_da, py::arg("dim"))
        .def_static("dirichlet", &SpaceSpec::dirichlet)
        .def_static("hardy", &SpaceSpec::hardy, py::arg("dim"))
        .def_static("bergman", &SpaceSpec::bergman, py::arg("dim"))
        .def_static("besov", &SpaceSpec::besov, py::arg("dim"), py::arg("s"), py::arg("weight"))
        .def_readonly("dim", &SpaceSpec::dim)
        .def_readonly("s", &SpaceSpec::s)
        .def("__repr__", [](const SpaceSpec& s) { return space_to_json(s).dump(); });

    m.def("monomial_norm_sq", [](const SpaceSpec& s, const std::vector<int>& e) {
        return monomial_norm_sq(s, MultiIndex(e));
    });
    m.def("monomial_norm_da", [](const std::vector<int>& e) {
        const auto r = monomial_norm_da(MultiIndex(e));
        return std::make_pair(r.num(), r.den());
    });
    m.def("space_norm", &space_norm);
    m.def("space_inner", &space_inner);
    m.def("besov_shift_ratio", &besov_shift_ratio, py::arg("s"), py::arg("a"), py::arg("dim"),
          py::arg("max_degree"));
    m.def("beta_moment", &beta_moment);

    py::class_<KernelSpec>(m, "Kernel")
        .def_static("drury_arveson", &KernelSpec::drury_arveson, py::arg("dim"))
        .def_static("szego", &KernelSpec::szego)
        .def_static("dirichlet", &KernelSpec::dirichlet)
        .def_static("power", &KernelSpec::power, py::arg("dim"), py::arg("beta"))
        .def_static("from_space", &KernelSpec::from_space, py::arg("space"), py::arg("degree"))
        .def_property_readonly("dim", &KernelSpec::dim)
        .def("__call__",
             [](const KernelSpec& k, const std::vector<Complex>& z, const std::vector<Complex>& w) {
                 return k.eval(z, w);
             })
        .def("__repr__", &KernelSpec::name);

    py::class_<PointSet>(m, "PointSet")
        .def(py::init([](int dim, const std::vector<std::vector<Complex>>& pts) {
                 return PointSet(dim, pts);
             }),
             py::arg("dim"), py::arg("points"))
        .def_static("random", &PointSet::random, py::arg("dim"), py::arg("count"),
                    py::arg("seed"), py::arg("radius") = 0.95)
        .def_property_readonly("dim", &PointSet::dim)
        .def("__len__", &PointSet::size)
        .def("points", &PointSet::points);

    m.def("gram", [](const KernelSpec& k, const PointSet& pts) { return gram(k, pts).mat(); });
    m.def("min_eigenvalue",
          [](const MatrixXcd& mat) { return min_eigenvalue(HermitianMatrix(mat)); });
    m.def("complete_pick_gram",
          [](const KernelSpec& k, const PointSet& pts, const std::vector<Complex>& z0) {
              return complete_pick_gram(k, pts, z0).mat();
          });
    m.def("schur_product", [](const MatrixXcd& a, const MatrixXcd& b) {
        return schur_product(HermitianMatrix(a), HermitianMatrix(b)).mat();
    });
    m.def("contractive_mult_gram",
          [](const KernelSpec& src, const KernelSpec& dst, const Polynomial& phi,
             const PointSet& pts) { return contractive_mult_gram(src, dst, phi, pts).mat(); });
    m.def("inclusion_descent_check",
          [](const Polynomial& phi, int d, double s, double t, const PointSet& pts) {
              const auto r = inclusion_descent_check(phi, d, s, t, pts);
              return std::make_pair(r.level_eig, r.descended_eig);
          });
    m.def("pick_refutation_search",
          [](const KernelSpec& k, const std::vector<Complex>& z0, int budget,
             std::uint64_t seed) {
              const auto r = pick_refutation_search(k, z0, budget, seed);
              py::dict d;
              d["refuted"] = r.refuted;
              d["min_eig"] = r.min_eig;
              d["points_used"] = r.points_used;
              if (r.witness) d["witness"] = r.witness->points();
              return d;
          },
          py::arg("kernel"), py::arg("z0"), py::arg("budget"), py::arg("seed"));

    m.def("mult_matrix", &mult_matrix, py::arg("src"), py::arg("dst"), py::arg("phi"),
          py::arg("degree"));
    m.def("mult_matrix_raw", &mult_matrix_raw, py::arg("src"), py::arg("dst"), py::arg("phi"),
          py::arg("degree"));
    m.def("op_norm", [](const MatrixXcd& m) { return op_norm(m); });
    m.def("column_norm",
          [](const SpaceSpec& src, const SpaceSpec& dst, const std::vector<Polynomial>& phis,
             int D) { return column_norm(src, dst, make_tuple(phis), D); });
    m.def("row_norm",
          [](const SpaceSpec& src, const SpaceSpec& dst, const std::vector<Polynomial>& phis,
             int D) { return row_norm(src, dst, make_tuple(phis), D); });
    m.def("pointwise_l2_sup", [](const std::vector<Polynomial>& phis, const PointSet& grid) {
        return pointwise_l2_sup(make_tuple(phis), grid);
    });
    m.def("kernel_ratio_bound",
          [](const KernelSpec& src, const KernelSpec& dst, const std::vector<Polynomial>& phis,
             const PointSet& grid) {
              return kernel_ratio_bound(src, dst, make_tuple(phis), grid);
          });
    m.def("counterexample_tuple", [](int d, int n_max) {
        return counterexample_tuple(d, n_max).entries();
    });
    m.def("counterexample_column_sq_lower", &counterexample_column_sq_lower);
    m.def("counterexample_report", [](int d, int n_max, int D) {
        const auto r = counterexample_report(d, n_max, D);
        return std::make_pair(r.column_sq_lower, r.row_upper_truncated);
    });
    m.def("d_contraction_slack", &d_contraction_slack);
    m.def("leibnitz_check",
          [](const std::vector<Polynomial>& phis, int N, int j, int k,
             const std::vector<Polynomial>& samples, int dim, const RadialWeight& wsrc,
             const RadialWeight& wdst) {
              return leibnitz_check(make_tuple(phis), N, j, k, samples, dim, wsrc, wdst);
          });

    m.def("wp_norm_upper",
          [](const SpaceSpec& s, const std::vector<std::pair<Polynomial, Polynomial>>& pairs) {
              return wp_norm_upper(s, Factorization{pairs});
          });
    m.def("rescale_to_equal_norm", &rescale_to_equal_norm);
    m.def("square_split", [](const Polynomial& f, const Polynomial& g, const SpaceSpec& s) {
        const auto sp = square_split(f, g, s);
        return std::make_pair(sp.a, sp.b);
    });
    m.def("smirnov_verify",
          [](const SpaceSpec& s, const Polynomial& h, const Polynomial& phi,
             const Polynomial& psi, int D, const std::vector<double>& rs) {
              const auto rep = smirnov_verify(s, SmirnovWitness(h, phi, psi, rs), D);
              py::dict d;
              d["residual"] = rep.residual;
              d["psi_mult_lower"] = rep.psi_mult_lower;
              py::list fbs;
              for (const auto& fb : rep.fraction_bounds) {
                  py::dict f;
                  f["r"] = fb.r;
                  f["contraction_bound"] = fb.contraction_bound;
                  f["cyclic_bound"] = fb.cyclic_bound;
                  fbs.append(f);
              }
              d["fraction_bounds"] = fbs;
              return d;
          },
          py::arg("space"), py::arg("h"), py::arg("phi"), py::arg("psi"), py::arg("degree"),
          py::arg("rs") = std::vector<double>{0.5, 0.9, 0.99});
    m.def("hankel_matrix", [](const SpaceSpec& s, const Polynomial& b, int D) {
        return hankel_build(s, b, D).mat();
    });
    m.def("hankel_norm_lower", [](const SpaceSpec& s, const Polynomial& b, int D) {
        return hankel_norm_lower(hankel_build(s, b, D));
    });
    m.def("hankel_intertwine_check",
          [](const SpaceSpec& s, const Polynomial& b, int D, const Polynomial& phi,
             int D_inner) { return hankel_intertwine_check(hankel_build(s, b, D), phi, D_inner); });
    m.def("duality_check",
          [](const SpaceSpec& s, const std::vector<std::pair<Polynomial, Polynomial>>& pairs,
             const Polynomial& b, int D) { return duality_check(s, Factorization{pairs}, b, D); });

    m.def("quad_monomial_norm",
          [](const RadialWeight& w, const std::vector<int>& e, int nodes) {
              return quad_monomial_norm(w, MultiIndex(e), nodes);
          },
          py::arg("weight"), py::arg("exponents"), py::arg("nodes") = 200);
    m.def("mc_inner_product",
          [](const RadialWeight& w, const Polynomial& p, const Polynomial& q, int n_samples,
             std::uint64_t seed) {
              QuadratureConfig cfg;
              cfg.n_samples = n_samples;
              cfg.seed = seed;
              const auto e = mc_inner_product(w, p, q, cfg);
              return std::make_pair(e.estimate, e.stderr_);
          },
          py::arg("weight"), py::arg("p"), py::arg("q"), py::arg("n_samples") = 100000,
          py::arg("seed") = 1);
}
