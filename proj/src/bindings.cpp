#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtmom/asympt.hpp"
#include "qtmom/moments.hpp"
#include "qtmom/oracles.hpp"
#include "qtmom/series.hpp"
#include "qtmom/special.hpp"
#include "qtmom/verify.hpp"

namespace py = pybind11;
using namespace qtmom;

namespace {

// exact rationals cross into python as fractions.Fraction
py::object to_fraction(const Rational& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(r.to_string());
}

Rational from_py(py::handle h) {
    // accepts int, Fraction, or "p/q" strings
    return Rational::from_string(py::str(h).cast<std::string>());
}

py::list series_to_list(const SeriesQ& s) {
    py::list out;
    for (std::size_t i = 0; i < s.order(); ++i) out.append(to_fraction(s[i]));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact chaotic-cavity transport moments, asymptotics and oracles";

    py::register_exception<Error>(m, "QtmomError");

    m.def("binom_ext", [](long n, long k) { return to_fraction(binom_ext(n, k)); });
    m.def("pochhammer",
          [](py::object x, long mm) { return to_fraction(pochhammer(from_py(x), mm)); });
    m.def("narayana", [](long k, long j) { return to_fraction(narayana(k, j)); });
    m.def("narayana_poly",
          [](long k, py::object u) { return to_fraction(narayana_poly(k, from_py(u))); });
    m.def("jacobi_poly", [](long n, long al, long be, py::object x) {
        return to_fraction(jacobi_poly(n, al, be, from_py(x)));
    });
    m.def("hyp2f1_terminating", [](py::object a, py::object b, py::object c, py::object z) {
        return to_fraction(hyp2f1_terminating(from_py(a), from_py(b), from_py(c), from_py(z)));
    });
    m.def("gen_bernoulli", [](long i, py::object g, py::object a) {
        return to_fraction(gen_bernoulli(i, from_py(g), from_py(a)));
    });
    m.def("gamma_ratio_coeffs", [](py::object a, py::object b, long order) {
        py::list out;
        for (const auto& c : gamma_ratio_coeffs(from_py(a), from_py(b), order))
            out.append(to_fraction(c));
        return out;
    });

    m.def(
        "moment_jacobi",
        [](int beta, long k, long n, py::object a, py::object b) {
            MomentResult r = moment_jacobi(beta, k, n, from_py(a), from_py(b));
            py::dict d;
            d["value"] = to_fraction(r.value);
            d["formula"] = r.formula;
            d["omitted_phi"] = r.omitted_phi();
            return d;
        },
        py::arg("beta"), py::arg("k"), py::arg("n"), py::arg("a"), py::arg("b"));
    m.def(
        "moment_laguerre_neg",
        [](int beta, long k, long n, py::object b) {
            MomentResult r = moment_laguerre_neg(beta, k, n, from_py(b));
            py::dict d;
            d["value"] = to_fraction(r.value);
            d["formula"] = r.formula;
            d["omitted_phi"] = r.omitted_phi();
            return d;
        },
        py::arg("beta"), py::arg("k"), py::arg("n"), py::arg("b"));
    m.def(
        "moment_selberg_like",
        [](int beta, long k, long n, py::object u, py::object v) {
            MomentResult r = moment_selberg_like(beta, k, n, from_py(u), from_py(v));
            py::dict d;
            d["value"] = to_fraction(r.value);
            d["formula"] = r.formula;
            return d;
        },
        py::arg("beta"), py::arg("k"), py::arg("n"), py::arg("u"), py::arg("v"));

    m.def("selberg_constant", [](int beta, py::object a, py::object b, long n, int digits) {
        return selberg_constant(beta, from_py(a), from_py(b), n).to_string(digits);
    }, py::arg("beta"), py::arg("a"), py::arg("b"), py::arg("n"), py::arg("digits") = 30);

    m.def(
        "delay_coeff",
        [](int beta, long k, int p, py::object w) {
            return to_fraction(delay_coeff(beta, k, p, from_py(w)));
        },
        py::arg("beta"), py::arg("k"), py::arg("p"), py::arg("w"));
    m.def(
        "trans_coeff",
        [](int beta, py::object delta, long k, int p, py::object u) {
            CoeffResult r = trans_coeff(beta, from_py(delta), k, p, from_py(u));
            py::dict d;
            d["value"] = to_fraction(r.value);
            d["conjecture"] = r.conjecture;
            return d;
        },
        py::arg("beta"), py::arg("delta"), py::arg("k"), py::arg("p"), py::arg("u"));
    m.def(
        "trans_diff_coeff",
        [](int beta, py::object delta, long k, int p, py::object u) {
            CoeffResult r = trans_diff_coeff(beta, from_py(delta), k, p, from_py(u));
            py::dict d;
            d["value"] = to_fraction(r.value);
            d["conjecture"] = r.conjecture;
            return d;
        },
        py::arg("beta"), py::arg("delta"), py::arg("k"), py::arg("p"), py::arg("u"));
    m.def(
        "selberg_like_coeff",
        [](int beta, long k, int p, py::object u, py::object v) {
            return to_fraction(selberg_like_coeff(beta, k, p, from_py(u), from_py(v)));
        },
        py::arg("beta"), py::arg("k"), py::arg("p"), py::arg("u"), py::arg("v"));
    m.def("laguerre_pos_leading", [](long k, py::object w) {
        return to_fraction(laguerre_pos_leading(k, from_py(w)));
    });

    m.def(
        "genfun",
        [](const std::string& family, py::object param, long order, int beta,
           py::object delta, py::object v) {
            static const std::map<std::string, GenFunFamily> names = {
                {"narayana-rho", GenFunFamily::NarayanaRho},
                {"d0", GenFunFamily::D0},
                {"t0", GenFunFamily::T0},
                {"d1", GenFunFamily::D1},
                {"t1", GenFunFamily::T1},
                {"d2-beta2", GenFunFamily::D2Beta2},
                {"t2-beta2-delta", GenFunFamily::T2Beta2Delta},
                {"delta-t2-beta2-delta", GenFunFamily::DeltaT2Beta2Delta},
                {"d2-beta1", GenFunFamily::D2Beta1},
                {"t2-beta1-delta0", GenFunFamily::T2Beta1Delta0},
                {"delta-t2-beta1-delta0", GenFunFamily::DeltaT2Beta1Delta0},
                {"t2-beta1-conjectured", GenFunFamily::T2Beta1DeltaConjectured},
                {"selberg-h", GenFunFamily::SelbergH},
            };
            auto it = names.find(family);
            if (it == names.end()) throw UnsupportedFamilyError("unknown family " + family);
            GenFunId id;
            id.family = it->second;
            id.u = from_py(param);
            id.v = from_py(v);
            id.delta = from_py(delta);
            id.beta = beta;
            auto r = genfun_eval(id, static_cast<std::size_t>(order));
            py::dict d;
            d["coefficients"] = series_to_list(r.series);
            d["conjecture"] = r.conjecture;
            return d;
        },
        py::arg("family"), py::arg("param"), py::arg("order") = 32, py::arg("beta") = 2,
        py::arg("delta") = py::int_(0), py::arg("v") = py::int_(1));

    m.def(
        "sample_ensemble",
        [](const std::string& kind, int beta, long n, py::object a, py::object b,
           std::uint64_t seed) {
            EigenSample s = sample_ensemble(
                kind == "laguerre" ? SamplerKind::Laguerre : SamplerKind::Jacobi, beta, n,
                from_py(a), from_py(b), seed);
            return s.values;
        },
        py::arg("kind"), py::arg("beta"), py::arg("n"), py::arg("a"), py::arg("b"),
        py::arg("seed"));
    m.def(
        "mc_moment",
        [](const std::string& kind, int beta, long k, long n, py::object a, py::object b,
           long samples, std::uint64_t seed) {
            MCEstimate e = mc_moment(
                kind == "laguerre" ? SamplerKind::Laguerre : SamplerKind::Jacobi, beta, k, n,
                from_py(a), from_py(b), samples, seed);
            py::dict d;
            d["mean"] = e.mean;
            d["stderr"] = e.stderr_;
            d["n_samples"] = e.n_samples;
            return d;
        },
        py::arg("kind"), py::arg("beta"), py::arg("k"), py::arg("n"), py::arg("a"),
        py::arg("b"), py::arg("samples"), py::arg("seed"));
    m.def(
        "quadrature_moment",
        [](const std::string& kind, int beta, long k, long n, py::object a, py::object b) {
            return quadrature_moment(
                kind == "laguerre" ? SamplerKind::Laguerre : SamplerKind::Jacobi, beta, k, n,
                from_py(a), from_py(b));
        },
        py::arg("kind"), py::arg("beta"), py::arg("k"), py::arg("n"), py::arg("a"),
        py::arg("b"));
    m.def(
        "limiting_moment",
        [](const std::string& kind, long k, py::object u_or_w, py::object v) {
            return limiting_moment(kind == "marchenko-pastur" ? LimitingKind::MarchenkoPastur
                                                              : LimitingKind::JacobiLimit,
                                   k, from_py(u_or_w), from_py(v));
        },
        py::arg("kind"), py::arg("k"), py::arg("u_or_w"), py::arg("v") = py::int_(1));

    m.def("verify_suite", [](const std::string& suite, long kmax) {
        py::list out;
        for (const auto& c : run_verify_suite(suite, kmax)) {
            py::dict d;
            d["identity"] = c.name;
            d["cases"] = c.cases;
            d["pass"] = c.pass;
            out.append(d);
        }
        return out;
    }, py::arg("suite"), py::arg("kmax") = 20);

    m.attr("__version__") = "0.1.0";
}
