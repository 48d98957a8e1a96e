#include <optional>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qpsi/catalog.hpp"
#include "qpsi/elliptic.hpp"
#include "qpsi/identities.hpp"
#include "qpsi/mu.hpp"
#include "qpsi/series.hpp"

namespace py = pybind11;
using namespace qpsi;

namespace {

QContext context(std::optional<Complex> q, std::optional<Complex> tau, double tol)
{
    if (q.has_value() == tau.has_value()) throw DomainError("give exactly one of q or tau");
    QContext ctx = q ? QContext::from_q(*q, tol) : QContext::from_tau(*tau, tol);
    return ctx;
}

#define NOME py::arg("q") = py::none(), py::arg("tau") = py::none(), py::arg("tol") = 1e-12

}  // namespace

PYBIND11_MODULE(_qpsi, m)
{
    m.doc() = "q-series, generalized mu and mock theta toolkit";

    auto base = py::register_exception<Error>(m, "QpsiError");
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<PoleError>(m, "PoleError", base.ptr());
    py::register_exception<NonConvergence>(m, "NonConvergence", base.ptr());
    py::register_exception<UnknownIdentity>(m, "UnknownIdentity", base.ptr());
    py::register_exception<UnknownEntry>(m, "UnknownEntry", base.ptr());

    m.def(
        "pochhammer",
        [](Complex a, std::optional<long> n, std::optional<Complex> q, std::optional<Complex> tau, double tol) {
            QContext ctx = context(q, tau, tol);
            return n ? pochhammer(ctx, a, *n) : pochhammer(ctx, a, kInf);
        },
        py::arg("a"), py::arg("n") = py::none(), NOME, "(a; q)_n, n = None for infinity");
    m.def(
        "theta", [](Complex y, std::optional<Complex> q, std::optional<Complex> tau, double tol) {
            return theta_div(context(q, tau, tol), y);
        },
        py::arg("y"), NOME, "theta(y) = (y, q/y)_inf");
    m.def(
        "theta_jtp", [](Complex x, std::optional<Complex> q, std::optional<Complex> tau, double tol) {
            return theta_jtp(context(q, tau, tol), x);
        },
        py::arg("x"), NOME);
    m.def(
        "vartheta11", [](Complex u, std::optional<Complex> q, std::optional<Complex> tau, double tol) {
            return vartheta11(context(q, tau, tol), u);
        },
        py::arg("u"), NOME);
    m.def(
        "phi",
        [](std::vector<Complex> up, std::vector<Complex> lo, Complex x, std::optional<Complex> q,
           std::optional<Complex> tau, double tol) { return phi(context(q, tau, tol), up, lo, x); },
        py::arg("upper"), py::arg("lower"), py::arg("x"), NOME);
    m.def(
        "psi",
        [](std::vector<Complex> up, std::vector<Complex> lo, Complex x, std::optional<Complex> q,
           std::optional<Complex> tau, double tol) { return psi(context(q, tau, tol), up, lo, x); },
        py::arg("upper"), py::arg("lower"), py::arg("x"), NOME);
    m.def(
        "mu",
        [](Complex u, Complex v, Complex alpha, std::optional<std::string> repr, std::optional<Complex> q,
           std::optional<Complex> tau, double tol) {
            MuPoint p{u, v, alpha, context(q, tau, tol)};
            return repr ? mu(p, representation_from_string(*repr)).value : mu(p).value;
        },
        py::arg("u"), py::arg("v"), py::arg("alpha") = Complex(1.0), py::arg("repr") = py::none(), NOME);
    m.def(
        "zwegers_mu", [](Complex u, Complex v, std::optional<Complex> q, std::optional<Complex> tau, double tol) {
            return zwegers_mu(context(q, tau, tol), u, v);
        },
        py::arg("u"), py::arg("v"), NOME);
    m.def(
        "w", [](Complex a, Complex b, Complex c, std::optional<Complex> q, std::optional<Complex> tau, double tol) {
            return w_func(context(q, tau, tol), a, b, c);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), NOME);
    m.def(
        "hermite", [](long k, Complex w, std::optional<Complex> q, std::optional<Complex> tau, double tol) {
            return cont_q_hermite(context(q, tau, tol), k, w);
        },
        py::arg("k"), py::arg("w"), NOME, "H_k(cos pi w | q)");
    m.def(
        "wp_diff", [](Complex u, Complex v, std::optional<Complex> q, std::optional<Complex> tau, double tol) {
            return elliptic::wp_diff_oracle(elliptic::make_context(context(q, tau, tol)), u, v);
        },
        py::arg("u"), py::arg("v"), NOME);
    m.def(
        "wp_diff_bailey", [](Complex u, Complex v, std::optional<Complex> q, std::optional<Complex> tau, double tol) {
            return elliptic::wp_diff_bailey(elliptic::make_context(context(q, tau, tol)), u, v);
        },
        py::arg("u"), py::arg("v"), NOME);
    m.def(
        "jacobi_combo", [](Complex u, std::optional<Complex> q, std::optional<Complex> tau, double tol) {
            return elliptic::jacobi_combo_oracle(elliptic::make_context(context(q, tau, tol)), u);
        },
        py::arg("u"), NOME);

    m.def("identity_ids", [] {
        std::vector<std::string> ids;
        for (const auto& d : identities::registry()) ids.push_back(d.id);
        return ids;
    });
    m.def("printed_ids", [] {
        std::vector<std::string> ids;
        for (const auto& d : identities::printed_registry()) ids.push_back(d.id);
        return ids;
    });
    // JSON text; the package turns it into dicts
    m.def(
        "suite_json",
        [](std::vector<std::string> ids, std::uint64_t seed, long draws, std::optional<Complex> q) {
            identities::VerifyOptions o;
            o.q = q;
            std::vector<identities::IdentityReport> r;
            {
                py::gil_scoped_release nogil;
                r = identities::run_suite(o, ids, seed, draws);
            }
            return identities::report_json(r);
        },
        py::arg("ids"), py::arg("seed") = 42, py::arg("draws") = 20, py::arg("q") = py::none());

    m.def("catalog_names", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog::list_entries()) names.push_back(e.name);
        return names;
    });
    // [(exponent, coefficient)] as exact rational strings
    m.def(
        "expand_pairs",
        [](const std::string& name, long order) {
            auto f = catalog::expand(name, fps::Rational(order));
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& [k, c] : f.units()) out.emplace_back(fps::exponent_of(k, f.denom()).get_str(), c.get_str());
            return out;
        },
        py::arg("name"), py::arg("order") = 40);
    m.def(
        "catalog_json",
        [](std::vector<std::string> names, long order) {
            std::vector<catalog::EntryReport> r;
            py::gil_scoped_release nogil;
            if (names.empty()) r = catalog::verify_all(fps::Rational(order));
            else
                for (const auto& n : names) r.push_back(catalog::verify_entry(n, fps::Rational(order)));
            return catalog::report_json(r);
        },
        py::arg("names"), py::arg("order") = 40);
}
