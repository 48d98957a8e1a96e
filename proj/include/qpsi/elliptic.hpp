#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpsi/qcore.hpp"
#include "qpsi/sampling.hpp"

namespace qpsi::elliptic {

struct EllipticContext {
    QContext ctx;
    Complex K;             // (pi/2) (q)_inf^2 (-q^{1/2})_inf^4
    Complex k_mod;         // 4 q^{1/4} (-q)_inf^4 / (-q^{1/2})_inf^4
    Complex theta_prime0;  // d/du vartheta11 at 0, numerically
};

EllipticContext make_context(const QContext& ctx);

Complex period_K(const QContext& ctx);
Complex modulus_k(const QContext& ctx);
// complementary modulus ((q^{1/2})_inf / (-q^{1/2})_inf)^4
Complex modulus_kprime(const QContext& ctx);

// central differences of vartheta11 at 0 with Richardson extrapolation
Complex theta11_prime0(const QContext& ctx);

// wp(u) - wp(v) as -sigma(u+v) sigma(u-v) / (sigma(u)^2 sigma(v)^2),
// with sigma replaced by vartheta11 / vartheta11'(0) (the Gaussian factors cancel)
Complex wp_diff_oracle(const EllipticContext& ec, Complex u, Complex v);

// the 2psi6 form; the argument is x^4/q^2 in one printed display and x^2/q^2 in another
enum class Psi26Argument { XFourth, XSquared };
const char* to_string(Psi26Argument a);

Complex wp_diff_psi26(const EllipticContext& ec, Complex u, Complex v, Psi26Argument arg = Psi26Argument::XFourth);
// sum (1 + x q^n)/(1 - x q^n) x^{4n+1} q^{2n^2} / theta(x^2), minus the same in y
Complex wp_diff_bilateral(const EllipticContext& ec, Complex u, Complex v);
// the same regrouped into x^{4n}/(1 - x q^n)^2 and x^{-4n}/(1 - q^n/x)^2 pieces
Complex wp_diff_split(const EllipticContext& ec, Complex u, Complex v);

// Bailey's specialisation of the 6psi6 sum
struct BaileyForms {
    Complex psi66;
    Complex vwp_sum;  // sum (x - y)(1 - xy q^{2n}) q^n / ((1 - x q^n)^2 (1 - y q^n)^2)
    Complex split;    // sum x q^n/(1 - x q^n)^2 - y q^n/(1 - y q^n)^2
};
BaileyForms wp_diff_bailey_forms(const EllipticContext& ec, Complex u, Complex v);
Complex wp_diff_bailey(const EllipticContext& ec, Complex u, Complex v);

// two pieces of the 2psi6 form; their difference in x and y is wp(u) - wp(v) up to -4 pi^2
Complex psi26_piece(const QContext& ctx, Complex u, Psi26Argument arg);

// M(u) = 4 pi^2 i q^{1/8} (q)_inf^3 mu(u,u)
Complex m_func(const EllipticContext& ec, Complex u);

// (1/2 pi i) (2K / vartheta11(1/2)) dn/(sn cn) at 2Ku, taken as -mu(u, u + 1/2)
Complex jacobi_combo_oracle(const EllipticContext& ec, Complex u);
// (1/2 pi i) (2K / vartheta11(1/2)), for checks against an external dn/(sn cn)
Complex jacobi_prefactor(const EllipticContext& ec);

struct JacobiForms {
    Complex psi48;  // sign fixed against the oracle (the printed display carries the opposite sign)
    Complex bilateral;
    Complex split;
};
JacobiForms jacobi_combo_forms(const EllipticContext& ec, Complex u);
// the 4psi8 form exactly as printed, -q^{-9/8} prefactor included
Complex jacobi_psi48_printed(const EllipticContext& ec, Complex u);

// (1 - xy)(x - y)/((1 - x)^2 (1 - y)^2) 6psi6, i.e. Bailey's form divided by -4 pi^2
Complex curious_lhs(const QContext& ctx, Complex u, Complex v);
Complex curious_rhs(const QContext& ctx, Complex u, Complex v, Psi26Argument arg);

struct CuriousCandidate {
    Psi26Argument argument;
    double max_rel_err = 0.0;
    long draws = 0;
    bool pass = false;
};
struct CuriousResolution {
    std::vector<CuriousCandidate> candidates;
    std::optional<Psi26Argument> resolved;  // set iff exactly one candidate passes
    long rejected_samples = 0;
};
CuriousResolution resolve_curious(std::uint64_t seed, long draws, double tol = 1e-8,
                                  std::optional<Complex> fixed_q = std::nullopt);

// draw (q, u, v) for the elliptic checks: |q| in [qmin, qmax], u, v, u +- v and the
// half-period shifts kept away from the lattice
struct EllipticDraw {
    QContext ctx;
    Complex u, v;
};
EllipticDraw draw_point(Sampler& s, double qmin = 0.05, double qmax = 0.4);

}  // namespace qpsi::elliptic
