// Eulerian definitions and the two printed right-hand sides for every mock theta function.
// Forms are transcribed as printed; the only edits are the two obvious typesetting slips
// noted on gamma and phi_minus.

#include <map>

#include "qpsi/catalog.hpp"

namespace qpsi::catalog {

namespace {

Rational R(long n, long d = 1) { return fps::make_rational(n, d); }

Monomial qm(const Rational& e) { return {R(1), e}; }
Monomial nq(const Rational& e) { return {R(-1), e}; }
const Monomial kOne{R(1), R(0)};
const Monomial kMinusOne{R(-1), R(0)};

ThetaRef th(Monomial x, Monomial base) { return {x, base}; }
WRef W(Monomial a, Monomial b, Monomial c, Monomial base) { return {a, b, c, base}; }
WTerm wt(Rational coeff, Rational qexp, ThetaRef t, WRef w) { return {coeff, qexp, t, w}; }

// 1 - q^{..}, 1 + q^{..}, and the (-1)^n versions
LinearFactor om(Rational s, Rational o) { return {R(1), false, s, o}; }
LinearFactor op(Rational s, Rational o) { return {R(-1), false, s, o}; }
LinearFactor oma(Rational s, Rational o) { return {R(1), true, s, o}; }
LinearFactor opa(Rational s, Rational o) { return {R(-1), true, s, o}; }

Summand S(Rational a2, Rational a1, Rational a0, std::vector<LinearFactor> num, std::vector<LinearFactor> den) {
    return {a2, a1, a0, std::move(num), std::move(den)};
}
BilateralTerm bt(Rational coeff, Rational qexp, ThetaRef t, Summand s) { return {coeff, qexp, t, std::move(s)}; }

ProductFactor eta(long m, long pw = 1) { return {ProductFactor::Kind::Poch, qm(m), qm(m), pw}; }
ProductFactor pinf(long a, long m, long pw = 1) { return {ProductFactor::Kind::Poch, qm(a), qm(m), pw}; }
ProductFactor tf(Monomial x, long m, long pw = 1) { return {ProductFactor::Kind::Theta, x, qm(m), pw}; }
Correction corr(Rational coeff, Rational qexp, std::vector<ProductFactor> f) { return {coeff, qexp, std::move(f)}; }

// (c q^{as n + ao}; q^m)_{ls n + lo}^pw
PochFactor pf(long c, long as, long ao, long m, long ls, long lo, long pw) {
    return {R(c), R(as), R(ao), qm(m), ls, lo, pw};
}

EulerianSpec eul(long start, bool alt, Rational a2, Rational a1, Rational a0, std::vector<PochFactor> p,
                 std::vector<LinearFactor> extra = {}, Rational constant = 0, Rational scale = 1) {
    EulerianSpec s;
    s.start = start;
    s.alternating = alt;
    s.a2 = a2;
    s.a1 = a1;
    s.a0 = a0;
    s.poch = std::move(p);
    s.extra = std::move(extra);
    s.constant = constant;
    s.scale = scale;
    return s;
}

RhsForm wform(std::vector<WTerm> w, std::vector<Correction> c = {}, Rational constant = 0) {
    RhsForm f;
    f.w = std::move(w);
    f.corrections = std::move(c);
    f.constant = constant;
    return f;
}

RhsForm bform(std::vector<BilateralTerm> b, std::vector<Correction> c = {}, Rational constant = 0) {
    RhsForm f;
    f.bilateral = std::move(b);
    f.corrections = std::move(c);
    f.constant = constant;
    return f;
}

struct Builder {
    std::vector<MockThetaEntry> out;

    void add(std::string name, int order, std::string symbol, std::string ref, EulerianSpec lhs, RhsForm w,
             RhsForm b, std::string note = {}, long denom = 1) {
        MockThetaEntry e;
        e.name = std::move(name);
        e.order = order;
        e.symbol = std::move(symbol);
        e.paper_ref = std::move(ref);
        e.denom = denom;
        e.lhs = std::move(lhs);
        e.rhs_w = std::move(w);
        e.rhs_bilateral = std::move(b);
        e.note = std::move(note);
        out.push_back(std::move(e));
    }
};

std::vector<MockThetaEntry> build() {
    Builder B;
    const std::string vwp = "degenerate very-well-poised bilateral W";

    // order 2
    B.add("order2.A", 2, "A(q)", "second order A(q), " + vwp,
          eul(0, false, 0, 1, 1, {pf(-1, 0, 2, 2, 1, 0, 1), pf(1, 0, 1, 2, 1, 1, -1)}),
          wform({wt(1, 2, th(nq(5), qm(4)), W(qm(5), qm(3), qm(2), qm(4)))}),
          bform({bt(1, 0, th(nq(5), qm(4)), S(8, 10, 2, {om(8, 5)}, {om(4, 3), om(4, 2)}))}));
    B.add("order2.B", 2, "B(q)", "second order B(q), " + vwp,
          eul(0, false, 0, 1, 0, {pf(-1, 0, 1, 2, 1, 0, 1), pf(1, 0, 1, 2, 1, 1, -1)}),
          wform({wt(1, 2, th(nq(6), qm(4)), W(qm(6), qm(3), qm(3), qm(4)))}),
          bform({bt(1, 0, th(nq(6), qm(4)), S(8, 12, 2, {op(4, 3)}, {om(4, 3)}))}));
    {
        auto c = corr(-1, 0, {eta(2, 8), eta(1, -3), eta(4, -4)});
        B.add("order2.mu", 2, "mu(q)", "second order mu(q), " + vwp,
              eul(0, true, 1, 0, 0, {pf(1, 0, 1, 2, 1, 0, 1), pf(-1, 0, 2, 2, 1, 0, -2)}),
              wform({wt(4, 0, th(qm(1), qm(4)), W(nq(1), qm(1), kMinusOne, qm(4)))}, {c}),
              bform({bt(4, 0, th(qm(1), qm(4)), S(8, 2, 0, {op(8, 1)}, {om(4, 1), op(4, 0)}))}, {c}),
              "definition printed with a comma, read as (-q^2;q^2)_n^2");
    }

    // order 3
    {
        auto c = corr(1, 0, {eta(3, 4), eta(1, -1), eta(6, -2)});
        B.add("order3.f", 3, "f(q)", "Ramanujan third order f(q), " + vwp,
              eul(0, false, 1, 0, 0, {pf(-1, 0, 1, 1, 1, 0, -2)}),
              wform({wt(-4, 1, th(qm(3), qm(3)), W(nq(3), nq(2), qm(1), qm(3)))}, {c}),
              bform({bt(-4, 0, th(qm(3), qm(3)), S(6, 6, 1, {op(6, 3)}, {om(3, 1), op(3, 2)}))}, {c}));
    }
    {
        auto c = corr(2, 1, {eta(6), eta(12, 2), eta(3, -1), eta(4, -1)});
        B.add("order3.phi", 3, "phi(q)", "Ramanujan third order phi(q), " + vwp,
              eul(0, false, 1, 0, 0, {pf(-1, 0, 2, 2, 1, 0, -1)}),
              wform({wt(-2, 2, th(nq(5), nq(3)), W(qm(5), qm(3), qm(2), nq(3)))}, {c}),
              bform({bt(-2, 0, th(nq(5), nq(3)), S(6, 10, 2, {om(6, 5)}, {oma(3, 2), oma(3, 3)}))}, {c}));
    }
    {
        auto c = corr(1, 1, {eta(6), eta(12, 2), eta(3, -1), eta(4, -1)});
        B.add("order3.psi", 3, "psi(q)", "Ramanujan third order psi(q), " + vwp,
              eul(1, false, 1, 0, 0, {pf(1, 0, 1, 2, 1, 0, -1)}),
              wform({wt(1, 1, th(nq(3), nq(3)), W(qm(3), qm(2), qm(1), nq(3)))}, {c}),
              bform({bt(1, 0, th(nq(3), nq(3)), S(6, 6, 1, {om(6, 3)}, {oma(3, 1), oma(3, 2)}))}, {c}));
    }
    {
        auto c = corr(1, 0, {eta(3, 4), eta(1, -1), eta(6, -2)});
        B.add("order3.chi", 3, "chi(q)", "Ramanujan third order chi(q), " + vwp,
              eul(0, false, 1, 0, 0, {pf(-1, 0, 1, 1, 1, 0, 1), pf(-1, 0, 3, 3, 1, 0, -1)}),
              wform({wt(-1, 1, th(qm(3), qm(3)), W(nq(3), nq(2), qm(1), qm(3)))}, {c}),
              bform({bt(-1, 0, th(qm(3), qm(3)), S(6, 6, 1, {op(6, 3)}, {om(3, 1), op(3, 2)}))}, {c}));
    }
    {
        auto c = corr(1, 0, {eta(6, 4), eta(2, -1), eta(3, -2)});
        B.add("order3.omega", 3, "omega(q)", "Watson third order omega(q), " + vwp,
              eul(0, false, 2, 2, 0, {pf(1, 0, 1, 2, 1, 1, -2)}),
              wform({wt(2, 1, th(nq(5), qm(6)), W(qm(5), qm(3), qm(2), qm(6)))}, {c}),
              bform({bt(2, 0, th(nq(5), qm(6)), S(12, 10, 1, {om(12, 5)}, {om(6, 2), om(6, 3)}))}, {c}));
    }
    {
        auto c = corr(1, 0, {eta(1), eta(3), eta(12), eta(2, -1), eta(6, -1)});
        B.add("order3.nu", 3, "nu(q)", "Watson third order nu(q), " + vwp,
              eul(0, false, 1, 1, 0, {pf(-1, 0, 1, 2, 1, 1, -1)}),
              wform({wt(2, 2, th(nq(8), qm(12)), W(qm(8), nq(5), nq(3), qm(12)))}, {c}),
              bform({bt(2, 0, th(nq(8), qm(12)), S(24, 16, 2, {om(24, 8)}, {op(12, 5), op(12, 3)}))}, {c}));
    }
    B.add("order3.rho", 3, "rho(q)", "Watson third order rho(q), " + vwp,
          eul(1, false, 2, -2, 0, {pf(1, 0, 1, 2, 1, 0, 1), pf(1, 0, 3, 6, 1, 0, -1)}),
          wform({wt(1, 0, th(nq(3), qm(6)), W(qm(3), nq(2), nq(1), qm(6)))}),
          bform({bt(1, 0, th(nq(3), qm(6)), S(12, 6, 0, {om(12, 3)}, {op(6, 1), op(6, 2)}))}),
          "the definition used is the one stated alongside the identity (an earlier tabulation has a different rho)");

    // order 5
    {
        auto c = corr(1, 0, {eta(5, 3), tf(nq(1), 5, -1), eta(10, -1)});
        B.add("order5.f0", 5, "f0(q)", "Ramanujan fifth order f0(q), " + vwp,
              eul(0, false, 1, 0, 0, {pf(-1, 0, 1, 1, 1, 0, -1)}),
              wform({wt(-2, 4, th(nq(22), qm(30)), W(qm(22), qm(18), qm(4), qm(30))),
                     wt(-2, 2, th(nq(12), qm(30)), W(qm(12), qm(8), qm(4), qm(30)))},
                    {c}),
              bform({bt(-2, 0, th(nq(22), qm(30)), S(60, 44, 4, {om(60, 22)}, {om(30, 18), om(30, 4)})),
                     bt(-2, 0, th(nq(12), qm(30)), S(60, 24, 2, {om(60, 12)}, {om(30, 8), om(30, 4)}))},
                    {c}));
    }
    {
        auto c = corr(1, 0, {eta(5, 3), tf(nq(2), 5, -1), eta(10, -1)});
        B.add("order5.f1", 5, "f1(q)", "Ramanujan fifth order f1(q), " + vwp,
              eul(0, false, 1, 1, 0, {pf(-1, 0, 1, 1, 1, 0, -1)}),
              wform({wt(-2, 7, th(nq(24), qm(30)), W(qm(24), qm(16), qm(8), qm(30))),
                     wt(-2, 3, th(nq(14), qm(30)), W(qm(14), qm(8), qm(6), qm(30)))},
                    {c}),
              bform({bt(-2, 0, th(nq(24), qm(30)), S(60, 48, 7, {om(60, 24)}, {om(30, 16), om(30, 8)})),
                     bt(-2, 3, th(nq(14), qm(30)), S(60, 28, 3, {om(60, 14)}, {om(30, 8), om(30, 6)}))},
                    {c}));
    }
    {
        auto c = corr(-1, 1, {eta(10, 3), eta(5, -1), tf(nq(4), 10, -1)});
        B.add("order5.F0", 5, "F0(q)", "Ramanujan fifth order F0(q), " + vwp,
              eul(0, false, 2, 0, 0, {pf(1, 0, 1, 2, 1, 0, -1)}),
              wform({wt(1, 0, th(nq(4), qm(15)), W(qm(4), qm(3), qm(1), qm(15))),
                     wt(-1, 4, th(nq(16), qm(15)), W(qm(16), qm(12), qm(4), qm(15)))},
                    {c}),
              bform({bt(1, 0, th(nq(4), qm(15)), S(30, 8, 0, {om(30, 4)}, {om(15, 3), om(15, 1)})),
                     bt(-1, 0, th(nq(16), qm(15)), S(30, 32, 4, {om(30, 16)}, {om(15, 12), om(15, 4)}))},
                    {c}));
    }
    {
        auto c = corr(1, 0, {eta(10, 3), eta(5, -1), tf(nq(2), 10, -1)});
        B.add("order5.F1", 5, "F1(q)", "Ramanujan fifth order F1(q), " + vwp,
              eul(0, false, 2, 2, 0, {pf(1, 0, 1, 2, 1, 1, -1)}),
              wform({wt(1, 1, th(nq(7), qm(15)), W(qm(7), qm(4), qm(3), qm(15))),
                     wt(1, 3, th(nq(12), qm(15)), W(qm(12), qm(8), qm(4), qm(15)))},
                    {c}),
              bform({bt(1, 0, th(nq(7), qm(15)), S(30, 14, 1, {om(30, 7)}, {om(15, 4), om(15, 3)})),
                     bt(1, 0, th(nq(12), qm(15)), S(30, 24, 3, {om(30, 12)}, {om(15, 8), om(15, 4)}))},
                    {c}));
    }
    B.add("order5.phi0", 5, "phi0(q)", "Ramanujan fifth order phi0(q), " + vwp,
          eul(0, false, 1, 0, 0, {pf(-1, 0, 1, 2, 1, 0, 1)}),
          wform({wt(1, 8, th(nq(20), nq(15)), W(qm(20), qm(11), qm(9), nq(15))),
                 wt(-1, 9, th(qm(25), nq(15)), W(nq(25), nq(16), qm(9), nq(15)))}),
          bform({bt(1, 0, th(nq(20), nq(15)), S(30, 40, 8, {om(30, 20)}, {oma(15, 11), oma(15, 9)})),
                 bt(-1, 0, th(qm(25), nq(15)), S(30, 50, 9, {op(30, 25)}, {opa(15, 16), oma(15, 9)}))}));
    B.add("order5.phi1", 5, "phi1(q)", "Ramanujan fifth order phi1(q), " + vwp,
          eul(0, false, 1, 2, 1, {pf(-1, 0, 1, 2, 1, 0, 1)}),
          wform({wt(1, 3, th(nq(10), nq(15)), W(qm(10), qm(7), qm(3), nq(15))),
                 wt(1, 1, th(qm(5), nq(15)), W(nq(5), qm(3), nq(2), nq(15)))}),
          bform({bt(1, 0, th(nq(10), nq(15)), S(30, 20, 3, {om(30, 10)}, {oma(15, 7), oma(15, 3)})),
                 bt(1, 0, th(qm(5), nq(15)), S(30, 10, 1, {op(30, 5)}, {oma(15, 3), opa(15, 2)}))}));
    B.add("order5.psi0", 5, "psi0(q)", "Ramanujan fifth order psi0(q), " + vwp,
          eul(0, false, R(1, 2), R(3, 2), 1, {pf(-1, 0, 1, 1, 1, 0, 1)}),
          wform({wt(1, 3, th(nq(20), qm(30)), W(qm(20), qm(17), qm(3), qm(30))),
                 wt(1, 1, th(nq(10), qm(30)), W(qm(10), qm(7), qm(3), qm(30)))}),
          bform({bt(1, 0, th(nq(20), qm(30)), S(60, 40, 3, {om(60, 20)}, {om(30, 17), om(30, 3)})),
                 bt(1, 0, th(nq(10), qm(30)), S(60, 20, 1, {om(60, 10)}, {om(30, 7), om(30, 3)}))}));
    B.add("order5.psi1", 5, "psi1(q)", "Ramanujan fifth order psi1(q), " + vwp,
          eul(0, false, R(1, 2), R(1, 2), 0, {pf(-1, 0, 1, 1, 1, 0, 1)}),
          wform({wt(1, 0, th(nq(10), qm(30)), W(qm(10), qm(9), qm(1), qm(30))),
                 wt(1, 6, th(nq(20), qm(30)), W(qm(20), qm(11), qm(9), qm(30)))}),
          bform({bt(1, 0, th(nq(10), qm(30)), S(60, 20, 0, {om(60, 10)}, {om(30, 9), om(30, 1)})),
                 bt(1, 0, th(nq(20), qm(30)), S(60, 40, 6, {om(60, 20)}, {om(30, 11), om(30, 9)}))}));
    {
        auto c = corr(2, 0, {tf(nq(2), 5, 3), eta(1, -2)});
        B.add("order5.chi0", 5, "chi0(q)", "Ramanujan fifth order chi0(q), " + vwp,
              eul(0, false, 0, 1, 0, {pf(1, 1, 1, 1, 1, 0, -1)}),
              wform({wt(3, -6, th(nq(-5), qm(15)), W(qm(-5), qm(1), qm(-6), qm(15))),
                     wt(3, 3, th(nq(10), qm(15)), W(qm(10), qm(6), qm(4), qm(15)))},
                    {c}, 2),
              bform({bt(3, 0, th(nq(-5), qm(15)), S(30, -10, -6, {om(30, -5)}, {om(30, 1), om(30, -6)})),
                     bt(3, 0, th(nq(10), qm(15)), S(30, 20, 3, {om(30, 10)}, {om(15, 6), om(15, 4)}))},
                    {c}, 2));
    }
    {
        auto c = corr(-2, 0, {tf(nq(1), 5, 3), eta(1, -2)});
        B.add("order5.chi1", 5, "chi1(q)", "Ramanujan fifth order chi1(q), " + vwp,
              eul(0, false, 0, 1, 0, {pf(1, 1, 1, 1, 1, 1, -1)}),
              wform({wt(3, 2, th(nq(10), qm(15)), W(qm(10), qm(7), qm(3), qm(15))),
                     wt(3, 0, th(nq(5), qm(15)), W(qm(5), qm(3), qm(2), qm(15)))},
                    {c}),
              bform({bt(3, 0, th(nq(10), qm(15)), S(30, 20, 2, {om(30, 10)}, {om(15, 7), om(15, 3)})),
                     bt(3, 0, th(nq(5), qm(15)), S(30, 10, 0, {om(30, 5)}, {om(15, 3), om(15, 2)}))},
                    {c}));
    }
    B.add("order5.Psi0", 5, "Psi0(q)", "Ramanujan fifth order Psi0(q), " + vwp,
          eul(0, false, 5, 0, 0, {pf(1, 0, 1, 5, 1, 1, -1), pf(1, 0, 4, 5, 1, 0, -1)}, {}, -1),
          wform({wt(1, 1, th(nq(6), qm(15)), W(qm(6), qm(4), qm(2), qm(15))),
                 wt(1, 2, th(nq(11), qm(15)), W(qm(11), qm(9), qm(2), qm(15)))}),
          bform({bt(1, 0, th(nq(6), qm(15)), S(30, 12, 1, {om(30, 6)}, {om(15, 4), om(15, 2)})),
                 bt(1, 0, th(nq(11), qm(15)), S(30, 22, 2, {om(30, 11)}, {om(15, 9), om(15, 2)}))}));
    B.add("order5.Psi1", 5, "Psi1(q)", "Ramanujan fifth order Psi1(q), " + vwp,
          eul(0, false, 5, 0, 0, {pf(1, 0, 2, 5, 1, 1, -1), pf(1, 0, 3, 5, 1, 0, -1)}, {}, -1),
          wform({wt(1, 2, th(nq(7), qm(15)), W(qm(7), qm(4), qm(3), qm(15))),
                 wt(1, 4, th(nq(12), qm(15)), W(qm(12), qm(8), qm(4), qm(15)))}),
          bform({bt(1, 0, th(nq(7), qm(15)), S(30, 14, 2, {om(30, 7)}, {om(15, 4), om(15, 3)})),
                 bt(1, 0, th(nq(12), qm(15)), S(30, 24, 4, {om(30, 12)}, {om(15, 8), om(15, 4)}))}));

    // order 6
    B.add("order6.phi", 6, "phi(q)", "Ramanujan sixth order phi(q), " + vwp,
          eul(0, true, 1, 0, 0, {pf(1, 0, 1, 2, 1, 0, 1), pf(-1, 0, 1, 1, 2, 0, -1)}),
          wform({wt(2, 0, th(nq(1), qm(3)), W(qm(1), nq(1), kMinusOne, qm(3)))}),
          bform({bt(2, 0, th(nq(1), qm(3)), S(6, 2, 0, {om(6, 1)}, {op(3, 1), op(3, 0)}))}));
    B.add("order6.psi", 6, "psi(q)", "Ramanujan sixth order psi(q), " + vwp,
          eul(0, true, 1, 2, 1, {pf(1, 0, 1, 2, 1, 0, 1), pf(-1, 0, 1, 1, 2, 1, -1)}),
          wform({wt(1, 1, th(nq(2), qm(3)), W(qm(2), nq(1), nq(1), qm(3)))}),
          bform({bt(1, 0, th(nq(2), qm(3)), S(6, 4, 1, {om(3, 1)}, {op(3, 1)}))}));
    B.add("order6.rho", 6, "rho(q)", "Ramanujan sixth order rho(q), " + vwp,
          eul(0, false, R(1, 2), R(1, 2), 0, {pf(-1, 0, 1, 1, 1, 0, 1), pf(1, 0, 1, 2, 1, 1, -1)}),
          wform({wt(1, 0, th(nq(2), qm(6)), W(qm(2), qm(1), qm(1), qm(6)))}),
          bform({bt(1, 0, th(nq(2), qm(6)), S(12, 4, 0, {op(6, 1)}, {om(6, 1)}))}));
    B.add("order6.sigma", 6, "sigma(q)", "Ramanujan sixth order sigma(q), " + vwp,
          eul(0, false, R(1, 2), R(3, 2), 1, {pf(-1, 0, 1, 1, 1, 0, 1), pf(1, 0, 1, 2, 1, 1, -1)}),
          wform({wt(1, 1, th(nq(4), qm(6)), W(qm(4), qm(3), qm(1), qm(6)))}),
          bform({bt(1, 0, th(nq(4), qm(6)), S(12, 8, 1, {om(12, 4)}, {om(6, 3), om(6, 1)}))}));
    {
        auto c = corr(1, 0, {eta(1, 3), eta(6, 2), eta(2, -3), eta(3, -1)});
        B.add("order6.lambda", 6, "lambda(q)", "Ramanujan sixth order lambda(q), " + vwp,
              eul(0, true, 0, 1, 0, {pf(1, 0, 1, 2, 1, 0, 1), pf(-1, 0, 1, 1, 1, 0, -1)}),
              wform({wt(2, 1, th(nq(4), qm(6)), W(qm(4), nq(2), nq(2), qm(6)))}, {c}),
              bform({bt(2, 0, th(nq(4), qm(6)), S(12, 8, 1, {om(6, 2)}, {op(6, 2)}))}, {c}));
    }
    {
        auto c = corr(R(-1, 2), 0, {eta(1, 2), eta(3, 2), eta(2, -2), eta(6, -1)});
        B.add("order6.mu", 6, "mu(q)", "Ramanujan sixth order mu(q), " + vwp,
              eul(0, true, 0, 1, 1, {pf(1, 0, 1, 2, 1, 0, 1), pf(-1, 0, 1, 1, 1, 1, -1)}, {op(1, 0)}, R(1, 2),
                  R(1, 2)),
              wform({wt(2, 0, th(nq(2), qm(6)), W(qm(2), nq(2), kMinusOne, qm(6)))}, {c}),
              bform({bt(2, 0, th(nq(2), qm(6)), S(12, 4, 0, {om(12, 2)}, {op(6, 2), op(6, 0)}))}, {c}));
    }
    {
        auto c = corr(R(-1, 2), 0, {tf(nq(1), 2, 2), tf(qm(1), 3, -1)});
        B.add("order6.gamma", 6, "gamma(q)", "Ramanujan sixth order gamma(q), " + vwp,
              eul(0, false, 1, 0, 0, {pf(1, 0, 1, 1, 1, 0, 1), pf(1, 0, 3, 3, 1, 0, -1)}),
              wform({wt(3, 0, th(nq(1), qm(3)), W(qm(1), nq(1), kMinusOne, qm(3)))}, {c}),
              bform({bt(3, 0, th(nq(1), qm(3)), S(6, 2, 0, {om(6, 1)}, {op(3, 1), op(3, 0)}))}, {c}),
              "W printed with a stray comma as W(q,;-q,-1;q^3), read as W(q;-q,-1;q^3)");
    }
    {
        auto c = corr(1, R(1, 2), {eta(2, 2), eta(6, 2), eta(1, -2), eta(3, -1)});
        B.add("order6.phi_minus", 6, "phi_-(q)", "sixth order phi_-(q) of Berndt and Chan, " + vwp,
              eul(1, false, 0, 1, 0, {pf(-1, 0, 1, 1, 2, -1, 1), pf(1, 0, 1, 2, 1, 0, -1)}),
              wform({wt(-1, R(1, 2), th(nq(2), qm(3)), W(qm(2), nq(R(3, 2)), nq(R(1, 2)), qm(3)))}, {c}),
              bform({bt(-1, 0, th(nq(2), qm(3)), S(6, 4, R(1, 2), {om(6, 2)}, {op(3, R(3, 2)), op(3, R(1, 2))}))},
                    {c}),
              "correction printed as (q^2;2^2)_inf^2, read as (q^2;q^2)_inf^2", 2);
    }
    {
        auto c = corr(R(1, 2), 1, {eta(6, 3), eta(1, -1), eta(2, -1)});
        B.add("order6.psi_minus", 6, "psi_-(q)", "sixth order psi_-(q) of Berndt and Chan, " + vwp,
              eul(1, false, 0, 1, 0, {pf(-1, 0, 1, 1, 2, -2, 1), pf(1, 0, 1, 2, 1, 0, -1)}),
              wform({wt(R(1, 2), 1, th(nq(2), qm(3)), W(qm(2), qm(1), qm(1), qm(3)))}, {c}),
              bform({bt(R(1, 2), 0, th(nq(2), qm(3)), S(6, 4, 1, {op(3, 1)}, {om(3, 1)}))}, {c}));
    }

    // order 7
    {
        auto c = corr(1, 0, {pinf(3, 7), pinf(4, 7), eta(7), pinf(1, 7, -1), pinf(2, 7, -1), pinf(5, 7, -1),
                             pinf(6, 7, -1)});
        B.add("order7.F0", 7, "F0(q)", "Ramanujan seventh order F0(q), " + vwp,
              eul(0, false, 1, 0, 0, {pf(1, 1, 1, 1, 1, 0, -1)}),
              wform({wt(2, 4, th(nq(14), qm(21)), W(qm(14), qm(9), qm(5), qm(21))),
                     wt(-2, 9, th(nq(28), qm(21)), W(qm(28), qm(19), qm(9), qm(21)))},
                    {c}),
              bform({bt(2, 0, th(nq(14), qm(21)), S(42, 28, 4, {om(42, 14)}, {om(21, 9), om(21, 5)})),
                     bt(-2, 0, th(nq(28), qm(21)), S(42, 56, 9, {om(42, 28)}, {om(21, 19), om(21, 9)}))},
                    {c}));
    }
    {
        auto c = corr(-1, 1, {pinf(1, 7), pinf(6, 7), eta(7), pinf(2, 7, -1), pinf(3, 7, -1), pinf(4, 7, -1),
                              pinf(5, 7, -1)});
        B.add("order7.F1", 7, "F1(q)", "Ramanujan seventh order F1(q), " + vwp,
              eul(1, false, 1, 0, 0, {pf(1, 1, 0, 1, 1, 0, -1)}),
              wform({wt(2, 3, th(nq(14), qm(21)), W(qm(14), qm(11), qm(3), qm(21))),
                     wt(2, 1, th(nq(7), qm(21)), W(qm(7), qm(4), qm(3), qm(21)))},
                    {c}),
              bform({bt(2, 0, th(nq(14), qm(21)), S(42, 28, 3, {om(42, 14)}, {om(21, 11), om(21, 3)})),
                     bt(2, 0, th(nq(7), qm(21)), S(42, 14, 1, {om(42, 7)}, {om(21, 4), om(21, 3)}))},
                    {c}));
    }
    {
        auto c = corr(1, 0, {pinf(2, 7), pinf(5, 7), eta(7), pinf(1, 7, -1), pinf(3, 7, -1), pinf(4, 7, -1),
                             pinf(6, 7, -1)});
        B.add("order7.F2", 7, "F2(q)", "Ramanujan seventh order F2(q), " + vwp,
              eul(0, false, 1, 1, 0, {pf(1, 1, 1, 1, 1, 1, -1)}),
              wform({wt(2, 5, th(nq(17), qm(21)), W(qm(17), qm(11), qm(6), qm(21))),
                     wt(2, 2, th(nq(10), qm(21)), W(qm(10), qm(6), qm(4), qm(21)))},
                    {c}),
              bform({bt(2, 0, th(nq(17), qm(21)), S(42, 34, 5, {om(42, 17)}, {om(21, 11), om(21, 6)})),
                     bt(2, 0, th(nq(10), qm(21)), S(21, 20, 2, {om(21, 10)}, {om(21, 6), om(21, 4)}))},
                    {c}));
    }

    // order 8
    {
        auto c = corr(1, 1, {eta(2, 2), eta(8, 2), tf(qm(1), 8), eta(4, -2), tf(nq(3), 8, -2)});
        B.add("order8.S0", 8, "S0(q)", "Gordon-McIntosh eighth order S0(q), " + vwp,
              eul(0, false, 1, 0, 0, {pf(-1, 0, 1, 2, 1, 0, 1), pf(-1, 0, 2, 2, 1, 0, -1)}),
              wform({wt(2, 0, th(qm(3), qm(8)), W(nq(3), qm(3), kMinusOne, qm(8)))}, {c}),
              bform({bt(2, 0, th(qm(3), qm(8)), S(16, 6, 0, {op(16, 3)}, {om(8, 3), op(8, 0)}))}, {c}));
    }
    {
        auto c = corr(1, -1, {eta(2, 2), eta(8, 2), tf(qm(3), 8), eta(4, -2), tf(nq(1), 8, -2)});
        B.add("order8.S1", 8, "S1(q)", "Gordon-McIntosh eighth order S1(q), " + vwp,
              eul(0, false, 1, 2, 0, {pf(-1, 0, 1, 2, 1, 0, 1), pf(-1, 0, 2, 2, 1, 0, -1)}),
              wform({wt(-2, -1, th(qm(1), qm(8)), W(nq(1), qm(1), kMinusOne, qm(8)))}, {c}),
              bform({bt(-2, 0, th(qm(1), qm(8)), S(16, 2, -1, {op(16, 1)}, {op(8, 0), om(8, 1)}))}, {c}));
    }
    B.add("order8.T0", 8, "T0(q)", "Gordon-McIntosh eighth order T0(q), " + vwp,
          eul(0, false, 1, 3, 2, {pf(-1, 0, 2, 2, 1, 0, 1), pf(-1, 0, 1, 2, 1, 1, -1)}),
          wform({wt(1, 2, th(qm(7), qm(8)), W(nq(7), nq(5), qm(2), qm(8)))}),
          bform({bt(1, 0, th(qm(7), qm(8)), S(16, 14, 2, {op(16, 7)}, {om(8, 2), op(8, 5)}))}));
    B.add("order8.T1", 8, "T1(q)", "Gordon-McIntosh eighth order T1(q), " + vwp,
          eul(0, false, 1, 1, 0, {pf(-1, 0, 2, 2, 1, 0, 1), pf(-1, 0, 1, 2, 1, 1, -1)}),
          wform({wt(-1, 5, th(qm(13), qm(8)), W(nq(13), nq(7), qm(6), qm(8)))}),
          bform({bt(-1, 0, th(qm(13), qm(8)), S(16, 26, 5, {op(16, 13)}, {om(8, 6), op(8, 7)}))}));
    B.add("order8.U0", 8, "U0(q)", "Gordon-McIntosh eighth order U0(q), " + vwp,
          eul(0, false, 1, 0, 0, {pf(-1, 0, 1, 2, 1, 0, 1), pf(-1, 0, 4, 4, 1, 0, -1)}),
          wform({wt(2, 0, th(qm(1), qm(4)), W(nq(1), qm(1), kMinusOne, qm(4)))}),
          bform({bt(2, 0, th(qm(1), qm(4)), S(8, 2, 0, {op(8, 1)}, {op(4, 0), om(4, 1)}))}));
    B.add("order8.U1", 8, "U1(q)", "Gordon-McIntosh eighth order U1(q), " + vwp,
          eul(0, false, 1, 2, 1, {pf(-1, 0, 1, 2, 1, 0, 1), pf(-1, 0, 2, 4, 1, 1, -1)}),
          wform({wt(-1, 2, th(qm(5), qm(4)), W(nq(5), qm(3), nq(2), qm(4)))}),
          bform({bt(-1, 0, th(qm(5), qm(4)), S(8, 10, 2, {op(8, 5)}, {op(4, 2), om(4, 3)}))}));
    {
        auto c = corr(-1, 0, {eta(2, 3), eta(4), eta(1, -2), eta(8, -1)});
        B.add("order8.V0", 8, "V0(q)", "Gordon-McIntosh eighth order V0(q), " + vwp,
              eul(0, false, 1, 0, 0, {pf(-1, 0, 1, 2, 1, 0, 1), pf(1, 0, 1, 2, 1, 0, -1)}, {}, -1, 2),
              wform({wt(2, 0, th(nq(2), qm(8)), W(qm(2), qm(1), qm(1), qm(8)))}, {c}),
              bform({bt(2, 0, th(nq(2), qm(8)), S(16, 4, 0, {op(8, 1)}, {om(8, 1)}))}, {c}));
    }
    B.add("order8.V1", 8, "V1(q)", "Gordon-McIntosh eighth order V1(q), " + vwp,
          eul(0, false, 1, 2, 1, {pf(-1, 0, 1, 2, 1, 0, 1), pf(1, 0, 1, 2, 1, 1, -1)}),
          wform({wt(1, 1, th(nq(4), qm(8)), W(qm(4), qm(3), qm(1), qm(8)))}),
          bform({bt(1, 0, th(nq(4), qm(8)), S(16, 8, 1, {om(16, 4)}, {om(8, 1), om(8, 3)}))}));

    // order 10
    {
        auto c = corr(1, 0, {eta(2), eta(5), eta(10, 2), tf(nq(2), 5, -1), tf(nq(2), 10, -2)});
        B.add("order10.phi", 10, "phi(q)", "Ramanujan tenth order phi(q), " + vwp,
              eul(0, false, R(1, 2), R(1, 2), 0, {pf(1, 0, 1, 2, 1, 1, -1)}),
              wform({wt(2, 1, th(nq(5), qm(10)), W(qm(5), qm(3), qm(2), qm(10)))}, {c}),
              bform({bt(2, 0, th(nq(5), qm(10)), S(20, 10, 1, {om(20, 5)}, {om(10, 2), om(10, 3)}))}, {c}));
    }
    B.add("order10.psi", 10, "psi(q)", "Ramanujan tenth order psi(q), " + vwp,
          eul(0, false, R(1, 2), R(3, 2), 1, {pf(1, 0, 1, 2, 1, 1, -1)}),
          wform({wt(2, 1, th(nq(5), qm(10)), W(qm(5), qm(4), qm(1), qm(10)))},
                {corr(-1, 0, {eta(2), eta(5), eta(10, 2), tf(nq(1), 5, -1), tf(nq(4), 10, -2)})}),
          bform({bt(2, 0, th(nq(5), qm(10)), S(20, 10, 1, {om(20, 5)}, {om(10, 1), om(10, 4)}))},
                {corr(-1, 1, {eta(2), eta(5), eta(10, 2), tf(nq(1), 5, -1), tf(nq(4), 10, -2)})}),
          "the correction carries a factor q in the bilateral display only");
    {
        auto c = corr(-1, 0, {eta(5, 2), tf(nq(3), 10), eta(10, -1), tf(nq(1), 5, -1)});
        B.add("order10.X", 10, "X(q)", "Ramanujan tenth order X(q), " + vwp,
              eul(0, true, 1, 0, 0, {pf(-1, 0, 1, 1, 2, 0, -1)}),
              wform({wt(-2, -1, th(kOne, qm(5)), W(kMinusOne, nq(1), qm(-1), qm(5)))}, {c}),
              bform({bt(-2, 0, th(kOne, qm(5)), S(10, 0, -1, {op(10, 0)}, {om(5, -1), op(5, 1)}))}, {c}));
    }
    {
        auto c = corr(1, 1, {eta(5, 2), tf(nq(1), 10), eta(10, -1), tf(nq(2), 5, -1)});
        B.add("order10.chi", 10, "chi(q)", "Ramanujan tenth order chi(q), " + vwp,
              eul(0, true, 1, 2, 1, {pf(-1, 0, 1, 1, 2, 1, -1)}),
              wform({wt(-2, 2, th(qm(5), qm(5)), W(nq(5), nq(3), qm(2), qm(5)))}, {c}),
              bform({bt(-2, 0, th(qm(5), qm(5)), S(10, 10, 2, {op(10, 5)}, {om(5, 2), op(5, 3)}))}, {c}));
    }
    return B.out;
}

}  // namespace

const std::vector<MockThetaEntry>& list_entries() {
    static const std::vector<MockThetaEntry> entries = build();
    return entries;
}

const MockThetaEntry& entry(const std::string& name) {
    for (const auto& e : list_entries())
        if (e.name == name) return e;
    throw UnknownEntry("catalog: unknown entry '" + name + "'");
}

}  // namespace qpsi::catalog
