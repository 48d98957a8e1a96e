#include "qpsi/sampling.hpp"

#include <cmath>

namespace qpsi {

namespace {

std::uint64_t splitmix(std::uint64_t& x)
{
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& s)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

double lattice_distance(Complex w, Complex tau)
{
    // w = s + t tau
    double t = w.imag() / tau.imag();
    double s = w.real() - t * tau.real();
    double ds = s - std::round(s);
    double dt = t - std::round(t);
    return std::hypot(ds, dt);
}

void require_off_lattice(Complex w, Complex tau, double margin, const char* what)
{
    if (lattice_distance(w, tau) < margin) throw RejectSample(std::string("near a lattice point: ") + what);
}

Sampler::Sampler(std::uint64_t seed, const std::string& stream)
{
    std::uint64_t x = seed ^ rotl(fnv1a(stream), 17);
    for (auto& v : s_) v = splitmix(x);
}

// xoshiro256**
std::uint64_t Sampler::next()
{
    std::uint64_t r = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return r;
}

double Sampler::uniform(double lo, double hi)
{
    double u = double(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Complex Sampler::record(const std::string& name, Complex v)
{
    params_.emplace_back(name, v);
    return v;
}

Complex Sampler::annulus(const std::string& name, double lo, double hi)
{
    double r = std::exp(uniform(std::log(lo), std::log(hi)));
    double ph = uniform(-kPi, kPi);
    return record(name, std::polar(r, ph));
}

Complex Sampler::box(const std::string& name, double re_lo, double re_hi, double im)
{
    double re = uniform(re_lo, re_hi);
    return record(name, Complex(re, uniform(-im, im)));
}

Complex Sampler::additive(const std::string& name, Complex tau, double tmax)
{
    double s = uniform(0.0, 1.0);
    double t = uniform(-tmax, tmax);
    return record(name, s + t * tau);
}

QContext Sampler::nome(double qmin, double qmax)
{
    Complex q;
    if (fixed_q_) {
        q = *fixed_q_;
        // a fixed nome does not widen the domain an identity was calibrated for
        if (std::abs(q) < qmin || std::abs(q) > qmax) throw RejectSample("fixed q outside the sampling domain");
    } else {
        double r = uniform(qmin, qmax);
        q = std::polar(r, uniform(-kPi, kPi));
    }
    record("q", q);
    QContext ctx = QContext::from_q(q, tol_);
    ctx.max_terms = max_terms_;
    return ctx;
}

}  // namespace qpsi
