#include "qapery/poly_gcd.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qapery {
namespace {

using IPoly = std::vector<Integer>;  // dense, trailing entry nonzero

void itrim(IPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// p = content(p) * primitive(p); returns content (nonnegative; sign stays in p
// unless `forcePositiveLead`).
Integer icontent(const IPoly& p) {
    Integer g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void idivScalar(IPoly& p, const Integer& d) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

// Exact division in Z[x]; nullopt when it does not divide.
std::optional<IPoly> idivExact(const IPoly& num, const IPoly& den) {
    if (den.empty()) throw std::domain_error("idivExact: zero divisor");
    if (num.empty()) return IPoly{};
    if (num.size() < den.size()) return std::nullopt;
    IPoly rem = num;
    const long dn = static_cast<long>(den.size());
    IPoly quot(num.size() - den.size() + 1, Integer(0));
    const Integer& lead = den.back();
    for (long i = static_cast<long>(rem.size()) - 1; i >= dn - 1; --i) {
        const Integer& top = rem[static_cast<size_t>(i)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
        Integer f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        quot[static_cast<size_t>(i - dn + 1)] = f;
        for (long j = 0; j < dn; ++j)
            rem[static_cast<size_t>(i - dn + 1 + j)] -= f * den[static_cast<size_t>(j)];
    }
    itrim(rem);
    if (!rem.empty()) return std::nullopt;
    itrim(quot);
    return quot;
}

// QPoly (rational coefficients) -> primitive integer poly, sign normalized to
// positive leading coefficient. Scale factors are irrelevant for gcd purposes.
IPoly primitiveInteger(const QPoly& p) {
    if (p.isZero()) return {};
    Integer denLcm(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(denLcm.get_mpz_t(), denLcm.get_mpz_t(), c.get_den_mpz_t());
    IPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Integer scaled = c.get_num();
        Integer f;
        mpz_divexact(f.get_mpz_t(), denLcm.get_mpz_t(), c.get_den_mpz_t());
        out.push_back(scaled * f);
    }
    Integer cont = icontent(out);
    if (cont > 1) idivScalar(out, cont);
    if (out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

QPoly toQPoly(const IPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& x : p) c.emplace_back(x);
    return QPoly(std::move(c));
}

// ---- word-size prime arithmetic --------------------------------------------

uint64_t mulMod(uint64_t a, uint64_t b, uint64_t p) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

uint64_t powMod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulMod(r, a, p);
        a = mulMod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool isPrimeU64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % s == 0) return n == s;
    }
    uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powMod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulMod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t invMod(uint64_t a, uint64_t p) { return powMod(a, p - 2, p); }

using MPoly = std::vector<uint64_t>;

void mtrim(MPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

MPoly modImage(const IPoly& p, uint64_t prime) {
    MPoly out(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        out[i] = mpz_fdiv_ui(p[i].get_mpz_t(), prime);
    mtrim(out);
    return out;
}

void makeMonic(MPoly& p, uint64_t prime) {
    if (p.empty()) return;
    uint64_t inv = invMod(p.back(), prime);
    for (auto& c : p) c = mulMod(c, inv, prime);
}

MPoly modGcd(MPoly a, MPoly b, uint64_t prime) {
    while (!b.empty()) {
        // a mod b
        makeMonic(b, prime);
        const size_t db = b.size();
        while (a.size() >= db) {
            uint64_t f = a.back();
            if (f) {
                size_t off = a.size() - db;
                for (size_t j = 0; j < db; ++j) {
                    uint64_t t = mulMod(f, b[j], prime);
                    uint64_t& x = a[off + j];
                    x = (x >= t) ? x - t : x + prime - t;
                }
            }
            a.pop_back();
            mtrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    makeMonic(a, prime);
    return a;
}

}  // namespace

Rational polyContent(const QPoly& p) {
    if (p.isZero()) return Rational(0);
    // content = gcd(numerators) / lcm(denominators), signed like the leading coeff
    Integer num(0), den(1);
    for (const auto& c : p.coeffs()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational cont(num, den);
    cont.canonicalize();
    if (p.leading() < 0) cont = -cont;
    return cont;
}

QPoly polyPrimitivePart(const QPoly& p) {
    if (p.isZero()) return p;
    Rational c = polyContent(p);
    return p.scaled(Rational(1) / c);
}

QPoly polyGcd(const QPoly& a, const QPoly& b) {
    if (a.isZero()) return polyPrimitivePart(b);
    if (b.isZero()) return polyPrimitivePart(a);

    IPoly pa = primitiveInteger(a);
    IPoly pb = primitiveInteger(b);
    if (pa.size() < pb.size()) std::swap(pa, pb);
    if (pb.size() == 1) return QPoly::one();  // primitive constant

    // Leading-coefficient multiple used to normalize modular images so that
    // CRT reconstructs an integer polynomial.
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), pa.back().get_mpz_t(), pb.back().get_mpz_t());

    uint64_t prime = (1ull << 62);
    size_t bestDeg = SIZE_MAX;
    std::vector<Integer> crt;     // symmetric-range reconstruction
    Integer modulus(1);

    for (int iter = 0; iter < 4096; ++iter) {
        do { --prime; } while (!isPrimeU64(prime));
        if (mpz_fdiv_ui(pa.back().get_mpz_t(), prime) == 0 ||
            mpz_fdiv_ui(pb.back().get_mpz_t(), prime) == 0)
            continue;  // prime kills a leading coefficient

        MPoly g = modGcd(modImage(pa, prime), modImage(pb, prime), prime);
        if (g.size() == 1) return QPoly::one();  // provably coprime primitives
        if (g.size() > bestDeg) continue;        // unlucky prime
        if (g.size() < bestDeg) {                // previous primes were unlucky
            bestDeg = g.size();
            crt.assign(bestDeg, Integer(0));
            modulus = 1;
        }

        uint64_t scale = mpz_fdiv_ui(gamma.get_mpz_t(), prime);
        Integer p(static_cast<unsigned long>(prime));
        Integer newModulus = modulus * p;
        bool changed = false;
        for (size_t i = 0; i < bestDeg; ++i) {
            uint64_t target = mulMod(g[i], scale, prime);
            // x = crt[i] + modulus * t with x == target (mod prime)
            uint64_t cur = mpz_fdiv_ui(crt[i].get_mpz_t(), prime);
            uint64_t mi = mpz_fdiv_ui(modulus.get_mpz_t(), prime);
            uint64_t t = mulMod((target + prime - cur) % prime, invMod(mi, prime), prime);
            Integer x = crt[i] + modulus * Integer(static_cast<unsigned long>(t));
            // symmetric range
            Integer half = newModulus / 2;
            if (x > half) x -= newModulus;
            if (x != crt[i]) changed = true;
            crt[i] = x;
        }
        modulus = newModulus;
        if (changed) continue;  // image still moving; needs more primes

        IPoly candidate = crt;
        itrim(candidate);
        if (candidate.empty()) continue;
        Integer cont = icontent(candidate);
        if (cont > 1) idivScalar(candidate, cont);
        if (candidate.back() < 0)
            for (auto& c : candidate) c = -c;
        if (idivExact(pa, candidate) && idivExact(pb, candidate))
            return toQPoly(candidate);
        // verification failed: keep adding primes
    }
    throw std::runtime_error("polyGcd: modular reconstruction did not converge");
}

}  // namespace qapery
