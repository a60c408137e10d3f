#include "cha/quadrep.hpp"

#include "cha/arith.hpp"

#include <algorithm>
#include <set>

namespace cha {

bool operator<(Solution const& l, Solution const& r)
{
    if (l.x != r.x)
        return l.x < r.x;
    return l.y < r.y;
}

char const* to_string(FormKind k)
{
    switch (k) {
    case FormKind::Definite: return "DEFINITE";
    case FormKind::Indefinite: return "INDEFINITE";
    case FormKind::Degenerate: return "DEGENERATE";
    }
    return "?";
}

namespace {

bool solves(Int const& D, Int const& N, Solution const& s)
{
    return s.x * s.x + D * s.y * s.y == N;
}

void sort_unique(std::vector<Solution>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

std::vector<Solution> solve_definite(Int const& D, Int const& N)
{
    if (D <= 0)
        throw UsageError("solve_definite: D must be positive");
    std::vector<Solution> out;
    if (N < 0)
        return out;
    Int const ymax = isqrt(Int(N / D));
    for (Int y = 0; y <= ymax; ++y) {
        Int const rest = N - D * y * y;
        if (!is_square(rest))
            continue;
        Int const x = isqrt(rest);
        for (Int const& sx : {x, Int(-x)})
            for (Int const& sy : {y, Int(-y)})
                out.push_back({sx, sy});
    }
    sort_unique(out);
    return out;
}

namespace {

// Last convergent of the first period: p^2 - D q^2 = (-1)^L.
std::pair<Int, Int> period_convergent(SqrtContinuedFraction const& cf)
{
    Int p_prev = 1, p = cf.a0;
    Int q_prev = 0, q = 1;
    for (std::size_t i = 0; i + 1 < cf.period.size(); ++i) {
        Int const& a = cf.period[i];
        Int const pn = a * p + p_prev; // materialize before exchange moves p
        Int const qn = a * q + q_prev;
        p_prev = std::exchange(p, pn);
        q_prev = std::exchange(q, qn);
    }
    return {p, q};
}

} // namespace

std::pair<Int, Int> pell_fundamental(Int const& Dabs)
{
    SqrtContinuedFraction const cf = periodic_sqrt_cf(Dabs);
    auto [p, q] = period_convergent(cf);
    if (cf.period.size() % 2 == 1)
        return {p * p + Dabs * q * q, 2 * p * q};
    return {p, q};
}

std::optional<std::pair<Int, Int>> negative_pell_fundamental(Int const& Dabs)
{
    SqrtContinuedFraction const cf = periodic_sqrt_cf(Dabs);
    if (cf.period.size() % 2 == 0)
        return std::nullopt;
    return period_convergent(cf);
}

Solution apply_automorph(Solution const& s, Int const& t, Int const& u, Int const& Dabs)
{
    return {t * s.x + Dabs * u * s.y, u * s.x + t * s.y};
}

namespace {

Solution apply_inverse_automorph(Solution const& s, Int const& t, Int const& u, Int const& Dabs)
{
    return {t * s.x - Dabs * u * s.y, t * s.y - u * s.x};
}

/* The orbit point with least |y|; |y| is unimodal along an orbit, and ties
 * (at most two points) go to the larger x. */
Solution canonical_in_orbit(Solution s, Int const& t, Int const& u, Int const& Dabs)
{
    auto better = [](Solution const& l, Solution const& r) {
        Int const al = abs_int(l.y), ar = abs_int(r.y);
        if (al != ar)
            return al < ar;
        if (l.x != r.x)
            return l.x > r.x;
        return l.y > r.y;
    };
    for (;;) {
        Solution const f = apply_automorph(s, t, u, Dabs);
        Solution const b = apply_inverse_automorph(s, t, u, Dabs);
        if (better(f, s))
            s = f;
        else if (better(b, s))
            s = b;
        else
            return s;
    }
}

// floor((P + sqrt(D)) / Q) with s = isqrt(D), D not a square.
Int pqa_quotient(Int const& P, Int const& Q, Int const& s)
{
    Int q;
    Int const num = P + s;
    if (Q > 0) {
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), Q.get_mpz_t());
        return q;
    }
    Int const aq = -Q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), aq.get_mpz_t());
    return -(q + 1);
}

/* One solution of r^2 - D s^2 = +-m from the PQa expansion of
 * (z + sqrt(D)) / |m|, or nullopt if Q never reaches +-1. */
std::optional<Solution> pqa_solution(Int const& D, Int const& z, Int const& mabs)
{
    Int const s = isqrt(D);
    Int P = z, Q = mabs;
    Int G2 = -z, G1 = mabs; // G_{i-2}, G_{i-1}
    Int B2 = 1, B1 = 0;
    std::set<std::pair<Int, Int>> seen;
    for (std::size_t i = 0;; ++i) {
        if (i > 0) {
            if (Q == 1 || Q == -1)
                return Solution{G1, B1};
            if (!seen.emplace(P, Q).second)
                return std::nullopt;
        }
        Int const a = pqa_quotient(P, Q, s);
        Int const G = a * G1 + G2;
        Int const B = a * B1 + B2;
        G2 = std::exchange(G1, G);
        B2 = std::exchange(B1, B);
        Int const Pn = a * Q - P;
        Int const Qn = (D - Pn * Pn) / Q;
        P = Pn;
        Q = Qn;
    }
}

} // namespace

Solution canonical_representative(Solution const& s, Int const& t, Int const& u, Int const& Dabs)
{
    return canonical_in_orbit(s, t, u, Dabs);
}

PellCertificate solve_indefinite(Int const& D, Int const& N, Int const& limit)
{
    if (D >= 0 || N == 0)
        throw UsageError("solve_indefinite: needs D < 0 and N != 0");
    Int const Dabs = -D;
    if (is_square(Dabs))
        throw DomainError("solve_indefinite: -D is a perfect square");

    PellCertificate cert;
    cert.kind = FormKind::Indefinite;
    cert.D = D;
    cert.N = N;
    auto const [t, u] = pell_fundamental(Dabs);
    cert.fundamental = std::pair{t, u};
    auto const neg = negative_pell_fundamental(Dabs);

    Factorization const fn = factor_trial(N, limit);
    if (!fn.complete()) {
        cert.complete = false;
        cert.incomplete_reason = "could not factor N = " + N.get_str() + " below the trial-division limit";
        return cert;
    }
    // f ranges over the divisors whose square divides N
    Factorization half;
    for (auto const& [p, e] : fn.primes)
        if (e >= 2)
            half.primes.emplace_back(p, e / 2);

    std::vector<Solution> found;
    for (Int const& f : divisors(half)) {
        Int const m = N / (f * f);
        Int const mabs = abs_int(m);
        auto roots = sqrt_mod(D * -1, mabs, limit);
        if (!roots) {
            cert.complete = false;
            cert.incomplete_reason = "could not factor " + mabs.get_str() + " below the trial-division limit";
            return cert;
        }
        for (Int z : *roots) {
            if (2 * z > mabs) // representative in (-|m|/2, |m|/2]
                z -= mabs;
            auto rs = pqa_solution(Dabs, z, mabs);
            if (!rs)
                continue;
            Int const norm = rs->x * rs->x - Dabs * rs->y * rs->y;
            Solution sol;
            if (norm == m) {
                sol = {f * rs->x, f * rs->y};
            } else if (norm == -m && neg) {
                auto const& [t1, u1] = *neg;
                sol = {f * (rs->x * t1 + rs->y * u1 * Dabs), f * (rs->x * u1 + rs->y * t1)};
            } else {
                continue;
            }
            if (!solves(D, N, sol))
                throw ConsistencyError("LMM produced a non-solution");
            found.push_back(sol);
            found.push_back({-sol.x, -sol.y});
        }
    }
    for (Solution& s : found)
        s = canonical_in_orbit(s, t, u, Dabs);
    sort_unique(found);
    for (Solution const& s : found)
        if (!solves(D, N, apply_automorph(s, t, u, Dabs)))
            throw ConsistencyError("automorph image is not a solution");
    cert.representatives = std::move(found);
    return cert;
}

PellCertificate solve_degenerate(Int const& D, Int const& N, Int const& limit)
{
    if (D >= 0 || !is_square(Int(-D)) || N == 0)
        throw UsageError("solve_degenerate: needs D = -k^2 and N != 0");
    Int const k = isqrt(Int(-D));
    PellCertificate cert;
    cert.kind = FormKind::Degenerate;
    cert.D = D;
    cert.N = N;
    Factorization const fn = factor_trial(N, limit);
    if (!fn.complete()) {
        cert.complete = false;
        cert.incomplete_reason = "could not factor N = " + N.get_str() + " below the trial-division limit";
        return cert;
    }
    // (x - k y)(x + k y) = N
    std::vector<Solution> out;
    for (Int const& d0 : divisors(fn)) {
        for (Int const& d : {d0, Int(-d0)}) {
            Int const e = N / d;
            Int const sum = d + e, diff = e - d;
            if (sum % 2 != 0 || diff % (2 * k) != 0)
                continue;
            out.push_back({sum / 2, diff / (2 * k)});
        }
    }
    sort_unique(out);
    cert.representatives = std::move(out);
    return cert;
}

PellCertificate solve_form(Int const& D, Int const& N, Int const& limit)
{
    if (D == 0 || N == 0)
        throw UsageError("solve_form: D and N must be nonzero");
    if (D > 0) {
        PellCertificate cert;
        cert.kind = FormKind::Definite;
        cert.D = D;
        cert.N = N;
        cert.representatives = solve_definite(D, N);
        return cert;
    }
    if (is_square(Int(-D)))
        return solve_degenerate(D, N, limit);
    return solve_indefinite(D, N, limit);
}

void check(FormProblem const& P)
{
    if (P.D == 0)
        throw UsageError("FormProblem: D must be nonzero");
    if (P.N == 0)
        throw UsageError("FormProblem: N must be nonzero");
    if (P.modulus <= 0 || P.modulus % 6 != 0)
        throw UsageError("FormProblem: modulus must be a positive multiple of 6");
}

std::optional<bool> side_condition_branch(FormProblem const& P, Int const& x, Int const& y)
{
    if (P.require_y_not_div3 && y % 3 == 0)
        return std::nullopt;
    Int const s = 9 * P.b * y;
    if ((s + x) % P.modulus == 0)
        return true;
    if ((s - x) % P.modulus == 0)
        return false;
    return std::nullopt;
}

namespace {

// Multiplicative order of [[t, Dabs u], [u, t]] modulo M.
Int automorph_order(Int const& t, Int const& u, Int const& Dabs, Int const& M)
{
    Int const a = mod_floor(t, M), b = mod_floor(Dabs * u, M), c = mod_floor(u, M);
    Int p = a, q = b, r = c, s = a; // current power [[p, q], [r, s]]
    Int n = 1;
    while (!(p == 1 % M && s == 1 % M && q == 0 && r == 0)) {
        Int const np = mod_floor(p * a + q * c, M);
        Int const nq = mod_floor(p * b + q * a, M);
        Int const nr = mod_floor(r * a + s * c, M);
        Int const ns = mod_floor(r * b + s * a, M);
        p = np, q = nq, r = nr, s = ns;
        ++n;
    }
    return n;
}

// Preference among representatives reaching the conditions equally fast.
bool smaller_witness(Solution const& l, Solution const& r)
{
    Int const al = abs_int(l.y), ar = abs_int(r.y);
    if (al != ar)
        return al < ar;
    if (l.x != r.x)
        return l.x > r.x;
    return l.y > r.y;
}

// Smallest k in [0, period) with the k-th image (forward or backward) passing.
std::optional<std::pair<Int, bool>> first_hit(FormProblem const& P, Solution const& rep, Int const& t0,
                                              Int const& u0, Int const& D0, Int const& period)
{
    Int const& M = P.modulus;
    Int const t = mod_floor(t0, M), u = mod_floor(u0, M), Dabs = mod_floor(D0, M);
    Solution f{mod_floor(rep.x, M), mod_floor(rep.y, M)};
    Solution b = f;
    for (Int k = 0; k < period; ++k) {
        if (side_condition_branch(P, f.x, f.y))
            return std::pair{k, true};
        if (side_condition_branch(P, b.x, b.y))
            return std::pair{k, false};
        Solution const nf = apply_automorph(f, t, u, Dabs);
        Solution const nb = apply_inverse_automorph(b, t, u, Dabs);
        f = {mod_floor(nf.x, M), mod_floor(nf.y, M)};
        b = {mod_floor(nb.x, M), mod_floor(nb.y, M)};
    }
    return std::nullopt;
}

} // namespace

ConditionResult solve_with_conditions(FormProblem const& P, Int const& limit)
{
    check(P);
    ConditionResult res;
    res.certificate = solve_form(P.D, P.N, limit);
    PellCertificate& cert = res.certificate;

    if (cert.kind != FormKind::Indefinite) {
        // prefer large x and y, as the list is ascending
        for (auto it = cert.representatives.rbegin(); it != cert.representatives.rend(); ++it) {
            Solution const& s = *it;
            if (auto br = side_condition_branch(P, s.x, s.y)) {
                res.witness = ConditionalSolution{s, *br};
                break;
            }
        }
        return res;
    }

    Int const Dabs = -P.D;
    auto const& [t, u] = *cert.fundamental;
    cert.orbit_period_mod = automorph_order(t, u, Dabs, P.modulus);
    std::optional<std::pair<Solution, std::pair<Int, bool>>> best;
    for (Solution const& rep : cert.representatives) {
        auto hit = first_hit(P, rep, t, u, Dabs, *cert.orbit_period_mod);
        if (hit && (!best || hit->first < best->second.first
                    || (hit->first == best->second.first && smaller_witness(rep, best->first))))
            best = std::pair{rep, *hit};
    }
    if (best) {
        Solution s = best->first;
        auto const& [k, forward] = best->second;
        for (Int i = 0; i < k; ++i)
            s = forward ? apply_automorph(s, t, u, Dabs) : apply_inverse_automorph(s, t, u, Dabs);
        auto br = side_condition_branch(P, s.x, s.y);
        if (!br || !solves(P.D, P.N, s))
            throw ConsistencyError("orbit walk produced an invalid witness");
        res.witness = ConditionalSolution{s, *br};
    }
    return res;
}

} // namespace cha
