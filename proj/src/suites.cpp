#include "cha/suites.hpp"

#include "cha/arith.hpp"
#include "cha/assocorder.hpp"
#include "cha/document.hpp"
#include "cha/freeness.hpp"
#include "cha/integrality.hpp"
#include "cha/oracles.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace cha {

void SuiteResult::expect(bool ok, std::string const& what)
{
    ++checks;
    if (ok)
        return;
    if (failures++ == 0)
        first_failure = what;
}

namespace {

using Rng = std::mt19937_64;

Int uniform(Rng& rng, long long lo, long long hi)
{
    return Int(std::to_string(std::uniform_int_distribution<long long>(lo, hi)(rng)));
}

template <typename F>
void for_each_validated(long bound, F&& fn)
{
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            if (a == 0 || b == 0)
                continue;
            std::optional<TrinomialCubic> K;
            try {
                K = validate(a, b);
            } catch (ValidationError const&) {
                continue;
            }
            fn(*K);
        }
}

std::string pair_tag(TrinomialCubic const& K)
{
    return "(a, b) = (" + K.a().get_str() + ", " + K.b().get_str() + ")";
}

TrinomialCubic random_cubic(Rng& rng, long long bound)
{
    for (;;) {
        Int const a = uniform(rng, -bound, bound);
        Int const b = uniform(rng, -bound, bound);
        try {
            return validate(a, b);
        } catch (ValidationError const&) {
        }
    }
}

void euclid_suite(SuiteResult& s, VerifyConfig const& cfg, Rng& rng)
{
    long const count = 500 * cfg.grid;
    for (long k = 0; k < count; ++k) {
        Int const x = uniform(rng, -1'000'000'000, 1'000'000'000);
        Int y = uniform(rng, -1'000'000'000, 1'000'000'000);
        if (y == 0)
            y = 1;
        std::string const tag = "(x, y) = (" + x.get_str() + ", " + y.get_str() + ")";
        EuclidTrace const t = euclid_trace(x, y);
        long const n = static_cast<long>(t.n());
        bool ok = t.r(n) > 0 && t.r(n) == gcd(x, y) && t.r(n + 1) == 0;
        for (long i = -1; i <= n - 1; ++i)
            ok = ok && t.r(i) == t.quotients[i + 1] * t.r(i + 1) + t.r(i + 2);
        ok = ok && t.mu[0] == 0 && t.mu[1] == 1 && t.nu[0] == 1 && t.nu[1] == -t.quotients[0];
        for (long i = 2; i <= n + 1; ++i)
            ok = ok && t.mu[i] == -t.quotients[i - 1] * t.mu[i - 1] + t.mu[i - 2]
                 && t.nu[i] == -t.quotients[i - 1] * t.nu[i - 1] + t.nu[i - 2];
        for (long i = 0; i <= n + 1; ++i)
            ok = ok && t.r(i) == t.mu[i] * x + t.nu[i] * y;
        Int const sign = n % 2 == 0 ? 1 : -1;
        ok = ok && t.mu[n + 1] == sign * y / t.r(n) && t.nu[n + 1] == -sign * x / t.r(n);
        s.expect(ok, "trace invariant at " + tag);

        ConvergentList const c = convergents(t);
        bool cok = c.p.size() == static_cast<std::size_t>(n + 1);
        for (long i = 0; cok && i <= n; ++i) {
            cok = gcd(c.p[i], c.q[i]) == 1;
            if (i >= 2)
                cok = cok && c.p[i] == t.quotients[i] * c.p[i - 1] + c.p[i - 2]
                      && c.q[i] == t.quotients[i] * c.q[i - 1] + c.q[i - 2];
        }
        for (long i = 1; cok && i <= n + 1; ++i) {
            Int const si = i % 2 == 1 ? 1 : -1; // (-1)^(i-1)
            cok = t.mu[i] == si * c.q[i - 1] && t.nu[i] == -si * c.p[i - 1];
        }
        cok = cok && c.p[n] * t.r(n) == x && c.q[n] * t.r(n) == y;
        s.expect(cok, "convergent identity at " + tag);
    }
}

void pell_suite(SuiteResult& s, VerifyConfig const& cfg, Rng&)
{
    for (long D = 2; D <= 25 * cfg.grid; ++D) {
        Int const d(D);
        if (is_square(d))
            continue;
        auto const [t, u] = pell_fundamental(d);
        s.expect(t > 0 && u > 0 && t * t - d * u * u == 1, "Pell equation for D = " + d.get_str());
        if (auto neg = negative_pell_fundamental(d))
            s.expect(neg->first * neg->first - d * neg->second * neg->second == -1,
                     "negative Pell equation for D = " + d.get_str());
        // minimality against a short search, where the search is cheap
        if (u <= 10'000) {
            Int first = 0;
            for (Int v = 1; v <= u; ++v)
                if (is_square(d * v * v + 1)) {
                    first = v;
                    break;
                }
            s.expect(first == u, "Pell minimality for D = " + d.get_str());
        }
    }
}

void identity_suite(SuiteResult& s, VerifyConfig const& cfg, Rng& rng)
{
    long const count = 50 * cfg.grid;
    for (long k = 0; k < count; ++k) {
        TrinomialCubic const K = random_cubic(rng, 1'000'000);
        std::string const tag = pair_tag(K);
        s.expect(verify_sqrt_identity(K), "sqrt identity at " + tag);
        bool comp = true;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t g = 0; g < 3; ++g) {
                    FieldVector const gamma = to_field(power_basis(g));
                    FieldVector const lhs = apply_hopf(K, hopf_basis(i), apply_hopf(K, hopf_basis(j), gamma));
                    FieldVector const rhs = apply_hopf(K, hopf_mul(K, hopf_basis(i), hopf_basis(j)), gamma);
                    comp = comp && lhs == rhs;
                }
        s.expect(comp, "composition law at " + tag);
        bool tr = true;
        for (std::size_t g = 0; g < 3; ++g) {
            FieldVector const v = apply_hopf(K, HopfElement{1, 0, 1}, to_field(power_basis(g)));
            tr = tr && v == FieldVector{Rat(trace(K, power_basis(g))), 0, 0};
        }
        s.expect(tr, "trace identity at " + tag);
        GramMatrix const G = gram_matrix(K);
        IntMatrix const M = action_matrix(K);
        bool am = true;
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t kk = 0; kk < 3; ++kk)
                for (std::size_t i = 0; i < 3; ++i)
                    am = am && M(3 * j + kk, i) == G[i][j][kk];
        s.expect(am, "action matrix layout at " + tag);
    }
}

void index_suite(SuiteResult& s, VerifyConfig const& cfg, Rng&)
{
    for_each_validated(cfg.grid, [&](TrinomialCubic const& K) {
        std::string const tag = pair_tag(K);
        IntMatrix const M = action_matrix(K);
        ReductionResult const r1 = reduce_tall(to_rational(M), Pivoting::LeastAbsolute);
        ReductionResult const r2 = reduce_tall(to_rational(M), Pivoting::FirstNonzero);
        Int const want = index_closed_form(K);
        s.expect(abs(det3(r1.D)) == Rat(want), "index table at " + tag);
        s.expect(abs(det3(r2.D)) == Rat(want), "index under the second pivoting at " + tag);
        Int const du = determinant(r1.U);
        s.expect(du == 1 || du == -1, "unimodular U at " + tag);
        RatMatrix const UM = to_rational(r1.U) * to_rational(M);
        bool shape = true;
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                shape = shape && UM(i, j) == (i < 3 ? r1.D(i, j) : Rat(0));
        s.expect(shape, "U M = [D; 0] at " + tag);
        s.expect(same_lattice(closed_form_reduced(K), r1.D), "closed form lattice at " + tag);
        Int const h = classify(K).major == MajorCase::Case1 ? gcd(2 * K.a(), 9 * K.b())
                                                            : gcd(6 * K.a(), 9 * K.b());
        s.expect(h == h_closed_form(K), "gcd closed form at " + tag);
    });
}

void order_suite(SuiteResult& s, VerifyConfig const& cfg, Rng& rng)
{
    for_each_validated(std::min(cfg.grid, 12L), [&](TrinomialCubic const& K) {
        std::string const tag = pair_tag(K);
        AssociatedOrder const o = build(K);
        bool stable = true;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (Rat const& c : apply_hopf(K, o.basis[i], to_field(power_basis(j))))
                    stable = stable && c.get_den() == 1;
        s.expect(stable, "basis maps Z[alpha] into itself at " + tag);
        bool ring = true;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (Rat const& c : basis_coordinates(o, hopf_mul(K, o.basis[i], o.basis[j])))
                    ring = ring && c.get_den() == 1;
        s.expect(ring, "basis closed under products at " + tag);
        for (int k = 0; k < 8; ++k) {
            HopfElement h;
            for (Rat& c : h)
                c = make_rat(uniform(rng, -40, 40), uniform(rng, 1, 36));
            bool by_basis = true;
            for (Rat const& c : basis_coordinates(o, h))
                by_basis = by_basis && c.get_den() == 1;
            s.expect(contains(o, h) == by_basis, "membership tests agree at " + tag);
        }
    });
}

void definite_suite(SuiteResult& s, VerifyConfig const& cfg, Rng& rng)
{
    for (long k = 0; k < 20 * cfg.grid; ++k) {
        Int const D = uniform(rng, 1, 500);
        Int N = uniform(rng, -10'000, 10'000);
        if (N == 0)
            N = 1;
        Int const yb = N > 0 ? isqrt(Int(N / D)) + 1 : Int(1);
        s.expect(solve_definite(D, N) == brute_force_form(D, N, abs_int(N), yb),
                 "definite solutions for D = " + D.get_str() + ", N = " + N.get_str());
    }
}

void indefinite_suite(SuiteResult& s, VerifyConfig const& cfg, Rng& rng)
{
    for (long k = 0; k < 10 * cfg.grid; ++k) {
        Int const Dabs = uniform(rng, 2, 500);
        if (is_square(Dabs)) {
            ++s.skipped;
            continue;
        }
        Int N = uniform(rng, -10'000, 10'000);
        if (N == 0)
            N = 1;
        Int const D = -Dabs;
        std::string const tag = "D = " + D.get_str() + ", N = " + N.get_str();
        PellCertificate const c = solve_indefinite(D, N);
        auto const [t, u] = *c.fundamental;
        std::set<std::pair<Int, Int>> reps;
        bool ok = c.complete;
        for (Solution const& r : c.representatives) {
            ok = ok && r.x * r.x + D * r.y * r.y == N && canonical_representative(r, t, u, Dabs) == r;
            reps.emplace(r.x, r.y);
        }
        for (Solution const& b : brute_force_form(D, N, Int(2000), Int(2000))) {
            Solution const cr = canonical_representative(b, t, u, Dabs);
            ok = ok && reps.count({cr.x, cr.y}) == 1;
        }
        s.expect(ok, "indefinite representatives for " + tag);
        // the fundamental-domain search sees every orbit
        if (auto bounded = bounded_representatives(D, N, Int(200'000))) {
            std::set<std::pair<Int, Int>> seen;
            for (Solution const& b : *bounded) {
                Solution const cr = canonical_representative(b, t, u, Dabs);
                seen.emplace(cr.x, cr.y);
            }
            s.expect(seen == reps, "bounded search orbit set for " + tag);
        } else {
            ++s.skipped;
        }
    }
}

void freeness_suite(SuiteResult& s, VerifyConfig const& cfg, Rng& rng)
{
    for_each_validated(cfg.grid, [&](TrinomialCubic const& K) {
        std::string const tag = pair_tag(K);
        AssociatedOrder const o = build(K);
        FreenessReport const f = decide_freeness(K, o);
        auto const bf = brute_force_generator(K, 12);
        s.expect(f.verdict != Verdict::Undecided, "decided verdict at " + tag);
        if (bf)
            s.expect(f.verdict != Verdict::NotFree, "box generator vs NOT_FREE at " + tag);
        if (f.verdict == Verdict::NotFree)
            s.expect(!bf, "NOT_FREE vs box search at " + tag);
        if (f.verdict == Verdict::Free)
            s.expect(f.generator && is_generator(K, o, *f.generator)
                         && abs_int(d_beta(K, *f.generator)) == o.index,
                     "FREE generator verifies at " + tag);
        s.expect(f.anomalies.empty(), "no anomalies at " + tag);
        if (f.verdict == Verdict::NotFree) {
            for (RhsAttempt const& r : f.attempts) {
                if (r.certificate.kind != FormKind::Indefinite)
                    continue;
                FormProblem const P = form_problem(K, o.label, r.N > 0 ? 1 : -1);
                auto none = confirm_none(P, Int(100'000));
                if (!none)
                    ++s.skipped;
                else
                    s.expect(*none, "NONE re-verified by bounded search at " + tag);
            }
        }
        OrderElement const beta{uniform(rng, -50, 50), uniform(rng, -50, 50), uniform(rng, -50, 50)};
        s.expect(determinant(m_beta(K, beta)) == d_beta(K, beta), "d_beta closed form at " + tag);
        OrderElement const neg{-beta.c0, -beta.c1, -beta.c2};
        s.expect(is_generator(K, o, beta) == is_generator(K, o, neg), "generator sign symmetry at " + tag);
    });
}

void alaca_suite(SuiteResult& s, VerifyConfig const& cfg, Rng&)
{
    for_each_validated(cfg.grid, [&](TrinomialCubic const& K) {
        std::string const tag = pair_tag(K);
        std::vector<Int> primes{2, 3};
        for (auto const& [p, e] : factor_trial(K.delta(), Int(1'000'000)).primes)
            if (p > 3 && e >= 2)
                primes.push_back(p);
        for (Int const& p : primes)
            s.expect(alaca_condition(K, p).pass == dedekind_check(K, p),
                     "table vs Dedekind at " + tag + ", p = " + p.get_str());
        for (long q : {5L, 7L, 11L, 13L, 17L, 19L})
            if (K.delta() % q != 0)
                s.expect(alaca_condition(K, Int(q)).pass, "vacuous prime passes at " + tag);
        MaximalityReport const m = is_maximal(K);
        if (m.is_maximal()) {
            bool ok = true;
            try {
                CombinedVerdict const cv = combined_verdict(K, m, decide_freeness(K));
                ok = cv.ring_case && *cv.ring_case == classify(K).major;
            } catch (ConsistencyError const&) {
                ok = false;
            }
            s.expect(ok, "maximal case split matches the case label at " + tag);
        }
    });
}

void json_suite(SuiteResult& s, VerifyConfig const& cfg, Rng&)
{
    long const bound = std::min(cfg.grid, 4L);
    for (long a = -bound; a <= bound; ++a)
        for (long b = -bound; b <= bound; ++b) {
            Json const doc = analyze(a, b, Options{}).doc;
            std::string const once = doc.dump(2);
            s.expect(Json::parse(once).dump(2) == once,
                     "JSON round trip at (a, b) = (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        }
}

struct Suite {
    char const* name;
    void (*run)(SuiteResult&, VerifyConfig const&, Rng&);
};

constexpr Suite kSuites[] = {
    {"euclid", euclid_suite},
    {"pell", pell_suite},
    {"identities", identity_suite},
    {"index-table", index_suite},
    {"order-basis", order_suite},
    {"definite-forms", definite_suite},
    {"indefinite-forms", indefinite_suite},
    {"freeness-oracle", freeness_suite},
    {"alaca-dedekind", alaca_suite},
    {"json-roundtrip", json_suite},
};

} // namespace

std::vector<std::string> suite_names()
{
    std::vector<std::string> out;
    for (Suite const& s : kSuites)
        out.emplace_back(s.name);
    return out;
}

std::vector<SuiteResult> run_suites(VerifyConfig const& cfg, std::function<void(SuiteResult const&)> const& progress)
{
    std::vector<SuiteResult> out;
    for (Suite const& suite : kSuites) {
        SuiteResult r;
        r.name = suite.name;
        Rng rng(cfg.seed);
        try {
            suite.run(r, cfg, rng);
        } catch (std::exception const& e) {
            r.expect(false, std::string("exception: ") + e.what());
        }
        if (cfg.inject_fault == r.name)
            r.expect(false, "injected fault");
        if (progress)
            progress(r);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace cha
