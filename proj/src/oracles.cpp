#include "cha/oracles.hpp"

#include "cha/arith.hpp"

namespace cha {

std::vector<Solution> brute_force_form(Int const& D, Int const& N, Int const& xb, Int const& yb)
{
    std::vector<Solution> out;
    for (Int y = -yb; y <= yb; ++y) {
        Int const rest = N - D * y * y;
        if (!is_square(rest))
            continue;
        Int const x = isqrt(rest);
        if (x > xb)
            continue;
        out.push_back({-x, y});
        if (x != 0)
            out.push_back({x, y});
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int representative_bound(Int const& D, Int const& N, Int const& t, Int const& u)
{
    // ceil(u * sqrt(q)) with q = |N| (t + 1) / (2 |D|), via isqrt of u^2 q rounded up
    Int const num = u * u * abs_int(N) * (t + 1);
    Int const den = 2 * abs_int(D);
    Int const q = (num + den - 1) / den;
    Int r = isqrt(q);
    if (r * r < q)
        ++r;
    return r + 1;
}

std::optional<std::vector<Solution>> bounded_representatives(Int const& D, Int const& N, Int const& cap)
{
    auto const [t, u] = pell_fundamental(-D);
    Int const yb = representative_bound(D, N, t, u);
    if (yb > cap)
        return std::nullopt;
    std::vector<Solution> out;
    for (Int y = -yb; y <= yb; ++y) {
        Int const rest = N - D * y * y;
        if (!is_square(rest))
            continue;
        Int const x = isqrt(rest);
        out.push_back({x, y});
        if (x != 0)
            out.push_back({-x, y});
    }
    return out;
}

bool same_class(Int const& D, Int const& N, Solution const& s1, Solution const& s2)
{
    Int const Dabs = abs_int(D);
    return (s1.x * s2.x - Dabs * s1.y * s2.y) % N == 0 && (s1.x * s2.y - s2.x * s1.y) % N == 0;
}

std::optional<bool> confirm_none(FormProblem const& P, Int const& cap)
{
    check(P);
    if (P.D >= 0 || is_square(Int(-P.D)))
        throw UsageError("confirm_none: indefinite problems only");
    auto sols = bounded_representatives(P.D, P.N, cap);
    if (!sols)
        return std::nullopt;
    auto const [t, u] = pell_fundamental(-P.D);
    Int const Dabs = -P.D;
    // walk each found solution until its residue pair repeats
    for (Solution s : *sols) {
        Solution const start{mod_floor(s.x, P.modulus), mod_floor(s.y, P.modulus)};
        Solution cur = start;
        do {
            if (side_condition_branch(P, cur.x, cur.y))
                return false;
            Solution const n = apply_automorph(cur, t, u, Dabs);
            cur = {mod_floor(n.x, P.modulus), mod_floor(n.y, P.modulus)};
        } while (!(cur == start));
    }
    return true;
}

} // namespace cha
