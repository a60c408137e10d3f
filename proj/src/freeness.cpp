#include "cha/freeness.hpp"

#include "cha/arith.hpp"

#include <algorithm>

namespace cha {

char const* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Free: return "FREE";
    case Verdict::NotFree: return "NOT_FREE";
    case Verdict::Undecided: return "UNDECIDED";
    }
    return "?";
}

Int d_beta(TrinomialCubic const& K, OrderElement const& beta)
{
    Int const& a = K.a();
    Int const& b = K.b();
    auto const& [b1, b2, b3] = beta;
    return 2 * (3 * b1 + 2 * a * b3) * (3 * a * b2 * b2 - 9 * b * b2 * b3 + a * a * b3 * b3);
}

IntMatrix m_beta(TrinomialCubic const& K, OrderElement const& beta)
{
    Int const& a = K.a();
    Int const& b = K.b();
    auto const& [b1, b2, b3] = beta;
    return IntMatrix{{b1, -4 * a * a * b2 + 6 * a * b * b3, 2 * b1 + 2 * a * b3},
                     {b2, 9 * b * b2 - 2 * a * a * b3, -b2},
                     {b3, 6 * a * b2 - 9 * b * b3, -b3}};
}

bool is_generator(TrinomialCubic const& K, AssociatedOrder const& order, OrderElement const& beta)
{
    bool const by_index = abs_int(d_beta(K, beta)) == order.index;

    // The images of beta under the order basis must be a Z-basis of Z[alpha].
    FieldVector const fb = to_field(beta);
    RatMatrix images(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
        FieldVector const v = apply_hopf(K, order.basis[i], fb);
        for (std::size_t k = 0; k < 3; ++k)
            images(k, i) = v[k];
    }
    Rat const det = det3(images);
    bool const by_images = to_integer(images).has_value() && (det == 1 || det == -1);
    if (by_index != by_images)
        throw ConsistencyError("generator tests disagree for beta = (" + beta.c0.get_str() + ", "
                               + beta.c1.get_str() + ", " + beta.c2.get_str() + ")");
    return by_index;
}

bool is_generator(TrinomialCubic const& K, OrderElement const& beta)
{
    return is_generator(K, build(K), beta);
}

namespace {

Int abs_sum(OrderElement const& e)
{
    return abs_int(e.c0) + abs_int(e.c1) + abs_int(e.c2);
}

std::string describe(OrderElement const& e)
{
    return "(" + e.c0.get_str() + ", " + e.c1.get_str() + ", " + e.c2.get_str() + ")";
}

} // namespace

GeneratorCandidates generator_from_solution(TrinomialCubic const& K, AssociatedOrder const& order,
                                            Int const& x, Int const& y)
{
    Int const& a = K.a();
    Int const& b = K.b();
    bool const case1 = order.label.major == MajorCase::Case1;

    std::vector<OrderElement> integral;
    for (int r : {1, -1}) {
        Int b1;
        if (case1) {
            Int const num = r - 2 * a * y;
            if (num % 3 != 0)
                continue;
            b1 = num / 3;
        } else {
            b1 = r - (2 * a / 3) * y; // 3 | a outside case 1
        }
        for (int s : {1, -1}) {
            Int const num = 9 * b * y + s * x;
            if (num % (6 * a) != 0)
                continue;
            OrderElement const e{b1, num / (6 * a), y};
            if (std::find(integral.begin(), integral.end(), e) == integral.end())
                integral.push_back(e);
        }
    }
    if (integral.empty())
        throw NoIntegralCandidate("no integral candidate from (x, y) = (" + x.get_str() + ", " + y.get_str()
                                  + ")");
    GeneratorCandidates out;
    for (OrderElement const& e : integral) {
        if (is_generator(K, order, e))
            out.generators.push_back(e);
        else
            out.anomalies.push_back("candidate " + describe(e) + " has |d_beta| = "
                                    + abs_int(d_beta(K, e)).get_str() + " != " + order.index.get_str());
    }
    std::stable_sort(out.generators.begin(), out.generators.end(),
                     [](auto const& l, auto const& r) { return abs_sum(l) < abs_sum(r); });
    return out;
}

FormProblem form_problem(TrinomialCubic const& K, CaseLabel const& label, int sign)
{
    FormProblem P;
    P.D = 3 * K.delta();
    P.b = K.b();
    P.modulus = 6 * abs_int(K.a());
    Int const ag = K.a() * K.g();
    switch (label.major) {
    case MajorCase::Case1:
        P.N = 12 * ag;
        P.require_y_not_div3 = true;
        break;
    case MajorCase::Case2: P.N = 36 * ag; break;
    case MajorCase::Case3: P.N = 108 * ag; break;
    }
    P.N *= sign;
    return P;
}

FreenessReport decide_freeness(TrinomialCubic const& K, AssociatedOrder const& order, Int const& limit)
{
    FreenessReport rep;
    rep.label = order.label;
    rep.index = order.index;
    bool complete = true;
    for (int sign : {1, -1}) {
        FormProblem const P = form_problem(K, order.label, sign);
        ConditionResult res = solve_with_conditions(P, limit);
        rep.attempts.push_back({P.N, res.certificate, res.witness});
        if (!res.certificate.complete) {
            complete = false;
            rep.undecided_reason = res.certificate.incomplete_reason;
        }
        if (!res.witness)
            continue;
        Solution const& w = res.witness->solution;
        try {
            GeneratorCandidates cands = generator_from_solution(K, order, w.x, w.y);
            rep.anomalies.insert(rep.anomalies.end(), cands.anomalies.begin(), cands.anomalies.end());
            if (cands.generators.empty()) {
                rep.anomalies.push_back("no candidate from the witness verified as a generator");
                continue;
            }
            rep.verdict = Verdict::Free;
            rep.generator = cands.generators.front();
            rep.witness = res.witness;
            rep.undecided_reason.clear();
            return rep;
        } catch (NoIntegralCandidate const& e) {
            rep.anomalies.push_back(e.what());
        }
    }
    if (complete && rep.anomalies.empty()) {
        rep.verdict = Verdict::NotFree;
    } else {
        rep.verdict = Verdict::Undecided;
        if (rep.undecided_reason.empty())
            rep.undecided_reason = "a witness was found but produced no verified generator";
    }
    return rep;
}

FreenessReport decide_freeness(TrinomialCubic const& K, Int const& limit)
{
    return decide_freeness(K, build(K), limit);
}

std::optional<OrderElement> brute_force_generator(TrinomialCubic const& K, int bound)
{
    if (bound < 1)
        throw UsageError("brute_force_generator: bound must be positive");
    Int const index = index_closed_form(K);
    for (int b1 = -bound; b1 <= bound; ++b1)
        for (int b2 = -bound; b2 <= bound; ++b2)
            for (int b3 = -bound; b3 <= bound; ++b3) {
                OrderElement const e{b1, b2, b3};
                if (abs_int(d_beta(K, e)) == index)
                    return e;
            }
    return std::nullopt;
}

} // namespace cha
