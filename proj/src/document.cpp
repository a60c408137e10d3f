#include "cha/document.hpp"

#include "cha/assocorder.hpp"
#include "cha/freeness.hpp"
#include "cha/integrality.hpp"

#include <chrono>
#include <sstream>

namespace cha {

namespace {

Json str(Int const& n)
{
    return n.get_str();
}

Json str(Rat const& r)
{
    return to_string(r);
}

Json element(OrderElement const& e)
{
    return Json::array({str(e.c0), str(e.c1), str(e.c2)});
}

Json hopf(HopfElement const& h)
{
    return Json::array({str(h[0]), str(h[1]), str(h[2])});
}

Json matrix(RatMatrix const& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(str(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json solution(Solution const& s)
{
    return Json::array({str(s.x), str(s.y)});
}

Json certificate(PellCertificate const& c)
{
    Json j;
    j["kind"] = to_string(c.kind);
    j["D"] = str(c.D);
    j["N"] = str(c.N);
    j["fundamental"] = c.fundamental ? Json::array({str(c.fundamental->first), str(c.fundamental->second)})
                                     : Json(nullptr);
    Json reps = Json::array();
    for (Solution const& s : c.representatives)
        reps.push_back(solution(s));
    j["representatives"] = reps;
    j["orbit_period_mod"] = c.orbit_period_mod ? str(*c.orbit_period_mod) : Json(nullptr);
    j["complete"] = c.complete;
    j["incomplete_reason"] = c.complete ? Json(nullptr) : Json(c.incomplete_reason);
    return j;
}

Json maximality_json(MaximalityReport const& m)
{
    Json j;
    j["verdict"] = to_string(m.verdict);
    j["maximal"] = m.is_maximal();
    j["failing_prime"] = m.failing_prime ? str(*m.failing_prime) : Json(nullptr);
    Json per = Json::array();
    for (PrimeCondition const& c : m.per_prime)
        per.push_back(Json{{"p", str(c.p)}, {"condition", c.label}, {"pass", c.pass}});
    j["per_prime"] = per;
    Json primes = Json::array();
    for (auto const& [p, e] : m.delta_factorization.primes)
        primes.push_back(Json{{"p", str(p)}, {"e", e}});
    j["delta_factorization"] = Json{{"primes", primes}, {"cofactor", str(m.delta_factorization.cofactor)}};
    return j;
}

Json freeness_json(FreenessReport const& f)
{
    Json j;
    j["verdict"] = to_string(f.verdict);
    j["generator"] = f.generator ? element(*f.generator) : Json(nullptr);
    if (f.witness)
        j["witness"] = Json{{"x", str(f.witness->solution.x)},
                            {"y", str(f.witness->solution.y)},
                            {"branch", f.witness->plus_branch ? "9by+x" : "9by-x"}};
    else
        j["witness"] = nullptr;
    Json rhs = Json::array();
    for (RhsAttempt const& r : f.attempts)
        rhs.push_back(certificate(r.certificate));
    j["checked_rhs"] = rhs;
    j["anomalies"] = f.anomalies;
    j["undecided_reason"] = f.undecided_reason.empty() ? Json(nullptr) : Json(f.undecided_reason);
    return j;
}

} // namespace

Analysis analyze(Int const& a, Int const& b, Options const& opts)
{
    auto const start = std::chrono::steady_clock::now();
    Analysis out;
    Json& d = out.doc;
    d["tool"] = Json{{"name", kToolName}, {"version", kToolVersion}};
    d["conventions"] = Json{{"reduced", to_string(opts.reducedness)},
                            {"trial_division_limit", str(opts.trial_division_limit)}};
    d["input"] = Json{{"a", str(a)}, {"b", str(b)}};

    std::optional<TrinomialCubic> K;
    try {
        K = validate(a, b, opts.reducedness);
        d["validation"] = Json{{"ok", true}, {"reason", nullptr}, {"detail", nullptr}};
    } catch (ValidationError const& e) {
        d["validation"] = Json{{"ok", false}, {"reason", to_string(e.reason())}, {"detail", e.detail()}};
        out.outcome = Outcome::Rejected;
    }

    if (K) {
        AssociatedOrder const order = build(*K);
        CombinedVerdict const cv = combined_verdict(*K, is_maximal(*K, opts.trial_division_limit),
                                                    decide_freeness(*K, order, opts.trial_division_limit));
        d["delta"] = str(K->delta());
        d["g"] = str(K->g());
        d["case"] = to_string(order.label);
        d["iw"] = str(order.index);
        d["associated_order"] = Json{{"basis", Json::array({hopf(order.basis[0]), hopf(order.basis[1]),
                                                             hopf(order.basis[2])})},
                                     {"reduced", matrix(order.reduced)},
                                     {"generic_reduced", matrix(order.generic)}};
        d["maximality"] = maximality_json(cv.maximality);
        d["freeness"] = freeness_json(cv.freeness);
        if (cv.ring_of_integers_free)
            d["ring_of_integers"] = Json{{"free", to_string(*cv.ring_of_integers_free)},
                                         {"note", "Z[alpha] is the ring of integers"}};
        else
            d["ring_of_integers"] = Json{{"free", nullptr},
                                         {"note", "Z[alpha] is not known to be maximal; the verdict covers Z[alpha] only"}};
        if (cv.freeness.verdict == Verdict::Undecided
            || cv.maximality.verdict == Maximality::UndecidedFactorization)
            out.outcome = Outcome::Undecided;
    }

    auto const us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    d["timing_us"] = static_cast<long long>(us.count());
    return out;
}

namespace {

std::string scalar(Json const& j)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_null())
        return "-";
    return j.dump();
}

std::string vec(Json const& j)
{
    if (!j.is_array())
        return scalar(j);
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i)
        s += (i ? ", " : "") + vec(j[i]);
    return s + ")";
}

} // namespace

std::string render_text(Json const& d)
{
    std::ostringstream os;
    os << "a = " << scalar(d["input"]["a"]) << ", b = " << scalar(d["input"]["b"]) << '\n';
    if (!d["validation"]["ok"].get<bool>()) {
        os << "rejected: " << scalar(d["validation"]["reason"]) << " (" << scalar(d["validation"]["detail"])
           << ")\n";
        return os.str();
    }
    os << "delta = " << scalar(d["delta"]) << ", g = " << scalar(d["g"]) << '\n';
    os << "case " << scalar(d["case"]) << ", I_W = " << scalar(d["iw"]) << '\n';
    os << "associated order basis (W-coordinates):\n";
    for (Json const& v : d["associated_order"]["basis"])
        os << "  " << vec(v) << '\n';
    Json const& m = d["maximality"];
    os << "maximality: " << scalar(m["verdict"]);
    if (!m["failing_prime"].is_null())
        os << " (fails at p = " << scalar(m["failing_prime"]) << ")";
    os << '\n';
    Json const& f = d["freeness"];
    os << "Z[alpha] freeness: " << scalar(f["verdict"]) << '\n';
    if (!f["generator"].is_null())
        os << "  generator " << vec(f["generator"]) << '\n';
    if (!f["witness"].is_null())
        os << "  from (x, y) = (" << scalar(f["witness"]["x"]) << ", " << scalar(f["witness"]["y"]) << ")\n";
    for (Json const& r : f["checked_rhs"])
        os << "  N = " << scalar(r["N"]) << ": " << scalar(r["kind"]) << ", " << r["representatives"].size()
           << " representative(s)" << (r["complete"].get<bool>() ? "" : ", incomplete") << '\n';
    if (!f["undecided_reason"].is_null())
        os << "  undecided: " << scalar(f["undecided_reason"]) << '\n';
    os << "O_L freeness: " << scalar(d["ring_of_integers"]["free"]) << '\n';
    os << "time: " << scalar(d["timing_us"]) << " us\n";
    return os.str();
}

ScanRow scan_row(Int const& a, Int const& b, Options const& opts)
{
    ScanRow row;
    std::optional<TrinomialCubic> K;
    try {
        K = validate(a, b, opts.reducedness);
    } catch (ValidationError const& e) {
        row.rejected = to_string(e.reason());
        return row;
    }
    AssociatedOrder const order = build(*K);
    MaximalityReport const m = is_maximal(*K, opts.trial_division_limit);
    FreenessReport const f = decide_freeness(*K, order, opts.trial_division_limit);
    std::string maximal = m.verdict == Maximality::Maximal      ? "true"
                          : m.verdict == Maximality::NotMaximal ? "false"
                                                                : "undecided";
    std::ostringstream os;
    os << a.get_str() << ',' << b.get_str() << ',' << K->delta().get_str() << ',' << K->g().get_str() << ','
       << to_string(order.label) << ',' << order.index.get_str() << ',' << maximal << ',' << to_string(f.verdict);
    if (f.generator)
        os << ',' << f.generator->c0.get_str() << ',' << f.generator->c1.get_str() << ','
           << f.generator->c2.get_str();
    else
        os << ",,,";
    row.line = os.str();
    return row;
}

} // namespace cha
