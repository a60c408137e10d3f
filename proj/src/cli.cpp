#include "cha/cli.hpp"

#include "cha/document.hpp"
#include "cha/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <thread>

namespace cha {

namespace {

Int parse_int(std::string const& s, std::string const& what)
{
    std::string body = s;
    if (!body.empty() && body[0] == '+')
        body.erase(0, 1);
    std::size_t const digits_from = !body.empty() && body[0] == '-' ? 1 : 0;
    if (body.size() == digits_from
        || !std::all_of(body.begin() + static_cast<long>(digits_from), body.end(),
                        [](char c) { return c >= '0' && c <= '9'; }))
        throw UsageError("malformed integer for " + what + ": '" + s + "'");
    return Int(body, 10);
}

struct Range {
    Int lo, hi;
};

Range parse_range(std::string const& s, std::string const& what)
{
    // the separator is the first ':' after a possible leading sign
    std::size_t const colon = s.find(':', 1);
    if (colon == std::string::npos)
        throw UsageError(what + " must look like lo:hi, got '" + s + "'");
    return {parse_int(s.substr(0, colon), what), parse_int(s.substr(colon + 1), what)};
}

Reducedness parse_convention(std::string const& s)
{
    if (s == "strict")
        return Reducedness::Strict;
    if (s == "loose")
        return Reducedness::Loose;
    throw UsageError("--reduced-convention must be strict or loose");
}

struct CommonFlags {
    std::string convention = "strict";
    std::string limit;
};

void add_common(CLI::App* cmd, CommonFlags& f)
{
    cmd->add_option("--reduced-convention", f.convention, "strict or loose reducedness")
        ->check(CLI::IsMember({"strict", "loose"}));
    cmd->add_option("--trial-division-limit", f.limit, "trial-division bound for factorizations");
}

Options make_options(CommonFlags const& f)
{
    Options o;
    o.reducedness = parse_convention(f.convention);
    if (char const* env = std::getenv("CHA_TRIAL_DIVISION_LIMIT"); env && *env)
        o.trial_division_limit = parse_int(env, "CHA_TRIAL_DIVISION_LIMIT");
    if (!f.limit.empty())
        o.trial_division_limit = parse_int(f.limit, "--trial-division-limit");
    if (o.trial_division_limit < 2)
        throw UsageError("trial-division limit must be at least 2");
    return o;
}

int cmd_analyze(std::string const& a, std::string const& b, std::string const& format, CommonFlags const& f,
                std::ostream& out)
{
    Options const opts = make_options(f);
    Analysis const res = analyze(parse_int(a, "--a"), parse_int(b, "--b"), opts);
    if (format == "text")
        out << render_text(res.doc);
    else
        out << res.doc.dump(2) << '\n';
    switch (res.outcome) {
    case Outcome::Decided: return kExitOk;
    case Outcome::Rejected: return kExitRejected;
    case Outcome::Undecided: return kExitUndecided;
    }
    return kExitSoftware;
}

int cmd_scan(std::string const& ar, std::string const& br, std::string const& path, unsigned jobs,
             CommonFlags const& f, std::ostream& out, std::ostream& err)
{
    Options const opts = make_options(f);
    Range const ra = parse_range(ar, "--a-range");
    Range const rb = parse_range(br, "--b-range");

    std::ofstream file;
    if (!path.empty()) {
        file.open(path, std::ios::out | std::ios::trunc);
        if (!file) {
            err << "cannot open " << path << " for writing\n";
            return kExitIo;
        }
    }
    std::ostream& sink = path.empty() ? out : file;
    sink << kCsvHeader << '\n';

    std::vector<std::pair<Int, Int>> pairs;
    std::size_t total = 0;
    std::map<std::string, std::size_t> rejected;
    jobs = std::max(1u, jobs);

    auto flush = [&] {
        std::vector<ScanRow> rows(pairs.size());
        std::vector<std::exception_ptr> errors(pairs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < pairs.size();) {
                try {
                    rows[i] = scan_row(pairs[i].first, pairs[i].second, opts);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < jobs; ++t)
            pool.emplace_back(worker);
        worker();
        for (std::thread& t : pool)
            t.join();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (errors[i])
                std::rethrow_exception(errors[i]);
            if (rows[i].line)
                sink << *rows[i].line << '\n';
            else
                ++rejected[*rows[i].rejected];
        }
        pairs.clear();
    };

    std::size_t const block = 256 * jobs;
    for (Int a = ra.lo; a <= ra.hi; ++a)
        for (Int b = rb.lo; b <= rb.hi; ++b) {
            pairs.emplace_back(a, b);
            ++total;
            if (pairs.size() == block)
                flush();
        }
    flush();
    sink.flush();
    if (!sink) {
        err << "write failed" << (path.empty() ? "" : " for " + path) << '\n';
        return kExitIo;
    }

    std::size_t skipped = 0;
    std::string detail;
    for (auto const& [reason, n] : rejected) {
        skipped += n;
        detail += (detail.empty() ? "" : ", ") + reason + ": " + std::to_string(n);
    }
    err << "skipped " << skipped << " of " << total << " pairs";
    if (!detail.empty())
        err << " (" << detail << ")";
    err << '\n';
    return kExitOk;
}

int cmd_verify(VerifyConfig const& cfg, std::ostream& out)
{
    if (cfg.grid < 1)
        throw UsageError("--grid must be positive");
    bool ok = true;
    run_suites(cfg, [&](SuiteResult const& r) {
        out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << (r.checks - r.failures) << '/' << r.checks
            << " checks";
        if (r.skipped)
            out << ", " << r.skipped << " skipped";
        if (!r.passed())
            out << "; first failure: " << r.first_failure;
        out << '\n';
        ok = ok && r.passed();
    });
    return ok ? kExitOk : 1;
}

} // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Associated-order freeness and maximality for x^3 - a x + b", kToolName};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    CommonFlags analyze_flags, scan_flags;
    std::string a, b, format = "json";
    auto* analyze_cmd = app.add_subcommand("analyze", "analyze one pair (a, b)");
    analyze_cmd->add_option("--a", a, "coefficient a")->required();
    analyze_cmd->add_option("--b", b, "coefficient b")->required();
    analyze_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    add_common(analyze_cmd, analyze_flags);

    std::string a_range, b_range, out_path;
    unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* scan_cmd = app.add_subcommand("scan", "CSV row for every valid pair in a box");
    scan_cmd->add_option("--a-range", a_range, "lo:hi")->required();
    scan_cmd->add_option("--b-range", b_range, "lo:hi")->required();
    scan_cmd->add_option("--out", out_path, "output file (default stdout)");
    scan_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    add_common(scan_cmd, scan_flags);

    VerifyConfig vcfg;
    auto* verify_cmd = app.add_subcommand("verify", "run the self-check suites");
    verify_cmd->add_option("--grid", vcfg.grid, "grid bound for the exhaustive suites");
    verify_cmd->add_option("--seed", vcfg.seed, "random seed");
    verify_cmd->add_option("--inject-fault", vcfg.inject_fault)->group("");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze_cmd)
            return cmd_analyze(a, b, format, analyze_flags, out);
        if (*scan_cmd)
            return cmd_scan(a_range, b_range, out_path, jobs, scan_flags, out, err);
        return cmd_verify(vcfg, out);
    } catch (UsageError const& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (std::exception const& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitSoftware;
    }
}

} // namespace cha
