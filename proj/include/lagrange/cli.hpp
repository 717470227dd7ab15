#ifndef LAGRANGE_CLI_HPP
#define LAGRANGE_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <lagrange/errors.hpp>
#include <lagrange/identity.hpp>
#include <lagrange/json.hpp>
#include <lagrange/random.hpp>
#include <lagrange/symmetric.hpp>

namespace lagrange::cli
{

enum exit_code : int { verified = 0, mismatch = 1, usage = 2, internal = 3 };

class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// --help or --help-all; carries the formatted text.
struct help_requested {
    std::string text;
};

enum class Mode { invert, verify, random_verify };

struct CampaignConfig {
    Mode mode = Mode::verify;
    std::vector<Rational> r_coeffs;
    std::optional<Rational> root;
    int e = 1;
    int order = 8;
    int cases = 25;
    std::uint64_t seed = 42;
    int deg_min = 2;
    int deg_max = 5;
    long coeff_bound = 3;
    bool json = false;
    // 0 means one worker per hardware thread.
    unsigned jobs = 0;

    [[nodiscard]] RSpec r_spec() const { return RSpec(r_coeffs, root); }
};

namespace detail
{

inline Rational parse_flag_rational(const std::string &flag, const std::string &text)
{
    try {
        return Rational::parse(text);
    } catch (const parse_error &ex) {
        throw usage_error(flag + ": " + ex.what());
    }
}

} // namespace detail

/// Builds a validated config. Throws usage_error naming the offending flag,
/// or help_requested for --help.
inline CampaignConfig parse_args(int argc, const char *const *argv)
{
    CLI::App app{"Exact Lagrange inversion and branch-product identity verifier", "lagrange"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::vector<std::string> r_text;
    std::string root_text;
    CampaignConfig cfg;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--e", cfg.e, "ramification index e >= 1");
        sub->add_option("--order", cfg.order, "q-order N >= 1");
        sub->add_flag("--json", cfg.json, "emit JSON");
    };

    auto *invert_cmd = app.add_subcommand("invert", "solve H^e = q R(H) and print the branch data");
    auto *verify_cmd = app.add_subcommand("verify", "verify the branch-product identity for one R");
    auto *random_cmd = app.add_subcommand("random-verify", "verify the identity for seeded random R");
    for (auto *sub : {invert_cmd, verify_cmd}) {
        sub->add_option("--r", r_text, "coefficients r_0,r_1,... as rationals")->delimiter(',')->required();
        sub->add_option("--root", root_text, "designated rho with rho^e = r_0");
        add_common(sub);
    }
    add_common(random_cmd);
    random_cmd->add_option("--cases", cfg.cases, "number of random cases");
    random_cmd->add_option("--seed", cfg.seed, "64-bit generator seed");
    random_cmd->add_option("--deg-min", cfg.deg_min, "minimum degree of R");
    random_cmd->add_option("--deg-max", cfg.deg_max, "maximum degree of R");
    random_cmd->add_option("--coeff-bound", cfg.coeff_bound, "coefficients drawn from [-B, B]");
    random_cmd->add_option("--jobs", cfg.jobs, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &ex) {
        std::ostringstream text;
        std::ostringstream ignored;
        app.exit(ex, text, ignored);
        throw help_requested{text.str()};
    } catch (const CLI::ParseError &ex) {
        throw usage_error(ex.what());
    }

    if (invert_cmd->parsed()) {
        cfg.mode = Mode::invert;
    } else if (verify_cmd->parsed()) {
        cfg.mode = Mode::verify;
    } else {
        cfg.mode = Mode::random_verify;
    }

    if (cfg.e <= 0) {
        throw usage_error("--e: ramification index must be positive");
    }
    if (cfg.order <= 0) {
        throw usage_error("--order: order must be positive");
    }

    if (cfg.mode == Mode::random_verify) {
        if (cfg.cases <= 0) {
            throw usage_error("--cases: must be positive");
        }
        if (cfg.deg_min < 1 || cfg.deg_max < cfg.deg_min) {
            throw usage_error("--deg-min/--deg-max: need deg-max >= deg-min >= 1");
        }
        if (cfg.coeff_bound <= 0) {
            throw usage_error("--coeff-bound: must be positive");
        }
        return cfg;
    }

    for (const auto &t : r_text) {
        cfg.r_coeffs.push_back(detail::parse_flag_rational("--r", t));
    }
    if (!root_text.empty()) {
        cfg.root = detail::parse_flag_rational("--root", root_text);
    }
    try {
        (void)cfg.r_spec().root_for(cfg.e);
    } catch (const series_domain_error &ex) {
        const bool about_root = cfg.r_coeffs.empty() || !cfg.r_coeffs.front().is_zero();
        throw usage_error(std::string(about_root ? "--root: " : "--r: ") + ex.what());
    }
    return cfg;
}

namespace detail
{

template <class S>
std::string join(const S &values)
{
    std::string out;
    for (const auto &v : values) {
        out += (out.empty() ? "" : ", ") + v.to_string();
    }
    return out;
}

inline void print_report(std::ostream &out, const VerificationReport &rep, bool as_json)
{
    if (as_json) {
        out << to_json(rep).dump() << '\n';
        return;
    }
    out << "R      = [" << join(rep.r.coeffs()) << "]\n";
    out << "e      = " << rep.e << ", order = " << rep.order << '\n';
    out << "lhs    = [" << join(rep.lhs) << "]\n";
    out << "rhs    = [" << join(rep.rhs) << "]\n";
    out << "equal  = " << (rep.equal ? "true" : "false");
    if (rep.first_mismatch) {
        out << " (first mismatch at q^" << *rep.first_mismatch << ")";
    }
    out << '\n';
}

inline int run_invert(const CampaignConfig &cfg, std::ostream &out)
{
    const RSpec r = cfg.r_spec();
    if (cfg.e == 1) {
        const PSeries h = solve_unramified(r, cfg.order);
        if (cfg.json) {
            json j;
            j["e"] = 1;
            j["order"] = cfg.order;
            j["H"] = to_json(h);
            out << j.dump() << '\n';
        } else {
            out << "H = " << h << '\n';
        }
        return verified;
    }
    // Enough t-order that every printed power sum is known through q^order.
    const int working = cfg.e * (cfg.order + 1);
    const PuiseuxBranchSet branches = solve_ramified_branch(r, cfg.e, working);
    std::vector<Series> sums;
    for (int m = 1; m <= 2 * cfg.e; ++m) {
        sums.push_back(power_sum(branches, m, cfg.order + 1).truncated(cfg.order + 1));
    }
    if (cfg.json) {
        json j;
        j["e"] = cfg.e;
        j["order"] = cfg.order;
        j["g"] = to_json(branches.g());
        j["power_sums"] = json::array();
        for (const auto &p : sums) {
            j["power_sums"].push_back(to_json(p));
        }
        out << j.dump() << '\n';
    } else {
        out << "g = " << branches.g() << "   (t = q^(1/" << cfg.e << "))\n";
        for (std::size_t m = 0; m < sums.size(); ++m) {
            out << "p_" << m + 1 << " = " << sums[m] << '\n';
        }
    }
    return verified;
}

inline int run_random(const CampaignConfig &cfg, std::ostream &out)
{
    RandomR gen(cfg.seed);
    std::vector<RSpec> specs;
    for (int i = 0; i < cfg.cases; ++i) {
        specs.push_back(gen.next(cfg.deg_min, cfg.deg_max, cfg.coeff_bound));
    }

    const unsigned workers = cfg.jobs != 0 ? cfg.jobs : std::max(1U, std::thread::hardware_concurrency());
    std::vector<VerificationReport> reports;
    reports.reserve(specs.size());
    for (std::size_t start = 0; start < specs.size(); start += workers) {
        std::vector<std::future<VerificationReport>> batch;
        const std::size_t stop = std::min(specs.size(), start + workers);
        for (std::size_t i = start; i < stop; ++i) {
            batch.push_back(std::async(std::launch::async, [&, i] { return verify(specs[i], cfg.e, cfg.order); }));
        }
        for (auto &f : batch) {
            reports.push_back(f.get());
        }
    }

    int failures = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto &rep = reports[i];
        if (!rep.equal) {
            ++failures;
        }
        if (cfg.json) {
            print_report(out, rep, true);
        } else if (rep.equal) {
            out << "case " << i + 1 << ": R = [" << join(rep.r.coeffs()) << "] equal\n";
        } else {
            out << "case " << i + 1 << ": MISMATCH\n";
            print_report(out, rep, false);
        }
    }
    if (!cfg.json) {
        out << (reports.size() - static_cast<std::size_t>(failures)) << "/" << reports.size() << " cases verified\n";
    }
    return failures == 0 ? verified : mismatch;
}

} // namespace detail

/// Runs a validated config. Returns the process exit code.
inline int run_campaign(const CampaignConfig &cfg, std::ostream &out, std::ostream &err)
{
    try {
        switch (cfg.mode) {
            case Mode::invert:
                return detail::run_invert(cfg, out);
            case Mode::verify: {
                const VerificationReport rep = verify(cfg.r_spec(), cfg.e, cfg.order);
                detail::print_report(out, rep, cfg.json);
                return rep.equal ? verified : mismatch;
            }
            case Mode::random_verify:
                return detail::run_random(cfg, out);
        }
    } catch (const precision_exceeded &ex) {
        err << "error: precision exceeded: " << ex.what() << '\n'
            << "working-order budget: e*(N+e+2) = " << working_order_for(cfg.e, cfg.order) << " in t = q^(1/"
            << cfg.e << ")\n";
        return internal;
    } catch (const std::exception &ex) {
        err << "error: " << ex.what() << '\n';
        return internal;
    }
    return internal;
}

/// Full front end: argv in, exit code out.
inline int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CampaignConfig cfg;
    try {
        cfg = parse_args(argc, argv);
    } catch (const help_requested &help) {
        out << help.text;
        return verified;
    } catch (const usage_error &ex) {
        err << "usage error: " << ex.what() << '\n';
        return usage;
    }
    return run_campaign(cfg, out, err);
}

} // namespace lagrange::cli

#endif
