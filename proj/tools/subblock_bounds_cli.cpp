// Command-line front end: exact sphere-packing-style upper bounds for
// subblock-constrained binary codes, optimality-certificate checks,
// brute-force cross-validation, and asymptotic rate tables.

#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sbb/sbb.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sbb;

constexpr const char *kTool = "subblock-bounds";

/// "p/q (≈decimal)" for fractions, bare digits for integers.
std::string value_with_decimal(const ExactRational &v, int decimals) {
    std::string out = rational_string(v);
    if (denominator(v) != 1)
        out += " (≈" + decimal_string(v, decimals) + ")";
    return out;
}

void emit_json(const std::string &command, ordered_json parameters,
               ordered_json results) {
    ordered_json envelope;
    envelope["tool"] = kTool;
    envelope["version"] = kVersion;
    envelope["command"] = command;
    envelope["parameters"] = std::move(parameters);
    envelope["results"] = std::move(results);
    std::cout << envelope.dump(2) << "\n";
}

struct BoundArgs {
    int m = 0;
    int L = 0;
    int w = 0;
    int d = 0;
    std::string method = "lp";
    std::string format = "plain";
    int decimals = 3;
};

ExactRational closed_form_bound(Family family, const BoundArgs &a) {
    const int t = (a.d - 1) / 2;
    if (family == Family::cscc) {
        if (t == 1)
            return cscc_closed_form_t1(a.m, a.L, a.w);
        if (t == 2)
            return cscc_closed_form_t2(a.m, a.L, a.w);
        throw domain_error("closed forms cover distances 3..6 only");
    }
    if (t != 1)
        throw domain_error("closed forms cover distances 3..4 only");
    if (a.m == 1 && 2 * a.w >= a.L)
        return secc_closed_form_m1(a.L, a.w);
    if (a.w == a.L - 1)
        return secc_closed_form_wL1(a.m, a.L);
    throw domain_error("closed forms cover m = 1 (with w >= L/2) or "
                       "w = L-1 (with L >= m/2) only");
}

int run_bound(Family family, const BoundArgs &a) {
    try {
        if (family == Family::cscc)
            validate(CsccInstance{a.m, a.L, a.w, a.d});
        else
            validate(SeccInstance{a.m, a.L, a.w, a.d});
    } catch (const domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<std::pair<std::string, ExactRational>> values;
    if (a.method == "closed" || a.method == "both") {
        try {
            values.emplace_back("closed", closed_form_bound(family, a));
        } catch (const domain_error &e) {
            std::cerr << "error: " << e.what() << "\n";
            return 3;
        }
    }
    if (a.method == "lp" || a.method == "both") {
        values.emplace_back("lp",
                            family == Family::cscc
                                ? cscc_gsp_bound(CsccInstance{a.m, a.L, a.w,
                                                              a.d})
                                : secc_gsp_bound(SeccInstance{a.m, a.L, a.w,
                                                              a.d}));
    }
    const bool both = values.size() == 2;
    const bool agree = !both || values[0].second == values[1].second;

    const std::string command =
        family == Family::cscc ? "cscc-bound" : "secc-bound";
    if (a.format == "plain") {
        if (!both) {
            std::cout << value_with_decimal(values.front().second, a.decimals)
                      << "\n";
        } else {
            for (const auto &[name, v] : values)
                std::cout << name << ": " << value_with_decimal(v, a.decimals)
                          << "\n";
            std::cout << "agree: " << (agree ? "yes" : "no") << "\n";
        }
    } else if (a.format == "csv") {
        std::cout << "m,L,w,d,method,value,decimal\n";
        for (const auto &[name, v] : values)
            std::cout << a.m << ',' << a.L << ',' << a.w << ',' << a.d << ','
                      << name << ',' << rational_string(v) << ','
                      << decimal_string(v, a.decimals) << "\n";
    } else {
        ordered_json rows = ordered_json::array();
        for (const auto &[name, v] : values)
            rows.push_back({{"method", name},
                            {"value", rational_string(v)},
                            {"decimal", decimal_string(v, a.decimals)}});
        ordered_json results;
        results["values"] = std::move(rows);
        if (both)
            results["agree"] = agree;
        emit_json(command,
                  ordered_json{{"m", a.m},
                               {"L", a.L},
                               {"w", a.w},
                               {"d", a.d},
                               {"method", a.method},
                               {"decimals", a.decimals}},
                  std::move(results));
    }
    return agree ? 0 : 5;
}

struct CertifyArgs {
    int table = 0;
    int m = 0;
    int L = 0;
    int w = 0;
    bool has_m = false;
    bool has_L = false;
    bool has_w = false;
    std::string format = "plain";
    int decimals = 3;
};

int run_certify(const CertifyArgs &a) {
    Certificate cert;
    ReducedLP lp;
    ordered_json parameters;
    try {
        if (a.table == 1) {
            if (!a.has_m || !a.has_L) {
                std::cerr << "error: --table=1 requires -m and -L\n";
                return 2;
            }
            cert = build_certificate_table1(a.m, a.L);
            lp = secc_reduced_lp(a.m, a.L, a.L - 1, 1);
            parameters = {{"table", 1}, {"m", a.m}, {"L", a.L},
                          {"decimals", a.decimals}};
        } else {
            if (!a.has_L || !a.has_w) {
                std::cerr << "error: --table=2 requires -L and -w\n";
                return 2;
            }
            cert = build_certificate_table2(a.L, a.w);
            lp = secc_reduced_lp(1, a.L, a.w, 1);
            parameters = {{"table", 2}, {"L", a.L}, {"w", a.w},
                          {"decimals", a.decimals}};
        }
    } catch (const domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    const VerifyResult vr = verify_certificate(lp, cert);
    if (a.format == "plain") {
        std::cout << "verdict: " << to_string(vr.verdict) << "\n"
                  << "primal: " << value_with_decimal(vr.primal_value,
                                                      a.decimals)
                  << "\n"
                  << "dual: " << value_with_decimal(vr.dual_value, a.decimals)
                  << "\n";
    } else if (a.format == "csv") {
        const int m = a.table == 1 ? a.m : 1;
        const int w = a.table == 1 ? a.L - 1 : a.w;
        std::cout << "table,m,L,w,verdict,primal,dual\n"
                  << a.table << ',' << m << ',' << a.L << ',' << w << ','
                  << to_string(vr.verdict) << ','
                  << rational_string(vr.primal_value) << ','
                  << rational_string(vr.dual_value) << "\n";
    } else {
        emit_json("certify", std::move(parameters),
                  ordered_json{
                      {"verdict", to_string(vr.verdict)},
                      {"primal", rational_string(vr.primal_value)},
                      {"primal_decimal",
                       decimal_string(vr.primal_value, a.decimals)},
                      {"dual", rational_string(vr.dual_value)},
                      {"dual_decimal",
                       decimal_string(vr.dual_value, a.decimals)}});
    }
    return vr.verdict == Verdict::valid ? 0 : 4;
}

struct OracleArgs {
    std::string family = "cscc";
    int m = 0;
    int L = 0;
    int w = 0;
    int d = 0;
    std::string format = "plain";
    int decimals = 3;
};

int run_oracle_compare(const OracleArgs &a) {
    const Family family =
        a.family == "cscc" ? Family::cscc : Family::secc;
    try {
        if (family == Family::cscc)
            validate(CsccInstance{a.m, a.L, a.w, a.d});
        else
            validate(SeccInstance{a.m, a.L, a.w, a.d});
    } catch (const domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const int t = (a.d - 1) / 2;
    const ReducedLP reduced = family == Family::cscc
                                  ? cscc_reduced_lp(a.m, a.L, a.w, t)
                                  : secc_reduced_lp(a.m, a.L, a.w, t);
    const ExactRational reduced_value = solve_min(reduced).value;

    // Small programs are re-solved outright; larger ones are certified by
    // lifting the reduced optimum, which proves equality without a solve.
    const FullLp full = full_lp(family, a.m, a.L, a.w, t);
    bool equality = false;
    bool full_known = false;
    ExactRational full_value;
    if (full.space.size() * full.targets.size() <= 40000) {
        full_value = solve_min(full.to_covering()).value;
        full_known = true;
        equality = full_value == reduced_value;
    } else {
        equality = reduction_is_lossless(full, reduced);
        if (equality) {
            full_value = reduced_value;
            full_known = true;
        }
    }

    const std::size_t code = exhaustive_code_size(family, a.m, a.L, a.w, a.d);
    const bool validity =
        ExactRational(static_cast<long>(code)) <= reduced_value;

    const std::string full_text =
        full_known ? rational_string(full_value) : std::string("unknown");
    if (a.format == "plain") {
        std::cout << "reduced: " << value_with_decimal(reduced_value,
                                                       a.decimals)
                  << "\n"
                  << "full: "
                  << (full_known
                          ? value_with_decimal(full_value, a.decimals)
                          : std::string("unknown"))
                  << "\n"
                  << "code: " << code << "\n"
                  << "reduction-equality: " << (equality ? "pass" : "fail")
                  << "\n"
                  << "bound-validity: " << (validity ? "pass" : "fail")
                  << "\n";
    } else if (a.format == "csv") {
        std::cout << "family,m,L,w,d,reduced,full,code,reduction_equality,"
                     "bound_validity\n"
                  << a.family << ',' << a.m << ',' << a.L << ',' << a.w << ','
                  << a.d << ',' << rational_string(reduced_value) << ','
                  << full_text << ',' << code << ','
                  << (equality ? "true" : "false") << ','
                  << (validity ? "true" : "false") << "\n";
    } else {
        ordered_json results;
        results["reduced"] = rational_string(reduced_value);
        results["reduced_decimal"] = decimal_string(reduced_value, a.decimals);
        if (full_known) {
            results["full"] = rational_string(full_value);
            results["full_decimal"] = decimal_string(full_value, a.decimals);
        } else {
            results["full"] = nullptr;
            results["full_decimal"] = nullptr;
        }
        results["code"] = code;
        results["reduction_equality"] = equality;
        results["bound_validity"] = validity;
        emit_json("oracle-compare",
                  ordered_json{{"family", a.family},
                               {"m", a.m},
                               {"L", a.L},
                               {"w", a.w},
                               {"d", a.d},
                               {"decimals", a.decimals}},
                  std::move(results));
    }
    return (equality && validity) ? 0 : 5;
}

struct RateArgs {
    std::string family = "cscc";
    int L = 0;
    std::vector<int> weights;
    std::string delta;
    std::string format = "csv";
};

int run_rate_table(const RateArgs &a) {
    const Family family =
        a.family == "cscc" ? Family::cscc : Family::secc;
    try {
        const DeltaGrid grid = parse_delta_range(a.delta);
        std::vector<RateTable> tables;
        tables.reserve(a.weights.size());
        for (int w : a.weights)
            tables.push_back(make_rate_table(family, a.L, w, grid));
        std::cout << render_csv(tables);
    } catch (const domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact sphere-packing-style upper bounds for binary codes "
                 "with per-subblock weight constraints"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    const std::vector<std::string> formats{"plain", "csv", "json"};
    const std::vector<std::string> methods{"lp", "closed", "both"};
    const std::vector<std::string> families{"cscc", "secc"};

    BoundArgs cscc_args, secc_args;
    for (auto [sub_name, args] :
         {std::pair{"cscc-bound", &cscc_args}, {"secc-bound", &secc_args}}) {
        CLI::App *sub = app.add_subcommand(
            sub_name,
            std::string(args == &cscc_args
                            ? "Upper bound for exact-weight subblocks"
                            : "Upper bound for at-least-weight subblocks"));
        sub->add_option("-m", args->m, "number of subblocks")->required();
        sub->add_option("-L", args->L, "subblock length")->required();
        sub->add_option("-w", args->w, "subblock weight")->required();
        sub->add_option("-d", args->d, "minimum distance")->required();
        sub->add_option("--method", args->method,
                        "computation route (lp|closed|both)")
            ->check(CLI::IsMember(methods));
        sub->add_option("--format", args->format, "output format")
            ->check(CLI::IsMember(formats));
        sub->add_option("--decimals", args->decimals,
                        "decimal places for approximate renderings")
            ->check(CLI::Range(0, 30));
    }

    CertifyArgs certify_args;
    {
        CLI::App *sub = app.add_subcommand(
            "certify", "Verify a built-in optimality certificate");
        sub->add_option("--table", certify_args.table,
                        "certificate family (1: w=L-1 by m; 2: m=1 by L,w)")
            ->required()
            ->check(CLI::IsMember(std::vector<int>{1, 2}));
        CLI::Option *om = sub->add_option("-m", certify_args.m,
                                          "number of subblocks (table 1)");
        CLI::Option *oL = sub->add_option("-L", certify_args.L,
                                          "subblock length");
        CLI::Option *ow = sub->add_option("-w", certify_args.w,
                                          "weight threshold (table 2)");
        sub->add_option("--format", certify_args.format, "output format")
            ->check(CLI::IsMember(formats));
        sub->add_option("--decimals", certify_args.decimals,
                        "decimal places for approximate renderings")
            ->check(CLI::Range(0, 30));
        sub->callback([&certify_args, om, oL, ow]() {
            certify_args.has_m = om->count() > 0;
            certify_args.has_L = oL->count() > 0;
            certify_args.has_w = ow->count() > 0;
        });
    }

    OracleArgs oracle_args;
    {
        CLI::App *sub = app.add_subcommand(
            "oracle-compare",
            "Cross-check the reduced bound against brute force");
        sub->add_option("family", oracle_args.family, "code family")
            ->required()
            ->check(CLI::IsMember(families));
        sub->add_option("m", oracle_args.m, "number of subblocks")->required();
        sub->add_option("L", oracle_args.L, "subblock length")->required();
        sub->add_option("w", oracle_args.w, "subblock weight")->required();
        sub->add_option("d", oracle_args.d, "minimum distance")->required();
        sub->add_option("--format", oracle_args.format, "output format")
            ->check(CLI::IsMember(formats));
        sub->add_option("--decimals", oracle_args.decimals,
                        "decimal places for approximate renderings")
            ->check(CLI::Range(0, 30));
    }

    RateArgs rate_args;
    {
        CLI::App *sub = app.add_subcommand(
            "rate-table", "Asymptotic rate bounds over a distance grid");
        sub->add_option("family", rate_args.family, "code family")
            ->required()
            ->check(CLI::IsMember(families));
        sub->add_option("-L", rate_args.L, "subblock length")->required();
        sub->add_option("-w", rate_args.weights,
                        "subblock weight(s), comma separated")
            ->required()
            ->delimiter(',');
        sub->add_option("--delta", rate_args.delta,
                        "relative-distance grid start:stop:step")
            ->required();
        sub->add_option("--format", rate_args.format, "output format")
            ->check(CLI::IsMember(std::vector<std::string>{"csv"}));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand("cscc-bound"))
            return run_bound(Family::cscc, cscc_args);
        if (app.got_subcommand("secc-bound"))
            return run_bound(Family::secc, secc_args);
        if (app.got_subcommand("certify"))
            return run_certify(certify_args);
        if (app.got_subcommand("oracle-compare"))
            return run_oracle_compare(oracle_args);
        return run_rate_table(rate_args);
    } catch (const cap_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const index_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const solver_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
