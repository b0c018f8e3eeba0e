#include "latsum/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "latsum/analytic_core.hpp"
#include "latsum/casimir.hpp"
#include "latsum/lattice_oracle.hpp"
#include "latsum/output_record.hpp"
#include "latsum/validation.hpp"

namespace latsum {

namespace {

std::vector<int> parse_d_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos)
        throw std::domain_error("d-range must look like a..b");
    const int a = std::stoi(text.substr(0, pos));
    const int b = std::stoi(text.substr(pos + 2));
    if (a > b)
        throw std::domain_error("d-range bounds must be nondecreasing");
    std::vector<int> out;
    for (int d = a; d <= b; ++d)
        out.push_back(d);
    return out;
}

std::string format_ld(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12Lg", v);
    return buf;
}

std::string join_ints(const std::vector<int>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(vs[i]);
    }
    return out;
}

std::string join_lds(const std::vector<long double>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ',';
        out += format_ld(vs[i]);
    }
    return out;
}

void emit(const OutputRecord& record, const std::string& format,
          const std::string& out_path) {
    const std::string text =
        format == "json" ? to_json(record) : to_csv(record);
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path);
    if (!file)
        throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
    if (!file)
        throw std::runtime_error("failed writing output file: " + out_path);
}

struct SubcommandArgs {
    int d = 0;
    std::string d_range;
    double lambda = 0.0;
    std::vector<double> lambdas;
    std::string method = "analytic";
    double eps = -1.0;
    long long nmax = 0;
    std::string format = "csv";
    std::string out;
};

void add_format_options(CLI::App* cmd, SubcommandArgs& args) {
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", args.out, "write output to this file");
}

std::vector<int> resolve_d_list(const SubcommandArgs& args, int fallback_a,
                                int fallback_b) {
    if (!args.d_range.empty())
        return parse_d_range(args.d_range);
    if (args.d != 0)
        return {args.d};
    std::vector<int> out;
    for (int d = fallback_a; d <= fallback_b; ++d)
        out.push_back(d);
    return out;
}

std::vector<long double> resolve_lambda_list(
    const SubcommandArgs& args, const std::vector<long double>& fallback) {
    if (!args.lambdas.empty()) {
        std::vector<long double> out;
        for (double v : args.lambdas)
            out.push_back((long double)v);
        return out;
    }
    if (args.lambda != 0.0)
        return {(long double)args.lambda};
    return fallback;
}

int run_xi(const SubcommandArgs& args) {
    const std::vector<int> ds = resolve_d_list(args, 1, 1);
    const std::vector<long double> lambdas =
        resolve_lambda_list(args, {1.0L});
    Accuracy acc;
    acc.eps_rel = args.eps > 0.0
                      ? (long double)args.eps
                      : (args.method == "brute" ? 1e-10L : 1e-12L);
    if (args.nmax > 0)
        acc.max_terms = (std::size_t)args.nmax;
    acc.validate();

    OutputRecord record;
    record.command = "xi";
    record.inputs = {{"d", join_ints(ds)},
                     {"lambdas", join_lds(lambdas)},
                     {"method", args.method},
                     {"eps", format_ld(acc.eps_rel)}};
    record.columns = {"d", "lambda", "method", "xi"};
    record.generated_at = iso8601_now();
    for (int d : ds) {
        for (long double lambda : lambdas) {
            EvalConfig cfg;
            cfg.d = d;
            cfg.lambda = lambda;
            cfg.accuracy = acc;
            long double value;
            if (args.method == "brute")
                value = xi_brute(cfg, 0).value;
            else
                value = xi_formula(cfg, args.method == "series"
                                            ? ChiMode::power_series
                                            : ChiMode::direct)
                            .xi;
            record.rows.push_back({(std::int64_t)d, round12(lambda),
                                   args.method, round12(value)});
        }
    }
    emit(record, args.format, args.out);
    return 0;
}

int run_compare(const SubcommandArgs& args) {
    const std::vector<int> ds = resolve_d_list(args, 2, 5);
    const std::vector<long double> lambdas =
        resolve_lambda_list(args, {0.1L, 1.0L, 5.0L, 10.0L});
    Accuracy acc;
    acc.eps_rel = args.eps > 0.0 ? (long double)args.eps : 1e-12L;
    if (args.nmax > 0)
        acc.max_terms = (std::size_t)args.nmax;
    acc.validate();

    OutputRecord record;
    record.command = "compare";
    record.inputs = {{"d", join_ints(ds)},
                     {"lambdas", join_lds(lambdas)},
                     {"eps", format_ld(acc.eps_rel)}};
    record.columns = {"d",        "lambda", "xi_formula",
                      "xi_brute", "abs_diff", "pct_diff",
                      "i_term",   "c_term", "ratio_c_over_i"};
    record.generated_at = iso8601_now();
    for (const ComparisonRow& row : compare(ds, lambdas, acc)) {
        record.rows.push_back(
            {(std::int64_t)row.d, round12(row.lambda), round12(row.xi_formula),
             round12(row.xi_brute), round12(row.abs_diff),
             round12(row.pct_diff), round12(row.i_term), round12(row.c_term),
             round12(row.ratio_c_over_i)});
    }
    emit(record, args.format, args.out);
    return 0;
}

int run_casimir(const SubcommandArgs& args) {
    const std::vector<int> ds = resolve_d_list(args, 1, 5);
    OutputRecord record;
    record.command = "casimir";
    record.inputs = {{"d", join_ints(ds)}};
    record.columns = {"d", "p", "j", "term", "energy"};
    record.generated_at = iso8601_now();
    for (int d : ds) {
        const CasimirBreakdown cb = casimir_closed_form(d);
        for (const CasimirTerm& term : cb.terms)
            record.rows.push_back({(std::int64_t)d, (std::int64_t)term.p,
                                   (std::int64_t)term.j, round12(term.value),
                                   round12(cb.energy)});
    }
    emit(record, args.format, args.out);
    return 0;
}

int run_rd(const SubcommandArgs& args) {
    const int d = args.d != 0 ? args.d : 2;
    const long long nmax = args.nmax > 0 ? args.nmax : 100;
    const RdTable table = rd_table_convolution(d, nmax);
    OutputRecord record;
    record.command = "rd";
    record.inputs = {{"d", std::to_string(d)},
                     {"nmax", std::to_string(nmax)}};
    record.columns = {"n", "r"};
    record.generated_at = iso8601_now();
    for (long long n = 0; n <= nmax; ++n)
        record.rows.push_back({(std::int64_t)n, table.counts[n]});
    emit(record, args.format, args.out);
    return 0;
}

int run_validate(const SubcommandArgs& args) {
    const std::vector<CheckResult> results = run_validation();
    OutputRecord record;
    record.command = "validate";
    record.columns = {"name", "status", "measured", "threshold"};
    record.generated_at = iso8601_now();
    bool all_passed = true;
    for (const CheckResult& r : results) {
        all_passed = all_passed && r.passed;
        record.rows.push_back({r.name,
                               std::string(r.passed ? "pass" : "fail"),
                               round12(r.measured), round12(r.threshold)});
    }
    emit(record, args.format, args.out);
    return all_passed ? 0 : 4;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{
        "Lattice sum generating function: analytic evaluation, brute-force "
        "cross-checks, and Casimir energy extraction"};
    app.require_subcommand(1);

    SubcommandArgs xi_args, compare_args, casimir_args, rd_args, validate_args;

    CLI::App* xi_cmd =
        app.add_subcommand("xi", "evaluate the generating function");
    xi_cmd->add_option("--d", xi_args.d, "dimension");
    xi_cmd->add_option("--d-range", xi_args.d_range, "dimension range a..b")
        ->excludes("--d");
    xi_cmd->add_option("--lambda", xi_args.lambda, "regulator value");
    xi_cmd->add_option("--lambdas", xi_args.lambdas,
                       "comma separated regulator values")
        ->delimiter(',')
        ->excludes("--lambda");
    xi_cmd->add_option("--method", xi_args.method,
                       "evaluation route")
        ->check(CLI::IsMember({"analytic", "series", "brute"}));
    xi_cmd->add_option("--eps", xi_args.eps, "relative tolerance");
    xi_cmd->add_option("--nmax", xi_args.nmax, "series term cap");
    add_format_options(xi_cmd, xi_args);

    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "formula versus brute-force sum over a (d, lambda) grid");
    compare_cmd->add_option("--d", compare_args.d, "single dimension");
    compare_cmd
        ->add_option("--d-range", compare_args.d_range, "dimension range a..b")
        ->excludes("--d");
    compare_cmd->add_option("--lambda", compare_args.lambda, "regulator value");
    compare_cmd
        ->add_option("--lambdas", compare_args.lambdas,
                     "comma separated regulator values")
        ->delimiter(',')
        ->excludes("--lambda");
    compare_cmd->add_option("--eps", compare_args.eps,
                            "formula-side relative tolerance");
    compare_cmd->add_option("--nmax", compare_args.nmax, "series term cap");
    add_format_options(compare_cmd, compare_args);

    CLI::App* casimir_cmd =
        app.add_subcommand("casimir", "closed-form Casimir energies");
    casimir_cmd->add_option("--d", casimir_args.d, "single dimension");
    casimir_cmd
        ->add_option("--d-range", casimir_args.d_range, "dimension range a..b")
        ->excludes("--d");
    add_format_options(casimir_cmd, casimir_args);

    CLI::App* rd_cmd =
        app.add_subcommand("rd", "table of sum-of-squares representation counts");
    rd_cmd->add_option("--d", rd_args.d, "dimension");
    rd_cmd->add_option("--nmax", rd_args.nmax, "largest n in the table");
    add_format_options(rd_cmd, rd_args);

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "run the internal consistency suite");
    add_format_options(validate_cmd, validate_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (xi_cmd->parsed())
            return run_xi(xi_args);
        if (compare_cmd->parsed())
            return run_compare(compare_args);
        if (casimir_cmd->parsed())
            return run_casimir(casimir_args);
        if (rd_cmd->parsed())
            return run_rd(rd_args);
        if (validate_cmd->parsed())
            return run_validate(validate_args);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const ToleranceError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const GuardError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace latsum
