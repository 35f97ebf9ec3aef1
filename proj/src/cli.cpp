#include "bubblegrid/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bubblegrid/classify.hpp"
#include "bubblegrid/errors.hpp"
#include "bubblegrid/geometry.hpp"
#include "bubblegrid/oracle.hpp"
#include "bubblegrid/regularize.hpp"
#include "bubblegrid/render.hpp"
#include "bubblegrid/solver.hpp"
#include "bubblegrid/text_format.hpp"

namespace bubblegrid::cli {

namespace {

std::string join_heights(const std::vector<std::int64_t>& hs) {
    std::string s = "{";
    for (std::size_t i = 0; i < hs.size(); ++i) s += (i ? "," : "") + std::to_string(hs[i]);
    return s + "}";
}

std::string triple(std::int64_t a, std::int64_t b, std::int64_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

std::string fixed(double v, int digits = 6) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

struct Flags {
    std::int64_t n = 0;
    std::int64_t na = 0;
    std::int64_t nb = 0;
    std::int64_t h = 0;
    std::int64_t k = 0;
    std::string beta = "1/2";
    bool all = false;
    bool swap_identify = false;
    std::string emit;
    std::string format = "ascii";
    int budget = 0;
    std::vector<std::string> files;
};

int cmd_solve(const Flags& f, std::ostream& out) {
    const auto beta = Beta::parse(f.beta);
    if (f.k > 0) {
        const auto config = build_class4_family(beta, f.k);
        const auto n = config.count_a();
        const auto res = min_perimeter(n, beta);
        out << "N=" << n << " P=" << format_value(perimeter(config), beta) << " P_min=" << res.min_value
            << " h=" << join_heights(res.optimal_heights) << "\n";
        if (!f.emit.empty()) write_config_file(f.emit, beta, config);
        return 0;
    }
    if (f.n < 1) throw DomainError("solve needs --n >= 1 or --k >= 1");
    const auto res = min_perimeter(f.n, beta);
    out << "P_min=" << res.min_value << " h=" << join_heights(res.optimal_heights) << "\n";
    std::int64_t h = res.optimal_heights.front();
    if (f.h > 0) {
        h = f.h;
        out << "P(h=" << h << ")=" << format_value(height_perimeter(f.n, h), beta) << "\n";
    }
    if (!f.emit.empty()) write_config_file(f.emit, beta, build_explicit(f.n, h));
    return 0;
}

int cmd_enumerate(const Flags& f, std::ostream& out) {
    const auto beta = Beta::parse(f.beta);
    OracleOptions opts;
    if (f.budget > 0) opts.budget = f.budget;
    const auto report = enumerate_minimisers(f.na, f.nb, beta, opts);
    out << "E_min=" << report.min_value << "\n";
    out << "count_no_swap=" << report.minimisers_no_swap.size() << "\n";
    out << "count_swap=" << report.minimisers_with_swap.size() << "\n";
    const auto& list = f.swap_identify ? report.minimisers_with_swap : report.minimisers_no_swap;
    const std::size_t shown = f.all ? list.size() : std::min<std::size_t>(1, list.size());
    for (std::size_t i = 0; i < shown; ++i) out << "---\n" << write_config(beta, list[i]);
    return 0;
}

int cmd_energy(const Flags& f, std::ostream& out) {
    const auto file = read_config_file(f.files.at(0));
    const auto e = energy(file.config);
    const auto p = perimeter(file.config);
    out << "E=" << e.to_string() << " P=" << p.to_string() << "\n";
    out << "beta=" << file.beta.to_string() << " E=" << format_value(e, file.beta)
        << " P=" << format_value(p, file.beta) << "\n";
    return 0;
}

int cmd_classify(const Flags& f, std::ostream& out) {
    const auto file = read_config_file(f.files.at(0));
    const auto c = classify(file.config);
    const auto& p = c.params;
    const auto e = class_energy(c.label, p, file.config.count_a(), file.config.count_b());
    out << "class=" << to_string(c.label) << " l=" << triple(p.l1, p.l2, p.l3) << " h=" << triple(p.h1, p.h2, p.h3)
        << " energy=" << e.to_string() << "\n";
    return 0;
}

int cmd_regularize(const Flags& f, std::ostream& out) {
    const auto file = read_config_file(f.files.at(0));
    const auto result = regularize_columns(regularize_rows(remove_empty_lines(file.config)));
    out << write_config(file.beta, result);
    return 0;
}

int cmd_compare(const Flags& f, std::ostream& out) {
    const auto a = read_config_file(f.files.at(0));
    const auto b = read_config_file(f.files.at(1));
    out << "symdiff=" << min_symmetric_difference(a.config, b.config) << "\n";
    return 0;
}

int cmd_render(const Flags& f, std::ostream& out) {
    const auto file = read_config_file(f.files.at(0));
    if (f.format == "ascii") {
        out << render_ascii(file.config);
    } else if (f.format == "svg") {
        out << render_svg(file.config);
    } else {
        throw ParseError("unknown format '" + f.format + "'");
    }
    return 0;
}

int cmd_wulff(const Flags& f, std::ostream& out) {
    const auto beta = Beta::parse(f.beta);
    const auto [a, b] = wulff_rectangles(beta);
    auto show = [](const Rect& r) {
        return "(" + fixed(r.x0) + "," + fixed(r.x1) + ")x(" + fixed(r.y0) + "," + fixed(r.y1) + ")";
    };
    out << "A=" << show(a) << " B=" << show(b) << "\n";
    if (beta.to_double() <= 0.5) out << "continuum=" << fixed(continuum_energy(beta)) << "\n";
    if (f.n > 0) {
        const auto res = min_perimeter(f.n, beta);
        const auto h = res.optimal_heights.front();
        out << "N=" << f.n << " h=" << h << " P_min/sqrt(N)="
            << fixed(res.min_perimeter.at(beta.to_double()) / std::sqrt(static_cast<double>(f.n)))
            << " discrepancy=" << fixed(wulff_discrepancy(build_explicit(f.n, h), beta)) << "\n";
    }
    return 0;
}

int cmd_verify(const Flags& f, std::ostream& out) {
    const auto beta = Beta::parse(f.beta);
    OracleOptions opts{kDefaultVerifyBudget, 0};
    if (f.budget > 0) opts.budget = f.budget;
    const auto n_max = f.n > 0 ? f.n : opts.budget / 2;
    const auto rows = verify_formula(n_max, beta, opts);
    std::size_t passed = 0;
    for (const auto& r : rows) {
        out << "N=" << r.n << " oracle=" << r.oracle_perimeter << " formula=" << r.formula_perimeter << " "
            << (r.ok ? "ok" : "MISMATCH") << "\n";
        passed += r.ok;
    }
    out << "verified=" << passed << "/" << rows.size() << "\n";
    return passed == rows.size() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact solver and verifier for two-phase lattice configurations"};
    app.name("bubblegrid");
    app.require_subcommand(1);
    Flags f;

    auto beta_opt = [&f](CLI::App* sub) {
        sub->add_option("--beta", f.beta, "beta as p/q or ~decimal")->capture_default_str();
    };
    auto* solve = app.add_subcommand("solve", "minimal perimeter for N_A = N_B = N");
    solve->set_help_flag("--help", "print this help");  // frees -h/--h for the height
    solve->add_option("--n", f.n, "points per phase");
    solve->add_option("--h", f.h, "report and emit this height");
    solve->add_option("--k", f.k, "Class IV family member instead of N");
    solve->add_option("--emit", f.emit, "write the optimal build to FILE");
    beta_opt(solve);

    auto* enumerate = app.add_subcommand("enumerate", "exhaustive minimisers");
    enumerate->add_option("--na", f.na, "A points")->required();
    enumerate->add_option("--nb", f.nb, "B points")->required();
    enumerate->add_flag("--all", f.all, "print every minimiser");
    enumerate->add_flag("--swap-identify", f.swap_identify, "print the list with A/B relabeling identified");
    enumerate->add_option("--budget", f.budget, "maximum total points");
    beta_opt(enumerate);

    auto* energy_cmd = app.add_subcommand("energy", "energy and perimeter of a configuration file");
    energy_cmd->add_option("file", f.files)->required()->expected(1);
    auto* classify_cmd = app.add_subcommand("classify", "class and band parameters");
    classify_cmd->add_option("file", f.files)->required()->expected(1);
    auto* regularize_cmd = app.add_subcommand("regularize", "close gaps, then regularize rows and columns");
    regularize_cmd->add_option("file", f.files)->required()->expected(1);
    auto* compare = app.add_subcommand("compare", "isometry-minimised symmetric difference");
    compare->add_option("files", f.files)->required()->expected(2);
    auto* render = app.add_subcommand("render", "draw a configuration");
    render->add_option("file", f.files)->required()->expected(1);
    render->add_option("--format", f.format, "ascii or svg")->capture_default_str();

    auto* wulff = app.add_subcommand("wulff", "Wulff rectangles and continuum diagnostics");
    wulff->add_option("--n", f.n, "also measure the optimal build at this N");
    beta_opt(wulff);

    auto* verify = app.add_subcommand("verify", "oracle against the closed-form minimum");
    verify->add_option("--n", f.n, "largest N (default: budget / 2)");
    verify->add_option("--budget", f.budget, "maximum total points");
    beta_opt(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(f, out);
        if (enumerate->parsed()) return cmd_enumerate(f, out);
        if (energy_cmd->parsed()) return cmd_energy(f, out);
        if (classify_cmd->parsed()) return cmd_classify(f, out);
        if (regularize_cmd->parsed()) return cmd_regularize(f, out);
        if (compare->parsed()) return cmd_compare(f, out);
        if (render->parsed()) return cmd_render(f, out);
        if (wulff->parsed()) return cmd_wulff(f, out);
        if (verify->parsed()) return cmd_verify(f, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace bubblegrid::cli
