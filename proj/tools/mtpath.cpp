// mtpath command-line tool: exact enumeration of generalized Dyck and
// Schroeder paths, their counting polynomials, verification suites, grid
// table exports and simplex lattice-point reports.
//
// Results go to stdout (byte-identical across identical invocations);
// timing diagnostics go to stderr.  Thread count for the verification
// suites comes from --threads or the MTPATH_THREADS environment variable.

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mtpath/verify.hpp"

namespace {

using nlohmann::json;
using namespace mtpath;

json poly_to_json(const std::string& fam, long long m, long long n, long long t,
                  const bivar_poly& p) {
    json terms = json::array();
    for (const auto& wt : p.to_wire_terms())
        terms.push_back({{"a", wt.a}, {"b", wt.b}, {"coeff", wt.coeff}});
    return json{{"family", fam}, {"m", m}, {"n", n}, {"t", t}, {"terms", terms}};
}

void check_scale(int m, int n, bool unsafe_scale) {
    if (unsafe_scale) return;
    if (m > 3 || n > 7)
        throw CLI::ValidationError(
            "scale", "grid limits are m <= 3, n <= 7; pass --unsafe-scale to override");
}

schroder_variant parse_variant(const std::string& s) {
    if (s == "small") return schroder_variant::small;
    if (s == "small_mdiv") return schroder_variant::small_mdiv;
    if (s == "positive") return schroder_variant::positive;
    if (s == "positive_mdiv") return schroder_variant::positive_mdiv;
    throw CLI::ValidationError("--schroder", "unknown variant: " + s);
}

bivar_poly brute_family_polynomial(family f, int m, int n, int t) {
    if (m < 1) throw CLI::ValidationError("--m", "brute enumeration needs m >= 1");
    switch (f) {
        case family::N:
            return brute_dyck_polynomial(m, n, t, false, stat_selector::valleys(),
                                         stat_selector::returns());
        case family::A:
            return brute_dyck_polynomial(m, n, t, false, stat_selector::m_valleys(m),
                                         stat_selector::returns());
        case family::B:
            if (m < 2)
                throw CLI::ValidationError("--family",
                                           "family B counts i-valleys with i < m; needs m >= 2");
            return brute_dyck_polynomial(m, n, t, false, stat_selector::residue_valleys(1),
                                         stat_selector::returns());
        case family::F:
            return brute_schroder_polynomial(m, n, t, schroder_variant::small,
                                             stat_selector::codim_minus_returns(),
                                             stat_selector::returns());
        case family::Fm:
            return brute_schroder_polynomial(m, n, t, schroder_variant::small_mdiv,
                                             stat_selector::codim_minus_returns(),
                                             stat_selector::returns());
        case family::S:
            return brute_schroder_polynomial(m, n, t, schroder_variant::small,
                                             stat_selector::diagonals(),
                                             stat_selector::cornered_diagonals());
        case family::Sm:
            return brute_schroder_polynomial(m, n, t, schroder_variant::small_mdiv,
                                             stat_selector::m_diagonals(),
                                             stat_selector::cornered_diagonals());
        case family::P:
            return brute_schroder_polynomial(m, n, t, schroder_variant::positive,
                                             stat_selector::diagonals(),
                                             stat_selector::cornered_diagonals());
        case family::Pm:
            return brute_schroder_polynomial(m, n, t, schroder_variant::positive_mdiv,
                                             stat_selector::m_diagonals(),
                                             stat_selector::cornered_diagonals());
    }
    throw std::logic_error("unreachable");
}

int run_paths(bool count_only, int m, int n, int t, bool no_returns, const std::string& schroder,
              const std::string& format, bool unsafe_scale) {
    check_scale(m, n, unsafe_scale);
    unsigned long long count = 0;
    std::vector<std::string> listing;
    auto visit = [&](const std::vector<step>& s) {
        ++count;
        if (!count_only) listing.push_back(lattice_path{m, t, s}.to_string());
    };
    if (schroder.empty()) {
        for_each_dyck(m, n, t, no_returns, visit);
    } else {
        if (no_returns)
            throw CLI::ValidationError("--no-returns", "only applies to Dyck enumeration");
        for_each_schroder(m, n, t, parse_variant(schroder), visit);
    }
    if (format == "json") {
        json out{{"m", m}, {"n", n}, {"t", t}, {"count", std::to_string(count)}};
        if (!schroder.empty()) out["variant"] = schroder;
        if (no_returns) out["no_returns"] = true;
        if (!count_only) out["paths"] = listing;
        std::cout << out.dump(2) << "\n";
    } else {
        if (count_only) {
            std::cout << count << "\n";
        } else {
            for (const auto& s : listing) std::cout << s << "\n";
        }
    }
    return 0;
}

int run_poly(const std::string& fam_name, int m, int n, int t, const std::string& source,
             const std::string& format, bool unsafe_scale) {
    family f = family_from_name(fam_name);
    check_scale(std::abs(m), n, unsafe_scale);
    bivar_poly p = source == "brute" ? brute_family_polynomial(f, m, n, t)
                                     : family_polynomial(f, m, n, t);
    if (format == "json") {
        std::cout << poly_to_json(fam_name, m, n, t, p).dump(2) << "\n";
    } else {
        std::cout << p.to_text() << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int max_m, int max_n, int threads, bool verbose,
               bool unsafe_scale) {
    if (!unsafe_scale && (max_m > 3 || max_n > 7))
        throw CLI::ValidationError("scale",
                                   "verify limits are m <= 3, n <= 7; pass --unsafe-scale to override");
    verify_options opt;
    opt.max_m = max_m;
    opt.max_n = max_n;
    opt.threads = threads > 0 ? threads : thread_budget();
    opt.unrestricted_scale = unsafe_scale;
    bool all_ok = true;
    for (const auto& rep : run_suites(suite, opt)) {
        all_ok = all_ok && rep.ok();
        std::cout << "suite " << rep.suite << ": " << rep.passed() << " passed, " << rep.failed()
                  << " failed\n";
        for (const auto& c : rep.cases) {
            if (verbose && c.ok) std::cout << "  ok   " << c.name << "\n";
            if (!c.ok) std::cout << "  FAIL " << c.name << ": " << c.detail << "\n";
        }
        std::cerr << "suite " << rep.suite << " took " << rep.seconds << "s\n";
    }
    std::cout << (all_ok ? "all checks passed" : "FAILURES detected") << "\n";
    return all_ok ? 0 : 1;
}

int run_table(const std::string& fam_name, int max_m, int max_n, const std::string& format,
              bool unsafe_scale) {
    family f = family_from_name(fam_name);
    check_scale(max_m, max_n, unsafe_scale);
    if (format == "json") {
        json rows = json::array();
        for (int m = 1; m <= max_m; ++m)
            for (int n = 1; n <= max_n; ++n)
                for (int t = 1; t <= n; ++t)
                    rows.push_back(poly_to_json(fam_name, m, n, t, family_polynomial(f, m, n, t)));
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "family,m,n,t,polynomial\n";
        for (int m = 1; m <= max_m; ++m)
            for (int n = 1; n <= max_n; ++n)
                for (int t = 1; t <= n; ++t)
                    std::cout << fam_name << "," << m << "," << n << "," << t << ","
                              << family_polynomial(f, m, n, t).to_text() << "\n";
    }
    return 0;
}

int run_simplex(int n, long long dilation, const std::string& format) {
    auto points = simplex_points(n, dilation);
    auto hist = wall_histogram(n, dilation);
    if (format == "json") {
        json pts = json::array();
        for (const auto& pt : points) pts.push_back({{"coords", pt.coords}, {"walls", pt.walls_hit}});
        json exactly = json::array();
        for (const auto& h : hist) exactly.push_back(h.to_string());
        std::cout << json{{"n", n}, {"dilation", dilation}, {"points", pts}, {"exactly", exactly}}.dump(2)
                  << "\n";
    } else if (format == "csv") {
        for (int i = 1; i <= n; ++i) std::cout << "x" << i << ",";
        std::cout << "walls\n";
        for (const auto& pt : points) {
            for (long long c : pt.coords) std::cout << c << ",";
            std::cout << pt.walls_hit << "\n";
        }
    } else {
        for (const auto& pt : points) {
            std::cout << "(";
            for (std::size_t i = 0; i < pt.coords.size(); ++i)
                std::cout << (i ? "," : "") << pt.coords[i];
            std::cout << ") walls=" << pt.walls_hit << "\n";
        }
        for (int k = 0; k < n; ++k)
            std::cout << "exactly " << k << " walls: " << hist[k].to_string() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact (m,t)-Dyck / Schroeder path enumeration and verification"};
    app.require_subcommand(1);

    // paths
    auto* paths_cmd = app.add_subcommand("paths", "enumerate path families");
    paths_cmd->require_subcommand(1);
    int m = 1, n = 1, t = 1;
    bool no_returns = false, unsafe_scale = false;
    std::string schroder, format = "plain";
    auto add_path_opts = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "slope parameter")->required();
        cmd->add_option("--n", n, "height")->required();
        cmd->add_option("--t", t, "required initial north steps")->required();
        cmd->add_flag("--no-returns", no_returns, "exclude Dyck paths with returns");
        cmd->add_option("--schroder", schroder,
                        "enumerate Schroeder paths (small|small_mdiv|positive|positive_mdiv)");
        cmd->add_option("--format", format, "plain|json")->default_val("plain");
        cmd->add_flag("--unsafe-scale", unsafe_scale, "lift the conservative grid limits");
    };
    auto* count_cmd = paths_cmd->add_subcommand("count", "print the number of paths");
    add_path_opts(count_cmd);
    auto* list_cmd = paths_cmd->add_subcommand("list", "print one path per line (N/E/D steps)");
    add_path_opts(list_cmd);

    // poly
    auto* poly_cmd = app.add_subcommand("poly", "counting polynomial of a family");
    std::string fam = "N", source = "closed";
    poly_cmd->add_option("--family", fam, "N|A|B|F|Fm|S|Sm|P|Pm")->required();
    poly_cmd->add_option("--m", m, "slope parameter (may be negative with --source closed)")
        ->required();
    poly_cmd->add_option("--n", n, "height")->required();
    poly_cmd->add_option("--t", t, "required initial north steps")->required();
    poly_cmd->add_option("--source", source, "closed|brute")->default_val("closed");
    poly_cmd->add_option("--format", format, "plain|json")->default_val("plain");
    poly_cmd->add_flag("--unsafe-scale", unsafe_scale, "lift the conservative grid limits");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run cross-verification suites");
    std::string suite = "all";
    int max_m = 3, max_n = 5, threads = 0;
    bool verbose = false;
    verify_cmd->add_option("--suite", suite,
                           "formulas|series|bijection|reciprocity|arrangement|properties|all")
        ->default_val("all");
    verify_cmd->add_option("--max-m", max_m, "largest slope")->default_val(3);
    verify_cmd->add_option("--max-n", max_n, "largest height")->default_val(5);
    verify_cmd->add_option("--threads", threads, "worker threads (default MTPATH_THREADS or cores)");
    verify_cmd->add_flag("--verbose", verbose, "print every case, not only failures");
    verify_cmd->add_flag("--unsafe-scale", unsafe_scale, "lift the conservative grid limits");

    // table
    auto* table_cmd = app.add_subcommand("table", "grid sweep of a family to CSV or JSON");
    table_cmd->add_option("--family", fam, "N|A|B|F|Fm|S|Sm|P|Pm")->required();
    table_cmd->add_option("--max-m", max_m, "largest slope")->default_val(3);
    table_cmd->add_option("--max-n", max_n, "largest height")->default_val(5);
    table_cmd->add_option("--format", format, "csv|json")->default_val("csv");
    table_cmd->add_flag("--unsafe-scale", unsafe_scale, "lift the conservative grid limits");

    // simplex
    auto* simplex_cmd = app.add_subcommand("simplex", "lattice points of the dilated simplex");
    long long dilation = 1;
    simplex_cmd->add_option("--n", n, "ambient dimension (n >= 2)")->required();
    simplex_cmd->add_option("--dilation", dilation, "dilation factor")->required();
    simplex_cmd->add_option("--format", format, "plain|json|csv")->default_val("plain");

    CLI11_PARSE(app, argc, argv);

    try {
        if (count_cmd->parsed())
            return run_paths(true, m, n, t, no_returns, schroder, format, unsafe_scale);
        if (list_cmd->parsed())
            return run_paths(false, m, n, t, no_returns, schroder, format, unsafe_scale);
        if (poly_cmd->parsed()) return run_poly(fam, m, n, t, source, format, unsafe_scale);
        if (verify_cmd->parsed())
            return run_verify(suite, max_m, max_n, threads, verbose, unsafe_scale);
        if (table_cmd->parsed()) return run_table(fam, max_m, max_n, format, unsafe_scale);
        if (simplex_cmd->parsed()) return run_simplex(n, dilation, format);
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
