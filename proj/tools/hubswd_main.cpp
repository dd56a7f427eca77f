#include <hubswd/cli.hpp>

#include <CLI11.hpp>

#include <array>
#include <iostream>
#include <optional>
#include <string>

namespace {

using hubswd::UsageError;

hubswd::Sector parse_sector(const std::string& text) {
    auto fail = [] { throw UsageError("--sector wants 'n_plus,n_minus'"); };
    auto comma = text.find(',');
    if (comma == std::string::npos) fail();
    try {
        std::size_t a = 0, b = 0;
        int np = std::stoi(text.substr(0, comma), &a);
        int nm = std::stoi(text.substr(comma + 1), &b);
        if (a != comma || b != text.size() - comma - 1) fail();
        return {np, nm};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        fail();
    }
    return {};
}

std::array<int, 4> parse_mu(const std::string& text) {
    auto fail = [] { throw UsageError("--mu wants 'a,b,c,d'"); };
    std::array<int, 4> mu{};
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        std::size_t end = i == 3 ? text.size() : text.find(',', start);
        if (end == std::string::npos || end < start) fail();
        try {
            std::size_t used = 0;
            mu[i] = std::stoi(text.substr(start, end - start), &used);
            if (used != end - start) fail();
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception&) {
            fail();
        }
        start = end + 1;
    }
    return mu;
}

hubswd::Boundary parse_boundary(const std::string& text) {
    if (text == "periodic") return hubswd::Boundary::periodic;
    if (text == "open") return hubswd::Boundary::open;
    throw UsageError("--boundary wants 'periodic' or 'open'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry-adapted bases and block spectra for the "
                 "one-dimensional Hubbard chain"};
    app.require_subcommand(1);

    hubswd::RunConfig cfg;
    std::string sector_text;
    std::string mu_text;
    std::string boundary_text = "periodic";
    std::string strategy_text = "sector";
    std::optional<int> nplus;
    std::optional<int> nminus;
    std::optional<double> tol_opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "number of sites")->required();
        sub->add_option("--format", cfg.format, "json, csv or table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        sub->add_option("--out", cfg.out, "write to this file instead of stdout");
    };
    auto add_model = [&](CLI::App* sub) {
        sub->add_option("--t", cfg.t, "hopping amplitude");
        sub->add_option("--u", cfg.u, "on-site interaction");
        sub->add_option("--boundary", boundary_text, "periodic or open")
            ->check(CLI::IsMember({"periodic", "open"}));
    };

    auto* dims = app.add_subcommand("dims", "state-space dimensions");
    add_common(dims);
    dims->add_option("--ne", cfg.ne, "electron count window");
    dims->add_option("--sector", sector_text, "occupation pair n_plus,n_minus");

    auto* orbits = app.add_subcommand("orbits", "cyclic orbits of a sector");
    add_common(orbits);
    orbits->add_option("--sector", sector_text, "occupation pair n_plus,n_minus")
        ->required();

    auto* table1 = app.add_subcommand("table1", "irreducible-content ledger of a "
                                                "half-filled sector");
    add_common(table1);
    table1->add_option("--nplus", nplus, "spin-up electron count")->required();
    table1->add_option("--nminus", nminus, "spin-down electron count")->required();
    table1->add_option("--boundary", boundary_text, "periodic or open")
        ->check(CLI::IsMember({"periodic", "open"}));
    table1->add_flag("--materialize", cfg.materialize,
                     "include adapted basis columns (json only)");

    auto* basis = app.add_subcommand("basis", "projector basis of a two-letter "
                                              "weight space");
    add_common(basis);
    basis->add_option("--mu", mu_text, "weight a,b,c,d with one two-letter side")
        ->required();

    auto* spectrum = app.add_subcommand("spectrum", "block-diagonal spectra");
    add_common(spectrum);
    add_model(spectrum);
    spectrum->add_option("--ne", cfg.ne, "restrict to one electron-count window");
    spectrum->add_option("--sector", sector_text,
                         "restrict to one occupation sector n_plus,n_minus");
    spectrum->add_option("--strategy", strategy_text,
                         "sector, sector+momentum or sector+swd")
        ->check(CLI::IsMember({"sector", "sector+momentum", "sector+swd"}));
    spectrum->add_flag("--materialize", cfg.materialize,
                       "include basis labels and eigenvectors (json only)");
    spectrum->add_option("--tol", tol_opt, "fail when an eigenpair residual "
                                           "exceeds this bound");

    auto* verify = app.add_subcommand("verify", "run self-checks");
    add_common(verify);
    add_model(verify);
    verify->add_option("--suite", cfg.suite,
                       "all, spin, pseudospin, projectors, ledger, blocks or "
                       "momentum")
        ->check(CLI::IsMember({"all", "spin", "pseudospin", "projectors",
                               "ledger", "blocks", "momentum"}));
    verify->add_option("--tol", tol_opt, "relative tolerance for the checks");

    try {
        app.parse(argc, argv);
        cfg.subcommand = app.get_subcommands().front()->get_name();
        if (!sector_text.empty()) cfg.sector = parse_sector(sector_text);
        if (!mu_text.empty()) cfg.mu = parse_mu(mu_text);
        if (nplus || nminus) cfg.sector = hubswd::Sector{*nplus, *nminus};
        cfg.boundary = parse_boundary(boundary_text);
        cfg.strategy = hubswd::strategy_from_name(strategy_text);
        if (tol_opt) {
            if (cfg.subcommand == "spectrum")
                cfg.spectrum_tol = *tol_opt;
            else
                cfg.tol = *tol_opt;
        }
        return hubswd::run_command(cfg);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hubswd::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
