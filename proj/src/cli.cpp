#include <hubswd/cli.hpp>

#include <hubswd/translation.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

namespace hubswd {

namespace {

using json = nlohmann::ordered_json;

std::string boundary_name(Boundary b) {
    return b == Boundary::periodic ? "periodic" : "open";
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (cfg.format == a) return;
    throw UsageError("format '" + cfg.format + "' is not supported here");
}

std::string fmt12(double x) { return format_double(x, 12); }

// Quantum numbers print as integers or halves without a trailing mantissa.
std::string fmt_quantum(double q) { return format_double(q); }

json sector_json(Sector s) {
    return json{{"n_plus", s.n_plus}, {"n_minus", s.n_minus}};
}

void emit(std::ostream& os, const json& j) { os << j.dump(2) << "\n"; }

constexpr int kEnumerationCap = 14;

void check_enumerable(int n) {
    if (n < 1 || n > kEnumerationCap)
        throw UsageError("site count must lie in 1.." +
                         std::to_string(kEnumerationCap));
}

// ---------------------------------------------------------------- dims ----

void dims_impl(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg, {"json", "csv", "table"});
    int n = cfg.n;
    if (n < 1 || n > 30) throw UsageError("site count must lie in 1..30");
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    std::vector<std::pair<int, long long>> windows;
    for (int ne = 0; ne <= 2 * n; ++ne) windows.push_back({ne, binomial(2 * n, ne)});

    std::optional<long long> sector_dim;
    if (cfg.sector) {
        const Sector& s = *cfg.sector;
        if (s.n_plus < 0 || s.n_plus > n || s.n_minus < 0 || s.n_minus > n)
            throw UsageError("sector occupation out of range");
        sector_dim = binomial(n, s.n_plus) * binomial(n, s.n_minus);
    }
    if (cfg.ne && (*cfg.ne < 0 || *cfg.ne > 2 * n))
        throw UsageError("electron count out of range");

    if (cfg.format == "json") {
        json j;
        j["n"] = n;
        j["total"] = total;
        j["half_filled"] = json{{"ne", n}, {"dim", binomial(2 * n, n)}};
        json w = json::array();
        for (auto [ne, dim] : windows) w.push_back(json{{"ne", ne}, {"dim", dim}});
        j["windows"] = w;
        if (cfg.ne)
            j["window"] = json{{"ne", *cfg.ne}, {"dim", binomial(2 * n, *cfg.ne)}};
        if (cfg.sector) {
            json s = sector_json(*cfg.sector);
            s["dim"] = *sector_dim;
            j["sector"] = s;
        }
        emit(os, j);
    } else if (cfg.format == "csv") {
        os << "ne,dim\n";
        for (auto [ne, dim] : windows) os << ne << "," << dim << "\n";
    } else {
        os << "N = " << n << "\n";
        os << "total dimension = " << total << "\n";
        os << "half-filled window (Ne = " << n << ") = " << binomial(2 * n, n)
           << "\n";
        if (cfg.ne)
            os << "requested window (Ne = " << *cfg.ne
               << ") = " << binomial(2 * n, *cfg.ne) << "\n";
        if (cfg.sector)
            os << "requested sector (" << cfg.sector->n_plus << ","
               << cfg.sector->n_minus << ") = " << *sector_dim << "\n";
        os << "\nNe  dim\n";
        for (auto [ne, dim] : windows) os << ne << "  " << dim << "\n";
    }
}

// -------------------------------------------------------------- orbits ----

void orbits_impl(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg, {"json", "csv", "table"});
    check_enumerable(cfg.n);
    if (!cfg.sector) throw UsageError("orbits needs --sector n_plus,n_minus");
    auto all = orbits(cfg.n, *cfg.sector);
    long long total = 0;
    for (const auto& o : all) total += o.period;

    if (cfg.format == "json") {
        json j;
        j["n"] = cfg.n;
        j["sector"] = sector_json(*cfg.sector);
        json arr = json::array();
        for (const auto& o : all) {
            json e;
            e["representative"] = o.representative.literal();
            e["period"] = o.period;
            e["kappa"] = o.kappa;
            e["momenta"] = rarefied_zone(cfg.n, o.kappa);
            arr.push_back(e);
        }
        j["orbits"] = arr;
        j["count"] = all.size();
        j["total_dim"] = total;
        emit(os, j);
    } else if (cfg.format == "csv") {
        os << "representative,period,kappa,momenta\n";
        for (const auto& o : all) {
            os << o.representative.literal() << "," << o.period << "," << o.kappa
               << ",";
            auto zone = rarefied_zone(cfg.n, o.kappa);
            for (std::size_t i = 0; i < zone.size(); ++i)
                os << (i ? " " : "") << zone[i];
            os << "\n";
        }
    } else {
        os << "N = " << cfg.n << "  sector (" << cfg.sector->n_plus << ","
           << cfg.sector->n_minus << ")  orbits = " << all.size()
           << "  states = " << total << "\n\n";
        os << "representative  period  kappa  momenta\n";
        for (const auto& o : all) {
            os << o.representative.literal() << "  " << o.period << "  " << o.kappa
               << "  ";
            auto zone = rarefied_zone(cfg.n, o.kappa);
            for (std::size_t i = 0; i < zone.size(); ++i)
                os << (i ? " " : "") << zone[i];
            os << "\n";
        }
    }
}

// -------------------------------------------------------------- table1 ----

std::string irrep_list_text(const std::vector<LedgerIrrep>& list, const char* qname) {
    if (list.empty()) return "-";
    std::ostringstream t;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) t << "; ";
        t << list[i].shape.label() << " dim=" << list[i].dim << " " << qname << "="
          << fmt_quantum(list[i].quantum);
    }
    return t.str();
}

json irrep_side_json(const std::vector<LedgerIrrep>& list, std::array<int, 2> weight,
                     const char* qname) {
    if (list.empty()) return nullptr;
    json side;
    side["weight"] = weight;
    json irr = json::array();
    for (const auto& ir : list) {
        json e;
        e["shape"] = ir.shape.label();
        e["dim"] = ir.dim;
        e[qname] = ir.quantum;
        irr.push_back(e);
    }
    side["irreps"] = irr;
    return side;
}

void table1_impl(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg, {"json", "csv", "table"});
    if (!cfg.sector) throw UsageError("table1 needs --nplus and --nminus");
    if (cfg.materialize && cfg.format != "json")
        throw UsageError("--materialize requires --format json");
    check_enumerable(cfg.n);
    Ledger ledger = sector_ledger(cfg.n, *cfg.sector, cfg.boundary);

    if (cfg.format == "json") {
        json j;
        j["n"] = ledger.n;
        j["sector"] = sector_json(ledger.sector);
        j["boundary"] = boundary_name(cfg.boundary);
        json rows = json::array();
        for (const auto& row : ledger.rows) {
            json r;
            r["mu"] = row.mu;
            r["spin"] = irrep_side_json(row.spin, {row.mu[0], row.mu[1]}, "S");
            r["pseudo"] = irrep_side_json(row.pseudo, {row.mu[2], row.mu[3]}, "J");
            r["Sz"] = row.s_z;
            r["Jz"] = row.j_z;
            r["tau"] = row.tau;
            r["x"] = row.x;
            rows.push_back(r);
        }
        j["rows"] = rows;
        j["total"] = ledger.total;
        if (cfg.materialize) {
            Basis sec = enumerate_basis(cfg.n, *cfg.sector);
            SwdBasis adapted = swd_basis(sec, cfg.boundary);
            json basis = json::array();
            for (const auto& c : sec.configs()) basis.push_back(c.literal());
            j["basis"] = basis;
            json cols = json::array();
            for (std::size_t c = 0; c < adapted.columns.size(); ++c) {
                const SwdColumn& col = adapted.columns[c];
                json e;
                e["mu"] = col.mu;
                e["spin_shape"] = col.lambda_spin.label();
                e["spin_tableau"] = col.y_spin;
                e["pseudo_shape"] = col.lambda_pseudo.label();
                e["pseudo_tableau"] = col.y_pseudo;
                e["placement"] = col.placement_index;
                e["S"] = col.S;
                e["Sz"] = col.Sz;
                e["J"] = col.J;
                e["Jz"] = col.Jz;
                json coeffs = json::array();
                for (int i = 0; i < adapted.matrix.rows(); ++i)
                    coeffs.push_back(adapted.matrix(i, static_cast<int>(c)));
                e["coeffs"] = coeffs;
                cols.push_back(e);
            }
            j["columns"] = cols;
        }
        emit(os, j);
    } else if (cfg.format == "csv") {
        os << "mu1,mu2,mu3,mu4,spin,pseudo,Sz,Jz,tau,x\n";
        for (const auto& row : ledger.rows) {
            os << row.mu[0] << "," << row.mu[1] << "," << row.mu[2] << ","
               << row.mu[3] << "," << irrep_list_text(row.spin, "S") << ","
               << irrep_list_text(row.pseudo, "J") << "," << fmt_quantum(row.s_z)
               << "," << fmt_quantum(row.j_z) << "," << row.tau << "," << row.x
               << "\n";
        }
    } else {
        os << "N = " << ledger.n << "  sector (" << ledger.sector.n_plus << ","
           << ledger.sector.n_minus << ")  boundary "
           << boundary_name(cfg.boundary) << "  total = " << ledger.total << "\n\n";
        for (const auto& row : ledger.rows) {
            os << "mu = (" << row.mu[0] << "," << row.mu[1] << "," << row.mu[2]
               << "," << row.mu[3] << ")  Sz = " << fmt_quantum(row.s_z)
               << "  Jz = " << fmt_quantum(row.j_z) << "  tau = " << row.tau
               << "  x = " << row.x << "\n";
            os << "  spin:   " << irrep_list_text(row.spin, "S") << "\n";
            os << "  pseudo: " << irrep_list_text(row.pseudo, "J") << "\n";
        }
    }
}

// --------------------------------------------------------------- basis ----

void basis_impl(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg, {"json", "csv", "table"});
    if (!cfg.mu) throw UsageError("basis needs --mu a,b,c,d");
    const auto& mu = *cfg.mu;
    for (int v : mu)
        if (v < 0) throw UsageError("weight entries must not be negative");
    bool spin = mu[0] + mu[1] > 0;
    bool pseudo = mu[2] + mu[3] > 0;
    if (spin == pseudo)
        throw UsageError("basis needs a two-letter weight: one of (mu1,mu2) or "
                         "(mu3,mu4) must vanish");
    int len = spin ? mu[0] + mu[1] : mu[2] + mu[3];
    if (len != cfg.n)
        throw UsageError("weight does not fill the chain");
    if (len > 20) throw UsageError("site count must lie in 1..20");
    int k = spin ? mu[1] : mu[3];
    OrbitSpace space(len, k);
    AdaptedBasis ab = irreducible_basis(space);

    auto row_literal = [&](int i) {
        std::string s;
        for (int pos = 1; pos <= len; ++pos) {
            int bit = space.letter(i, pos);
            s += spin ? (bit ? 'd' : 'u') : (bit ? '0' : '2');
        }
        return s;
    };

    if (cfg.format == "json") {
        json j;
        j["n"] = cfg.n;
        j["mu"] = mu;
        j["space"] = spin ? "spin" : "pseudo";
        j["dim"] = space.dim();
        json rows = json::array();
        for (int i = 0; i < space.dim(); ++i) rows.push_back(row_literal(i));
        j["rows"] = rows;
        json cols = json::array();
        for (const auto& col : ab.columns) {
            json e;
            e["label"] = col.label();
            e["shape"] = col.shape.label();
            e["tableau"] = col.tableau_index;
            json coeffs = json::array();
            for (int i = 0; i < space.dim(); ++i) coeffs.push_back(col.coeffs(i));
            e["coeffs"] = coeffs;
            cols.push_back(e);
        }
        j["columns"] = cols;
        emit(os, j);
    } else if (cfg.format == "csv") {
        os << "config";
        for (const auto& col : ab.columns) os << "," << col.label();
        os << "\n";
        for (int i = 0; i < space.dim(); ++i) {
            os << row_literal(i);
            for (const auto& col : ab.columns) os << "," << format_double(col.coeffs(i));
            os << "\n";
        }
    } else {
        os << "N = " << cfg.n << "  mu = (" << mu[0] << "," << mu[1] << "," << mu[2]
           << "," << mu[3] << ")  dim = " << space.dim() << "\n\n";
        os << "config";
        for (const auto& col : ab.columns) os << "  " << col.label();
        os << "\n";
        for (int i = 0; i < space.dim(); ++i) {
            os << row_literal(i);
            for (const auto& col : ab.columns) os << "  " << fmt12(col.coeffs(i));
            os << "\n";
        }
    }
}

// ------------------------------------------------------------ spectrum ----

Scope resolve_scope(const RunConfig& cfg) {
    if (cfg.sector && cfg.ne)
        throw UsageError("--sector and --ne are mutually exclusive");
    if (cfg.sector) return Scope::one_sector(*cfg.sector);
    if (cfg.ne) return Scope::electron_count(*cfg.ne);
    if (cfg.strategy == Strategy::sector_swd) {
        std::cerr << "note: adapted blocks default to the half-filled window Ne = "
                  << cfg.n << "\n";
        return Scope::electron_count(cfg.n);
    }
    return Scope::full_space();
}

void spectrum_impl(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg, {"json", "csv", "table"});
    if (cfg.materialize && cfg.format != "json")
        throw UsageError("--materialize requires --format json");
    check_enumerable(cfg.n);
    ModelParams params{cfg.n, cfg.t, cfg.u, cfg.boundary};
    Scope scope = resolve_scope(cfg);
    BlockDecomposition dec = block_diagonalize(params, scope, cfg.strategy);

    std::vector<Spectrum> spectra;
    double max_eigen_residual = 0.0;
    for (const auto& b : dec.blocks) {
        spectra.push_back(diagonalize(b.op, cfg.materialize));
        max_eigen_residual = std::max(max_eigen_residual, spectra.back().max_residual);
    }
    if (cfg.spectrum_tol && max_eigen_residual > *cfg.spectrum_tol)
        throw NumericalError("eigenpair residual " + format_double(max_eigen_residual) +
                             " exceeds the requested tolerance");

    if (cfg.format == "json") {
        json j;
        j["params"] = json{{"n", params.n},
                           {"t", params.t},
                           {"u", params.u},
                           {"boundary", boundary_name(params.boundary)}};
        j["strategy"] = strategy_name(cfg.strategy);
        j["scope"] = dec.scope_tag;
        json blocks = json::array();
        for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
            const Block& b = dec.blocks[i];
            json e;
            e["label"] = b.label;
            e["dim"] = b.dim;
            e["sector"] = b.sector_tag;
            e["S"] = b.S ? json(*b.S) : json(nullptr);
            e["J"] = b.J ? json(*b.J) : json(nullptr);
            e["k"] = b.k ? json(*b.k) : json(nullptr);
            e["eigenvalues"] = spectra[i].eigenvalues;
            if (cfg.materialize) {
                e["basis"] = b.column_labels;
                json vecs = json::array();
                for (int c = 0; c < spectra[i].vectors.cols(); ++c) {
                    json v = json::array();
                    for (int r = 0; r < spectra[i].vectors.rows(); ++r)
                        v.push_back(json::array({spectra[i].vectors(r, c).real(),
                                                 spectra[i].vectors(r, c).imag()}));
                    vecs.push_back(v);
                }
                e["vectors"] = vecs;
            }
            blocks.push_back(e);
        }
        j["blocks"] = blocks;
        j["total_dim"] = dec.total_dim;
        j["residuals"] = json{{"offblock_computed", dec.residual_computed},
                              {"offblock", dec.residual_computed
                                               ? json(dec.offblock_residual)
                                               : json(nullptr)},
                              {"residual_cap", dec.residual_cap},
                              {"max_eigen", max_eigen_residual}};
        emit(os, j);
    } else if (cfg.format == "csv") {
        os << "block_label,index,eigenvalue\n";
        for (std::size_t i = 0; i < dec.blocks.size(); ++i)
            for (std::size_t v = 0; v < spectra[i].eigenvalues.size(); ++v)
                os << "\"" << dec.blocks[i].label << "\"," << v << ","
                   << format_double(spectra[i].eigenvalues[v]) << "\n";
    } else {
        os << "N = " << params.n << "  t = " << fmt12(params.t)
           << "  u = " << fmt12(params.u) << "  boundary "
           << boundary_name(params.boundary) << "\n";
        os << "strategy " << strategy_name(cfg.strategy) << "  scope "
           << dec.scope_tag << "  total dim = " << dec.total_dim << "\n";
        if (dec.residual_computed)
            os << "off-block residual = " << fmt12(dec.offblock_residual) << "\n";
        else
            os << "off-block residual skipped (sector above "
               << dec.residual_cap << " states)\n";
        for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
            os << "\n" << dec.blocks[i].label << "  dim = " << dec.blocks[i].dim
               << "\n";
            for (double ev : spectra[i].eigenvalues) os << "  " << fmt12(ev) << "\n";
        }
    }
}

// -------------------------------------------------------------- verify ----

struct Check {
    std::string name;
    std::string status;  // pass | skip | fail
    double value = 0.0;
    double threshold = 0.0;
    std::string detail;
};

void add_pass_fail(std::vector<Check>& checks, const std::string& name, double value,
                   double threshold, const std::string& detail = "") {
    checks.push_back({name, value <= threshold ? "pass" : "fail", value, threshold,
                      detail});
}

void add_skip(std::vector<Check>& checks, const std::string& name,
              const std::string& why) {
    checks.push_back({name, "skip", 0.0, 0.0, why});
}

std::vector<double> sorted_block_eigenvalues(const BlockDecomposition& dec,
                                             const std::string& sector_tag) {
    std::vector<double> all;
    for (const auto& b : dec.blocks) {
        if (!sector_tag.empty() && b.sector_tag != sector_tag) continue;
        Spectrum s = diagonalize(b.op);
        all.insert(all.end(), s.eigenvalues.begin(), s.eigenvalues.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

double spectrum_gap(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw InvariantError("spectra have different sizes");
    double gap = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        gap = std::max(gap, std::abs(a[i] - b[i]));
    return gap;
}

int verify_impl(const RunConfig& cfg, std::ostream& os) {
    require_format(cfg, {"json", "csv", "table"});
    check_enumerable(cfg.n);
    const std::vector<std::string> known = {"all",     "spin",   "pseudospin",
                                            "projectors", "ledger", "blocks",
                                            "momentum"};
    if (std::find(known.begin(), known.end(), cfg.suite) == known.end())
        throw UsageError("unknown suite '" + cfg.suite + "'");
    auto wants = [&](const char* s) { return cfg.suite == "all" || cfg.suite == s; };

    ModelParams params{cfg.n, cfg.t, cfg.u, cfg.boundary};
    int n = cfg.n;
    double tol = cfg.tol;
    std::vector<Check> checks;

    std::optional<SymmetryReport> report;
    if (wants("spin") || wants("pseudospin")) report = verify_symmetries(params);

    if (wants("spin")) {
        double scale = tol * std::max(1.0, report->h_norm);
        add_pass_fail(checks, "[H,Sz]", report->comm_sz, scale);
        add_pass_fail(checks, "[H,S^2]", report->comm_s2, scale);
        add_pass_fail(checks, "[H,Ne]", report->comm_ne, scale);
        if (report->translation_applicable)
            add_pass_fail(checks, "[H,T]", report->comm_translation, scale);
        else
            add_skip(checks, "[H,T]", "open boundary");
    }
    if (wants("pseudospin")) {
        if (report->pseudo_applicable) {
            double scale = tol * std::max(1.0, report->h_half_norm);
            add_pass_fail(checks, "[H,Jz]", report->comm_jz, scale,
                          "half-filled window");
            add_pass_fail(checks, "[H,J^2]", report->comm_j2, scale,
                          "half-filled window");
        } else {
            add_skip(checks, "[H,Jz]", "odd chain with periodic boundary");
            add_skip(checks, "[H,J^2]", "odd chain with periodic boundary");
        }
    }
    if (wants("projectors")) {
        try {
            double worst = 0.0;
            for (int len = 1; len <= n; ++len)
                for (int k = 0; k <= len; ++k) {
                    OrbitSpace space(len, k);
                    Eigen::MatrixXd m = irreducible_basis(space).matrix();
                    worst = std::max(worst,
                                     (m.transpose() * m -
                                      Eigen::MatrixXd::Identity(space.dim(),
                                                                space.dim()))
                                         .cwiseAbs()
                                         .maxCoeff());
                }
            add_pass_fail(checks, "projector bases", worst, tol,
                          "all two-letter weights, lengths 1.." + std::to_string(n));
        } catch (const std::exception& e) {
            checks.push_back({"projector bases", "fail", 0.0, tol, e.what()});
        }
    }
    if (wants("ledger")) {
        if (n % 2 != 0 && cfg.boundary == Boundary::periodic) {
            add_skip(checks, "ledger sums", "odd chain with periodic boundary");
        } else {
            try {
                long long sum = 0;
                for (int np = 0; np <= n; ++np)
                    sum += sector_ledger(n, Sector{np, n - np}, cfg.boundary).total;
                double gap = std::abs(
                    static_cast<double>(sum - halffilling_dimension(n)));
                add_pass_fail(checks, "ledger sums", gap, 0.5,
                              "all half-filled sectors");
            } catch (const std::exception& e) {
                checks.push_back({"ledger sums", "fail", 0.0, 0.5, e.what()});
            }
        }
    }
    if (wants("momentum")) {
        if (cfg.boundary != Boundary::periodic) {
            add_skip(checks, "momentum blocks", "open boundary");
        } else if (n > 6) {
            add_skip(checks, "momentum blocks",
                     "dense cross-check limited to N <= 6");
        } else {
            BlockDecomposition dec =
                block_diagonalize(params, Scope::full_space(),
                                  Strategy::sector_momentum);
            double gap = 0.0;
            for (Sector s : scope_sectors(n, Scope::full_space())) {
                Basis sec = enumerate_basis(n, s);
                Spectrum dense = diagonalize(build_hamiltonian(params, sec));
                std::string stag = "(" + std::to_string(s.n_plus) + "," +
                                   std::to_string(s.n_minus) + ")";
                gap = std::max(gap, spectrum_gap(dense.eigenvalues,
                                                 sorted_block_eigenvalues(dec, stag)));
            }
            add_pass_fail(checks, "momentum blocks", gap, tol,
                          "spectra against dense sectors");
            add_pass_fail(checks, "momentum off-block", dec.offblock_residual,
                          tol * std::max(1.0, report ? report->h_norm : 1.0));
        }
    }
    if (wants("blocks")) {
        if (n % 2 != 0 && cfg.boundary == Boundary::periodic) {
            add_skip(checks, "adapted blocks", "odd chain with periodic boundary");
        } else if (n > 6) {
            add_skip(checks, "adapted blocks", "dense cross-check limited to N <= 6");
        } else {
            BlockDecomposition dec = block_diagonalize(
                params, Scope::electron_count(n), Strategy::sector_swd);
            Basis window = enumerate_ne_basis(n, n);
            Spectrum dense = diagonalize(build_hamiltonian(params, window));
            double gap = spectrum_gap(dense.eigenvalues,
                                      sorted_block_eigenvalues(dec, ""));
            add_pass_fail(checks, "adapted blocks", gap, tol,
                          "spectra against the dense half-filled window");
            add_pass_fail(checks, "adapted off-block", dec.offblock_residual,
                          tol * std::max(1.0, report ? report->h_half_norm : 1.0));
        }
    }

    int failures = 0;
    for (const auto& c : checks)
        if (c.status == "fail") ++failures;

    if (cfg.format == "json") {
        json j;
        j["params"] = json{{"n", params.n},
                           {"t", params.t},
                           {"u", params.u},
                           {"boundary", boundary_name(params.boundary)}};
        j["suite"] = cfg.suite;
        j["tolerance"] = tol;
        json arr = json::array();
        for (const auto& c : checks) {
            json e;
            e["name"] = c.name;
            e["status"] = c.status;
            e["value"] = c.value;
            e["threshold"] = c.threshold;
            e["detail"] = c.detail;
            arr.push_back(e);
        }
        j["checks"] = arr;
        j["failures"] = failures;
        emit(os, j);
    } else if (cfg.format == "csv") {
        os << "name,status,value,threshold,detail\n";
        for (const auto& c : checks)
            os << "\"" << c.name << "\"," << c.status << "," << format_double(c.value)
               << "," << format_double(c.threshold) << ",\"" << c.detail << "\"\n";
    } else {
        for (const auto& c : checks) {
            std::string tag = c.status == "pass" ? "[PASS]"
                              : c.status == "skip" ? "[SKIP]"
                                                   : "[FAIL]";
            os << tag << " " << c.name;
            if (c.status != "skip")
                os << "  value " << format_double(c.value) << "  threshold "
                   << format_double(c.threshold);
            if (!c.detail.empty()) os << "  (" << c.detail << ")";
            os << "\n";
        }
        int passed = 0, skipped = 0;
        for (const auto& c : checks) {
            if (c.status == "pass") ++passed;
            if (c.status == "skip") ++skipped;
        }
        os << passed << " passed, " << skipped << " skipped, " << failures
           << " failed\n";
    }
    return failures ? 1 : 0;
}

}  // namespace

void cmd_dims(const RunConfig& cfg, std::ostream& os) { dims_impl(cfg, os); }
void cmd_orbits(const RunConfig& cfg, std::ostream& os) { orbits_impl(cfg, os); }
void cmd_table1(const RunConfig& cfg, std::ostream& os) { table1_impl(cfg, os); }
void cmd_basis(const RunConfig& cfg, std::ostream& os) { basis_impl(cfg, os); }
void cmd_spectrum(const RunConfig& cfg, std::ostream& os) { spectrum_impl(cfg, os); }
int cmd_verify(const RunConfig& cfg, std::ostream& os) { return verify_impl(cfg, os); }

int run_command(const RunConfig& cfg) {
    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) throw UsageError("cannot open output file '" + cfg.out + "'");
        os = &file;
    }
    if (cfg.subcommand == "dims") {
        cmd_dims(cfg, *os);
    } else if (cfg.subcommand == "orbits") {
        cmd_orbits(cfg, *os);
    } else if (cfg.subcommand == "table1") {
        cmd_table1(cfg, *os);
    } else if (cfg.subcommand == "basis") {
        cmd_basis(cfg, *os);
    } else if (cfg.subcommand == "spectrum") {
        cmd_spectrum(cfg, *os);
    } else if (cfg.subcommand == "verify") {
        return cmd_verify(cfg, *os);
    } else {
        throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
    }
    return 0;
}

}  // namespace hubswd
