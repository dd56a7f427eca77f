#include <hubswd/hubbard.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <sstream>

namespace hubswd {

namespace {

using Complex = std::complex<double>;
using SparseC = Eigen::SparseMatrix<Complex>;

std::string sector_label(Sector s) {
    return "(" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + ")";
}

std::string momentum_label(int k2) {
    if (k2 % 2 == 0) return std::to_string(k2 / 2);
    std::ostringstream os;
    os << (k2 / 2.0);
    return os.str();
}

std::string quantum_label(double q) {
    long long twice = std::llround(2.0 * q);
    if (twice % 2 == 0) return std::to_string(twice / 2);
    std::ostringstream os;
    os << (twice / 2.0);
    return os.str();
}

// Signed wavelet columns of one orbit, keyed by twice the momentum folded
// into (-N, N].
struct SignedWavelet {
    int k2 = 0;
    Eigen::VectorXcd column;
};

std::vector<SignedWavelet> signed_wavelets(const CyclicOrbit& orbit, const Basis& basis) {
    int n = basis.sites();
    auto elements = orbit.elements();
    int p = orbit.period;
    std::vector<int> step_sign(p);
    int sigma = 1;
    for (int m = 0; m < p; ++m) {
        auto [sign, next] = translate_state(FockState{elements[m]});
        if (!(next.config == elements[(m + 1) % p]))
            throw InvariantError("orbit elements out of order");
        step_sign[m] = sign;
        sigma *= sign;
    }
    int delta = sigma < 0 ? 1 : 0;
    std::vector<SignedWavelet> out;
    for (int m0 = 0; m0 < p; ++m0) {
        int k2 = orbit.kappa * (2 * m0 + delta);
        int fold = ((k2 % (2 * n)) + 2 * n) % (2 * n);
        if (fold > n) fold -= 2 * n;
        double k = k2 / 2.0;
        Complex phase = std::exp(Complex(0.0, 2.0 * std::numbers::pi * k / n));
        Eigen::VectorXcd col = Eigen::VectorXcd::Zero(basis.size());
        Complex a = 1.0 / std::sqrt(static_cast<double>(p));
        for (int m = 0; m < p; ++m) {
            int idx = basis.index_of(elements[m]);
            if (idx < 0) throw InvariantError("orbit leaves the basis");
            col(idx) = a;
            a *= static_cast<double>(step_sign[m]) * phase;
        }
        out.push_back({fold, std::move(col)});
    }
    return out;
}

// Squared Frobenius norm of the off-diagonal blocks of W^dagger H W, where
// the columns of W are grouped by the given block widths.
double offdiagonal_sq(const SparseC& h, const Eigen::MatrixXcd& w,
                      const std::vector<int>& widths) {
    Eigen::MatrixXcd m = w.adjoint() * (h * w);
    double sq = 0.0;
    int row0 = 0;
    for (int a = 0; a < static_cast<int>(widths.size()); ++a) {
        int col0 = 0;
        for (int b = 0; b < static_cast<int>(widths.size()); ++b) {
            if (a != b) sq += m.block(row0, col0, widths[a], widths[b]).squaredNorm();
            col0 += widths[b];
        }
        row0 += widths[a];
    }
    return sq;
}

}  // namespace

SparseOperator build_hamiltonian(const ModelParams& params, const Basis& basis) {
    if (basis.sites() != params.n)
        throw UsageError("basis site count does not match the model");
    return to_matrix(hamiltonian(params), basis);
}

Su2Ops build_spin_ops(int n) {
    Basis full = enumerate_basis(n);
    return {to_matrix(spin_z(n), full), to_matrix(spin_plus(n), full),
            to_matrix(spin_minus(n), full), to_matrix(spin_casimir(n), full)};
}

Su2Ops build_pseudospin_ops(int n) {
    Basis full = enumerate_basis(n);
    return {to_matrix(pseudo_z(n), full), to_matrix(pseudo_plus(n), full),
            to_matrix(pseudo_minus(n), full), to_matrix(pseudo_casimir(n), full)};
}

std::pair<int, FockState> translate_state(const FockState& state) {
    const Configuration& c = state.config;
    int n = c.sites();
    Letter last = c.at(n);
    int wrapped = (last == Letter::B) ? 2 : (last == Letter::E ? 0 : 1);
    int sign = (wrapped * (c.electrons() - wrapped)) % 2 ? -1 : 1;
    return {sign, FockState{translate_letters(c)}};
}

SparseOperator translation_matrix(const Basis& basis) {
    std::vector<Eigen::Triplet<Complex>> trips;
    trips.reserve(basis.size());
    for (int i = 0; i < basis.size(); ++i) {
        auto [sign, moved] = translate_state(FockState{basis.at(i)});
        int idx = basis.index_of(moved.config);
        if (idx < 0) throw InvariantError("translation leaves the basis");
        trips.emplace_back(idx, i, Complex(sign, 0.0));
    }
    SparseC m(basis.size(), basis.size());
    m.setFromTriplets(trips.begin(), trips.end());
    return SparseOperator{basis.tag(), std::move(m)};
}

SymmetryReport verify_symmetries(const ModelParams& params) {
    int n = params.n;
    SymmetryReport r;
    r.params = params;
    Basis full = enumerate_basis(n);
    SparseOperator h = to_matrix(hamiltonian(params), full);
    r.h_norm = h.frobenius_norm();
    r.comm_sz = commutator_norm(h, to_matrix(spin_z(n), full));
    r.comm_s2 = commutator_norm(h, to_matrix(spin_casimir(n), full));
    r.comm_ne = commutator_norm(h, to_matrix(total_number(n), full));
    r.translation_applicable = params.boundary == Boundary::periodic;
    if (r.translation_applicable)
        r.comm_translation = commutator_norm(h, translation_matrix(full));
    r.pseudo_applicable = (n % 2 == 0) || params.boundary == Boundary::open;
    if (r.pseudo_applicable) {
        Basis half = enumerate_ne_basis(n, n);
        SparseOperator hh = to_matrix(hamiltonian(params), half);
        r.h_half_norm = hh.frobenius_norm();
        r.comm_jz = commutator_norm(hh, to_matrix(pseudo_z(n), half));
        r.comm_j2 = commutator_norm(hh, to_matrix(pseudo_casimir(n), half));
    }
    return r;
}

std::string Scope::tag() const {
    switch (kind) {
        case Kind::full:
            return "full";
        case Kind::electrons:
            return "ne=" + std::to_string(ne);
        case Kind::sector:
            return "sector=" + sector_label(sector);
    }
    throw InvariantError("unknown scope");
}

std::vector<Sector> scope_sectors(int n, const Scope& scope) {
    auto window = [n](int ne) {
        std::vector<Sector> out;
        for (int np = std::min(ne, n); np >= std::max(0, ne - n); --np)
            out.push_back(Sector{np, ne - np});
        return out;
    };
    switch (scope.kind) {
        case Scope::Kind::full: {
            std::vector<Sector> out;
            for (int ne = 0; ne <= 2 * n; ++ne)
                for (Sector s : window(ne)) out.push_back(s);
            return out;
        }
        case Scope::Kind::electrons:
            if (scope.ne < 0 || scope.ne > 2 * n)
                throw UsageError("electron count out of range");
            return window(scope.ne);
        case Scope::Kind::sector:
            if (scope.sector.n_plus < 0 || scope.sector.n_plus > n ||
                scope.sector.n_minus < 0 || scope.sector.n_minus > n)
                throw UsageError("sector occupation out of range");
            return {scope.sector};
    }
    throw InvariantError("unknown scope");
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::sector:
            return "sector";
        case Strategy::sector_momentum:
            return "sector+momentum";
        case Strategy::sector_swd:
            return "sector+swd";
    }
    throw InvariantError("unknown strategy");
}

Strategy strategy_from_name(const std::string& name) {
    if (name == "sector") return Strategy::sector;
    if (name == "sector+momentum") return Strategy::sector_momentum;
    if (name == "sector+swd") return Strategy::sector_swd;
    throw UsageError("unknown strategy '" + name + "'");
}

BlockDecomposition block_diagonalize(const ModelParams& params, const Scope& scope,
                                     Strategy strategy) {
    int n = params.n;
    if (strategy == Strategy::sector_momentum && params.boundary != Boundary::periodic)
        throw UsageError("momentum blocks require periodic boundaries");

    BlockDecomposition out;
    out.strategy = strategy;
    out.scope_tag = scope.tag();
    out.residual_computed = true;
    out.residual_cap = kResidualCap;
    double residual_sq = 0.0;

    for (Sector s : scope_sectors(n, scope)) {
        if (strategy == Strategy::sector_swd && s.n_plus + s.n_minus != n)
            throw UsageError("the adapted basis covers half-filled sectors only");
        Basis sec = enumerate_basis(n, s);
        SparseOperator hs = build_hamiltonian(params, sec);
        std::string stag = sector_label(s);

        if (strategy == Strategy::sector) {
            Block b;
            b.label = "sector=" + stag;
            b.dim = sec.size();
            b.op = hs;
            b.sector_tag = stag;
            for (const auto& c : sec.configs()) b.column_labels.push_back(c.literal());
            out.total_dim += b.dim;
            out.blocks.push_back(std::move(b));
            continue;
        }

        // Column groups over the sector, in block order.
        struct Group {
            std::string label;
            std::optional<double> S, J, k;
            std::vector<int> columns;  // into the sector-wide transform
        };
        std::vector<Group> groups;
        Eigen::MatrixXcd w;

        if (strategy == Strategy::sector_momentum) {
            w.resize(sec.size(), sec.size());
            std::vector<std::string> col_orbit(sec.size());
            std::map<int, std::vector<int>> by_k2;
            int col = 0;
            for (const auto& orbit : orbits(n, s)) {
                for (auto& wl : signed_wavelets(orbit, sec)) {
                    w.col(col) = wl.column;
                    col_orbit[col] = orbit.representative.literal();
                    by_k2[wl.k2].push_back(col);
                    ++col;
                }
            }
            if (col != sec.size())
                throw InvariantError("wavelet count disagrees with the sector");
            std::vector<int> keys;
            for (const auto& [k2, cols] : by_k2) keys.push_back(k2);
            std::sort(keys.begin(), keys.end(), [](int a, int b) {
                return std::pair(std::abs(a), a < 0) < std::pair(std::abs(b), b < 0);
            });
            for (int k2 : keys) {
                Group g;
                g.k = k2 / 2.0;
                g.label = "sector=" + stag + " k=" + momentum_label(k2);
                g.columns = by_k2[k2];
                groups.push_back(std::move(g));
            }
            std::vector<int> widths;
            Eigen::MatrixXcd wsorted(sec.size(), sec.size());
            int pos = 0;
            for (auto& g : groups) {
                for (int c : g.columns) wsorted.col(pos++) = w.col(c);
                widths.push_back(static_cast<int>(g.columns.size()));
            }
            int col0 = 0;
            for (auto& g : groups) {
                int m = static_cast<int>(g.columns.size());
                Eigen::MatrixXcd wb = wsorted.middleCols(col0, m);
                Eigen::MatrixXcd hb = wb.adjoint() * (hs.mat * wb);
                Block b;
                b.label = g.label;
                b.dim = m;
                b.sector_tag = stag;
                b.k = g.k;
                for (int c : g.columns) b.column_labels.push_back("orbit=" + col_orbit[c]);
                SparseC sp = hb.sparseView(1.0, 1e-14);
                b.op = SparseOperator{g.label, std::move(sp)};
                out.total_dim += m;
                out.blocks.push_back(std::move(b));
                col0 += m;
            }
            if (groups.size() > 1) {
                if (sec.size() <= kResidualCap)
                    residual_sq += offdiagonal_sq(hs.mat, wsorted, widths);
                else
                    out.residual_computed = false;
            }
            continue;
        }

        // sector + swd
        SwdBasis adapted = swd_basis(sec, params.boundary);
        std::map<std::pair<long long, long long>, std::vector<int>,
                 std::greater<std::pair<long long, long long>>>
            by_sj;
        for (int c = 0; c < static_cast<int>(adapted.columns.size()); ++c) {
            const SwdColumn& sc = adapted.columns[c];
            by_sj[{std::llround(2 * sc.S), std::llround(2 * sc.J)}].push_back(c);
        }
        std::vector<int> widths;
        Eigen::MatrixXcd wsorted(sec.size(), sec.size());
        int pos = 0;
        for (const auto& [sj, cols] : by_sj) {
            for (int c : cols) wsorted.col(pos++) = adapted.matrix.col(c).cast<Complex>();
            widths.push_back(static_cast<int>(cols.size()));
        }
        int col0 = 0;
        for (const auto& [sj, cols] : by_sj) {
            int m = static_cast<int>(cols.size());
            double sv = sj.first / 2.0, jv = sj.second / 2.0;
            Eigen::MatrixXcd wb = wsorted.middleCols(col0, m);
            Eigen::MatrixXcd hb = wb.adjoint() * (hs.mat * wb);
            Block b;
            b.label = "sector=" + stag + " S=" + quantum_label(sv) +
                      " J=" + quantum_label(jv);
            b.dim = m;
            b.sector_tag = stag;
            b.S = sv;
            b.J = jv;
            for (int c : cols) {
                const SwdColumn& sc = adapted.columns[c];
                std::ostringstream os;
                os << "mu=(" << sc.mu[0] << "," << sc.mu[1] << "," << sc.mu[2] << ","
                   << sc.mu[3] << ") spin=" << sc.lambda_spin.label() << ":T"
                   << sc.y_spin << " pseudo=" << sc.lambda_pseudo.label() << ":T"
                   << sc.y_pseudo << " placement=" << sc.placement_index;
                b.column_labels.push_back(os.str());
            }
            SparseC sp = hb.sparseView(1.0, 1e-14);
            b.op = SparseOperator{b.label, std::move(sp)};
            out.total_dim += m;
            out.blocks.push_back(std::move(b));
            col0 += m;
        }
        if (widths.size() > 1) {
            if (sec.size() <= kResidualCap)
                residual_sq += offdiagonal_sq(hs.mat, wsorted, widths);
            else
                out.residual_computed = false;
        }
    }

    out.offblock_residual = std::sqrt(residual_sq);
    return out;
}

Spectrum diagonalize(const SparseOperator& op, bool want_vectors) {
    if (op.rows() != op.cols()) throw UsageError("spectrum needs a square operator");
    if (op.rows() == 0) return Spectrum{op.basis_tag, {}, 0.0, {}};
    if (!op.is_hermitian(1e-12))
        throw NumericalError("operator is not Hermitian");
    double scale = std::max(1.0, op.frobenius_norm());

    Eigen::MatrixXcd dense(op.mat);
    bool real = true;
    for (int c = 0; c < dense.cols() && real; ++c)
        for (int r = 0; r < dense.rows(); ++r)
            if (dense(r, c).imag() != 0.0) {
                real = false;
                break;
            }

    Spectrum out;
    out.label = op.basis_tag;
    Eigen::MatrixXcd vectors;
    Eigen::VectorXd values;
    if (real) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense.real());
        if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed");
        values = es.eigenvalues();
        vectors = es.eigenvectors().cast<Complex>();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
        if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed");
        values = es.eigenvalues();
        vectors = es.eigenvectors();
    }
    double max_residual = 0.0;
    for (int i = 0; i < values.size(); ++i) {
        double res = (dense * vectors.col(i) - values(i) * vectors.col(i)).norm();
        max_residual = std::max(max_residual, res / scale);
    }
    if (max_residual > 1e-9)
        throw NumericalError("eigenpair residual exceeds tolerance");
    out.eigenvalues.assign(values.data(), values.data() + values.size());
    out.max_residual = max_residual;
    if (want_vectors) out.vectors = std::move(vectors);
    return out;
}

}  // namespace hubswd
