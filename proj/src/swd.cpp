#include <hubswd/swd.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>

namespace hubswd {

namespace {

double spin_of(const Partition& shape) {
    if (shape.parts.empty()) return 0.0;
    int a = shape.parts[0];
    int b = shape.rows() > 1 ? shape.parts[1] : 0;
    return 0.5 * (a - b);
}

// Normalized GZ vector with the first nonzero coefficient positive, matching
// the irreducible_basis convention.
Eigen::VectorXd factor_vector(const OrbitSpace& space, const Partition& lambda,
                              int y_index) {
    auto tableaux = standard_tableaux(lambda);
    if (y_index < 1 || y_index > static_cast<int>(tableaux.size()))
        throw UsageError("tableau index out of range for " + lambda.label());
    auto raw = gz_vector(space, tableaux[y_index - 1]);
    Eigen::VectorXd v(space.dim());
    for (int i = 0; i < space.dim(); ++i) v(i) = static_cast<double>(raw[i]);
    double norm = v.norm();
    if (norm <= 0.0) throw InvariantError("zero GZ vector");
    for (int i = 0; i < space.dim(); ++i) {
        if (raw[i] != 0) {
            if (raw[i] < 0) norm = -norm;
            break;
        }
    }
    return v / norm;
}

int gauge_sign(const Configuration& config) {
    int s = 0;
    for (int j = 1; j <= config.sites(); ++j)
        if (config.at(j) == Letter::B) s += j;
    return (s % 2 == 0) ? 1 : -1;
}

Configuration compose(int n, const Placement& placement, const OrbitSpace& spin_space,
                      int spin_word, const OrbitSpace& pseudo_space, int pseudo_word) {
    std::vector<Letter> letters(n, Letter::E);
    for (std::size_t i = 0; i < placement.spin_sites.size(); ++i) {
        int bit = spin_space.letter(spin_word, static_cast<int>(i) + 1);
        letters[placement.spin_sites[i] - 1] = bit ? Letter::D : Letter::U;
    }
    for (std::size_t i = 0; i < placement.pseudo_sites.size(); ++i) {
        int bit = pseudo_space.letter(pseudo_word, static_cast<int>(i) + 1);
        letters[placement.pseudo_sites[i] - 1] = bit ? Letter::E : Letter::B;
    }
    return Configuration::from_letters(letters);
}

std::vector<LedgerIrrep> irrep_list(int n, std::vector<int> mu) {
    std::vector<LedgerIrrep> out;
    for (const auto& shape : partitions_dominating(n, std::move(mu), 2))
        out.push_back({shape, dim_irrep(shape), spin_of(shape)});
    return out;
}

}  // namespace

SplitResult split(const Configuration& config) {
    SplitResult r;
    for (int j = 1; j <= config.sites(); ++j) {
        switch (config.at(j)) {
            case Letter::U:
                r.placement.spin_sites.push_back(j);
                r.spin_word.push_back(0);
                break;
            case Letter::D:
                r.placement.spin_sites.push_back(j);
                r.spin_word.push_back(1);
                break;
            case Letter::B:
                r.placement.pseudo_sites.push_back(j);
                r.pseudo_word.push_back(0);
                break;
            case Letter::E:
                r.placement.pseudo_sites.push_back(j);
                r.pseudo_word.push_back(1);
                break;
        }
    }
    return r;
}

std::vector<Placement> placements(int n, int n_spin) {
    if (n < 0 || n > 20) throw UsageError("site count out of range");
    if (n_spin < 0 || n_spin > n) throw UsageError("spin-site count out of range");
    std::vector<Placement> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != n_spin) continue;
        Placement p;
        for (int j = 1; j <= n; ++j)
            (mask >> (j - 1) & 1u ? p.spin_sites : p.pseudo_sites).push_back(j);
        out.push_back(std::move(p));
    }
    return out;
}

Ledger sector_ledger(int n, Sector sector, Boundary boundary) {
    if (n < 1) throw UsageError("need at least one site");
    if (sector.n_plus < 0 || sector.n_minus < 0 || sector.n_plus > n ||
        sector.n_minus > n)
        throw UsageError("sector occupation out of range");
    if (sector.n_plus + sector.n_minus != n)
        throw UsageError("the decomposition requires half filling (n+ + n- = N)");
    if (n % 2 != 0 && boundary == Boundary::periodic)
        throw UsageError("odd site count requires open boundaries");

    Ledger ledger;
    ledger.n = n;
    ledger.sector = sector;
    for (int d = 0; d <= std::min(sector.n_plus, sector.n_minus); ++d) {
        LedgerRow row;
        row.mu = {sector.n_plus - d, sector.n_minus - d, d, d};
        int n_spin = row.mu[0] + row.mu[1];
        int n_pseudo = row.mu[2] + row.mu[3];
        if (n_spin > 0) row.spin = irrep_list(n_spin, {row.mu[0], row.mu[1]});
        if (n_pseudo > 0) row.pseudo = irrep_list(n_pseudo, {row.mu[2], row.mu[3]});
        row.s_z = 0.5 * (row.mu[0] - row.mu[1]);
        row.j_z = 0.5 * (row.mu[2] - row.mu[3]);
        row.tau = binomial(n, n_spin);
        long long spin_sum = 0, pseudo_sum = 0;
        for (const auto& ir : row.spin) spin_sum += ir.dim;
        for (const auto& ir : row.pseudo) pseudo_sum += ir.dim;
        row.x = row.tau * (n_spin > 0 ? spin_sum : 1) * (n_pseudo > 0 ? pseudo_sum : 1);
        ledger.total += row.x;
        ledger.rows.push_back(std::move(row));
    }
    long long expected = binomial(n, sector.n_plus) * binomial(n, sector.n_minus);
    if (ledger.total != expected)
        throw InvariantError("ledger total disagrees with the sector dimension");
    return ledger;
}

long long halffilling_dimension(int n) {
    if (n < 1) throw UsageError("need at least one site");
    long long total = 0;
    for (int np = 0; np <= n; ++np) total += binomial(n, np) * binomial(n, n - np);
    return total;
}

Eigen::VectorXd adapted_vector(const Basis& basis, const std::array<int, 4>& mu,
                               const Partition& lambda_spin, int y_spin,
                               const Partition& lambda_pseudo, int y_pseudo,
                               const Placement& placement) {
    int n = basis.sites();
    int n_spin = mu[0] + mu[1];
    int n_pseudo = mu[2] + mu[3];
    if (n_spin + n_pseudo != n) throw UsageError("weight does not fill the chain");
    if (static_cast<int>(placement.spin_sites.size()) != n_spin ||
        static_cast<int>(placement.pseudo_sites.size()) != n_pseudo)
        throw UsageError("placement does not match the weight");
    if (lambda_spin.sum() != n_spin || lambda_pseudo.sum() != n_pseudo)
        throw UsageError("shape size does not match the weight");

    OrbitSpace spin_space(n_spin, mu[1]);
    OrbitSpace pseudo_space(n_pseudo, mu[3]);
    Eigen::VectorXd a = factor_vector(spin_space, lambda_spin, y_spin);
    Eigen::VectorXd b = factor_vector(pseudo_space, lambda_pseudo, y_pseudo);

    Eigen::VectorXd v = Eigen::VectorXd::Zero(basis.size());
    for (int i = 0; i < spin_space.dim(); ++i) {
        if (a(i) == 0.0) continue;
        for (int j = 0; j < pseudo_space.dim(); ++j) {
            if (b(j) == 0.0) continue;
            Configuration c = compose(n, placement, spin_space, i, pseudo_space, j);
            int idx = basis.index_of(c);
            if (idx < 0) throw InvariantError("adapted vector leaves the basis");
            v(idx) = a(i) * b(j) * gauge_sign(c);
        }
    }
    if (std::abs(v.norm() - 1.0) > 1e-12)
        throw InvariantError("adapted vector is not normalized");
    return v;
}

std::vector<SwdColumn> swd_columns(int n, Sector sector, Boundary boundary) {
    Ledger ledger = sector_ledger(n, sector, boundary);
    std::vector<SwdColumn> out;
    const LedgerIrrep trivial{Partition{}, 1, 0.0};
    for (const auto& row : ledger.rows) {
        int n_spin = row.mu[0] + row.mu[1];
        auto spin_list = row.spin.empty() ? std::vector<LedgerIrrep>{trivial} : row.spin;
        auto pseudo_list =
            row.pseudo.empty() ? std::vector<LedgerIrrep>{trivial} : row.pseudo;
        int n_place = static_cast<int>(binomial(n, n_spin));
        for (const auto& ls : spin_list) {
            long long f_spin = ls.shape.parts.empty() ? 1 : dim_irrep(ls.shape);
            for (const auto& lp : pseudo_list) {
                long long f_pseudo = lp.shape.parts.empty() ? 1 : dim_irrep(lp.shape);
                for (int pi = 0; pi < n_place; ++pi)
                    for (int ys = 1; ys <= f_spin; ++ys)
                        for (int yp = 1; yp <= f_pseudo; ++yp) {
                            SwdColumn col;
                            col.mu = row.mu;
                            col.lambda_spin = ls.shape;
                            col.lambda_pseudo = lp.shape;
                            col.y_spin = ys;
                            col.y_pseudo = yp;
                            col.placement_index = pi;
                            col.S = ls.quantum;
                            col.Sz = row.s_z;
                            col.J = lp.quantum;
                            col.Jz = row.j_z;
                            out.push_back(std::move(col));
                        }
            }
        }
    }
    if (static_cast<long long>(out.size()) != ledger.total)
        throw InvariantError("column count disagrees with the ledger");
    return out;
}

SwdBasis swd_basis(const Basis& sector_basis, Boundary boundary) {
    if (sector_basis.size() == 0) throw UsageError("empty basis");
    int n = sector_basis.sites();
    Sector sector{sector_basis.at(0).n_plus(), sector_basis.at(0).n_minus()};
    for (const auto& c : sector_basis.configs())
        if (c.n_plus() != sector.n_plus || c.n_minus() != sector.n_minus)
            throw UsageError("basis is not a single sector");

    SwdBasis out;
    out.columns = swd_columns(n, sector, boundary);
    out.matrix.resize(sector_basis.size(), static_cast<int>(out.columns.size()));

    std::map<int, std::vector<Placement>> place_cache;
    // Factor vectors keyed by (length, second letter count, shape, tableau).
    std::map<std::tuple<int, int, std::string, int>, Eigen::VectorXd> vec_cache;
    auto factor = [&](int len, int k, const Partition& shape, int y) {
        auto key = std::make_tuple(len, k, shape.label(), y);
        auto it = vec_cache.find(key);
        if (it == vec_cache.end())
            it = vec_cache.emplace(key, factor_vector(OrbitSpace(len, k), shape, y)).first;
        return it->second;
    };

    for (std::size_t ci = 0; ci < out.columns.size(); ++ci) {
        const SwdColumn& col = out.columns[ci];
        int n_spin = col.mu[0] + col.mu[1];
        int n_pseudo = col.mu[2] + col.mu[3];
        auto pit = place_cache.find(n_spin);
        if (pit == place_cache.end())
            pit = place_cache.emplace(n_spin, placements(n, n_spin)).first;
        const Placement& pl = pit->second[col.placement_index];

        OrbitSpace spin_space(n_spin, col.mu[1]);
        OrbitSpace pseudo_space(n_pseudo, col.mu[3]);
        const Eigen::VectorXd& a = factor(n_spin, col.mu[1], col.lambda_spin, col.y_spin);
        const Eigen::VectorXd& b =
            factor(n_pseudo, col.mu[3], col.lambda_pseudo, col.y_pseudo);

        Eigen::VectorXd v = Eigen::VectorXd::Zero(sector_basis.size());
        for (int i = 0; i < spin_space.dim(); ++i) {
            if (a(i) == 0.0) continue;
            for (int j = 0; j < pseudo_space.dim(); ++j) {
                if (b(j) == 0.0) continue;
                Configuration c = compose(n, pl, spin_space, i, pseudo_space, j);
                int idx = sector_basis.index_of(c);
                if (idx < 0) throw InvariantError("adapted vector leaves the basis");
                v(idx) = a(i) * b(j) * gauge_sign(c);
            }
        }
        out.matrix.col(static_cast<int>(ci)) = v;
    }
    return out;
}

}  // namespace hubswd
