#pragma once
// Half-filling Schur-Weyl decomposition: each configuration splits into the
// sites carrying single electrons (spin space, letters U/D) and the sites
// carrying pairs or holes (pseudo-spin space, letters B/E). Each factor space
// decomposes under its symmetric group; the ledger tallies dimensions per
// weight, and adapted vectors carry the quantum numbers (S, Sz, J, Jz).
//
// Adapted vectors embed the two orbit-space irreducible vectors at the
// placement's sites and multiply each configuration coefficient by the gauge
// (-1)^(sum of doubly occupied site indices), which intertwines the site-
// staggered pseudo-spin generators with their letter-level counterparts.

#include <hubswd/fock.hpp>
#include <hubswd/operators.hpp>
#include <hubswd/symrep.hpp>

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace hubswd {

struct Placement {
    std::vector<int> spin_sites;    // ascending
    std::vector<int> pseudo_sites;  // ascending
};

struct SplitResult {
    Placement placement;
    std::vector<int> spin_word;    // 0 = U, 1 = D, in site order
    std::vector<int> pseudo_word;  // 0 = B, 1 = E
};

SplitResult split(const Configuration& config);

// All ways to choose which n_spin sites carry spin letters, in
// colexicographic order of the spin-site subsets.
std::vector<Placement> placements(int n, int n_spin);

struct LedgerIrrep {
    Partition shape;
    long long dim = 0;
    double quantum = 0.0;  // S for spin shapes, J for pseudo shapes
};

struct LedgerRow {
    std::array<int, 4> mu{};          // (#U, #D, #B, #E)
    std::vector<LedgerIrrep> spin;    // lambda' dominance-descending; empty when N' = 0
    std::vector<LedgerIrrep> pseudo;  // lambda'' likewise; empty when N'' = 0
    double s_z = 0.0, j_z = 0.0;
    long long tau = 0, x = 0;
};

struct Ledger {
    int n = 0;
    Sector sector{};
    std::vector<LedgerRow> rows;  // doublon count ascending
    long long total = 0;
};

// Half-filling only; odd n requires open boundaries.
Ledger sector_ledger(int n, Sector sector, Boundary boundary);

long long halffilling_dimension(int n);

// One unit-norm adapted vector over the sector basis. Tableau indices are
// 1-based positions in the deterministic SYT order.
Eigen::VectorXd adapted_vector(const Basis& basis, const std::array<int, 4>& mu,
                               const Partition& lambda_spin, int y_spin,
                               const Partition& lambda_pseudo, int y_pseudo,
                               const Placement& placement);

struct SwdColumn {
    std::array<int, 4> mu{};
    Partition lambda_spin, lambda_pseudo;
    int y_spin = 1, y_pseudo = 1;  // 1-based SYT indices
    int placement_index = 0;       // into placements(n, N')
    double S = 0.0, Sz = 0.0, J = 0.0, Jz = 0.0;
};

// Labels of all adapted vectors of a half-filled sector, ordered by
// (mu row, lambda' dom-desc, lambda'' dom-desc, placement, y', y'').
std::vector<SwdColumn> swd_columns(int n, Sector sector, Boundary boundary);

struct SwdBasis {
    std::vector<SwdColumn> columns;
    Eigen::MatrixXd matrix;  // orthogonal, sector dim squared
};

SwdBasis swd_basis(const Basis& sector_basis, Boundary boundary);

}  // namespace hubswd
