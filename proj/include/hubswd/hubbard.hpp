#pragma once
// Hamiltonian assembly over explicit bases, symmetry verification, block
// diagonalization by sector, momentum or the full symmetry-adapted basis, and
// dense spectra.

#include <hubswd/operators.hpp>
#include <hubswd/swd.hpp>
#include <hubswd/translation.hpp>

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace hubswd {

SparseOperator build_hamiltonian(const ModelParams& params, const Basis& basis);

struct Su2Ops {
    SparseOperator z, plus, minus, casimir;
};

// Over the full 4^n basis.
Su2Ops build_spin_ops(int n);
Su2Ops build_pseudospin_ops(int n);

// One-step cyclic translation with the fermionic sign picked up by the
// electrons wrapping from site N to site 1.
std::pair<int, FockState> translate_state(const FockState& state);
SparseOperator translation_matrix(const Basis& basis);

struct SymmetryReport {
    ModelParams params;
    double h_norm = 0.0;  // Frobenius norm over the full space
    double comm_sz = 0.0, comm_s2 = 0.0, comm_ne = 0.0;
    bool translation_applicable = false;  // periodic boundary only
    double comm_translation = 0.0;
    bool pseudo_applicable = false;  // even n or open boundary
    double h_half_norm = 0.0;        // over the N_e = n window
    double comm_jz = 0.0, comm_j2 = 0.0;
};

SymmetryReport verify_symmetries(const ModelParams& params);

struct Scope {
    enum class Kind { full, electrons, sector };
    Kind kind = Kind::full;
    int ne = 0;
    Sector sector{};

    static Scope full_space() { return {}; }
    static Scope electron_count(int ne) { return {Kind::electrons, ne, {}}; }
    static Scope one_sector(Sector s) { return {Kind::sector, 0, s}; }

    std::string tag() const;
};

// Sectors covered by the scope, electron count ascending then n_plus
// descending (a single sector for Kind::sector).
std::vector<Sector> scope_sectors(int n, const Scope& scope);

enum class Strategy { sector, sector_momentum, sector_swd };

std::string strategy_name(Strategy s);
Strategy strategy_from_name(const std::string& name);

struct Block {
    std::string label;
    int dim = 0;
    SparseOperator op;
    std::string sector_tag;
    std::optional<double> S, J, k;
    // One human-readable label per block basis column: configuration
    // literals, orbit representatives or adapted-vector labels.
    std::vector<std::string> column_labels;
};

struct BlockDecomposition {
    Strategy strategy = Strategy::sector;
    std::string scope_tag;
    std::vector<Block> blocks;
    long long total_dim = 0;
    bool residual_computed = false;
    double offblock_residual = 0.0;
    int residual_cap = 0;  // sector size above which the scan is skipped
};

// Off-block residuals above this sector dimension are skipped, not computed.
inline constexpr int kResidualCap = 2048;

BlockDecomposition block_diagonalize(const ModelParams& params, const Scope& scope,
                                     Strategy strategy);

struct Spectrum {
    std::string label;
    std::vector<double> eigenvalues;  // ascending
    double max_residual = 0.0;        // relative to max(1, ||H||_F)
    Eigen::MatrixXcd vectors;         // empty unless requested
};

Spectrum diagonalize(const SparseOperator& op, bool want_vectors = false);

}  // namespace hubswd
