#pragma once
// Symmetric-group machinery: partitions, standard Young tableaux, Jucys-Murphy
// operators and Young orthogonal projectors on two-letter orbit spaces.
//
// The projector for a standard tableau y is the product over j = 2..N of
// factors (M_j - m I)/(m_j(y) - m), one factor for every content m of a cell
// that could have received j at step j but did not. Projector images are
// computed in exact integer arithmetic (the denominators are an overall
// scalar) and verified as joint JM eigenvectors by integer equality before
// any floating-point normalization.

#include <hubswd/common.hpp>
#include <hubswd/sparse.hpp>

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hubswd {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive; empty for n = 0

    int sum() const;
    int rows() const { return static_cast<int>(parts.size()); }
    std::string label() const;  // "{5,3}", "{}" for the empty shape

    friend bool operator==(const Partition&, const Partition&) = default;
};

// All partitions of n with at most max_parts parts dominating mu (compared
// against mu sorted descending), in dominance-descending order.
std::vector<Partition> partitions_dominating(int n, std::vector<int> mu,
                                             int max_parts);

// Hook-length formula.
long long dim_irrep(const Partition& shape);

struct StandardTableau {
    Partition shape;
    std::vector<std::vector<int>> rows;

    std::vector<int> row_word() const;  // row index of 1..n
    std::string label() const;          // "(124|3)", "()" for the empty shape
};

// All standard Young tableaux of the shape, ordered by row word ascending
// lexicographically.
std::vector<StandardTableau> standard_tableaux(const Partition& shape);

// Contents m_j = column - row of the cell holding j; m_1 = 0.
std::vector<int> content_vector(const StandardTableau& y);

// The orbit of all words of a fixed two-letter weight. Words are bitmasks
// with bit (length - pos) set when position pos carries the second letter, so
// ascending mask order is lexicographic with letter0 < letter1.
class OrbitSpace {
public:
    OrbitSpace(int length, int second_count);

    int length() const { return n_; }
    int dim() const { return static_cast<int>(words_.size()); }
    std::array<int, 2> weight() const { return {n_ - k_, k_}; }
    std::uint32_t word(int i) const { return words_[i]; }
    int index_of(std::uint32_t w) const;
    int letter(int i, int pos) const;  // 0 or 1, pos is 1-based

private:
    int n_ = 0;
    int k_ = 0;
    std::vector<std::uint32_t> words_;
};

// Exact action of the Jucys-Murphy operator M_j (sum of transpositions (j,j')
// for j' < j, acting by place permutation) on a coefficient vector.
std::vector<long long> jm_apply(int j, const OrbitSpace& space,
                                const std::vector<long long>& v);

// M_j as a sparse integer matrix over the orbit basis.
SparseOperator jm_matrix(int j, const OrbitSpace& space);

// The exact integer Gelfand-Tsetlin vector spanning the rank-1 image of the
// projector for tableau y on the orbit space.
std::vector<long long> gz_vector(const OrbitSpace& space, const StandardTableau& y);

struct ProjectorMatrix {
    Partition lambda;
    StandardTableau y;
    Eigen::MatrixXd mat;
};

ProjectorMatrix young_projector(const Partition& lambda, const StandardTableau& y,
                                const OrbitSpace& space);

struct AdaptedColumn {
    Partition shape;
    int tableau_index = 0;  // 1-based within the SYT order of the shape
    StandardTableau tableau;
    Eigen::VectorXd coeffs;

    std::string label() const;  // "{3,1}:T2"
};

struct AdaptedBasis {
    OrbitSpace space;
    std::vector<AdaptedColumn> columns;  // lambda dominance-descending, then SYT order

    Eigen::MatrixXd matrix() const;
};

AdaptedBasis irreducible_basis(const OrbitSpace& space);

}  // namespace hubswd
