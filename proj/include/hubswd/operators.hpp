#pragma once
// Second-quantized expressions over the chain and their sparse matrix
// realizations. Products expand symbolically, so sector-preserving composites
// such as the Casimirs restrict to a sector basis without leaving it through
// intermediate states.

#include <hubswd/fock.hpp>
#include <hubswd/sparse.hpp>

#include <vector>

namespace hubswd {

enum class Boundary { periodic, open };

struct ModelParams {
    int n = 2;
    double t = 1.0;
    double u = 4.0;
    Boundary boundary = Boundary::periodic;
};

struct FermiFactor {
    bool dagger = false;
    int site = 0;
    Spin spin = Spin::up;
};

struct Term {
    double coeff = 0.0;
    std::vector<FermiFactor> factors;  // rightmost factor acts first
};

class Expression {
public:
    Expression() = default;
    static Expression term(double coeff, std::vector<FermiFactor> factors);

    const std::vector<Term>& terms() const { return terms_; }

    Expression& operator+=(const Expression& other);
    friend Expression operator+(Expression a, const Expression& b) { return a += b; }
    friend Expression operator*(double s, Expression e);
    friend Expression operator*(const Expression& a, const Expression& b);
    Expression adjoint() const;

private:
    std::vector<Term> terms_;
};

Expression creation(int site, Spin spin);
Expression annihilation(int site, Spin spin);
Expression number(int site, Spin spin);
Expression identity(double coeff = 1.0);

// Nonzero amplitudes of (expression |state>), combined per configuration.
std::vector<std::pair<double, FockState>> apply(const Expression& e,
                                                const FockState& state);

// Matrix with columns indexed by the domain basis. Throws when the image of a
// domain state falls outside the codomain.
SparseOperator to_matrix(const Expression& e, const Basis& domain,
                         const Basis& codomain);
SparseOperator to_matrix(const Expression& e, const Basis& basis);

// Model operators.
Expression hamiltonian(const ModelParams& params);
Expression total_number(int n);
Expression spin_z(int n);
Expression spin_plus(int n);
Expression spin_minus(int n);
Expression spin_casimir(int n);  // (1/2)(S+S- + S-S+) + Sz^2
Expression pseudo_z(int n);
Expression pseudo_plus(int n);  // sum_j (-1)^j c+_{j,up} c+_{j,dn}
Expression pseudo_minus(int n);
Expression pseudo_casimir(int n);

}  // namespace hubswd
