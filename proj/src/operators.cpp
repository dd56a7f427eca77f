#include <hubswd/operators.hpp>

#include <map>

namespace hubswd {

bool SparseOperator::is_hermitian(double tol) const {
    if (mat.rows() != mat.cols()) return false;
    Eigen::SparseMatrix<std::complex<double>> diff =
        Eigen::SparseMatrix<std::complex<double>>(mat.adjoint()) - mat;
    return diff.norm() <= tol * std::max(1.0, mat.norm());
}

double commutator_norm(const SparseOperator& a, const SparseOperator& b) {
    Eigen::SparseMatrix<std::complex<double>> c = a.mat * b.mat - b.mat * a.mat;
    return c.norm();
}

Expression Expression::term(double coeff, std::vector<FermiFactor> factors) {
    Expression e;
    if (coeff != 0.0) e.terms_.push_back(Term{coeff, std::move(factors)});
    return e;
}

Expression& Expression::operator+=(const Expression& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

Expression operator*(double s, Expression e) {
    if (s == 0.0) return Expression();
    for (Term& t : e.terms_) t.coeff *= s;
    return e;
}

Expression operator*(const Expression& a, const Expression& b) {
    Expression out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& ta : a.terms_)
        for (const Term& tb : b.terms_) {
            Term t{ta.coeff * tb.coeff, ta.factors};
            t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
            out.terms_.push_back(std::move(t));
        }
    return out;
}

Expression Expression::adjoint() const {
    Expression out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term a{t.coeff, {}};
        a.factors.reserve(t.factors.size());
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it)
            a.factors.push_back(FermiFactor{!it->dagger, it->site, it->spin});
        out.terms_.push_back(std::move(a));
    }
    return out;
}

Expression creation(int site, Spin spin) {
    return Expression::term(1.0, {FermiFactor{true, site, spin}});
}

Expression annihilation(int site, Spin spin) {
    return Expression::term(1.0, {FermiFactor{false, site, spin}});
}

Expression number(int site, Spin spin) {
    return Expression::term(
        1.0, {FermiFactor{true, site, spin}, FermiFactor{false, site, spin}});
}

Expression identity(double coeff) { return Expression::term(coeff, {}); }

std::vector<std::pair<double, FockState>> apply(const Expression& e,
                                                const FockState& state) {
    std::map<std::uint64_t, std::pair<double, FockState>> acc;
    for (const Term& t : e.terms()) {
        FockState cur = state;
        int sign = 1;
        bool alive = true;
        for (auto it = t.factors.rbegin(); it != t.factors.rend(); ++it) {
            Applied r = it->dagger ? apply_creation(cur, it->site, it->spin)
                                   : apply_annihilation(cur, it->site, it->spin);
            if (!r) {
                alive = false;
                break;
            }
            sign *= r->first;
            cur = r->second;
        }
        if (!alive) continue;
        auto [it, fresh] = acc.try_emplace(cur.config.packed(),
                                           std::make_pair(0.0, cur));
        (void)fresh;
        it->second.first += sign * t.coeff;
    }
    std::vector<std::pair<double, FockState>> out;
    out.reserve(acc.size());
    for (auto& [key, val] : acc) {
        (void)key;
        if (val.first != 0.0) out.emplace_back(val.first, val.second);
    }
    return out;
}

SparseOperator to_matrix(const Expression& e, const Basis& domain,
                         const Basis& codomain) {
    std::vector<Eigen::Triplet<std::complex<double>>> trip;
    for (int col = 0; col < domain.size(); ++col) {
        for (const auto& [amp, state] : apply(e, FockState{domain.at(col)})) {
            int row = codomain.index_of(state.config);
            if (row < 0)
                throw InvariantError("expression maps basis state |" +
                                     domain.at(col).literal() + "> outside basis " +
                                     codomain.tag());
            trip.emplace_back(row, col, amp);
        }
    }
    SparseOperator op;
    op.basis_tag = domain.tag() == codomain.tag()
                       ? domain.tag()
                       : domain.tag() + "->" + codomain.tag();
    op.mat.resize(codomain.size(), domain.size());
    op.mat.setFromTriplets(trip.begin(), trip.end());
    return op;
}

SparseOperator to_matrix(const Expression& e, const Basis& basis) {
    return to_matrix(e, basis, basis);
}

Expression hamiltonian(const ModelParams& params) {
    int n = params.n;
    if (n < 1) throw UsageError("site count must be at least 1");
    Expression h;
    if (n >= 2) {
        int last = params.boundary == Boundary::periodic ? n : n - 1;
        for (Spin spin : {Spin::up, Spin::down})
            for (int j = 1; j <= last; ++j) {
                int next = j % n + 1;
                h += params.t * (creation(j, spin) * annihilation(next, spin));
                h += params.t * (creation(next, spin) * annihilation(j, spin));
            }
    }
    for (int j = 1; j <= n; ++j)
        h += params.u * (number(j, Spin::up) * number(j, Spin::down));
    return h;
}

Expression total_number(int n) {
    Expression e;
    for (int j = 1; j <= n; ++j) e += number(j, Spin::up) + number(j, Spin::down);
    return e;
}

Expression spin_z(int n) {
    Expression e;
    for (int j = 1; j <= n; ++j)
        e += 0.5 * number(j, Spin::up) + (-0.5) * number(j, Spin::down);
    return e;
}

Expression spin_plus(int n) {
    Expression e;
    for (int j = 1; j <= n; ++j) e += creation(j, Spin::up) * annihilation(j, Spin::down);
    return e;
}

Expression spin_minus(int n) { return spin_plus(n).adjoint(); }

Expression spin_casimir(int n) {
    Expression sp = spin_plus(n), sm = spin_minus(n), sz = spin_z(n);
    return 0.5 * (sp * sm + sm * sp) + sz * sz;
}

Expression pseudo_z(int n) {
    Expression e;
    for (int j = 1; j <= n; ++j)
        e += 0.5 * (number(j, Spin::up) + number(j, Spin::down) + identity(-1.0));
    return e;
}

Expression pseudo_plus(int n) {
    Expression e;
    for (int j = 1; j <= n; ++j) {
        double sign = (j % 2 == 0) ? 1.0 : -1.0;
        e += sign * (creation(j, Spin::up) * creation(j, Spin::down));
    }
    return e;
}

Expression pseudo_minus(int n) { return pseudo_plus(n).adjoint(); }

Expression pseudo_casimir(int n) {
    Expression jp = pseudo_plus(n), jm = pseudo_minus(n), jz = pseudo_z(n);
    return 0.5 * (jp * jm + jm * jp) + jz * jz;
}

}  // namespace hubswd
