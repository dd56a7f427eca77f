#include <hubswd/symrep.hpp>

#include <algorithm>
#include <bit>
#include <numeric>

namespace hubswd {

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::label() const {
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s + "}";
}

namespace {

void gen_partitions(int remaining, int max_part, int max_parts,
                    std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{cur});
        return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p, max_parts, cur, out);
        cur.pop_back();
    }
}

std::vector<int> prefix_sums(const std::vector<int>& v, int upto) {
    std::vector<int> p(upto, 0);
    int acc = 0;
    for (int i = 0; i < upto; ++i) {
        acc += i < static_cast<int>(v.size()) ? v[i] : 0;
        p[i] = acc;
    }
    return p;
}

}  // namespace

std::vector<Partition> partitions_dominating(int n, std::vector<int> mu,
                                             int max_parts) {
    if (n < 0 || max_parts < 0) throw UsageError("invalid partition request");
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    if (std::accumulate(mu.begin(), mu.end(), 0) != n)
        throw UsageError("weight does not sum to n");

    std::vector<Partition> all;
    std::vector<int> cur;
    gen_partitions(n, n, max_parts, cur, all);
    if (n == 0) all = {Partition{}};

    int depth = std::max<int>(mu.size(), max_parts) + 1;
    std::vector<int> mu_pref = prefix_sums(mu, depth);
    std::vector<Partition> result;
    for (const auto& lam : all) {
        std::vector<int> lp = prefix_sums(lam.parts, depth);
        bool dom = true;
        for (int i = 0; i < depth && dom; ++i) dom = lp[i] >= mu_pref[i];
        if (dom) result.push_back(lam);
    }
    // dominance-descending: prefix-sum vectors descending lexicographically
    std::sort(result.begin(), result.end(),
              [depth](const Partition& a, const Partition& b) {
                  return prefix_sums(a.parts, depth) > prefix_sums(b.parts, depth);
              });
    return result;
}

long long dim_irrep(const Partition& shape) {
    int n = shape.sum();
    if (n == 0) return 1;
    if (n > 20) throw UsageError("dim_irrep limited to n <= 20");
    std::vector<int> conj(shape.parts.empty() ? 0 : shape.parts[0], 0);
    for (int len : shape.parts)
        for (int j = 0; j < len; ++j) conj[j]++;
    long long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    long long hooks = 1;
    for (int r = 0; r < shape.rows(); ++r)
        for (int c = 0; c < shape.parts[r]; ++c)
            hooks *= (shape.parts[r] - c) + (conj[c] - r) - 1;
    return factorial / hooks;
}

std::vector<int> StandardTableau::row_word() const {
    int n = shape.sum();
    std::vector<int> w(n, 0);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int entry : rows[r]) w[entry - 1] = r + 1;
    return w;
}

std::string StandardTableau::label() const {
    std::string s = "(";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) s += '|';
        for (int entry : rows[r]) s += std::to_string(entry);
    }
    return s + ")";
}

namespace {

void gen_tableaux(int next, int n, const Partition& shape,
                  std::vector<std::vector<int>>& rows,
                  std::vector<StandardTableau>& out) {
    if (next > n) {
        out.push_back(StandardTableau{shape, rows});
        return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
        bool fits = static_cast<int>(rows[r].size()) < shape.parts[r] &&
                    (r == 0 || rows[r - 1].size() > rows[r].size());
        if (!fits) continue;
        rows[r].push_back(next);
        gen_tableaux(next + 1, n, shape, rows, out);
        rows[r].pop_back();
    }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    for (std::size_t i = 1; i < shape.parts.size(); ++i)
        if (shape.parts[i] > shape.parts[i - 1] || shape.parts[i] <= 0)
            throw UsageError("invalid partition shape");
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> rows(shape.rows());
    gen_tableaux(1, shape.sum(), shape, rows, out);
    return out;
}

std::vector<int> content_vector(const StandardTableau& y) {
    int n = y.shape.sum();
    std::vector<int> m(n, 0);
    for (int r = 0; r < static_cast<int>(y.rows.size()); ++r)
        for (int c = 0; c < static_cast<int>(y.rows[r].size()); ++c)
            m[y.rows[r][c] - 1] = c - r;
    return m;
}

OrbitSpace::OrbitSpace(int length, int second_count) : n_(length), k_(second_count) {
    if (length < 0 || length > 20)
        throw UsageError("orbit spaces limited to word length <= 20");
    if (second_count < 0 || second_count > length)
        throw UsageError("invalid orbit weight");
    for (std::uint32_t w = 0; w < (1u << n_); ++w)
        if (std::popcount(w) == k_) words_.push_back(w);
    if (n_ == 0) words_ = {0u};
}

int OrbitSpace::index_of(std::uint32_t w) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it == words_.end() || *it != w) return -1;
    return static_cast<int>(it - words_.begin());
}

int OrbitSpace::letter(int i, int pos) const {
    return (words_[i] >> (n_ - pos)) & 1u;
}

std::vector<long long> jm_apply(int j, const OrbitSpace& space,
                                const std::vector<long long>& v) {
    if (j < 2 || j > space.length()) throw UsageError("JM index out of range");
    std::vector<long long> out(space.dim(), 0);
    for (int i = 0; i < space.dim(); ++i) {
        std::uint32_t w = space.word(i);
        int bj = space.length() - j;
        for (int jp = 1; jp < j; ++jp) {
            int bjp = space.length() - jp;
            std::uint32_t swapped = w;
            if (((w >> bj) & 1u) != ((w >> bjp) & 1u))
                swapped = w ^ ((1u << bj) | (1u << bjp));
            out[i] += v[space.index_of(swapped)];
        }
    }
    return out;
}

SparseOperator jm_matrix(int j, const OrbitSpace& space) {
    std::vector<Eigen::Triplet<std::complex<double>>> trip;
    std::vector<long long> e(space.dim(), 0);
    for (int col = 0; col < space.dim(); ++col) {
        e[col] = 1;
        std::vector<long long> out = jm_apply(j, space, e);
        e[col] = 0;
        for (int row = 0; row < space.dim(); ++row)
            if (out[row] != 0)
                trip.emplace_back(row, col, static_cast<double>(out[row]));
    }
    SparseOperator op;
    op.basis_tag = "orbit:n=" + std::to_string(space.length()) + ",w=(" +
                   std::to_string(space.weight()[0]) + "," +
                   std::to_string(space.weight()[1]) + ")";
    op.mat.resize(space.dim(), space.dim());
    op.mat.setFromTriplets(trip.begin(), trip.end());
    return op;
}

namespace {

void gcd_reduce(std::vector<long long>& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (long long& x : v) x /= g;
}

bool is_zero(const std::vector<long long>& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

// Contents of cells addable to the shape holding 1..j-1 of tableau y, and the
// content of the cell that actually received j.
struct StepFactors {
    int own_content;
    std::vector<int> other_contents;
};

StepFactors step_factors(const StandardTableau& y, int j) {
    std::vector<int> word = y.row_word();
    std::vector<int> len;  // shape of y_{j-1}
    for (int i = 0; i < j - 1; ++i) {
        int r = word[i];
        if (r > static_cast<int>(len.size())) len.push_back(0);
        len[r - 1]++;
    }
    StepFactors f{};
    int own_row = word[j - 1];
    bool found = false;
    for (int r = 1; r <= static_cast<int>(len.size()) + 1; ++r) {
        int cur = r <= static_cast<int>(len.size()) ? len[r - 1] : 0;
        int above = r == 1 ? INT32_MAX : len[r - 2];
        if (cur >= above) continue;  // not an addable corner
        int content = cur + 1 - r;
        if (r == own_row) {
            f.own_content = content;
            found = true;
        } else {
            f.other_contents.push_back(content);
        }
    }
    if (!found) throw InvariantError("tableau step without matching corner");
    for (int m : f.other_contents)
        if (m == f.own_content)
            throw InvariantError("degenerate content in projector chain");
    return f;
}

constexpr long long kOverflowGuard = 1ll << 55;

}  // namespace

std::vector<long long> gz_vector(const OrbitSpace& space, const StandardTableau& y) {
    int n = space.length();
    if (y.shape.sum() != n) throw UsageError("tableau size does not match orbit");
    std::vector<int> contents = content_vector(y);

    for (int seed = 0; seed < space.dim(); ++seed) {
        std::vector<long long> v(space.dim(), 0);
        v[seed] = 1;
        for (int j = 2; j <= n; ++j) {
            StepFactors f = step_factors(y, j);
            for (int m : f.other_contents) {
                std::vector<long long> mv = jm_apply(j, space, v);
                for (int i = 0; i < space.dim(); ++i) {
                    mv[i] -= static_cast<long long>(m) * v[i];
                    if (mv[i] >= kOverflowGuard || mv[i] <= -kOverflowGuard)
                        throw InvariantError("integer overflow in projector chain");
                }
                v = std::move(mv);
                gcd_reduce(v);
            }
            if (is_zero(v)) break;
        }
        if (is_zero(v)) continue;
        // exact joint-eigenvector verification before any floating point
        for (int j = 2; j <= n; ++j) {
            std::vector<long long> mv = jm_apply(j, space, v);
            for (int i = 0; i < space.dim(); ++i)
                if (mv[i] != static_cast<long long>(contents[j - 1]) * v[i])
                    throw InvariantError("projector image is not a JM eigenvector");
        }
        return v;
    }
    throw InvariantError("projector annihilates the orbit space");
}

ProjectorMatrix young_projector(const Partition& lambda, const StandardTableau& y,
                                const OrbitSpace& space) {
    if (!(y.shape == lambda)) throw UsageError("tableau does not match shape");
    if (lambda.rows() > 2)
        throw UsageError("two-letter orbit spaces only carry two-row shapes");
    std::vector<long long> v = gz_vector(space, y);
    Eigen::VectorXd vd(space.dim());
    for (int i = 0; i < space.dim(); ++i) vd[i] = static_cast<double>(v[i]);
    ProjectorMatrix p{lambda, y, Eigen::MatrixXd()};
    p.mat = vd * vd.transpose() / vd.squaredNorm();
    return p;
}

std::string AdaptedColumn::label() const {
    return shape.label() + ":T" + std::to_string(tableau_index);
}

Eigen::MatrixXd AdaptedBasis::matrix() const {
    Eigen::MatrixXd m(space.dim(), static_cast<int>(columns.size()));
    for (std::size_t c = 0; c < columns.size(); ++c) m.col(c) = columns[c].coeffs;
    return m;
}

AdaptedBasis irreducible_basis(const OrbitSpace& space) {
    auto w = space.weight();
    std::vector<Partition> lambdas =
        partitions_dominating(space.length(), {w[0], w[1]}, 2);
    AdaptedBasis basis{space, {}};
    for (const Partition& lambda : lambdas) {
        std::vector<StandardTableau> tableaux = standard_tableaux(lambda);
        for (std::size_t t = 0; t < tableaux.size(); ++t) {
            std::vector<long long> v = gz_vector(space, tableaux[t]);
            Eigen::VectorXd col(space.dim());
            for (int i = 0; i < space.dim(); ++i) col[i] = static_cast<double>(v[i]);
            col.normalize();
            for (int i = 0; i < space.dim(); ++i) {
                if (col[i] == 0.0) continue;
                if (col[i] < 0.0) col = -col;
                break;
            }
            for (int i = 0; i < space.dim(); ++i)
                if (col[i] == 0.0) col[i] = 0.0;  // flush negative zeros
            basis.columns.push_back(AdaptedColumn{
                lambda, static_cast<int>(t) + 1, tableaux[t], col});
        }
    }
    int expected = static_cast<int>(space.dim());
    if (static_cast<int>(basis.columns.size()) != expected)
        throw InvariantError("irreducible basis does not span the orbit space");
    return basis;
}

}  // namespace hubswd
