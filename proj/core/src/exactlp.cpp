#include "minksum/exactlp.hpp"

#include <algorithm>

namespace minksum::exactlp {

void LinearSystem::validate() const {
    if (coefficients.size() != rhs.size())
        throw DomainError("coefficient row count does not match rhs");
    for (const auto& row : coefficients)
        if (static_cast<int>(row.size()) != cols())
            throw DomainError("ragged coefficient matrix");
}

namespace {

// Dense two-phase tableau simplex over exact rationals. Bland's smallest
// index rule is used for both the entering and the leaving variable, which
// rules out cycling.
class Simplex {
  public:
    Simplex(const LinearSystem& sys) : n_(sys.cols()) {
        sys.validate();
        const int m = sys.rows();
        rows_.reserve(static_cast<std::size_t>(m));
        flipped_.assign(static_cast<std::size_t>(m), false);
        basis_.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            RationalVector row(static_cast<std::size_t>(n_ + m) + 1);
            const bool flip = sys.rhs[static_cast<std::size_t>(i)] < 0;
            flipped_[static_cast<std::size_t>(i)] = flip;
            for (int j = 0; j < n_; ++j)
                row[static_cast<std::size_t>(j)] =
                    flip ? -sys.coefficients[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                         : sys.coefficients[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(n_ + i)] = 1;  // artificial
            row.back() = flip ? -sys.rhs[static_cast<std::size_t>(i)] : sys.rhs[static_cast<std::size_t>(i)];
            rows_.push_back(std::move(row));
            basis_[static_cast<std::size_t>(i)] = n_ + i;
        }
        total_cols_ = n_ + m;
    }

    /// Runs phase one. Returns true when the system is feasible; otherwise
    /// `farkas` holds a certificate in terms of the original rows.
    bool phase_one(RationalVector* farkas) {
        // Reduced costs for maximize(-sum of artificials) from the identity
        // basis: column sums on real columns. The rhs slot of the objective
        // row stores -z so that pivot elimination updates it like any row.
        obj_.assign(static_cast<std::size_t>(total_cols_) + 1, Rational(0));
        for (const auto& row : rows_) {
            for (int j = 0; j < n_; ++j) obj_[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
            obj_.back() += row.back();
        }
        entering_limit_ = total_cols_;
        run(false);
        if (obj_.back() != 0) {
            if (farkas) {
                farkas->assign(rows_.size(), Rational(0));
                for (std::size_t i = 0; i < rows_.size(); ++i) {
                    // y_i = -1 - d_{artificial i}; the certificate is -y,
                    // unflipped back to the original row orientation.
                    Rational cert = 1 + obj_[static_cast<std::size_t>(n_) + i];
                    (*farkas)[i] = flipped_[i] ? -cert : cert;
                }
            }
            return false;
        }
        drop_artificials();
        return true;
    }

    /// Runs phase two for maximize cᵀx. Assumes phase one succeeded.
    LpStatus phase_two(const RationalVector& c, bool stop_when_positive) {
        obj_.assign(static_cast<std::size_t>(total_cols_) + 1, Rational(0));
        for (int j = 0; j < n_; ++j) obj_[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const int b = basis_[i];
            if (b >= n_) continue;  // impossible after drop_artificials
            const Rational& cb = c[static_cast<std::size_t>(b)];
            if (cb == 0) continue;
            for (int j = 0; j <= total_cols_; ++j)
                obj_[static_cast<std::size_t>(j)] -= cb * rows_[i][static_cast<std::size_t>(j)];
        }
        entering_limit_ = n_;
        return run(stop_when_positive);
    }

    Rational objective_value() const { return -obj_.back(); }

    RationalVector solution() const {
        RationalVector x(static_cast<std::size_t>(n_), Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < n_) x[static_cast<std::size_t>(basis_[i])] = rows_[i].back();
        return x;
    }

  private:
    LpStatus run(bool stop_when_positive) {
        for (;;) {
            if (stop_when_positive && obj_.back() < 0) return LpStatus::Optimal;
            int entering = -1;
            for (int j = 0; j < entering_limit_; ++j) {
                if (obj_[static_cast<std::size_t>(j)] > 0) {
                    entering = j;
                    break;
                }
            }
            if (entering < 0) return LpStatus::Optimal;
            int leaving = -1;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& a = rows_[i][static_cast<std::size_t>(entering)];
                if (a <= 0) continue;
                Rational ratio = rows_[i].back() / a;
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[static_cast<std::size_t>(i)] <
                                                basis_[static_cast<std::size_t>(leaving)])) {
                    leaving = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return LpStatus::Unbounded;
            pivot(static_cast<std::size_t>(leaving), entering);
        }
    }

    void pivot(std::size_t pr, int pc) {
        RationalVector& prow = rows_[pr];
        const Rational inv = 1 / prow[static_cast<std::size_t>(pc)];
        if (inv != 1)
            for (auto& v : prow) v *= inv;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == pr) continue;
            eliminate(rows_[i], prow, pc);
        }
        eliminate(obj_, prow, pc);
        basis_[pr] = pc;
    }

    static void eliminate(RationalVector& row, const RationalVector& prow, int pc) {
        const Rational factor = row[static_cast<std::size_t>(pc)];
        if (factor == 0) return;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (prow[j] != 0) row[j] -= factor * prow[j];
        }
        row[static_cast<std::size_t>(pc)] = 0;
    }

    // Pivots basic artificials out; rows that admit no pivot are redundant
    // and get removed.
    void drop_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < n_) {
                ++i;
                continue;
            }
            int pc = -1;
            for (int j = 0; j < n_; ++j) {
                if (rows_[i][static_cast<std::size_t>(j)] != 0) {
                    pc = j;
                    break;
                }
            }
            if (pc >= 0) {
                pivot(i, pc);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    int n_ = 0;
    int total_cols_ = 0;
    int entering_limit_ = 0;
    std::vector<RationalVector> rows_;
    RationalVector obj_;
    std::vector<int> basis_;
    std::vector<bool> flipped_;
};

}  // namespace

FeasibilityResult feasible(const LinearSystem& sys) {
    Simplex solver(sys);
    FeasibilityResult out;
    RationalVector farkas;
    out.feasible = solver.phase_one(&farkas);
    if (out.feasible)
        out.witness = solver.solution();
    else
        out.certificate = std::move(farkas);
    return out;
}

LpResult maximize(const LinearSystem& sys, const RationalVector& objective,
                  bool stop_when_positive) {
    if (static_cast<int>(objective.size()) != sys.cols())
        throw DomainError("objective length does not match column count");
    Simplex solver(sys);
    LpResult out;
    if (!solver.phase_one(nullptr)) {
        out.status = LpStatus::Infeasible;
        return out;
    }
    out.status = solver.phase_two(objective, stop_when_positive);
    if (out.status != LpStatus::Unbounded) {
        out.value = solver.objective_value();
        out.solution = solver.solution();
    }
    return out;
}

bool in_hull(const RationalVector& x, const RationalMatrix& points) {
    if (points.empty()) throw DomainError("hull generator list must be nonempty");
    const std::size_t dim = x.size();
    for (const auto& p : points)
        if (p.size() != dim) throw DomainError("hull generator dimension mismatch");
    LinearSystem sys;
    sys.coefficients.assign(dim + 1, RationalVector(points.size()));
    sys.rhs.assign(dim + 1, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t w = 0; w < points.size(); ++w)
            sys.coefficients[i][w] = points[w][i];
        sys.rhs[i] = x[i];
    }
    for (std::size_t w = 0; w < points.size(); ++w) sys.coefficients[dim][w] = 1;
    sys.rhs[dim] = 1;
    return feasible(sys).feasible;
}

bool is_edge(const LatticePoint& u, const LatticePoint& v,
             const std::vector<LatticePoint>& V) {
    if (u == v) throw DomainError("is_edge endpoints must differ");
    if (std::find(V.begin(), V.end(), u) == V.end() ||
        std::find(V.begin(), V.end(), v) == V.end())
        throw DomainError("is_edge endpoints must belong to the vertex list");
    const std::size_t dim = u.size();
    // Doubled coordinate rows keep everything integral:
    // sum_w lambda_w (2 w) = u + v, sum_w lambda_w = 1.
    LinearSystem sys;
    sys.coefficients.assign(dim + 1, RationalVector(V.size()));
    sys.rhs.assign(dim + 1, Rational(0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t w = 0; w < V.size(); ++w)
            sys.coefficients[i][w] = 2 * V[w][i];
        sys.rhs[i] = u[i] + v[i];
    }
    for (std::size_t w = 0; w < V.size(); ++w) sys.coefficients[dim][w] = 1;
    sys.rhs[dim] = 1;

    RationalVector off_pair_mass(V.size(), Rational(1));
    for (std::size_t w = 0; w < V.size(); ++w)
        if (V[w] == u || V[w] == v) off_pair_mass[w] = 0;

    const LpResult lp = maximize(sys, off_pair_mass, /*stop_when_positive=*/true);
    if (lp.status != LpStatus::Optimal)
        throw InternalError("midpoint representation LP must be feasible and bounded");
    return lp.value == 0;
}

int rational_rank(RationalMatrix m) {
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m.front().size());
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i) {
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        const RationalVector& prow = m[static_cast<std::size_t>(rank)];
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            RationalVector& row = m[static_cast<std::size_t>(i)];
            if (row[static_cast<std::size_t>(col)] == 0) continue;
            const Rational factor =
                row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
            for (int j = col; j < cols; ++j)
                row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
        }
        ++rank;
    }
    return rank;
}

}  // namespace minksum::exactlp
