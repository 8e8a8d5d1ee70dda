#ifndef STABLEREV_FEASIBILITY_HPP
#define STABLEREV_FEASIBILITY_HPP

#include <map>
#include <optional>
#include <vector>

#include "stablerev/errors.hpp"
#include "stablerev/rational.hpp"

namespace stablerev {

/// A homogeneous system of linear constraints over x in R^n:
///   weak rows:   row . x >= 0
///   strict rows: row . x >  0
/// When nonneg is set the rows x_i >= 0 are implied for every coordinate.
struct LinearSystem {
    int dimension = 0;
    std::vector<std::vector<Rational>> weak_rows;
    std::vector<std::vector<Rational>> strict_rows;
    bool nonneg = true;

    void validate() const {
        if (dimension < 1)
            throw DomainError("system dimension must be positive");
        for (const auto& r : weak_rows)
            if (static_cast<int>(r.size()) != dimension)
                throw DomainError("weak row has wrong dimension");
        for (const auto& r : strict_rows)
            if (static_cast<int>(r.size()) != dimension)
                throw DomainError("strict row has wrong dimension");
    }
};

/// Integer multipliers witnessing infeasibility:
///   gamma' I + alpha' M_weak + beta' M_strict = 0,  all entries >= 0,
/// with beta nonzero when strict rows are present. For a system without
/// strict rows the certificate instead has every gamma entry positive, which
/// rules out any nonzero nonnegative solution.
struct MotzkinCertificate {
    std::vector<Int> gamma;
    std::vector<Int> alpha;
    std::vector<Int> beta;
};

/// Exactly one of the two branches: a solution ray or a certificate.
struct FeasibilityOutcome {
    std::optional<std::vector<Rational>> ray;
    std::optional<MotzkinCertificate> certificate;

    bool feasible() const { return ray.has_value(); }
};

inline bool verify_certificate(const LinearSystem& sys, const MotzkinCertificate& cert) {
    sys.validate();
    size_t gamma_size = sys.nonneg ? static_cast<size_t>(sys.dimension) : 0;
    if (cert.gamma.size() != gamma_size || cert.alpha.size() != sys.weak_rows.size() ||
        cert.beta.size() != sys.strict_rows.size())
        return false;
    for (const auto& g : cert.gamma)
        if (g < 0)
            return false;
    for (const auto& a : cert.alpha)
        if (a < 0)
            return false;
    bool beta_nonzero = false;
    for (const auto& b : cert.beta) {
        if (b < 0)
            return false;
        if (b > 0)
            beta_nonzero = true;
    }
    if (!sys.strict_rows.empty() && !beta_nonzero)
        return false;
    if (sys.strict_rows.empty()) {
        // weak-only form: gamma must be strictly positive everywhere
        if (!sys.nonneg)
            return false;
        for (const auto& g : cert.gamma)
            if (g == 0)
                return false;
    }
    for (int k = 0; k < sys.dimension; ++k) {
        Rational sum = sys.nonneg ? Rational(cert.gamma[k]) : Rational(0);
        for (size_t i = 0; i < sys.weak_rows.size(); ++i)
            sum += Rational(cert.alpha[i]) * sys.weak_rows[i][k];
        for (size_t j = 0; j < sys.strict_rows.size(); ++j)
            sum += Rational(cert.beta[j]) * sys.strict_rows[j][k];
        if (sum != 0)
            return false;
    }
    return true;
}

namespace detail {

/// Dense exact-rational simplex for max c.z s.t. A z = b, z >= 0 with b >= 0.
/// Two phases, Bland's rule throughout; artificial columns stay in the
/// tableau so the final basis inverse (and hence the duals) can be read off.
class Simplex {
public:
    Simplex(std::vector<std::vector<Rational>> a, std::vector<Rational> b, std::vector<Rational> cost)
        : m_(a.size()), n_(a.empty() ? 0 : a[0].size()), cost_(std::move(cost)) {
        tab_.assign(m_, std::vector<Rational>(n_ + m_ + 1, Rational(0)));
        basis_.resize(m_);
        for (size_t r = 0; r < m_; ++r) {
            for (size_t j = 0; j < n_; ++j)
                tab_[r][j] = a[r][j];
            tab_[r][n_ + r] = 1; // artificial
            tab_[r][n_ + m_] = b[r];
            basis_[r] = n_ + r;
        }
    }

    void run() {
        // phase 1: drive the artificial variables to zero
        std::vector<Rational> phase1(n_ + m_, Rational(0));
        for (size_t r = 0; r < m_; ++r)
            phase1[n_ + r] = -1;
        optimize(phase1, /*allow_artificials=*/true);
        if (objective(phase1) != 0)
            throw Error("internal: simplex phase 1 failed on a feasible system");
        drive_out_artificials();
        // phase 2
        std::vector<Rational> phase2 = cost_;
        phase2.resize(n_ + m_, Rational(0));
        optimize(phase2, /*allow_artificials=*/false);
    }

    Rational primal_value(size_t j) const {
        for (size_t r = 0; r < m_; ++r)
            if (basis_[r] == j)
                return tab_[r][n_ + m_];
        return 0;
    }

    /// Dual multiplier of constraint row r, read from the reduced cost of
    /// the r-th artificial column under the phase-2 objective.
    Rational dual_value(size_t r) const { return -zrow_[n_ + r]; }

private:
    Rational objective(const std::vector<Rational>& cost) const {
        Rational v = 0;
        for (size_t r = 0; r < m_; ++r)
            v += cost[basis_[r]] * tab_[r][n_ + m_];
        return v;
    }

    void compute_zrow(const std::vector<Rational>& cost) {
        zrow_.assign(n_ + m_, Rational(0));
        for (size_t j = 0; j < n_ + m_; ++j) {
            Rational z = cost[j];
            for (size_t r = 0; r < m_; ++r)
                if (tab_[r][j] != 0)
                    z -= cost[basis_[r]] * tab_[r][j];
            zrow_[j] = z;
        }
    }

    void optimize(const std::vector<Rational>& cost, bool allow_artificials) {
        compute_zrow(cost);
        for (;;) {
            size_t limit = allow_artificials ? n_ + m_ : n_;
            size_t enter = limit;
            for (size_t j = 0; j < limit; ++j) {
                if (!allow_artificials && j >= n_)
                    break;
                if (zrow_[j] > 0 && !is_basic(j)) {
                    enter = j;
                    break; // Bland: smallest improving index
                }
            }
            if (enter == limit)
                return; // optimal
            size_t leave = m_;
            Rational best;
            for (size_t r = 0; r < m_; ++r) {
                if (tab_[r][enter] <= 0)
                    continue;
                Rational ratio = tab_[r][n_ + m_] / tab_[r][enter];
                if (leave == m_ || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    best = ratio;
                    leave = r;
                }
            }
            if (leave == m_)
                throw Error("internal: simplex objective unbounded");
            pivot(leave, enter, cost);
        }
    }

    void drive_out_artificials() {
        for (size_t r = 0; r < m_; ++r) {
            if (basis_[r] < n_)
                continue;
            for (size_t j = 0; j < n_; ++j) {
                if (tab_[r][j] != 0 && !is_basic(j)) {
                    pivot(r, j, {});
                    break;
                }
            }
            // an all-zero structural row is redundant: its artificial stays
            // basic at value zero, which is harmless
        }
    }

    bool is_basic(size_t j) const {
        for (size_t r = 0; r < m_; ++r)
            if (basis_[r] == j)
                return true;
        return false;
    }

    void pivot(size_t row, size_t col, const std::vector<Rational>& cost) {
        Rational p = tab_[row][col];
        for (auto& v : tab_[row])
            v /= p;
        for (size_t r = 0; r < m_; ++r) {
            if (r == row || tab_[r][col] == 0)
                continue;
            Rational f = tab_[r][col];
            for (size_t j = 0; j <= n_ + m_; ++j)
                if (tab_[row][j] != 0)
                    tab_[r][j] -= f * tab_[row][j];
        }
        basis_[row] = col;
        if (!zrow_.empty() && !cost.empty()) {
            Rational f = zrow_[col];
            if (f != 0)
                for (size_t j = 0; j < n_ + m_; ++j)
                    if (tab_[row][j] != 0)
                        zrow_[j] -= f * tab_[row][j];
        } else if (!zrow_.empty()) {
            // pivot during drive-out: keep zrow consistent the slow way
            zrow_.clear();
        }
    }

    size_t m_, n_;
    std::vector<Rational> cost_;
    std::vector<std::vector<Rational>> tab_;
    std::vector<size_t> basis_;
    std::vector<Rational> zrow_;
};

inline Int lcm_int(const Int& a, const Int& b) {
    using boost::multiprecision::gcd;
    return a / gcd(a, b) * b;
}

/// Scales parallel rational vectors to coprime nonnegative integers.
inline void scale_to_integers(std::vector<std::vector<Rational>*> vecs,
                              std::vector<std::vector<Int>*> outs) {
    using boost::multiprecision::gcd;
    Int l = 1;
    for (auto* v : vecs)
        for (const auto& r : *v)
            l = lcm_int(l, den(r));
    Int g = 0;
    for (auto* v : vecs)
        for (const auto& r : *v)
            g = gcd(g, num(r) * (l / den(r)));
    if (g == 0)
        g = 1;
    for (size_t i = 0; i < vecs.size(); ++i) {
        outs[i]->clear();
        for (const auto& r : *vecs[i])
            outs[i]->push_back(num(r) * (l / den(r)) / g);
    }
}

} // namespace detail

/// Decides the dichotomy of Motzkin's transposition theorem for sys and
/// returns either a solution ray (nonnegative and nonzero when nonneg is set)
/// or an integer certificate. Internally maximizes the margin d subject to
/// strict rows >= d, weak rows >= 0 and a unit mass budget, solving the dual
/// with Bland's rule; d* > 0 yields the ray from the dual multipliers, and
/// d* = 0 yields the certificate from the optimal solution itself.
///
/// A system without strict rows asks for a nonzero nonnegative solution of
/// the weak rows (nonneg must be set); infeasibility is then certified by an
/// everywhere-positive gamma.
inline FeasibilityOutcome solve(const LinearSystem& sys) {
    sys.validate();
    const int n = sys.dimension;
    bool weak_only = sys.strict_rows.empty();
    if (weak_only && !sys.nonneg)
        throw DomainError("a free-variable system needs at least one strict row");

    std::vector<std::vector<Rational>> strict = sys.strict_rows;
    if (weak_only)
        strict.emplace_back(n, Rational(1)); // some coordinate must carry mass

    const size_t nw = sys.weak_rows.size();
    const size_t ns = strict.size();
    const size_t nvr = sys.nonneg ? size_t(n) : size_t(2 * n); // dual variable-rows
    const size_t rows = nvr + 1;
    // columns: alpha | beta | pi | slack per variable-row
    const size_t cols = nw + ns + 1 + nvr;

    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols, Rational(0)));
    std::vector<Rational> b(rows, Rational(0));
    for (size_t k = 0; k < nvr; ++k) {
        int coord = static_cast<int>(k % size_t(n));
        Rational sign = (k < size_t(n)) ? 1 : -1;
        for (size_t i = 0; i < nw; ++i)
            a[k][i] = sign * sys.weak_rows[i][coord];
        for (size_t j = 0; j < ns; ++j)
            a[k][nw + j] = sign * strict[j][coord];
        a[k][nw + ns] = -1;          // -pi
        a[k][nw + ns + 1 + k] = 1;   // slack
    }
    for (size_t j = 0; j < ns; ++j)
        a[rows - 1][nw + j] = 1; // sum beta = 1
    b[rows - 1] = 1;

    std::vector<Rational> cost(cols, Rational(0));
    cost[nw + ns] = -1; // maximize -pi

    detail::Simplex simplex(std::move(a), std::move(b), std::move(cost));
    simplex.run();

    Rational margin = simplex.primal_value(nw + ns);
    FeasibilityOutcome out;
    if (margin > 0) {
        std::vector<Rational> x(n, Rational(0));
        for (int k = 0; k < n; ++k) {
            x[k] = simplex.dual_value(k);
            if (!sys.nonneg)
                x[k] -= simplex.dual_value(size_t(n) + k);
        }
        // canonical form: coprime integer coordinates
        std::vector<Int> scaled;
        detail::scale_to_integers({&x}, {&scaled});
        for (int k = 0; k < n; ++k)
            x[k] = Rational(scaled[k]);
        for (size_t i = 0; i < nw; ++i) {
            Rational v = 0;
            for (int k = 0; k < n; ++k)
                v += sys.weak_rows[i][k] * x[k];
            if (v < 0)
                throw Error("internal: ray violates a weak row");
        }
        for (size_t j = 0; j < ns; ++j) {
            Rational v = 0;
            for (int k = 0; k < n; ++k)
                v += strict[j][k] * x[k];
            if (v <= 0)
                throw Error("internal: ray violates a strict row");
        }
        if (sys.nonneg)
            for (int k = 0; k < n; ++k)
                if (x[k] < 0)
                    throw Error("internal: ray has a negative coordinate");
        out.ray = std::move(x);
        return out;
    }

    // margin zero: read the certificate off the optimal dual solution
    std::vector<Rational> alpha(nw), beta(ns), gamma;
    for (size_t i = 0; i < nw; ++i)
        alpha[i] = simplex.primal_value(i);
    for (size_t j = 0; j < ns; ++j)
        beta[j] = simplex.primal_value(nw + j);
    if (sys.nonneg) {
        gamma.resize(n);
        for (int k = 0; k < n; ++k)
            gamma[k] = simplex.primal_value(nw + ns + 1 + size_t(k));
    }
    if (weak_only) {
        // fold the implicit all-ones strict row into gamma
        Rational unit = beta.back();
        beta.pop_back();
        for (auto& g : gamma)
            g += unit;
    }
    MotzkinCertificate cert;
    detail::scale_to_integers({&gamma, &alpha, &beta}, {&cert.gamma, &cert.alpha, &cert.beta});
    if (!verify_certificate(sys, cert))
        throw Error("internal: extracted certificate failed verification");
    out.certificate = std::move(cert);
    return out;
}

/// Independent feasibility oracle by Fourier-Motzkin elimination. Strict rows
/// are rewritten as row.x - y >= 0 for a shared margin variable y, so the
/// whole system is weak and the question becomes whether the projection onto
/// y admits y > 0. Elimination picks the cheapest variable each round and
/// prunes by Imbert's ancestor rule. Small systems only; throws BudgetError
/// past the bounds.
inline bool fourier_motzkin_feasible(const LinearSystem& sys, size_t max_rows = 50000) {
    sys.validate();
    const int n = sys.dimension;
    if (n > 6)
        throw BudgetError("oracle budget: Fourier-Motzkin limited to 6 variables");
    if (!sys.nonneg && sys.strict_rows.empty())
        throw DomainError("a free-variable system needs at least one strict row");

    struct Row {
        std::vector<Rational> coef; // n coordinates plus the margin column
        std::uint64_t ancestors;    // original rows this one derives from
        std::uint8_t elim;          // variables eliminated along the way
    };
    std::vector<Row> rows;
    auto push = [&](const std::vector<Rational>& base, bool strict) {
        std::vector<Rational> coef(n + 1, Rational(0));
        for (int i = 0; i < n; ++i)
            coef[i] = base[i];
        if (strict)
            coef[n] = -1;
        rows.push_back({std::move(coef), 0, 0});
    };
    for (const auto& r : sys.weak_rows)
        push(r, false);
    for (const auto& r : sys.strict_rows)
        push(r, true);
    if (sys.nonneg) {
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> e(n, Rational(0));
            e[i] = 1;
            push(e, false);
        }
        if (sys.strict_rows.empty())
            push(std::vector<Rational>(n, Rational(1)), true);
    }
    if (rows.size() > 64)
        throw BudgetError("oracle budget: too many rows for Fourier-Motzkin");
    for (size_t i = 0; i < rows.size(); ++i)
        rows[i].ancestors = std::uint64_t(1) << i;

    // canonical coprime form; dedupe keeping the leanest derivation
    auto normalize = [&](std::vector<Row>& rs) {
        std::map<std::vector<Rational>, std::pair<std::uint64_t, std::uint8_t>> seen;
        for (auto& r : rs) {
            bool all_zero = true;
            for (const auto& c : r.coef)
                if (c != 0)
                    all_zero = false;
            if (all_zero)
                continue; // 0 >= 0
            std::vector<Int> ints;
            detail::scale_to_integers({&r.coef}, {&ints});
            std::vector<Rational> key(ints.begin(), ints.end());
            auto [it, fresh] =
                seen.emplace(std::move(key), std::make_pair(r.ancestors, r.elim));
            if (!fresh && std::popcount(r.ancestors) < std::popcount(it->second.first))
                it->second = {r.ancestors, r.elim};
        }
        rs.clear();
        for (auto& [coef, meta] : seen)
            rs.push_back({coef, meta.first, meta.second});
    };
    normalize(rows);

    std::uint8_t eliminated = 0;
    for (int round = 0; round < n; ++round) {
        int v = -1;
        long best = -1;
        for (int cand = 0; cand < n; ++cand) {
            if ((eliminated >> cand) & 1u)
                continue;
            long pos = 0, neg = 0;
            for (const auto& r : rows) {
                if (r.coef[cand] > 0)
                    ++pos;
                else if (r.coef[cand] < 0)
                    ++neg;
            }
            long cost = pos * neg;
            if (v < 0 || cost < best) {
                v = cand;
                best = cost;
            }
        }
        eliminated |= std::uint8_t(1u << v);
        std::vector<Row> keep, lower, upper;
        for (auto& r : rows) {
            if (r.coef[v] > 0)
                lower.push_back(std::move(r));
            else if (r.coef[v] < 0)
                upper.push_back(std::move(r));
            else
                keep.push_back(std::move(r));
        }
        for (const auto& lo : lower) {
            for (const auto& up : upper) {
                Row combined;
                combined.ancestors = lo.ancestors | up.ancestors;
                combined.elim = lo.elim | up.elim | std::uint8_t(1u << v);
                // Imbert: more ancestors than eliminated variables plus one
                // makes the combination redundant
                if (std::popcount(combined.ancestors) >
                    std::popcount(combined.elim) + 1)
                    continue;
                combined.coef.resize(n + 1, Rational(0));
                const Rational& cl = lo.coef[v];
                const Rational& cu = up.coef[v];
                for (int j = 0; j <= n; ++j)
                    combined.coef[j] = cl * up.coef[j] - cu * lo.coef[j];
                combined.coef[v] = 0;
                keep.push_back(std::move(combined));
                if (keep.size() > max_rows)
                    throw BudgetError("oracle budget: Fourier-Motzkin row blow-up");
            }
        }
        rows = std::move(keep);
        normalize(rows);
    }
    // ground facts constrain the margin alone: c*y >= 0 with c < 0 rules out
    // every positive margin
    for (const auto& r : rows)
        if (r.coef[n] < 0)
            return false;
    return true;
}

} // namespace stablerev

#endif
