#include "rtt/simplex.hpp"

#include <cmath>
#include <limits>

namespace rtt::simplex {

namespace {

class Tableau {
public:
    Tableau(int rows, int cols) : m_(rows), n_(cols), w_(cols + 1), data_(static_cast<std::size_t>(rows + 1) * (cols + 1), 0.0) {}

    double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * w_ + c]; }
    double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * w_ + c]; }
    double& rhs(int r) { return at(r, n_); }
    double* row(int r) { return &data_[static_cast<std::size_t>(r) * w_]; }

    int m_, n_, w_;
    std::vector<double> data_;
};

struct Engine {
    Tableau t;
    std::vector<int> basis;
    std::vector<char> allowed;  // columns that may enter
    double eps;
    long pivots = 0;
    std::vector<int> nz;

    Engine(int m, int n, double e) : t(m, n), basis(m, -1), allowed(n, 1), eps(e) {}

    // objective row is row m; entries are reduced costs, rhs holds -z
    void pivot(int r, int c) {
        ++pivots;
        double* pr = t.row(r);
        double inv = 1.0 / pr[c];
        nz.clear();
        for (int j = 0; j <= t.n_; ++j) {
            if (pr[j] == 0.0) continue;
            pr[j] *= inv;
            nz.push_back(j);
        }
        pr[c] = 1.0;
        for (int i = 0; i <= t.m_; ++i) {
            if (i == r) continue;
            double* ri = t.row(i);
            double f = ri[c];
            if (f == 0.0) continue;
            for (int j : nz) ri[j] -= f * pr[j];
            ri[c] = 0.0;
        }
        basis[r] = c;
    }

    Status run(long limit) {
        int degenerate_run = 0;
        bool bland = false;
        const int bland_after = 50;
        for (long it = 0; it < limit; ++it) {
            double* obj = t.row(t.m_);
            int enter = -1;
            double best = -eps;
            for (int j = 0; j < t.n_; ++j) {
                if (!allowed[j]) continue;
                if (obj[j] < -eps) {
                    if (bland) {
                        enter = j;
                        break;
                    }
                    if (obj[j] < best) {
                        best = obj[j];
                        enter = j;
                    }
                }
            }
            if (enter < 0) return Status::Optimal;
            int leave = -1;
            double ratio = std::numeric_limits<double>::infinity();
            for (int i = 0; i < t.m_; ++i) {
                double a = t.at(i, enter);
                if (a <= eps) continue;
                double q = t.rhs(i) / a;
                if (q < ratio - 1e-12 || (leave >= 0 && std::fabs(q - ratio) <= 1e-12 && basis[i] < basis[leave])) {
                    ratio = q;
                    leave = i;
                }
            }
            if (leave < 0) return Status::Unbounded;
            if (ratio <= 1e-12) {
                if (++degenerate_run >= bland_after) bland = true;
            } else {
                degenerate_run = 0;
                bland = false;
            }
            pivot(leave, enter);
            // clean tiny negatives from round-off
            for (int i = 0; i < t.m_; ++i)
                if (t.rhs(i) < 0 && t.rhs(i) > -1e-11) t.rhs(i) = 0.0;
        }
        return Status::IterationLimit;
    }

    void load_objective(const std::vector<double>& c) {
        double* obj = t.row(t.m_);
        for (int j = 0; j <= t.n_; ++j) obj[j] = 0.0;
        for (int j = 0; j < t.n_ && j < static_cast<int>(c.size()); ++j) obj[j] = c[j];
        for (int i = 0; i < t.m_; ++i) {
            int b = basis[i];
            double cb = b < static_cast<int>(c.size()) ? c[b] : 0.0;
            if (cb == 0.0) continue;
            double* ri = t.row(i);
            for (int j = 0; j <= t.n_; ++j) obj[j] -= cb * ri[j];
        }
    }
};

}  // namespace

Result solve(const Problem& p, double eps) {
    int m = static_cast<int>(p.rows.size());
    int n = p.num_vars;
    // column layout: originals | slack/surplus | artificials
    int slack_count = 0, art_count = 0;
    for (const auto& r : p.rows) {
        if (r.sense != Sense::Eq) ++slack_count;
    }
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    std::vector<double> sign(m, 1.0);
    int col = n;
    for (int i = 0; i < m; ++i)
        if (p.rows[i].sense != Sense::Eq) slack_col[i] = col++;
    for (int i = 0; i < m; ++i) {
        Sense s = p.rows[i].sense;
        if (p.rows[i].rhs < 0) {
            sign[i] = -1.0;
            if (s == Sense::Le) s = Sense::Ge;
            else if (s == Sense::Ge) s = Sense::Le;
        }
        if (s != Sense::Le) {
            art_col[i] = col++;
            ++art_count;
        }
    }
    int total = col;
    Engine eng(m, total, eps);
    for (int i = 0; i < m; ++i) {
        const auto& r = p.rows[i];
        for (auto [j, v] : r.coeffs) eng.t.at(i, j) += sign[i] * v;
        eng.t.rhs(i) = sign[i] * r.rhs;
        if (slack_col[i] >= 0) eng.t.at(i, slack_col[i]) = (r.sense == Sense::Le ? 1.0 : -1.0) * sign[i];
        if (art_col[i] >= 0) {
            eng.t.at(i, art_col[i]) = 1.0;
            eng.basis[i] = art_col[i];
        } else {
            eng.basis[i] = slack_col[i];
        }
    }
    long limit = 50L * (m + total) + 1000;
    Result res;
    if (art_count > 0) {
        std::vector<double> c1(total, 0.0);
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0) c1[art_col[i]] = 1.0;
        eng.load_objective(c1);
        Status st = eng.run(limit);
        res.pivots = eng.pivots;
        if (st != Status::Optimal) {
            res.status = st;
            return res;
        }
        double infeas = -eng.t.rhs(m);
        if (infeas > 1e-7) {
            res.status = Status::Infeasible;
            return res;
        }
        // drive artificials out of the basis where possible
        for (int i = 0; i < m; ++i) {
            int b = eng.basis[i];
            if (b < n + slack_count) continue;
            for (int j = 0; j < n + slack_count; ++j) {
                if (std::fabs(eng.t.at(i, j)) > 1e-7) {
                    eng.pivot(i, j);
                    break;
                }
            }
        }
        for (int j = n + slack_count; j < total; ++j) eng.allowed[j] = 0;
    }
    std::vector<double> c2(total, 0.0);
    for (int j = 0; j < n && j < static_cast<int>(p.cost.size()); ++j) c2[j] = p.cost[j];
    eng.load_objective(c2);
    Status st = eng.run(limit);
    res.pivots = eng.pivots;
    res.status = st;
    res.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (eng.basis[i] >= 0 && eng.basis[i] < n) res.x[eng.basis[i]] = eng.t.rhs(i);
    res.objective = 0;
    for (int j = 0; j < n; ++j) res.objective += c2[j] * res.x[j];
    return res;
}

}  // namespace rtt::simplex
