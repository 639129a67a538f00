#include "pcalg/linsys.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcalg {

SystemMatrix::SystemMatrix(Perm sigma, int n, int r, int k_max, std::vector<RowKey> rows,
                           std::vector<UnknownIndex> cols, std::vector<std::vector<Int>> entries)
    : sigma_(std::move(sigma)), n_(n), r_(r), k_max_(k_max), rows_(std::move(rows)),
      cols_(std::move(cols)), entries_(std::move(entries)) {}

SystemMatrix gen_system(const Perm& sigma, int n, int r, int k_max) {
    if (!is_permutation(sigma) || static_cast<int>(sigma.size()) != n)
        throw std::invalid_argument("gen_system: bad permutation");
    if (r < 0) throw std::invalid_argument("gen_system: negative order");
    if (k_max < 1) throw std::invalid_argument("gen_system: k_max must be >= 1");

    std::vector<UnknownIndex> cols;
    std::map<UnknownIndex, size_t> col_of;
    for (const auto& b : compositions(n, r)) {
        for (int i = 1; i <= n; ++i) {
            col_of.emplace(UnknownIndex{b, i}, cols.size());
            cols.push_back(UnknownIndex{b, i});
        }
    }

    std::vector<SystemMatrix::RowKey> rows;
    std::vector<std::vector<Int>> entries;
    for (int k = 1; k <= k_max; ++k) {
        for (const auto& b : compositions(n, r + k)) {
            std::vector<Int> row(cols.size(), Int(0));
            for (int i = 1; i <= n; ++i) {
                for (const auto& c : c_set(sigma, k, i)) {
                    MultiIndex bp = sub_index(b, c);
                    if (!all_nonnegative(bp)) continue; // unknown forced to zero
                    auto it = col_of.find(UnknownIndex{bp, i});
                    if (it == col_of.end()) continue;
                    row[it->second] += multinomial_mu(sigma, c, i);
                }
            }
            rows.push_back(SystemMatrix::RowKey{k, b});
            entries.push_back(std::move(row));
        }
    }
    return SystemMatrix(sigma, n, r, k_max, std::move(rows), std::move(cols), std::move(entries));
}

std::vector<std::vector<Rat>> nullspace_int(std::vector<std::vector<Int>> m, size_t cols) {
    const size_t rows = m.size();
    // One-step fraction-free elimination: every interior division is exact.
    std::vector<std::pair<size_t, size_t>> pivots; // (row, col)
    Int prev(1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j < cols; ++j) {
                Int t = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        pivots.emplace_back(row, col);
        ++row;
    }

    std::vector<bool> is_pivot_col(cols, false);
    for (const auto& [pr, pc] : pivots) is_pivot_col[pc] = true;

    std::vector<std::vector<Rat>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot_col[fc]) continue;
        std::vector<Rat> x(cols, Rat(0));
        x[fc] = Rat(1);
        for (size_t p = pivots.size(); p-- > 0;) {
            const auto [pr, pc] = pivots[p];
            Rat acc(0);
            for (size_t j = pc + 1; j < cols; ++j) {
                if (m[pr][j] == 0 || x[j] == 0) continue;
                Rat prod = Rat(m[pr][j]) * x[j];
                acc += prod;
            }
            x[pc] = -acc / Rat(m[pr][pc]);
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::vector<std::vector<Rat>> nullspace(const SystemMatrix& m) {
    return nullspace_int(m.entries(), m.columns().size());
}

CommPoly CommPoly::monomial(int n, const MultiIndex& expo, const Rat& c) {
    CommPoly p(n);
    p.add_term(expo, c);
    return p;
}

void CommPoly::add_term(const MultiIndex& expo, const Rat& c) {
    if (static_cast<int>(expo.size()) != n_ || !all_nonnegative(expo))
        throw std::invalid_argument("CommPoly: bad exponent vector");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(expo, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int CommPoly::degree_in(int i) const {
    if (i < 1 || i > n_) throw std::invalid_argument("CommPoly::degree_in: variable out of range");
    int deg = -1;
    for (const auto& [expo, c] : terms_) deg = std::max(deg, expo[static_cast<size_t>(i - 1)]);
    return deg;
}

int CommPoly::min_variable() const {
    int lo = n_ + 1;
    for (const auto& [expo, c] : terms_)
        for (int i = 1; i <= n_ && i < lo; ++i)
            if (expo[static_cast<size_t>(i - 1)] > 0) lo = std::min(lo, i);
    return lo;
}

CommPoly& CommPoly::operator+=(const CommPoly& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("CommPoly: variable count mismatch");
    for (const auto& [expo, c] : rhs.terms_) add_term(expo, c);
    return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("CommPoly: variable count mismatch");
    for (const auto& [expo, c] : rhs.terms_) {
        Rat neg = -c;
        add_term(expo, neg);
    }
    return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("CommPoly: variable count mismatch");
    CommPoly out(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Rat c = ca * cb;
            out.add_term(add_index(ea, eb), c);
        }
    }
    return out;
}

std::vector<CommPoly> recurrence_family(const Perm& sigma, int n, int k) {
    std::vector<CommPoly> family;
    family.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        CommPoly f(n);
        for (const auto& c : c_set(sigma, k, i)) f.add_term(c, Rat(multinomial_mu(sigma, c, i)));
        family.push_back(std::move(f));
    }
    return family;
}

std::map<int, CommPoly> eliminate_recurrence_pair(const std::map<int, CommPoly>& f_j,
                                                  const std::map<int, CommPoly>& f_l, int pivot) {
    auto pj = f_j.find(pivot);
    auto pl = f_l.find(pivot);
    if (pj == f_j.end() || pl == f_l.end())
        throw std::invalid_argument("eliminate_recurrence_pair: pivot row missing");
    if (!f_j.empty() && f_j.rbegin()->first != pivot)
        throw std::invalid_argument("eliminate_recurrence_pair: pivot must be the largest row index");
    if (pl->second.is_zero())
        throw std::invalid_argument("eliminate_recurrence_pair: pivot polynomial is zero");

    // Degree bookkeeping: deg_{W_i} f_j[i] = k_j and deg_{W_i} f_l[i] = k_l
    // uniformly over the non-pivot rows, with k_j > k_l; every row lives in
    // F[W_i..W_n]. The pivot-row entry of the eliminated column may be zero.
    int k_j = -1, k_l = -1;
    for (const auto& [i, f] : f_j) {
        if (f.min_variable() < i)
            throw std::invalid_argument("eliminate_recurrence_pair: row uses a variable below its index");
        if (i == pivot) continue;
        int d = f.degree_in(i);
        if (k_j < 0) k_j = d;
        else if (d != k_j) throw std::invalid_argument("eliminate_recurrence_pair: inconsistent order k_j");
    }
    for (const auto& [i, f] : f_l) {
        if (f.min_variable() < i)
            throw std::invalid_argument("eliminate_recurrence_pair: row uses a variable below its index");
        if (i == pivot) continue;
        int d = f.degree_in(i);
        if (k_l < 0) k_l = d;
        else if (d != k_l) throw std::invalid_argument("eliminate_recurrence_pair: inconsistent order k_l");
    }
    if (k_j <= k_l) throw std::invalid_argument("eliminate_recurrence_pair: orders must satisfy k_j > k_l");

    std::map<int, CommPoly> g;
    for (const auto& [i, fij] : f_j) {
        auto fil = f_l.find(i);
        if (fil == f_l.end()) throw std::invalid_argument("eliminate_recurrence_pair: row sets differ");
        g.emplace(i, pl->second * fij - pj->second * fil->second);
    }
    for (const auto& [i, gi] : g) {
        if (i == pivot) {
            if (!gi.is_zero()) throw std::logic_error("eliminate_recurrence_pair: pivot row did not cancel");
        } else if (i < pivot && gi.degree_in(i) != k_j) {
            throw std::logic_error("eliminate_recurrence_pair: degree bookkeeping failed");
        }
    }
    return g;
}

namespace {

std::string render_index(const MultiIndex& b) {
    std::string s = "(";
    for (size_t i = 0; i < b.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(b[i]);
    }
    return s + ")";
}

std::string render_equation(const Perm& sigma, int k, const MultiIndex& b) {
    const int n = static_cast<int>(sigma.size());
    std::string s;
    for (int i = 1; i <= n; ++i) {
        for (const auto& c : c_set(sigma, k, i)) {
            Int mu = multinomial_mu(sigma, c, i);
            if (!s.empty()) s += " + ";
            if (mu != 1) s += mu.get_str() + "*";
            s += "m^" + std::to_string(i) + "_" + render_index(sub_index(b, c));
        }
    }
    return s + " = 0";
}

} // namespace

std::string render_system_report(const SystemMatrix& m) {
    auto kernel = nullspace(m);
    const size_t cols = m.columns().size();
    std::ostringstream os;
    os << "system: n=" << m.n() << " r=" << m.r() << " k_max=" << m.k_max() << "\n";
    os << "equations: " << m.rows().size() << ", unknowns: " << cols << "\n";
    os << "rank: " << (cols - kernel.size()) << ", kernel dimension: " << kernel.size() << "\n";
    if (kernel.empty()) {
        os << "kernel: {0} (only the trivial solution)\n";
    } else {
        os << "kernel basis:\n";
        for (const auto& vec : kernel) {
            os << " ";
            for (size_t j = 0; j < cols; ++j) {
                os << " m^" << m.columns()[j].i << "_" << render_index(m.columns()[j].b) << "=";
                os << rat_to_string(vec[j]);
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string render_paper_example() {
    const int n = 2, r = 1;
    const Perm id = identity_perm(n);
    std::ostringstream os;
    os << "unknowns: m^i_(b) for b in B_" << r << " = {(1,0),(0,1)}, i in {1,2};"
       << " any other index is identically 0\n";
    os << "k = 1 (extended):\n";
    for (const auto& b : compositions(n, r + 2))
        os << "  " << render_equation(id, 1, sub_index(b, unit_index(n, 2))) << "\n";
    os << "k = 2:\n";
    for (const auto& b : compositions(n, r + 2))
        os << "  " << render_equation(id, 2, b) << "\n";
    os << render_system_report(gen_system(id, n, r, 2));
    return os.str();
}

} // namespace pcalg
