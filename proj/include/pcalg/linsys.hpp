#pragma once

#include "pcalg/combinatorics.hpp"
#include "pcalg/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace pcalg {

/// Column label of the system: unknown m^i_{b'} with b' in B_r, i in {1..n}.
/// Unknowns indexed outside B_r are identically zero and never materialized.
struct UnknownIndex {
    MultiIndex b;
    int i;
    friend bool operator<(const UnknownIndex& a, const UnknownIndex& b) {
        return std::tie(a.b, a.i) < std::tie(b.b, b.i);
    }
    friend bool operator==(const UnknownIndex& a, const UnknownIndex& b) {
        return a.b == b.b && a.i == b.i;
    }
};

/// Integer matrix of the equations
///   sum_i sum_{c in C^sigma_{k,i}} mu^sigma_{c,i} m^i_{b-c} = 0
/// stacked over k = 1..k_max and b in B_{r+k}. Rows indexed by b outside
/// B_{r+k} reference only out-of-range unknowns and are omitted.
class SystemMatrix {
public:
    struct RowKey {
        int k;
        MultiIndex b;
    };

    SystemMatrix(Perm sigma, int n, int r, int k_max, std::vector<RowKey> rows,
                 std::vector<UnknownIndex> cols, std::vector<std::vector<Int>> entries);

    int n() const { return n_; }
    int r() const { return r_; }
    int k_max() const { return k_max_; }
    const Perm& sigma() const { return sigma_; }
    const std::vector<RowKey>& rows() const { return rows_; }
    const std::vector<UnknownIndex>& columns() const { return cols_; }
    const std::vector<std::vector<Int>>& entries() const { return entries_; }
    const Int& at(size_t row, size_t col) const { return entries_[row][col]; }

private:
    Perm sigma_;
    int n_, r_, k_max_;
    std::vector<RowKey> rows_;
    std::vector<UnknownIndex> cols_;
    std::vector<std::vector<Int>> entries_;
};

SystemMatrix gen_system(const Perm& sigma, int n, int r, int k_max);

/// Basis of the rational kernel, via fraction-free (Bareiss) elimination
/// over the integers with rational back-substitution.
std::vector<std::vector<Rat>> nullspace(const SystemMatrix& m);
std::vector<std::vector<Rat>> nullspace_int(std::vector<std::vector<Int>> m, size_t cols);

/// Commutative polynomial in W_1..W_n over Q (dense exponent vectors as
/// keys), used for the recurrence-elimination step.
class CommPoly {
public:
    explicit CommPoly(int n) : n_(n) {}
    static CommPoly monomial(int n, const MultiIndex& expo, const Rat& c);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, Rat>& terms() const { return terms_; }
    void add_term(const MultiIndex& expo, const Rat& c);

    /// Degree in W_i (1-based); -1 for the zero polynomial.
    int degree_in(int i) const;
    /// Least variable occurring (1-based); n+1 for constants and zero.
    int min_variable() const;

    CommPoly& operator+=(const CommPoly& rhs);
    CommPoly& operator-=(const CommPoly& rhs);
    friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
    friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
    friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
    friend bool operator==(const CommPoly& a, const CommPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    std::map<MultiIndex, Rat> terms_;
};

/// The polynomial family realizing the order-k relations of the system:
/// f_{i,k} = sum_{c in C^sigma_{k,i}} mu^sigma_{c,i} W^c, for i = 1..n
/// (returned 0-indexed by i-1). deg_{W_i} f_{i,k} = k.
std::vector<CommPoly> recurrence_family(const Perm& sigma, int n, int k);

/// One cross-multiplication step of the elimination lemma: given the
/// families {f_{i,j}}_i of W_i-degree k_j and {f_{i,l}}_i of W_i-degree k_l
/// with k_j > k_l, and the pivot row i_l, returns
///   g_{i,j} = f_{i_l,l} * f_{i,j} - f_{i_l,j} * f_{i,l},
/// which vanishes at i = i_l and keeps W_i-degree k_j for i < i_l.
/// Keys of the maps are the row indices i. Throws std::invalid_argument if
/// the degree preconditions fail or f_{i_l,l} = 0.
std::map<int, CommPoly> eliminate_recurrence_pair(const std::map<int, CommPoly>& f_j,
                                                  const std::map<int, CommPoly>& f_l, int pivot);

/// Human-readable report: dimensions, rank, kernel dimension.
std::string render_system_report(const SystemMatrix& m);

/// The n = 2, r = 1 system in the layout of the worked example: the four
/// extended k = 1 equations and the four k = 2 equations, including the
/// out-of-range unknowns that are identically zero.
std::string render_paper_example();

} // namespace pcalg
