#pragma once

#include "pcalg/rational.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace pcalg {

/// Linear operator on a countably-infinite-dimensional space with basis
/// e_1, e_2, ..., described by a column oracle: column(j) is the finitely
/// supported image of e_j. Columns are memoized on demand; the cache is
/// internally synchronized, so concurrent probes of the same column return
/// identical values. Copies share the oracle and its cache.
///
/// Equality of such operators is semi-decidable; probe_equal compares the
/// first `window` columns, and every claim about this backend is stated per
/// probed column.
class ShiftOp {
public:
    /// Finitely supported vector: 1-based basis row index -> nonzero coeff.
    using Column = std::map<long, Rat>;
    using Oracle = std::function<Column(long)>;

    ShiftOp(); // zero operator
    static ShiftOp zero() { return ShiftOp(); }
    static ShiftOp identity();
    static ShiftOp shift();            // v: e_n -> e_{n+1}
    static ShiftOp shift_power(int k); // v^k
    static ShiftOp from_columns(std::map<long, Column> cols); // zero off the listed columns
    static ShiftOp from_oracle(Oracle f);

    Column column(long j) const;
    Column apply(const Column& vec) const;

    friend ShiftOp operator+(const ShiftOp& a, const ShiftOp& b);
    friend ShiftOp operator-(const ShiftOp& a, const ShiftOp& b);
    friend ShiftOp operator*(const ShiftOp& a, const ShiftOp& b); // composition
    friend ShiftOp operator*(const Rat& c, const ShiftOp& a);

private:
    struct State {
        Oracle oracle;
        mutable std::mutex mu;
        mutable std::map<long, Column> cache;
    };
    std::shared_ptr<const State> state_;
};

/// x with [v, x] = y on every column: x(e_1) = 0,
/// x(e_n) = -(v^{n-2} y(e_1) + v^{n-3} y(e_2) + ... + y(e_{n-1})) for n >= 2.
ShiftOp shift_solve_inner_1(const ShiftOp& y);

/// Iterates shift_solve_inner_1 k times; k = 0 returns y.
ShiftOp shift_solve_inner(const ShiftOp& y, int k);

/// Exact agreement of columns 1..window.
bool probe_equal(const ShiftOp& a, const ShiftOp& b, long window);

/// Rendering of columns 1..window, e.g. "e1 -> 0; e2 -> -1*e1; ...".
std::string render(const ShiftOp& a, long window);

/// Backend facade; equality means agreement on the probe window.
class ShiftAlgebra {
public:
    using Element = ShiftOp;
    static constexpr const char* name = "shift";

    explicit ShiftAlgebra(long probe_window = 20);
    long probe_window() const { return window_; }

    Element zero() const { return ShiftOp::zero(); }
    Element unit() const { return ShiftOp::identity(); }
    Element v() const { return ShiftOp::shift(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element scale(const Rat& c, const Element& a) const { return c * a; }
    bool equal(const Element& a, const Element& b) const { return probe_equal(a, b, window_); }
    Element solve_inner(const Element& y, int k) const { return shift_solve_inner(y, k); }

private:
    long window_;
};

} // namespace pcalg
