#include "pcalg/shift.hpp"

#include <sstream>
#include <stdexcept>

namespace pcalg {

namespace {

void accumulate(ShiftOp::Column& into, const ShiftOp::Column& from, const Rat& scale) {
    if (scale == 0) return;
    for (const auto& [row, c] : from) {
        Rat delta = scale * c;
        auto [it, fresh] = into.emplace(row, delta);
        if (!fresh) {
            it->second += delta;
            if (it->second == 0) into.erase(it);
        }
    }
}

ShiftOp::Column shifted_rows(const ShiftOp::Column& vec, long by) {
    ShiftOp::Column out;
    for (const auto& [row, c] : vec) out.emplace(row + by, c);
    return out;
}

} // namespace

ShiftOp::ShiftOp() {
    auto st = std::make_shared<State>();
    st->oracle = [](long) { return Column{}; };
    state_ = st;
}

ShiftOp ShiftOp::from_oracle(Oracle f) {
    ShiftOp op;
    auto st = std::make_shared<State>();
    st->oracle = std::move(f);
    op.state_ = st;
    return op;
}

ShiftOp ShiftOp::identity() {
    return from_oracle([](long j) { return Column{{j, Rat(1)}}; });
}

ShiftOp ShiftOp::shift() {
    return from_oracle([](long j) { return Column{{j + 1, Rat(1)}}; });
}

ShiftOp ShiftOp::shift_power(int k) {
    if (k < 0) throw std::invalid_argument("shift_power: negative exponent");
    return from_oracle([k](long j) { return Column{{j + k, Rat(1)}}; });
}

ShiftOp ShiftOp::from_columns(std::map<long, Column> cols) {
    for (const auto& [j, col] : cols) {
        if (j < 1) throw std::invalid_argument("from_columns: column index must be >= 1");
        for (const auto& [row, c] : col)
            if (row < 1) throw std::invalid_argument("from_columns: row index must be >= 1");
    }
    auto shared = std::make_shared<std::map<long, Column>>(std::move(cols));
    return from_oracle([shared](long j) {
        auto it = shared->find(j);
        return it == shared->end() ? Column{} : it->second;
    });
}

ShiftOp::Column ShiftOp::column(long j) const {
    if (j < 1) throw std::invalid_argument("ShiftOp::column: index must be >= 1");
    {
        std::lock_guard<std::mutex> lock(state_->mu);
        auto it = state_->cache.find(j);
        if (it != state_->cache.end()) return it->second;
    }
    // Computed outside the lock: oracles may recursively probe other
    // operators. Insertion is idempotent because columns are pure.
    Column col = state_->oracle(j);
    std::lock_guard<std::mutex> lock(state_->mu);
    return state_->cache.emplace(j, std::move(col)).first->second;
}

ShiftOp::Column ShiftOp::apply(const Column& vec) const {
    Column out;
    for (const auto& [row, c] : vec) accumulate(out, column(row), c);
    return out;
}

ShiftOp operator+(const ShiftOp& a, const ShiftOp& b) {
    return ShiftOp::from_oracle([a, b](long j) {
        ShiftOp::Column out = a.column(j);
        accumulate(out, b.column(j), Rat(1));
        return out;
    });
}

ShiftOp operator-(const ShiftOp& a, const ShiftOp& b) {
    return ShiftOp::from_oracle([a, b](long j) {
        ShiftOp::Column out = a.column(j);
        accumulate(out, b.column(j), Rat(-1));
        return out;
    });
}

ShiftOp operator*(const ShiftOp& a, const ShiftOp& b) {
    return ShiftOp::from_oracle([a, b](long j) { return a.apply(b.column(j)); });
}

ShiftOp operator*(const Rat& c, const ShiftOp& a) {
    return ShiftOp::from_oracle([c, a](long j) {
        ShiftOp::Column out;
        accumulate(out, a.column(j), c);
        return out;
    });
}

ShiftOp shift_solve_inner_1(const ShiftOp& y) {
    return ShiftOp::from_oracle([y](long n) {
        ShiftOp::Column out;
        if (n < 2) return out;
        for (long m = 1; m <= n - 1; ++m)
            accumulate(out, shifted_rows(y.column(m), n - 1 - m), Rat(-1));
        return out;
    });
}

ShiftOp shift_solve_inner(const ShiftOp& y, int k) {
    if (k < 0) throw std::invalid_argument("shift_solve_inner: negative depth");
    ShiftOp out = y;
    for (int step = 0; step < k; ++step) out = shift_solve_inner_1(out);
    return out;
}

bool probe_equal(const ShiftOp& a, const ShiftOp& b, long window) {
    for (long j = 1; j <= window; ++j)
        if (a.column(j) != b.column(j)) return false;
    return true;
}

std::string render(const ShiftOp& a, long window) {
    std::ostringstream os;
    for (long j = 1; j <= window; ++j) {
        if (j > 1) os << "; ";
        os << "e" << j << " -> ";
        const auto col = a.column(j);
        if (col.empty()) {
            os << "0";
            continue;
        }
        bool first = true;
        for (const auto& [row, c] : col) {
            if (!first) os << " + ";
            os << rat_to_string(c) << "*e" << row;
            first = false;
        }
    }
    return os.str();
}

ShiftAlgebra::ShiftAlgebra(long probe_window) : window_(probe_window) {
    if (probe_window < 1) throw std::invalid_argument("ShiftAlgebra: probe window must be >= 1");
}

} // namespace pcalg
