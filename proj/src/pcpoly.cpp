#include "pcalg/pcpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pcalg {

int compare(const Segment& a, const Segment& b) {
    if (a.index() != b.index()) return a.index() < b.index() ? -1 : 1;
    if (std::holds_alternative<XWord>(a)) {
        const auto& wa = std::get<XWord>(a);
        const auto& wb = std::get<XWord>(b);
        if (wa < wb) return -1;
        if (wb < wa) return 1;
        return 0;
    }
    const auto& ba = std::get<UVBlock>(a);
    const auto& bb = std::get<UVBlock>(b);
    if (ba < bb) return -1;
    if (bb < ba) return 1;
    return 0;
}

int compare(const AltMonomial& a, const AltMonomial& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i) {
        int c = compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

PCPoly::PCPoly(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("PCPoly: negative variable count");
}

PCPoly PCPoly::unit(int n) {
    PCPoly f(n);
    f.terms_[AltMonomial{}] = Rat(1);
    return f;
}

PCPoly PCPoly::monomial(int n, AltMonomial m, const Rat& c) {
    PCPoly f(n);
    f.add_term(std::move(m), c);
    return f;
}

PCPoly PCPoly::x(int n, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("PCPoly::x: variable index out of range");
    return monomial(n, AltMonomial{Segment(XWord{j})}, Rat(1));
}

PCPoly PCPoly::u(int n) {
    return monomial(n, AltMonomial{Segment(UVBlock{1, 0})}, Rat(1));
}

PCPoly PCPoly::v(int n) {
    return monomial(n, AltMonomial{Segment(UVBlock{0, 1})}, Rat(1));
}

Rat PCPoly::coeff(const AltMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void PCPoly::add_term(const AltMonomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PCPoly& PCPoly::operator+=(const PCPoly& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("PCPoly: variable count mismatch");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

PCPoly& PCPoly::operator-=(const PCPoly& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("PCPoly: variable count mismatch");
    for (const auto& [m, c] : rhs.terms_) {
        Rat neg = -c;
        add_term(m, neg);
    }
    return *this;
}

PCPoly operator*(const PCPoly& lhs, const PCPoly& rhs) {
    if (lhs.n_ != rhs.n_) throw std::invalid_argument("PCPoly: variable count mismatch");
    PCPoly out(lhs.n_);
    for (const auto& [ma, ca] : lhs.terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Rat c = ca * cb;
            out.add_term(concat_monomials(ma, mb), c);
        }
    }
    return out;
}

PCPoly operator*(const Rat& c, const PCPoly& f) {
    PCPoly out(f.vars());
    if (c == 0) return out;
    for (const auto& [m, a] : f.terms()) {
        Rat prod = c * a;
        out.add_term(m, prod);
    }
    return out;
}

PCPoly PCPoly::operator-() const {
    return Rat(-1) * *this;
}

bool operator==(const PCPoly& a, const PCPoly& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
}

namespace {

bool segment_empty(const Segment& s) {
    if (std::holds_alternative<XWord>(s)) return std::get<XWord>(s).empty();
    const auto& b = std::get<UVBlock>(s);
    return b.u == 0 && b.v == 0;
}

// Appends a nonempty segment, merging with the current tail when both are
// words or both are blocks.
void push_merged(AltMonomial& out, const Segment& s) {
    if (out.empty() || out.back().index() != s.index()) {
        out.push_back(s);
        return;
    }
    if (std::holds_alternative<XWord>(s)) {
        auto& tail = std::get<XWord>(out.back());
        const auto& word = std::get<XWord>(s);
        tail.insert(tail.end(), word.begin(), word.end());
    } else {
        auto& tail = std::get<UVBlock>(out.back());
        const auto& blk = std::get<UVBlock>(s);
        tail.u += blk.u;
        tail.v += blk.v;
    }
}

} // namespace

AltMonomial normalize_segments(std::vector<Segment> raw) {
    AltMonomial out;
    out.reserve(raw.size());
    for (auto& s : raw) {
        if (segment_empty(s)) continue;
        push_merged(out, s);
    }
    return out;
}

AltMonomial concat_monomials(const AltMonomial& a, const AltMonomial& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    AltMonomial out = a;
    push_merged(out, b.front());
    out.insert(out.end(), b.begin() + 1, b.end());
    return out;
}

PCPoly commutator(const PCPoly& f, const PCPoly& g) {
    return f * g - g * f;
}

PCPoly ad_pow(const PCPoly& f, const PCPoly& g, int k) {
    if (k < 0) throw std::invalid_argument("ad_pow: negative depth");
    PCPoly out = g;
    for (int i = 0; i < k; ++i) out = commutator(f, out);
    return out;
}

PCPoly pi_k(const PCPoly& f, int k) {
    if (k < 0) throw std::invalid_argument("pi_k: negative exponent");
    PCPoly out(f.vars());
    for (const auto& [m, c] : f.terms()) {
        std::vector<Segment> raw;
        raw.reserve(m.size());
        for (const auto& s : m) {
            if (std::holds_alternative<UVBlock>(s)) {
                const auto& b = std::get<UVBlock>(s);
                raw.emplace_back(UVBlock{0, b.u * k + b.v});
            } else {
                raw.push_back(s);
            }
        }
        out.add_term(normalize_segments(std::move(raw)), c);
    }
    return out;
}

PCPoly x_power(int n, int j, const MultiIndex& b) {
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("x_power: multi-index length mismatch");
    if (j < 1 || j > n) throw std::invalid_argument("x_power: variable index out of range");
    int depth = b[static_cast<size_t>(j - 1)];
    if (depth < 0) throw std::invalid_argument("x_power: negative bracket depth");
    return ad_pow(PCPoly::v(n), PCPoly::x(n, j), depth);
}

PCPoly x_power_marked(int n, int j, const MultiIndex& b) {
    return commutator(PCPoly::u(n), x_power(n, j, b));
}

PCPoly word_power(int n, std::span<const int> word, const MultiIndex& b) {
    PCPoly out = PCPoly::unit(n);
    for (int j : word) out = out * x_power(n, j, b);
    return out;
}

PCPoly word_power_marked(int n, std::span<const int> word, const MultiIndex& b, int marked) {
    if (std::find(word.begin(), word.end(), marked) == word.end())
        throw std::invalid_argument("word_power_marked: marked variable does not occur in word");
    PCPoly out = PCPoly::unit(n);
    for (int j : word) {
        if (j == marked)
            out = out * x_power_marked(n, j, b);
        else
            out = out * x_power(n, j, b);
    }
    return out;
}

std::string render(const AltMonomial& m) {
    if (m.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const std::string& factor) {
        if (!first) os << "*";
        os << factor;
        first = false;
    };
    for (const auto& s : m) {
        if (std::holds_alternative<XWord>(s)) {
            for (int j : std::get<XWord>(s)) emit("X" + std::to_string(j));
        } else {
            const auto& b = std::get<UVBlock>(s);
            if (b.u == 1) emit("U");
            else if (b.u > 1) emit("U^" + std::to_string(b.u));
            if (b.v == 1) emit("V");
            else if (b.v > 1) emit("V^" + std::to_string(b.v));
        }
    }
    return os.str();
}

std::string render(const PCPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            if (a < 0) {
                os << " - ";
                a = -a;
            } else {
                os << " + ";
            }
        }
        if (m.empty()) {
            os << rat_to_string(a);
        } else if (a == 1) {
            os << render(m);
        } else {
            os << rat_to_string(a) << "*" << render(m);
        }
        first = false;
    }
    return os.str();
}

} // namespace pcalg
