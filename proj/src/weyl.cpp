#include "pcalg/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace pcalg {

WeylElement WeylElement::monomial(int vdeg, int wdeg, const Rat& c) {
    if (vdeg < 0 || wdeg < 0) throw std::invalid_argument("WeylElement: negative degree");
    WeylElement a;
    a.add_term(vdeg, wdeg, c);
    return a;
}

Rat WeylElement::coeff(int vdeg, int wdeg) const {
    auto it = terms_.find({vdeg, wdeg});
    return it == terms_.end() ? Rat(0) : it->second;
}

void WeylElement::add_term(int vdeg, int wdeg, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(std::make_pair(vdeg, wdeg), c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WeylElement& WeylElement::operator+=(const WeylElement& rhs) {
    for (const auto& [key, c] : rhs.terms_) add_term(key.first, key.second, c);
    return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
        Rat neg = -c;
        add_term(key.first, key.second, neg);
    }
    return *this;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    // v^{k1} w^{l1} * v^{k2} w^{l2}: reorder the middle factors with
    // w^b v^c = sum_j (-1)^j j! C(b,j) C(c,j) v^{c-j} w^{b-j}.
    WeylElement out;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            const int l1 = ka.second, k2 = kb.first;
            const int jmax = std::min(l1, k2);
            for (int j = 0; j <= jmax; ++j) {
                Rat coef = ca * cb;
                Int swaps = factorial(j) * binomial(l1, j) * binomial(k2, j);
                if (j % 2 == 1) swaps = -swaps;
                coef *= Rat(swaps);
                out.add_term(ka.first + k2 - j, l1 - j + kb.second, coef);
            }
        }
    }
    return out;
}

WeylElement operator*(const Rat& c, const WeylElement& a) {
    WeylElement out;
    if (c == 0) return out;
    for (const auto& [key, x] : a.terms()) {
        Rat prod = c * x;
        out.add_term(key.first, key.second, prod);
    }
    return out;
}

WeylElement weyl_ad_v(const WeylElement& y) {
    WeylElement out;
    for (const auto& [key, c] : y.terms()) {
        if (key.second == 0) continue;
        Rat scaled = Rat(key.second) * c;
        out.add_term(key.first, key.second - 1, scaled);
    }
    return out;
}

WeylElement weyl_solve_inner(const WeylElement& y, int k) {
    if (k < 0) throw std::invalid_argument("weyl_solve_inner: negative depth");
    WeylElement out = y;
    for (int step = 0; step < k; ++step) {
        WeylElement next;
        for (const auto& [key, c] : out.terms()) {
            Rat integrated = c / Rat(key.second + 1);
            next.add_term(key.first, key.second + 1, integrated);
        }
        out = next;
    }
    return out;
}

std::string render(const WeylElement& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : a.terms()) {
        Rat coef = c;
        if (first) {
            if (coef < 0) {
                os << "-";
                coef = -coef;
            }
        } else {
            if (coef < 0) {
                os << " - ";
                coef = -coef;
            } else {
                os << " + ";
            }
        }
        std::string mono;
        auto emit = [&](const std::string& factor) {
            if (!mono.empty()) mono += "*";
            mono += factor;
        };
        if (key.first == 1) emit("v");
        else if (key.first > 1) emit("v^" + std::to_string(key.first));
        if (key.second == 1) emit("w");
        else if (key.second > 1) emit("w^" + std::to_string(key.second));
        if (mono.empty()) {
            os << rat_to_string(coef);
        } else if (coef == 1) {
            os << mono;
        } else {
            os << rat_to_string(coef) << "*" << mono;
        }
        first = false;
    }
    return os.str();
}

} // namespace pcalg
