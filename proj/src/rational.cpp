#include "pcalg/rational.hpp"

#include <stdexcept>

namespace pcalg {

Rat rat_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::string text(s);
    mpq_t raw;
    mpq_init(raw);
    if (mpq_set_str(raw, text.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw std::invalid_argument("malformed rational literal: " + text);
    }
    if (mpz_sgn(mpq_denref(raw)) == 0) {
        mpq_clear(raw);
        throw std::invalid_argument("zero denominator in rational literal: " + text);
    }
    Rat q(raw);
    mpq_clear(raw);
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Int binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int result;
    mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
    return result;
}

Int multinomial(int top, std::span<const int> parts) {
    if (top < 0) throw std::invalid_argument("multinomial with negative top");
    int sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial with negative part");
        sum += p;
    }
    if (sum != top) throw std::invalid_argument("multinomial parts do not sum to top");
    Int result = factorial(top);
    for (int p : parts) result /= factorial(p);
    return result;
}

} // namespace pcalg
