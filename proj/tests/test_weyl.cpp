#include "pcalg/weyl.hpp"

#include "pcalg/parser.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <map>
#include <string>

using namespace pcalg;
using pcalg::testing::Rng;

namespace {

// Independent oracle for products: words over {v, w} normalized by the
// single rewrite  w v -> v w - 1  applied until every v precedes every w.
using WordSum = std::map<std::string, Rat>;

void word_add(WordSum& into, const std::string& word, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = into.emplace(word, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

WordSum normalize_words(WordSum pending) {
    WordSum done;
    while (!pending.empty()) {
        auto it = pending.begin();
        std::string word = it->first;
        Rat c = it->second;
        pending.erase(it);
        size_t pos = word.find("wv");
        if (pos == std::string::npos) {
            word_add(done, word, c);
            continue;
        }
        std::string swapped = word;
        swapped[pos] = 'v';
        swapped[pos + 1] = 'w';
        word_add(pending, swapped, c);
        std::string dropped = word.substr(0, pos) + word.substr(pos + 2);
        Rat neg = -c;
        word_add(pending, dropped, neg);
    }
    return done;
}

WordSum to_words(const WeylElement& a) {
    WordSum out;
    for (const auto& [key, c] : a.terms()) {
        std::string word(static_cast<size_t>(key.first), 'v');
        word.append(static_cast<size_t>(key.second), 'w');
        out.emplace(word, c);
    }
    return out;
}

WordSum oracle_mul(const WeylElement& a, const WeylElement& b) {
    WordSum prod;
    for (const auto& [wa, ca] : to_words(a))
        for (const auto& [wb, cb] : to_words(b)) {
            Rat c = ca * cb;
            word_add(prod, wa + wb, c);
        }
    return normalize_words(std::move(prod));
}

} // namespace

TEST_CASE("reordering formula agrees with the swap oracle on w^b v^c, b,c <= 5") {
    for (int b = 0; b <= 5; ++b) {
        for (int c = 0; c <= 5; ++c) {
            WeylElement lhs = WeylElement::monomial(0, b, Rat(1)) * WeylElement::monomial(c, 0, Rat(1));
            CHECK(to_words(lhs) == oracle_mul(WeylElement::monomial(0, b, Rat(1)),
                                              WeylElement::monomial(c, 0, Rat(1))));
        }
    }
}

TEST_CASE("reordering formula agrees with the swap oracle on random elements") {
    Rng rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        WeylElement a = pcalg::testing::rand_weyl(rng, 3);
        WeylElement b = pcalg::testing::rand_weyl(rng, 3);
        CHECK(to_words(a * b) == oracle_mul(a, b));
    }
}

TEST_CASE("worked products") {
    WeylElement v = WeylElement::v(), w = WeylElement::w();
    CHECK(w * v == v * w - WeylElement::unit());
    CHECK(w * w * v == v * w * w - Rat(2) * w);
    CHECK(v * w == WeylElement::monomial(1, 1, Rat(1)));
}

TEST_CASE("defining relation and ad_v") {
    WeylElement v = WeylElement::v(), w = WeylElement::w();
    CHECK(v * w - w * v == WeylElement::unit());
    CHECK(weyl_ad_v(w) == WeylElement::unit());

    // ad_v(y) = v*y - y*v termwise
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        WeylElement y = pcalg::testing::rand_weyl(rng);
        CHECK(weyl_ad_v(y) == v * y - y * v);
    }
}

TEST_CASE("ad_v is a derivation") {
    Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        WeylElement a = pcalg::testing::rand_weyl(rng, 3);
        WeylElement b = pcalg::testing::rand_weyl(rng, 3);
        CHECK(weyl_ad_v(a * b) == weyl_ad_v(a) * b + a * weyl_ad_v(b));
    }
}

TEST_CASE("associativity on random triples") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        WeylElement a = pcalg::testing::rand_weyl(rng, 3, 3);
        WeylElement b = pcalg::testing::rand_weyl(rng, 3, 3);
        WeylElement c = pcalg::testing::rand_weyl(rng, 3, 3);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("solve_inner: instances") {
    // z_k = w^k / k!
    for (int k = 0; k <= 5; ++k) {
        Rat inv_fact = Rat(1) / Rat(factorial(k));
        CHECK(weyl_solve_inner(WeylElement::unit(), k) == WeylElement::monomial(0, k, inv_fact));
    }
    // v^2 w integrates once to v^2 w^2 / 2
    CHECK(weyl_solve_inner(WeylElement::monomial(2, 1, Rat(1)), 1) ==
          WeylElement::monomial(2, 2, Rat(1, 2)));
    // [v, 1/(l+1) v^k w^{l+1}] = v^k w^l
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l)
            CHECK(weyl_ad_v(WeylElement::monomial(k, l + 1, Rat(1, l + 1))) ==
                  WeylElement::monomial(k, l, Rat(1)));
}

TEST_CASE("solve_inner inverts iterated ad_v exactly") {
    Rng rng(88);
    for (int trial = 0; trial < 100; ++trial) {
        WeylElement y = pcalg::testing::rand_weyl(rng, 4);
        int k = pcalg::testing::rand_int(rng, 0, 4);
        WeylElement x = weyl_solve_inner(y, k);
        for (int i = 0; i < k; ++i) x = weyl_ad_v(x);
        CHECK(x == y);
    }
}

TEST_CASE("rendering and parsing of Weyl elements") {
    WeylElement a = parse_weyl("1/2*v^2*w - w");
    CHECK(a.coeff(2, 1) == Rat(1, 2));
    CHECK(a.coeff(0, 1) == Rat(-1));
    CHECK(a.terms().size() == 2);
    CHECK(parse_weyl(render(a)) == a);
    CHECK(render(WeylElement()) == "0");
}
