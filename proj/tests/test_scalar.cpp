#include "random_support.hpp"
#include "virasoro/mpoly.hpp"
#include "virasoro/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace virasoro;
using virasoro::testing::random_mpoly;
using virasoro::testing::random_rat;

namespace {

const MPoly n = MPoly::variable(Var::N);
const MPoly a = MPoly::variable(Var::Alpha);
const MPoly b = MPoly::variable(Var::Beta);

}  // namespace

TEST_CASE("Rat parsing and printing") {
    CHECK_THROWS_AS(Rat::parse("6/-4"), std::invalid_argument);
    CHECK(Rat::parse("-6/4").str() == "-3/2");
    CHECK(Rat::parse("10/5").str() == "2");
    CHECK(Rat::parse("+7").str() == "7");
    CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rat::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("Rat floor and fractional part") {
    CHECK(Rat::parse("5/2").floor() == 2);
    CHECK(Rat::parse("-1/3").floor() == -1);
    CHECK(Rat::parse("-1/3").frac() == Rat::parse("2/3"));
    CHECK(Rat(4).frac() == Rat(0));
}

TEST_CASE("Rat field axioms on random triples") {
    for (int i = 0; i < 300; ++i) {
        const Rat x = random_rat(), y = random_rat(), z = random_rat();
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + Rat(0) == x);
        CHECK(x * Rat(1) == x);
        CHECK(x + (-x) == Rat(0));
        if (!x.is_zero()) CHECK(x * (Rat(1) / x) == Rat(1));
        // Normalization is idempotent: re-parsing the printed form is stable.
        CHECK(Rat::parse(x.str()) == x);
        CHECK(Rat::parse(x.str()).str() == x.str());
        CHECK(x.den() > 0);
    }
}

TEST_CASE("mpoly_eval examples") {
    CHECK((n + 1).eval({{Var::N, Rat(-1)}}) == Rat(0));
    const MPoly ex11_1 = b - a - n - 1;
    CHECK(ex11_1.eval({{Var::Alpha, Rat::parse("1/2")}, {Var::Beta, Rat::parse("1/2")}, {Var::N, Rat(-1)}}) == Rat(0));
    const MPoly ex11_2 = (b - a - n - 2) * (b - a - n - 1) + (2 * b - a - n - 2);
    CHECK(ex11_2.eval({{Var::Alpha, Rat(0)}, {Var::Beta, Rat(0)}, {Var::N, Rat(1)}}) == Rat(3));
}

TEST_CASE("mpoly_eval names the missing variable") {
    const MPoly p = n + b;
    try {
        (void)p.eval({{Var::N, Rat(1)}});
        FAIL("expected an exception");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("'b'") != std::string::npos);
    }
}

TEST_CASE("canonical printing order") {
    CHECK((b - a - n - 1).str() == "-n - a + b - 1");
    CHECK((n * n - n - 6).str() == "n^2 - n - 6");
    CHECK((Rat::parse("1/2") * a * b + 3).str() == "1/2*a*b + 3");
    CHECK(MPoly().str() == "0");
}

TEST_CASE("mpoly ring properties and evaluation homomorphism") {
    for (int i = 0; i < 200; ++i) {
        const MPoly p = random_mpoly(), q = random_mpoly(), r = random_mpoly();
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        const Assignment at{{Var::N, random_rat()}, {Var::Alpha, random_rat()}, {Var::Beta, random_rat()}};
        CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
        CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
    }
}

TEST_CASE("substitution and division") {
    const MPoly p = n * n + a;
    CHECK(p.substitute(Var::N, b - a - 1) == (b - a - 1) * (b - a - 1) + a);
    const MPoly f = n * n + 2 * a * n + b;
    const MPoly g = (n + a) * f + (3 * n - b);
    const DivRem qr = divrem(g, f, Var::N);
    CHECK(qr.quotient == n + a);
    CHECK(qr.remainder == 3 * n - b);
    CHECK_THROWS_AS(divrem(g, a * n + 1, Var::N), std::invalid_argument);
}

TEST_CASE("integer_roots examples") {
    CHECK(integer_roots(n * n - n - 6).roots == std::vector<std::int64_t>{-2, 3});
    // phi_n(d(-1)^2 + d(-2)) with alpha = 0, beta = -3.
    const MPoly ex = ((b - a - n - 2) * (b - a - n - 1) + (2 * b - a - n - 2))
                         .partial_eval({{Var::Alpha, Rat(0)}, {Var::Beta, Rat(-3)}});
    CHECK(integer_roots(ex).roots == std::vector<std::int64_t>{-6, -2});
    CHECK(integer_roots(n * n + 1).roots.empty());
    CHECK_FALSE(integer_roots(n * n + 1).all_integers);
    CHECK(integer_roots(MPoly()).all_integers);
    CHECK(integer_roots(MPoly(5)).roots.empty());
    CHECK(integer_roots(n * n * (n - Rat::parse("1/2"))).roots == std::vector<std::int64_t>{0});
    CHECK_THROWS_AS(integer_roots(n + a), std::invalid_argument);
}

TEST_CASE("integer_roots agrees with exhaustive re-evaluation") {
    for (int i = 0; i < 200; ++i) {
        // Build from random integer roots plus a random cofactor so roots exist.
        MPoly p(virasoro::testing::random_rat(6, 3));
        if (p.is_zero()) p = MPoly(1);
        const int nroots = virasoro::testing::uniform_int(0, 3);
        for (int k = 0; k < nroots; ++k) p *= n - virasoro::testing::uniform_int(-15, 15);
        if (virasoro::testing::uniform_int(0, 1)) p *= n * n + random_rat(8, 3) * n + random_rat(8, 3);
        const auto roots = integer_roots(p);
        const std::int64_t bound = integer_root_bound(p);
        for (std::int64_t k = -bound - 1; k <= bound + 1; ++k) {
            const bool zero = p.eval({{Var::N, Rat(static_cast<long>(k))}}).is_zero();
            CHECK(zero == roots.contains(k));
        }
    }
}

namespace {

using virasoro::testing::uniform_int;

// Product of (x - r) over the given roots, in the variable v.
MPoly from_roots(const std::vector<Rat>& roots, Var v) {
    MPoly p(1);
    for (const auto& r : roots) p *= MPoly::variable(v) - r;
    return p;
}

std::vector<Rat> distinct_sorted(std::vector<Rat> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

TEST_CASE("rational_roots examples") {
    CHECK(rational_roots(5 * b * b - 11 * b + 6, Var::Beta) == std::vector<Rat>{Rat(1), Rat::parse("6/5")});
    CHECK(rational_roots(b * b - 2, Var::Beta).empty());
    CHECK(rational_roots(b * b + 1, Var::Beta).empty());
    CHECK(rational_roots(MPoly(7), Var::Beta).empty());
    CHECK(rational_roots(pow(2 * n - 1, 3) * (n + 4), Var::N) == std::vector<Rat>{Rat(-4), Rat::parse("1/2")});
    CHECK_THROWS(rational_roots(MPoly(), Var::N));
}

TEST_CASE("rational_roots recovers planted roots") {
    for (int i = 0; i < 200; ++i) {
        std::vector<Rat> roots;
        for (int k = uniform_int(0, 4); k > 0; --k) roots.push_back(random_rat(15, 8));
        // Repeat a root and add an irreducible quadratic with irrational roots.
        if (!roots.empty() && uniform_int(0, 1)) roots.push_back(roots.front());
        MPoly p = from_roots(roots, Var::N) * random_rat(9, 5);
        if (p.is_zero()) continue;
        if (uniform_int(0, 1)) p *= n * n - Rat(uniform_int(2, 3));
        CHECK(rational_roots(p, Var::N) == distinct_sorted(roots));
    }
}

TEST_CASE("resultant equals the product of g over the roots of a monic f") {
    for (int i = 0; i < 200; ++i) {
        std::vector<Rat> roots;
        for (int k = uniform_int(1, 4); k > 0; --k) roots.push_back(random_rat(6, 4));
        const MPoly f = from_roots(roots, Var::N);
        MPoly g;
        const int dg = uniform_int(1, 4);
        for (int k = 0; k <= dg; ++k) g += MPoly(random_rat(6, 3)) * pow(n, static_cast<unsigned>(k));
        if (g.degree(Var::N) == 0) continue;
        Rat expect(1);
        for (const auto& r : roots) expect *= g.eval({{Var::N, r}});
        CHECK(resultant(f, g, Var::N) == MPoly(expect));
    }
}

TEST_CASE("resultant with parameters vanishes where a common root appears") {
    // f = n - b, g = n^2 - 4: Res = b^2 - 4 up to sign.
    const MPoly r = resultant(n - b, n * n - 4, Var::N);
    CHECK(r.only_in(Var::Beta));
    CHECK(rational_roots(r, Var::Beta) == std::vector<Rat>{Rat(-2), Rat(2)});
    CHECK_THROWS(resultant(MPoly(3), n, Var::N));
}

TEST_CASE("univariate_gcd") {
    CHECK(univariate_gcd((n - 1) * (n + 2), (n - 1) * (n - 3), Var::N) == n - 1);
    CHECK(univariate_gcd(2 * n - 1, MPoly(), Var::N) == n - Rat::parse("1/2"));
    CHECK(univariate_gcd(n * n + 1, n - 1, Var::N) == MPoly(1));
    for (int i = 0; i < 200; ++i) {
        const Rat common = random_rat(), x = random_rat(), y = random_rat();
        if (x == y || x == common || y == common) continue;
        const MPoly f = (n - common) * (n - x) * random_rat(5, 3);
        const MPoly g = (n - common) * (n - y);
        if (f.is_zero()) continue;
        CHECK(univariate_gcd(f, g, Var::N) == n - common);
    }
}
