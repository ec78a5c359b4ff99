#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <c4star/errors.hpp>
#include <c4star/gf.hpp>

#include <set>

using namespace c4star;

namespace {

// Polynomial root count over Z_p; a degree 2 or 3 polynomial is
// irreducible iff it has no root.
auto has_root(const std::vector<int> & coeffs, int p) -> bool
{
    for (int x = 0; x < p; ++x) {
        int value = 0, power = 1;
        for (int c : coeffs) {
            value = (value + c * power) % p;
            power = power * x % p;
        }
        if (value == 0)
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("prime power recognition")
{
    CHECK_FALSE(is_prime_power(1));
    CHECK_FALSE(is_prime_power(6));
    CHECK_FALSE(is_prime_power(12));
    CHECK(is_prime_power(2));
    CHECK(is_prime_power(9));
    CHECK(is_prime_power(64));
    auto pp = factor_prime_power(81);
    REQUIRE(pp);
    CHECK(pp->p == 3);
    CHECK(pp->e == 4);
    CHECK(prime_powers_up_to(17) == std::vector<int>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17});
}

TEST_CASE("field_new rejects non prime powers")
{
    CHECK_THROWS_AS(FiniteField(6), NotPrimePower);
    CHECK_THROWS_AS(FiniteField(1), NotPrimePower);
    CHECK_THROWS_AS(FiniteField(0), NotPrimePower);
    CHECK_THROWS_WITH(FiniteField(6), "6 is not a prime power");
}

TEST_CASE("GF(5) inverse of 2 is 3")
{
    FiniteField f(5);
    CHECK(f.to_poly(f.inv(f.from_poly(2))) == 3);
    CHECK_THROWS_AS(f.inv(f.zero()), DivisionByZero);
}

TEST_CASE("GF(4) modulus and alpha match the brute-force choice")
{
    // Oracle: the smallest monic degree-2 polynomial over GF(2) without a root.
    std::vector<int> expected;
    for (int low = 0; low < 4 && expected.empty(); ++low) {
        std::vector<int> f{low % 2, low / 2, 1};
        if (! has_root(f, 2))
            expected = f;
    }
    FiniteField f(4);
    CHECK(f.modulus() == expected);
    CHECK(f.modulus() == std::vector<int>{1, 1, 1});
    // alpha = x, which has poly code 2 and order 3.
    CHECK(f.to_poly(f.alpha()) == 2);
    CHECK(f.multiplicative_order(f.alpha()) == 3);
    // x^2 = x + 1
    CHECK(f.to_poly(f.mul(f.alpha(), f.alpha())) == 3);
}

TEST_CASE("GF(8) and GF(9) moduli are the smallest rootless cubics/quadratics")
{
    for (auto [q, p, deg] : {std::tuple{8, 2, 3}, std::tuple{9, 3, 2}, std::tuple{27, 3, 3}}) {
        std::vector<int> expected;
        int count = 1;
        for (int i = 0; i < deg; ++i)
            count *= p;
        for (int low = 0; low < count && expected.empty(); ++low) {
            std::vector<int> f;
            for (int i = 0, c = low; i < deg; ++i, c /= p)
                f.push_back(c % p);
            f.push_back(1);
            if (! has_root(f, p))
                expected = f;
        }
        CHECK(FiniteField(q).modulus() == expected);
    }
}

TEST_CASE("GF(3): alpha is 2 and alpha*alpha = 1")
{
    FiniteField f(3);
    CHECK(f.to_poly(f.alpha()) == 2);
    CHECK(f.mul(f.alpha(), f.alpha()) == f.element(2));
    CHECK(f.to_poly(f.element(2)) == 1);
    CHECK(f.one() == f.element(2));
}

TEST_CASE("GF(8): every nonzero element satisfies a^7 = 1")
{
    FiniteField f(8);
    for (auto a : f.elements()) {
        if (a == f.zero())
            continue;
        auto x = f.one();
        for (int i = 0; i < 7; ++i)
            x = f.mul(x, a);
        CHECK(x == f.one());
    }
}

TEST_CASE("ordering keys follow powers of alpha")
{
    FiniteField f3(3);
    // Sequence 0, 2, 1 then the marker 3.
    std::vector<int> codes;
    for (auto a : f3.elements())
        codes.push_back(f3.to_poly(a));
    CHECK(codes == std::vector<int>{0, 2, 1});
    CHECK(f3.infinity_key() == 3);

    FiniteField f4(4);
    CHECK(f4.ordering_key(f4.zero()) == 0);
    auto x = f4.alpha();
    for (int j = 1; j <= 3; ++j) {
        CHECK(f4.ordering_key(x) == j);
        x = f4.mul(x, f4.alpha());
    }
    CHECK(f4.element(3) == f4.one());
}

TEST_CASE("field axioms hold exhaustively for every prime power up to 16")
{
    for (int q : prime_powers_up_to(16)) {
        CAPTURE(q);
        FiniteField f(q);
        auto els = f.elements();
        CHECK(f.multiplicative_order(f.alpha()) == q - 1);

        std::set<int> keys;
        for (auto a : els)
            keys.insert(f.ordering_key(a));
        keys.insert(f.infinity_key());
        CHECK(keys.size() == static_cast<std::size_t>(q + 1));
        CHECK(*keys.rbegin() == q);

        bool ok = true;
        for (auto a : els) {
            ok = ok && f.add(a, f.zero()) == a && f.mul(a, f.one()) == a;
            ok = ok && f.add(a, f.neg(a)) == f.zero();
            if (a != f.zero())
                ok = ok && f.mul(a, f.inv(a)) == f.one();
            for (auto b : els) {
                ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                for (auto c : els) {
                    ok = ok && f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
                    ok = ok && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
                    ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("alpha has full order up to 64 and pow agrees with repeated mul")
{
    for (int q : prime_powers_up_to(64)) {
        FiniteField f(q);
        CHECK(f.multiplicative_order(f.alpha()) == q - 1);
        auto a = f.element(q / 2);
        auto x = f.one();
        for (int k = 0; k < 2 * q; ++k) {
            CHECK(f.pow(a, k) == x);
            x = f.mul(x, a);
        }
    }
}
