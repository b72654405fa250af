#include "gi/errors.hpp"
#include "gi/scalars.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <random>

using namespace gi;

namespace {

using cplx = std::complex<double>;

// Numerical evaluation at exp(2 pi i / N): an oracle independent of the
// reduction tables.
cplx numeric(const CycloScalar& x) {
    const int n = x.conductor();
    const auto c = x.coefficients();
    cplx out = 0;
    for (size_t k = 0; k < c.size(); ++k)
        out += c[k].get_d() * std::polar(1.0, 2 * M_PI * static_cast<double>(k) / n);
    return out;
}

bool close(cplx a, cplx b) { return std::abs(a - b) < 1e-9 * (1 + std::abs(a) + std::abs(b)); }

CycloScalar random_scalar(std::mt19937& rng, int conductor) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> c(static_cast<size_t>(conductor));
    for (auto& v : c)
        v = Rational(num(rng), den(rng));
    return CycloScalar::from_polynomial(conductor, c);
}

} // namespace

TEST_SUITE("scalars") {

TEST_CASE("rational addition") {
    CHECK(CycloScalar(Rational(1, 2)) + CycloScalar(Rational(1, 3)) == CycloScalar(Rational(5, 6)));
}

TEST_CASE("root of unity examples") {
    const CycloScalar z3 = zeta(3), z4 = zeta(4);
    CHECK(z4 + z4 == CycloScalar(2) * z4);
    // x^2 + x + 1 = 0 at zeta_3
    CHECK(z3 + z3 * z3 == CycloScalar(-1));
    CHECK((z3 + z3 * z3).is_rational());
    CHECK(zeta(2) * zeta(2) == CycloScalar(1));
    CHECK(z4 * z4 == CycloScalar(-1));
    CHECK(z3 * z3 * z3 == CycloScalar(1));
    CHECK(z3 * z3.pow(2) == CycloScalar(1));
}

TEST_CASE("inverses") {
    CHECK(CycloScalar(2).inv() == CycloScalar(Rational(1, 2)));
    CHECK(zeta(4).inv() == -zeta(4));
    // 1 + z3 = -z3^2, so its inverse is -z3
    const CycloScalar a = CycloScalar(1) + zeta(3);
    CHECK(a == -zeta(3).pow(2));
    CHECK(a.inv() == -zeta(3));
    CHECK(a * a.inv() == CycloScalar(1));
    CHECK_THROWS_AS(CycloScalar().inv(), DivisionByZero);
    CHECK_THROWS_AS(CycloScalar(1) / CycloScalar(0), DivisionByZero);
}

TEST_CASE("zeta") {
    CHECK(zeta(1) == CycloScalar(1));
    CHECK(zeta(2) == CycloScalar(-1));
    CHECK(zeta(4).conductor() == 4);
    CHECK(zeta(4) * zeta(4) == CycloScalar(-1));
    for (int n = 1; n <= 24; ++n) {
        CHECK(zeta(n).pow(n) == CycloScalar(1));
        CHECK(close(numeric(zeta(n)), std::polar(1.0, 2 * M_PI / n)));
    }
    CHECK_THROWS_AS(zeta(0), InvalidArgument);
}

TEST_CASE("euler phi against gcd count") {
    for (int n = 1; n <= 60; ++n) {
        int count = 0;
        for (int k = 1; k <= n; ++k)
            count += std::gcd(k, n) == 1 ? 1 : 0;
        CHECK(euler_phi(n) == count);
    }
}

TEST_CASE("cyclotomic polynomials against the product over primitive roots") {
    for (int n = 1; n <= 30; ++n) {
        std::vector<cplx> poly{1};
        for (int k = 1; k <= n; ++k) {
            if (std::gcd(k, n) != 1)
                continue;
            const cplx root = std::polar(1.0, 2 * M_PI * k / n);
            std::vector<cplx> next(poly.size() + 1);
            for (size_t i = 0; i < poly.size(); ++i) {
                next[i + 1] += poly[i];
                next[i] -= root * poly[i];
            }
            poly = next;
        }
        const auto& phi = cyclotomic_polynomial(n);
        REQUIRE(phi.size() == poly.size());
        for (size_t i = 0; i < phi.size(); ++i)
            CHECK(std::abs(phi[i].get_d() - poly[i].real()) < 1e-6);
    }
}

TEST_CASE("field operations agree with numerical evaluation") {
    std::mt19937 rng(20240601);
    const int conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
    for (int trial = 0; trial < 200; ++trial) {
        const int na = conductors[rng() % std::size(conductors)];
        const int nb = conductors[rng() % std::size(conductors)];
        const CycloScalar a = random_scalar(rng, na), b = random_scalar(rng, nb);
        CHECK(close(numeric(a + b), numeric(a) + numeric(b)));
        CHECK(close(numeric(a - b), numeric(a) - numeric(b)));
        CHECK(close(numeric(a * b), numeric(a) * numeric(b)));
        if (!b.is_zero()) {
            CHECK(close(numeric(a / b), numeric(a) / numeric(b)));
            CHECK(b * b.inv() == CycloScalar(1));
        }
    }
}

TEST_CASE("ring axioms on random elements") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const CycloScalar a = random_scalar(rng, 3), b = random_scalar(rng, 4), c = random_scalar(rng, 6);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a - a == CycloScalar());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("conductor promotion and demotion") {
    const CycloScalar p = zeta(3) * zeta(4);
    CHECK(p.conductor() == 12);
    CHECK(p == zeta(12).pow(7));
    CHECK(zeta(4) == zeta(8).pow(2));
    CHECK(zeta(8).pow(4) == CycloScalar(-1));
    CHECK(zeta(8).pow(4).is_rational());
    CHECK(zeta(6) == -zeta(3).pow(2));
    CHECK(zeta(4).promoted(8) == zeta(4));
    CHECK_THROWS_AS(zeta(4).promoted(6), InvalidArgument);
    CHECK_FALSE(zeta(3) == zeta(4));
}

TEST_CASE("zero has one representation") {
    CHECK(CycloScalar() == CycloScalar(0));
    CHECK(CycloScalar() == CycloScalar(Rational(0, 5)));
    CHECK((zeta(5) - zeta(5)) == CycloScalar());
    CHECK((CycloScalar(1) + CycloScalar(-1)).is_zero());
    CHECK(CycloScalar().coefficients().size() == 1);
    CHECK(sgn(CycloScalar().rational_value()) == 0);
    CHECK(CycloScalar(1).is_one());
    CHECK_FALSE(CycloScalar().is_one());
}

TEST_CASE("powers") {
    const CycloScalar a = CycloScalar(2) + zeta(5);
    CHECK(a.pow(0) == CycloScalar(1));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.pow(-2) * a.pow(2) == CycloScalar(1));
}

TEST_CASE("text form round trip") {
    std::mt19937 rng(99);
    for (int n : {1, 3, 4, 5, 8}) {
        for (int t = 0; t < 10; ++t) {
            const CycloScalar x = random_scalar(rng, n);
            CHECK(CycloScalar::parse(x.to_string()) == x);
        }
    }
    CHECK(zeta(3).to_string() == "1*z@3");
    CHECK(CycloScalar(Rational(-3, 4)).to_string() == "-3/4");
    CHECK(CycloScalar().to_string() == "0");
    CHECK(CycloScalar::parse("1 + 2*z^2@5") == CycloScalar(1) + CycloScalar(2) * zeta(5).pow(2));
    CHECK(CycloScalar::parse("-z@4") == -zeta(4));
    CHECK(CycloScalar::parse(" 6/4 ") == CycloScalar(Rational(3, 2)));
}

TEST_CASE("malformed text is rejected") {
    for (const char* bad : {"", "1/0", "z", "1 + *z@3", "2@x", "1 2", "1 +", "2*y@3", "1@0", "z^@3"})
        CHECK_THROWS_AS(CycloScalar::parse(bad), ParseError);
}

} // TEST_SUITE
