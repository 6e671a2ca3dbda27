#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "regblock/roots.hpp"
#include "regblock/univar.hpp"

using namespace regblock;

static QPoly qpoly(std::initializer_list<long long> coefs) {
    std::vector<Rational> c;
    for (auto v : coefs) c.emplace_back(v);
    return QPoly(std::move(c));
}

TEST_CASE("rational parsing and normalisation") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(parse_rational(" 7 ") == Rational(7));
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("divrem and gcd") {
    const QPoly a = qpoly({-1, 0, 0, 1});  // x^3 - 1
    const QPoly b = qpoly({-1, 1});        // x - 1
    auto [q, r] = QPoly::divrem(a, b);
    CHECK(r.is_zero());
    CHECK(q == qpoly({1, 1, 1}));
    CHECK(gcd(a, b) == b.monic());
}

TEST_CASE("squarefree multiplicities") {
    SECTION("y (1 + y^2): simple real root and simple pair") {
        const QPoly p = qpoly({0, 1, 0, 1});  // y + y^3
        auto rs = find_roots(p, 3);
        REQUIRE(rs.real_roots.size() == 1);
        CHECK(rs.real_roots[0].multiplicity == 1);
        CHECK(rs.real_roots[0].value.is_exact());
        CHECK(*rs.real_roots[0].value.exact == 0);
        REQUIRE(rs.complex_pairs.size() == 1);
        CHECK(rs.complex_pairs[0].value.imag() == Catch::Approx(1.0).margin(1e-12));
        CHECK(rs.total_multiplicity() == 3);
    }
    SECTION("perfect square") {
        const QPoly p = qpoly({0, 0, 1});  // y^2
        auto rs = find_roots(p, 2);
        REQUIRE(rs.real_roots.size() == 1);
        CHECK(rs.real_roots[0].multiplicity == 2);
        CHECK(*rs.real_roots[0].value.exact == 0);
    }
    SECTION("1 - y^3 factors as (1 - y)(1 + y + y^2)") {
        const QPoly p = qpoly({1, 0, 0, -1});
        auto rs = find_roots(p, 3);
        REQUIRE(rs.real_roots.size() == 1);
        CHECK(*rs.real_roots[0].value.exact == 1);
        REQUIRE(rs.complex_pairs.size() == 1);
        CHECK(rs.complex_pairs[0].value.real() == Catch::Approx(-0.5).margin(1e-10));
        CHECK(rs.complex_pairs[0].value.imag() ==
              Catch::Approx(std::sqrt(3.0) / 2).margin(1e-10));
    }
}

TEST_CASE("real root isolation") {
    SECTION("3x^2 + 1 has no real roots") {
        CHECK(real_root_isolation(qpoly({1, 0, 3})).empty());
    }
    SECTION("x^3 - x isolates -1, 0, 1") {
        auto iv = real_root_isolation(qpoly({0, -1, 0, 1}));
        REQUIRE(iv.size() == 3);
        const QPoly p = qpoly({0, -1, 0, 1});
        const double expect[3] = {-1.0, 0.0, 1.0};
        for (int k = 0; k < 3; ++k) {
            auto t = refine_root(p, iv[k], Rational(1, 1 << 20));
            CHECK(to_double(t.mid()) == Catch::Approx(expect[k]).margin(1e-5));
        }
    }
    SECTION("y + y^3: one interval around 0") {
        auto iv = real_root_isolation(qpoly({0, 1, 0, 1}));
        REQUIRE(iv.size() == 1);
        CHECK(to_double(iv[0].lo) <= 0.0);
        CHECK(to_double(iv[0].hi) >= 0.0);
    }
}

TEST_CASE("complex roots against known values") {
    SECTION("3z^2 + 1 -> +- i/sqrt(3)") {
        auto rs = complex_roots(qpoly({1, 0, 3}));
        REQUIRE(rs.complex_pairs.size() == 1);
        CHECK(rs.complex_pairs[0].value.real() == Catch::Approx(0.0).margin(1e-12));
        CHECK(rs.complex_pairs[0].value.imag() ==
              Catch::Approx(1.0 / std::sqrt(3.0)).margin(1e-12));
    }
    SECTION("z^2 + 1 -> +- i") {
        auto rs = complex_roots(qpoly({1, 0, 1}));
        REQUIRE(rs.complex_pairs.size() == 1);
        CHECK(std::abs(rs.complex_pairs[0].value - std::complex<double>(0, 1)) < 1e-12);
    }
}

// Independent oracle: companion-matrix eigenvalues.
static std::vector<std::complex<double>> companion_roots(const QPoly& p) {
    const int n = p.degree();
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -to_double(p.coeff(i) / p.leading());
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()[i]);
    return out;
}

TEST_CASE("complex roots cross-checked by the companion-matrix oracle") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> coef(-9, 9);
    const QPoly cube = qpoly({-1, 0, 0, 1});  // z^3 - 1 from the worked example
    std::vector<QPoly> inputs{cube};
    for (int t = 0; t < 12; ++t) {
        std::vector<Rational> c;
        const int deg = 2 + t % 4;
        for (int k = 0; k <= deg; ++k) c.emplace_back(coef(rng));
        if (c.back() == 0) c.back() = 1;
        QPoly p{std::move(c)};
        if (gcd(p, p.derivative()).degree() > 0) continue;  // oracle pairs simple roots
        inputs.push_back(p);
    }
    for (const auto& p : inputs) {
        auto mine = find_roots(p, p.degree());
        auto oracle = companion_roots(p);
        // every root I report must be close to some oracle eigenvalue
        auto close_to_oracle = [&](std::complex<double> z) {
            double best = 1e99;
            for (auto& w : oracle) best = std::min(best, std::abs(z - w));
            return best < 1e-7;
        };
        for (const auto& rr : mine.real_roots)
            CHECK(close_to_oracle({rr.value.approx, 0.0}));
        for (const auto& cp : mine.complex_pairs) {
            CHECK(close_to_oracle(cp.value));
            CHECK(close_to_oracle(std::conj(cp.value)));
        }
    }
}

TEST_CASE("residual bound |p(z)| <= tol (1 + |p|_1) for every reported root") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-20, 20);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> c;
        const int deg = 1 + t % 6;
        for (int k = 0; k <= deg; ++k) c.emplace_back(coef(rng));
        if (c.back() == 0) c.back() = 3;
        const QPoly p{std::move(c)};
        if (p.degree() < 1) continue;
        const auto rs = find_roots(p, p.degree(), 1e-12);
        const double bound = 1e-10 * (1.0 + one_norm(p));  // slack over tol_root
        for (const auto& rr : rs.real_roots) {
            // multiple roots are reported from their squarefree factor; check
            // against that factor's residual via |p| with looser scaling
            if (rr.multiplicity == 1)
                CHECK(std::abs(p.eval(rr.value.approx)) <= bound);
        }
        for (const auto& cp : rs.complex_pairs)
            if (cp.multiplicity == 1)
                CHECK(std::abs(p.eval(cp.value)) <= bound);
    }
}

TEST_CASE("squarefree recombination reproduces the polynomial") {
    // (x-1)^2 (x^2+1) (x+2)^3
    const QPoly f1 = qpoly({-1, 1});
    const QPoly f2 = qpoly({1, 0, 1});
    const QPoly f3 = qpoly({2, 1});
    const QPoly p = f1 * f1 * f2 * f3 * f3 * f3;
    auto fac = squarefree_decomposition(p);
    REQUIRE(fac.size() == 3);
    QPoly rebuilt = QPoly::monomial(0, Rational(1));
    for (size_t i = 0; i < fac.size(); ++i)
        for (size_t k = 0; k <= i; ++k) rebuilt = rebuilt * fac[i];
    CHECK(rebuilt == p.monic());
    int total = 0;
    for (size_t i = 0; i < fac.size(); ++i) total += (int(i) + 1) * fac[i].degree();
    CHECK(total == p.degree());
}

TEST_CASE("rational root detection") {
    const QPoly p = qpoly({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
    auto ivs = real_root_isolation(p);
    REQUIRE(ivs.size() == 3);
    std::vector<Rational> found;
    for (auto& iv : ivs) {
        auto q = rational_root_in(p, iv);
        REQUIRE(q.has_value());
        found.push_back(*q);
    }
    CHECK(found == std::vector<Rational>{1, 2, 3});
}
