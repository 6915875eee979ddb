#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "polybohr/extremal.hpp"
#include "polybohr/series.hpp"
#include "polybohr/verify.hpp"

using namespace polybohr;

namespace {

TruncatedSeries binomial_cube() {
    // (z1 + z2)^3
    TruncatedSeries f(2, 3, TailBound::exact());
    f.set(MultiIndex({3, 0}), 1.0);
    f.set(MultiIndex({2, 1}), 3.0);
    f.set(MultiIndex({1, 2}), 3.0);
    f.set(MultiIndex({0, 3}), 1.0);
    return f;
}

TruncatedSeries test_poly(int n, int K, std::uint64_t seed) {
    Rng rng(seed);
    TruncatedSeries f(n, K, TailBound::exact());
    for (int k = 0; k <= K; ++k)
        for (const auto& alpha : enumerate_degree(n, k))
            f.set(alpha, Complex{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    return f;
}

} // namespace

TEST_CASE("homogeneous parts") {
    TruncatedSeries c(3, 2, TailBound::exact());
    c.set(MultiIndex({0, 0, 0}), Complex{2.5, -1.0});
    const auto part = c.homogeneous_part(0);
    REQUIRE(part.size() == 1);
    CHECK(part[0].second == Complex{2.5, -1.0});
    CHECK(c.homogeneous_part(1).empty());

    const auto cube = binomial_cube().homogeneous_part(3);
    REQUIRE(cube.size() == 4);
    CHECK(cube[0].second.real() == 1.0);
    CHECK(cube[1].second.real() == 3.0);
    CHECK(cube[2].second.real() == 3.0);
    CHECK(cube[3].second.real() == 1.0);

    CHECK_THROWS_AS(c.homogeneous_part(3), std::out_of_range);
}

TEST_CASE("eval basics") {
    TruncatedSeries one(2, 0, TailBound::exact());
    one.set(MultiIndex({0, 0}), Complex{1.0, 0.0});
    const auto e = one.eval(std::vector<Complex>{{0.3, 0.1}, {-0.2, 0.0}});
    CHECK(e.value == Complex{1.0, 0.0});
    CHECK(e.remainder < 1e-14);

    TruncatedSeries mono(2, 3); // no tail certificate
    mono.set(MultiIndex({2, 1}), Complex{1.0, 0.0});
    const auto m = mono.eval(std::vector<Complex>{{2.0, 0.0}, {3.0, 0.0}});
    CHECK(m.value.real() == doctest::Approx(12.0));
    CHECK(std::isinf(m.remainder));

    CHECK_THROWS_AS(mono.eval(std::vector<Complex>{{1.0, 0.0}}), std::invalid_argument);
}

TEST_CASE("eval is linear") {
    const auto f = test_poly(2, 5, 11);
    const auto g = test_poly(2, 5, 12);
    TruncatedSeries sum(2, 5, TailBound::exact());
    for (int k = 0; k <= 5; ++k)
        for (const auto& alpha : enumerate_degree(2, k))
            sum.set(alpha, f.coefficient(alpha) + g.coefficient(alpha));
    const std::vector<Complex> z{{0.31, -0.12}, {-0.44, 0.25}};
    const Complex lhs = sum.eval(z).value;
    const Complex rhs = f.eval(z).value + g.eval(z).value;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
}

TEST_CASE("radial derivative scales each degree") {
    TruncatedSeries c(2, 2, TailBound::exact());
    c.set(MultiIndex({0, 0}), Complex{4.0, 0.0});
    CHECK(c.radial_derivative().coefficients().empty());

    TruncatedSeries mono(2, 3);
    mono.set(MultiIndex({2, 1}), Complex{1.0, 0.0});
    CHECK(mono.radial_derivative().coefficient(MultiIndex({2, 1})).real() == 3.0);

    const auto f = test_poly(3, 6, 21);
    const auto df = f.radial_derivative();
    for (const auto& [alpha, v] : f.coefficients()) {
        const Complex expect = v * static_cast<double>(alpha.degree());
        CHECK(std::abs(df.coefficient(alpha) - expect) == 0.0);
    }
    CHECK(df.tail().kind == TailKind::none);
}

TEST_CASE("partial derivatives") {
    const auto f = test_poly(2, 5, 31);
    const auto same = f.partial_derivative(MultiIndex({0, 0}));
    for (const auto& [alpha, v] : f.coefficients())
        CHECK(same.coefficient(alpha) == v);

    TruncatedSeries mono(2, 3, TailBound::exact());
    mono.set(MultiIndex({2, 1}), Complex{1.0, 0.0});
    const auto d = mono.partial_derivative(MultiIndex({1, 1}));
    CHECK(d.truncation_degree() == 1);
    CHECK(d.coefficient(MultiIndex({1, 0})).real() == 2.0);

    CHECK_THROWS_AS(mono.partial_derivative(MultiIndex({3, 1})), std::out_of_range);
}

TEST_CASE("derivative_at equals the materialized derivative") {
    const auto f = test_poly(3, 6, 41);
    const std::vector<Complex> z{{0.2, 0.1}, {-0.3, 0.05}, {0.1, -0.25}};
    for (const auto& beta : {MultiIndex({1, 0, 0}), MultiIndex({1, 1, 0}), MultiIndex({2, 0, 1})}) {
        const Complex a = f.derivative_at(beta, z);
        const Complex b = f.partial_derivative(beta).eval(z).value;
        CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
    }
}

TEST_CASE("finite differences confirm the first partials") {
    const auto f = test_poly(2, 6, 51);
    const std::vector<Complex> z{{0.31, 0.0}, {-0.22, 0.0}};
    for (int j = 0; j < 2; ++j) {
        std::vector<int> e(2, 0);
        e[static_cast<std::size_t>(j)] = 1;
        const auto dfj = f.partial_derivative(MultiIndex(e));
        double err[2];
        int idx = 0;
        for (double h : {1e-3, 1e-4}) {
            auto zp = z, zm = z;
            zp[static_cast<std::size_t>(j)] += h;
            zm[static_cast<std::size_t>(j)] -= h;
            const Complex central = (f.eval(zp).value - f.eval(zm).value) / (2.0 * h);
            err[idx++] = std::abs(central - dfj.eval(z).value);
        }
        CHECK(err[0] < 1e-4);           // O(h^2) at h = 1e-3
        CHECK(err[1] < err[0] / 25.0);  // quadratic decay
    }
}

TEST_CASE("operations commute with coordinate permutations") {
    // symmetrized polynomial: invariant under swapping the two variables
    auto f = test_poly(2, 5, 61);
    TruncatedSeries sym(2, 5, TailBound::exact());
    for (const auto& [alpha, v] : f.coefficients()) {
        const MultiIndex swapped({alpha[1], alpha[0]});
        sym.set(alpha, v + f.coefficient(swapped));
    }
    const std::vector<Complex> z{{0.17, 0.21}, {-0.33, 0.08}};
    const std::vector<Complex> zs{z[1], z[0]};
    CHECK(std::abs(sym.eval(z).value - sym.eval(zs).value) < 1e-13);
    CHECK(std::abs(sym.radial_derivative().eval(z).value -
                   sym.radial_derivative().eval(zs).value) < 1e-13);
    CHECK(std::abs(sym.partial_derivative(MultiIndex({1, 0})).eval(z).value -
                   sym.partial_derivative(MultiIndex({0, 1})).eval(zs).value) < 1e-13);
}

TEST_CASE("geometric tail remainders") {
    const TailBound tb = TailBound::geometric(2.0, 0.5);
    // sum_{k>=4} 2 (0.5 * 0.6)^k
    CHECK(tb.majorant_tail(4, 0.6) == doctest::Approx(2.0 * std::pow(0.3, 4) / 0.7));
    CHECK(tb.squared_tail(4, 0.6) == doctest::Approx(4.0 * std::pow(0.09, 4) / 0.91));
    // sum_{k>=4} k q^k = q^4 (4 - 3q)/(1-q)^2
    CHECK(tb.radial_derivative_tail(4, 0.6) ==
          doctest::Approx(2.0 * std::pow(0.3, 4) * (4.0 - 3.0 * 0.3) / (0.7 * 0.7)));
    CHECK(std::isinf(TailBound::none().majorant_tail(1, 0.5)));
    CHECK(TailBound::exact().majorant_tail(1, 0.99) == 0.0);
}

TEST_CASE("radius rescaling") {
    const auto w = ExtremalFunction(0.5, Form::minus, 2);
    const auto f = to_series(w, 10);
    const auto g = f.scaled_radius(0.5);
    for (const auto& [alpha, v] : f.coefficients())
        CHECK(g.coefficient(alpha).real() ==
              doctest::Approx(v.real() * std::pow(0.5, alpha.degree())));
    CHECK(g.tail().base == doctest::Approx(f.tail().base * 0.5));
}

TEST_CASE("dump format: header, enumeration order, quoting") {
    std::ostringstream os;
    to_series(ExtremalFunction(0.0, Form::minus, 2), 1).dump(os);
    CHECK(os.str() == "alpha,re,im\n\"1,0\",-1,0\n\"0,1\",-1,0\n");

    std::ostringstream one;
    to_series(ExtremalFunction(0.5, Form::minus, 1), 2).dump(one);
    CHECK(one.str() == "alpha,re,im\n0,0.5,0\n1,-0.75,0\n2,-0.375,0\n");
}
