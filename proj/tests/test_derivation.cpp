#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace schubert;

namespace {

std::vector<SpecPtr> small_specs(int n) {
    return {ModuleSpec::classical(n), ModuleSpec::quantum(n), ModuleSpec::generic(n)};
}

/// P(I,h) from its defining predicate, by filtering all compositions.
std::vector<std::vector<int>> filtered_shifts(const IndexTuple& I, int h) {
    std::vector<std::vector<int>> out;
    for (const auto& H : oracles::all_compositions(h, static_cast<int>(I.length()))) {
        bool ok = true;
        for (std::size_t j = 0; j + 1 < I.length() && ok; ++j)
            ok = I[j] + H[j] < I[j + 1];
        if (ok) out.push_back(H);
    }
    return out;
}

}  // namespace

TEST_CASE("leibniz expansion reproduces the worked examples") {
    SpecPtr fr = ModuleSpec::free_truncated(9, RingDecl::make({}));
    CHECK(leibniz_expand(2, IndexTuple({1, 2}), fr) ==
          MultiVector::basis(fr, IndexTuple({1, 4})));
    CHECK(leibniz_expand(1, IndexTuple({1, 2}), fr) ==
          MultiVector::basis(fr, IndexTuple({1, 3})));
    CHECK(leibniz_expand(0, IndexTuple({2, 5}), fr) ==
          MultiVector::basis(fr, IndexTuple({2, 5})));
    CHECK(leibniz_expand(2, IndexTuple({1, 3}), fr).str() == "e(1,5) + e(2,4)");
    CHECK_THROWS_AS(leibniz_expand(-1, IndexTuple({1}), fr), std::invalid_argument);
    CHECK_THROWS_AS(leibniz_expand(9, IndexTuple({1}), fr), truncation_error);
}

TEST_CASE("pieri shift sets match the defining predicate") {
    auto shifts = pieri_shifts(IndexTuple({1, 3}), 2);
    CHECK(shifts == std::vector<std::vector<int>>{{0, 2}, {1, 1}});
    std::mt19937 g(41);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<int> kd(1, 3), hd(0, 5);
        int k = kd(g);
        IndexTuple I = oracles::random_tuple(g, k, 8);
        int h = hd(g);
        auto got = pieri_shifts(I, h);
        auto want = filtered_shifts(I, h);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
    }
}

TEST_CASE("pieri equals leibniz on every tested input") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& spec : small_specs(n))
            for (int k = 1; k <= std::min(n, 2); ++k)
                for (const IndexTuple& I : oracles::all_tuples(k, n))
                    for (int h = 0; h <= 4; ++h)
                        CHECK(pieri_expand(h, I, spec) == leibniz_expand(h, I, spec));
}

TEST_CASE("derivations of different orders commute") {
    SpecPtr spec = ModuleSpec::generic(5);
    std::mt19937 g(43);
    for (int trial = 0; trial < 15; ++trial) {
        MultiVector v = oracles::random_vector(g, spec, 2, 2);
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 4; ++j)
                CHECK(apply_D(i, apply_D(j, v)) == apply_D(j, apply_D(i, v)));
    }
}

TEST_CASE("the order-h leibniz rule holds on wedge products") {
    SpecPtr spec = ModuleSpec::quantum(6);
    std::mt19937 g(47);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> ad(1, 3), hd(0, 4);
        int a = ad(g);
        int b = std::min(ad(g), 5 - a);
        if (b < 1) b = 1;
        MultiVector alpha = oracles::random_vector(g, spec, a, 2);
        MultiVector beta = oracles::random_vector(g, spec, b, 2);
        int h = hd(g);
        MultiVector lhs = apply_D(h, wedge(alpha, beta));
        MultiVector rhs(spec, a + b);
        for (int i = 0; i <= h; ++i) rhs += wedge(apply_D(i, alpha), apply_D(h - i, beta));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("inverse coefficients satisfy the defining convolution") {
    SpecPtr spec = ModuleSpec::quantum(5);
    std::mt19937 g(53);
    for (int trial = 0; trial < 10; ++trial) {
        MultiVector v = oracles::random_vector(g, spec, 2, 2);
        for (int h = 1; h <= 6; ++h) {
            MultiVector sum(spec, 2);
            for (int i = 0; i <= h; ++i) {
                MultiVector t = apply_Dbar(i, apply_D(h - i, v));
                if (i % 2 == 0)
                    sum += t;
                else
                    sum -= t;
            }
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("dbar examples and vanishing above the exterior degree") {
    SpecPtr spec = ModuleSpec::classical(6);
    MultiVector e1 = MultiVector::basis(spec, IndexTuple({1}));
    CHECK(apply_Dbar(1, e1) == MultiVector::basis(spec, IndexTuple({2})));
    CHECK(apply_Dbar(2, e1).is_zero());
    CHECK(apply_Dbar(0, e1) == e1);

    std::mt19937 g(59);
    for (int k = 1; k <= 3; ++k)
        for (int h = k + 1; h <= k + 3; ++h)
            for (int trial = 0; trial < 8; ++trial) {
                MultiVector v = oracles::random_vector(g, spec, k, 2);
                CHECK(apply_Dbar(h, v).is_zero());
            }
}

TEST_CASE("dbar operator polynomials match the recursion") {
    CHECK(dbar_operator_poly(1).str() == "T1");
    CHECK(dbar_operator_poly(2).str() == "T1^2 - T2");
    CHECK(dbar_operator_poly(3).str() == "T1^3 - 2*T1*T2 + T3");
    CHECK(dbar_operator_poly(0).is_one());

    SpecPtr spec = ModuleSpec::quantum(5);
    std::mt19937 g(61);
    for (int h = 1; h <= 4; ++h)
        for (int trial = 0; trial < 6; ++trial) {
            MultiVector v = oracles::random_vector(g, spec, 2, 2);
            CoeffPoly dbar = dbar_operator_poly(h);
            CHECK(apply_operator_poly(dbar, h, v) == apply_Dbar(h, v));
        }
}

TEST_CASE("integration by parts") {
    SpecPtr spec = ModuleSpec::generic(5);
    std::mt19937 g(67);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> ad(1, 2), hd(0, 3);
        int a = ad(g);
        int b = ad(g);
        MultiVector alpha = oracles::random_vector(g, spec, a, 2);
        MultiVector beta = oracles::random_vector(g, spec, b, 2);
        int h = hd(g);
        MultiVector lhs = wedge(apply_D(h, alpha), beta);
        MultiVector rhs(spec, a + b);
        for (int i = 0; i <= h; ++i) {
            MultiVector t = apply_D(h - i, wedge(alpha, apply_Dbar(i, beta)));
            if (i % 2 == 0)
                rhs += t;
            else
                rhs -= t;
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("operator polynomial evaluation is checked and linear") {
    SpecPtr spec = ModuleSpec::quantum(4);
    RingPtr ring = make_operator_ring(2, "T", spec->ring());
    MultiVector v = MultiVector::basis(spec, IndexTuple({1, 2}));
    CHECK(apply_operator_poly(poly_parse("T1^2 - T2", ring), 2, v).str() == "e(2,3)");
    CHECK(apply_operator_poly(poly_parse("q*T1", ring), 2, v) ==
          apply_D(1, v).scaled(CoeffPoly::generator(spec->ring(), "q")));
    CHECK(apply_operator_poly(CoeffPoly::zero(ring), 2, v).is_zero());

    RingPtr foreign = make_operator_ring(2, "T", RingDecl::make({{"z", 1}}));
    CHECK_THROWS_AS(apply_operator_poly(poly_parse("z*T1", foreign), 2, v),
                    std::invalid_argument);
    RingPtr bad = RingDecl::make({{"T1", 2}});
    CHECK_THROWS_AS(apply_operator_poly(CoeffPoly::constant(bad, 1), 1, v),
                    std::invalid_argument);
}

TEST_CASE("giambelli evaluation returns the wedge basis monomial") {
    SpecPtr fr = ModuleSpec::free_truncated(14, RingDecl::make({}));
    CHECK(giambelli_vector(IndexTuple({1, 2, 3}), fr) ==
          MultiVector::basis(fr, IndexTuple({1, 2, 3})));
    CHECK(giambelli_vector(IndexTuple({1, 3}), fr) == MultiVector::basis(fr, IndexTuple({1, 3})));
    CHECK(giambelli_vector(IndexTuple({2, 3}), fr) == MultiVector::basis(fr, IndexTuple({2, 3})));
    for (int k = 1; k <= 2; ++k)
        for (const IndexTuple& I : oracles::all_tuples(k, 6))
            CHECK(giambelli_vector(I, fr) == MultiVector::basis(fr, I));
    CHECK_THROWS_AS(giambelli_vector(IndexTuple({1, 15}), fr), std::invalid_argument);
}
