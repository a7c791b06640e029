#include <gtest/gtest.h>

#include <random>

#include "colibri/fuzzyset.hpp"
#include "oracles.hpp"

using namespace colibri;

namespace {

// Knots recovered from the published crossings (see test_partition.cpp).
const CircularTrapezoid kYellow(34, 46, 46, 65);
const CircularTrapezoid kGreen(46, 65, 128, 175);
const CircularTrapezoid kRed(330, 351, 5, 20);
const CircularTrapezoid kBlue(186, 213, 240, 270);

CircularTrapezoid random_trapezoid(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> start(0.0, 360.0);
    std::uniform_real_distribution<double> shoulder(1.0, 80.0);
    std::uniform_real_distribution<double> plateau(0.0, 150.0);
    std::uniform_int_distribution<int> coin(0, 3);
    return CircularTrapezoid::from_spacings(Hue(start(rng)), shoulder(rng),
                                            coin(rng) == 0 ? 0.0 : plateau(rng), shoulder(rng));
}

}  // namespace

TEST(CircularTrapezoid, EvalYellowTriangle) {
    EXPECT_EQ(eval(kYellow, Hue(46)), 1.0);
    EXPECT_EQ(eval(kYellow, Hue(55.5)), 0.5);
    EXPECT_EQ(eval(kYellow, Hue(40.0)), 0.5);
    EXPECT_EQ(eval(kYellow, Hue(200)), 0.0);
    EXPECT_TRUE(kYellow.is_triangle());
}

TEST(CircularTrapezoid, SupportEndpointsAreZero) {
    EXPECT_EQ(kGreen.eval(Hue(46)), 0.0);
    EXPECT_EQ(kGreen.eval(Hue(175)), 0.0);
    EXPECT_EQ(kRed.eval(Hue(330)), 0.0);
    EXPECT_EQ(kRed.eval(Hue(20)), 0.0);
    EXPECT_EQ(kRed.eval(Hue(0)), 1.0);
    EXPECT_GT(kRed.eval(Hue(359.999)), 0.0);
}

TEST(CircularTrapezoid, AlphaCutsAtHalf) {
    EXPECT_EQ(alpha_cut(kYellow, 0.5), Arc(40.0, 55.5));
    EXPECT_EQ(alpha_cut(kGreen, 0.5), Arc(55.5, 151.5));
    EXPECT_EQ(alpha_cut(kRed, 0.5), Arc(340.5, 12.5));
    EXPECT_EQ(alpha_cut(kGreen, 1.0), core(kGreen));
    EXPECT_EQ(alpha_cut(kYellow, 1.0), core(kYellow));
}

TEST(CircularTrapezoid, AlphaOutsideRangeThrows) {
    EXPECT_THROW(alpha_cut(kGreen, 0.0), DomainError);
    EXPECT_THROW(alpha_cut(kGreen, 1.5), DomainError);
    EXPECT_THROW(alpha_cut(kGreen, -0.1), DomainError);
}

TEST(CircularTrapezoid, SupportAndCoreMatchGridScan) {
    EXPECT_EQ(support(kYellow), Arc(34, 65));
    EXPECT_EQ(support(kRed), Arc(330, 20));
    EXPECT_EQ(support(kGreen), Arc(46, 175));
    EXPECT_EQ(core(kGreen), Arc(65, 128));
    EXPECT_EQ(core(kYellow), Arc(46, 46));
    EXPECT_DOUBLE_EQ(core(kYellow).measure(), 0.0);
    EXPECT_EQ(core(kBlue), Arc(213, 240));

    // Open support on a 0.001 grid: first/last positive sample sit one cell
    // inside the knots.
    auto scan = [](const CircularTrapezoid& t) {
        return oracle::scan_run(
            [&](double h) {
                const auto& s = support(t);
                return oracle::trapezoid(s.start().degrees(), t.b().degrees(), t.c().degrees(),
                                         s.end().degrees(), h) > 0.0;
            },
            0.001);
    };
    for (const auto* t : {&kYellow, &kRed, &kGreen}) {
        const auto run = scan(*t);
        EXPECT_NEAR(run.start, t->a().degrees() + 0.001, 1e-6);
        EXPECT_NEAR(run.end, t->d().degrees() - 0.001, 1e-6);
    }
    const auto green_core = oracle::scan_run(
        [](double h) { return oracle::trapezoid(46, 65, 128, 175, h) >= 1.0 - 1e-12; }, 0.001);
    EXPECT_NEAR(green_core.start, 65.0, 1e-6);
    EXPECT_NEAR(green_core.end, 128.0, 1e-6);
}

TEST(CircularTrapezoid, RejectsInvalidKnots) {
    EXPECT_THROW(CircularTrapezoid(10, 10, 20, 30), DomainError);   // vertical rise
    EXPECT_THROW(CircularTrapezoid(10, 20, 30, 30), DomainError);   // vertical fall
    EXPECT_THROW(CircularTrapezoid::from_spacings(Hue(0), 100, 100, 160), DomainError);
    EXPECT_THROW(CircularTrapezoid::from_spacings(Hue(0), 10, -1, 10), DomainError);
}

TEST(CircularTrapezoidProperties, AgreesWithOracleFormula) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> deg(0.0, 360.0);
    for (int i = 0; i < 500; ++i) {
        const auto t = random_trapezoid(rng);
        for (int k = 0; k < 200; ++k) {
            const double h = deg(rng);
            ASSERT_NEAR(t.eval(Hue(h)),
                        oracle::trapezoid(t.a().degrees(), t.b().degrees(), t.c().degrees(),
                                          t.d().degrees(), h),
                        1e-12);
        }
    }
}

TEST(CircularTrapezoidProperties, AlphaCutsAreNested) {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> unit(1e-6, 1.0);
    std::uniform_real_distribution<double> deg(0.0, 360.0);
    for (int i = 0; i < 2000; ++i) {
        const auto t = random_trapezoid(rng);
        double lo = unit(rng), hi = unit(rng);
        if (lo > hi) std::swap(lo, hi);
        const Arc outer = t.alpha_cut(lo);
        const Arc inner = t.alpha_cut(hi);
        ASSERT_LE(inner.measure(), outer.measure() + 1e-9);
        ASSERT_TRUE(outer.contains(inner.start()));
        ASSERT_TRUE(outer.contains(inner.end()));
        for (int k = 0; k < 50; ++k) {
            const Hue h(deg(rng));
            if (inner.contains(h)) {
                ASSERT_TRUE(outer.contains(h));
            }
        }
    }
}

TEST(CircularTrapezoidProperties, CutMeasureFormula) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unit(0.01, 1.0);
    for (int i = 0; i < 200; ++i) {
        const auto t = random_trapezoid(rng);
        const double alpha = unit(rng);
        const double formula =
            t.core_width() + (1.0 - alpha) * (t.rise_width() + t.fall_width());
        const double m = t.alpha_cut(alpha).measure();
        ASSERT_NEAR(m, formula, 1e-9);
        const double grid =
            oracle::grid_measure([&](double h) { return t.eval(Hue(h)) >= alpha; }, 0.01);
        ASSERT_NEAR(grid, formula, 0.02);
    }
}

TEST(CircularTrapezoidProperties, ShouldersAreLinear) {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const auto t = random_trapezoid(rng);
        const double u = unit(rng);
        const double rise_x = t.a().degrees() + u * t.rise_width();
        if (u == 0.0) continue;
        const double fall_x = t.c().degrees() + u * t.fall_width();
        ASSERT_NEAR(t.eval(Hue(rise_x)), u, 1e-12);
        ASSERT_NEAR(t.eval(Hue(fall_x)), 1.0 - u, 1e-12);
    }
}

TEST(CircularTrapezoidProperties, RotationEquivariance) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> deg(0.0, 360.0);
    std::uniform_real_distribution<double> shift(-720.0, 720.0);
    for (int i = 0; i < 500; ++i) {
        const auto t = random_trapezoid(rng);
        const double delta = shift(rng);
        const auto r = t.rotated(delta);
        for (int k = 0; k < 50; ++k) {
            const double h = deg(rng);
            ASSERT_NEAR(r.eval(Hue(h + delta)), t.eval(Hue(h)), 1e-12);
        }
    }
}
