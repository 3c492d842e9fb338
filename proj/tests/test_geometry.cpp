#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_helpers.hpp"
#include "thinshell/geometry.hpp"

using namespace thinshell;
using thinshell::testing::loglog_slope;

namespace {

InterfaceSpec ellipse_spec(double a = 2.0, double b = 1.0) {
    std::vector<FourierPair> coeffs(2);
    coeffs[1].ax = a;
    coeffs[1].by = b;
    return InterfaceSpec::plane_curve(std::move(coeffs));
}

// Closed-form ellipse curvature magnitude ab/(a² sin²θ + b² cos²θ)^{3/2}.
double ellipse_kappa(double a, double b, double theta) {
    const double s = std::sin(theta), c = std::cos(theta);
    return a * b / std::pow(a * a * s * s + b * b * c * c, 1.5);
}

}  // namespace

TEST_CASE("sphere metric sample") {
    const auto spec = InterfaceSpec::sphere(3, 2.0);
    Eigen::VectorXd xi(2);
    xi << 0.7, 1.3;
    const MetricSample m = metric_at(spec, xi);

    CHECK(m.H == doctest::Approx(-1.0).epsilon(1e-14));  // -(n-1)/r = -2/2
    // b = -(1/r) g0
    CHECK((m.b + m.g0 / 2.0).norm() == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(m.sqrt_G0 == doctest::Approx(std::sqrt(m.g0.determinant())).epsilon(1e-12));
    // G_tilde assembled = 2 g0^{-1} b g0^{-1}
    const Eigen::MatrixXd gt = 2.0 * m.g0_inv * m.b * m.g0_inv;
    CHECK((m.G_tilde - gt).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("sphere specialization G_tilde - H g0^{-1} = ((n-3)/r) g0^{-1}") {
    for (int n : {2, 3, 4, 5}) {
        const double r = (n == 4) ? 0.5 : 1.7;
        const auto spec = InterfaceSpec::sphere(n, r);
        Eigen::VectorXd xi = Eigen::VectorXd::LinSpaced(n - 1, 0.6, 1.9);
        const MetricSample m = metric_at(spec, xi);
        const Eigen::MatrixXd lhs = m.G_tilde - m.H * m.g0_inv;
        const Eigen::MatrixXd rhs = ((n - 3) / r) * m.g0_inv;
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-12 * m.g0_inv.norm());
    }
}

TEST_CASE("unit circle metric") {
    const auto spec = InterfaceSpec::unit_circle_curve();
    for (double theta : {0.0, 0.4, 2.2, 5.9}) {
        const MetricSample m = metric_at(spec, theta);
        CHECK(m.g0(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(m.H == doctest::Approx(-1.0).epsilon(1e-13));
        CHECK(m.b(0, 0) == doctest::Approx(-1.0).epsilon(1e-13));
    }
}

TEST_CASE("ellipse curvature at theta=0 and closed form everywhere") {
    const auto spec = ellipse_spec();
    const MetricSample m0 = metric_at(spec, 0.0);
    CHECK(m0.g0(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    // |H| = a/b² = 2 at the tip; sign is negative for the outward normal.
    CHECK(m0.H == doctest::Approx(-2.0).epsilon(1e-13));
    for (double theta : {0.3, 1.0, 2.5, 4.0}) {
        const MetricSample m = metric_at(spec, theta);
        CHECK(std::abs(m.H) == doctest::Approx(ellipse_kappa(2, 1, theta)).epsilon(1e-12));
        CHECK(m.H < 0.0);
    }
}

TEST_CASE("second fundamental form matches finite differences of the normal") {
    // b_ij = -(d_i x, d_j nu), central differences on the embedding and normal.
    const double h = 1e-5;
    SUBCASE("ellipse") {
        const auto spec = ellipse_spec();
        for (double theta : {0.0, 0.7, 1.9, 3.3}) {
            auto x = [&](double t) { return embed_point(spec, Eigen::VectorXd::Constant(1, t)); };
            auto nu = [&](double t) { return outward_normal(spec, Eigen::VectorXd::Constant(1, t)); };
            const Eigen::VectorXd dx = (x(theta + h) - x(theta - h)) / (2 * h);
            const Eigen::VectorXd dnu = (nu(theta + h) - nu(theta - h)) / (2 * h);
            const double b_fd = -dx.dot(dnu);
            const MetricSample m = metric_at(spec, theta);
            CHECK(m.b(0, 0) == doctest::Approx(b_fd).epsilon(1e-6));
        }
    }
    SUBCASE("sphere n=3") {
        const auto spec = InterfaceSpec::sphere(3, 1.3);
        Eigen::VectorXd xi(2);
        xi << 1.1, 0.8;
        const MetricSample m = metric_at(spec, xi);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                Eigen::VectorXd ei = Eigen::VectorXd::Zero(2), ej = Eigen::VectorXd::Zero(2);
                ei[i] = h;
                ej[j] = h;
                const Eigen::VectorXd dx =
                    (embed_point(spec, xi + ei) - embed_point(spec, xi - ei)) / (2 * h);
                const Eigen::VectorXd dnu =
                    (outward_normal(spec, xi + ej) - outward_normal(spec, xi - ej)) / (2 * h);
                CHECK(m.b(i, j) == doctest::Approx(-dx.dot(dnu)).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("reach") {
    CHECK(reach(InterfaceSpec::sphere(2, 1.0)) == doctest::Approx(1.0));
    CHECK(reach(InterfaceSpec::sphere(4, 0.5)) == doctest::Approx(0.5));
    // min radius of curvature of the 2:1 ellipse is b²/a = 1/2 at the tips.
    CHECK(reach(ellipse_spec()) == doctest::Approx(0.45).epsilon(1e-6));
}

TEST_CASE("collar metric on the unit circle is the annulus Jacobian") {
    const CollarMetric collar(InterfaceSpec::unit_circle_curve());
    const auto at0 = collar.evaluate(0.3, 0.0);
    CHECK(at0.g_inv(0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(at0.sqrt_G == doctest::Approx(1.0).epsilon(1e-14));
    const auto at01 = collar.evaluate(1.2, 0.1);
    CHECK(std::abs(at01.sqrt_G - 1.1) <= 1e-12);
    const auto neg = collar.evaluate(4.0, -0.25);
    CHECK(std::abs(neg.sqrt_G - 0.75) <= 1e-12);
    CHECK_THROWS_AS(collar.evaluate(0.0, 1.0), GeometryError);
}

TEST_CASE("collar |sqrt_G - sqrt_G0 (1 - tH)| / t^2 bounded on the circle") {
    const CollarMetric collar(InterfaceSpec::unit_circle_curve());
    const MetricSample m = metric_at(collar.spec(), 0.9);
    for (double t : {1e-2, 1e-3, 1e-4}) {
        const auto ev = collar.evaluate(0.9, t);
        const double resid = std::abs(ev.sqrt_G - m.sqrt_G0 * (1.0 - t * m.H));
        CHECK(resid / (t * t) <= 1.0);  // exactly linear for plane curves
    }
}

TEST_CASE("collar expansion orders") {
    // |sqrt_G - sqrt_G0(1-tH)| and |g^{-1} - (g0^{-1} + t G_tilde)| are O(t²):
    // log-log slope >= 1.9 (or identically zero, plane curves / n=2 spheres).
    struct Probe {
        InterfaceSpec spec;
        Eigen::VectorXd xi;
    };
    std::vector<Probe> probes;
    probes.push_back({InterfaceSpec::sphere(3, 1.0), Eigen::VectorXd::Constant(2, 1.0)});
    probes.push_back({InterfaceSpec::sphere(4, 0.8), Eigen::VectorXd::Constant(3, 1.2)});
    probes.push_back({InterfaceSpec::sphere(2, 1.5), Eigen::VectorXd::Constant(1, 0.4)});
    probes.push_back({ellipse_spec(), Eigen::VectorXd::Constant(1, 0.8)});

    for (const auto& probe : probes) {
        const CollarMetric collar(probe.spec);
        const MetricSample m = metric_at(probe.spec, probe.xi);
        std::vector<double> ts, jac_res, inv_res;
        for (double t = 1e-2; t >= 0.9e-4; t /= 2.0) {
            const auto ev = collar.evaluate(probe.xi, t);
            ts.push_back(t);
            jac_res.push_back(std::abs(ev.sqrt_G - m.sqrt_G0 * (1.0 - t * m.H)));
            inv_res.push_back((ev.g_inv - (m.g0_inv + t * m.G_tilde)).cwiseAbs().maxCoeff());
        }
        CHECK(loglog_slope(ts, jac_res) >= 1.9);
        CHECK(loglog_slope(ts, inv_res) >= 1.9);
    }
}

TEST_CASE("degenerate parameterization is diagnosed") {
    // x(θ) = (cos 2θ, sin 2θ)-style trace has |x'|>0; instead collapse x to a point.
    std::vector<FourierPair> coeffs(2);
    coeffs[0].ax = 1.0;  // constant map: |x'| = 0 everywhere
    coeffs[1].ax = 0.0;
    CHECK_THROWS_AS(InterfaceSpec::plane_curve(std::move(coeffs)), GeometryError);
}

TEST_CASE("invalid sphere parameters") {
    CHECK_THROWS_AS(InterfaceSpec::sphere(1, 1.0), GeometryError);
    CHECK_THROWS_AS(InterfaceSpec::sphere(3, 0.0), GeometryError);
}
