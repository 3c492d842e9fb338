#include "thinshell/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace thinshell {

namespace {

constexpr double kDegenerateSpeed = 1e-10;

[[noreturn]] void throw_degenerate(double theta, double speed) {
    std::ostringstream os;
    os << "degenerate curve parameterization: |x'(" << theta << ")| = " << speed
       << " < " << kDegenerateSpeed;
    throw GeometryError(os.str());
}

}  // namespace

Eigen::Vector2d PlaneCurveSpec::point(double theta) const {
    Eigen::Vector2d p = Eigen::Vector2d::Zero();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const double c = std::cos(j * theta), s = std::sin(j * theta);
        p.x() += coeffs[j].ax * c + coeffs[j].bx * s;
        p.y() += coeffs[j].ay * c + coeffs[j].by * s;
    }
    return p;
}

Eigen::Vector2d PlaneCurveSpec::d1(double theta) const {
    Eigen::Vector2d p = Eigen::Vector2d::Zero();
    for (std::size_t j = 1; j < coeffs.size(); ++j) {
        const double c = std::cos(j * theta), s = std::sin(j * theta);
        p.x() += j * (-coeffs[j].ax * s + coeffs[j].bx * c);
        p.y() += j * (-coeffs[j].ay * s + coeffs[j].by * c);
    }
    return p;
}

Eigen::Vector2d PlaneCurveSpec::d2(double theta) const {
    Eigen::Vector2d p = Eigen::Vector2d::Zero();
    for (std::size_t j = 1; j < coeffs.size(); ++j) {
        const double c = std::cos(j * theta), s = std::sin(j * theta);
        p.x() -= double(j) * j * (coeffs[j].ax * c + coeffs[j].bx * s);
        p.y() -= double(j) * j * (coeffs[j].ay * c + coeffs[j].by * s);
    }
    return p;
}

Eigen::Vector2d PlaneCurveSpec::normal(double theta) const {
    const Eigen::Vector2d t = d1(theta);
    const double speed = t.norm();
    if (speed < kDegenerateSpeed) throw_degenerate(theta, speed);
    // For a counterclockwise curve (D on the left) the outward normal is the
    // tangent rotated by -90°: (y', -x')/|x'|.
    return orientation * Eigen::Vector2d(t.y(), -t.x()) / speed;
}

Eigen::Vector2d PlaneCurveSpec::normal_d1(double theta) const {
    const Eigen::Vector2d t = d1(theta);
    const Eigen::Vector2d a = d2(theta);
    const double speed = t.norm();
    if (speed < kDegenerateSpeed) throw_degenerate(theta, speed);
    const double dspeed = t.dot(a) / speed;
    const Eigen::Vector2d rot_t(t.y(), -t.x());
    const Eigen::Vector2d rot_a(a.y(), -a.x());
    return orientation * (rot_a / speed - rot_t * (dspeed / (speed * speed)));
}

InterfaceSpec InterfaceSpec::sphere(int dim_n, double radius) {
    if (dim_n < 2) throw GeometryError("sphere requires dim_n >= 2");
    if (!(radius > 0.0)) throw GeometryError("sphere requires radius > 0");
    InterfaceSpec s;
    s.kind_ = SphereSpec{dim_n, radius};
    return s;
}

InterfaceSpec InterfaceSpec::plane_curve(std::vector<FourierPair> coeffs) {
    if (coeffs.size() < 2)
        throw GeometryError("plane curve needs at least harmonic 1 coefficients");
    PlaneCurveSpec c;
    c.coeffs = std::move(coeffs);

    // Orientation from the signed area; also the |x'| > 0 sampling check.
    const int samples = 4096;
    double area2 = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / samples;
        const Eigen::Vector2d p = c.point(theta);
        const Eigen::Vector2d t = c.d1(theta);
        const double speed = t.norm();
        if (speed < kDegenerateSpeed) throw_degenerate(theta, speed);
        area2 += p.x() * t.y() - p.y() * t.x();
    }
    c.orientation = (area2 >= 0.0) ? 1.0 : -1.0;

    InterfaceSpec s;
    s.kind_ = std::move(c);
    return s;
}

InterfaceSpec InterfaceSpec::unit_circle_curve() {
    std::vector<FourierPair> coeffs(2);
    coeffs[1].ax = 1.0;  // x = cos θ
    coeffs[1].by = 1.0;  // y = sin θ
    return plane_curve(std::move(coeffs));
}

int InterfaceSpec::ambient_dim() const {
    return is_sphere() ? sphere_spec().dim_n : 2;
}

namespace {

// Diagonal hyperspherical metric factors: g0_ii = r² Π_{j<i} sin²(ξ_j).
Eigen::VectorXd sphere_metric_diagonal(const SphereSpec& s, const Eigen::VectorXd& xi) {
    const int d = s.dim_n - 1;
    Eigen::VectorXd diag(d);
    double prod = 1.0;
    for (int i = 0; i < d; ++i) {
        diag[i] = s.radius * s.radius * prod;
        if (i + 1 < d) {
            const double si = std::sin(xi[i]);
            prod *= si * si;
        }
    }
    return diag;
}

MetricSample metric_at_sphere(const SphereSpec& s, const Eigen::VectorXd& xi) {
    const int d = s.dim_n - 1;
    if (xi.size() != d)
        throw GeometryError("sphere parameter must have n-1 components");
    MetricSample m;
    m.xi = xi;
    const Eigen::VectorXd diag = sphere_metric_diagonal(s, xi);
    if (diag.minCoeff() <= 0.0)
        throw GeometryError("sphere chart degenerate at a pole; use interior xi");
    m.g0 = diag.asDiagonal();
    m.g0_inv = diag.cwiseInverse().asDiagonal();
    m.sqrt_G0 = std::sqrt(diag.prod());
    m.b = -m.g0 / s.radius;                          // b_ij = -(1/r) g_{0,ij}
    m.G_tilde = 2.0 * m.g0_inv * m.b * m.g0_inv;     // = -(2/r) g0^{-1}
    m.H = -(s.dim_n - 1) / s.radius;
    return m;
}

MetricSample metric_at_curve(const PlaneCurveSpec& c, double theta) {
    const Eigen::Vector2d t = c.d1(theta);
    const double speed = t.norm();
    if (speed < kDegenerateSpeed) throw_degenerate(theta, speed);
    MetricSample m;
    m.xi = Eigen::VectorXd::Constant(1, theta);
    m.g0 = Eigen::MatrixXd::Constant(1, 1, speed * speed);
    m.g0_inv = Eigen::MatrixXd::Constant(1, 1, 1.0 / (speed * speed));
    m.sqrt_G0 = speed;
    // b = (x'', ν); H = signed curvature w.r.t. ν_Γ = b / g0.
    const double b = c.d2(theta).dot(c.normal(theta));
    m.b = Eigen::MatrixXd::Constant(1, 1, b);
    m.G_tilde = Eigen::MatrixXd::Constant(1, 1, 2.0 * b / std::pow(speed, 4));
    m.H = b / (speed * speed);
    return m;
}

}  // namespace

MetricSample metric_at(const InterfaceSpec& spec, const Eigen::VectorXd& xi) {
    if (spec.is_sphere()) return metric_at_sphere(spec.sphere_spec(), xi);
    if (xi.size() != 1) throw GeometryError("plane curve parameter is one-dimensional");
    return metric_at_curve(spec.curve_spec(), xi[0]);
}

MetricSample metric_at(const InterfaceSpec& spec, double xi) {
    return metric_at(spec, Eigen::VectorXd::Constant(1, xi));
}

Eigen::VectorXd embed_point(const InterfaceSpec& spec, const Eigen::VectorXd& xi) {
    if (!spec.is_sphere()) {
        const Eigen::Vector2d p = spec.curve_spec().point(xi[0]);
        return p;
    }
    const SphereSpec& s = spec.sphere_spec();
    const int n = s.dim_n;
    Eigen::VectorXd x(n);
    double prod = s.radius;
    for (int i = 0; i < n - 1; ++i) {
        x[i] = prod * std::cos(xi[i]);
        prod *= std::sin(xi[i]);
    }
    x[n - 1] = prod;
    return x;
}

Eigen::VectorXd outward_normal(const InterfaceSpec& spec, const Eigen::VectorXd& xi) {
    if (spec.is_sphere())
        return embed_point(spec, xi) / spec.sphere_spec().radius;
    const Eigen::Vector2d nu = spec.curve_spec().normal(xi[0]);
    return nu;
}

double reach(const InterfaceSpec& spec) {
    if (spec.is_sphere()) return spec.sphere_spec().radius;
    const PlaneCurveSpec& c = spec.curve_spec();
    const int samples = 4096;
    double max_abs_kappa = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / samples;
        const MetricSample m = metric_at_curve(c, theta);
        max_abs_kappa = std::max(max_abs_kappa, std::abs(m.H));
    }
    if (max_abs_kappa == 0.0)
        throw GeometryError("curve has identically zero curvature; not closed");
    return 0.9 / max_abs_kappa;
}

CollarMetric::CollarMetric(InterfaceSpec spec)
    : spec_(std::move(spec)), reach_(thinshell::reach(spec_)) {}

CollarMetric::Eval CollarMetric::evaluate(const Eigen::VectorXd& xi, double t) const {
    if (std::abs(t) >= reach_) {
        std::ostringstream os;
        os << "outside collar: |t| = " << std::abs(t) << " >= reach " << reach_;
        throw GeometryError(os.str());
    }
    Eval out;
    if (spec_.is_sphere()) {
        // g(ξ,t) = ((r+t)/r)² g0(ξ) exactly; equivalently g0 - 2tb + t² g0/r².
        const MetricSample m = metric_at_sphere(spec_.sphere_spec(), xi);
        const double r = spec_.sphere_spec().radius;
        const double f = (r + t) / r;
        out.g_inv = m.g0_inv / (f * f);
        out.sqrt_G = m.sqrt_G0 * std::pow(f, spec_.surface_dim());
        return out;
    }
    const PlaneCurveSpec& c = spec_.curve_spec();
    const double theta = xi[0];
    const MetricSample m = metric_at_curve(c, theta);
    const double ghat = c.normal_d1(theta).squaredNorm();
    const double g = m.g0(0, 0) - 2.0 * t * m.b(0, 0) + t * t * ghat;
    if (!(g > 0.0))
        throw GeometryError("collar metric not positive definite (t too large?)");
    out.g_inv = Eigen::MatrixXd::Constant(1, 1, 1.0 / g);
    out.sqrt_G = std::sqrt(g);
    return out;
}

CollarMetric::Eval CollarMetric::evaluate(double xi, double t) const {
    return evaluate(Eigen::VectorXd::Constant(1, xi), t);
}

}  // namespace thinshell
