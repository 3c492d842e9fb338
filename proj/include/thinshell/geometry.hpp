#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <variant>
#include <vector>

namespace thinshell {

/// One Fourier harmonic of a plane-curve parameterization. Harmonic index j is
/// the position in the coefficient list:
///   x(θ) = Σ_j ax_j cos(jθ) + bx_j sin(jθ),  y(θ) likewise.
struct FourierPair {
    double ax = 0.0;
    double bx = 0.0;
    double ay = 0.0;
    double by = 0.0;
};

struct SphereSpec {
    int dim_n = 2;      // ambient dimension n; the interface is S^{n-1}(r)
    double radius = 1.0;
};

struct PlaneCurveSpec {
    std::vector<FourierPair> coeffs;
    // +1 if the parameterization is counterclockwise (D on the left), -1 if
    // clockwise. Fixed at construction from the signed area.
    double orientation = 1.0;

    Eigen::Vector2d point(double theta) const;
    Eigen::Vector2d d1(double theta) const;
    Eigen::Vector2d d2(double theta) const;
    // Outward unit normal of D and its θ-derivative.
    Eigen::Vector2d normal(double theta) const;
    Eigen::Vector2d normal_d1(double theta) const;
};

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A closed interface Γ: an analytic sphere S^{n-1}(r) or a Fourier-parameterized
/// smooth closed plane curve. The curve must be simple (not checked) with
/// |x'(θ)| > 0 everywhere (checked by sampling at construction).
class InterfaceSpec {
public:
    static InterfaceSpec sphere(int dim_n, double radius);
    static InterfaceSpec plane_curve(std::vector<FourierPair> coeffs);
    static InterfaceSpec unit_circle_curve();  // convenience: x=(cosθ, sinθ)

    bool is_sphere() const { return std::holds_alternative<SphereSpec>(kind_); }
    const SphereSpec& sphere_spec() const { return std::get<SphereSpec>(kind_); }
    const PlaneCurveSpec& curve_spec() const { return std::get<PlaneCurveSpec>(kind_); }

    int ambient_dim() const;   // n
    int surface_dim() const { return ambient_dim() - 1; }

private:
    InterfaceSpec() = default;
    std::variant<SphereSpec, PlaneCurveSpec> kind_;
};

/// First and second fundamental form data of Γ at one parameter point.
/// All matrices are (n-1)x(n-1); for plane curves they are 1x1.
struct MetricSample {
    Eigen::VectorXd xi;
    Eigen::MatrixXd g0;       // metric g_{0,ij}
    Eigen::MatrixXd g0_inv;   // g_0^{ij}
    double sqrt_G0 = 0.0;     // sqrt(det g0)
    Eigen::MatrixXd b;        // second fundamental form b_ij
    Eigen::MatrixXd G_tilde;  // 2 (g0^{-1} b g0^{-1})^{ij}
    double H = 0.0;           // mean curvature (sum of principal curvatures) w.r.t. outward normal
};

/// Fundamental forms and curvature quantities at parameter xi.
/// Sphere charts are hyperspherical: xi = (ξ_1, ..., ξ_{n-1}) with
/// ξ_1..ξ_{n-2} in (0,π) and ξ_{n-1} in [0,2π).
MetricSample metric_at(const InterfaceSpec& spec, const Eigen::VectorXd& xi);
MetricSample metric_at(const InterfaceSpec& spec, double xi);  // 1-parameter overload

/// Embedding x(ξ) ∈ ℝⁿ and the outward unit normal ν_Γ(ξ).
Eigen::VectorXd embed_point(const InterfaceSpec& spec, const Eigen::VectorXd& xi);
Eigen::VectorXd outward_normal(const InterfaceSpec& spec, const Eigen::VectorXd& xi);

/// Largest |t| for which the collar map ξ + t ν_Γ(ξ) stays a diffeomorphism:
/// r for spheres, 0.9 × min_θ 1/|κ(θ)| (4096 samples) for plane curves.
double reach(const InterfaceSpec& spec);

/// Exact collar metric g(ξ,t) of the tubular coordinates (no truncation):
/// the tangential block is quadratic in t by construction; the t-row/column is
/// (0,...,0,1). Evaluation returns the tangential inverse block and sqrt(det).
class CollarMetric {
public:
    explicit CollarMetric(InterfaceSpec spec);

    struct Eval {
        Eigen::MatrixXd g_inv;  // tangential block of g^{-1}(ξ,t)
        double sqrt_G = 0.0;
    };

    Eval evaluate(const Eigen::VectorXd& xi, double t) const;
    Eval evaluate(double xi, double t) const;

    const InterfaceSpec& spec() const { return spec_; }
    double reach() const { return reach_; }

private:
    InterfaceSpec spec_;
    double reach_ = 0.0;
};

}  // namespace thinshell
