#pragma once

#include <Eigen/Dense>
#include <functional>
#include <stdexcept>
#include <vector>

namespace thinshell::fem {

class SolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Gauss–Legendre rule on [-1,1]. Nodes by Newton iteration on P_n; cached.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_legendre(int npts);

/// Quadratic Lagrange shape functions on the reference element [0,1]
/// with nodes {0, 1/2, 1}.
inline void p2_shapes(double x, double N[3], double dN[3]) {
    N[0] = (1.0 - x) * (1.0 - 2.0 * x);
    N[1] = 4.0 * x * (1.0 - x);
    N[2] = x * (2.0 * x - 1.0);
    dN[0] = 4.0 * x - 3.0;
    dN[1] = 4.0 - 8.0 * x;
    dN[2] = 4.0 * x - 1.0;
}

/// 1D P2 mesh: element boundaries x_0 < x_1 < ... < x_M (periodic meshes wrap
/// the last node onto the first). Dof layout: global node g = 2e + local for
/// element e; non-periodic meshes have 2M+1 dofs, periodic ones 2M.
struct Mesh1D {
    std::vector<double> boundaries;
    bool periodic = false;

    int elements() const { return static_cast<int>(boundaries.size()) - 1; }
    int dofs() const { return periodic ? 2 * elements() : 2 * elements() + 1; }
    int global_dof(int elem, int local) const {
        const int g = 2 * elem + local;
        return periodic ? g % dofs() : g;
    }
    /// Parameter value of a global dof (element midpoints for odd dofs).
    double dof_coordinate(int g) const {
        const int e = g / 2;
        if (g % 2 == 0) return boundaries[e];
        return 0.5 * (boundaries[e] + boundaries[e + 1]);
    }
};

/// Uniform mesh over [a,b] with M elements.
Mesh1D uniform_mesh(double a, double b, int M, bool periodic);

/// Assembles A_ij = ∫ alpha u'v' + gamma uv dx and B_ij = ∫ beta uv dx over the
/// mesh with `quad_pts` Gauss points per element. Coefficients are evaluated at
/// quadrature points, so meshes aligned with coefficient jumps never integrate
/// across a discontinuity.
struct SturmLiouvilleForms {
    Eigen::MatrixXd stiffness;
    Eigen::MatrixXd mass;
};
SturmLiouvilleForms assemble_p2(const Mesh1D& mesh,
                                const std::function<double(double)>& alpha,
                                const std::function<double(double)>& gamma,
                                const std::function<double(double)>& beta,
                                int quad_pts = 4);

/// Solves A x = λ B x for symmetric A and s.p.d. B by Cholesky reduction to a
/// standard symmetric problem (dense). Eigenvectors are B-orthonormal.
struct GeneralizedEigenSolution {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};
GeneralizedEigenSolution solve_generalized_symmetric(const Eigen::MatrixXd& A,
                                                     const Eigen::MatrixXd& B);

/// Composite Gauss quadrature of f over [a,b] with `panels` panels of
/// `pts_per_panel` points each.
double integrate(const std::function<double(double)>& f, double a, double b,
                 int panels, int pts_per_panel = 10);

}  // namespace thinshell::fem
