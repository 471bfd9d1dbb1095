#include "rankone/operators.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <limits>
#include <numeric>

namespace rankone {

namespace {

double matrix_scale(const MatX& m) {
    double s = m.cwiseAbs().maxCoeff();
    return std::max(1.0, s);
}

// Rotate each column so its largest-modulus component is real positive.
// Keeps columns orthonormal and makes the decomposition reproducible.
void normalize_column_phases(MatX& vectors) {
    for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
        Eigen::Index imax = 0;
        double best = -1.0;
        for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
            double a = std::abs(vectors(i, j));
            if (a > best) {
                best = a;
                imax = i;
            }
        }
        Complex pivot = vectors(imax, j);
        if (std::abs(pivot) > 0.0) vectors.col(j) *= std::conj(pivot) / std::abs(pivot);
    }
}

void check_residual(const MatX& m, const VecX& values, const MatX& vectors, double eig_tol,
                    const char* what) {
    double scale = matrix_scale(m);
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        double res = (m * vectors.col(k) - values(k) * vectors.col(k)).cwiseAbs().maxCoeff();
        if (!(res <= eig_tol * scale)) {
            throw std::runtime_error(std::string(what) + ": eigensolver residual " +
                                     std::to_string(res) + " exceeds tolerance at dim " +
                                     std::to_string(m.rows()) + ", matrix scale " +
                                     std::to_string(scale));
        }
    }
}

}  // namespace

HermitianOperator HermitianOperator::from(MatX m, double hermiticity_tol) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("HermitianOperator: matrix must be square and non-empty");
    double dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (dev > hermiticity_tol * matrix_scale(m))
        throw std::invalid_argument("HermitianOperator: |A - A*| = " + std::to_string(dev) +
                                    " violates hermiticity tolerance");
    return HermitianOperator{std::move(m)};
}

UnitaryOperator UnitaryOperator::from(MatX m, double unitarity_tol) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("UnitaryOperator: matrix must be square and non-empty");
    MatX gram = m.adjoint() * m;
    gram.diagonal().array() -= 1.0;
    double dev = gram.cwiseAbs().maxCoeff();
    if (dev > unitarity_tol)
        throw std::invalid_argument("UnitaryOperator: |U*U - I| = " + std::to_string(dev) +
                                    " violates unitarity tolerance");
    return UnitaryOperator{std::move(m)};
}

double SpectralDecomposition::min_gap() const {
    const Eigen::Index n = eigenvalues.size();
    if (n < 2) return std::numeric_limits<double>::infinity();
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index k = 0; k + 1 < n; ++k)
        gap = std::min(gap, std::abs(eigenvalues(k + 1) - eigenvalues(k)));
    if (kind == SupportKind::UnitCircle)
        gap = std::min(gap, std::abs(eigenvalues(0) - eigenvalues(n - 1)));
    return gap;
}

double SpectralDecomposition::operator_scale() const {
    return eigenvalues.cwiseAbs().maxCoeff();
}

SpectralDecomposition decompose(const HermitianOperator& op, double eig_tol) {
    Eigen::SelfAdjointEigenSolver<MatX> solver(op.entries);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("decompose: self-adjoint eigensolver did not converge at dim " +
                                 std::to_string(op.dim()) + ", matrix scale " +
                                 std::to_string(op.entries.cwiseAbs().maxCoeff()));

    SpectralDecomposition d;
    d.kind = SupportKind::RealLine;
    d.eigenvalues = solver.eigenvalues().cast<Complex>();  // already ascending
    d.eigenvectors = solver.eigenvectors();
    normalize_column_phases(d.eigenvectors);
    check_residual(op.entries, d.eigenvalues, d.eigenvectors, eig_tol, "decompose(hermitian)");
    return d;
}

SpectralDecomposition decompose(const UnitaryOperator& op, double eig_tol) {
    // The Schur form of a normal matrix is diagonal up to roundoff, so the
    // Schur basis gives orthonormal eigenvectors directly.
    Eigen::ComplexSchur<MatX> schur(op.entries);
    if (schur.info() != Eigen::Success)
        throw std::runtime_error("decompose: Schur iteration did not converge at dim " +
                                 std::to_string(op.dim()));

    const Eigen::Index n = op.entries.rows();
    VecX values = schur.matrixT().diagonal();
    MatX vectors = schur.matrixU();

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return arg_2pi(values(a)) < arg_2pi(values(b));
    });

    SpectralDecomposition d;
    d.kind = SupportKind::UnitCircle;
    d.eigenvalues.resize(n);
    d.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        d.eigenvalues(k) = values(order[static_cast<std::size_t>(k)]);
        d.eigenvectors.col(k) = vectors.col(order[static_cast<std::size_t>(k)]);
    }
    normalize_column_phases(d.eigenvectors);
    check_residual(op.entries, d.eigenvalues, d.eigenvectors, eig_tol, "decompose(unitary)");
    return d;
}

HermitianOperator perturb_sa(const HermitianOperator& a, const VecX& phi, double alpha) {
    if (phi.size() != a.dim()) throw std::invalid_argument("perturb_sa: dimension mismatch");
    if (std::abs(phi.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("perturb_sa: direction must be a unit vector");
    MatX m = a.entries + alpha * (phi * phi.adjoint());
    return HermitianOperator{std::move(m)};
}

UnitaryOperator perturb_unitary(const UnitaryOperator& u, const VecX& b, Complex gamma) {
    if (b.size() != u.dim()) throw std::invalid_argument("perturb_unitary: dimension mismatch");
    if (std::abs(b.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("perturb_unitary: direction must be a unit vector");
    if (!is_unimodular(gamma))
        throw std::invalid_argument("perturb_unitary: |gamma| must equal 1");
    if (gamma == Complex(1.0, 0.0)) return u;

    VecX w = u.entries.adjoint() * b;  // U^-1 b
    MatX m = u.entries + (gamma - 1.0) * (b * w.adjoint());
    return UnitaryOperator::from(std::move(m));
}

HermitianOperator random_hermitian(SeededRng& rng, int dim) {
    MatX g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.next_complex_gaussian();
    MatX h = 0.5 * (g + g.adjoint());
    return HermitianOperator{std::move(h)};
}

UnitaryOperator random_unitary(SeededRng& rng, int dim) {
    MatX g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) g(i, j) = rng.next_complex_gaussian();
    Eigen::HouseholderQR<MatX> qr(g);
    MatX q = qr.householderQ();
    MatX r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        Complex d = r(j, j);
        q.col(j) *= (std::abs(d) > 0.0) ? d / std::abs(d) : Complex(1.0, 0.0);
    }
    return UnitaryOperator::from(std::move(q));
}

VecX random_vector(SeededRng& rng, int dim) {
    VecX v(dim);
    for (int i = 0; i < dim; ++i) v(i) = rng.next_complex_gaussian();
    return v;
}

VecX random_unit_vector(SeededRng& rng, int dim) {
    VecX v = random_vector(rng, dim);
    return v / v.norm();
}

}  // namespace rankone
