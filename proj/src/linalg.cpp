#include "mormatch/linalg.hpp"

#include "mormatch/errors.hpp"

#include <Eigen/SVD>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace mormatch {

std::string fmt17(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b)
{
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

int numerical_rank(const Eigen::MatrixXd& m, double tol)
{
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++rank;
    return rank;
}

Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m, double tol)
{
    if (m.size() == 0) return Eigen::MatrixXd(m.rows(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(0) > 0.0 && sv(i) > tol * sv(0)) ++rank;
    return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXd null_basis(const Eigen::MatrixXd& m, double tol)
{
    if (m.rows() == 0)
        return Eigen::MatrixXd::Identity(m.cols(), m.cols());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = (sv.size() > 0 && sv(0) > 0.0) ? tol * sv(0) : tol;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return svd.matrixV().rightCols(m.cols() - rank);
}

Eigen::MatrixXd intersect_subspaces(const Eigen::MatrixXd& u,
                                    const Eigen::MatrixXd& v, double tol)
{
    const Eigen::Index n = u.rows();
    if (u.cols() == 0 || v.cols() == 0) return Eigen::MatrixXd(n, 0);
    // x in both spans iff it is annihilated by both orthogonal complements.
    Eigen::MatrixXd stacked(2 * n, n);
    stacked.topRows(n) = Eigen::MatrixXd::Identity(n, n) - u * u.transpose();
    stacked.bottomRows(n) = Eigen::MatrixXd::Identity(n, n) - v * v.transpose();
    return null_basis(stacked, tol);
}

Eigen::VectorXcd poly_from_roots(const std::vector<Complex>& roots)
{
    Eigen::VectorXcd coeffs(1);
    coeffs(0) = 1.0;
    for (const Complex& root : roots) {
        Eigen::VectorXcd next = Eigen::VectorXcd::Zero(coeffs.size() + 1);
        next.tail(coeffs.size()) += coeffs;
        next.head(coeffs.size()) -= root * coeffs;
        coeffs = next;
    }
    return coeffs.head(roots.size());
}

Eigen::VectorXd real_poly_from_roots(const std::vector<Complex>& roots, double tol)
{
    Eigen::VectorXcd c = poly_from_roots(roots);
    const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
    if (c.size() > 0 && c.imag().cwiseAbs().maxCoeff() > tol * scale)
        fail(ErrorCode::NotConjugateClosed,
             "root set is not closed under conjugation: polynomial "
             "expansion has imaginary residue " +
                 fmt17(c.imag().cwiseAbs().maxCoeff()));
    return c.real();
}

Eigen::MatrixXd companion_matrix(const Eigen::VectorXd& a)
{
    const Eigen::Index n = a.size();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) c(i, i + 1) = 1.0;
    for (Eigen::Index j = 0; j < n; ++j) c(n - 1, j) = -a(j);
    return c;
}

double spectra_distance(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b)
{
    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j)
            dist = std::min(dist, std::abs(a(i) - b(j)));
    return dist;
}

bool spectra_disjoint(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b,
                      double rel_tol)
{
    if (a.size() == 0 || b.size() == 0) return true;
    const double scale =
        1.0 + std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
    return spectra_distance(a, b) >= rel_tol * scale;
}

namespace {

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
solve_refined_impl(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& a,
                   const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& b,
                   double cond_limit)
{
    Eigen::PartialPivLU<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> lu(a);
    const double rcond = lu.rcond();
    if (!(rcond > 1.0 / cond_limit))
        fail(ErrorCode::IllConditioned,
             "linear system condition estimate exceeds " + fmt17(cond_limit) +
                 " (rcond = " + fmt17(rcond) + ")");
    auto x = lu.solve(b).eval();
    // one refinement pass recovers digits lost to mild ill-conditioning
    auto residual = (b - a * x).eval();
    x += lu.solve(residual);
    return x;
}

} // namespace

Eigen::VectorXd solve_refined(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                              double cond_limit)
{
    return solve_refined_impl<double>(a, b, cond_limit);
}

Eigen::MatrixXcd solve_refined(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                               double cond_limit)
{
    return solve_refined_impl<Complex>(a, b, cond_limit);
}

const char* error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SingularResolvent: return "SingularResolvent";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::BadDegree: return "BadDegree";
    case ErrorCode::NotConjugateClosed: return "NotConjugateClosed";
    case ErrorCode::ObservabilityFailure: return "ObservabilityFailure";
    case ErrorCode::DuplicateFrequency: return "DuplicateFrequency";
    case ErrorCode::SpectraOverlap: return "SpectraOverlap";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::PlacementFailure: return "PlacementFailure";
    case ErrorCode::UnstableA: return "UnstableA";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::SingularShift: return "SingularShift";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::RankDeficientX: return "RankDeficientX";
    case ErrorCode::ZeroAtOrigin: return "ZeroAtOrigin";
    case ErrorCode::PoleAtOrigin: return "PoleAtOrigin";
    case ErrorCode::EmbeddingFailure: return "EmbeddingFailure";
    case ErrorCode::VerificationFailure: return "VerificationFailure";
    case ErrorCode::UsageError: return "UsageError";
    }
    return "UnknownError";
}

} // namespace mormatch
