#pragma once

#include <string>
#include <vector>

#include <lierealise/liealg.hpp>
#include <lierealise/series.hpp>

namespace lierealise {

// Vector-field images of the basis of g, in n = codim h variables, exact
// through total degree `degree`.
struct Realisation {
    TransitivePair pair;
    int degree;
    std::vector<std::string> variables;
    std::vector<TruncatedVectorField> images; // indexed like pair.algebra().names()
    Subspace kernel;                          // largest ideal of g inside h

    const TruncatedVectorField &image(const std::string &name) const;
    // Image of an arbitrary element of g, by linearity.
    TruncatedVectorField image_of(const Vector &x) const;
};

// Requires degree >= 1. The complement order of the pair fixes the
// coordinates: Y_i corresponds to the i-th variable.
Realisation realise(const TransitivePair &p, int degree);

// Elements of g whose image vanishes through the truncation degree.
Subspace image_kernel(const Realisation &r);

struct HomomorphismResidual {
    std::size_t lhs;
    std::size_t rhs;
    int checked_degree;
    bool vanishes;
    TruncatedVectorField residual; // [phi(X), phi(Y)] - phi([X, Y])
};

struct RealisationReport {
    std::vector<HomomorphismResidual> residuals;
    bool homomorphism = true;
    // Isotropy elements map to fields of order >= 0.
    bool isotropy_nonnegative = true;
    // Complement images have independent order -1 parts.
    bool transitive = true;
    // Preimage of the order >= 0 fields is exactly h.
    bool isotropy_exact = true;
    Subspace truncated_kernel;
    bool kernel_is_largest_ideal = true;
    bool kernel_matches_images = true;

    bool ok() const
    {
        return homomorphism && isotropy_nonnegative && transitive && isotropy_exact && kernel_is_largest_ideal &&
               kernel_matches_images;
    }
};

RealisationReport verify_realisation(const Realisation &r);

enum class CertificationStatus { certified_polynomial, certified_exp_polynomial, truncated_only };

std::string to_string(CertificationStatus s);

// polynomial(x) * exp(lambda * x_variable)
struct ExpTerm {
    std::size_t variable;
    Rational lambda;
    TruncatedSeries polynomial;
};

struct ClosedFormCoefficient {
    CertificationStatus status = CertificationStatus::truncated_only;
    TruncatedSeries polynomial{1, -1}; // the whole series when truncated_only
    std::vector<ExpTerm> exp_terms;
    std::string note;

    // Taylor expansion through total degree `degree`.
    TruncatedSeries expand(int degree) const;
    std::string render(const std::vector<std::string> &names) const;
};

struct LiftedImage {
    std::string name;
    std::vector<ClosedFormCoefficient> coefficients;
};

// A series is certified polynomial when it vanishes in degrees (d0, D] with
// D - d0 >= 3 and the complement is a subalgebra acting nilpotently on g.
inline constexpr int kPolynomialGuard = 3;
std::vector<LiftedImage> lift_polynomial(const Realisation &r);

// Fits every coefficient as sum_j p_j(x) exp(lambda_j x_var) with rational
// lambda_j, from minimal recurrences on the k!-normalised slices along x_var.
std::vector<LiftedImage> lift_exp_polynomial(const Realisation &r, std::size_t var);

} // namespace lierealise
