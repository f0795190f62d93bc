#include "hd/nu.hpp"

#include "hd/errors.hpp"

namespace hd {

double NUInstance::lambda() const { return xi1 - xi3 - c[14] * (c[14] + 2.0 * c[13]); }

double NUInstance::lambda_n(int n) const
{
    return static_cast<double>(n) * n + 2.0 * n * (c[13] + c[14]);
}

NUInstance build_instance(Symmetry symmetry, Scheme scheme, double alpha, double beta_sq, int kappa)
{
    if (!(alpha >= 0.0))
        throw DomainError("NU decay parameter must be nonnegative");
    if (kappa == 0)
        throw DomainError("kappa must be nonzero");

    NUInstance in{symmetry, scheme, kappa, {}, 0.0, 0.0, 0.0};
    const double k = kappa;
    const double a2 = alpha * alpha;
    // sigma_k is +1 for the spin (kappa+1) family, -1 for pseudospin (kappa-1)
    const double s = symmetry == Symmetry::Spin ? 1.0 : -1.0;

    if (scheme == Scheme::ProperR1) {
        in.xi1 = a2 + beta_sq + k * k;
        in.xi2 = 2.0 * a2 + beta_sq - s * k;
        in.xi3 = a2;
    } else {
        // A = eps^2 +/- nu^2, B = 2 eps^2 +/- nu^2 - kappa(kappa +/- 1); the shift
        // d0 is already inside eps^2.
        const double kk = k * (k + s);
        in.xi1 = a2 + s * beta_sq;
        in.xi2 = 2.0 * a2 + s * beta_sq - kk;
        in.xi3 = a2;
    }

    in.c[1] = in.c[2] = in.c[3] = in.c[4] = 1.0;
    in.c[5] = 0.0;
    in.c[6] = -0.5;
    in.c[7] = 0.25 + in.xi1;
    in.c[8] = -in.xi2;
    in.c[9] = in.xi3;
    in.c[10] = 0.25 * (2.0 * k + s) * (2.0 * k + s);
    in.c[11] = 2.0 * alpha;
    in.c[12] = 2.0 * k + s;
    in.c[13] = alpha;
    in.c[14] = symmetry == Symmetry::Spin ? k + 1.0 : k;
    in.c[15] = in.c[12];
    in.c[16] = in.c[14];
    return in;
}

double eigenvalue_condition(const NUInstance& instance, int n)
{
    if (n < 0)
        throw DomainError("n must be nonnegative");
    return instance.lambda() - instance.lambda_n(n);
}

} // namespace hd
