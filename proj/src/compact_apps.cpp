#include "lctkit/compact_apps.hpp"

#include "lctkit/errors.hpp"

#include <algorithm>

namespace lctkit {

namespace {

void require_n_ell(int n, int ell)
{
    if (n < 2 || ell < 2)
        throw InputError("n and ell must both be at least 2");
}

} // namespace

PowerMeasureSpec make_power_measure_spec(int n, int ell)
{
    if (n < 2)
        throw InputError("n must be at least 2");
    if (ell < 1)
        throw InputError("ell must be at least 1");
    PowerMeasureSpec spec;
    spec.n = n;
    spec.ell = ell;
    spec.j = n % ell;
    const int q = n / ell;
    std::vector<int> parts(static_cast<std::size_t>(spec.j), q + 1);
    parts.insert(parts.end(), static_cast<std::size_t>(ell - spec.j), q);
    spec.levi_partition = Partition(parts);
    spec.ell_tilde = std::min(n, ell);
    return spec;
}

ExtRational epsilon_homogeneous_unitary(const Partition& lambda)
{
    if (lambda.empty())
        throw InputError("partition must be non-empty");
    if (lambda.length() == 1)
        return ExtRational::infinity();
    return ratio(1, lambda.length());
}

ExtRational epsilon_power_measure(const PowerMeasureSpec& spec)
{
    if (spec.n < 2)
        throw InputError("n must be at least 2");
    const ExtRational value = epsilon_homogeneous_unitary(spec.levi_partition);
    if (spec.ell >= 2 && value != ratio(1, std::min(spec.n, spec.ell)))
        throw InternalError("power measure routes disagree");
    return value;
}

ExtRational mult_exponent(const ExtRational& epsilon)
{
    if (epsilon < ExtRational(0))
        throw InputError("epsilon must be non-negative");
    if (epsilon.is_infinite())
        return ExtRational(-1);
    return (ExtRational(1) - epsilon) / (ExtRational(1) + epsilon);
}

FourierBound fourier_power_exponent(int n, int ell)
{
    require_n_ell(n, ell);
    if (ell == 2)
        return {FourierBound::Kind::AbsoluteBound, ExtRational(1)};
    return {FourierBound::Kind::Exponent, ExtRational(1) - ratio(2, std::min(n, ell) + 1)};
}

ConvolutionSmoothing convolution_smoothing(int n, int ell)
{
    require_n_ell(n, ell);
    const int t = std::min(n, ell);
    return {t + 1, t + 2};
}

} // namespace lctkit
