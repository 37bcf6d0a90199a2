#include "lctkit/linalg.hpp"

#include "lctkit/errors.hpp"

#include <numeric>

namespace lctkit {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw InternalError("integer overflow in exact elimination");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw InternalError("integer overflow in exact elimination");
    return r;
}

void make_primitive(IntVec& v)
{
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x);
    if (g > 1)
        for (auto& x : v)
            x /= g;
}

} // namespace

int rank(const IntMatrix& rows)
{
    if (rows.empty())
        return 0;
    SpanBasis basis(rows.front().size());
    for (const auto& r : rows)
        basis.add(r);
    return basis.rank();
}

bool SpanBasis::reduce(IntVec& v) const
{
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p] == 0)
            continue;
        const std::int64_t a = rows_[i][p];
        const std::int64_t b = v[p];
        for (std::size_t j = 0; j < dim_; ++j)
            v[j] = checked_sub(checked_mul(a, v[j]), checked_mul(b, rows_[i][j]));
        make_primitive(v);
    }
    for (auto x : v)
        if (x != 0)
            return false;
    return true;
}

bool SpanBasis::add(const IntVec& v)
{
    if (v.size() != dim_)
        throw InputError("dimension mismatch in SpanBasis::add");
    IntVec w = v;
    make_primitive(w);
    if (reduce(w))
        return false;
    std::size_t p = 0;
    while (w[p] == 0)
        ++p;
    // Row i vanishes at the pivots of rows 0..i-1, so a residual that is zero
    // at every pivot and lies in the span must be zero.
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
}

bool SpanBasis::contains(const IntVec& v) const
{
    if (v.size() != dim_)
        throw InputError("dimension mismatch in SpanBasis::contains");
    IntVec w = v;
    return reduce(w);
}

} // namespace lctkit
