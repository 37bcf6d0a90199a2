#pragma once

#include <cstdint>
#include <vector>

namespace lctkit {

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

/// Rank of an integer matrix (rows are vectors), computed by fraction-free
/// elimination. Exact; throws InternalError on int64 overflow.
int rank(const IntMatrix& rows);

/// Incrementally maintained row-echelon basis of a rational subspace spanned
/// by integer vectors. Rows are kept primitive (content 1) to bound growth.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// Adds v to the spanning set. Returns true if the rank grew.
    bool add(const IntVec& v);
    bool contains(const IntVec& v) const;

private:
    /// Reduces v against the basis in place; returns true if v becomes zero.
    bool reduce(IntVec& v) const;

    std::size_t dim_;
    std::vector<IntVec> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace lctkit
