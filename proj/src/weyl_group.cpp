#include "lctkit/weyl_group.hpp"

#include "lctkit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

namespace lctkit {

namespace {

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i)
        f *= static_cast<std::uint64_t>(i);
    return f;
}

struct PermHash {
    std::size_t operator()(const std::vector<int>& p) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : p)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const std::size_t n = a.size();
    IntMatrix c(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (a[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j)
                    c[i][j] += a[i][k] * b[k][j];
    return c;
}

} // namespace

std::uint64_t weyl_group_order(const std::vector<CartanType>& factors)
{
    std::uint64_t order = 1;
    for (const auto& t : factors) {
        std::uint64_t f = 1;
        switch (t.family) {
        case Family::A: f = factorial(t.rank + 1); break;
        case Family::B:
        case Family::C: f = (std::uint64_t{1} << t.rank) * factorial(t.rank); break;
        case Family::D: f = (std::uint64_t{1} << (t.rank - 1)) * factorial(t.rank); break;
        case Family::E: f = t.rank == 6 ? 51840 : t.rank == 7 ? 2903040 : 696729600; break;
        case Family::F: f = 1152; break;
        case Family::G: f = 12; break;
        }
        order *= f;
    }
    return order;
}

std::vector<WeylElement> weyl_group(const RootSystem& R, std::size_t cap, bool with_matrices)
{
    if (weyl_group_order(R.factors()) > cap)
        throw CapExceeded("Weyl group too large");

    const auto n = static_cast<std::size_t>(R.num_roots());
    const std::size_t dim = R.ambient_dim();
    std::vector<IntMatrix> gens;
    if (with_matrices)
        for (int s = 0; s < R.rank(); ++s)
            gens.push_back(R.reflection_matrix(R.simple_index(s)));

    WeylElement id;
    id.root_perm.resize(n);
    std::iota(id.root_perm.begin(), id.root_perm.end(), 0);
    if (with_matrices) {
        id.matrix.assign(dim, IntVec(dim, 0));
        for (std::size_t i = 0; i < dim; ++i)
            id.matrix[i][i] = 1;
    }

    std::vector<WeylElement> elements{id};
    std::unordered_set<std::vector<int>, PermHash> seen{id.root_perm};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (int s = 0; s < R.rank(); ++s) {
            const int alpha = R.simple_index(s);
            std::vector<int> perm(n);
            for (std::size_t x = 0; x < n; ++x)
                perm[x] = R.reflect_root(elements[head].root_perm[x], alpha);
            if (!seen.insert(perm).second)
                continue;
            if (elements.size() >= cap)
                throw CapExceeded("Weyl group too large");
            WeylElement w;
            if (with_matrices)
                w.matrix = multiply(gens[static_cast<std::size_t>(s)], elements[head].matrix);
            w.root_perm = std::move(perm);
            elements.push_back(std::move(w));
        }
    }
    return elements;
}

std::vector<int> apply(const std::vector<int>& root_perm, const std::vector<int>& roots)
{
    std::vector<int> out;
    out.reserve(roots.size());
    for (int a : roots)
        out.push_back(root_perm[static_cast<std::size_t>(a)]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace lctkit

namespace lctkit {

std::vector<std::vector<int>> weyl_orbit(const RootSystem& R, const std::vector<int>& roots, std::size_t cap)
{
    std::set<std::vector<int>> seen{roots};
    std::vector<std::vector<int>> queue{roots};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (int s = 0; s < R.rank(); ++s) {
            std::vector<int> image;
            image.reserve(queue[head].size());
            for (int alpha : queue[head])
                image.push_back(R.reflect_root(alpha, R.simple_index(s)));
            std::sort(image.begin(), image.end());
            if (seen.insert(image).second) {
                if (seen.size() > cap)
                    throw CapExceeded("Weyl orbit too large");
                queue.push_back(std::move(image));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace lctkit
