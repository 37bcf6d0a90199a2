#include "lctkit/arrangement.hpp"

#include "lctkit/errors.hpp"

#include <algorithm>
#include <map>

namespace lctkit {

namespace {

void check_caps(const RootSystem& R, const LatticeCaps& caps)
{
    const int limit = R.all_type_a() ? caps.type_a_rank : caps.other_rank;
    if (R.rank() > limit)
        throw CapExceeded("arrangement lattice cap exceeded: ss-rank " + std::to_string(R.rank()) + " > " +
                          std::to_string(limit) + " for " + R.label());
}

bool vanishing_is_irreducible(const RootSystem& R, const std::vector<int>& positive)
{
    if (positive.empty())
        return false;
    std::vector<char> seen(positive.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < positive.size(); ++j)
            if (!seen[j] && R.pairing_roots(positive[i], positive[j]) != 0) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
    }
    return reached == positive.size();
}

struct Node {
    SpanBasis basis;
    std::vector<int> vanishing;
};

OracleResult relative_min(const RootSystemPtr& R, const std::vector<Flat>& flats, const Subsystem& levi, int m, bool dense_only)
{
    if (m < 0)
        throw InputError("m must be non-negative");
    if (levi.parent() != R)
        throw InputError("levi is not a subsystem of the given root system");
    OracleResult best;
    for (const Flat& f : flats) {
        if (dense_only && !f.dense)
            continue;
        const int a = f.s;
        int b = 0;
        for (int alpha : f.vanishing)
            b += levi.contains(alpha);
        if (a == b)
            continue;
        ExtRational v = ratio(f.r + static_cast<std::int64_t>(m) * b, a - b);
        // Flats arrive sorted by (r, vanishing); keep the lexicographically least witness.
        if (!best.witness || v < best.value || (v == best.value && f.vanishing < best.witness->vanishing)) {
            best.value = v;
            best.witness = f;
        }
    }
    return best;
}

} // namespace

bool is_dense(const RootSystem& R, const Flat& f)
{
    return vanishing_is_irreducible(R, f.vanishing);
}

std::vector<Flat> enumerate_flats(const RootSystemPtr& Rp, const LatticeCaps& caps)
{
    const RootSystem& R = *Rp;
    check_caps(R, caps);
    const int P = R.num_positive();
    std::map<std::vector<int>, int> seen; // vanishing set -> codimension
    std::vector<Node> frontier;

    auto saturate = [&](const SpanBasis& basis, const std::vector<int>& known) {
        std::vector<int> out;
        for (int beta = 0; beta < P; ++beta)
            if (std::binary_search(known.begin(), known.end(), beta) || basis.contains(R.root(beta)))
                out.push_back(beta);
        return out;
    };

    for (int alpha = 0; alpha < P; ++alpha) {
        Node node{SpanBasis(R.ambient_dim()), {}};
        node.basis.add(R.root(alpha));
        node.vanishing = saturate(node.basis, {alpha});
        if (seen.emplace(node.vanishing, 1).second)
            frontier.push_back(std::move(node));
    }
    while (!frontier.empty()) {
        std::vector<Node> next;
        for (const Node& node : frontier) {
            for (int alpha = 0; alpha < P; ++alpha) {
                if (std::binary_search(node.vanishing.begin(), node.vanishing.end(), alpha))
                    continue;
                Node child{node.basis, {}};
                child.basis.add(R.root(alpha));
                std::vector<int> known = node.vanishing;
                known.insert(std::upper_bound(known.begin(), known.end(), alpha), alpha);
                child.vanishing = saturate(child.basis, known);
                if (seen.emplace(child.vanishing, child.basis.rank()).second)
                    next.push_back(std::move(child));
            }
        }
        frontier = std::move(next);
    }

    std::vector<Flat> flats;
    flats.reserve(seen.size());
    for (const auto& [vanishing, r] : seen) {
        Flat f;
        f.vanishing = vanishing;
        f.r = r;
        f.s = static_cast<int>(vanishing.size());
        f.dense = vanishing_is_irreducible(R, vanishing);
        flats.push_back(std::move(f));
    }
    std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
        if (a.r != b.r)
            return a.r < b.r;
        return a.vanishing < b.vanishing;
    });
    return flats;
}

OracleResult lct_arrangement_oracle(const RootSystemPtr& R, const LatticeCaps& caps)
{
    OracleResult best;
    for (const Flat& f : enumerate_flats(R, caps)) {
        if (!f.dense)
            continue;
        ExtRational v = ratio(f.r, f.s);
        if (!best.witness || v < best.value || (v == best.value && f.vanishing < best.witness->vanishing)) {
            best.value = v;
            best.witness = f;
        }
    }
    return best;
}

OracleResult relative_lct_oracle(const RootSystemPtr& R, const Subsystem& levi, int m, const LatticeCaps& caps)
{
    return relative_min(R, enumerate_flats(R, caps), levi, m, true);
}

OracleResult relative_lct_oracle(const RootSystemPtr& R, const std::vector<Flat>& flats, const Subsystem& levi, int m)
{
    return relative_min(R, flats, levi, m, true);
}

OracleResult relative_lct_all_flats(const RootSystemPtr& R, const Subsystem& levi, int m, const LatticeCaps& caps)
{
    return relative_min(R, enumerate_flats(R, caps), levi, m, false);
}

} // namespace lctkit
