#include "lctkit/compact_apps.hpp"

#include "lctkit/errors.hpp"
#include "lctkit/weyl_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lctkit {

namespace {

void check_caps(const RootSystem& R, const LatticeCaps& caps)
{
    const int limit = R.all_type_a() ? caps.type_a_rank : caps.other_rank;
    if (R.rank() > limit)
        throw CapExceeded("rank cap exceeded: ss-rank " + std::to_string(R.rank()) + " > " + std::to_string(limit) +
                          " for " + R.label());
}

} // namespace

Subsystem generated_subsystem(const RootSystemPtr& Rp, const std::vector<int>& generators)
{
    const RootSystem& R = *Rp;
    std::set<int> roots;
    std::vector<int> queue;
    for (int g : generators)
        for (int x : {g, R.negate(g)})
            if (roots.insert(x).second)
                queue.push_back(x);
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (int g : generators) {
            const int image = R.reflect_root(queue[h], g);
            if (roots.insert(image).second)
                queue.push_back(image);
        }
    return Subsystem::trusted(Rp, {roots.begin(), roots.end()});
}

std::vector<Subsystem> enumerate_pseudo_levis(const RootSystemPtr& Rp, const LatticeCaps& caps)
{
    const RootSystem& R = *Rp;
    if (R.factors().size() != 1)
        throw InputError("pseudo-Levi enumeration needs an irreducible root system");
    check_caps(R, caps);
    const std::vector<int> extended = extended_simple_roots(Rp);
    const unsigned nodes = static_cast<unsigned>(extended.size());
    std::set<std::vector<int>> seen;
    for (unsigned mask = 0; mask + 1 < (1u << nodes); ++mask) {
        std::vector<int> gens;
        for (unsigned i = 0; i < nodes; ++i)
            if (mask & (1u << i))
                gens.push_back(extended[i]);
        const Subsystem standard = generated_subsystem(Rp, gens);
        if (seen.count(standard.roots()))
            continue;
        if (!is_z_closed(R, standard.roots()))
            throw InternalError("extended-diagram subsystem is not closed: " + standard.type_name());
        for (auto& roots : weyl_orbit(R, standard.roots()))
            seen.insert(std::move(roots));
    }
    std::vector<Subsystem> out;
    out.reserve(seen.size());
    for (const auto& roots : seen)
        out.push_back(Subsystem::trusted(Rp, roots));
    return out;
}

std::vector<Subsystem> closed_subsystems_bruteforce(const RootSystemPtr& Rp, int max_roots)
{
    const RootSystem& R = *Rp;
    if (R.num_roots() > max_roots)
        throw CapExceeded("brute-force subsystem enumeration limited to " + std::to_string(max_roots) + " roots");
    const int P = R.num_positive();
    std::vector<Subsystem> out;
    for (unsigned mask = 0; mask < (1u << P); ++mask) {
        std::vector<int> roots;
        for (int i = 0; i < P; ++i)
            if (mask & (1u << i))
                roots.push_back(i);
        for (int i = 0; i < P; ++i)
            if (mask & (1u << i))
                roots.push_back(R.negate(i));
        std::sort(roots.begin(), roots.end());
        if (is_z_closed(R, roots))
            out.push_back(Subsystem::trusted(Rp, roots));
    }
    std::sort(out.begin(), out.end(), [](const Subsystem& a, const Subsystem& b) { return a.roots() < b.roots(); });
    return out;
}

PseudoLeviReport epsilon_pseudo_levi(const RootSystemPtr& Rp, const Subsystem& levi, const LatticeCaps& caps)
{
    if (levi.parent() != Rp)
        throw InputError("levi is not a subsystem of the given root system");
    const RootSystem& R = *Rp;
    const std::vector<Subsystem> candidates = enumerate_pseudo_levis(Rp, caps);

    PseudoLeviReport out;
    out.candidates = candidates.size();
    bool found = false;
    SubsystemWitness witness;
    ExtRational best = ExtRational::infinity();
    for (const Subsystem& l : candidates) {
        std::vector<int> positive;
        int b = 0;
        for (int alpha : l.roots())
            if (R.is_positive(alpha)) {
                positive.push_back(alpha);
                b += levi.contains(alpha);
            }
        const int a = static_cast<int>(positive.size());
        if (a == b)
            continue;
        const int rk = l.rank();
        const ExtRational v = ratio(rk + 2LL * b, 2LL * (a - b));
        if (!found || v < best || (v == best && positive < witness.positive)) {
            best = v;
            found = true;
            witness = {l.type_name(), positive, rk, a, b};
        }
        if (components(l).size() == 1)
            out.simple_derived_value = std::min(out.simple_derived_value, v);
    }
    if (found)
        out.report = {best, witness, "thmF"};
    else
        out.report = {ExtRational::infinity(), TagWitness{"full-levi"}, "thmF"};
    return out;
}

} // namespace lctkit
