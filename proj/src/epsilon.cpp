#include "lctkit/epsilon.hpp"

#include "lctkit/errors.hpp"
#include "lctkit/weyl_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace lctkit {

namespace {

void require_nonempty(const Partition& nu)
{
    if (nu.empty())
        throw InputError("partition must be non-empty");
}

void require_m(int m)
{
    if (m < 0)
        throw InputError("m must be non-negative");
}

// Keeps the first minimizer, so callers scanning indices upward get the smallest.
struct Argmin {
    ExtRational value = ExtRational::infinity();
    bool set = false;

    bool offer(const ExtRational& v)
    {
        if (!set || v < value) {
            value = v;
            set = true;
            return true;
        }
        return false;
    }
};

std::string join(const std::vector<int>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

} // namespace

ExtRational epsilon_orbit_term(const Partition& nu, int k)
{
    if (k < 1 || k > nu.length())
        throw InputError("k out of range");
    long long weighted = 0, shifted = 0, nk = 0;
    for (int j = 1; j <= k; ++j) {
        const long long part = nu.part(static_cast<std::size_t>(j - 1));
        weighted += j * part;
        shifted += (j - 1) * part;
        nk += part;
    }
    const long long den = binom2(nk) - shifted;
    if (den <= 0)
        return ExtRational::infinity();
    return ratio(weighted - 1, den);
}

EpsilonReport epsilon_orbit_gln(const Partition& nu)
{
    require_nonempty(nu);
    if (nu.largest() == 1)
        return {ExtRational::infinity(), TagWitness{"zero-orbit"}, "thmC"};
    Argmin best;
    int witness = 0;
    for (int k = 1; k <= nu.length(); ++k)
        if (best.offer(epsilon_orbit_term(nu, k)))
            witness = k;
    return {best.value, IndexWitness{"k", witness}, "thmC"};
}

ExtRational epsilon_orbit_geometric(const Partition& nu)
{
    require_nonempty(nu);
    if (nu.largest() == 1)
        return ExtRational::infinity();
    Argmin best;
    for (int k = 1; k <= nu.length(); ++k) {
        std::vector<int> head(nu.parts().begin(), nu.parts().begin() + k);
        const Partition mu(head);
        const long long nk = mu.size();
        long long levi_roots = 0; // positive roots of the polarizing Levi, blocks mu^t
        const Partition mu_t = conjugate(mu);
        for (int c : mu_t.parts())
            levi_roots += binom2(c);
        best.offer(ratio((nk - 1) + levi_roots, binom2(nk) - levi_roots));
    }
    return best.value;
}

long long nilradical_dim(const Partition& levi_blocks)
{
    long long d = binom2(levi_blocks.size());
    for (int b : levi_blocks.parts())
        d -= binom2(b);
    return d;
}

EpsilonReport rlct_weyl_disc_endpoints(const Partition& nu, int m)
{
    require_nonempty(nu);
    require_m(m);
    if (nu.length() == 1)
        return {ExtRational::infinity(), TagWitness{"full-levi"}, "prop3.10"};
    const Partition lambda = conjugate(nu);
    Argmin best;
    int witness = 0;
    long long ns = 0, psi = 0;
    for (int s = 1; s <= lambda.length(); ++s) {
        const long long col = lambda.part(static_cast<std::size_t>(s - 1));
        ns += col;
        psi += (s - 1) * col;
        const long long den = binom2(ns) - psi;
        if (den <= 0)
            continue;
        if (best.offer(ratio((ns - 1) + m * psi, den)))
            witness = s;
    }
    return {best.value, IndexWitness{"s", witness}, "prop3.10"};
}

EpsilonReport rlct_weyl_disc_full(const Partition& nu, int m)
{
    require_nonempty(nu);
    require_m(m);
    if (nu.length() == 1)
        return {ExtRational::infinity(), TagWitness{"full-levi"}, "prop3.10"};
    Argmin best;
    int witness = 0;
    for (int k = 2; k <= nu.size(); ++k) {
        const long long psi = fill_stats(nu, k).psi;
        const long long den = binom2(k) - psi;
        if (den <= 0)
            continue;
        if (best.offer(ratio((k - 1) + m * psi, den)))
            witness = k;
    }
    return {best.value, IndexWitness{"k", witness}, "prop3.10"};
}

EpsilonReport rlct_weyl_disc(const Partition& nu, int m)
{
    require_nonempty(nu);
    require_m(m);
    if (nu.length() == 1)
        return {ExtRational::infinity(), TagWitness{"full-levi"}, "prop3.10"};
    if (m == 0)
        return {ratio(nu.size() - 1, nilradical_dim(nu)), IndexWitness{"s", nu.largest()}, "prop3.10"};
    if (m == 1)
        return rlct_weyl_disc_endpoints(nu, 1);
    return {ratio(2, nu.length()), IndexWitness{"s", 1}, "prop3.10"};
}

ExtRational lct_simple(const CartanType& type)
{
    return ratio(2, coxeter_number(type));
}

ExtRational lct_reductive(const std::vector<CartanType>& factors)
{
    ExtRational best = ExtRational::infinity();
    for (const CartanType& t : factors)
        best = std::min(best, lct_simple(t));
    return best;
}

ExtRational lower_bound_representation(const std::vector<CartanType>& factors)
{
    return lct_reductive(factors);
}

EpsilonReport general_relative_lct(const RootSystemPtr& Rp, const Subsystem& levi, int m, const LatticeCaps& caps)
{
    require_m(m);
    if (levi.parent() != Rp)
        throw InputError("levi is not a subsystem of the given root system");
    const RootSystem& R = *Rp;
    const int limit = R.all_type_a() ? caps.type_a_rank : caps.other_rank;
    if (R.rank() > limit)
        throw CapExceeded("rank cap exceeded: ss-rank " + std::to_string(R.rank()) + " > " + std::to_string(limit));

    const int r = R.rank();
    std::set<std::vector<int>> seen;
    Argmin best;
    SubsystemWitness witness;
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i))
                subset.push_back(i);
        // Connected Dynkin subdiagram <=> simple-derived standard Levi.
        std::vector<int> reach{subset.front()};
        std::vector<char> in(static_cast<std::size_t>(r), 0);
        in[static_cast<std::size_t>(subset.front())] = 1;
        for (std::size_t h = 0; h < reach.size(); ++h)
            for (int j : subset)
                if (!in[static_cast<std::size_t>(j)] && R.pairing_roots(reach[h], j) != 0) {
                    in[static_cast<std::size_t>(j)] = 1;
                    reach.push_back(j);
                }
        if (reach.size() != subset.size())
            continue;
        const Subsystem standard = levi_subsystem(Rp, subset);
        for (const auto& roots : weyl_orbit(R, standard.roots())) {
            if (!seen.insert(roots).second)
                continue;
            std::vector<int> positive;
            int b = 0;
            for (int alpha : roots)
                if (R.is_positive(alpha)) {
                    positive.push_back(alpha);
                    b += levi.contains(alpha);
                }
            const int a = static_cast<int>(positive.size());
            if (a == b)
                continue;
            const int rk = static_cast<int>(subset.size());
            const ExtRational v = ratio(rk + static_cast<long long>(m) * b, a - b);
            if (!best.set || v < best.value || (v == best.value && positive < witness.positive)) {
                best.value = v;
                best.set = true;
                witness = {Subsystem::trusted(Rp, roots).type_name(), positive, rk, a, b};
            }
        }
    }
    if (!best.set)
        return {ExtRational::infinity(), TagWitness{"full-levi"}, "prop3.8"};
    return {best.value, witness, "prop3.8"};
}

EpsilonReport general_relative_lct_oracle(const RootSystemPtr& R, const Subsystem& levi, int m, const LatticeCaps& caps)
{
    const OracleResult res = relative_lct_oracle(R, levi, m, caps);
    if (!res.witness)
        return {ExtRational::infinity(), TagWitness{"full-levi"}, "prop3.8"};
    int b = 0;
    for (int alpha : res.witness->vanishing)
        b += levi.contains(alpha);
    return {res.value, FlatWitness{res.witness->vanishing, res.witness->r, res.witness->s, b}, "prop3.8"};
}

ExtRational epsilon_representation_gln(const Partition& nu_max)
{
    return epsilon_orbit_gln(nu_max).value;
}

std::string witness_str(const Witness& w)
{
    struct Visitor {
        std::string operator()(const TagWitness& t) const { return t.tag; }
        std::string operator()(const IndexWitness& i) const { return i.name + "=" + std::to_string(i.value); }
        std::string operator()(const FlatWitness& f) const { return "flat{" + join(f.vanishing) + "}"; }
        std::string operator()(const SubsystemWitness& s) const { return s.type + "{" + join(s.positive) + "}"; }
    };
    return std::visit(Visitor{}, w);
}

} // namespace lctkit
