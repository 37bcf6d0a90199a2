#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lctkit/compact_apps.hpp"
#include "lctkit/errors.hpp"

#include <set>

using namespace lctkit;

namespace {

// Pseudo-Levi minimum evaluated over an arbitrary candidate family.
ExtRational half_min(const RootSystem& R, const std::vector<Subsystem>& family, const Subsystem& levi)
{
    ExtRational best = ExtRational::infinity();
    for (const Subsystem& l : family) {
        int a = 0, b = 0;
        for (int alpha : l.roots())
            if (R.is_positive(alpha)) {
                ++a;
                b += levi.contains(alpha);
            }
        if (a > b)
            best = std::min(best, ratio(l.rank() + 2 * b, 2 * (a - b)));
    }
    return best;
}

std::set<std::vector<int>> keys(const std::vector<Subsystem>& v)
{
    std::set<std::vector<int>> out;
    for (const auto& s : v)
        out.insert(s.roots());
    return out;
}

} // namespace

TEST_CASE("homogeneous spaces of unitary groups")
{
    CHECK(epsilon_homogeneous_unitary(Partition{3, 3, 2}) == ratio(1, 3));
    CHECK(epsilon_homogeneous_unitary(Partition{7}).is_infinite());
    CHECK(epsilon_homogeneous_unitary(Partition{1, 1}) == ratio(1, 2));
    CHECK_THROWS_AS(epsilon_homogeneous_unitary(Partition{}), InputError);
}

TEST_CASE("power measures")
{
    const PowerMeasureSpec s = make_power_measure_spec(10, 3);
    CHECK(s.levi_partition == Partition{4, 3, 3});
    CHECK(s.j == 1);
    CHECK(s.ell_tilde == 3);
    CHECK(epsilon_power_measure(s) == ratio(1, 3));
    const PowerMeasureSpec t = make_power_measure_spec(2, 5);
    CHECK(t.levi_partition == Partition{1, 1});
    CHECK(epsilon_power_measure(t) == ratio(1, 2));
    CHECK(epsilon_power_measure(make_power_measure_spec(4, 1)).is_infinite());
    CHECK_THROWS_AS(make_power_measure_spec(1, 3), InputError);
    CHECK_THROWS_AS(make_power_measure_spec(3, 0), InputError);
    for (int n = 2; n <= 12; ++n)
        for (int ell = 2; ell <= 12; ++ell) {
            const PowerMeasureSpec p = make_power_measure_spec(n, ell);
            CHECK(p.levi_partition.size() == n);
            CHECK(p.levi_partition.length() == std::min(n, ell));
            CHECK(epsilon_power_measure(p) == ratio(1, std::min(n, ell)));
            CHECK(epsilon_power_measure(p) == epsilon_homogeneous_unitary(p.levi_partition));
        }
}

TEST_CASE("pseudo-Levi enumeration matches brute force on small systems")
{
    const std::map<std::string, std::size_t> counts{{"A2", 5}, {"B2", 7}, {"G2", 12}};
    for (const auto& [name, count] : counts) {
        CAPTURE(name);
        const RootSystemPtr R = build(CartanType::parse(name));
        const auto brute = closed_subsystems_bruteforce(R);
        CHECK(brute.size() == count);
        CHECK(keys(enumerate_pseudo_levis(R)) == keys(brute));
    }
    CHECK_THROWS_AS(closed_subsystems_bruteforce(build(CartanType::parse("B3"))), CapExceeded);
    // Short A2 inside G2 is not closed; long A2 is.
    std::set<std::string> g2_types;
    for (const auto& s : enumerate_pseudo_levis(build(CartanType::parse("G2"))))
        g2_types.insert(s.type_name());
    CHECK(g2_types == std::set<std::string>{"T", "A1", "A1xA1", "A2", "G2"});
}

TEST_CASE("pseudo-Levis of larger systems are closed and Weyl-stable")
{
    for (const char* name : {"B3", "C3", "G2", "B4", "F4", "D4"}) {
        CAPTURE(name);
        const RootSystemPtr R = build(CartanType::parse(name));
        const auto all = enumerate_pseudo_levis(R);
        const auto k = keys(all);
        for (const auto& s : all) {
            CHECK(is_symmetric(*R, s.roots()));
            CHECK(is_z_closed(*R, s.roots()));
            for (int j = 0; j < R->rank(); ++j) {
                std::vector<int> img;
                for (int a : s.roots())
                    img.push_back(R->reflect_root(a, j));
                std::sort(img.begin(), img.end());
                CHECK(k.count(img) == 1);
            }
        }
    }
    // B4 = so(9): the non-Levi pseudo-Levis include D4, A1xA1xB2 and A1xA3, but
    // no A1^4 (that would need two 4-dimensional eigenspaces of a semisimple element).
    std::set<std::string> b4_types;
    for (const auto& s : enumerate_pseudo_levis(build(CartanType::parse("B4"))))
        b4_types.insert(s.type_name());
    CHECK(b4_types.count("D4") == 1);
    CHECK(b4_types.count("A1xA1xB2") == 1);
    CHECK(b4_types.count("A1xA3") == 1);
    CHECK(b4_types.count("A1xA1xA1xA1") == 0);
}

TEST_CASE("pseudo-Levi minimum in type A is 1/N")
{
    for (int n = 2; n <= 6; ++n) {
        const RootSystemPtr gl = build_gl(n);
        for (const Partition& lambda : enumerate_partitions(n)) {
            CAPTURE(lambda.str());
            const PseudoLeviReport r = epsilon_pseudo_levi(gl, gl_block_levi(gl, lambda));
            CHECK(r.report.value == epsilon_homogeneous_unitary(lambda));
            CHECK(r.simple_derived_value == r.report.value);
            CHECK(r.report.formula_id == "thmF");
        }
        CHECK(epsilon_pseudo_levi(gl, cartan_subsystem(gl)).report.value == ratio(1, n));
    }
}

TEST_CASE("pseudo-Levi minimum against brute-force candidates")
{
    for (const char* name : {"A2", "B2", "G2"}) {
        const RootSystemPtr R = build(CartanType::parse(name));
        const auto brute = closed_subsystems_bruteforce(R);
        for (unsigned mask = 0; mask < (1u << R->rank()); ++mask) {
            std::vector<int> simple;
            for (int i = 0; i < R->rank(); ++i)
                if (mask & (1u << i))
                    simple.push_back(i);
            const Subsystem levi = levi_subsystem(R, simple);
            const PseudoLeviReport r = epsilon_pseudo_levi(R, levi);
            CHECK(r.report.value == half_min(*R, brute, levi));
            if (const auto* w = std::get_if<SubsystemWitness>(&r.report.witness))
                CHECK(ratio(w->rank + 2 * w->b, 2 * (w->a - w->b)) == r.report.value);
        }
    }
    // G2 relative to its long-root A1 (alpha_2).
    const RootSystemPtr G2 = build(CartanType::parse("G2"));
    const PseudoLeviReport g = epsilon_pseudo_levi(G2, levi_subsystem(G2, {1}));
    CHECK(g.report.value == ratio(2, 5));
    CHECK(std::get<SubsystemWitness>(g.report.witness).type == "G2");
    CHECK_THROWS_AS(epsilon_pseudo_levi(build_product(parse_cartan_list("A1,A1")),
                                        cartan_subsystem(build_product(parse_cartan_list("A1,A1")))),
                    InputError);
    const RootSystemPtr B5 = build(CartanType::parse("B5"));
    CHECK_THROWS_AS(epsilon_pseudo_levi(B5, cartan_subsystem(B5)), CapExceeded);
}

TEST_CASE("multiplicity exponent")
{
    CHECK(mult_exponent(ExtRational(1)) == ExtRational(0));
    CHECK(mult_exponent(ratio(2, 5)) == ratio(3, 7));
    CHECK(mult_exponent(ratio(1, 5)) == ratio(2, 3));
    CHECK(mult_exponent(ExtRational(0)) == ExtRational(1));
    CHECK(mult_exponent(ExtRational::infinity()) == ExtRational(-1));
    CHECK_THROWS_AS(mult_exponent(ratio(-1, 2)), InputError);
    ExtRational prev = mult_exponent(ExtRational(0));
    for (int num = 1; num <= 200; ++num) {
        const ExtRational cur = mult_exponent(ratio(num, 17));
        CHECK(cur < prev);
        CHECK(cur > ExtRational(-1));
        prev = cur;
    }
}

TEST_CASE("Fourier and convolution bounds")
{
    FourierBound f = fourier_power_exponent(10, 3);
    CHECK(f.kind == FourierBound::Kind::Exponent);
    CHECK(f.value == ratio(1, 2));
    f = fourier_power_exponent(5, 2);
    CHECK(f.kind == FourierBound::Kind::AbsoluteBound);
    CHECK(f.value == ExtRational(1));
    CHECK(fourier_power_exponent(3, 100).value == ratio(1, 2));
    CHECK_THROWS_AS(fourier_power_exponent(1, 3), InputError);

    auto c = convolution_smoothing(10, 3);
    CHECK((c.k_all_q == 4 && c.k_bounded == 5));
    c = convolution_smoothing(2, 7);
    CHECK((c.k_all_q == 3 && c.k_bounded == 4));
    c = convolution_smoothing(5, 5);
    CHECK((c.k_all_q == 6 && c.k_bounded == 7));
    CHECK_THROWS_AS(convolution_smoothing(5, 1), InputError);
}
