#include "lctkit/cli.hpp"

#include "lctkit/arrangement.hpp"
#include "lctkit/compact_apps.hpp"
#include "lctkit/epsilon.hpp"
#include "lctkit/errors.hpp"
#include "lctkit/partition.hpp"
#include "lctkit/root_system.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace lctkit {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const ExtRational& q)
{
    if (q.is_infinite())
        return "inf";
    return Json{{"num", q.num().str()}, {"den", q.den().str()}};
}

Json to_json(const std::vector<int>& v)
{
    Json out = Json::array();
    for (int x : v)
        out.push_back(x);
    return out;
}

Json to_json(const Witness& w)
{
    struct Visitor {
        Json operator()(const TagWitness& t) const { return t.tag; }
        Json operator()(const IndexWitness& i) const { return Json{{i.name, i.value}}; }
        Json operator()(const FlatWitness& f) const
        {
            return Json{{"flat", to_json(f.vanishing)}, {"r", f.r}, {"a", f.a}, {"b", f.b}};
        }
        Json operator()(const SubsystemWitness& s) const
        {
            return Json{{"subsystem", s.type}, {"positive_roots", to_json(s.positive)}, {"rank", s.rank}, {"a", s.a}, {"b", s.b}};
        }
    };
    return std::visit(Visitor{}, w);
}

Json to_json(const EpsilonReport& r)
{
    return Json{{"epsilon", to_json(r.value)}, {"witness", to_json(r.witness)}, {"formula_id", r.formula_id}};
}

std::string csv_value(const ExtRational& q)
{
    return q.str();
}

struct Options {
    std::string format = "json";
    std::optional<int> cap_rank;
    std::optional<int> cap_n;
    bool oracle = false;

    std::string partition;
    std::string lambda;
    std::string type;
    std::string levi;
    std::string factors;
    std::string epsilon;
    int n = 0;
    int ell = 0;
    std::optional<int> gl;
    int m = 0;

    LatticeCaps caps() const
    {
        LatticeCaps c;
        if (cap_rank) {
            if (*cap_rank < 1)
                throw InputError("--cap-rank must be positive");
            c.type_a_rank = c.other_rank = *cap_rank;
        }
        return c;
    }
};

Json envelope(const std::string& command, Json inputs, Json result)
{
    return Json{{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}, {"version", kVersion}};
}

void require_format(const Options& o, std::initializer_list<const char*> allowed, const std::string& command)
{
    for (const char* f : allowed)
        if (o.format == f)
            return;
    throw InputError("format '" + o.format + "' is not supported by " + command);
}

void emit_json(std::ostream& out, const Json& j)
{
    out << j.dump(2) << '\n';
}

// --- orbit commands -------------------------------------------------------

void cmd_orbit_epsilon(const Options& o, std::ostream& out)
{
    require_format(o, {"json", "csv"}, "orbit-epsilon");
    const Partition nu = Partition::parse(o.partition);
    const EpsilonReport r = epsilon_orbit_gln(nu);
    if (o.format == "csv") {
        out << "partition,epsilon,witness\n" << nu.str() << ',' << csv_value(r.value) << ',' << witness_str(r.witness) << '\n';
        return;
    }
    emit_json(out, envelope("orbit-epsilon", Json{{"partition", nu.str()}}, to_json(r)));
}

void cmd_orbit_poset(const Options& o, std::ostream& out)
{
    if (o.n < 1)
        throw InputError("--n must be at least 1");
    const int cap = o.cap_n.value_or(kDefaultHasseCap);
    const auto parts = enumerate_partitions(o.n, cap);
    const auto edges = dominance_hasse(o.n, cap);
    std::vector<EpsilonReport> reports;
    for (const Partition& p : parts)
        reports.push_back(epsilon_orbit_gln(p));

    if (o.format == "csv") {
        out << "partition,epsilon\n";
        for (std::size_t i = 0; i < parts.size(); ++i)
            out << '"' << parts[i].str() << "\"," << csv_value(reports[i].value) << '\n';
        return;
    }
    if (o.format == "dot") {
        out << "digraph orbit_poset_" << o.n << " {\n  rankdir=TB;\n  node [shape=box];\n";
        for (std::size_t i = 0; i < parts.size(); ++i)
            out << "  \"" << parts[i].str() << "\" [label=\"" << parts[i].str() << "\\nε=" << reports[i].value.pretty()
                << "\"];\n";
        for (const auto& [a, b] : edges)
            out << "  \"" << a.str() << "\" -> \"" << b.str() << "\";\n";
        out << "}\n";
        return;
    }
    Json nodes = Json::array();
    for (std::size_t i = 0; i < parts.size(); ++i)
        nodes.push_back(Json{{"partition", parts[i].str()}, {"epsilon", to_json(reports[i].value)}, {"witness", to_json(reports[i].witness)}});
    Json jedges = Json::array();
    for (const auto& [a, b] : edges)
        jedges.push_back(Json{{"from", a.str()}, {"to", b.str()}});
    emit_json(out, envelope("orbit-poset", Json{{"n", o.n}},
                            Json{{"n", o.n}, {"nodes", std::move(nodes)}, {"edges", std::move(jedges)}}));
}

// --- lct ------------------------------------------------------------------

struct SystemChoice {
    RootSystemPtr R;
    std::vector<CartanType> factors;
    bool is_gl = false;
    std::string label;
};

SystemChoice choose_system(const Options& o)
{
    SystemChoice c;
    if (o.gl) {
        if (!o.type.empty() && o.type != "A" && o.type != "a" && o.type != "gl")
            throw InputError("--gl combines only with --type A");
        if (*o.gl < 2)
            throw InputError("--gl must be at least 2");
        c.R = build_gl(*o.gl);
        c.factors = c.R->factors();
        c.is_gl = true;
        c.label = c.R->label();
        return c;
    }
    if (o.type.empty())
        throw InputError("--type or --gl is required");
    if (o.type == "A" || o.type == "a" || o.type == "gl")
        throw InputError("--type A needs a rank (e.g. A3) or --gl n");
    c.factors = parse_cartan_list(o.type);
    if (c.factors.empty())
        throw InputError("--type is empty");
    c.label = cartan_list_str(c.factors);
    return c;
}

Subsystem parse_levi(const SystemChoice& c, const std::string& text)
{
    if (c.is_gl)
        return gl_block_levi(c.R, Partition::parse(text));
    std::vector<int> simple;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int idx = 0;
        try {
            std::size_t used = 0;
            idx = std::stoi(tok, &used);
            if (used != tok.size())
                throw InputError("");
        } catch (const std::exception&) {
            throw InputError("bad simple-root index '" + tok + "' in --levi");
        }
        if (idx < 1 || idx > c.R->rank())
            throw InputError("simple-root index out of range in --levi: " + tok);
        simple.push_back(idx - 1);
    }
    return levi_subsystem(c.R, simple);
}

void cmd_lct(const Options& o, std::ostream& out)
{
    require_format(o, {"json"}, "lct");
    if (o.m < 0)
        throw InputError("--m must be non-negative");
    SystemChoice c = choose_system(o);
    const LatticeCaps caps = o.caps();
    Json inputs{{"system", c.label}, {"levi", o.levi.empty() ? Json("cartan") : Json(o.levi)}, {"m", o.m}, {"oracle", o.oracle}};

    const bool need_roots = o.oracle || !o.levi.empty();
    if (need_roots && !c.R)
        c.R = build_product(c.factors);

    Json result;
    EpsilonReport closed;
    std::optional<Subsystem> levi;
    if (o.levi.empty()) {
        if (c.is_gl)
            closed = rlct_weyl_disc(Partition(std::vector<int>(static_cast<std::size_t>(*o.gl), 1)), o.m);
        else
            closed = {lct_reductive(c.factors), TagWitness{"torus"}, c.factors.size() == 1 ? "prop3.5" : "cor3.6"};
        if (need_roots)
            levi = cartan_subsystem(c.R);
    } else {
        levi = parse_levi(c, o.levi);
        if (c.is_gl)
            closed = rlct_weyl_disc(Partition::parse(o.levi), o.m);
        else
            closed = general_relative_lct(c.R, *levi, o.m, caps);
    }
    result["closed_form"] = to_json(closed);
    if (o.oracle) {
        const OracleResult orc = relative_lct_oracle(c.R, *levi, o.m, caps);
        Json w = "full-levi";
        if (orc.witness) {
            int b = 0;
            for (int alpha : orc.witness->vanishing)
                b += levi->contains(alpha);
            w = to_json(Witness{FlatWitness{orc.witness->vanishing, orc.witness->r, orc.witness->s, b}});
        }
        result["oracle"] = Json{{"epsilon", to_json(orc.value)}, {"witness", w}};
        const bool agree = orc.value == closed.value;
        result["agree"] = agree;
        if (!agree)
            throw InternalError("closed form " + closed.value.str() + " disagrees with oracle " + orc.value.str());
    }
    emit_json(out, envelope("lct", std::move(inputs), std::move(result)));
}

void cmd_coxeter(const Options& o, std::ostream& out)
{
    require_format(o, {"json"}, "coxeter");
    const std::vector<CartanType> types = parse_cartan_list(o.type);
    if (types.empty())
        throw InputError("--type is required");
    Json rows = Json::array();
    for (const CartanType& t : types) {
        const RootSystemPtr R = build(t);
        if (R->num_roots() % R->rank() != 0 || R->num_roots() / R->rank() != coxeter_number(t))
            throw InternalError("Coxeter number table disagrees with root count for " + t.str());
        const int h = R->num_roots() / R->rank();
        rows.push_back(Json{{"type", t.str()}, {"rank", R->rank()}, {"num_roots", R->num_roots()}, {"h", h}, {"lct", to_json(ratio(2, h))}});
    }
    emit_json(out, envelope("coxeter", Json{{"type", cartan_list_str(types)}}, std::move(rows)));
}

// --- compact applications ---------------------------------------------------

void cmd_power_measure(const Options& o, std::ostream& out)
{
    require_format(o, {"json"}, "power-measure");
    const PowerMeasureSpec spec = make_power_measure_spec(o.n, o.ell);
    const ExtRational eps = epsilon_power_measure(spec);
    emit_json(out, envelope("power-measure", Json{{"n", o.n}, {"ell", o.ell}},
                            Json{{"epsilon", to_json(eps)}, {"levi_partition", spec.levi_partition.str()}, {"j", spec.j}, {"ell_tilde", spec.ell_tilde}}));
}

void cmd_homogeneous(const Options& o, std::ostream& out)
{
    require_format(o, {"json"}, "homogeneous");
    const Partition lambda = Partition::parse(o.lambda);
    emit_json(out, envelope("homogeneous", Json{{"lambda", lambda.str()}},
                            Json{{"epsilon", to_json(epsilon_homogeneous_unitary(lambda))}, {"parts", lambda.length()}}));
}

void cmd_pseudo_levi(const Options& o, std::ostream& out)
{
    require_format(o, {"json"}, "pseudo-levi");
    SystemChoice c = choose_system(o);
    if (!c.R) {
        if (c.factors.size() != 1)
            throw InputError("pseudo-levi needs a single irreducible type");
        c.R = build(c.factors.front());
    }
    const Subsystem levi = o.levi.empty() ? cartan_subsystem(c.R) : parse_levi(c, o.levi);
    const PseudoLeviReport rep = epsilon_pseudo_levi(c.R, levi, o.caps());
    Json result = to_json(rep.report);
    result["simple_derived_epsilon"] = to_json(rep.simple_derived_value);
    result["candidates"] = rep.candidates;
    emit_json(out, envelope("pseudo-levi", Json{{"system", c.label}, {"levi", o.levi.empty() ? Json("cartan") : Json(o.levi)}},
                            std::move(result)));
}

void cmd_mult_exponent(const Options& o, std::ostream& out)
{
    require_format(o, {"json"}, "mult-exponent");
    const ExtRational eps = ExtRational::parse(o.epsilon);
    emit_json(out, envelope("mult-exponent", Json{{"epsilon", to_json(eps)}}, Json{{"exponent", to_json(mult_exponent(eps))}}));
}

void cmd_fourier_exponent(const Options& o, std::ostream& out)
{
    require_format(o, {"json"}, "fourier-exponent");
    const FourierBound fb = fourier_power_exponent(o.n, o.ell);
    const char* kind = fb.kind == FourierBound::Kind::Exponent ? "exponent" : "absolute_bound";
    emit_json(out, envelope("fourier-exponent", Json{{"n", o.n}, {"ell", o.ell}}, Json{{"kind", kind}, {"value", to_json(fb.value)}}));
}

void cmd_convolution(const Options& o, std::ostream& out)
{
    require_format(o, {"json"}, "convolution");
    const ConvolutionSmoothing cs = convolution_smoothing(o.n, o.ell);
    emit_json(out, envelope("convolution", Json{{"n", o.n}, {"ell", o.ell}}, Json{{"k_all_q", cs.k_all_q}, {"k_bounded", cs.k_bounded}}));
}

void cmd_rep_bound(const Options& o, std::ostream& out)
{
    require_format(o, {"json"}, "rep-bound");
    const std::vector<CartanType> factors = parse_cartan_list(o.factors);
    emit_json(out, envelope("rep-bound", Json{{"factors", cartan_list_str(factors)}},
                            Json{{"epsilon_lower_bound", to_json(lower_bound_representation(factors))}}));
}

} // namespace

CliResult run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    Options o;
    CLI::App app{"Exact integrability exponents and log-canonical thresholds for root systems.", "lctkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot"}));
    app.add_option("--cap-rank", o.cap_rank, "Semisimple-rank cap for brute-force enumeration");
    app.add_option("--cap-n", o.cap_n, "Cap on n for partition enumeration");
    app.add_flag("--oracle", o.oracle, "Also evaluate the brute-force arrangement oracle");

    std::function<void(const Options&, std::ostream&)> handler;
    auto sub = [&](const char* name, const char* help, void (*fn)(const Options&, std::ostream&)) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&handler, fn] { handler = fn; });
        return s;
    };

    sub("orbit-epsilon", "Exponent of a nilpotent orbit of gl_n", cmd_orbit_epsilon)
        ->add_option("--partition", o.partition, "Jordan type, e.g. 6,4 or 2^5")
        ->required();
    sub("orbit-poset", "All orbits of gl_n with exponents and closure order", cmd_orbit_poset)
        ->add_option("--n", o.n, "Matrix size")
        ->required();
    {
        CLI::App* s = sub("lct", "Closed-form (relative) log-canonical threshold", cmd_lct);
        s->add_option("--type", o.type, "Cartan type(s), e.g. A2 or A4,D4; use A with --gl");
        s->add_option("--gl", o.gl, "Use the gl_n realization");
        s->add_option("--levi", o.levi, "Levi: block sizes for gl_n, 1-based simple roots otherwise");
        s->add_option("--m", o.m, "Power of the Levi discriminant");
    }
    sub("coxeter", "Coxeter numbers from root counts", cmd_coxeter)->add_option("--type", o.type, "Cartan type(s)")->required();
    {
        CLI::App* s = sub("power-measure", "Exponent of the l-th power of Haar-random unitaries", cmd_power_measure);
        s->add_option("--n", o.n)->required();
        s->add_option("--ell", o.ell)->required();
    }
    sub("homogeneous", "Exponent of L^2(U_n / U_lambda)", cmd_homogeneous)->add_option("--lambda", o.lambda)->required();
    {
        CLI::App* s = sub("pseudo-levi", "Pseudo-Levi minimum for L^2(K/L)", cmd_pseudo_levi);
        s->add_option("--type", o.type, "Irreducible Cartan type; use A with --gl");
        s->add_option("--gl", o.gl, "Use the gl_n realization");
        s->add_option("--levi", o.levi, "Levi: block sizes for gl_n, 1-based simple roots otherwise");
    }
    sub("mult-exponent", "K-type multiplicity exponent for a given epsilon", cmd_mult_exponent)
        ->add_option("--epsilon", o.epsilon, "p/q or inf")
        ->required();
    {
        CLI::App* s = sub("fourier-exponent", "Fourier coefficient bound for power measures", cmd_fourier_exponent);
        s->add_option("--n", o.n)->required();
        s->add_option("--ell", o.ell)->required();
    }
    {
        CLI::App* s = sub("convolution", "Convolution powers giving L^q and bounded densities", cmd_convolution);
        s->add_option("--n", o.n)->required();
        s->add_option("--ell", o.ell)->required();
    }
    sub("rep-bound", "Lower bound for representations with given simple factors", cmd_rep_bound)
        ->add_option("--factors", o.factors, "e.g. A5,D4")
        ->required();

    std::vector<std::string> argv_store{"lctkit"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    CliResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return {0, out.str(), err.str()};
    } catch (const CLI::CallForVersion& e) {
        app.exit(e, out, err);
        return {0, out.str(), err.str()};
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return {2, out.str(), err.str()};
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return {2, out.str(), err.str()};
    }

    try {
        std::ostringstream payload;
        handler(o, payload);
        out << payload.str();
        result.exit_code = 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = 2;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        result.exit_code = 4;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace lctkit
