#include "lctkit/root_system.hpp"

#include "lctkit/errors.hpp"
#include "lctkit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace lctkit {

// ---------------------------------------------------------------- CartanType

void CartanType::validate() const
{
    bool ok = false;
    switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
    }
    if (!ok)
        throw InputError("invalid rank " + std::to_string(rank) + " for Cartan type " + str());
}

std::string CartanType::str() const
{
    static constexpr char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    return letters[static_cast<int>(family)] + std::to_string(rank);
}

CartanType CartanType::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    if (text.size() < 2 || text.size() > 4)
        throw InputError("malformed Cartan type '" + std::string(text) + "'");
    CartanType t;
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': t.family = Family::A; break;
    case 'B': t.family = Family::B; break;
    case 'C': t.family = Family::C; break;
    case 'D': t.family = Family::D; break;
    case 'E': t.family = Family::E; break;
    case 'F': t.family = Family::F; break;
    case 'G': t.family = Family::G; break;
    default: throw InputError("unknown Cartan family in '" + std::string(text) + "'");
    }
    int r = 0;
    for (char c : text.substr(1)) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("malformed Cartan type '" + std::string(text) + "'");
        r = r * 10 + (c - '0');
    }
    t.rank = r;
    t.validate();
    return t;
}

std::vector<CartanType> parse_cartan_list(std::string_view text)
{
    std::vector<CartanType> out;
    std::size_t start = 0;
    bool blank = std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (blank)
        return out;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(CartanType::parse(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::string cartan_list_str(const std::vector<CartanType>& types)
{
    std::string s;
    for (std::size_t i = 0; i < types.size(); ++i)
        s += (i ? "," : "") + types[i].str();
    return s;
}

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(IntMatrix simple_roots, IntMatrix gram, std::vector<CartanType> factors, std::string label)
    : label_(std::move(label)), factors_(std::move(factors)), gram_(std::move(gram)), simple_(std::move(simple_roots))
{
    const std::size_t dim = gram_.size();
    const std::size_t r = simple_.size();
    for (const auto& row : gram_)
        if (row.size() != dim)
            throw InputError("pairing matrix must be square");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw InputError("pairing matrix must be symmetric");
    for (const auto& a : simple_)
        if (a.size() != dim)
            throw InputError("simple root dimension mismatch");
    if (rank_of_simple() != static_cast<int>(r))
        throw InputError("simple roots are linearly dependent");

    // Reflection closure, tracking simple-root coordinates alongside.
    std::map<IntVec, IntVec> found;
    std::deque<std::pair<IntVec, IntVec>> queue;
    for (std::size_t s = 0; s < r; ++s) {
        IntVec c(r, 0);
        c[s] = 1;
        found.emplace(simple_[s], c);
        queue.emplace_back(simple_[s], c);
    }
    while (!queue.empty()) {
        auto [v, c] = queue.front();
        queue.pop_front();
        for (std::size_t s = 0; s < r; ++s) {
            const std::int64_t k = coroot_pairing_simple(v, s);
            if (k == 0)
                continue;
            IntVec w = v;
            IntVec d = c;
            for (std::size_t t = 0; t < dim; ++t)
                w[t] -= k * simple_[s][t];
            d[s] -= k;
            if (found.emplace(w, d).second)
                queue.emplace_back(std::move(w), std::move(d));
        }
    }

    std::vector<std::pair<IntVec, IntVec>> positives;
    for (const auto& [v, c] : found) {
        bool nonneg = std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x >= 0; });
        bool nonpos = std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x <= 0; });
        if (!nonneg && !nonpos)
            throw InputError("root with mixed-sign coordinates: not a simple system");
        if (nonneg)
            positives.emplace_back(v, c);
    }
    if (positives.size() * 2 != found.size())
        throw InputError("root set is not symmetric");
    std::sort(positives.begin(), positives.end(), [](const auto& a, const auto& b) {
        auto ha = std::accumulate(a.second.begin(), a.second.end(), std::int64_t{0});
        auto hb = std::accumulate(b.second.begin(), b.second.end(), std::int64_t{0});
        if (ha != hb)
            return ha < hb;
        return a.second > b.second;
    });
    for (const auto& [v, c] : positives) {
        vectors_.push_back(v);
        coeffs_.push_back(c);
    }
    for (const auto& [v, c] : positives) {
        IntVec nv = v, nc = c;
        for (auto& x : nv)
            x = -x;
        for (auto& x : nc)
            x = -x;
        vectors_.push_back(std::move(nv));
        coeffs_.push_back(std::move(nc));
    }
    for (int i = 0; i < num_roots(); ++i)
        index_.emplace(vectors_[static_cast<std::size_t>(i)], i);
    for (int s = 0; s < rank(); ++s)
        if (index_.at(simple_[static_cast<std::size_t>(s)]) != s)
            throw InternalError("simple roots not placed first");

    const auto n = static_cast<std::size_t>(num_roots());
    sum_.assign(n * n, -1);
    refl_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            IntVec s = vectors_[i];
            for (std::size_t t = 0; t < dim; ++t)
                s[t] += vectors_[j][t];
            sum_[i * n + j] = index_of(s);
            refl_[i * n + j] = index_of(reflect(vectors_[i], static_cast<int>(j)));
            if (refl_[i * n + j] < 0)
                throw InternalError("root set not closed under reflections");
        }
    }
}

int RootSystem::rank_of_simple() const
{
    return lctkit::rank(simple_);
}

std::int64_t RootSystem::coroot_pairing_simple(const IntVec& v, std::size_t s) const
{
    const std::int64_t num = 2 * pairing(v, simple_[s]);
    const std::int64_t den = pairing(simple_[s], simple_[s]);
    if (den <= 0 || num % den != 0)
        throw InputError("pairing is not crystallographic");
    return num / den;
}

bool RootSystem::all_type_a() const
{
    return std::all_of(factors_.begin(), factors_.end(), [](const CartanType& t) { return t.family == Family::A; });
}

int RootSystem::height(int i) const
{
    const auto& c = coeffs(i);
    return static_cast<int>(std::accumulate(c.begin(), c.end(), std::int64_t{0}));
}

int RootSystem::index_of(const IntVec& v) const
{
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

std::int64_t RootSystem::pairing(const IntVec& a, const IntVec& b) const
{
    std::int64_t s = 0;
    for (std::size_t i = 0; i < gram_.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < gram_.size(); ++j)
            s += a[i] * gram_[i][j] * b[j];
    }
    return s;
}

std::int64_t RootSystem::coroot_pairing(const IntVec& v, int j) const
{
    const IntVec& a = root(j);
    const std::int64_t num = 2 * pairing(v, a);
    const std::int64_t den = pairing(a, a);
    if (num % den != 0)
        throw InputError("vector is not in the weight lattice of this root");
    return num / den;
}

IntVec RootSystem::reflect(const IntVec& v, int j) const
{
    const std::int64_t k = coroot_pairing(v, j);
    IntVec w = v;
    const IntVec& a = root(j);
    for (std::size_t t = 0; t < w.size(); ++t)
        w[t] -= k * a[t];
    return w;
}

int RootSystem::sum_root(int i, int j) const
{
    return sum_[static_cast<std::size_t>(i) * static_cast<std::size_t>(num_roots()) + static_cast<std::size_t>(j)];
}

int RootSystem::reflect_root(int i, int j) const
{
    return refl_[static_cast<std::size_t>(i) * static_cast<std::size_t>(num_roots()) + static_cast<std::size_t>(j)];
}

IntMatrix RootSystem::reflection_matrix(int j) const
{
    const std::size_t dim = ambient_dim();
    const IntVec& a = root(j);
    const std::int64_t aa = pairing(a, a);
    IntMatrix m(dim, IntVec(dim, 0));
    for (std::size_t col = 0; col < dim; ++col) {
        IntVec e(dim, 0);
        e[col] = 1;
        const std::int64_t num = 2 * pairing(e, a);
        if (num % aa != 0)
            throw InputError("reflection is not integral in this realization");
        const std::int64_t k = num / aa;
        for (std::size_t row = 0; row < dim; ++row)
            m[row][col] = e[row] - k * a[row];
    }
    return m;
}

// ---------------------------------------------------------------- builders

namespace {

/// Symmetrized Cartan matrix: short roots have squared length 2.
IntMatrix gram_for(const CartanType& t)
{
    const auto r = static_cast<std::size_t>(t.rank);
    IntMatrix g(r, IntVec(r, 0));
    auto link = [&](std::size_t i, std::size_t j, std::int64_t v) { g[i][j] = g[j][i] = v; };
    for (std::size_t i = 0; i < r; ++i)
        g[i][i] = 2;
    switch (t.family) {
    case Family::A:
        for (std::size_t i = 0; i + 1 < r; ++i)
            link(i, i + 1, -1);
        break;
    case Family::B:
        for (std::size_t i = 0; i + 1 < r; ++i) {
            g[i][i] = 4;
            link(i, i + 1, -2);
        }
        break;
    case Family::C:
        for (std::size_t i = 0; i + 2 < r; ++i)
            link(i, i + 1, -1);
        g[r - 1][r - 1] = 4;
        link(r - 2, r - 1, -2);
        break;
    case Family::D:
        for (std::size_t i = 0; i + 2 < r; ++i)
            link(i, i + 1, -1);
        link(r - 3, r - 1, -1);
        break;
    case Family::E:
        link(0, 2, -1);
        link(2, 3, -1);
        link(1, 3, -1);
        for (std::size_t i = 3; i + 1 < r; ++i)
            link(i, i + 1, -1);
        break;
    case Family::F:
        g[0][0] = g[1][1] = 4;
        link(0, 1, -2);
        link(1, 2, -2);
        link(2, 3, -1);
        break;
    case Family::G:
        g[1][1] = 6;
        link(0, 1, -3);
        break;
    }
    return g;
}

IntMatrix identity(std::size_t n)
{
    IntMatrix m(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

} // namespace

RootSystemPtr build(const CartanType& type)
{
    type.validate();
    const auto r = static_cast<std::size_t>(type.rank);
    return std::make_shared<const RootSystem>(identity(r), gram_for(type), std::vector<CartanType>{type}, type.str());
}

RootSystemPtr build_product(const std::vector<CartanType>& types)
{
    std::size_t dim = 0;
    for (const auto& t : types) {
        t.validate();
        dim += static_cast<std::size_t>(t.rank);
    }
    IntMatrix gram(dim, IntVec(dim, 0));
    std::size_t off = 0;
    for (const auto& t : types) {
        IntMatrix g = gram_for(t);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                gram[off + i][off + j] = g[i][j];
        off += g.size();
    }
    return std::make_shared<const RootSystem>(identity(dim), std::move(gram), types, cartan_list_str(types));
}

RootSystemPtr build_gl(int n)
{
    if (n < 1)
        throw InputError("gl_n requires n >= 1");
    const auto dim = static_cast<std::size_t>(n);
    IntMatrix simple;
    for (std::size_t i = 0; i + 1 < dim; ++i) {
        IntVec v(dim, 0);
        v[i] = 1;
        v[i + 1] = -1;
        simple.push_back(std::move(v));
    }
    std::vector<CartanType> factors;
    if (n >= 2)
        factors.push_back(CartanType{Family::A, n - 1});
    return std::make_shared<const RootSystem>(std::move(simple), identity(dim), std::move(factors), "gl_" + std::to_string(n));
}

int coxeter_number(const CartanType& type)
{
    auto R = build(type);
    if (R->num_roots() % R->rank() != 0)
        throw InternalError("root count not divisible by rank for " + type.str());
    return R->num_roots() / R->rank();
}

// ---------------------------------------------------------------- Subsystem

bool is_symmetric(const RootSystem& R, const std::vector<int>& sorted_roots)
{
    for (int a : sorted_roots)
        if (!std::binary_search(sorted_roots.begin(), sorted_roots.end(), R.negate(a)))
            return false;
    return true;
}

bool is_z_closed(const RootSystem& R, const std::vector<int>& sorted_roots)
{
    std::vector<char> in(static_cast<std::size_t>(R.num_roots()), 0);
    for (int a : sorted_roots)
        in[static_cast<std::size_t>(a)] = 1;
    for (int a : sorted_roots)
        for (int b : sorted_roots) {
            int s = R.sum_root(a, b);
            if (s >= 0 && !in[static_cast<std::size_t>(s)])
                return false;
        }
    return true;
}

Subsystem::Subsystem(RootSystemPtr parent, std::vector<int> roots) : parent_(std::move(parent)), roots_(std::move(roots))
{
    std::sort(roots_.begin(), roots_.end());
    roots_.erase(std::unique(roots_.begin(), roots_.end()), roots_.end());
    for (int a : roots_)
        if (a < 0 || a >= parent_->num_roots())
            throw InputError("root index out of range");
    if (!is_symmetric(*parent_, roots_))
        throw InputError("subsystem is not symmetric");
    if (!is_z_closed(*parent_, roots_))
        throw InputError("subsystem is not closed under root addition");
}

Subsystem Subsystem::trusted(RootSystemPtr parent, std::vector<int> roots)
{
    Subsystem s;
    s.parent_ = std::move(parent);
    s.roots_ = std::move(roots);
    return s;
}

std::vector<int> Subsystem::positive() const
{
    std::vector<int> out;
    for (int a : roots_)
        if (parent_->is_positive(a))
            out.push_back(a);
    return out;
}

bool Subsystem::contains(int root) const
{
    return std::binary_search(roots_.begin(), roots_.end(), root);
}

int Subsystem::rank() const
{
    IntMatrix rows;
    for (int a : positive())
        rows.push_back(parent_->root(a));
    return lctkit::rank(rows);
}

std::string irreducible_type_name(int rank, int num_roots, int num_long)
{
    const int r = rank;
    auto name = [](char c, int k) { return std::string(1, c) + std::to_string(k); };
    if (num_long == 0) {
        if (num_roots == r * (r + 1))
            return name('A', r);
        if (r >= 4 && num_roots == 2 * r * (r - 1))
            return name('D', r);
        if (num_roots == 72 && r == 6)
            return "E6";
        if (num_roots == 126 && r == 7)
            return "E7";
        if (num_roots == 240 && r == 8)
            return "E8";
    } else {
        if (r == 2 && num_roots == 12)
            return "G2";
        if (r == 4 && num_roots == 48)
            return "F4";
        if (num_roots == 2 * r * r) {
            if (r == 2 || num_long == 2 * r * (r - 1))
                return name('B', r);
            return name('C', r);
        }
    }
    throw InternalError("unrecognized irreducible root system");
}

std::string Subsystem::type_name() const
{
    if (empty())
        return "T";
    std::vector<std::string> names;
    for (const auto& c : components(*this)) {
        std::int64_t maxlen = 0, minlen = 0;
        for (int a : c.roots()) {
            std::int64_t l = parent_->pairing_roots(a, a);
            maxlen = std::max(maxlen, l);
            minlen = minlen == 0 ? l : std::min(minlen, l);
        }
        int num_long = 0;
        if (maxlen != minlen)
            for (int a : c.roots())
                num_long += parent_->pairing_roots(a, a) == maxlen;
        names.push_back(irreducible_type_name(c.rank(), c.size(), num_long));
    }
    std::sort(names.begin(), names.end());
    std::string s;
    for (std::size_t i = 0; i < names.size(); ++i)
        s += (i ? "x" : "") + names[i];
    return s;
}

Subsystem full_subsystem(const RootSystemPtr& R)
{
    std::vector<int> all(static_cast<std::size_t>(R->num_roots()));
    std::iota(all.begin(), all.end(), 0);
    return Subsystem::trusted(R, std::move(all));
}

Subsystem cartan_subsystem(const RootSystemPtr& R)
{
    return Subsystem::trusted(R, {});
}

std::vector<Subsystem> components(const Subsystem& S)
{
    const auto& R = *S.parent();
    const auto& roots = S.roots();
    const std::size_t n = roots.size();
    std::vector<int> comp(n, -1);
    int next = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (comp[start] >= 0)
            continue;
        comp[start] = next;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j)
                if (comp[j] < 0 && R.pairing_roots(roots[i], roots[j]) != 0) {
                    comp[j] = next;
                    stack.push_back(j);
                }
        }
        ++next;
    }
    std::vector<std::vector<int>> parts(static_cast<std::size_t>(next));
    for (std::size_t i = 0; i < n; ++i)
        parts[static_cast<std::size_t>(comp[i])].push_back(roots[i]);
    std::vector<Subsystem> out;
    for (auto& p : parts)
        out.push_back(Subsystem::trusted(S.parent(), std::move(p)));
    std::sort(out.begin(), out.end(), [](const Subsystem& a, const Subsystem& b) { return a.roots() < b.roots(); });
    return out;
}

Subsystem levi_subsystem(const RootSystemPtr& R, const std::vector<int>& simple_subset)
{
    std::vector<char> chosen(static_cast<std::size_t>(R->rank()), 0);
    for (int s : simple_subset) {
        if (s < 0 || s >= R->rank())
            throw InputError("simple root index out of range: " + std::to_string(s + 1));
        chosen[static_cast<std::size_t>(s)] = 1;
    }
    std::vector<int> roots;
    for (int i = 0; i < R->num_roots(); ++i) {
        const auto& c = R->coeffs(i);
        bool inside = true;
        for (std::size_t s = 0; s < c.size() && inside; ++s)
            inside = c[s] == 0 || chosen[s];
        if (inside)
            roots.push_back(i);
    }
    return Subsystem::trusted(R, std::move(roots));
}

Subsystem gl_block_levi(const RootSystemPtr& gl, const std::vector<int>& blocks)
{
    int total = 0;
    for (int b : blocks) {
        if (b <= 0)
            throw InputError("Levi block sizes must be positive");
        total += b;
    }
    if (total != static_cast<int>(gl->ambient_dim()) || gl->label().rfind("gl_", 0) != 0)
        throw InputError("Levi blocks must partition n of a gl_n system");
    std::vector<int> simple;
    int pos = 0;
    for (int b : blocks) {
        for (int i = 0; i + 1 < b; ++i)
            simple.push_back(pos + i);
        pos += b;
    }
    return levi_subsystem(gl, simple);
}

Subsystem gl_block_levi(const RootSystemPtr& gl, const Partition& blocks)
{
    return gl_block_levi(gl, blocks.parts());
}

int highest_root(const RootSystem& R)
{
    int best = -1;
    int best_height = 0;
    bool tie = false;
    for (int i = 0; i < R.num_positive(); ++i) {
        const int h = R.height(i);
        if (h > best_height) {
            best = i;
            best_height = h;
            tie = false;
        } else if (h == best_height) {
            tie = true;
        }
    }
    if (best < 0 || tie)
        throw InputError("highest root is not unique: system is not irreducible");
    return best;
}

std::vector<int> extended_simple_roots(const RootSystemPtr& R)
{
    if (components(full_subsystem(R)).size() != 1)
        throw InputError("extended simple roots require an irreducible root system");
    std::vector<int> out;
    for (int s = 0; s < R->rank(); ++s)
        out.push_back(R->simple_index(s));
    out.push_back(R->negate(highest_root(*R)));
    return out;
}

} // namespace lctkit
