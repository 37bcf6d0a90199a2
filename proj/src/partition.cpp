#include "lctkit/partition.hpp"

#include "lctkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

namespace lctkit {

Partition::Partition(std::vector<int> parts)
{
    for (int p : parts) {
        if (p < 0)
            throw InputError("partition parts must be non-negative");
    }
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

int parse_positive(std::string_view tok, std::string_view whole)
{
    if (tok.empty() || tok.size() > 6)
        throw InputError("malformed partition '" + std::string(whole) + "'");
    int v = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InputError("malformed partition '" + std::string(whole) + "'");
        v = v * 10 + (c - '0');
    }
    return v;
}

std::string_view strip(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

} // namespace

Partition Partition::parse(std::string_view text)
{
    std::string_view s = strip(text);
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = strip(s.substr(1, s.size() - 2));
    std::vector<int> parts;
    if (s.empty())
        return Partition();
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string_view tok = strip(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
        auto caret = tok.find('^');
        if (caret == std::string_view::npos) {
            parts.push_back(parse_positive(tok, text));
        } else {
            int value = parse_positive(strip(tok.substr(0, caret)), text);
            int count = parse_positive(strip(tok.substr(caret + 1)), text);
            if (count > 10000)
                throw InputError("exponent too large in '" + std::string(text) + "'");
            parts.insert(parts.end(), count, value);
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::str() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        os << (i ? "," : "") << parts_[i];
    return os.str();
}

std::string Partition::compact_str() const
{
    std::ostringstream os;
    std::size_t i = 0;
    bool first = true;
    while (i < parts_.size()) {
        std::size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i])
            ++j;
        os << (first ? "" : ",") << parts_[i];
        if (j - i > 1)
            os << '^' << (j - i);
        first = false;
        i = j;
    }
    return os.str();
}

long long binom2(long long m)
{
    return m < 2 ? 0 : m * (m - 1) / 2;
}

Partition conjugate(const Partition& p)
{
    std::vector<int> cols(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j)
            ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

bool dominates(const Partition& p, const Partition& q)
{
    if (p.size() != q.size())
        throw InputError("incomparable sizes");
    long long sp = 0, sq = 0;
    std::size_t len = static_cast<std::size_t>(std::max(p.length(), q.length()));
    for (std::size_t u = 0; u < len; ++u) {
        sp += p.part(u);
        sq += q.part(u);
        if (sp < sq)
            return false;
    }
    return true;
}

bool closure_leq(const Partition& orbit_a, const Partition& orbit_b)
{
    return dominates(orbit_b, orbit_a);
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        enumerate_rec(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_partitions(int n, int cap)
{
    if (n < 0)
        throw InputError("n must be non-negative");
    if (n > cap)
        throw CapExceeded("partition enumeration cap exceeded: n=" + std::to_string(n) + " > " + std::to_string(cap));
    std::vector<Partition> out;
    std::vector<int> prefix;
    enumerate_rec(n, n, prefix, out);
    return out;
}

FillStats fill_stats(const Partition& nu, int k)
{
    if (k < 0 || k > nu.size())
        throw InputError("k out of range for fill_stats");
    Partition lambda = conjugate(nu); // column lengths
    FillStats st;
    st.k = k;
    st.phi.reserve(static_cast<std::size_t>(k));
    std::vector<int> rows;
    int column = 0;
    int filled_in_column = 0;
    for (int u = 1; u <= k; ++u) {
        while (filled_in_column == lambda[static_cast<std::size_t>(column)]) {
            ++column;
            filled_in_column = 0;
        }
        st.phi.push_back(column + 1);
        st.psi += column;
        if (static_cast<int>(rows.size()) <= filled_in_column)
            rows.push_back(0);
        ++rows[static_cast<std::size_t>(filled_in_column)];
        ++filled_in_column;
    }
    st.eta_min = Partition(std::move(rows));
    return st;
}

std::vector<std::pair<Partition, Partition>> dominance_hasse(int n, int cap)
{
    if (n > cap)
        throw CapExceeded("Hasse diagram cap exceeded: n=" + std::to_string(n) + " > " + std::to_string(cap));
    std::vector<Partition> all = enumerate_partitions(n, cap);
    const std::size_t count = all.size();
    std::vector<std::vector<char>> strictly(count, std::vector<char>(count, 0));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            strictly[i][j] = i != j && dominates(all[i], all[j]);

    std::vector<std::pair<Partition, Partition>> edges;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = 0; j < count; ++j) {
            if (!strictly[i][j])
                continue;
            bool covering = true;
            for (std::size_t r = 0; r < count && covering; ++r)
                covering = !(strictly[i][r] && strictly[r][j]);
            if (covering)
                edges.emplace_back(all[i], all[j]);
        }
    }
    return edges;
}

} // namespace lctkit
