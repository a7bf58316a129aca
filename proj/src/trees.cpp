#include "dbclosure/trees.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "dbclosure/errors.hpp"

namespace dbclosure {

namespace {

int parse_positive(std::string_view tok, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad starlike spec '" + std::string(whole) + "'");
    if (value < 1)
        throw InvalidArgument("branch lengths and multiplicities must be >= 1 in '" + std::string(whole) + "'");
    return value;
}

// Canonical shape of a starlike spec, if it names one of the families.
enum class Shape { Star, S2, S22, S3, None };

Shape shape_of(std::vector<int> lengths) {
    std::sort(lengths.rbegin(), lengths.rend());
    const auto ones = std::count(lengths.begin(), lengths.end(), 1);
    const auto k = static_cast<long>(lengths.size());
    if (ones == k)
        return Shape::Star;
    if (lengths[0] == 2 && ones == k - 1)
        return Shape::S2;
    if (k >= 2 && lengths[0] == 2 && lengths[1] == 2 && ones == k - 2)
        return Shape::S22;
    if (lengths[0] == 3 && ones == k - 1)
        return Shape::S3;
    return Shape::None;
}

Graph canonical_tree(FamilyTag tag, int m) {
    const int y = m + 1, z = m + 2;
    const int n = (tag == FamilyTag::Star) ? m + 1 : (tag == FamilyTag::S2) ? m + 2 : m + 3;
    Graph g(n);
    for (int i = 1; i <= m; ++i)
        g.add_edge(0, i);
    switch (tag) {
    case FamilyTag::Star:
        break;
    case FamilyTag::S2:
        g.add_edge(1, y);
        break;
    case FamilyTag::S22:
        g.add_edge(1, y);
        g.add_edge(2, z);
        break;
    case FamilyTag::Broom:
        g.add_edge(1, y);
        g.add_edge(1, z);
        break;
    case FamilyTag::S3:
        g.add_edge(1, y);
        g.add_edge(y, z);
        break;
    default:
        throw UnsupportedFamily("no canonical tree for family " + std::string(to_string(tag)));
    }
    return g;
}

// Canonical relabeling: centre -> 0, the x-vertices listed first in
// `leading` keep that order, remaining neighbours of the centre follow in
// ascending input order, then `tail` (y, z).
std::vector<int> build_relabeling(const Graph &t, int center, const std::vector<int> &leading,
                                  const std::vector<int> &tail) {
    std::vector<int> perm(t.order(), -1);
    perm[center] = 0;
    int next = 1;
    for (int x : leading)
        perm[x] = next++;
    t.for_each_neighbor(center, [&](int x) {
        if (perm[x] < 0)
            perm[x] = next++;
    });
    for (int v : tail)
        perm[v] = next++;
    return perm;
}

int only_neighbor_among(const Graph &t, int v, int center) {
    int found = -1;
    t.for_each_neighbor(v, [&](int w) {
        if (t.has_edge(center, w))
            found = w;
    });
    return found;
}

TreeFamily classify_n_minus_3(const Graph &t, int center, int m) {
    const int n = t.order();
    std::vector<int> outside;
    for (int v = 0; v < n; ++v)
        if (v != center && !t.has_edge(center, v))
            outside.push_back(v);
    const int p = outside[0], q = outside[1];

    if (t.has_edge(p, q)) {
        // path o - x_1 - y - z
        const bool p_hangs = only_neighbor_among(t, p, center) >= 0;
        const int y = p_hangs ? p : q;
        const int z = p_hangs ? q : p;
        const int x1 = only_neighbor_among(t, y, center);
        if (m == 2) {
            // P_5: S(3,1) and S(2^2) coincide; recentre on the middle vertex.
            return classify_n_minus_3(t, x1, m);
        }
        return {FamilyTag::S3, m, build_relabeling(t, center, {x1}, {y, z})};
    }
    const int xp = only_neighbor_among(t, p, center);
    const int xq = only_neighbor_among(t, q, center);
    if (xp == xq)
        return {FamilyTag::Broom, m, build_relabeling(t, center, {xp}, {p, q})};
    return {FamilyTag::S22, m, build_relabeling(t, center, {xp, xq}, {p, q})};
}

} // namespace

StarlikeSpec parse_starlike_spec(std::string_view text) {
    StarlikeSpec spec;
    std::size_t start = 0;
    if (text.find_first_not_of(" \t") == std::string_view::npos)
        throw EmptySpec("empty starlike spec");
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view item = text.substr(start, comma - start);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        const std::size_t caret = item.find('^');
        const int length = parse_positive(item.substr(0, caret), text);
        const int mult = caret == std::string_view::npos ? 1 : parse_positive(item.substr(caret + 1), text);
        spec.branches.insert(spec.branches.end(), mult, length);
        start = comma + 1;
    }
    return spec;
}

std::string to_string(const StarlikeSpec &spec) {
    std::string out = "S(";
    std::size_t i = 0;
    while (i < spec.branches.size()) {
        std::size_t j = i;
        while (j < spec.branches.size() && spec.branches[j] == spec.branches[i])
            ++j;
        if (i > 0)
            out += ',';
        out += std::to_string(spec.branches[i]);
        if (j - i > 1)
            out += '^' + std::to_string(j - i);
        i = j;
    }
    return out + ")";
}

std::string_view to_string(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::Star: return "star";
    case FamilyTag::S2: return "s2";
    case FamilyTag::S22: return "s22";
    case FamilyTag::S3: return "s3";
    case FamilyTag::Broom: return "broom";
    case FamilyTag::MaxDegMinus1: return "maxdeg-n-1";
    case FamilyTag::Other: return "other";
    }
    return "other";
}

Graph starlike(const StarlikeSpec &spec) {
    if (spec.branches.empty())
        throw EmptySpec("starlike spec has no branches");
    for (int len : spec.branches)
        if (len < 1)
            throw InvalidArgument("branch lengths must be >= 1");
    const int k = static_cast<int>(spec.branches.size());
    switch (shape_of(spec.branches)) {
    case Shape::Star: return canonical_tree(FamilyTag::Star, k);
    case Shape::S2: return canonical_tree(FamilyTag::S2, k);
    case Shape::S22: return canonical_tree(FamilyTag::S22, k);
    case Shape::S3: return canonical_tree(FamilyTag::S3, k);
    case Shape::None: break;
    }
    const int n = std::accumulate(spec.branches.begin(), spec.branches.end(), 1);
    Graph g(n);
    int next = 1;
    for (int len : spec.branches) {
        g.add_edge(0, next);
        for (int i = 1; i < len; ++i, ++next)
            g.add_edge(next, next + 1);
        ++next;
    }
    return g;
}

Graph star(int m) {
    if (m < 1)
        throw ParameterTooSmall("star needs m >= 1");
    return canonical_tree(FamilyTag::Star, m);
}

Graph broom(int m) {
    if (m < 3)
        throw ParameterTooSmall("broom needs m >= 3, got " + std::to_string(m));
    return canonical_tree(FamilyTag::Broom, m);
}

int family_min_m(FamilyTag tag) {
    switch (tag) {
    case FamilyTag::Star: return 1;
    case FamilyTag::S2: return 2;
    case FamilyTag::S22: return 2;
    case FamilyTag::S3: return 3;
    case FamilyTag::Broom: return 3;
    default: throw UnsupportedFamily("no tree generator for family " + std::string(to_string(tag)));
    }
}

Graph family_tree(FamilyTag tag, int m) {
    if (m < family_min_m(tag))
        throw ParameterTooSmall(std::string(to_string(tag)) + " needs m >= " + std::to_string(family_min_m(tag)));
    return canonical_tree(tag, m);
}

TreeFamily classify_tree(const Graph &t) {
    if (!is_tree(t))
        throw NotATree("input is not a tree");
    const int n = t.order();
    if (n == 1)
        return {FamilyTag::Star, 0, {0}};

    const int m = t.max_degree();
    int center = 0;
    while (t.degree(center) != m)
        ++center;

    if (m == n - 1)
        return {FamilyTag::Star, m, build_relabeling(t, center, {}, {})};
    if (m == n - 2) {
        int y = 0;
        while (y == center || t.has_edge(center, y))
            ++y;
        const int x1 = only_neighbor_among(t, y, center);
        return {FamilyTag::S2, m, build_relabeling(t, center, {x1}, {y})};
    }
    if (m == n - 3)
        return classify_n_minus_3(t, center, m);
    return {FamilyTag::Other, m, {}};
}

} // namespace dbclosure
