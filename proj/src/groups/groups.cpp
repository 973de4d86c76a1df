#include "oort/groups.hpp"

#include <set>

namespace oort {

namespace {

constexpr int kMaxGroupOrder = 10000;

Subgroup closure(const FiniteGroup& G, const std::vector<int>& gens)
{
    Subgroup S(G.size());
    std::vector<int> list{0};
    S.set(0);
    for (size_t i = 0; i < list.size(); ++i)
        for (int g : gens) {
            int y = G.mul(list[i], g);
            if (!S.test(y)) {
                S.set(y);
                list.push_back(y);
            }
        }
    return S;
}

std::vector<int> members(const Subgroup& S)
{
    std::vector<int> v;
    for (auto x = S.find_first(); x != Subgroup::npos; x = S.find_next(x))
        v.push_back(static_cast<int>(x));
    return v;
}

std::int64_t mult_order(std::int64_t c, std::int64_t modulus)
{
    std::int64_t x = mod(c, modulus), k = 1;
    while (x != 1 % modulus) {
        x = mulmod(x, c, modulus);
        if (++k > modulus)
            return 0;
    }
    return k;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels, std::string name)
    : table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name))
{
    int N = size();
    if (N == 0 || N > kMaxGroupOrder)
        throw DomainError("group order " + std::to_string(N) + " outside the supported range 1.." +
                          std::to_string(kMaxGroupOrder));
    inv_.assign(N, -1);
    order_.assign(N, 0);
    for (int a = 0; a < N; ++a) {
        if (table_[0][a] != a || table_[a][0] != a)
            throw DomainError("element 0 must be the identity");
        for (int b = 0; b < N; ++b)
            if (table_[a][b] == 0)
                inv_[a] = b;
        if (inv_[a] < 0)
            throw DomainError("multiplication table has no inverse for " + labels_[a]);
        int k = 1;
        for (int x = a; x != 0; x = table_[x][a])
            ++k;
        order_[a] = a == 0 ? 1 : k;
    }
}

int FiniteGroup::pow(int g, std::int64_t k) const
{
    k = mod(k, order(g));
    int x = 0;
    for (std::int64_t i = 0; i < k; ++i)
        x = mul(x, g);
    return x;
}

std::optional<int> FiniteGroup::find(const std::string& label) const
{
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label)
            return i;
    return std::nullopt;
}

FiniteGroup metacyclic_group(int p, int n, int m, std::int64_t chi)
{
    if (!is_prime(p))
        throw DomainError("p must be prime");
    if (n < 1 || m < 1)
        throw DomainError("n and m must be positive");
    if (m % p == 0)
        throw DomainError("m must be prime to p");
    std::int64_t q = ipow(p, n);
    if (q * m > kMaxGroupOrder)
        throw DomainError("group too large");
    chi = mod(chi, q);
    if (chi % p == 0)
        throw DomainError("chi(1) must be a unit mod p^n");
    std::int64_t o = mult_order(chi, q);
    if (m % o)
        throw DomainError("chi is not a homomorphism: chi(1)^m != 1 mod p^n");
    std::vector<std::int64_t> chipow(m, 1);
    for (int b = 1; b < m; ++b)
        chipow[b] = mulmod(chipow[b - 1], chi, q);
    int N = static_cast<int>(q * m);
    std::vector<std::vector<int>> table(N, std::vector<int>(N));
    std::vector<std::string> labels(N);
    for (int x = 0; x < N; ++x) {
        std::int64_t a = x % q, b = x / q;
        labels[x] = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        for (int y = 0; y < N; ++y) {
            std::int64_t a2 = y % q, b2 = y / q;
            table[x][y] = static_cast<int>(mod(a + chipow[b] * a2, q) + q * ((b + b2) % m));
        }
    }
    FiniteGroup G(std::move(table), std::move(labels),
                  "Z/" + std::to_string(q) + " x| Z/" + std::to_string(m) + " (chi=" + std::to_string(chi) + ")");
    G.p = p;
    G.n = n;
    G.m = m;
    G.chi = chi;
    return G;
}

FiniteGroup bicyclic_group(int p)
{
    if (!is_prime(p))
        throw DomainError("p must be prime");
    int N = p * p;
    std::vector<std::vector<int>> table(N, std::vector<int>(N));
    std::vector<std::string> labels(N);
    for (int x = 0; x < N; ++x) {
        labels[x] = "(" + std::to_string(x % p) + "," + std::to_string(x / p) + ")";
        for (int y = 0; y < N; ++y)
            table[x][y] = (x % p + y % p) % p + p * ((x / p + y / p) % p);
    }
    FiniteGroup G(std::move(table), std::move(labels), "Z/" + std::to_string(p) + " x Z/" + std::to_string(p));
    G.p = p;
    G.n = 2;
    G.m = 1;
    return G;
}

std::int64_t default_character(int p, int n, int m)
{
    std::int64_t q = ipow(p, n);
    for (std::int64_t c = 1; c < q; ++c)
        if (c % p && mult_order(c, q) == m)
            return c;
    throw DomainError("no character of order " + std::to_string(m) + " on Z/" + std::to_string(q));
}

int subgroup_order(const Subgroup& H)
{
    return static_cast<int>(H.count());
}

Subgroup cyclic_subgroup(const FiniteGroup& G, int g)
{
    return closure(G, {g});
}

Subgroup trivial_subgroup(const FiniteGroup& G)
{
    Subgroup S(G.size());
    S.set(0);
    return S;
}

Subgroup whole_group(const FiniteGroup& G)
{
    Subgroup S(G.size());
    S.set();
    return S;
}

Subgroup join(const FiniteGroup& G, const Subgroup& H, const Subgroup& K)
{
    std::vector<int> gens;
    Subgroup cur = trivial_subgroup(G);
    Subgroup all = H | K;
    for (auto x = all.find_first(); x != Subgroup::npos; x = all.find_next(x)) {
        if (cur.test(x))
            continue;
        gens.push_back(static_cast<int>(x));
        cur = closure(G, gens);
    }
    return cur;
}

std::vector<Subgroup> subgroups(const FiniteGroup& G)
{
    struct Entry {
        Subgroup S;
        std::vector<int> gens;
    };
    std::set<Subgroup> seen;
    std::vector<Entry> found;
    std::vector<int> cyclic_gens;
    for (int g = 0; g < G.size(); ++g) {
        Subgroup C = cyclic_subgroup(G, g);
        if (seen.insert(C).second) {
            found.push_back({C, g ? std::vector<int>{g} : std::vector<int>{}});
            if (g)
                cyclic_gens.push_back(g);
        }
    }
    for (size_t i = 0; i < found.size(); ++i) {
        for (int g : cyclic_gens) {
            if (found[i].S.test(g))
                continue;
            std::vector<int> gens = found[i].gens;
            gens.push_back(g);
            Subgroup J = closure(G, gens);
            if (seen.insert(J).second)
                found.push_back({J, gens});
        }
    }
    std::vector<Subgroup> out(seen.begin(), seen.end());
    std::stable_sort(out.begin(), out.end(),
                     [](const Subgroup& a, const Subgroup& b) { return a.count() < b.count(); });
    return out;
}

void BranchCycleDescription::validate(const FiniteGroup& G) const
{
    int prod = 0;
    for (int g : elements) {
        if (g <= 0 || g >= G.size())
            throw DomainError("branch cycle entries must be non-identity elements");
        prod = G.mul(prod, g);
    }
    if (prod != 0)
        throw DomainError("branch cycle product is not the identity");
    if (closure(G, elements).count() != static_cast<size_t>(G.size()))
        throw DomainError("branch cycle entries do not generate the group");
}

std::string BranchCycleDescription::str(const FiniteGroup& G) const
{
    std::string s = "[";
    for (size_t i = 0; i < elements.size(); ++i)
        s += (i ? ", " : "") + G.label(elements[i]);
    return s + "]";
}

std::int64_t ram_divisor_point(const FiniteGroup& G, int g, const Subgroup& H)
{
    std::vector<int> C;
    for (int x = 0, k = 0; k < G.order(g); ++k, x = G.mul(x, g))
        C.push_back(x);
    std::int64_t total = 0;
    for (int a = 0; a < G.size(); ++a) {
        int inter = 0;
        for (int c : C)
            inter += H.test(G.conj(a, c));
        total += inter - 1;
    }
    return total / G.order(g);
}

std::int64_t ram_divisor_char0(const FiniteGroup& G, const BranchCycleDescription& bcd, const Subgroup& H)
{
    std::int64_t total = 0;
    for (int g : bcd.elements)
        total += ram_divisor_point(G, g, H);
    return total;
}

void SubgroupFiltration::validate(const FiniteGroup& G) const
{
    Subgroup prev = whole_group(G);
    std::int64_t prev_t = -1;
    for (const auto& [t, S] : breaks) {
        if (S.size() != static_cast<size_t>(G.size()))
            throw DomainError("filtration subgroup belongs to a different group");
        if (t <= prev_t)
            throw DomainError("filtration thresholds must increase strictly from 0");
        if (!S.is_proper_subset_of(prev))
            throw DomainError("filtration subgroups must decrease strictly");
        if (closure(G, members(S)) != S)
            throw DomainError("filtration entry is not a subgroup");
        prev = S;
        prev_t = t;
    }
    if (prev.count() != 1)
        throw DomainError("filtration must end at the trivial group");
}

std::int64_t ram_divisor_charp(const FiniteGroup& G, const KatzGabberCover& kg, const Subgroup& H)
{
    kg.wild.validate(G);
    std::int64_t total = 0;
    const auto& br = kg.wild.breaks;
    if (!br.empty()) {
        total += (br.front().first + 1) * (static_cast<std::int64_t>(H.count()) - 1);
        for (size_t k = 1; k < br.size(); ++k)
            total += (br[k].first - br[k - 1].first) * (static_cast<std::int64_t>((H & br[k - 1].second).count()) - 1);
    }
    if (kg.tame_generator)
        total += ram_divisor_point(G, *kg.tame_generator, H);
    return total;
}

KatzGabberCover bicyclic_cover(const FiniteGroup& G, std::int64_t m1, std::int64_t m2)
{
    if (G.m != 1 || G.size() != G.p * G.p)
        throw DomainError("expected (Z/p)^2");
    if (m1 < 1 || m2 < m1)
        throw DomainError("lower jumps must satisfy 1 <= m1 <= m2");
    KatzGabberCover kg;
    if (m1 < m2)
        kg.wild.breaks.emplace_back(m1, cyclic_subgroup(G, 1));
    kg.wild.breaks.emplace_back(m2, trivial_subgroup(G));
    return kg;
}

std::vector<std::int64_t> metacyclic_lower_jumps(int p, int m, const std::vector<Rational>& u)
{
    std::vector<std::int64_t> l;
    Rational acc(0), prev(0);
    for (size_t i = 0; i < u.size(); ++i) {
        if (u[i] <= prev)
            throw DomainError("upper jumps must be positive and strictly increasing");
        acc += Rational(m * ipow(p, static_cast<unsigned>(i))) * (u[i] - prev);
        if (!is_integer(acc))
            throw DomainError("inconsistent filtration: lower jump " + to_string(acc) + " is not an integer");
        l.push_back(acc.numerator());
        prev = u[i];
    }
    return l;
}

KatzGabberCover metacyclic_cover(const FiniteGroup& G, std::int64_t h, std::vector<Rational> upper)
{
    if (G.p == 0 || G.size() != ipow(G.p, G.n) * G.m)
        throw DomainError("expected a metacyclic group");
    if (h < 1)
        throw DomainError("first positive lower jump must be positive");
    if (upper.empty()) {
        upper.push_back(Rational(h, G.m));
        for (int i = 1; i < G.n; ++i)
            upper.push_back(upper.back() * Rational(G.p));
    }
    if (static_cast<int>(upper.size()) != G.n || upper.front() != Rational(h, G.m))
        throw DomainError("upper jumps must number n and start at h/m");
    auto l = metacyclic_lower_jumps(G.p, G.m, upper);
    KatzGabberCover kg;
    if (G.m > 1) {
        kg.wild.breaks.emplace_back(0, cyclic_subgroup(G, 1));
        kg.tame_generator = static_cast<int>(ipow(G.p, G.n));
    }
    for (int i = 0; i < G.n; ++i)
        kg.wild.breaks.emplace_back(l[i], cyclic_subgroup(G, static_cast<int>(ipow(G.p, i + 1) % ipow(G.p, G.n))));
    return kg;
}

}  // namespace oort
