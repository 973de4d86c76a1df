#include "oort/kgb.hpp"

#include <map>
#include <set>

namespace oort {

namespace {

struct CyclicClass {
    int representative;
    std::vector<int> elements;  // every generator of every conjugate
    std::vector<std::int64_t> contribution;
};

std::vector<CyclicClass> cyclic_classes(const FiniteGroup& G, const std::vector<Subgroup>& subs)
{
    std::vector<CyclicClass> out;
    std::vector<int> class_of(G.size(), -1);
    std::map<Subgroup, int> cyclic_class;
    for (int g = 1; g < G.size(); ++g) {
        if (class_of[g] >= 0)
            continue;
        Subgroup C = cyclic_subgroup(G, g);
        auto it = cyclic_class.find(C);
        if (it != cyclic_class.end()) {
            class_of[g] = it->second;
            out[it->second].elements.push_back(g);
            continue;
        }
        int id = static_cast<int>(out.size());
        CyclicClass cls{g, {}, {}};
        for (int a = 0; a < G.size(); ++a)
            cyclic_class.emplace(cyclic_subgroup(G, G.conj(a, g)), id);
        class_of[g] = id;
        cls.elements.push_back(g);
        for (const auto& H : subs)
            cls.contribution.push_back(ram_divisor_point(G, g, H));
        out.push_back(std::move(cls));
    }
    return out;
}

class WitnessSearch {
public:
    WitnessSearch(const FiniteGroup& G, const KatzGabberCover& kg, const SearchBounds& bounds)
        : G_(G), bounds_(bounds), subs_(subgroups(G))
    {
        for (size_t i = 0; i < subs_.size(); ++i)
            sub_id_.emplace(subs_[i], static_cast<int>(i));
        for (const auto& H : subs_)
            target_.push_back(ram_divisor_charp(G, kg, H));
        classes_ = cyclic_classes(G, subs_);
    }

    std::optional<BranchCycleDescription> run()
    {
        std::vector<int> chosen;
        std::optional<BranchCycleDescription> found;
        dfs(0, target_, chosen, found);
        return found;
    }

private:
    void dfs(size_t first, const std::vector<std::int64_t>& remaining, std::vector<int>& chosen,
             std::optional<BranchCycleDescription>& found)
    {
        if (found)
            return;
        bool done = true;
        for (auto r : remaining)
            done = done && r == 0;
        if (done) {
            if (!chosen.empty())
                found = realize(chosen);
            return;
        }
        if (static_cast<int>(chosen.size()) >= bounds_.max_points)
            throw DomainError("witness search bound exceeded: more than " + std::to_string(bounds_.max_points) +
                              " branch points");
        for (size_t c = first; c < classes_.size() && !found; ++c) {
            std::vector<std::int64_t> next = remaining;
            bool ok = true;
            for (size_t h = 0; h < next.size() && ok; ++h) {
                next[h] -= classes_[c].contribution[h];
                ok = next[h] >= 0;
            }
            if (!ok)
                continue;
            chosen.push_back(static_cast<int>(c));
            dfs(c, next, chosen, found);
            chosen.pop_back();
        }
    }

    int joined(int sid, int g)
    {
        auto key = std::make_pair(sid, g);
        auto it = join_cache_.find(key);
        if (it != join_cache_.end())
            return it->second;
        Subgroup J = join(G_, subs_[sid], cyclic_subgroup(G_, g));
        int id = sub_id_.at(J);
        join_cache_.emplace(key, id);
        return id;
    }

    // Braid moves permute the class order, so the sorted order is exhaustive.
    std::optional<BranchCycleDescription> realize(const std::vector<int>& chosen)
    {
        using State = std::pair<int, int>;  // prefix product, generated subgroup
        std::vector<std::map<State, std::pair<State, int>>> layers(chosen.size() + 1);
        int trivial = sub_id_.at(trivial_subgroup(G_));
        int whole = sub_id_.at(whole_group(G_));
        layers[0].emplace(State{0, trivial}, std::make_pair(State{0, trivial}, -1));
        std::int64_t states = 0;
        for (size_t i = 0; i < chosen.size(); ++i) {
            for (const auto& [st, back] : layers[i]) {
                for (int g : classes_[chosen[i]].elements) {
                    State nx{G_.mul(st.first, g), joined(st.second, g)};
                    layers[i + 1].emplace(nx, std::make_pair(st, g));
                }
            }
            states += static_cast<std::int64_t>(layers[i + 1].size());
            if (states > bounds_.max_states)
                throw DomainError("witness search bound exceeded: too many states");
        }
        State goal{0, whole};
        if (!layers.back().count(goal))
            return std::nullopt;
        BranchCycleDescription bcd;
        bcd.elements.resize(chosen.size());
        State cur = goal;
        for (size_t i = chosen.size(); i > 0; --i) {
            const auto& [prev, g] = layers[i].at(cur);
            bcd.elements[i - 1] = g;
            cur = prev;
        }
        return bcd;
    }

    const FiniteGroup& G_;
    SearchBounds bounds_;
    std::vector<Subgroup> subs_;
    std::map<Subgroup, int> sub_id_;
    std::vector<std::int64_t> target_;
    std::vector<CyclicClass> classes_;
    std::map<std::pair<int, int>, int> join_cache_;
};

}  // namespace

bool KgbVerdict::balanced() const
{
    for (const auto& row : table)
        if (!row.r_x || *row.r_x != row.r_y)
            return false;
    return true;
}

std::vector<KgbRow> kgb_table(const FiniteGroup& G, const KatzGabberCover& kg,
                              const std::optional<BranchCycleDescription>& witness)
{
    if (witness)
        witness->validate(G);
    std::vector<KgbRow> rows;
    for (const auto& H : subgroups(G)) {
        KgbRow row{H, std::nullopt, ram_divisor_charp(G, kg, H)};
        if (witness)
            row.r_x = ram_divisor_char0(G, *witness, H);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<BranchCycleDescription> kgb_witness_search(const FiniteGroup& G, const KatzGabberCover& kg,
                                                         const SearchBounds& bounds)
{
    if (G.size() > 200)
        throw DomainError("witness search supports groups of order at most 200");
    auto w = WitnessSearch(G, kg, bounds).run();
    if (w) {
        w->validate(G);
        for (const auto& row : kgb_table(G, kg, w))
            if (*row.r_x != row.r_y)
                throw DomainError("internal: witness does not balance");
    }
    return w;
}

KgbVerdict kgb_zpzp(int p, std::int64_t m1, std::int64_t m2)
{
    if (!is_prime(p) || p == 2)
        throw DomainError("p must be an odd prime");
    if (m1 < 1 || m2 < m1)
        throw DomainError("lower jumps must satisfy 1 <= m1 <= m2");
    if (mod(m1 - m2, p) != 0)
        throw DomainError("lower jumps must satisfy m1 = m2 mod p");
    if (m1 % p == 0)
        throw DomainError("first lower jump must be prime to p");
    KgbVerdict v;
    v.vanishes = mod(m1, p) == p - 1 && !(p == 3 && m1 == 2 && m2 == 2);
    FiniteGroup G = bicyclic_group(p);
    v.table = kgb_table(G, bicyclic_cover(G, m1, m2), std::nullopt);
    return v;
}

KgbVerdict kgb_metacyclic(int p, int n, int m, std::int64_t chi, std::int64_t h)
{
    FiniteGroup G = metacyclic_group(p, n, m, chi);
    if (G.chi == 1)
        throw DomainError("group is cyclic: use cyclic path");
    if (h < 1)
        throw DomainError("first positive lower jump must be positive");
    KgbVerdict v;
    v.vanishes = mod(h, m) == m - 1;
    std::int64_t q = ipow(p, n), x = 1;
    int order = 0;
    do {
        x = mulmod(x, G.chi, q);
        ++order;
    } while (x != 1);
    if (v.vanishes && order != m)
        throw DomainError("h = -1 mod m forces a faithful action, but chi has order " + std::to_string(order));
    v.table = kgb_table(G, metacyclic_cover(G, h), std::nullopt);
    return v;
}

}  // namespace oort
