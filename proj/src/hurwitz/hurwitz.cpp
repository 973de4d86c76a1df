#include "oort/hurwitz.hpp"

#include <map>
#include <set>
#include <sstream>

namespace oort {

Mobius Mobius::identity(const GaloisField& F)
{
    return {Fq(F, 1), Fq(F, 0), Fq(F, 0), Fq(F, 1)};
}

Mobius Mobius::scaling(const Fq& s)
{
    const GaloisField& F = s.field();
    return {s, Fq(F, 0), Fq(F, 0), Fq(F, 1)};
}

ProjPoint Mobius::apply(const ProjPoint& z) const
{
    if (!z)
        return c.is_zero() ? ProjPoint{} : ProjPoint{a / c};
    Fq den = c * *z + d;
    if (den.is_zero())
        return std::nullopt;
    return (a * *z + b) / den;
}

Mobius Mobius::compose(const Mobius& o) const
{
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool Mobius::invertible() const
{
    return !(a * d - b * c).is_zero();
}

bool Mobius::same_map(const Mobius& o) const
{
    return a * o.b == b * o.a && a * o.c == c * o.a && a * o.d == d * o.a && b * o.c == c * o.b &&
           b * o.d == d * o.b && c * o.d == d * o.c;
}

Fq Mobius::tangent_character(const ProjPoint& fixed) const
{
    if (!fixed)
        return d / a;  // w = 1/z goes to d w / (a + b w)
    Fq den = c * *fixed + d;
    return (a * d - b * c) / (den * den);
}

namespace {

void add(std::vector<Violation>& out, const char* axiom, const std::string& message)
{
    out.push_back({axiom, message});
}

std::string vname(int v)
{
    return "v" + std::to_string(v);
}

std::string ename(int e)
{
    return "e" + std::to_string(e);
}

// Marked points, nodes and infinity' on a component.
std::vector<ProjPoint> special_points(const HurwitzTree& t, int v)
{
    std::vector<ProjPoint> pts = t.vertices[v].marked;
    for (const auto& e : t.edges) {
        if (e.child == v)
            pts.push_back(e.child_point);
        if (e.parent == v && e.parent_point)
            pts.push_back(*e.parent_point);
    }
    return pts;
}

bool contains(const std::vector<ProjPoint>& pts, const ProjPoint& x)
{
    for (const auto& y : pts)
        if (y == x)
            return true;
    return false;
}

void check_tree(const HurwitzTree& t, std::vector<Violation>& out)
{
    int n = static_cast<int>(t.vertices.size());
    if (static_cast<int>(t.edges.size()) != n - 1)
        add(out, "i", "dual graph has " + std::to_string(t.edges.size()) + " edges for " + std::to_string(n) +
                          " vertices, so it is not a tree");
    std::vector<int> parents(n, 0);
    for (const auto& e : t.edges)
        ++parents[e.child];
    for (int v = 1; v < n; ++v)
        if (parents[v] != 1)
            add(out, "i", vname(v) + " has " + std::to_string(parents[v]) + " parent edges");
    if (parents[0] != 0)
        add(out, "i", "root vertex has a parent edge");
    // Connectivity from the root.
    std::vector<bool> seen(n, false);
    seen[0] = true;
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& e : t.edges)
            if (seen[e.parent] && !seen[e.child])
                seen[e.child] = grew = true;
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v])
            add(out, "i", vname(v) + " is not connected to the root");

    for (int v = 1; v < n; ++v) {
        auto pts = special_points(t, v);
        std::set<ProjPoint> distinct(pts.begin(), pts.end());
        if (distinct.size() != pts.size())
            add(out, "i", "special points on " + vname(v) + " are not distinct");
        if (pts.size() < 3)
            add(out, "i", vname(v) + " carries only " + std::to_string(pts.size()) + " special points");
    }
}

void check_action(const HurwitzTree& t, std::vector<Violation>& out, bool& usable)
{
    int n = static_cast<int>(t.vertices.size());
    const auto& act = t.action;
    usable = true;
    std::set<int> image(act.vertex_map.begin(), act.vertex_map.end());
    if (static_cast<int>(image.size()) != n) {
        add(out, "viii", "action does not permute the vertices");
        usable = false;
        return;
    }
    if (act.vertex_map[0] != 0)
        add(out, "viii", "action moves the root vertex");
    const auto& e0 = t.edges[0];
    if (act.vertex_map[e0.child] != e0.child || act.maps[e0.child].apply(e0.child_point) != e0.child_point)
        add(out, "viii", "action does not fix infinity'");

    for (int v = 1; v < n; ++v) {
        int w = act.vertex_map[v];
        const auto& M = act.maps[v];
        std::set<ProjPoint> target(t.vertices[w].marked.begin(), t.vertices[w].marked.end()), got;
        for (const auto& z : t.vertices[v].marked)
            got.insert(M.apply(z));
        if (got != target || t.vertices[v].marked.size() != t.vertices[w].marked.size())
            add(out, "viii", "action does not carry the marked points of " + vname(v) + " onto those of " + vname(w));
    }
    for (size_t e = 1; e < t.edges.size(); ++e) {
        const auto& ed = t.edges[e];
        int pu = act.vertex_map[ed.parent], pw = act.vertex_map[ed.child];
        bool ok = false;
        for (const auto& f : t.edges) {
            if (f.parent != pu || f.child != pw)
                continue;
            ok = act.maps[ed.child].apply(ed.child_point) == f.child_point &&
                 (ed.parent == 0 || (ed.parent_point && f.parent_point &&
                                     act.maps[ed.parent].apply(*ed.parent_point) == *f.parent_point));
        }
        if (!ok)
            add(out, "viii", "action is not compatible with edge " + ename(static_cast<int>(e)));
    }
    for (int v = 1; v < n; ++v) {
        int w = v;
        Mobius M = Mobius::identity(*t.field);
        for (int k = 0; k < t.m; ++k) {
            M = act.maps[w].compose(M);
            w = act.vertex_map[w];
        }
        if (w != v || !M.same_map(Mobius::identity(*t.field)))
            add(out, "viii", "the m-th power of the action is not the identity on " + vname(v));
    }
}

}  // namespace

void HurwitzTree::check_structure() const
{
    if (!field)
        throw StructuralError("tree has no field");
    if (field->p() != p)
        throw StructuralError("field characteristic differs from p");
    int n = static_cast<int>(vertices.size());
    if (n < 2)
        throw StructuralError("tree needs the root and at least one component");
    if (edges.empty() || edges[0].parent != 0)
        throw StructuralError("first edge must be the root edge");
    if (vertices[0].omega || !vertices[0].marked.empty())
        throw StructuralError("root vertex carries no component");
    for (int v = 1; v < n; ++v) {
        if (!vertices[v].omega)
            throw StructuralError(vname(v) + " has no differential form");
        if (&vertices[v].omega->field() != field)
            throw StructuralError("form on " + vname(v) + " is over another field");
    }
    for (size_t e = 0; e < edges.size(); ++e) {
        const auto& ed = edges[e];
        if (ed.parent < 0 || ed.parent >= n || ed.child < 1 || ed.child >= n)
            throw StructuralError("edge " + ename(static_cast<int>(e)) + " refers to a missing vertex");
        if ((ed.parent == 0) != !ed.parent_point)
            throw StructuralError("edge " + ename(static_cast<int>(e)) + " needs a node point exactly when its parent "
                                                                        "is a component");
        if (e > 0 && ed.parent == 0)
            throw StructuralError("only the first edge may leave the root");
    }
    if (static_cast<int>(action.vertex_map.size()) != n || static_cast<int>(action.maps.size()) != n)
        throw StructuralError("action must give an image and a map for every vertex");
    for (int v = 0; v < n; ++v)
        if (action.vertex_map[v] < 0 || action.vertex_map[v] >= n)
            throw StructuralError("action sends " + vname(v) + " to a missing vertex");
    for (int v = 1; v < n; ++v)
        if (!action.maps[v].invertible())
            throw StructuralError("action map on " + vname(v) + " is not invertible");
    if (m < 1 || chi.is_zero() || chi.pow(m) != Fq(*field, 1))
        throw StructuralError("chi(c) must be an m-th root of unity");
    for (int k = 1; k < m; ++k)
        if (chi.pow(k) == Fq(*field, 1))
            throw StructuralError("chi is not injective");
    if (!field->in_prime_field(chi.code()))
        throw StructuralError("chi must take values in F_p");
}

std::vector<Violation> validate(const HurwitzTree& t)
{
    t.check_structure();
    std::vector<Violation> out;
    int n = static_cast<int>(t.vertices.size());
    int p = t.p;

    check_tree(t, out);

    for (int v = 0; v < n; ++v) {
        const Rational& d = t.vertices[v].delta;
        if (d < Rational(0) || d > Rational(1))
            add(out, "ii", "delta of " + vname(v) + " is " + to_string(d) + ", outside [0, 1]");
        else if ((d == Rational(0)) != (v == 0))
            add(out, "ii", "delta of " + vname(v) + (v == 0 ? " must be 0" : " must be positive"));
    }

    for (int v = 1; v < n; ++v) {
        const DiffForm& w = *t.vertices[v].omega;
        if (w.is_zero()) {
            add(out, "iii", "form on " + vname(v) + " is zero");
            continue;
        }
        auto pts = special_points(t, v);
        for (const auto& place : w.divisor().places) {
            if (place.at_infinity) {
                if (!contains(pts, ProjPoint{}))
                    add(out, "iii", "form on " + vname(v) + " has a zero or pole at inf, which is not special");
                continue;
            }
            int special_roots = 0;
            if (place.degree == 1)
                for (const auto& x : pts)
                    if (x && place.factor.multiplicity(*x) > 0)
                        ++special_roots;
            if (special_roots != place.count)
                add(out, "iii", "form on " + vname(v) + " has a zero or pole at a root of " + place.factor.str() +
                                    " that is not special");
        }
        for (const auto& z : t.vertices[v].marked)
            if (w.order_at(z) != -1)
                add(out, "iii", "form on " + vname(v) + " has order " + std::to_string(w.order_at(z)) + " at marked point " +
                                    point_str(z) + ", not a simple pole");
    }

    for (int v = 1; v < n; ++v) {
        const DiffForm& w = *t.vertices[v].omega;
        bool log = t.vertices[v].delta == Rational(1);
        FormClass c = classify_form(w);
        if (log && c != FormClass::logarithmic)
            add(out, "iv", "delta of " + vname(v) + " is 1 but the form is " + to_string(c));
        if (!log && c != FormClass::exact)
            add(out, "iv", "delta of " + vname(v) + " is below 1 but the form is " + to_string(c));
    }

    for (size_t e = 0; e < t.edges.size(); ++e)
        if (t.edges[e].epsilon <= Rational(0))
            add(out, "v", "thickness of " + ename(static_cast<int>(e)) + " is not positive");

    for (size_t e = 0; e < t.edges.size(); ++e) {
        const auto& ed = t.edges[e];
        int child_ord = t.vertices[ed.child].omega->order_at(ed.child_point);
        if (ed.parent != 0) {
            int parent_ord = t.vertices[ed.parent].omega->order_at(*ed.parent_point);
            if (parent_ord + child_ord != -2)
                add(out, "vi", "orders at the node of " + ename(static_cast<int>(e)) + " sum to " +
                                   std::to_string(parent_ord + child_ord));
        }
        Rational lhs = t.vertices[ed.child].delta - t.vertices[ed.parent].delta;
        Rational rhs = Rational(p - 1) * ed.epsilon * Rational(child_ord + 1);
        if (lhs != rhs)
            add(out, "vii", "across " + ename(static_cast<int>(e)) + " delta changes by " + to_string(lhs) +
                                " but (p-1) eps (ord + 1) is " + to_string(rhs));
    }

    bool usable = false;
    check_action(t, out, usable);

    if (usable) {
        const auto& act = t.action;
        for (size_t e = 1; e < t.edges.size(); ++e) {
            const auto& ed = t.edges[e];
            int u = ed.parent, w = ed.child;
            Mobius Mu = Mobius::identity(*t.field), Mw = Mu;
            int cu = u, cw = w;
            for (int k = 1; k < t.m; ++k) {
                Mu = act.maps[cu].compose(Mu);
                Mw = act.maps[cw].compose(Mw);
                cu = act.vertex_map[cu];
                cw = act.vertex_map[cw];
                if (cu != u || cw != w || Mu.apply(*ed.parent_point) != *ed.parent_point ||
                    Mw.apply(ed.child_point) != ed.child_point)
                    continue;
                Fq prod = Mu.tangent_character(*ed.parent_point) * Mw.tangent_character(ed.child_point);
                if (prod != Fq(*t.field, 1))
                    add(out, "ix", "c^" + std::to_string(k) + " acts on the tangent spaces at the node of " +
                                       ename(static_cast<int>(e)) + " by characters that are not inverse");
            }
        }
        for (int v = 1; v < n; ++v) {
            const auto& M = act.maps[v];
            DiffForm pulled = t.vertices[act.vertex_map[v]].omega->pullback_mobius(M.a, M.b, M.c, M.d);
            if (pulled != *t.vertices[v].omega * t.chi)
                add(out, "x", "c^* omega of " + vname(act.vertex_map[v]) + " is not chi(c) omega of " + vname(v));
        }
    }
    return out;
}

int conductor(const HurwitzTree& t)
{
    int marked = 0;
    for (const auto& v : t.vertices)
        marked += static_cast<int>(v.marked.size());
    return marked - 1;
}

HurwitzTree build_small_conductor(int p, int m, int h, std::int64_t chi, const std::vector<std::int64_t>& z)
{
    if (!is_prime(p))
        throw DomainError("p must be prime");
    if (m < 1 || (p - 1) % m != 0)
        throw DomainError("m must divide p - 1");
    if (mod(h, m) != m - 1)
        throw DomainError("h must be -1 mod m");
    if (h <= 1 || h >= p)
        throw DomainError("this construction needs 1 < h < p");
    if (h == p - 1)
        throw DomainError("h = p - 1 leaves no room for distinct marked points");
    const GaloisField& F = GaloisField::get(p, 1);
    Fq zeta = Fq::from_int(F, chi), one(F, 1);
    if (zeta.is_zero() || zeta.pow(m) != one)
        throw DomainError("chi must be an m-th root of unity");
    for (int k = 1; k < m; ++k)
        if (zeta.pow(k) == one)
            throw DomainError("chi must have order exactly m");
    int r = (h + 1) / m;
    if (static_cast<int>(z.size()) != r)
        throw DomainError("expected " + std::to_string(r) + " orbit representatives");

    HurwitzVertex top;
    top.delta = Rational(1);
    Poly den = Poly::constant(one);
    std::set<std::uint32_t> seen;
    for (auto zi : z) {
        Fq x = Fq::from_int(F, zi);
        if (x.is_zero())
            throw DomainError("orbit representatives must be nonzero");
        for (int j = 0; j < m; ++j) {
            Fq pt = zeta.pow(j) * x;
            if (!seen.insert(pt.code()).second)
                throw DomainError("orbit points z_{i,j} collide at " + pt.str());
            top.marked.push_back(pt);
        }
        den *= Poly::monomial(one, m) - Poly::constant(x.pow(m));
    }
    top.omega = DiffForm(RatFunc(Poly::constant(one), den));

    HurwitzTree t;
    t.p = p;
    t.m = m;
    t.field = &F;
    t.chi = zeta;
    t.vertices = {HurwitzVertex{Rational(0), std::nullopt, {}}, top};
    t.edges = {HurwitzEdge{0, 1, Rational(1, h * (p - 1)), std::nullopt, ProjPoint{}}};
    t.action.vertex_map = {0, 1};
    t.action.maps = {Mobius::identity(F), Mobius::scaling(zeta)};
    auto bad = validate(t);
    if (!bad.empty())
        throw DomainError("internal: constructed tree violates axiom (" + bad.front().axiom + "): " + bad.front().message);
    return t;
}

std::string to_dot(const HurwitzTree& t)
{
    std::ostringstream out;
    out << "graph hurwitz {\n";
    for (size_t v = 0; v < t.vertices.size(); ++v) {
        out << "  v" << v << " [label=\"v" << v << "\\ndelta=" << to_string(t.vertices[v].delta);
        for (const auto& z : t.vertices[v].marked)
            out << "\\n" << point_str(z);
        out << "\"];\n";
    }
    for (const auto& e : t.edges)
        out << "  v" << e.parent << " -- v" << e.child << " [label=\"" << to_string(e.epsilon) << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace oort
