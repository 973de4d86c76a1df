#include "io.hpp"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace oort::cli {

json load_json(const std::string& path_or_text)
{
    std::string text = path_or_text;
    auto first = text.find_first_not_of(" \t\n");
    if (first == std::string::npos || (text[first] != '{' && text[first] != '[')) {
        std::ifstream in(path_or_text);
        if (!in)
            throw UsageError("cannot read " + path_or_text);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("invalid JSON: ") + e.what());
    }
}

void require_schema(const json& j)
{
    if (!j.is_object() || !j.contains("schema"))
        throw UsageError("input needs a \"schema\" field");
    if (j["schema"] != kSchema)
        throw UsageError("unsupported schema " + j["schema"].dump());
}

json rational_json(const Rational& q)
{
    return to_string(q);
}

Rational json_rational(const json& j)
{
    try {
        if (j.is_number_integer())
            return Rational(j.get<std::int64_t>());
        if (j.is_string())
            return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad rational: ") + e.what());
    }
    throw UsageError("expected a rational, got " + j.dump());
}

namespace {

template <class T>
T field(const json& j, const char* key)
{
    if (!j.contains(key))
        throw UsageError(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw UsageError(std::string("field \"") + key + "\": " + e.what());
    }
}

std::string point_label(const ProjPoint& x)
{
    return point_str(x);
}

ProjPoint point_from_json(const GaloisField& F, const json& j)
{
    if (!j.is_string())
        throw UsageError("points are strings, got " + j.dump());
    return parse_point(F, j.get<std::string>());
}

class PadicParser {
public:
    PadicParser(const std::string& s, const RingPtr& R, const std::map<std::string, PadicElement>& symbols)
        : s_(s), R_(R), symbols_(symbols)
    {
    }

    PadicElement parse()
    {
        PadicElement x = expr();
        skip();
        if (i_ != s_.size())
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return x;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw UsageError("cannot parse '" + s_ + "': " + why);
    }
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool peek(char c)
    {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool starts_primary()
    {
        skip();
        return i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(');
    }
    PadicElement expr()
    {
        PadicElement acc = term();
        for (;;) {
            if (peek('+')) {
                ++i_;
                acc = acc + term();
            } else if (peek('-')) {
                ++i_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }
    PadicElement term()
    {
        PadicElement acc = unary();
        for (;;) {
            if (peek('*')) {
                ++i_;
                acc = acc * unary();
            } else if (peek('/')) {
                ++i_;
                acc = acc.divide(unary());
            } else if (starts_primary()) {
                acc = acc * power();
            } else {
                return acc;
            }
        }
    }
    PadicElement unary()
    {
        if (peek('-')) {
            ++i_;
            return -unary();
        }
        return power();
    }
    PadicElement power()
    {
        PadicElement base = primary();
        if (peek('^')) {
            ++i_;
            skip();
            size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            if (start == i_)
                fail("expected an exponent");
            return base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, i_ - start))));
        }
        return base;
    }
    PadicElement primary()
    {
        skip();
        if (peek('(')) {
            ++i_;
            PadicElement x = expr();
            if (!peek(')'))
                fail("missing ')'");
            ++i_;
            return x;
        }
        size_t start = i_;
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            return PadicElement::from_int(R_, std::stoll(s_.substr(start, i_ - start)));
        }
        while (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
            ++i_;
        std::string name = s_.substr(start, i_ - start);
        if (name.empty())
            fail("expected a number or symbol");
        auto it = symbols_.find(name);
        if (it == symbols_.end())
            fail("unknown symbol '" + name + "'");
        return it->second;
    }

    std::string s_;
    RingPtr R_;
    const std::map<std::string, PadicElement>& symbols_;
    size_t i_ = 0;
};

std::vector<std::string> subgroup_labels(const FiniteGroup& G, const Subgroup& H)
{
    std::vector<std::string> out;
    for (auto x = H.find_first(); x != Subgroup::npos; x = H.find_next(x))
        out.push_back(G.label(static_cast<int>(x)));
    return out;
}

}  // namespace

RamFiltration filtration_from_json(const json& j)
{
    if (!j.is_object())
        throw UsageError("filtration must be an object");
    RamFiltration f;
    auto numbering = field<std::string>(j, "numbering");
    if (numbering == "lower")
        f.numbering = Numbering::lower;
    else if (numbering == "upper")
        f.numbering = Numbering::upper;
    else
        throw UsageError("numbering must be \"lower\" or \"upper\"");
    f.order = field<std::int64_t>(j, "order");
    if (!j.contains("breaks") || !j["breaks"].is_array())
        throw UsageError("missing array \"breaks\"");
    for (const auto& b : j["breaks"]) {
        if (!b.is_array() || b.size() != 2 || !b[1].is_number_integer())
            throw UsageError("each break is [threshold, order]");
        f.breaks.emplace_back(json_rational(b[0]), b[1].get<std::int64_t>());
    }
    return f;
}

PadicElement parse_padic(const std::string& text, const RingPtr& R, const std::map<std::string, PadicElement>& symbols)
{
    return PadicParser(text, R, symbols).parse();
}

json branch_table_json(const std::vector<BranchRow>& rows)
{
    json out = json::array();
    for (const auto& r : rows)
        out.push_back({r.valuation ? rational_json(*r.valuation) : json("inf"), r.count, r.index});
    return out;
}

json certificate_json(const DifferentCertificate& c)
{
    json out{{"delta_eta", rational_json(c.delta_eta)},
             {"delta_s", rational_json(c.delta_s)},
             {"status", to_string(c.status)},
             {"branch_table", branch_table_json(c.branch_table)}};
    if (!c.note.empty())
        out["note"] = c.note;
    return out;
}

json kgb_json(const std::vector<KgbRow>& table)
{
    json rows = json::array();
    for (const auto& r : table)
        rows.push_back(json::array({subgroup_order(r.subgroup), r.r_x ? json(*r.r_x) : json(nullptr), r.r_y}));
    return rows;
}

json kgb_subgroups_json(const FiniteGroup& G, const std::vector<KgbRow>& table)
{
    json rows = json::array();
    for (const auto& r : table)
        rows.push_back(subgroup_labels(G, r.subgroup));
    return rows;
}

json bcd_json(const FiniteGroup& G, const BranchCycleDescription& b)
{
    json out = json::array();
    for (int g : b.elements)
        out.push_back(G.label(g));
    return out;
}

json hurwitz_to_json(const HurwitzTree& t)
{
    json vertices = json::array();
    for (const auto& v : t.vertices) {
        json jv{{"delta", rational_json(v.delta)}};
        if (v.omega)
            jv["omega"] = v.omega->coefficient().str();
        json marked = json::array();
        for (const auto& z : v.marked)
            marked.push_back(point_label(z));
        jv["marked"] = marked;
        vertices.push_back(jv);
    }
    json edges = json::array();
    for (const auto& e : t.edges) {
        json je{{"parent", e.parent},
                {"child", e.child},
                {"epsilon", rational_json(e.epsilon)},
                {"child_point", point_label(e.child_point)}};
        if (e.parent_point)
            je["parent_point"] = point_label(*e.parent_point);
        edges.push_back(je);
    }
    json maps = json::array();
    for (size_t v = 0; v < t.action.maps.size(); ++v) {
        const auto& M = t.action.maps[v];
        if (v == 0)
            maps.push_back(nullptr);
        else
            maps.push_back({M.a.str(), M.b.str(), M.c.str(), M.d.str()});
    }
    return {{"schema", kSchema},
            {"p", t.p},
            {"r", t.field->r()},
            {"m", t.m},
            {"chi", t.chi.str()},
            {"vertices", vertices},
            {"edges", edges},
            {"action", {{"vertex_map", t.action.vertex_map}, {"maps", maps}}}};
}

HurwitzTree hurwitz_from_json(const json& j)
{
    require_schema(j);
    HurwitzTree t;
    t.p = field<int>(j, "p");
    int r = j.contains("r") ? field<int>(j, "r") : 1;
    if (!is_prime(t.p) || r < 1)
        throw UsageError("p must be prime and r positive");
    const GaloisField& F = GaloisField::get(t.p, r);
    t.field = &F;
    t.m = field<int>(j, "m");
    auto elem = [&](const json& x) {
        auto pt = point_from_json(F, x);
        if (!pt)
            throw UsageError("expected a field element, got inf");
        return *pt;
    };
    try {
        t.chi = elem(j.at("chi"));
        for (const auto& jv : j.at("vertices")) {
            HurwitzVertex v;
            v.delta = json_rational(jv.at("delta"));
            if (jv.contains("omega"))
                v.omega = DiffForm(parse_ratfunc(F, jv["omega"].get<std::string>()));
            if (jv.contains("marked"))
                for (const auto& z : jv["marked"])
                    v.marked.push_back(point_from_json(F, z));
            t.vertices.push_back(v);
        }
        for (const auto& je : j.at("edges")) {
            HurwitzEdge e;
            e.parent = je.at("parent").get<int>();
            e.child = je.at("child").get<int>();
            e.epsilon = json_rational(je.at("epsilon"));
            e.child_point = point_from_json(F, je.at("child_point"));
            if (je.contains("parent_point"))
                e.parent_point = point_from_json(F, je["parent_point"]);
            t.edges.push_back(e);
        }
        const auto& act = j.at("action");
        t.action.vertex_map = act.at("vertex_map").get<std::vector<int>>();
        for (const auto& jm : act.at("maps")) {
            if (jm.is_null()) {
                t.action.maps.push_back(Mobius::identity(F));
                continue;
            }
            if (!jm.is_array() || jm.size() != 4)
                throw UsageError("each action map is [a, b, c, d]");
            t.action.maps.push_back(Mobius{elem(jm[0]), elem(jm[1]), elem(jm[2]), elem(jm[3])});
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed Hurwitz tree: ") + e.what());
    } catch (const DomainError& e) {
        throw UsageError(std::string("malformed Hurwitz tree: ") + e.what());
    }
    return t;
}

json cluster_tree_json(const ClusterTree& t)
{
    auto labels = [&](const std::vector<int>& xs) {
        json out = json::array();
        for (int x : xs)
            out.push_back(t.labels[x]);
        return out;
    };
    json vertices = json::array();
    for (size_t v = 0; v < t.vertices.size(); ++v) {
        const auto& vx = t.vertices[v];
        vertices.push_back({{"id", v + 1},
                            {"depth", rational_json(vx.depth)},
                            {"points", labels(vx.points)},
                            {"cluster", labels(vx.cluster)}});
    }
    json edges = json::array();
    for (const auto& e : t.edges)
        edges.push_back({{"parent", e.parent ? json(*e.parent + 1) : json("inf")},
                         {"child", e.child + 1},
                         {"thickness", rational_json(e.thickness)}});
    json rows = json::array();
    for (const auto& r : specialization_table(t)) {
        const char* kind = r.target.kind == Specialization::Kind::component ? "component"
                           : r.target.kind == Specialization::Kind::node    ? "node"
                                                                            : "infinity";
        json row{{"kind", kind}, {"region", r.region}};
        if (r.target.kind != Specialization::Kind::infinity)
            row["vertex"] = r.target.vertex + 1;
        rows.push_back(row);
    }
    return {{"vertices", vertices}, {"edges", edges}, {"specialization", rows}};
}

ClusterTree cluster_tree_from_json(const json& j, int precision_override)
{
    require_schema(j);
    try {
        if (j.contains("matrix")) {
            ValuationMatrix m;
            for (const auto& row : j["matrix"]) {
                std::vector<Rational> r;
                for (const auto& x : row) {
                    bool diagonal = r.size() == m.v.size();
                    r.push_back(diagonal && (x.is_null() || x == "inf") ? Rational(0) : json_rational(x));
                }
                m.v.push_back(r);
            }
            if (j.contains("labels"))
                m.labels = j["labels"].get<std::vector<std::string>>();
            return cluster_tree(m);
        }
        const auto& jr = j.at("ring");
        int p = field<int>(jr, "p");
        int r = jr.contains("r") ? field<int>(jr, "r") : 1;
        auto eis = field<std::vector<std::int64_t>>(jr, "eisenstein");
        int N = precision_override ? precision_override
                                   : (jr.contains("precision") ? field<int>(jr, "precision") : 8 * static_cast<int>(eis.size()));
        auto R = EisensteinRing::create(p, r, eis, N);
        std::string name = jr.contains("uniformizer") ? field<std::string>(jr, "uniformizer") : "pi";
        std::map<std::string, PadicElement> symbols{{name, PadicElement::pi(R)}};
        MarkedDisc d{R, {}, {}};
        for (const auto& pt : j.at("points")) {
            std::string value = pt.is_string() ? pt.get<std::string>() : field<std::string>(pt, "value");
            std::string label = pt.is_string() ? value : (pt.contains("label") ? field<std::string>(pt, "label") : value);
            d.points.push_back(parse_padic(value, R, symbols));
            d.labels.push_back(label);
        }
        return cluster_tree(d);
    } catch (const json::exception& e) {
        throw UsageError(std::string("malformed marked disc: ") + e.what());
    }
}

DepthInput depth_input_from_json(const json& j, int precision_override)
{
    require_schema(j);
    int p = field<int>(j, "p");
    int level = j.contains("level") ? field<int>(j, "level") : 1;
    if (level != 1 && level != 2)
        throw UsageError("level must be 1 or 2");
    int N = precision_override ? precision_override : default_precision(p, level);
    DepthInput in{make_cyclotomic_ring(p, level, N), {}};
    const auto& C = in.ring;
    std::map<std::string, PadicElement> symbols{{"pi", C.pi}, {"lambda", C.lambda}};
    if (C.mu)
        symbols.emplace("mu", *C.mu);
    in.f = ValuedLaurentPoly(C.ring);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw UsageError("missing array \"terms\"");
    for (const auto& t : j["terms"]) {
        auto c = parse_padic(field<std::string>(t, "coefficient"), C.ring, symbols);
        int w;
        if (t.contains("w"))
            w = field<int>(t, "w");
        else if (t.contains("t"))
            w = -field<int>(t, "t");
        else
            throw UsageError("each term needs \"w\" (power of 1/T) or \"t\" (power of T)");
        in.f = in.f + ValuedLaurentPoly::monomial(c, w);
    }
    return in;
}

}  // namespace oort::cli
