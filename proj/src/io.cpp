#include "djm/io.hpp"

#include <fstream>
#include <sstream>

#include "djm/errors.hpp"

namespace djm {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

const Json& array_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
    return v;
}

Point point_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2) throw InputError("a point is a two-element array");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

Json pair_json(const Drawing& d, EdgeId e)
{
    auto [a, b] = std::minmax(d.edge(e).u, d.edge(e).v);
    return Json::array({a, b});
}

Json stats_json(const StageStats& s)
{
    Json j;
    j["root"] = s.root;
    j["delta"] = s.delta;
    j["u"] = s.u;
    j["columns"] = s.columns;
    j["stage_a_size"] = s.stage_a_size;
    j["cut_column"] = s.cut_column;
    j["kept_count"] = s.kept_count;
    Json chains = Json::object();
    for (std::size_t k = 0; k < kOrderKinds.size(); ++k) chains[to_string(kOrderKinds[k])] = s.chain_lengths[k];
    j["chain_lengths"] = chains;
    j["stage_b_size"] = s.stage_b_size;
    return j;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Point& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Json to_json(const Drawing& d)
{
    Json j;
    j["n"] = d.vertex_count();
    Json vs = Json::array();
    for (const Point& p : d.vertices()) vs.push_back(to_json(p));
    j["vertices"] = vs;
    Json es = Json::array();
    for (const PolylineEdge& e : d.edges()) {
        Json ej;
        ej["u"] = e.u;
        ej["v"] = e.v;
        Json chain = Json::array();
        for (const Point& p : e.chain) chain.push_back(to_json(p));
        ej["chain"] = chain;
        es.push_back(ej);
    }
    j["edges"] = es;
    j["complete"] = d.complete();
    return j;
}

Json to_json(const CylindricalDrawing& c)
{
    Json j;
    j["delta"] = c.delta;
    j["columns"] = c.column_vertex;
    Json es = Json::array();
    for (const CylEdge& e : c.edges) {
        Json ej;
        ej["i"] = e.i;
        ej["j"] = e.j;
        ej["side"] = to_string(e.side.kind);
        Json hs = Json::object();
        for (std::size_t k = 0; k < e.side.columns.size(); ++k) hs[std::to_string(e.side.columns[k])] = e.heights[k];
        ej["heights"] = hs;
        es.push_back(ej);
    }
    j["edges"] = es;
    return j;
}

Json to_json(const ValidationReport& r)
{
    Json j;
    j["ok"] = r.ok;
    Json vs = Json::array();
    for (const Violation& v : r.violations) {
        Json vj;
        vj["kind"] = to_string(v.kind);
        vj["first"] = v.first;
        vj["second"] = v.second;
        vj["vertex"] = v.vertex;
        vj["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
        vs.push_back(vj);
    }
    j["violations"] = vs;
    return j;
}

Json to_json(const PlaneSubgraph& g, const std::string& drawing_ref)
{
    const Drawing& d = g.base();
    Json j;
    j["drawing"] = drawing_ref;
    j["root"] = g.root();
    Json es = Json::array();
    for (EdgeId e : g.edges()) es.push_back(pair_json(d, e));
    j["edges"] = es;
    Json trace = Json::array();
    for (const GrowStep& s : g.trace()) {
        Json sj;
        sj["vertex"] = s.vertex;
        Json added = Json::array();
        for (EdgeId e : s.added) added.push_back(pair_json(d, e));
        sj["added"] = added;
        trace.push_back(sj);
    }
    j["trace"] = trace;
    return j;
}

Json to_json(const MatchingResult& r, const Drawing& d)
{
    Json j;
    Json es = Json::array();
    for (EdgeId e : r.edges) es.push_back(pair_json(d, e));
    j["edges"] = es;
    j["size"] = r.size;
    j["stats"] = stats_json(r.stats);
    return j;
}

Json to_json(const OracleResult& r, const Drawing& d)
{
    Json j;
    Json es = Json::array();
    for (int e : r.witness) es.push_back(pair_json(d, e));
    j["edges"] = es;
    j["size"] = r.optimum;
    j["exact"] = r.exact;
    j["explored"] = r.explored;
    return j;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw InputError("a rational is a string \"p\" or \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Drawing drawing_from_json(const Json& j)
{
    int n = int_field(j, "n");
    const Json& vs = array_field(j, "vertices");
    if (n < 0 || static_cast<int>(vs.size()) != n) throw InputError("vertex count does not match n");
    std::vector<Point> vertices;
    for (const Json& v : vs) vertices.push_back(point_from_json(v));
    std::vector<PolylineEdge> edges;
    for (const Json& e : array_field(j, "edges")) {
        PolylineEdge pe{int_field(e, "u"), int_field(e, "v"), {}};
        for (const Json& p : array_field(e, "chain")) pe.chain.push_back(point_from_json(p));
        edges.push_back(std::move(pe));
    }
    const Json& complete = field(j, "complete");
    if (!complete.is_boolean()) throw InputError("field 'complete' must be a boolean");
    return Drawing(std::move(vertices), std::move(edges), complete.get<bool>());
}

CylindricalDrawing cylindrical_from_json(const Json& j)
{
    CylindricalDrawing c;
    c.delta = int_field(j, "delta");
    if (c.delta < 1) throw InputError("delta must be positive");
    for (const Json& v : array_field(j, "columns")) {
        if (!v.is_number_integer()) throw InputError("column vertex ids must be integers");
        c.column_vertex.push_back(v.get<int>());
    }
    for (const Json& e : array_field(j, "edges")) {
        CylEdge ce;
        ce.i = int_field(e, "i");
        ce.j = int_field(e, "j");
        if (ce.i < 0 || ce.j >= c.delta || ce.i >= ce.j) throw InputError("cylinder edge needs 0 <= i < j < delta");
        const Json& side = field(e, "side");
        if (side == "INNER") ce.side = make_side(SideKind::Inner, ce.i, ce.j, c.delta);
        else if (side == "OUTER") ce.side = make_side(SideKind::Outer, ce.i, ce.j, c.delta);
        else throw InputError("side must be INNER or OUTER");
        const Json& hs = field(e, "heights");
        if (!hs.is_object()) throw InputError("heights must be an object");
        for (int l : ce.side.columns) {
            std::string key = std::to_string(l);
            if (!hs.contains(key) || !hs.at(key).is_number_integer())
                throw InputError("missing height for column " + key);
            ce.heights.push_back(hs.at(key).get<int>());
        }
        if (hs.size() != ce.side.columns.size()) throw InputError("heights given for columns the edge does not pass");
        c.edges.push_back(std::move(ce));
    }
    return c;
}

MatchingResult matching_from_json(const Json& j, const Drawing& d)
{
    MatchingResult r;
    for (const Json& e : array_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw InputError("matching edges are [u, v] pairs");
        int a = e[0].get<int>();
        int b = e[1].get<int>();
        if (a < 0 || b < 0 || a >= d.vertex_count() || b >= d.vertex_count()) throw InputError("vertex out of range");
        auto id = d.find_edge(a, b);
        if (!id) throw InputError("matching edge is not an edge of the drawing");
        r.edges.push_back(*id);
    }
    std::sort(r.edges.begin(), r.edges.end());
    r.size = static_cast<int>(r.edges.size());
    if (j.contains("stats") && j.at("stats").is_object()) {
        const Json& s = j.at("stats");
        auto get = [&](const char* key, int fallback) {
            return s.contains(key) && s.at(key).is_number_integer() ? s.at(key).get<int>() : fallback;
        };
        r.stats.root = get("root", -1);
        r.stats.delta = get("delta", 0);
        r.stats.u = get("u", -1);
        r.stats.columns = get("columns", 0);
        r.stats.stage_a_size = get("stage_a_size", 0);
        r.stats.cut_column = get("cut_column", -1);
        r.stats.kept_count = get("kept_count", 0);
        r.stats.stage_b_size = get("stage_b_size", 0);
        if (s.contains("chain_lengths") && s.at("chain_lengths").is_object())
            for (std::size_t k = 0; k < kOrderKinds.size(); ++k) {
                const Json& cl = s.at("chain_lengths");
                std::string name = to_string(kOrderKinds[k]);
                if (cl.contains(name) && cl.at(name).is_number_integer()) r.stats.chain_lengths[k] = cl.at(name).get<int>();
            }
    }
    if (!certificate_failures(d, r.edges).empty()) throw CertificationFailure("stored matching is not pairwise disjoint");
    return r;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << dump(j);
    if (!out) throw InputError("write to '" + path + "' failed");
}

FileInstance instance_from_json(const Json& j)
{
    try {
        if (j.is_object() && j.contains("delta")) return cylindrical_from_json(j);
        return drawing_from_json(j);
    } catch (const Json::exception& e) {
        throw InputError(e.what());
    }
}

FileInstance read_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

}  // namespace djm
