#include "rangehit/io.hpp"

#include <json.hpp>

namespace rangehit {

namespace {

using Json = nlohmann::ordered_json;

Json rational_array(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_string(v));
    return arr;
}

std::vector<Rational> parse_rationals(const Json& arr, const std::string& where) {
    if (!arr.is_array()) throw std::invalid_argument(where + ": array expected");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const Json& v = arr[i];
        if (!v.is_string())
            throw std::invalid_argument(where + "[" + std::to_string(i) + "]: rational string expected");
        try {
            out.push_back(parse_rational(v.get<std::string>()));
        } catch (const std::exception& e) {
            throw std::invalid_argument(where + "[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return out;
}

}  // namespace

InstanceDocument document_from_geometric(GeometricInstance instance) {
    InstanceDocument doc;
    doc.kind = "geometric";
    doc.geometric = std::move(instance);
    return doc;
}

InstanceDocument document_from_abstract(int num_vertices, std::vector<std::vector<int>> edges) {
    InstanceDocument doc;
    doc.kind = "abstract";
    doc.abstract = AbstractInstance{num_vertices, std::move(edges)};
    return doc;
}

std::string serialize_instance(const InstanceDocument& doc) {
    Json j;
    j["version"] = doc.version;
    j["kind"] = doc.kind;
    if (doc.kind == "geometric") {
        if (!doc.geometric) throw std::invalid_argument("geometric document without geometry");
        const GeometricInstance& g = *doc.geometric;
        j["dim"] = g.dim;
        Json points = Json::array();
        for (const Point& p : g.points) points.push_back(rational_array(p.coords));
        j["points"] = std::move(points);
        Json ranges = Json::array();
        for (const Range& r : g.ranges) {
            Json entry;
            if (const auto* hs = std::get_if<HalfSpace>(&r)) {
                entry["halfspace"] = Json{{"normal", rational_array(hs->normal)},
                                          {"offset", to_string(hs->offset)}};
            } else {
                const auto& disc = std::get<Disc>(r);
                entry["disc"] = Json{{"center", rational_array(disc.center.coords)},
                                     {"radiusSq", to_string(disc.radius_sq)}};
            }
            ranges.push_back(std::move(entry));
        }
        j["ranges"] = std::move(ranges);
    } else if (doc.kind == "abstract") {
        if (!doc.abstract) throw std::invalid_argument("abstract document without edges");
        j["numVertices"] = doc.abstract->num_vertices;
        j["edges"] = doc.abstract->edges;
    } else {
        throw std::invalid_argument("unknown document kind: " + doc.kind);
    }
    return j.dump(2) + "\n";
}

InstanceDocument parse_instance(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("instance parse: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("instance parse: object expected at top level");

    InstanceDocument doc;
    if (!j.contains("version") || !j["version"].is_string() || j["version"] != "1")
        throw std::invalid_argument("version: expected \"1\"");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw std::invalid_argument("kind: expected \"geometric\" or \"abstract\"");
    doc.kind = j["kind"].get<std::string>();

    if (doc.kind == "geometric") {
        if (!j.contains("dim") || !j["dim"].is_number_integer())
            throw std::invalid_argument("dim: integer expected");
        const int dim = j["dim"].get<int>();
        if (!j.contains("points")) throw std::invalid_argument("points: missing");
        std::vector<Point> points;
        const Json& pts = j["points"];
        if (!pts.is_array()) throw std::invalid_argument("points: array expected");
        for (std::size_t i = 0; i < pts.size(); ++i)
            points.emplace_back(parse_rationals(pts[i], "points[" + std::to_string(i) + "]"));
        if (!j.contains("ranges")) throw std::invalid_argument("ranges: missing");
        const Json& rs = j["ranges"];
        if (!rs.is_array()) throw std::invalid_argument("ranges: array expected");
        std::vector<Range> ranges;
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const std::string where = "ranges[" + std::to_string(i) + "]";
            const Json& r = rs[i];
            if (!r.is_object() || r.size() != 1)
                throw std::invalid_argument(where + ": one-key object expected");
            try {
                if (r.contains("halfspace")) {
                    const Json& h = r["halfspace"];
                    if (!h.contains("normal") || !h.contains("offset") || !h["offset"].is_string())
                        throw std::invalid_argument("normal/offset required");
                    ranges.emplace_back(HalfSpace(parse_rationals(h["normal"], where + ".normal"),
                                                  parse_rational(h["offset"].get<std::string>())));
                } else if (r.contains("disc")) {
                    const Json& d = r["disc"];
                    if (!d.contains("center") || !d.contains("radiusSq") || !d["radiusSq"].is_string())
                        throw std::invalid_argument("center/radiusSq required");
                    ranges.emplace_back(Disc(Point(parse_rationals(d["center"], where + ".center")),
                                             parse_rational(d["radiusSq"].get<std::string>())));
                } else {
                    throw std::invalid_argument("tag must be halfspace or disc");
                }
            } catch (const std::invalid_argument& e) {
                throw std::invalid_argument(where + ": " + e.what());
            }
        }
        try {
            doc.geometric = GeometricInstance(dim, std::move(points), std::move(ranges));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("instance: ") + e.what());
        }
    } else if (doc.kind == "abstract") {
        if (!j.contains("numVertices") || !j["numVertices"].is_number_integer())
            throw std::invalid_argument("numVertices: integer expected");
        if (!j.contains("edges") || !j["edges"].is_array())
            throw std::invalid_argument("edges: array expected");
        AbstractInstance abs;
        abs.num_vertices = j["numVertices"].get<int>();
        for (std::size_t i = 0; i < j["edges"].size(); ++i) {
            const Json& e = j["edges"][i];
            if (!e.is_array()) throw std::invalid_argument("edges[" + std::to_string(i) + "]: array expected");
            std::vector<int> edge;
            for (const Json& v : e) {
                if (!v.is_number_integer())
                    throw std::invalid_argument("edges[" + std::to_string(i) + "]: integers expected");
                edge.push_back(v.get<int>());
            }
            abs.edges.push_back(std::move(edge));
        }
        doc.abstract = std::move(abs);
    } else {
        throw std::invalid_argument("kind: expected \"geometric\" or \"abstract\"");
    }
    return doc;
}

BuildResult hypergraph_of(const InstanceDocument& doc) {
    if (doc.kind == "geometric") {
        if (!doc.geometric) throw std::invalid_argument("geometric document without geometry");
        return build_hypergraph(*doc.geometric);
    }
    if (doc.kind == "abstract") {
        if (!doc.abstract) throw std::invalid_argument("abstract document without edges");
        return BuildResult{hypergraph_from_edges(doc.abstract->num_vertices, doc.abstract->edges), 0};
    }
    throw std::invalid_argument("unknown document kind: " + doc.kind);
}

std::string serialize_embedding_sidecar(const Embedding& emb) {
    Json j;
    j["version"] = "1";
    j["dim"] = emb.dim;
    Json coeffs = Json::array();
    for (const auto& row : emb.coefficients) coeffs.push_back(rational_array(row));
    j["coefficients"] = std::move(coeffs);
    Json certs = Json::array();
    for (const auto& row : emb.certificates) certs.push_back(rational_array(row));
    j["certificates"] = std::move(certs);
    return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(const std::string& data) {
    static const char* hex = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = hex[h & 0xF];
        h >>= 4;
    }
    return out;
}

}  // namespace rangehit
