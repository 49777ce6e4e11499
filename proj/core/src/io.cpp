#include "mgrecon/io.hpp"

#include <charconv>
#include <limits>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include <fmt/format.h>

#include "json.hpp"

namespace mgrecon::io {

namespace {

using json = nlohmann::json;

std::ifstream open_input(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(fmt::format("{}: cannot open for reading", path.string()));
    return in;
}

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

template <typename T>
std::optional<T> parse_number(std::string_view text)
{
    text = trim(text);
    T value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        return std::nullopt;
    return value;
}

double json_real(const json& node, const std::string& where)
{
    if (!node.is_number())
        throw ParseError(fmt::format("{}: expected a number, got {}", where, node.dump()));
    return node.get<double>();
}

std::size_t json_index(const json& node, const std::string& where)
{
    if (!node.is_number_integer() || node.get<long long>() < 0)
        throw ParseError(fmt::format("{}: expected a non-negative integer, got {}", where, node.dump()));
    return node.get<std::size_t>();
}

std::optional<Provenance> parse_provenance(std::string_view comment, const std::string& where)
{
    const auto edge_at = comment.find("edge=");
    const auto t_at = comment.find("t=");
    if (edge_at == std::string_view::npos)
        return std::nullopt;
    if (t_at == std::string_view::npos)
        throw ParseError(fmt::format("{}: provenance comment has edge= but no t=", where));
    const auto token = [&](std::size_t from) {
        auto rest = comment.substr(from);
        return rest.substr(0, rest.find_first_of(" \t"));
    };
    const auto edge = parse_number<std::size_t>(token(edge_at + 5));
    const auto t = parse_number<double>(token(t_at + 2));
    if (!edge || !t)
        throw ParseError(fmt::format("{}: malformed provenance comment '{}'", where, trim(comment)));
    return Provenance{*edge, *t};
}

}  // namespace

std::string format_real(double value) { return fmt::format("{}", value); }

EmbeddedMetricGraph read_graph(std::istream& in, const std::string& source)
{
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(fmt::format("{}: {}", source, e.what()));
    }
    if (!doc.is_object())
        throw ParseError(fmt::format("{}: top level must be a JSON object", source));
    for (const char* key : {"dim", "vertices", "edges"})
        if (!doc.contains(key))
            throw ParseError(fmt::format("{}: missing field \"{}\"", source, key));

    EmbeddedMetricGraph g;
    g.dim = json_index(doc["dim"], source + ": dim");
    const json& vertices = doc["vertices"];
    if (!vertices.is_array())
        throw ParseError(fmt::format("{}: vertices: expected an array", source));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const json& v = vertices[i];
        const std::string where = fmt::format("{}: vertices[{}]", source, i);
        if (!v.is_array() || v.size() != g.dim)
            throw ParseError(fmt::format("{}: expected an array of {} numbers", where, g.dim));
        Point p(g.dim);
        for (std::size_t c = 0; c < g.dim; ++c)
            p[c] = json_real(v[c], fmt::format("{}[{}]", where, c));
        g.vertices.push_back(std::move(p));
    }
    const json& edges = doc["edges"];
    if (!edges.is_array())
        throw ParseError(fmt::format("{}: edges: expected an array", source));
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const json& pair = edges[e];
        const std::string where = fmt::format("{}: edges[{}]", source, e);
        if (!pair.is_array() || pair.size() != 2)
            throw ParseError(fmt::format("{}: expected [i, j]", where));
        g.edges.push_back({json_index(pair[0], where + "[0]"), json_index(pair[1], where + "[1]")});
    }
    return g;
}

EmbeddedMetricGraph read_graph_file(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return read_graph(in, path.string());
}

void write_graph(std::ostream& out, const EmbeddedMetricGraph& graph)
{
    out << "{\n  \"dim\": " << graph.dim << ",\n  \"vertices\": [";
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        out << (i ? ",\n    [" : "\n    [");
        for (std::size_t c = 0; c < graph.vertices[i].dim(); ++c)
            out << (c ? ", " : "") << format_real(graph.vertices[i][c]);
        out << "]";
    }
    out << "\n  ],\n  \"edges\": [";
    for (std::size_t e = 0; e < graph.edges.size(); ++e)
        out << (e ? ", " : "") << "[" << graph.edges[e][0] << ", " << graph.edges[e][1] << "]";
    out << "]\n}\n";
}

Sample read_points(std::istream& in, const std::string& source)
{
    Sample sample;
    std::vector<std::optional<Provenance>> provenance;
    bool any_provenance = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = fmt::format("{}:{}", source, line_no);
        std::string_view body = line;
        std::string_view comment;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) {
            comment = body.substr(hash + 1);
            body = body.substr(0, hash);
        }
        body = trim(body);
        if (body.empty())
            continue;

        std::vector<double> coords;
        std::size_t field = 0;
        while (true) {
            const auto comma = body.find(',');
            const std::string_view text = body.substr(0, comma);
            const auto value = parse_number<double>(text);
            if (!value)
                throw ParseError(fmt::format("{}: field {}: '{}' is not a number", where, field + 1, trim(text)));
            coords.push_back(*value);
            ++field;
            if (comma == std::string_view::npos)
                break;
            body = body.substr(comma + 1);
        }
        if (coords.size() < 2)
            throw ParseError(fmt::format("{}: expected at least 2 coordinates, got {}", where, coords.size()));
        if (!sample.points.empty() && coords.size() != sample.dim())
            throw ParseError(
                fmt::format("{}: expected {} coordinates like the first point, got {}", where, sample.dim(), coords.size()));
        sample.points.emplace_back(std::move(coords));
        provenance.push_back(parse_provenance(comment, where));
        any_provenance = any_provenance || provenance.back().has_value();
    }
    if (any_provenance)
        sample.provenance = std::move(provenance);
    return sample;
}

Sample read_points_file(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return read_points(in, path.string());
}

void write_points(std::ostream& out, const Sample& sample, bool with_provenance)
{
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const Point& p = sample.points[i];
        for (std::size_t c = 0; c < p.dim(); ++c)
            out << (c ? "," : "") << format_real(p[c]);
        if (with_provenance)
            if (const auto prov = sample.provenance_of(i))
                out << " # edge=" << prov->edge << " t=" << format_real(prov->t);
        out << '\n';
    }
}

void write_polyline(std::ostream& out, const ClosedPolyline& polyline)
{
    out << "# polyline closed n=" << polyline.size() << '\n';
    Sample s;
    s.points = polyline.vertices;
    write_points(out, s, false);
}

ClosedPolyline read_polyline(std::istream& in, const std::string& source)
{
    std::string first;
    if (!std::getline(in, first) || trim(first).rfind("# polyline closed", 0) != 0)
        throw ParseError(fmt::format("{}:1: expected '# polyline closed' header", source));
    Sample s = read_points(in, source);
    return ClosedPolyline{std::move(s.points)};
}

ClosedPolyline read_polyline_file(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return read_polyline(in, path.string());
}

void write_complex(std::ostream& out, const SimplicialComplex2& complex)
{
    for (std::size_t v = 0; v < complex.vertex_count(); ++v)
        out << "v " << v << '\n';
    for (const auto& [i, j] : complex.edges())
        out << "e " << i << ' ' << j << '\n';
    for (const auto& [i, j, k] : complex.triangles())
        out << "t " << i << ' ' << j << ' ' << k << '\n';
}

SimplicialComplex2 read_complex(std::istream& in, const std::string& source)
{
    std::size_t vertices = 0;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string where = fmt::format("{}:{}", source, line_no);
        std::istringstream fields(line);
        std::string kind;
        if (!(fields >> kind) || kind.front() == '#')
            continue;
        std::vector<long long> ids;
        for (long long id; fields >> id;)
            ids.push_back(id);
        if (!fields.eof())
            throw ParseError(fmt::format("{}: non-integer vertex index", where));
        for (long long id : ids)
            if (id < 0 || id > static_cast<long long>(std::numeric_limits<Index>::max()))
                throw ParseError(fmt::format("{}: vertex index {} out of range", where, id));
        const auto idx = [&](std::size_t k) { return static_cast<Index>(ids[k]); };
        if (kind == "v" && ids.size() == 1) {
            if (static_cast<std::size_t>(ids[0]) != vertices)
                throw ParseError(fmt::format("{}: expected 'v {}', vertices must be listed in order", where, vertices));
            ++vertices;
        } else if (kind == "e" && ids.size() == 2) {
            edges.push_back({idx(0), idx(1)});
        } else if (kind == "t" && ids.size() == 3) {
            triangles.push_back({idx(0), idx(1), idx(2)});
        } else {
            throw ParseError(fmt::format("{}: expected 'v i', 'e i j' or 't i j k'", where));
        }
    }
    try {
        return SimplicialComplex2(vertices, std::move(edges), std::move(triangles));
    } catch (const std::invalid_argument& e) {
        throw ParseError(fmt::format("{}: {}", source, e.what()));
    }
}

SimplicialComplex2 read_complex_file(const std::filesystem::path& path)
{
    auto in = open_input(path);
    return read_complex(in, path.string());
}

}  // namespace mgrecon::io
