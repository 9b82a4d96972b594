#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cfem/errors.hpp"
#include "cfem/mesh.hpp"

namespace cfem {

namespace {

constexpr const char* kMagic = "CFEM-MESH";
constexpr int kVersion = 1;

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

void write_mesh(const Mesh& m, std::ostream& os) {
    os << kMagic << ' ' << kVersion << '\n';
    os << m.num_vertices() << ' ' << m.num_triangles() << '\n';
    for (int i = 0; i < m.num_vertices(); ++i) {
        os << fmt_double(m.vertices[i].x) << ' ' << fmt_double(m.vertices[i].y) << ' '
           << int(m.boundary_vertex[i]) << '\n';
    }
    for (const auto& t : m.triangles) {
        os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    }
}

void write_mesh(const Mesh& m, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw DomainError("cannot open '" + path + "' for writing");
    write_mesh(m, os);
    if (!os) throw DomainError("write to '" + path + "' failed");
}

Mesh read_mesh(std::istream& is) {
    int lineno = 0;
    std::string line;
    auto next_line = [&](const char* what) {
        while (std::getline(is, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return;
        }
        ++lineno;
        throw ParseError(std::string("unexpected end of file, expected ") + what, lineno);
    };

    next_line("header");
    {
        std::istringstream ss(line);
        std::string magic;
        int version = -1;
        ss >> magic >> version;
        if (magic != kMagic) throw ParseError("bad magic '" + magic + "'", lineno);
        if (version != kVersion) {
            throw FormatVersionError("unsupported mesh format version " +
                                     std::to_string(version));
        }
    }

    next_line("vertex/triangle counts");
    long long nv = -1, nt = -1;
    {
        std::istringstream ss(line);
        if (!(ss >> nv >> nt) || nv < 0 || nt < 0) {
            throw ParseError("bad counts line '" + line + "'", lineno);
        }
    }

    Mesh m;
    m.domain = {-1.0, -1.0, 1.0, 1.0};
    m.vertices.reserve(nv);
    m.boundary_vertex.reserve(nv);
    for (long long i = 0; i < nv; ++i) {
        next_line("vertex");
        std::istringstream ss(line);
        double x, y;
        int b;
        if (!(ss >> x >> y >> b) || (b != 0 && b != 1)) {
            throw ParseError("bad vertex line '" + line + "'", lineno);
        }
        m.vertices.push_back({x, y});
        m.boundary_vertex.push_back(static_cast<std::uint8_t>(b));
    }
    for (long long i = 0; i < nt; ++i) {
        next_line("triangle");
        std::istringstream ss(line);
        int a, b, c;
        if (!(ss >> a >> b >> c)) {
            throw ParseError("bad triangle line '" + line + "'", lineno);
        }
        if (a < 0 || b < 0 || c < 0 || a >= nv || b >= nv || c >= nv) {
            throw ParseError("triangle index out of range", lineno);
        }
        m.triangles.push_back({a, b, c});
    }
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            throw ParseError("trailing data after last triangle", lineno);
        }
    }

    // Domain box from the vertex extents (the format does not carry it).
    if (!m.vertices.empty()) {
        Rect r{m.vertices[0].x, m.vertices[0].y, m.vertices[0].x, m.vertices[0].y};
        for (const Point& p : m.vertices) {
            r.xmin = std::min(r.xmin, p.x);
            r.ymin = std::min(r.ymin, p.y);
            r.xmax = std::max(r.xmax, p.x);
            r.ymax = std::max(r.ymax, p.y);
        }
        m.domain = r;
    }
    return m;
}

Mesh read_mesh(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw DomainError("cannot open '" + path + "' for reading");
    return read_mesh(is);
}

}  // namespace cfem
