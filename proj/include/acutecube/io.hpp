#pragma once

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acutecube/audit.hpp"
#include "acutecube/mesh.hpp"
#include "acutecube/point.hpp"
#include "acutecube/symmetry.hpp"

namespace acutecube {

inline constexpr const char* kToolVersion = "1.0.0";

struct IoError : Error {
    using Error::Error;
};

struct ParseError : IoError {
    std::string file;
    int line;
    ParseError(std::string f, int ln, const std::string& what)
        : IoError(f + ":" + std::to_string(ln) + ": " + what), file(std::move(f)), line(ln) {}
};

// ---- milliunit <-> decimal text ----

inline std::string format_milli(std::int64_t v) {
    std::string out;
    if (v < 0) out += '-';
    const std::int64_t a = v < 0 ? -v : v;
    out += std::to_string(a / 1000);
    std::int64_t frac = a % 1000;
    if (frac != 0) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%03lld", static_cast<long long>(frac));
        std::string fs(buf);
        while (fs.back() == '0') fs.pop_back();
        out += '.';
        out += fs;
    }
    return out;
}

// Parses a signed decimal with at most 3 fraction digits into milliunits.
inline std::int64_t parse_milli(const std::string& tok) {
    std::size_t i = 0;
    bool neg = false;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) {
        neg = tok[i] == '-';
        ++i;
    }
    std::int64_t whole = 0;
    bool any = false;
    while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') {
        whole = whole * 10 + (tok[i] - '0');
        if (whole > 9'000'000'000'000'000LL) throw IoError("coordinate overflow: " + tok);
        any = true;
        ++i;
    }
    std::int64_t frac = 0;
    int frac_digits = 0;
    if (i < tok.size() && tok[i] == '.') {
        ++i;
        while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') {
            if (++frac_digits > 3) {
                throw IoError("more than 3 decimals in coordinate: " + tok);
            }
            frac = frac * 10 + (tok[i] - '0');
            any = true;
            ++i;
        }
    }
    if (!any || i != tok.size()) throw IoError("malformed coordinate: " + tok);
    while (frac_digits < 3) {
        frac *= 10;
        ++frac_digits;
    }
    const std::int64_t v = whole * 1000 + frac;
    return neg ? -v : v;
}

// ---- atomic file writing ----

inline void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp);
        out << content;
        if (!out) throw IoError("write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- vertex tables ----
// One vertex per line, three signed decimals with at most 3 fraction digits.
// '#' comments and blank lines are ignored on read.

inline std::string render_vertex_table(const std::vector<MilliPoint>& pts) {
    std::string out;
    for (const auto& p : pts) {
        out += format_milli(p.x);
        out += ' ';
        out += format_milli(p.y);
        out += ' ';
        out += format_milli(p.z);
        out += '\n';
    }
    return out;
}

inline void write_vertex_table(const std::string& path, const std::vector<MilliPoint>& pts) {
    write_file_atomic(path, render_vertex_table(pts));
}

inline std::vector<MilliPoint> parse_vertex_table(const std::string& text,
                                                  const std::string& filename) {
    std::vector<MilliPoint> pts;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != 3) {
            throw ParseError(filename, lineno, "expected 3 coordinates, got " +
                                                   std::to_string(toks.size()));
        }
        try {
            pts.push_back({parse_milli(toks[0]), parse_milli(toks[1]), parse_milli(toks[2])});
        } catch (const IoError& e) {
            throw ParseError(filename, lineno, e.what());
        }
    }
    return pts;
}

inline std::vector<MilliPoint> read_vertex_table(const std::string& path) {
    return parse_vertex_table(read_file(path), path);
}

// ---- node / ele mesh bundles ----
// TetGen-style layout with 0-based contiguous indices.

inline std::string render_node(const std::vector<MilliPoint>& pts) {
    std::string out = std::to_string(pts.size()) + " 3 0 0\n";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out += std::to_string(i);
        out += ' ';
        out += format_milli(pts[i].x);
        out += ' ';
        out += format_milli(pts[i].y);
        out += ' ';
        out += format_milli(pts[i].z);
        out += '\n';
    }
    return out;
}

inline std::string render_ele(const std::vector<Tet>& tets) {
    std::string out = std::to_string(tets.size()) + " 4 0\n";
    for (std::size_t i = 0; i < tets.size(); ++i) {
        out += std::to_string(i);
        for (int v : tets[i].v) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (!toks.empty()) rows.push_back(std::move(toks));
    }
    return rows;
}

inline long parse_int(const std::string& tok, const std::string& file, int row) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(file, row, "expected integer, got '" + tok + "'");
    }
}

}  // namespace detail

inline std::vector<MilliPoint> read_node(const std::string& path) {
    const auto rows = detail::tokenize_lines(read_file(path));
    if (rows.empty()) throw ParseError(path, 1, "empty node file");
    const long n = detail::parse_int(rows[0][0], path, 1);
    if (n < 0 || rows.size() != static_cast<std::size_t>(n) + 1) {
        throw ParseError(path, 1, "node count does not match line count");
    }
    std::vector<MilliPoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const auto& r = rows[static_cast<std::size_t>(i) + 1];
        if (r.size() != 4) throw ParseError(path, static_cast<int>(i) + 2, "expected 4 fields");
        if (detail::parse_int(r[0], path, static_cast<int>(i) + 2) != i) {
            throw ParseError(path, static_cast<int>(i) + 2, "node indices must be 0-based");
        }
        try {
            pts.push_back({parse_milli(r[1]), parse_milli(r[2]), parse_milli(r[3])});
        } catch (const IoError& e) {
            throw ParseError(path, static_cast<int>(i) + 2, e.what());
        }
    }
    return pts;
}

inline std::vector<Tet> read_ele(const std::string& path, int vertex_count) {
    const auto rows = detail::tokenize_lines(read_file(path));
    if (rows.empty()) throw ParseError(path, 1, "empty ele file");
    const long n = detail::parse_int(rows[0][0], path, 1);
    if (n < 0 || rows.size() != static_cast<std::size_t>(n) + 1) {
        throw ParseError(path, 1, "tet count does not match line count");
    }
    std::vector<Tet> tets;
    tets.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const auto& r = rows[static_cast<std::size_t>(i) + 1];
        if (r.size() != 5) throw ParseError(path, static_cast<int>(i) + 2, "expected 5 fields");
        Tet t;
        for (int k = 0; k < 4; ++k) {
            const long v = detail::parse_int(r[static_cast<std::size_t>(k) + 1], path,
                                             static_cast<int>(i) + 2);
            if (v < 0 || v >= vertex_count) {
                throw ParseError(path, static_cast<int>(i) + 2, "vertex index out of range");
            }
            t.v[static_cast<std::size_t>(k)] = static_cast<int>(v);
        }
        tets.push_back(t);
    }
    return tets;
}

inline void write_bundle(const std::string& base, const TetMesh& mesh) {
    write_file_atomic(base + ".node", render_node(mesh.vertices));
    write_file_atomic(base + ".ele", render_ele(mesh.tets));
}

inline TetMesh read_bundle(const std::string& base) {
    auto pts = read_node(base + ".node");
    auto tets = read_ele(base + ".ele", static_cast<int>(pts.size()));
    return make_mesh(std::move(pts), std::move(tets));
}

// ---- VTK legacy unstructured grid (viewer export) ----

inline std::string render_vtk(const TetMesh& mesh) {
    std::string out =
        "# vtk DataFile Version 3.0\nacutecube tetrahedral mesh\nASCII\n"
        "DATASET UNSTRUCTURED_GRID\n";
    out += "POINTS " + std::to_string(mesh.vertices.size()) + " double\n";
    for (const auto& p : mesh.vertices) {
        out += format_milli(p.x);
        out += ' ';
        out += format_milli(p.y);
        out += ' ';
        out += format_milli(p.z);
        out += '\n';
    }
    out += "CELLS " + std::to_string(mesh.tets.size()) + " " +
           std::to_string(5 * mesh.tets.size()) + "\n";
    for (const auto& t : mesh.tets) {
        out += "4";
        for (int v : t.v) {
            out += ' ';
            out += std::to_string(v);
        }
        out += '\n';
    }
    out += "CELL_TYPES " + std::to_string(mesh.tets.size()) + "\n";
    for (std::size_t i = 0; i < mesh.tets.size(); ++i) out += "10\n";
    return out;
}

// ---- audit report JSON ----

inline nlohmann::json report_to_json(const AuditReport& r) {
    nlohmann::json j;
    j["counts"] = {{"vertices", r.vertex_count},
                   {"edges", r.edge_count},
                   {"triangles", r.triangle_count},
                   {"tets", r.tet_count},
                   {"boundary_vertices", r.boundary_vertex_count},
                   {"boundary_edges", r.boundary_edge_count},
                   {"boundary_triangles", r.boundary_triangle_count},
                   {"interior_vertices", r.interior_vertex_count},
                   {"interior_edges", r.interior_edge_count}};
    j["euler"] = {{"value", r.euler_value}, {"ok", r.euler_ok}};
    j["dihedral_angles"] = {{"count", r.dihedral_count},
                            {"min", r.dihedral_min},
                            {"max", r.dihedral_max},
                            {"all_acute", r.dihedrals_all_acute}};
    j["face_angles"] = {{"count", r.face_angle_count},
                        {"min", r.face_angle_min},
                        {"max", r.face_angle_max},
                        {"all_acute", r.face_angles_all_acute}};
    j["h_over_r"] = {{"count", r.h_over_r_count},
                     {"min", r.h_over_r_min},
                     {"max", r.h_over_r_max},
                     {"all_positive", r.h_over_r_all_positive},
                     {"all_below_one", r.h_over_r_all_below_one}};
    j["flags"] = {{"acute", r.acute},
                  {"three_well_centered", r.three_well_centered},
                  {"completely_well_centered", r.completely_well_centered}};
    auto hist_to_json = [](const std::map<int, int>& h) {
        nlohmann::json out = nlohmann::json::object();
        for (const auto& [k, v] : h) out[std::to_string(k)] = v;
        return out;
    };
    j["interior_edge_incidence"] = hist_to_json(r.interior_edge_incidence);
    j["interior_vertex_degrees"] = hist_to_json(r.interior_vertex_degrees);
    nlohmann::json faces = nlohmann::json::array();
    for (const auto& f : r.surface_faces) {
        faces.push_back({{"name", f.name},
                         {"triangles", f.triangle_count},
                         {"max_angle", f.max_angle},
                         {"acute", f.acute}});
    }
    j["surface"] = {{"grouped", r.surface_grouped},
                    {"triangle_count", r.surface_triangle_count},
                    {"max_angle", r.surface_max_angle},
                    {"all_acute", r.surface_all_acute},
                    {"faces", faces}};
    nlohmann::json strata = nlohmann::json::object();
    for (const auto& [name, count] : r.edges_per_stratum) strata[name] = count;
    j["combinatorial"] = {{"ok", r.combinatorial_ok},
                          {"violations", r.combinatorial_violations},
                          {"edges_per_stratum", strata}};
    return j;
}

// Failed requirements, empty when the mesh is acute and completely
// well-centered. Drives the audit exit code.
inline std::vector<std::string> audit_failures(const AuditReport& r) {
    std::vector<std::string> out;
    if (!r.dihedrals_all_acute) out.push_back("dihedral angle of at least 90 degrees");
    if (!r.face_angles_all_acute) out.push_back("face angle of at least 90 degrees");
    if (!r.h_over_r_all_positive) out.push_back("nonpositive h/R: circumcenter outside a tet");
    return out;
}

// ---- histogram and orbit CSV ----

inline std::string render_histogram_csv(const Histogram& h) {
    std::string out = "bin_start,count\n";
    for (std::size_t i = 0; i < h.bin_start.size(); ++i) {
        std::ostringstream row;
        row << h.bin_start[i] << "," << h.count[i] << "\n";
        out += row.str();
    }
    return out;
}

inline std::string render_orbit_csv(const OrbitClassification& cls) {
    std::string out = "rep_v0,rep_v1,rep_v2,rep_v3,size,locus\n";
    for (const auto& c : cls.classes) {
        const auto rep = sorted_verts(c.representative);
        out += std::to_string(rep[0]) + "," + std::to_string(rep[1]) + "," +
               std::to_string(rep[2]) + "," + std::to_string(rep[3]) + "," +
               std::to_string(c.multiplicity()) + "," + orbit_locus_name(c.locus) + "\n";
    }
    return out;
}

// ---- run manifests ----

inline std::string fnv1a64_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Written next to every command's outputs; re-running the recorded command
// must reproduce files with the same checksums.
inline void write_manifest(const std::string& path, const std::string& command,
                           const std::vector<std::string>& arguments,
                           const std::string& dataset_checksum,
                           const std::vector<std::string>& output_files) {
    nlohmann::json j;
    j["command"] = command;
    j["arguments"] = arguments;
    j["dataset_checksum"] = dataset_checksum;
    j["tool_version"] = kToolVersion;
    nlohmann::json outs = nlohmann::json::object();
    for (const auto& f : output_files) outs[f] = fnv1a64_hex(read_file(f));
    j["outputs"] = outs;
    write_file_atomic(path, j.dump(2) + "\n");
}

}  // namespace acutecube
