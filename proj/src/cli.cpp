#include "tilesub/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tilesub/catalogue.hpp"
#include "tilesub/enumerator.hpp"
#include "tilesub/recognition.hpp"
#include "tilesub/subdivision.hpp"
#include "tilesub/tiling.hpp"

namespace tilesub {

using nlohmann::json;

namespace {

struct Exit {
    int code;
};

json parse(const std::string& s) { return json::parse(s); }

json map_json(const GMap& g, const Labels& l = {}) { return parse(to_gmap_json(g, l)); }

json signature_json(const NbhdSignature& s) {
    json c = json::array();
    for (auto& b : s.circles) c.push_back({b.edges, b.passes});
    return {{"circles", c}, {"euler", s.euler}, {"orientable", s.orientable}};
}

json surface_json(const SurfaceSignature& s) {
    return {{"orientable", s.orientable}, {"euler", s.euler}, {"k", s.k}, {"word", s.word()}};
}

json witness_json(const ParityWitness& w) {
    json walk = json::array();
    for (size_t i = 0; i < w.edges.size(); ++i) {
        walk.push_back(w.faces[i]);
        walk.push_back(w.edges[i]);
    }
    walk.push_back(w.faces.back());
    return {{"faces", w.faces}, {"edges", w.edges}, {"walk", walk}};
}

json assignment_json(const SubdivisionAssignment& a) {
    json o = json::object();
    for (auto [f, b] : a) o[std::to_string(f)] = b;
    return o;
}

json marks_json(const VertexLabeling& m) {
    json o = json::object();
    for (auto [v, k] : m) o[std::to_string(v)] = k == Mark::Filled ? "filled" : "hollow";
    return o;
}

// All inputs are moved to canonical form so ids in the output refer to it.
MapWithLabels load(const std::string& path) {
    MapWithLabels m = read_gmap_file(path);
    return from_gmap_json(to_gmap_json(m.map, m.labels));
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw JsonInputError("cannot write " + path);
    f << text << "\n";
}

Labels labels_of(const Subdivided& s) {
    Labels l;
    l.provenance = s.provenance;
    l.vertex_marks = s.labeling;
    return l;
}

json recognition_json(const RecognitionResult& r) {
    json j = {{"ok", r.ok}, {"solution_count", r.solution_count}, {"count_capped", r.count_capped},
              {"verified", r.verified}};
    if (!r.ok) {
        j["error"] = r.error;
        j["detail"] = r.detail;
        if (r.failing_face >= 0) j["failing_face"] = r.failing_face;
        return j;
    }
    j["base"] = map_json(r.base);
    j["labeling"] = marks_json(r.labeling);
    j["pairing"] = r.pairing;
    j["orientable"] = r.orientable;
    return j;
}

}  // namespace

std::string to_dot(const GMap& g, const VertexLabeling& marks) {
    std::vector<Dart> perm;
    GMap c = canonical_form(g, &perm);
    auto vidx = cell_index(c, 0);
    std::map<Dart, Mark> m;
    for (auto [d, k] : marks) m[vidx[perm[d]]] = k;
    std::ostringstream os;
    os << "graph tiling {\n";
    for (const Cell& v : cells(c, 0)) {
        os << "  " << v.id;
        if (auto it = m.find(v.id); it != m.end()) os << " [mark=\"" << (it->second == Mark::Filled ? "filled" : "hollow") << "\"]";
        os << ";\n";
    }
    for (const Cell& e : cells(c, 1)) os << "  " << vidx[e.id] << " -- " << vidx[c.alpha(0, e.id)] << " [id=" << e.id << "];\n";
    os << "}";
    return os.str();
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Subdivisible tilings of surfaces"};
    app.require_subcommand(1);
    int code = 0;
    auto emit = [&](const json& j) { out << j.dump() << "\n"; };

    std::string file, file_b, output, op, mode, format = "dot", surface_word;
    std::optional<int> gon_req;
    bool want_witness = false, census_only = false;
    int face_a = -1, face_b = -1, gon = 4, faces = 1, jobs = 1, min_degree = 3;
    std::optional<int> alignment;
    std::vector<std::string> cat_args;

    auto* validate = app.add_subcommand("validate", "check tiling conditions");
    validate->add_option("FILE", file)->required();
    validate->add_option("--gon", gon_req, "required face size");
    validate->callback([&] {
        TilingReport r = validate_tiling(load(file).map, gon_req);
        json v = json::array();
        for (auto& x : r.violations) v.push_back({{"kind", x.kind}, {"cell", x.cell}, {"value", x.value}});
        json h = json::object();
        for (auto [k, n] : r.face_size_histogram) h[std::to_string(k)] = n;
        emit({{"ok", r.ok}, {"min_vertex_degree", r.min_vertex_degree}, {"face_size_histogram", h}, {"violations", v}});
        code = r.ok ? 0 : 1;
    });

    auto* surface = app.add_subcommand("surface", "classify the surface");
    surface->add_option("FILE", file)->required();
    surface->callback([&] { emit(surface_json(classify_surface(load(file).map))); });

    auto* tiles = app.add_subcommand("tiles", "classify every face");
    tiles->add_option("FILE", file)->required();
    tiles->callback([&] {
        MapWithLabels m = load(file);
        json fs = json::object();
        for (const Cell& f : cells(m.map, 2)) {
            json j = {{"sides", f.darts.size() / 2}, {"signature", signature_json(tile_neighborhood_signature(m.map, f.id))}};
            if (f.darts.size() == 8) {
                TileClass c = classify_quad_tile(m.map, f.id);
                j["tag"] = tag_name(c.tag);
                j["reason"] = reason_name(c.reason);
                j["shape"] = c.shape;
                j["compatible"] = c.compatible;
                j["q_prime"] = is_q_prime(c);
                if (c.tag != TileTag::Forbidden) {
                    MinSurface ms = min_surface(c.tag);
                    j["min_surface"] = {{"minimal", ms.minimal}, {"rule", ms.rule}, {"composable", ms.composable}};
                    j["table_match"] = table_signature(c.tag) == tile_neighborhood_signature(m.map, f.id);
                }
            } else if (f.darts.size() == 10 && !m.labels.vertex_marks.empty()) {
                PentClass p = classify_pent_tile(m.map, f.id, m.labels.vertex_marks);
                j["pent_type"] = pent_name(p.type);
                if (p.type == PentType::Mismatch) j["reason"] = p.reason;
                else j["dotted_edge"] = p.dotted_edge;
            }
            fs[std::to_string(f.id)] = j;
        }
        emit({{"faces", fs}});
    });

    auto* subdividable = app.add_subcommand("subdividable", "decide simple pentagonal subdivisibility");
    subdividable->add_option("FILE", file)->required();
    subdividable->add_flag("--witness", want_witness, "print a parity witness when not subdivisible");
    subdividable->callback([&] {
        auto res = check_subdivisible(load(file).map);
        if (auto* a = std::get_if<SubdivisionAssignment>(&res)) {
            emit({{"subdivisible", true}, {"assignment", assignment_json(*a)}});
            return;
        }
        json j = {{"subdivisible", false}};
        if (want_witness) j["witness"] = witness_json(std::get<ParityWitness>(res));
        emit(j);
        code = 1;
    });

    auto* subdivide = app.add_subcommand("subdivide", "apply a subdivision operator");
    subdivide->add_option("--op", op)->required()->check(CLI::IsMember({"simple", "dual-simple", "refine3", "quad", "pent", "double"}));
    subdivide->add_option("FILE", file)->required();
    subdivide->add_option("-o,--output", output);
    subdivide->callback([&] {
        GMap g = load(file).map;
        if (op == "refine3") return write_text(output, to_gmap_json(refine3(g)), out);
        if (op == "quad") {
            Subdivided s = quadrilateral_subdivision(g);
            return write_text(output, to_gmap_json(s.map, labels_of(s)), out);
        }
        if (op == "pent") {
            Orientation o = orientation(g);
            if (!o.orientable) {
                emit({{"error", "NotOrientable"}, {"detail", "pentagonal subdivision needs an orientable surface"}});
                code = 1;
                return;
            }
            Subdivided s = pentagonal_subdivision(g, o.color);
            return write_text(output, to_gmap_json(s.map, labels_of(s)), out);
        }
        if (op == "double") {
            DoubleResult d = double_pentagonal_subdivision(g);
            if (!d.result) {
                emit({{"error", "NotSubdivisible"}, {"witness", witness_json(*d.witness)}});
                code = 1;
                return;
            }
            return write_text(output, to_gmap_json(d.result->map, labels_of(*d.result)), out);
        }
        auto res = check_subdivisible(g);
        if (auto* w = std::get_if<ParityWitness>(&res)) {
            emit({{"error", "NotSubdivisible"}, {"witness", witness_json(*w)}});
            code = 1;
            return;
        }
        auto a = std::get<SubdivisionAssignment>(res);
        if (op == "dual-simple") a = dual_assignment(a);
        Subdivided s = simple_pentagonal_subdivision(g, a);
        write_text(output, to_gmap_json(s.map, labels_of(s)), out);
    });

    auto* csum = app.add_subcommand("connect-sum", "connected sum along two quadrilateral faces");
    csum->add_option("A", file)->required();
    csum->add_option("B", file_b)->required();
    csum->add_option("--face-a", face_a)->required();
    csum->add_option("--face-b", face_b)->required();
    csum->add_option("--alignment", alignment)->check(CLI::Range(0, 7));
    csum->add_option("-o,--output", output);
    csum->callback([&] {
        GMap a = load(file).map, b = load(file_b).map;
        auto check_face = [](const GMap& g, int f) {
            if (f < 0 || f >= g.size() || cell_index(g, 2)[f] != f) throw JsonInputError("face id is not a canonical face id");
        };
        check_face(a, face_a);
        check_face(b, face_b);
        Alignment al;
        if (alignment) {
            al = Alignment::from_index(*alignment);
        } else if (auto r = connected_sum_subdivisible(a, face_a, b, face_b)) {
            al = r->first;
        }
        GMap s = connected_sum(a, face_a, b, face_b, al);
        std::string text = to_gmap_json(s);
        if (output.empty()) {
            out << text << "\n";
        } else {
            write_text(output, text, out);
            emit({{"alignment", al.index()}, {"subdivisible", is_subdivisible(s)}, {"euler", euler_characteristic(s)}});
        }
    });

    auto* recognize = app.add_subcommand("recognize", "recover the base of a subdivision");
    recognize->add_option("--mode", mode)->required()->check(CLI::IsMember({"sps", "ps", "one-circ", "qs"}));
    recognize->add_option("FILE", file)->required();
    recognize->callback([&] {
        GMap g = load(file).map;
        RecognitionResult r = mode == "sps"  ? recognize_sps(g)
                              : mode == "ps" ? recognize_ps(g)
                              : mode == "qs" ? recognize_qs(g)
                                             : recognize_one_circ(g);
        emit(recognition_json(r));
        code = r.ok ? 0 : 1;
    });

    auto* catalogue = app.add_subcommand("catalogue", "built-in fixtures");
    catalogue->add_option("ACTION", cat_args, "list | get NAME")->required()->expected(1, 2);
    catalogue->add_option("-o,--output", output);
    catalogue->callback([&] {
        if (cat_args[0] == "list" && cat_args.size() == 1) return emit(catalogue_list());
        if (cat_args[0] == "get" && cat_args.size() == 2) {
            CatalogueEntry e = catalogue_get(cat_args[1]);
            return write_text(output, to_gmap_json(e.map), out);
        }
        throw CLI::ValidationError("catalogue", "expected 'list' or 'get NAME'");
    });

    auto* enumerate = app.add_subcommand("enumerate", "isomorph-free tilings as JSON lines");
    enumerate->add_option("--gon", gon)->required();
    enumerate->add_option("--faces", faces)->required();
    enumerate->add_option("--surface", surface_word);
    enumerate->add_option("--min-degree", min_degree);
    enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    enumerate->add_flag("--census-only", census_only);
    enumerate->callback([&] {
        EnumSpec spec{gon, faces, surface_word.empty() ? std::nullopt : std::optional<std::string>(surface_word), min_degree};
        auto maps = enumerate_tilings(spec, jobs);
        if (!census_only)
            for (const GMap& g : maps) out << to_gmap_json(g) << "\n";
        json rows = json::array();
        for (auto& [k, n] : census(maps)) rows.push_back({{"surface", k.surface}, {"tiles", k.tiles}, {"count", n}});
        emit({{"census", rows}, {"total", maps.size()}});
    });

    auto* exp = app.add_subcommand("export", "graph export");
    exp->add_option("--format", format)->check(CLI::IsMember({"dot"}));
    exp->add_option("FILE", file)->required();
    exp->callback([&] {
        MapWithLabels m = load(file);
        out << to_dot(m.map, m.labels.vertex_marks) << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const JsonInputError& e) {
        err << "input error: " << e.what();
        if (e.position >= 0) err << " (byte " << e.position << ")";
        err << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

}  // namespace tilesub
