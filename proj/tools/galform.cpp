// Command-line front end: root datum enumeration, family points, twisted
// fixed-point groups, and catalog construction over finite fields.
//
// Exit codes: 0 success, 1 verification failure, 2 size cutoff,
// 3 unsupported construction.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "galform/catalog.hpp"

using namespace galform;

namespace {

int classify_error(const error& e) {
    std::string w = e.what();
    if (w.find("too large") != std::string::npos || w.find("cutoff") != std::string::npos)
        return 2;
    if (w.find("unsupported") != std::string::npos || w.find("infinite") != std::string::npos ||
        w.find("not materialized") != std::string::npos)
        return 3;
    return 1;
}

void emit(const Json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out);
    if (!f) throw error("cannot open output file " + out);
    f << j.dump(2) << "\n";
}

Json load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("cannot open " + path);
    return Json::parse(f);
}

GroupSpec parse_spec(const std::string& s) {
    std::vector<GroupSpec> parts;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find('x', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.rfind("sl", 0) == 0)
            parts.push_back(GroupSpec::sl(std::stol(tok.substr(2))));
        else if (tok.rfind("pgl", 0) == 0)
            parts.push_back(GroupSpec::pgl(std::stol(tok.substr(3))));
        else if (tok.rfind("t", 0) == 0)
            parts.push_back(GroupSpec::torus(std::stol(tok.substr(1))));
        else
            throw error("unsupported group spec token: " + tok);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.empty()) throw error("empty group spec");
    return parts.size() == 1 ? parts[0] : GroupSpec::product(parts);
}

FiniteGroup parse_group(const std::string& g) {
    if (g == "1") return trivial_group();
    if (g[0] == 'Z' || g[0] == 'z') return cyclic_group(std::stoi(g.substr(1)));
    if (g[0] == 'D' || g[0] == 'd') return dihedral_group(std::stoi(g.substr(1)));
    if (g == "Q8" || g == "q8") return dicyclic_group(2);
    throw error("unsupported group name: " + g + " (use 1, Z<n>, D<n>, Q8)");
}

Json aut_to_json(const BasedAut& a) {
    Json mat = Json::array();
    for (long i = 0; i < a.matrix.rows; ++i) {
        Json row = Json::array();
        for (long j = 0; j < a.matrix.cols; ++j) row.push_back(a.matrix.at(i, j).get_str());
        mat.push_back(row);
    }
    return Json{{"matrix", mat}, {"base_permutation", a.base_permutation}};
}

int cmd_enumerate(long rank, const std::string& out) {
    Json j = Json::array();
    for (const auto& b : enumerate_root_data(rank)) j.push_back(root_datum_to_json(b));
    emit(j, out);
    return 0;
}

int cmd_aut(const std::string& datum_file, const std::string& out) {
    BasedRootDatum b = root_datum_from_json(load(datum_file));
    BasedAutGroup g = based_automorphism_group(b);
    Json j;
    j["order"] = g.elements.size();
    j["elements"] = Json::array();
    for (const auto& a : g.elements) j["elements"].push_back(aut_to_json(a));
    emit(j, out);
    return 0;
}

int cmd_index_set(const std::string& datum_file, int bound, const std::string& out) {
    BasedRootDatum b = root_datum_from_json(load(datum_file));
    Json j = Json::array();
    for (const auto& e : build_index_set(b, bound)) {
        Json ej;
        ej["gamma"] = e.gamma.name;
        ej["alpha"] = Json::array();
        for (const auto& a : e.alpha) ej["alpha"].push_back(aut_to_json(a));
        j.push_back(ej);
    }
    emit(j, out);
    return 0;
}

int cmd_galois_point(const std::vector<long>& ff, long cyclotomic,
                     const std::vector<long>& rational_f,
                     const std::vector<std::string>& conj, const std::string& out) {
    FamilyPoint pt;
    if (!ff.empty()) {
        if (ff.size() != 3) throw error("--finite-field wants p, extension degree, m");
        pt = construct_point_finite_field((unsigned long)ff[0], (int)ff[1], (int)ff[2]);
    } else if (cyclotomic > 0) {
        pt = construct_point_cyclotomic((unsigned long)cyclotomic);
    } else if (!rational_f.empty()) {
        Field Q = Field::rationals();
        Poly f = Poly::from_ints(Q, rational_f);
        std::vector<Poly> hs;
        for (const std::string& c : conj) {
            // each conjugate is a comma separated coefficient list, constant first
            std::vector<long> cf;
            std::stringstream ss(c);
            std::string tok;
            while (std::getline(ss, tok, ',')) cf.push_back(std::stol(tok));
            hs.push_back(Poly::from_ints(Q, cf));
        }
        pt = construct_point_rational(f, hs, cyclic_group((int)hs.size()));
    } else {
        throw error("choose one of --finite-field, --cyclotomic, --rational");
    }
    VerifyReport rep = verify_family_point(pt);
    if (!rep.pass()) {
        for (const auto& s : rep.failures) std::cerr << "verify: " << s << "\n";
        return 1;
    }
    emit(point_to_json(pt), out);
    return 0;
}

int cmd_verify_point(const std::string& file) {
    FamilyPoint pt = point_from_json(load(file));
    VerifyReport rep = verify_family_point(pt);
    for (const auto& s : rep.failures) std::cerr << "verify: " << s << "\n";
    if (rep.pass()) std::cout << "ok: all family conditions hold\n";
    return rep.pass() ? 0 : 1;
}

int cmd_presentation(const std::string& group, const std::string& out) {
    FiniteGroup g = parse_group(group);
    auto [ring, etale] = emit_presentation(g);
    Json j;
    j["family_ring"] = presentation_to_json(ring);
    j["etale_algebra"] = presentation_to_json(etale);
    emit(j, out);
    return 0;
}

// the classifying data at one fiber: Z^1 and H^1 of gamma in the adjoint
// group under the Frobenius action
int cmd_z1(const std::string& spec_str, unsigned long p, int k, int m, const std::string& out) {
    GroupSpec spec = parse_spec(spec_str);
    FamilyPoint pt = construct_point_finite_field(p, k, m);
    PointGroup G = point_group(spec, pt);
    TableGroup tg = to_table_group(G);
    GroupAction act = semilinear_permutation_action(G, tg);
    std::vector<Cocycle> zs = z1_cocycles(act);
    H1Classes h1 = h1_classes(act, zs);
    Json j;
    j["group_order"] = tg.table.order;
    j["z1_size"] = zs.size();
    j["h1_classes"] = h1.classes.size();
    Json sizes = Json::array();
    for (const auto& c : h1.classes) sizes.push_back(c.size());
    j["class_sizes"] = sizes;
    emit(j, out);
    return 0;
}

int cmd_twist(const std::string& spec_str, unsigned long p, int k, int m,
              const std::string& alpha, const std::string& out) {
    GroupSpec spec = parse_spec(spec_str);
    FamilyPoint pt = construct_point_finite_field(p, k, m);
    PointGroup G = point_group(spec, pt);
    TwistSpec t = trivial_twist(G);
    if (alpha == "flip") {
        if (m != 2) throw error("the flip twist wants a degree-2 extension");
        t.alpha[1] = flip_aut(G);
    } else if (alpha == "neg") {
        if (m != 2) throw error("the sign twist wants a degree-2 extension");
        IntMatrix neg(1, 1);
        neg.at(0, 0) = -1;
        t.alpha[1] = torus_aut(G, neg);
    } else if (alpha != "id") {
        throw error("unsupported alpha: " + alpha + " (use id, flip, neg)");
    }
    std::vector<FieldMatrix> fixed = twisted_fixed_points(G, t);
    bool qs = is_quasi_split_twist(G, t).quasi_split;
    Fingerprint fp = fingerprint(G, fixed, qs);
    Json j;
    j["ambient_order"] = G.elements.size();
    j["fixed_order"] = fp.order;
    j["center"] = fp.center;
    j["abelianization"] = fp.abelianization;
    j["quasi_split"] = fp.quasi_split;
    emit(j, out);
    return 0;
}

int cmd_catalog(long rank, unsigned long p, int k, int bound, const std::string& mode,
                const std::string& out) {
    CocycleMode m;
    if (mode == "trivial")
        m = CocycleMode::Trivial;
    else if (mode == "exhaustive")
        m = CocycleMode::Exhaustive;
    else
        throw error("unsupported cocycle mode: " + mode);
    Catalog cat = build_catalog(rank, p, k, bound, m);
    emit(cat.document, out);
    std::cerr << "entries: " << cat.entries << ", skipped: " << cat.skipped
              << ", distinct fingerprints: " << cat.fingerprints.size() << "\n";
    return cat.skipped > 0 ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"versal-family toolkit for reductive groups over finite fields"};
    app.require_subcommand(1);

    long rank = 1;
    unsigned long p = 2;
    int k = 1, m = 2, bound = 2;
    std::string out, datum_file, point_file, group = "Z2", spec = "sl2", alpha = "id",
                     mode = "trivial";
    std::vector<long> ff, rational_f;
    std::vector<std::string> conj;
    long cyclotomic = 0;

    auto* c_enum = app.add_subcommand("enumerate-root-data", "root data of a given rank");
    c_enum->add_option("--rank", rank, "rank (0..2)")->required();
    c_enum->add_option("--out", out, "output file (default stdout)");

    auto* c_aut = app.add_subcommand("aut", "automorphism group of a based root datum");
    c_aut->add_option("--datum", datum_file, "datum JSON file")->required();
    c_aut->add_option("--out", out);

    auto* c_idx = app.add_subcommand("index-set", "(group, hom class) pairs of a datum");
    c_idx->add_option("--datum", datum_file)->required();
    c_idx->add_option("--bound", bound, "group order bound (default 2)");
    c_idx->add_option("--out", out);

    auto* c_pt = app.add_subcommand("galois-point", "construct a family point");
    c_pt->add_option("--finite-field", ff, "p, extension degree, m")->expected(3);
    c_pt->add_option("--cyclotomic", cyclotomic, "odd prime ell");
    c_pt->add_option("--rational", rational_f, "f coefficients, constant first");
    c_pt->add_option("--conjugate", conj, "comma separated coefficients, one option per map");
    c_pt->add_option("--out", out);

    auto* c_vp = app.add_subcommand("verify-point", "re-check a stored family point");
    c_vp->add_option("file", point_file, "point JSON file")->required();

    auto* c_pres = app.add_subcommand("presentation", "family ring presentation of a group");
    c_pres->add_option("--group", group, "1, Z<n>, D<n> or Q8")->required();
    c_pres->add_option("--out", out);

    auto* c_z1 = app.add_subcommand("z1", "cocycles and cohomology classes at a fiber");
    c_z1->add_option("--spec", spec, "sl<n>, pgl<n>, t<r>, products with x")->required();
    c_z1->add_option("--p", p)->required();
    c_z1->add_option("--k", k, "base field degree over the prime field");
    c_z1->add_option("--m", m, "extension degree (gamma is cyclic of order m)");
    c_z1->add_option("--out", out);

    auto* c_tw = app.add_subcommand("twist", "twisted fixed-point group at a fiber");
    c_tw->add_option("--spec", spec)->required();
    c_tw->add_option("--p", p)->required();
    c_tw->add_option("--k", k);
    c_tw->add_option("--m", m);
    c_tw->add_option("--alpha", alpha, "id, flip or neg");
    c_tw->add_option("--out", out);

    auto* c_cat = app.add_subcommand("catalog", "catalog of fixed-point constructions");
    c_cat->add_option("--rank", rank)->required();
    c_cat->add_option("--p", p)->required();
    c_cat->add_option("--k", k);
    c_cat->add_option("--bound", bound);
    c_cat->add_option("--cocycles", mode, "trivial or exhaustive");
    c_cat->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_enum->parsed()) return cmd_enumerate(rank, out);
        if (c_aut->parsed()) return cmd_aut(datum_file, out);
        if (c_idx->parsed()) return cmd_index_set(datum_file, bound, out);
        if (c_pt->parsed()) return cmd_galois_point(ff, cyclotomic, rational_f, conj, out);
        if (c_vp->parsed()) return cmd_verify_point(point_file);
        if (c_pres->parsed()) return cmd_presentation(group, out);
        if (c_z1->parsed()) return cmd_z1(spec, p, k, m, out);
        if (c_tw->parsed()) return cmd_twist(spec, p, k, m, alpha, out);
        if (c_cat->parsed()) return cmd_catalog(rank, p, k, bound, mode, out);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify_error(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
