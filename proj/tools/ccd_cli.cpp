// Command-line front end: catalog verification, cohomology dimensions,
// central extensions, orbit censuses, isomorphism checks and invariants.
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage/schema error.
#include <CLI11.hpp>
#include <iostream>

#include "ccd/tables.hpp"

using namespace ccd;
using nlohmann::json;

namespace {

struct Options {
    std::string catalog_path = "data/catalog.json";
    std::string field = "q";
    bool json_out = false;
    long seed = 0;
};

FieldDesc parse_field(const std::string& s) {
    if (s == "q") return FieldDesc::q();
    if (s.rfind("gf:", 0) == 0) return FieldDesc::gfp(std::uint32_t(std::stoul(s.substr(3))));
    throw schema_error("unknown field selector: " + s + " (use q or gf:<p>)");
}

std::map<std::string, Rational> parse_params(const std::string& s) {
    std::map<std::string, Rational> out;
    if (s.empty()) return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos) throw schema_error("bad parameter assignment: " + item);
        out[item.substr(0, eq)] = rat_from_string(item.substr(eq + 1));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

/// "catalog:NAME" against --catalog, otherwise a JSON file holding one entry.
CatalogEntry load_algebra_arg(const Options& opt, const std::string& arg) {
    if (arg.rfind("catalog:", 0) == 0) {
        Catalog cat = load_catalog(opt.catalog_path);
        return cat.get(arg.substr(8));
    }
    std::ifstream in(arg);
    if (!in) throw schema_error("cannot open algebra file " + arg);
    json doc;
    in >> doc;
    json wrapped{{"algebras", json::array({doc})}};
    Catalog cat = parse_catalog(wrapped);
    return cat.entries.front();
}

json algebra_to_json(const AlgebraSym& A) {
    json products = json::array();
    for (int i = 0; i < A.n; ++i)
        for (int j = i; j < A.n; ++j) {
            json outs = json::array();
            for (int k = 0; k < A.n; ++k)
                if (!A.prod(i, j)[k].is_zero())
                    outs.push_back({{"k", k + 1}, {"coeff", A.prod(i, j)[k].str()}});
            if (!outs.empty()) products.push_back({{"i", i + 1}, {"j", j + 1}, {"out", outs}});
        }
    json doc{{"name", A.name}, {"dim", A.n}, {"products", products}};
    if (!A.params.empty()) {
        json ps = json::array();
        for (auto& p : A.params) ps.push_back({{"name", p}});
        doc["params"] = ps;
    }
    return doc;
}

AlgebraSym to_sym(const Algebra<RatField>& A) {
    AlgebraSym s(A.n, A.name);
    for (std::size_t t = 0; t < A.sc.size(); ++t)
        for (int k = 0; k < A.n; ++k)
            if (A.sc[t][k] != 0) s.sc[t][k] = ParamPoly::constant(A.sc[t][k]);
    return s;
}

int cmd_verify(const Options& opt, int threads, const std::string& out_path) {
    Catalog cat = load_catalog(opt.catalog_path);
    FieldDesc fd = parse_field(opt.field);
    Report rep;
    bool heuristic = false;
    if (fd.kind == FieldDesc::Kind::Q) {
        rep = verify_catalog(cat, RatField{}, threads);
    } else {
        if (fd.p < 5) throw schema_error("identity checks over GF(p) need p >= 5");
        heuristic = true;
        rep = verify_catalog(cat, GFpField{fd.p}, threads);
    }
    json doc = rep.to_json();
    doc["field"] = fd.name();
    doc["seed"] = opt.seed;
    if (heuristic) doc["heuristic"] = true;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << doc.dump(1) << "\n";
    }
    if (opt.json_out) {
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << "field: " << fd.name() << (heuristic ? " (heuristic)" : "") << "\n";
        std::cout << "checks: " << rep.items.size() << ", failed: " << rep.failed() << "\n";
        for (auto& it : rep.items)
            if (!it.pass)
                std::cout << "FAIL " << it.entry << " [" << it.sample << "] " << it.check
                          << (it.witness.empty() ? "" : " : " + it.witness) << "\n";
    }
    return rep.failed() == 0 ? 0 : 1;
}

template <class F>
json cohomology_json(const Algebra<F>& A, const std::string& variety) {
    auto coh = cohomology_basis(A);
    json doc{{"algebra", A.name},
             {"dim_z2_ccd", coh.z_ccd.dim()},
             {"dim_z2_j", coh.z_j.dim()},
             {"dim_b2", coh.b2.dim()},
             {"H2_ccd", coh.dim_h_ccd},
             {"H2_j", coh.dim_h_j},
             {"base_jordan", coh.base_jordan}};
    PairIndex pi(A.n);
    json reps = json::array();
    for (int i = 0; i < coh.h_reps.rows; ++i) {
        json cls = json::array();
        for (int t = 0; t < coh.z_ccd.ambient; ++t)
            if (!A.f.is_zero(coh.h_reps.at(i, t))) {
                auto [a, b] = pi.pair(t);
                cls.push_back(
                    {{"i", a + 1}, {"j", b + 1}, {"coeff", A.f.str(coh.h_reps.at(i, t))}});
            }
        reps.push_back(cls);
    }
    if (variety != "jordan") doc["H2_ccd_basis"] = reps;
    return doc;
}

int cmd_cohomology(const Options& opt, const std::string& alg, const std::string& variety,
                   const std::string& params) {
    if (variety != "ccd" && variety != "jordan" && variety != "all")
        throw schema_error("--variety must be ccd, jordan or all");
    CatalogEntry e = load_algebra_arg(opt, alg);
    auto assign = parse_params(params);
    FieldDesc fd = parse_field(opt.field);
    json doc;
    if (fd.kind == FieldDesc::Kind::Q)
        doc = cohomology_json(bind_entry(e, RatField{}, assign), variety);
    else
        doc = cohomology_json(bind_entry(e, GFpField{fd.p}, assign), variety);
    doc["variety"] = variety;
    doc["field"] = fd.name();
    if (opt.json_out)
        std::cout << doc.dump(1) << "\n";
    else
        std::cout << e.name << ": dims {H2_ccd: " << doc["H2_ccd"] << ", H2_j: " << doc["H2_j"]
                  << "}\n";
    return 0;
}

int cmd_extend(const Options& opt, const std::string& base_arg, const std::string& cocycle_text,
               int ext_dim, const std::string& params, const std::string& out_path) {
    CatalogEntry e = load_algebra_arg(opt, base_arg);
    auto assign = parse_params(params);
    RatField q;
    Algebra<RatField> base = bind_entry(e, q, assign);
    // components separated by '|', triples i,j,coeff separated by ';'
    Cocycle<RatField> theta;
    std::size_t pos = 0;
    const std::string& text = cocycle_text;
    for (;;) {
        std::size_t bar = text.find('|', pos);
        std::string comp =
            text.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
        BilinearForm<RatField> b(q, base.n);
        std::size_t cpos = 0;
        while (cpos < comp.size()) {
            std::size_t semi = comp.find(';', cpos);
            std::string triple =
                comp.substr(cpos, semi == std::string::npos ? std::string::npos : semi - cpos);
            if (!triple.empty()) {
                std::size_t c1 = triple.find(','), c2 = triple.find(',', c1 + 1);
                if (c1 == std::string::npos || c2 == std::string::npos)
                    throw schema_error("bad cocycle triple: " + triple);
                int i = std::stoi(triple.substr(0, c1));
                int j = std::stoi(triple.substr(c1 + 1, c2 - c1 - 1));
                Rational c = CoeffExpr::parse(triple.substr(c2 + 1)).bind(q, assign);
                if (i < 1 || j < 1 || i > base.n || j > base.n)
                    throw schema_error("cocycle index out of range");
                b.at(i - 1, j - 1) = q.add(b.at(i - 1, j - 1), c);
            }
            if (semi == std::string::npos) break;
            cpos = semi + 1;
        }
        theta.components.push_back(std::move(b));
        if (bar == std::string::npos) break;
        pos = bar + 1;
    }
    if (ext_dim > 0 && ext_dim != theta.size())
        throw schema_error("--ext-dim does not match the number of cocycle components");
    Algebra<RatField> ext = central_extension(base, theta);
    ext.name = e.name + "_ext";
    json doc = algebra_to_json(to_sym(ext));
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << doc.dump(1) << "\n";
    } else {
        std::cout << doc.dump(1) << "\n";
    }
    return 0;
}

int cmd_orbits(const Options& opt, const std::string& alg, int ext_dim,
               const std::string& params) {
    FieldDesc fd = parse_field(opt.field);
    if (fd.kind != FieldDesc::Kind::GFp)
        throw schema_error("orbit enumeration needs --field gf:<p>");
    CatalogEntry e = load_algebra_arg(opt, alg);
    GFpField f{fd.p};
    Algebra<GFpField> A = bind_entry(e, f, parse_params(params));
    auto part = orbit_partition(A, ext_dim);
    json orbs = json::array();
    for (auto& o : part.orbits) {
        json pts = json::array();
        for (auto& p : o.points) {
            json rows = json::array();
            for (auto v : p.rref) rows.push_back(v);
            pts.push_back(rows);
        }
        orbs.push_back({{"size", o.points.size()},
                        {"stabilizer", o.stabilizer},
                        {"class", o.jordan_tag ? "R" : "U"},
                        {"points", pts}});
    }
    json doc{{"algebra", e.name},           {"field", fd.name()},
             {"s", ext_dim},                {"aut_order", part.aut_order},
             {"t_count", part.t_count},     {"orbits", orbs},
             {"seed", opt.seed}};
    if (opt.json_out)
        std::cout << doc.dump(1) << "\n";
    else {
        std::cout << e.name << " over " << fd.name() << ", s = " << ext_dim
                  << ": |Aut| = " << part.aut_order << ", |T_s| = " << part.t_count << ", "
                  << part.orbits.size() << " orbit(s)\n";
        for (auto& o : part.orbits)
            std::cout << "  orbit size " << o.points.size() << " stab " << o.stabilizer << " "
                      << (o.jordan_tag ? "R" : "U") << "\n";
    }
    return 0;
}

int cmd_iso(const Options& opt, const std::string& a_arg, const std::string& b_arg,
            bool exhaustive, const std::string& map_path, const std::string& params_a,
            const std::string& params_b, const std::string& subst_b) {
    CatalogEntry ea = load_algebra_arg(opt, a_arg);
    CatalogEntry eb = load_algebra_arg(opt, b_arg);
    RatField q;
    json doc{{"a", ea.name}, {"b", eb.name}, {"seed", opt.seed}};

    auto emit = [&](bool found, const std::string& verdict, const json& extra = json::object()) {
        doc["isomorphic"] = found;
        doc["verdict"] = verdict;
        for (auto& [k, v] : extra.items()) doc[k] = v;
        if (opt.json_out)
            std::cout << doc.dump(1) << "\n";
        else
            std::cout << verdict << "\n";
        return found ? 0 : 1;
    };

    if (!map_path.empty()) {
        std::ifstream in(map_path);
        if (!in) throw schema_error("cannot open map file " + map_path);
        json arr;
        in >> arr;
        int n = ea.dim;
        if (!arr.is_array() || int(arr.size()) != n * n)
            throw schema_error("map file must hold n*n coefficient strings");
        AlgebraSym A = ea.table, B = eb.table;
        if (!subst_b.empty()) {
            std::map<std::string, ParamPoly> sub;
            std::size_t pos = 0;
            while (pos < subst_b.size()) {
                std::size_t semi = subst_b.find(';', pos);
                std::string item = subst_b.substr(
                    pos, semi == std::string::npos ? std::string::npos : semi - pos);
                std::size_t eq = item.find('=');
                if (eq == std::string::npos) throw schema_error("bad substitution: " + item);
                sub[item.substr(0, eq)] = CoeffExpr::parse(item.substr(eq + 1)).poly();
                if (semi == std::string::npos) break;
                pos = semi + 1;
            }
            B = B.substitute(sub);
        }
        auto pa = parse_params(params_a), pb = parse_params(params_b);
        Mat<RatField> P(q, n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                P.at(i, j) = CoeffExpr::parse(arr[i * n + j].get<std::string>()).bind(q, {});
        bool ok;
        if (pa.empty() && pb.empty()) {
            ok = is_isomorphism_sym(A, B, P);
            doc["mode"] = "candidate map, symbolic over Q(params)";
        } else {
            std::map<std::string, RatField::Elem> fa(pa.begin(), pa.end()),
                fb(pb.begin(), pb.end());
            ok = is_isomorphism(A.bind(q, fa), B.bind(q, fb), P);
            doc["mode"] = "candidate map, exact over Q";
        }
        return emit(ok, ok ? "isomorphic" : "candidate map is not an isomorphism");
    }

    FieldDesc fd = parse_field(opt.field);
    if (fd.kind != FieldDesc::Kind::GFp)
        throw schema_error("iso search needs --field gf:<p> (or provide --map)");
    GFpField f{fd.p};
    Algebra<GFpField> A = bind_entry(ea, f, parse_params(params_a));
    Algebra<GFpField> B = bind_entry(eb, f, parse_params(params_b));
    std::optional<Mat<GFpField>> found;
    std::string mode;
    if (exhaustive) {
        found = iso_search_exhaustive(A, B);
        mode = "exhaustive over " + fd.name();
    } else {
        found = iso_search_guided(A, B);
        mode = "complete generator search over " + fd.name();
    }
    doc["mode"] = mode;
    doc["evidence"] =
        "finite-field search evidence; non-discovery is not a proof over characteristic 0";
    if (found) {
        if (!is_isomorphism(A, B, *found)) throw std::logic_error("search returned a bad map");
        json rows = json::array();
        for (int i = 0; i < A.n; ++i)
            for (int j = 0; j < A.n; ++j) rows.push_back(std::to_string(found->at(i, j)));
        return emit(true, "isomorphic (map found and re-checked exactly in " + fd.name() + ")",
                    json{{"map", rows}});
    }
    return emit(false, "no isomorphism over " + fd.name() +
                           " (search evidence only, not a proof over characteristic 0)");
}

int cmd_invariants(const Options& opt, const std::string& alg, const std::string& params) {
    CatalogEntry e = load_algebra_arg(opt, alg);
    RatField q;
    auto fp = fingerprint(bind_entry(e, q, parse_params(params)));
    if (opt.json_out) {
        json dims = json::array();
        for (int d : fp.filtration_dims) dims.push_back(d);
        json layers = json::array();
        for (int d : fp.layer_product_dims) layers.push_back(d);
        json doc{{"algebra", e.name},
                 {"filtration_dims", dims},
                 {"nilpotent", fp.nilpotent},
                 {"dim_ann", fp.dim_ann},
                 {"dim_sq", fp.dim_sq},
                 {"dim_ann_cap_sq", fp.dim_ann_cap_sq},
                 {"ccd", fp.ccd},
                 {"jordan", fp.jordan},
                 {"layer_product_dims", layers},
                 {"generic_l_rank", fp.generic_l_rank}};
        std::cout << doc.dump(1) << "\n";
    } else {
        std::cout << e.name << ": " << fp.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-dimensional commutative nonassociative algebras: catalog "
                 "verification, cohomology, central extensions, orbits, isomorphism"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--catalog", opt.catalog_path, "catalog JSON path");
    app.add_option("--field", opt.field, "coefficient field: q or gf:<p>");
    app.add_flag("--json", opt.json_out, "JSON output");
    app.add_option("--seed", opt.seed, "seed recorded in reports (grids are deterministic)");

    auto* verify = app.add_subcommand("verify", "run the full verification harness");
    bool samples_from_file = false;
    int threads = 1;
    std::string out_path;
    verify->add_flag("--samples-from-file", samples_from_file,
                     "use the sample sets stored in the catalog (always on)");
    verify->add_option("--threads", threads, "parallel workers");
    verify->add_option("--out", out_path, "write the JSON report to a file");

    auto* coh = app.add_subcommand("cohomology", "cocycle space dimensions and basis");
    std::string alg, variety = "ccd", params;
    coh->add_option("algebra", alg, "catalog:NAME or an algebra JSON file")->required();
    coh->add_option("--variety", variety, "ccd | jordan | all");
    coh->add_option("--params", params, "parameter assignment a=2,b=-1");

    auto* extend = app.add_subcommand("extend", "build a central extension");
    std::string base_arg, cocycle_text, ext_out;
    int ext_dim = 0;
    extend->add_option("base", base_arg, "base algebra")->required();
    extend->add_option("--cocycle", cocycle_text, "components 'i,j,coeff;...' joined by '|'")
        ->required();
    extend->add_option("--ext-dim", ext_dim, "expected number of components");
    extend->add_option("--params", params, "parameter assignment");
    extend->add_option("--out", ext_out, "output file");

    auto* orbits = app.add_subcommand("orbits", "orbit census over a finite field");
    int orbit_s = 1;
    orbits->add_option("algebra", alg, "catalog:NAME or file")->required();
    orbits->add_option("--ext-dim", orbit_s, "extension dimension s");
    orbits->add_option("--params", params, "parameter assignment");

    auto* iso = app.add_subcommand("iso", "isomorphism check / search");
    std::string a_arg, b_arg, map_path, params_b, subst_b;
    bool exhaustive = false, do_search = false;
    iso->add_option("a", a_arg, "first algebra")->required();
    iso->add_option("b", b_arg, "second algebra")->required();
    iso->add_flag("--exhaustive", exhaustive, "loop over every invertible matrix (guarded)");
    iso->add_flag("--search", do_search, "complete generator-image search (default)");
    iso->add_option("--map", map_path, "candidate map file: n*n coefficient strings");
    iso->add_option("--params", params, "parameters for the first algebra");
    iso->add_option("--params-b", params_b, "parameters for the second algebra");
    iso->add_option("--subst-b", subst_b, "parameter substitution for B, e.g. b=-1*b");

    auto* inv = app.add_subcommand("invariants", "isomorphism-invariant fingerprint");
    inv->add_option("algebra", alg, "catalog:NAME or file")->required();
    inv->add_option("--params", params, "parameter assignment");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(opt, threads, out_path);
        if (coh->parsed()) return cmd_cohomology(opt, alg, variety, params);
        if (extend->parsed())
            return cmd_extend(opt, base_arg, cocycle_text, ext_dim, params, ext_out);
        if (orbits->parsed()) return cmd_orbits(opt, alg, orbit_s, params);
        if (iso->parsed())
            return cmd_iso(opt, a_arg, b_arg, exhaustive, map_path, params, params_b, subst_b);
        if (inv->parsed()) return cmd_invariants(opt, alg, params);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
