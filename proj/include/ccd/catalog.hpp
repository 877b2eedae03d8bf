// Machine-readable catalog of the classification tables: loading and schema
// validation, the verification harness (commutative / nilpotent / CCD /
// Jordan-flag / annihilator / extension reconstruction), isomorphism search,
// and fingerprint-based separation reports.
#pragma once

#include <atomic>
#include <fstream>
#include <future>
#include <json.hpp>

#include "expr.hpp"
#include "orbits.hpp"

namespace ccd {

struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

struct ParamSpec {
    std::string name;                // catalog name is ASCII (a, b)
    std::vector<Rational> excluded;  // values the family excludes
    std::vector<Rational> samples;   // fixed deterministic sample set
};

struct ExtensionRecord {
    std::string base;
    std::map<std::string, CoeffExpr> base_params;               // base param -> expr in entry params
    std::vector<std::vector<std::tuple<int, int, CoeffExpr>>> components; // 1-based (i,j,coeff)
    std::vector<int> perm; // constructed coordinate i (1-based) lands on entry coordinate perm[i-1]
};

struct CatalogEntry {
    std::string name;
    int dim = 0;
    std::vector<ParamSpec> params;
    AlgebraSym table;
    std::string provenance;
    bool expected_jordan = false;
    std::optional<ExtensionRecord> extension_of;
    std::vector<std::string> iso_exceptions;
};

struct Catalog {
    std::vector<CatalogEntry> entries;

    const CatalogEntry& get(const std::string& name) const {
        for (auto& e : entries)
            if (e.name == name) return e;
        throw schema_error("catalog: unknown entry " + name);
    }
    bool has(const std::string& name) const {
        for (auto& e : entries)
            if (e.name == name) return true;
        return false;
    }
};

inline Catalog parse_catalog(const nlohmann::json& doc) {
    Catalog cat;
    if (!doc.contains("algebras") || !doc["algebras"].is_array())
        throw schema_error("catalog: missing algebras array");
    for (auto& j : doc["algebras"]) {
        CatalogEntry e;
        e.name = j.at("name").get<std::string>();
        if (cat.has(e.name)) throw schema_error("catalog: duplicate name " + e.name);
        e.dim = j.at("dim").get<int>();
        if (e.dim < 1 || e.dim > 12) throw schema_error(e.name + ": bad dim");
        std::vector<std::string> pnames;
        if (j.contains("params"))
            for (auto& p : j["params"]) {
                ParamSpec ps;
                ps.name = p.at("name").get<std::string>();
                if (p.contains("excluded"))
                    for (auto& x : p["excluded"]) ps.excluded.push_back(rat_from_string(x.get<std::string>()));
                if (p.contains("samples"))
                    for (auto& x : p["samples"]) ps.samples.push_back(rat_from_string(x.get<std::string>()));
                for (auto& ex : ps.excluded)
                    for (auto& s : ps.samples)
                        if (ex == s) throw schema_error(e.name + ": sample hits excluded value");
                pnames.push_back(ps.name);
                e.params.push_back(std::move(ps));
            }
        e.table = AlgebraSym(e.dim, e.name, pnames);
        if (j.contains("products"))
            for (auto& pr : j["products"]) {
                int i = pr.at("i").get<int>(), jj = pr.at("j").get<int>();
                if (i < 1 || jj < 1 || i > e.dim || jj > e.dim || i > jj)
                    throw schema_error(e.name + ": product index out of range");
                for (auto& out : pr.at("out")) {
                    int k = out.at("k").get<int>();
                    if (k < 1 || k > e.dim) throw schema_error(e.name + ": output index out of range");
                    auto expr = CoeffExpr::parse(out.at("coeff").get<std::string>());
                    for (auto& v : expr.poly().variables()) {
                        bool known = false;
                        for (auto& pn : pnames) known = known || pn == v;
                        if (!known) throw schema_error(e.name + ": unknown parameter " + v);
                    }
                    e.table.prod(i - 1, jj - 1)[k - 1] = expr.poly();
                }
            }
        e.provenance = j.value("provenance", std::string{});
        if (j.contains("expected")) e.expected_jordan = j["expected"].value("jordan", false);
        if (j.contains("extension_of")) {
            auto& x = j["extension_of"];
            ExtensionRecord rec;
            rec.base = x.at("base").get<std::string>();
            if (x.contains("base_params"))
                for (auto& [k, v] : x["base_params"].items())
                    rec.base_params.emplace(k, CoeffExpr::parse(v.get<std::string>()));
            for (auto& comp : x.at("cocycle")) {
                std::vector<std::tuple<int, int, CoeffExpr>> terms;
                for (auto& t : comp) {
                    int i = t.at(0).get<int>(), jj = t.at(1).get<int>();
                    terms.emplace_back(i, jj, CoeffExpr::parse(t.at(2).get<std::string>()));
                }
                rec.components.push_back(std::move(terms));
            }
            if (x.contains("perm")) {
                for (auto& p : x["perm"]) rec.perm.push_back(p.get<int>());
                if (int(rec.perm.size()) != e.dim) throw schema_error(e.name + ": perm length");
            }
            e.extension_of = std::move(rec);
        }
        if (j.contains("iso_exceptions"))
            for (auto& s : j["iso_exceptions"]) e.iso_exceptions.push_back(s.get<std::string>());
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw schema_error("catalog: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& ex) {
        throw schema_error(std::string("catalog: JSON parse error: ") + ex.what());
    }
    return parse_catalog(doc);
}

/// Deterministic parameter assignments: cartesian product of the per-parameter
/// sample lists (five values per parameter, exclusions already respected).
inline std::vector<std::map<std::string, Rational>> sample_assignments(const CatalogEntry& e) {
    std::vector<std::map<std::string, Rational>> out;
    out.emplace_back();
    for (auto& p : e.params) {
        std::vector<std::map<std::string, Rational>> next;
        for (auto& base : out)
            for (auto& v : p.samples) {
                auto m = base;
                m[p.name] = v;
                next.push_back(std::move(m));
            }
        out = std::move(next);
    }
    return out;
}

inline std::string sample_label(const std::map<std::string, Rational>& a) {
    if (a.empty()) return "-";
    std::string s;
    for (auto& [k, v] : a) {
        if (!s.empty()) s += ",";
        s += k + "=" + v.get_str();
    }
    return s;
}

template <class F>
Algebra<F> bind_entry(const CatalogEntry& e, const F& f,
                      const std::map<std::string, Rational>& assign) {
    std::map<std::string, typename F::Elem> fa;
    for (auto& [k, v] : assign) fa[k] = rational_to_field(f, v);
    return e.table.bind(f, fa);
}

/// Coordinate renaming: constructed basis vector i goes to entry coordinate
/// perm[i-1] (1-based).
template <class F>
Algebra<F> apply_perm(const Algebra<F>& A, const std::vector<int>& perm) {
    if (perm.empty()) return A;
    Algebra<F> B(A.f, A.n, A.name);
    for (int i = 0; i < A.n; ++i)
        for (int j = i; j < A.n; ++j)
            for (int k = 0; k < A.n; ++k) {
                int pi = perm[i] - 1, pj = perm[j] - 1, pk = perm[k] - 1;
                B.prod(std::min(pi, pj), std::max(pi, pj))[pk] = A.prod(i, j)[k];
            }
    return B;
}

/// Parameter assignment for the base of an extension record: explicit
/// base_params expressions first, identically-named entry parameters as the
/// fallback.
inline std::map<std::string, Rational> base_assignment(const Catalog& cat, const CatalogEntry& e,
                                                       const std::map<std::string, Rational>& assign) {
    if (!e.extension_of) throw schema_error(e.name + ": no extension record");
    const ExtensionRecord& rec = *e.extension_of;
    const CatalogEntry& base_entry = cat.get(rec.base);
    std::map<std::string, Rational> base_assign;
    RatField qf;
    for (auto& [k, expr] : rec.base_params) base_assign[k] = expr.bind(qf, assign);
    for (auto& p : base_entry.params)
        if (!base_assign.count(p.name)) {
            auto it = assign.find(p.name);
            if (it == assign.end())
                throw schema_error(e.name + ": base parameter " + p.name + " unbound");
            base_assign[p.name] = it->second;
        }
    return base_assign;
}

/// The recorded cocycle of an entry, bound at a parameter sample.
template <class F>
Cocycle<F> bind_record_cocycle(const CatalogEntry& e, int base_dim, const F& f,
                               const std::map<std::string, Rational>& assign) {
    if (!e.extension_of) throw schema_error(e.name + ": no extension record");
    Cocycle<F> theta;
    std::map<std::string, typename F::Elem> fa;
    for (auto& [k, v] : assign) fa[k] = rational_to_field(f, v);
    for (auto& comp : e.extension_of->components) {
        BilinearForm<F> b(f, base_dim);
        for (auto& [i, j, expr] : comp) b.at(i - 1, j - 1) = expr.bind(f, fa);
        theta.components.push_back(std::move(b));
    }
    return theta;
}

/// Build the recorded central extension of an entry at a parameter sample.
template <class F>
Algebra<F> reconstruct_extension(const Catalog& cat, const CatalogEntry& e, const F& f,
                                 const std::map<std::string, Rational>& assign) {
    const ExtensionRecord& rec = *e.extension_of;
    const CatalogEntry& base_entry = cat.get(rec.base);
    Algebra<F> base = bind_entry(base_entry, f, base_assignment(cat, e, assign));
    Algebra<F> ext = central_extension(base, bind_record_cocycle(e, base.n, f, assign));
    return apply_perm(ext, rec.perm);
}

struct ReportItem {
    std::string entry, sample, check;
    bool pass = false;
    std::string witness;
};

struct Report {
    std::vector<ReportItem> items;

    int failed() const {
        int n = 0;
        for (auto& it : items)
            if (!it.pass) ++n;
        return n;
    }
    void sort() {
        std::sort(items.begin(), items.end(), [](const ReportItem& a, const ReportItem& b) {
            return std::tie(a.entry, a.sample, a.check) < std::tie(b.entry, b.sample, b.check);
        });
    }
    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& it : items) {
            nlohmann::json j{{"entry", it.entry}, {"sample", it.sample}, {"check", it.check},
                             {"pass", it.pass}};
            if (!it.witness.empty()) j["witness"] = it.witness;
            arr.push_back(std::move(j));
        }
        return nlohmann::json{{"items", arr},
                              {"total", items.size()},
                              {"failed", failed()}};
    }
};

namespace detail {

inline std::string witness_string(const IdentityResult& r) {
    if (r.holds) return {};
    std::string s = "tuple(";
    for (std::size_t i = 0; i < r.witness.size(); ++i)
        s += (i ? "," : "") + std::to_string(r.witness[i]);
    return s + ")" + (r.detail.empty() ? "" : " " + r.detail);
}

template <class F>
std::vector<ReportItem> verify_entry(const Catalog& cat, const CatalogEntry& e, const F& f,
                                     const std::map<std::string, Rational>& assign) {
    std::vector<ReportItem> out;
    const std::string label = sample_label(assign);
    auto push = [&](const std::string& check, bool pass, std::string witness = {}) {
        out.push_back({e.name, label, check, pass, std::move(witness)});
    };
    Algebra<F> A = bind_entry(e, f, assign);

    auto comm = check_identity(A, Identity::Commutative);
    push("commutative", comm.holds, witness_string(comm));
    push("nilpotent", is_nilpotent(A));
    auto ccd = check_identity(A, Identity::CCD);
    push("ccd", ccd.holds, witness_string(ccd));
    auto jordan = check_identity(A, Identity::JordanLinearized);
    push("jordan_flag", jordan.holds == e.expected_jordan, witness_string(jordan));
    auto aj = check_identity(A, Identity::AlmostJordan);
    push("almost_jordan_equals_ccd", aj.holds == ccd.holds, witness_string(aj));
    push("ann_nonzero", annihilator(A).dim() >= 1);
    if (e.extension_of) {
        bool ok = false;
        std::string w;
        try {
            Algebra<F> rebuilt = reconstruct_extension(cat, e, f, assign);
            rebuilt.name = A.name;
            ok = rebuilt == A;
            if (!ok) w = "reconstructed table differs";
        } catch (const std::exception& ex) {
            w = ex.what();
        }
        push("extension_reconstruction", ok, w);
    }
    return out;
}

} // namespace detail

/// Full harness sweep: every entry at every parameter sample.  Items may run
/// in parallel; the merged report is sorted canonically either way.
template <class F>
Report verify_catalog(const Catalog& cat, const F& f, int threads = 1) {
    struct Job {
        const CatalogEntry* entry;
        std::map<std::string, Rational> assign;
    };
    std::vector<Job> jobs;
    for (auto& e : cat.entries)
        for (auto& a : sample_assignments(e)) jobs.push_back({&e, a});

    Report rep;
    if (threads <= 1) {
        for (auto& j : jobs) {
            auto items = detail::verify_entry(cat, *j.entry, f, j.assign);
            rep.items.insert(rep.items.end(), items.begin(), items.end());
        }
    } else {
        std::vector<std::future<std::vector<ReportItem>>> futs;
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            std::vector<ReportItem> got;
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= jobs.size()) break;
                auto items = detail::verify_entry(cat, *jobs[k].entry, f, jobs[k].assign);
                got.insert(got.end(), items.begin(), items.end());
            }
            return got;
        };
        for (int t = 0; t < threads; ++t) futs.push_back(std::async(std::launch::async, worker));
        for (auto& fu : futs) {
            auto items = fu.get();
            rep.items.insert(rep.items.end(), items.begin(), items.end());
        }
    }
    rep.sort();
    return rep;
}

// ---------------------------------------------------------------------------
// isomorphism search
// ---------------------------------------------------------------------------

/// Exact check of a candidate map phi: A -> B, phi(e_i) = sum_k P[k][i] e_k:
/// phi(e_i e_j |_A) = phi(e_i) phi(e_j) |_B for all pairs.
template <class F>
bool is_isomorphism(const Algebra<F>& A, const Algebra<F>& B, const Mat<F>& P) {
    if (A.n != B.n || P.rows != A.n || P.cols != A.n) return false;
    if (!is_invertible(P)) return false;
    for (int i = 0; i < A.n; ++i)
        for (int j = i; j < A.n; ++j) {
            Vec<F> lhs = P.apply(A.prod(i, j));
            Vec<F> rhs = multiply(B, mat_col(P, i), mat_col(P, j));
            if (!vec_is_zero(A.f, vec_sub(A.f, lhs, rhs))) return false;
        }
    return true;
}

/// Candidate map with symbolic parameters: P rational, structure constants
/// polynomial; equality is exact over Q(params).
inline bool is_isomorphism_sym(const AlgebraSym& A, const AlgebraSym& B, const Mat<RatField>& P) {
    if (A.n != B.n || !is_invertible(P)) return false;
    for (int i = 0; i < A.n; ++i)
        for (int j = i; j < A.n; ++j) {
            std::vector<ParamPoly> lhs(A.n);
            for (int k = 0; k < A.n; ++k)
                for (int l = 0; l < A.n; ++l)
                    if (P.at(k, l) != 0) lhs[k] = lhs[k] + A.prod(i, j)[l] * P.at(k, l);
            std::vector<ParamPoly> pi(A.n), pj(A.n);
            for (int k = 0; k < A.n; ++k) {
                pi[k] = ParamPoly::constant(P.at(k, i));
                pj[k] = ParamPoly::constant(P.at(k, j));
            }
            auto rhs = B.multiply_sym(pi, pj);
            for (int k = 0; k < A.n; ++k)
                if (!(lhs[k] == rhs[k])) return false;
        }
    return true;
}

/// Exhaustive loop over every invertible matrix.  Independent oracle for the
/// pruned search below; guarded to dim <= 5 over GF(2) and dim <= 4 over GF(3).
inline std::optional<Mat<GFpField>> iso_search_exhaustive(const Algebra<GFpField>& A,
                                                          const Algebra<GFpField>& B) {
    const GFpField& f = A.f;
    if (A.n != B.n) return std::nullopt;
    bool ok = (f.p == 2 && A.n <= 5) || (f.p == 3 && A.n <= 4);
    if (!ok) throw guard_exceeded("iso_search_exhaustive: guard (dim,p)");
    int cells = A.n * A.n;
    std::vector<GFpField::Elem> v(cells, 0);
    Mat<GFpField> P(f, A.n, A.n);
    for (;;) {
        for (int k = 0; k < cells; ++k) P.a[k] = v[k];
        if (is_isomorphism(A, B, P)) return P;
        int k = 0;
        while (k < cells && v[k] == f.p - 1) v[k++] = 0;
        if (k == cells) break;
        ++v[k];
    }
    return std::nullopt;
}

/// Complete backtracking search over generator images.  A derivation basis of
/// A is built greedily (generators plus products); any isomorphism is
/// determined by the generator images, so exploring all of them with product
/// and independence pruning finds a map exactly when one exists.
class GeneratorIsoSearch {
  public:
    GeneratorIsoSearch(const Algebra<GFpField>& A, const Algebra<GFpField>& B)
        : A_(A), B_(B), f_(A.f) {
        if (A.n != B.n) throw dimension_mismatch("iso search: dims differ");
        if (f_.p > 13 || A.n > 6) throw guard_exceeded("iso_search_guided: guard (dim,p)");
        build_plan();
    }

    std::optional<Mat<GFpField>> run(std::uint64_t node_budget = 200'000'000) {
        budget_ = node_budget;
        images_.assign(plan_.size(), Vec<GFpField>(A_.n, 0));
        if (search(0)) return result_;
        return std::nullopt;
    }

  private:
    struct Step {
        bool generator;
        int t1 = -1, t2 = -1;            // product recipe when not a generator
        Vec<GFpField> source;            // the vector v_t in A
        // linear expressions: v_{s1} * v_{s2} = sum coeff_k v_k over the prefix
        struct Constraint { int s1, s2; std::vector<GFpField::Elem> coords; };
        std::vector<Constraint> checks;  // become decidable once step t is set
    };

    const Algebra<GFpField>& A_;
    const Algebra<GFpField>& B_;
    GFpField f_;
    std::vector<Step> plan_;
    std::vector<Vec<GFpField>> images_;
    std::optional<Mat<GFpField>> result_;
    std::uint64_t budget_ = 0;
    std::map<std::vector<GFpField::Elem>, std::vector<Vec<GFpField>>> square_preimages_;
    bool squares_built_ = false;

    // x -> x^2 over all of B, inverted; generator steps with a pure square
    // constraint then reduce to a table lookup
    void build_squares() {
        if (squares_built_) return;
        squares_built_ = true;
        std::uint64_t total = 1;
        for (int k = 0; k < A_.n; ++k) total *= f_.p;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t x = code;
            Vec<GFpField> v(A_.n);
            for (int k = 0; k < A_.n; ++k) {
                v[k] = GFpField::Elem(x % f_.p);
                x /= f_.p;
            }
            square_preimages_[multiply(B_, v, v)].push_back(std::move(v));
        }
    }

    void build_plan() {
        std::vector<Vec<GFpField>> vecs;
        Mat<GFpField> span(f_, 0, A_.n);
        auto in_span = [&](const Vec<GFpField>& v) {
            return SubspaceBasis<GFpField>::from_rows(stack(span, v)).dim() == span.rows;
        };
        auto add_row = [&](const Vec<GFpField>& v) {
            span = SubspaceBasis<GFpField>::from_rows(stack(span, v)).basis;
        };
        auto push = [&](Step s) {
            vecs.push_back(s.source);
            add_row(s.source);
            plan_.push_back(std::move(s));
        };
        for (int i = 0; i < A_.n && int(vecs.size()) < A_.n; ++i) {
            Vec<GFpField> ei = basis_vec(f_, A_.n, i);
            if (in_span(ei)) continue;
            Step g{true, -1, -1, ei, {}};
            push(std::move(g));
            // close under products
            bool grew = true;
            while (grew && int(vecs.size()) < A_.n) {
                grew = false;
                for (std::size_t a = 0; a < vecs.size() && !grew; ++a)
                    for (std::size_t b = a; b < vecs.size() && !grew; ++b) {
                        Vec<GFpField> w = multiply(A_, vecs[a], vecs[b]);
                        if (!vec_is_zero(f_, w) && !in_span(w)) {
                            push(Step{false, int(a), int(b), w, {}});
                            grew = true;
                        }
                    }
            }
        }
        if (int(vecs.size()) != A_.n)
            throw std::logic_error("iso search: derivation basis incomplete");
        // express every pairwise product in the v-basis and attach the check
        // to the latest step it mentions
        Mat<GFpField> Vm(f_, A_.n, A_.n); // columns = v_t
        for (int t = 0; t < A_.n; ++t)
            for (int r = 0; r < A_.n; ++r) Vm.at(r, t) = vecs[t][r];
        for (int a = 0; a < A_.n; ++a)
            for (int b = a; b < A_.n; ++b) {
                Vec<GFpField> w = multiply(A_, vecs[a], vecs[b]);
                auto coords = solve(Vm, w);
                if (!coords) throw std::logic_error("iso search: product outside basis span");
                int ready = std::max(a, b);
                for (int t = 0; t < A_.n; ++t)
                    if (!f_.is_zero((*coords)[t])) ready = std::max(ready, t);
                plan_[ready].checks.push_back({a, b, *coords});
            }
    }

    static Mat<GFpField> stack(const Mat<GFpField>& m, const Vec<GFpField>& v) {
        Mat<GFpField> r(m.f, m.rows + 1, m.cols);
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j);
        for (int j = 0; j < m.cols; ++j) r.at(m.rows, j) = v[j];
        return r;
    }

    bool images_independent(int upto) {
        Mat<GFpField> m(f_, upto + 1, A_.n);
        for (int t = 0; t <= upto; ++t)
            for (int j = 0; j < A_.n; ++j) m.at(t, j) = images_[t][j];
        return echelonize(m).rank == upto + 1;
    }

    bool step_checks(int t) {
        for (auto& c : plan_[t].checks) {
            Vec<GFpField> lhs = multiply(B_, images_[c.s1], images_[c.s2]);
            Vec<GFpField> rhs(A_.n, 0);
            for (int s = 0; s <= t; ++s)
                if (!f_.is_zero(c.coords[s])) add_scaled(f_, rhs, c.coords[s], images_[s]);
            if (!vec_is_zero(f_, vec_sub(f_, lhs, rhs))) return false;
        }
        return true;
    }

    bool search(int t) {
        if (t == int(plan_.size())) {
            // reconstruct the matrix on the standard basis and verify fully
            Mat<GFpField> Vm(f_, A_.n, A_.n), Im(f_, A_.n, A_.n);
            for (int s = 0; s < A_.n; ++s)
                for (int r = 0; r < A_.n; ++r) {
                    Vm.at(r, s) = plan_[s].source[r];
                    Im.at(r, s) = images_[s][r];
                }
            Mat<GFpField> P = Im * inverse(Vm);
            if (is_isomorphism(A_, B_, P)) {
                result_ = P;
                return true;
            }
            return false;
        }
        if (plan_[t].generator) {
            // a pure square constraint v_t v_t = sum_{s<t} c_s v_s pins the
            // candidate list to the square preimages of a known vector
            const Step::Constraint* sq = nullptr;
            for (auto& c : plan_[t].checks)
                if (c.s1 == t && c.s2 == t && f_.is_zero(c.coords[t])) { sq = &c; break; }
            if (sq) {
                build_squares();
                Vec<GFpField> rhs(A_.n, 0);
                for (int s = 0; s < t; ++s)
                    if (!f_.is_zero(sq->coords[s])) add_scaled(f_, rhs, sq->coords[s], images_[s]);
                auto it = square_preimages_.find(rhs);
                if (it == square_preimages_.end()) return false;
                for (auto& cand : it->second) {
                    if (budget_-- == 0) throw guard_exceeded("iso_search_guided: node budget");
                    images_[t] = cand;
                    if (!images_independent(t)) continue;
                    if (!step_checks(t)) continue;
                    if (search(t + 1)) return true;
                }
                return false;
            }
            std::uint64_t total = 1;
            for (int k = 0; k < A_.n; ++k) total *= f_.p;
            for (std::uint64_t code = 0; code < total; ++code) {
                if (budget_-- == 0) throw guard_exceeded("iso_search_guided: node budget");
                std::uint64_t x = code;
                for (int k = 0; k < A_.n; ++k) {
                    images_[t][k] = GFpField::Elem(x % f_.p);
                    x /= f_.p;
                }
                if (!images_independent(t)) continue;
                if (!step_checks(t)) continue;
                if (search(t + 1)) return true;
            }
            return false;
        }
        images_[t] = multiply(B_, images_[plan_[t].t1], images_[plan_[t].t2]);
        if (!images_independent(t)) return false;
        if (!step_checks(t)) return false;
        return search(t + 1);
    }
};

inline std::optional<Mat<GFpField>> iso_search_guided(const Algebra<GFpField>& A,
                                                      const Algebra<GFpField>& B) {
    return GeneratorIsoSearch(A, B).run();
}

/// Fingerprint collision report: entries grouped by equal fingerprint at their
/// first parameter sample.  Equal fingerprints never prove isomorphism; the
/// report simply lists the groups the invariants cannot separate.
struct DistinguishReport {
    std::vector<std::pair<std::string, std::string>> fingerprints; // entry -> fp string
    std::vector<std::vector<std::string>> unseparated;             // groups with >= 2 entries
};

inline DistinguishReport distinguish_all(const Catalog& cat) {
    RatField q;
    DistinguishReport rep;
    std::map<std::string, std::vector<std::string>> groups;
    for (auto& e : cat.entries) {
        auto samples = sample_assignments(e);
        Algebra<RatField> A = bind_entry(e, q, samples.front());
        std::string fp = fingerprint(A).str();
        rep.fingerprints.emplace_back(e.name, fp);
        groups[fp].push_back(e.name);
    }
    for (auto& [fp, names] : groups)
        if (names.size() > 1) rep.unseparated.push_back(names);
    std::sort(rep.unseparated.begin(), rep.unseparated.end());
    return rep;
}

} // namespace ccd
