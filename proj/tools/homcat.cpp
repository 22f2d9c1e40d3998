// homcat: check, construct and braid structure documents.
#include "homcat/io.hpp"
#include "homcat/parallel.hpp"
#include "homcat/smash.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace homcat;
using io::json;

namespace {

constexpr int kPass = 0, kFail = 1, kInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<FieldSpec> field;
    std::string report = "json";
    bool timing = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("InputError: " + path + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Collects named checks and renders the run report.
struct Run {
    std::string command;
    std::string input_bytes;
    json checks = json::array();
    json extra = json::object();
    bool ok = true;

    void add(const std::string& suite, const std::string& name, const CheckReport& r) {
        json c = io::report_json(r);
        c["suite"] = suite;
        c["name"] = name;
        ok = ok && r.passed();
        checks.push_back(std::move(c));
    }
    void add_error(const std::string& suite, const std::string& name, const std::exception& e) {
        checks.push_back({{"suite", suite}, {"name", name}, {"passed", false}, {"error", e.what()}});
        ok = false;
    }
    void add_flag(const std::string& suite, const std::string& name, bool passed) {
        checks.push_back({{"suite", suite}, {"name", name}, {"passed", passed}});
        ok = ok && passed;
    }

    int emit(const Options& opt, double ms) const {
        json r{{"command", command},
               {"input_digest", io::digest(input_bytes)},
               {"checks", checks},
               {"verdict", ok ? "pass" : "fail"}};
        for (const auto& [k, v] : extra.items()) r[k] = v;
        if (opt.timing) r["timing_ms"] = ms;
        if (opt.report == "json") {
            std::cout << io::serialize(r);
        } else {
            for (const json& c : checks) {
                std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["suite"].get<std::string>() << "/"
                          << c["name"].get<std::string>();
                if (c.contains("error")) std::cout << "  error: " << c["error"].get<std::string>();
                if (c.contains("failure_count") && c["failure_count"].get<std::size_t>() > 0) {
                    const json& f = c["failures"][0];
                    std::cout << "  " << c["failure_count"].get<std::size_t>() << " failure(s), first "
                              << f["axiom"].get<std::string>() << " at " << f["witness"].dump();
                }
                std::cout << "\n";
            }
            if (extra.contains("flags"))
                for (const auto& [k, v] : extra["flags"].items()) std::cout << "flag " << k << " = " << v.dump() << "\n";
            if (opt.timing) std::cout << "time " << ms << " ms\n";
            std::cout << "verdict " << (ok ? "pass" : "fail") << "\n";
        }
        return ok ? kPass : kFail;
    }
};

io::Document load(const std::string& path, const Options& opt, Run& run) {
    run.input_bytes += read_file(path);
    return io::load_document(path, opt.field);
}

// ---- check ----

void suite_hopf(const io::Document& d, Run& run) {
    if (!d.hopf && !d.algebra && !d.coalgebra) throw InputError("InputError: suite hopf needs hopf, algebra or coalgebra");
    if (d.hopf) {
        run.add("hopf", "bialgebra", check_hom_bialgebra(d.hopf->bi));
        run.add("hopf", "antipode", check_antipode(*d.hopf));
    }
    if (d.algebra) run.add("hopf", "algebra", check_hom_algebra(*d.algebra));
    if (d.coalgebra) run.add("hopf", "coalgebra", check_hom_coalgebra(*d.coalgebra));
}

void suite_datum(const io::Document& d, Run& run) {
    if (!d.datum) throw InputError("InputError: suite datum needs comodule_algebra and module_coalgebra");
    run.add("datum", "comodule_algebra", check_comodule_algebra(d.datum->A));
    run.add("datum", "module_coalgebra", check_module_coalgebra(d.datum->C));
    if (d.monoidal) run.add("datum", "monoidal", check_monoidal_datum(*d.monoidal));
    if (d.morphism) {
        const auto& m = *d.morphism;
        run.add("datum", "morphism", check_datum_morphism(*d.datum, *m.target->datum, m.phi_H, m.psi_A, m.phi_C));
    }
}

void suite_doi(const io::Document& d, Run& run) {
    if (d.doi_modules.empty()) throw InputError("InputError: suite doi needs doi_module over a datum");
    for (std::size_t i = 0; i < d.doi_modules.size(); ++i)
        run.add("doi", "doi_module[" + std::to_string(i) + "]", check_doi_module(d.doi_modules[i]));
}

void suite_yd(const io::Document& d, Run& run) {
    if (d.yd_modules.empty()) throw InputError("InputError: suite yd needs doi_module over a bare hopf section");
    for (std::size_t i = 0; i < d.yd_modules.size(); ++i) {
        const std::string n = "yd_module[" + std::to_string(i) + "]";
        const CheckReport a = check_yd(d.yd_modules[i]), b = check_yd_alt(d.yd_modules[i]);
        run.add("yd", n + ".yd", a);
        run.add("yd", n + ".yd_alt", b);
        run.add_flag("yd", n + ".equivalent", a.passed() == b.passed());
    }
}

// False when the twisted inverse of Q does not exist.
bool add_braiding_checks(const MonoidalDoiDatum& G, const LinearMap& Q, Run& run, const std::string& suite) {
    try {
        const BraidingData B = make_braiding(G, Q);
        run.add(suite, "conditions", check_braiding_conditions(B));
        if (G.datum.C.dim() == 1) {
            const QTStructure S = qt_from_braiding(B);
            run.extra["quasitriangular"] = {{"standard", io::report_json(check_quasitriangular(S, LegOrder::Standard))},
                                            {"swapped", io::report_json(check_quasitriangular(S, LegOrder::Swapped))}};
        }
        if (G.datum.A.dim() == 1) {
            const CoQTForm F = coqt_from_braiding(B);
            run.extra["coquasitriangular"] = {
                {"standard", io::report_json(check_coquasitriangular(F, LegOrder::Standard))},
                {"swapped", io::report_json(check_coquasitriangular(F, LegOrder::Swapped))}};
        }
    } catch (const Error& e) {
        run.add_error(suite, "twisted_inverse", e);
        return false;
    }
    return true;
}

void suite_braiding(const io::Document& d, Run& run) {
    if (!d.monoidal || !d.q_map) throw InputError("InputError: suite braiding needs a monoidal datum and q_map");
    add_braiding_checks(*d.monoidal, *d.q_map, run, "braiding");
}

// The bialgebra conditions run only when the smash suite is asked for by name.
void suite_smash(const io::Document& d, Run& run, bool conditions) {
    if (!d.datum) throw InputError("InputError: suite smash needs a datum");
    try {
        const SmashProduct P = doi_smash(*d.datum);
        run.add("smash", "product", check_hom_algebra(P.product));
        if (d.monoidal && conditions)
            run.add("smash", "bialgebra_conditions",
                    check_smash_conditions(P, d.monoidal->a_bialgebra, dual_bialgebra(d.monoidal->c_bialgebra)));
        for (std::size_t i = 0; i < d.doi_modules.size(); ++i)
            run.add("smash", "smash_module[" + std::to_string(i) + "]", check_hom_module(doi_to_smash(d.doi_modules[i])));
    } catch (const Error& e) {
        run.add_error("smash", "product", e);
    }
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int cmd_check(const std::string& path, const std::string& suite, const Options& opt) {
    const auto t0 = Clock::now();
    Run run{"check"};
    const io::Document d = load(path, opt, run);
    if (suite == "all") {
        bool any = false;
        auto maybe = [&](bool applies, void (*f)(const io::Document&, Run&)) {
            if (!applies) return;
            any = true;
            f(d, run);
        };
        maybe(d.hopf || d.algebra || d.coalgebra, suite_hopf);
        maybe(d.datum.has_value(), suite_datum);
        maybe(!d.doi_modules.empty(), suite_doi);
        maybe(!d.yd_modules.empty(), suite_yd);
        maybe(d.monoidal && d.q_map, suite_braiding);
        if (d.datum) {
            any = true;
            suite_smash(d, run, false);
        }
        if (!any) throw InputError("InputError: document has no checkable section");
    } else if (suite == "hopf") {
        suite_hopf(d, run);
    } else if (suite == "datum") {
        suite_datum(d, run);
    } else if (suite == "doi") {
        suite_doi(d, run);
    } else if (suite == "yd") {
        suite_yd(d, run);
    } else if (suite == "braiding") {
        suite_braiding(d, run);
    } else {
        suite_smash(d, run, true);
    }
    return run.emit(opt, elapsed_ms(t0));
}

// ---- construct ----

const HomHopfAlgebra& need_hopf(const io::Document& d, const std::string& kind) {
    if (!d.hopf) throw InputError("InputError: construct " + kind + " needs a hopf section");
    return *d.hopf;
}

// "g^k": e_i -> e_{ik mod n}; "diag:a,b,...": diagonal.
LinearMap parse_aut(const std::string& spec, std::size_t n, const FieldSpec& f) {
    if (spec.rfind("g^", 0) == 0) {
        const std::string k = spec.substr(2);
        if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("InputError: --aut " + spec);
        const std::size_t e = std::stoul(k);
        LinearMap m(n, n);
        for (Index i = 0; i < n; ++i) m.set_col(i, basis_vec(static_cast<Index>((i * e) % n)));
        return m;
    }
    if (spec.rfind("diag:", 0) == 0) {
        std::vector<Scalar> d;
        std::stringstream ss(spec.substr(5));
        for (std::string t; std::getline(ss, t, ',');) d.push_back(Scalar::parse(t, f));
        if (d.size() != n) throw InputError("InputError: --aut needs " + std::to_string(n) + " diagonal entries");
        return LinearMap::diagonal(d);
    }
    throw InputError("InputError: --aut must be g^k or diag:a,b,...");
}

void put_target_datum(json& doc, const io::Document& t) {
    if (t.monoidal)
        io::put_datum(doc, *t.monoidal);
    else
        io::put_datum(doc, *t.datum);
}

DatumMorphism need_morphism(const io::Document& d, const std::string& kind) {
    if (!d.morphism) throw InputError("InputError: construct " + kind + " needs a morphism section");
    const auto& m = *d.morphism;
    return DatumMorphism(*d.datum, *m.target->datum, m.phi_H, m.psi_A, m.phi_C);
}

json construct_doc(const std::string& kind, const std::vector<io::Document>& in, const std::string& aut, Run& run) {
    const std::size_t want = kind == "tensor" ? 2 : 1;
    if (in.size() != want)
        throw InputError("InputError: construct " + kind + " takes " + std::to_string(want) + " input(s)");
    const io::Document& d = in[0];
    json doc = io::document_json(d.field);
    if (kind == "twist") {
        const HomHopfAlgebra& H = need_hopf(d, kind);
        if (aut.empty()) throw InputError("InputError: construct twist needs --aut");
        doc["hopf"] = io::hopf_json(twist_classical(H, parse_aut(aut, H.dim(), d.field)));
    } else if (kind == "opposite") {
        doc["hopf"] = io::hopf_json(opposite(need_hopf(d, kind)));
    } else if (kind == "dual") {
        doc["hopf"] = io::hopf_json(dual_hopf(need_hopf(d, kind)));
    } else if (kind == "tensor") {
        if (in[0].field != in[1].field) throw InputError("InputError: inputs over different fields");
        doc["hopf"] = io::hopf_json(tensor_hopf(need_hopf(in[0], kind), need_hopf(in[1], kind)));
    } else if (kind == "yd_datum") {
        const MonoidalDoiDatum G = yd_datum(need_hopf(d, kind));
        io::put_datum(doc, G);
        doc["q_map"] = io::q_map_json(yd_braiding_map(G), G.datum.C.dim(), G.datum.A.dim());
    } else if (kind == "induce") {
        if (!d.datum || d.doi_modules.empty()) throw InputError("InputError: construct induce needs a datum and doi_module");
        const DatumMorphism xi = need_morphism(d, kind);
        put_target_datum(doc, *d.morphism->target);
        json mods = json::array();
        for (const DoiModule& M : d.doi_modules) mods.push_back(io::doi_module_json(induce(xi, M).module));
        doc["doi_module"] = mods;
    } else if (kind == "cotensor") {
        if (!d.datum) throw InputError("InputError: construct cotensor needs a datum");
        const DatumMorphism xi = need_morphism(d, kind);
        const io::Document& t = *d.morphism->target;
        if (t.doi_modules.empty()) throw InputError("InputError: construct cotensor needs doi_module in morphism.target");
        if (d.monoidal)
            io::put_datum(doc, *d.monoidal);
        else
            io::put_datum(doc, *d.datum);
        json mods = json::array();
        for (const DoiModule& M : t.doi_modules) mods.push_back(io::doi_module_json(cotensor(xi, M).module));
        doc["doi_module"] = mods;
    } else if (kind == "double") {
        const DrinfeldDouble D = drinfeld_double(need_hopf(d, kind));
        doc["hopf"] = io::hopf_json(D.hopf);
        run.extra["quasitriangular"] = io::report_json(D.qt_report);
    } else {  // smash
        if (!d.datum) throw InputError("InputError: construct smash needs a datum");
        const SmashProduct P = doi_smash(*d.datum);
        bool done = false;
        if (d.monoidal) {
            const HomBialgebra Bd = dual_bialgebra(d.monoidal->c_bialgebra);
            const CheckReport r = check_smash_conditions(P, d.monoidal->a_bialgebra, Bd);
            run.add("construct", "smash_conditions", r);
            if (r.passed()) {
                HomHopfAlgebra S{smash_bialgebra(P, d.monoidal->a_bialgebra, Bd), {}, {}, {}};
                try {
                    S.S = convolution_invert(LinearMap::identity(S.dim()), S.alg(), S.co());
                    if (check_hom_hopf(S).passed()) {
                        doc["hopf"] = io::hopf_json(S);
                        done = true;
                    }
                } catch (const Error&) {
                }
                if (!done) {
                    doc["algebra"] = io::algebra_json(S.alg());
                    doc["coalgebra"] = io::coalgebra_json(S.co());
                    done = true;
                }
            }
        }
        if (!done) doc["algebra"] = io::algebra_json(P.product);
    }
    return doc;
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& paths, const std::string& out,
                  const std::string& aut, const Options& opt) {
    const auto t0 = Clock::now();
    Run run{"construct"};
    std::vector<io::Document> in;
    for (const auto& p : paths) in.push_back(load(p, opt, run));
    run.extra["kind"] = kind;
    json doc;
    try {
        doc = construct_doc(kind, in, aut, run);
    } catch (const Error& e) {
        run.add_error("construct", kind, e);
        return run.emit(opt, elapsed_ms(t0));
    }
    // the output must load back
    const io::Document back = io::parse_document(doc);
    json sections = json::array();
    for (const auto& s : back.sections()) sections.push_back(s);
    run.extra["sections"] = sections;
    const std::string text = io::serialize(doc);
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << text)) throw InputError("InputError: cannot write " + out);
    run.extra["output_digest"] = io::digest(text);
    run.add_flag("construct", kind, true);
    return run.emit(opt, elapsed_ms(t0));
}

// ---- braid ----

std::vector<DoiModule> resolve_objects(const std::vector<std::string>& names, const io::Document& d,
                                       const MonoidalDoiDatum& G, const Options& opt, Run& run) {
    std::vector<DoiModule> out;
    const std::uint64_t fp = G.datum.fingerprint();
    for (const auto& n : names) {
        if (n == "canonical") {
            out.push_back(canonical_doi_module(G));
        } else if (n == "unit") {
            out.push_back(unit_doi(G));
        } else if (n == "regular") {
            out.push_back(regular_doi(G));
        } else if (n.rfind("module:", 0) == 0) {
            const std::string k = n.substr(7);
            if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos || std::stoul(k) >= d.doi_modules.size())
                throw InputError("InputError: no object " + n);
            out.push_back(d.doi_modules[std::stoul(k)]);
        } else {
            const io::Document m = load(n, opt, run);
            if (m.doi_modules.empty()) throw InputError("InputError: " + n + " has no doi_module");
            for (const DoiModule& M : m.doi_modules) {
                if (M.datum.fingerprint() != fp) throw InputError("InputError: " + n + " lives over another datum");
                out.push_back(M);
            }
        }
    }
    return out;
}

int cmd_braid(const std::string& datum_path, const std::string& q_path, std::vector<std::string> objects,
              const Options& opt) {
    const auto t0 = Clock::now();
    Run run{"braid"};
    const io::Document d = load(datum_path, opt, run);
    if (!d.monoidal) throw InputError("InputError: " + datum_path + " holds no monoidal datum");
    const MonoidalDoiDatum& G = *d.monoidal;
    std::optional<io::Document> qd;
    if (q_path != datum_path) qd = load(q_path, opt, run);
    const io::Document& qdoc = qd ? *qd : d;
    if (!qdoc.q_map) throw InputError("InputError: " + q_path + " has no q_map");
    const LinearMap& Q = *qdoc.q_map;
    const std::size_t na = G.datum.A.dim(), nc = G.datum.C.dim();
    if (Q.dom() != nc * nc || Q.cod() != na * na) throw InputError("InputError: q_map dims do not match the datum");
    if (objects.empty()) objects.push_back("canonical");
    const std::vector<DoiModule> objs = resolve_objects(objects, d, G, opt, run);

    if (!add_braiding_checks(G, Q, run, "braiding")) return run.emit(opt, elapsed_ms(t0));
    const BraidingData B = make_braiding(G, Q);
    const BraidingFlags fl = flags_from(check_braiding_conditions(B));
    run.extra["flags"] = {{"linearity", fl.linearity},
                          {"colinearity", fl.colinearity},
                          {"hexagon_first", fl.hexagon_first},
                          {"hexagon_second", fl.hexagon_second}};
    run.extra["R"] = io::q_map_json(B.R, nc, na);

    const std::size_t k = objs.size();
    run.add("braiding", "hexagons_yang_baxter", check_hexagons_on(B, objs[0], objs[1 % k], objs[2 % k]));
    json braids = json::array();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const DoiModule &M = objs[i], &N = objs[j];
            const LinearMap c = braid(B, M, N), ci = braid_inverse(B, M, N);
            const std::string tag = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
            run.add_flag("braiding", "inverse" + tag, (ci * c).is_identity() && (c * ci).is_identity());
            run.add("braiding", "doi_morphism" + tag,
                    check_doi_morphism(c, tensor_doi(G, M, N, false), tensor_doi(G, N, M, false)));
            braids.push_back({{"pair", {i, j}}, {"matrix", io::tensor_json(c, {M.dim, N.dim}, {N.dim, M.dim})}});
        }
    run.extra["braids"] = braids;
    return run.emit(opt, elapsed_ms(t0));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homcat: Hom-Hopf algebras, Doi-Hopf modules and braidings with exact arithmetic"};
    app.fallthrough();
    app.require_subcommand(1);
    Options opt;
    std::string field;
    app.add_option("--field", field, "override the document field: Q or Fp:p");
    app.add_option("--report", opt.report, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timing", opt.timing, "include wall time in the report");

    std::string path, suite = "all";
    auto* chk = app.add_subcommand("check", "run checker suites on a document");
    chk->add_option("file", path)->required();
    chk->add_option("--suite", suite)->check(CLI::IsMember({"hopf", "datum", "doi", "yd", "braiding", "smash", "all"}));

    std::string kind, out, aut;
    std::vector<std::string> inputs;
    auto* con = app.add_subcommand("construct", "build a derived structure document");
    con->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"twist", "opposite", "dual", "tensor", "yd_datum", "induce", "cotensor", "double", "smash"}));
    con->add_option("inputs", inputs)->required();
    con->add_option("-o,--output", out)->required();
    con->add_option("--aut", aut, "automorphism for twist: g^k or diag:a,b,...");

    std::string datum_path, q_path;
    std::vector<std::string> objects;
    auto* br = app.add_subcommand("braid", "verify a braiding and print braid matrices");
    br->add_option("datum", datum_path)->required();
    br->add_option("q", q_path)->required();
    br->add_option("objects", objects, "canonical, unit, regular, module:i or document paths");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kPass : kInput;
    }
    try {
        if (!field.empty()) opt.field = FieldSpec::parse(field);
        if (*chk) return cmd_check(path, suite, opt);
        if (*con) return cmd_construct(kind, inputs, out, aut, opt);
        return cmd_braid(datum_path, q_path, objects, opt);
    } catch (const InputError& e) {
        std::cerr << e.what() << "\n";
        return kInput;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == "InputError" || e.code() == "InvalidField" || e.code() == "InvalidScalar" ? kInput : kFail;
    }
}
