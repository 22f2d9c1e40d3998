#include "homcat/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace homcat::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw Error("InputError", where + ": " + what);
}

std::string inner(const Error& e) {
    const std::string w = e.what();
    return e.code() == "InputError" ? w.substr(std::string("InputError: ").size()) : w;
}

void allow_keys(const json& obj, const std::set<std::string>& allowed, const std::set<std::string>& required,
                const std::string& where) {
    if (!obj.is_object()) bad(where, "expected an object");
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) bad(where, "unknown key '" + k + "'");
    for (const auto& k : required)
        if (!obj.contains(k)) bad(where, "missing key '" + k + "'");
}

std::size_t read_dim(const json& obj, const std::string& where) {
    const json& d = obj.at("dim");
    if (!d.is_number_integer() || d.get<long long>() <= 0) bad(where, "dim must be a positive integer");
    return d.get<std::size_t>();
}

Scalar read_scalar(const json& c, const FieldSpec& f, const std::string& where) {
    if (c.is_string()) {
        try {
            return Scalar::parse(c.get<std::string>(), f);
        } catch (const Error& e) {
            bad(where, e.what());
        }
    }
    if (c.is_number_integer()) return Scalar::parse(c.dump(), f);
    bad(where, "coefficients must be exact rational strings or integers, got " + c.dump());
}

// Wraps constructor errors (shape, singular maps) as input errors.
template <class F>
auto guarded(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.code() == "InputError") throw;
        bad(where, e.what());
    }
}

std::size_t product(const std::vector<std::size_t>& d) {
    std::size_t p = 1;
    for (std::size_t x : d) p *= x;
    return p;
}

LinearMap map_or_identity(const json& obj, const char* key, std::size_t n, const FieldSpec& f,
                          const std::string& where) {
    if (!obj.contains(key)) return LinearMap::identity(n);
    try {
        return tensor_from_json(obj.at(key), {n}, {n}, f);
    } catch (const Error& e) {
        bad(where + "." + key, inner(e));
    }
}

struct Parser {
    FieldSpec field;

    LinearMap T(const json& obj, const char* key, std::vector<std::size_t> dom, std::vector<std::size_t> cod,
                const std::string& where) const {
        try {
            return tensor_from_json(obj.at(key), dom, cod, field);
        } catch (const Error& e) {
            bad(where + "." + key, inner(e));
        }
    }

    HomAlgebra algebra(const json& j, const std::string& where, const std::set<std::string>& extra = {}) const {
        std::set<std::string> allowed{"dim", "mul", "unit", "alpha"};
        allowed.insert(extra.begin(), extra.end());
        allow_keys(j, allowed, {"dim", "mul", "unit"}, where);
        const std::size_t n = read_dim(j, where);
        const LinearMap mul = T(j, "mul", {n, n}, {n}, where);
        const LinearMap unit = T(j, "unit", {}, {n}, where);
        const LinearMap alpha = map_or_identity(j, "alpha", n, field, where);
        return guarded(where, [&] { return HomAlgebra(mul, unit.col(0), alpha); });
    }

    HomCoalgebra coalgebra(const json& j, const std::string& where, const std::set<std::string>& extra = {}) const {
        std::set<std::string> allowed{"dim", "comul", "counit", "alpha"};
        allowed.insert(extra.begin(), extra.end());
        allow_keys(j, allowed, {"dim", "comul", "counit"}, where);
        const std::size_t n = read_dim(j, where);
        const LinearMap comul = T(j, "comul", {n}, {n, n}, where);
        const LinearMap counit = T(j, "counit", {n}, {}, where);
        const LinearMap alpha = map_or_identity(j, "alpha", n, field, where);
        return guarded(where, [&] { return HomCoalgebra(comul, counit, alpha); });
    }

    HomHopfAlgebra hopf(const json& j) const {
        const std::string where = "hopf";
        allow_keys(j, {"dim", "mul", "unit", "comul", "counit", "alpha", "antipode", "antipode_inverse"},
                   {"dim", "mul", "unit", "comul", "counit", "antipode"}, where);
        HomHopfAlgebra H;
        H.bi.alg = algebra(j, where, {"comul", "counit", "antipode", "antipode_inverse"});
        H.bi.co = coalgebra(j, where, {"mul", "unit", "antipode", "antipode_inverse"});
        const std::size_t n = H.dim();
        H.S = T(j, "antipode", {n}, {n}, where);
        if (j.contains("antipode_inverse")) H.S_inv = T(j, "antipode_inverse", {n}, {n}, where);
        return H;
    }

    void parse(const json& j, Document& d, bool top) const {
        const std::set<std::string> sections{"hopf",      "algebra",          "coalgebra",  "comodule_algebra",
                                             "module_coalgebra", "doi_module", "q_map", "morphism", "description"};
        std::set<std::string> allowed = sections;
        if (top) allowed.insert({"schema_version", "field"});
        allow_keys(j, allowed, top ? std::set<std::string>{"schema_version", "field"} : std::set<std::string>{},
                   top ? "document" : "morphism.target");
        if (j.contains("description") && !j.at("description").is_string()) bad("description", "expected a string");

        if (j.contains("hopf")) d.hopf = hopf(j.at("hopf"));
        if (j.contains("algebra")) d.algebra = algebra(j.at("algebra"), "algebra");
        if (j.contains("coalgebra")) d.coalgebra = coalgebra(j.at("coalgebra"), "coalgebra");

        const bool has_a = j.contains("comodule_algebra"), has_c = j.contains("module_coalgebra");
        if (has_a != has_c) bad("document", "comodule_algebra and module_coalgebra come together");
        if (has_a) datum(j, d);

        if (j.contains("doi_module")) modules(j.at("doi_module"), d);
        if (j.contains("q_map")) {
            // dims come from the datum when there is one, else from dim_a / dim_c
            const json& q = j.at("q_map");
            allow_keys(q, {"q", "dim_a", "dim_c"}, d.datum ? std::set<std::string>{"q"} : std::set<std::string>{"q", "dim_a", "dim_c"},
                       "q_map");
            std::size_t na = 0, nc = 0;
            if (d.datum) {
                na = d.datum->A.dim();
                nc = d.datum->C.dim();
            }
            for (auto [key, slot] : {std::pair{"dim_a", &na}, std::pair{"dim_c", &nc}}) {
                if (!q.contains(key)) continue;
                const json& v = q.at(key);
                if (!v.is_number_integer() || v.get<long long>() <= 0) bad("q_map", std::string(key) + " must be positive");
                if (d.datum && v.get<std::size_t>() != *slot) bad("q_map", std::string(key) + " disagrees with the datum");
                *slot = v.get<std::size_t>();
            }
            d.q_map = T(q, "q", {nc, nc}, {na, na}, "q_map");
        }
        if (j.contains("morphism")) morphism(j.at("morphism"), d);
    }

    void datum(const json& j, Document& d) const {
        if (!d.hopf) bad("comodule_algebra", "needs a hopf section");
        const HomHopfAlgebra& H = *d.hopf;
        const std::size_t nh = H.dim();

        const json& ja = j.at("comodule_algebra");
        const HomAlgebra A = algebra(ja, "comodule_algebra", {"coaction", "comul", "counit"});
        const std::size_t na = A.dim;
        const LinearMap rho = T(ja, "coaction", {na}, {na, nh}, "comodule_algebra");
        const ComoduleAlgebra CA{H.bi, A, guarded("comodule_algebra", [&] { return HomComodule(H.co(), rho, A.alpha); })};

        const json& jc = j.at("module_coalgebra");
        const HomCoalgebra C = coalgebra(jc, "module_coalgebra", {"action", "mul", "unit"});
        const std::size_t nc = C.dim;
        const LinearMap act = T(jc, "action", {nh, nc}, {nc}, "module_coalgebra");
        const ModuleCoalgebra MC{H.bi, C, guarded("module_coalgebra", [&] { return HomModule(H.alg(), act, C.gamma); })};

        d.datum = DoiDatum{H, CA, MC};

        const bool a_bi = ja.contains("comul") || ja.contains("counit");
        const bool c_bi = jc.contains("mul") || jc.contains("unit");
        if (!a_bi && !c_bi) return;
        if (!(ja.contains("comul") && ja.contains("counit") && jc.contains("mul") && jc.contains("unit")))
            bad("document", "a monoidal datum needs comul/counit on comodule_algebra and mul/unit on module_coalgebra");
        MonoidalDoiDatum G;
        G.datum = *d.datum;
        G.a_bialgebra.alg = A;
        G.a_bialgebra.co = guarded("comodule_algebra", [&] {
            return HomCoalgebra(T(ja, "comul", {na}, {na, na}, "comodule_algebra"),
                                T(ja, "counit", {na}, {}, "comodule_algebra"), A.alpha);
        });
        G.c_bialgebra.co = C;
        G.c_bialgebra.alg = guarded("module_coalgebra", [&] {
            return HomAlgebra(T(jc, "mul", {nc, nc}, {nc}, "module_coalgebra"),
                              T(jc, "unit", {}, {nc}, "module_coalgebra").col(0), C.gamma);
        });
        d.monoidal = std::move(G);
    }

    void modules(const json& j, Document& d) const {
        const json list = j.is_array() ? j : json::array({j});
        if (list.empty()) bad("doi_module", "empty list");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string where = "doi_module[" + std::to_string(i) + "]";
            const json& m = list[i];
            allow_keys(m, {"dim", "action", "coaction", "mu"}, {"dim", "action", "coaction"}, where);
            const std::size_t n = read_dim(m, where);
            const LinearMap mu = map_or_identity(m, "mu", n, field, where);
            if (d.datum) {
                const std::size_t na = d.datum->A.dim(), nc = d.datum->C.dim();
                const LinearMap act = T(m, "action", {na, n}, {n}, where);
                const LinearMap co = T(m, "coaction", {n}, {n, nc}, where);
                d.doi_modules.push_back(guarded(where, [&] { return DoiModule(*d.datum, act, co, mu); }));
            } else if (d.hopf) {
                const std::size_t nh = d.hopf->dim();
                const LinearMap act = T(m, "action", {nh, n}, {n}, where);
                const LinearMap co = T(m, "coaction", {n}, {n, nh}, where);
                d.yd_modules.push_back(guarded(where, [&] { return YDModule(*d.hopf, act, co, mu); }));
            } else {
                bad(where, "needs a datum or a hopf section");
            }
        }
    }

    void morphism(const json& j, Document& d) const {
        allow_keys(j, {"phi_H", "psi_A", "phi_C", "target"}, {"phi_H", "psi_A", "phi_C", "target"}, "morphism");
        if (!d.datum) bad("morphism", "the enclosing document must hold the source datum");
        auto t = std::make_shared<Document>();
        t->field = field;
        parse(j.at("target"), *t, false);
        if (!t->datum) bad("morphism.target", "must hold a datum");
        const DoiDatum &S = *d.datum, &D = *t->datum;
        d.morphism = MorphismSection{T(j, "phi_H", {S.H.dim()}, {D.H.dim()}, "morphism"),
                                     T(j, "psi_A", {S.A.dim()}, {D.A.dim()}, "morphism"),
                                     T(j, "phi_C", {S.C.dim()}, {D.C.dim()}, "morphism"), t};
    }
};

FieldSpec read_field(const json& j) {
    try {
        if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
        if (j.is_object() && j.size() == 1 && j.contains("Fp") && j.at("Fp").is_number_integer())
            return FieldSpec::prime(j.at("Fp").get<std::uint64_t>());
    } catch (const Error& e) {
        bad("field", e.what());
    }
    bad("field", "expected \"Q\" or {\"Fp\": p}");
}

}  // namespace

std::vector<std::string> Document::sections() const {
    std::vector<std::string> s;
    if (hopf) s.push_back("hopf");
    if (algebra) s.push_back("algebra");
    if (coalgebra) s.push_back("coalgebra");
    if (datum) s.push_back("datum");
    if (monoidal) s.push_back("monoidal");
    if (!doi_modules.empty()) s.push_back("doi_module");
    if (!yd_modules.empty()) s.push_back("yd_module");
    if (q_map) s.push_back("q_map");
    if (morphism) s.push_back("morphism");
    return s;
}

LinearMap tensor_from_json(const json& j, const std::vector<std::size_t>& dom, const std::vector<std::size_t>& cod,
                           const FieldSpec& f) {
    if (!j.is_array()) bad("tensor", "expected an array of entries");
    const std::size_t nd = product(dom), nc = product(cod), arity = dom.size() + cod.size();
    std::vector<std::vector<std::pair<Index, Scalar>>> cols(nd);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != arity + 1)
            bad("tensor", "entry " + e.dump() + " should have " + std::to_string(arity) + " indices and a coefficient");
        std::size_t col = 0, row = 0;
        for (std::size_t k = 0; k < arity; ++k) {
            const std::size_t bound = k < dom.size() ? dom[k] : cod[k - dom.size()];
            if (!e[k].is_number_integer() || e[k].get<long long>() < 0 || e[k].get<std::size_t>() >= bound)
                bad("tensor", "index out of range in " + e.dump());
            const std::size_t x = e[k].get<std::size_t>();
            if (k < dom.size())
                col = col * bound + x;
            else
                row = row * bound + x;
        }
        if (!seen.insert({col, row}).second) bad("tensor", "duplicate entry " + e.dump());
        const Scalar c = read_scalar(e[arity], f, "tensor");
        if (!c.is_zero()) cols[col].emplace_back(static_cast<Index>(row), c);
    }
    std::vector<Vec> out(nd);
    for (std::size_t i = 0; i < nd; ++i) {
        std::sort(cols[i].begin(), cols[i].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out[i] = Vec(cols[i].begin(), cols[i].end());
    }
    return LinearMap(nd, nc, std::move(out));
}

json scalar_json(const Scalar& s) { return s.str(); }

json vec_json(const Vec& v) {
    Vec w = v;
    std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    json out = json::array();
    for (const auto& [i, c] : w)
        if (!c.is_zero()) out.push_back({i, scalar_json(c)});
    return out;
}

json tensor_json(const LinearMap& f, const std::vector<std::size_t>& dom, const std::vector<std::size_t>& cod) {
    if (product(dom) != f.dom() || product(cod) != f.cod()) throw Error("DimensionMismatch", "tensor_json");
    auto digits = [](std::size_t x, const std::vector<std::size_t>& dims) {
        std::vector<std::size_t> d(dims.size());
        for (std::size_t k = dims.size(); k-- > 0;) {
            d[k] = x % dims[k];
            x /= dims[k];
        }
        return d;
    };
    json out = json::array();
    for (Index c = 0; c < f.dom(); ++c) {
        Vec w = f.col(c);
        std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        const auto dc = digits(c, dom);
        for (const auto& [r, x] : w) {
            if (x.is_zero()) continue;
            json e = json::array();
            for (std::size_t v : dc) e.push_back(v);
            for (std::size_t v : digits(r, cod)) e.push_back(v);
            e.push_back(scalar_json(x));
            out.push_back(std::move(e));
        }
    }
    return out;
}

json field_json(const FieldSpec& f) {
    if (!f.is_prime()) return "Q";
    return json{{"Fp", f.p}};
}

json algebra_json(const HomAlgebra& A) {
    const std::size_t n = A.dim;
    return {{"dim", n},
            {"mul", tensor_json(A.mul, {n, n}, {n})},
            {"unit", tensor_json(LinearMap(1, n, {A.unit}), {}, {n})},
            {"alpha", tensor_json(A.alpha, {n}, {n})}};
}

json coalgebra_json(const HomCoalgebra& C) {
    const std::size_t n = C.dim;
    return {{"dim", n},
            {"comul", tensor_json(C.comul, {n}, {n, n})},
            {"counit", tensor_json(C.counit, {n}, {})},
            {"alpha", tensor_json(C.gamma, {n}, {n})}};
}

json hopf_json(const HomHopfAlgebra& H) {
    if (H.alg().alpha != H.co().gamma) throw Error("Unrepresentable", "hopf section needs one structure map");
    json j = algebra_json(H.alg());
    const json c = coalgebra_json(H.co());
    j["comul"] = c["comul"];
    j["counit"] = c["counit"];
    const std::size_t n = H.dim();
    j["antipode"] = tensor_json(H.S, {n}, {n});
    if (H.S_inv) j["antipode_inverse"] = tensor_json(*H.S_inv, {n}, {n});
    return j;
}

json doi_module_json(const DoiModule& M) {
    const std::size_t n = M.dim, na = M.datum.A.dim(), nc = M.datum.C.dim();
    return {{"dim", n},
            {"action", tensor_json(M.action, {na, n}, {n})},
            {"coaction", tensor_json(M.coaction, {n}, {n, nc})},
            {"mu", tensor_json(M.mu, {n}, {n})}};
}

json yd_module_json(const YDModule& M) {
    const std::size_t n = M.dim, nh = M.H.dim();
    return {{"dim", n},
            {"action", tensor_json(M.action, {nh, n}, {n})},
            {"coaction", tensor_json(M.coaction, {n}, {n, nh})},
            {"mu", tensor_json(M.mu, {n}, {n})}};
}

json q_map_json(const LinearMap& Q, std::size_t dim_c, std::size_t dim_a) {
    return {{"dim_a", dim_a}, {"dim_c", dim_c}, {"q", tensor_json(Q, {dim_c, dim_c}, {dim_a, dim_a})}};
}

json document_json(const FieldSpec& f) { return {{"schema_version", kSchemaVersion}, {"field", field_json(f)}}; }

void put_datum(json& doc, const DoiDatum& D, const HomBialgebra* a_bi, const HomBialgebra* c_bi) {
    const std::size_t nh = D.H.dim(), na = D.A.dim(), nc = D.C.dim();
    doc["hopf"] = hopf_json(D.H);
    json a = algebra_json(D.A.algebra);
    a["coaction"] = tensor_json(D.A.comodule.coaction, {na}, {na, nh});
    json c = coalgebra_json(D.C.coalgebra);
    c["action"] = tensor_json(D.C.module.action, {nh, nc}, {nc});
    if (a_bi && c_bi) {
        const json ac = coalgebra_json(a_bi->co);
        a["comul"] = ac["comul"];
        a["counit"] = ac["counit"];
        const json ca = algebra_json(c_bi->alg);
        c["mul"] = ca["mul"];
        c["unit"] = ca["unit"];
    }
    doc["comodule_algebra"] = std::move(a);
    doc["module_coalgebra"] = std::move(c);
}

json report_json(const CheckReport& r, std::size_t max_failures) {
    std::map<std::string, std::size_t> counts;
    for (const Failure& f : r.failures) ++counts[f.axiom];
    json fails = json::array();
    for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) {
        const Failure& f = r.failures[i];
        fails.push_back({{"axiom", f.axiom}, {"witness", f.witness}, {"lhs", vec_json(f.lhs)}, {"rhs", vec_json(f.rhs)}});
    }
    return {{"passed", r.passed()}, {"failure_count", r.failures.size()}, {"failing_axioms", counts}, {"failures", fails}};
}

Document parse_document(const json& j, const std::optional<FieldSpec>& field_override) {
    if (!j.is_object()) bad("document", "expected a JSON object");
    if (!j.contains("schema_version") || !j.at("schema_version").is_string())
        bad("document", "missing schema_version");
    if (j.at("schema_version").get<std::string>() != kSchemaVersion)
        bad("document", "unknown schema '" + j.at("schema_version").get<std::string>() + "'");
    if (!j.contains("field")) bad("document", "missing field");
    Document d;
    d.schema_version = kSchemaVersion;
    d.field = field_override ? *field_override : read_field(j.at("field"));
    Parser{d.field}.parse(j, d, true);
    return d;
}

Document load_document(const std::string& path, const std::optional<FieldSpec>& field_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad(path, "cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    json j;
    try {
        j = json::parse(ss.str());
    } catch (const json::exception& e) {
        bad(path, std::string("malformed JSON: ") + e.what());
    }
    try {
        return parse_document(j, field_override);
    } catch (const json::exception& e) {
        bad(path, std::string("schema: ") + e.what());
    }
}

std::string serialize(const json& j) { return j.dump(2) + "\n"; }

std::string digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace homcat::io
