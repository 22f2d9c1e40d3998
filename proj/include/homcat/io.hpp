#pragma once

#include "homcat/adjunction.hpp"

#include <json.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace homcat::io {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "homcat/1";

// Sparse tensor entries are [domain indices..., codomain indices..., "num/den"].
// Structure maps follow that rule: mul [i, j, k, c] means e_i e_j has c at e_k,
// alpha [i, j, c] means alpha(e_i) has c at e_j, unit [k, c], counit [i, c].

// A morphism of Doi data whose source is the enclosing document.
struct MorphismSection {
    LinearMap phi_H, psi_A, phi_C;
    std::shared_ptr<struct Document> target;
};

// A validated structure document. Every section present has been parsed and its
// structure maps checked for shape and invertibility; axioms are left to the checkers.
struct Document {
    std::string schema_version = kSchemaVersion;
    FieldSpec field;
    std::optional<HomHopfAlgebra> hopf;
    std::optional<HomAlgebra> algebra;
    std::optional<HomCoalgebra> coalgebra;
    std::optional<DoiDatum> datum;               // hopf + comodule_algebra + module_coalgebra
    std::optional<MonoidalDoiDatum> monoidal;    // when both bialgebra parts are present
    std::vector<DoiModule> doi_modules;          // over datum
    std::vector<YDModule> yd_modules;            // over hopf when there is no datum
    std::optional<LinearMap> q_map;              // C (x) C -> A (x) A
    std::optional<MorphismSection> morphism;

    std::vector<std::string> sections() const;
};

// Throws Error("InputError", ...) on malformed JSON, unknown schema or keys,
// inexact literals, bad indices, shape mismatches or singular structure maps.
Document parse_document(const json& j, const std::optional<FieldSpec>& field_override = {});
Document load_document(const std::string& path, const std::optional<FieldSpec>& field_override = {});

json field_json(const FieldSpec& f);
json scalar_json(const Scalar& s);
json vec_json(const Vec& v);

json tensor_json(const LinearMap& f, const std::vector<std::size_t>& dom, const std::vector<std::size_t>& cod);
LinearMap tensor_from_json(const json& j, const std::vector<std::size_t>& dom, const std::vector<std::size_t>& cod,
                           const FieldSpec& f);

json hopf_json(const HomHopfAlgebra& H);
json algebra_json(const HomAlgebra& A);
json coalgebra_json(const HomCoalgebra& C);
json doi_module_json(const DoiModule& M);
json yd_module_json(const YDModule& M);
json q_map_json(const LinearMap& Q, std::size_t dim_c, std::size_t dim_a);

// Top-level document skeleton {"schema_version", "field"}.
json document_json(const FieldSpec& f);
// Adds hopf, comodule_algebra and module_coalgebra (with bialgebra parts when given).
void put_datum(json& doc, const DoiDatum& D, const HomBialgebra* a_bi = nullptr, const HomBialgebra* c_bi = nullptr);
inline void put_datum(json& doc, const MonoidalDoiDatum& G) { put_datum(doc, G.datum, &G.a_bialgebra, &G.c_bialgebra); }

json report_json(const CheckReport& r, std::size_t max_failures = 20);

// Canonical text: two-space indentation, sorted keys, trailing newline.
std::string serialize(const json& j);
// 64-bit FNV-1a over the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

}  // namespace homcat::io
