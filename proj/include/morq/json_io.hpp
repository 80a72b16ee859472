#pragma once

#include <json.hpp>

#include "morq/certificates.hpp"
#include "morq/constants.hpp"
#include "morq/embedding.hpp"

namespace morq {

using json = nlohmann::json;

// Rationals travel as strings "p/q" (or plain integers); never as floats.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json type_to_json(const MorphismType& t);
MorphismType type_from_json(const json& j);

json polarization_to_json(const Polarization& p);
Polarization polarization_from_json(const json& j, const MorphismType& t);

// Forms are lists of {"exponents": [...], "coeff": ...} terms, zero terms
// omitted.
json form_to_json(const HomForm<RationalField>& f);
json form_matrix_to_json(const FormMatrix<RationalField>& m);
FormMatrix<RationalField> form_matrix_from_json(const json& j);

json morphism_to_json(const Morphism<RationalField>& m);
Morphism<RationalField> morphism_from_json(const json& j);

json fp_matrix_to_json(const Matrix<PrimeField>& m);
json fp_form_matrix_to_json(const FormMatrix<PrimeField>& m);

json family_to_json(const SubspaceFamily& f);
json verdict_to_json(const StabilityVerdict& v);
json block_route_to_json(const BlockRouteVerdict& v);
json tilde_verdict_to_json(const TildeVerdict& v);
json reduced_report_to_json(const ReducedReport& r);
json zero_block_report_to_json(const ZeroBlockReport& r);
json omega_to_json(const OmegaReport& r);
json embedded_to_json(const EmbeddedPoint<PrimeField>& e);

json condition_to_json(const Condition& c);
json certificate_to_json(const CertificateReport& r);
json nonempty_to_json(const NonemptyReport& r);
json constant_value_to_json(const ConstantValue& v);
json s7_constants_to_json(const S7Constants& s);

} // namespace morq
