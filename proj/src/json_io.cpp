#include "morq/json_io.hpp"

namespace morq {

json rational_to_json(const Rational& r) {
    if (r.den() == 1 && r.num().fits_slong_p())
        return json(static_cast<long long>(r.num().get_si()));
    return json(r.str());
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw ParseError("expected a rational (integer or \"p/q\" string)");
}

json type_to_json(const MorphismType& t) {
    json blocks = json::array();
    for (const auto& b : t.blocks)
        blocks.push_back(json{{"degree", b.degree}, {"mult", b.mult}});
    return json{{"r", t.r}, {"blocks", blocks}, {"n", t.n}};
}

MorphismType type_from_json(const json& j) {
    MorphismType t;
    t.r = j.at("r").get<int>();
    t.n = j.at("n").get<int>();
    for (const auto& b : j.at("blocks"))
        t.blocks.push_back(SourceBlock{b.at("degree").get<int>(), b.at("mult").get<int>()});
    t.validate();
    return t;
}

json polarization_to_json(const Polarization& p) {
    json ls = json::array();
    for (const auto& l : p.lambdas) ls.push_back(rational_to_json(l));
    return json{{"lambdas", ls}, {"mu", rational_to_json(p.mu)}};
}

Polarization polarization_from_json(const json& j, const MorphismType& t) {
    Polarization p;
    for (const auto& l : j.at("lambdas")) p.lambdas.push_back(rational_from_json(l));
    p.mu = rational_from_json(j.at("mu"));
    p.validate(t);
    return p;
}

json form_to_json(const HomForm<RationalField>& f) {
    json terms = json::array();
    for (int i = 0; i < f.basis->size(); ++i) {
        if (f.coeffs[i].is_zero()) continue;
        terms.push_back(json{{"exponents", f.basis->monomial(i)},
                             {"coeff", rational_to_json(f.coeffs[i])}});
    }
    return terms;
}

json form_matrix_to_json(const FormMatrix<RationalField>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(form_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"num_vars", m.nvars},
                {"degree", m.degree}, {"entries", rows}};
}

FormMatrix<RationalField> form_matrix_from_json(const json& j) {
    RationalField Q;
    FormMatrix<RationalField> m(Q, j.at("rows").get<int>(), j.at("cols").get<int>(),
                                j.at("num_vars").get<int>(), j.at("degree").get<int>());
    const json& entries = j.at("entries");
    for (int i = 0; i < m.rows; ++i)
        for (int c = 0; c < m.cols; ++c) {
            for (const auto& term : entries.at(i).at(c)) {
                Exponents e = term.at("exponents").get<Exponents>();
                int deg = 0;
                for (int x : e) deg += x;
                if (static_cast<int>(e.size()) != m.nvars || deg != m.degree)
                    throw ParseError("term exponents do not match the grid degree");
                int idx = m.at(i, c).basis->index_of(e);
                m.at(i, c).coeffs[idx] = rational_from_json(term.at("coeff"));
            }
        }
    return m;
}

json morphism_to_json(const Morphism<RationalField>& m) {
    json blocks = json::array();
    for (const auto& b : m.blocks) blocks.push_back(form_matrix_to_json(b));
    return json{{"type", type_to_json(m.type)}, {"blocks", blocks}};
}

Morphism<RationalField> morphism_from_json(const json& j) {
    Morphism<RationalField> m{type_from_json(j.at("type")), {}};
    for (const auto& b : j.at("blocks")) m.blocks.push_back(form_matrix_from_json(b));
    if (static_cast<int>(m.blocks.size()) != m.type.num_blocks())
        throw ParseError("block count does not match the type");
    for (int i = 0; i < m.type.num_blocks(); ++i) {
        const auto& b = m.blocks[i];
        if (b.rows != m.type.n || b.cols != m.type.mult(i) ||
            b.nvars != m.type.num_vars() || b.degree != m.type.deg(i))
            throw ParseError("block " + std::to_string(i) + " has the wrong shape");
    }
    return m;
}

json fp_matrix_to_json(const Matrix<PrimeField>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        rows.push_back(row);
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows},
                {"prime", m.field().p}};
}

json fp_form_matrix_to_json(const FormMatrix<PrimeField>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) {
            json terms = json::array();
            const auto& f = m.at(i, j);
            for (int s = 0; s < f.basis->size(); ++s) {
                if (f.coeffs[s] == 0) continue;
                terms.push_back(json{{"exponents", f.basis->monomial(s)},
                                     {"coeff", f.coeffs[s]}});
            }
            row.push_back(terms);
        }
        rows.push_back(row);
    }
    return json{{"rows", m.rows}, {"cols", m.cols}, {"num_vars", m.nvars},
                {"degree", m.degree}, {"entries", rows}, {"prime", m.field.p}};
}

json family_to_json(const SubspaceFamily& f) {
    json blocks = json::array();
    for (const auto& b : f.blocks) blocks.push_back(fp_matrix_to_json(b));
    return json{{"blocks", blocks}, {"dims", f.dims()}};
}

json verdict_to_json(const StabilityVerdict& v) {
    json margins = json::array();
    for (const auto& m : v.margins) margins.push_back(rational_to_json(m));
    json w;
    if (v.witness) {
        w = family_to_json(*v.witness);
        w["margin"] = rational_to_json(*v.witness_margin);
    }
    return json{{"status", stability_str(v.status)}, {"prime", v.prime},
                {"witness", v.witness ? w : json(nullptr)}, {"margins", margins}};
}

json block_route_to_json(const BlockRouteVerdict& v) {
    auto hit_to_json = [](const std::optional<BlockFormHit>& h) {
        if (!h) return json(nullptr);
        return json{{"kappas", h->kappas}, {"l", h->l},
                    {"image_dim", h->image_dim}, {"family", family_to_json(h->family)}};
    };
    return json{{"status", stability_str(v.status)},
                {"strict_hit", hit_to_json(v.strict_hit)},
                {"tight_hit", hit_to_json(v.tight_hit)}};
}

json tilde_verdict_to_json(const TildeVerdict& v) {
    json margins = json::array();
    for (const auto& m : v.margins) margins.push_back(rational_to_json(m));
    json w;
    if (v.witness) {
        w = json{{"p2_basis", fp_matrix_to_json(v.witness->p2_basis)},
                 {"p1_basis", fp_matrix_to_json(v.witness->p1_basis)},
                 {"p3_dim", v.witness->p3_dim},
                 {"image_dim", v.witness->image_dim},
                 {"margin", rational_to_json(*v.witness_margin)}};
    }
    return json{{"status", stability_str(v.status)}, {"prime", v.prime},
                {"witness", v.witness ? w : json(nullptr)}, {"margins", margins}};
}

json reduced_report_to_json(const ReducedReport& r) {
    json conds = json::array();
    for (const auto& c : r.conditions)
        conds.push_back(json{{"tag", c.tag}, {"k", c.k}, {"i", c.i},
                             {"bound", rational_to_json(c.bound)},
                             {"l_strict", c.l_strict}, {"l_tight", c.l_tight},
                             {"strict_reachable", c.strict_reachable},
                             {"tight_reachable", c.tight_reachable}});
    return json{{"status", stability_str(r.status)}, {"prime", r.prime},
                {"conditions", conds},
                {"violated", r.violated_tag ? json(*r.violated_tag) : json(nullptr)}};
}

json zero_block_report_to_json(const ZeroBlockReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"columns", c.columns}, {"bound", c.bound},
                              {"max_exact", c.max_exact}, {"max_random", c.max_random},
                              {"pass", c.pass}});
    return json{{"checks", checks}, {"columns_span", r.columns_span},
                {"pass", r.pass}, {"trials", r.trials}, {"seed", r.seed}};
}

json omega_to_json(const OmegaReport& r) {
    return json{{"closed_form", r.closed_form}, {"recount", r.recount},
                {"a21", r.a21}, {"matches", r.matches},
                {"strict_range", r.strict_range}};
}

json embedded_to_json(const EmbeddedPoint<PrimeField>& e) {
    json out{{"kind", e.three_block ? "embedded31" : "embedded21"},
             {"type", type_to_json(e.type)},
             {"gamma", fp_form_matrix_to_json(e.gamma)}};
    if (e.three_block) {
        out["xi2"] = fp_form_matrix_to_json(e.xi);
        out["xi3"] = fp_form_matrix_to_json(e.xi3);
    } else {
        out["xi"] = fp_form_matrix_to_json(e.xi);
    }
    return out;
}

json condition_to_json(const Condition& c) {
    return json{{"description", c.description},
                {"lhs", rational_to_json(c.lhs)},
                {"relation", c.rel_str()},
                {"rhs", rational_to_json(c.rhs)},
                {"strict", c.strict()},
                {"holds", c.holds()},
                {"margin", rational_to_json(c.margin())}};
}

json certificate_to_json(const CertificateReport& r) {
    json conds = json::array(), gates = json::array(), checks = json::array(),
         aux = json::array();
    for (const auto& c : r.conditions) conds.push_back(condition_to_json(c));
    for (const auto& c : r.gates) gates.push_back(condition_to_json(c));
    for (const auto& c : r.checks)
        checks.push_back(json{{"description", c.description}, {"pass", c.pass}});
    for (const auto& c : r.auxiliary) aux.push_back(condition_to_json(c));
    return json{{"claim", r.claim}, {"conditions", conds}, {"gates", gates},
                {"checks", checks}, {"auxiliary", aux}, {"notes", r.notes},
                {"overall", r.overall_str()}};
}

json nonempty_to_json(const NonemptyReport& r) {
    json conds = json::array();
    for (const auto& c : r.conditions) conds.push_back(condition_to_json(c));
    return json{{"shape", r.shape}, {"conditions", conds}, {"all_hold", r.all_hold_flag}};
}

json constant_value_to_json(const ConstantValue& v) {
    json w = v.witness ? fp_matrix_to_json(*v.witness) : json(nullptr);
    return json{{"value", v.value},
                {"status", v.exhaustive ? "exhaustive" : "lower-bound"},
                {"witness", w},
                {"skipped_dims", v.skipped_dims}};
}

json s7_constants_to_json(const S7Constants& s) {
    json values;
    for (const auto& [k, v] : s.values) values[k] = constant_value_to_json(v);
    return json{{"d", s.d}, {"prime", s.p}, {"values", values}};
}

} // namespace morq
