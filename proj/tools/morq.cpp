// Command-line frontend: chamber listing, semistability decisions, embedding
// checks, constant searches, certificates, and the explicit construction.
// All I/O is exact JSON; identical inputs and seed give byte-identical output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "morq/json_io.hpp"
#include "morq/version.hpp"

namespace {

using namespace morq;

struct GlobalOpts {
    uint64_t seed = 0;
    uint64_t budget = 5'000'000;
    int jobs = 1;
    std::string out;
};

int emit(const GlobalOpts& g, const std::string& command, const json& input,
         const json& result, int exit_code) {
    json envelope{{"artifact", "morq"},       {"version", kVersion},
                  {"command", command},       {"seed", g.seed},
                  {"budget", g.budget},       {"jobs", g.jobs},
                  {"input", input},           {"result", result}};
    std::string text = envelope.dump(2) + "\n";
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out, std::ios::binary);
        f << text;
    }
    return exit_code;
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    json j;
    f >> j;
    return j;
}

// accepts either a bare morphism or a previous report envelope
Morphism<RationalField> load_morphism(const std::string& path) {
    json j = load_json(path);
    if (!j.contains("type") && j.contains("result")) j = j.at("result");
    return morphism_from_json(j);
}

MorphismType type_from_flags(int r, int n, const std::vector<int>& degrees,
                             const std::vector<int>& mults) {
    MorphismType t;
    t.r = r;
    t.n = n;
    if (degrees.size() != mults.size())
        throw ParseError("need one multiplicity per degree");
    for (size_t i = 0; i < degrees.size(); ++i)
        t.blocks.push_back(SourceBlock{degrees[i], mults[i]});
    t.validate();
    return t;
}

Polarization pol_from_flags(const MorphismType& t, const std::string& l1,
                            const std::string& l2) {
    if (t.is_two_block()) {
        if (l1.empty()) throw ParseError("--lambda1 required for two-block types");
        return Polarization::from_lambda1(t, Rational::parse(l1));
    }
    if (l1.empty() || l2.empty())
        throw ParseError("--lambda1 and --lambda2 required for three-block types");
    return Polarization::from_lambda12(t, Rational::parse(l1), Rational::parse(l2));
}

int cmd_chambers(const GlobalOpts& g, const MorphismType& t) {
    json input = type_to_json(t);
    DegeneracyInfo deg = is_degenerate(t);
    if (deg.degenerate)
        return emit(g, "chambers", input,
                    json{{"degenerate", true}, {"reason", deg.reason}}, 2);

    json result{{"degenerate", false}};
    if (t.is_two_block()) {
        json cands = json::array();
        for (const auto& c : irregular_candidates(t)) cands.push_back(rational_to_json(c));
        json chs = json::array();
        for (const auto& ch : chambers(t)) {
            json entry{{"lo", rational_to_json(ch.lo)},
                       {"hi", rational_to_json(ch.hi)},
                       {"midpoint", rational_to_json(ch.midpoint())}};
            try {
                Polarization p = Polarization::from_lambda1(t, ch.midpoint());
                entry["nonempty"] = nonempty_to_json(nonempty_conditions(t, p));
            } catch (const UnsupportedShape&) {
                entry["nonempty"] = nullptr;
            }
            chs.push_back(entry);
        }
        result["irregular_candidates"] = cands;
        result["chambers"] = chs;
    } else {
        IrregularLines lines = irregular_lines(t);
        json vert = json::array(), slant = json::array();
        for (const auto& v : lines.vertical)
            vert.push_back(json{{"kappa", v.kappa}, {"p", v.p}});
        for (const auto& s : lines.slanted)
            slant.push_back(json{{"kappa", s.kappa}, {"p", s.p}});
        result["vertical_lines"] = vert;   // lambda1 = kappa/(p*n)
        result["slanted_lines"] = slant;   // lambda2 = kappa/n - p*lambda1
    }
    return emit(g, "chambers", input, result, 0);
}

int cmd_check(const GlobalOpts& g, const std::string& morphism_path,
              const std::string& l1, const std::string& l2,
              std::vector<uint32_t> primes) {
    Morphism<RationalField> mq = load_morphism(morphism_path);
    Polarization p = pol_from_flags(mq.type, l1, l2);
    if (primes.empty()) primes = {2, 3};

    json per_prime = json::array();
    std::vector<Stability> statuses;
    for (uint32_t pr : primes) {
        PrimeField f(pr);
        Morphism<PrimeField> mp = reduce_mod(mq, f);
        StabilityVerdict v = decide_semistable(mp, p, g.budget);
        BlockRouteVerdict b = block_route_status(mp, p, g.budget);
        json entry{{"king", verdict_to_json(v)}, {"block_form", block_route_to_json(b)}};
        entry["agree"] = v.status == b.status;
        per_prime.push_back(entry);
        statuses.push_back(v.status);
        if (v.status != b.status) {
            json input{{"morphism", morphism_path},
                       {"polarization", polarization_to_json(p)}};
            return emit(g, "check", input,
                        json{{"error", "internal consistency failure: the exhaustive "
                                       "check and the block-form characterization "
                                       "disagree"},
                             {"per_prime", per_prime}},
                        3);
        }
    }
    bool agree_across = true;
    for (const auto& s : statuses) agree_across = agree_across && s == statuses[0];
    json input{{"morphism", morphism_path}, {"polarization", polarization_to_json(p)}};
    json result{{"per_prime", per_prime}, {"primes", primes},
                {"primes_agree", agree_across}};
    int code = statuses[0] == Stability::Unstable ? 1 : 0;
    return emit(g, "check", input, result, code);
}

int cmd_embed(const GlobalOpts& g, const std::string& morphism_path,
              const std::string& l1, const std::string& l2, uint32_t prime) {
    Morphism<RationalField> mq = load_morphism(morphism_path);
    Polarization p = pol_from_flags(mq.type, l1, l2);
    TildePolarization tp = TildePolarization::from(mq.type, p);
    json input{{"morphism", morphism_path}, {"polarization", polarization_to_json(p)},
               {"prime", prime}};

    json gates = json::array();
    bool gates_ok = tp.alpha2_positive();
    gates.push_back(json{{"description", "alpha2 > 0"},
                         {"alpha2", rational_to_json(tp.alphas[1])},
                         {"pass", tp.alpha2_positive()}});
    if (mq.type.is_three_block()) {
        gates.push_back(json{{"description", "alpha3 > 0"},
                             {"alpha3", rational_to_json(tp.alphas[2])},
                             {"pass", tp.alpha3_positive()}});
        bool lp = p.lambdas[0] * Rational(Integer(mq.type.p1())) < Rational(1);
        gates.push_back(json{{"description", "lambda1 * p1 < 1"}, {"pass", lp}});
        gates_ok = gates_ok && tp.alpha3_positive() && lp;
    }
    if (!gates_ok)
        return emit(g, "embed", input, json{{"gates", gates}, {"error", "gate failure"}}, 2);

    PrimeField f(prime);
    Morphism<PrimeField> mp = reduce_mod(mq, f);
    EmbeddedPoint<PrimeField> e = build_embedding(mp);
    ReducedReport red = check_reduced(e, tp, p, g.budget);

    json result{{"gates", gates},
                {"embedded", embedded_to_json(e)},
                {"reduced", reduced_report_to_json(red)}};
    if (mq.type.p1() <= 6) {
        TildeVerdict tv = tilde_decide(e, tp, g.budget);
        result["exhaustive"] = tilde_verdict_to_json(tv);
        result["reduced_matches_exhaustive"] = tv.status == red.status;
    } else {
        result["exhaustive"] = nullptr;
    }
    if (red.status == Stability::Stable)
        result["implication"] =
            "embedded point is stable: the stable locus admits a geometric quotient "
            "(smooth and quasiprojective) at this polarization";
    return emit(g, "embed", input, result, red.status == Stability::Unstable ? 1 : 0);
}

int cmd_constants(const GlobalOpts& g, const std::string& shape, int d, uint32_t prime,
                  int m2, int d2, int adeg, int r, int qi, int qj) {
    PrimeField f(prime);
    if (shape == "s7") {
        S7Constants s = s7_constants(d, f, g.budget, g.jobs);
        json input{{"shape", "s7"}, {"d", d}, {"prime", prime}};
        return emit(g, "constants", input, s7_constants_to_json(s), 0);
    }
    ConstantQuery q;
    q.shape = ConstantShape{m2, d2, adeg, r};
    q.i = qi;
    if (qj >= 0) q.j = qj;
    q.p = prime;
    ConstantValue v = compute_k(q, g.budget, g.jobs);
    json input{{"shape", "custom"}, {"m2", m2}, {"d2", d2}, {"a_deg", adeg},
               {"r", r}, {"i", qi}, {"j", qj >= 0 ? json(qj) : json(nullptr)},
               {"prime", prime}};
    json result = constant_value_to_json(v);
    result["constant"] = qj >= 0 ? ConstantsProvider::key_ij(qi, qj)
                                 : ConstantsProvider::key_i(qi);
    result["d"] = d2;
    return emit(g, "constants", input, result, 0);
}

int certificate_exit(const CertificateReport& rep) {
    if (rep.overall == CertificateReport::Overall::Inapplicable) return 2;
    return rep.certified() ? 0 : 1;
}

// accepts a flat {"k(i,j)": value-or-object} map or a `constants` report
// envelope
ConstantsProvider constants_from_json(json j) {
    if (j.contains("result") && j.at("result").contains("values"))
        j = j.at("result").at("values");
    if (j.contains("values")) j = j.at("values");
    ConstantsProvider provider;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_number_integer())
            provider.set(it.key(), it.value().get<long long>(), "assumed");
        else
            provider.set(it.key(), it.value().at("value").get<long long>(),
                         it.value().value("status", "assumed"));
    }
    return provider;
}

// JSON-driven certification: {"claim": ..., "type": ..., "polarization": ...,
// "constants": {...}?}
int cmd_certify_input(const GlobalOpts& g, const std::string& path) {
    json in = load_json(path);
    std::string claim = in.at("claim").get<std::string>();
    MorphismType t = type_from_json(in.at("type"));
    Polarization p = polarization_from_json(in.at("polarization"), t);
    CertificateReport rep;
    if (claim == "3.3" || claim == "33") {
        ConstantsProvider provider;
        if (in.contains("constants")) provider = constants_from_json(in.at("constants"));
        rep = certify_33(t, p, provider);
    } else if (claim == "4.2" || claim == "4.3") {
        rep = certify_42_43(t, p);
    } else if (claim == "5.1") {
        rep = certify_51(t, p);
    } else if (claim == "6.1") {
        rep = certify_61(t, p);
    } else if (claim == "7.5") {
        rep = certify_75(t, p);
    } else if (claim == "8.7") {
        rep = certify_87(t, p);
    } else {
        throw ParseError("unknown claim '" + claim + "'");
    }
    json input{{"claim", claim}, {"type", type_to_json(t)},
               {"polarization", polarization_to_json(p)}};
    return emit(g, "certify", input, certificate_to_json(rep), certificate_exit(rep));
}

int cmd_certify(const GlobalOpts& g, const std::string& claim, int r, int d1, int d2,
                int d3, int m, int n, int d, const std::string& l1,
                const std::string& l2, const std::string& constants_path,
                bool compute_constants, uint32_t prime) {
    MorphismType t;
    Polarization p;
    CertificateReport rep;

    if (claim == "33" || claim == "3.3") {
        throw ParseError("use the certify33 subcommand for the general two-block criterion");
    } else if (claim == "4.2" || claim == "4.3") {
        t = type_from_flags(r, n, {d1, d2}, {m, 2});
        p = pol_from_flags(t, l1, l2);
        rep = certify_42_43(t, p);
    } else if (claim == "5.1") {
        t = type_from_flags(2, n, {d + 1, d}, {1, 3});
        p = pol_from_flags(t, l1, l2);
        rep = certify_51(t, p);
    } else if (claim == "6.1") {
        t = type_from_flags(2, n, {d + 1, 1}, {m, 3});
        p = pol_from_flags(t, l1, l2);
        rep = certify_61(t, p);
    } else if (claim == "7.5") {
        t = type_from_flags(2, n, {d + 2, d}, {1, 3});
        if (l2.empty()) throw ParseError("--lambda2 required for claim 7.5");
        Rational lam2 = Rational::parse(l2);
        p = Polarization::from_lambda1(t, Rational(1) - Rational(3) * lam2);
        rep = certify_75(t, p);
    } else if (claim == "8.7") {
        t = type_from_flags(r, n, {d1, d2, d3}, {m, 1, 1});
        p = pol_from_flags(t, l1, l2);
        rep = certify_87(t, p);
    } else {
        throw ParseError("unknown claim '" + claim + "'");
    }

    (void)constants_path;
    (void)compute_constants;
    (void)prime;
    json input{{"claim", claim}, {"type", type_to_json(t)},
               {"polarization", polarization_to_json(p)}};
    return emit(g, "certify", input, certificate_to_json(rep), certificate_exit(rep));
}

int cmd_construct(const GlobalOpts& g, int r, int d1, int d2, int n, int kappa) {
    MorphismType t = type_from_flags(r, n, {d1, d2}, {1, 1});
    std::optional<int> k;
    if (kappa >= 0) k = kappa;
    Morphism<RationalField> m = construct_semistable(t, k);
    json input{{"r", r}, {"d1", d1}, {"d2", d2}, {"n", n},
               {"kappa", kappa >= 0 ? json(kappa) : json(nullptr)}};
    return emit(g, "construct", input, morphism_to_json(m), 0);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact semistability and quotient-existence toolkit for morphisms "
                 "of twisted structure sheaves on projective space"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "random seed recorded in every output");
    app.add_option("--budget", g.budget, "subspace-enumeration cap per quantifier");
    app.add_option("--jobs", g.jobs, "worker threads for the finite-field sweeps")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "write the JSON report here instead of stdout");

    // chambers
    auto* chambers_cmd = app.add_subcommand("chambers", "irregular candidates and chambers");
    std::string type_path;
    int c_r = 2, c_n = 3;
    std::vector<int> c_degrees, c_mults;
    chambers_cmd->add_option("--type", type_path, "morphism type JSON file");
    chambers_cmd->add_option("--r", c_r);
    chambers_cmd->add_option("--n", c_n);
    chambers_cmd->add_option("--degrees", c_degrees)->delimiter(',');
    chambers_cmd->add_option("--mults", c_mults)->delimiter(',');

    // check
    auto* check_cmd = app.add_subcommand("check", "King semistability over F_p");
    std::string k_morphism, k_l1, k_l2;
    std::vector<uint32_t> k_primes;
    check_cmd->add_option("--morphism", k_morphism)->required();
    check_cmd->add_option("--lambda1", k_l1);
    check_cmd->add_option("--lambda2", k_l2);
    check_cmd->add_option("--prime", k_primes, "primes to check (default 2 3)");

    // embed
    auto* embed_cmd = app.add_subcommand("embed", "reductive-side stability of the embedded point");
    std::string e_morphism, e_l1, e_l2;
    uint32_t e_prime = 2;
    embed_cmd->add_option("--morphism", e_morphism)->required();
    embed_cmd->add_option("--lambda1", e_l1);
    embed_cmd->add_option("--lambda2", e_l2);
    embed_cmd->add_option("--prime", e_prime);

    // constants
    auto* const_cmd = app.add_subcommand("constants", "linear-algebra constants by finite-field search");
    std::string shape = "s7";
    int cd = 1, cm2 = 3, cd2 = 1, cadeg = 2, cr = 2, cqi = 1, cqj = -1;
    uint32_t c_prime = 2;
    const_cmd->add_option("--shape", shape, "s7 or custom");
    const_cmd->add_option("--d", cd);
    const_cmd->add_option("--prime", c_prime);
    const_cmd->add_option("--m2", cm2);
    const_cmd->add_option("--d2", cd2);
    const_cmd->add_option("--adeg", cadeg);
    const_cmd->add_option("--r", cr);
    const_cmd->add_option("--i", cqi);
    const_cmd->add_option("--j", cqj);

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "quotient-existence certificates");
    std::string claim, ce_l1, ce_l2, constants_path;
    int ce_r = 2, ce_d1 = 0, ce_d2 = 0, ce_d3 = 0, ce_m = 1, ce_n = 1, ce_d = 1;
    bool compute_constants = false;
    uint32_t ce_prime = 2;
    std::string cert_input;
    cert_cmd->add_option("--input", cert_input,
                         "JSON file {claim, type, polarization, constants?}");
    cert_cmd->add_option("--claim", claim);
    cert_cmd->add_option("--r", ce_r);
    cert_cmd->add_option("--d1", ce_d1);
    cert_cmd->add_option("--d2", ce_d2);
    cert_cmd->add_option("--d3", ce_d3);
    cert_cmd->add_option("--m", ce_m);
    cert_cmd->add_option("--n", ce_n);
    cert_cmd->add_option("--d", ce_d);
    cert_cmd->add_option("--lambda1", ce_l1);
    cert_cmd->add_option("--lambda2", ce_l2);
    cert_cmd->add_option("--constants", constants_path, "k-value JSON for the (2,1) criterion");
    cert_cmd->add_flag("--compute-constants", compute_constants);
    cert_cmd->add_option("--prime", ce_prime);

    // certify33 (needs its own multiplicity flags)
    auto* c33_cmd = app.add_subcommand("certify33", "general two-block criterion");
    std::string c33_l1, c33_constants;
    int c33_r = 2, c33_d1 = 3, c33_d2 = 1, c33_m1 = 1, c33_m2 = 3, c33_n = 1, c33_d = -1;
    bool c33_compute = false;
    uint32_t c33_prime = 2;
    c33_cmd->add_option("--r", c33_r);
    c33_cmd->add_option("--d1", c33_d1);
    c33_cmd->add_option("--d2", c33_d2);
    c33_cmd->add_option("--m1", c33_m1);
    c33_cmd->add_option("--m2", c33_m2);
    c33_cmd->add_option("--n", c33_n);
    c33_cmd->add_option("--lambda1", c33_l1)->required();
    c33_cmd->add_option("--constants", c33_constants);
    c33_cmd->add_flag("--compute-constants", c33_compute,
                      "run the exhaustive sweep (s7 shape, small d only)");
    c33_cmd->add_option("--prime", c33_prime);
    c33_cmd->add_option("--d", c33_d, "shorthand for the (d+2,1)+(d,3) shape");

    // construct
    auto* cons_cmd = app.add_subcommand("construct", "explicit semistable morphism");
    int n_r = 2, n_d1 = 3, n_d2 = 2, n_n = 3, n_kappa = -1;
    cons_cmd->add_option("--r", n_r);
    cons_cmd->add_option("--d1", n_d1);
    cons_cmd->add_option("--d2", n_d2);
    cons_cmd->add_option("--n", n_n);
    cons_cmd->add_option("--kappa", n_kappa, "properly-semistable variant");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (chambers_cmd->parsed()) {
            MorphismType t = type_path.empty()
                                 ? type_from_flags(c_r, c_n, c_degrees, c_mults)
                                 : type_from_json(load_json(type_path));
            return cmd_chambers(g, t);
        }
        if (check_cmd->parsed()) return cmd_check(g, k_morphism, k_l1, k_l2, k_primes);
        if (embed_cmd->parsed()) return cmd_embed(g, e_morphism, e_l1, e_l2, e_prime);
        if (const_cmd->parsed())
            return cmd_constants(g, shape, cd, c_prime, cm2, cd2, cadeg, cr, cqi, cqj);
        if (cert_cmd->parsed()) {
            if (!cert_input.empty()) return cmd_certify_input(g, cert_input);
            if (claim.empty()) throw ParseError("--claim (or --input) is required");
            return cmd_certify(g, claim, ce_r, ce_d1, ce_d2, ce_d3, ce_m, ce_n, ce_d,
                               ce_l1, ce_l2, constants_path, compute_constants, ce_prime);
        }
        if (c33_cmd->parsed()) {
            if (c33_d >= 0) {
                c33_d1 = c33_d + 2;
                c33_d2 = c33_d;
                c33_m1 = 1;
                c33_m2 = 3;
            }
            MorphismType t = type_from_flags(c33_r, c33_n, {c33_d1, c33_d2},
                                             {c33_m1, c33_m2});
            Polarization p = Polarization::from_lambda1(t, Rational::parse(c33_l1));
            ConstantsProvider provider;
            if (!c33_constants.empty()) provider = constants_from_json(load_json(c33_constants));
            if (c33_compute) {
                if (!(c33_r == 2 && c33_m1 == 1 && c33_m2 == 3 && c33_d1 == c33_d2 + 2))
                    throw UnsupportedShape(
                        "--compute-constants supports the (d+2,1)+(d,3) shape");
                S7Constants s = s7_constants(c33_d2, PrimeField(c33_prime), g.budget, g.jobs);
                for (const auto& [key, v] : s.values)
                    provider.set(key, v.value, v.exhaustive ? "exhaustive" : "lower-bound");
            }
            CertificateReport rep = certify_33(t, p, provider);
            json input{{"claim", "3.3"}, {"type", type_to_json(t)},
                       {"polarization", polarization_to_json(p)}};
            return emit(g, "certify33", input, certificate_to_json(rep),
                        certificate_exit(rep));
        }
        if (cons_cmd->parsed()) return cmd_construct(g, n_r, n_d1, n_d2, n_n, n_kappa);
    } catch (const AllIrregular& e) {
        std::cout << json{{"error", e.what()}, {"kind", "degenerate"}}.dump(2) << "\n";
        return 2;
    } catch (const UnsupportedShape& e) {
        std::cout << json{{"error", e.what()}, {"kind", "unsupported-shape"}}.dump(2) << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cout << json{{"error", e.what()}, {"kind", "budget"}}.dump(2) << "\n";
        return 2;
    } catch (const MissingConstant& e) {
        std::cout << json{{"error", e.what()}, {"kind", "missing-constant"}}.dump(2) << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
