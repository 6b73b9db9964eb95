// idx — exact-arithmetic invariants of varieties over finite fields.
//
// Every subcommand reads JSON descriptors (schema "idxlab/1") and writes a
// JSON report to stdout or --out.  Exit codes: 0 success, 1 at least one
// suite check failed, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <idxlab/idxlab.hpp>

namespace {

using namespace idxlab;

nlohmann::json load_json(const std::string& path) {
    try {
        if (path == "-") return nlohmann::json::parse(std::cin);
        std::ifstream in(path);
        if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

void emit(const ojson& j, const std::string& out) {
    std::string text = j.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out);
    if (!os) fail(errc::parse_error, "cannot open '" + out + "' for writing");
    os << text;
}

FieldPtr coordinate_field(const FieldPtr& base, int ext) {
    if (ext <= 1) return base;
    return make_extension(make_prime_field(base->characteristic()),
                          base->degree() * static_cast<unsigned>(ext));
}

std::vector<Fq> parse_coords(const std::string& at, const FieldPtr& F) {
    std::vector<Fq> pt;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = at.find(',', start);
        pt.push_back(parse_element(
            comma == std::string::npos ? at.substr(start) : at.substr(start, comma - start), F));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return pt;
}

std::vector<std::vector<Poly<Fq>>> curated_ideals(const nlohmann::json& j,
                                                  const std::vector<std::string>& vars,
                                                  const FieldPtr& F) {
    std::vector<std::vector<Poly<Fq>>> out;
    if (!j.contains("curated")) return out;
    const auto& arr = j.at("curated");
    if (!arr.is_array()) fail(errc::schema_error, "'curated' must be an array of ideals");
    for (const auto& ideal : arr) {
        if (!ideal.is_array()) fail(errc::schema_error, "each curated ideal must be an array");
        std::vector<Poly<Fq>> gens;
        for (const auto& g : ideal) {
            if (!g.is_string()) fail(errc::schema_error, "curated generators must be strings");
            gens.push_back(parse_poly(g.get<std::string>(), vars, F));
        }
        out.push_back(std::move(gens));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of varieties over finite fields"};
    app.require_subcommand(1);

    std::string in_path, out_path, at, cut;
    std::uint64_t seed = 1;
    int trials = 16, truncation = kDefaultCutoffMax, hs_max = kDefaultHsMax;
    int max_degree = 0, degree_bound = 1, ext = 1, budget = kDefaultBlowupBudget;
    int root_choice = 0, fermat_p = 0, field_p = 0, field_k = 1, series_terms = 12;
    long long expected = -1;
    bool regular = false, table = false, inject = false;
    std::vector<std::string> q_gens;
    int exit_code = 0;

    auto add_out = [&](CLI::App* c) { c->add_option("--out", out_path, "write the report here"); };

    CLI::App* c_field = app.add_subcommand("field", "describe a finite field");
    c_field->add_option("--p", field_p, "characteristic")->required();
    c_field->add_option("--k", field_k, "extension degree");
    add_out(c_field);
    c_field->callback([&] {
        FieldPtr F = field_k == 1 ? make_prime_field(static_cast<unsigned>(field_p))
                                  : make_extension(make_prime_field(static_cast<unsigned>(field_p)),
                                                   static_cast<unsigned>(field_k));
        ojson r = report_header("field");
        r["field"] = field_json(F);
        r["generator"] = F->generator().str();
        ojson els = ojson::array();
        for (std::uint32_t i = 0; i < F->size() && i < 16; ++i) els.push_back(F->element(i).str());
        r["elements"] = els;
        emit(r, out_path);
    });

    CLI::App* c_hs = app.add_subcommand("hs", "Hilbert-Samuel table of a local ring");
    c_hs->add_option("descriptor", in_path, "local ring descriptor (JSON)")->required();
    c_hs->add_option("--q", q_gens, "generators of the primary ideal (default: the maximal ideal)");
    c_hs->add_option("--hs-max", hs_max, "largest power of the ideal to take");
    c_hs->add_option("--truncation", truncation, "largest quotient truncation");
    add_out(c_hs);
    c_hs->callback([&] {
        LocalRingSpec s = parse_local(load_json(in_path));
        std::vector<Poly<Fq>> q = maximal_ideal_gens(s.field, s.vars);
        if (!q_gens.empty()) {
            q.clear();
            for (const auto& src : q_gens) q.push_back(parse_poly(src, s.vars, s.field));
        }
        emit(hs_json(hs_table(s, q, hs_max, truncation)), out_path);
    });

    CLI::App* c_mult = app.add_subcommand("mult", "multiplicity of a variety at a point");
    c_mult->add_option("descriptor", in_path, "variety descriptor (JSON)")->required();
    c_mult->add_option("--at", at, "point coordinates, comma separated (default: the origin)");
    c_mult->add_option("--ext", ext, "coordinate field as an extension of the base");
    c_mult->add_option("--hs-max", hs_max, "largest power of the maximal ideal");
    c_mult->add_option("--truncation", truncation, "largest quotient truncation");
    add_out(c_mult);
    c_mult->callback([&] {
        Variety v = parse_variety(load_json(in_path));
        FieldPtr E = coordinate_field(v.field, ext);
        std::vector<Fq> pt;
        if (at.empty())
            pt.assign(v.vars.size(), E->zero());
        else
            pt = parse_coords(at, E);
        long long e = multiplicity_at_point(v, pt, hs_max, truncation);
        ojson r = report_header("mult");
        ojson coords = ojson::array();
        for (const auto& c : pt) coords.push_back(c.str());
        r["point"] = coords;
        r["multiplicity"] = e;
        emit(r, out_path);
    });

    CLI::App* c_gamma = app.add_subcommand("gamma", "gcd of multiplicities of parameter ideals");
    c_gamma->add_option("descriptor", in_path, "local ring descriptor (JSON)")->required();
    c_gamma->add_option("--trials", trials, "number of sampled parameter ideals");
    c_gamma->add_option("--seed", seed, "sampling seed");
    c_gamma->add_option("--degree-bound", degree_bound, "degree bound for sampled generators")
        ->default_val(3);
    c_gamma->add_option("--hs-max", hs_max, "largest power of the ideal");
    c_gamma->add_option("--truncation", truncation, "largest quotient truncation");
    add_out(c_gamma);
    c_gamma->callback([&] {
        nlohmann::json j = load_json(in_path);
        LocalRingSpec s = parse_local(j);
        auto curated = curated_ideals(j, s.vars, s.field);
        emit(gamma_json(gamma_estimate(s, curated, trials, seed, degree_bound, hs_max, truncation)),
             out_path);
    });

    CLI::App* c_scan = app.add_subcommand("scan", "colengths of all small principal ideals");
    c_scan->add_option("descriptor", in_path, "local ring descriptor (JSON)")->required();
    c_scan->add_option("--degree-bound", degree_bound, "scan generators up to this degree")
        ->default_val(1);
    c_scan->add_option("--truncation", truncation, "largest quotient truncation");
    add_out(c_scan);
    c_scan->callback([&] {
        LocalRingSpec s = parse_local(load_json(in_path));
        emit(scan_json(degree_bound, principal_multiplicity_scan(s, degree_bound, truncation)),
             out_path);
    });

    CLI::App* c_census = app.add_subcommand("census", "closed points by degree");
    c_census->add_option("descriptor", in_path, "variety descriptor (JSON)")->required();
    c_census->add_option("--max-degree", max_degree, "census depth (default: as large as fits)");
    c_census->add_flag("--regular", regular, "keep only regular points");
    add_out(c_census);
    c_census->callback([&] {
        Variety v = parse_variety(load_json(in_path));
        int D = max_degree > 0 ? max_degree : default_census_degree(v);
        emit(census_json(regular ? regular_filter(v, D) : closed_point_census(v, D)), out_path);
    });

    CLI::App* c_index = app.add_subcommand("index", "gcd of closed point degrees");
    c_index->add_option("descriptor", in_path, "variety descriptor (JSON)")->required();
    c_index->add_option("--max-degree", max_degree, "census depth (default: as large as fits)");
    add_out(c_index);
    c_index->callback([&] {
        Variety v = parse_variety(load_json(in_path));
        int D = max_degree > 0 ? max_degree : default_census_degree(v);
        ojson r = report_header("index");
        r["max_degree"] = D;
        r["delta"] = index_estimate(v, D);
        emit(r, out_path);
    });

    CLI::App* c_cone = app.add_subcommand("cone", "index of a projective variety vs its cone vertex");
    c_cone->add_option("descriptor", in_path, "projective variety descriptor (JSON)")->required();
    c_cone->add_option("--max-degree", max_degree, "census depth (default: as large as fits)");
    c_cone->add_option("--trials", trials, "number of sampled parameter ideals at the vertex");
    c_cone->add_option("--seed", seed, "sampling seed");
    c_cone->add_option("--degree-bound", degree_bound, "degree bound for sampled generators")
        ->default_val(1);
    c_cone->add_option("--expected-degree", expected, "declared degree of the variety");
    add_out(c_cone);
    c_cone->callback([&] {
        nlohmann::json j = load_json(in_path);
        Variety v = parse_variety(j);
        auto curated = curated_ideals(j, v.vars, v.field);
        int D = max_degree > 0 ? max_degree : default_census_degree(v);
        std::optional<long long> exp;
        if (expected >= 0) exp = expected;
        emit(cone_json(cone_theorem_check(v, D, trials, curated, seed, exp, degree_bound)),
             out_path);
    });

    CLI::App* c_resolve = app.add_subcommand("resolve", "resolve a plane curve germ");
    c_resolve->add_option("descriptor", in_path, "germ descriptor (JSON)")->required();
    c_resolve->add_option("--budget", budget, "largest number of transforms");
    c_resolve->add_option("--root-choice", root_choice, "which conjugate center to follow");
    add_out(c_resolve);
    c_resolve->callback([&] {
        auto [F, germ] = parse_germ(load_json(in_path));
        emit(resolution_json(resolve_germ(F, germ, budget, root_choice)), out_path);
    });

    CLI::App* c_model = app.add_subcommand("model", "special fiber of a model over a power series ring");
    c_model->add_option("descriptor", in_path, "model descriptor (JSON)")->required();
    c_model->add_option("--max-degree", max_degree, "fiber census depth");
    c_model->add_option("--at", at, "also report the fiber at this point");
    c_model->add_option("--ext", ext, "coordinate field as an extension of the base");
    add_out(c_model);
    c_model->callback([&] {
        Model m = parse_model(load_json(in_path));
        int D = max_degree;
        if (D <= 0) {
            for (const auto& c : m.components) {
                Variety cv{m.field, false, m.fiber_vars, {c.g}, 1};
                int d = default_census_degree(cv);
                D = D == 0 ? d : std::min(D, d);
            }
        }
        ojson r = fiber_json(model_fiber_report(m, D));
        if (!at.empty()) {
            std::vector<Fq> pt = parse_coords(at, coordinate_field(m.field, ext));
            r["point"] = model_point_json(model_point_report(m, pt));
        }
        emit(r, out_path);
    });

    CLI::App* c_lift = app.add_subcommand("lift", "degree of the closed point a section lifts to");
    c_lift->add_option("descriptor", in_path, "model descriptor (JSON)")->required();
    c_lift->add_option("--at", at, "fiber point coordinates, comma separated")->required();
    c_lift->add_option("--ext", ext, "coordinate field as an extension of the base");
    c_lift->add_option("--cut", cut, "transversal cut through the point, over the base field")
        ->required();
    c_lift->add_option("--truncation", series_terms, "series terms in the witness");
    add_out(c_lift);
    c_lift->callback([&] {
        Model m = parse_model(load_json(in_path));
        std::vector<Fq> pt = parse_coords(at, coordinate_field(m.field, ext));
        Poly<Fq> g = parse_poly(cut, m.fiber_vars, m.field);
        emit(lift_json(lift_degree(m, pt, g, series_terms)), out_path);
    });

    CLI::App* c_fermat = app.add_subcommand("fermat", "split x^p+(1-x)^p-1 into its forced factors");
    c_fermat->add_option("--p", fermat_p, "odd prime at least 5")->required();
    add_out(c_fermat);
    c_fermat->callback([&] { emit(fermat_json(fermat_split(fermat_p)), out_path); });

    CLI::App* c_suite = app.add_subcommand("suite", "run the built-in verification corpus");
    c_suite->add_option("--seed", seed, "sampling seed");
    c_suite->add_option("--trials", trials, "sampled parameter ideals per check (0 skips sampling)");
    c_suite->add_option("--truncation", truncation, "largest quotient truncation");
    c_suite->add_option("--hs-max", hs_max, "largest power of a primary ideal");
    c_suite->add_option("--max-degree", max_degree, "reserved; corpus depths are fixed");
    c_suite->add_flag("--table", table, "human-readable table instead of JSON");
    c_suite->add_flag("--inject-fault", inject, "flip one check to prove failures surface")
        ->group("");
    add_out(c_suite);
    c_suite->callback([&] {
        RunConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.truncation = truncation;
        cfg.hs_max = hs_max;
        cfg.max_degree = max_degree;
        cfg.output = table ? "table" : "json";
        cfg.fault_injection = inject;
        SuiteReport rep = run_suite(cfg);
        if (table) {
            std::string text = suite_table(rep);
            if (out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream os(out_path);
                if (!os) fail(errc::parse_error, "cannot open '" + out_path + "' for writing");
                os << text;
            }
        } else {
            emit(suite_json(rep), out_path);
        }
        if (rep.failed > 0) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error [json]: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
