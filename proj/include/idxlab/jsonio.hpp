#ifndef IDXLAB_JSONIO_HPP
#define IDXLAB_JSONIO_HPP

// Report serialization.  Every object carries the schema tag and a kind;
// key order is fixed by construction order, so serialized reports are
// byte-stable for fixed inputs and seeds.

#include <string>

#include <json.hpp>

#include "census.hpp"
#include "fermat.hpp"
#include "invariant.hpp"
#include "local.hpp"
#include "model.hpp"
#include "parse.hpp"
#include "resolution.hpp"

namespace idxlab {

using ojson = nlohmann::ordered_json;

inline std::string modulus_str(const Field& f) {
    if (f.is_prime_field()) return "x";
    const auto& m = f.modulus();
    std::string s = "x^" + std::to_string(f.degree());
    for (int i = static_cast<int>(f.degree()) - 1; i >= 0; --i) {
        if (!m[static_cast<std::size_t>(i)]) continue;
        s += "+";
        std::uint32_t c = m[static_cast<std::size_t>(i)];
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

inline ojson field_json(const FieldPtr& f) {
    ojson j;
    j["p"] = f->characteristic();
    j["k"] = f->degree();
    j["q"] = f->size();
    j["name"] = f->name();
    j["modulus"] = modulus_str(*f);
    return j;
}

inline ojson report_header(const char* kind) {
    ojson j;
    j["schema"] = kSchemaName;
    j["kind"] = kind;
    return j;
}

inline ojson hs_json(const HsTable& t) {
    ojson j = report_header("hs");
    ojson rows = ojson::array();
    for (const auto& r : t.rows) rows.push_back(ojson::array({r.n, r.length}));
    j["rows"] = rows;
    j["dimension"] = t.dimension;
    j["multiplicity"] = t.multiplicity;
    j["truncation_used"] = t.truncation_used;
    j["stabilized"] = t.stabilized;
    return j;
}

inline ojson gamma_json(const GammaReport& g) {
    ojson j = report_header("gamma");
    j["dimension"] = g.dimension;
    j["e_of_m"] = g.e_of_m;
    ojson samples = ojson::array();
    for (const auto& s : g.samples) {
        ojson sj;
        sj["kind"] = s.kind;
        sj["gens"] = s.gens;
        sj["e"] = s.e;
        samples.push_back(sj);
    }
    j["samples"] = samples;
    j["gcd"] = g.running_gcd;
    j["seed"] = g.seed;
    j["trials_requested"] = g.trials_requested;
    j["trials_done"] = g.trials_done;
    return j;
}

inline ojson scan_json(int degree_bound, const std::map<long long, Poly<Fq>>& values) {
    ojson j = report_header("scan");
    j["degree_bound"] = degree_bound;
    ojson vals = ojson::array();
    for (const auto& [e, f] : values) {
        ojson vj;
        vj["e"] = e;
        vj["witness"] = f.str();
        vals.push_back(vj);
    }
    j["values"] = vals;
    return j;
}

inline ojson census_json(const Census& c) {
    ojson j = report_header("census");
    j["max_degree"] = c.max_degree;
    j["regular_only"] = c.regular_only;
    j["n_d"] = c.n_d;
    j["a_d"] = c.a_d;
    j["degree_set"] = c.degree_set;
    j["gcd"] = c.gcd_estimate;
    j["min_degree"] = c.min_degree;
    return j;
}

inline ojson cone_json(const ConeReport& c) {
    ojson j = report_header("cone");
    j["census_degree"] = c.census_degree;
    j["delta"] = c.delta;
    j["a_d"] = c.a_d;
    j["cone_dimension"] = c.cone_dimension;
    j["vertex_multiplicity"] = c.vertex_multiplicity;
    j["gamma"] = gamma_json(c.gamma);
    j["equality_witnessed"] = c.equality_witnessed;
    j["delta_divides_all"] = c.delta_divides_all;
    if (c.expected_degree) {
        j["expected_degree"] = *c.expected_degree;
        j["degree_matches"] = c.degree_matches;
    }
    return j;
}

inline ojson resolution_json(const ResolutionReport& r) {
    ojson j = report_header("resolution");
    j["reduced"] = r.reduced.str();
    j["blowup_count"] = r.blowup_count;
    ojson places = ojson::array();
    for (const auto& p : r.places) {
        ojson pj;
        pj["residue_degree"] = p.residue_degree;
        pj["path"] = p.path;
        places.push_back(pj);
    }
    j["places"] = places;
    j["n"] = r.n_value;
    return j;
}

inline ojson fiber_json(const FiberReport& f) {
    ojson j = report_header("model_fiber");
    j["census_degree"] = f.census_degree;
    ojson comps = ojson::array();
    for (const auto& c : f.components) {
        ojson cj;
        cj["g"] = c.g;
        cj["r"] = c.r;
        cj["delta_reg"] = c.delta_reg;
        cj["a_d"] = c.a_d;
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["gcd_bound"] = f.gcd_bound;
    j["warnings"] = f.warnings;
    return j;
}

inline ojson model_point_json(const ModelPointReport& r) {
    ojson j = report_header("model_point");
    j["point_degree"] = r.point_degree;
    j["regular"] = r.regular;
    j["components_through"] = r.components_through;
    j["component_mults"] = r.component_mults;
    j["e_fiber"] = r.e_fiber;
    j["lift_bound"] = r.lift_bound;
    return j;
}

inline ojson lift_json(const LiftReport& r) {
    ojson j = report_header("lift");
    j["point_degree"] = r.point_degree;
    j["component"] = r.component;
    j["component_r"] = r.component_r;
    j["computed"] = r.computed;
    j["predicted"] = r.predicted;
    j["matches"] = r.matches;
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

inline ojson fermat_json(const FermatReport& r) {
    ojson j = report_header("fermat");
    j["p"] = r.p;
    j["b"] = r.b;
    j["quotient"] = r.quotient.str();
    j["quotient_degree"] = r.quotient_degree;
    j["remainder_zero"] = r.remainder_zero;
    return j;
}

} // namespace idxlab

#endif
