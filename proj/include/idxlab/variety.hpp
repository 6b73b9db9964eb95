#ifndef IDXLAB_VARIETY_HPP
#define IDXLAB_VARIETY_HPP

// Descriptors for affine and projective varieties over F_q, plus base change
// along a field extension.

#include <optional>
#include <string>
#include <vector>

#include "fields.hpp"
#include "poly.hpp"

namespace idxlab {

struct Variety {
    FieldPtr field;
    bool projective = false;
    std::vector<std::string> vars;
    std::vector<Poly<Fq>> ideal;
    std::optional<int> declared_codim;
};

inline void validate_variety(const Variety& v) {
    if (v.vars.empty()) fail(errc::schema_error, "variety needs at least one variable");
    if (v.projective && v.vars.size() < 2) fail(errc::schema_error, "projective space needs two coordinates");
    for (const auto& g : v.ideal) {
        if (g.is_zero()) fail(errc::zero_polynomial, "zero generator in ideal");
        if (g.vars() != v.vars) fail(errc::schema_error, "generator variable list mismatch");
        if (v.projective && !g.is_homogeneous())
            fail(errc::not_homogeneous, "projective generator is not homogeneous: " + g.str());
    }
}

inline int variety_codim(const Variety& v) {
    if (v.declared_codim) return *v.declared_codim;
    if (v.ideal.empty()) return 0;
    if (v.ideal.size() == 1) return 1;
    fail(errc::codim_unknown, "codimension neither declared nor principal");
}

// embed every coefficient into an extension of the base field
inline Variety base_change(const Variety& v, const FieldPtr& target) {
    if (target.get() == v.field.get()) return v;
    Embedding emb(v.field, target);
    Variety w;
    w.field = target;
    w.projective = v.projective;
    w.vars = v.vars;
    w.declared_codim = v.declared_codim;
    for (const auto& g : v.ideal)
        w.ideal.push_back(g.map_coeffs(v.vars, [&](const Fq& c) { return emb(c); }));
    return w;
}

} // namespace idxlab

#endif
