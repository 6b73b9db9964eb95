#ifndef IDXLAB_ERRORS_HPP
#define IDXLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idxlab {

enum class errc {
    not_prime,
    degree_too_large,
    field_too_large,
    no_embedding,
    field_mismatch,
    zero_polynomial,
    zero_division,
    parse_error,
    schema_error,
    not_finite,
    not_primary,
    no_convergence,
    generator_cap_exceeded,
    dimension_mismatch,
    sampling_exhausted,
    scan_too_large,
    component_mismatch,
    decomposition_inconsistent,
    point_not_on_variety,
    enumeration_too_large,
    codim_unknown,
    not_homogeneous,
    zero_germ,
    blowup_budget_exceeded,
    component_product_mismatch,
    not_flat,
    not_coprime,
    point_not_on_fiber,
    not_regular_point,
    not_transversal,
    invariant_violation,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::not_prime: return "NotPrime";
    case errc::degree_too_large: return "DegreeTooLarge";
    case errc::field_too_large: return "FieldTooLarge";
    case errc::no_embedding: return "NoEmbedding";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::zero_division: return "ZeroDivision";
    case errc::parse_error: return "ParseError";
    case errc::schema_error: return "SchemaError";
    case errc::not_finite: return "NotFinite";
    case errc::not_primary: return "NotPrimary";
    case errc::no_convergence: return "NoConvergence";
    case errc::generator_cap_exceeded: return "GeneratorCapExceeded";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::sampling_exhausted: return "SamplingExhausted";
    case errc::scan_too_large: return "ScanTooLarge";
    case errc::component_mismatch: return "ComponentMismatch";
    case errc::decomposition_inconsistent: return "DecompositionInconsistent";
    case errc::point_not_on_variety: return "PointNotOnVariety";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::codim_unknown: return "CodimUnknown";
    case errc::not_homogeneous: return "NotHomogeneous";
    case errc::zero_germ: return "ZeroGerm";
    case errc::blowup_budget_exceeded: return "BlowupBudgetExceeded";
    case errc::component_product_mismatch: return "ComponentProductMismatch";
    case errc::not_flat: return "NotFlat";
    case errc::not_coprime: return "NotCoprime";
    case errc::point_not_on_fiber: return "PointNotOnFiber";
    case errc::not_regular_point: return "NotRegularPoint";
    case errc::not_transversal: return "NotTransversal";
    case errc::invariant_violation: return "InvariantViolation";
    }
    return "Unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace idxlab

#endif
