#pragma once

#include "rht/cdga.hpp"

namespace rht {

/// Algebra map phi: model -> target given on generators and extended
/// multiplicatively; commutes with the differentials when well-formed.
struct Morphism {
    std::vector<Element> images;  // one per model generator

    Element apply(const Cdga& model, const Cdga& target, const Element& x) const;
    bool commutes_with_d(const Cdga& model, const Cdga& target) const;
};

/// A stage of the step-by-step construction: a minimal model together with
/// a quasi-isomorphism-so-far into the target. built_through is the largest
/// s with H(phi) an isomorphism in degrees <= s and injective in s+1,
/// verified by direct computation.
struct MinimalModelStage {
    Cdga model;
    Cdga target;
    Morphism phi;
    int built_through = 0;
};

/// Degree-by-degree construction up to max_degree: adjoin closed generators
/// to fill the cokernel of H^d(phi), then generators of degree d to kill
/// the kernel of H^(d+1)(phi). One kill pass per degree; for targets with
/// no degree-1 generators this empties the kernel exactly, and the
/// verified built_through reports whatever was achieved otherwise.
MinimalModelStage minimal_model(const Cdga& target, int max_degree);

/// Wraps an already-minimal CDGA as a stage over itself.
MinimalModelStage identity_stage(const Cdga& model, int built_through);

/// Computes the largest s (capped at max_check) for which the stage
/// contract holds; used internally and by tests.
int verify_built_through(const MinimalModelStage& stage, int max_check);

/// Per-degree splitting V^i = C^i + N^i with d(C^i) = 0 and d injective on
/// N^i. C is the kernel of d on the generator span; N is spanned by the
/// pivot generators of the echelon form, so the choice is deterministic.
struct CNDecomposition {
    int s = 0;
    /// Row bases over generator coordinates of degree i, indexed by degree.
    std::vector<RMatrix> closed_part;      // C^i
    std::vector<RMatrix> complement_part;  // N^i
    std::vector<std::vector<int>> generator_indices;  // model generator ids per degree

    std::vector<Element> complement_elements(const Cdga& model) const;
};

CNDecomposition cn_decompose(const MinimalModelStage& stage, int s);

/// Outcome of the staged formality test at level s: every closed element of
/// the ideal generated by N^(<=s) inside the subalgebra on generators of
/// degree <= s must be exact in the full model, checked degree by degree up
/// to search_bound.
struct SFormalityReport {
    int s = 0;
    int search_bound = 0;
    bool pass = false;
    std::optional<Element> witness;  // lowest-degree closed non-exact ideal element
    int witness_degree = -1;
    CNDecomposition decomposition;
    std::string semantics = "canonical-echelon-complement";
};

SFormalityReport s_formality(const MinimalModelStage& stage, int s, int search_bound);

/// Formality through the half-dimension test: a compact orientable
/// manifold of dimension 2n or 2n-1 is formal iff it is (n-1)-formal.
struct FormalityVerdict {
    bool formal = false;
    int manifold_dim = 0;
    int s_used = 0;
    SFormalityReport report;
};

FormalityVerdict formality_verdict(const MinimalModelStage& stage, int manifold_dim);

}  // namespace rht
