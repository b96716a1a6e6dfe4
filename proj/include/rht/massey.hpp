#pragma once

#include "rht/cdga.hpp"

namespace rht {

enum class MasseyVerdict { Nonzero, Vanishes, Undefined };

std::string to_string(MasseyVerdict v);

/// Triple Massey product data. With a_i = [alpha_i], the chosen primitives
/// satisfy d(xi) = alpha1 alpha2 and d(eta) = alpha2 alpha3, and the
/// representative is alpha1 eta + (-1)^(p1+1) xi alpha3. The verdict is
/// Nonzero exactly when the representative class falls outside the
/// indeterminacy subspace.
struct MasseyResult {
    CohomologyClass a1, a2, a3;
    MasseyVerdict verdict = MasseyVerdict::Undefined;
    int total_degree = 0;             // p1 + p2 + p3 - 1
    Element primitive_xi;             // for alpha1 alpha2
    Element primitive_eta;            // for alpha2 alpha3
    Element representative;
    std::vector<Rational> rep_class;  // class coordinates in H^total
    RMatrix indeterminacy;            // RREF rows in class coordinates

    /// A nonzero Massey product obstructs formality.
    bool implies_nonformal() const { return verdict == MasseyVerdict::Nonzero; }
};

/// Subspace a1 u H^(total-p1) + H^(total-p3) u a3 of H^total, as RREF rows
/// in class coordinates.
RMatrix indeterminacy(const Cdga& model, const CohomologyBasis& basis, const CohomologyClass& a1,
                      const CohomologyClass& a3, int total_degree);

/// Computes <a1,a2,a3>. Undefined when a1 u a2 or a2 u a3 is a nonzero
/// class; refuses when the value degree exceeds the faithful range of the
/// model or the computed range of the basis.
MasseyResult triple_massey(const Cdga& model, const CohomologyBasis& basis, const CohomologyClass& a1,
                           const CohomologyClass& a2, const CohomologyClass& a3);

}  // namespace rht
