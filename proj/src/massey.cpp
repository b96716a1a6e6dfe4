#include "rht/massey.hpp"

namespace rht {

std::string to_string(MasseyVerdict v) {
    switch (v) {
        case MasseyVerdict::Nonzero: return "nonzero";
        case MasseyVerdict::Vanishes: return "vanishes";
        case MasseyVerdict::Undefined: return "undefined";
    }
    return "?";
}

RMatrix indeterminacy(const Cdga& model, const CohomologyBasis& basis, const CohomologyClass& a1,
                      const CohomologyClass& a3, int total_degree) {
    if (total_degree > basis.max_degree())
        throw ArgumentError("indeterminacy: degree exceeds computed range");
    const int classes = basis.class_reps(total_degree).rows();
    RMatrix span(0, classes);

    const int left_deg = total_degree - a1.degree;
    if (left_deg >= 0 && left_deg <= basis.max_degree()) {
        for (int i = 0; i < basis.betti(left_deg); ++i) {
            CohomologyClass w = basis.cls(left_deg, i);
            CohomologyClass prod = cup(model, basis, a1, w);
            span.append_row(prod.class_coords);
        }
    }
    const int right_deg = total_degree - a3.degree;
    if (right_deg >= 0 && right_deg <= basis.max_degree()) {
        for (int i = 0; i < basis.betti(right_deg); ++i) {
            CohomologyClass w = basis.cls(right_deg, i);
            CohomologyClass prod = cup(model, basis, w, a3);
            span.append_row(prod.class_coords);
        }
    }
    if (span.rows() == 0) span = RMatrix(0, classes);
    return row_space(span);
}

MasseyResult triple_massey(const Cdga& model, const CohomologyBasis& basis, const CohomologyClass& a1,
                           const CohomologyClass& a2, const CohomologyClass& a3) {
    MasseyResult res;
    res.a1 = a1;
    res.a2 = a2;
    res.a3 = a3;
    res.total_degree = a1.degree + a2.degree + a3.degree - 1;

    if (res.total_degree > basis.max_degree())
        throw Refusal("triple_massey: value degree " + std::to_string(res.total_degree) +
                      " exceeds the computed range " + std::to_string(basis.max_degree()));
    if (model.faithful_through() && res.total_degree > *model.faithful_through())
        throw Refusal("triple_massey: value degree " + std::to_string(res.total_degree) +
                      " exceeds the faithful range " + std::to_string(*model.faithful_through()) +
                      " of the model");

    const Element prod12 = model.multiply(a1.representative, a2.representative);
    const Element prod23 = model.multiply(a2.representative, a3.representative);
    ExactnessResult e12 = is_exact(model, prod12);
    ExactnessResult e23 = is_exact(model, prod23);
    if (!e12.exact || !e23.exact) {
        res.verdict = MasseyVerdict::Undefined;
        return res;
    }
    res.primitive_xi = e12.witness;
    res.primitive_eta = e23.witness;

    Element rep = model.multiply(a1.representative, res.primitive_eta);
    Element tail = model.multiply(res.primitive_xi, a3.representative);
    if ((a1.degree + 1) % 2) tail = -tail;
    rep = rep + tail;
    res.representative = rep;

    CohomologyClass rep_class = basis.class_in_degree(model, rep, res.total_degree);
    res.rep_class = rep_class.class_coords;
    res.indeterminacy = indeterminacy(model, basis, a1, a3, res.total_degree);
    res.verdict = in_row_space(res.indeterminacy, res.rep_class) ? MasseyVerdict::Vanishes
                                                                 : MasseyVerdict::Nonzero;
    return res;
}

}  // namespace rht
