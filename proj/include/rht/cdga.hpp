#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rht/grading.hpp"
#include "rht/linalg.hpp"

namespace rht {

struct ValidationIssue {
    enum class Kind { Inhomogeneous, DSquared, NonMinimal };
    Kind kind;
    std::string generator;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool minimality_checked = false;

    bool valid() const;                   // ignoring minimality
    bool valid_strict() const;            // including minimality
    std::vector<std::string> lines() const;
};

struct CdgaOptions {
    /// Degree through which cohomology/exactness answers are asserted
    /// faithful. Queries beyond it are refused, never silently answered.
    std::optional<int> faithful_through;
    /// Carrier is the graded vector space Q + <generators> with all
    /// products of positive-degree elements equal to zero. Used to present
    /// a cohomology ring with trivial multiplication as a build target.
    bool trivial_products = false;
    std::string truncation_note;
};

/// Free CDGA of finite type: a free graded-commutative algebra with a
/// degree +1 differential given on generators and extended by the Leibniz
/// rule. Immutable after construction.
class Cdga {
public:
    Cdga(Algebra algebra, std::vector<Element> diffs, CdgaOptions opts = {});

    const Algebra& algebra() const { return alg_; }
    const Element& diff(int gen) const { return diffs_.at(gen); }
    std::optional<int> faithful_through() const { return opts_.faithful_through; }
    bool trivial_products() const { return opts_.trivial_products; }
    const std::string& truncation_note() const { return opts_.truncation_note; }

    /// Monomial basis of the degree-d slice of the carrier.
    std::vector<Monomial> basis(int d) const;

    /// Product in the carrier (drops decomposables under trivial_products).
    Element multiply(const Element& x, const Element& y) const;

    /// Leibniz extension of the differential.
    Element apply_d(const Element& x) const;

    /// Checks homogeneity of the generator differentials, d^2 = 0 on every
    /// generator, and (optionally) minimality: every differential lands in
    /// the span of decomposable monomials. Violations are report content.
    ValidationReport validate(bool check_minimality) const;

    bool operator==(const Cdga&) const = default;

private:
    Algebra alg_;
    std::vector<Element> diffs_;
    CdgaOptions opts_;

public:
    bool options_equal(const Cdga& o) const;
};

inline bool operator==(const CdgaOptions& a, const CdgaOptions& b) {
    return a.faithful_through == b.faithful_through && a.trivial_products == b.trivial_products &&
           a.truncation_note == b.truncation_note;
}

struct CohomologyClass {
    int degree = 0;
    std::vector<Rational> class_coords;  // over the chosen class representatives
    Element representative;              // a cocycle

    bool is_zero() const { return is_zero_vector(class_coords); }
};

/// Per-degree cocycle/coboundary/class data, all as RREF row bases over the
/// monomial basis of the slice. Representatives are the RREF rows of the
/// cocycle space reduced modulo the coboundary space, so identical inputs
/// give identical representatives on every run.
class CohomologyBasis {
public:
    CohomologyBasis(const Cdga& model, int max_degree);

    int max_degree() const { return max_degree_; }
    int betti(int d) const;

    const std::vector<Monomial>& monomials(int d) const { return slices_.at(d).monomials; }
    const RMatrix& cocycles(int d) const { return slices_.at(d).cocycles; }
    const RMatrix& coboundaries(int d) const { return slices_.at(d).coboundaries; }
    const RMatrix& class_reps(int d) const { return slices_.at(d).class_reps; }

    /// The i-th chosen class representative in degree d.
    CohomologyClass cls(int d, int i) const;
    Element rep_element(int d, int i) const;

    /// Class of a closed homogeneous element; throws ArgumentError when the
    /// element is not closed or its degree exceeds max_degree.
    CohomologyClass class_of(const Cdga& model, const Element& cocycle) const;

    /// Same, with the degree supplied so the zero element gets coordinates
    /// of the right length.
    CohomologyClass class_in_degree(const Cdga& model, const Element& cocycle, int degree) const;

private:
    struct Slice {
        std::vector<Monomial> monomials;
        RMatrix cocycles;
        RMatrix coboundaries;
        RMatrix class_reps;
    };
    int max_degree_ = 0;
    std::vector<Slice> slices_;
};

/// Cup product on chosen representatives; independent of the choice.
CohomologyClass cup(const Cdga& model, const CohomologyBasis& basis, const CohomologyClass& u,
                    const CohomologyClass& v);

struct ExactnessResult {
    bool exact = false;
    Element witness;                          // d(witness) == z when exact
    std::vector<Rational> class_coords;       // nonzero certificate otherwise
};

/// Decides exactness of a closed homogeneous element by solving against the
/// differential of the next-lower slice; the witness is the deterministic
/// echelon solution (free variables zero).
ExactnessResult is_exact(const Cdga& model, const Element& z);

}  // namespace rht
