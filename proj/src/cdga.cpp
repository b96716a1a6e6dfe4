#include "rht/cdga.hpp"

#include <algorithm>

namespace rht {

bool ValidationReport::valid() const {
    for (const ValidationIssue& i : issues)
        if (i.kind != ValidationIssue::Kind::NonMinimal) return false;
    return true;
}

bool ValidationReport::valid_strict() const {
    return issues.empty();
}

std::vector<std::string> ValidationReport::lines() const {
    std::vector<std::string> out;
    for (const ValidationIssue& i : issues) {
        std::string kind;
        switch (i.kind) {
            case ValidationIssue::Kind::Inhomogeneous: kind = "inhomogeneous differential"; break;
            case ValidationIssue::Kind::DSquared: kind = "d^2 != 0"; break;
            case ValidationIssue::Kind::NonMinimal: kind = "non-minimal differential"; break;
        }
        out.push_back(kind + " at generator " + i.generator + ": " + i.detail);
    }
    return out;
}

Cdga::Cdga(Algebra algebra, std::vector<Element> diffs, CdgaOptions opts)
    : alg_(std::move(algebra)), diffs_(std::move(diffs)), opts_(std::move(opts)) {
    if (static_cast<int>(diffs_.size()) != alg_.generator_count())
        throw ArgumentError("Cdga: one differential image per generator required");
}

bool Cdga::options_equal(const Cdga& o) const {
    return opts_ == o.opts_;
}

std::vector<Monomial> Cdga::basis(int d) const {
    std::vector<Monomial> full = alg_.basis(d);
    if (!opts_.trivial_products) return full;
    std::vector<Monomial> out;
    for (Monomial& m : full)
        if (m.total_exponents() <= 1) out.push_back(std::move(m));
    return out;
}

Element Cdga::multiply(const Element& x, const Element& y) const {
    Element full = alg_.multiply(x, y);
    if (!opts_.trivial_products) return full;
    Element out;
    for (const auto& [m, c] : full.terms())
        if (m.total_exponents() <= 1) out.add_term(m, c);
    return out;
}

Element Cdga::apply_d(const Element& x) const {
    Element out;
    for (const auto& [mono, coef] : x.terms()) {
        const auto& factors = mono.factors();
        int prefix_deg = 0;
        for (size_t i = 0; i < factors.size(); ++i) {
            const Factor& f = factors[i];
            const Element& dg = diffs_[f.gen];
            if (!dg.is_zero()) {
                // Leibniz at the i-th canonical factor. All copies of an
                // even generator contribute the same term, hence the factor
                // f.exp; the sign is the parity of the preceding degree.
                std::vector<Factor> left(factors.begin(), factors.begin() + i);
                if (f.exp > 1) left.push_back(Factor{f.gen, f.exp - 1});
                std::vector<Factor> right(factors.begin() + i + 1, factors.end());
                Element term = multiply(Element().add_term(alg_.monomial(left), Rational(1)), dg);
                term = multiply(term, Element().add_term(alg_.monomial(right), Rational(1)));
                Rational c = coef * f.exp;
                if (prefix_deg % 2) c = -c;
                out = out + term.scaled(c);
            }
            prefix_deg += f.exp * alg_.generator(f.gen).degree;
        }
    }
    return out;
}

ValidationReport Cdga::validate(bool check_minimality) const {
    ValidationReport report;
    report.minimality_checked = check_minimality;
    for (int i = 0; i < alg_.generator_count(); ++i) {
        const Generator& g = alg_.generator(i);
        const Element& dg = diffs_[i];
        if (!dg.is_zero()) {
            auto deg = dg.homogeneous_degree();
            if (!deg || *deg != g.degree + 1) {
                report.issues.push_back({ValidationIssue::Kind::Inhomogeneous, g.name,
                                         "image must be homogeneous of degree " + std::to_string(g.degree + 1)});
                continue;
            }
        }
        Element dd = apply_d(dg);
        if (!dd.is_zero()) {
            report.issues.push_back({ValidationIssue::Kind::DSquared, g.name,
                                     "d(d " + g.name + ") = " + alg_.format(dd)});
        }
        if (check_minimality) {
            for (const auto& [m, c] : dg.terms()) {
                (void)c;
                if (m.total_exponents() < 2) {
                    report.issues.push_back({ValidationIssue::Kind::NonMinimal, g.name,
                                             "term " + alg_.format(m) + " is not decomposable"});
                    break;
                }
            }
        }
    }
    return report;
}

namespace {

/// Rows = coordinates of d(m) over basis(d+1), one row per monomial of
/// basis(d). The row space is the coboundary space in degree d+1.
RMatrix d_matrix(const Cdga& model, const std::vector<Monomial>& domain,
                 const std::vector<Monomial>& codomain) {
    RMatrix m(static_cast<int>(domain.size()), static_cast<int>(codomain.size()));
    for (size_t r = 0; r < domain.size(); ++r) {
        Element img = model.apply_d(Element().add_term(domain[r], Rational(1)));
        std::vector<Rational> row = coordinates(codomain, img);
        m.set_row(static_cast<int>(r), row);
    }
    return m;
}

}  // namespace

CohomologyBasis::CohomologyBasis(const Cdga& model, int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0) throw ArgumentError("cohomology: max_degree must be >= 0");
    std::vector<std::vector<Monomial>> bases(max_degree + 2);
    for (int d = 0; d <= max_degree + 1; ++d) bases[d] = model.basis(d);

    slices_.resize(max_degree + 1);
    for (int d = 0; d <= max_degree; ++d) {
        Slice& s = slices_[d];
        s.monomials = bases[d];
        const int dim = static_cast<int>(s.monomials.size());

        RMatrix d_here = d_matrix(model, bases[d], bases[d + 1]);
        // Cocycles: combinations x with sum_m x_m d(m) = 0.
        s.cocycles = row_space(null_space(d_here.transposed()));

        if (d == 0) {
            s.coboundaries = RMatrix(0, dim);
        } else {
            RMatrix d_below = d_matrix(model, bases[d - 1], bases[d]);
            s.coboundaries = row_space(d_below);
        }

        RMatrix reduced;
        for (int r = 0; r < s.cocycles.rows(); ++r) {
            std::vector<Rational> v = reduce_against(s.coboundaries, s.cocycles.row(r));
            if (!is_zero_vector(v)) reduced.append_row(v);
        }
        if (reduced.rows() == 0) reduced = RMatrix(0, dim);
        s.class_reps = row_space(reduced);
    }
}

int CohomologyBasis::betti(int d) const {
    if (d < 0 || d > max_degree_) throw ArgumentError("betti: degree out of range");
    return slices_[d].class_reps.rows();
}

Element CohomologyBasis::rep_element(int d, int i) const {
    const Slice& s = slices_.at(d);
    if (i < 0 || i >= s.class_reps.rows()) throw ArgumentError("rep_element: index out of range");
    return from_coordinates(s.monomials, s.class_reps.row(i));
}

CohomologyClass CohomologyBasis::cls(int d, int i) const {
    CohomologyClass c;
    c.degree = d;
    c.class_coords.assign(slices_.at(d).class_reps.rows(), Rational(0));
    c.class_coords.at(i) = 1;
    c.representative = rep_element(d, i);
    return c;
}

CohomologyClass CohomologyBasis::class_in_degree(const Cdga& model, const Element& cocycle,
                                                 int degree) const {
    if (degree < 0 || degree > max_degree_)
        throw ArgumentError("class_in_degree: degree outside computed range");
    CohomologyClass out;
    out.degree = degree;
    out.representative = cocycle;
    const Slice& s = slices_[degree];
    if (cocycle.is_zero()) {
        out.class_coords.assign(s.class_reps.rows(), Rational(0));
        return out;
    }
    auto deg = cocycle.homogeneous_degree();
    if (!deg || *deg != degree) throw ArgumentError("class_in_degree: element degree mismatch");
    if (!model.apply_d(cocycle).is_zero()) throw ArgumentError("class_in_degree: element is not closed");

    std::vector<Rational> v = coordinates(s.monomials, cocycle);
    v = reduce_against(s.coboundaries, v);
    auto coords = coordinates_in(s.class_reps, v);
    if (!coords) throw ArgumentError("class_in_degree: internal reduction failure");
    out.class_coords = *coords;
    return out;
}

CohomologyClass CohomologyBasis::class_of(const Cdga& model, const Element& cocycle) const {
    auto deg = cocycle.homogeneous_degree();
    if (!deg) throw ArgumentError("class_of: element is zero or not homogeneous");
    return class_in_degree(model, cocycle, *deg);
}

CohomologyClass cup(const Cdga& model, const CohomologyBasis& basis, const CohomologyClass& u,
                    const CohomologyClass& v) {
    const int degree = u.degree + v.degree;
    if (degree > basis.max_degree())
        throw Refusal("cup: product degree exceeds the computed range");
    Element prod = model.multiply(u.representative, v.representative);
    return basis.class_in_degree(model, prod, degree);
}

ExactnessResult is_exact(const Cdga& model, const Element& z) {
    ExactnessResult res;
    if (z.is_zero()) {
        res.exact = true;
        return res;
    }
    auto deg = z.homogeneous_degree();
    if (!deg) throw ArgumentError("is_exact: element is not homogeneous");
    if (!model.apply_d(z).is_zero()) throw ArgumentError("is_exact: element is not closed");

    const int q = *deg;
    std::vector<Monomial> here = model.basis(q);
    std::vector<Rational> target = coordinates(here, z);
    if (q == 0) {
        // nonzero scalars are never exact
        res.exact = false;
        res.class_coords = target;
        return res;
    }
    std::vector<Monomial> below = model.basis(q - 1);
    RMatrix m(static_cast<int>(here.size()), static_cast<int>(below.size()));
    for (size_t c = 0; c < below.size(); ++c) {
        Element img = model.apply_d(Element().add_term(below[c], Rational(1)));
        std::vector<Rational> col = coordinates(here, img);
        for (size_t r = 0; r < here.size(); ++r) m.at(static_cast<int>(r), static_cast<int>(c)) = col[r];
    }
    auto sol = solve(m, target);
    if (sol) {
        res.exact = true;
        res.witness = from_coordinates(below, *sol);
        return res;
    }
    res.exact = false;
    // Certificate: class coordinates of z in its degree.
    CohomologyBasis basis(model, q);
    res.class_coords = basis.class_of(model, z).class_coords;
    return res;
}

}  // namespace rht
