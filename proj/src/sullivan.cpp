#include "rht/sullivan.hpp"

#include <algorithm>

namespace rht {

Element Morphism::apply(const Cdga& model, const Cdga& target, const Element& x) const {
    Element out;
    for (const auto& [mono, coef] : x.terms()) {
        Element term = Algebra::unit_element();
        for (const Factor& f : mono.factors()) {
            for (int e = 0; e < f.exp; ++e) term = target.multiply(term, images.at(f.gen));
        }
        (void)model;
        out = out + term.scaled(coef);
    }
    return out;
}

bool Morphism::commutes_with_d(const Cdga& model, const Cdga& target) const {
    for (int i = 0; i < model.algebra().generator_count(); ++i) {
        Element lhs = apply(model, target, model.diff(i));
        Element rhs = target.apply_d(images.at(i));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

namespace {

struct MapOnCohomology {
    // Image of each model class representative, in target class coordinates.
    RMatrix images;
};

MapOnCohomology cohomology_map(const Cdga& model, const Cdga& target, const Morphism& phi,
                               const CohomologyBasis& hm, const CohomologyBasis& ht, int d) {
    MapOnCohomology out;
    out.images = RMatrix(0, ht.class_reps(d).rows());
    for (int i = 0; i < hm.betti(d); ++i) {
        Element img = phi.apply(model, target, hm.rep_element(d, i));
        CohomologyClass c = ht.class_in_degree(target, img, d);
        out.images.append_row(c.class_coords);
    }
    if (out.images.rows() == 0) out.images = RMatrix(0, ht.class_reps(d).rows());
    return out;
}

std::string stage_gen_name(int degree, int counter) {
    return "v" + std::to_string(degree) + "_" + std::to_string(counter);
}

Cdga extend(const Cdga& model, const std::vector<Generator>& new_gens,
            const std::vector<Element>& new_diffs) {
    std::vector<Generator> gens = model.algebra().generators();
    gens.insert(gens.end(), new_gens.begin(), new_gens.end());
    std::vector<Element> diffs;
    diffs.reserve(gens.size());
    for (int i = 0; i < model.algebra().generator_count(); ++i) diffs.push_back(model.diff(i));
    diffs.insert(diffs.end(), new_diffs.begin(), new_diffs.end());
    // Monomials carry generator indices only, and extension appends at the
    // end, so existing Elements remain valid in the extended algebra.
    return Cdga(Algebra(std::move(gens)), std::move(diffs));
}

}  // namespace

int verify_built_through(const MinimalModelStage& stage, int max_check) {
    CohomologyBasis hm(stage.model, max_check + 1);
    CohomologyBasis ht(stage.target, max_check + 1);
    std::vector<bool> iso(max_check + 2), inj(max_check + 2);
    for (int d = 0; d <= max_check + 1; ++d) {
        MapOnCohomology m = cohomology_map(stage.model, stage.target, stage.phi, hm, ht, d);
        const int r = rank(m.images);
        inj[d] = (r == hm.betti(d));
        iso[d] = inj[d] && (r == ht.betti(d));
    }
    int best = -1;
    for (int s = 0; s <= max_check; ++s) {
        bool ok = inj[s + 1];
        for (int d = 0; d <= s && ok; ++d) ok = iso[d];
        if (!ok) break;
        best = s;
    }
    return best;
}

MinimalModelStage minimal_model(const Cdga& target, int max_degree) {
    {
        ValidationReport vr = target.validate(false);
        if (!vr.valid()) throw ArgumentError("minimal_model: target does not validate");
    }
    MinimalModelStage stage{Cdga(Algebra({}), {}), target, Morphism{}, 0};

    for (int d = 1; d <= max_degree; ++d) {
        int counter = 0;
        // (A) closed generators for the cokernel of H^d(phi).
        {
            CohomologyBasis hm(stage.model, d);
            CohomologyBasis ht(stage.target, d);
            MapOnCohomology m = cohomology_map(stage.model, stage.target, stage.phi, hm, ht, d);
            RMatrix image_space = row_space(m.images);
            std::vector<Generator> gens;
            std::vector<Element> diffs;
            for (int j = 0; j < ht.betti(d); ++j) {
                std::vector<Rational> e(ht.betti(d), Rational(0));
                e[j] = 1;
                if (in_row_space(image_space, e)) continue;
                image_space.append_row(e);
                image_space = row_space(image_space);
                gens.push_back(Generator{stage_gen_name(d, counter++), d});
                diffs.push_back(Element{});
                stage.phi.images.push_back(ht.rep_element(d, j));
            }
            if (!gens.empty()) stage.model = extend(stage.model, gens, diffs);
        }
        // (B) one pass killing the kernel of H^(d+1)(phi) with degree-d
        // generators. The kernel classes are decomposable cocycles, since
        // no generator of degree d+1 exists yet.
        {
            CohomologyBasis hm(stage.model, d + 1);
            CohomologyBasis ht(stage.target, d + 1);
            MapOnCohomology m = cohomology_map(stage.model, stage.target, stage.phi, hm, ht, d + 1);
            RMatrix kernel = null_space(m.images.transposed());
            std::vector<Generator> gens;
            std::vector<Element> diffs;
            for (int r = 0; r < kernel.rows(); ++r) {
                Element z;
                for (int i = 0; i < hm.betti(d + 1); ++i) {
                    if (kernel.at(r, i) == 0) continue;
                    z = z + hm.rep_element(d + 1, i).scaled(kernel.at(r, i));
                }
                Element img = stage.phi.apply(stage.model, stage.target, z);
                ExactnessResult ex = is_exact(stage.target, img);
                if (!ex.exact)
                    throw ArgumentError("minimal_model: kernel class image unexpectedly non-exact");
                gens.push_back(Generator{stage_gen_name(d, counter++), d});
                diffs.push_back(z);
                stage.phi.images.push_back(ex.witness);
            }
            if (!gens.empty()) stage.model = extend(stage.model, gens, diffs);
        }
    }

    stage.built_through = verify_built_through(stage, max_degree);
    return stage;
}

MinimalModelStage identity_stage(const Cdga& model, int built_through) {
    Morphism phi;
    for (int i = 0; i < model.algebra().generator_count(); ++i)
        phi.images.push_back(model.algebra().generator_element(i));
    return MinimalModelStage{model, model, phi, built_through};
}

std::vector<Element> CNDecomposition::complement_elements(const Cdga& model) const {
    std::vector<Element> out;
    for (size_t deg = 0; deg < complement_part.size(); ++deg) {
        const RMatrix& n = complement_part[deg];
        for (int r = 0; r < n.rows(); ++r) {
            Element e;
            for (int c = 0; c < n.cols(); ++c) {
                if (n.at(r, c) == 0) continue;
                e = e + model.algebra().generator_element(generator_indices[deg][c]).scaled(n.at(r, c));
            }
            out.push_back(e);
        }
    }
    return out;
}

CNDecomposition cn_decompose(const MinimalModelStage& stage, int s) {
    if (s > stage.built_through)
        throw Refusal("cn_decompose: s exceeds the built range of the stage");
    const Cdga& model = stage.model;
    CNDecomposition out;
    out.s = s;
    out.closed_part.resize(s + 1);
    out.complement_part.resize(s + 1);
    out.generator_indices.resize(s + 1);

    for (int i = 1; i <= s; ++i) {
        std::vector<int>& gens = out.generator_indices[i];
        for (int g = 0; g < model.algebra().generator_count(); ++g)
            if (model.algebra().generator(g).degree == i) gens.push_back(g);
        const int n = static_cast<int>(gens.size());
        std::vector<Monomial> codomain = model.basis(i + 1);
        RMatrix a(static_cast<int>(codomain.size()), n);
        for (int c = 0; c < n; ++c) {
            std::vector<Rational> col = coordinates(codomain, model.diff(gens[c]));
            for (size_t r = 0; r < col.size(); ++r) a.at(static_cast<int>(r), c) = col[r];
        }
        out.closed_part[i] = null_space(a);
        RMatrix work = a;
        std::vector<int> pivots = rref(work);
        RMatrix n_basis(0, n);
        for (int p : pivots) {
            std::vector<Rational> e(n, Rational(0));
            e[p] = 1;
            n_basis.append_row(e);
        }
        out.complement_part[i] = n_basis;
    }
    for (int i = 0; i <= s; ++i) {
        if (out.closed_part[i].cols() == 0 && out.closed_part[i].rows() == 0)
            out.closed_part[i] = RMatrix(0, static_cast<int>(out.generator_indices[i].size()));
        if (out.complement_part[i].cols() == 0 && out.complement_part[i].rows() == 0)
            out.complement_part[i] = RMatrix(0, static_cast<int>(out.generator_indices[i].size()));
    }
    return out;
}

namespace {

/// Monomials of degree d using only generators of degree <= s.
std::vector<Monomial> low_degree_monomials(const Cdga& model, int d, int s) {
    std::vector<Monomial> out;
    for (const Monomial& m : model.basis(d)) {
        bool ok = true;
        for (const Factor& f : m.factors())
            if (model.algebra().generator(f.gen).degree > s) { ok = false; break; }
        if (ok) out.push_back(m);
    }
    return out;
}

}  // namespace

SFormalityReport s_formality(const MinimalModelStage& stage, int s, int search_bound) {
    const Cdga& model = stage.model;
    if (model.faithful_through() && search_bound > *model.faithful_through())
        throw Refusal("s_formality: search bound " + std::to_string(search_bound) +
                      " exceeds the faithful range " + std::to_string(*model.faithful_through()));
    SFormalityReport report;
    report.s = s;
    report.search_bound = search_bound;
    report.decomposition = cn_decompose(stage, s);

    std::vector<Element> n_elems = report.decomposition.complement_elements(model);

    for (int q = 1; q <= search_bound; ++q) {
        // Degree-q slice of the ideal generated by N^(<=s) in the
        // subalgebra on generators of degree <= s.
        std::vector<Monomial> slice = model.basis(q);
        if (slice.empty()) continue;
        RMatrix ideal_rows(0, static_cast<int>(slice.size()));
        for (const Element& n : n_elems) {
            auto ndeg = n.homogeneous_degree();
            if (!ndeg || *ndeg > q) continue;
            for (const Monomial& m : low_degree_monomials(model, q - *ndeg, s)) {
                Element prod = model.multiply(n, Element().add_term(m, Rational(1)));
                if (prod.is_zero()) continue;
                ideal_rows.append_row(coordinates(slice, prod));
            }
        }
        if (ideal_rows.rows() == 0) continue;
        RMatrix ideal = row_space(ideal_rows);

        // Closed elements of the slice of the ideal.
        std::vector<Monomial> above = model.basis(q + 1);
        RMatrix d_of_ideal(ideal.rows(), static_cast<int>(above.size()));
        for (int r = 0; r < ideal.rows(); ++r) {
            Element e = from_coordinates(slice, ideal.row(r));
            d_of_ideal.set_row(r, coordinates(above, model.apply_d(e)));
        }
        RMatrix closed_combos = row_space(null_space(d_of_ideal.transposed()));
        for (int r = 0; r < closed_combos.rows(); ++r) {
            Element z;
            for (int c = 0; c < ideal.rows(); ++c) {
                if (closed_combos.at(r, c) == 0) continue;
                z = z + from_coordinates(slice, ideal.row(c)).scaled(closed_combos.at(r, c));
            }
            if (z.is_zero()) continue;
            ExactnessResult ex = is_exact(model, z);
            if (!ex.exact) {
                report.pass = false;
                report.witness = z;
                report.witness_degree = q;
                return report;
            }
        }
    }
    report.pass = true;
    return report;
}

FormalityVerdict formality_verdict(const MinimalModelStage& stage, int manifold_dim) {
    if (manifold_dim < 1) throw ArgumentError("formality_verdict: dimension must be >= 1");
    const int s = (manifold_dim + 1) / 2 - 1;  // ceil(dim/2) - 1
    if (stage.built_through < s)
        throw Refusal("formality_verdict: stage built through " + std::to_string(stage.built_through) +
                      ", but s = " + std::to_string(s) + " is required");
    int bound = manifold_dim + 1;
    if (stage.model.faithful_through())
        bound = std::min(bound, *stage.model.faithful_through());
    FormalityVerdict out;
    out.manifold_dim = manifold_dim;
    out.s_used = s;
    out.report = s_formality(stage, s, bound);
    out.formal = out.report.pass;
    return out;
}

}  // namespace rht
