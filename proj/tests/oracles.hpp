#pragma once

// Test-side oracles: small independent implementations used to compute or
// cross-check expected values. Everything here deliberately avoids the
// library's canonical-monomial and echelon machinery; products work on flat
// generator lists with bubble-sort sign counting and ranks come from
// fraction-free elimination.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "rht/cdga.hpp"

namespace oracle {

using rht::Rational;

/// All exponent vectors e with sum e_i * deg_i = d, odd degrees capped at
/// exponent 1. Plain odometer enumeration.
inline std::vector<std::vector<int>> exponent_vectors(const std::vector<int>& degrees, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(degrees.size(), 0);
    while (true) {
        int total = 0;
        for (size_t i = 0; i < degrees.size(); ++i) total += e[i] * degrees[i];
        if (total == d) out.push_back(e);
        // increment odometer
        size_t i = 0;
        for (; i < degrees.size(); ++i) {
            const int cap = (degrees[i] % 2 == 1) ? 1 : (degrees[i] ? d / degrees[i] : 0);
            if (e[i] < cap) {
                ++e[i];
                break;
            }
            e[i] = 0;
        }
        if (i == degrees.size()) break;
    }
    return out;
}

/// Sorts a flat generator-id list by repeated adjacent swaps, tracking the
/// Koszul sign; returns nullopt when an odd generator repeats.
inline std::optional<std::pair<int, std::vector<int>>> canon_flat(std::vector<int> flat,
                                                                  const std::vector<int>& degrees) {
    int sign = 1;
    for (size_t i = 1; i < flat.size(); ++i) {
        for (size_t j = i; j > 0 && flat[j] < flat[j - 1]; --j) {
            if ((degrees[flat[j]] % 2) && (degrees[flat[j - 1]] % 2)) sign = -sign;
            std::swap(flat[j], flat[j - 1]);
        }
    }
    for (size_t i = 1; i < flat.size(); ++i) {
        if (flat[i] == flat[i - 1] && degrees[flat[i]] % 2 == 1) return std::nullopt;
    }
    return std::make_pair(sign, flat);
}

/// Term store keyed by sorted flat lists.
using FlatElement = std::map<std::vector<int>, Rational>;

inline void add_term(FlatElement& e, const std::vector<int>& flat, const Rational& c) {
    if (c == 0) return;
    auto it = e.find(flat);
    if (it == e.end()) {
        e.emplace(flat, c);
    } else {
        it->second += c;
        if (it->second == 0) e.erase(it);
    }
}

inline FlatElement mul(const FlatElement& a, const FlatElement& b, const std::vector<int>& degrees) {
    FlatElement out;
    for (const auto& [fa, ca] : a) {
        for (const auto& [fb, cb] : b) {
            std::vector<int> joined = fa;
            joined.insert(joined.end(), fb.begin(), fb.end());
            auto c = canon_flat(joined, degrees);
            if (!c) continue;
            add_term(out, c->second, ca * cb * c->first);
        }
    }
    return out;
}

/// Independent Leibniz rule over flat lists; diffs[g] is d(g) as a
/// FlatElement.
inline FlatElement apply_d(const FlatElement& x, const std::vector<FlatElement>& diffs,
                           const std::vector<int>& degrees) {
    FlatElement out;
    for (const auto& [flat, coef] : x) {
        int prefix = 0;
        for (size_t i = 0; i < flat.size(); ++i) {
            for (const auto& [dflat, dcoef] : diffs[flat[i]]) {
                std::vector<int> joined(flat.begin(), flat.begin() + i);
                joined.insert(joined.end(), dflat.begin(), dflat.end());
                joined.insert(joined.end(), flat.begin() + i + 1, flat.end());
                auto c = canon_flat(joined, degrees);
                if (!c) continue;
                Rational term = coef * dcoef * c->first;
                if (prefix % 2) term = -term;
                add_term(out, c->second, term);
            }
            prefix += degrees[flat[i]];
        }
    }
    return out;
}

/// Fraction-free (Bareiss) rank over the rationals' numerators would need
/// integer input; over Q plain division-free pivoting is enough for a rank
/// oracle. Distinct from the library RREF: column-major scan, last-row
/// pivot choice.
inline int bareiss_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    int r = 0;
    for (size_t c = 0; c < cols && static_cast<size_t>(r) < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = rows; i-- > static_cast<size_t>(r);) {
            if (m[i][c] != 0) pivot = i;  // keep scanning: takes the topmost
        }
        if (pivot == rows) continue;
        std::swap(m[pivot], m[static_cast<size_t>(r)]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Flat conversion helpers between the library's elements and FlatElement.
inline std::vector<int> to_flat(const rht::Monomial& m) {
    std::vector<int> flat;
    for (const rht::Factor& f : m.factors())
        for (int e = 0; e < f.exp; ++e) flat.push_back(f.gen);
    return flat;
}

inline FlatElement to_flat(const rht::Element& x) {
    FlatElement out;
    for (const auto& [m, c] : x.terms()) add_term(out, to_flat(m), c);
    return out;
}

inline std::vector<int> generator_degrees(const rht::Cdga& model) {
    std::vector<int> out;
    for (int i = 0; i < model.algebra().generator_count(); ++i)
        out.push_back(model.algebra().generator(i).degree);
    return out;
}

/// Betti number through an independent path: oracle bases, oracle
/// differentials, oracle ranks.
inline int betti(const rht::Cdga& model, int d) {
    const std::vector<int> degrees = generator_degrees(model);
    std::vector<FlatElement> diffs;
    for (int g = 0; g < model.algebra().generator_count(); ++g) diffs.push_back(to_flat(model.diff(g)));

    auto slice = [&](int deg) {
        std::vector<std::vector<int>> flats;
        for (const auto& e : exponent_vectors(degrees, deg)) {
            std::vector<int> flat;
            for (size_t g = 0; g < e.size(); ++g)
                for (int t = 0; t < e[g]; ++t) flat.push_back(static_cast<int>(g));
            flats.push_back(flat);
        }
        std::sort(flats.begin(), flats.end());
        return flats;
    };
    auto d_rank = [&](int deg) {
        const auto dom = slice(deg);
        const auto cod = slice(deg + 1);
        if (dom.empty() || cod.empty()) return 0;
        std::vector<std::vector<Rational>> m(dom.size(), std::vector<Rational>(cod.size()));
        for (size_t r = 0; r < dom.size(); ++r) {
            FlatElement x;
            add_term(x, dom[r], Rational(1));
            FlatElement dx = apply_d(x, diffs, degrees);
            for (const auto& [flat, c] : dx) {
                auto it = std::lower_bound(cod.begin(), cod.end(), flat);
                m[r][static_cast<size_t>(it - cod.begin())] = c;
            }
        }
        return bareiss_rank(m);
    };
    const int dim = static_cast<int>(slice(d).size());
    const int rank_here = d_rank(d);
    const int rank_below = d > 0 ? d_rank(d - 1) : 0;
    return dim - rank_here - rank_below;
}

/// Deterministic random elements for property tests.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    Rational coefficient() {
        static const int nums[] = {-3, -2, -1, 1, 2, 3};
        return Rational(nums[pick(0, 5)], pick(1, 3));
    }

    /// Random homogeneous element in a nonempty slice of degree <= max_deg,
    /// or the zero element when no slice is nonempty.
    rht::Element homogeneous(const rht::Cdga& model, int max_deg) {
        std::vector<int> candidates;
        for (int d = 1; d <= max_deg; ++d)
            if (!model.basis(d).empty()) candidates.push_back(d);
        if (candidates.empty()) return rht::Element{};
        const int d = candidates[static_cast<size_t>(pick(0, static_cast<int>(candidates.size()) - 1))];
        return homogeneous_of_degree(model, d);
    }

    rht::Element homogeneous_of_degree(const rht::Cdga& model, int d) {
        rht::Element out;
        const auto basis = model.basis(d);
        for (const rht::Monomial& m : basis) {
            if (pick(0, 2) == 0) out.add_term(m, coefficient());
        }
        if (out.is_zero() && !basis.empty())
            out.add_term(basis[static_cast<size_t>(pick(0, static_cast<int>(basis.size()) - 1))],
                         coefficient());
        return out;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace oracle
