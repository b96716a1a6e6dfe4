#include "rht/grading.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rht {

int Monomial::total_exponents() const {
    int n = 0;
    for (const Factor& f : factors_) n += f.exp;
    return n;
}

Element& Element::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return *this;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Element Element::operator+(const Element& o) const {
    Element out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Element Element::operator-(const Element& o) const {
    Element out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Element Element::operator-() const {
    return scaled(Rational(-1));
}

Element Element::scaled(const Rational& c) const {
    Element out;
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

std::optional<int> Element::homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (!d) {
            d = m.degree();
        } else if (*d != m.degree()) {
            return std::nullopt;
        }
    }
    return d;  // nullopt for the zero element and for mixed-degree sums
}

bool Element::is_homogeneous() const {
    return is_zero() || homogeneous_degree().has_value();
}

Algebra::Algebra(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::set<std::string> names;
    for (const Generator& g : gens_) {
        if (g.name.empty()) throw ArgumentError("generator name must be nonempty");
        if (g.degree < 1) throw ArgumentError("generator degree must be >= 1: " + g.name);
        if (!names.insert(g.name).second) throw ArgumentError("duplicate generator name: " + g.name);
    }
}

std::optional<int> Algebra::find(std::string_view name) const {
    for (int i = 0; i < generator_count(); ++i)
        if (gens_[i].name == name) return i;
    return std::nullopt;
}

int Algebra::top_generator_degree() const {
    int top = 0;
    for (const Generator& g : gens_) top = std::max(top, g.degree);
    return top;
}

Monomial Algebra::monomial(const std::vector<Factor>& factors) const {
    Monomial m;
    for (const Factor& f : factors) {
        if (f.exp == 0) continue;
        if (f.exp < 0) throw ArgumentError("negative exponent");
        if (f.gen < 0 || f.gen >= generator_count()) throw ArgumentError("generator index out of range");
        if (gens_[f.gen].degree % 2 == 1 && f.exp > 1)
            throw ArgumentError("odd generator squared: " + gens_[f.gen].name);
        if (!m.factors_.empty() && m.factors_.back().gen >= f.gen)
            throw ArgumentError("factors must be strictly increasing by generator index");
        m.factors_.push_back(f);
        m.degree_ += f.exp * gens_[f.gen].degree;
    }
    return m;
}

Monomial Algebra::generator_monomial(int i) const {
    return monomial({Factor{i, 1}});
}

Element Algebra::generator_element(int i) const {
    Element e;
    e.add_term(generator_monomial(i), Rational(1));
    return e;
}

Element Algebra::unit_element() {
    Element e;
    e.add_term(Monomial{}, Rational(1));
    return e;
}

std::vector<Monomial> Algebra::basis(int d) const {
    if (d < 0) throw ArgumentError("basis: negative degree");
    std::vector<Monomial> out;
    std::vector<Factor> current;
    // Enumerate exponent vectors over generators in index order.
    auto recurse = [&](auto&& self, int gen, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(monomial(current));
            return;
        }
        if (gen >= generator_count()) return;
        const int deg = gens_[gen].degree;
        const int max_exp = (deg % 2 == 1) ? 1 : remaining / deg;
        for (int e = 0; e <= max_exp; ++e) {
            if (e * deg > remaining) break;
            if (e > 0) current.push_back(Factor{gen, e});
            self(self, gen + 1, remaining - e * deg);
            if (e > 0) current.pop_back();
        }
    };
    recurse(recurse, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::pair<Monomial, int>> Algebra::multiply(const Monomial& a, const Monomial& b) const {
    // Suffix degrees of a, used for the Koszul sign: a factor of b moving to
    // its sorted position passes every a-factor of strictly larger index.
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::vector<int> suffix_deg(fa.size() + 1, 0);
    for (int i = static_cast<int>(fa.size()) - 1; i >= 0; --i)
        suffix_deg[i] = suffix_deg[i + 1] + fa[i].exp * gens_[fa[i].gen].degree;

    int sign = 1;
    std::vector<Factor> merged(fa.begin(), fa.end());
    size_t ai = 0;  // scan position into fa for suffix lookups
    for (const Factor& f : fb) {
        while (ai < fa.size() && fa[ai].gen <= f.gen) ++ai;
        const int passed = suffix_deg[ai];
        const int fdeg = f.exp * gens_[f.gen].degree;
        if ((passed % 2) && (fdeg % 2)) sign = -sign;

        auto it = std::lower_bound(merged.begin(), merged.end(), f.gen,
                                   [](const Factor& x, int g) { return x.gen < g; });
        if (it != merged.end() && it->gen == f.gen) {
            if (gens_[f.gen].degree % 2 == 1) return std::nullopt;  // odd square
            it->exp += f.exp;
        } else {
            merged.insert(it, f);
        }
    }
    Monomial m;
    m.factors_ = std::move(merged);
    m.degree_ = a.degree() + b.degree();
    return std::make_pair(std::move(m), sign);
}

Element Algebra::multiply(const Element& x, const Element& y) const {
    Element out;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            auto prod = multiply(mx, my);
            if (!prod) continue;
            out.add_term(prod->first, cx * cy * prod->second);
        }
    }
    return out;
}

std::string Algebra::format(const Monomial& m) const {
    if (m.is_unit()) return "1";
    std::string out;
    for (const Factor& f : m.factors()) {
        for (int e = 0; e < f.exp; ++e) {
            if (!out.empty()) out += "*";
            out += gens_[f.gen].name;
        }
    }
    return out;
}

std::string Algebra::format(const Element& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        if (m.is_unit()) {
            out += rational_str(a);
        } else {
            if (a != 1) out += rational_str(a) + "*";
            out += format(m);
        }
    }
    return out;
}

std::vector<Rational> coordinates(const std::vector<Monomial>& basis, const Element& x) {
    std::vector<Rational> v(basis.size());
    for (const auto& [m, c] : x.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || !(*it == m))
            throw ArgumentError("coordinates: monomial outside basis");
        v[static_cast<size_t>(it - basis.begin())] = c;
    }
    return v;
}

Element from_coordinates(const std::vector<Monomial>& basis, const std::vector<Rational>& coords) {
    Element x;
    for (size_t i = 0; i < basis.size(); ++i) x.add_term(basis[i], coords[i]);
    return x;
}

}  // namespace rht
