#include "desir/gamble.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "desir/error.hpp"

namespace desir {

PossibilitySpace::PossibilitySpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) {
        throw InputError("possibility space must have at least one atom");
    }
    std::set<std::string_view> seen;
    for (const auto& l : labels_) {
        if (l.empty()) {
            throw InputError("atom labels must be nonempty");
        }
        if (!seen.insert(l).second) {
            throw InputError("duplicate atom label '" + l + "'");
        }
    }
}

PossibilitySpace PossibilitySpace::with_size(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("w" + std::to_string(i));
    }
    return PossibilitySpace(std::move(labels));
}

std::size_t PossibilitySpace::index_of(std::string_view label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw InputError("unknown atom '" + std::string(label) + "'");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

bool Gamble::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.is_zero(); });
}

void require_same_dim(const Gamble& f, const Gamble& g) {
    if (f.size() != g.size()) {
        throw DimensionError("dimension mismatch: " + std::to_string(f.size()) + " vs " + std::to_string(g.size()));
    }
}

bool geq(const Gamble& f, const Gamble& g) {
    require_same_dim(f, g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < g[i]) {
            return false;
        }
    }
    return true;
}

bool gt(const Gamble& f, const Gamble& g) {
    require_same_dim(f, g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] <= g[i]) {
            return false;
        }
    }
    return true;
}

bool wgeq(const Gamble& f, const Gamble& g) { return geq(f, g) && f != g; }

bool in_cone_wd0(const Gamble& f) { return in_cone_geq0(f) && !f.is_zero(); }

bool in_cone_gt0(const Gamble& f) {
    return std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return v.sign() > 0; });
}

bool in_cone_geq0(const Gamble& f) {
    return std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return v.sign() >= 0; });
}

bool in_cone_leq0(const Gamble& f) {
    return std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return v.sign() <= 0; });
}

Gamble add(const Gamble& f, const Gamble& g) {
    require_same_dim(f, g);
    std::vector<Rational> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = f[i] + g[i];
    }
    return Gamble(std::move(out));
}

Gamble subtract(const Gamble& f, const Gamble& g) {
    require_same_dim(f, g);
    std::vector<Rational> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = f[i] - g[i];
    }
    return Gamble(std::move(out));
}

Gamble scale(const Rational& lambda, const Gamble& f) {
    if (lambda.sign() <= 0) {
        throw InputError("scale factor must be positive, got " + lambda.to_string());
    }
    std::vector<Rational> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i] = lambda * f[i];
    }
    return Gamble(std::move(out));
}

Gamble indicator(std::size_t dim, std::size_t atom) {
    if (atom >= dim) {
        throw InputError("atom index " + std::to_string(atom) + " out of range");
    }
    std::vector<Rational> out(dim);
    out[atom] = 1;
    return Gamble(std::move(out));
}

Gamble indicator(const PossibilitySpace& space, std::string_view atom) {
    return indicator(space.size(), space.index_of(atom));
}

Gamble combine(std::span<const Rational> weights, std::span<const Gamble> gambles, std::size_t dim) {
    std::vector<Rational> out(dim);
    for (std::size_t k = 0; k < gambles.size(); ++k) {
        if (weights[k].is_zero()) {
            continue;
        }
        if (gambles[k].size() != dim) {
            throw DimensionError("dimension mismatch in combination");
        }
        for (std::size_t i = 0; i < dim; ++i) {
            out[i] += weights[k] * gambles[k][i];
        }
    }
    return Gamble(std::move(out));
}

std::string to_string(const Gamble& f) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < f.size(); ++i) {
        os << (i ? "," : "") << f[i];
    }
    os << ')';
    return os.str();
}

GambleSet::GambleSet(std::size_t dim, std::vector<Gamble> members) : dim_(dim), members_(std::move(members)) {
    for (const auto& g : members_) {
        if (g.size() != dim_) {
            throw DimensionError("gamble " + to_string(g) + " does not have dimension " + std::to_string(dim_));
        }
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool GambleSet::contains(const Gamble& g) const { return std::binary_search(members_.begin(), members_.end(), g); }

bool GambleSet::is_subset_of(const GambleSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

GambleSet GambleSet::with(const Gamble& g) const {
    auto m = members_;
    m.push_back(g);
    return GambleSet(dim_, std::move(m));
}

GambleSet GambleSet::without(const Gamble& g) const {
    auto m = members_;
    m.erase(std::remove(m.begin(), m.end(), g), m.end());
    return GambleSet(dim_, std::move(m));
}

GambleSet GambleSet::united(const GambleSet& other) const {
    if (other.dim_ != dim_) {
        throw DimensionError("cannot unite gamble sets of different dimension");
    }
    auto m = members_;
    m.insert(m.end(), other.members_.begin(), other.members_.end());
    return GambleSet(dim_, std::move(m));
}

std::string to_string(const GambleSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + to_string(s[i]);
    }
    return out + "}";
}

} // namespace desir
