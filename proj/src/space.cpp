#include "haarent/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "haarent/error.hpp"

namespace haarent {

namespace {

std::vector<Segment> normalize(std::vector<Segment> pieces) {
    for (const auto& p : pieces) {
        if (!std::isfinite(p.lo) || !std::isfinite(p.hi))
            throw DomainError("interval endpoints must be finite");
        if (p.lo > p.hi)
            throw DomainError("interval endpoints out of order");
    }
    std::erase_if(pieces, [](const Segment& p) { return p.lo == p.hi; });
    std::sort(pieces.begin(), pieces.end(),
              [](const Segment& l, const Segment& r) { return l.lo < r.lo; });
    std::vector<Segment> merged;
    for (const auto& p : pieces) {
        if (!merged.empty() && p.lo <= merged.back().hi)
            merged.back().hi = std::max(merged.back().hi, p.hi);
        else
            merged.push_back(p);
    }
    return merged;
}

}  // namespace

MeasurableSet MeasurableSet::atoms(std::vector<std::size_t> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return MeasurableSet(std::move(indices));
}

MeasurableSet MeasurableSet::segments(std::vector<Segment> pieces) {
    return MeasurableSet(normalize(std::move(pieces)));
}

MeasurableSet MeasurableSet::interval(double lo, double hi) {
    return segments({Segment{lo, hi}});
}

bool MeasurableSet::is_atoms() const noexcept {
    return std::holds_alternative<Atoms>(rep_);
}

bool MeasurableSet::empty() const noexcept {
    return std::visit([](const auto& v) { return v.empty(); }, rep_);
}

std::span<const std::size_t> MeasurableSet::atom_indices() const {
    if (!is_atoms()) throw DomainError("set is not an atom set");
    return std::get<Atoms>(rep_);
}

std::span<const Segment> MeasurableSet::pieces() const {
    if (is_atoms()) throw DomainError("set is not an interval union");
    return std::get<Pieces>(rep_);
}

bool MeasurableSet::contains_atom(std::size_t index) const {
    const auto& a = std::get<Atoms>(rep_);
    return std::binary_search(a.begin(), a.end(), index);
}

bool MeasurableSet::contains_point(double x) const {
    for (const auto& p : std::get<Pieces>(rep_))
        if (p.lo <= x && x <= p.hi) return true;
    return false;
}

double MeasurableSet::size() const {
    if (is_atoms()) return static_cast<double>(std::get<Atoms>(rep_).size());
    double total = 0.0;
    for (const auto& p : std::get<Pieces>(rep_)) total += p.length();
    return total;
}

MeasurableSet MeasurableSet::intersect(const MeasurableSet& other) const {
    if (is_atoms() != other.is_atoms()) throw DomainError("mixing atom and interval sets");
    if (is_atoms()) {
        Atoms out;
        const auto& l = std::get<Atoms>(rep_);
        const auto& r = std::get<Atoms>(other.rep_);
        std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
        return MeasurableSet(std::move(out));
    }
    Pieces out;
    for (const auto& p : std::get<Pieces>(rep_))
        for (const auto& q : std::get<Pieces>(other.rep_)) {
            const double lo = std::max(p.lo, q.lo);
            const double hi = std::min(p.hi, q.hi);
            if (lo < hi) out.push_back({lo, hi});
        }
    return segments(std::move(out));
}

MeasurableSet MeasurableSet::unite(const MeasurableSet& other) const {
    if (is_atoms() != other.is_atoms()) throw DomainError("mixing atom and interval sets");
    if (is_atoms()) {
        Atoms out;
        const auto& l = std::get<Atoms>(rep_);
        const auto& r = std::get<Atoms>(other.rep_);
        std::set_union(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
        return MeasurableSet(std::move(out));
    }
    Pieces all = std::get<Pieces>(rep_);
    const auto& r = std::get<Pieces>(other.rep_);
    all.insert(all.end(), r.begin(), r.end());
    return segments(std::move(all));
}

MeasurableSet MeasurableSet::minus(const MeasurableSet& other) const {
    if (is_atoms() != other.is_atoms()) throw DomainError("mixing atom and interval sets");
    if (is_atoms()) {
        Atoms out;
        const auto& l = std::get<Atoms>(rep_);
        const auto& r = std::get<Atoms>(other.rep_);
        std::set_difference(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(out));
        return MeasurableSet(std::move(out));
    }
    Pieces out;
    for (auto p : std::get<Pieces>(rep_)) {
        double cursor = p.lo;
        for (const auto& q : std::get<Pieces>(other.rep_)) {
            if (q.hi <= cursor || q.lo >= p.hi) continue;
            if (q.lo > cursor) out.push_back({cursor, q.lo});
            cursor = std::max(cursor, q.hi);
        }
        if (cursor < p.hi) out.push_back({cursor, p.hi});
    }
    return segments(std::move(out));
}

bool MeasurableSet::subset_of(const MeasurableSet& other) const {
    return minus(other).empty();
}

std::string to_string(const MeasurableSet& s) {
    std::string out;
    char buf[64];
    if (s.is_atoms()) {
        out = "{";
        bool first = true;
        for (auto i : s.atom_indices()) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
        return out + "}";
    }
    if (s.empty()) return "[]";
    bool first = true;
    for (const auto& p : s.pieces()) {
        if (!first) out += "U";
        std::snprintf(buf, sizeof buf, "[%.17g,%.17g]", p.lo, p.hi);
        out += buf;
        first = false;
    }
    return out;
}

Space Space::finite(std::vector<std::string> labels) {
    std::vector<double> coords(labels.size());
    std::iota(coords.begin(), coords.end(), 0.0);
    return finite(std::move(coords), std::move(labels));
}

Space Space::finite(std::vector<double> coords, std::vector<std::string> labels) {
    if (coords.empty()) throw DomainError("a finite space needs at least one atom");
    if (coords.size() != labels.size()) throw DomainError("atom coordinate/label count mismatch");
    for (std::size_t i = 1; i < coords.size(); ++i)
        if (!(coords[i - 1] < coords[i]))
            throw DomainError("atom coordinates must be strictly increasing");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw DomainError("atom labels must be distinct");
    Space s;
    s.kind_ = Kind::FinitePoints;
    s.a_ = coords.front();
    s.b_ = coords.back();
    s.coords_ = std::move(coords);
    s.labels_ = std::move(labels);
    return s;
}

Space Space::interval(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw DomainError("interval space needs finite bounds a < b");
    Space s;
    s.kind_ = Kind::Interval;
    s.a_ = a;
    s.b_ = b;
    return s;
}

std::optional<std::size_t> Space::find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

std::optional<std::size_t> Space::find_coord(double x) const {
    auto it = std::lower_bound(coords_.begin(), coords_.end(), x);
    if (it == coords_.end() || *it != x) return std::nullopt;
    return static_cast<std::size_t>(it - coords_.begin());
}

MeasurableSet Space::whole() const {
    if (is_finite()) {
        std::vector<std::size_t> all(coords_.size());
        std::iota(all.begin(), all.end(), std::size_t{0});
        return MeasurableSet::atoms(std::move(all));
    }
    return MeasurableSet::interval(a_, b_);
}

bool Space::contains(const MeasurableSet& s) const {
    if (is_finite() != s.is_atoms()) return false;
    if (is_finite()) {
        auto idx = s.atom_indices();
        return idx.empty() || idx.back() < coords_.size();
    }
    for (const auto& p : s.pieces())
        if (p.lo < a_ || p.hi > b_) return false;
    return true;
}

bool Space::operator==(const Space& other) const {
    return kind_ == other.kind_ && a_ == other.a_ && b_ == other.b_ &&
           coords_ == other.coords_ && labels_ == other.labels_;
}

}  // namespace haarent
