#include "haarent/groups.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>

#include "haarent/error.hpp"

namespace haarent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kMaxEnumerationOrder = 720;

double wrap_angle(double v) {
    double r = std::fmod(v, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

double window_slack(const Segment& w) {
    return 1e-12 * std::max({1.0, std::abs(w.lo), std::abs(w.hi)});
}

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

Group Group::finite_group(GroupKind kind, std::string name, std::size_t param, Table table,
                          std::vector<std::string> labels) {
    Group g;
    g.kind_ = kind;
    g.name_ = std::move(name);
    g.param_ = param;
    g.space_ = std::make_shared<const Space>(Space::finite(std::move(labels)));
    g.table_ = std::make_shared<const Table>(std::move(table));
    return g;
}

Group Group::cyclic(std::size_t n) {
    if (n < 1) throw DomainError("cyclic group order must be >= 1");
    if (n > 65535) throw DomainError("cyclic group order too large");
    Table t;
    t.order = n;
    t.product.resize(n * n);
    t.inverse.resize(n);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(std::to_string(a));
        t.inverse[a] = static_cast<std::uint16_t>((n - a) % n);
        for (std::size_t b = 0; b < n; ++b) t.product[a * n + b] = static_cast<std::uint16_t>((a + b) % n);
    }
    return finite_group(GroupKind::Cyclic, "Z" + std::to_string(n), n, std::move(t), std::move(labels));
}

Group Group::dihedral(std::size_t n) {
    if (n < 1) throw DomainError("dihedral group parameter must be >= 1");
    if (n > 360) throw DomainError("dihedral group parameter too large");
    const std::size_t order = 2 * n;
    Table t;
    t.order = order;
    t.product.resize(order * order);
    t.inverse.resize(order);
    std::vector<std::string> labels(order);
    auto idx = [n](std::size_t k, std::size_t f) { return k + n * f; };
    for (std::size_t f1 = 0; f1 < 2; ++f1)
        for (std::size_t k1 = 0; k1 < n; ++k1) {
            labels[idx(k1, f1)] = (f1 ? "s" : "r") + std::to_string(k1);
            for (std::size_t f2 = 0; f2 < 2; ++f2)
                for (std::size_t k2 = 0; k2 < n; ++k2) {
                    // (r^a s^f)(r^b s^g) = r^(a + (-1)^f b) s^(f+g)
                    const std::size_t k = f1 ? (k1 + n - k2) % n : (k1 + k2) % n;
                    t.product[idx(k1, f1) * order + idx(k2, f2)] = static_cast<std::uint16_t>(idx(k, f1 ^ f2));
                }
            t.inverse[idx(k1, f1)] = static_cast<std::uint16_t>(f1 ? idx(k1, 1) : idx((n - k1) % n, 0));
        }
    return finite_group(GroupKind::Dihedral, "D" + std::to_string(n), n, std::move(t), std::move(labels));
}

Group Group::symmetric(std::size_t n) {
    if (n < 1 || n > 6) throw DomainError("symmetric group degree must be in [1, 6]");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<int>, std::size_t> rank;
    for (std::size_t i = 0; i < perms.size(); ++i) rank[perms[i]] = i;

    const std::size_t order = perms.size();
    Table t;
    t.order = order;
    t.product.resize(order * order);
    t.inverse.resize(order);
    std::vector<std::string> labels;
    std::vector<int> tmp(n);
    for (std::size_t a = 0; a < order; ++a) {
        std::string label;
        for (int v : perms[a]) label += static_cast<char>('0' + v);
        labels.push_back(label);
        for (std::size_t b = 0; b < order; ++b) {
            for (std::size_t i = 0; i < n; ++i) tmp[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
            t.product[a * order + b] = static_cast<std::uint16_t>(rank[tmp]);
        }
        for (std::size_t i = 0; i < n; ++i) tmp[static_cast<std::size_t>(perms[a][i])] = static_cast<int>(i);
        t.inverse[a] = static_cast<std::uint16_t>(rank[tmp]);
    }
    return finite_group(GroupKind::Symmetric, "S" + std::to_string(n), n, std::move(t), std::move(labels));
}

Group Group::additive_reals(double lo, double hi) {
    Group g;
    g.kind_ = GroupKind::AdditiveReals;
    g.space_ = std::make_shared<const Space>(Space::interval(lo, hi));
    std::ostringstream name;
    name << "R+add:[" << lo << "," << hi << "]";
    g.name_ = name.str();
    return g;
}

Group Group::multiplicative_reals(double lo, double hi) {
    if (!(lo > 0.0)) throw DomainError("multiplicative window must be strictly positive");
    Group g;
    g.kind_ = GroupKind::MultiplicativePositiveReals;
    g.space_ = std::make_shared<const Space>(Space::interval(lo, hi));
    std::ostringstream name;
    name << "R*mul:[" << lo << "," << hi << "]";
    g.name_ = name.str();
    return g;
}

Group Group::circle() {
    Group g;
    g.kind_ = GroupKind::Circle;
    g.space_ = std::make_shared<const Space>(Space::interval(0.0, kTwoPi));
    g.name_ = "circle";
    return g;
}

std::size_t Group::order() const {
    if (!table_) throw UnsupportedOperationError(name_ + " is not a finite group");
    return table_->order;
}

std::size_t Group::checked_index(const GroupElement& g) const {
    if (!table_) throw DomainError("finite element used with continuous group " + name_);
    if (!g.is_finite() || g.index() >= table_->order)
        throw DomainError("element is not in " + name_);
    return g.index();
}

double Group::checked_value(const GroupElement& g) const {
    if (table_ || g.is_finite()) throw DomainError("real element used with finite group " + name_);
    return g.value();
}

GroupElement Group::identity() const {
    if (table_) return GroupElement::finite(table_->identity);
    switch (kind_) {
        case GroupKind::MultiplicativePositiveReals: return GroupElement::real(1.0);
        default: return GroupElement::real(0.0);
    }
}

GroupElement Group::compose(const GroupElement& a, const GroupElement& b) const {
    if (table_) return GroupElement::finite(table_->mul(checked_index(a), checked_index(b)));
    const double x = checked_value(a);
    const double y = checked_value(b);
    switch (kind_) {
        case GroupKind::MultiplicativePositiveReals: return GroupElement::real(x * y);
        case GroupKind::Circle: return GroupElement::real(wrap_angle(x + y));
        default: return GroupElement::real(x + y);
    }
}

GroupElement Group::inverse(const GroupElement& a) const {
    if (table_) return GroupElement::finite(table_->inverse[checked_index(a)]);
    const double x = checked_value(a);
    switch (kind_) {
        case GroupKind::MultiplicativePositiveReals: return GroupElement::real(1.0 / x);
        case GroupKind::Circle: return GroupElement::real(wrap_angle(-x));
        default: return GroupElement::real(-x);
    }
}

GroupElement Group::element(std::size_t index) const {
    return GroupElement::finite(checked_index(GroupElement::finite(index)));
}

std::vector<GroupElement> Group::elements() const {
    std::vector<GroupElement> out;
    for (std::size_t i = 0; i < order(); ++i) out.push_back(GroupElement::finite(i));
    return out;
}

GroupElement Group::real_element(double value) const {
    if (table_) throw DomainError(name_ + " has no real elements");
    if (!std::isfinite(value)) throw DomainError("group element must be finite");
    switch (kind_) {
        case GroupKind::MultiplicativePositiveReals:
            if (!(value > 0.0)) throw DomainError("multiplicative group elements must be > 0");
            return GroupElement::real(value);
        case GroupKind::Circle: return GroupElement::real(wrap_angle(value));
        default: return GroupElement::real(value);
    }
}

GroupElement Group::dihedral_element(std::size_t rotation, bool flip) const {
    if (kind_ != GroupKind::Dihedral) throw DomainError(name_ + " is not dihedral");
    return GroupElement::finite(rotation % param_ + (flip ? param_ : 0));
}

std::pair<std::size_t, bool> Group::rotation_flip(const GroupElement& g) const {
    if (kind_ != GroupKind::Dihedral) throw DomainError(name_ + " is not dihedral");
    const auto i = checked_index(g);
    return {i % param_, i >= param_};
}

GroupElement Group::permutation_element(const std::vector<int>& word) const {
    if (kind_ != GroupKind::Symmetric) throw DomainError(name_ + " is not symmetric");
    std::string label;
    for (int v : word) {
        if (v < 0 || v > 9) throw DomainError("permutation entry out of range");
        label += static_cast<char>('0' + v);
    }
    auto idx = space_->find_label(label);
    if (!idx) throw DomainError("'" + label + "' is not a permutation of degree " + std::to_string(param_));
    return GroupElement::finite(*idx);
}

std::vector<int> Group::permutation(const GroupElement& g) const {
    if (kind_ != GroupKind::Symmetric) throw DomainError(name_ + " is not symmetric");
    std::vector<int> out;
    for (char c : space_->label(checked_index(g))) out.push_back(c - '0');
    return out;
}

std::string Group::describe(const GroupElement& g) const {
    if (table_) return space_->label(checked_index(g));
    std::ostringstream s;
    s.precision(17);
    s << (kind_ == GroupKind::MultiplicativePositiveReals ? "x" : "+") << checked_value(g);
    return s.str();
}

double Group::act(const GroupElement& g, double x) const {
    if (table_) {
        const auto j = space_->find_coord(x);
        if (!j) throw DomainError("point is not an element of " + name_);
        return static_cast<double>(table_->mul(checked_index(g), *j));
    }
    const double v = checked_value(g);
    switch (kind_) {
        case GroupKind::MultiplicativePositiveReals: return v * x;
        case GroupKind::Circle: return wrap_angle(v + x);
        default: return v + x;
    }
}

Group Group::induced(const std::vector<std::size_t>& elements, std::string name) const {
    if (!table_) throw UnsupportedOperationError("induced groups need a finite parent");
    std::vector<std::size_t> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::ptrdiff_t> local(table_->order, -1);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= table_->order) throw DomainError("subgroup element out of range");
        local[sorted[i]] = static_cast<std::ptrdiff_t>(i);
    }
    const std::size_t k = sorted.size();
    Table t;
    t.order = k;
    t.product.resize(k * k);
    t.inverse.resize(k);
    std::vector<std::string> labels;
    bool has_identity = false;
    for (std::size_t i = 0; i < k; ++i) {
        labels.push_back(space_->label(sorted[i]));
        if (sorted[i] == table_->identity) {
            t.identity = i;
            has_identity = true;
        }
        const auto inv = local[table_->inverse[sorted[i]]];
        if (inv < 0) throw DomainError("subset is not closed under inverses");
        t.inverse[i] = static_cast<std::uint16_t>(inv);
        for (std::size_t j = 0; j < k; ++j) {
            const auto p = local[table_->mul(sorted[i], sorted[j])];
            if (p < 0) throw DomainError("subset is not closed under composition");
            t.product[i * k + j] = static_cast<std::uint16_t>(p);
        }
    }
    if (!has_identity) throw DomainError("subset does not contain the identity");
    return finite_group(GroupKind::Subgroup, std::move(name), k, std::move(t), std::move(labels));
}

Group parse_group(std::string_view d) {
    auto fail = [&](const std::string& why, std::size_t at, std::vector<std::string> expected) -> Group {
        throw ParseError("group descriptor '" + std::string(d) + "': " + why, at, std::move(expected));
    };
    if (d == "circle") return Group::circle();
    auto parse_count = [&](std::size_t from) -> std::size_t {
        if (from >= d.size()) fail("missing order", from, {"integer"});
        std::size_t v = 0;
        for (std::size_t i = from; i < d.size(); ++i) {
            if (d[i] < '0' || d[i] > '9') fail("unexpected character", i, {"digit"});
            v = v * 10 + static_cast<std::size_t>(d[i] - '0');
            if (v > 100000) fail("order too large", i, {});
        }
        return v;
    };
    if (!d.empty() && (d[0] == 'Z' || d[0] == 'D' || d[0] == 'S')) {
        const auto n = parse_count(1);
        try {
            if (d[0] == 'Z') return Group::cyclic(n);
            if (d[0] == 'D') return Group::dihedral(n);
            return Group::symmetric(n);
        } catch (const DomainError& e) {
            fail(e.what(), 1, {});
        }
    }
    const bool add = d.starts_with("R+add:");
    const bool mul = d.starts_with("R*mul:");
    if (!add && !mul) fail("unknown group", 0, {"Z<n>", "D<n>", "S<n>", "R+add:[a,b]", "R*mul:[a,b]", "circle"});
    const std::string rest(d.substr(6));
    if (rest.empty() || rest.front() != '[' || rest.back() != ']') fail("expected window", 6, {"[a,b]"});
    const auto comma = rest.find(',');
    if (comma == std::string::npos) fail("expected ','", 6 + rest.size() - 1, {","});
    const std::string lo_text = rest.substr(1, comma - 1);
    const std::string hi_text = rest.substr(comma + 1, rest.size() - comma - 2);
    auto number = [&](const std::string& text, std::size_t at) {
        char* end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v))
            fail("bad number '" + text + "'", at, {"number"});
        return v;
    };
    const double lo = number(lo_text, 7);
    const double hi = number(hi_text, 7 + comma);
    try {
        return add ? Group::additive_reals(lo, hi) : Group::multiplicative_reals(lo, hi);
    } catch (const DomainError& e) {
        fail(e.what(), 6, {});
    }
    return Group::circle();  // unreachable
}

Measure HaarMeasure::measure() const {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("Haar scale must be > 0");
    const std::string label = "haar(" + group.name() + ")";
    if (group.kind() == GroupKind::MultiplicativePositiveReals) {
        const double c = scale;
        Density d = Density::function([c](double x) { return c / x; }, {}, c / group.window().lo);
        return Measure(group.space(), std::move(d), label);
    }
    return Measure(group.space(), Density::constant_value(scale), label);
}

HaarMeasure haar(const Group& g, double scale) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("Haar scale must be > 0");
    return HaarMeasure{g, scale};
}

Measure haar_log_chart(const Group& g, double scale) {
    if (g.kind() != GroupKind::MultiplicativePositiveReals)
        throw UnsupportedOperationError("log chart is defined for the multiplicative group only");
    if (!(scale > 0.0)) throw DomainError("Haar scale must be > 0");
    const auto w = g.window();
    return Measure(Space::interval(std::log(w.lo), std::log(w.hi)), Density::constant_value(scale),
                   "haar(" + g.name() + ", log chart)");
}

MeasurableSet translate_set(const Group& group, const GroupElement& g, const MeasurableSet& s) {
    if (!group.space().contains(s)) throw DomainError("set " + to_string(s) + " is outside " + group.name());
    if (group.is_finite()) {
        std::vector<std::size_t> out;
        for (auto i : s.atom_indices())
            out.push_back(static_cast<std::size_t>(group.act(g, static_cast<double>(i))));
        return MeasurableSet::atoms(std::move(out));
    }
    const auto w = group.window();
    std::vector<Segment> out;
    if (group.kind() == GroupKind::Circle) {
        const double theta = g.value();
        for (const auto& p : s.pieces()) {
            double a = p.lo + theta;
            double b = p.hi + theta;
            if (a >= kTwoPi) {
                a -= kTwoPi;
                b -= kTwoPi;
            }
            if (b > kTwoPi) {
                out.push_back({a, kTwoPi});
                out.push_back({0.0, std::min(b - kTwoPi, kTwoPi)});
            } else {
                out.push_back({a, b});
            }
        }
        return MeasurableSet::segments(std::move(out));
    }
    const double eps = window_slack(w);
    for (const auto& p : s.pieces()) {
        double a = group.act(g, p.lo);
        double b = group.act(g, p.hi);
        if (a < w.lo - eps || b > w.hi + eps) {
            std::ostringstream msg;
            msg << "translate by " << group.describe(g) << " moves [" << p.lo << "," << p.hi
                << "] outside the window [" << w.lo << "," << w.hi << "]";
            throw WindowOverflowError(msg.str());
        }
        out.push_back({std::clamp(a, w.lo, w.hi), std::clamp(b, w.lo, w.hi)});
    }
    return MeasurableSet::segments(std::move(out));
}

Measure translate_measure(const Group& group, const GroupElement& g, const Measure& m) {
    if (!(m.space() == group.space())) throw DomainError("measure does not live on " + group.name());
    const auto support = translate_set(group, g, m.support());
    const auto inv = group.inverse(g);
    Density d;
    std::vector<double> bps;
    const auto& old = m.density();
    double jacobian = 1.0;
    if (group.is_finite()) {
        d.eval = [group, inv, m](double x) { return m.density_at(group.act(inv, x)); };
    } else if (group.kind() == GroupKind::MultiplicativePositiveReals) {
        jacobian = 1.0 / g.value();
        d.eval = [inv, m, jacobian](double x) { return m.density_at(x * inv.value()) * jacobian; };
    } else if (group.kind() == GroupKind::Circle) {
        d.eval = [inv, m](double x) { return m.density_at(wrap_angle(x + inv.value())); };
        bps.push_back(g.value());
    } else {
        d.eval = [inv, m](double x) { return m.density_at(x + inv.value()); };
    }
    if (!group.is_finite()) {
        const auto w = group.window();
        for (double b : old.breakpoints) {
            const double image = group.act(g, b);
            if (w.lo <= image && image <= w.hi) bps.push_back(image);
        }
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    d.breakpoints = std::move(bps);
    if (old.sup) d.sup = *old.sup * jacobian;
    if (old.constant) d.constant = *old.constant * jacobian;
    Measure out(group.space(), std::move(d), m.label() + "@" + group.describe(g));
    return out.with_support(support);
}

std::vector<Subgroup> subgroups(const Group& g, Execution exec) {
    if (!g.is_finite()) throw UnsupportedOperationError("subgroup enumeration needs a finite group");
    const std::size_t n = g.order();
    if (n > kMaxEnumerationOrder) throw UnsupportedOperationError("subgroup enumeration is capped at order 720");

    struct Found {
        Bits bits;
        std::vector<std::size_t> elements;  // discovery order
    };
    auto mul = [&](std::size_t a, std::size_t b) {
        return g.compose(GroupElement::finite(a), GroupElement::finite(b)).index();
    };
    const std::size_t e = g.identity().index();

    // <H, x>: H is closed, so the join is a union of left cosets kH and only
    // products with x can leave the current union.
    auto join = [&](const Found& h, std::size_t x) {
        Found k{h.bits, h.elements};
        for (std::size_t pos = 0; pos < k.elements.size(); ++pos) {
            const auto p = mul(k.elements[pos], x);
            if (test_bit(k.bits, p)) continue;
            for (auto hh : h.elements) {
                const auto q = mul(p, hh);
                set_bit(k.bits, q);
                k.elements.push_back(q);
            }
        }
        return k;
    };

    std::map<Bits, std::size_t> index;
    std::vector<Found> found;
    Found trivial{make_bits(n), {e}};
    set_bit(trivial.bits, e);
    index.emplace(trivial.bits, 0);
    found.push_back(trivial);

    // Cyclic subgroups first; one generator per cyclic subgroup suffices.
    std::vector<std::size_t> generators;
    for (std::size_t x = 0; x < n; ++x) {
        auto c = join(trivial, x);
        if (index.emplace(c.bits, found.size()).second) {
            found.push_back(std::move(c));
            generators.push_back(x);
        }
    }
    // Every subgroup is reached by successively joining cyclic subgroups.
    for (std::size_t i = 0; i < found.size(); ++i) {
        const Found h = found[i];
        auto joins = kernels::map_indices(
            generators.size(),
            [&](std::size_t j) {
                const auto x = generators[j];
                if (test_bit(h.bits, x)) return Found{};
                return join(h, x);
            },
            exec);
        for (auto& k : joins) {
            if (k.elements.empty()) continue;
            if (index.emplace(k.bits, found.size()).second) found.push_back(std::move(k));
        }
    }

    std::vector<std::vector<std::size_t>> sets;
    for (auto& f : found) {
        std::sort(f.elements.begin(), f.elements.end());
        sets.push_back(std::move(f.elements));
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<Subgroup> out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto induced = g.induced(sets[i], g.name() + "/H" + std::to_string(i) + "(order " +
                                              std::to_string(sets[i].size()) + ")");
        out.push_back(Subgroup{std::move(sets[i]), std::move(induced)});
    }
    return out;
}

std::vector<GroupElement> sample_translations(const Group& group, const MeasurableSet& a,
                                              std::size_t count) {
    if (group.is_finite()) return group.elements();
    std::vector<GroupElement> out;
    if (count == 0) return out;
    auto van_der_corput = [](std::size_t k) {
        double v = 0.0;
        double base = 0.5;
        while (k) {
            if (k & 1u) v += base;
            k >>= 1;
            base *= 0.5;
        }
        return v;
    };
    if (group.kind() == GroupKind::Circle) {
        for (std::size_t k = 0; k < count; ++k) out.push_back(group.real_element(kTwoPi * van_der_corput(k)));
        return out;
    }
    if (a.empty()) return out;
    const auto w = group.window();
    const double lo = a.pieces().front().lo;
    const double hi = a.pieces().back().hi;
    if (group.kind() == GroupKind::MultiplicativePositiveReals) {
        const double gmin = std::log(w.lo / lo);
        const double gmax = std::log(w.hi / hi);
        if (gmax < gmin) return out;
        for (std::size_t k = 0; k < count; ++k)
            out.push_back(group.real_element(std::exp(gmin + (gmax - gmin) * van_der_corput(k))));
        return out;
    }
    const double gmin = w.lo - lo;
    const double gmax = w.hi - hi;
    if (gmax < gmin) return out;
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(group.real_element(gmin + (gmax - gmin) * van_der_corput(k)));
    return out;
}

VerificationReport check_invariance(const Measure& m, const Group& group,
                                    const std::vector<MeasurableSet>& sets,
                                    const std::vector<GroupElement>& samples, double tol,
                                    const Integrator& cfg) {
    std::size_t checked = 0;
    std::size_t inconclusive = 0;
    double worst = 0.0;
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    bool first = true;
    for (const auto& a : sets) {
        const double base = mass(m, a, cfg);
        for (const auto& g : samples) {
            MeasurableSet ga;
            try {
                ga = translate_set(group, g, a);
            } catch (const WindowOverflowError&) {
                ++inconclusive;
                continue;
            }
            const double moved = mass(m, ga, cfg);
            const double diff = std::abs(moved - base);
            ++checked;
            if (first || diff > worst) {
                worst = diff;
                worst_lhs = moved;
                worst_rhs = base;
                first = false;
            }
        }
    }
    std::ostringstream notes;
    notes << "group=" << group.name() << " checked=" << checked << " inconclusive=" << inconclusive;
    if (!group.is_finite()) notes << " scope=sampled";
    auto report = make_report("haar-invariance", Relation::Equal, worst_lhs, worst_rhs, tol, 0, 0, notes.str());
    report.skipped = checked == 0;
    return report;
}

}  // namespace haarent
