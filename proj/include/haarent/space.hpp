#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace haarent {

struct Segment {
    double lo = 0.0;
    double hi = 0.0;

    double length() const noexcept { return hi - lo; }
    bool operator==(const Segment&) const = default;
};

// A measurable set: either a subset of atoms of a finite space (by atom
// index) or a finite union of disjoint closed intervals. Both forms are kept
// normalized: atom indices sorted and unique, segments sorted with touching
// or overlapping pieces merged and zero-length pieces dropped.
class MeasurableSet {
public:
    MeasurableSet() = default;

    static MeasurableSet atoms(std::vector<std::size_t> indices);
    static MeasurableSet segments(std::vector<Segment> pieces);
    static MeasurableSet interval(double lo, double hi);

    bool is_atoms() const noexcept;
    bool empty() const noexcept;

    std::span<const std::size_t> atom_indices() const;
    std::span<const Segment> pieces() const;

    bool contains_atom(std::size_t index) const;
    bool contains_point(double x) const;

    // Total Lebesgue length (segments) or cardinality (atoms).
    double size() const;

    MeasurableSet intersect(const MeasurableSet& other) const;
    MeasurableSet unite(const MeasurableSet& other) const;
    // Closure of the set difference for segments.
    MeasurableSet minus(const MeasurableSet& other) const;
    bool subset_of(const MeasurableSet& other) const;

    bool operator==(const MeasurableSet&) const = default;

private:
    using Atoms = std::vector<std::size_t>;
    using Pieces = std::vector<Segment>;
    explicit MeasurableSet(std::variant<Atoms, Pieces> rep) : rep_(std::move(rep)) {}

    std::variant<Atoms, Pieces> rep_{Pieces{}};
};

std::string to_string(const MeasurableSet& s);

// Ambient carrier: a finite list of labelled atoms with distinct numeric
// coordinates, or a bounded interval [a, b].
class Space {
public:
    enum class Kind { FinitePoints, Interval };

    // Atoms get coordinates 0, 1, ..., n-1.
    static Space finite(std::vector<std::string> labels);
    static Space finite(std::vector<double> coords, std::vector<std::string> labels);
    static Space interval(double a, double b);

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::FinitePoints; }

    std::size_t atom_count() const noexcept { return coords_.size(); }
    double coord(std::size_t i) const { return coords_.at(i); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::span<const double> coords() const noexcept { return coords_; }
    std::optional<std::size_t> find_label(std::string_view label) const;
    std::optional<std::size_t> find_coord(double x) const;

    double lower() const noexcept { return a_; }
    double upper() const noexcept { return b_; }

    MeasurableSet whole() const;
    bool contains(const MeasurableSet& s) const;

    bool operator==(const Space& other) const;

private:
    Space() = default;

    Kind kind_ = Kind::Interval;
    double a_ = 0.0;
    double b_ = 1.0;
    std::vector<double> coords_;
    std::vector<std::string> labels_;
};

}  // namespace haarent
