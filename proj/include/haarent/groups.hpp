#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "haarent/measure.hpp"
#include "haarent/report.hpp"

namespace haarent {

enum class GroupKind {
    Cyclic,
    Dihedral,
    Symmetric,
    AdditiveReals,
    MultiplicativePositiveReals,
    Circle,
    Subgroup,  // induced group of a finite subgroup
};

// Finite elements are indices into the group's element list (which is also
// the atom order of its carrier space). Continuous elements are a real
// offset, a positive factor, or an angle in [0, 2pi).
class GroupElement {
public:
    static GroupElement finite(std::size_t index) { return GroupElement(index); }
    static GroupElement real(double value) { return GroupElement(value); }

    bool is_finite() const noexcept { return std::holds_alternative<std::size_t>(rep_); }
    std::size_t index() const { return std::get<std::size_t>(rep_); }
    double value() const { return std::get<double>(rep_); }

    bool operator==(const GroupElement&) const = default;

private:
    explicit GroupElement(std::size_t i) : rep_(i) {}
    explicit GroupElement(double v) : rep_(v) {}
    std::variant<std::size_t, double> rep_;
};

class Group {
public:
    static Group cyclic(std::size_t n);
    // Symmetries of the n-gon, order 2n. Element r^k s^f has index k + n*f.
    static Group dihedral(std::size_t n);
    // Permutations of {0..n-1} in lexicographic order, n <= 6.
    static Group symmetric(std::size_t n);
    // (R, +) restricted to the window [lo, hi].
    static Group additive_reals(double lo, double hi);
    // (R+, x) restricted to the window [lo, hi], 0 < lo.
    static Group multiplicative_reals(double lo, double hi);
    // Angles mod 2pi on the carrier [0, 2pi].
    static Group circle();

    GroupKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    bool is_finite() const noexcept { return table_ != nullptr; }
    std::size_t order() const;
    const Space& space() const noexcept { return *space_; }
    Segment window() const { return {space_->lower(), space_->upper()}; }

    GroupElement identity() const;
    GroupElement compose(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement element(std::size_t index) const;
    std::vector<GroupElement> elements() const;
    // Continuous kinds; the value is validated and canonicalized.
    GroupElement real_element(double value) const;
    GroupElement dihedral_element(std::size_t rotation, bool flip) const;
    GroupElement permutation_element(const std::vector<int>& word) const;
    std::pair<std::size_t, bool> rotation_flip(const GroupElement& g) const;
    std::vector<int> permutation(const GroupElement& g) const;
    std::string describe(const GroupElement& g) const;

    // Left action g.x on a carrier coordinate (finite: element index).
    double act(const GroupElement& g, double x) const;

    // Induced group on a subset of a finite group's elements (must be closed).
    Group induced(const std::vector<std::size_t>& elements, std::string name) const;

private:
    struct Table {
        std::size_t order = 0;
        std::size_t identity = 0;
        std::vector<std::uint16_t> product;  // product[a * order + b] = a*b
        std::vector<std::uint16_t> inverse;
        std::uint16_t mul(std::size_t a, std::size_t b) const { return product[a * order + b]; }
    };

    Group() = default;
    static Group finite_group(GroupKind kind, std::string name, std::size_t param, Table table,
                              std::vector<std::string> labels);
    std::size_t checked_index(const GroupElement& g) const;
    double checked_value(const GroupElement& g) const;

    GroupKind kind_ = GroupKind::Cyclic;
    std::string name_;
    std::size_t param_ = 0;
    std::shared_ptr<const Table> table_;
    std::shared_ptr<const Space> space_;
};

// Descriptors: "Z6", "D4", "S4", "R+add:[0,10]", "R*mul:[0.1,100]", "circle".
Group parse_group(std::string_view descriptor);

struct HaarMeasure {
    Group group;
    double scale = 1.0;

    // Counting (finite), Lebesgue (additive, circle) or scale/x
    // (multiplicative) on the group's carrier, times scale.
    Measure measure() const;
};

HaarMeasure haar(const Group& g, double scale = 1.0);

// Multiplicative group in log coordinates: Lebesgue measure (times scale) on
// [log lo, log hi]. Pushforward of the Haar measure under log.
Measure haar_log_chart(const Group& g, double scale = 1.0);

// Image of s under the left action of g. Continuous translates that leave
// the window raise WindowOverflowError; the circle wraps.
MeasurableSet translate_set(const Group& group, const GroupElement& g, const MeasurableSet& s);

// Pushforward of m under the action of g (with the Jacobian of g^-1).
Measure translate_measure(const Group& group, const GroupElement& g, const Measure& m);

struct Subgroup {
    std::vector<std::size_t> elements;  // sorted indices into the parent group
    Group induced;

    MeasurableSet as_set() const { return MeasurableSet::atoms(elements); }
};

// Every subgroup of a finite group of order <= 720, sorted by order and then
// lexicographically by elements. Includes {e} and the group itself.
std::vector<Subgroup> subgroups(const Group& g, Execution exec = Execution::Parallel);

// Deterministic translations for sampled checks: every element of a finite
// group; otherwise `count` van der Corput points over the range of g for
// which gA stays inside the window (empty if no such g exists).
std::vector<GroupElement> sample_translations(const Group& group, const MeasurableSet& a,
                                              std::size_t count = 64);

// Passes iff |m(gA) - m(A)| <= tol for every sampled g and A. Translates that
// leave the window are counted as inconclusive and do not fail the check.
VerificationReport check_invariance(const Measure& m, const Group& group,
                                    const std::vector<MeasurableSet>& sets,
                                    const std::vector<GroupElement>& samples, double tol,
                                    const Integrator& cfg = {});

}  // namespace haarent
