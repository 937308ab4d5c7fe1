#ifndef LCLWB_GROUP_HPP
#define LCLWB_GROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lclwb/element.hpp"

namespace lclwb {

enum class GroupFamily { free_abelian, free_group, finite, direct_product };

// Decidable arithmetic for one of the supported group families. Oracles are
// immutable and cheap to copy; all operations are pure.
class GroupOracle {
public:
    static GroupOracle free_abelian(int dim);
    static GroupOracle free_group(int rank);
    // The table must be a genuine group table (square, closed, identity,
    // inverses, associative); construction throws otherwise.
    static GroupOracle finite_group(std::vector<std::vector<int>> table);
    static GroupOracle cyclic(int order);
    static GroupOracle direct_product(GroupOracle left, GroupOracle right);

    GroupFamily family() const;
    int abelian_dim() const;
    int free_rank() const;
    int finite_order() const;
    int finite_identity() const;
    const GroupOracle& left_factor() const;
    const GroupOracle& right_factor() const;

    GroupElement identity() const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const;

    // Throws std::invalid_argument if the encoding is not a valid canonical
    // element of this group.
    void check_element(const GroupElement& a) const;

    // Standard generating set: coordinate vectors for free abelian groups,
    // the free generators for free groups, every non-identity element for
    // finite groups, and images of the factors' generators for products.
    std::vector<GroupElement> standard_generators() const;

    // Element constructors per family.
    GroupElement from_coords(const std::vector<std::int64_t>& coords) const;
    GroupElement from_word(const std::vector<int>& letters) const;  // reduces
    GroupElement from_index(int index) const;
    GroupElement pair(const GroupElement& left, const GroupElement& right) const;
    std::pair<GroupElement, GroupElement> split(const GroupElement& a) const;

    std::string name() const;
    std::string describe(const GroupElement& a) const;

private:
    struct Impl;
    explicit GroupOracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

// A finite, canonically sorted, duplicate-free set of group elements with
// binary-search lookup. Used for windows, pattern domains and graph supports.
class ElementSet {
public:
    ElementSet() = default;
    static ElementSet of(std::vector<GroupElement> elems);  // sorts + dedups

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const GroupElement& operator[](std::size_t i) const { return elems_[i]; }
    bool contains(const GroupElement& e) const;
    std::optional<std::size_t> index_of(const GroupElement& e) const;
    bool is_subset_of(const ElementSet& other) const;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<GroupElement>& elements() const { return elems_; }

    bool operator==(const ElementSet&) const = default;

private:
    std::vector<GroupElement> elems_;
};

// A finite symmetric generating-style set: contains the identity and is
// closed under inversion.
class GenSet {
public:
    GenSet() = default;

    const ElementSet& elements() const { return set_; }
    std::size_t size() const { return set_.size(); }
    const GroupElement& operator[](std::size_t i) const { return set_[i]; }
    bool contains(const GroupElement& e) const { return set_.contains(e); }
    auto begin() const { return set_.begin(); }
    auto end() const { return set_.end(); }

    bool operator==(const GenSet&) const = default;

private:
    friend GenSet make_gen_set(const GroupOracle&, const std::vector<GroupElement>&);
    explicit GenSet(ElementSet set) : set_(std::move(set)) {}
    ElementSet set_;
};

// Smallest GenSet containing elems: adds the identity and all inverses.
GenSet make_gen_set(const GroupOracle& oracle, const std::vector<GroupElement>& elems);

// Generating set of the subgroup generated by sub_generators, as a GenSet
// over the ambient group. All window/coloring operations accept it wherever a
// GenSet is accepted, which is how restricted actions are exercised at window
// scale.
GenSet subgroup_gen_set(const GroupOracle& oracle, const std::vector<GroupElement>& sub_generators);

inline constexpr std::size_t default_set_power_limit = 1'000'000;

// S^k = all k-fold products of elements of S (S^0 = {identity}); throws
// limit_error when the result would exceed `limit` elements.
ElementSet set_power(const GroupOracle& oracle, const GenSet& s, int k,
                     std::size_t limit = default_set_power_limit);

// Ball of the given radius with respect to the standard generators.
ElementSet ball_window(const GroupOracle& oracle, int radius,
                       std::size_t limit = default_set_power_limit);

// Axis-aligned box window for free abelian groups (inclusive bounds).
ElementSet box_window(const GroupOracle& oracle, const std::vector<std::int64_t>& lo,
                      const std::vector<std::int64_t>& hi,
                      std::size_t limit = default_set_power_limit);

using WindowPtr = std::shared_ptr<const ElementSet>;

inline WindowPtr share(ElementSet w) { return std::make_shared<const ElementSet>(std::move(w)); }

}  // namespace lclwb

#endif
