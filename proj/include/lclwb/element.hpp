#ifndef LCLWB_ELEMENT_HPP
#define LCLWB_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace lclwb {

// A group element in the canonical encoding of its family:
//
//   free abelian (dim d)   d coordinates
//   free group             [word length, letters...] where letter +g / -g is
//                          the g-th generator / its inverse (1-based)
//   finite group           [index into the multiplication table]
//   direct product         [length of left encoding, left..., right...]
//
// The encoding is chosen so that plain lexicographic comparison of the raw
// data is the canonical order used everywhere for deterministic iteration:
// coordinate order for free abelian groups, shortlex for free groups, table
// index for finite groups, pairwise for products. Equality of encodings is
// equality of elements.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(std::vector<std::int64_t> data) : data_(std::move(data)) {}

    const std::vector<std::int64_t>& data() const { return data_; }

    bool operator==(const GroupElement&) const = default;
    auto operator<=>(const GroupElement&) const = default;

private:
    std::vector<std::int64_t> data_;
};

}  // namespace lclwb

#endif
