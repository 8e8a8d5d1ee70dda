#ifndef STABLEREV_SPACE_HPP
#define STABLEREV_SPACE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>
#include <bit>

#include "stablerev/errors.hpp"

namespace stablerev {

/// Mask of atoms; bit i stands for the i-th atom of the space.
using EventMask = std::uint32_t;

/// A finite sample space: an ordered list of distinct atom labels.
/// Immutable; copies share state. Two spaces are interchangeable when their
/// atom lists coincide, so re-parsing the same document gives a usable space.
class Space {
public:
    static constexpr int kMaxAtoms = 16;

    static Space create(std::vector<std::string> atoms) {
        if (atoms.empty())
            throw SchemaError("empty space");
        if (static_cast<int>(atoms.size()) > kMaxAtoms)
            throw SchemaError("space too large (max " + std::to_string(kMaxAtoms) + " atoms)");
        auto index = std::make_shared<std::unordered_map<std::string, int>>();
        for (size_t i = 0; i < atoms.size(); ++i) {
            if (atoms[i].empty())
                throw SchemaError("empty atom label");
            if (!index->emplace(atoms[i], static_cast<int>(i)).second)
                throw SchemaError("duplicate atom \"" + atoms[i] + "\"");
        }
        return Space(std::make_shared<std::vector<std::string>>(std::move(atoms)), std::move(index));
    }

    int size() const { return static_cast<int>(atoms_->size()); }
    const std::string& atom(int i) const { return (*atoms_)[i]; }
    const std::vector<std::string>& atoms() const { return *atoms_; }

    int index_of(const std::string& label) const {
        auto it = index_->find(label);
        if (it == index_->end())
            throw SchemaError("unknown atom \"" + label + "\"");
        return it->second;
    }

    bool has_atom(const std::string& label) const { return index_->count(label) != 0; }

    EventMask full_mask() const { return static_cast<EventMask>((1u << size()) - 1u); }
    std::uint64_t event_count() const { return std::uint64_t(1) << size(); }

    bool operator==(const Space& other) const {
        return atoms_ == other.atoms_ || *atoms_ == *other.atoms_;
    }
    bool operator!=(const Space& other) const { return !(*this == other); }

private:
    Space(std::shared_ptr<const std::vector<std::string>> atoms,
          std::shared_ptr<const std::unordered_map<std::string, int>> index)
        : atoms_(std::move(atoms)), index_(std::move(index)) {}

    std::shared_ptr<const std::vector<std::string>> atoms_;
    std::shared_ptr<const std::unordered_map<std::string, int>> index_;
};

/// A subset of a space's atoms. Set operations are closed within the space;
/// combining events from different spaces is a hard error.
class Event {
public:
    Event(Space space, EventMask mask) : space_(std::move(space)), mask_(mask) {
        if (mask_ & ~space_.full_mask())
            throw DomainError("event mask out of range for its space");
    }

    static Event empty(Space space) { return Event(std::move(space), 0); }
    static Event full(Space space) {
        EventMask m = space.full_mask();
        return Event(std::move(space), m);
    }
    static Event singleton(Space space, int atom) { return Event(std::move(space), EventMask(1u) << atom); }
    static Event of_atoms(const Space& space, const std::vector<std::string>& labels) {
        EventMask m = 0;
        for (const auto& l : labels)
            m |= EventMask(1u) << space.index_of(l);
        return Event(space, m);
    }

    const Space& space() const { return space_; }
    EventMask mask() const { return mask_; }
    bool is_empty() const { return mask_ == 0; }
    int size() const { return std::popcount(mask_); }
    bool contains(int atom) const { return (mask_ >> atom) & 1u; }

    Event complement() const { return Event(space_, space_.full_mask() & ~mask_); }
    Event unite(const Event& other) const { return Event(space_, mask_ | same(other)); }
    Event intersect(const Event& other) const { return Event(space_, mask_ & same(other)); }
    Event minus(const Event& other) const { return Event(space_, mask_ & ~same(other)); }
    bool subset_of(const Event& other) const { return (mask_ & ~same(other)) == 0; }
    bool intersects(const Event& other) const { return (mask_ & same(other)) != 0; }

    std::vector<std::string> atom_labels() const {
        std::vector<std::string> out;
        for (int i = 0; i < space_.size(); ++i)
            if (contains(i))
                out.push_back(space_.atom(i));
        return out;
    }

    bool operator==(const Event& other) const { return space_ == other.space_ && mask_ == other.mask_; }
    bool operator!=(const Event& other) const { return !(*this == other); }

private:
    EventMask same(const Event& other) const {
        if (space_ != other.space_)
            throw DomainError("events belong to different spaces");
        return other.mask_;
    }

    Space space_;
    EventMask mask_;
};

} // namespace stablerev

#endif
