#ifndef STABLEREV_SELECTION_HPP
#define STABLEREV_SELECTION_HPP

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "stablerev/space.hpp"

namespace stablerev {

/// A selection function: a mapping from events to events, stored as a table
/// over all 2^n event masks. A table may be sparse only when built in sparse
/// mode; looking up a missing entry is then an error.
class SelectionFunction {
public:
    static constexpr EventMask kMissing = std::numeric_limits<EventMask>::max();

    explicit SelectionFunction(Space space, bool complete = true)
        : space_(std::move(space)),
          table_(std::size_t(1) << space_.size(), kMissing),
          complete_(complete) {}

    static SelectionFunction from_table(Space space, std::vector<EventMask> table) {
        SelectionFunction sf(std::move(space));
        if (table.size() != sf.table_.size())
            throw SchemaError("selection table has wrong size");
        sf.table_ = std::move(table);
        return sf;
    }

    const Space& space() const { return space_; }
    bool complete() const { return complete_; }

    void set(const Event& in, const Event& out) {
        check_space(in);
        check_space(out);
        if (table_[in.mask()] != kMissing)
            throw SchemaError("duplicate selection entry for an event");
        table_[in.mask()] = out.mask();
    }

    bool defined(EventMask in) const { return table_[in] != kMissing; }

    EventMask get_mask(EventMask in) const {
        EventMask out = table_[in];
        if (out == kMissing)
            throw DomainError("selection table is incomplete at a queried event");
        return out;
    }

    Event get(const Event& in) const {
        check_space(in);
        return Event(space_, get_mask(in.mask()));
    }

    /// Every event, including the empty one, must have an entry.
    bool is_total() const {
        for (EventMask v : table_)
            if (v == kMissing)
                return false;
        return true;
    }

    const std::vector<EventMask>& table() const { return table_; }

    bool operator==(const SelectionFunction& other) const {
        return space_ == other.space_ && table_ == other.table_;
    }
    bool operator!=(const SelectionFunction& other) const { return !(*this == other); }

private:
    void check_space(const Event& e) const {
        if (e.space() != space_)
            throw DomainError("event belongs to a different space");
    }

    Space space_;
    std::vector<EventMask> table_;
    bool complete_;
};

} // namespace stablerev

#endif
