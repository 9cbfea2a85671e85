#ifndef PLANNER_SEARCH_STATE_ID_H
#define PLANNER_SEARCH_STATE_ID_H

#include <compare>
#include <cstddef>
#include <functional>

namespace search {
class StateId {
    int value;
public:
    static const StateId no_state;

    explicit constexpr StateId(int value) : value(value) {}

    constexpr int get_value() const {
        return value;
    }

    friend constexpr auto operator<=>(StateId, StateId) = default;
};

inline constexpr StateId StateId::no_state{-1};
}

template<>
struct std::hash<search::StateId> {
    std::size_t operator()(search::StateId id) const noexcept {
        return std::hash<int>()(id.get_value());
    }
};

#endif
