#ifndef MOOLAB_CORE_OBSERVER_HPP
#define MOOLAB_CORE_OBSERVER_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "moolab/core/solution.hpp"

namespace moo {

class Problem;

/// Well-known payload keys.
namespace key {
inline constexpr const char* evaluations = "EVALUATIONS";
inline constexpr const char* solutions = "SOLUTIONS";
inline constexpr const char* counter = "COUNTER";
inline constexpr const char* problem = "PROBLEM";
inline constexpr const char* epoch = "EPOCH";
inline constexpr const char* time = "TIME";
} // namespace key

using EventValue =
    std::variant<std::int64_t, double, std::string, std::vector<FloatSolution>, const Problem*>;

/// Notification payload: a string-keyed map. Algorithms publish at least
/// EVALUATIONS and SOLUTIONS; time sources publish COUNTER.
struct ObservableEvent {
    std::map<std::string, EventValue> payload;

    template <typename T>
    std::optional<T> get(const std::string& k) const {
        auto it = payload.find(k);
        if (it == payload.end()) return std::nullopt;
        if (const T* v = std::get_if<T>(&it->second)) return *v;
        return std::nullopt;
    }
};

class Observer {
public:
    virtual ~Observer() = default;
    virtual void update(const ObservableEvent& event) = 0;
};

/// Observer registry with exactly-once, registration-order delivery.
/// A throwing observer is isolated (logged to stderr) so it cannot abort the
/// run. Registration may happen from a different thread than notification.
class Observable {
public:
    void register_observer(Observer* observer);
    void deregister_observer(Observer* observer);
    void notify(const ObservableEvent& event);
    std::size_t observer_count() const;

private:
    mutable std::mutex mutex_;
    std::vector<Observer*> observers_;
};

} // namespace moo

#endif
