#include "moolab/core/observer.hpp"

#include <algorithm>
#include <exception>
#include <iostream>

namespace moo {

void Observable::register_observer(Observer* observer) {
    std::lock_guard lock(mutex_);
    if (observer && std::find(observers_.begin(), observers_.end(), observer) == observers_.end())
        observers_.push_back(observer);
}

void Observable::deregister_observer(Observer* observer) {
    std::lock_guard lock(mutex_);
    observers_.erase(std::remove(observers_.begin(), observers_.end(), observer),
                     observers_.end());
}

std::size_t Observable::observer_count() const {
    std::lock_guard lock(mutex_);
    return observers_.size();
}

void Observable::notify(const ObservableEvent& event) {
    std::vector<Observer*> snapshot;
    {
        std::lock_guard lock(mutex_);
        snapshot = observers_;
    }
    for (Observer* obs : snapshot) {
        try {
            obs->update(event);
        } catch (const std::exception& e) {
            std::cerr << "[moolab] observer failed (ignored): " << e.what() << '\n';
        } catch (...) {
            std::cerr << "[moolab] observer failed (ignored)\n";
        }
    }
}

} // namespace moo
