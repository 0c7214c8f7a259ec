#include <doctest.h>

#include "property_suite.hpp"

// Light pass over every randomized property; the acceptance suite runs the
// full >= 1000-case sweep.
TEST_CASE("randomized algebraic properties") {
    for (const auto& property : property_suite::all_properties()) {
        CAPTURE(property.name);
        const std::string failure = property.check(200, 0x2001);
        CHECK_MESSAGE(failure.empty(), property.name, ": ", failure);
    }
}
