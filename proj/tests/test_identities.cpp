#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mlcp/identities.hpp"

TEST_CASE("every suite passes and is named once") {
    const auto checks = mlcp::identities::run_all();
    std::set<std::string> names;
    for (const auto& c : checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.passed);
        CHECK(names.insert(c.name).second);
    }
    CHECK(checks.size() == 14);
}

TEST_CASE("numeric suite deviations stay far inside their limits") {
    for (const auto& c : mlcp::identities::numeric_suite()) {
        CAPTURE(c.name);
        CHECK(c.worst_deviation < 1e-10);
    }
}
